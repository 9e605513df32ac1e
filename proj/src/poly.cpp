#include "mordell/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mordell/error.hpp"

namespace mordell {

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Int ZPoly::eval(const Int& x) const {
  Int r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Rat ZPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + Rat(c[i]);
  return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return ZPoly(std::move(r));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.zero() || b.zero()) return ZPoly();
  std::vector<Int> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return ZPoly(std::move(r));
}

ZPoly operator*(const Int& k, const ZPoly& a) {
  std::vector<Int> r(a.c);
  for (auto& v : r) v *= k;
  return ZPoly(std::move(r));
}

ZPoly monomial(const Int& k, unsigned deg) {
  std::vector<Int> r(deg + 1);
  r[deg] = k;
  return ZPoly(std::move(r));
}

ZPoly div_exact(const ZPoly& a, const Int& k) {
  std::vector<Int> r(a.c);
  for (auto& v : r) {
    if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
      throw std::logic_error("inexact scalar division of polynomial");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  }
  return ZPoly(std::move(r));
}

bool div_exact(const ZPoly& a, const ZPoly& b, ZPoly* q) {
  if (b.zero()) return false;
  std::vector<Int> rem(a.c);
  int db = b.degree();
  int da = a.degree();
  if (da < db) {
    if (q) *q = ZPoly();
    return a.zero();
  }
  std::vector<Int> quo(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.lead().get_mpz_t())) return false;
    Int t = rem[i] / b.lead();
    quo[i - db] = t;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b.c[j];
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  if (q) *q = ZPoly(std::move(quo));
  return true;
}

Int resultant(const ZPoly& a, const ZPoly& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Int>> M(N, std::vector<Int>(N));
  // Rows of a-shifts then b-shifts, coefficients from the top degree down.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.c[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.c[n - j];
  // Bareiss elimination.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k] == 0) {
      int r = k + 1;
      while (r < N && M[r][k] == 0) ++r;
      if (r == N) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = t;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  Int det = M[N - 1][N - 1];
  return sign < 0 ? Int(-det) : det;
}

namespace {

void horner(const std::vector<long double>& c, cplx z, cplx& p, cplx& dp) {
  p = 0;
  dp = 0;
  for (size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

std::vector<cplx> poly_roots(const std::vector<long double>& coeffs) {
  std::vector<long double> c(coeffs);
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw Error(ErrorKind::RootFindingFailure, "zero polynomial");
  size_t zeros = 0;
  while (c[zeros] == 0) ++zeros;
  c.erase(c.begin(), c.begin() + zeros);
  int d = static_cast<int>(c.size()) - 1;
  std::vector<cplx> roots(zeros, cplx(0));
  if (d == 0) return roots;

  // Normalize to monic and pick a starting radius from the Cauchy bound.
  long double lead = c.back();
  for (auto& v : c) v /= lead;
  long double radius = 0;
  for (int i = 0; i < d; ++i)
    radius = std::max(radius, std::pow(std::fabs(c[i]), 1.0L / (d - i)));
  if (radius == 0) radius = 1;

  std::vector<cplx> z(d);
  const long double pi = std::acos(-1.0L);
  for (int i = 0; i < d; ++i) {
    long double ang = 2 * pi * i / d + 0.4L;
    z[i] = std::polar(radius * (0.5L + 0.5L * (i % 3) / 3), ang);
  }
  bool done = false;
  for (int iter = 0; iter < 2000 && !done; ++iter) {
    done = true;
    for (int i = 0; i < d; ++i) {
      cplx p, dp;
      horner(c, z[i], p, dp);
      if (p == cplx(0)) continue;
      cplx ratio = p / dp;
      cplx s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      cplx w = ratio / (1.0L - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        w = ratio;
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      }
      z[i] -= w;
      if (std::abs(w) > 1e-17L * std::max<long double>(1, std::abs(z[i])))
        done = false;
    }
  }
  for (const auto& r : z)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorKind::RootFindingFailure, "non-finite root estimate");
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace mordell
