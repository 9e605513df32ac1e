#pragma once

// Dense univariate polynomials over Z and a complex root finder.

#include <complex>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell {

// c[i] is the coefficient of x^i.
struct ZPoly {
  std::vector<Int> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool zero() const { return c.empty(); }
  const Int& lead() const { return c.back(); }
  Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }
  void trim();

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  bool operator==(const ZPoly& o) const { return c == o.c; }
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const Int& k, const ZPoly& a);
ZPoly monomial(const Int& k, unsigned deg);

// Exact division by a scalar; remainder is a logic error.
ZPoly div_exact(const ZPoly& a, const Int& k);
// Exact polynomial division a / b over Z; returns false if b does not divide a.
bool div_exact(const ZPoly& a, const ZPoly& b, ZPoly* q);

// Resultant via the Sylvester matrix and fraction-free elimination.
Int resultant(const ZPoly& a, const ZPoly& b);

using cplx = std::complex<long double>;

// All complex roots of sum c[i] x^i (c.back() != 0) by Aberth-Ehrlich
// iteration. Throws RootFindingFailure if the iteration does not settle.
std::vector<cplx> poly_roots(const std::vector<long double>& c);

}  // namespace mordell
