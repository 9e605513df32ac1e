#include "mordell/analytic.hpp"

#include <cmath>
#include <complex>

#include "mordell/divpoly.hpp"
#include "mordell/error.hpp"
#include "mordell/heights.hpp"

namespace mordell {

namespace {

const long double kPi = std::acos(-1.0L);

long double agm(long double a, long double b, long double tol) {
  for (int i = 0; i < 200; ++i) {
    if (std::fabs(a - b) <= tol * a) return (a + b) / 2;
    long double an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
  }
  throw Error(ErrorKind::ConvergenceFailure, "AGM did not converge");
}

// Real root e1 of t^3 + B and the quadratic cofactor s^2 + alpha s + beta^2
// after s = t - e1.
struct CubicData {
  long double e1, alpha, beta, k, kp;
};

CubicData cubic_data(long double B) {
  CubicData c;
  c.e1 = -std::cbrt(B);
  c.alpha = 3 * c.e1;
  c.beta = std::sqrt(3.0L) * std::fabs(c.e1);
  long double r = c.alpha / (4 * c.beta);
  c.k = std::sqrt(0.5L - r);
  c.kp = std::sqrt(0.5L + r);
  return c;
}

long double complete_k(long double kp, long double tol) { return kPi / (2 * agm(1, kp, tol)); }

long double B_as_ld(const Int& B) {
  long double L = log_abs(B);
  return (B < 0 ? -1 : 1) * std::exp(L);
}

}  // namespace

long double elliptic_f(long double phi, long double k) {
  long double a = 1, b = std::sqrt((1 - k) * (1 + k));
  long double p = phi;
  long double scale = 1;
  for (int i = 0; i < 200; ++i) {
    if (std::fabs(a - b) <= 1e-19L * a) break;
    long double t = std::atan2((b / a) * std::sin(p), std::cos(p));
    // Lift t by multiples of 2 pi to the branch nearest p.
    t += 2 * kPi * std::round((p - t) / (2 * kPi));
    p += t;
    long double an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
    scale *= 2;
  }
  return p / (scale * a);
}

PeriodData real_period(const Int& B, long double tol) {
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  auto period = [&](long double Bf) {
    CubicData c = cubic_data(Bf);
    return 2 * complete_k(c.kp, tol) / std::sqrt(c.beta);
  };
  PeriodData d;
  long double Bf = B_as_ld(B);
  d.omega_real = period(Bf);
  d.omega1 = period(1.0L);
  // Lattice (omega, omega/2 + i K(k') / sqrt(beta)); reduce tau = w2 / w1.
  CubicData c = cubic_data(Bf);
  std::complex<long double> tau(0.5L, complete_k(c.k, tol) / (2 * complete_k(c.kp, tol)));
  for (int i = 0; i < 100; ++i) {
    tau -= std::round(tau.real());
    if (std::norm(tau) < 1 - 1e-15L)
      tau = -1.0L / tau;
    else
      break;
  }
  d.tau_im = tau.imag();
  return d;
}

namespace {

// (1/2) int_x^inf dt / sqrt(t^3 + B) for real x >= e1.
long double half_integral(long double x, long double Bf, long double tol) {
  CubicData c = cubic_data(Bf);
  long double s = x - c.e1;
  if (s < 0) {
    if (s > -1e-12L * (1 + std::fabs(c.e1))) s = 0;
    else throw Error(ErrorKind::OffRealComponent, "x below the real root");
  }
  long double sb = std::sqrt(c.beta);
  long double u = std::sqrt(s / c.beta);
  if (u <= 1) {
    long double phi = 2 * std::atan(u);
    long double omega = 2 * complete_k(c.kp, tol) / sb;
    return omega / 2 - elliptic_f(phi, c.k) / (2 * sb);
  }
  // phi > pi/2: use F(pi - phi) = 2K - F(phi) to avoid cancellation.
  long double psi = 2 * std::atan(1 / u);
  return elliptic_f(psi, c.k) / (2 * sb);
}

}  // namespace

EllipticLog elliptic_log(const MordellCurve& E, const CurvePoint& P, long double tol) {
  require_on_curve(E, P);
  EllipticLog r;
  r.target = P;
  long double Bf = B_as_ld(E.B);
  r.omega = real_period(E.B, tol).omega_real;
  if (P.identity) return r;
  long double I = half_integral(to_ld(P.x), Bf, tol);
  if (P.y == 0)
    r.z = r.omega / 2;
  else if (P.y < 0)
    r.z = I;
  else
    r.z = r.omega - I;
  if (!std::isfinite(r.z)) throw Error(ErrorKind::ConvergenceFailure, "elliptic log");
  return r;
}

namespace {

// 20-point Gauss-Legendre nodes/weights on [-1, 1], computed by Newton.
struct GaussRule {
  std::vector<long double> x, w;
  GaussRule(int n) {
    for (int i = 1; i <= n; ++i) {
      long double t = std::cos(kPi * (i - 0.25L) / (n + 0.5L));
      long double dp = 0;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1, p1 = t;
        for (int k = 2; k <= n; ++k) {
          long double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1);
        long double dt = p1 / dp;
        t -= dt;
        if (std::fabs(dt) < 1e-19L) break;
      }
      x.push_back(t);
      w.push_back(2 / ((1 - t * t) * dp * dp));
    }
  }
};

template <class F>
long double integrate(F f, long double a, long double b, int panels) {
  static const GaussRule g(20);
  long double h = (b - a) / panels, sum = 0;
  for (int p = 0; p < panels; ++p) {
    long double m = a + (p + 0.5L) * h;
    for (size_t i = 0; i < g.x.size(); ++i) sum += g.w[i] * f(m + 0.5L * h * g.x[i]);
  }
  return sum * h / 2;
}

}  // namespace

long double elliptic_log_quadrature(const MordellCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  if (P.identity) return 0;
  long double Bf = B_as_ld(E.B);
  CubicData c = cubic_data(Bf);
  long double s = std::max(0.0L, to_ld(P.x) - c.e1);
  long double w0 = std::sqrt(s);
  // s = w^2 gives int 2 dw / sqrt(w^4 + alpha w^2 + beta^2); w = 1/v folds the tail.
  auto fw = [&](long double w) { return 2 / std::sqrt(w * w * w * w + c.alpha * w * w + c.beta * c.beta); };
  auto fv = [&](long double v) {
    return 2 / std::sqrt(1 + c.alpha * v * v + c.beta * c.beta * v * v * v * v);
  };
  long double scale = std::sqrt(c.beta);  // natural unit for w
  long double I;
  if (w0 < scale) {
    I = integrate(fw, w0, scale, 400) + integrate(fv, 0, 1 / scale, 400);
  } else {
    I = integrate(fv, 0, 1 / w0, 400);
  }
  long double half = I / 2;
  long double omega = real_period(E.B).omega_real;
  if (P.y == 0) return omega / 2;
  return P.y < 0 ? half : omega - half;
}

bool tza_bound_holds(const MordellCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  if (P.identity || P.x <= 0 || P.x * P.x * P.x < Rat(8 * abs(E.B)))
    throw Error(ErrorKind::HypothesisViolated, "x(P) < 2|B|^(1/3)");
  EllipticLog l = elliptic_log(E, P);
  long double z = std::fabs(l.symmetric());
  return std::log(z) <= 1.5L * std::log(2.0L) - 0.5L * std::log(to_ld(P.x)) + 1e-6L;
}

bool torsion_x_bound_check(long n, const Int& B, long double tol) {
  if (n < 11) throw Error(ErrorKind::HypothesisViolated, "torsion x bound needs n >= 11");
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  long double bound = (static_cast<long double>(n) * n / 7) * std::exp(log_abs(B) / 3);
  for (const cplx& r : torsion_x_roots(n, B)) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorKind::RootFindingFailure, "non-finite torsion root");
    if (std::abs(r) >= bound * (1 - tol)) return false;
  }
  return true;
}

LinearFormKind parse_linear_form_kind(const std::string& s) {
  if (s == "general_n") return LinearFormKind::GeneralN;
  if (s == "four_mult") return LinearFormKind::FourMult;
  if (s == "two_three_mult") return LinearFormKind::TwoThreeMult;
  throw Error(ErrorKind::UnknownKind, s);
}

long double linear_form_upper(const Int& B, LinearFormKind kind, long n) {
  long double L = log_abs(B);
  switch (kind) {
    case LinearFormKind::GeneralN: {
      if (n < 11) throw Error(ErrorKind::HypothesisViolated, "general_n needs n >= 11");
      long double n2 = static_cast<long double>(n) * n;
      return -n2 * (L / 36 - congruence_constant(B)) + L / 6 + 1.339L;
    }
    case LinearFormKind::FourMult:
      return -L / 3 + 0.921L;
    case LinearFormKind::TwoThreeMult:
      return -0.22L * L + 1.5L * std::log(2.0L);
  }
  throw Error(ErrorKind::UnknownKind, "linear form kind");
}

namespace {

long double regime_value(int regime, long double L4, long double log_n) {
  switch (regime) {
    case 1: return -5.944e42L * std::pow(L4, 6);
    case 2: return -5.562e42L * std::pow(L4, 6);
    default: return -4.144e42L * std::pow(log_n, 5) * L4;
  }
}

void check_david(const Int& B, long double log_n) {
  if (abs(B) <= 8) throw Error(ErrorKind::HypothesisViolated, "David bound needs |B| > 8");
  if (log_n < std::log(11.0L) - 1e-12L)
    throw Error(ErrorKind::HypothesisViolated, "David bound needs n >= 11");
}

}  // namespace

int david_regime(const Int& B, long double log_n) {
  check_david(B, log_n);
  long double L = log_abs(B);
  long double t = 2 * log_n;
  if (t < L / 3) return 1;
  if (t < (std::exp(1.0L) - 2.0L / 3) * L) return 2;
  return 3;
}

long double david_lower(const Int& B, long double log_n) {
  int r = david_regime(B, log_n);
  long double L = log_abs(B), L4 = std::log(4.0L) + L;
  long double t = 2 * log_n;
  long double v = regime_value(r, L4, log_n);
  // On a boundary, take the more conservative neighbouring bound.
  const long double eps = 1e-12L * std::max(1.0L, L);
  if (std::fabs(t - L / 3) <= eps) v = std::min(regime_value(1, L4, log_n), regime_value(2, L4, log_n));
  long double b2 = (std::exp(1.0L) - 2.0L / 3) * L;
  if (std::fabs(t - b2) <= eps) v = std::min(regime_value(2, L4, log_n), regime_value(3, L4, log_n));
  return v;
}

long double david_lower(const Int& B, long n) {
  return david_lower(B, std::log(static_cast<long double>(n)));
}

LinearFormParams linear_form_params(const Int& B, long double log_n) {
  LinearFormParams p;
  long double L = log_abs(B);
  p.h_E = std::log(4.0L) + L;
  p.log_V2 = p.h_E;
  const long double e = std::exp(1.0L);
  switch (david_regime(B, log_n)) {
    case 1:
      p.log_V1 = p.h_E;
      p.log_B_david = e * p.h_E;
      break;
    case 2:
      p.log_V1 = std::max(p.h_E, e * L - 1.199L);
      p.log_B_david = e * p.h_E;
      break;
    default:
      p.log_V1 = std::max(p.h_E, 2 * log_n + 1);
      p.log_B_david = std::max(e * p.h_E, p.log_V1);
      break;
  }
  return p;
}

long double david_general(const LinearFormParams& p) {
  long double lb = p.log_B_david;
  return -p.C_abs * (lb + 1) * std::pow(std::log(lb) + p.h_E + 1, 3) * p.log_V1 * p.log_V2;
}

long double n_upper_bound(const Int& B) {
  if (abs(B) <= 75) throw Error(ErrorKind::HypothesisViolated, "n cap needs |B| > 75");
  long double L = log_abs(B);
  return std::max(3e22L * std::pow(L, 2.5L), 7.511e26L);
}

long double gap_lower_bound_on_log_n2(long n1, const Int& B) {
  if (n1 < 11) throw Error(ErrorKind::HypothesisViolated, "gap principle needs n1 >= 11");
  if (abs(B) <= 75) throw Error(ErrorKind::HypothesisViolated, "gap principle needs |B| > 75");
  long double L = log_abs(B);
  long double n2 = static_cast<long double>(n1) * n1;
  long double omega1 = real_period(Int(1)).omega_real;
  return n2 * (L / 36 - congruence_constant(B)) + std::log(omega1) - L / 3 - 1.399L;
}

long reduction_witness(const MordellCurve& E, const CurvePoint& P, long n) {
  EllipticLog zp = elliptic_log(E, P);
  CurvePoint Q = multiply(E, P, n);
  long double zq = Q.identity ? 0.0L : elliptic_log(E, Q).symmetric();
  return std::lround((zq - n * zp.symmetric()) / zp.omega);
}

}  // namespace mordell
