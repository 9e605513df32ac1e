#pragma once

#include <random>

#include "mordell/curve.hpp"

namespace mordell::testing {

inline CurvePoint pt(long x, long y) { return CurvePoint::affine(Rat(x), Rat(y)); }
inline CurvePoint ptq(const char* x, const char* y) {
  return CurvePoint::affine(rat_from_string(x), rat_from_string(y));
}

// Random integral point: pick (x, y), set B = y^2 - x^3, retry on B = 0.
struct PointSample {
  MordellCurve E;
  CurvePoint P;
};

inline PointSample random_integral_point(std::mt19937_64& rng, long xr, long yr) {
  std::uniform_int_distribution<long> dx(-xr, xr), dy(1, yr);
  for (;;) {
    long x = dx(rng), y = dy(rng);
    Int B = Int(y) * y - Int(x) * x * x;
    if (B == 0) continue;
    return {make_curve(B), pt(x, y)};
  }
}

}  // namespace mordell::testing
