#pragma once

#include <cmath>

namespace chaoslab {

// Wrap a coordinate onto the periodic unit interval [0, 1).
inline double wrap01(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? r - 1.0 : r;
}

// Shortest signed displacement on the unit torus, in (-1/2, 1/2].
inline double wrap_disp(double d) {
  double r = d - std::floor(d);
  return r > 0.5 ? r - 1.0 : r;
}

// sign with the convention sign(0) = 0.
inline double sign0(double t) { return (t > 0.0) - (t < 0.0); }

}  // namespace chaoslab
