#pragma once

#include <array>
#include <functional>

namespace unigate {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod (21 points) on [a, b]. NumericError when the
/// estimated relative error exceeds 1e-4.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-10);

/// x in [x_lo, x_hi], y in [y_lo(x), y_hi(x)], z in [z_lo(x,y), z_hi(x,y)].
/// Limits must be smooth on the region; split regions at kinks.
struct Region3 {
  double x_lo = 0.0;
  double x_hi = 0.0;
  std::function<double(double)> y_lo, y_hi;
  std::function<double(double, double)> z_lo, z_hi;
};

/// Nested adaptive integration over a region, with the same failure rule.
QuadratureResult integrate_region(const std::function<double(double, double, double)>& f, const Region3& region,
                                  double rel_tol = 1e-9);

/// Fixed 5-point tensor Gauss-Legendre rule over a box, for many small
/// cells where adaptivity would be wasted.
double integrate_box(const std::function<double(double, double, double)>& f, const std::array<double, 3>& lo,
                     const std::array<double, 3>& hi);

}  // namespace unigate
