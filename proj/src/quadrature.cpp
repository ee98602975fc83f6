#include "unigate/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "unigate/errors.hpp"

namespace unigate {

namespace {

constexpr double kFailure = 1e-4;

void check(const QuadratureResult& r) {
  if (!std::isfinite(r.value) || r.error > kFailure * std::max(std::abs(r.value), 1e-300)) {
    // A vanishing integral with a tiny absolute error is still converged.
    if (std::isfinite(r.value) && r.error < 1e-14) return;
    throw NumericError("quadrature did not converge");
  }
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (!(b > a)) return {};
  QuadratureResult r;
  // The error boost reports is an absolute Kronrod-minus-Gauss estimate,
  // measured on the reference interval, so it is conservative for b - a < 2.
  r.value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 15, rel_tol, &r.error);
  check(r);
  return r;
}

QuadratureResult integrate_region(const std::function<double(double, double, double)>& f, const Region3& region,
                                  double rel_tol) {
  auto outer = [&](double x) {
    auto middle = [&](double y) {
      auto inner = [&](double z) { return f(x, y, z); };
      return integrate(inner, region.z_lo(x, y), region.z_hi(x, y), rel_tol).value;
    };
    return integrate(middle, region.y_lo(x), region.y_hi(x), rel_tol).value;
  };
  return integrate(outer, region.x_lo, region.x_hi, rel_tol);
}

double integrate_box(const std::function<double(double, double, double)>& f, const std::array<double, 3>& lo,
                     const std::array<double, 3>& hi) {
  using rule = boost::math::quadrature::gauss<double, 5>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  // boost stores the nonnegative half of a symmetric rule.
  std::array<double, 5> node{};
  std::array<double, 5> weight{};
  std::size_t n = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    node[n] = x[k];
    weight[n++] = w[k];
    if (x[k] != 0.0) {
      node[n] = -x[k];
      weight[n++] = w[k];
    }
  }
  std::array<double, 3> mid{};
  std::array<double, 3> half{};
  for (std::size_t d = 0; d < 3; ++d) {
    mid[d] = (lo[d] + hi[d]) / 2.0;
    half[d] = (hi[d] - lo[d]) / 2.0;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        sum += weight[i] * weight[j] * weight[k] *
               f(mid[0] + half[0] * node[i], mid[1] + half[1] * node[j], mid[2] + half[2] * node[k]);
  return sum * half[0] * half[1] * half[2];
}

}  // namespace unigate
