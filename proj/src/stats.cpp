#include "unigate/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "unigate/errors.hpp"

namespace unigate {

Histogram::Histogram(double lo_, double hi_, std::size_t bins_) : lo(lo_), hi(hi_), bins(bins_), counts(bins_, 0) {
  if (bins == 0 || !(hi > lo)) throw DomainError("histogram needs bins > 0 and hi > lo");
}

void Histogram::add(double x) {
  if (!(x >= lo && x <= hi)) return;
  auto k = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
  k = std::min(k, bins - 1);
  ++counts[k];
  ++recorded;
}

std::vector<double> Histogram::density() const {
  std::vector<double> d(bins, 0.0);
  if (recorded == 0) return d;
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    d[k] = static_cast<double>(counts[k]) / (static_cast<double>(recorded) * width);
  }
  return d;
}

double Histogram::bin_lo(std::size_t k) const {
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
}

double Histogram::bin_hi(std::size_t k) const {
  return lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(bins);
}

std::string Histogram::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "bin_lo,bin_hi,count,density\n";
  const auto d = density();
  for (std::size_t k = 0; k < bins; ++k) {
    os << bin_lo(k) << ',' << bin_hi(k) << ',' << counts[k] << ',' << d[k] << '\n';
  }
  return os.str();
}

namespace {

double pairwise(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise(x, half) + pairwise(x + half, n - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& xs) { return pairwise(xs.data(), xs.size()); }

EstimateWithCI estimate(const std::vector<double>& xs) {
  EstimateWithCI e;
  e.samples = xs.size();
  if (xs.empty()) return e;
  const double n = static_cast<double>(xs.size());
  e.mean = pairwise_sum(xs) / n;
  if (xs.size() > 1) {
    std::vector<double> sq(xs.size());
    std::transform(xs.begin(), xs.end(), sq.begin(), [&](double x) { return (x - e.mean) * (x - e.mean); });
    e.std_error = std::sqrt(pairwise_sum(sq) / (n - 1.0) / n);
  }
  return e;
}

double chi2_pvalue(double chi2, double dof) {
  if (!(dof > 0.0)) throw DomainError("chi2_pvalue: dof must be positive");
  if (chi2 <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, chi2 / 2.0);
}

ChiSquareResult chi_square(const std::vector<double>& observed, const std::vector<double>& expected,
                           double min_expected) {
  if (observed.size() != expected.size()) throw DimensionError("chi_square: size mismatch");
  ChiSquareResult r;
  double pool_obs = 0.0;
  double pool_exp = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    if (expected[k] < min_expected) {
      pool_obs += observed[k];
      pool_exp += expected[k];
      continue;
    }
    r.statistic += (observed[k] - expected[k]) * (observed[k] - expected[k]) / expected[k];
    ++r.cells;
  }
  if (pool_exp >= min_expected) {
    r.statistic += (pool_obs - pool_exp) * (pool_obs - pool_exp) / pool_exp;
    ++r.cells;
  }
  if (r.cells < 2) throw DomainError("chi_square: fewer than two usable cells");
  r.dof = r.cells - 1;
  r.p_value = chi2_pvalue(r.statistic, static_cast<double>(r.dof));
  return r;
}

ChiSquareResult chi_square_two_sample(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                      double min_count) {
  if (a.size() != b.size()) throw DimensionError("chi_square_two_sample: size mismatch");
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    na += static_cast<double>(a[k]);
    nb += static_cast<double>(b[k]);
  }
  if (!(na > 0.0 && nb > 0.0)) throw DomainError("chi_square_two_sample: empty sample");

  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> pool{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double x = static_cast<double>(a[k]);
    const double y = static_cast<double>(b[k]);
    if (x + y < min_count) {
      pool.first += x;
      pool.second += y;
    } else {
      cells.emplace_back(x, y);
    }
  }
  if (pool.first + pool.second >= min_count) cells.push_back(pool);
  if (cells.size() < 2) throw DomainError("chi_square_two_sample: fewer than two usable cells");

  ChiSquareResult r;
  const double n = na + nb;
  for (const auto& [x, y] : cells) {
    const double ea = na * (x + y) / n;
    const double eb = nb * (x + y) / n;
    r.statistic += (x - ea) * (x - ea) / ea + (y - eb) * (y - eb) / eb;
  }
  r.cells = cells.size();
  r.dof = r.cells - 1;
  r.p_value = chi2_pvalue(r.statistic, static_cast<double>(r.dof));
  return r;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    const std::size_t begin = count * w / threads;
    const std::size_t end = count * (w + 1) / threads;
    workers.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace unigate
