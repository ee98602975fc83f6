#include "unigate/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "unigate/errors.hpp"
#include "unigate/quadrature.hpp"
#include "unigate/schmidt.hpp"

namespace unigate {

namespace {

constexpr double kPi = std::numbers::pi;

// Number of Weyl chambers in the cube [-pi/2, pi/2]^3.
constexpr double kChambersPerCube = 192.0;

std::size_t local_dimension(std::size_t dim) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (n < 2 || n * n != dim) throw DimensionError("ensemble size must be a square N^2 with N >= 2");
  return n;
}

Matrix remove_determinant_phase(const Matrix& u) {
  const double chi = std::arg(u.determinant());
  return u * std::polar(1.0, -chi / static_cast<double>(u.rows()));
}

Matrix sample_with(const EnsembleSpec& spec, CounterRng& rng) {
  const Matrix u = haar_unitary(spec.dim, rng);
  switch (spec.kind) {
    case EnsembleKind::Cue:
      return u;
    case EnsembleKind::Scue:
      return remove_determinant_phase(u);
    case EnsembleKind::Coe: {
      const Matrix v = remove_determinant_phase(u);
      return v * v.transpose();
    }
  }
  return u;
}

}  // namespace

EnsembleKind parse_ensemble(const std::string& name) {
  if (name == "cue") return EnsembleKind::Cue;
  if (name == "scue") return EnsembleKind::Scue;
  if (name == "coe") return EnsembleKind::Coe;
  throw ParseError("unknown ensemble '" + name + "' (expected cue, scue or coe)");
}

std::string ensemble_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Cue:
      return "cue";
    case EnsembleKind::Scue:
      return "scue";
    case EnsembleKind::Coe:
      return "coe";
  }
  return "cue";
}

Matrix haar_unitary(std::size_t d, CounterRng& rng) {
  if (d == 0) throw DomainError("haar_unitary: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  Matrix z(n, n);
  // Fill row by row so the stream layout does not depend on Eigen's storage.
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = rng.complex_normal();
  QrResult f = qr(z);
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx r = f.r(k, k);
    const double m = std::abs(r);
    if (m > 0.0) f.q.col(k) *= r / m;
  }
  return f.q;
}

Matrix sample_unitary(const EnsembleSpec& spec, std::size_t index) {
  if (spec.dim < 2) throw DomainError("ensemble dimension must be at least 2");
  if (spec.count < 1 || index >= spec.count) throw DomainError("sample index out of range");
  CounterRng rng(spec.seed, index);
  return sample_with(spec, rng);
}

double pdf_alpha(const Vec3& a) {
  double p = 2.0 / kPi;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      p *= std::abs(std::sin(2.0 * (a[i] + a[j]))) * std::abs(std::sin(2.0 * (a[i] - a[j])));
    }
  }
  return p;
}

double pdf_alpha_chamber(const Vec3& a) {
  if (!in_weyl_chamber(a)) return 0.0;
  return kChambersPerCube * pdf_alpha(a);
}

double pdf_eta(const DampingVector& eta) {
  const auto& e = eta.eta;
  for (std::size_t k = 0; k < 3; ++k) {
    const double prod = e[(k + 1) % 3] * e[(k + 2) % 3];
    if (!(e[k] > 0.0 && e[k] <= 1.0 && prod < e[k])) {
      throw DomainError("pdf_eta: eta is not strictly inside the unistochastic region");
    }
  }
  std::array<double, 3> c2{};
  for (std::size_t k = 0; k < 3; ++k) c2[k] = e[(k + 1) % 3] * e[(k + 2) % 3] / e[k];

  double numerator = 1.0;
  double jacobian = 16.0;
  for (std::size_t k = 0; k < 3; ++k) {
    numerator *= std::abs(c2[k] - c2[(k + 1) % 3]);
    jacobian *= std::sqrt(c2[k] * (1.0 - c2[k]));
  }
  // Both chamber branches map onto the same |eta|, and the random order
  // spreads it over six permutations: factor 2 / 6.
  const double chamber_constant = kChambersPerCube * 2.0 / kPi;
  return chamber_constant / 3.0 * numerator / jacobian;
}

double coe4_weight(const Vec3& t) {
  const std::array<double, 4> theta{t[0], t[1], t[2], -(t[0] + t[1] + t[2])};
  double p = 1.0;
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t n = m + 1; n < 4; ++n) {
      // |e^{ia} - e^{ib}| = 2 |sin((a - b) / 2)|
      p *= 2.0 * std::abs(std::sin((theta[m] - theta[n]) / 2.0));
    }
  }
  return p;
}

double coe4_normalization() {
  // Dyson: the weight integrates to (2 pi)^4 Gamma(3) / Gamma(3/2)^4 = 512 pi^2
  // over four free phases; fixing the phase sum removes one factor 2 pi.
  return 256.0 * kPi;
}

double pdf_coe4_marginal(const Vec3& theta) { return coe4_weight(theta) / coe4_normalization(); }

Vec3 coe4_phase_triple(std::uint64_t seed, std::size_t index) {
  CounterRng rng(seed, index);
  const Matrix y = sample_with({EnsembleKind::Coe, 4, index + 1, seed}, rng);
  const Eigen::VectorXcd ev = eigenvalues(y);
  std::array<double, 4> phase{};
  for (std::size_t k = 0; k < 4; ++k) phase[k] = std::arg(ev(static_cast<Eigen::Index>(k)));
  std::sort(phase.begin(), phase.end());
  for (std::size_t k = 3; k > 0; --k) std::swap(phase[k], phase[rng.below(k + 1)]);
  return {phase[0], phase[1], phase[2]};
}

PurityResult mc_purity(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t threads,
                       std::size_t bins) {
  if (n < 2) throw DomainError("mc_purity: N must be at least 2");
  const EnsembleSpec spec{n == 2 ? EnsembleKind::Scue : EnsembleKind::Cue, n * n, samples, seed};
  std::vector<double> r(samples);
  std::vector<double> fast(n == 2 ? samples : 0);
  parallel_for(samples, threads, [&](std::size_t i) {
    const Matrix u = sample_unitary(spec, i);
    r[i] = purity(schmidt_spectrum(u, {n, n})).purity;
    if (n == 2) {
      const auto e = eta_from_alpha(interaction_content(u).content.alpha).eta;
      fast[i] = (1.0 + e[0] * e[0] + e[1] * e[1] + e[2] * e[2]) / 4.0;
    }
  });
  PurityResult out{estimate(r), Histogram(0.0, 1.0, bins), std::nullopt};
  for (double x : r) out.hist.add(x);
  if (n == 2) out.fast_path = estimate(fast);
  return out;
}

std::vector<double> purity_density_curve(std::size_t bins, std::size_t cells) {
  std::vector<double> mass(bins, 0.0);
  const double hx = (kPi / 2.0) / static_cast<double>(cells);
  const double hy = (kPi / 4.0) / static_cast<double>(cells);
  // Five-point Gauss-Legendre nodes on [-1, 1], walked directly because each
  // node feeds a different bin.
  using Rule = std::array<std::pair<double, double>, 5>;
  static const Rule rule = [] {
    const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    return Rule{{{0.0, 128.0 / 225.0}, {a, wa}, {-a, wa}, {b, wb}, {-b, wb}}};
  }();
  for (std::size_t i = 0; i < cells; ++i)
    for (std::size_t j = 0; j < cells; ++j)
      for (std::size_t k = 0; k < cells; ++k)
        for (const auto& [u, wu] : rule)
          for (const auto& [v, wv] : rule)
            for (const auto& [w, ww] : rule) {
              const double a = hx * (static_cast<double>(i) + 0.5 + 0.5 * u);
              const double b = hy * (static_cast<double>(j) + 0.5 + 0.5 * v);
              const double c = hy * (static_cast<double>(k) + 0.5 + 0.5 * w);
              const double p = pdf_alpha_chamber({a, b, c});
              if (p == 0.0) continue;
              const auto e = eta_from_alpha({a, b, c}).eta;
              const double r = (1.0 + e[0] * e[0] + e[1] * e[1] + e[2] * e[2]) / 4.0;
              const auto bin = std::min(static_cast<std::size_t>(r * static_cast<double>(bins)), bins - 1);
              mass[bin] += p * wu * wv * ww * hx * hy * hy / 8.0;
            }
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  for (auto& m : mass) m *= static_cast<double>(bins) / total;
  return mass;
}

PeFraction mc_pe_fraction(std::size_t samples, std::uint64_t seed, std::size_t threads) {
  const EnsembleSpec spec{EnsembleKind::Scue, 4, samples, seed};
  std::vector<PeClass> cls(samples);
  parallel_for(samples, threads, [&](std::size_t i) { cls[i] = classify_pe(sample_unitary(spec, i)).pe_class; });
  PeFraction out;
  std::vector<double> hit(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    out.boundary += cls[i] == PeClass::BoundaryPE ? 1 : 0;
    out.interior += cls[i] == PeClass::InteriorPE ? 1 : 0;
    hit[i] = cls[i] == PeClass::NotPE ? 0.0 : 1.0;
  }
  out.fraction = estimate(hit);
  return out;
}

Volumes integrate_volumes() {
  const double q = kPi / 4.0;
  const double e = kPi / 8.0;
  auto f = [](double a, double b, double c) { return pdf_alpha({a, b, c}); };
  auto zero2 = [](double, double) { return 0.0; };
  auto up_to_y = [](double, double y) { return y; };
  auto quarter_minus_y = [q](double, double y) { return q - y; };
  auto constant = [](double v) { return [v](double) { return v; }; };

  // Chamber, both branches.
  const Region3 first{0.0, q, constant(0.0), [](double x) { return x; }, zero2, up_to_y};
  const Region3 second{q, 2.0 * q, constant(0.0), [q](double x) { return 2.0 * q - x; }, zero2, up_to_y};

  // Perfect entanglers: a1 + a2 >= pi/4, a1 - a2 <= pi/4, a2 + a3 <= pi/4,
  // split where min(a2, pi/4 - a2) switches at a2 = pi/8.
  const Region3 pe_a{e, q, [q](double x) { return q - x; }, constant(e), zero2, up_to_y};
  const Region3 pe_b{e, q, constant(e), [](double x) { return x; }, zero2, quarter_minus_y};
  const Region3 pe_c{q, 3.0 * e, [q](double x) { return x - q; }, constant(e), zero2, up_to_y};
  const Region3 pe_d{q, 3.0 * e, constant(e), [q](double x) { return 2.0 * q - x; }, zero2, quarter_minus_y};

  Volumes v;
  v.v_w = integrate_region(f, first).value + integrate_region(f, second).value;
  v.v_pe = integrate_region(f, pe_a).value + integrate_region(f, pe_b).value + integrate_region(f, pe_c).value +
           integrate_region(f, pe_d).value;
  v.ratio = v.v_pe / v.v_w;
  return v;
}

std::vector<EstimateWithCI> mc_mean_entropies(std::size_t n, const std::vector<double>& qs, std::size_t samples,
                                              std::uint64_t seed, std::size_t threads) {
  if (n < 2) throw DomainError("mc_mean_entropy: N must be at least 2");
  for (double q : qs)
    if (!(q >= 0.0)) throw DomainError("mc_mean_entropy: q must be nonnegative");
  const EnsembleSpec spec{EnsembleKind::Cue, n * n, samples, seed};
  std::vector<std::vector<double>> s(qs.size(), std::vector<double>(samples));
  parallel_for(samples, threads, [&](std::size_t i) {
    const SchmidtSpectrum sp = schmidt_spectrum(sample_unitary(spec, i), {n, n});
    for (std::size_t k = 0; k < qs.size(); ++k) s[k][i] = renyi_entropy(sp, qs[k]);
  });
  std::vector<EstimateWithCI> out;
  out.reserve(qs.size());
  for (const auto& v : s) out.push_back(estimate(v));
  return out;
}

EstimateWithCI mc_mean_entropy(std::size_t n, double q, std::size_t samples, std::uint64_t seed,
                               std::size_t threads) {
  return mc_mean_entropies(n, {q}, samples, seed, threads).front();
}

double random_vector_mean_entropy(std::size_t n) {
  double s = 0.0;
  for (std::size_t k = n * n; k >= 2; --k) s += 1.0 / static_cast<double>(k);
  return s;
}

double entropy_offset(double q) {
  if (q == 1.0) return 0.5;
  if (q == 2.0) return std::log(2.0);
  if (q == 4.0) return std::log(14.0) / 3.0;
  throw DomainError("entropy_offset: known only for q = 1, 2, 4");
}

std::vector<SampleRecord> sample_records(const EnsembleSpec& spec, std::size_t threads) {
  const std::size_t n = local_dimension(spec.dim);
  std::vector<SampleRecord> out(spec.count);
  parallel_for(spec.count, threads, [&](std::size_t i) {
    const Matrix u = sample_unitary(spec, i);
    const SchmidtSpectrum sp = schmidt_spectrum(u, {n, n});
    SampleRecord& rec = out[i];
    rec.index = i;
    rec.r = purity(sp).purity;
    rec.s1 = renyi_entropy(sp, 1.0);
    rec.s2 = renyi_entropy(sp, 2.0);
    if (n == 2) {
      rec.two_qubit = true;
      rec.alpha = interaction_content(u).content.alpha;
      rec.eta = eta_from_alpha(rec.alpha).eta;
      rec.pe = classify_pe(rec.alpha).pe_class;
    }
  });
  return out;
}

std::string records_to_csv(const std::vector<SampleRecord>& records) {
  std::string out = "index,r,S1,S2,alpha1,alpha2,alpha3,eta1,eta2,eta3,pe\n";
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
  };
  for (const auto& rec : records) {
    out += std::to_string(rec.index);
    for (double x : {rec.r, rec.s1, rec.s2}) {
      out += ',';
      num(x);
    }
    if (rec.two_qubit) {
      for (double x : rec.alpha) {
        out += ',';
        num(x);
      }
      for (double x : rec.eta) {
        out += ',';
        num(x);
      }
      out += ',';
      out += pe_code(rec.pe);
    } else {
      out += ",,,,,,,";
    }
    out += '\n';
  }
  return out;
}

namespace {

struct Grid3 {
  std::array<double, 3> lo;
  std::array<double, 3> hi;
  std::size_t bins;

  double width(std::size_t d) const { return (hi[d] - lo[d]) / static_cast<double>(bins); }

  std::optional<std::size_t> cell(const Vec3& x) const {
    std::size_t idx = 0;
    for (std::size_t d = 0; d < 3; ++d) {
      if (!(x[d] >= lo[d] && x[d] <= hi[d])) return std::nullopt;
      auto k = static_cast<std::size_t>((x[d] - lo[d]) / width(d));
      idx = idx * bins + std::min(k, bins - 1);
    }
    return idx;
  }

  // Integral of f over every cell, each cell split `split`^3 times.
  std::vector<double> integrate(const std::function<double(double, double, double)>& f, std::size_t split) const {
    std::vector<double> out(bins * bins * bins, 0.0);
    const double hx = width(0) / static_cast<double>(split);
    const double hy = width(1) / static_cast<double>(split);
    const double hz = width(2) / static_cast<double>(split);
    for (std::size_t i = 0; i < bins; ++i)
      for (std::size_t j = 0; j < bins; ++j)
        for (std::size_t k = 0; k < bins; ++k) {
          double s = 0.0;
          for (std::size_t a = 0; a < split; ++a)
            for (std::size_t b = 0; b < split; ++b)
              for (std::size_t c = 0; c < split; ++c) {
                const std::array<double, 3> l{lo[0] + width(0) * static_cast<double>(i) + hx * static_cast<double>(a),
                                              lo[1] + width(1) * static_cast<double>(j) + hy * static_cast<double>(b),
                                              lo[2] + width(2) * static_cast<double>(k) + hz * static_cast<double>(c)};
                s += integrate_box(f, l, {l[0] + hx, l[1] + hy, l[2] + hz});
              }
          out[(i * bins + j) * bins + k] = s;
        }
    return out;
  }
};

ChiSquareResult grid_goodness_of_fit(const Grid3& grid, const std::vector<Vec3>& points,
                                     const std::function<double(double, double, double)>& pdf, std::size_t split) {
  std::vector<double> observed(grid.bins * grid.bins * grid.bins, 0.0);
  for (const auto& p : points) {
    if (const auto c = grid.cell(p)) observed[*c] += 1.0;
  }
  std::vector<double> expected = grid.integrate(pdf, split);
  for (auto& e : expected) e *= static_cast<double>(points.size());
  return chi_square(observed, expected);
}

}  // namespace

ChiSquareResult alpha_goodness_of_fit(std::size_t samples, std::uint64_t seed, std::size_t threads,
                                      std::size_t bins) {
  const EnsembleSpec spec{EnsembleKind::Scue, 4, samples, seed};
  std::vector<Vec3> alpha(samples);
  parallel_for(samples, threads,
               [&](std::size_t i) { alpha[i] = interaction_content(sample_unitary(spec, i)).content.alpha; });
  const Grid3 grid{{0.0, 0.0, 0.0}, {kPi / 2.0, kPi / 4.0, kPi / 4.0}, bins};
  return grid_goodness_of_fit(
      grid, alpha, [](double a, double b, double c) { return pdf_alpha_chamber({a, b, c}); }, 2);
}

ChiSquareResult coe_goodness_of_fit(std::size_t samples, std::uint64_t seed, std::size_t threads,
                                    std::size_t bins) {
  std::vector<Vec3> theta(samples);
  parallel_for(samples, threads, [&](std::size_t i) { theta[i] = coe4_phase_triple(seed, i); });
  const Grid3 grid{{-kPi, -kPi, -kPi}, {kPi, kPi, kPi}, bins};
  return grid_goodness_of_fit(
      grid, theta, [](double a, double b, double c) { return pdf_coe4_marginal({a, b, c}); }, 1);
}

Histogram singular_value_histogram(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t threads,
                                   std::size_t bins) {
  if (n < 2) throw DomainError("singular_value_histogram: N must be at least 2");
  const EnsembleSpec spec{EnsembleKind::Cue, n * n, samples, seed};
  std::vector<RealVector> sv(samples);
  parallel_for(samples, threads,
               [&](std::size_t i) { sv[i] = singular_values(reshuffle(sample_unitary(spec, i), {n, n})); });
  Histogram h(0.0, static_cast<double>(n), bins);
  for (const auto& v : sv)
    for (Eigen::Index k = 0; k < v.size(); ++k) h.add(v(k));
  return h;
}

}  // namespace unigate
