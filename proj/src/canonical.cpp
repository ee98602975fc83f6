#include "unigate/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "unigate/errors.hpp"

namespace unigate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 4.0;
constexpr double kHalf = kPi / 2.0;

// [0, pi/2), with values a hair below pi/2 folded onto 0.
double wrap_half(double x) {
  double w = x - kHalf * std::floor(x / kHalf);
  if (w >= kHalf - Tolerances::kChamber) w = 0.0;
  if (w < 0.0) w = 0.0;
  return w;
}

double snap(double x) {
  if (std::abs(x) <= Tolerances::kChamber) return 0.0;
  if (std::abs(x - kQuarter) <= Tolerances::kChamber) return kQuarter;
  return x;
}

bool first_branch(const Vec3& a, double tol) {
  return a[0] <= kQuarter + tol && a[0] >= a[1] - tol && a[1] >= a[2] - tol && a[2] >= -tol;
}

bool second_branch(const Vec3& a, double tol) {
  return a[0] > kQuarter - tol && a[0] <= kHalf + tol && a[1] <= kHalf - a[0] + tol &&
         a[1] >= a[2] - tol && a[2] >= -tol;
}

}  // namespace

const Matrix& magic_basis() {
  static const Matrix m = [] {
    const cplx i(0.0, 1.0);
    Matrix b(4, 4);
    b << 0, -i, -i, 0,
         1, 0, 0, 1,
         -i, 0, 0, i,
         0, 1, -1, 0;
    return Matrix(b / std::sqrt(2.0));
  }();
  return m;
}

HamiltonianSpectrum delta_from_alpha(const Vec3& a) {
  return {{a[0] + a[1] - a[2], a[0] - a[1] + a[2], -a[0] + a[1] + a[2], -a[0] - a[1] - a[2]}};
}

Vec3 alpha_from_delta(const HamiltonianSpectrum& h) {
  const auto& d = h.delta;
  if (std::abs(d[0] + d[1] + d[2] + d[3]) > Tolerances::kAbsolute) {
    throw DomainError("alpha_from_delta: delta must sum to zero");
  }
  return {(d[0] + d[1] - d[2] - d[3]) / 4.0, (d[0] - d[1] + d[2] - d[3]) / 4.0,
          (-d[0] + d[1] + d[2] - d[3]) / 4.0};
}

bool in_weyl_chamber(const Vec3& alpha, double tol) {
  return first_branch(alpha, tol) || second_branch(alpha, tol);
}

InteractionContent weyl_canonicalize(const Vec3& alpha) {
  static constexpr std::array<std::array<double, 3>, 4> kSigns{
      {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
  const double tol = Tolerances::kChamber;

  bool found = false;
  Vec3 best{};
  bool best_first = false;
  for (const auto& s : kSigns) {
    Vec3 b{wrap_half(s[0] * alpha[0]), wrap_half(s[1] * alpha[1]), wrap_half(s[2] * alpha[2])};
    std::sort(b.begin(), b.end());
    do {
      if (!in_weyl_chamber(b, tol)) continue;
      const bool is_first = first_branch(b, tol);
      const bool better = !found || (is_first && !best_first) ||
                          (is_first == best_first && std::lexicographical_compare(
                                                         best.begin(), best.end(), b.begin(), b.end()));
      if (better) {
        best = b;
        best_first = is_first;
        found = true;
      }
    } while (std::next_permutation(b.begin(), b.end()));
  }
  if (!found) throw NumericError("weyl_canonicalize: no orbit element in the chamber");
  for (auto& x : best) x = snap(x);
  return {best, true};
}

SchmidtSpectrum lambda_from_alpha(const Vec3& alpha) {
  const auto l = lambda_from_eta(eta_from_alpha(alpha));
  return make_spectrum({l.begin(), l.end()});
}

DampingVector eta_from_alpha(const Vec3& a) {
  const double c1 = std::cos(2.0 * a[0]);
  const double c2 = std::cos(2.0 * a[1]);
  const double c3 = std::cos(2.0 * a[2]);
  return {{c2 * c3, c1 * c3, c1 * c2}};
}

std::array<double, 4> lambda_from_eta(const DampingVector& eta) {
  const auto& e = eta.eta;
  return {1 + e[0] + e[1] + e[2], 1 + e[0] - e[1] - e[2], 1 - e[0] + e[1] - e[2],
          1 - e[0] - e[1] + e[2]};
}

namespace {

double max_abs_diff(const Vec3& a, const Vec3& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 3; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double half_arccos(double c) { return 0.5 * std::acos(std::clamp(c, -1.0, 1.0)); }

}  // namespace

bool in_unistochastic_region(const DampingVector& eta, double tol) {
  const Vec3& e = eta.eta;
  if (e[0] * e[1] * e[2] < -tol) return false;
  // Flipping two signs is a local rotation; test the positive representative.
  const Vec3 a{std::abs(e[0]), std::abs(e[1]), std::abs(e[2])};
  return a[0] * a[1] <= a[2] + tol && a[1] * a[2] <= a[0] + tol && a[2] * a[0] <= a[1] + tol;
}

InteractionContent alpha_from_eta(const DampingVector& eta) {
  const Vec3& e = eta.eta;
  for (double x : e) {
    if (!(std::abs(x) <= 1.0 + Tolerances::kCp)) {
      throw NotUnistochasticError("alpha_from_eta: |eta_k| exceeds 1");
    }
  }
  if (!in_unistochastic_region(eta, Tolerances::kUnistochastic)) {
    throw NotUnistochasticError("alpha_from_eta: eta violates the unistochastic inequalities");
  }

  // Solve for c_k = cos(2 alpha_k) from eta = (c2 c3, c1 c3, c1 c2).
  const double zero_tol = 1e-12;
  std::array<bool, 3> zero{};
  int zeros = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    zero[k] = std::abs(e[k]) <= zero_tol;
    zeros += zero[k] ? 1 : 0;
  }

  Vec3 c{};
  switch (zeros) {
    case 0: {
      // c_k^2 = eta_i eta_j / eta_k; c1 >= 0 and the other signs follow eta.
      const double c1 = std::sqrt(std::clamp(std::abs(e[1] * e[2] / e[0]), 0.0, 1.0));
      const double c2 = std::sqrt(std::clamp(std::abs(e[0] * e[2] / e[1]), 0.0, 1.0));
      const double c3 = std::sqrt(std::clamp(std::abs(e[0] * e[1] / e[2]), 0.0, 1.0));
      c = {c1, std::copysign(c2, e[2]), std::copysign(c3, e[1])};
      break;
    }
    case 2: {
      // Only eta_i survives: c_i = 0 and the remaining pair multiplies to eta_i.
      const std::size_t i = !zero[0] ? 0 : (!zero[1] ? 1 : 2);
      const std::size_t j = (i + 1) % 3;
      const std::size_t k = (i + 2) % 3;
      c[i] = 0.0;
      c[j] = 1.0;
      c[k] = e[i];
      break;
    }
    case 3:
      c = {0.0, 0.0, 1.0};
      break;
    default:
      // A single vanishing component forces a second one to vanish.
      throw NotUnistochasticError("alpha_from_eta: exactly one vanishing component");
  }

  InteractionContent out{{half_arccos(c[0]), half_arccos(c[1]), half_arccos(c[2])}, false};
  const auto back = eta_from_alpha(out.alpha).eta;
  if (max_abs_diff(back, e) > Tolerances::kRoundTrip) {
    throw NumericError("alpha_from_eta: inversion does not reproduce eta");
  }
  return out;
}

InteractionContent alpha_from_lambda(const SchmidtSpectrum& spectrum) {
  const auto& l = spectrum.coefficients;
  if (l.size() != 4) throw NotRealizableError("alpha_from_lambda: need four Schmidt coefficients");
  const double sum = std::accumulate(l.begin(), l.end(), 0.0);
  if (std::abs(sum - 4.0) > Tolerances::kRoundTrip) {
    throw NotRealizableError("alpha_from_lambda: coefficients must sum to 4");
  }
  if (std::all_of(l.begin(), l.end(), [](double x) { return std::abs(x - 1.0) <= 1e-8; })) {
    throw DegenerateError("alpha_from_lambda: (1,1,1,1) does not determine the interaction content");
  }

  const double p2 = l[0] + l[1] - 2.0;  // 2 eta_1
  const double p3 = l[0] + l[2] - 2.0;  // 2 eta_2
  const double p4 = l[0] + l[3] - 2.0;  // 2 eta_3
  const DampingVector eta{{p2 / 2.0, p3 / 2.0, p4 / 2.0}};

  InteractionContent out;
  const double zero_tol = 1e-12;
  if (std::abs(p2) <= zero_tol || std::abs(p3) <= zero_tol || std::abs(p4) <= zero_tol) {
    try {
      out = alpha_from_eta(eta);
    } catch (const NotUnistochasticError& e) {
      throw NotRealizableError(std::string("alpha_from_lambda: ") + e.what());
    }
  } else {
    const std::array<double, 3> w{p4 * p3 / (2.0 * p2), p4 * p2 / (2.0 * p3), p2 * p3 / (2.0 * p4)};
    Vec3 alpha{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (w[k] < -1e-10 || w[k] > 1.0 + 1e-10) {
        throw NotRealizableError("alpha_from_lambda: w outside [0, 1]");
      }
      alpha[k] = half_arccos(std::sqrt(std::clamp(w[k], 0.0, 1.0)));
    }
    out = {alpha, false};
  }

  const auto back = lambda_from_alpha(out.alpha).coefficients;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(back[k] - l[k]) > Tolerances::kRoundTrip) {
      throw NotRealizableError("alpha_from_lambda: no two-qubit gate has this Schmidt vector");
    }
  }
  out.canonical = in_weyl_chamber(out.alpha, Tolerances::kChamber);
  return out;
}

CanonicalForm interaction_content(const Matrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw DimensionError("interaction_content: need a 4x4 matrix");
  if (!is_unitary(u)) throw NotUnitaryError("interaction_content: matrix is not unitary");

  const cplx det = u.determinant();
  const Matrix special = u * std::polar(1.0, -std::arg(det) / 4.0);
  const Matrix& m = magic_basis();
  const Matrix w = m * special * m.adjoint();
  const Eigen::VectorXcd ev = eigenvalues(w * w.transpose());

  // Canonical(alpha) is diag(exp(i delta)) in the magic basis, so WW^T has
  // eigenvalues exp(2 i delta).
  std::array<double, 4> d{};
  for (std::size_t k = 0; k < 4; ++k) d[k] = std::arg(ev(static_cast<Eigen::Index>(k))) / 2.0;

  // det W = 1 makes sum(delta) a multiple of pi; pick the branch with sum zero.
  for (int iter = 0; iter < 2; ++iter) {
    const double s = std::accumulate(d.begin(), d.end(), 0.0);
    if (s > kHalf) {
      *std::max_element(d.begin(), d.end()) -= kPi;
    } else if (s < -kHalf) {
      *std::min_element(d.begin(), d.end()) += kPi;
    }
  }
  const double residual = std::accumulate(d.begin(), d.end(), 0.0);
  if (std::abs(residual) > 1e-6) {
    throw NumericError("interaction_content: eigenphase branch resolution failed");
  }
  for (auto& x : d) x -= residual / 4.0;

  const InteractionContent content = weyl_canonicalize(alpha_from_delta({d}));

  const auto predicted = lambda_from_alpha(content.alpha).coefficients;
  const auto measured = schmidt_spectrum(u, {2, 2}).coefficients;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(predicted[k] - measured[k]) > Tolerances::kSelfCheck) {
      throw NumericError("interaction_content: Schmidt spectrum self-check failed");
    }
  }
  return {content, delta_from_alpha(content.alpha)};
}

bool locally_equivalent(const Matrix& u, const Matrix& v) {
  const auto a = interaction_content(u).content.alpha;
  const auto b = interaction_content(v).content.alpha;
  return max_abs_diff(a, b) <= Tolerances::kLocalEquivalence;
}

PeClassification classify_pe(const Vec3& alpha) {
  const auto delta = delta_from_alpha(weyl_canonicalize(alpha).alpha).delta;
  std::array<double, 4> angle{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double t = std::fmod(2.0 * delta[k], 2.0 * kPi);
    angle[k] = t < 0.0 ? t + 2.0 * kPi : t;
  }
  std::sort(angle.begin(), angle.end());
  double widest = angle[0] + 2.0 * kPi - angle[3];
  for (std::size_t k = 1; k < 4; ++k) widest = std::max(widest, angle[k] - angle[k - 1]);

  // Points on the unit circle: the hull edge across the widest gap g lies at
  // distance |cos(g/2)| from the origin, on the far side when g > pi.
  PeClassification out;
  out.hull_distance = -std::cos(widest / 2.0);
  if (std::abs(out.hull_distance) <= Tolerances::kPeBoundary) {
    out.pe_class = PeClass::BoundaryPE;
  } else {
    out.pe_class = out.hull_distance < 0.0 ? PeClass::InteriorPE : PeClass::NotPE;
  }
  return out;
}

PeClassification classify_pe(const Matrix& u) { return classify_pe(interaction_content(u).content.alpha); }

bool in_pe_polytope(const Vec3& a, double tol) {
  return in_weyl_chamber(a, tol) && a[0] + a[1] >= kQuarter - tol && a[0] - a[1] <= kQuarter + tol &&
         a[1] + a[2] <= kQuarter + tol;
}

bool is_special_pe(const Vec3& a) {
  const double tol = Tolerances::kSpecialPe;
  return std::abs(a[0] - kQuarter) <= tol && a[1] >= -tol && a[1] <= kQuarter + tol && std::abs(a[2]) <= tol;
}

std::string pe_code(PeClass c) {
  switch (c) {
    case PeClass::NotPE:
      return "N";
    case PeClass::BoundaryPE:
      return "B";
    case PeClass::InteriorPE:
      return "Y";
  }
  return "N";
}

GateReport analyze_gate(const Matrix& u, Dims dims, std::string name) {
  GateReport r;
  r.name = std::move(name);
  r.dims = dims;
  r.unitarity_residual = unitarity_residual(u);
  r.spectrum = schmidt_spectrum(u, dims);
  r.schmidt_rank = schmidt_rank(r.spectrum);
  r.entropy = renyi_entropy(r.spectrum, 1.0);
  r.renyi2 = renyi_entropy(r.spectrum, 2.0);
  r.renyi4 = renyi_entropy(r.spectrum, 4.0);
  r.purity = purity(r.spectrum).purity;
  if (dims == Dims{2, 2}) {
    r.two_qubit = true;
    r.canonical = interaction_content(u);
    r.eta = eta_from_alpha(r.canonical.content.alpha);
    r.pe = classify_pe(r.canonical.content.alpha);
    r.special_pe = is_special_pe(r.canonical.content.alpha);
  }
  return r;
}

nlohmann::json to_json(const GateReport& r) {
  nlohmann::json j;
  if (!r.name.empty()) j["name"] = r.name;
  j["dims"] = {r.dims.a, r.dims.b};
  j["unitarity_residual"] = r.unitarity_residual;
  j["Lambda"] = r.spectrum.coefficients;
  j["schmidt_rank"] = r.schmidt_rank;
  j["entropy"] = {{"S", r.entropy}, {"S2", r.renyi2}, {"S4", r.renyi4}};
  j["purity"] = r.purity;
  if (r.two_qubit) {
    j["alpha"] = r.canonical.content.alpha;
    j["delta"] = r.canonical.delta.delta;
    j["eta"] = r.eta.eta;
    j["pe_class"] = pe_code(r.pe.pe_class);
    j["hull_distance"] = r.pe.hull_distance;
    j["spe"] = r.special_pe;
  }
  return j;
}

}  // namespace unigate
