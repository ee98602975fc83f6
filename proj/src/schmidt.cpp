#include "unigate/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "unigate/errors.hpp"

namespace unigate {

double SchmidtSpectrum::total() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), 0.0);
}

SchmidtSpectrum make_spectrum(std::vector<double> coefficients) {
  for (auto& c : coefficients) c = std::max(c, 0.0);
  std::sort(coefficients.begin(), coefficients.end(), std::greater<>());
  const double sum = std::accumulate(coefficients.begin(), coefficients.end(), 0.0);
  if (!(sum > 0.0)) throw DomainError("Schmidt spectrum of a zero operator");
  std::vector<double> weights(coefficients.size());
  std::transform(coefficients.begin(), coefficients.end(), weights.begin(),
                 [sum](double c) { return c / sum; });
  return {std::move(coefficients), std::move(weights)};
}

SchmidtSpectrum schmidt_spectrum(const Matrix& u, Dims dims) {
  const RealVector sv = singular_values(reshuffle(u, dims));
  std::vector<double> coefficients(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index k = 0; k < sv.size(); ++k) coefficients[static_cast<std::size_t>(k)] = sv(k) * sv(k);
  return make_spectrum(std::move(coefficients));
}

Matrix SchmidtDecomposition::reconstruct() const {
  if (left_ops.empty()) return {};
  Matrix out = Matrix::Zero(left_ops[0].rows() * right_ops[0].rows(),
                            left_ops[0].cols() * right_ops[0].cols());
  for (std::size_t k = 0; k < left_ops.size(); ++k) {
    out += std::sqrt(spectrum.coefficients[k]) * tensor_product(left_ops[k], right_ops[k]);
  }
  return out;
}

SchmidtDecomposition schmidt_decomposition(const Matrix& u, Dims dims) {
  const Matrix ur = reshuffle(u, dims);
  const SvdResult dec = svd(ur);
  std::vector<double> coefficients(static_cast<std::size_t>(dec.singular_values.size()));
  for (Eigen::Index k = 0; k < dec.singular_values.size(); ++k) {
    coefficients[static_cast<std::size_t>(k)] = dec.singular_values(k) * dec.singular_values(k);
  }
  SchmidtDecomposition out{make_spectrum(coefficients), {}, {}};
  const auto da = static_cast<Eigen::Index>(dims.a);
  const auto db = static_cast<Eigen::Index>(dims.b);
  const std::size_t rank = schmidt_rank(out.spectrum);
  for (std::size_t k = 0; k < rank; ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    // U^R[(m,n),(mu,nu)] = sum_k s_k left[(m,n),k] conj(right[(mu,nu),k]), and
    // U^R[(m,n),(mu,nu)] = U[(m,mu),(n,nu)], so the factors are row-major reshapes.
    Matrix a(da, da);
    Matrix b(db, db);
    for (Eigen::Index m = 0; m < da; ++m)
      for (Eigen::Index n = 0; n < da; ++n) a(m, n) = dec.left(m * da + n, col);
    for (Eigen::Index mu = 0; mu < db; ++mu)
      for (Eigen::Index nu = 0; nu < db; ++nu) b(mu, nu) = std::conj(dec.right(mu * db + nu, col));
    out.left_ops.push_back(std::move(a));
    out.right_ops.push_back(std::move(b));
  }
  return out;
}

std::size_t schmidt_rank(const SchmidtSpectrum& s, double rank_tol) {
  return static_cast<std::size_t>(
      std::count_if(s.weights.begin(), s.weights.end(), [rank_tol](double w) { return w > rank_tol; }));
}

double renyi_entropy(const SchmidtSpectrum& s, double q) {
  if (!(q >= 0.0)) throw DomainError("renyi_entropy: q must be nonnegative");
  if (q == 0.0) return std::log(static_cast<double>(schmidt_rank(s)));
  if (q == 1.0) {
    double h = 0.0;
    for (double w : s.weights)
      if (w > 0.0) h -= w * std::log(w);
    return h;
  }
  double moment = 0.0;
  for (double w : s.weights)
    if (w > 0.0) moment += std::pow(w, q);
  return std::log(moment) / (1.0 - q);
}

PurityMeasures purity(const SchmidtSpectrum& s) {
  double r = 0.0;
  for (double w : s.weights) r += w * w;
  return {r, 1.0 - r, 1.0 / r};
}

std::optional<std::pair<Matrix, Matrix>> factor_product(const Matrix& u, Dims dims) {
  const SchmidtDecomposition dec = schmidt_decomposition(u, dims);
  const auto& lambda = dec.spectrum.coefficients;
  if (lambda.size() > 1 && lambda[1] >= Tolerances::kRank * dec.spectrum.total()) return std::nullopt;

  // Split sqrt(Lambda_1) so that U_a has Frobenius norm sqrt(dimA), as a unitary does.
  const double scale_a = std::sqrt(static_cast<double>(dims.a));
  Matrix ua = dec.left_ops[0] * scale_a;
  Matrix ub = dec.right_ops[0] * (std::sqrt(lambda[0]) / scale_a);

  Eigen::Index r = 0;
  Eigen::Index c = 0;
  ua.cwiseAbs().maxCoeff(&r, &c);
  const cplx phase = ua(r, c) / std::abs(ua(r, c));
  ua /= phase;
  ub *= phase;
  return std::make_pair(std::move(ua), std::move(ub));
}

}  // namespace unigate
