#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unigate/tensor.hpp"

namespace unigate {

/// Operator Schmidt coefficients of a bipartite operator.
///
/// `coefficients` holds the unnormalized Lambda_k (squared singular values
/// of the reshuffled matrix, descending, summing to dimA*dimB for a unitary)
/// and `weights` the probability vector Lambda_k / sum(Lambda).
struct SchmidtSpectrum {
  std::vector<double> coefficients;
  std::vector<double> weights;

  double total() const;
  std::size_t size() const { return coefficients.size(); }
};

/// Builds a spectrum from unsorted nonnegative coefficients; sorts them and
/// normalizes by their sum.
SchmidtSpectrum make_spectrum(std::vector<double> coefficients);

/// Lambda_k = (k-th singular value of U^R)^2.
SchmidtSpectrum schmidt_spectrum(const Matrix& u, Dims dims);

/// U = sum_k sqrt(Lambda_k) left_ops[k] (x) right_ops[k], with both operator
/// families orthonormal in the Hilbert-Schmidt inner product. Only the
/// `schmidt_rank` nonvanishing terms are kept.
struct SchmidtDecomposition {
  SchmidtSpectrum spectrum;
  std::vector<Matrix> left_ops;
  std::vector<Matrix> right_ops;

  Matrix reconstruct() const;
};

SchmidtDecomposition schmidt_decomposition(const Matrix& u, Dims dims);

/// Number of weights above the rank tolerance.
std::size_t schmidt_rank(const SchmidtSpectrum& s, double rank_tol = Tolerances::kRank);

/// Renyi entropy S_q of the weights; q = 1 is the Shannon limit and q = 0
/// the log of the Schmidt rank. Throws DomainError for q < 0.
double renyi_entropy(const SchmidtSpectrum& s, double q);

inline double entanglement_entropy(const SchmidtSpectrum& s) { return renyi_entropy(s, 1.0); }

struct PurityMeasures {
  double purity;          // r = sum lambda^2
  double linear_entropy;  // E = 1 - r
  double ipr;             // R = 1 / r
};

PurityMeasures purity(const SchmidtSpectrum& s);

/// Returns (U_a, U_b) with U_a (x) U_b = U when U has Schmidt rank one. The
/// phase is split so that the largest-modulus entry of U_a is real positive.
std::optional<std::pair<Matrix, Matrix>> factor_product(const Matrix& u, Dims dims);

}  // namespace unigate
