#pragma once

#include <complex>
#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "unigate/config.hpp"

namespace unigate {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Bipartite split of a dimension: the first factor is subsystem A.
struct Dims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const { return a * b; }
  bool operator==(const Dims&) const = default;
};

/// A dense complex matrix together with its optional bipartite split.
///
/// This is the value exchanged through files and the CLI; the numerical
/// routines work on bare `Matrix` values and take the split explicitly.
struct ComplexMatrix {
  Matrix values;
  std::optional<Dims> dims;

  /// Throws DimensionError if the split does not match the shape.
  void validate() const;
};

enum class Subsystem { A, B };

/// Kronecker product, row index i*rows(B)+k and column j*cols(B)+l.
Matrix tensor_product(const Matrix& a, const Matrix& b,
                      std::size_t dimension_cap = Tolerances::kDimensionCap);

/// Trace over subsystem `traced` of a square matrix on A (x) B.
Matrix partial_trace(const Matrix& x, Dims dims, Subsystem traced);

/// Realignment X^R[(m,n),(mu,nu)] = X[(m,mu),(n,nu)] for a square matrix on
/// A (x) B; the result has shape dims.a^2 x dims.b^2.
Matrix reshuffle(const Matrix& x, Dims dims);

/// Inverse of reshuffle: takes a dims.a^2 x dims.b^2 matrix back to A (x) B.
Matrix unreshuffle(const Matrix& y, Dims dims);

/// Unitary discrete Fourier matrix F[k,l] = exp(2 pi i k l / d) / sqrt(d).
Matrix fourier_matrix(std::size_t d);

Matrix identity(std::size_t d);

/// Frobenius norm of U^dag U - I.
double unitarity_residual(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = Tolerances::kUnitarity);

// Decompositions.

struct SvdResult {
  RealVector singular_values;  // descending
  Matrix left;                 // columns orthonormal
  Matrix right;                // columns orthonormal; X = left * S * right^dag
};

SvdResult svd(const Matrix& x);
RealVector singular_values(const Matrix& x);

struct HermitianEigenResult {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // columns, matching eigenvalues
};

/// Eigen-decomposition of a Hermitian matrix (only the lower triangle is read).
HermitianEigenResult hermitian_eigen(const Matrix& h);

struct QrResult {
  Matrix q;
  Matrix r;
};

QrResult qr(const Matrix& x);

/// Eigenvalues of a general square matrix, unordered.
Eigen::VectorXcd eigenvalues(const Matrix& x);

}  // namespace unigate
