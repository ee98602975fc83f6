#include "unigate/tensor.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "unigate/errors.hpp"

namespace unigate {

void ComplexMatrix::validate() const {
  if (values.rows() == 0 || values.cols() == 0) {
    throw DimensionError("matrix must have positive shape");
  }
  if (!dims) return;
  if (dims->a == 0 || dims->b == 0) throw DimensionError("dims must be positive");
  if (dims->total() != static_cast<std::size_t>(values.rows())) {
    throw DimensionError("dims " + std::to_string(dims->a) + "x" + std::to_string(dims->b) +
                         " do not match " + std::to_string(values.rows()) + " rows");
  }
}

Matrix tensor_product(const Matrix& a, const Matrix& b, std::size_t dimension_cap) {
  const auto rows = static_cast<std::size_t>(a.rows() * b.rows());
  const auto cols = static_cast<std::size_t>(a.cols() * b.cols());
  if (rows > dimension_cap || cols > dimension_cap) {
    throw DimensionError("tensor product of size " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds cap " + std::to_string(dimension_cap));
  }
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void require_square_bipartite(const Matrix& x, Dims dims, const char* what) {
  if (dims.a == 0 || dims.b == 0) throw DimensionError(std::string(what) + ": dims must be positive");
  if (x.rows() != x.cols()) throw DimensionError(std::string(what) + ": matrix must be square");
  if (static_cast<std::size_t>(x.rows()) != dims.total()) {
    throw DimensionError(std::string(what) + ": dims do not match matrix size");
  }
}

}  // namespace

Matrix partial_trace(const Matrix& x, Dims dims, Subsystem traced) {
  require_square_bipartite(x, dims, "partial_trace");
  const auto da = static_cast<Eigen::Index>(dims.a);
  const auto db = static_cast<Eigen::Index>(dims.b);
  if (traced == Subsystem::B) {
    Matrix out = Matrix::Zero(da, da);
    for (Eigen::Index m = 0; m < da; ++m)
      for (Eigen::Index n = 0; n < da; ++n)
        for (Eigen::Index mu = 0; mu < db; ++mu) out(m, n) += x(m * db + mu, n * db + mu);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index mu = 0; mu < db; ++mu)
    for (Eigen::Index nu = 0; nu < db; ++nu)
      for (Eigen::Index m = 0; m < da; ++m) out(mu, nu) += x(m * db + mu, m * db + nu);
  return out;
}

Matrix reshuffle(const Matrix& x, Dims dims) {
  require_square_bipartite(x, dims, "reshuffle");
  const auto da = static_cast<Eigen::Index>(dims.a);
  const auto db = static_cast<Eigen::Index>(dims.b);
  Matrix out(da * da, db * db);
  for (Eigen::Index m = 0; m < da; ++m)
    for (Eigen::Index n = 0; n < da; ++n)
      for (Eigen::Index mu = 0; mu < db; ++mu)
        for (Eigen::Index nu = 0; nu < db; ++nu)
          out(m * da + n, mu * db + nu) = x(m * db + mu, n * db + nu);
  return out;
}

Matrix unreshuffle(const Matrix& y, Dims dims) {
  const auto da = static_cast<Eigen::Index>(dims.a);
  const auto db = static_cast<Eigen::Index>(dims.b);
  if (da == 0 || db == 0 || y.rows() != da * da || y.cols() != db * db) {
    throw DimensionError("unreshuffle: expected a dimA^2 x dimB^2 matrix");
  }
  Matrix out(da * db, da * db);
  for (Eigen::Index m = 0; m < da; ++m)
    for (Eigen::Index n = 0; n < da; ++n)
      for (Eigen::Index mu = 0; mu < db; ++mu)
        for (Eigen::Index nu = 0; nu < db; ++nu)
          out(m * db + mu, n * db + nu) = y(m * da + n, mu * db + nu);
  return out;
}

Matrix fourier_matrix(std::size_t d) {
  if (d == 0) throw DomainError("fourier_matrix: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix f(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      // Reduce k*l modulo d first so the phase stays exact for large d.
      const auto kl = static_cast<double>((k * l) % n);
      f(k, l) = std::polar(scale, 2.0 * std::numbers::pi * kl / static_cast<double>(d));
    }
  }
  return f;
}

Matrix identity(std::size_t d) {
  return Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

bool is_unitary(const Matrix& u, double tol) { return unitarity_residual(u) <= tol; }

SvdResult svd(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> solver(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

RealVector singular_values(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> solver(x);
  return solver.singularValues();
}

HermitianEigenResult hermitian_eigen(const Matrix& h) {
  if (h.rows() != h.cols()) throw DimensionError("hermitian_eigen: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("hermitian_eigen: no convergence");
  // Eigen returns ascending order.
  return {solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
}

QrResult qr(const Matrix& x) {
  Eigen::HouseholderQR<Matrix> solver(x);
  Matrix q = solver.householderQ() * Matrix::Identity(x.rows(), x.rows());
  Matrix r = solver.matrixQR().triangularView<Eigen::Upper>();
  return {std::move(q), std::move(r)};
}

Eigen::VectorXcd eigenvalues(const Matrix& x) {
  if (x.rows() != x.cols()) throw DimensionError("eigenvalues: matrix must be square");
  Eigen::ComplexEigenSolver<Matrix> solver(x, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericError("eigenvalues: no convergence");
  return solver.eigenvalues();
}

}  // namespace unigate
