#include "unigate/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unigate/errors.hpp"
#include "unigate/gates.hpp"
#include "unigate/matrix_io.hpp"
#include "unigate/schmidt.hpp"

namespace unigate {

namespace {

void require_environment_dims(const Matrix& u, Dims dims, const char* what) {
  if (dims.a == 0 || dims.b == 0) throw DimensionError(std::string(what) + ": dims must be positive");
  if (u.rows() != u.cols() || static_cast<std::size_t>(u.rows()) != dims.total()) {
    throw DimensionError(std::string(what) + ": unitary size does not match dims");
  }
}

}  // namespace

void validate_density_matrix(const Matrix& rho, std::size_t n) {
  const double tol = Tolerances::kState;
  if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != n) {
    throw DimensionError("density matrix has the wrong size");
  }
  if ((rho - rho.adjoint()).norm() > tol) throw DomainError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > tol) throw DomainError("density matrix does not have unit trace");
  const Matrix h = (rho + rho.adjoint()) / 2.0;
  if (hermitian_eigen(h).eigenvalues.minCoeff() < -tol) throw DomainError("density matrix is not positive");
}

Matrix env_channel_map(const Matrix& u, const Matrix& x, Dims dims) {
  require_environment_dims(u, dims, "env_channel_map");
  if (x.rows() != x.cols() || static_cast<std::size_t>(x.rows()) != dims.a) {
    throw DimensionError("env_channel_map: operator size does not match the system");
  }
  const Matrix env = identity(dims.b) / static_cast<double>(dims.b);
  return partial_trace(u * tensor_product(x, env) * u.adjoint(), dims, Subsystem::B);
}

Matrix env_channel_apply(const Matrix& u, const Matrix& rho, Dims dims) {
  require_environment_dims(u, dims, "env_channel_apply");
  if (!is_unitary(u)) throw NotUnitaryError("env_channel_apply: matrix is not unitary");
  validate_density_matrix(rho, dims.a);
  return env_channel_map(u, rho, dims);
}

Matrix choi_from_unitary(const Matrix& u, Dims dims) {
  require_environment_dims(u, dims, "choi_from_unitary");
  const Matrix r = reshuffle(u, dims);
  return r * r.adjoint() / static_cast<double>(dims.b);
}

std::vector<Matrix> kraus_from_unitary(const Matrix& u, Dims dims) {
  require_environment_dims(u, dims, "kraus_from_unitary");
  const SchmidtDecomposition dec = schmidt_decomposition(u, dims);
  std::vector<Matrix> out;
  out.reserve(dec.left_ops.size());
  for (std::size_t k = 0; k < dec.left_ops.size(); ++k) {
    out.push_back(std::sqrt(dec.spectrum.coefficients[k] / static_cast<double>(dims.b)) * dec.left_ops[k]);
  }
  return out;
}

Channel unistochastic_channel(const Matrix& u, Dims dims) {
  return {dims.a, choi_from_unitary(u, dims), kraus_from_unitary(u, dims)};
}

Matrix choi_from_kraus(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw DimensionError("choi_from_kraus: no Kraus operators");
  const Eigen::Index n = kraus[0].rows();
  Matrix d = Matrix::Zero(n * n, n * n);
  for (const Matrix& a : kraus) {
    // D[(a,i),(b,j)] = sum_k A[a,i] conj(A[b,j]) = vec(A) vec(A)^dag, row-major vec.
    Eigen::VectorXcd v(n * n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) v(r * n + c) = a(r, c);
    d += v * v.adjoint();
  }
  return d;
}

Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& rho) {
  if (kraus.empty()) throw DimensionError("apply_kraus: no Kraus operators");
  Matrix out = Matrix::Zero(kraus[0].rows(), kraus[0].rows());
  for (const Matrix& a : kraus) out += a * rho * a.adjoint();
  return out;
}

Matrix apply_choi(const Matrix& choi, const Matrix& rho) {
  const Eigen::Index n = rho.rows();
  if (rho.cols() != n || choi.rows() != n * n || choi.cols() != n * n) {
    throw DimensionError("apply_choi: Choi matrix and state sizes differ");
  }
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(a, b) += choi(a * n + i, b * n + j) * rho(i, j);
  return out;
}

double completeness_residual(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) return std::numeric_limits<double>::infinity();
  Matrix s = Matrix::Zero(kraus[0].cols(), kraus[0].cols());
  for (const Matrix& a : kraus) s += a.adjoint() * a;
  return (s - Matrix::Identity(s.rows(), s.cols())).norm();
}

const std::array<Matrix, 4>& pauli_matrices() {
  static const std::array<Matrix, 4> p = [] {
    const cplx i(0.0, 1.0);
    std::array<Matrix, 4> s;
    for (auto& m : s) m = Matrix::Zero(2, 2);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return p;
}

DampingVector pauli_eta(const PauliWeights& pw) {
  const auto& w = pw.w;
  return {{w[0] + w[1] - w[2] - w[3], w[0] - w[1] + w[2] - w[3], w[0] - w[1] - w[2] + w[3]}};
}

Channel pauli_channel(const PauliWeights& pw) {
  double sum = 0.0;
  for (double x : pw.w) {
    if (!(x >= -Tolerances::kAbsolute)) throw DomainError("pauli_channel: negative weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > Tolerances::kAbsolute) throw DomainError("pauli_channel: weights must sum to 1");
  Channel ch;
  ch.n = 2;
  for (std::size_t k = 0; k < 4; ++k) {
    if (pw.w[k] > 0.0) ch.kraus.push_back(std::sqrt(pw.w[k]) * pauli_matrices()[k]);
  }
  ch.choi = choi_from_kraus(ch.kraus);
  return ch;
}

BlochMap bloch_map(const Channel& ch) {
  if (ch.n != 2) throw DimensionError("bloch_map: needs a one-qubit channel");
  const auto& s = pauli_matrices();
  auto apply = [&ch](const Matrix& x) { return ch.kraus.empty() ? apply_choi(ch.choi, x) : apply_kraus(ch.kraus, x); };
  const Matrix half = Matrix::Identity(2, 2) / 2.0;
  if ((apply(half) - half).norm() > Tolerances::kState) {
    throw DomainError("bloch_map: channel is not bistochastic");
  }

  BlochMap out;
  for (int j = 0; j < 3; ++j) {
    const Matrix image = apply(s[static_cast<std::size_t>(j + 1)]);
    for (int i = 0; i < 3; ++i) {
      out.t(i, j) = (s[static_cast<std::size_t>(i + 1)] * image).trace().real() / 2.0;
    }
  }

  // Signed SVD: move reflections out of the orthogonal factors and into the
  // smallest singular value.
  Eigen::JacobiSVD<Eigen::Matrix3d> dec(out.t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d o1 = dec.matrixU();
  Eigen::Matrix3d o2 = dec.matrixV();
  Eigen::Vector3d sv = dec.singularValues();
  if (o1.determinant() < 0.0) {
    o1.col(2) *= -1.0;
    sv(2) *= -1.0;
  }
  if (o2.determinant() < 0.0) {
    o2.col(2) *= -1.0;
    sv(2) *= -1.0;
  }
  out.o1 = o1;
  out.o2 = o2;
  out.eta = {{sv(0), sv(1), sv(2)}};
  return out;
}

bool is_cp(const DampingVector& eta) {
  const auto& e = eta.eta;
  const double slack = Tolerances::kCp;
  const auto sq = [](double x) { return x * x; };
  return sq(1.0 + e[2]) + slack >= sq(e[0] + e[1]) && sq(1.0 - e[2]) + slack >= sq(e[0] - e[1]);
}

UnistochasticVerdict is_unistochastic(const DampingVector& eta) {
  if (!is_cp(eta)) throw DomainError("is_unistochastic: eta is not completely positive");
  UnistochasticVerdict v;
  v.unistochastic = in_unistochastic_region(eta);
  if (v.unistochastic) v.witness = canonical_gate(alpha_from_eta(eta).alpha);
  return v;
}

bool same_damping_class(const DampingVector& a, const DampingVector& b, double tol) {
  Vec3 x{std::abs(a.eta[0]), std::abs(a.eta[1]), std::abs(a.eta[2])};
  Vec3 y{std::abs(b.eta[0]), std::abs(b.eta[1]), std::abs(b.eta[2])};
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t k = 0; k < 3; ++k)
    if (std::abs(x[k] - y[k]) > tol) return false;
  // The sign of the product is only meaningful when no component vanishes.
  const double pa = a.eta[0] * a.eta[1] * a.eta[2];
  const double pb = b.eta[0] * b.eta[1] * b.eta[2];
  if (x[0] <= tol) return true;
  return (pa > 0.0) == (pb > 0.0);
}

nlohmann::json to_json(const Channel& ch) {
  nlohmann::json j;
  j["N"] = ch.n;
  j["choi"] = matrix_to_json(ch.choi);
  j["kraus"] = nlohmann::json::array();
  for (const Matrix& a : ch.kraus) j["kraus"].push_back(matrix_to_json(a));
  if (ch.n == 2) {
    try {
      j["eta"] = bloch_map(ch).eta.eta;
    } catch (const DomainError&) {
      // Not bistochastic: no damping vector.
    }
  }
  return j;
}

}  // namespace unigate
