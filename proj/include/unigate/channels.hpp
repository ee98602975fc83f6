#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "unigate/canonical.hpp"
#include "unigate/tensor.hpp"

namespace unigate {

/// A trace-preserving map on an N-level system, in Choi and Kraus form.
///
/// Choi layout: D[(a,i),(b,j)] = Phi(|i><j|)[a,b] with row index a*N+i, so
/// Phi(rho)[a,b] = sum_ij D[(a,i),(b,j)] rho[i,j] and Tr D = N.
struct Channel {
  std::size_t n = 0;
  Matrix choi;
  std::vector<Matrix> kraus;
};

/// Probabilities of identity, X, Y, Z.
struct PauliWeights {
  std::array<double, 4> w{};
};

/// Throws DomainError unless rho is an n x n density matrix to 1e-8.
void validate_density_matrix(const Matrix& rho, std::size_t n);

/// Tr_env[U (X (x) I_M / M) U^dag] for any X on the N-level system; dims
/// are (N, M) with the environment second. No validation of X.
Matrix env_channel_map(const Matrix& u, const Matrix& x, Dims dims);

/// env_channel_map after checking that U is unitary and rho a state.
Matrix env_channel_apply(const Matrix& u, const Matrix& rho, Dims dims);

/// Choi matrix U^R (U^R)^dag / M of the environment channel. For M = N its
/// eigenvalues are Lambda_k / N.
Matrix choi_from_unitary(const Matrix& u, Dims dims);

/// A_k = sqrt(Lambda_k / M) B'_k from the operator Schmidt decomposition.
std::vector<Matrix> kraus_from_unitary(const Matrix& u, Dims dims);

/// Choi matrix and Kraus operators of the environment channel.
Channel unistochastic_channel(const Matrix& u, Dims dims);

Matrix choi_from_kraus(const std::vector<Matrix>& kraus);
Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& rho);
Matrix apply_choi(const Matrix& choi, const Matrix& rho);

/// Frobenius norm of sum_k A_k^dag A_k - I.
double completeness_residual(const std::vector<Matrix>& kraus);

/// Kraus operators sqrt(w_k) sigma_k. DomainError off the simplex.
Channel pauli_channel(const PauliWeights& w);

/// eta of a Pauli channel: (w0+w1-w2-w3, w0-w1+w2-w3, w0-w1-w2+w3).
DampingVector pauli_eta(const PauliWeights& w);

/// Pauli matrices; index 0 is the identity.
const std::array<Matrix, 4>& pauli_matrices();

struct BlochMap {
  Eigen::Matrix3d t;   // t_ij = Tr[sigma_i Phi(sigma_j)] / 2
  Eigen::Matrix3d o1;  // t = o1 diag(eta) o2^T, both in SO(3)
  Eigen::Matrix3d o2;
  DampingVector eta;   // |eta1| >= |eta2| >= |eta3|, any negative sign on eta3
};

/// Bloch representation of a one-qubit bistochastic channel. DomainError
/// if N != 2 or Phi(I/2) differs from I/2 by more than 1e-8.
BlochMap bloch_map(const Channel& ch);

/// Fujiwara-Algoet conditions (1 +- eta3)^2 >= (eta1 +- eta2)^2.
bool is_cp(const DampingVector& eta);

struct UnistochasticVerdict {
  bool unistochastic = false;
  std::optional<Matrix> witness;  // Canonical(alpha) realizing eta
};

/// in_unistochastic_region(eta) with a witness Canonical(alpha_from_eta(eta))
/// whose Bloch matrix is diag(eta). DomainError if eta is not CP.
UnistochasticVerdict is_unistochastic(const DampingVector& eta);

/// Equality up to permutations and sign flips of pairs of components:
/// same sorted |eta| and the same sign of eta1 eta2 eta3.
bool same_damping_class(const DampingVector& a, const DampingVector& b, double tol);

nlohmann::json to_json(const Channel& ch);

}  // namespace unigate
