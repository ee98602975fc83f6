#pragma once

#include <string>
#include <vector>

#include "unigate/canonical.hpp"
#include "unigate/tensor.hpp"

namespace unigate {

enum class GateKind {
  Local,
  Cnot,
  CnotPrime,
  Dcnot,
  Swap,
  SqrtCnot,
  SqrtSwap,
  BGate,
  Fourier,
  GxorPlus,
  GxorMinus,
  Permutation,
  Canonical,
};

/// A named gate and its parameters. Unused fields are ignored by `build`.
struct GateId {
  GateKind kind = GateKind::Cnot;
  std::size_t n = 2;                     // local dimension for SWAP/Fourier/GXOR
  Matrix local_a, local_b;               // Local
  std::vector<std::size_t> permutation;  // Permutation: column j maps to row perm[j]
  Vec3 alpha{};                          // Canonical
};

/// Dense matrix of the gate, basis |0 0>, |0 1>, ... with the first factor
/// as control. DomainError for a permutation that is not a bijection of
/// 0..N^2-1 or for N < 2.
Matrix build(const GateId& id);

/// exp(i sum_k alpha_k sigma_k (x) sigma_k), diagonal in the magic basis.
Matrix canonical_gate(const Vec3& alpha);

/// Lowercase CLI spelling: cnot, cnot-prime, dcnot, swap[:N], sqrt-cnot,
/// sqrt-swap, b-gate, fourier[:N], gxor+:N, gxor-:N, canonical:a1,a2,a3.
/// ParseError for anything else.
GateId parse_gate_name(const std::string& name);

/// Bipartite split of a built gate.
Dims gate_dims(const GateId& id);

/// Canonical(alpha(U) / k): a k-th root with interaction content alpha / k.
Matrix kth_root(const Matrix& u, int k);

struct Table1Row {
  std::string name;
  std::string gate;  // CLI spelling used to build it
  GateReport report;
  // Printed reference values for the row; used to compare, never to fill.
  Vec3 alpha_reference;
  std::array<double, 4> delta_reference;
  std::array<double, 4> lambda_reference;
  std::size_t rank_reference = 0;
  Vec3 eta_reference;
  PeClass pe_reference;
  bool alpha_matches = false;
  // Printed delta follows from the printed alpha, and the computed delta
  // from the chamber representative of that alpha.
  bool delta_matches = false;
  bool lambda_matches = false;
  bool rank_matches = false;
  bool eta_matches = false;
  bool pe_matches = false;
  // Computed values confirmed by an SVD of the reshuffled matrix whenever the
  // printed reference disagrees.
  bool oracle_confirms = false;
  std::string note;
};

/// The eight reference gates: local, sqrt(CNOT), CNOT, B, DCNOT, sqrt(SWAP),
/// SWAP and the 4 x 4 Fourier matrix, all computed from their matrices.
std::vector<Table1Row> table1();

nlohmann::json to_json(const Table1Row& row);

}  // namespace unigate
