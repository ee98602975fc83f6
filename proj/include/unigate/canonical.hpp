#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "unigate/schmidt.hpp"
#include "unigate/tensor.hpp"

namespace unigate {

using Vec3 = std::array<double, 3>;

/// Interaction content alpha of exp(i sum_k alpha_k sigma_k (x) sigma_k).
struct InteractionContent {
  Vec3 alpha{};
  bool canonical = false;  // true when alpha is the Weyl chamber representative
};

/// Eigenvalues delta of the interaction Hamiltonian, sum delta = 0.
struct HamiltonianSpectrum {
  std::array<double, 4> delta{};
};

/// Axes of the Bloch ellipsoid of a one-qubit bistochastic map.
struct DampingVector {
  Vec3 eta{};
};

/// The magic basis M; its rows are the Bell states
/// {-i psi+, phi+, -i phi-, psi-}.
const Matrix& magic_basis();

struct CanonicalForm {
  InteractionContent content;  // Weyl-canonical
  HamiltonianSpectrum delta;   // delta_from_alpha(content.alpha)
};

/// Interaction content of any U in U(4) through the magic basis.
///
/// The eigenphase branch choice is validated against the Schmidt spectrum of
/// U; NotUnitaryError for non-unitary input and NumericError when the check
/// fails.
CanonicalForm interaction_content(const Matrix& u);

/// Representative of alpha's orbit under pi/2 shifts of single components,
/// simultaneous sign flips of two components, and permutations, satisfying
///   pi/4 >= a1 >= a2 >= a3 >= 0, or
///   pi/2 >= a1 > pi/4 with pi/2 - a1 >= a2 >= a3 >= 0.
/// On the face a3 = 0 the two branches describe the same gate; the first
/// branch is preferred there.
InteractionContent weyl_canonicalize(const Vec3& alpha);

bool in_weyl_chamber(const Vec3& alpha, double tol = 0.0);

HamiltonianSpectrum delta_from_alpha(const Vec3& alpha);
/// DomainError when sum(delta) differs from zero by more than 1e-10.
Vec3 alpha_from_delta(const HamiltonianSpectrum& delta);

/// Schmidt coefficients of Canonical(alpha), sorted, summing to 4.
SchmidtSpectrum lambda_from_alpha(const Vec3& alpha);

/// eta = (cos2a2 cos2a3, cos2a1 cos2a3, cos2a1 cos2a2).
DampingVector eta_from_alpha(const Vec3& alpha);

/// Unsorted Schmidt coefficients in the identity / xx / yy / zz slots:
/// (1+e1+e2+e3, 1+e1-e2-e3, 1-e1+e2-e3, 1-e1-e2+e3).
std::array<double, 4> lambda_from_eta(const DampingVector& eta);

/// eta1 eta2 eta3 >= 0 and, for |eta|, eta1 eta2 <= eta3, eta2 eta3 <= eta1,
/// eta3 eta1 <= eta2, each with slack `tol`. Sign flips of two components
/// are local rotations, so the inequalities are applied to the
/// positive-octant representative; for eta >= 0 this is the literal test.
bool in_unistochastic_region(const DampingVector& eta, double tol = Tolerances::kUnistochastic);

/// Some alpha with eta_from_alpha(alpha) == eta. NotUnistochasticError
/// outside the unistochastic region, NumericError if verification fails.
InteractionContent alpha_from_eta(const DampingVector& eta);

/// Interaction content in [0, pi/4]^3 reproducing the sorted Schmidt vector.
/// DegenerateError for (1,1,1,1), NotRealizableError when no two-qubit gate
/// has this spectrum.
InteractionContent alpha_from_lambda(const SchmidtSpectrum& spectrum);

bool locally_equivalent(const Matrix& u, const Matrix& v);

enum class PeClass { NotPE, BoundaryPE, InteriorPE };

struct PeClassification {
  PeClass pe_class = PeClass::NotPE;
  // Signed distance from the origin to the convex hull of {exp(2 i delta_k)}:
  // negative inside, positive outside.
  double hull_distance = 0.0;
};

PeClassification classify_pe(const Vec3& alpha);
PeClassification classify_pe(const Matrix& u);

/// Membership of a canonical alpha in the perfect-entangler polytope with
/// vertices L, M, Q, N, P and DCNOT, as the half-spaces
/// a1 + a2 >= pi/4, a1 - a2 <= pi/4, a2 + a3 <= pi/4.
bool in_pe_polytope(const Vec3& canonical_alpha, double tol = 0.0);

/// True on the segment alpha = (pi/4, s, 0), s in [0, pi/4].
bool is_special_pe(const Vec3& canonical_alpha);

/// "N", "B" or "Y".
std::string pe_code(PeClass c);

/// Full invariant report of a gate, the schema shared by `analyze` and
/// `table1`. Two-qubit fields are only filled for 4x4 gates on 2 x 2.
struct GateReport {
  std::string name;
  Dims dims;
  double unitarity_residual = 0.0;
  SchmidtSpectrum spectrum;
  std::size_t schmidt_rank = 0;
  double entropy = 0.0;
  double renyi2 = 0.0;
  double renyi4 = 0.0;
  double purity = 0.0;
  bool two_qubit = false;
  CanonicalForm canonical;
  DampingVector eta;
  PeClassification pe;
  bool special_pe = false;
};

GateReport analyze_gate(const Matrix& u, Dims dims, std::string name = {});

nlohmann::json to_json(const GateReport& r);

}  // namespace unigate
