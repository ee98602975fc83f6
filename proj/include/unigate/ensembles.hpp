#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unigate/canonical.hpp"
#include "unigate/rng.hpp"
#include "unigate/stats.hpp"
#include "unigate/tensor.hpp"

namespace unigate {

enum class EnsembleKind { Cue, Scue, Coe };

/// "cue", "scue" or "coe"; ParseError otherwise.
EnsembleKind parse_ensemble(const std::string& name);
std::string ensemble_name(EnsembleKind kind);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Cue;
  std::size_t dim = 4;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

/// Haar unitary of size d: complex Ginibre matrix, QR, and columns of Q
/// multiplied by the phases of diag(R).
Matrix haar_unitary(std::size_t d, CounterRng& rng);

/// Sample `index` of the ensemble, drawn from substream (seed, index).
/// SCUE removes the determinant phase; COE returns U U^T of an SCUE sample.
Matrix sample_unitary(const EnsembleSpec& spec, std::size_t index);

// Densities on the interaction content.

/// (2/pi) prod_{i<j} |sin 2(a_i + a_j)| |sin 2(a_i - a_j)|, normalized over
/// the cube [-pi/2, pi/2]^3.
double pdf_alpha(const Vec3& alpha);

/// Density of the Weyl-chamber representative: 192 pdf_alpha inside the
/// chamber, zero outside. Integrates to one over the chamber.
double pdf_alpha_chamber(const Vec3& alpha);

/// Density of eta = (c2 c3, c1 c3, c1 c2), c_k = cos 2 alpha_k, taken with
/// absolute values and a uniformly random order, on the region
/// eta_k > 0, eta_i eta_j < eta_k. Obtained from pdf_alpha_chamber by the
/// change of variables with |d eta / d alpha| = 16 prod |s_k c_k|.
/// DomainError on the boundary or outside.
double pdf_eta(const DampingVector& eta);

/// Unnormalized COE(4) eigenphase density with Theta_4 = -(T1 + T2 + T3):
/// product of the six |e^{i Theta_m} - e^{i Theta_n}|.
double coe4_weight(const Vec3& theta);

/// Integral of coe4_weight over [-pi, pi]^3, exactly 256 pi.
double coe4_normalization();

/// coe4_weight / coe4_normalization().
double pdf_coe4_marginal(const Vec3& theta);

/// Eigenphases (T1, T2, T3) of COE(4) sample `index`, in (-pi, pi] and in a
/// uniformly random order drawn from the same substream.
Vec3 coe4_phase_triple(std::uint64_t seed, std::size_t index);

// Estimators. Every one is a deterministic function of its arguments; the
// thread count only changes the speed.

struct PurityResult {
  EstimateWithCI mean;
  Histogram hist;
  std::optional<EstimateWithCI> fast_path;  // N = 2: r = (1 + |eta|^2) / 4
};

/// Purity r = sum lambda^2 over SCUE(4) samples for N = 2 and CUE(N^2)
/// samples otherwise; histogram over [0, 1] with `bins` bins.
PurityResult mc_purity(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t threads = 1,
                       std::size_t bins = 50);

/// P(r) of two-qubit gates from quadrature of pdf_alpha_chamber: the
/// chamber is cut into `cells`^3 boxes and each Gauss node's weight is
/// deposited in the purity bin of r = (1 + |eta|^2) / 4. Returns the
/// density per bin over [0, 1].
std::vector<double> purity_density_curve(std::size_t bins = 50, std::size_t cells = 48);

struct PeFraction {
  EstimateWithCI fraction;  // boundary or interior
  std::size_t boundary = 0;
  std::size_t interior = 0;
};

PeFraction mc_pe_fraction(std::size_t samples, std::uint64_t seed, std::size_t threads = 1);

struct Volumes {
  double v_w = 0.0;   // pdf_alpha over the chamber, = 1/192
  double v_pe = 0.0;  // pdf_alpha over the perfect-entangler polytope
  double ratio = 0.0;
};

/// Adaptive quadrature; NumericError on non-convergence.
Volumes integrate_volumes();

/// Mean Renyi entropies S_q of the Schmidt spectrum of CUE(N^2) samples, one
/// estimate per q, all from the same samples.
std::vector<EstimateWithCI> mc_mean_entropies(std::size_t n, const std::vector<double>& qs, std::size_t samples,
                                              std::uint64_t seed, std::size_t threads = 1);

EstimateWithCI mc_mean_entropy(std::size_t n, double q, std::size_t samples, std::uint64_t seed,
                               std::size_t threads = 1);

/// sum_{k=2}^{N^2} 1/k, the mean entropy of a random pure state of size N^2.
double random_vector_mean_entropy(std::size_t n);

/// Large-N offset c_q in <S_q> ~ 2 ln N - c_q for q = 1, 2, 4.
double entropy_offset(double q);

/// One row of the sample CSV.
struct SampleRecord {
  std::size_t index = 0;
  double r = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  bool two_qubit = false;
  Vec3 alpha{};
  Vec3 eta{};
  PeClass pe = PeClass::NotPE;
};

/// dim must be a perfect square N^2; two-qubit fields only for dim 4.
std::vector<SampleRecord> sample_records(const EnsembleSpec& spec, std::size_t threads = 1);

/// `index,r,S1,S2,alpha1,alpha2,alpha3,eta1,eta2,eta3,pe`, 17 significant
/// digits; two-qubit columns are empty for other sizes.
std::string records_to_csv(const std::vector<SampleRecord>& records);

/// Chi-square of canonical alpha from SCUE(4) samples against
/// pdf_alpha_chamber on `bins`^3 cells of the chamber's bounding box.
ChiSquareResult alpha_goodness_of_fit(std::size_t samples, std::uint64_t seed, std::size_t threads = 1,
                                      std::size_t bins = 20);

/// Chi-square of COE(4) eigenphase triples against pdf_coe4_marginal on
/// `bins`^3 cells of [-pi, pi]^3.
ChiSquareResult coe_goodness_of_fit(std::size_t samples, std::uint64_t seed, std::size_t threads = 1,
                                    std::size_t bins = 20);

/// Histogram of the singular values of U^R over CUE(N^2) samples.
Histogram singular_value_histogram(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t threads = 1,
                                   std::size_t bins = 50);

}  // namespace unigate
