#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "unigate/canonical.hpp"
#include "unigate/channels.hpp"
#include "unigate/ensembles.hpp"
#include "unigate/gates.hpp"
#include "unigate/schmidt.hpp"

using namespace unigate;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("reshuffle is a Frobenius isometry") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix x = testing::random_unitary(6, 200, s) + testing::random_unitary(6, 201, s);
    CHECK(std::abs(reshuffle(x, {2, 3}).norm() - x.norm()) < 1e-12);
  }
}

TEST_CASE("partial trace is linear and trace preserving") {
  const Matrix x = testing::random_unitary(6, 210), y = testing::random_unitary(6, 211);
  const cplx a(0.3, -1.2);
  for (Subsystem s : {Subsystem::A, Subsystem::B}) {
    const Matrix lhs = partial_trace(x + a * y, {2, 3}, s);
    CHECK(testing::max_abs(lhs - partial_trace(x, {2, 3}, s) - a * partial_trace(y, {2, 3}, s)) < 1e-12);
    CHECK(std::abs(partial_trace(x, {2, 3}, s).trace() - x.trace()) < 1e-12);
  }
}

TEST_CASE("eigenvectors and singular vectors are orthonormal") {
  const Matrix x = testing::random_unitary(7, 220) * 2.0 + testing::random_unitary(7, 221);
  const Matrix h = x + x.adjoint();
  const auto e = hermitian_eigen(h);
  CHECK(testing::max_abs(e.eigenvectors.adjoint() * e.eigenvectors - Matrix::Identity(7, 7)) < 1e-10);
  const auto s = svd(x);
  CHECK(testing::max_abs(s.left.adjoint() * s.left - Matrix::Identity(7, 7)) < 1e-10);
  CHECK(testing::max_abs(s.right.adjoint() * s.right - Matrix::Identity(7, 7)) < 1e-10);
}

TEST_CASE("Schmidt spectrum is invariant under local unitaries") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix u = testing::random_unitary(4, 230, s);
    const Matrix l = tensor_product(testing::random_unitary(2, 231, s), testing::random_unitary(2, 232, s));
    const Matrix r = tensor_product(testing::random_unitary(2, 233, s), testing::random_unitary(2, 234, s));
    const auto a = schmidt_spectrum(u, {2, 2}).coefficients;
    const auto b = schmidt_spectrum(l * u * r, {2, 2}).coefficients;
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-8);
  }
}

TEST_CASE("entropy monotonicity, bounds and the linear entropy identity") {
  for (std::size_t n : {2u, 3u}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const SchmidtSpectrum sp = schmidt_spectrum(testing::random_unitary(n * n, 240 + n, s), {n, n});
      double prev = 1e300;
      for (double q : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double sq = renyi_entropy(sp, q);
        CHECK(sq <= prev + 1e-12);
        prev = sq;
      }
      const double s1 = entanglement_entropy(sp);
      CHECK(s1 >= 0.0);
      CHECK(s1 <= 2 * std::log(static_cast<double>(n)) + 1e-12);
      const PurityMeasures p = purity(sp);
      CHECK(p.purity >= 1.0 / static_cast<double>(n * n) - 1e-12);
      CHECK(p.purity <= 1.0 + 1e-12);
      CHECK(std::abs(p.linear_entropy - (1 - std::exp(-renyi_entropy(sp, 2.0)))) < 1e-12);
    }
  }
}

TEST_CASE("every built gate is unitary") {
  for (const char* name : {"local", "cnot", "cnot-prime", "dcnot", "sqrt-cnot", "sqrt-swap", "b-gate", "swap:4",
                           "fourier:3", "gxor+:5", "gxor-:5", "canonical:0.1,0.2,0.3"})
    CHECK(unitarity_residual(build(parse_gate_name(name))) < 1e-12);
}

TEST_CASE("canonical round trip for 1000 random alpha") {
  CounterRng rng(250, 0);
  for (int t = 0; t < 1000; ++t) {
    const Vec3 a{rng.uniform() * 4 - 2, rng.uniform() * 4 - 2, rng.uniform() * 4 - 2};
    const Vec3 got = interaction_content(canonical_gate(a)).content.alpha;
    const Vec3 want = weyl_canonicalize(a).alpha;
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-7);
  }
}

TEST_CASE("hull oracle and polytope agree on Haar samples") {
  const EnsembleSpec spec{EnsembleKind::Cue, 4, 10000, 260};
  std::size_t compared = 0;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const CanonicalForm cf = interaction_content(sample_unitary(spec, i));
    const PeClassification pe = classify_pe(cf.content.alpha);
    if (std::abs(pe.hull_distance) <= 1e-6) continue;
    ++compared;
    const bool hull_in = pe.pe_class == PeClass::InteriorPE;
    if (hull_in != in_pe_polytope(cf.content.alpha)) FAIL("disagreement at sample " << i);
  }
  CHECK(compared > 9900);
}

TEST_CASE("Schmidt vector from eta") {
  CounterRng rng(270, 0);
  for (int t = 0; t < 200; ++t) {
    const Vec3 a{rng.uniform() * 3, rng.uniform() * 3, rng.uniform() * 3};
    const auto e = eta_from_alpha(a).eta;
    std::array<double, 4> l{1 + e[2] + (e[0] + e[1]), 1 + e[2] - (e[0] + e[1]), 1 - e[2] + (e[0] - e[1]),
                            1 - e[2] - (e[0] - e[1])};
    std::sort(l.begin(), l.end(), std::greater<>());
    const auto ref = lambda_from_alpha(a).coefficients;
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(l[k] - ref[k]) < 1e-10);
  }
}

TEST_CASE("unistochastic channels are bistochastic") {
  const EnsembleSpec spec{EnsembleKind::Cue, 9, 1000, 280};
  double worst = 0.0;
  const Matrix mixed = Matrix::Identity(3, 3) / 3.0;
  for (std::size_t i = 0; i < spec.count; ++i)
    worst = std::max(worst, testing::max_abs(env_channel_map(sample_unitary(spec, i), mixed, {3, 3}) - mixed));
  CHECK(worst < 1e-12);
}

TEST_CASE("k-unistochastic Choi matrix for an environment of two qubits") {
  const Matrix u = testing::random_unitary(8, 290);
  const Dims dims{2, 4};
  Matrix oracle = Matrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j) = 1.0;
      const Matrix out = env_channel_map(u, e, dims);
      for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b) oracle(a * 2 + i, b * 2 + j) = out(a, b);
    }
  CHECK(testing::max_abs(choi_from_unitary(u, dims) - oracle) < 1e-10);
}

TEST_CASE("purity statistics are invariant under left multiplication") {
  const Matrix v = testing::random_unitary(4, 300);
  const EnsembleSpec a{EnsembleKind::Cue, 4, 5000, 301};
  const EnsembleSpec b{EnsembleKind::Cue, 4, 5000, 302};
  Histogram ha(0, 1, 20), hb(0, 1, 20);
  for (std::size_t i = 0; i < a.count; ++i) {
    ha.add(purity(schmidt_spectrum(sample_unitary(a, i), {2, 2})).purity);
    hb.add(purity(schmidt_spectrum(v * sample_unitary(b, i), {2, 2})).purity);
  }
  CHECK(chi_square_two_sample(ha.counts, hb.counts).p_value > 0.001);
}

TEST_CASE("alpha density vanishes exactly on coincidence planes") {
  CounterRng rng(310, 0);
  for (int t = 0; t < 100; ++t) {
    const double x = rng.uniform() * kPi - kPi / 2, y = rng.uniform() * kPi - kPi / 2;
    CHECK(pdf_alpha({x, y, rng.uniform()}) >= 0.0);
    CHECK(pdf_alpha({x, x, y}) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(pdf_alpha({x, y, -y}) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  }
}

TEST_CASE("Renyi-0 entropy of Haar gates is ln N^2") {
  for (std::size_t n : {2u, 3u}) {
    const auto e = mc_mean_entropy(n, 0.0, 100, 320, 2);
    CHECK(e.mean == doctest::Approx(2 * std::log(static_cast<double>(n))).epsilon(1e-12));
  }
}
