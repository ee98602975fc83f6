#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "unigate/canonical.hpp"
#include "unigate/channels.hpp"
#include "unigate/errors.hpp"
#include "unigate/gates.hpp"

using namespace unigate;

namespace {

constexpr double kPi = std::numbers::pi;

// exp(i H) for H = sum alpha_k sigma_k (x) sigma_k by Hermitian eigensolve.
Matrix expm_oracle(const Vec3& alpha) {
  const auto& s = pauli_matrices();
  Matrix h = Matrix::Zero(4, 4);
  for (std::size_t k = 0; k < 3; ++k) h += alpha[k] * tensor_product(s[k + 1], s[k + 1]);
  const HermitianEigenResult e = hermitian_eigen(h);
  Eigen::VectorXcd ph(4);
  for (Eigen::Index k = 0; k < 4; ++k) ph(k) = std::polar(1.0, e.eigenvalues(k));
  return e.eigenvectors * ph.asDiagonal() * e.eigenvectors.adjoint();
}

Vec3 random_chamber_point(CounterRng& rng) {
  for (;;) {
    Vec3 a{rng.uniform() * kPi / 2, rng.uniform() * kPi / 4, rng.uniform() * kPi / 4};
    if (in_weyl_chamber(a)) return a;
  }
}

void check_close(const Vec3& a, const Vec3& b, double tol) {
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(a[k] - b[k]) < tol);
}

}  // namespace

TEST_CASE("canonical gate agrees with the matrix exponential") {
  CounterRng rng(1, 0);
  for (int t = 0; t < 20; ++t) {
    const Vec3 a{rng.uniform() * 3 - 1.5, rng.uniform() * 3 - 1.5, rng.uniform() * 3 - 1.5};
    CHECK(testing::max_abs(canonical_gate(a) - expm_oracle(a)) < 1e-12);
  }
}

TEST_CASE("magic basis is unitary") { CHECK(is_unitary(magic_basis())); }

TEST_CASE("interaction content survives local dressing") {
  CounterRng rng(2, 0);
  for (std::uint64_t t = 0; t < 50; ++t) {
    const Vec3 a = random_chamber_point(rng);
    const Matrix l1 = tensor_product(testing::random_unitary(2, 100, t), testing::random_unitary(2, 101, t));
    const Matrix l2 = tensor_product(testing::random_unitary(2, 102, t), testing::random_unitary(2, 103, t));
    const Matrix u = std::polar(1.0, 0.3 * static_cast<double>(t)) * l1 * canonical_gate(a) * l2;
    const CanonicalForm cf = interaction_content(u);
    CHECK(cf.content.canonical);
    check_close(cf.content.alpha, a, 1e-8);
  }
}

TEST_CASE("Weyl canonicalization is orbit invariant") {
  CounterRng rng(3, 0);
  for (int t = 0; t < 100; ++t) {
    const Vec3 a{rng.uniform() * 6 - 3, rng.uniform() * 6 - 3, rng.uniform() * 6 - 3};
    const Vec3 c = weyl_canonicalize(a).alpha;
    CHECK(in_weyl_chamber(c, 1e-12));
    check_close(weyl_canonicalize(c).alpha, c, 1e-12);
    check_close(weyl_canonicalize({a[1], a[0] + kPi / 2, a[2]}).alpha, c, 1e-9);
    check_close(weyl_canonicalize({-a[0], -a[1], a[2]}).alpha, c, 1e-9);
    check_close(weyl_canonicalize({a[2], -a[1], -a[0]}).alpha, c, 1e-9);
    // Same gate up to locals and phase.
    CHECK(locally_equivalent(canonical_gate(a), canonical_gate(c)));
  }
}

TEST_CASE("Schmidt coefficients from alpha match the SVD") {
  CounterRng rng(4, 0);
  for (int t = 0; t < 30; ++t) {
    const Vec3 a = random_chamber_point(rng);
    const auto svd_l = schmidt_spectrum(canonical_gate(a), {2, 2}).coefficients;
    const auto alpha_l = lambda_from_alpha(a).coefficients;
    auto eta_l = lambda_from_eta(eta_from_alpha(a));
    std::sort(eta_l.begin(), eta_l.end(), std::greater<>());
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(svd_l[k] - alpha_l[k]) < 1e-10);
      CHECK(std::abs(svd_l[k] - eta_l[k]) < 1e-10);
    }
  }
}

TEST_CASE("delta and alpha convert both ways") {
  const Vec3 a{0.7, 0.3, 0.1};
  const auto d = delta_from_alpha(a);
  double sum = 0;
  for (double x : d.delta) sum += x;
  CHECK(std::abs(sum) < 1e-15);
  check_close(alpha_from_delta(d), a, 1e-15);
  CHECK_THROWS_AS(alpha_from_delta(HamiltonianSpectrum{{1, 0, 0, 0}}), DomainError);
}

TEST_CASE("alpha from eta reproduces eta") {
  CounterRng rng(5, 0);
  for (int t = 0; t < 50; ++t) {
    const DampingVector eta = eta_from_alpha(random_chamber_point(rng));
    check_close(eta_from_alpha(alpha_from_eta(eta).alpha).eta, eta.eta, 1e-8);
  }
  check_close(eta_from_alpha(alpha_from_eta({{0, 0, 0}}).alpha).eta, {0, 0, 0}, 1e-12);
  check_close(eta_from_alpha(alpha_from_eta({{0.5, 0, 0}}).alpha).eta, {0.5, 0, 0}, 1e-12);
  CHECK_THROWS_AS(alpha_from_eta({{0.5, 0.5, 0}}), NotUnistochasticError);
  CHECK_THROWS_AS(alpha_from_eta({{-1.0 / 3, -1.0 / 3, -1.0 / 3}}), NotUnistochasticError);
}

TEST_CASE("alpha from the Schmidt vector") {
  CounterRng rng(6, 0);
  for (int t = 0; t < 30; ++t) {
    const Vec3 a{rng.uniform() * kPi / 4, rng.uniform() * kPi / 4, rng.uniform() * kPi / 4};
    const SchmidtSpectrum s = lambda_from_alpha(a);
    const Vec3 back = alpha_from_lambda(s).alpha;
    const auto again = lambda_from_alpha(back).coefficients;
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(again[k] - s.coefficients[k]) < 1e-8);
  }
  CHECK_THROWS_AS(alpha_from_lambda(make_spectrum({1, 1, 1, 1})), DegenerateError);
  CHECK_THROWS_AS(alpha_from_lambda(make_spectrum({2, 1, 1, 0})), NotRealizableError);
}

TEST_CASE("perfect entangler classes of named gates") {
  CHECK(classify_pe(build(parse_gate_name("cnot"))).pe_class == PeClass::BoundaryPE);
  CHECK(classify_pe(build(parse_gate_name("dcnot"))).pe_class == PeClass::BoundaryPE);
  CHECK(classify_pe(build(parse_gate_name("b-gate"))).pe_class == PeClass::InteriorPE);
  CHECK(classify_pe(build(parse_gate_name("swap"))).pe_class == PeClass::NotPE);
  CHECK(classify_pe(build(parse_gate_name("sqrt-cnot"))).pe_class == PeClass::NotPE);
  CHECK(pe_code(PeClass::BoundaryPE) == "B");
  CHECK(is_special_pe({kPi / 4, 0.3, 0}));
  CHECK_FALSE(is_special_pe({kPi / 4, 0.3, 0.1}));
}

TEST_CASE("hull test agrees with the polytope inequalities") {
  CounterRng rng(7, 0);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const Vec3 a = random_chamber_point(rng);
    const bool in_strict = in_pe_polytope(a, -1e-6);
    const bool out_strict = !in_pe_polytope(a, 1e-6);
    if (!in_strict && !out_strict) continue;
    const PeClass c = classify_pe(a).pe_class;
    CHECK((c == PeClass::InteriorPE) == in_strict);
    ++checked;
  }
  CHECK(checked > 1900);
}

TEST_CASE("local equivalence") {
  CHECK(locally_equivalent(build(parse_gate_name("cnot")), build(parse_gate_name("cnot-prime"))));
  CHECK_FALSE(locally_equivalent(build(parse_gate_name("cnot")), build(parse_gate_name("swap"))));
}

TEST_CASE("non-unitary input is rejected") {
  Matrix m = Matrix::Identity(4, 4);
  m(0, 1) = 0.2;
  CHECK_THROWS_AS(interaction_content(m), NotUnitaryError);
}
