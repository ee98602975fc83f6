#pragma once

#include <cstddef>

namespace unigate {

// Every numeric threshold used by the library lives here.
struct Tolerances {
  // Generic comparison, scaled by the matrix norm where one applies.
  static constexpr double kAbsolute = 1e-10;
  // Schmidt rank cut, relative to the sum of Schmidt coefficients.
  static constexpr double kRank = 1e-10;
  // Unitarity required of gate inputs.
  static constexpr double kUnitarity = 1e-8;
  // Density matrix Hermiticity / positivity / trace.
  static constexpr double kState = 1e-8;
  // Agreement of the Schmidt spectrum predicted from alpha with the SVD.
  static constexpr double kSelfCheck = 1e-6;
  // Weyl chamber membership slack when choosing an orbit representative.
  static constexpr double kChamber = 1e-9;
  // Componentwise agreement of canonical alpha for local equivalence.
  static constexpr double kLocalEquivalence = 1e-7;
  // |hull distance| at or below which a gate is a boundary perfect entangler.
  static constexpr double kPeBoundary = 1e-9;
  // Special perfect entangler segment membership.
  static constexpr double kSpecialPe = 1e-9;
  // Slack in the Fujiwara-Algoet inequalities.
  static constexpr double kCp = 1e-12;
  // Slack in the unistochastic inequalities.
  static constexpr double kUnistochastic = 1e-10;
  // Verification of eta_from_alpha(alpha_from_eta(eta)) and friends.
  static constexpr double kRoundTrip = 1e-8;
  // Largest dimension a tensor product may produce.
  static constexpr std::size_t kDimensionCap = 4096;
};

}  // namespace unigate
