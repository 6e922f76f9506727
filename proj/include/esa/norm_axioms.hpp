#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esa/sign_vector.hpp"

namespace esa {

enum class Axiom { esa, sa, is };

std::string axiom_name(Axiom a);

// Outcome of one evaluation of a defining (in)equality.
template <class T>
struct AxiomCheck {
  bool pass = false;
  T original{};    // norm of the input coefficients
  T transformed{}; // norm after merging or spreading
  std::string witness;  // empty on pass
};

// ESA: merging a_k and a_{k+1} (1-based k) preserves the norm; requires
// a_k * a_{k+1} >= 0, else PreconditionError. SA: the merge never
// increases the norm. IS is not a merge; use check_spreading.
template <class T>
AxiomCheck<T> check_merge(NormKind norm, Axiom axiom, std::span<const T> a, std::size_t k);

// IS: placing a_i at strictly increasing positive indices keeps the norm.
template <class T>
AxiomCheck<T> check_spreading(NormKind norm, std::span<const T> a, std::span<const std::uint64_t> indices);

struct AxiomSuiteConfig {
  std::uint64_t seed = 20260401;
  std::size_t vectors = 1000;
  std::size_t max_support = 32;
  int max_coefficient = 3;
  std::size_t spreadings = 100;
};

struct AxiomSuiteReport {
  NormKind norm = NormKind::l1;
  AxiomSuiteConfig config;
  std::uint64_t esa_checks = 0;
  std::uint64_t sa_checks = 0;
  std::uint64_t is_checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

// Seeded random certificate: ESA at every legal merge position, SA at every
// position, IS for `spreadings` random index sets per vector.
AxiomSuiteReport run_axiom_suite(NormKind norm, const AxiomSuiteConfig& config = {});

}  // namespace esa
