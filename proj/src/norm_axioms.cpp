#include "esa/norm_axioms.hpp"

#include <random>
#include <sstream>

namespace esa {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::esa: return "ESA";
    case Axiom::sa: return "SA";
    default: return "IS";
  }
}

namespace {

template <class T>
std::string describe(std::span<const T> a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

}  // namespace

template <class T>
AxiomCheck<T> check_merge(NormKind norm, Axiom axiom, std::span<const T> a, std::size_t k) {
  if (axiom == Axiom::is) throw PreconditionError("IS is checked with check_spreading");
  if (k < 1 || k >= a.size()) throw PreconditionError("merge position out of range");
  const T& left = a[k - 1];
  const T& right = a[k];
  if (axiom == Axiom::esa && left * right < T(0))
    throw PreconditionError("ESA merge needs a_k * a_{k+1} >= 0");
  std::vector<T> merged;
  merged.reserve(a.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == k) continue;
    merged.push_back(i == k - 1 ? T(left + right) : a[i]);
  }
  AxiomCheck<T> out;
  out.original = dense_norm<T>(norm, a);
  out.transformed = dense_norm<T>(norm, std::span<const T>(merged));
  out.pass = axiom == Axiom::esa ? out.transformed == out.original : out.transformed <= out.original;
  if (!out.pass) {
    std::ostringstream os;
    os << axiom_name(axiom) << " " << norm_name(norm) << " merge at " << k << " of " << describe(a);
    out.witness = os.str();
  }
  return out;
}

template <class T>
AxiomCheck<T> check_spreading(NormKind norm, std::span<const T> a, std::span<const std::uint64_t> indices) {
  if (indices.size() != a.size()) throw PreconditionError("one index per coefficient");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] == 0) throw PreconditionError("indices are 1-based");
    if (i && indices[i] <= indices[i - 1]) throw PreconditionError("indices must increase strictly");
  }
  RunVector<T> spread;
  for (std::size_t i = 0; i < a.size(); ++i) spread.append(indices[i], 1, a[i]);
  AxiomCheck<T> out;
  out.original = dense_norm<T>(norm, a);
  out.transformed = esa::norm(norm, spread);
  out.pass = out.original == out.transformed;
  if (!out.pass) out.witness = "IS " + norm_name(norm) + " spreading of " + describe(a);
  return out;
}

template AxiomCheck<std::int64_t> check_merge(NormKind, Axiom, std::span<const std::int64_t>, std::size_t);
template AxiomCheck<Rational> check_merge(NormKind, Axiom, std::span<const Rational>, std::size_t);
template AxiomCheck<std::int64_t> check_spreading(NormKind, std::span<const std::int64_t>,
                                                  std::span<const std::uint64_t>);
template AxiomCheck<Rational> check_spreading(NormKind, std::span<const Rational>, std::span<const std::uint64_t>);

AxiomSuiteReport run_axiom_suite(NormKind norm, const AxiomSuiteConfig& config) {
  AxiomSuiteReport report;
  report.norm = norm;
  report.config = config;
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> coeff(-config.max_coefficient, config.max_coefficient);
  std::uniform_int_distribution<std::size_t> support(1, config.max_support);
  std::uniform_int_distribution<std::uint64_t> gap(1, 8);

  auto record = [&](const auto& check) {
    if (!check.pass) {
      if (report.failures == 0) report.first_failure = check.witness;
      ++report.failures;
    }
  };

  std::vector<std::int64_t> a;
  std::vector<std::uint64_t> idx;
  for (std::size_t v = 0; v < config.vectors; ++v) {
    a.resize(support(rng));
    for (auto& x : a) x = coeff(rng);
    const std::span<const std::int64_t> view(a);
    for (std::size_t k = 1; k < a.size(); ++k) {
      if (a[k - 1] * a[k] >= 0) {
        record(check_merge<std::int64_t>(norm, Axiom::esa, view, k));
        ++report.esa_checks;
      }
      record(check_merge<std::int64_t>(norm, Axiom::sa, view, k));
      ++report.sa_checks;
    }
    idx.resize(a.size());
    for (std::size_t s = 0; s < config.spreadings; ++s) {
      std::uint64_t pos = 0;
      for (auto& i : idx) i = pos += gap(rng);
      record(check_spreading<std::int64_t>(norm, view, idx));
      ++report.is_checks;
    }
  }
  return report;
}

}  // namespace esa
