#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aritygap/finite_function.hpp"
#include "aritygap/order.hpp"

namespace aritygap {

// What a sweep verifies per generated instance, always against the oracles.
enum class Check {
  boolean_gap,       // template classification of two-valued functions
  pseudo_gap,        // rational-valued functions on a two-element domain
  characterization,  // full case analysis (any carriers), incl. qa crosscheck
  willard,           // gap <= 2 whenever arity > max(|A|, 3)
  monotone,          // order-preserving classification and structural props
  lovasz,            // extension evaluation, linearity, gap transfer, templates
  latpol,            // chain polynomials against the truncated-median matcher
};

const char* check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);

enum class SweepMode { exhaustive, sample };

struct SweepConfig {
  std::size_t domain_size = 2;
  std::size_t arity = 2;
  std::size_t codomain_size = 2;
  // Nonempty: the codomain is rational and cells are drawn from this palette.
  std::vector<Rational> rational_values;

  SweepMode mode = SweepMode::exhaustive;
  std::uint64_t sample_count = 0;
  std::optional<std::uint64_t> seed;  // required in sample mode
  bool monotone_only = false;
  std::optional<Poset> domain_poset;    // default: chain over the domain
  std::optional<Poset> codomain_poset;  // default: chain over the codomain

  std::vector<Check> checks;  // nonempty, no duplicates

  std::uint64_t table_budget = std::uint64_t(1) << 20;
  std::uint64_t support_budget = std::uint64_t(1) << 20;
  std::size_t jobs = 1;
  std::size_t max_counterexamples = 8;
  std::size_t linearity_triples = 16;  // per coefficient bundle
  std::size_t polynomial_depth = 4;    // sampled chain polynomials
};

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t gap2 = 0;  // instances the classifier put at gap 2
  std::uint64_t disagreements = 0;
};

struct Counterexample {
  std::uint64_t index = 0;  // position in the generation stream
  Check check = Check::characterization;
  std::string description;
  std::string table;  // offending instance, table file format
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t generated = 0;  // instances yielded by the stream
  std::uint64_t eligible = 0;   // instances the gap notion applies to
  std::uint64_t skipped = 0;    // fewer than two essential variables
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;  // classifier vs oracle mismatches
  std::uint64_t violations = 0;     // failed invariants that are not gap calls
  std::vector<CheckTally> per_check;             // parallel to config.checks
  std::vector<Counterexample> counterexamples;  // capped, stream order
  double wall_seconds = 0.0;

  std::uint64_t total() const { return agreements + disagreements; }
  bool clean() const { return disagreements == 0 && violations == 0; }

  // key=value lines, identical for identical configs at any worker count:
  // no wall clock, no job count.
  std::string machine_block() const;
  std::string human_text() const;
};

SweepReport sweep(const SweepConfig& config);

}  // namespace aritygap
