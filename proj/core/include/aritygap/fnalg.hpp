#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "aritygap/finite_function.hpp"

namespace aritygap {

// Variable indices are 0-based everywhere in code; serialization and CLI
// output print them 1-based.

struct EssentialityWitness {
  std::size_t index = 0;     // the variable
  Tuple base;                // full argument tuple
  std::size_t replacement = 0;  // element substituted at `index`

  bool operator==(const EssentialityWitness&) const = default;
};

// sigma maps each source variable (of the function being substituted into)
// to a target variable of the resulting function.
struct VariableMap {
  std::size_t source_arity = 0;
  std::size_t target_arity = 0;
  std::vector<std::size_t> map;  // size source_arity, entries < target_arity

  bool operator==(const VariableMap&) const = default;
};

// Lexicographically first (base tuple, replacement) pair proving that the
// variable changes the value, or nullopt.
std::optional<EssentialityWitness> essentiality_witness(const FiniteFunction& f, std::size_t index);
bool is_essential(const FiniteFunction& f, std::size_t index);
std::vector<std::size_t> essential_variables(const FiniteFunction& f);
std::size_t essential_arity(const FiniteFunction& f);

// result(x_1..x_n) = g(x_{sigma(1)}, ..., x_{sigma(m)})
FiniteFunction simple_minor(const FiniteFunction& g, const VariableMap& sigma);

// f with variable i substituted by variable j (same arity).
FiniteFunction identify(const FiniteFunction& f, std::size_t i, std::size_t j);

std::optional<VariableMap> minor_witness(const FiniteFunction& f, const FiniteFunction& g);
bool is_minor_of(const FiniteFunction& f, const FiniteFunction& g);
bool equivalent(const FiniteFunction& f, const FiniteFunction& g);

// Drops inessential variables. The map embeds the reduced function back:
// simple_minor(reduced, map) == f.
std::pair<FiniteFunction, VariableMap> reduce_to_essential(const FiniteFunction& f);

// Tuple indices (ascending) of the arguments with a repeated coordinate.
// Arity 1 counts every argument; if arity exceeds |A| this is everything.
std::vector<std::size_t> diagonal_tuples(const Carrier& domain, std::size_t arity);
bool has_repeated_coordinate(std::span<const std::size_t> tuple);

// Bitmask over element indices that occur an odd number of times.
std::uint64_t oddsupp(std::span<const std::size_t> tuple);

// Whether the restriction to the repeated-coordinate arguments is a function
// of oddsupp alone.
bool is_determined_by_oddsupp(const FiniteFunction& f);

// Smallest k such that the repeated-coordinate restriction factors through a
// projection onto k coordinates.
std::size_t quasi_arity(const FiniteFunction& f);

// ess f minus the largest essential arity over all identifications of two
// distinct essential variables. Needs at least two essential variables.
std::size_t arity_gap(const FiniteFunction& f);

enum class TheoremCase {
  case_p_ge_3,
  case_gap2_qa,
  case_gap2_oddsupp,
  case_n3_condition,
  case_gap1,
};

const char* theorem_case_name(TheoremCase c);

struct GapReport {
  std::size_t arity = 0;
  std::vector<std::size_t> essential_variables;
  std::size_t ess = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> per_pair_minor_ess;
  std::size_t essl = 0;  // max of per_pair_minor_ess
  std::size_t gap = 0;   // from the case analysis below
  std::size_t qa = 0;
  bool oddsupp_determined = false;
  TheoremCase theorem_case = TheoremCase::case_gap1;

  // The identification data and the case analysis must tell the same story.
  bool consistent() const { return ess >= essl && gap == ess - essl; }
};

// Case analysis on (qa, oddsupp, ternary identities); the identification
// numbers are carried alongside for cross-checking. Input must depend on all
// of its variables.
GapReport gap_via_characterization(const FiniteFunction& f);

struct TernaryGap2 {
  std::vector<Rational> h;        // unary table over the domain
  std::array<int, 3> picks{};     // 0 = repeated argument, 1 = distinguished one

  bool operator==(const TernaryGap2&) const = default;
};

// For arity-3 functions: the unary h and argument picks such that fixing two
// equal coordinates collapses f to h, with h nonconstant.
std::optional<TernaryGap2> ternary_gap2_condition(const FiniteFunction& f);

}  // namespace aritygap
