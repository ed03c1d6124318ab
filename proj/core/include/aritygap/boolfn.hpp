#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aritygap/finite_function.hpp"

namespace aritygap {

// Subsets of {x_1..x_n} are bitmasks with bit k-1 standing for x_k.

struct SetFunction {
  std::size_t n = 0;
  std::vector<Rational> values;  // 2^n entries, indexed by subset mask

  bool operator==(const SetFunction&) const = default;
};

struct MobiusCoefficients {
  std::size_t n = 0;
  std::vector<Rational> values;

  bool operator==(const MobiusCoefficients&) const = default;
};

// mask <-> lexicographic tuple index of the 0/1 characteristic vector.
std::size_t mask_to_tuple_index(std::uint32_t mask, std::size_t n);
std::uint32_t tuple_index_to_mask(std::size_t index, std::size_t n);

// v(S) = f(characteristic vector of S). Needs a two-element domain.
SetFunction to_set_function(const FiniteFunction& f);
FiniteFunction from_set_function(const SetFunction& v);

MobiusCoefficients mobius(const SetFunction& v);
SetFunction zeta(const MobiusCoefficients& m);

// Multilinear value at a vertex: sum of coefficients of subsets of `mask`.
Rational vertex_value(const MobiusCoefficients& m, std::uint32_t mask);

struct BooleanPolynomial {
  std::size_t n = 0;
  std::vector<std::uint32_t> monomials;  // sorted subset masks, mod-2 normal form

  bool operator==(const BooleanPolynomial&) const = default;
};

// Mod-2 normal form of a function with two-element domain and 0/1 values.
BooleanPolynomial anf(const FiniteFunction& f);

bool essential_from_mobius(const MobiusCoefficients& m, std::size_t index);

enum class BooleanTemplate { parity, and_xor, majority, maj_linear };
const char* boolean_template_name(BooleanTemplate t);

struct BooleanGap2 {
  BooleanTemplate tmpl;
  int c = 0;                              // constant term
  std::vector<std::size_t> permutation;   // template variable k -> function variable

  bool operator==(const BooleanGap2&) const = default;
};

struct BooleanGapClassification {
  std::size_t gap = 1;
  std::optional<BooleanGap2> detail;
};

BooleanPolynomial instantiate_boolean_template(BooleanTemplate tmpl, std::size_t n, int c,
                                               const std::vector<std::size_t>& permutation);

// Input must depend on all of its variables (arity >= 2). Gap 2 exactly when
// the normal form matches one of the four templates up to relabeling.
BooleanGapClassification classify_boolean_gap(const FiniteFunction& f);

enum class PseudoGap2Reason { binary_diag, two_valued_composition };
const char* pseudo_gap2_reason_name(PseudoGap2Reason r);

struct PseudoGap2 {
  PseudoGap2Reason reason;
  std::optional<FiniteFunction> inner;  // two-valued case: the 0/1 skeleton
  Rational low, high;                   // values mapped to 0 and 1; both the shared
                                        // diagonal value in the binary_diag case
};

struct PseudoGapClassification {
  std::size_t gap = 1;
  std::optional<PseudoGap2> detail;
};

// Rational-valued functions on a two-element domain, all variables essential.
PseudoGapClassification classify_pseudo_boolean_gap(const FiniteFunction& f);

}  // namespace aritygap
