#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aritygap/boolfn.hpp"

namespace aritygap {

// Both extensions are determined by one coefficient vector. The empty-subset
// coefficient is the constant term: the empty meet is read as 1.

struct OwenExtension {
  MobiusCoefficients coefficients;
};

struct LovaszExtension {
  MobiusCoefficients coefficients;
};

using RationalPoint = std::vector<Rational>;

// Coordinate positions listed in nondecreasing value order; ties broken by
// position, so every point gets exactly one simplex.
struct SimplexId {
  std::vector<std::size_t> order;

  bool operator==(const SimplexId&) const = default;
};

Rational eval_owen(const OwenExtension& p, std::span<const Rational> x);
Rational eval_lovasz(const LovaszExtension& f, std::span<const Rational> x);

FiniteFunction restrict_to_cube(const MobiusCoefficients& m);
inline FiniteFunction restrict_to_cube(const OwenExtension& p) {
  return restrict_to_cube(p.coefficients);
}
inline FiniteFunction restrict_to_cube(const LovaszExtension& f) {
  return restrict_to_cube(f.coefficients);
}

SimplexId simplex_of(std::span<const Rational> x);

bool essential_in_extension(const LovaszExtension& f, std::size_t index);

// Gap of the 0/1 restriction; needs at least two essential variables.
std::size_t arity_gap_of_cube_restriction(const MobiusCoefficients& m);
inline std::size_t gap_lovasz(const LovaszExtension& f) {
  return arity_gap_of_cube_restriction(f.coefficients);
}

enum class LovaszForm { form_i, form_ii, form_iii, form_iv, form_v };
const char* lovasz_form_name(LovaszForm form);

struct LovaszGap2Match {
  LovaszForm form;
  Rational a, b, c;                      // c participates in form_v only
  std::vector<std::size_t> permutation;  // template variable k -> coefficient variable

  bool operator==(const LovaszGap2Match&) const = default;
};

// Coefficient pattern of each template; used by the matcher to verify a
// candidate exactly and by tests to generate instances.
MobiusCoefficients instantiate_lovasz_form(LovaszForm form, std::size_t n, const Rational& a,
                                           const Rational& b, const Rational& c,
                                           const std::vector<std::size_t>& permutation);

// First matching template in form order, permutations in lexicographic
// order. Input must depend on all of its variables.
std::optional<LovaszGap2Match> classify_lovasz_gap2(const LovaszExtension& f);

// For extensions whose cube restriction is nondecreasing: the unique (a, b)
// of the ternary median-shaped coefficient pattern, or nullopt (gap 1).
std::optional<std::pair<Rational, Rational>> classify_nondecreasing_lovasz(
    const LovaszExtension& f);

}  // namespace aritygap
