#include "aritygap/boolfn.hpp"

#include <algorithm>
#include <set>

#include "aritygap/error.hpp"
#include "aritygap/fnalg.hpp"

namespace aritygap {

std::size_t mask_to_tuple_index(std::uint32_t mask, std::size_t n) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask & (std::uint32_t(1) << k)) index += std::size_t(1) << (n - 1 - k);
  }
  return index;
}

std::uint32_t tuple_index_to_mask(std::size_t index, std::size_t n) {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (index & (std::size_t(1) << (n - 1 - k))) mask |= std::uint32_t(1) << k;
  }
  return mask;
}

namespace {

void require_two_element_domain(const FiniteFunction& f) {
  if (f.domain().size() != 2) {
    fail(ErrorCode::non_boolean_domain, "operation needs a two-element domain");
  }
}

}  // namespace

SetFunction to_set_function(const FiniteFunction& f) {
  require_two_element_domain(f);
  const std::size_t n = f.arity();
  SetFunction v{n, std::vector<Rational>(std::size_t(1) << n)};
  for (std::uint32_t mask = 0; mask < v.values.size(); ++mask) {
    v.values[mask] = f.value(mask_to_tuple_index(mask, n));
  }
  return v;
}

FiniteFunction from_set_function(const SetFunction& v) {
  const std::size_t size = std::size_t(1) << v.n;
  if (v.values.size() != size) {
    fail(ErrorCode::arity_mismatch, "set function value count is not 2^n");
  }
  std::vector<Rational> table(size);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    table[mask_to_tuple_index(mask, v.n)] = v.values[mask];
  }
  return FiniteFunction(Carrier::boolean(), v.n, Codomain::rational(), std::move(table));
}

MobiusCoefficients mobius(const SetFunction& v) {
  MobiusCoefficients m{v.n, v.values};
  for (std::size_t d = 0; d < v.n; ++d) {
    const std::size_t bit = std::size_t(1) << d;
    for (std::size_t mask = 0; mask < m.values.size(); ++mask) {
      if (mask & bit) m.values[mask] -= m.values[mask ^ bit];
    }
  }
  return m;
}

SetFunction zeta(const MobiusCoefficients& m) {
  SetFunction v{m.n, m.values};
  for (std::size_t d = 0; d < m.n; ++d) {
    const std::size_t bit = std::size_t(1) << d;
    for (std::size_t mask = 0; mask < v.values.size(); ++mask) {
      if (mask & bit) v.values[mask] += v.values[mask ^ bit];
    }
  }
  return v;
}

Rational vertex_value(const MobiusCoefficients& m, std::uint32_t mask) {
  Rational sum(0);
  for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
    sum += m.values[sub];
    if (sub == 0) break;
  }
  return sum;
}

BooleanPolynomial anf(const FiniteFunction& f) {
  require_two_element_domain(f);
  const std::size_t n = f.arity();
  std::vector<int> bits(std::size_t(1) << n);
  for (std::uint32_t mask = 0; mask < bits.size(); ++mask) {
    const Rational& value = f.value(mask_to_tuple_index(mask, n));
    if (value == Rational(0)) {
      bits[mask] = 0;
    } else if (value == Rational(1)) {
      bits[mask] = 1;
    } else {
      fail(ErrorCode::non_boolean_domain, "values must be 0 or 1");
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    const std::size_t bit = std::size_t(1) << d;
    for (std::size_t mask = 0; mask < bits.size(); ++mask) {
      if (mask & bit) bits[mask] ^= bits[mask ^ bit];
    }
  }
  BooleanPolynomial p{n, {}};
  for (std::uint32_t mask = 0; mask < bits.size(); ++mask) {
    if (bits[mask]) p.monomials.push_back(mask);
  }
  return p;
}

bool essential_from_mobius(const MobiusCoefficients& m, std::size_t index) {
  if (index >= m.n) fail(ErrorCode::index_out_of_range, "variable index out of range");
  const std::uint32_t bit = std::uint32_t(1) << index;
  for (std::uint32_t mask = 0; mask < m.values.size(); ++mask) {
    if ((mask & bit) && m.values[mask] != Rational(0)) return true;
  }
  return false;
}

const char* boolean_template_name(BooleanTemplate t) {
  switch (t) {
    case BooleanTemplate::parity: return "parity";
    case BooleanTemplate::and_xor: return "and_xor";
    case BooleanTemplate::majority: return "majority";
    case BooleanTemplate::maj_linear: return "maj_linear";
  }
  return "unknown";
}

BooleanPolynomial instantiate_boolean_template(BooleanTemplate tmpl, std::size_t n, int c,
                                               const std::vector<std::size_t>& permutation) {
  if (permutation.size() != n) fail(ErrorCode::arity_mismatch, "permutation size differs from n");
  const auto var = [&](std::size_t k) { return std::uint32_t(1) << permutation[k]; };
  std::set<std::uint32_t> monomials;
  const auto toggle = [&](std::uint32_t mask) {
    if (const auto it = monomials.find(mask); it != monomials.end()) {
      monomials.erase(it);
    } else {
      monomials.insert(mask);
    }
  };
  switch (tmpl) {
    case BooleanTemplate::parity:
      for (std::size_t k = 0; k < n; ++k) toggle(var(k));
      break;
    case BooleanTemplate::and_xor:
      if (n != 2) fail(ErrorCode::wrong_arity, "and_xor template is binary");
      toggle(var(0) | var(1));
      toggle(var(0));
      break;
    case BooleanTemplate::majority:
      if (n != 3) fail(ErrorCode::wrong_arity, "majority template is ternary");
      toggle(var(0) | var(1));
      toggle(var(0) | var(2));
      toggle(var(1) | var(2));
      break;
    case BooleanTemplate::maj_linear:
      if (n != 3) fail(ErrorCode::wrong_arity, "maj_linear template is ternary");
      toggle(var(0) | var(1));
      toggle(var(0) | var(2));
      toggle(var(1) | var(2));
      toggle(var(0));
      toggle(var(1));
      break;
  }
  if (c) toggle(0);
  return BooleanPolynomial{n, {monomials.begin(), monomials.end()}};
}

BooleanGapClassification classify_boolean_gap(const FiniteFunction& f) {
  const std::size_t n = f.arity();
  if (essential_arity(f) != n) {
    fail(ErrorCode::inessential_variable, "input must depend on all of its variables");
  }
  if (n < 2) fail(ErrorCode::arity_gap_undefined, "classification needs at least two variables");
  const BooleanPolynomial form = anf(f);

  std::vector<std::size_t> permutation(n);
  const auto try_template = [&](BooleanTemplate tmpl) -> std::optional<BooleanGap2> {
    for (int c = 0; c < 2; ++c) {
      for (std::size_t k = 0; k < n; ++k) permutation[k] = k;
      do {
        if (instantiate_boolean_template(tmpl, n, c, permutation) == form) {
          return BooleanGap2{tmpl, c, permutation};
        }
      } while (std::next_permutation(permutation.begin(), permutation.end()));
    }
    return std::nullopt;
  };

  std::vector<BooleanTemplate> candidates{BooleanTemplate::parity};
  if (n == 2) candidates.push_back(BooleanTemplate::and_xor);
  if (n == 3) {
    candidates.push_back(BooleanTemplate::majority);
    candidates.push_back(BooleanTemplate::maj_linear);
  }
  for (const BooleanTemplate tmpl : candidates) {
    if (auto hit = try_template(tmpl)) return {2, std::move(hit)};
  }
  return {1, std::nullopt};
}

const char* pseudo_gap2_reason_name(PseudoGap2Reason r) {
  switch (r) {
    case PseudoGap2Reason::binary_diag: return "binary_diag";
    case PseudoGap2Reason::two_valued_composition: return "two_valued_composition";
  }
  return "unknown";
}

PseudoGapClassification classify_pseudo_boolean_gap(const FiniteFunction& f) {
  require_two_element_domain(f);
  const std::size_t n = f.arity();
  if (essential_arity(f) != n) {
    fail(ErrorCode::inessential_variable, "input must depend on all of its variables");
  }
  if (n < 2) fail(ErrorCode::arity_gap_undefined, "classification needs at least two variables");

  if (n == 2 && f.value(std::size_t(0)) == f.value(f.table_size() - 1)) {
    const Rational diag = f.value(std::size_t(0));
    return {2, PseudoGap2{PseudoGap2Reason::binary_diag, std::nullopt, diag, diag}};
  }

  std::set<Rational> values(f.table().begin(), f.table().end());
  if (values.size() == 2) {
    const Rational a = *values.begin();
    const Rational b = *std::next(values.begin());
    for (const auto& [low, high] : {std::pair{a, b}, std::pair{b, a}}) {
      std::vector<Rational> bits;
      bits.reserve(f.table_size());
      for (const Rational& v : f.table()) bits.emplace_back(v == high ? 1 : 0);
      FiniteFunction inner(f.domain(), n, Codomain::carrier(Carrier::boolean()),
                           std::move(bits));
      if (classify_boolean_gap(inner).gap == 2) {
        return {2, PseudoGap2{PseudoGap2Reason::two_valued_composition, std::move(inner),
                              low, high}};
      }
    }
  }
  return {1, std::nullopt};
}

}  // namespace aritygap
