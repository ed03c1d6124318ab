#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "aritygap/boolfn.hpp"
#include "aritygap/finite_function.hpp"

namespace aritygap::test {

// Table entries listed in lexicographic tuple order.
inline FiniteFunction carrier_fn(std::size_t domain_size, std::size_t arity,
                                 std::size_t codomain_size, std::initializer_list<int> values) {
  std::vector<Rational> table;
  table.reserve(values.size());
  for (const int v : values) table.emplace_back(v);
  return FiniteFunction(Carrier::range(domain_size), arity,
                        Codomain::carrier(Carrier::range(codomain_size)), std::move(table));
}

inline FiniteFunction boolean_fn(std::size_t arity, std::initializer_list<int> values) {
  return carrier_fn(2, arity, 2, values);
}

inline FiniteFunction rational_fn(std::size_t arity, std::vector<Rational> values) {
  return FiniteFunction(Carrier::boolean(), arity, Codomain::rational(), std::move(values));
}

inline FiniteFunction maj3() { return boolean_fn(3, {0, 0, 0, 1, 0, 1, 1, 1}); }
inline FiniteFunction parity3() { return boolean_fn(3, {0, 1, 1, 0, 1, 0, 0, 1}); }
inline FiniteFunction and2() { return boolean_fn(2, {0, 0, 0, 1}); }
inline FiniteFunction or3() { return boolean_fn(3, {0, 1, 1, 1, 1, 1, 1, 1}); }
inline FiniteFunction and3() { return boolean_fn(3, {0, 0, 0, 0, 0, 0, 0, 1}); }

// Polynomial evaluated over {0,1}^n as a function table.
inline FiniteFunction materialize(const BooleanPolynomial& p) {
  return FiniteFunction::tabulate(
      Carrier::boolean(), p.n, Codomain::carrier(Carrier::boolean()),
      [&](std::span<const std::size_t> x) -> Rational {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < p.n; ++k) {
          if (x[k] == 1) mask |= std::uint32_t(1) << k;
        }
        int acc = 0;
        for (const std::uint32_t mono : p.monomials) {
          if ((mask & mono) == mono) acc ^= 1;
        }
        return Rational(acc);
      });
}

}  // namespace aritygap::test
