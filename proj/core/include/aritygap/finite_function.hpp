#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "aritygap/carrier.hpp"
#include "aritygap/rational.hpp"

namespace aritygap {

using Tuple = std::vector<std::size_t>;

// Total function A^n -> B stored as a flat table in lexicographic tuple
// order: the first coordinate is the most significant digit. Entries hold
// rationals; carrier-valued functions store the element index as an integer
// rational, so value equality is uniform across both codomain kinds.
class FiniteFunction {
public:
  FiniteFunction(Carrier domain, std::size_t arity, Codomain codomain,
                 std::vector<Rational> table);

  static FiniteFunction tabulate(
      Carrier domain, std::size_t arity, Codomain codomain,
      const std::function<Rational(std::span<const std::size_t>)>& fn);

  const Carrier& domain() const noexcept { return domain_; }
  const Codomain& codomain() const noexcept { return codomain_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t table_size() const noexcept { return table_.size(); }
  const std::vector<Rational>& table() const noexcept { return table_; }

  const Rational& value(std::size_t index) const;
  const Rational& value(std::span<const std::size_t> tuple) const;

  // Carrier codomains only: the value as an element index.
  std::size_t value_index(std::size_t index) const;

  std::size_t stride(std::size_t position) const;
  std::size_t digit(std::size_t index, std::size_t position) const;
  std::size_t index_of(std::span<const std::size_t> tuple) const;
  void decode(std::size_t index, std::span<std::size_t> out) const;
  Tuple decode(std::size_t index) const;

  bool same_shape(const FiniteFunction& other) const {
    return domain_ == other.domain_ && arity_ == other.arity_ && codomain_ == other.codomain_;
  }

  bool operator==(const FiniteFunction& other) const {
    return same_shape(other) && table_ == other.table_;
  }

private:
  Carrier domain_;
  std::size_t arity_;
  Codomain codomain_;
  std::vector<Rational> table_;
  std::vector<std::size_t> strides_;
};

// |A|^arity with an overflow guard; table sizes beyond the cap are rejected.
std::size_t table_size_for(std::size_t domain_size, std::size_t arity);

}  // namespace aritygap
