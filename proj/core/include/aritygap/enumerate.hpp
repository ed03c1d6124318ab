#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aritygap/finite_function.hpp"
#include "aritygap/order.hpp"

namespace aritygap {

// splitmix64. Streams are reproducible across runs and platforms; every
// sampled object is generated from a stream derived only from (seed, index),
// so results do not depend on worker count or visit order.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A9C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4B5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-enough pick in [0, bound); bound is tiny here so modulo bias is
  // irrelevant, and the scheme is part of the documented format.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 seeder{seed ^ (0x9E3779B97F4A9C15ull * (index + 1))};
  return SplitMix64{seeder.next()};
}

struct FunctionSpace {
  Carrier domain = Carrier::boolean();
  std::size_t arity = 2;
  Codomain codomain = Codomain::carrier(Carrier::boolean());
  std::vector<Rational> values;  // candidate cell values, index order

  static FunctionSpace carriers(std::size_t domain_size, std::size_t codomain_size,
                                std::size_t arity);
  static FunctionSpace rational_values(std::size_t domain_size, std::vector<Rational> values,
                                       std::size_t arity);
  static FunctionSpace over_poset(const Poset& domain, std::size_t codomain_size,
                                  std::size_t arity);

  std::size_t table_size() const;
};

// All |values|^table_size tables, counter order: the cell at the last tuple is
// the least significant digit.
class ExhaustiveEnumeration {
public:
  ExhaustiveEnumeration(FunctionSpace space, std::uint64_t budget);

  std::uint64_t count() const noexcept { return count_; }
  FiniteFunction at(std::uint64_t index) const;

private:
  FunctionSpace space_;
  std::uint64_t count_;
};

// Independent per-index streams; cells are drawn first tuple first.
class SampledEnumeration {
public:
  SampledEnumeration(FunctionSpace space, std::uint64_t count, std::uint64_t seed);

  std::uint64_t count() const noexcept { return count_; }
  FiniteFunction at(std::uint64_t index) const;

private:
  FunctionSpace space_;
  std::uint64_t count_;
  std::uint64_t seed_;
};

// Seeded monotone tables w.r.t. a domain poset and a chain codomain. Tuples
// are processed in a fixed linear extension of the product order; each cell
// draws uniformly from the interval above its predecessors, so every monotone
// table is reachable and the draw is reproducible. Rejection sampling is not
// viable: monotone tables are a vanishing fraction of all tables.
class MonotoneSampledEnumeration {
public:
  MonotoneSampledEnumeration(Poset domain, std::size_t codomain_chain, std::size_t arity,
                             std::uint64_t count, std::uint64_t seed);

  std::uint64_t count() const noexcept { return count_; }
  FiniteFunction at(std::uint64_t index) const;

private:
  Poset domain_;
  std::size_t codomain_chain_;
  std::size_t arity_;
  std::uint64_t count_;
  std::uint64_t seed_;
  std::vector<std::size_t> visit_order_;   // linear extension of the product order
  std::vector<std::vector<std::size_t>> predecessors_;  // cover steps below, per tuple
};

// Random meet/join expressions over variables and constants on a chain,
// evaluated to ternary tables. Monotone by construction.
FiniteFunction random_chain_polynomial(const Lattice& chain, std::size_t arity, SplitMix64& rng,
                                       std::size_t max_depth);

}  // namespace aritygap
