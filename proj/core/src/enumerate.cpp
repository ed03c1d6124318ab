#include "aritygap/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "aritygap/error.hpp"

namespace aritygap {

FunctionSpace FunctionSpace::carriers(std::size_t domain_size, std::size_t codomain_size,
                                      std::size_t arity) {
  FunctionSpace space;
  space.domain = Carrier::range(domain_size);
  space.arity = arity;
  space.codomain = Codomain::carrier(Carrier::range(codomain_size));
  space.values.reserve(codomain_size);
  for (std::size_t v = 0; v < codomain_size; ++v) {
    space.values.emplace_back(static_cast<std::int64_t>(v));
  }
  return space;
}

FunctionSpace FunctionSpace::rational_values(std::size_t domain_size,
                                             std::vector<Rational> values, std::size_t arity) {
  if (values.empty()) fail(ErrorCode::invalid_argument, "value palette must be nonempty");
  FunctionSpace space;
  space.domain = Carrier::range(domain_size);
  space.arity = arity;
  space.codomain = Codomain::rational();
  space.values = std::move(values);
  return space;
}

FunctionSpace FunctionSpace::over_poset(const Poset& domain, std::size_t codomain_size,
                                        std::size_t arity) {
  FunctionSpace space;
  space.domain = domain.carrier();
  space.arity = arity;
  space.codomain = Codomain::carrier(Carrier::range(codomain_size));
  space.values.reserve(codomain_size);
  for (std::size_t v = 0; v < codomain_size; ++v) {
    space.values.emplace_back(static_cast<std::int64_t>(v));
  }
  return space;
}

std::size_t FunctionSpace::table_size() const { return table_size_for(domain.size(), arity); }

ExhaustiveEnumeration::ExhaustiveEnumeration(FunctionSpace space, std::uint64_t budget)
    : space_(std::move(space)) {
  const std::size_t cells = space_.table_size();
  count_ = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (count_ > budget / space_.values.size()) {
      fail(ErrorCode::budget_exceeded, "exhaustive table space exceeds the budget");
    }
    count_ *= space_.values.size();
  }
}

FiniteFunction ExhaustiveEnumeration::at(std::uint64_t index) const {
  if (index >= count_) fail(ErrorCode::index_out_of_range, "enumeration index out of range");
  const std::size_t cells = space_.table_size();
  std::vector<Rational> table(cells);
  std::uint64_t rest = index;
  for (std::size_t c = cells; c-- > 0;) {
    table[c] = space_.values[rest % space_.values.size()];
    rest /= space_.values.size();
  }
  return FiniteFunction(space_.domain, space_.arity, space_.codomain, std::move(table));
}

SampledEnumeration::SampledEnumeration(FunctionSpace space, std::uint64_t count,
                                       std::uint64_t seed)
    : space_(std::move(space)), count_(count), seed_(seed) {}

FiniteFunction SampledEnumeration::at(std::uint64_t index) const {
  if (index >= count_) fail(ErrorCode::index_out_of_range, "enumeration index out of range");
  SplitMix64 rng = sample_stream(seed_, index);
  const std::size_t cells = space_.table_size();
  std::vector<Rational> table(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    table[c] = space_.values[rng.below(space_.values.size())];
  }
  return FiniteFunction(space_.domain, space_.arity, space_.codomain, std::move(table));
}

MonotoneSampledEnumeration::MonotoneSampledEnumeration(Poset domain, std::size_t codomain_chain,
                                                       std::size_t arity, std::uint64_t count,
                                                       std::uint64_t seed)
    : domain_(std::move(domain)),
      codomain_chain_(codomain_chain),
      arity_(arity),
      count_(count),
      seed_(seed) {
  if (codomain_chain_ < 1) fail(ErrorCode::invalid_argument, "codomain chain must be nonempty");
  const std::size_t k = domain_.size();
  const std::size_t cells = table_size_for(k, arity_);

  // Height of each element: longest chain from below.
  std::vector<std::size_t> height(k, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (domain_.less(y, x) && height[x] < height[y] + 1) {
          height[x] = height[y] + 1;
          changed = true;
        }
      }
    }
  }

  std::vector<std::size_t> strides(arity_);
  std::size_t stride = 1;
  for (std::size_t i = arity_; i-- > 0;) {
    strides[i] = stride;
    stride *= k;
  }

  std::vector<std::size_t> total_height(cells, 0);
  predecessors_.resize(cells);
  for (std::size_t t = 0; t < cells; ++t) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < arity_; ++i) {
      const std::size_t at = (t / strides[i]) % k;
      sum += height[at];
      for (std::size_t below = 0; below < k; ++below) {
        // Immediate product-order steps: one coordinate drops along a cover.
        bool cover = domain_.less(below, at);
        for (std::size_t mid = 0; mid < k && cover; ++mid) {
          if (mid != below && mid != at && domain_.less(below, mid) && domain_.less(mid, at)) {
            cover = false;
          }
        }
        if (cover) predecessors_[t].push_back(t + (below - at) * strides[i]);
      }
    }
    total_height[t] = sum;
  }

  visit_order_.resize(cells);
  std::iota(visit_order_.begin(), visit_order_.end(), std::size_t(0));
  std::stable_sort(visit_order_.begin(), visit_order_.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return total_height[lhs] < total_height[rhs];
                   });
}

FiniteFunction MonotoneSampledEnumeration::at(std::uint64_t index) const {
  if (index >= count_) fail(ErrorCode::index_out_of_range, "enumeration index out of range");
  SplitMix64 rng = sample_stream(seed_, index);
  const std::size_t cells = predecessors_.size();
  std::vector<std::size_t> picked(cells, 0);
  std::vector<Rational> table(cells);
  for (const std::size_t t : visit_order_) {
    std::size_t floor_value = 0;
    for (const std::size_t below : predecessors_[t]) {
      floor_value = std::max(floor_value, picked[below]);
    }
    const std::size_t room = codomain_chain_ - floor_value;
    picked[t] = floor_value + rng.below(room);
    table[t] = Rational(static_cast<std::int64_t>(picked[t]));
  }
  return FiniteFunction(domain_.carrier(), arity_,
                        Codomain::carrier(Carrier::range(codomain_chain_)), std::move(table));
}

namespace {

std::vector<std::size_t> random_polynomial_table(const Lattice& chain, std::size_t arity,
                                                 std::size_t cells,
                                                 const std::vector<std::vector<std::size_t>>& vars,
                                                 SplitMix64& rng, std::size_t depth) {
  const bool leaf = depth == 0 || rng.below(3) == 0;
  if (leaf) {
    const std::size_t pick = rng.below(arity + chain.size());
    if (pick < arity) return vars[pick];
    return std::vector<std::size_t>(cells, pick - arity);
  }
  const bool use_meet = rng.below(2) == 0;
  const auto lhs = random_polynomial_table(chain, arity, cells, vars, rng, depth - 1);
  const auto rhs = random_polynomial_table(chain, arity, cells, vars, rng, depth - 1);
  std::vector<std::size_t> out(cells);
  for (std::size_t t = 0; t < cells; ++t) {
    out[t] = use_meet ? chain.meet(lhs[t], rhs[t]) : chain.join(lhs[t], rhs[t]);
  }
  return out;
}

}  // namespace

FiniteFunction random_chain_polynomial(const Lattice& chain, std::size_t arity, SplitMix64& rng,
                                       std::size_t max_depth) {
  const std::size_t k = chain.size();
  const std::size_t cells = table_size_for(k, arity);
  std::vector<std::vector<std::size_t>> vars(arity, std::vector<std::size_t>(cells));
  std::size_t stride = 1;
  for (std::size_t i = arity; i-- > 0;) {
    for (std::size_t t = 0; t < cells; ++t) vars[i][t] = (t / stride) % k;
    stride *= k;
  }
  const auto values = random_polynomial_table(chain, arity, cells, vars, rng, max_depth);
  std::vector<Rational> table(cells);
  for (std::size_t t = 0; t < cells; ++t) table[t] = Rational(static_cast<std::int64_t>(values[t]));
  return FiniteFunction(chain.carrier(), arity, Codomain::carrier(chain.carrier()),
                        std::move(table));
}

}  // namespace aritygap
