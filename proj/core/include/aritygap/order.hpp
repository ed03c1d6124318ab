#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aritygap/finite_function.hpp"

namespace aritygap {

// Finite poset over a carrier. The relation is stored reflexively and
// transitively closed; construction rejects antisymmetry violations.
class Poset {
public:
  static Poset chain(std::size_t size);
  static Poset chain(Carrier carrier);  // element order is the chain order
  static Poset antichain(std::size_t size);
  static Poset from_covers(Carrier carrier,
                           const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  static Poset from_relation(Carrier carrier, std::vector<std::vector<bool>> leq);

  // Six elements: bottom, two incomparable atoms, two incomparable coatoms
  // above both atoms, top. The atom pair has no least upper bound, so this is
  // bidirected but not a lattice.
  static Poset bidirected_non_lattice_6();

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  bool leq(std::size_t x, std::size_t y) const;
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  bool has_upper_bound(std::size_t x, std::size_t y) const;
  bool has_lower_bound(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> least_upper_bound(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> greatest_lower_bound(std::size_t x, std::size_t y) const;

  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  const std::vector<std::vector<std::size_t>>& covers_above() const noexcept {
    return covers_above_;
  }

  bool is_chain() const;

  bool operator==(const Poset& other) const {
    return carrier_ == other.carrier_ && leq_ == other.leq_;
  }

private:
  Poset(Carrier carrier, std::vector<std::vector<bool>> leq);

  Carrier carrier_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> covers_above_;
};

struct DirectednessReport {
  bool upwards = false;
  bool downwards = false;
  bool bidirected = false;       // upwards and downwards
  bool pseudo_directed = false;  // every pair bounded on at least one side
};

DirectednessReport directedness(const Poset& p);

// Meet/join tables derived from a poset; rejected when some pair lacks a
// least upper or greatest lower bound.
class Lattice {
public:
  static Lattice from_poset(Poset p);
  static Lattice chain(std::size_t size);

  const Poset& poset() const noexcept { return poset_; }
  const Carrier& carrier() const noexcept { return poset_.carrier(); }
  std::size_t size() const noexcept { return poset_.size(); }

  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * size() + y]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  bool distributive() const noexcept { return distributive_; }

  // (x^y)v(x^z)v(y^z); well defined without distributivity but only used as
  // the median on chains of values.
  std::size_t median_raw(std::size_t x, std::size_t y, std::size_t z) const;

private:
  explicit Lattice(Poset p);

  Poset poset_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
  bool distributive_ = false;
};

bool is_distributive(const Lattice& l);

// Distributive lattices only.
std::size_t median(const Lattice& l, std::size_t x, std::size_t y, std::size_t z);

// h is a unary table of B-indices over A's elements.
bool is_lattice_homomorphism(const std::vector<std::size_t>& h, const Lattice& a,
                             const Lattice& b);

// f has carrier codomain; orders are given by the posets. Componentwise
// monotonicity, checked along domain covers.
bool is_order_preserving(const FiniteFunction& f, const Poset& domain, const Poset& codomain);

struct ComparableWitness {
  Tuple base;
  std::size_t replacement = 0;  // strictly above base[index] in the domain order

  bool operator==(const ComparableWitness&) const = default;
};

// For pseudo-directed domains: a witness for an essential variable whose base
// and replacement are comparable. Lexicographically first.
ComparableWitness comparable_witness(const FiniteFunction& f, const Poset& domain,
                                     std::size_t index);

struct PairRaiseWitness {
  std::size_t low = 0, high = 0;  // low < high in the domain order
  Tuple base;                     // has low at both raised positions

  bool operator==(const PairRaiseWitness&) const = default;
};

// For order-preserving functions on bidirected domains with every variable
// essential: raising variables i and j together from low to high strictly
// raises the value somewhere.
PairRaiseWitness minor_monotone_witness(const FiniteFunction& f, const Poset& domain,
                                        const Poset& codomain, std::size_t i, std::size_t j);

struct MonotoneStructure {
  std::size_t qa = 0;
  bool qa_large_enough = false;     // qa >= arity - 1
  bool not_oddsupp_determined = false;

  bool ok() const { return qa_large_enough && not_oddsupp_determined; }
};

MonotoneStructure check_monotone_structural_props(const FiniteFunction& f, const Poset& domain,
                                                  const Poset& codomain);

struct MonotoneGap2Certificate {
  std::vector<std::size_t> h;  // unary table of codomain indices, the diagonal of f

  bool operator==(const MonotoneGap2Certificate&) const = default;
};

struct MonotoneGapClassification {
  std::size_t gap = 1;
  std::optional<MonotoneGap2Certificate> detail;
};

// Order-preserving functions on bidirected domains, all variables essential.
// Gap 2 exactly for ternary functions that collapse to a nonconstant unary h
// whenever two arguments agree.
MonotoneGapClassification classify_monotone_gap(const FiniteFunction& f, const Poset& domain,
                                                const Poset& codomain);

// Ternary order-preserving f from a chain into a lattice: the nonconstant h
// with f = median(h(x1), h(x2), h(x3)), if any.
std::optional<std::vector<std::size_t>> median_form_match(const FiniteFunction& f,
                                                          const Poset& chain_domain,
                                                          const Lattice& codomain);

// (a v median(x1,x2,x3)) ^ b on a distributive lattice, for a < b.
FiniteFunction truncated_median(const Lattice& l, std::size_t a, std::size_t b);

// Recovers (a, b) when the ternary table equals a truncated median.
std::optional<std::pair<std::size_t, std::size_t>> classify_latpoly_gap2(const FiniteFunction& f,
                                                                         const Lattice& l);

struct AggregationClassification {
  std::size_t gap = 1;
  std::optional<std::vector<std::size_t>> h;  // fixes both endpoints
};

// Chain-valued means-like functions: domain and codomain are the same chain
// carrier, endpoints are preserved.
AggregationClassification classify_aggregation(const FiniteFunction& f);

}  // namespace aritygap
