#include "aritygap/order.hpp"

#include <algorithm>

#include "aritygap/error.hpp"
#include "aritygap/fnalg.hpp"

namespace aritygap {

Poset::Poset(Carrier carrier, std::vector<std::vector<bool>> leq)
    : carrier_(std::move(carrier)), leq_(std::move(leq)) {
  const std::size_t size = carrier_.size();
  if (leq_.size() != size) fail(ErrorCode::not_a_poset, "relation size differs from carrier");
  for (const auto& row : leq_) {
    if (row.size() != size) fail(ErrorCode::not_a_poset, "relation row size differs from carrier");
  }
  for (std::size_t x = 0; x < size; ++x) {
    if (!leq_[x][x]) fail(ErrorCode::not_a_poset, "relation is not reflexive");
    for (std::size_t y = 0; y < size; ++y) {
      if (x != y && leq_[x][y] && leq_[y][x]) {
        fail(ErrorCode::not_a_poset, "antisymmetry violated between '" + carrier_.symbol(x) +
                                         "' and '" + carrier_.symbol(y) + "'");
      }
      if (!leq_[x][y]) continue;
      for (std::size_t z = 0; z < size; ++z) {
        if (leq_[y][z] && !leq_[x][z]) fail(ErrorCode::not_a_poset, "relation is not transitive");
      }
    }
  }
  covers_above_.resize(size);
  for (const auto& [low, high] : covers()) covers_above_[low].push_back(high);
}

Poset Poset::chain(std::size_t size) { return chain(Carrier::range(size)); }

Poset Poset::chain(Carrier carrier) {
  const std::size_t size = carrier.size();
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = x; y < size; ++y) leq[x][y] = true;
  }
  return Poset(std::move(carrier), std::move(leq));
}

Poset Poset::antichain(std::size_t size) {
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t x = 0; x < size; ++x) leq[x][x] = true;
  return Poset(Carrier::range(size), std::move(leq));
}

Poset Poset::from_covers(Carrier carrier,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t size = carrier.size();
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t x = 0; x < size; ++x) leq[x][x] = true;
  for (const auto& [low, high] : covers) {
    if (low >= size || high >= size) fail(ErrorCode::index_out_of_range, "cover index out of range");
    if (low == high) fail(ErrorCode::not_a_poset, "cover relates an element to itself");
    leq[low][high] = true;
  }
  for (std::size_t via = 0; via < size; ++via) {
    for (std::size_t x = 0; x < size; ++x) {
      if (!leq[x][via]) continue;
      for (std::size_t y = 0; y < size; ++y) {
        if (leq[via][y]) leq[x][y] = true;
      }
    }
  }
  return Poset(std::move(carrier), std::move(leq));
}

Poset Poset::from_relation(Carrier carrier, std::vector<std::vector<bool>> leq) {
  return Poset(std::move(carrier), std::move(leq));
}

Poset Poset::bidirected_non_lattice_6() {
  Carrier carrier("bowtie6", {"bot", "a", "b", "c", "d", "top"});
  const std::size_t bot = 0, a = 1, b = 2, c = 3, d = 4, top = 5;
  return from_covers(std::move(carrier),
                     {{bot, a}, {bot, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, top}, {d, top}});
}

bool Poset::leq(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) fail(ErrorCode::index_out_of_range, "element index out of range");
  return leq_[x][y];
}

bool Poset::has_upper_bound(std::size_t x, std::size_t y) const {
  for (std::size_t z = 0; z < size(); ++z) {
    if (leq(x, z) && leq(y, z)) return true;
  }
  return false;
}

bool Poset::has_lower_bound(std::size_t x, std::size_t y) const {
  for (std::size_t z = 0; z < size(); ++z) {
    if (leq(z, x) && leq(z, y)) return true;
  }
  return false;
}

std::optional<std::size_t> Poset::least_upper_bound(std::size_t x, std::size_t y) const {
  for (std::size_t z = 0; z < size(); ++z) {
    if (!leq(x, z) || !leq(y, z)) continue;
    bool least = true;
    for (std::size_t w = 0; w < size() && least; ++w) {
      if (leq(x, w) && leq(y, w)) least = leq(z, w);
    }
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::greatest_lower_bound(std::size_t x, std::size_t y) const {
  for (std::size_t z = 0; z < size(); ++z) {
    if (!leq(z, x) || !leq(z, y)) continue;
    bool greatest = true;
    for (std::size_t w = 0; w < size() && greatest; ++w) {
      if (leq(w, x) && leq(w, y)) greatest = leq(w, z);
    }
    if (greatest) return z;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (x == y || !leq_[x][y]) continue;
      bool direct = true;
      for (std::size_t z = 0; z < size() && direct; ++z) {
        if (z != x && z != y && leq_[x][z] && leq_[z][y]) direct = false;
      }
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

bool Poset::is_chain() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (!comparable(x, y)) return false;
    }
  }
  return true;
}

DirectednessReport directedness(const Poset& p) {
  DirectednessReport report;
  report.upwards = true;
  report.downwards = true;
  report.pseudo_directed = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      const bool up = p.has_upper_bound(x, y);
      const bool down = p.has_lower_bound(x, y);
      report.upwards = report.upwards && up;
      report.downwards = report.downwards && down;
      report.pseudo_directed = report.pseudo_directed && (up || down);
    }
  }
  report.bidirected = report.upwards && report.downwards;
  return report;
}

Lattice::Lattice(Poset p) : poset_(std::move(p)) {
  const std::size_t size = poset_.size();
  meet_.resize(size * size);
  join_.resize(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const auto glb = poset_.greatest_lower_bound(x, y);
      const auto lub = poset_.least_upper_bound(x, y);
      if (!glb || !lub) {
        fail(ErrorCode::not_a_lattice,
             "no unique bound for '" + poset_.carrier().symbol(x) + "' and '" +
                 poset_.carrier().symbol(y) + "'");
      }
      meet_[x * size + y] = *glb;
      join_[x * size + y] = *lub;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t x = 1; x < size; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
  distributive_ = true;
  for (std::size_t x = 0; x < size && distributive_; ++x) {
    for (std::size_t y = 0; y < size && distributive_; ++y) {
      for (std::size_t z = 0; z < size; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          distributive_ = false;
          break;
        }
      }
    }
  }
}

Lattice Lattice::from_poset(Poset p) { return Lattice(std::move(p)); }

Lattice Lattice::chain(std::size_t size) { return Lattice(Poset::chain(size)); }

std::size_t Lattice::median_raw(std::size_t x, std::size_t y, std::size_t z) const {
  return join(join(meet(x, y), meet(x, z)), meet(y, z));
}

bool is_distributive(const Lattice& l) { return l.distributive(); }

std::size_t median(const Lattice& l, std::size_t x, std::size_t y, std::size_t z) {
  if (!l.distributive()) fail(ErrorCode::not_distributive, "median needs a distributive lattice");
  return l.median_raw(x, y, z);
}

bool is_lattice_homomorphism(const std::vector<std::size_t>& h, const Lattice& a,
                             const Lattice& b) {
  if (h.size() != a.size()) fail(ErrorCode::arity_mismatch, "table size differs from carrier");
  for (const std::size_t image : h) {
    if (image >= b.size()) fail(ErrorCode::index_out_of_range, "image index out of range");
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (h[a.meet(x, y)] != b.meet(h[x], h[y])) return false;
      if (h[a.join(x, y)] != b.join(h[x], h[y])) return false;
    }
  }
  return true;
}

namespace {

void check_orders(const FiniteFunction& f, const Poset& domain, const Poset& codomain) {
  if (!(f.domain() == domain.carrier())) {
    fail(ErrorCode::carrier_mismatch, "domain poset carrier differs from function domain");
  }
  if (!f.codomain().is_carrier() || !(f.codomain().as_carrier() == codomain.carrier())) {
    fail(ErrorCode::carrier_mismatch, "codomain poset carrier differs from function codomain");
  }
}

}  // namespace

bool is_order_preserving(const FiniteFunction& f, const Poset& domain, const Poset& codomain) {
  check_orders(f, domain, codomain);
  const std::size_t k = domain.size();
  // Raising one coordinate along a cover reaches every componentwise step.
  for (std::size_t t = 0; t < f.table_size(); ++t) {
    for (std::size_t i = 0; i < f.arity(); ++i) {
      const std::size_t at = (t / f.stride(i)) % k;
      for (const std::size_t up : domain.covers_above()[at]) {
        if (!codomain.leq(f.value_index(t), f.value_index(t + (up - at) * f.stride(i)))) {
          return false;
        }
      }
    }
  }
  return true;
}

ComparableWitness comparable_witness(const FiniteFunction& f, const Poset& domain,
                                     std::size_t index) {
  if (!(f.domain() == domain.carrier())) {
    fail(ErrorCode::carrier_mismatch, "domain poset carrier differs from function domain");
  }
  if (!directedness(domain).pseudo_directed) {
    fail(ErrorCode::not_pseudo_directed, "domain must be pseudo-directed");
  }
  if (!is_essential(f, index)) {
    fail(ErrorCode::inessential_variable, "witness requested for an inessential variable");
  }
  const std::size_t k = domain.size();
  const std::size_t stride = f.stride(index);
  for (std::size_t t = 0; t < f.table_size(); ++t) {
    const std::size_t at = (t / stride) % k;
    for (std::size_t b = 0; b < k; ++b) {
      if (!domain.less(at, b)) continue;
      if (f.value(t) != f.value(t + (b - at) * stride)) {
        return ComparableWitness{f.decode(t), b};
      }
    }
  }
  fail(ErrorCode::not_pseudo_directed, "no comparable witness found");
}

PairRaiseWitness minor_monotone_witness(const FiniteFunction& f, const Poset& domain,
                                        const Poset& codomain, std::size_t i, std::size_t j) {
  check_orders(f, domain, codomain);
  if (i == j) fail(ErrorCode::invalid_argument, "positions must be distinct");
  if (i >= f.arity() || j >= f.arity()) {
    fail(ErrorCode::index_out_of_range, "variable index out of range");
  }
  if (!directedness(domain).bidirected) {
    fail(ErrorCode::not_bidirected, "domain must be bidirected");
  }
  if (!is_order_preserving(f, domain, codomain)) {
    fail(ErrorCode::not_order_preserving, "function must be order-preserving");
  }
  if (essential_arity(f) != f.arity()) {
    fail(ErrorCode::inessential_variable, "input must depend on all of its variables");
  }
  const std::size_t k = domain.size();
  for (std::size_t t = 0; t < f.table_size(); ++t) {
    const std::size_t low = (t / f.stride(i)) % k;
    if ((t / f.stride(j)) % k != low) continue;
    for (std::size_t high = 0; high < k; ++high) {
      if (!domain.less(low, high)) continue;
      const std::size_t raised = t + (high - low) * (f.stride(i) + f.stride(j));
      if (codomain.less(f.value_index(t), f.value_index(raised))) {
        return PairRaiseWitness{low, high, f.decode(t)};
      }
    }
  }
  fail(ErrorCode::not_bidirected, "no strict pair-raise witness found");
}

MonotoneStructure check_monotone_structural_props(const FiniteFunction& f, const Poset& domain,
                                                  const Poset& codomain) {
  check_orders(f, domain, codomain);
  if (!directedness(domain).bidirected) {
    fail(ErrorCode::not_bidirected, "domain must be bidirected");
  }
  if (!is_order_preserving(f, domain, codomain)) {
    fail(ErrorCode::not_order_preserving, "function must be order-preserving");
  }
  if (essential_arity(f) != f.arity() || f.arity() < 2) {
    fail(ErrorCode::inessential_variable, "input must depend on all of at least two variables");
  }
  MonotoneStructure out;
  out.qa = quasi_arity(f);
  out.qa_large_enough = out.qa + 1 >= f.arity();
  out.not_oddsupp_determined = !is_determined_by_oddsupp(f);
  return out;
}

MonotoneGapClassification classify_monotone_gap(const FiniteFunction& f, const Poset& domain,
                                                const Poset& codomain) {
  check_orders(f, domain, codomain);
  if (!directedness(domain).bidirected) {
    fail(ErrorCode::not_bidirected, "domain must be bidirected");
  }
  if (!is_order_preserving(f, domain, codomain)) {
    fail(ErrorCode::not_order_preserving, "function must be order-preserving");
  }
  if (essential_arity(f) != f.arity() || f.arity() < 2) {
    fail(ErrorCode::inessential_variable, "input must depend on all of at least two variables");
  }
  if (f.arity() != 3) return {1, std::nullopt};

  const std::size_t k = domain.size();
  std::vector<std::size_t> h(k);
  for (std::size_t x = 0; x < k; ++x) h[x] = f.value_index(f.index_of(Tuple{x, x, x}));
  if (std::all_of(h.begin(), h.end(), [&](std::size_t v) { return v == h[0]; })) {
    return {1, std::nullopt};
  }
  for (std::size_t rep = 0; rep < k; ++rep) {
    for (std::size_t other = 0; other < k; ++other) {
      if (f.value_index(f.index_of(Tuple{other, rep, rep})) != h[rep]) return {1, std::nullopt};
      if (f.value_index(f.index_of(Tuple{rep, other, rep})) != h[rep]) return {1, std::nullopt};
      if (f.value_index(f.index_of(Tuple{rep, rep, other})) != h[rep]) return {1, std::nullopt};
    }
  }
  return {2, MonotoneGap2Certificate{std::move(h)}};
}

std::optional<std::vector<std::size_t>> median_form_match(const FiniteFunction& f,
                                                          const Poset& chain_domain,
                                                          const Lattice& codomain) {
  check_orders(f, chain_domain, codomain.poset());
  if (!chain_domain.is_chain()) fail(ErrorCode::not_a_chain, "domain must be a chain");
  if (f.arity() != 3) fail(ErrorCode::wrong_arity, "median form is ternary");
  if (!is_order_preserving(f, chain_domain, codomain.poset())) {
    fail(ErrorCode::not_order_preserving, "function must be order-preserving");
  }
  const std::size_t k = chain_domain.size();
  std::vector<std::size_t> h(k);
  for (std::size_t x = 0; x < k; ++x) h[x] = f.value_index(f.index_of(Tuple{x, x, x}));
  if (std::all_of(h.begin(), h.end(), [&](std::size_t v) { return v == h[0]; })) {
    return std::nullopt;
  }
  Tuple t(3);
  for (t[0] = 0; t[0] < k; ++t[0]) {
    for (t[1] = 0; t[1] < k; ++t[1]) {
      for (t[2] = 0; t[2] < k; ++t[2]) {
        // h's image is a chain, so the raw median form is unambiguous here.
        if (f.value_index(f.index_of(t)) != codomain.median_raw(h[t[0]], h[t[1]], h[t[2]])) {
          return std::nullopt;
        }
      }
    }
  }
  return h;
}

FiniteFunction truncated_median(const Lattice& l, std::size_t a, std::size_t b) {
  if (a >= l.size() || b >= l.size()) {
    fail(ErrorCode::index_out_of_range, "element index out of range");
  }
  if (!l.poset().less(a, b)) {
    fail(ErrorCode::invalid_argument, "truncation bounds must satisfy a < b");
  }
  if (!l.distributive()) {
    fail(ErrorCode::not_distributive, "truncated median needs a distributive lattice");
  }
  return FiniteFunction::tabulate(
      l.carrier(), 3, Codomain::carrier(l.carrier()),
      [&](std::span<const std::size_t> x) -> Rational {
        const std::size_t med = l.median_raw(x[0], x[1], x[2]);
        return Rational(static_cast<std::int64_t>(l.meet(l.join(a, med), b)));
      });
}

std::optional<std::pair<std::size_t, std::size_t>> classify_latpoly_gap2(const FiniteFunction& f,
                                                                         const Lattice& l) {
  check_orders(f, l.poset(), l.poset());
  if (!l.distributive()) {
    fail(ErrorCode::not_distributive, "classification needs a distributive lattice");
  }
  if (!is_order_preserving(f, l.poset(), l.poset())) {
    fail(ErrorCode::not_order_preserving, "function must be order-preserving");
  }
  if (f.arity() != 3) return std::nullopt;
  const std::size_t a = f.value_index(f.index_of(Tuple{l.bottom(), l.bottom(), l.bottom()}));
  const std::size_t b = f.value_index(f.index_of(Tuple{l.top(), l.top(), l.top()}));
  if (!l.poset().less(a, b)) return std::nullopt;
  if (f == truncated_median(l, a, b)) return std::pair{a, b};
  return std::nullopt;
}

AggregationClassification classify_aggregation(const FiniteFunction& f) {
  if (!f.codomain().is_carrier() || !(f.codomain().as_carrier() == f.domain())) {
    fail(ErrorCode::carrier_mismatch, "domain and codomain must be the same chain carrier");
  }
  const Poset chain = Poset::chain(f.domain());
  if (!is_order_preserving(f, chain, chain)) {
    fail(ErrorCode::not_order_preserving, "function must be order-preserving");
  }
  const std::size_t k = f.domain().size();
  const std::size_t top = k - 1;
  const Tuple bottoms(f.arity(), 0);
  const Tuple tops(f.arity(), top);
  if (f.value_index(f.index_of(bottoms)) != 0 || f.value_index(f.index_of(tops)) != top) {
    fail(ErrorCode::boundary_violation, "endpoints must map to themselves");
  }
  if (essential_arity(f) < 2) {
    fail(ErrorCode::arity_gap_undefined, "classification needs at least two essential variables");
  }
  if (f.arity() != 3) return {1, std::nullopt};
  const Lattice l = Lattice::from_poset(chain);
  if (auto h = median_form_match(f, chain, l)) {
    return {2, std::move(h)};
  }
  return {1, std::nullopt};
}

}  // namespace aritygap
