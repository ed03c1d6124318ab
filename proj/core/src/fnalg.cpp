#include "aritygap/fnalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "aritygap/error.hpp"

namespace aritygap {

std::optional<EssentialityWitness> essentiality_witness(const FiniteFunction& f,
                                                        std::size_t index) {
  if (index >= f.arity()) fail(ErrorCode::index_out_of_range, "variable index out of range");
  const std::size_t k = f.domain().size();
  const std::size_t stride = f.stride(index);
  const std::size_t size = f.table_size();
  for (std::size_t t = 0; t < size; ++t) {
    const std::size_t at = (t / stride) % k;
    const Rational& here = f.value(t);
    for (std::size_t b = 0; b < k; ++b) {
      if (b == at) continue;
      const std::size_t other = t + (b - at) * stride;  // wraps consistently for b < at
      if (here != f.value(other)) {
        return EssentialityWitness{index, f.decode(t), b};
      }
    }
  }
  return std::nullopt;
}

bool is_essential(const FiniteFunction& f, std::size_t index) {
  if (index >= f.arity()) fail(ErrorCode::index_out_of_range, "variable index out of range");
  const std::size_t k = f.domain().size();
  const std::size_t stride = f.stride(index);
  const std::size_t size = f.table_size();
  for (std::size_t t = 0; t < size; ++t) {
    if ((t / stride) % k != 0) continue;
    const Rational& first = f.value(t);
    for (std::size_t b = 1; b < k; ++b) {
      if (first != f.value(t + b * stride)) return true;
    }
  }
  return false;
}

std::vector<std::size_t> essential_variables(const FiniteFunction& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (is_essential(f, i)) out.push_back(i);
  }
  return out;
}

std::size_t essential_arity(const FiniteFunction& f) { return essential_variables(f).size(); }

FiniteFunction simple_minor(const FiniteFunction& g, const VariableMap& sigma) {
  if (sigma.source_arity != g.arity()) {
    fail(ErrorCode::arity_mismatch, "variable map source arity differs from function arity");
  }
  if (sigma.map.size() != sigma.source_arity) {
    fail(ErrorCode::invalid_argument, "variable map entry count differs from source arity");
  }
  for (const std::size_t target : sigma.map) {
    if (target >= sigma.target_arity) {
      fail(ErrorCode::index_out_of_range, "variable map entry out of range");
    }
  }
  Tuple args(sigma.source_arity, 0);
  return FiniteFunction::tabulate(
      g.domain(), sigma.target_arity, g.codomain(),
      [&](std::span<const std::size_t> x) -> Rational {
        for (std::size_t s = 0; s < sigma.source_arity; ++s) args[s] = x[sigma.map[s]];
        return g.value(args);
      });
}

FiniteFunction identify(const FiniteFunction& f, std::size_t i, std::size_t j) {
  if (i >= f.arity() || j >= f.arity()) {
    fail(ErrorCode::index_out_of_range, "variable index out of range");
  }
  if (i == j) fail(ErrorCode::invalid_argument, "identified variables must be distinct");
  VariableMap sigma{f.arity(), f.arity(), {}};
  sigma.map.resize(f.arity());
  for (std::size_t s = 0; s < f.arity(); ++s) sigma.map[s] = s;
  sigma.map[i] = j;
  return simple_minor(f, sigma);
}

std::optional<VariableMap> minor_witness(const FiniteFunction& f, const FiniteFunction& g) {
  if (!(f.domain() == g.domain())) fail(ErrorCode::carrier_mismatch, "domain carriers differ");
  if (!(f.codomain() == g.codomain())) fail(ErrorCode::carrier_mismatch, "codomains differ");
  const std::size_t m = g.arity();
  const std::size_t n = f.arity();
  VariableMap sigma{m, n, std::vector<std::size_t>(m, 0)};
  Tuple x(n, 0);
  Tuple args(m, 0);
  while (true) {
    bool match = true;
    for (std::size_t t = 0; t < f.table_size() && match; ++t) {
      f.decode(t, x);
      for (std::size_t s = 0; s < m; ++s) args[s] = x[sigma.map[s]];
      match = f.value(t) == g.value(args);
    }
    if (match) return sigma;
    std::size_t pos = m;
    while (pos-- > 0) {
      if (++sigma.map[pos] < n) break;
      sigma.map[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

bool is_minor_of(const FiniteFunction& f, const FiniteFunction& g) {
  return minor_witness(f, g).has_value();
}

bool equivalent(const FiniteFunction& f, const FiniteFunction& g) {
  return is_minor_of(f, g) && is_minor_of(g, f);
}

std::pair<FiniteFunction, VariableMap> reduce_to_essential(const FiniteFunction& f) {
  const auto essentials = essential_variables(f);
  if (essentials.empty()) {
    fail(ErrorCode::constant_function, "constant function has no essential variables");
  }
  const std::size_t k = essentials.size();
  Tuple args(f.arity(), 0);
  FiniteFunction reduced = FiniteFunction::tabulate(
      f.domain(), k, f.codomain(), [&](std::span<const std::size_t> y) -> Rational {
        std::fill(args.begin(), args.end(), 0);
        for (std::size_t s = 0; s < k; ++s) args[essentials[s]] = y[s];
        return f.value(args);
      });
  return {std::move(reduced), VariableMap{k, f.arity(), essentials}};
}

bool has_repeated_coordinate(std::span<const std::size_t> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return true;
    }
  }
  return false;
}

std::vector<std::size_t> diagonal_tuples(const Carrier& domain, std::size_t arity) {
  const std::size_t size = table_size_for(domain.size(), arity);
  std::vector<std::size_t> out;
  if (arity == 1) {
    out.resize(size);
    for (std::size_t t = 0; t < size; ++t) out[t] = t;
    return out;
  }
  Tuple tuple(arity, 0);
  for (std::size_t t = 0; t < size; ++t) {
    std::size_t rest = t;
    for (std::size_t i = arity; i-- > 0;) {
      tuple[i] = rest % domain.size();
      rest /= domain.size();
    }
    if (has_repeated_coordinate(tuple)) out.push_back(t);
  }
  return out;
}

std::uint64_t oddsupp(std::span<const std::size_t> tuple) {
  std::uint64_t mask = 0;
  for (const std::size_t e : tuple) mask ^= std::uint64_t(1) << e;
  return mask;
}

bool is_determined_by_oddsupp(const FiniteFunction& f) {
  std::unordered_map<std::uint64_t, Rational> seen;
  Tuple tuple(f.arity(), 0);
  for (const std::size_t t : diagonal_tuples(f.domain(), f.arity())) {
    f.decode(t, tuple);
    const auto [it, fresh] = seen.emplace(oddsupp(tuple), f.value(t));
    if (!fresh && it->second != f.value(t)) return false;
  }
  return true;
}

namespace {

// Does the diagonal restriction factor through the coordinates in `mask`?
bool factors_through(const FiniteFunction& f, const std::vector<std::size_t>& diagonal,
                     std::size_t mask) {
  std::unordered_map<std::size_t, Rational> fibers;
  Tuple tuple(f.arity(), 0);
  const std::size_t k = f.domain().size();
  for (const std::size_t t : diagonal) {
    f.decode(t, tuple);
    std::size_t key = 0;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (mask & (std::size_t(1) << i)) key = key * k + tuple[i];
    }
    const auto [it, fresh] = fibers.emplace(key, f.value(t));
    if (!fresh && it->second != f.value(t)) return false;
  }
  return true;
}

}  // namespace

std::size_t quasi_arity(const FiniteFunction& f) {
  const auto diagonal = diagonal_tuples(f.domain(), f.arity());
  const std::size_t n = f.arity();
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      if (factors_through(f, diagonal, mask)) return size;
    }
  }
  return n;  // unreachable: the full coordinate set always factors
}

std::size_t arity_gap(const FiniteFunction& f) {
  const auto essentials = essential_variables(f);
  if (essentials.size() < 2) {
    fail(ErrorCode::arity_gap_undefined, "arity gap needs at least two essential variables");
  }
  std::size_t best_minor_ess = 0;
  for (const std::size_t i : essentials) {
    for (const std::size_t j : essentials) {
      if (i == j) continue;
      best_minor_ess = std::max(best_minor_ess, essential_arity(identify(f, i, j)));
    }
  }
  return essentials.size() - best_minor_ess;
}

const char* theorem_case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::case_p_ge_3: return "case_p_ge_3";
    case TheoremCase::case_gap2_qa: return "case_gap2_qa";
    case TheoremCase::case_gap2_oddsupp: return "case_gap2_oddsupp";
    case TheoremCase::case_n3_condition: return "case_n3_condition";
    case TheoremCase::case_gap1: return "case_gap1";
  }
  return "unknown";
}

GapReport gap_via_characterization(const FiniteFunction& f) {
  const std::size_t n = f.arity();
  GapReport report;
  report.arity = n;
  report.essential_variables = essential_variables(f);
  report.ess = report.essential_variables.size();
  if (report.ess != n) {
    fail(ErrorCode::inessential_variable, "input must depend on all of its variables");
  }
  if (n < 2) fail(ErrorCode::arity_gap_undefined, "arity gap needs at least two variables");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t minor_ess = essential_arity(identify(f, i, j));
      report.per_pair_minor_ess[{i, j}] = minor_ess;
      report.essl = std::max(report.essl, minor_ess);
    }
  }

  report.qa = quasi_arity(f);
  report.oddsupp_determined = is_determined_by_oddsupp(f);

  if (n >= 3 && report.qa + 3 <= n) {
    report.gap = n - report.qa;
    report.theorem_case = TheoremCase::case_p_ge_3;
  } else if (n == 3) {
    if (ternary_gap2_condition(f).has_value()) {
      report.gap = 2;
      report.theorem_case = TheoremCase::case_n3_condition;
    } else {
      report.gap = 1;
      report.theorem_case = TheoremCase::case_gap1;
    }
  } else if (report.qa + 2 == n) {
    report.gap = 2;
    report.theorem_case = TheoremCase::case_gap2_qa;
  } else if (report.qa == n && report.oddsupp_determined) {
    report.gap = 2;
    report.theorem_case = TheoremCase::case_gap2_oddsupp;
  } else {
    report.gap = 1;
    report.theorem_case = TheoremCase::case_gap1;
  }
  return report;
}

std::optional<TernaryGap2> ternary_gap2_condition(const FiniteFunction& f) {
  if (f.arity() != 3) fail(ErrorCode::wrong_arity, "ternary condition needs arity 3");
  const std::size_t k = f.domain().size();

  // Slice p fixes two coordinates to the repeated value u and lets the
  // remaining coordinate carry w.
  const auto slice = [&](std::size_t p, std::size_t u, std::size_t w) -> const Rational& {
    Tuple t{u, u, u};
    t[p] = w;
    return f.value(t);
  };

  std::vector<Rational> h;
  std::array<int, 3> picks{};
  for (std::size_t p = 0; p < 3; ++p) {
    bool indep_w = true;  // candidate for h(repeated value)
    bool indep_u = true;  // candidate for h(distinguished value)
    for (std::size_t u = 0; u < k && (indep_w || indep_u); ++u) {
      for (std::size_t w = 0; w < k; ++w) {
        if (slice(p, u, w) != slice(p, u, 0)) indep_w = false;
        if (slice(p, u, w) != slice(p, 0, w)) indep_u = false;
      }
    }
    if (indep_w == indep_u) return std::nullopt;  // constant slice or genuine binary
    std::vector<Rational> candidate(k);
    for (std::size_t x = 0; x < k; ++x) {
      candidate[x] = indep_w ? slice(p, x, 0) : slice(p, 0, x);
    }
    if (p == 0) {
      h = std::move(candidate);
    } else if (h != candidate) {
      return std::nullopt;
    }
    picks[p] = indep_w ? 0 : 1;
  }
  return TernaryGap2{std::move(h), picks};
}

}  // namespace aritygap
