#include "aritygap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "aritygap/boolfn.hpp"
#include "aritygap/enumerate.hpp"
#include "aritygap/error.hpp"
#include "aritygap/extend.hpp"
#include "aritygap/fnalg.hpp"
#include "aritygap/io.hpp"
#include "aritygap/oracle.hpp"

namespace aritygap {

const char* check_name(Check c) {
  switch (c) {
    case Check::boolean_gap: return "boolean";
    case Check::pseudo_gap: return "pseudo";
    case Check::characterization: return "characterization";
    case Check::willard: return "willard";
    case Check::monotone: return "monotone";
    case Check::lovasz: return "lovasz";
    case Check::latpol: return "latpol";
  }
  return "unknown";
}

std::optional<Check> check_from_name(std::string_view name) {
  for (Check c : {Check::boolean_gap, Check::pseudo_gap, Check::characterization, Check::willard,
                  Check::monotone, Check::lovasz, Check::latpol}) {
    if (name == check_name(c)) return c;
  }
  return std::nullopt;
}

namespace {

// Check-side random draws (linearity triples) use a stream separated from the
// generation stream by this salt.
constexpr std::uint64_t kCheckStreamSalt = 0x636865636Bull;

constexpr std::uint64_t kChunkSize = 1024;

enum class GenKind { exhaustive, sampled, monotone_sampled, latpol };

struct SweepContext {
  explicit SweepContext(const SweepConfig& c) : config(c) {}

  const SweepConfig& config;
  bool rational = false;
  GenKind gen = GenKind::exhaustive;
  std::uint64_t count = 0;

  std::optional<Poset> domain_poset;
  std::optional<Poset> codomain_poset;      // carrier codomains only
  std::optional<Lattice> codomain_lattice;  // when the codomain poset is one
  std::optional<Lattice> chain_lattice;     // latpol generation
  std::optional<Carrier> codomain_carrier;

  std::optional<ExhaustiveEnumeration> exhaustive;
  std::optional<SampledEnumeration> sampled;
  std::optional<MonotoneSampledEnumeration> monotone_sampled;
  bool relabel_codomain = false;
  bool lovasz_mode = false;
};

struct ChunkStats {
  std::uint64_t generated = 0, eligible = 0, skipped = 0;
  std::uint64_t agreements = 0, disagreements = 0, violations = 0;
  std::vector<CheckTally> tallies;
  std::vector<Counterexample> counterexamples;
};

bool has_check(const SweepConfig& c, Check check) {
  return std::find(c.checks.begin(), c.checks.end(), check) != c.checks.end();
}

void validate(const SweepConfig& c) {
  if (c.checks.empty()) fail(ErrorCode::invalid_argument, "a sweep needs at least one check");
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    for (std::size_t j = i + 1; j < c.checks.size(); ++j) {
      if (c.checks[i] == c.checks[j]) {
        fail(ErrorCode::invalid_argument,
             std::string("duplicate check '") + check_name(c.checks[i]) + "'");
      }
    }
  }
  if (c.arity == 0) fail(ErrorCode::invalid_argument, "arity must be at least 1");
  if (c.jobs == 0) fail(ErrorCode::invalid_argument, "job count must be at least 1");

  const bool rational = !c.rational_values.empty();
  for (std::size_t i = 0; i < c.rational_values.size(); ++i) {
    for (std::size_t j = i + 1; j < c.rational_values.size(); ++j) {
      if (c.rational_values[i] == c.rational_values[j]) {
        fail(ErrorCode::invalid_argument,
             "duplicate value '" + to_string(c.rational_values[i]) + "' in the palette");
      }
    }
  }

  const std::size_t domain_size = c.domain_poset ? c.domain_poset->size() : c.domain_size;
  if (domain_size < 2) fail(ErrorCode::invalid_argument, "domain needs at least two elements");
  if (!rational) {
    const std::size_t codomain_size =
        c.codomain_poset ? c.codomain_poset->size() : c.codomain_size;
    if (codomain_size < 1) fail(ErrorCode::invalid_argument, "codomain must be nonempty");
  }

  if (c.mode == SweepMode::sample) {
    if (!c.seed) fail(ErrorCode::invalid_argument, "sample mode needs a seed");
    if (c.sample_count == 0) fail(ErrorCode::invalid_argument, "sample mode needs a sample count");
  }

  if (c.monotone_only && rational) {
    fail(ErrorCode::invalid_argument, "monotone generation needs a carrier codomain");
  }
  if (c.monotone_only && c.mode == SweepMode::sample && c.codomain_poset &&
      !c.codomain_poset->is_chain()) {
    fail(ErrorCode::invalid_argument, "sampled monotone generation needs a chain codomain");
  }

  for (Check check : c.checks) {
    switch (check) {
      case Check::boolean_gap:
        if (rational || domain_size != 2 ||
            (c.codomain_poset ? c.codomain_poset->size() : c.codomain_size) != 2) {
          fail(ErrorCode::invalid_argument,
               "the boolean check needs a two-element domain and codomain");
        }
        break;
      case Check::pseudo_gap:
        if (!rational || domain_size != 2) {
          fail(ErrorCode::invalid_argument,
               "the pseudo check needs a two-element domain and a rational palette");
        }
        break;
      case Check::characterization:
      case Check::willard:
        break;
      case Check::monotone:
        if (!c.monotone_only) {
          fail(ErrorCode::invalid_argument, "the monotone check needs monotone generation");
        }
        break;
      case Check::lovasz:
        if (c.checks.size() != 1) {
          fail(ErrorCode::invalid_argument, "the lovasz check runs alone");
        }
        if (!rational || domain_size != 2 || c.domain_poset || c.codomain_poset ||
            c.monotone_only) {
          fail(ErrorCode::invalid_argument,
               "the lovasz check needs a rational palette on a two-element domain");
        }
        break;
      case Check::latpol:
        if (c.checks.size() != 1) {
          fail(ErrorCode::invalid_argument, "the latpol check runs alone");
        }
        if (c.mode != SweepMode::sample) {
          fail(ErrorCode::invalid_argument, "the latpol check samples random polynomials");
        }
        if (rational || c.domain_poset || c.codomain_poset || c.monotone_only ||
            c.codomain_size != c.domain_size) {
          fail(ErrorCode::invalid_argument,
               "the latpol check needs one chain as both domain and codomain");
        }
        break;
    }
  }
}

SweepContext make_context(const SweepConfig& c) {
  validate(c);
  SweepContext ctx(c);
  ctx.rational = !c.rational_values.empty();

  const Carrier domain_carrier =
      c.domain_poset ? c.domain_poset->carrier() : Carrier::range(c.domain_size);
  ctx.domain_poset = c.domain_poset ? *c.domain_poset : Poset::chain(domain_carrier);

  if (!ctx.rational) {
    ctx.codomain_carrier =
        c.codomain_poset ? c.codomain_poset->carrier() : Carrier::range(c.codomain_size);
    ctx.codomain_poset =
        c.codomain_poset ? *c.codomain_poset : Poset::chain(*ctx.codomain_carrier);
    try {
      ctx.codomain_lattice = Lattice::from_poset(*ctx.codomain_poset);
    } catch (const Error&) {
      // not a lattice; the median corollary has nothing to say then
    }
  }

  if (has_check(c, Check::monotone) && !directedness(*ctx.domain_poset).bidirected) {
    fail(ErrorCode::not_bidirected, "the monotone check needs a bidirected domain");
  }

  if (has_check(c, Check::latpol)) {
    ctx.gen = GenKind::latpol;
    ctx.chain_lattice = Lattice::chain(c.domain_size);
    ctx.count = c.sample_count;
    return ctx;
  }

  ctx.lovasz_mode = has_check(c, Check::lovasz);

  FunctionSpace space;
  space.domain = domain_carrier;
  space.arity = c.arity;
  if (ctx.rational) {
    space.codomain = Codomain::rational();
    space.values = c.rational_values;
  } else {
    space.codomain = Codomain::carrier(*ctx.codomain_carrier);
    space.values.clear();
    for (std::size_t v = 0; v < ctx.codomain_carrier->size(); ++v) {
      space.values.push_back(Rational(static_cast<std::int64_t>(v)));
    }
  }

  if (c.mode == SweepMode::exhaustive) {
    ctx.gen = GenKind::exhaustive;
    ctx.exhaustive.emplace(space, c.table_budget);
    ctx.count = ctx.exhaustive->count();
  } else if (c.monotone_only) {
    ctx.gen = GenKind::monotone_sampled;
    ctx.monotone_sampled.emplace(*ctx.domain_poset, ctx.codomain_carrier->size(), c.arity,
                                 c.sample_count, *c.seed);
    ctx.relabel_codomain = !(*ctx.codomain_carrier == Carrier::range(ctx.codomain_carrier->size()));
    ctx.count = c.sample_count;
  } else {
    ctx.gen = GenKind::sampled;
    ctx.sampled.emplace(space, c.sample_count, *c.seed);
    ctx.count = c.sample_count;
  }
  return ctx;
}

std::optional<FiniteFunction> generate(const SweepContext& ctx, std::uint64_t index) {
  switch (ctx.gen) {
    case GenKind::exhaustive: {
      FiniteFunction f = ctx.exhaustive->at(index);
      if (ctx.config.monotone_only &&
          !is_order_preserving(f, *ctx.domain_poset, *ctx.codomain_poset)) {
        return std::nullopt;
      }
      return f;
    }
    case GenKind::sampled:
      return ctx.sampled->at(index);
    case GenKind::monotone_sampled: {
      FiniteFunction f = ctx.monotone_sampled->at(index);
      if (ctx.relabel_codomain) {
        return FiniteFunction(f.domain(), f.arity(), Codomain::carrier(*ctx.codomain_carrier),
                              f.table());
      }
      return f;
    }
    case GenKind::latpol: {
      SplitMix64 rng = sample_stream(*ctx.config.seed, index);
      return random_chain_polynomial(*ctx.chain_lattice, ctx.config.arity, rng,
                                     ctx.config.polynomial_depth);
    }
  }
  return std::nullopt;
}

void add_counterexample(const SweepContext& ctx, ChunkStats& out, std::uint64_t index, Check check,
                        std::string description, const FiniteFunction* fn,
                        TableKind kind = TableKind::function) {
  if (out.counterexamples.size() >= ctx.config.max_counterexamples) return;
  Counterexample ce;
  ce.index = index;
  ce.check = check;
  ce.description = std::move(description);
  if (fn) ce.table = table_to_string(*fn, kind);
  out.counterexamples.push_back(std::move(ce));
}

void record_violation(const SweepContext& ctx, ChunkStats& out, std::uint64_t index, Check check,
                      std::string description, const FiniteFunction* fn,
                      TableKind kind = TableKind::function) {
  ++out.violations;
  add_counterexample(ctx, out, index, check, std::move(description), fn, kind);
}

void record_verdict(const SweepContext& ctx, ChunkStats& out, std::size_t check_slot,
                    std::uint64_t index, bool agreed, std::string description,
                    const FiniteFunction* fn, TableKind kind = TableKind::function) {
  if (agreed) {
    ++out.agreements;
    return;
  }
  ++out.disagreements;
  ++out.tallies[check_slot].disagreements;
  add_counterexample(ctx, out, index, ctx.config.checks[check_slot], std::move(description), fn,
                     kind);
}

void check_boolean(const SweepContext& ctx, ChunkStats& out, std::size_t slot,
                   std::uint64_t index, const FiniteFunction& g, std::size_t og) {
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  if (og > 2) {
    record_violation(ctx, out, index, Check::boolean_gap,
                     "oracle gap " + std::to_string(og) + " above the two-valued bound", &g);
  }
  const BooleanGapClassification r = classify_boolean_gap(g);
  if (r.gap == 2) ++tally.gap2;
  record_verdict(ctx, out, slot, index, (r.gap == 2) == (og == 2),
                 "classifier gap " + std::to_string(r.gap) + " vs oracle gap " +
                     std::to_string(og),
                 &g);
  if (r.detail &&
      instantiate_boolean_template(r.detail->tmpl, g.arity(), r.detail->c,
                                   r.detail->permutation) != anf(g)) {
    record_violation(ctx, out, index, Check::boolean_gap,
                     std::string("template '") + boolean_template_name(r.detail->tmpl) +
                         "' does not regenerate the normal form",
                     &g);
  }
}

void check_pseudo(const SweepContext& ctx, ChunkStats& out, std::size_t slot, std::uint64_t index,
                  const FiniteFunction& g, std::size_t og) {
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  if (og > 2) {
    record_violation(ctx, out, index, Check::pseudo_gap,
                     "oracle gap " + std::to_string(og) + " above the pseudo-boolean bound", &g);
  }
  const PseudoGapClassification r = classify_pseudo_boolean_gap(g);
  if (r.gap == 2) ++tally.gap2;
  record_verdict(ctx, out, slot, index, (r.gap == 2) == (og == 2),
                 "classifier gap " + std::to_string(r.gap) + " vs oracle gap " +
                     std::to_string(og),
                 &g);
  if (r.detail && r.detail->reason == PseudoGap2Reason::two_valued_composition) {
    const FiniteFunction& inner = *r.detail->inner;
    for (std::size_t t = 0; t < g.table_size(); ++t) {
      const Rational expect = inner.value(t) == Rational(0) ? r.detail->low : r.detail->high;
      if (g.value(t) != expect) {
        record_violation(ctx, out, index, Check::pseudo_gap,
                         "skeleton recomposition differs at table row " + std::to_string(t), &g);
        break;
      }
    }
  }
  if (r.detail && r.detail->reason == PseudoGap2Reason::binary_diag) {
    if (g.arity() != 2 || g.value(std::size_t(0)) != g.value(g.table_size() - 1)) {
      record_violation(ctx, out, index, Check::pseudo_gap,
                       "binary_diag match without equal diagonal values", &g);
    }
  }
}

void check_characterization(const SweepContext& ctx, ChunkStats& out, std::size_t slot,
                            std::uint64_t index, const FiniteFunction& g, std::size_t og) {
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  const GapReport rep = gap_via_characterization(g);
  if (rep.gap == 2) ++tally.gap2;
  record_verdict(ctx, out, slot, index, rep.gap == og,
                 std::string("case ") + theorem_case_name(rep.theorem_case) + " gave gap " +
                     std::to_string(rep.gap) + " vs oracle gap " + std::to_string(og),
                 &g);
  if (!rep.consistent()) {
    record_violation(ctx, out, index, Check::characterization,
                     "identification counts disagree with the case analysis", &g);
  }
  const oracle::QaResult qa = oracle::oracle_qa(g, ctx.config.support_budget);
  if (qa.exhaustive && qa.value != rep.qa) {
    record_violation(ctx, out, index, Check::characterization,
                     "qa " + std::to_string(rep.qa) + " vs oracle qa " + std::to_string(qa.value),
                     &g);
  }
}

void check_willard(const SweepContext& ctx, ChunkStats& out, std::size_t slot,
                   std::uint64_t index, const FiniteFunction& g, std::size_t og) {
  if (g.arity() <= std::max(g.domain().size(), std::size_t(3))) return;
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  if (og == 2) ++tally.gap2;
  record_verdict(ctx, out, slot, index, og <= 2,
                 "oracle gap " + std::to_string(og) + " above the arity bound", &g);
}

void check_monotone(const SweepContext& ctx, ChunkStats& out, std::size_t slot,
                    std::uint64_t index, const FiniteFunction& g, std::size_t og) {
  const Poset& pa = *ctx.domain_poset;
  const Poset& pb = *ctx.codomain_poset;
  if (!is_order_preserving(g, pa, pb)) {
    record_violation(ctx, out, index, Check::monotone, "generated instance is not monotone", &g);
    return;
  }
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  const MonotoneGapClassification r = classify_monotone_gap(g, pa, pb);
  if (r.gap == 2) ++tally.gap2;
  record_verdict(ctx, out, slot, index, r.gap == og,
                 "classifier gap " + std::to_string(r.gap) + " vs oracle gap " +
                     std::to_string(og),
                 &g);
  const MonotoneStructure props = check_monotone_structural_props(g, pa, pb);
  if (!props.ok()) {
    record_violation(ctx, out, index, Check::monotone,
                     "structural properties failed: qa " + std::to_string(props.qa) + " of " +
                         std::to_string(g.arity()) + ", oddsupp determined " +
                         (props.not_oddsupp_determined ? "no" : "yes"),
                     &g);
  }
  if (pa.is_chain() && ctx.codomain_lattice) {
    std::optional<std::vector<std::size_t>> med;
    if (g.arity() == 3) med = median_form_match(g, pa, *ctx.codomain_lattice);
    if (med.has_value() != (og == 2)) {
      record_violation(ctx, out, index, Check::monotone,
                       std::string("median form ") + (med ? "present" : "absent") +
                           " vs oracle gap " + std::to_string(og),
                       &g);
    }
  }
}

void process_table(const SweepContext& ctx, std::uint64_t index, const FiniteFunction& f,
                   ChunkStats& out) {
  ++out.generated;
  if (essential_arity(f) < 2) {
    ++out.skipped;
    return;
  }
  auto [g, embedding] = reduce_to_essential(f);
  (void)embedding;
  ++out.eligible;
  const std::size_t og = oracle::oracle_gap(g);
  for (std::size_t slot = 0; slot < ctx.config.checks.size(); ++slot) {
    switch (ctx.config.checks[slot]) {
      case Check::boolean_gap: check_boolean(ctx, out, slot, index, g, og); break;
      case Check::pseudo_gap: check_pseudo(ctx, out, slot, index, g, og); break;
      case Check::characterization: check_characterization(ctx, out, slot, index, g, og); break;
      case Check::willard: check_willard(ctx, out, slot, index, g, og); break;
      case Check::monotone: check_monotone(ctx, out, slot, index, g, og); break;
      case Check::lovasz:
      case Check::latpol:
        break;  // separate pipelines
    }
  }
}

RationalPoint simplex_point(SplitMix64& rng, const std::vector<std::size_t>& order) {
  std::vector<Rational> draws(order.size());
  for (Rational& r : draws) {
    const std::int64_t num = static_cast<std::int64_t>(rng.below(9)) - 4;
    const std::int64_t den = static_cast<std::int64_t>(rng.below(4)) + 1;
    r = Rational(num, den);
  }
  std::sort(draws.begin(), draws.end());
  RationalPoint point(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) point[order[k]] = draws[k];
  return point;
}

void process_lovasz(const SweepContext& ctx, std::uint64_t index, const FiniteFunction& f,
                    ChunkStats& out) {
  ++out.generated;
  const SetFunction raw = to_set_function(f);
  const MobiusCoefficients m{raw.n, raw.values};
  const LovaszExtension lov{m};
  const OwenExtension owen{m};
  const SetFunction v = zeta(m);
  const FiniteFunction cube = from_set_function(v);
  const std::size_t n = m.n;
  const FiniteFunction coeff_table = table_of(m);

  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    RationalPoint vertex(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) vertex[k] = Rational(1);
    }
    if (eval_owen(owen, vertex) != v.values[mask] || eval_lovasz(lov, vertex) != v.values[mask]) {
      record_violation(ctx, out, index, Check::lovasz,
                       "vertex value mismatch at subset mask " + std::to_string(mask),
                       &coeff_table, TableKind::mobius);
      break;
    }
  }

  SplitMix64 rng = sample_stream(ctx.config.seed.value_or(0) ^ kCheckStreamSalt, index);
  std::vector<std::size_t> order(n);
  for (std::size_t t = 0; t < ctx.config.linearity_triples; ++t) {
    std::iota(order.begin(), order.end(), std::size_t(0));
    for (std::size_t k = n; k-- > 1;) {
      std::swap(order[k], order[rng.below(k + 1)]);
    }
    const RationalPoint x = simplex_point(rng, order);
    const RationalPoint y = simplex_point(rng, order);
    const Rational lambda(static_cast<std::int64_t>(rng.below(5)), 4);
    RationalPoint z(n);
    for (std::size_t k = 0; k < n; ++k) {
      z[k] = lambda * x[k] + (Rational(1) - lambda) * y[k];
    }
    const Rational expect =
        lambda * eval_lovasz(lov, x) + (Rational(1) - lambda) * eval_lovasz(lov, y);
    if (eval_lovasz(lov, z) != expect) {
      record_violation(ctx, out, index, Check::lovasz,
                       "not linear on a shared simplex at draw " + std::to_string(t),
                       &coeff_table, TableKind::mobius);
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (essential_in_extension(lov, i) != is_essential(cube, i)) {
      record_violation(ctx, out, index, Check::lovasz,
                       "essentiality transfer mismatch at variable " + std::to_string(i + 1),
                       &coeff_table, TableKind::mobius);
    }
  }

  const std::size_t ess = essential_arity(cube);
  if (ess < 2) {
    ++out.skipped;
    return;
  }
  ++out.eligible;
  const std::size_t slot = 0;  // lovasz runs alone
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  const std::size_t og = oracle::oracle_gap(cube);
  if (og > 2) {
    record_violation(ctx, out, index, Check::lovasz,
                     "oracle gap " + std::to_string(og) + " above the pseudo-boolean bound",
                     &coeff_table, TableKind::mobius);
  }

  bool agreed = true;
  std::string description;
  const std::size_t transferred = gap_lovasz(lov);
  if (transferred != og) {
    agreed = false;
    description = "extension gap " + std::to_string(transferred) + " vs oracle gap " +
                  std::to_string(og);
  }

  if (ess == n) {
    const std::optional<LovaszGap2Match> match = classify_lovasz_gap2(lov);
    if (match) ++tally.gap2;
    if (match.has_value() != (og == 2)) {
      agreed = false;
      description = std::string("template match ") + (match ? "present" : "absent") +
                    " vs oracle gap " + std::to_string(og);
    }
    if (match && instantiate_lovasz_form(match->form, n, match->a, match->b, match->c,
                                         match->permutation) != m) {
      record_violation(ctx, out, index, Check::lovasz,
                       std::string("form '") + lovasz_form_name(match->form) +
                           "' does not regenerate the coefficients",
                       &coeff_table, TableKind::mobius);
    }

    bool nondecreasing = true;
    std::optional<std::pair<Rational, Rational>> median_shape;
    try {
      median_shape = classify_nondecreasing_lovasz(lov);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_order_preserving) throw;
      nondecreasing = false;
    }
    if (nondecreasing && median_shape.has_value() != (og == 2)) {
      record_violation(ctx, out, index, Check::lovasz,
                       std::string("nondecreasing median shape ") +
                           (median_shape ? "present" : "absent") + " vs oracle gap " +
                           std::to_string(og),
                       &coeff_table, TableKind::mobius);
    }
  }

  record_verdict(ctx, out, slot, index, agreed, std::move(description), &coeff_table,
                 TableKind::mobius);
}

void process_latpol(const SweepContext& ctx, std::uint64_t index, const FiniteFunction& f,
                    ChunkStats& out) {
  ++out.generated;
  if (essential_arity(f) < 2) {
    ++out.skipped;
    return;
  }
  auto [g, embedding] = reduce_to_essential(f);
  (void)embedding;
  ++out.eligible;
  const std::size_t og = oracle::oracle_gap(g);
  const std::size_t slot = 0;  // latpol runs alone
  CheckTally& tally = out.tallies[slot];
  ++tally.checked;
  if (og > 2) {
    record_violation(ctx, out, index, Check::latpol,
                     "oracle gap " + std::to_string(og) + " above the polynomial bound", &g);
  }
  std::optional<std::pair<std::size_t, std::size_t>> match;
  if (g.arity() == 3) match = classify_latpoly_gap2(g, *ctx.chain_lattice);
  if (match) ++tally.gap2;
  record_verdict(ctx, out, slot, index, match.has_value() == (og == 2),
                 std::string("truncated median ") + (match ? "present" : "absent") +
                     " vs oracle gap " + std::to_string(og),
                 &g);
}

void process_index(const SweepContext& ctx, std::uint64_t index, ChunkStats& out) {
  try {
    const std::optional<FiniteFunction> f = generate(ctx, index);
    if (!f) return;  // filtered out by the monotone restriction
    if (ctx.gen == GenKind::latpol) {
      process_latpol(ctx, index, *f, out);
    } else if (ctx.lovasz_mode) {
      process_lovasz(ctx, index, *f, out);
    } else {
      process_table(ctx, index, *f, out);
    }
  } catch (const std::exception& e) {
    record_violation(ctx, out, index, ctx.config.checks.front(),
                     std::string("unexpected error: ") + e.what(), nullptr);
  }
}

std::string flatten(const std::string& text) {
  std::string flat;
  flat.reserve(text.size());
  for (char ch : text) {
    if (ch == '\n') {
      if (!flat.empty() && flat.back() != ';') flat += "; ";
    } else {
      flat += ch;
    }
  }
  while (!flat.empty() && (flat.back() == ' ' || flat.back() == ';')) flat.pop_back();
  return flat;
}

std::string poset_echo(const Poset& p) {
  std::string echo = p.carrier().name() + ":" + std::to_string(p.size()) + ":";
  bool first = true;
  for (const auto& [low, high] : p.covers()) {
    if (!first) echo += ',';
    first = false;
    echo += p.carrier().symbol(low) + "<" + p.carrier().symbol(high);
  }
  return echo;
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  const SweepContext ctx = make_context(config);
  SweepReport report;
  report.config = config;
  report.per_check.resize(config.checks.size());

  const std::uint64_t chunk_count = (ctx.count + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkStats> chunks(chunk_count);

  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> next_chunk{0};
  auto worker = [&]() {
    while (true) {
      const std::uint64_t k = next_chunk.fetch_add(1);
      if (k >= chunk_count) break;
      ChunkStats& out = chunks[k];
      out.tallies.resize(config.checks.size());
      const std::uint64_t hi = std::min(ctx.count, (k + 1) * kChunkSize);
      for (std::uint64_t index = k * kChunkSize; index < hi; ++index) {
        process_index(ctx, index, out);
      }
    }
  };

  const std::size_t jobs =
      std::max<std::size_t>(1, std::min<std::size_t>(config.jobs, chunk_count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Merging in chunk order keeps the report identical at any worker count.
  for (const ChunkStats& part : chunks) {
    report.generated += part.generated;
    report.eligible += part.eligible;
    report.skipped += part.skipped;
    report.agreements += part.agreements;
    report.disagreements += part.disagreements;
    report.violations += part.violations;
    for (std::size_t slot = 0; slot < part.tallies.size(); ++slot) {
      report.per_check[slot].checked += part.tallies[slot].checked;
      report.per_check[slot].gap2 += part.tallies[slot].gap2;
      report.per_check[slot].disagreements += part.tallies[slot].disagreements;
    }
    for (const Counterexample& ce : part.counterexamples) {
      if (report.counterexamples.size() < config.max_counterexamples) {
        report.counterexamples.push_back(ce);
      }
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string SweepReport::machine_block() const {
  std::ostringstream out;
  out << "aritygap-report v1\n";
  out << "checks=";
  for (std::size_t k = 0; k < config.checks.size(); ++k) {
    if (k) out << ',';
    out << check_name(config.checks[k]);
  }
  out << '\n';
  if (config.domain_poset) {
    out << "domain=poset:" << poset_echo(*config.domain_poset) << '\n';
  } else {
    out << "domain=" << config.domain_size << '\n';
  }
  out << "arity=" << config.arity << '\n';
  if (!config.rational_values.empty()) {
    out << "codomain=rational:";
    for (std::size_t k = 0; k < config.rational_values.size(); ++k) {
      if (k) out << ',';
      out << to_string(config.rational_values[k]);
    }
    out << '\n';
  } else if (config.codomain_poset) {
    out << "codomain=poset:" << poset_echo(*config.codomain_poset) << '\n';
  } else {
    out << "codomain=" << config.codomain_size << '\n';
  }
  out << "mode=" << (config.mode == SweepMode::exhaustive ? "exhaustive" : "sample") << '\n';
  if (config.mode == SweepMode::sample) out << "samples=" << config.sample_count << '\n';
  if (config.seed) out << "seed=" << *config.seed << '\n';
  out << "monotone=" << (config.monotone_only ? 1 : 0) << '\n';
  out << "table_budget=" << config.table_budget << '\n';
  out << "support_budget=" << config.support_budget << '\n';
  if (!config.checks.empty() && config.checks.front() == Check::lovasz) {
    out << "linearity_triples=" << config.linearity_triples << '\n';
  }
  if (!config.checks.empty() && config.checks.front() == Check::latpol) {
    out << "polynomial_depth=" << config.polynomial_depth << '\n';
  }
  out << "generated=" << generated << '\n';
  out << "eligible=" << eligible << '\n';
  out << "skipped=" << skipped << '\n';
  out << "total=" << total() << '\n';
  out << "agreements=" << agreements << '\n';
  out << "disagreements=" << disagreements << '\n';
  out << "violations=" << violations << '\n';
  const std::size_t slots = std::min(config.checks.size(), per_check.size());
  for (std::size_t slot = 0; slot < slots; ++slot) {
    const std::string name = check_name(config.checks[slot]);
    out << "check." << name << ".checked=" << per_check[slot].checked << '\n';
    out << "check." << name << ".gap2=" << per_check[slot].gap2 << '\n';
    out << "check." << name << ".disagreements=" << per_check[slot].disagreements << '\n';
  }
  out << "counterexamples=" << counterexamples.size() << '\n';
  for (std::size_t k = 0; k < counterexamples.size(); ++k) {
    const Counterexample& ce = counterexamples[k];
    out << "counterexample." << k << "=index=" << ce.index << " check=" << check_name(ce.check)
        << " " << ce.description;
    if (!ce.table.empty()) out << " :: " << flatten(ce.table);
    out << '\n';
  }
  return out.str();
}

std::string SweepReport::human_text() const {
  std::ostringstream out;
  out << "sweep over ";
  if (config.mode == SweepMode::exhaustive) {
    out << "all tables";
  } else {
    out << config.sample_count << " samples";
  }
  out << ", arity " << config.arity << ": " << generated << " generated, " << eligible
      << " eligible, " << skipped << " skipped\n";
  out << "  agreements " << agreements << ", disagreements " << disagreements << ", violations "
      << violations << "\n";
  const std::size_t slots = std::min(config.checks.size(), per_check.size());
  for (std::size_t slot = 0; slot < slots; ++slot) {
    out << "  " << check_name(config.checks[slot]) << ": checked " << per_check[slot].checked
        << ", gap2 " << per_check[slot].gap2 << ", disagreements "
        << per_check[slot].disagreements << "\n";
  }
  for (const Counterexample& ce : counterexamples) {
    out << "  counterexample at index " << ce.index << " (" << check_name(ce.check)
        << "): " << ce.description << "\n";
    if (!ce.table.empty()) {
      std::istringstream lines(ce.table);
      std::string line;
      while (std::getline(lines, line)) out << "    " << line << "\n";
    }
  }
  out << (clean() ? "  clean" : "  NOT CLEAN") << ", " << wall_seconds << "s\n";
  return out.str();
}

}  // namespace aritygap
