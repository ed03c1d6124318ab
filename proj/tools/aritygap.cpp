#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aritygap/boolfn.hpp"
#include "aritygap/enumerate.hpp"
#include "aritygap/error.hpp"
#include "aritygap/extend.hpp"
#include "aritygap/fnalg.hpp"
#include "aritygap/io.hpp"
#include "aritygap/oracle.hpp"
#include "aritygap/order.hpp"
#include "aritygap/sweep.hpp"

namespace {

using namespace aritygap;

Poset load_poset(const std::string& spec) {
  if (spec == "@bowtie6") return Poset::bidirected_non_lattice_6();
  if (spec.rfind("@chain:", 0) == 0) {
    const std::string size = spec.substr(7);
    try {
      return Poset::chain(static_cast<std::size_t>(std::stoull(size)));
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_argument, "bad chain size '" + size + "'");
    }
  }
  return parse_poset_file(spec);
}

// Extensions are defined by coefficients; function tables are transformed
// first, coefficient tables are taken as they are.
MobiusCoefficients coefficients_of(const TableFile& file) {
  const SetFunction raw = to_set_function(file.fn);
  if (file.kind == TableKind::mobius) return MobiusCoefficients{raw.n, raw.values};
  return mobius(raw);
}

RationalPoint parse_point(const std::vector<std::string>& words, std::size_t n) {
  if (words.size() != n) {
    fail(ErrorCode::invalid_argument,
         "expected " + std::to_string(n) + " coordinates, got " + std::to_string(words.size()));
  }
  RationalPoint point;
  point.reserve(n);
  for (const std::string& w : words) point.push_back(parse_rational(w));
  return point;
}

int run_analyze(const std::string& path) {
  const TableFile file = parse_table_file(path);
  const FiniteFunction& f = file.fn;
  std::cout << "arity " << f.arity() << ", domain size " << f.domain().size() << "\n";
  const std::vector<std::size_t> essentials = essential_variables(f);
  std::cout << "essential variables:";
  for (std::size_t i : essentials) std::cout << " x" << (i + 1);
  if (essentials.empty()) std::cout << " none";
  std::cout << "\n";
  if (essentials.size() < 2) {
    std::cout << "arity gap undefined: fewer than two essential variables\n";
    return 0;
  }
  auto [g, embedding] = reduce_to_essential(f);
  if (g.arity() != f.arity()) {
    std::cout << "reduced to the " << g.arity() << " essential variables\n";
  }
  (void)embedding;
  const GapReport report = gap_via_characterization(g);
  std::cout << "ess " << report.ess << "\n";
  for (const auto& [pair, ess] : report.per_pair_minor_ess) {
    std::cout << "  ess with x" << (pair.first + 1) << " := x" << (pair.second + 1) << ": " << ess
              << "\n";
  }
  std::cout << "essl " << report.essl << "\n";
  std::cout << "gap " << report.gap << "\n";
  std::cout << "quasi-arity " << report.qa << "\n";
  std::cout << "determined by oddsupp on repeated-coordinate tuples: "
            << (report.oddsupp_determined ? "yes" : "no") << "\n";
  std::cout << "case " << theorem_case_name(report.theorem_case) << "\n";
  std::cout << "oracle gap " << oracle::oracle_gap(g) << "\n";
  return 0;
}

int run_classify(const std::string& path, bool boolean_mode, bool pseudo_mode, bool lovasz_mode,
                 const std::string& poset_a, const std::string& poset_b) {
  const TableFile file = parse_table_file(path);

  if (lovasz_mode) {
    const MobiusCoefficients m = coefficients_of(file);
    const LovaszExtension lov{m};
    std::cout << "extension gap " << gap_lovasz(lov) << "\n";
    const auto match = classify_lovasz_gap2(lov);
    if (!match) {
      std::cout << "no gap-2 template\n";
      return 0;
    }
    std::cout << "form " << lovasz_form_name(match->form) << ", a = " << to_string(match->a)
              << ", b = " << to_string(match->b);
    if (match->form == LovaszForm::form_v) std::cout << ", c = " << to_string(match->c);
    std::cout << "\nvariable order:";
    for (std::size_t i : match->permutation) std::cout << " x" << (i + 1);
    std::cout << "\n";
    return 0;
  }

  auto [g, embedding] = reduce_to_essential(file.fn);
  (void)embedding;
  if (g.arity() != file.fn.arity()) {
    std::cout << "reduced to the " << g.arity() << " essential variables\n";
  }

  if (boolean_mode) {
    const BooleanGapClassification r = classify_boolean_gap(g);
    std::cout << "gap " << r.gap << "\n";
    if (r.detail) {
      std::cout << "template " << boolean_template_name(r.detail->tmpl) << ", c = " << r.detail->c
                << "\nvariable order:";
      for (std::size_t i : r.detail->permutation) std::cout << " x" << (i + 1);
      std::cout << "\n";
    }
    return 0;
  }

  if (pseudo_mode) {
    const PseudoGapClassification r = classify_pseudo_boolean_gap(g);
    std::cout << "gap " << r.gap << "\n";
    if (r.detail) {
      std::cout << "reason " << pseudo_gap2_reason_name(r.detail->reason) << ", low "
                << to_string(r.detail->low) << ", high " << to_string(r.detail->high) << "\n";
    }
    return 0;
  }

  if (!poset_a.empty() || !poset_b.empty()) {
    if (poset_a.empty() || poset_b.empty()) {
      fail(ErrorCode::invalid_argument, "--poset-a and --poset-b go together");
    }
    const Poset pa = load_poset(poset_a);
    const Poset pb = load_poset(poset_b);
    const MonotoneGapClassification r = classify_monotone_gap(g, pa, pb);
    std::cout << "gap " << r.gap << "\n";
    if (r.detail) {
      std::cout << "diagonal h:";
      for (std::size_t b : r.detail->h) std::cout << " " << pb.carrier().symbol(b);
      std::cout << "\n";
    }
    return 0;
  }

  const GapReport report = gap_via_characterization(g);
  std::cout << "gap " << report.gap << "\n";
  std::cout << "case " << theorem_case_name(report.theorem_case) << "\n";
  return 0;
}

int run_sweep(const SweepConfig& config) {
  const SweepReport report = sweep(config);
  std::cout << report.machine_block();
  std::cerr << report.human_text();
  return report.clean() ? 0 : 1;
}

int run_formats() {
  std::cout <<
      R"(table file
  aritygap-table v1
  domain: <symbol> <symbol> ...
  codomain: <symbol> ...        (or: codomain: rational)
  arity: <n>
  kind: function                (optional; function | setfunction | mobius)
  table:
  <a1> ... <an> -> <value>

One row per argument tuple, each tuple exactly once; canonical output is in
lexicographic tuple order with the first coordinate most significant. Values
are codomain symbols, or rationals written p or p/q. The setfunction and
mobius kinds hold the 2^n values of a set function or of its Mobius
coefficients on a two-element domain; row (b1..bn) stands for the subset
{ i : bi = 1 }.

poset file
  aritygap-poset v1
  elements: <symbol> ...
  covers:
  <low> < <high>

sampling
  Streams come from splitmix64: next() adds 0x9E3779B97F4A9C15 to the state,
  then mixes z = (z ^ (z >> 30)) * 0xBF58476D1CE4B5B9,
  z = (z ^ (z >> 27)) * 0x94D049BB133111EB, returns z ^ (z >> 31).
  Sample number k of a run with seed s uses the stream seeded by one next()
  of the state s ^ (0x9E3779B97F4A9C15 * (k + 1)). A draw below(b) is
  next() mod b. Plain tables draw one value per tuple in lexicographic
  order. Monotone tables visit tuples in a fixed linear extension of the
  componentwise order (total coordinate height ascending, ties by tuple
  index) and draw uniformly between the largest predecessor value and the
  top of the chain. These draws pin the byte-exact content of sampled
  sweeps for any implementation of this format.

sweep report
  Machine block of key=value lines starting with the line
  "aritygap-report v1": configuration echo, then generated, eligible,
  skipped, total, agreements, disagreements, violations, per-check tallies
  and capped counterexamples. Identical runs give identical blocks at any
  --jobs value; wall-clock time appears only in the human summary on stderr.

exit codes
  0 success, 1 sweep disagreement or violation, 2 bad input or file format.
)";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arity gap toolkit: classifiers, transforms, extensions, sweeps"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "full gap report of a function table");
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "table file")->required();

  auto* mobius_cmd = app.add_subcommand("mobius", "Mobius coefficients of a set function");
  std::string mobius_path;
  mobius_cmd->add_option("file", mobius_path, "table file")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "set function of Mobius coefficients");
  std::string zeta_path;
  zeta_cmd->add_option("file", zeta_path, "coefficient table file")->required();

  auto* owen_cmd = app.add_subcommand("eval-owen", "evaluate the multilinear extension");
  std::string owen_path;
  std::vector<std::string> owen_point;
  owen_cmd->add_option("file", owen_path, "table file")->required();
  owen_cmd->add_option("point", owen_point, "rational coordinates");

  auto* lovasz_cmd = app.add_subcommand("eval-lovasz", "evaluate the piecewise-linear extension");
  std::string lovasz_path;
  std::vector<std::string> lovasz_point;
  lovasz_cmd->add_option("file", lovasz_path, "table file")->required();
  lovasz_cmd->add_option("point", lovasz_point, "rational coordinates");

  auto* classify = app.add_subcommand("classify", "gap-2 template classification");
  std::string classify_path, classify_poset_a, classify_poset_b;
  bool classify_boolean = false, classify_pseudo = false, classify_lovasz = false;
  classify->add_option("file", classify_path, "table file")->required();
  classify->add_flag("--boolean", classify_boolean, "two-valued templates");
  classify->add_flag("--pseudo", classify_pseudo, "rational-valued templates");
  classify->add_flag("--lovasz", classify_lovasz, "extension templates (coefficient input)");
  classify->add_option("--poset-a", classify_poset_a, "domain order: file, @chain:k or @bowtie6");
  classify->add_option("--poset-b", classify_poset_b, "codomain order");

  auto* sweep_cmd = app.add_subcommand("sweep", "verify classifiers against the oracles");
  SweepConfig config;
  std::vector<std::string> check_names;
  std::vector<std::string> value_words;
  std::string sweep_poset_a, sweep_poset_b;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  sweep_cmd->add_option("--check", check_names, "boolean, pseudo, characterization, willard, monotone, lovasz or latpol")
      ->required();
  sweep_cmd->add_option("--domain", config.domain_size, "domain size");
  sweep_cmd->add_option("--arity", config.arity, "arity");
  sweep_cmd->add_option("--codomain", config.codomain_size, "codomain size");
  sweep_cmd->add_option("--values", value_words, "rational codomain palette")->delimiter(',');
  sweep_cmd->add_flag("--exhaustive", exhaustive, "every table in counter order");
  sweep_cmd->add_option("--samples", samples, "number of sampled instances");
  sweep_cmd->add_option("--seed", seed, "sampling seed")->each([&](const std::string&) {
    seed_given = true;
  });
  sweep_cmd->add_flag("--monotone", config.monotone_only, "generate monotone tables only");
  sweep_cmd->add_option("--poset-a", sweep_poset_a, "domain order: file, @chain:k or @bowtie6");
  sweep_cmd->add_option("--poset-b", sweep_poset_b, "codomain order");
  sweep_cmd->add_option("--jobs", config.jobs, "worker threads");
  sweep_cmd->add_option("--table-budget", config.table_budget, "exhaustive table cap");
  sweep_cmd->add_option("--support-budget", config.support_budget, "quasi-arity oracle cap");
  sweep_cmd->add_option("--max-counterexamples", config.max_counterexamples, "report cap");
  sweep_cmd->add_option("--linearity-triples", config.linearity_triples,
                        "same-simplex draws per coefficient bundle");
  sweep_cmd->add_option("--depth", config.polynomial_depth, "sampled polynomial depth");

  auto* formats = app.add_subcommand("formats", "describe the file formats and sampling");

  try {
    app.parse(argc, argv);

    if (*analyze) return run_analyze(analyze_path);

    if (*mobius_cmd) {
      const TableFile file = parse_table_file(mobius_path);
      write_table(std::cout, table_of(mobius(to_set_function(file.fn))), TableKind::mobius);
      return 0;
    }

    if (*zeta_cmd) {
      const TableFile file = parse_table_file(zeta_path);
      const SetFunction raw = to_set_function(file.fn);
      write_table(std::cout, table_of(zeta(MobiusCoefficients{raw.n, raw.values})),
                  TableKind::setfunction);
      return 0;
    }

    if (*owen_cmd) {
      const TableFile file = parse_table_file(owen_path);
      const MobiusCoefficients m = coefficients_of(file);
      std::cout << to_string(eval_owen(OwenExtension{m}, parse_point(owen_point, m.n))) << "\n";
      return 0;
    }

    if (*lovasz_cmd) {
      const TableFile file = parse_table_file(lovasz_path);
      const MobiusCoefficients m = coefficients_of(file);
      std::cout << to_string(eval_lovasz(LovaszExtension{m}, parse_point(lovasz_point, m.n)))
                << "\n";
      return 0;
    }

    if (*classify) {
      return run_classify(classify_path, classify_boolean, classify_pseudo, classify_lovasz,
                          classify_poset_a, classify_poset_b);
    }

    if (*sweep_cmd) {
      for (const std::string& name : check_names) {
        const auto check = check_from_name(name);
        if (!check) fail(ErrorCode::invalid_argument, "unknown check '" + name + "'");
        config.checks.push_back(*check);
      }
      for (const std::string& word : value_words) {
        config.rational_values.push_back(parse_rational(word));
      }
      if (exhaustive && samples > 0) {
        fail(ErrorCode::invalid_argument, "--exhaustive and --samples conflict");
      }
      config.mode = samples > 0 ? SweepMode::sample : SweepMode::exhaustive;
      config.sample_count = samples;
      if (seed_given) config.seed = seed;
      if (!sweep_poset_a.empty()) config.domain_poset = load_poset(sweep_poset_a);
      if (!sweep_poset_b.empty()) config.codomain_poset = load_poset(sweep_poset_b);
      if (config.domain_poset) config.domain_size = config.domain_poset->size();
      if (config.codomain_poset) config.codomain_size = config.codomain_poset->size();
      return run_sweep(config);
    }

    if (*formats) return run_formats();
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
