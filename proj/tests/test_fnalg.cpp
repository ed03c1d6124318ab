#include <algorithm>
#include <cstddef>
#include <vector>

#include "aritygap/error.hpp"
#include "aritygap/fnalg.hpp"
#include "aritygap/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace aritygap;
using namespace aritygap::test;

TEST_SUITE("essentiality") {
  TEST_CASE("witnesses and counts") {
    const auto maj = maj3();
    CHECK(is_essential(maj, 0));
    CHECK(is_essential(maj, 1));
    CHECK(is_essential(maj, 2));
    CHECK(essential_arity(maj) == 3);
    CHECK(essential_variables(maj) == std::vector<std::size_t>{0, 1, 2});

    // g(x1,x2,x3) = x1 & x3: the middle variable is padding.
    const auto g = boolean_fn(3, {0, 0, 0, 0, 0, 1, 0, 1});
    CHECK(is_essential(g, 0));
    CHECK_FALSE(is_essential(g, 1));
    CHECK(is_essential(g, 2));
    CHECK(essential_variables(g) == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("lexicographically first witness") {
    const auto w = essentiality_witness(and2(), 0);
    REQUIRE(w.has_value());
    CHECK(w->index == 0);
    CHECK(w->base == Tuple{0, 1});
    CHECK(w->replacement == 1);

    CHECK_FALSE(essentiality_witness(boolean_fn(2, {0, 1, 0, 1}), 0).has_value());
  }

  TEST_CASE("constant function has no essential variables") {
    const auto c = boolean_fn(2, {1, 1, 1, 1});
    CHECK(essential_arity(c) == 0);
  }
}

TEST_SUITE("minors") {
  TEST_CASE("identification keeps the arity") {
    // maj(x1, x3, x3) = x3.
    const auto g = identify(maj3(), 1, 2);
    CHECK(g.arity() == 3);
    const auto x3 = boolean_fn(3, {0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(g == x3);
    CHECK(essential_arity(g) == 1);
  }

  TEST_CASE("identification rejects bad indices") {
    CHECK_THROWS_AS(identify(maj3(), 0, 0), Error);
    CHECK_THROWS_AS(identify(maj3(), 0, 3), Error);
  }

  TEST_CASE("simple minor permutes and merges variables") {
    // sigma sends both variables of and2 to the single variable of the result.
    const VariableMap sigma{2, 1, {0, 0}};
    const auto diag = simple_minor(and2(), sigma);
    CHECK(diag.arity() == 1);
    CHECK(diag == boolean_fn(1, {0, 1}));
  }

  TEST_CASE("unary identity is a minor of conjunction") {
    const auto x1 = boolean_fn(1, {0, 1});
    CHECK(is_minor_of(x1, and2()));
    const auto sigma = minor_witness(x1, and2());
    REQUIRE(sigma.has_value());
    CHECK(simple_minor(and2(), *sigma) == x1);
  }

  TEST_CASE("parity is not a minor of conjunction") {
    const auto xor2 = boolean_fn(2, {0, 1, 1, 0});
    CHECK_FALSE(is_minor_of(xor2, and2()));
  }

  TEST_CASE("equivalence is mutual minority") {
    const auto xor2 = boolean_fn(2, {0, 1, 1, 0});
    const auto xor3_pad = boolean_fn(3, {0, 0, 1, 1, 1, 1, 0, 0});  // x1 ^ x2, x3 idle
    CHECK(equivalent(xor2, xor3_pad));
    CHECK_FALSE(equivalent(xor2, and2()));
  }

  TEST_CASE("reduction drops inessential variables") {
    const auto g = boolean_fn(3, {0, 0, 0, 0, 0, 1, 0, 1});  // x1 & x3
    const auto [core, sigma] = reduce_to_essential(g);
    CHECK(core.arity() == 2);
    CHECK(core == and2());
    CHECK(simple_minor(core, sigma) == g);

    const auto [same, id] = reduce_to_essential(maj3());
    CHECK(same == maj3());
    CHECK(id.map == std::vector<std::size_t>{0, 1, 2});
  }
}

TEST_SUITE("diagonal and oddsupp") {
  TEST_CASE("repeated-coordinate tuples") {
    CHECK(has_repeated_coordinate(Tuple{0, 1, 0}));
    CHECK_FALSE(has_repeated_coordinate(Tuple{0, 1, 2}));

    // Two values, three slots: everything repeats.
    CHECK(diagonal_tuples(Carrier::boolean(), 3).size() == 8);
    // Three values, two slots: only the three constant pairs.
    const auto diag = diagonal_tuples(Carrier::range(3), 2);
    CHECK(diag == std::vector<std::size_t>{0, 4, 8});
    // Unary convention: every point counts.
    CHECK(diagonal_tuples(Carrier::range(3), 1).size() == 3);
  }

  TEST_CASE("oddsupp masks elements with odd multiplicity") {
    CHECK(oddsupp(Tuple{0, 0, 1}) == 0b10);
    CHECK(oddsupp(Tuple{0, 1, 1}) == 0b01);
    CHECK(oddsupp(Tuple{1, 1, 1}) == 0b10);
    CHECK(oddsupp(Tuple{2, 0, 2, 0}) == 0);
    CHECK(oddsupp(Tuple{2, 1, 0}) == 0b111);
  }

  TEST_CASE("parity is oddsupp-determined, majority is not") {
    CHECK(is_determined_by_oddsupp(parity3()));
    CHECK_FALSE(is_determined_by_oddsupp(maj3()));
  }

  TEST_CASE("quasi arity") {
    CHECK(quasi_arity(parity3()) == 3);
    CHECK(quasi_arity(maj3()) == 3);
    // x1 & x3 restricted to the diagonal still needs both variables, but the
    // function itself only ever uses two.
    CHECK(quasi_arity(boolean_fn(3, {0, 0, 0, 0, 0, 1, 0, 1})) == 2);
    // Flags triples with all coordinates distinct; zero on every
    // repeated-coordinate tuple, so the constant agrees there.
    const auto distinct = FiniteFunction::tabulate(
        Carrier::range(3), 3, Codomain::carrier(Carrier::boolean()),
        [](std::span<const std::size_t> x) -> Rational {
          return Rational(has_repeated_coordinate(x) ? 0 : 1);
        });
    CHECK(quasi_arity(distinct) == 0);
    CHECK(gap_via_characterization(distinct).gap == 3);
  }
}

TEST_SUITE("gap characterization") {
  TEST_CASE("majority: ternary collapse condition") {
    const auto rep = gap_via_characterization(maj3());
    CHECK(rep.arity == 3);
    CHECK(rep.ess == 3);
    CHECK(rep.essl == 1);
    CHECK(rep.gap == 2);
    CHECK(rep.qa == 3);
    CHECK_FALSE(rep.oddsupp_determined);
    CHECK(rep.theorem_case == TheoremCase::case_n3_condition);
    CHECK(rep.consistent());
    CHECK(rep.per_pair_minor_ess.size() == 6);
    for (const auto& entry : rep.per_pair_minor_ess) CHECK(entry.second == 1);
  }

  TEST_CASE("parity: same ternary route") {
    const auto rep = gap_via_characterization(parity3());
    CHECK(rep.gap == 2);
    CHECK(rep.qa == 3);
    CHECK(rep.oddsupp_determined);
    CHECK(rep.theorem_case == TheoremCase::case_n3_condition);
    CHECK(rep.consistent());
  }

  TEST_CASE("disjunction has gap one") {
    const auto rep = gap_via_characterization(or3());
    CHECK(rep.gap == 1);
    CHECK(rep.essl == 2);
    CHECK(rep.theorem_case == TheoremCase::case_gap1);
    CHECK(rep.consistent());
  }

  TEST_CASE("binary gap two needs a constant diagonal") {
    const auto xor2 = boolean_fn(2, {0, 1, 1, 0});
    CHECK(gap_via_characterization(xor2).gap == 2);
    CHECK(gap_via_characterization(and2()).gap == 1);
  }

  TEST_CASE("small quasi arity forces the maximal gap") {
    // On four elements: tuples with a repeat answer [x1 == 0], the 24
    // all-distinct tuples answer a third value. Every variable matters, yet
    // any identification collapses to the first coordinate test.
    const auto f = FiniteFunction::tabulate(
        Carrier::range(4), 4, Codomain::carrier(Carrier::range(3)),
        [](std::span<const std::size_t> x) -> Rational {
          if (has_repeated_coordinate(x)) return Rational(x[0] == 0 ? 1 : 0);
          return Rational(2);
        });
    const auto rep = gap_via_characterization(f);
    CHECK(rep.ess == 4);
    CHECK(rep.essl == 1);
    CHECK(rep.qa == 1);
    CHECK(rep.gap == 3);
    CHECK(rep.theorem_case == TheoremCase::case_p_ge_3);
    CHECK(rep.consistent());
    CHECK(oracle::oracle_gap(f) == 3);
  }

  TEST_CASE("rejects inputs with idle variables") {
    CHECK_THROWS_AS(gap_via_characterization(boolean_fn(2, {0, 1, 0, 1})), Error);
    CHECK_THROWS_AS(gap_via_characterization(boolean_fn(1, {0, 1})), Error);
  }
}

TEST_SUITE("ternary collapse certificate") {
  TEST_CASE("majority collapses to the repeated argument") {
    const auto cert = ternary_gap2_condition(maj3());
    REQUIRE(cert.has_value());
    CHECK(cert->h == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(cert->picks == std::array<int, 3>{0, 0, 0});
  }

  TEST_CASE("parity collapses to the distinguished argument") {
    const auto cert = ternary_gap2_condition(parity3());
    REQUIRE(cert.has_value());
    CHECK(cert->h == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(cert->picks == std::array<int, 3>{1, 1, 1});
  }

  TEST_CASE("disjunction does not collapse") {
    CHECK_FALSE(ternary_gap2_condition(or3()).has_value());
  }
}

TEST_SUITE("reference oracle") {
  TEST_CASE("agrees on the frozen examples") {
    CHECK(oracle::oracle_gap(maj3()) == 2);
    CHECK(oracle::oracle_gap(parity3()) == 2);
    CHECK(oracle::oracle_gap(or3()) == 1);
    CHECK(oracle::oracle_gap(and2()) == 1);
    CHECK(oracle::oracle_gap(boolean_fn(2, {0, 1, 1, 0})) == 2);
  }

  TEST_CASE("quasi arity search is exhaustive on small tables") {
    const auto qa = oracle::oracle_qa(parity3());
    CHECK(qa.value == 3);
    CHECK(qa.exhaustive);
    const auto qa2 = oracle::oracle_qa(boolean_fn(3, {0, 0, 0, 0, 0, 1, 0, 1}));
    CHECK(qa2.value == 2);
    CHECK(qa2.exhaustive);
  }

  TEST_CASE("gap equals declared arity gap on every binary table") {
    for (int bits = 0; bits < 16; ++bits) {
      const auto f = boolean_fn(
          2, {(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1});
      if (essential_arity(f) < 2) continue;
      CHECK(arity_gap(f) == oracle::oracle_gap(f));
    }
  }
}
