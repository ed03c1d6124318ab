#include <optional>
#include <vector>

#include "aritygap/boolfn.hpp"
#include "aritygap/error.hpp"
#include "aritygap/extend.hpp"
#include "aritygap/fnalg.hpp"
#include "aritygap/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace aritygap;
using namespace aritygap::test;

namespace {

MobiusCoefficients bundle_of(const FiniteFunction& f) { return mobius(to_set_function(f)); }

RationalPoint point(std::initializer_list<Rational> xs) { return RationalPoint(xs); }

}  // namespace

TEST_SUITE("extension evaluation") {
  TEST_CASE("conjunction: product against minimum") {
    const auto m = bundle_of(and2());
    CHECK(eval_owen(OwenExtension{m}, point({Rational(1, 3), Rational(2, 3)})) == Rational(2, 9));
    CHECK(eval_lovasz(LovaszExtension{m}, point({Rational(1, 3), Rational(2, 3)})) ==
          Rational(1, 3));
  }

  TEST_CASE("median bundle extends to the median of the coordinates") {
    const auto m = bundle_of(maj3());
    const auto x = point({Rational(1, 5), Rational(1, 2), Rational(2, 5)});
    CHECK(eval_lovasz(LovaszExtension{m}, x) == Rational(2, 5));
    CHECK(eval_owen(OwenExtension{m},
                    point({Rational(1, 2), Rational(1, 2), Rational(1, 2)})) == Rational(1, 2));
    CHECK(eval_owen(OwenExtension{m}, point({Rational(1, 3), Rational(2, 3), Rational(1)})) ==
          Rational(7, 9));
    CHECK(eval_lovasz(LovaszExtension{m}, point({Rational(1, 3), Rational(2, 3), Rational(1)})) ==
          Rational(2, 3));
  }

  TEST_CASE("both extensions agree on the cube vertices") {
    for (int bits = 0; bits < 16; ++bits) {
      const auto f = boolean_fn(
          2, {(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1});
      const auto m = bundle_of(f);
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          const auto x = point({Rational(a), Rational(b)});
          const Rational v = f.value(Tuple{a, b});
          CHECK(eval_owen(OwenExtension{m}, x) == v);
          CHECK(eval_lovasz(LovaszExtension{m}, x) == v);
        }
      }
    }
  }

  TEST_CASE("points outside the unit cube") {
    // Pairs contribute -1 + 2 - 1, the triple -2 * (-1).
    const auto m = bundle_of(maj3());
    const auto x = point({Rational(3), Rational(-1), Rational(2)});
    CHECK(eval_lovasz(LovaszExtension{m}, x) == Rational(2));
  }

  TEST_CASE("dimension mismatch is rejected") {
    const auto m = bundle_of(and2());
    CHECK_THROWS_AS(eval_owen(OwenExtension{m}, point({Rational(1)})), Error);
    CHECK_THROWS_AS(eval_lovasz(LovaszExtension{m}, point({Rational(1)})), Error);
  }
}

TEST_SUITE("simplex identification") {
  TEST_CASE("coordinates in nondecreasing order") {
    CHECK(simplex_of(point({Rational(3), Rational(1), Rational(2)})).order ==
          std::vector<std::size_t>{1, 2, 0});
    CHECK(simplex_of(point({Rational(1, 2), Rational(1, 2)})).order ==
          std::vector<std::size_t>{0, 1});
  }
}

TEST_SUITE("cube restriction") {
  TEST_CASE("restriction undoes the transform") {
    const auto m = bundle_of(maj3());
    const auto back = restrict_to_cube(m);
    CHECK(back == from_set_function(to_set_function(maj3())));
    CHECK(arity_gap_of_cube_restriction(m) == 2);
    CHECK(gap_lovasz(LovaszExtension{m}) == 2);
    CHECK(gap_lovasz(LovaszExtension{bundle_of(and3())}) == 1);
  }

  TEST_CASE("extension essentiality matches cube essentiality") {
    const MobiusCoefficients lone{2, {Rational(0), Rational(1), Rational(0), Rational(0)}};
    CHECK(essential_in_extension(LovaszExtension{lone}, 0));
    CHECK_FALSE(essential_in_extension(LovaszExtension{lone}, 1));
    const auto m = bundle_of(maj3());
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(essential_in_extension(LovaszExtension{m}, i) ==
            is_essential(restrict_to_cube(m), i));
    }
  }
}

TEST_SUITE("piecewise-linear gap templates") {
  TEST_CASE("frozen cube tables of the five shapes") {
    const Rational a(0), b(1), c(2);
    const auto tbl = [](const MobiusCoefficients& m) { return restrict_to_cube(m).table(); };

    CHECK(tbl(instantiate_lovasz_form(LovaszForm::form_i, 2, a, b, Rational(0), {0, 1})) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(0)});
    CHECK(tbl(instantiate_lovasz_form(LovaszForm::form_ii, 2, a, b, Rational(0), {0, 1})) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0)});
    CHECK(tbl(instantiate_lovasz_form(LovaszForm::form_iii, 3, a, b, Rational(0), {0, 1, 2})) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1), Rational(0),
                                Rational(1), Rational(1), Rational(1)});
    CHECK(tbl(instantiate_lovasz_form(LovaszForm::form_iv, 3, a, b, Rational(0), {0, 1, 2})) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0), Rational(1),
                                Rational(0), Rational(1), Rational(1)});
    CHECK(tbl(instantiate_lovasz_form(LovaszForm::form_v, 2, a, b, c, {0, 1})) ==
          std::vector<Rational>{Rational(0), Rational(2), Rational(1), Rational(0)});
  }

  TEST_CASE("classification regenerates each valid instance") {
    struct Item {
      LovaszForm form;
      std::size_t n;
    };
    const Item items[] = {{LovaszForm::form_i, 2},  {LovaszForm::form_i, 3},
                          {LovaszForm::form_ii, 2}, {LovaszForm::form_iii, 3},
                          {LovaszForm::form_iv, 3}, {LovaszForm::form_v, 2}};
    const Rational grid[] = {Rational(-1), Rational(0), Rational(1), Rational(2)};
    for (const auto& item : items) {
      std::vector<std::size_t> perm(item.n);
      for (std::size_t k = 0; k < item.n; ++k) perm[k] = item.n - 1 - k;
      for (const auto& a : grid) {
        for (const auto& b : grid) {
          // The two-valued shapes need distinct levels; the three-valued one
          // only degenerates when all of a, b, c coincide.
          if (item.form != LovaszForm::form_v && a == b) continue;
          const Rational c = item.form == LovaszForm::form_v ? Rational(1, 2) : Rational(0);
          const auto m = instantiate_lovasz_form(item.form, item.n, a, b, c, perm);
          const auto match = classify_lovasz_gap2(LovaszExtension{m});
          REQUIRE(match.has_value());
          CHECK(instantiate_lovasz_form(match->form, item.n, match->a, match->b, match->c,
                                        match->permutation) == m);
          CHECK(arity_gap_of_cube_restriction(m) == 2);
        }
      }
    }
  }

  TEST_CASE("degenerate parameters collapse to constants") {
    const auto m =
        instantiate_lovasz_form(LovaszForm::form_iii, 3, Rational(1), Rational(1), Rational(0),
                                {0, 1, 2});
    CHECK_THROWS_AS(classify_lovasz_gap2(LovaszExtension{m}), Error);
  }

  TEST_CASE("gap-one bundles match nothing") {
    CHECK_FALSE(classify_lovasz_gap2(LovaszExtension{bundle_of(and3())}).has_value());
    CHECK_FALSE(classify_lovasz_gap2(LovaszExtension{bundle_of(or3())}).has_value());
  }

  TEST_CASE("nondecreasing restrictions only ever match the median shape") {
    const auto med = classify_nondecreasing_lovasz(LovaszExtension{bundle_of(maj3())});
    REQUIRE(med.has_value());
    CHECK(med->first == Rational(0));
    CHECK(med->second == Rational(1));

    // 2 + 3*median of the coordinates.
    const auto scaled = classify_nondecreasing_lovasz(
        LovaszExtension{instantiate_lovasz_form(LovaszForm::form_iii, 3, Rational(2), Rational(5),
                                                Rational(0), {0, 1, 2})});
    REQUIRE(scaled.has_value());
    CHECK(scaled->first == Rational(2));
    CHECK(scaled->second == Rational(5));

    CHECK_FALSE(classify_nondecreasing_lovasz(LovaszExtension{bundle_of(and3())}).has_value());
    CHECK_FALSE(classify_nondecreasing_lovasz(LovaszExtension{bundle_of(or3())}).has_value());
    CHECK_FALSE(classify_nondecreasing_lovasz(LovaszExtension{bundle_of(and2())}).has_value());
  }

  TEST_CASE("nonmonotone restrictions are rejected") {
    CHECK_THROWS_AS(classify_nondecreasing_lovasz(LovaszExtension{bundle_of(parity3())}), Error);
  }
}
