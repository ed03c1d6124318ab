#include <string>

#include "aritygap/error.hpp"
#include "aritygap/order.hpp"
#include "aritygap/sweep.hpp"
#include "doctest.h"

using namespace aritygap;

namespace {

SweepConfig base_config() {
  SweepConfig c;
  c.checks = {Check::boolean_gap};
  c.domain_size = 2;
  c.codomain_size = 2;
  c.arity = 2;
  c.mode = SweepMode::exhaustive;
  return c;
}

}  // namespace

TEST_SUITE("sweep configuration") {
  TEST_CASE("check names round trip") {
    for (const Check check : {Check::boolean_gap, Check::pseudo_gap, Check::characterization,
                              Check::willard, Check::monotone, Check::lovasz, Check::latpol}) {
      const auto name = check_name(check);
      REQUIRE(check_from_name(name).has_value());
      CHECK(*check_from_name(name) == check);
    }
    CHECK_FALSE(check_from_name("nope").has_value());
  }

  TEST_CASE("invalid combinations are rejected") {
    auto c = base_config();
    c.domain_size = 3;
    CHECK_THROWS_AS(sweep(c), Error);  // boolean needs a two-element domain

    c = base_config();
    c.mode = SweepMode::sample;
    c.sample_count = 10;
    CHECK_THROWS_AS(sweep(c), Error);  // sampling needs a seed

    c = base_config();
    c.checks = {Check::pseudo_gap};
    CHECK_THROWS_AS(sweep(c), Error);  // pseudo needs a rational palette

    c = base_config();
    c.checks = {Check::monotone};
    CHECK_THROWS_AS(sweep(c), Error);  // monotone check needs monotone generation

    c = base_config();
    c.checks = {Check::lovasz, Check::boolean_gap};
    c.rational_values = {Rational(0), Rational(1)};
    CHECK_THROWS_AS(sweep(c), Error);  // lovasz runs alone

    c = base_config();
    c.checks = {Check::latpol};
    c.domain_size = 3;
    c.codomain_size = 3;
    CHECK_THROWS_AS(sweep(c), Error);  // latpol samples, never exhausts

    c = base_config();
    c.rational_values = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(sweep(c), Error);  // palette entries must be distinct

    c = base_config();
    c.jobs = 0;
    CHECK_THROWS_AS(sweep(c), Error);
  }
}

TEST_SUITE("sweep counts") {
  TEST_CASE("binary boolean cube") {
    auto c = base_config();
    const auto report = sweep(c);
    CHECK(report.generated == 16);
    CHECK(report.skipped == 6);
    CHECK(report.eligible == 10);
    CHECK(report.agreements == 10);
    CHECK(report.disagreements == 0);
    CHECK(report.violations == 0);
    CHECK(report.total() == 10);
    CHECK(report.clean());
    REQUIRE(report.per_check.size() == 1);
    CHECK(report.per_check[0].checked == 10);
    CHECK(report.per_check[0].gap2 == 6);
    CHECK(report.counterexamples.empty());
  }

  TEST_CASE("ternary boolean cube") {
    auto c = base_config();
    c.arity = 3;
    const auto report = sweep(c);
    CHECK(report.generated == 256);
    CHECK(report.skipped == 8);
    CHECK(report.eligible == 248);
    CHECK(report.clean());
    CHECK(report.per_check[0].gap2 == 28);
  }

  TEST_CASE("checks share one pass over the tables") {
    auto c = base_config();
    c.arity = 3;
    c.checks = {Check::boolean_gap, Check::characterization};
    const auto report = sweep(c);
    REQUIRE(report.per_check.size() == 2);
    CHECK(report.per_check[0].checked == 248);
    CHECK(report.per_check[1].checked == 248);
    CHECK(report.per_check[0].gap2 == report.per_check[1].gap2);
    CHECK(report.agreements == 2 * 248);
    CHECK(report.clean());
  }

  TEST_CASE("monotone ternary boolean tables") {
    auto c = base_config();
    c.arity = 3;
    c.checks = {Check::monotone};
    c.monotone_only = true;
    const auto report = sweep(c);
    CHECK(report.generated == 20);
    CHECK(report.skipped == 5);
    CHECK(report.eligible == 15);
    CHECK(report.per_check[0].gap2 == 1);
    CHECK(report.clean());
  }

  TEST_CASE("sampled characterization stays clean") {
    SweepConfig c;
    c.checks = {Check::characterization};
    c.domain_size = 3;
    c.codomain_size = 3;
    c.arity = 3;
    c.mode = SweepMode::sample;
    c.sample_count = 300;
    c.seed = 1234;
    const auto report = sweep(c);
    CHECK(report.generated == 300);
    CHECK(report.clean());
  }

  TEST_CASE("piecewise-linear bundles stay clean") {
    SweepConfig c;
    c.checks = {Check::lovasz};
    c.domain_size = 2;
    c.arity = 3;
    c.rational_values = {Rational(0), Rational(1), Rational(-1)};
    c.mode = SweepMode::sample;
    c.sample_count = 120;
    c.seed = 7;
    c.linearity_triples = 6;
    const auto report = sweep(c);
    CHECK(report.generated == 120);
    CHECK(report.generated == report.eligible + report.skipped);
    CHECK(report.clean());
  }

  TEST_CASE("sampled polynomials stay clean") {
    SweepConfig c;
    c.checks = {Check::latpol};
    c.domain_size = 3;
    c.codomain_size = 3;
    c.arity = 3;
    c.mode = SweepMode::sample;
    c.sample_count = 200;
    c.seed = 5;
    const auto report = sweep(c);
    CHECK(report.generated == 200);
    CHECK(report.clean());
  }

  TEST_CASE("monotone sampling over the bowtie") {
    SweepConfig c;
    c.checks = {Check::monotone};
    c.domain_poset = Poset::bidirected_non_lattice_6();
    c.domain_size = 6;
    c.codomain_poset = Poset::chain(2);
    c.codomain_size = 2;
    c.arity = 2;
    c.monotone_only = true;
    c.mode = SweepMode::sample;
    c.sample_count = 150;
    c.seed = 99;
    const auto report = sweep(c);
    CHECK(report.generated == 150);
    CHECK(report.clean());
  }
}

TEST_SUITE("sweep reports") {
  TEST_CASE("machine block shape") {
    auto c = base_config();
    const auto block = sweep(c).machine_block();
    CHECK(block.rfind("aritygap-report v1\n", 0) == 0);
    CHECK(block.find("checks=boolean\n") != std::string::npos);
    CHECK(block.find("generated=16\n") != std::string::npos);
    CHECK(block.find("disagreements=0\n") != std::string::npos);
    CHECK(block.find("check.boolean.gap2=6\n") != std::string::npos);
    CHECK(block.find("counterexamples=0\n") != std::string::npos);
  }

  TEST_CASE("human text mentions cleanliness") {
    auto c = base_config();
    const auto text = sweep(c).human_text();
    CHECK(text.find("clean") != std::string::npos);
  }

  TEST_CASE("worker count never changes the block") {
    SweepConfig c;
    c.checks = {Check::characterization, Check::willard};
    c.domain_size = 2;
    c.codomain_size = 3;
    c.arity = 4;
    c.mode = SweepMode::sample;
    c.sample_count = 2500;  // spans several chunks
    c.seed = 31;
    c.jobs = 1;
    const auto lone = sweep(c);
    c.jobs = 4;
    const auto pooled = sweep(c);
    CHECK(lone.machine_block() == pooled.machine_block());

    SweepConfig m;
    m.checks = {Check::monotone};
    m.domain_poset = Poset::chain(3);
    m.domain_size = 3;
    m.codomain_poset = Poset::chain(3);
    m.codomain_size = 3;
    m.arity = 3;
    m.monotone_only = true;
    m.mode = SweepMode::sample;
    m.sample_count = 2100;
    m.seed = 8;
    m.jobs = 1;
    const auto mono_lone = sweep(m);
    m.jobs = 3;
    const auto mono_pooled = sweep(m);
    CHECK(mono_lone.machine_block() == mono_pooled.machine_block());
  }

  TEST_CASE("wall time is not part of the block") {
    auto c = base_config();
    const auto a = sweep(c);
    const auto b = sweep(c);
    CHECK(a.machine_block() == b.machine_block());
  }
}
