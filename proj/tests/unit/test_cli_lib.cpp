#include <doctest.h>

#include "../support.hpp"
#include "fva/errors.hpp"
#include "fva/expr_parser.hpp"
#include "fva/suites.hpp"

using namespace fva;
using namespace fvatest;

TEST_CASE("parse_expr examples") {
  const auto sig = sig_free2();
  const auto e = parse_expr(sig, "(a [1] b)");
  CHECK(e == VertexExpr::product(VertexExpr::generator(0), 1, VertexExpr::generator(1)));
  const auto ferm = sig_ferm();
  CHECK(evaluate_expr(ferm, parse_expr(ferm, "a(-2)a(-1)vac")) == FreeElement(Word{{0, -2}, {0, -1}}));
  CHECK(evaluate_expr(ferm, parse_expr(ferm, "a")) == generator_element(0));
  CHECK(evaluate_expr(ferm, parse_expr(ferm, "vac")) == vacuum_element());
}

TEST_CASE("parse errors carry offsets") {
  const auto ferm = sig_ferm();
  try {
    parse_expr(ferm, "a(-1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_expr(ferm, "q(-1)vac"), ValidationError);
  CHECK_THROWS_AS(parse_expr(ferm, "a(-1)vac)"), ParseError);
  CHECK_THROWS_AS(parse_range("4.."), ParseError);
}

TEST_CASE("printed expressions parse back") {
  const auto sig = sig_free2();
  for (const char* text : {"(a [1] b)", "((a [0] b) [-2] a(-1)vac)", "a(-3)b(-1)vac"}) {
    const auto e = parse_expr(sig, text);
    CHECK(parse_expr(sig, to_string(sig, e)) == e);
  }
  const FreeElement x = parse_element(sig, "2 * a(-1)vac - 1/2 * b(-2)a(-1)vac");
  CHECK(parse_element(sig, to_string(sig, x)) == x);
}

TEST_CASE("ranges and integers") {
  CHECK(parse_range("4..12") == std::pair<std::int64_t, std::int64_t>{4, 12});
  CHECK(parse_range("-3..-1") == std::pair<std::int64_t, std::int64_t>{-3, -1});
  CHECK(parse_range("7") == std::pair<std::int64_t, std::int64_t>{7, 7});
  CHECK(parse_integer("-15") == -15);
  CHECK_THROWS_AS(parse_integer("x"), ParseError);
}

TEST_CASE("dong_locality examples") {
  CHECK(dong_locality(1, 2, 0) == 3);
  for (std::int64_t k = 0; k < 5; ++k) CHECK(dong_locality(4, 0, k) == 4);
  CHECK(dong_locality(1, -2, 3) == 1);
  CHECK(dong_locality(1, -2, 2) == 1);
  CHECK(dong_locality(1, -3, 2) == 1 - 3 + 2);
}

TEST_CASE("locfun formula") {
  CHECK(locfun_formula(sig_free2(), 3) == 4);
  CHECK(locfun_formula(sig_free2(), 2) == 1);
  CHECK(locfun_formula(sig_ones(), 4) == 3);
  CHECK_THROWS_AS(verify_locfun(sig_neg(), 2), ValidationError);
}

TEST_CASE("small suites pass") {
  CHECK(verify_dong(sig_ferm(), 2).passed());
  CHECK(verify_locfun(sig_free2(), 3).passed());
  const auto z = load_lattice(R"({"basis": ["a"], "gram": [[1]]})");
  CHECK(verify_presentation(z).passed());
  CHECK(verify_virasoro(z).passed());
}

TEST_CASE("dimension rows of the boson-fermion suite") {
  CHECK(partitions_at_most(4, 3) == 4);
  CHECK(partitions_at_most(0, 0) == 1);
  CHECK(partitions_at_most(3, 0) == 0);
}

TEST_CASE("report rendering is deterministic") {
  SuiteReport r("demo");
  r.check("one", "1", "1", true);
  r.check("two", "2", "3", false);
  r.skip("three", "degenerate");
  CHECK_FALSE(r.passed());
  CHECK(r.count(CheckStatus::Skipped) == 1);
  CHECK(r.render_machine() == r.render_machine());
  CHECK(r.render_machine().find("\"suite\":\"demo\"") != std::string::npos);
}
