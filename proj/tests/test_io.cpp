#include <doctest.h>

#include "helpers.hpp"
#include "stringalg/io.hpp"

using namespace stringalg;
using namespace stringalg::testing;

TEST_SUITE_BEGIN("io");

namespace {

const char* kXyAlgebra = R"({
  "vertices": ["v"],
  "arrows": [{"name": "x", "head": "v", "tail": "v"}, {"name": "y", "head": "v", "tail": "v"}],
  "relations": [["x", "y"], ["y", "x"]]
})";

}  // namespace

TEST_CASE("algebra files parse and validate") {
  auto alg = algebra_from_json_text(kXyAlgebra);
  CHECK(alg->arrow_count() == 2);
  CHECK(alg->sign_map().at("x") == -1);

  CHECK_THROWS_AS(algebra_from_json_text("{ not json"), parse_error);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"vertices": ["v"], "arrows": [
    {"name": "x", "head": "v", "tail": "v"},
    {"name": "y", "head": "v", "tail": "v"},
    {"name": "z", "head": "v", "tail": "v"}]})"),
                  domain_error);

  // explicit signs are validated, not recomputed
  std::string with_signs = std::string(kXyAlgebra);
  with_signs.insert(with_signs.rfind('}'), R"(, "signs": {"x": 1, "x^-1": 1, "y": 1, "y^-1": 1})");
  CHECK_THROWS_AS(algebra_from_json_text(with_signs), domain_error);
}

TEST_CASE("field and scalar literals") {
  CHECK(parse_field_string("Q") == FieldSpec::Q());
  CHECK(parse_field_string("F5") == FieldSpec::Fp(5));
  CHECK_THROWS_AS(parse_field_string("F4"), domain_error);
  CHECK_THROWS_AS(parse_field_string("banana"), parse_error);
  CHECK(parse_scalar_string(FieldSpec::Q(), "-3/4").to_string() == "-3/4");
  CHECK(parse_scalar_string(FieldSpec::Fp(5), "7").res() == 2);
  CHECK_THROWS_AS(parse_scalar_string(FieldSpec::Fp(5), "1/2"), parse_error);
}

TEST_CASE("representation JSON round trip") {
  auto alg = xy_algebra();
  for (FieldSpec f : {FieldSpec::Q(), FieldSpec::Fp(5)}) {
    StringModule sm = string_module(alg, f, parse_word(*alg, "y^-1 x"));
    Representation scr = scramble(sm.rep, 3).rep;
    std::string text = representation_to_json_text(scr, true);
    Representation back = representation_from_json_text(text, "");
    CHECK(back.field() == f);
    CHECK(back.dims() == scr.dims());
    for (int a = 0; a < alg->arrow_count(); ++a) CHECK(back.action(a) == scr.action(a));
  }
}

TEST_CASE("word literals round trip") {
  auto alg = xy_algebra();
  for (const std::string s : {"1_v_+", "1_v_-", "x", "y^-1 x x", "periodic: x y^-1", "eventually: y^-1 x x | y^-1"}) {
    Word w = parse_word_literal(*alg, s);
    CHECK(parse_word_literal(*alg, word_to_string(*alg, w)) == w);
  }
  // the canonical form may rewrite eventually-periodic input, but idempotently
  Word w = parse_word_literal(*alg, "eventually: y^-1 x | x");
  CHECK(word_to_string(*alg, w) == "eventually: y^-1 | x");
  CHECK_THROWS_AS(parse_word_literal(*alg, "q"), parse_error);
  CHECK_THROWS_AS(parse_word_literal(*alg, "x y"), domain_error);
}

TEST_CASE("report JSON round trips") {
  auto alg = xy_algebra();
  FieldSpec f5 = FieldSpec::Fp(5);
  Word e = Word::periodic(*alg, {alg->parse_letter("x"), alg->parse_letter("y^-1")});
  Representation m = direct_sum({string_module(alg, f5, parse_word(*alg, "x")).rep,
                                 band_module(alg, f5, e, BandCoefficient{parse_poly(f5, "T + 3"), 2}).rep});
  DecompositionReport report = decompose(m);
  std::string text = report_to_json_text(*alg, report, true);
  DecompositionReport back = report_from_json_text(*alg, text);
  CHECK(reports_equal(*alg, report, back));
  CHECK(back.audit == report.audit);
}

TEST_CASE("two-sided props literal for the graded window word") {
  auto gamma = graded_window_algebra(0, 4);
  auto parsed = parse_props_literal(*gamma, "twosided: ladder: % x1 y1^-1 y2^-1 @ 1 || ladder: % x1^-1 @ 1");
  REQUIRE(std::holds_alternative<TwoSidedWord>(parsed));
  WordPredicates p = word_predicates(*gamma, std::get<TwoSidedWord>(parsed));
  CHECK(p.finitely_controlled);
  CHECK(!p.finitely_generated);
  CHECK(p.ev_inverse_c);
  CHECK(!p.ev_inverse_cinv);

  // a pattern that does not fit the window is rejected
  CHECK_THROWS_AS(parse_props_literal(*gamma, "twosided: ladder: % x9 @ 1 || x1^-1"), parse_error);
}

TEST_CASE("vector literals") {
  auto v = parse_vector_literal(FieldSpec::Fp(5), "1, 0, 7");
  REQUIRE(v.size() == 3);
  CHECK(v[2].res() == 2);
}

TEST_SUITE_END();
