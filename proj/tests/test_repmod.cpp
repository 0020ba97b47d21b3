#include <doctest.h>

#include "helpers.hpp"

using namespace stringalg;
using namespace stringalg::testing;

TEST_SUITE_BEGIN("repmod");

TEST_CASE("string modules realize the displayed action") {
  auto alg = xy_algebra();
  FieldSpec q = FieldSpec::Q();

  StringModule triv = string_module(alg, q, Word::trivial(*alg, 0, +1));
  CHECK(triv.rep.dim(0) == 1);
  CHECK(triv.rep.action("x").is_zero());
  CHECK(triv.rep.action("y").is_zero());

  StringModule mx = string_module(alg, q, parse_word(*alg, "x"));
  CHECK(mx.rep.dim(0) == 2);
  CHECK(mx.rep.action("x") == mat(q, {{0, 1}, {0, 0}}));
  CHECK(mx.rep.action("y").is_zero());

  StringModule m = string_module(alg, q, parse_word(*alg, "y^-1 x"));
  CHECK(m.rep.dim(0) == 3);
  // y b0 = b1 and x b2 = b1, with slots in index order
  CHECK(m.rep.action("y") == mat(q, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(m.rep.action("x") == mat(q, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("dim M(C) = length + 1, across algebras") {
  for (auto alg : {xy_algebra(), x2y2_algebra(), triangle_algebra()}) {
    std::map<int, std::size_t> budget;
    for (int v = 0; v < alg->vertex_count(); ++v) budget[v] = 4;
    for (const Word& w : enumerate_words(*alg, budget)) {
      if (w.shape() == WordShape::periodic) continue;
      StringModule sm = string_module(alg, FieldSpec::Fp(5), w);
      CHECK(sm.rep.total_dim() == w.length() + 1);
    }
  }
}

TEST_CASE("band modules: the worked example and the dimension formula") {
  auto alg = xy_algebra();
  FieldSpec f5 = FieldSpec::Fp(5);
  Word e = Word::periodic(*alg, {alg->parse_letter("x"), alg->parse_letter("y^-1")});

  BandModule b1 = band_module(alg, f5, e, BandCoefficient{parse_poly(f5, "T - 2"), 1});
  CHECK(b1.rep.dim(0) == 2);
  CHECK(b1.rep.action("x") == mat(f5, {{0, 1}, {0, 0}}));
  CHECK(b1.rep.action("y") == mat(f5, {{0, 2}, {0, 0}}));

  BandModule b2 = band_module(alg, f5, e, BandCoefficient{parse_poly(f5, "T - 1"), 2});
  CHECK(b2.rep.total_dim() == 4);
  CHECK(b2.t_matrix == companion(parse_poly(f5, "T^2 - 2*T + 1")));

  CHECK_THROWS_AS(band_module(alg, f5, e, BandCoefficient{parse_poly(f5, "T^2 + 1"), 1}), domain_error);
  CHECK_THROWS_AS(band_module(alg, f5, e, BandCoefficient{parse_poly(f5, "T"), 1}), domain_error);
}

TEST_CASE("word relations chain the module action") {
  auto alg = xy_algebra();
  FieldSpec q = FieldSpec::Q();
  StringModule m = string_module(alg, q, parse_word(*alg, "y^-1 x"));
  CHECK(word_relation(m.rep, parse_word(*alg, "x")) == LinearRelation::from_map(m.rep.action("x")));

  // word_relation(M(C), C) relates b_n to b_0
  for (const std::string s : {"x", "y^-1 x", "y^-1 x x"}) {
    Word c = parse_word(*alg, s);
    StringModule sm = string_module(alg, q, c);
    LinearRelation r = word_relation(sm.rep, c);
    std::vector<Scalar> pair = zero_vector(q, sm.rep.dim(0) * 2);
    pair[sm.slot[c.length()]] = Scalar::one(q);
    pair[sm.rep.dim(0) + sm.slot[0]] = Scalar::one(q);
    CHECK(r.graph().contains(pair));
  }

  // a zero relation's path composes to the zero map
  StringModule sm = string_module(alg, q, parse_word(*alg, "y^-1 x"));
  LinearRelation xy = compose(LinearRelation::from_map(sm.rep.action("x")),
                              LinearRelation::from_map(sm.rep.action("y")));
  CHECK(apply_full(xy) == Subspace(q, 3));
}

TEST_CASE("torsion subspaces of the stated examples") {
  auto alg = xy_algebra();
  FieldSpec f5 = FieldSpec::Fp(5);

  StringModule mx = string_module(alg, f5, parse_word(*alg, "x"));
  auto t1 = torsion(mx.rep);
  CHECK(t1[0].tau0 == Subspace::full(f5, 2));
  CHECK(t1[0].tau1 == Subspace(f5, 2));

  Word e = Word::periodic(*alg, {alg->parse_letter("x"), alg->parse_letter("y^-1")});
  BandModule band = band_module(alg, f5, e, BandCoefficient{parse_poly(f5, "T - 2"), 1});
  auto t2 = torsion(band.rep);
  CHECK(t2[0].tau0 == Subspace::full(f5, 2));
  CHECK(t2[0].tau1 == Subspace(f5, 2));

  // k with x acting invertibly: pure primitive torsion
  std::vector<Matrix> action{mat(f5, {{2}}), mat(f5, {{0}})};
  Representation k1(alg, f5, {1}, action);
  auto t3 = torsion(k1);
  CHECK(t3[0].tau0 == Subspace(f5, 1));
  CHECK(t3[0].tau1 == Subspace::full(f5, 1));
}

TEST_CASE("finite string modules are nilpotent torsion") {
  auto alg = x2y2_algebra();
  FieldSpec f5 = FieldSpec::Fp(5);
  std::map<int, std::size_t> budget{{0, 4}};
  for (const Word& w : enumerate_words(*alg, budget)) {
    if (w.shape() == WordShape::periodic) continue;
    StringModule sm = string_module(alg, f5, w);
    for (const auto& vt : torsion(sm.rep)) {
      CHECK(vt.tau0.dim() == sm.rep.dim(0));
      CHECK(vt.tau1.dim() == 0);
    }
  }
}

TEST_CASE("direct sums and scrambles") {
  auto alg = xy_algebra();
  FieldSpec f5 = FieldSpec::Fp(5);
  StringModule a = string_module(alg, f5, parse_word(*alg, "x"));
  StringModule b = string_module(alg, f5, parse_word(*alg, "y"));
  Representation sum2 = direct_sum({a.rep, b.rep});
  CHECK(sum2.dim(0) == 4);

  Scrambled id = scramble(sum2, 0);
  CHECK(id.rep.action("x") == sum2.action("x"));
  CHECK(id.change[0] == Matrix::identity(f5, 4));

  Scrambled s = scramble(sum2, 42);
  CHECK(is_invertible(s.change[0]));
  // conjugation: action commutes through the change of basis
  CHECK(s.change[0] * s.rep.action("x") == sum2.action("x") * s.change[0]);

  // torsion dimensions are isomorphism invariants
  auto t0 = torsion(sum2);
  auto t1 = torsion(s.rep);
  CHECK(t0[0].tau0.dim() == t1[0].tau0.dim());
  CHECK(t0[0].tau1.dim() == t1[0].tau1.dim());
}

TEST_CASE("relations are verified at construction") {
  auto alg = xy_algebra();
  FieldSpec q = FieldSpec::Q();
  // x and y both acting as identity on k violates xy = 0
  std::vector<Matrix> bad{mat(q, {{1}}), mat(q, {{1}})};
  CHECK_THROWS_AS(Representation(alg, q, {1}, bad), domain_error);
}

TEST_CASE("graded ingestion") {
  FieldSpec q = FieldSpec::Q();

  GradedWindow zero = graded_ingest(q, 0, 2, {0, 0, 0}, {Matrix(q, 0, 0), Matrix(q, 0, 0)},
                                    {Matrix(q, 0, 0), Matrix(q, 0, 0)});
  CHECK(zero.rep.total_dim() == 0);
  CHECK(zero.warnings.empty());

  GradedWindow simple = graded_ingest(q, 0, 1, {1, 0}, {Matrix(q, 0, 1)}, {Matrix(q, 0, 1)});
  CHECK(simple.rep.total_dim() == 1);

  // identity x-maps produce the direct-word string module on the window
  GradedWindow w = graded_ingest(q, 0, 2, {1, 1, 1}, {mat(q, {{1}}), mat(q, {{1}})},
                                 {Matrix(q, 1, 1), Matrix(q, 1, 1)});
  auto sm = string_module(w.alg, q, parse_word(*w.alg, "x2 x1"));
  for (int a = 0; a < w.alg->arrow_count(); ++a) CHECK(w.rep.action(a) == sm.rep.action(a));

  // nonzero exiting map is dropped with a warning
  GradedWindow warned = graded_ingest(q, 0, 1, {1, 1}, {mat(q, {{1}}), mat(q, {{1}})},
                                      {Matrix(q, 1, 1), Matrix(q, 1, 1)});
  REQUIRE(warned.warnings.size() == 1);
  CHECK(warned.warnings[0].find("dropped") != std::string::npos);

  // data violating xy = 0 is rejected
  CHECK_THROWS_AS(graded_ingest(q, 0, 2, {1, 1, 1}, {mat(q, {{1}}), mat(q, {{1}})},
                                {mat(q, {{1}}), Matrix(q, 1, 1)}),
                  domain_error);
}

TEST_SUITE_END();
