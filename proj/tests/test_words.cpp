#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace stringalg;
using namespace stringalg::testing;

TEST_SUITE_BEGIN("words");

TEST_CASE("word conditions (a)-(c)") {
  auto alg = xy_algebra();
  CHECK_NOTHROW(parse_word(*alg, "y^-1 x x"));
  CHECK(!is_word_letters(*alg, {alg->parse_letter("x"), alg->parse_letter("y")}));       // xy in rho
  CHECK(!is_word_letters(*alg, {alg->parse_letter("x"), alg->parse_letter("x^-1")}));    // backtrack
  CHECK(!is_word_letters(*alg, {alg->parse_letter("y^-1"), alg->parse_letter("x^-1")})); // inverse of xy
  CHECK(is_word_letters(*alg, {alg->parse_letter("x"), alg->parse_letter("x")}));
}

TEST_CASE("sign alternation holds in every enumerated word") {
  for (auto alg : {xy_algebra(), x2y2_algebra(), triangle_algebra()}) {
    std::map<int, std::size_t> budget;
    for (int v = 0; v < alg->vertex_count(); ++v) budget[v] = 3;
    for (const Word& w : enumerate_words(*alg, budget)) {
      std::size_t n = w.shape() == WordShape::periodic ? w.period().size() : w.length();
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        Letter a = *w.letter_at(i), b = *w.letter_at(i + 1);
        CHECK(alg->sign_of(a.inverse()) == -alg->sign_of(b));
      }
    }
  }
}

TEST_CASE("inverse, shift, compose") {
  auto alg = xy_algebra();
  Word t = Word::trivial(*alg, 0, +1);
  CHECK(inverse(*alg, t) == Word::trivial(*alg, 0, -1));
  CHECK(inverse(*alg, parse_word(*alg, "y^-1 x")) == parse_word(*alg, "x^-1 y"));

  // 1_{v,eps} 1_{v,eps} = 1_{v,eps}
  auto r = compose(*alg, t, t);
  REQUIRE(std::holds_alternative<Word>(r));
  CHECK(std::get<Word>(r) == t);

  // compose failure reasons are distinguished
  auto tri = triangle_algebra();
  Word a = parse_word(*tri, "a");
  auto mismatch = compose(*tri, a, a);  // tail(a)=1, head(a)=2
  REQUIRE(std::holds_alternative<ComposeFail>(mismatch));
  CHECK(std::get<ComposeFail>(mismatch) == ComposeFail::head_tail_mismatch);

  auto clash = compose(*alg, parse_word(*alg, "x"), parse_word(*alg, "x"));
  REQUIRE(std::holds_alternative<ComposeFail>(clash));
  CHECK(std::get<ComposeFail>(clash) == ComposeFail::sign_clash);

  auto x2 = x2y2_algebra();
  Word xw = parse_word(*x2, "x");
  auto notword = compose(*x2, xw, xw);  // xx lies in rho
  REQUIRE(std::holds_alternative<ComposeFail>(notword));
  CHECK(std::get<ComposeFail>(notword) == ComposeFail::not_a_word);

  // involution and anti-homomorphism on composable pairs
  Word c = parse_word(*alg, "y^-1 x");
  CHECK(inverse(*alg, inverse(*alg, c)) == c);
  Word d = parse_word(*alg, "x");
  auto cd = compose(*alg, c, d);
  REQUIRE(std::holds_alternative<Word>(cd));
  auto dici = compose(*alg, inverse(*alg, d), inverse(*alg, c));
  REQUIRE(std::holds_alternative<Word>(dici));
  CHECK(std::get<Word>(dici) == inverse(*alg, std::get<Word>(cd)));
}

TEST_CASE("shift rotates periodic words and fixes the rest") {
  auto alg = xy_algebra();
  Word e = Word::periodic(*alg, {alg->parse_letter("x"), alg->parse_letter("y^-1")});
  Word e1 = shift(*alg, e, 1);
  CHECK(e1.period() == std::vector<Letter>{alg->parse_letter("y^-1"), alg->parse_letter("x")});
  CHECK(shift(*alg, e, 2) == e);
  Word f = parse_word(*alg, "x x");
  CHECK(shift(*alg, f, 5) == f);
}

TEST_CASE("periodic words must be primitive") {
  auto alg = xy_algebra();
  CHECK_THROWS_AS(Word::periodic(*alg, {alg->parse_letter("x"), alg->parse_letter("x")}), domain_error);
}

TEST_CASE("eventually periodic canonical form") {
  auto alg = xy_algebra();
  // y^-1 x x (x)^inf reduces to prefix y^-1, period x
  Word w = Word::ev_periodic(*alg, {alg->parse_letter("y^-1"), alg->parse_letter("x"), alg->parse_letter("x")},
                             {alg->parse_letter("x")});
  CHECK(w.prefix() == std::vector<Letter>{alg->parse_letter("y^-1")});
  CHECK(w.period() == std::vector<Letter>{alg->parse_letter("x")});
}

TEST_CASE("compare: the stated examples") {
  auto alg = xy_algebra();
  // sign(y) = +1 here, so "y" and the trivial word share W_{v,+1}
  CHECK(compare(*alg, parse_word(*alg, "y"), Word::trivial(*alg, 0, +1)) == Cmp::LT);
  // rule (c): the trivial word is smaller than any inverse extension
  CHECK(compare(*alg, Word::trivial(*alg, 0, +1), parse_word(*alg, "x^-1")) == Cmp::LT);
  // rule (a) at the first divergence
  CHECK(compare(*alg, parse_word(*alg, "x^-1 y"), parse_word(*alg, "x^-1 x^-1")) == Cmp::LT);
}

TEST_CASE("every finite non-inverse word is below (P^-1)^inf") {
  auto alg = xy_algebra();
  Word pinv = Word::ev_periodic(*alg, {}, {alg->parse_letter("x^-1")});
  int eps = sign_of(*alg, pinv);
  std::map<int, std::size_t> budget{{0, 5}};
  for (const Word& w : enumerate_words(*alg, budget)) {
    if (w.shape() == WordShape::periodic) continue;
    for (const Word& cand : {w, w.is_trivial() ? w : inverse(*alg, w)}) {
      if (sign_of(*alg, cand) != eps && !cand.is_trivial()) continue;
      Word c = cand.is_trivial() ? Word::trivial(*alg, 0, eps) : cand;
      bool all_inverse = true;
      for (std::size_t i = 1; i <= c.length(); ++i)
        if (!c.letter_at(i)->inv) all_inverse = false;
      if (!c.is_trivial() && all_inverse) continue;
      CHECK(compare(*alg, c, pinv) == Cmp::LT);
    }
  }
}

TEST_CASE("compare is a strict total order on an enumerated W_{v,eps}") {
  auto alg = x2y2_algebra();
  std::map<int, std::size_t> budget{{0, 4}};
  std::vector<Word> all = enumerate_words(*alg, budget);
  std::vector<Word> wv;  // W_{v,+1} members, finite and N-words
  for (const Word& w : all) {
    if (w.shape() == WordShape::periodic) {
      for (std::size_t r = 0; r < w.period().size(); ++r) {
        Word side = side_word(*alg, w, r, +1).word;
        wv.push_back(side);
      }
      continue;
    }
    for (const Word& c : {w, inverse(*alg, w)})
      if ((c.is_trivial() && c.trivial_sign() == 1 && c.trivial_vertex() == 0) ||
          (!c.is_trivial() && sign_of(*alg, c) == 1))
        wv.push_back(c);
  }
  // dedupe
  std::set<std::vector<std::string>> keys;
  std::vector<Word> ws;
  for (const Word& w : wv)
    if (keys.insert(encode(*alg, w)).second) ws.push_back(w);

  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      Cmp c = compare(*alg, ws[i], ws[j]);
      Cmp r = compare(*alg, ws[j], ws[i]);
      if (i == j) CHECK(c == Cmp::EQ);
      if (c == Cmp::EQ) CHECK(encode(*alg, ws[i]) == encode(*alg, ws[j]));
      CHECK((c == Cmp::LT) == (r == Cmp::GT));
    }
  // transitivity
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j)
      for (std::size_t k = 0; k < ws.size(); ++k)
        if (compare(*alg, ws[i], ws[j]) == Cmp::LT && compare(*alg, ws[j], ws[k]) == Cmp::LT)
          CHECK(compare(*alg, ws[i], ws[k]) == Cmp::LT);
}

TEST_CASE("equivalence and canonical representatives") {
  auto alg = xy_algebra();
  Word e = Word::periodic(*alg, {alg->parse_letter("x"), alg->parse_letter("y^-1")});
  Word erot = Word::periodic(*alg, {alg->parse_letter("y^-1"), alg->parse_letter("x")});
  CHECK(equivalent(*alg, e, erot));
  CHECK(equivalent(*alg, parse_word(*alg, "y^-1 x"), parse_word(*alg, "x^-1 y")));
  CHECK(canonical_rep(*alg, parse_word(*alg, "y^-1 x")) == parse_word(*alg, "x^-1 y"));
  CHECK(canonical_rep(*alg, e) == e);
  CHECK(!equivalent(*alg, parse_word(*alg, "x"), parse_word(*alg, "y")));
}

TEST_CASE("Lemma: no word equals a shift of its inverse") {
  for (auto alg : {xy_algebra(), x2y2_algebra(), triangle_algebra()}) {
    std::map<int, std::size_t> budget;
    for (int v = 0; v < alg->vertex_count(); ++v) budget[v] = 4;
    for (const Word& w : enumerate_words(*alg, budget)) {
      if (w.is_trivial()) continue;
      if (w.shape() == WordShape::finite) {
        CHECK(w != inverse(*alg, w));
      } else if (w.shape() == WordShape::periodic) {
        Word inv = inverse(*alg, w);
        for (std::size_t n = 0; n < w.period().size(); ++n) CHECK(w != shift(*alg, inv, static_cast<int>(n)));
      }
    }
  }
}

TEST_CASE("enumerate_words: budgets") {
  auto alg = xy_algebra();
  auto words1 = enumerate_words(*alg, {{0, 1}});
  // one trivial class plus the two period-1 Z-words, whose window fits in one index
  REQUIRE(words1.size() == 3);
  CHECK(words1[0].is_trivial());
  CHECK(words1[1].shape() == WordShape::periodic);

  auto words2 = enumerate_words(*alg, {{0, 2}});
  std::set<std::string> names;
  for (const Word& w : words2) names.insert(word_to_string(*alg, w));
  CHECK(names == std::set<std::string>{"1_v_+", "x", "y", "periodic: x", "periodic: x y^-1", "periodic: y"});

  // A2 quiver: three classes within budget 1,1
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", "1", "2"}};
  auto a2 = std::make_shared<StringAlgebra>(q, std::vector<ZeroRelation>{});
  auto wa = enumerate_words(*a2, {{0, 1}, {1, 1}});
  CHECK(wa.size() == 3);

  // no two enumerated words are equivalent
  for (auto algx : {xy_algebra(), x2y2_algebra()}) {
    auto ws = enumerate_words(*algx, {{0, 3}});
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) CHECK(!equivalent(*algx, ws[i], ws[j]));
  }
}

TEST_CASE("side words C(i,eps) on a finite word") {
  auto alg = xy_algebra();
  Word c = parse_word(*alg, "y^-1 x x");  // indices 0..3
  for (std::size_t i = 0; i <= 3; ++i) {
    SideWord plus = side_word(*alg, c, i, +1);
    SideWord minus = side_word(*alg, c, i, -1);
    CHECK(sign_of(*alg, plus.word) == +1);
    CHECK(sign_of(*alg, minus.word) == -1);
    CHECK(plus.direction == -minus.direction);
  }
  CHECK(side_word(*alg, c, 0, sign_of(*alg, c)).word == c);
  // (C_{<=3})^{-1} = x^-1 x^-1 y
  CHECK(side_word(*alg, c, 3, sign_of(*alg, parse_word(*alg, "x^-1 x^-1 y"))).word ==
        parse_word(*alg, "x^-1 x^-1 y"));
}

TEST_CASE("word predicates of Theorem 1.4(iii)") {
  auto alg = xy_algebra();
  // finite: both predicates hold
  WordPredicates p1 = word_predicates(*alg, parse_word(*alg, "y^-1 x"));
  CHECK(p1.finitely_generated);
  CHECK(p1.finitely_controlled);

  // y^-1 x x (y^-1)^inf is finitely generated
  Word c = Word::ev_periodic(*alg, {alg->parse_letter("y^-1"), alg->parse_letter("x"), alg->parse_letter("x")},
                             {alg->parse_letter("y^-1")});
  WordPredicates p2 = word_predicates(*alg, c);
  CHECK(p2.ev_inverse_c);
  CHECK(p2.ev_inverse_cinv);
  CHECK(p2.finitely_generated);
  CHECK(p2.finitely_controlled);

  // the periodic Z-word of a primitive cycle is not finitely controlled
  Word zx = Word::periodic(*alg, {alg->parse_letter("x")});
  WordPredicates p3 = word_predicates(*alg, zx);
  CHECK(!p3.ev_inverse_c);
  CHECK(p3.ev_inverse_cinv);
  CHECK(!p3.vertex_finite_c);
  CHECK(!p3.finitely_generated);
  CHECK(!p3.finitely_controlled);

  // the Gamma window word: eventually inverse, inverse side vertex-finite only
  TwoSidedWord d;
  d.right_tail = TailPattern{TailPattern::Kind::ladder, {Letter{0, true}}, 1};
  d.left_tail = TailPattern{TailPattern::Kind::ladder, {Letter{0, false}, Letter{1, true}, Letter{2, true}}, 1};
  WordPredicates p4 = word_predicates(*alg, d);
  CHECK(p4.ev_inverse_c);
  CHECK(!p4.ev_inverse_cinv);
  CHECK(p4.vertex_finite_c);
  CHECK(p4.vertex_finite_cinv);
  CHECK(!p4.finitely_generated);
  CHECK(p4.finitely_controlled);
}

TEST_SUITE_END();
