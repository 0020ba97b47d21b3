#include "stringalg/functors.hpp"

#include <map>
#include <sstream>

namespace stringalg {

namespace {

LinearRelation extend_relation(const Representation& m, const LinearRelation& r, const Letter& l) {
  const Matrix& a = m.action(l.arrow);
  return l.inv ? precompose_map_inverse(r, a) : precompose_map(r, a);
}

std::optional<Letter> pick(const std::vector<Letter>& ls, bool inv) {
  for (const auto& l : ls)
    if (l.inv == inv) return l;
  return std::nullopt;
}

}  // namespace

FiltrationPair plus_minus(const Representation& m, const Word& c) {
  const StringAlgebra& alg = m.alg();
  if (c.shape() == WordShape::periodic)
    throw domain_error("plus_minus needs a word with a head (finite or N-word)");

  if (c.is_finite_shape()) {
    LinearRelation r = word_relation(m, c);
    auto exts = extension_letters(alg, c);
    auto dir = pick(exts, false);
    auto inv = pick(exts, true);
    FiltrationPair out;
    out.plus = inv ? apply_zero(extend_relation(m, r, *inv)) : apply_full(r);
    out.minus = dir ? apply_full(extend_relation(m, r, *dir)) : apply_zero(r);
    return out;
  }

  // eventually periodic: stabilize the pure period chains at the cycle
  // vertex, then push through the prefix (Realization Lemma shape)
  Word bper = Word::finite(alg, c.period());
  LinearRelation rb = word_relation(m, bper);
  Subspace x = Subspace::full(m.field(), rb.src());
  for (;;) {
    Subspace next = apply(rb, x);
    if (next == x) break;
    x = next;
  }
  Subspace w(m.field(), rb.src());
  for (;;) {
    Subspace next = apply(rb, w);
    if (next == w) break;
    w = next;
  }
  Word pre = c.prefix().empty() ? Word::trivial(alg, head_of(alg, c), sign_of(alg, c))
                                : Word::finite(alg, c.prefix());
  LinearRelation ra = word_relation(m, pre);
  return FiltrationPair{apply(ra, x), apply(ra, w)};
}

JoinInfo join_word(const StringAlgebra& alg, const Word& b, const Word& d) {
  // letter stream of B^{-1}D: g(i) = D_i for i >= 1, (B_{1-i})^{-1} for i <= 0
  auto letter = [&](long i) -> std::optional<Letter> {
    if (i >= 1) return d.letter_at(static_cast<std::size_t>(i));
    auto l = b.letter_at(static_cast<std::size_t>(1 - i));
    if (!l) return std::nullopt;
    return l->inverse();
  };
  long reach = static_cast<long>(alg.max_relation_length());
  long lo = -reach + 1, hi = reach;
  while (lo <= 0 && !letter(lo - 0)) ++lo;
  while (hi >= 1 && !letter(hi)) --hi;
  std::vector<Letter> window;
  for (long i = lo; i <= hi; ++i) {
    auto l = letter(i);
    if (!l) return JoinInfo{false, std::nullopt};  // a gap inside the window cannot happen for words
    window.push_back(*l);
  }
  JoinInfo info;
  info.is_word = window.empty() ? true : alg.window_ok(window);
  if (!info.is_word) return info;

  if (b.shape() == WordShape::ev_periodic && d.shape() == WordShape::ev_periodic) {
    long n = static_cast<long>(d.period().size());
    long lo2 = -static_cast<long>(b.prefix().size() + b.period().size()) - n - 2;
    long hi2 = static_cast<long>(d.prefix().size()) + 1;
    bool periodic = true;
    for (long i = lo2; i <= hi2 && periodic; ++i) {
      auto a1 = letter(i);
      auto a2 = letter(i + n);
      if (!a1 || !a2 || !(*a1 == *a2)) periodic = false;
    }
    if (periodic) {
      std::vector<Letter> per;
      for (long i = 1; i <= n; ++i) per.push_back(*letter(i));
      info.period = Word::periodic(alg, std::move(per));
    }
  }
  return info;
}

RefinedValue refined(const Representation& m, const Word& b, const Word& d) {
  const StringAlgebra& alg = m.alg();
  int v = head_of(alg, b);
  if (head_of(alg, d) != v) throw domain_error("refined: B and D must share their head");
  if (sign_of(alg, b) == sign_of(alg, d)) throw domain_error("refined: B and D must have opposite signs");

  RefinedValue out;
  JoinInfo join = join_word(alg, b, d);
  if (!join.is_word) {
    out.f_plus = Subspace(m.field(), m.dim(v));
    out.f_minus = out.f_plus;
    return out;  // F_{B,D} = 0 when B^{-1}D is not a word
  }

  FiltrationPair pb = plus_minus(m, b);
  FiltrationPair pd = plus_minus(m, d);
  out.f_plus = intersect(pb.plus, pd.plus);
  out.f_minus = sum(intersect(pb.plus, pd.minus), intersect(pb.minus, pd.plus));
  out.dim = out.f_plus.dim() - out.f_minus.dim();

  if (join.period) {
    const Word& e = *join.period;
    LinearRelation r = word_relation(m, Word::finite(alg, e.period()));
    RelationCore core = relation_core(r);
    if (core.sharp != out.f_plus || core.flat != out.f_minus)
      throw internal_error("refined: period relation sharp/flat disagree with the B,D filtration");
    out.period = e;
    out.t_action = inverse(core.theta);
  }
  return out;
}

Word covering_search(const Representation& m, int vertex, const std::vector<Scalar>& mvec, int sign) {
  return covering_search(m, vertex, mvec, sign, Subspace(m.field(), m.dim(vertex)));
}

Word covering_search(const Representation& m, int vertex, const std::vector<Scalar>& mvec, int sign,
                     const Subspace& w0) {
  const StringAlgebra& alg = m.alg();
  if (mvec.size() != m.dim(vertex)) throw domain_error("covering_search: vector/vertex dimension mismatch");
  auto meets = [&](const Subspace& x) { return sum(x, w0).contains(mvec); };
  if (meets(Subspace(m.field(), m.dim(vertex))))
    throw domain_error("covering_search: the coset contains zero");

  Word word = Word::trivial(alg, vertex, sign);
  LinearRelation rel = LinearRelation::identity(m.field(), m.dim(vertex));
  std::vector<Letter> letters;

  // state signature: the relation graph, the tail vertex and the letter
  // window that determines future extension choices
  auto signature = [&]() {
    std::ostringstream os;
    os << (letters.empty() ? vertex : alg.tail_of(letters.back())) << "#";
    std::size_t take = std::min(letters.size(), alg.max_relation_length() - 1);
    if (letters.empty()) os << (sign > 0 ? "+" : "-");
    for (std::size_t i = letters.size() - take; i < letters.size(); ++i)
      os << alg.letter_name(letters[i]) << " ";
    os << "#" << rel.graph().basis().to_string();
    return os.str();
  };

  auto verify = [&](const Word& c) {
    FiltrationPair pm = plus_minus(m, c);
    if (!meets(pm.plus) || meets(pm.minus))
      throw internal_error("covering_search: constructed word fails filtration verification");
    return c;
  };

  std::map<std::string, std::size_t> seen;
  std::size_t step_cap = 64 + 8 * (m.total_dim() + 2) * (m.total_dim() + 2);
  for (std::size_t step = 0; step <= step_cap; ++step) {
    auto [it, fresh] = seen.emplace(signature(), letters.size());
    if (!fresh) {
      std::size_t s1 = it->second;
      std::vector<Letter> pre(letters.begin(), letters.begin() + s1);
      std::vector<Letter> per(letters.begin() + s1, letters.end());
      return verify(Word::ev_periodic(alg, std::move(pre), std::move(per)));
    }
    auto exts = extension_letters(alg, word);
    auto dir = pick(exts, false);
    auto inv = pick(exts, true);
    if (dir) {
      LinearRelation nxt = extend_relation(m, rel, *dir);
      if (meets(apply_full(nxt))) {
        rel = std::move(nxt);
        letters.push_back(*dir);
        word = Word::finite(alg, letters);
        continue;
      }
    }
    if (inv) {
      LinearRelation nxt = extend_relation(m, rel, *inv);
      if (!meets(apply_zero(nxt))) {
        rel = std::move(nxt);
        letters.push_back(*inv);
        word = Word::finite(alg, letters);
        continue;
      }
    }
    return verify(word);
  }
  throw internal_error("covering_search: no finite word and no period within the step cap");
}

RefinedCover refined_covering(const Representation& m, int vertex, const std::vector<Scalar>& mvec) {
  Word b = covering_search(m, vertex, mvec, +1);
  FiltrationPair pb = plus_minus(m, b);
  Word d = covering_search(m, vertex, mvec, -1, pb.minus);
  FiltrationPair pd = plus_minus(m, d);
  Subspace gplus = sum(pb.minus, intersect(pd.plus, pb.plus));
  Subspace gminus = sum(pb.minus, intersect(pd.minus, pb.plus));
  if (!gplus.contains(mvec) || gminus.contains(mvec))
    throw internal_error("refined_covering: G-membership conditions failed");
  return RefinedCover{b, d};
}

}  // namespace stringalg
