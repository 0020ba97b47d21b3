#include "stringalg/words.hpp"

#include <algorithm>
#include <set>

namespace stringalg {

namespace {

std::vector<Letter> reverse_invert(const std::vector<Letter>& ls) {
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::vector<Letter> rotate_left(std::vector<Letter> ls, std::size_t n) {
  if (ls.empty()) return ls;
  n %= ls.size();
  std::rotate(ls.begin(), ls.begin() + n, ls.end());
  return ls;
}

bool is_primitive(const std::vector<Letter>& per) {
  std::size_t m = per.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool rep = true;
    for (std::size_t i = 0; i < m && rep; ++i)
      if (per[i] != per[i % d]) rep = false;
    if (rep) return false;
  }
  return true;
}

std::vector<Letter> unroll(const std::vector<Letter>& pre, const std::vector<Letter>& per, std::size_t min_extra) {
  std::vector<Letter> out = pre;
  if (per.empty()) return out;
  std::size_t reps = 2 + (min_extra + per.size() - 1) / per.size();
  for (std::size_t r = 0; r < reps; ++r) out.insert(out.end(), per.begin(), per.end());
  return out;
}

}  // namespace

bool is_word_letters(const StringAlgebra& alg, const std::vector<Letter>& ls) {
  return alg.window_ok(ls);
}

Word Word::trivial(const StringAlgebra& alg, int vertex, int sign) {
  if (vertex < 0 || vertex >= alg.vertex_count()) throw domain_error("trivial word at unknown vertex");
  if (sign != 1 && sign != -1) throw domain_error("trivial word sign must be +1 or -1");
  Word w;
  w.shape_ = WordShape::trivial;
  w.vertex_ = vertex;
  w.sign_ = sign;
  return w;
}

Word Word::finite(const StringAlgebra& alg, std::vector<Letter> letters) {
  if (letters.empty()) throw domain_error("finite word needs letters; use a trivial word");
  if (!is_word_letters(alg, letters)) throw domain_error("letter sequence is not a word");
  Word w;
  w.shape_ = WordShape::finite;
  w.pre_ = std::move(letters);
  return w;
}

Word Word::periodic(const StringAlgebra& alg, std::vector<Letter> period) {
  if (period.empty()) throw domain_error("periodic word needs a nonempty period");
  if (!is_primitive(period)) throw domain_error("periodic word must have a primitive period");
  auto test = unroll({}, period, alg.max_relation_length());
  if (!is_word_letters(alg, test)) throw domain_error("period does not define a Z-word");
  Word w;
  w.shape_ = WordShape::periodic;
  w.per_ = std::move(period);
  return w;
}

Word Word::ev_periodic(const StringAlgebra& alg, std::vector<Letter> prefix, std::vector<Letter> period) {
  if (period.empty()) throw domain_error("eventually periodic word needs a nonempty period");
  // reduce a power period to its primitive root
  for (std::size_t d = 1; d < period.size(); ++d) {
    if (period.size() % d != 0) continue;
    bool rep = true;
    for (std::size_t i = 0; i < period.size() && rep; ++i)
      if (period[i] != period[i % d]) rep = false;
    if (rep) {
      period.resize(d);
      break;
    }
  }
  // canonical form: minimal prefix, period rotated to match
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.begin(), period.end() - 1, period.end());
  }
  auto test = unroll(prefix, period, alg.max_relation_length());
  if (!is_word_letters(alg, test)) throw domain_error("prefix/period do not define an N-word");
  Word w;
  w.shape_ = WordShape::ev_periodic;
  w.pre_ = std::move(prefix);
  w.per_ = std::move(period);
  return w;
}

std::optional<Letter> Word::letter_at(std::size_t i) const {
  if (i == 0) return std::nullopt;
  switch (shape_) {
    case WordShape::trivial:
      return std::nullopt;
    case WordShape::finite:
      return i <= pre_.size() ? std::optional<Letter>(pre_[i - 1]) : std::nullopt;
    case WordShape::periodic:
      return per_[(i - 1) % per_.size()];
    case WordShape::ev_periodic:
      if (i <= pre_.size()) return pre_[i - 1];
      return per_[(i - 1 - pre_.size()) % per_.size()];
  }
  return std::nullopt;
}

bool Word::operator==(const Word& o) const {
  return shape_ == o.shape_ && vertex_ == o.vertex_ && sign_ == o.sign_ && pre_ == o.pre_ && per_ == o.per_;
}

int head_of(const StringAlgebra& alg, const Word& w) {
  switch (w.shape()) {
    case WordShape::trivial:
      return w.trivial_vertex();
    case WordShape::finite:
      return alg.head_of(w.prefix().front());
    case WordShape::ev_periodic:
      return alg.head_of(w.prefix().empty() ? w.period().front() : w.prefix().front());
    case WordShape::periodic:
      throw domain_error("a periodic Z-word has no head");
  }
  throw internal_error("unreachable");
}

int sign_of(const StringAlgebra& alg, const Word& w) {
  switch (w.shape()) {
    case WordShape::trivial:
      return w.trivial_sign();
    case WordShape::finite:
      return alg.sign_of(w.prefix().front());
    case WordShape::ev_periodic:
      return alg.sign_of(w.prefix().empty() ? w.period().front() : w.prefix().front());
    case WordShape::periodic:
      throw domain_error("a periodic Z-word has no sign");
  }
  throw internal_error("unreachable");
}

int tail_vertex(const StringAlgebra& alg, const Word& w) {
  if (w.shape() == WordShape::trivial) return w.trivial_vertex();
  if (w.shape() == WordShape::finite) return alg.tail_of(w.prefix().back());
  throw domain_error("tail only defined for finite words");
}

int tail_sign(const StringAlgebra& alg, const Word& w) {
  if (w.shape() == WordShape::trivial) return w.trivial_sign();
  if (w.shape() == WordShape::finite) return -alg.sign_of(w.prefix().back().inverse());
  throw domain_error("tail only defined for finite words");
}

int vertex_at(const StringAlgebra& alg, const Word& w, std::size_t i) {
  if (i == 0) {
    if (w.shape() == WordShape::periodic) return alg.tail_of(w.period().back());
    return head_of(alg, w);
  }
  auto l = w.letter_at(i);
  if (!l) throw domain_error("word index out of range");
  return alg.tail_of(*l);
}

Word inverse(const StringAlgebra& alg, const Word& w) {
  switch (w.shape()) {
    case WordShape::trivial:
      return Word::trivial(alg, w.trivial_vertex(), -w.trivial_sign());
    case WordShape::finite:
      return Word::finite(alg, reverse_invert(w.prefix()));
    case WordShape::periodic:
      return Word::periodic(alg, reverse_invert(w.period()));
    case WordShape::ev_periodic:
      throw domain_error("inverse of an N-word is a (-N)-word and is not represented");
  }
  throw internal_error("unreachable");
}

Word shift(const StringAlgebra& alg, const Word& w, int n) {
  if (w.shape() != WordShape::periodic) return w;
  std::size_t m = w.period().size();
  std::size_t k = ((n % static_cast<int>(m)) + static_cast<int>(m)) % static_cast<int>(m);
  return Word::periodic(alg, rotate_left(w.period(), k));
}

std::variant<Word, ComposeFail> compose(const StringAlgebra& alg, const Word& c, const Word& d) {
  if (!c.is_finite_shape()) throw domain_error("compose: left factor must be finite or trivial");
  if (d.shape() == WordShape::periodic) throw domain_error("compose: right factor cannot be a Z-word");
  if (c.is_trivial()) {
    if (head_of(alg, d) != c.trivial_vertex()) return ComposeFail::head_tail_mismatch;
    if (sign_of(alg, d) != c.trivial_sign()) return ComposeFail::sign_clash;
    return d;
  }
  if (d.is_trivial()) {
    if (tail_vertex(alg, c) != d.trivial_vertex()) return ComposeFail::head_tail_mismatch;
    if (tail_sign(alg, c) != d.trivial_sign()) return ComposeFail::sign_clash;
    return c;
  }
  if (tail_vertex(alg, c) != head_of(alg, d)) return ComposeFail::head_tail_mismatch;
  if (alg.sign_of(c.prefix().back().inverse()) == sign_of(alg, d)) return ComposeFail::sign_clash;
  std::vector<Letter> joined = c.prefix();
  joined.insert(joined.end(), d.prefix().begin(), d.prefix().end());
  try {
    if (d.shape() == WordShape::finite) return Word::finite(alg, std::move(joined));
    return Word::ev_periodic(alg, std::move(joined), d.period());
  } catch (const domain_error&) {
    return ComposeFail::not_a_word;
  }
}

std::vector<Letter> extension_letters(const StringAlgebra& alg, const Word& w) {
  std::vector<Letter> out;
  if (w.is_trivial()) {
    out = alg.letters_with_head_sign(w.trivial_vertex(), w.trivial_sign());
  } else if (w.shape() == WordShape::finite) {
    int u = tail_vertex(alg, w);
    const auto& pre = w.prefix();
    for (int a = 0; a < alg.arrow_count(); ++a)
      for (bool inv : {false, true}) {
        Letter l{a, inv};
        if (alg.head_of(l) != u) continue;
        std::size_t take = std::min(pre.size(), alg.max_relation_length() - 1);
        std::vector<Letter> win(pre.end() - take, pre.end());
        win.push_back(l);
        if (alg.window_ok(win)) out.push_back(l);
      }
  } else {
    throw domain_error("extension letters only defined for finite words");
  }
  int direct = 0, invc = 0;
  for (const auto& l : out) (l.inv ? invc : direct)++;
  if (direct > 1 || invc > 1) throw internal_error("more than one extension of a kind; sign condition broken");
  return out;
}

Cmp compare(const StringAlgebra& alg, const Word& c, const Word& d) {
  if (head_of(alg, c) != head_of(alg, d) || sign_of(alg, c) != sign_of(alg, d))
    throw domain_error("compare: words lie in different W_{v,eps}");
  std::size_t bound = 0;
  bool both_infinite = c.is_infinite() && d.is_infinite();
  if (both_infinite)
    bound = c.prefix().size() + d.prefix().size() +
            std::max<std::size_t>(1, c.period().size()) * std::max<std::size_t>(1, d.period().size()) + 1;
  for (std::size_t i = 1;; ++i) {
    if (both_infinite && i > bound) return Cmp::EQ;
    auto a = c.letter_at(i);
    auto b = d.letter_at(i);
    if (!a && !b) return Cmp::EQ;
    if (!a) return b->inv ? Cmp::LT : Cmp::GT;  // (c): C x^-1 D' > C; (b): C y D < C
    if (!b) return a->inv ? Cmp::GT : Cmp::LT;
    if (*a == *b) continue;
    if (a->inv == b->inv) throw internal_error("diverging letters of equal kind in one W_{v,eps}");
    return a->inv ? Cmp::GT : Cmp::LT;  // (a): the direct-letter word is smaller
  }
}

std::vector<std::string> encode(const StringAlgebra& alg, const Word& w) {
  std::vector<std::string> out;
  switch (w.shape()) {
    case WordShape::trivial:
      out = {"1", alg.vertex_name(w.trivial_vertex()), w.trivial_sign() > 0 ? "+" : "-"};
      break;
    case WordShape::finite:
      for (const auto& l : w.prefix()) out.push_back(alg.letter_name(l));
      break;
    case WordShape::periodic:
      out.push_back("periodic:");
      for (const auto& l : w.period()) out.push_back(alg.letter_name(l));
      break;
    case WordShape::ev_periodic:
      out.push_back("eventually:");
      for (const auto& l : w.prefix()) out.push_back(alg.letter_name(l));
      out.push_back("|");
      for (const auto& l : w.period()) out.push_back(alg.letter_name(l));
      break;
  }
  return out;
}

std::string word_to_string(const StringAlgebra& alg, const Word& w) {
  if (w.is_trivial())
    return "1_" + alg.vertex_name(w.trivial_vertex()) + "_" + (w.trivial_sign() > 0 ? "+" : "-");
  std::string s;
  auto toks = encode(alg, w);
  for (std::size_t i = 0; i < toks.size(); ++i) s += (i ? " " : "") + toks[i];
  return s;
}

bool equivalent(const StringAlgebra& alg, const Word& c, const Word& d) {
  return canonical_rep(alg, c) == canonical_rep(alg, d);
}

Word canonical_rep(const StringAlgebra& alg, const Word& c) {
  switch (c.shape()) {
    case WordShape::trivial:
      return Word::trivial(alg, c.trivial_vertex(), +1);
    case WordShape::ev_periodic:
      return c;  // N-word classes are singletons (shift fixes them, inverse leaves the class)
    case WordShape::finite: {
      Word inv = inverse(alg, c);
      return encode(alg, c) <= encode(alg, inv) ? c : inv;
    }
    case WordShape::periodic: {
      Word best = c;
      auto best_enc = encode(alg, best);
      for (const auto& base : {c.period(), reverse_invert(c.period())})
        for (std::size_t r = 0; r < base.size(); ++r) {
          Word cand = Word::periodic(alg, rotate_left(base, r));
          auto enc = encode(alg, cand);
          if (enc < best_enc) {
            best = cand;
            best_enc = enc;
          }
        }
      return best;
    }
  }
  throw internal_error("unreachable");
}

SideWord side_word(const StringAlgebra& alg, const Word& c, std::size_t i, int sign) {
  Word fwd = Word::trivial(alg, 0, 1), bwd = fwd;
  if (c.is_finite_shape()) {
    std::size_t n = c.length();
    if (i > n) throw domain_error("side_word index out of range");
    const auto& pre = c.prefix();
    if (i < n)
      fwd = Word::finite(alg, std::vector<Letter>(pre.begin() + i, pre.end()));
    else
      fwd = c.is_trivial() ? c : Word::trivial(alg, tail_vertex(alg, c), tail_sign(alg, c));
    if (i > 0)
      bwd = Word::finite(alg, reverse_invert(std::vector<Letter>(pre.begin(), pre.begin() + i)));
    else
      bwd = c.is_trivial() ? Word::trivial(alg, c.trivial_vertex(), -c.trivial_sign())
                           : Word::trivial(alg, head_of(alg, c), -sign_of(alg, c));
  } else if (c.shape() == WordShape::periodic) {
    auto rot = rotate_left(c.period(), i % c.period().size());
    fwd = Word::ev_periodic(alg, {}, rot);
    bwd = Word::ev_periodic(alg, {}, reverse_invert(rot));
  } else {
    throw domain_error("side_word: unsupported shape");
  }
  int fs = sign_of(alg, fwd), bs = sign_of(alg, bwd);
  if (fs == bs) throw internal_error("side words C_{>i} and (C_{<=i})^-1 must have opposite signs");
  if (fs == sign) return SideWord{fwd, +1};
  return SideWord{bwd, -1};
}

std::vector<Word> enumerate_words(const StringAlgebra& alg, const std::map<int, std::size_t>& budget) {
  auto budget_of = [&](int v) -> std::size_t {
    auto it = budget.find(v);
    return it == budget.end() ? 0 : it->second;
  };
  std::vector<Word> out;
  std::set<std::vector<std::string>> seen;
  auto emit = [&](const Word& w) {
    auto enc = encode(alg, w);
    if (seen.insert(enc).second) out.push_back(w);
  };

  for (int v = 0; v < alg.vertex_count(); ++v)
    if (budget_of(v) >= 1) emit(Word::trivial(alg, v, +1));

  // DFS over words, counting indices per vertex; one unit of slack lets a
  // cycle close (its window has one fewer index than the finite path).
  struct Node {
    Word w;
    std::map<int, std::size_t> counts;
  };
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (budget_of(v) == 0) continue;
    for (int s : {+1, -1}) {
      std::vector<Node> stack;
      std::map<int, std::size_t> c0;
      c0[v] = 1;
      stack.push_back(Node{Word::trivial(alg, v, s), c0});
      while (!stack.empty()) {
        Node cur = std::move(stack.back());
        stack.pop_back();
        for (const Letter& l : extension_letters(alg, cur.w)) {
          std::vector<Letter> letters = cur.w.prefix();
          letters.push_back(l);
          auto counts = cur.counts;
          counts[alg.tail_of(l)]++;
          bool within_slack = true, within = true;
          for (const auto& [vv, n] : counts) {
            if (n > budget_of(vv) + 1) within_slack = false;
            if (n > budget_of(vv)) within = false;
          }
          if (!within_slack) continue;
          Word w = Word::finite(alg, letters);
          if (within && canonical_rep(alg, w) == w) emit(w);
          // periodic candidate when the path closes into a valid Z-period
          if (alg.tail_of(letters.back()) == vertex_at(alg, w, 0) && is_primitive(letters)) {
            auto window = counts;
            window[alg.tail_of(letters.back())]--;
            bool wfits = true;
            for (const auto& [vv, n] : window)
              if (n > budget_of(vv)) wfits = false;
            if (wfits && is_word_letters(alg, unroll({}, letters, alg.max_relation_length()))) {
              Word p = Word::periodic(alg, letters);
              Word canon = canonical_rep(alg, p);
              if (canon == p) emit(p);
            }
          }
          stack.push_back(Node{std::move(w), std::move(counts)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    if (a.shape() != b.shape()) return static_cast<int>(a.shape()) < static_cast<int>(b.shape());
    return encode(alg, a) < encode(alg, b);
  });
  return out;
}

namespace {

bool tail_all_inverse(const TailPattern& t) {
  if (t.kind == TailPattern::Kind::none) return true;
  for (const auto& l : t.letters)
    if (!l.inv) return false;
  return true;
}

bool tail_vertex_finite(const TailPattern& t) {
  switch (t.kind) {
    case TailPattern::Kind::none:
      return true;
    case TailPattern::Kind::periodic:
      return t.letters.empty();
    case TailPattern::Kind::ladder:
      return t.ladder_step != 0;
  }
  return false;
}

}  // namespace

WordPredicates word_predicates(const StringAlgebra& alg, const TwoSidedWord& w) {
  WordPredicates p;
  p.ev_inverse_c = tail_all_inverse(w.right_tail);
  p.ev_inverse_cinv = tail_all_inverse(w.left_tail);
  p.vertex_finite_c = tail_vertex_finite(w.right_tail);
  p.vertex_finite_cinv = tail_vertex_finite(w.left_tail);
  p.finitely_generated = p.ev_inverse_c && p.ev_inverse_cinv;
  p.finitely_controlled = (p.ev_inverse_c || p.vertex_finite_c) && (p.ev_inverse_cinv || p.vertex_finite_cinv);
  (void)alg;
  return p;
}

WordPredicates word_predicates(const StringAlgebra& alg, const Word& w) {
  TwoSidedWord t;
  switch (w.shape()) {
    case WordShape::trivial:
      break;
    case WordShape::finite:
      t.right_prefix = w.prefix();
      break;
    case WordShape::ev_periodic:
      t.right_prefix = w.prefix();
      t.right_tail = TailPattern{TailPattern::Kind::periodic, w.period(), 0};
      break;
    case WordShape::periodic:
      t.right_tail = TailPattern{TailPattern::Kind::periodic, w.period(), 0};
      t.left_tail = TailPattern{TailPattern::Kind::periodic, reverse_invert(w.period()), 0};
      break;
  }
  return word_predicates(alg, t);
}

}  // namespace stringalg
