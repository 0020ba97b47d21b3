#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stringalg/algebra.hpp"

namespace stringalg {

enum class WordShape { trivial, finite, periodic, ev_periodic };

// A word over a string algebra. Finite words carry their letters; a periodic
// word stores one primitive period E and denotes the Z-word ∞E∞; an
// eventually periodic word stores (prefix A, period B) and denotes the N-word
// A·B^∞. Construction validates conditions (a)-(c) on a bounded unrolling.
class Word {
 public:
  static Word trivial(const StringAlgebra& alg, int vertex, int sign);
  static Word finite(const StringAlgebra& alg, std::vector<Letter> letters);
  static Word periodic(const StringAlgebra& alg, std::vector<Letter> period);
  static Word ev_periodic(const StringAlgebra& alg, std::vector<Letter> prefix, std::vector<Letter> period);

  WordShape shape() const { return shape_; }
  bool is_trivial() const { return shape_ == WordShape::trivial; }
  bool is_finite_shape() const { return shape_ == WordShape::trivial || shape_ == WordShape::finite; }
  bool is_infinite() const { return shape_ == WordShape::periodic || shape_ == WordShape::ev_periodic; }

  // trivial-word data
  int trivial_vertex() const { return vertex_; }
  int trivial_sign() const { return sign_; }

  const std::vector<Letter>& prefix() const { return pre_; }  // finite letters or ev-periodic prefix
  const std::vector<Letter>& period() const { return per_; }

  std::size_t length() const { return pre_.size(); }  // finite words only

  // 1-based letter stream; nullopt past the end of a finite word.
  std::optional<Letter> letter_at(std::size_t i) const;

  bool operator==(const Word& o) const;
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  Word() = default;
  WordShape shape_ = WordShape::trivial;
  int vertex_ = -1;
  int sign_ = +1;
  std::vector<Letter> pre_;
  std::vector<Letter> per_;
};

// head vertex / sign of a finite, trivial or eventually periodic word
int head_of(const StringAlgebra& alg, const Word& w);
int sign_of(const StringAlgebra& alg, const Word& w);
// tail data of a finite word: the vertex v_n and the sign of the trivial word
// composable on the right
int tail_vertex(const StringAlgebra& alg, const Word& w);
int tail_sign(const StringAlgebra& alg, const Word& w);

// vertex v_i; for finite words 0 <= i <= length, for periodic words any i
int vertex_at(const StringAlgebra& alg, const Word& w, std::size_t i);

bool is_word_letters(const StringAlgebra& alg, const std::vector<Letter>& letters);

Word inverse(const StringAlgebra& alg, const Word& w);
Word shift(const StringAlgebra& alg, const Word& w, int n);

enum class ComposeFail { head_tail_mismatch, sign_clash, not_a_word };
std::variant<Word, ComposeFail> compose(const StringAlgebra& alg, const Word& c, const Word& d);

// Legal one-letter extensions of a finite or trivial word (at most one direct
// and one inverse letter).
std::vector<Letter> extension_letters(const StringAlgebra& alg, const Word& w);

enum class Cmp { LT, EQ, GT };
// The total order on W_{v,eps}; both words must have the same head and sign.
Cmp compare(const StringAlgebra& alg, const Word& c, const Word& d);

bool equivalent(const StringAlgebra& alg, const Word& c, const Word& d);
Word canonical_rep(const StringAlgebra& alg, const Word& c);

// C(i, eps): of the two words C_{>i} and (C_{<=i})^{-1} departing index i,
// the one with sign eps. d_i = +1 when it is C_{>i}.
struct SideWord {
  Word word;
  int direction;  // +1 for C_{>i}, -1 for (C_{<=i})^{-1}
};
SideWord side_word(const StringAlgebra& alg, const Word& c, std::size_t i, int sign);

// All finite words and primitive periodic words, one representative per
// equivalence class, whose per-vertex index counts fit the budget (periodic
// words are counted over one period window).
std::vector<Word> enumerate_words(const StringAlgebra& alg, const std::map<int, std::size_t>& budget);

// ---- Theorem 1.4(iii) predicates -----------------------------------------

// Tail behaviour of one half of a word beyond its concrete prefix.
struct TailPattern {
  enum class Kind { none, periodic, ladder };
  Kind kind = Kind::none;
  std::vector<Letter> letters;  // one period, concrete arrows
  int ladder_step = 0;          // vertex-degree drift per period (ladder)
};

// Symbolic two-sided word: right half C_{>0} and left half (C_{<=0})^{-1},
// each an N-word descriptor. Used only for the word predicates.
struct TwoSidedWord {
  std::vector<Letter> right_prefix;
  TailPattern right_tail;
  std::vector<Letter> left_prefix;
  TailPattern left_tail;
};

struct WordPredicates {
  bool ev_inverse_c = false;
  bool ev_inverse_cinv = false;
  bool vertex_finite_c = false;
  bool vertex_finite_cinv = false;
  bool finitely_generated = false;
  bool finitely_controlled = false;
};

WordPredicates word_predicates(const StringAlgebra& alg, const Word& w);
WordPredicates word_predicates(const StringAlgebra& alg, const TwoSidedWord& w);

// Encoded letter-name sequence, used for canonical choices and stable output.
std::vector<std::string> encode(const StringAlgebra& alg, const Word& w);
std::string word_to_string(const StringAlgebra& alg, const Word& w);

}  // namespace stringalg
