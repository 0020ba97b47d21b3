#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringalg/errors.hpp"

namespace stringalg {

struct Arrow {
  std::string name;
  std::string head;
  std::string tail;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& v) const;
  int arrow_index(const std::string& name) const;
};

// Zero relation: a path x1...xm (m >= 2), composed right to left, so
// tail(x_i) = head(x_{i+1}).
using ZeroRelation = std::vector<std::string>;

// A letter is an arrow or its formal inverse, referenced by arrow index.
struct Letter {
  int arrow = -1;
  bool inv = false;

  Letter inverse() const { return Letter{arrow, !inv}; }
  bool operator==(const Letter& o) const { return arrow == o.arrow && inv == o.inv; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool operator<(const Letter& o) const { return arrow != o.arrow ? arrow < o.arrow : inv < o.inv; }
};

// Validated string algebra kQ/(rho) together with a sign for every letter.
class StringAlgebra {
 public:
  StringAlgebra(Quiver q, std::vector<ZeroRelation> rho);
  StringAlgebra(Quiver q, std::vector<ZeroRelation> rho, std::map<std::string, int> explicit_signs);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }
  std::size_t max_relation_length() const { return max_rel_len_; }

  int vertex_count() const { return static_cast<int>(quiver_.vertices.size()); }
  int arrow_count() const { return static_cast<int>(quiver_.arrows.size()); }
  const std::string& vertex_name(int v) const { return quiver_.vertices[v]; }
  const Arrow& arrow(int a) const { return quiver_.arrows[a]; }

  int head_of(const Letter& l) const { return l.inv ? tail_[l.arrow] : head_[l.arrow]; }
  int tail_of(const Letter& l) const { return l.inv ? head_[l.arrow] : tail_[l.arrow]; }
  int sign_of(const Letter& l) const { return signs_[l.arrow * 2 + (l.inv ? 1 : 0)]; }

  std::string letter_name(const Letter& l) const;
  Letter parse_letter(const std::string& tok) const;

  // All letters with the given head vertex and sign (at most two).
  std::vector<Letter> letters_with_head_sign(int v, int sign) const;

  // True when the letter pair (a, b) may occur consecutively in a word:
  // composable, not a backtrack. Relation windows are checked separately.
  bool consecutive_ok(const Letter& a, const Letter& b) const;

  // Checks conditions (a)-(c) for the letter window; used with sequences of
  // length >= max relation length to validate words incrementally.
  bool window_ok(const std::vector<Letter>& letters) const;

  // Returns a human-readable violation, or nullopt if the quiver and
  // relations satisfy the string-algebra axioms.
  static std::optional<std::string> violation(const Quiver& q, const std::vector<ZeroRelation>& rho);

  std::map<std::string, int> sign_map() const;

 private:
  void init(const std::map<std::string, int>* explicit_signs);
  bool sign_condition_holds(const std::vector<int>& signs, std::string* why) const;

  Quiver quiver_;
  std::vector<std::vector<int>> relations_;  // arrow indices, leftmost applied last
  std::vector<int> head_, tail_;             // per arrow
  std::vector<int> signs_;                   // per letter: [arrow*2 + inv] -> ±1
  std::size_t max_rel_len_ = 2;
};

// Primitive cycle: a nontrivial direct word P, all powers of which are words,
// and which is not itself a power. Stored in canonical rotation.
struct PrimitiveCycle {
  std::vector<int> arrows;  // leftmost applied last, tail(arrows[i]) = head(arrows[i+1])
  int head_vertex;
};

std::vector<PrimitiveCycle> primitive_cycles(const StringAlgebra& alg);

// Rotations of primitive cycles whose head is v (at most two).
std::vector<PrimitiveCycle> primitive_cycles_at(const StringAlgebra& alg, int v);

}  // namespace stringalg
