#pragma once

#include <optional>

#include "stringalg/repmod.hpp"

namespace stringalg {

// The filtration subspaces C^-(M) ⊆ C^+(M) ⊆ e_v M attached to a word in
// W_{v,eps}.
struct FiltrationPair {
  Subspace plus;
  Subspace minus;
};

FiltrationPair plus_minus(const Representation& m, const Word& c);

// Refined functor value F_{B,D}(M) = (B^+ ∩ D^+)/((B^+ ∩ D^-) + (B^- ∩ D^+)).
// When B^{-1}D is a periodic Z-word the subspaces come with the induced
// T-action (inverse of the period relation's automorphism, matching the wrap
// twist convention of band_module).
struct RefinedValue {
  Subspace f_plus;
  Subspace f_minus;
  std::size_t dim = 0;
  std::optional<Word> period;    // aligned period E with B^{-1}D = ∞E∞
  std::optional<Matrix> t_action;
};

RefinedValue refined(const Representation& m, const Word& b, const Word& d);

// Whether B^{-1}D is a word, and its period when it is a periodic Z-word.
struct JoinInfo {
  bool is_word = false;
  std::optional<Word> period;
};
JoinInfo join_word(const StringAlgebra& alg, const Word& b, const Word& d);

// Lemma 5.2's iterative construction: a word C in W_{v,eps} whose filtration
// separates the coset m + w0 (meets C^+ but not C^-). Runs that do not
// terminate are eventually periodic and returned symbolically; every result
// is verified against plus_minus before returning.
Word covering_search(const Representation& m, int vertex, const std::vector<Scalar>& mvec, int sign,
                     const Subspace& w0);
Word covering_search(const Representation& m, int vertex, const std::vector<Scalar>& mvec, int sign);

struct RefinedCover {
  Word b;
  Word d;
};
RefinedCover refined_covering(const Representation& m, int vertex, const std::vector<Scalar>& mvec);

}  // namespace stringalg
