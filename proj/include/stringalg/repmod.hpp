#pragma once

#include <memory>
#include <vector>

#include "stringalg/linrel.hpp"
#include "stringalg/poly.hpp"
#include "stringalg/words.hpp"

namespace stringalg {

// Finite-dimensional representation of a string algebra: one vector space per
// vertex and one matrix per arrow (of shape dims(head) x dims(tail)),
// satisfying all zero relations.
class Representation {
 public:
  Representation(std::shared_ptr<const StringAlgebra> alg, FieldSpec field, std::vector<std::size_t> dims,
                 std::vector<Matrix> action);

  const StringAlgebra& alg() const { return *alg_; }
  std::shared_ptr<const StringAlgebra> alg_ptr() const { return alg_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim(int v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  const Matrix& action(int arrow) const { return action_[arrow]; }
  const Matrix& action(const std::string& name) const;

 private:
  std::shared_ptr<const StringAlgebra> alg_;
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> action_;
};

// String module M(C) for a finite or trivial word; slot[i] is the position of
// basis vector b_i inside its vertex block.
struct StringModule {
  Representation rep;
  std::vector<std::size_t> slot;
};
StringModule string_module(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f, const Word& c);

// Band module M(∞E∞, V) with V = k[T]/(g^r); block i (a copy of V) sits at
// vertex v_i with local offset block_offset[i].
struct BandCoefficient {
  Poly g;  // monic irreducible, g(0) != 0, g != T
  int power = 1;
};
struct BandModule {
  Representation rep;
  std::vector<std::size_t> block_offset;
  Matrix t_matrix;  // companion of g^r
};
BandModule band_module(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f, const Word& period_word,
                       const BandCoefficient& coeff);

// Band module with an arbitrary invertible T-action (used by the certifier).
BandModule band_module_with_t(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f,
                              const Word& period_word, const Matrix& t);

// The linear relation from e_{tail(C)}M to e_{head(C)}M defined by a finite
// or trivial word.
LinearRelation word_relation(const Representation& m, const Word& c);

// Nilpotent and primitive torsion data of a representation.
struct VertexTorsion {
  Subspace tau0;  // nilpotent torsion of e_v M
  Subspace tau1;  // primitive torsion of e_v M
  std::vector<PrimitiveCycle> cycles;
  std::vector<Subspace> tau_p0;  // per cycle
  std::vector<Subspace> tau_p1;
};
std::vector<VertexTorsion> torsion(const Representation& m);

Representation direct_sum(const std::vector<Representation>& parts);

struct Scrambled {
  Representation rep;
  std::vector<Matrix> change;  // per-vertex basis change; rep = S^{-1} . M . S blockwise
};
Scrambled scramble(const Representation& m, std::uint64_t seed);

// Window of the doubly infinite graded quiver: vertices a..b, arrows
// x_i, y_i : (i-1) -> i, relations x_i y_{i-1}, y_i x_{i-1}.
struct GradedWindow {
  std::shared_ptr<const StringAlgebra> alg;
  Representation rep;
  std::vector<std::string> warnings;
};
GradedWindow graded_ingest(const FieldSpec& f, int lo, int hi, const std::vector<std::size_t>& dims,
                           const std::vector<Matrix>& xmaps, const std::vector<Matrix>& ymaps);

std::shared_ptr<const StringAlgebra> graded_window_algebra(int lo, int hi);

}  // namespace stringalg
