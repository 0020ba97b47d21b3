#pragma once

#include <vector>

#include "stringalg/subspace.hpp"

namespace stringalg {

// Linear relation from k^src to k^tgt: a subspace of the direct sum, stored
// with source coordinates first.
class LinearRelation {
 public:
  LinearRelation() : src_(0), tgt_(0) {}
  LinearRelation(std::size_t src, std::size_t tgt, Subspace graph);

  static LinearRelation from_map(const Matrix& a);  // graph of x -> A x
  static LinearRelation identity(const FieldSpec& f, std::size_t n);
  static LinearRelation zero(const FieldSpec& f, std::size_t src, std::size_t tgt);
  static LinearRelation full(const FieldSpec& f, std::size_t src, std::size_t tgt);

  std::size_t src() const { return src_; }
  std::size_t tgt() const { return tgt_; }
  const Subspace& graph() const { return graph_; }
  const FieldSpec& field() const { return graph_.field(); }

  bool operator==(const LinearRelation& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && graph_ == o.graph_;
  }

 private:
  std::size_t src_, tgt_;
  Subspace graph_;
};

LinearRelation invert(const LinearRelation& c);
// compose(C: V->W, D: U->V) = CD : U->W
LinearRelation compose(const LinearRelation& c, const LinearRelation& d);
// C H for a subspace H of the source
Subspace apply(const LinearRelation& c, const Subspace& h);
Subspace apply_zero(const LinearRelation& c);  // C 0, read off the echelon graph
Subspace apply_full(const LinearRelation& c);  // C (k^src), projection of the graph

// Cheap one-letter composites with the graph of a matrix map.
LinearRelation precompose_map(const LinearRelation& c, const Matrix& a);         // C ∘ graph(A)
LinearRelation precompose_map_inverse(const LinearRelation& c, const Matrix& a); // C ∘ graph(A)^{-1}
LinearRelation postcompose_map(const Matrix& a, const LinearRelation& c);        // graph(A) ∘ C
LinearRelation postcompose_map_inverse(const Matrix& a, const LinearRelation& c);// graph(A)^{-1} ∘ C

// The definable subspaces of an endorelation and the automorphism they
// induce on sharp/flat.
struct RelationCore {
  Subspace c_prime;      // ∪ C^n 0
  Subspace c_dprime;     // ∩ C^n V
  Subspace cinv_prime;   // ∪ (C^-1)^n 0
  Subspace cinv_dprime;  // ∩ (C^-1)^n V
  Subspace sharp;        // C'' ∩ (C^-1)''
  Subspace flat;         // C''∩(C^-1)' + C'∩(C^-1)''
  std::vector<std::vector<Scalar>> lifts;  // v_1..v_k completing flat to sharp
  Matrix theta;                            // induced automorphism in the lift basis
  std::vector<Subspace> zero_chain;        // C^m 0 levels up to stabilization
  std::vector<Subspace> inv_zero_chain;    // (C^-1)^m 0 levels
};

RelationCore relation_core(const LinearRelation& c);

// Splitting lemma, constructive: C♯ = C♭ ⊕ U with the restriction of C to U
// the graph of an invertible matrix (in the returned basis of U).
struct Splitting {
  std::vector<std::vector<Scalar>> u_basis;
  Matrix auto_matrix;  // columns: Σ_i a_ij u_i ∈ C u_j
  RelationCore core;
};

Splitting split_relation(const LinearRelation& c);

// Chain of vectors y_0 = a, ..., y_m = b with (y_t, y_{t+1}) in the graph of
// rel for every step; throws internal_error if no chain exists.
std::vector<std::vector<Scalar>> solve_chain(const LinearRelation& rel, const std::vector<Scalar>& a,
                                             const std::vector<Scalar>& b, std::size_t m);

}  // namespace stringalg
