#include "stringalg/linrel.hpp"

namespace stringalg {

namespace {

Matrix blockdiag(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

}  // namespace

LinearRelation::LinearRelation(std::size_t src, std::size_t tgt, Subspace graph)
    : src_(src), tgt_(tgt), graph_(std::move(graph)) {
  if (graph_.ambient() != src_ + tgt_) throw domain_error("relation graph has wrong ambient dimension");
}

LinearRelation LinearRelation::from_map(const Matrix& a) {
  std::size_t src = a.cols(), tgt = a.rows();
  Matrix rows = Matrix::hstack(Matrix::identity(a.field(), src), a.transpose());
  return LinearRelation(src, tgt, Subspace::span(rows));
}

LinearRelation LinearRelation::identity(const FieldSpec& f, std::size_t n) {
  return from_map(Matrix::identity(f, n));
}

LinearRelation LinearRelation::zero(const FieldSpec& f, std::size_t src, std::size_t tgt) {
  return LinearRelation(src, tgt, Subspace(f, src + tgt));
}

LinearRelation LinearRelation::full(const FieldSpec& f, std::size_t src, std::size_t tgt) {
  return LinearRelation(src, tgt, Subspace::full(f, src + tgt));
}

LinearRelation invert(const LinearRelation& c) {
  const Matrix& b = c.graph().basis();
  Matrix sw(b.field(), b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < c.tgt(); ++j) sw.at(i, j) = b.at(i, c.src() + j);
    for (std::size_t j = 0; j < c.src(); ++j) sw.at(i, c.tgt() + j) = b.at(i, j);
  }
  return LinearRelation(c.tgt(), c.src(), Subspace::span(sw));
}

LinearRelation compose(const LinearRelation& c, const LinearRelation& d) {
  if (d.tgt() != c.src()) throw domain_error("relation composition dimension mismatch");
  const FieldSpec& f = c.field();
  std::size_t du = d.src(), dv = d.tgt(), dw = c.tgt();
  // T = {(u,v,w) : (u,v) in D, (v,w) in C}, then drop the middle block.
  Matrix s1 = Matrix::hstack(d.graph().basis(), Matrix(f, d.graph().dim(), dw));
  Matrix s1full(f, dw, du + dv + dw);
  for (std::size_t i = 0; i < dw; ++i) s1full.at(i, du + dv + i) = Scalar::one(f);
  Subspace S1 = Subspace::span(Matrix::vstack(s1, s1full));
  Matrix s2 = Matrix::hstack(Matrix(f, c.graph().dim(), du), c.graph().basis());
  Matrix s2full(f, du, du + dv + dw);
  for (std::size_t i = 0; i < du; ++i) s2full.at(i, i) = Scalar::one(f);
  Subspace S2 = Subspace::span(Matrix::vstack(s2, s2full));
  Subspace t = intersect(S1, S2);
  Matrix proj(f, t.dim(), du + dw);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < du; ++j) proj.at(i, j) = t.basis().at(i, j);
    for (std::size_t j = 0; j < dw; ++j) proj.at(i, du + j) = t.basis().at(i, du + dv + j);
  }
  return LinearRelation(du, dw, Subspace::span(proj));
}

Subspace apply(const LinearRelation& c, const Subspace& h) {
  if (h.ambient() != c.src()) throw domain_error("relation apply ambient mismatch");
  const FieldSpec& f = c.field();
  // (C.graph ∩ (H ⊕ full)) projected to the target block
  Matrix hw = Matrix::hstack(h.basis(), Matrix(f, h.dim(), c.tgt()));
  Matrix wfull(f, c.tgt(), c.src() + c.tgt());
  for (std::size_t i = 0; i < c.tgt(); ++i) wfull.at(i, c.src() + i) = Scalar::one(f);
  Subspace cap = intersect(c.graph(), Subspace::span(Matrix::vstack(hw, wfull)));
  Matrix proj(f, cap.dim(), c.tgt());
  for (std::size_t i = 0; i < cap.dim(); ++i)
    for (std::size_t j = 0; j < c.tgt(); ++j) proj.at(i, j) = cap.basis().at(i, c.src() + j);
  return Subspace::span(proj);
}

Subspace apply_zero(const LinearRelation& c) {
  // rows of the echelon basis whose pivot lies in the target block have a
  // zero source part, and they span graph ∩ (0 ⊕ W)
  const Matrix& b = c.graph().basis();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    bool zero_src = true;
    for (std::size_t j = 0; j < c.src() && zero_src; ++j)
      if (!b.at(i, j).is_zero()) zero_src = false;
    if (zero_src) {
      auto r = b.row(i);
      rows.emplace_back(r.begin() + c.src(), r.end());
    }
  }
  return Subspace::span(Matrix::from_rows(c.field(), rows, c.tgt()));
}

Subspace apply_full(const LinearRelation& c) {
  return Subspace::span(c.graph().basis().cols_slice(c.src(), c.src() + c.tgt()));
}

LinearRelation precompose_map(const LinearRelation& c, const Matrix& a) {
  if (a.rows() != c.src()) throw domain_error("precompose dimension mismatch");
  Matrix m = blockdiag(a, Matrix::identity(c.field(), c.tgt()));
  return LinearRelation(a.cols(), c.tgt(), preimage(m, c.graph()));
}

LinearRelation precompose_map_inverse(const LinearRelation& c, const Matrix& a) {
  if (a.cols() != c.src()) throw domain_error("precompose-inverse dimension mismatch");
  Matrix m = blockdiag(a, Matrix::identity(c.field(), c.tgt()));
  return LinearRelation(a.rows(), c.tgt(), image(m, c.graph()));
}

LinearRelation postcompose_map(const Matrix& a, const LinearRelation& c) {
  if (a.cols() != c.tgt()) throw domain_error("postcompose dimension mismatch");
  Matrix m = blockdiag(Matrix::identity(c.field(), c.src()), a);
  return LinearRelation(c.src(), a.rows(), image(m, c.graph()));
}

LinearRelation postcompose_map_inverse(const Matrix& a, const LinearRelation& c) {
  if (a.rows() != c.tgt()) throw domain_error("postcompose-inverse dimension mismatch");
  Matrix m = blockdiag(Matrix::identity(c.field(), c.src()), a);
  return LinearRelation(c.src(), a.cols(), preimage(m, c.graph()));
}

namespace {

// Ascending chain H, CH, C^2 H, ... up to (and including) its first repeat.
std::vector<Subspace> chain_levels(const LinearRelation& c, Subspace start) {
  std::vector<Subspace> levels{std::move(start)};
  for (;;) {
    Subspace next = apply(c, levels.back());
    if (next == levels.back()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

RelationCore relation_core(const LinearRelation& c) {
  if (c.src() != c.tgt()) throw domain_error("relation core requires an endorelation");
  const FieldSpec& f = c.field();
  std::size_t d = c.src();
  LinearRelation cinv = invert(c);

  RelationCore core;
  core.zero_chain = chain_levels(c, Subspace(f, d));
  core.inv_zero_chain = chain_levels(cinv, Subspace(f, d));
  core.c_prime = core.zero_chain.back();
  core.cinv_prime = core.inv_zero_chain.back();
  core.c_dprime = chain_levels(c, Subspace::full(f, d)).back();
  core.cinv_dprime = chain_levels(cinv, Subspace::full(f, d)).back();
  core.sharp = intersect(core.c_dprime, core.cinv_dprime);
  core.flat = sum(intersect(core.c_dprime, core.cinv_prime), intersect(core.c_prime, core.cinv_dprime));
  core.lifts = quotient_basis(core.flat, core.sharp);

  std::size_t k = core.lifts.size();
  core.theta = Matrix(f, k, k);
  const Matrix& g = c.graph().basis();
  for (std::size_t j = 0; j < k; ++j) {
    // w0 with (v_j, w0) in C
    Matrix srcpart = g.cols_slice(0, d).transpose();
    auto alpha = solve(srcpart, core.lifts[j]);
    if (!alpha) throw internal_error("core: lift has no image under the relation");
    auto z = g.transpose().apply(*alpha);
    std::vector<Scalar> w0(z.begin() + d, z.end());
    // w in C♯ with w - w0 in C0 + C♭  (then w ∈ C♯ ∩ (C♭ + Cv_j))
    Subspace c0 = core.zero_chain.size() > 1 ? core.zero_chain[1] : Subspace(f, d);
    Matrix sys(f, d, c0.dim() + core.flat.dim() + core.sharp.dim());
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t t = 0; t < c0.dim(); ++t) sys.at(r, t) = c0.basis().at(t, r);
      for (std::size_t t = 0; t < core.flat.dim(); ++t) sys.at(r, c0.dim() + t) = core.flat.basis().at(t, r);
      for (std::size_t t = 0; t < core.sharp.dim(); ++t)
        sys.at(r, c0.dim() + core.flat.dim() + t) = -core.sharp.basis().at(t, r);
    }
    auto sol = solve(sys, sub(zero_vector(f, d), w0));
    if (!sol) throw internal_error("core: no theta witness; induced automorphism lemma violated");
    std::vector<Scalar> w = zero_vector(f, d);
    for (std::size_t t = 0; t < core.sharp.dim(); ++t)
      w = add(w, scale((*sol)[c0.dim() + core.flat.dim() + t], core.sharp.basis().row(t)));
    // express w = Σ t_i v_i mod flat
    Matrix qsys(f, d, k + core.flat.dim());
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t t = 0; t < k; ++t) qsys.at(r, t) = core.lifts[t][r];
      for (std::size_t t = 0; t < core.flat.dim(); ++t) qsys.at(r, k + t) = core.flat.basis().at(t, r);
    }
    auto coords = solve(qsys, w);
    if (!coords) throw internal_error("core: theta witness not in sharp");
    for (std::size_t i = 0; i < k; ++i) core.theta.at(i, j) = (*coords)[i];
  }
  if (!is_invertible(core.theta)) throw internal_error("core: induced map is not an automorphism");
  return core;
}

std::vector<std::vector<Scalar>> solve_chain(const LinearRelation& rel, const std::vector<Scalar>& a,
                                             const std::vector<Scalar>& b, std::size_t m) {
  const FieldSpec& f = rel.field();
  std::size_t d = rel.src();
  if (rel.tgt() != d) throw domain_error("solve_chain requires an endorelation");
  std::vector<std::vector<Scalar>> chain(m + 1, zero_vector(f, d));
  chain[0] = a;
  chain[m] = b;
  if (m == 0) {
    if (a != b) throw internal_error("solve_chain: contradictory endpoints");
    return chain;
  }
  Matrix n = kernel_basis(rel.graph().basis());  // z in graph  <=>  N z = 0
  std::size_t nr = n.rows();
  std::size_t unknowns = (m - 1) * d;
  Matrix sys(f, m * nr, unknowns);
  std::vector<Scalar> rhs = zero_vector(f, m * nr);
  for (std::size_t t = 0; t < m; ++t) {
    // step t: N [y_t; y_{t+1}] = 0, with y_0, y_m fixed
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t j = 0; j < d; ++j) {
        Scalar c1 = n.at(r, j), c2 = n.at(r, d + j);
        if (t == 0)
          rhs[t * nr + r] = rhs[t * nr + r] - c1 * a[j];
        else if (!c1.is_zero())
          sys.at(t * nr + r, (t - 1) * d + j) = sys.at(t * nr + r, (t - 1) * d + j) + c1;
        if (t == m - 1)
          rhs[t * nr + r] = rhs[t * nr + r] - c2 * b[j];
        else if (!c2.is_zero())
          sys.at(t * nr + r, t * d + j) = sys.at(t * nr + r, t * d + j) + c2;
      }
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw internal_error("solve_chain: no witness chain exists");
  for (std::size_t t = 1; t < m; ++t)
    for (std::size_t j = 0; j < d; ++j) chain[t][j] = (*sol)[(t - 1) * d + j];
  return chain;
}

Splitting split_relation(const LinearRelation& c) {
  RelationCore core = relation_core(c);
  const FieldSpec& f = c.field();
  std::size_t d = c.src(), k = core.lifts.size();
  Splitting out{{}, core.theta, core};
  if (k == 0) return out;

  const Matrix& A = core.theta;
  Matrix Ainv = inverse(A);
  LinearRelation cinv = invert(c);

  // b_j = c_j - Σ_i a_ij v_i ∈ C♭ with c_j ∈ C v_j, then b_j = b⁺_j + b⁻_j
  Subspace s1 = intersect(core.c_dprime, core.cinv_prime);
  Subspace s2 = intersect(core.c_prime, core.cinv_dprime);
  std::vector<std::vector<Scalar>> bplus(k), bminus(k);
  for (std::size_t j = 0; j < k; ++j) {
    // redo the theta witness bookkeeping, keeping the C v_j component
    const Matrix& g = c.graph().basis();
    Matrix srcpart = g.cols_slice(0, d).transpose();
    auto alpha = solve(srcpart, core.lifts[j]);
    if (!alpha) throw internal_error("split: lift has no image");
    auto z = g.transpose().apply(*alpha);
    std::vector<Scalar> w0(z.begin() + d, z.end());
    Subspace c0 = core.zero_chain.size() > 1 ? core.zero_chain[1] : Subspace(f, d);
    Matrix sys(f, d, c0.dim() + core.flat.dim() + core.sharp.dim());
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t t = 0; t < c0.dim(); ++t) sys.at(r, t) = c0.basis().at(t, r);
      for (std::size_t t = 0; t < core.flat.dim(); ++t) sys.at(r, c0.dim() + t) = core.flat.basis().at(t, r);
      for (std::size_t t = 0; t < core.sharp.dim(); ++t)
        sys.at(r, c0.dim() + core.flat.dim() + t) = -core.sharp.basis().at(t, r);
    }
    auto sol = solve(sys, sub(zero_vector(f, d), w0));
    if (!sol) throw internal_error("split: no theta witness");
    // c_j = w0 + (C0 component) lies in C v_j
    std::vector<Scalar> cj = w0;
    for (std::size_t t = 0; t < c0.dim(); ++t) cj = add(cj, scale((*sol)[t], c0.basis().row(t)));
    std::vector<Scalar> bj = cj;
    for (std::size_t i = 0; i < k; ++i) bj = sub(bj, scale(A.at(i, j), core.lifts[i]));
    if (!core.flat.contains(bj)) throw internal_error("split: correction vector not in flat");
    // split bj across the two flat components
    Matrix dec(f, d, s1.dim() + s2.dim());
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t t = 0; t < s1.dim(); ++t) dec.at(r, t) = s1.basis().at(t, r);
      for (std::size_t t = 0; t < s2.dim(); ++t) dec.at(r, s1.dim() + t) = s2.basis().at(t, r);
    }
    auto parts = solve(dec, bj);
    if (!parts) throw internal_error("split: flat decomposition failed");
    bplus[j] = zero_vector(f, d);
    bminus[j] = zero_vector(f, d);
    for (std::size_t t = 0; t < s1.dim(); ++t) bplus[j] = add(bplus[j], scale((*parts)[t], s1.basis().row(t)));
    for (std::size_t t = 0; t < s2.dim(); ++t) bminus[j] = add(bminus[j], scale((*parts)[s1.dim() + t], s2.basis().row(t)));
  }

  // chains: b⁺ ends backward at zero, b⁻ ends forward at zero
  std::size_t mplus = 0, mminus = 0;
  std::vector<std::size_t> mp(k, 0), mm(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    while (mp[j] < core.inv_zero_chain.size() && !core.inv_zero_chain[mp[j]].contains(bplus[j])) ++mp[j];
    while (mm[j] < core.zero_chain.size() && !core.zero_chain[mm[j]].contains(bminus[j])) ++mm[j];
    if (mp[j] >= core.inv_zero_chain.size()) throw internal_error("split: b+ not in (C^-1)'");
    if (mm[j] >= core.zero_chain.size()) throw internal_error("split: b- not in C'");
    mplus = std::max(mplus, mp[j]);
    mminus = std::max(mminus, mm[j]);
  }
  // bp_chain[j][t] = b⁺_{j,-t}; bm_chain[j][t] = b⁻_{j,t}
  std::vector<std::vector<std::vector<Scalar>>> bp_chain(k), bm_chain(k);
  for (std::size_t j = 0; j < k; ++j) {
    bp_chain[j] = solve_chain(c, bplus[j], zero_vector(f, d), std::max<std::size_t>(mp[j], 1));
    bm_chain[j] = solve_chain(cinv, bminus[j], zero_vector(f, d), std::max<std::size_t>(mm[j], 1));
    bp_chain[j].resize(mplus + 1, zero_vector(f, d));
    bm_chain[j].resize(mminus + 1, zero_vector(f, d));
  }

  // u_j = v_j + Σ_{n<=0} (A^{-1})^{1-n}_{ij} b⁺_{i,n} - Σ_{n>0} A^{n-1}_{ij} b⁻_{i,n}
  out.u_basis.assign(k, zero_vector(f, d));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Scalar> u = core.lifts[j];
    Matrix apow = Ainv;  // (A^{-1})^{1-n} at n=0
    for (std::size_t t = 0; t <= mplus; ++t) {
      for (std::size_t i = 0; i < k; ++i)
        if (!apow.at(i, j).is_zero()) u = add(u, scale(apow.at(i, j), bp_chain[i][t]));
      apow = apow * Ainv;
    }
    Matrix apow2 = Matrix::identity(f, k);  // A^{n-1} at n=1
    for (std::size_t t = 1; t <= mminus; ++t) {
      for (std::size_t i = 0; i < k; ++i)
        if (!apow2.at(i, j).is_zero()) u = sub(u, scale(apow2.at(i, j), bm_chain[i][t]));
      apow2 = apow2 * A;
    }
    out.u_basis[j] = std::move(u);
  }
  return out;
}

}  // namespace stringalg
