#include "stringalg/repmod.hpp"

#include <random>

namespace stringalg {

namespace {

void check_relations(const StringAlgebra& alg, const std::vector<Matrix>& action) {
  for (const auto& rel : alg.relations()) {
    Matrix prod = action[rel.front()];
    for (std::size_t i = 1; i < rel.size(); ++i) prod = prod * action[rel[i]];
    if (!prod.is_zero()) {
      std::string path;
      for (int a : rel) path += (path.empty() ? "" : " ") + alg.arrow(a).name;
      throw domain_error("zero relation '" + path + "' is not satisfied by the action matrices");
    }
  }
}

}  // namespace

Representation::Representation(std::shared_ptr<const StringAlgebra> alg, FieldSpec field,
                               std::vector<std::size_t> dims, std::vector<Matrix> action)
    : alg_(std::move(alg)), field_(field), dims_(std::move(dims)), action_(std::move(action)) {
  if (static_cast<int>(dims_.size()) != alg_->vertex_count())
    throw domain_error("representation needs one dimension per vertex");
  if (static_cast<int>(action_.size()) != alg_->arrow_count())
    throw domain_error("representation needs one matrix per arrow");
  for (int a = 0; a < alg_->arrow_count(); ++a) {
    const Matrix& m = action_[a];
    Letter l{a, false};
    if (m.field() != field_) throw domain_error("action matrix field mismatch for '" + alg_->arrow(a).name + "'");
    if (m.rows() != dims_[alg_->head_of(l)] || m.cols() != dims_[alg_->tail_of(l)])
      throw domain_error("action matrix shape mismatch for '" + alg_->arrow(a).name + "'");
  }
  check_relations(*alg_, action_);
}

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

const Matrix& Representation::action(const std::string& name) const {
  int a = alg_->quiver().arrow_index(name);
  if (a < 0) throw parse_error("unknown arrow '" + name + "'");
  return action_[a];
}

StringModule string_module(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f, const Word& c) {
  if (!c.is_finite_shape()) throw domain_error("string_module needs a finite or trivial word");
  std::size_t n = c.length();
  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  std::vector<std::size_t> slot(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    int v = vertex_at(*alg, c, i);
    slot[i] = dims[v]++;
  }
  std::vector<Matrix> action;
  for (int a = 0; a < alg->arrow_count(); ++a)
    action.emplace_back(f, dims[alg->head_of(Letter{a, false})], dims[alg->tail_of(Letter{a, false})]);
  for (std::size_t i = 1; i <= n; ++i) {
    Letter l = *c.letter_at(i);
    if (!l.inv)
      action[l.arrow].at(slot[i - 1], slot[i]) = Scalar::one(f);  // x b_i = b_{i-1}
    else
      action[l.arrow].at(slot[i], slot[i - 1]) = Scalar::one(f);  // x b_{i-1} = b_i
  }
  return StringModule{Representation(std::move(alg), f, std::move(dims), std::move(action)), std::move(slot)};
}

BandModule band_module_with_t(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f,
                              const Word& period_word, const Matrix& t) {
  if (period_word.shape() != WordShape::periodic) throw domain_error("band_module needs a periodic word");
  if (!is_invertible(t)) throw domain_error("band T-action must be invertible");
  const auto& per = period_word.period();
  std::size_t n = per.size(), d = t.rows();
  Matrix tinv = inverse(t);

  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  std::vector<std::size_t> block_offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = vertex_at(*alg, period_word, i);
    block_offset[i] = dims[v];
    dims[v] += d;
  }
  std::vector<Matrix> action;
  for (int a = 0; a < alg->arrow_count(); ++a)
    action.emplace_back(f, dims[alg->head_of(Letter{a, false})], dims[alg->tail_of(Letter{a, false})]);

  auto put_block = [&](int arrow, std::size_t row0, std::size_t col0, const Matrix& blk) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) action[arrow].at(row0 + i, col0 + j) = blk.at(i, j);
  };
  Matrix id = Matrix::identity(f, d);
  for (std::size_t i = 1; i <= n; ++i) {
    Letter l = per[i - 1];
    bool wrap = (i == n);
    std::size_t lo = wrap ? 0 : i;  // index of b_i block (mod n)
    std::size_t hi = i - 1;         // index of b_{i-1} block
    if (!l.inv) {
      // x b_i = b_{i-1}; through the wrap b_n = T b_0, so x acts by T^{-1} into block n-1
      put_block(l.arrow, block_offset[hi], block_offset[lo], wrap ? tinv : id);
    } else {
      // x b_{i-1} = b_i; through the wrap the landing block is b_0 twisted by T
      put_block(l.arrow, block_offset[lo], block_offset[hi], wrap ? t : id);
    }
  }
  return BandModule{Representation(std::move(alg), f, std::move(dims), std::move(action)),
                    std::move(block_offset), t};
}

BandModule band_module(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f, const Word& period_word,
                       const BandCoefficient& coeff) {
  if (coeff.power < 1) throw domain_error("band coefficient power must be >= 1");
  if (coeff.g.degree() < 1 || !coeff.g.lead().is_one()) throw domain_error("band coefficient g must be monic, degree >= 1");
  if (coeff.g.coeff(0).is_zero()) throw domain_error("band coefficient needs g(0) != 0");
  auto factors = factor_monic(coeff.g, std::max(16, coeff.g.degree()));
  if (factors.size() != 1 || factors.front().second != 1)
    throw domain_error("band coefficient g must be irreducible");
  Poly gr = Poly::constant(Scalar::one(f));
  for (int i = 0; i < coeff.power; ++i) gr = gr * coeff.g;
  return band_module_with_t(std::move(alg), f, period_word, companion(gr));
}

LinearRelation word_relation(const Representation& m, const Word& c) {
  if (!c.is_finite_shape()) throw domain_error("word_relation needs a finite or trivial word");
  const StringAlgebra& alg = m.alg();
  LinearRelation r = LinearRelation::identity(m.field(), m.dim(tail_vertex(alg, c)));
  for (std::size_t i = c.length(); i >= 1; --i) {
    Letter l = *c.letter_at(i);
    const Matrix& a = m.action(l.arrow);
    r = l.inv ? postcompose_map_inverse(a, r) : postcompose_map(a, r);
  }
  return r;
}

std::vector<VertexTorsion> torsion(const Representation& m) {
  const StringAlgebra& alg = m.alg();
  const FieldSpec& f = m.field();
  std::vector<VertexTorsion> out;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    VertexTorsion t;
    t.cycles = primitive_cycles_at(alg, v);
    std::size_t d = m.dim(v);
    for (const auto& pc : t.cycles) {
      Matrix ap = m.action(pc.arrows.front());
      for (std::size_t i = 1; i < pc.arrows.size(); ++i) ap = ap * m.action(pc.arrows[i]);
      t.tau_p0.push_back(kernel(ap.pow(d)));
      Subspace im = Subspace::full(f, d);
      for (;;) {
        Subspace next = image(ap, im);
        if (next == im) break;
        im = next;
      }
      t.tau_p1.push_back(im);
    }
    if (t.cycles.empty()) {
      t.tau0 = Subspace::full(f, d);
      t.tau1 = Subspace(f, d);
    } else {
      t.tau0 = t.tau_p0.front();
      for (std::size_t i = 1; i < t.tau_p0.size(); ++i) t.tau0 = intersect(t.tau0, t.tau_p0[i]);
      t.tau1 = t.tau_p1.front();
      std::size_t dimsum = t.tau_p1.front().dim();
      for (std::size_t i = 1; i < t.tau_p1.size(); ++i) {
        t.tau1 = sum(t.tau1, t.tau_p1[i]);
        dimsum += t.tau_p1[i].dim();
      }
      if (t.tau1.dim() != dimsum) throw internal_error("primitive torsion components are not independent");
    }
    out.push_back(std::move(t));
  }
  return out;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw domain_error("direct_sum of an empty list needs an algebra; build a zero representation instead");
  auto alg = parts.front().alg_ptr();
  FieldSpec f = parts.front().field();
  for (const auto& p : parts) {
    if (p.alg_ptr().get() != alg.get()) throw domain_error("direct_sum: mixed algebras");
    if (p.field() != f) throw domain_error("direct_sum: mixed fields");
  }
  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  for (const auto& p : parts)
    for (int v = 0; v < alg->vertex_count(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> action;
  for (int a = 0; a < alg->arrow_count(); ++a) {
    Letter l{a, false};
    Matrix m(f, dims[alg->head_of(l)], dims[alg->tail_of(l)]);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      const Matrix& blk = p.action(a);
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) m.at(ro + i, co + j) = blk.at(i, j);
      ro += blk.rows();
      co += blk.cols();
    }
    action.push_back(std::move(m));
  }
  return Representation(alg, f, std::move(dims), std::move(action));
}

Scrambled scramble(const Representation& m, std::uint64_t seed) {
  const StringAlgebra& alg = m.alg();
  const FieldSpec& f = m.field();
  std::vector<Matrix> change;
  if (seed == 0) {
    for (int v = 0; v < alg.vertex_count(); ++v) change.push_back(Matrix::identity(f, m.dim(v)));
  } else {
    std::mt19937_64 rng(seed);
    auto rand_scalar = [&]() {
      if (f.kind == FieldKind::prime) return Scalar::of_int(f, static_cast<std::int64_t>(rng() % f.p));
      return Scalar::of_int(f, static_cast<std::int64_t>(rng() % 7) - 3);
    };
    for (int v = 0; v < alg.vertex_count(); ++v) {
      std::size_t d = m.dim(v);
      Matrix s(f, d, d);
      do {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) s.at(i, j) = rand_scalar();
      } while (!is_invertible(s));
      change.push_back(std::move(s));
    }
  }
  std::vector<Matrix> action;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    Letter l{a, false};
    int h = alg.head_of(l), t = alg.tail_of(l);
    action.push_back(inverse(change[h]) * m.action(a) * change[t]);
  }
  return Scrambled{Representation(m.alg_ptr(), f, m.dims(), std::move(action)), std::move(change)};
}

std::shared_ptr<const StringAlgebra> graded_window_algebra(int lo, int hi) {
  if (lo >= hi) throw domain_error("graded window needs at least two degrees");
  Quiver q;
  for (int i = lo; i <= hi; ++i) q.vertices.push_back(std::to_string(i));
  for (int i = lo + 1; i <= hi; ++i) {
    q.arrows.push_back(Arrow{"x" + std::to_string(i), std::to_string(i), std::to_string(i - 1)});
    q.arrows.push_back(Arrow{"y" + std::to_string(i), std::to_string(i), std::to_string(i - 1)});
  }
  std::vector<ZeroRelation> rho;
  for (int i = lo + 2; i <= hi; ++i) {
    rho.push_back({"x" + std::to_string(i), "y" + std::to_string(i - 1)});
    rho.push_back({"y" + std::to_string(i), "x" + std::to_string(i - 1)});
  }
  return std::make_shared<StringAlgebra>(std::move(q), std::move(rho));
}

GradedWindow graded_ingest(const FieldSpec& f, int lo, int hi, const std::vector<std::size_t>& dims,
                           const std::vector<Matrix>& xmaps, const std::vector<Matrix>& ymaps) {
  std::size_t nv = static_cast<std::size_t>(hi - lo + 1);
  if (dims.size() != nv) throw domain_error("graded window needs one dimension per degree");
  std::size_t inner = nv - 1;
  std::vector<std::string> warnings;
  auto check_maps = [&](const std::vector<Matrix>& maps, const char* name) {
    if (maps.size() == inner) return;
    if (maps.size() == inner + 1) {
      if (!maps.back().is_zero())
        warnings.push_back(std::string("nonzero ") + name + "-map leaving the window was dropped");
      return;
    }
    throw domain_error(std::string(name) + "-map list has wrong length for the window");
  };
  check_maps(xmaps, "x");
  check_maps(ymaps, "y");

  auto alg = graded_window_algebra(lo, hi);
  std::vector<Matrix> action(2 * inner, Matrix(f, 0, 0));
  for (std::size_t k = 0; k < inner; ++k) {
    const Matrix& xm = xmaps[k];
    const Matrix& ym = ymaps[k];
    if (xm.rows() != dims[k + 1] || xm.cols() != dims[k]) throw domain_error("x-map shape mismatch in graded input");
    if (ym.rows() != dims[k + 1] || ym.cols() != dims[k]) throw domain_error("y-map shape mismatch in graded input");
    int xa = alg->quiver().arrow_index("x" + std::to_string(lo + 1 + static_cast<int>(k)));
    int ya = alg->quiver().arrow_index("y" + std::to_string(lo + 1 + static_cast<int>(k)));
    action[xa] = xm;
    action[ya] = ym;
  }
  try {
    Representation rep(alg, f, dims, std::move(action));
    return GradedWindow{alg, std::move(rep), std::move(warnings)};
  } catch (const domain_error& e) {
    throw domain_error(std::string("graded data violates xy = yx = 0: ") + e.what());
  }
}

}  // namespace stringalg
