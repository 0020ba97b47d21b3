#include "stringalg/decompose.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace stringalg {

int default_factor_cap() {
  if (const char* env = std::getenv("STRINGALG_FACTOR_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

std::vector<LaurentBlock> laurent_decompose(const Matrix& t, int q_degree_cap) {
  if (t.rows() != t.cols()) throw domain_error("laurent_decompose needs a square matrix");
  if (!is_invertible(t)) throw domain_error("laurent_decompose: T must be invertible");
  if (t.field().kind == FieldKind::rationals && static_cast<int>(t.rows()) > q_degree_cap)
    throw domain_error("factorization cap exceeded: dimension " + std::to_string(t.rows()) + " > cap " +
                       std::to_string(q_degree_cap));
  std::vector<LaurentBlock> out;
  if (t.rows() == 0) return out;
  Poly mp = min_poly(t);
  std::size_t checked = 0;
  for (auto& [g, emax] : factor_monic(mp, q_degree_cap)) {
    std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<std::size_t> kdims{0};  // dim ker g(T)^j
    Matrix gt = g.eval(t);
    Matrix pw = Matrix::identity(t.field(), t.rows());
    for (int j = 1; j <= emax; ++j) {
      pw = pw * gt;
      kdims.push_back(kernel(pw).dim());
    }
    kdims.push_back(kdims.back());  // stabilized beyond the multiplicity in the minimal polynomial
    for (int j = 1; j <= emax; ++j) {
      std::size_t geq_j = (kdims[j] - kdims[j - 1]) / dg;
      std::size_t geq_j1 = (kdims[j + 1] - kdims[j]) / dg;
      if (geq_j > geq_j1) out.push_back(LaurentBlock{g, j, geq_j - geq_j1});
    }
    checked += kdims[emax];
  }
  if (checked != t.rows()) throw internal_error("laurent_decompose: primary components do not fill the space");
  return out;
}

namespace {

struct Jump {
  Word word;
  Subspace plus;
  Subspace minus;
};

struct CandidateScan {
  // jumps[vertex][sign>0 ? 0 : 1]
  std::map<int, std::array<std::vector<Jump>, 2>> jumps;
  std::vector<Word> periods;  // canonical periodic candidates
};

LinearRelation extend_rel(const Representation& m, const LinearRelation& r, const Letter& l) {
  const Matrix& a = m.action(l.arrow);
  return l.inv ? precompose_map_inverse(r, a) : precompose_map(r, a);
}

CandidateScan scan_candidates(const Representation& m) {
  const StringAlgebra& alg = m.alg();
  CandidateScan scan;
  std::set<std::vector<std::string>> period_keys;
  std::vector<std::size_t> budget(m.dims());

  struct Node {
    Word word;
    LinearRelation rel;
    std::vector<std::size_t> counts;
  };

  for (int root = 0; root < alg.vertex_count(); ++root) {
    if (budget[root] == 0) continue;
    for (int sgn : {+1, -1}) {
      std::vector<Node> stack;
      std::vector<std::size_t> c0(alg.vertex_count(), 0);
      c0[root] = 1;
      stack.push_back(Node{Word::trivial(alg, root, sgn), LinearRelation::identity(m.field(), m.dim(root)), c0});
      while (!stack.empty()) {
        Node cur = std::move(stack.back());
        stack.pop_back();

        bool within_budget = true;
        for (int v = 0; v < alg.vertex_count(); ++v)
          if (cur.counts[v] > budget[v]) within_budget = false;

        std::optional<std::pair<Letter, LinearRelation>> dir_child, inv_child;
        for (const Letter& l : extension_letters(alg, cur.word)) {
          LinearRelation rc = extend_rel(m, cur.rel, l);
          if (l.inv)
            inv_child = {l, std::move(rc)};
          else
            dir_child = {l, std::move(rc)};
        }

        if (within_budget) {
          Subspace plus = inv_child ? apply_zero(inv_child->second) : apply_full(cur.rel);
          Subspace minus = dir_child ? apply_full(dir_child->second) : apply_zero(cur.rel);
          if (plus != minus) scan.jumps[root][sgn > 0 ? 0 : 1].push_back(Jump{cur.word, plus, minus});
        }

        for (auto* child : {&dir_child, &inv_child}) {
          if (!*child) continue;
          const Letter& l = (*child)->first;
          std::vector<std::size_t> counts = cur.counts;
          int tv = alg.tail_of(l);
          counts[tv]++;
          if (counts[tv] > budget[tv] + 1) continue;
          std::vector<Letter> letters = cur.word.is_trivial() ? std::vector<Letter>{} : cur.word.prefix();
          letters.push_back(l);
          // a path closing on its start vertex may be a band period
          if (tv == root && is_word_letters(alg, letters)) {
            std::vector<std::size_t> window = counts;
            window[root]--;
            bool fits = true;
            for (int v = 0; v < alg.vertex_count(); ++v)
              if (window[v] > budget[v]) fits = false;
            if (fits) {
              try {
                Word p = Word::periodic(alg, letters);
                Word canon = canonical_rep(alg, p);
                if (period_keys.insert(encode(alg, canon)).second) scan.periods.push_back(canon);
              } catch (const domain_error&) {
                // not a primitive Z-period; skip
              }
            }
          }
          // prune: no jump can extend a prefix with C M = C 0
          if (apply_full((*child)->second) == apply_zero((*child)->second)) continue;
          stack.push_back(Node{Word::finite(alg, letters), std::move((*child)->second), std::move(counts)});
        }
      }
    }
  }
  return scan;
}

std::string poly_key(const Poly& p) { return p.to_string(); }

}  // namespace

DecompositionReport decompose(const Representation& m, int q_degree_cap) {
  const StringAlgebra& alg = m.alg();
  DecompositionReport report;
  for (int v = 0; v < alg.vertex_count(); ++v) report.audit[alg.vertex_name(v)] = m.dim(v);
  if (m.total_dim() == 0) return report;

  CandidateScan scan = scan_candidates(m);

  // string multiplicities from jump pairs (B, D) with B^{-1}D a word
  std::map<std::vector<std::string>, std::pair<Word, std::size_t>> strings;
  for (auto& [v, by_sign] : scan.jumps) {
    for (const Jump& jb : by_sign[0]) {
      Word binv = inverse(alg, jb.word);
      for (const Jump& jd : by_sign[1]) {
        auto joined = compose(alg, binv, jd.word);
        if (!std::holds_alternative<Word>(joined)) continue;
        Subspace fplus = intersect(jb.plus, jd.plus);
        Subspace fminus = sum(intersect(jb.plus, jd.minus), intersect(jb.minus, jd.plus));
        std::size_t mult = fplus.dim() - fminus.dim();
        if (mult == 0) continue;
        Word canon = canonical_rep(alg, std::get<Word>(joined));
        auto key = encode(alg, canon);
        auto it = strings.find(key);
        if (it == strings.end())
          strings.emplace(key, std::make_pair(canon, mult));
        else if (it->second.second != mult)
          throw internal_error("decompose: splits of one word report different multiplicities");
      }
    }
  }
  for (auto& [k, v] : strings) report.strings.push_back(StringEntry{v.first, v.second});

  // band multiplicities from the period relation of each candidate
  for (const Word& e : scan.periods) {
    Word efin = Word::finite(alg, e.period());
    LinearRelation r = word_relation(m, efin);
    RelationCore core = relation_core(r);
    if (core.lifts.empty()) continue;
    Matrix t_rep = inverse(core.theta);
    for (const LaurentBlock& blk : laurent_decompose(t_rep, q_degree_cap))
      report.bands.push_back(BandEntry{e, blk.g, blk.power, blk.mult});
  }

  std::sort(report.strings.begin(), report.strings.end(),
            [&](const StringEntry& a, const StringEntry& b) { return encode(alg, a.word) < encode(alg, b.word); });
  std::sort(report.bands.begin(), report.bands.end(), [&](const BandEntry& a, const BandEntry& b) {
    auto ka = encode(alg, a.word), kb = encode(alg, b.word);
    if (ka != kb) return ka < kb;
    if (a.g != b.g) return a.g < b.g;
    return a.power < b.power;
  });

  // dimension audit: the named summands must account for every vertex space
  std::vector<std::size_t> found(alg.vertex_count(), 0);
  for (const auto& s : report.strings)
    for (std::size_t i = 0; i <= s.word.length(); ++i) found[vertex_at(alg, s.word, i)] += s.mult;
  for (const auto& b : report.bands) {
    std::size_t d = static_cast<std::size_t>(b.g.degree()) * b.power;
    for (std::size_t i = 0; i < b.word.period().size(); ++i)
      found[vertex_at(alg, b.word, i)] += d * b.mult;
  }
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (found[v] != m.dim(v))
      throw internal_error("decompose: dimension audit failed at vertex '" + alg.vertex_name(v) + "': found " +
                           std::to_string(found[v]) + ", module has " + std::to_string(m.dim(v)));
  return report;
}

bool reports_equal(const StringAlgebra& alg, const DecompositionReport& a, const DecompositionReport& b) {
  std::map<std::vector<std::string>, std::size_t> sa, sb;
  for (const auto& s : a.strings) sa[encode(alg, s.word)] += s.mult;
  for (const auto& s : b.strings) sb[encode(alg, s.word)] += s.mult;
  if (sa != sb) return false;
  std::map<std::string, std::size_t> ba, bb;
  for (const auto& x : a.bands) {
    std::ostringstream os;
    for (auto& t : encode(alg, x.word)) os << t << " ";
    os << "@" << poly_key(x.g) << "^" << x.power;
    ba[os.str()] += x.mult;
  }
  for (const auto& x : b.bands) {
    std::ostringstream os;
    for (auto& t : encode(alg, x.word)) os << t << " ";
    os << "@" << poly_key(x.g) << "^" << x.power;
    bb[os.str()] += x.mult;
  }
  return ba == bb;
}

bool krs_check(const Representation& m1, const Representation& m2, int q_degree_cap) {
  return reports_equal(m1.alg(), decompose(m1, q_degree_cap), decompose(m2, q_degree_cap));
}

Representation report_module(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f,
                             const DecompositionReport& report) {
  std::vector<Representation> parts;
  for (const auto& s : report.strings)
    for (std::size_t t = 0; t < s.mult; ++t) parts.push_back(string_module(alg, f, s.word).rep);
  for (const auto& b : report.bands)
    for (std::size_t t = 0; t < b.mult; ++t)
      parts.push_back(band_module(alg, f, b.word, BandCoefficient{b.g, b.power}).rep);
  if (parts.empty()) {
    std::vector<std::size_t> dims(alg->vertex_count(), 0);
    std::vector<Matrix> action;
    for (int a = 0; a < alg->arrow_count(); ++a) action.emplace_back(f, 0, 0);
    return Representation(alg, f, std::move(dims), std::move(action));
  }
  return direct_sum(parts);
}

namespace {

// Module homomorphism M(C) -> M sending b_0 to w; all arrow constraints are
// solved as one stacked linear system.
std::vector<std::vector<Scalar>> string_hom(const Representation& m, const Word& c,
                                            const std::vector<Scalar>& w) {
  const StringAlgebra& alg = m.alg();
  const FieldSpec& f = m.field();
  std::size_t n = c.length();
  std::vector<int> vtx(n + 1);
  std::vector<std::size_t> off(n + 2, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    vtx[j] = vertex_at(alg, c, j);
    off[j + 1] = off[j] + m.dim(vtx[j]);
  }
  std::size_t cols = off[n + 1];

  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  auto add_rows = [&](std::size_t count) -> std::size_t {
    std::size_t first = rows.size();
    for (std::size_t i = 0; i < count; ++i) {
      rows.emplace_back(zero_vector(f, cols));
      rhs.push_back(Scalar::zero(f));
    }
    return first;
  };

  for (int a = 0; a < alg.arrow_count(); ++a) {
    Letter dl{a, false};
    int ta = alg.tail_of(dl);
    std::size_t dh = m.dim(alg.head_of(dl));
    const Matrix& mat = m.action(a);
    for (std::size_t j = 0; j <= n; ++j) {
      if (vtx[j] != ta) continue;
      std::size_t r0 = add_rows(dh);
      for (std::size_t r = 0; r < dh; ++r)
        for (std::size_t ccol = 0; ccol < mat.cols(); ++ccol) rows[r0 + r][off[j] + ccol] = mat.at(r, ccol);
      // target of a·b_j under the string action
      std::optional<std::size_t> tgt;
      if (j >= 1) {
        Letter lj = *c.letter_at(j);
        if (!lj.inv && lj.arrow == a) tgt = j - 1;
      }
      if (!tgt && j < n) {
        Letter lj1 = *c.letter_at(j + 1);
        if (lj1.inv && lj1.arrow == a) tgt = j + 1;
      }
      if (tgt)
        for (std::size_t r = 0; r < dh; ++r)
          rows[r0 + r][off[*tgt] + r] = rows[r0 + r][off[*tgt] + r] - Scalar::one(f);
    }
  }
  // pin b_0 -> w
  std::size_t p0 = add_rows(m.dim(vtx[0]));
  for (std::size_t r = 0; r < m.dim(vtx[0]); ++r) {
    rows[p0 + r][off[0] + r] = Scalar::one(f);
    rhs[p0 + r] = w[r];
  }

  Matrix sys = Matrix::from_rows(f, rows, cols);
  auto sol = solve(sys, rhs);
  if (!sol) throw internal_error("certify: string witness-chain system is unsolvable");
  std::vector<std::vector<Scalar>> u(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    u[j] = std::vector<Scalar>(sol->begin() + off[j], sol->begin() + off[j + 1]);
  return u;
}

// Chain u_0 .. u_n along the letters of a period word: u_{i-1} ∈ E_i u_i,
// with both endpoints fixed.
std::vector<std::vector<Scalar>> band_chain(const Representation& m, const Word& efin,
                                            const std::vector<Scalar>& u0, const std::vector<Scalar>& un) {
  const StringAlgebra& alg = m.alg();
  const FieldSpec& f = m.field();
  std::size_t n = efin.length();
  std::vector<int> vtx(n + 1);
  std::vector<std::size_t> off(n + 2, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    vtx[j] = vertex_at(alg, efin, j);
    off[j + 1] = off[j] + m.dim(vtx[j]);
  }
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  std::size_t cols = off[n + 1];
  auto add_rows = [&](std::size_t count) -> std::size_t {
    std::size_t first = rows.size();
    for (std::size_t i = 0; i < count; ++i) {
      rows.emplace_back(zero_vector(f, cols));
      rhs.push_back(Scalar::zero(f));
    }
    return first;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    Letter l = *efin.letter_at(i);
    const Matrix& a = m.action(l.arrow);
    std::size_t src = l.inv ? i - 1 : i;  // A x_src = x_tgt
    std::size_t tgt = l.inv ? i : i - 1;
    std::size_t r0 = add_rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t ccol = 0; ccol < a.cols(); ++ccol) rows[r0 + r][off[src] + ccol] = a.at(r, ccol);
      rows[r0 + r][off[tgt] + r] = rows[r0 + r][off[tgt] + r] - Scalar::one(f);
    }
  }
  auto pin = [&](std::size_t j, const std::vector<Scalar>& val) {
    std::size_t r0 = add_rows(val.size());
    for (std::size_t r = 0; r < val.size(); ++r) {
      rows[r0 + r][off[j] + r] = Scalar::one(f);
      rhs[r0 + r] = val[r];
    }
  };
  pin(0, u0);
  pin(n, un);
  Matrix sys = Matrix::from_rows(f, rows, cols);
  auto sol = solve(sys, rhs);
  if (!sol) throw internal_error("certify: band witness chain is unsolvable");
  std::vector<std::vector<Scalar>> u(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    u[j] = std::vector<Scalar>(sol->begin() + off[j], sol->begin() + off[j + 1]);
  return u;
}

}  // namespace

Certificate certify(const Representation& m, const DecompositionReport& report, int q_degree_cap) {
  const StringAlgebra& alg = m.alg();
  const FieldSpec& f = m.field();
  Certificate cert;
  try {
    std::vector<Representation> parts;
    // per part: list of (vertex, local index, image vector)
    std::vector<std::vector<std::tuple<int, std::size_t, std::vector<Scalar>>>> images;

    for (const auto& s : report.strings) {
      Word b = Word::trivial(alg, head_of(alg, s.word), -sign_of(alg, s.word));
      FiltrationPair pb = plus_minus(m, b);
      FiltrationPair pd = plus_minus(m, s.word);
      Subspace fplus = intersect(pb.plus, pd.plus);
      Subspace fminus = sum(intersect(pb.plus, pd.minus), intersect(pb.minus, pd.plus));
      auto lifts = quotient_basis(fminus, fplus);
      if (lifts.size() != s.mult)
        throw internal_error("certify: functor dimension disagrees with the report multiplicity");
      StringModule sm = string_module(m.alg_ptr(), f, s.word);
      for (std::size_t t = 0; t < s.mult; ++t) {
        auto u = string_hom(m, s.word, lifts[t]);
        parts.push_back(sm.rep);
        std::vector<std::tuple<int, std::size_t, std::vector<Scalar>>> img;
        for (std::size_t j = 0; j <= s.word.length(); ++j)
          img.emplace_back(vertex_at(alg, s.word, j), sm.slot[j], u[j]);
        images.push_back(std::move(img));
      }
    }

    // group band entries by period word
    std::vector<std::pair<Word, std::vector<const BandEntry*>>> classes;
    for (const auto& b : report.bands) {
      auto key = encode(alg, b.word);
      bool found = false;
      for (auto& [w, list] : classes)
        if (encode(alg, w) == key) {
          list.push_back(&b);
          found = true;
        }
      if (!found) classes.push_back({b.word, {&b}});
    }
    for (auto& [e, entries] : classes) {
      Word efin = Word::finite(alg, e.period());
      std::size_t n = efin.length();
      LinearRelation r = word_relation(m, efin);
      Splitting sp = split_relation(r);
      std::size_t s = sp.u_basis.size();
      Matrix ainv = inverse(sp.auto_matrix);
      // chains u_{r,0..n} with u_{r,0} = T u_{r,n}
      std::vector<std::vector<std::vector<Scalar>>> chains(s);
      for (std::size_t rr = 0; rr < s; ++rr) {
        std::vector<Scalar> un = zero_vector(f, sp.u_basis[rr].size());
        for (std::size_t i = 0; i < s; ++i) un = add(un, scale(ainv.at(i, rr), sp.u_basis[i]));
        chains[rr] = band_chain(m, efin, sp.u_basis[rr], un);
      }
      auto chainvec = [&](std::size_t i, const std::vector<Scalar>& alpha) {
        std::vector<Scalar> out = zero_vector(f, m.dim(vertex_at(alg, efin, i)));
        for (std::size_t rr = 0; rr < s; ++rr) out = add(out, scale(alpha[rr], chains[rr][i]));
        return out;
      };
      auto blocks = cyclic_decomposition(ainv, q_degree_cap);
      std::vector<bool> used(blocks.size(), false);
      for (const BandEntry* be : entries) {
        for (std::size_t copy = 0; copy < be->mult; ++copy) {
          std::size_t chosen = blocks.size();
          for (std::size_t i = 0; i < blocks.size(); ++i)
            if (!used[i] && blocks[i].power == be->power && blocks[i].g == be->g) {
              chosen = i;
              used[i] = true;
              break;
            }
          if (chosen == blocks.size())
            throw internal_error("certify: T-module blocks disagree with the report");
          BandModule bm = band_module(m.alg_ptr(), f, e, BandCoefficient{be->g, be->power});
          std::size_t d = static_cast<std::size_t>(be->g.degree()) * be->power;
          parts.push_back(bm.rep);
          std::vector<std::tuple<int, std::size_t, std::vector<Scalar>>> img;
          std::vector<Scalar> tj = blocks[chosen].generator;  // Ainv^j c
          for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < n; ++i)
              img.emplace_back(vertex_at(alg, efin, i), bm.block_offset[i] + j, chainvec(i, tj));
            tj = ainv.apply(tj);
          }
          images.push_back(std::move(img));
        }
      }
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!used[i]) throw internal_error("certify: leftover T-module block not named in the report");
    }

    // assemble theta per vertex
    Representation n_module = report_module(m.alg_ptr(), f, report);
    for (int v = 0; v < alg.vertex_count(); ++v) cert.theta.emplace_back(f, m.dim(v), n_module.dim(v));
    std::vector<std::size_t> n_off(alg.vertex_count(), 0);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (auto& [v, local, vec] : images[p])
        for (std::size_t row = 0; row < vec.size(); ++row)
          cert.theta[v].at(row, n_off[v] + local) = vec[row];
      for (int v = 0; v < alg.vertex_count(); ++v) n_off[v] += parts[p].dim(v);
    }

    // homomorphism equations, then invertibility
    for (int a = 0; a < alg.arrow_count(); ++a) {
      Letter l{a, false};
      int h = alg.head_of(l), t = alg.tail_of(l);
      if (!(cert.theta[h] * n_module.action(a) == m.action(a) * cert.theta[t]))
        throw internal_error("certify: homomorphism equation fails for arrow '" + alg.arrow(a).name + "'");
    }
    for (int v = 0; v < alg.vertex_count(); ++v)
      if (!is_invertible(cert.theta[v]))
        throw internal_error("certify: theta is not invertible at vertex '" + alg.vertex_name(v) + "'");
    cert.ok = true;
  } catch (const std::exception& e) {
    cert.ok = false;
    cert.diagnostics = e.what();
    cert.theta.clear();
  }
  return cert;
}

}  // namespace stringalg
