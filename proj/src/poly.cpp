#include "stringalg/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stringalg {

Poly::Poly(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
  return Poly(c.field(), std::vector<Scalar>{c});
}

Poly Poly::variable(const FieldSpec& f) {
  return Poly(f, {Scalar::zero(f), Scalar::one(f)});
}

Poly Poly::monomial(const FieldSpec& f, std::size_t k, const Scalar& c) {
  std::vector<Scalar> cs(k + 1, Scalar::zero(f));
  cs[k] = c;
  return Poly(f, std::move(cs));
}

Scalar Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Scalar Poly::lead() const {
  if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> cs(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
  return Poly(field_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Scalar> cs(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) - o.coeff(i);
  return Poly(field_, std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Scalar> cs(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] = cs[i + j] + coeffs_[i] * o.coeffs_[j];
  return Poly(field_, std::move(cs));
}

Poly Poly::scaled(const Scalar& c) const {
  std::vector<Scalar> cs(coeffs_);
  for (auto& x : cs) x = x * c;
  return Poly(field_, std::move(cs));
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int k = degree(); k >= 0; --k) {
    Scalar a = coeff(k), b = o.coeff(k);
    if (a != b) return a.to_string() < b.to_string();
  }
  return false;
}

Poly Poly::monic() const {
  if (is_zero()) throw domain_error("monic of zero polynomial");
  return scaled(lead().inverse());
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::eval(const Matrix& a) const {
  Matrix acc(a.field(), a.rows(), a.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.rows(); ++i) acc.at(i, i) = acc.at(i, i) + *it;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = coeff(k);
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit_coeff = cs == "1" && k > 0;
    if (!unit_coeff) os << cs;
    if (k > 0) {
      if (!unit_coeff) os << "*";
      os << "T";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  Poly rem = a;
  Poly quot(a.field());
  Scalar lead_inv = b.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t k = rem.degree() - b.degree();
    Scalar c = rem.lead() * lead_inv;
    Poly t = Poly::monomial(a.field(), k, c);
    quot = quot + t;
    rem = rem - t * b;
  }
  return {quot, rem};
}

bool divides(const Poly& a, const Poly& b) { return divmod(b, a).rem.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).rem;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  Poly g = gcd(a, b);
  return divmod(a * b, g).quot.monic();
}

namespace {

// ---- factorization over F_p: trial division by enumerated irreducibles ----

std::vector<Poly> monic_polys_fp(const FieldSpec& f, int degree) {
  std::vector<Poly> out;
  std::int64_t p = f.p;
  std::int64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<Scalar> cs(degree + 1, Scalar::zero(f));
    std::int64_t c = code;
    for (int i = 0; i < degree; ++i) {
      cs[i] = Scalar::of_int(f, c % p);
      c /= p;
    }
    cs[degree] = Scalar::one(f);
    out.emplace_back(f, std::move(cs));
  }
  return out;
}

std::vector<Poly> irreducibles_fp(const FieldSpec& f, int max_degree) {
  std::vector<Poly> irr;
  for (int d = 1; d <= max_degree; ++d)
    for (const Poly& cand : monic_polys_fp(f, d)) {
      bool red = false;
      for (const Poly& g : irr) {
        if (2 * g.degree() > d) break;
        if (divides(g, cand)) {
          red = true;
          break;
        }
      }
      if (!red) irr.push_back(cand);
    }
  return irr;
}

std::vector<std::pair<Poly, int>> factor_fp(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly work = f;
  int half = work.degree() / 2;
  auto irr = irreducibles_fp(f.field(), std::max(1, half));
  for (const Poly& g : irr) {
    if (work.degree() < 1) break;
    int mult = 0;
    while (work.degree() >= g.degree() && divides(g, work)) {
      work = divmod(work, g).quot;
      ++mult;
    }
    if (mult) out.push_back({g, mult});
  }
  if (work.degree() >= 1) out.push_back({work.monic(), 1});  // leftover is irreducible
  return out;
}

// ---- factorization over Q: rational roots, then Kronecker interpolation ----

std::vector<BigInt> divisors_signed(const BigInt& n) {
  BigInt a = n < 0 ? BigInt(-n) : n;
  if (a == 0) throw internal_error("divisors of zero");
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    BigInt e = a / d;
    out.push_back(d);
    out.push_back(-d);
    if (e != d) {
      out.push_back(e);
      out.push_back(-e);
    }
    if (out.size() > 4096) throw domain_error("factorization cap: too many divisors in Kronecker search");
  }
  return out;
}

std::vector<BigInt> integer_coeffs(const Poly& f) {
  BigInt denlcm = 1;
  for (const auto& c : f.coeffs()) {
    BigInt d = denominator(c.rat());
    denlcm = denlcm / boost::multiprecision::gcd(denlcm, d) * d;
  }
  std::vector<BigInt> out;
  for (const auto& c : f.coeffs()) out.push_back(numerator(c.rat()) * (denlcm / denominator(c.rat())));
  BigInt content = 0;
  for (const auto& c : out) content = boost::multiprecision::gcd(content, c);
  if (content > 1)
    for (auto& c : out) c /= content;
  return out;
}

Poly from_integer_coeffs(const FieldSpec& f, const std::vector<BigInt>& cs) {
  std::vector<Scalar> sc;
  for (const auto& c : cs) sc.push_back(Scalar::rational(BigRat(c)));
  return Poly(f, std::move(sc));
}

std::optional<Poly> rational_root_factor(const Poly& f) {
  auto ic = integer_coeffs(f);
  if (ic.size() < 2) return std::nullopt;
  BigInt a0 = ic.front(), an = ic.back();
  if (a0 == 0) return Poly(f.field(), {Scalar::zero(f.field()), Scalar::one(f.field())});  // root 0
  for (const BigInt& p : divisors_signed(a0))
    for (const BigInt& q : divisors_signed(an)) {
      if (q < 0) continue;
      Scalar r = Scalar::rational(BigRat(p, q));
      if (f.eval(r).is_zero())
        return Poly(f.field(), {-r, Scalar::one(f.field())});
    }
  return std::nullopt;
}

// One nontrivial monic factor of degree <= deg/2, or nullopt if irreducible.
std::optional<Poly> kronecker_factor(const Poly& f) {
  auto root = rational_root_factor(f);
  if (root) return root;
  auto ic = integer_coeffs(f);
  Poly F = from_integer_coeffs(f.field(), ic);
  int n = F.degree();
  for (int d = 2; d <= n / 2; ++d) {
    // evaluation points 0, 1, -1, 2, -2, ...
    std::vector<Scalar> pts;
    std::vector<BigInt> vals;
    for (int t = 0; static_cast<int>(pts.size()) <= d; ++t) {
      int x = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
      Scalar xs = Scalar::of_int(f.field(), x);
      Scalar v = F.eval(xs);
      if (v.is_zero()) continue;  // roots were already stripped; defensive
      pts.push_back(xs);
      vals.push_back(numerator(v.rat()));
    }
    std::vector<std::vector<BigInt>> divs;
    std::size_t combos = 1;
    for (const auto& v : vals) {
      divs.push_back(divisors_signed(v));
      combos *= divs.back().size();
      if (combos > 2000000) throw domain_error("factorization cap: Kronecker combination explosion");
    }
    std::vector<std::size_t> idx(d + 1, 0);
    for (;;) {
      // Lagrange interpolation of the chosen divisor values
      Poly cand(f.field());
      for (int i = 0; i <= d; ++i) {
        Poly li = Poly::constant(Scalar::rational(BigRat(divs[i][idx[i]])));
        for (int j = 0; j <= d; ++j) {
          if (i == j) continue;
          Poly num(f.field(), {-pts[j], Scalar::one(f.field())});
          Scalar den = pts[i] - pts[j];
          li = li * num.scaled(den.inverse());
        }
        cand = cand + li;
      }
      if (cand.degree() == d && divides(cand, F)) return cand.monic();
      // next combination
      int pos = 0;
      while (pos <= d) {
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos > d) break;
    }
  }
  return std::nullopt;
}

void factor_q_into(const Poly& f, std::map<std::vector<std::string>, std::pair<Poly, int>>& acc) {
  if (f.degree() < 1) return;
  auto g = kronecker_factor(f);
  if (!g) {
    Poly m = f.monic();
    std::vector<std::string> key;
    for (const auto& c : m.coeffs()) key.push_back(c.to_string());
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::make_pair(m, 1));
    else
      it->second.second++;
    return;
  }
  factor_q_into(*g, acc);
  factor_q_into(divmod(f, *g).quot, acc);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_monic(const Poly& f, int q_degree_cap) {
  if (f.is_zero() || !f.lead().is_one()) throw domain_error("factor_monic expects a monic polynomial");
  if (f.degree() == 0) return {};
  if (f.field().kind == FieldKind::prime) return factor_fp(f);
  if (f.degree() > q_degree_cap)
    throw domain_error("factorization cap exceeded: degree " + std::to_string(f.degree()) + " > cap " +
                       std::to_string(q_degree_cap));
  std::map<std::vector<std::string>, std::pair<Poly, int>> acc;
  factor_q_into(f, acc);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [k, v] : acc) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Matrix companion(const Poly& f) {
  if (f.is_zero() || !f.lead().is_one() || f.degree() < 1)
    throw domain_error("companion matrix needs a monic polynomial of degree >= 1");
  std::size_t n = f.degree();
  Matrix m(f.field(), n, n);
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = Scalar::one(f.field());
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -f.coeff(i);
  return m;
}

Poly min_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw domain_error("min_poly of non-square matrix");
  const FieldSpec& f = a.field();
  std::size_t n = a.rows();
  Poly acc = Poly::constant(Scalar::one(f));
  for (std::size_t s = 0; s < n; ++s) {
    // Krylov chain of the s-th basis vector
    std::vector<std::vector<Scalar>> krylov{unit_vector(f, n, s)};
    for (;;) {
      Matrix m(f, n, krylov.size());
      for (std::size_t j = 0; j < krylov.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = krylov[j][i];
      auto next = a.apply(krylov.back());
      auto sol = solve(m, next);
      if (sol) {
        std::vector<Scalar> cs;
        for (auto& c : *sol) cs.push_back(-c);
        cs.push_back(Scalar::one(f));
        acc = lcm(acc, Poly(f, std::move(cs)));
        break;
      }
      krylov.push_back(next);
    }
  }
  return acc;
}

Poly reciprocal_monic(const Poly& g) {
  if (g.is_zero() || g.coeff(0).is_zero()) throw domain_error("reciprocal needs g(0) != 0");
  std::vector<Scalar> cs(g.coeffs().rbegin(), g.coeffs().rend());
  return Poly(g.field(), std::move(cs)).monic();
}

std::string parse_poly_err(const std::string& t) { return "cannot parse polynomial '" + t + "'"; }

Poly parse_poly(const FieldSpec& f, const std::string& text) {
  // terms like "T^2", "- 3*T", "+ 1/2", separated by +/-
  Poly out(f);
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error(parse_poly_err(text));
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::string coeff_str;
    while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) coeff_str += s[i++];
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t power = 0;
    if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string p;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) p += s[i++];
        if (p.empty()) throw parse_error(parse_poly_err(text));
        power = std::stoul(p);
      }
    }
    Scalar c = Scalar::one(f);
    if (!coeff_str.empty()) {
      auto slash = coeff_str.find('/');
      if (slash == std::string::npos) {
        if (f.kind == FieldKind::rationals)
          c = Scalar::rational(BigRat(BigInt(coeff_str)));
        else
          c = Scalar::of_int(f, std::stoll(coeff_str));
      } else {
        if (f.kind != FieldKind::rationals) throw parse_error("fractional coefficient over a prime field");
        c = Scalar::rational(BigRat(BigInt(coeff_str.substr(0, slash)), BigInt(coeff_str.substr(slash + 1))));
      }
    } else if (power == 0) {
      throw parse_error(parse_poly_err(text));
    }
    if (sign < 0) c = -c;
    out = out + Poly::monomial(f, power, c);
  }
  return out;
}

// ---- cyclic primary decomposition via Smith form of T·I - A over k[T] ----

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

struct SnfResult {
  std::vector<Poly> diag;
  PolyMat u_inv;  // tracks row operations: generators are columns of U^{-1}
};

SnfResult poly_snf(const FieldSpec& f, PolyMat p) {
  std::size_t n = p.size();
  PolyMat u_inv(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i) u_inv[i][i] = Poly::constant(Scalar::one(f));

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(p[a], p[b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(u_inv[i][a], u_inv[i][b]);  // U^-1 column swap
  };
  auto row_sub = [&](std::size_t a, std::size_t b, const Poly& q) {
    // row_a -= q row_b; U^-1 column b += q column a
    for (std::size_t j = 0; j < n; ++j) p[a][j] = p[a][j] - q * p[b][j];
    for (std::size_t i = 0; i < n; ++i) u_inv[i][b] = u_inv[i][b] + q * u_inv[i][a];
  };
  auto col_sub = [&](std::size_t a, std::size_t b, const Poly& q) {
    for (std::size_t i = 0; i < n; ++i) p[i][a] = p[i][a] - q * p[i][b];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(p[i][a], p[i][b]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // minimal-degree nonzero entry in the remaining block
      int best_deg = -1;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!p[i][j].is_zero() && (best_deg < 0 || p[i][j].degree() < best_deg)) {
            best_deg = p[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best_deg < 0) break;  // block is zero
      if (bi != t) swap_rows(t, bi);
      if (bj != t) swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i)
        if (!p[i][t].is_zero()) {
          row_sub(i, t, divmod(p[i][t], p[t][t]).quot);
          if (!p[i][t].is_zero()) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (!p[t][j].is_zero()) {
          col_sub(j, t, divmod(p[t][j], p[t][t]).quot);
          if (!p[t][j].is_zero()) clean = false;
        }
      bool cleared = true;
      for (std::size_t i = t + 1; i < n && cleared; ++i)
        if (!p[i][t].is_zero()) cleared = false;
      for (std::size_t j = t + 1; j < n && cleared; ++j)
        if (!p[t][j].is_zero()) cleared = false;
      if (clean && cleared) break;
    }
  }
  // monic-normalize the diagonal (row scalings)
  SnfResult res;
  for (std::size_t t = 0; t < n; ++t) {
    Poly d = p[t][t];
    if (!d.is_zero() && !d.lead().is_one()) {
      Scalar c = d.lead();
      d = d.monic();
      for (std::size_t i = 0; i < n; ++i) u_inv[i][t] = u_inv[i][t].scaled(c);
    }
    res.diag.push_back(d);
  }
  res.u_inv = std::move(u_inv);
  return res;
}

}  // namespace

std::vector<CyclicBlock> cyclic_decomposition(const Matrix& a, int q_degree_cap) {
  if (a.rows() != a.cols()) throw domain_error("cyclic decomposition of non-square matrix");
  const FieldSpec& f = a.field();
  std::size_t n = a.rows();
  if (n == 0) return {};
  if (f.kind == FieldKind::rationals && static_cast<int>(n) > q_degree_cap)
    throw domain_error("factorization cap exceeded: matrix dimension " + std::to_string(n) + " > cap " +
                       std::to_string(q_degree_cap));

  PolyMat p(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p[i][j] = Poly::constant(-a.at(i, j));
      if (i == j) p[i][j] = p[i][j] + Poly::variable(f);
    }
  SnfResult snf = poly_snf(f, std::move(p));

  std::vector<CyclicBlock> out;
  for (std::size_t t = 0; t < n; ++t) {
    const Poly& d = snf.diag[t];
    if (d.is_zero()) throw internal_error("cyclic decomposition: zero invariant factor");
    if (d.degree() == 0) continue;  // unit: contributes nothing
    // generator of the k[T]/(d) block: evaluate the U^{-1} column at A
    std::vector<Scalar> w = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m = snf.u_inv[i][t].eval(a);
      w = add(w, m.col(i));  // (U^{-1})_{it}(A) e_i
    }
    for (auto& [g, e] : factor_monic(d, q_degree_cap)) {
      Poly cof = divmod(d, [&] {
        Poly ge = Poly::constant(Scalar::one(f));
        for (int r = 0; r < e; ++r) ge = ge * g;
        return ge;
      }()).quot;
      CyclicBlock blk{g, e, cof.eval(a).apply(w)};
      out.push_back(std::move(blk));
    }
  }
  // sanity: the cyclic subspaces must fill the space
  std::size_t total = 0;
  for (const auto& b : out) total += static_cast<std::size_t>(b.g.degree()) * b.power;
  if (total != n) throw internal_error("cyclic decomposition dimensions do not add up");
  return out;
}

}  // namespace stringalg
