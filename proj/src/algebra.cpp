#include "stringalg/algebra.hpp"

#include <algorithm>
#include <set>

namespace stringalg {

int Quiver::vertex_index(const std::string& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

std::optional<std::string> StringAlgebra::violation(const Quiver& q, const std::vector<ZeroRelation>& rho) {
  std::set<std::string> seen;
  for (const auto& a : q.arrows) {
    if (!seen.insert(a.name).second) return "duplicate arrow name '" + a.name + "'";
    if (q.vertex_index(a.head) < 0) return "arrow '" + a.name + "' has undeclared head '" + a.head + "'";
    if (q.vertex_index(a.tail) < 0) return "arrow '" + a.name + "' has undeclared tail '" + a.tail + "'";
  }
  // malformed relations are reported before the axioms
  for (const auto& rel : rho) {
    if (rel.size() < 2) return "zero relation must have length >= 2";
    for (std::size_t i = 0; i < rel.size(); ++i) {
      int a = q.arrow_index(rel[i]);
      if (a < 0) return "relation references unknown arrow '" + rel[i] + "'";
      if (i + 1 < rel.size()) {
        int b = q.arrow_index(rel[i + 1]);
        if (q.arrows[a].tail != q.arrows[b].head)
          return "relation path not composable at '" + rel[i] + " " + rel[i + 1] + "'";
      }
    }
  }
  // (a) any vertex heads/tails at most two arrows
  for (const auto& v : q.vertices) {
    int heads = 0, tails = 0;
    for (const auto& a : q.arrows) {
      if (a.head == v) ++heads;
      if (a.tail == v) ++tails;
    }
    if (heads > 2) return "condition (a): vertex '" + v + "' is the head of " + std::to_string(heads) + " arrows";
    if (tails > 2) return "condition (a): vertex '" + v + "' is the tail of " + std::to_string(tails) + " arrows";
  }
  // (b) unique continuation outside rho, in both directions
  auto in_rho2 = [&](const std::string& x, const std::string& y) {
    for (const auto& rel : rho)
      if (rel.size() == 2 && rel[0] == x && rel[1] == y) return true;
    return false;
  };
  for (const auto& y : q.arrows) {
    int left = 0, right = 0;
    for (const auto& x : q.arrows) {
      if (x.tail == y.head && !in_rho2(x.name, y.name)) ++left;   // paths xy
      if (y.tail == x.head && !in_rho2(y.name, x.name)) ++right;  // paths yz
    }
    if (left > 1) return "condition (b): arrow '" + y.name + "' has " + std::to_string(left) + " continuations xy outside rho";
    if (right > 1) return "condition (b): arrow '" + y.name + "' has " + std::to_string(right) + " continuations yz outside rho";
  }
  return std::nullopt;
}

StringAlgebra::StringAlgebra(Quiver q, std::vector<ZeroRelation> rho) : quiver_(std::move(q)) {
  auto bad = violation(quiver_, rho);
  if (bad) throw domain_error(*bad);
  for (const auto& rel : rho) {
    std::vector<int> r;
    for (const auto& n : rel) r.push_back(quiver_.arrow_index(n));
    relations_.push_back(std::move(r));
    max_rel_len_ = std::max(max_rel_len_, rel.size());
  }
  init(nullptr);
}

StringAlgebra::StringAlgebra(Quiver q, std::vector<ZeroRelation> rho, std::map<std::string, int> explicit_signs)
    : quiver_(std::move(q)) {
  auto bad = violation(quiver_, rho);
  if (bad) throw domain_error(*bad);
  for (const auto& rel : rho) {
    std::vector<int> r;
    for (const auto& n : rel) r.push_back(quiver_.arrow_index(n));
    relations_.push_back(std::move(r));
    max_rel_len_ = std::max(max_rel_len_, rel.size());
  }
  init(&explicit_signs);
}

std::string StringAlgebra::letter_name(const Letter& l) const {
  return quiver_.arrows[l.arrow].name + (l.inv ? "^-1" : "");
}

Letter StringAlgebra::parse_letter(const std::string& tok) const {
  std::string name = tok;
  bool inv = false;
  if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
    inv = true;
    name = name.substr(0, name.size() - 3);
  }
  int a = quiver_.arrow_index(name);
  if (a < 0) throw parse_error("unknown arrow '" + name + "'");
  return Letter{a, inv};
}

std::vector<Letter> StringAlgebra::letters_with_head_sign(int v, int sign) const {
  std::vector<Letter> out;
  for (int a = 0; a < arrow_count(); ++a)
    for (bool inv : {false, true}) {
      Letter l{a, inv};
      if (head_of(l) == v && sign_of(l) == sign) out.push_back(l);
    }
  return out;
}

bool StringAlgebra::consecutive_ok(const Letter& a, const Letter& b) const {
  return tail_of(a) == head_of(b) && b != a.inverse();
}

bool StringAlgebra::window_ok(const std::vector<Letter>& ls) const {
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    if (!consecutive_ok(ls[i], ls[i + 1])) return false;
  for (const auto& rel : relations_) {
    std::size_t m = rel.size();
    if (m > ls.size()) continue;
    for (std::size_t i = 0; i + m <= ls.size(); ++i) {
      bool direct = true, inv = true;
      for (std::size_t j = 0; j < m; ++j) {
        if (ls[i + j].inv || ls[i + j].arrow != rel[j]) direct = false;
        if (!ls[i + j].inv || ls[i + j].arrow != rel[m - 1 - j]) inv = false;
      }
      if (direct || inv) return false;
    }
  }
  return true;
}

bool StringAlgebra::sign_condition_holds(const std::vector<int>& signs, std::string* why) const {
  auto has_rel2 = [&](int x, int y) {
    for (const auto& rel : relations_)
      if (rel.size() == 2 && rel[0] == x && rel[1] == y) return true;
    return false;
  };
  int n = arrow_count();
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      if (signs[i] == 0 || signs[j] == 0) continue;
      Letter li{i / 2, (i % 2) == 1}, lj{j / 2, (j % 2) == 1};
      if (head_of(li) != head_of(lj) || signs[i] != signs[j]) continue;
      // distinct letters with equal head and sign must be {x^-1, y}, xy in rho
      bool ok = false;
      if (li.inv != lj.inv) {
        const Letter& xinv = li.inv ? li : lj;
        const Letter& y = li.inv ? lj : li;
        ok = has_rel2(xinv.arrow, y.arrow);
      }
      if (!ok) {
        if (why)
          *why = "letters '" + letter_name(li) + "' and '" + letter_name(lj) +
                 "' share head and sign without a zero relation pairing them";
        return false;
      }
    }
  return true;
}

void StringAlgebra::init(const std::map<std::string, int>* explicit_signs) {
  head_.resize(arrow_count());
  tail_.resize(arrow_count());
  for (int a = 0; a < arrow_count(); ++a) {
    head_[a] = quiver_.vertex_index(quiver_.arrows[a].head);
    tail_[a] = quiver_.vertex_index(quiver_.arrows[a].tail);
  }
  signs_.assign(2 * arrow_count(), 0);

  if (explicit_signs) {
    for (const auto& [name, s] : *explicit_signs) {
      if (s != 1 && s != -1) throw domain_error("sign for '" + name + "' must be +1 or -1");
      Letter l = parse_letter(name);
      signs_[l.arrow * 2 + (l.inv ? 1 : 0)] = s;
    }
    for (int i = 0; i < 2 * arrow_count(); ++i)
      if (signs_[i] == 0)
        throw domain_error("explicit sign map missing letter '" +
                           letter_name(Letter{i / 2, (i % 2) == 1}) + "'");
    std::string why;
    if (!sign_condition_holds(signs_, &why)) throw domain_error("sign condition violated: " + why);
    return;
  }

  // Deterministic search: letters ordered by (head vertex, arrow name,
  // inverse before direct); prefer the sign opposite to an already assigned
  // partner, otherwise +1. First complete assignment is canonical.
  std::vector<int> order(2 * arrow_count());
  for (int i = 0; i < 2 * arrow_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    Letter li{i / 2, (i % 2) == 1}, lj{j / 2, (j % 2) == 1};
    int hi = head_of(li), hj = head_of(lj);
    if (hi != hj) return hi < hj;
    const std::string &ni = quiver_.arrows[li.arrow].name, &nj = quiver_.arrows[lj.arrow].name;
    if (ni != nj) return ni < nj;
    return li.inv > lj.inv;
  });

  std::vector<int> assigned(2 * arrow_count(), 0);
  auto consistent_prefix = [&](std::size_t upto) {
    std::vector<int> partial(2 * arrow_count(), 0);
    for (std::size_t k = 0; k <= upto; ++k) partial[order[k]] = assigned[order[k]];
    return sign_condition_holds(partial, nullptr);
  };
  std::size_t pos = 0;
  std::vector<int> attempt(2 * arrow_count(), 0);  // how many sign choices tried at each position
  while (pos < order.size()) {
    int idx = order[pos];
    int partner = (idx % 2 == 0) ? idx + 1 : idx - 1;
    int first = assigned[partner] != 0 ? -assigned[partner] : 1;
    if (attempt[pos] == 2) {
      attempt[pos] = 0;
      assigned[idx] = 0;
      if (pos == 0) throw domain_error("sign assignment unsatisfiable");
      --pos;
      continue;
    }
    assigned[idx] = attempt[pos] == 0 ? first : -first;
    ++attempt[pos];
    if (consistent_prefix(pos)) ++pos;
  }
  signs_ = assigned;
}

std::map<std::string, int> StringAlgebra::sign_map() const {
  std::map<std::string, int> m;
  for (int a = 0; a < arrow_count(); ++a) {
    m[letter_name(Letter{a, false})] = signs_[a * 2];
    m[letter_name(Letter{a, true})] = signs_[a * 2 + 1];
  }
  return m;
}

namespace {

// Relation occurrence test on a cyclic direct-arrow sequence.
bool cyclic_relation_free(const StringAlgebra& alg, const std::vector<int>& cyc) {
  std::size_t m = cyc.size();
  std::size_t reps = (alg.max_relation_length() + m - 1) / m + 1;
  std::vector<int> unrolled;
  for (std::size_t r = 0; r < reps; ++r) unrolled.insert(unrolled.end(), cyc.begin(), cyc.end());
  for (const auto& rel : alg.relations()) {
    if (rel.size() > unrolled.size()) continue;
    for (std::size_t i = 0; i + rel.size() <= unrolled.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < rel.size() && match; ++j)
        if (unrolled[i + j] != rel[j]) match = false;
      if (match) return false;
    }
  }
  return true;
}

bool is_primitive_cycle_seq(const std::vector<int>& cyc) {
  std::size_t m = cyc.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool rep = true;
    for (std::size_t i = 0; i < m && rep; ++i)
      if (cyc[i] != cyc[i % d]) rep = false;
    if (rep) return false;
  }
  return true;
}

std::vector<int> canonical_rotation(const StringAlgebra& alg, const std::vector<int>& cyc) {
  std::vector<int> best = cyc;
  auto name_seq = [&](const std::vector<int>& s) {
    std::vector<std::string> ns;
    for (int a : s) ns.push_back(alg.arrow(a).name);
    return ns;
  };
  auto best_names = name_seq(best);
  std::vector<int> rot = cyc;
  for (std::size_t r = 1; r < cyc.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    auto names = name_seq(rot);
    if (names < best_names) {
      best = rot;
      best_names = names;
    }
  }
  return best;
}

}  // namespace

std::vector<PrimitiveCycle> primitive_cycles(const StringAlgebra& alg) {
  std::vector<std::vector<int>> found;
  std::size_t cap = 0;
  for (int a = 0; a < alg.arrow_count(); ++a) cap += 2;
  cap += 2;

  for (int start = 0; start < alg.arrow_count(); ++start) {
    std::vector<int> seq{start};
    while (seq.size() <= cap) {
      // cycle closes when the running path returns to the head of its first arrow
      if (alg.tail_of(Letter{seq.back(), false}) == alg.head_of(Letter{seq.front(), false})) {
        if (is_primitive_cycle_seq(seq) && cyclic_relation_free(alg, seq)) {
          auto canon = canonical_rotation(alg, seq);
          if (std::find(found.begin(), found.end(), canon) == found.end()) found.push_back(canon);
          break;
        }
      }
      // unique direct continuation outside rho, if any
      int next = -1;
      for (int b = 0; b < alg.arrow_count(); ++b) {
        if (alg.tail_of(Letter{seq.back(), false}) != alg.head_of(Letter{b, false})) continue;
        std::vector<Letter> w;
        for (std::size_t k = seq.size() >= alg.max_relation_length() ? seq.size() - alg.max_relation_length() + 1 : 0;
             k < seq.size(); ++k)
          w.push_back(Letter{seq[k], false});
        w.push_back(Letter{b, false});
        if (alg.window_ok(w)) {
          next = b;
          break;
        }
      }
      if (next < 0) break;
      seq.push_back(next);
    }
    if (seq.size() > cap) throw internal_error("primitive cycle search exceeded length cap");
  }

  // Every rotation of a cycle class is a distinct primitive cycle word (a
  // direct word is determined by its first arrow and length); list them all.
  std::vector<PrimitiveCycle> out;
  for (auto& c : found) {
    std::vector<int> rot = c;
    for (std::size_t r = 0; r < c.size(); ++r) {
      out.push_back(PrimitiveCycle{rot, alg.head_of(Letter{rot.front(), false})});
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  std::sort(out.begin(), out.end(), [&](const PrimitiveCycle& x, const PrimitiveCycle& y) {
    std::vector<std::string> nx, ny;
    for (int a : x.arrows) nx.push_back(alg.arrow(a).name);
    for (int a : y.arrows) ny.push_back(alg.arrow(a).name);
    return nx < ny;
  });
  return out;
}

std::vector<PrimitiveCycle> primitive_cycles_at(const StringAlgebra& alg, int v) {
  std::vector<PrimitiveCycle> out;
  for (const auto& pc : primitive_cycles(alg))
    if (pc.head_vertex == v) out.push_back(pc);
  if (out.size() > 2) throw internal_error("more than two primitive cycles share a head vertex");
  return out;
}

}  // namespace stringalg
