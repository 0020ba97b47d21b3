#pragma once

#include <memory>
#include <random>
#include <sstream>

#include "stringalg/repmod.hpp"

namespace stringalg::testing {

// k[x,y]/(xy): one vertex, loops x and y, relations xy and yx
inline std::shared_ptr<const StringAlgebra> xy_algebra() {
  Quiver q;
  q.vertices = {"v"};
  q.arrows = {{"x", "v", "v"}, {"y", "v", "v"}};
  return std::make_shared<StringAlgebra>(q, std::vector<ZeroRelation>{{"x", "y"}, {"y", "x"}});
}

// k<x,y>/(x^2, y^2)
inline std::shared_ptr<const StringAlgebra> x2y2_algebra() {
  Quiver q;
  q.vertices = {"v"};
  q.arrows = {{"x", "v", "v"}, {"y", "v", "v"}};
  return std::make_shared<StringAlgebra>(q, std::vector<ZeroRelation>{{"x", "x"}, {"y", "y"}});
}

// oriented triangle, no relations (gentle, three vertices)
inline std::shared_ptr<const StringAlgebra> triangle_algebra() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", "2", "1"}, {"b", "3", "2"}, {"c", "1", "3"}};
  return std::make_shared<StringAlgebra>(q, std::vector<ZeroRelation>{});
}

inline Word parse_word(const StringAlgebra& alg, const std::string& toks) {
  std::istringstream is(toks);
  std::vector<Letter> ls;
  std::string t;
  while (is >> t) ls.push_back(alg.parse_letter(t));
  return Word::finite(alg, std::move(ls));
}

inline Matrix mat(const FieldSpec& f, std::vector<std::vector<std::int64_t>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_int(f, rows[i][j]);
  return m;
}

inline Subspace random_subspace(std::mt19937_64& rng, const FieldSpec& f, std::size_t ambient) {
  std::size_t gens = rng() % (ambient + 1);
  Matrix g(f, gens, ambient);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < ambient; ++j) g.at(i, j) = Scalar::of_int(f, static_cast<std::int64_t>(rng() % f.p));
  return Subspace::span(g);
}

}  // namespace stringalg::testing
