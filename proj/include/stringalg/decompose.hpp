#pragma once

#include <map>

#include "stringalg/functors.hpp"

namespace stringalg {

int default_factor_cap();  // 12, overridable via STRINGALG_FACTOR_CAP

// Indecomposable direct sum decomposition of a k[T,T^{-1}]-module given by an
// invertible matrix: (g, r, multiplicity) with g monic irreducible, g(0) != 0.
struct LaurentBlock {
  Poly g;
  int power;
  std::size_t mult;
};
std::vector<LaurentBlock> laurent_decompose(const Matrix& t, int q_degree_cap);

struct StringEntry {
  Word word;  // canonical finite or trivial word
  std::size_t mult;
};
struct BandEntry {
  Word word;  // canonical primitive periodic word
  Poly g;
  int power;
  std::size_t mult;
};
struct DecompositionReport {
  std::vector<StringEntry> strings;
  std::vector<BandEntry> bands;
  std::map<std::string, std::size_t> audit;  // per-vertex dimension totals
};

DecompositionReport decompose(const Representation& m, int q_degree_cap = default_factor_cap());

bool reports_equal(const StringAlgebra& alg, const DecompositionReport& a, const DecompositionReport& b);

bool krs_check(const Representation& m1, const Representation& m2, int q_degree_cap = default_factor_cap());

// Explicit isomorphism N -> M where N is the direct sum named by the report.
struct Certificate {
  bool ok = false;
  std::string diagnostics;
  std::vector<Matrix> theta;  // per vertex, dim_M(v) x dim_N(v)
};
Certificate certify(const Representation& m, const DecompositionReport& report,
                    int q_degree_cap = default_factor_cap());

// The direct sum named by a report (used by certify and the tests).
Representation report_module(std::shared_ptr<const StringAlgebra> alg, const FieldSpec& f,
                             const DecompositionReport& report);

}  // namespace stringalg
