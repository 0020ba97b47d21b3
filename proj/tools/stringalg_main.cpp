#include <CLI11.hpp>

#include <iostream>

#include "stringalg/io.hpp"

using namespace stringalg;

namespace {

int sign_from_string(const std::string& s) {
  if (s == "+1" || s == "+" || s == "1") return +1;
  if (s == "-1" || s == "-") return -1;
  throw parse_error("sign must be +1 or -1");
}

void print_algebra_summary(const StringAlgebra& alg) {
  std::cout << "signs:\n";
  for (const auto& [letter, sgn] : alg.sign_map())
    std::cout << "  " << letter << " -> " << (sgn > 0 ? "+1" : "-1") << "\n";
  std::cout << "primitive cycles:\n";
  auto cycles = primitive_cycles(alg);
  if (cycles.empty()) std::cout << "  (none)\n";
  for (const auto& pc : cycles) {
    std::cout << "  ";
    for (std::size_t i = 0; i < pc.arrows.size(); ++i)
      std::cout << (i ? " " : "") << alg.arrow(pc.arrows[i]).name;
    std::cout << "   (head " << alg.vertex_name(pc.head_vertex) << ")\n";
  }
}

std::map<int, std::size_t> parse_budget(const StringAlgebra& alg, const std::vector<std::string>& entries) {
  std::map<int, std::size_t> budget;
  for (const auto& e : entries) {
    auto eq = e.find('=');
    if (eq == std::string::npos) throw parse_error("budget entries look like vertex=count");
    int v = alg.quiver().vertex_index(e.substr(0, eq));
    if (v < 0) throw parse_error("unknown vertex '" + e.substr(0, eq) + "' in budget");
    budget[v] = std::stoul(e.substr(eq + 1));
  }
  return budget;
}

void print_predicates(const WordPredicates& p, bool as_json) {
  if (as_json) {
    std::cout << "{\"eventually_inverse\": " << (p.ev_inverse_c ? "true" : "false")
              << ", \"eventually_inverse_of_inverse\": " << (p.ev_inverse_cinv ? "true" : "false")
              << ", \"vertex_finite\": " << (p.vertex_finite_c ? "true" : "false")
              << ", \"vertex_finite_of_inverse\": " << (p.vertex_finite_cinv ? "true" : "false")
              << ", \"finitely_generated\": " << (p.finitely_generated ? "true" : "false")
              << ", \"finitely_controlled\": " << (p.finitely_controlled ? "true" : "false") << "}\n";
    return;
  }
  std::cout << "eventually inverse (C):      " << (p.ev_inverse_c ? "yes" : "no") << "\n"
            << "eventually inverse (C^-1):   " << (p.ev_inverse_cinv ? "yes" : "no") << "\n"
            << "vertex-finite (C):           " << (p.vertex_finite_c ? "yes" : "no") << "\n"
            << "vertex-finite (C^-1):        " << (p.vertex_finite_cinv ? "yes" : "no") << "\n"
            << "finitely generated:          " << (p.finitely_generated ? "yes" : "no") << "\n"
            << "finitely controlled:         " << (p.finitely_controlled ? "yes" : "no") << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"stringalg: exact decomposition of string algebra representations"};
  app.require_subcommand(1);
  int cap = default_factor_cap();
  app.add_option("--cap", cap, "factorization degree cap over Q");

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check the string algebra axioms and print signs/cycles");
  std::string val_file;
  cmd_validate->add_option("algebra", val_file, "algebra JSON file")->required();

  // words
  auto* cmd_words = app.add_subcommand("words", "enumerate words up to equivalence within a budget");
  std::string words_file;
  std::vector<std::string> budget_entries;
  bool words_json = false;
  cmd_words->add_option("algebra", words_file)->required();
  cmd_words->add_option("--budget", budget_entries, "per-vertex index budget, vertex=count")->required();
  cmd_words->add_flag("--json", words_json);

  // module-string
  auto* cmd_mstr = app.add_subcommand("module-string", "build a string module M(C)");
  std::string mstr_file, mstr_word, mstr_field = "Q", mstr_out;
  std::uint64_t mstr_seed = 0;
  cmd_mstr->add_option("algebra", mstr_file)->required();
  cmd_mstr->add_option("--word", mstr_word, "finite word literal")->required();
  cmd_mstr->add_option("--field", mstr_field, "Q or F<p>");
  cmd_mstr->add_option("--scramble-seed", mstr_seed, "conjugate by a seeded random basis change");
  cmd_mstr->add_option("-o,--output", mstr_out, "write the representation JSON here");

  // module-band
  auto* cmd_mband = app.add_subcommand("module-band", "build a band module M(E, k[T]/g^r)");
  std::string mband_file, mband_word, mband_poly, mband_field = "Q", mband_out;
  int mband_power = 1;
  std::uint64_t mband_seed = 0;
  cmd_mband->add_option("algebra", mband_file)->required();
  cmd_mband->add_option("--word", mband_word, "periodic word literal")->required();
  cmd_mband->add_option("--poly", mband_poly, "monic irreducible g, e.g. \"T - 2\"")->required();
  cmd_mband->add_option("--power", mband_power);
  cmd_mband->add_option("--field", mband_field);
  cmd_mband->add_option("--scramble-seed", mband_seed);
  cmd_mband->add_option("-o,--output", mband_out);

  // eval-functor
  auto* cmd_eval = app.add_subcommand("eval-functor", "evaluate filtration or refined functors");
  std::string eval_rep, eval_pm, eval_b, eval_d;
  bool eval_json = false;
  cmd_eval->add_option("representation", eval_rep)->required();
  cmd_eval->add_option("--plus-minus", eval_pm, "word literal for C+-/C-");
  cmd_eval->add_option("--refined-b", eval_b, "word B of the pair");
  cmd_eval->add_option("--refined-d", eval_d, "word D of the pair");
  cmd_eval->add_flag("--json", eval_json);

  // cover
  auto* cmd_cover = app.add_subcommand("cover", "covering search from a vector");
  std::string cov_rep, cov_vertex, cov_vec, cov_sign = "+1";
  cmd_cover->add_option("representation", cov_rep)->required();
  cmd_cover->add_option("--vertex", cov_vertex)->required();
  cmd_cover->add_option("--vector", cov_vec, "comma-separated entries")->required();
  cmd_cover->add_option("--sign", cov_sign);

  // decompose
  auto* cmd_dec = app.add_subcommand("decompose", "decompose into string and band modules");
  std::string dec_rep;
  bool dec_json = false, dec_cert = false;
  cmd_dec->add_option("representation", dec_rep)->required();
  cmd_dec->add_flag("--json", dec_json);
  cmd_dec->add_flag("--certify", dec_cert);

  // certify
  auto* cmd_cert = app.add_subcommand("certify", "decompose and emit an explicit isomorphism");
  std::string cert_rep;
  bool cert_json = false;
  cmd_cert->add_option("representation", cert_rep)->required();
  cmd_cert->add_flag("--json", cert_json);

  // krs-check
  auto* cmd_krs = app.add_subcommand("krs-check", "compare decompositions of two representations");
  std::string krs_a, krs_b;
  cmd_krs->add_option("first", krs_a)->required();
  cmd_krs->add_option("second", krs_b)->required();

  // graded
  auto* cmd_graded = app.add_subcommand("graded", "ingest a graded k[x,y]/(xy)-module window");
  std::string graded_file;
  std::vector<int> graded_window;
  bool graded_dec = false, graded_json = false;
  cmd_graded->add_option("file", graded_file)->required();
  cmd_graded->add_option("--window", graded_window, "degree range a b")->expected(2);
  cmd_graded->add_flag("--decompose", graded_dec);
  cmd_graded->add_flag("--json", graded_json);

  // word-props
  auto* cmd_props = app.add_subcommand("word-props", "finiteness predicates of a word");
  std::string props_file, props_word;
  bool props_json = false;
  cmd_props->add_option("algebra", props_file)->required();
  cmd_props->add_option("word", props_word)->required();
  cmd_props->add_flag("--json", props_json);

  CLI11_PARSE(app, argc, argv);

  if (*cmd_validate) {
    auto alg = algebra_from_file(val_file);  // construction validates
    std::cout << "ok\n";
    print_algebra_summary(*alg);
    return 0;
  }

  if (*cmd_words) {
    auto alg = algebra_from_file(words_file);
    auto words = enumerate_words(*alg, parse_budget(*alg, budget_entries));
    if (words_json) {
      std::string sep;
      std::cout << "[";
      for (const auto& w : words) {
        std::cout << sep << "\"" << word_to_string(*alg, w) << "\"";
        sep = ", ";
      }
      std::cout << "]\n";
    } else {
      std::cout << "# " << words.size() << " classes\n";
      for (const auto& w : words) std::cout << word_to_string(*alg, w) << "\n";
    }
    return 0;
  }

  auto emit_rep = [&](const Representation& rep, std::uint64_t seed, const std::string& out) {
    const Representation* final_rep = &rep;
    std::optional<Scrambled> scr;
    if (seed != 0) {
      scr = scramble(rep, seed);
      final_rep = &scr->rep;
    }
    std::string text = representation_to_json_text(*final_rep, true);
    if (out.empty()) {
      std::cout << "# seed: " << seed << "\n" << text << "\n";
    } else {
      std::ofstream f(out);
      f << text << "\n";
      std::cout << "# seed: " << seed << "\nwrote " << out << "\n";
    }
  };

  if (*cmd_mstr) {
    auto alg = algebra_from_file(mstr_file);
    FieldSpec f = parse_field_string(mstr_field);
    Word w = parse_word_literal(*alg, mstr_word);
    emit_rep(string_module(alg, f, w).rep, mstr_seed, mstr_out);
    return 0;
  }

  if (*cmd_mband) {
    auto alg = algebra_from_file(mband_file);
    FieldSpec f = parse_field_string(mband_field);
    Word w = parse_word_literal(*alg, mband_word);
    BandCoefficient coeff{parse_poly(f, mband_poly), mband_power};
    emit_rep(band_module(alg, f, w, coeff).rep, mband_seed, mband_out);
    return 0;
  }

  if (*cmd_eval) {
    Representation rep = representation_from_file(eval_rep);
    const StringAlgebra& alg = rep.alg();
    if (!eval_pm.empty()) {
      Word c = parse_word_literal(alg, eval_pm);
      FiltrationPair pm = plus_minus(rep, c);
      if (eval_json) {
        std::cout << "{\"dim_plus\": " << pm.plus.dim() << ", \"dim_minus\": " << pm.minus.dim() << "}\n";
      } else {
        std::cout << "C+ basis: " << pm.plus.basis().to_string() << "\n"
                  << "C- basis: " << pm.minus.basis().to_string() << "\n";
      }
      return 0;
    }
    if (eval_b.empty() || eval_d.empty())
      throw parse_error("eval-functor needs --plus-minus or both --refined-b and --refined-d");
    RefinedValue rv = refined(rep, parse_word_literal(alg, eval_b), parse_word_literal(alg, eval_d));
    if (eval_json) {
      std::cout << "{\"dim\": " << rv.dim << (rv.t_action ? ", \"periodic\": true" : "") << "}\n";
    } else {
      std::cout << "dim F = " << rv.dim << "\n";
      if (rv.t_action) std::cout << "T action: " << rv.t_action->to_string() << "\n";
    }
    return 0;
  }

  if (*cmd_cover) {
    Representation rep = representation_from_file(cov_rep);
    const StringAlgebra& alg = rep.alg();
    int v = alg.quiver().vertex_index(cov_vertex);
    if (v < 0) throw parse_error("unknown vertex '" + cov_vertex + "'");
    auto vec = parse_vector_literal(rep.field(), cov_vec);
    Word c = covering_search(rep, v, vec, sign_from_string(cov_sign));
    std::cout << word_to_string(alg, c) << "\n";
    return 0;
  }

  if (*cmd_dec || *cmd_cert) {
    std::string file = *cmd_dec ? dec_rep : cert_rep;
    bool as_json = *cmd_dec ? dec_json : cert_json;
    bool want_cert = *cmd_cert || dec_cert;
    Representation rep = representation_from_file(file);
    DecompositionReport report = decompose(rep, cap);
    std::cout << report_to_json_text(rep.alg(), report, !as_json) << "\n";
    if (want_cert) {
      Certificate c = certify(rep, report, cap);
      if (!c.ok) throw internal_error("certification failed: " + c.diagnostics);
      std::cout << certificate_to_json_text(rep.alg(), c, !as_json) << "\n";
    }
    return 0;
  }

  if (*cmd_krs) {
    bool same = krs_check(representation_from_file(krs_a), representation_from_file(krs_b), cap);
    std::cout << (same ? "isomorphic: yes" : "isomorphic: no") << "\n";
    return same ? 0 : 1;
  }

  if (*cmd_graded) {
    GradedWindow gw = graded_window.empty()
                          ? graded_from_file(graded_file, false, 0, 0)
                          : graded_from_file(graded_file, true, graded_window[0], graded_window[1]);
    for (const auto& w : gw.warnings) std::cout << "# warning: " << w << "\n";
    std::cout << representation_to_json_text(gw.rep, !graded_json) << "\n";
    if (graded_dec) std::cout << report_to_json_text(*gw.alg, decompose(gw.rep, cap), !graded_json) << "\n";
    return 0;
  }

  if (*cmd_props) {
    auto alg = algebra_from_file(props_file);
    auto parsed = parse_props_literal(*alg, props_word);
    WordPredicates p = std::holds_alternative<Word>(parsed)
                           ? word_predicates(*alg, std::get<Word>(parsed))
                           : word_predicates(*alg, std::get<TwoSidedWord>(parsed));
    print_predicates(p, props_json);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
