#include "stringalg/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace stringalg {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

FieldSpec parse_field_string(const std::string& s) {
  if (s == "Q" || s == "q") return FieldSpec::Q();
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    std::string num = s.substr(1);
    if (!num.empty() && num[0] == 'p' && num.size() > 2 && num[1] == ':') num = num.substr(2);
    try {
      return FieldSpec::Fp(std::stoll(num));
    } catch (const std::invalid_argument&) {
    }
  }
  throw parse_error("cannot parse field '" + s + "' (use Q or F<p>)");
}

Scalar parse_scalar_string(const FieldSpec& f, const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw parse_error("empty scalar literal");
  auto slash = s.find('/');
  if (f.kind == FieldKind::rationals) {
    try {
      if (slash == std::string::npos) return Scalar::rational(BigRat(BigInt(s)));
      return Scalar::rational(BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))));
    } catch (const std::exception&) {
      throw parse_error("cannot parse rational '" + text + "'");
    }
  }
  if (slash != std::string::npos) throw parse_error("fraction literal over a prime field");
  try {
    return Scalar::of_int(f, std::stoll(s));
  } catch (const std::exception&) {
    throw parse_error("cannot parse residue '" + text + "'");
  }
}

namespace {

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) return parse_field_string(j.get<std::string>());
  if (j.is_object() && j.contains("Fp")) return FieldSpec::Fp(j["Fp"].get<std::int64_t>());
  throw parse_error("field must be \"Q\" or {\"Fp\": p}");
}

json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldKind::rationals) return "Q";
  return json{{"Fp", f.p}};
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
  if (j.is_number_integer()) return Scalar::of_int(f, j.get<std::int64_t>());
  if (j.is_string()) return parse_scalar_string(f, j.get<std::string>());
  throw parse_error("matrix entries must be integers or \"a/b\" strings");
}

json scalar_to_json(const Scalar& s) {
  if (s.field().kind == FieldKind::prime) return s.res();
  return s.to_string();
}

Matrix matrix_from_json(const FieldSpec& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw parse_error("matrix literal must be a nested list");
  if (j.size() != rows) throw parse_error("matrix has wrong number of rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw parse_error("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(f, j[i][c]);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::shared_ptr<const StringAlgebra> algebra_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("algebra file must be a JSON object");
  Quiver q;
  for (const auto& v : j.at("vertices")) {
    if (v.is_string())
      q.vertices.push_back(v.get<std::string>());
    else
      q.vertices.push_back(std::to_string(v.get<std::int64_t>()));
  }
  for (const auto& a : j.at("arrows")) {
    auto as_name = [](const json& x) {
      return x.is_string() ? x.get<std::string>() : std::to_string(x.get<std::int64_t>());
    };
    q.arrows.push_back(Arrow{a.at("name").get<std::string>(), as_name(a.at("head")), as_name(a.at("tail"))});
  }
  std::vector<ZeroRelation> rho;
  if (j.contains("relations"))
    for (const auto& rel : j["relations"]) {
      ZeroRelation r;
      for (const auto& name : rel) r.push_back(name.get<std::string>());
      rho.push_back(std::move(r));
    }
  if (j.contains("signs")) {
    std::map<std::string, int> signs;
    for (auto it = j["signs"].begin(); it != j["signs"].end(); ++it)
      signs[it.key()] = it.value().get<int>();
    return std::make_shared<StringAlgebra>(std::move(q), std::move(rho), std::move(signs));
  }
  return std::make_shared<StringAlgebra>(std::move(q), std::move(rho));
}

}  // namespace

std::shared_ptr<const StringAlgebra> algebra_from_json_text(const std::string& text) {
  return algebra_from_json(parse_json(text));
}

std::shared_ptr<const StringAlgebra> algebra_from_file(const std::string& path) {
  return algebra_from_json_text(read_file(path));
}

Representation representation_from_json_text(const std::string& text, const std::string& base_dir) {
  json j = parse_json(text);
  if (!j.is_object()) throw parse_error("representation file must be a JSON object");
  std::shared_ptr<const StringAlgebra> alg;
  const json& ja = j.at("algebra");
  if (ja.is_string()) {
    std::filesystem::path p(ja.get<std::string>());
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    alg = algebra_from_file(p.string());
  } else {
    alg = algebra_from_json(ja);
  }
  FieldSpec f = field_from_json(j.at("field"));
  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it) {
    int v = alg->quiver().vertex_index(it.key());
    if (v < 0) throw parse_error("dims references unknown vertex '" + it.key() + "'");
    dims[v] = it.value().get<std::size_t>();
  }
  std::vector<Matrix> action;
  for (int a = 0; a < alg->arrow_count(); ++a) {
    const Arrow& ar = alg->arrow(a);
    std::size_t rows = dims[alg->quiver().vertex_index(ar.head)];
    std::size_t cols = dims[alg->quiver().vertex_index(ar.tail)];
    if (j.contains("action") && j["action"].contains(ar.name))
      action.push_back(matrix_from_json(f, j["action"][ar.name], rows, cols));
    else
      action.emplace_back(f, rows, cols);
  }
  return Representation(std::move(alg), f, std::move(dims), std::move(action));
}

Representation representation_from_file(const std::string& path) {
  return representation_from_json_text(read_file(path), std::filesystem::path(path).parent_path().string());
}

std::string representation_to_json_text(const Representation& rep, bool pretty) {
  const StringAlgebra& alg = rep.alg();
  json ja;
  ja["vertices"] = json::array();
  for (int v = 0; v < alg.vertex_count(); ++v) ja["vertices"].push_back(alg.vertex_name(v));
  ja["arrows"] = json::array();
  for (int a = 0; a < alg.arrow_count(); ++a)
    ja["arrows"].push_back(json{{"name", alg.arrow(a).name}, {"head", alg.arrow(a).head}, {"tail", alg.arrow(a).tail}});
  ja["relations"] = json::array();
  for (const auto& rel : alg.relations()) {
    json r = json::array();
    for (int a : rel) r.push_back(alg.arrow(a).name);
    ja["relations"].push_back(r);
  }
  json signs;
  for (const auto& [k, v] : alg.sign_map()) signs[k] = v;
  ja["signs"] = signs;

  json j;
  j["algebra"] = ja;
  j["field"] = field_to_json(rep.field());
  json dims;
  for (int v = 0; v < alg.vertex_count(); ++v) dims[alg.vertex_name(v)] = rep.dim(v);
  j["dims"] = dims;
  json act;
  for (int a = 0; a < alg.arrow_count(); ++a) act[alg.arrow(a).name] = matrix_to_json(rep.action(a));
  j["action"] = act;
  return pretty ? j.dump(2) : j.dump();
}

GradedWindow graded_from_json_text(const std::string& text, bool has_window_override, int lo, int hi) {
  json j = parse_json(text);
  FieldSpec f = field_from_json(j.at("field"));
  if (!has_window_override) {
    if (!j.contains("window")) throw parse_error("graded file needs a \"window\": [a, b]");
    lo = j["window"][0].get<int>();
    hi = j["window"][1].get<int>();
  }
  std::vector<std::size_t> dims;
  for (const auto& d : j.at("dims")) dims.push_back(d.get<std::size_t>());
  if (dims.size() != static_cast<std::size_t>(hi - lo + 1))
    throw parse_error("graded dims length does not match the window");
  auto read_maps = [&](const char* key) {
    std::vector<Matrix> maps;
    if (!j.contains(key)) {
      for (std::size_t k = 0; k + 1 < dims.size(); ++k) maps.emplace_back(f, dims[k + 1], dims[k]);
      return maps;
    }
    std::size_t k = 0;
    for (const auto& mj : j[key]) {
      std::size_t rows = k + 1 < dims.size() ? dims[k + 1] : 0;
      std::size_t cols = k < dims.size() ? dims[k] : 0;
      if (k + 1 >= dims.size()) {
        // map exiting the window: accept any shape, only zeroness matters
        if (!mj.is_array()) throw parse_error("graded map literal must be a nested list");
        bool zero = true;
        for (const auto& row : mj)
          for (const auto& e : row)
            if (!scalar_from_json(f, e).is_zero()) zero = false;
        maps.emplace_back(f, zero ? 0 : 1, zero ? 0 : 1);
        if (!zero) maps.back().at(0, 0) = Scalar::one(f);
      } else {
        maps.push_back(matrix_from_json(f, mj, rows, cols));
      }
      ++k;
    }
    return maps;
  };
  return graded_ingest(f, lo, hi, dims, read_maps("x"), read_maps("y"));
}

GradedWindow graded_from_file(const std::string& path, bool has_window_override, int lo, int hi) {
  return graded_from_json_text(read_file(path), has_window_override, lo, hi);
}

namespace {

Word word_from_tokens(const StringAlgebra& alg, const std::vector<std::string>& toks) {
  std::vector<Letter> ls;
  for (const auto& t : toks) ls.push_back(alg.parse_letter(t));
  return Word::finite(alg, std::move(ls));
}

Word trivial_from_literal(const StringAlgebra& alg, const std::string& s) {
  // 1_<vertex>_<+|->
  if (s.size() < 4 || s.rfind("1_", 0) != 0) throw parse_error("bad trivial word literal '" + s + "'");
  char sgn = s.back();
  if (s[s.size() - 2] != '_' || (sgn != '+' && sgn != '-'))
    throw parse_error("bad trivial word literal '" + s + "'");
  std::string vname = s.substr(2, s.size() - 4);
  int v = alg.quiver().vertex_index(vname);
  if (v < 0) throw parse_error("unknown vertex '" + vname + "' in trivial word literal");
  return Word::trivial(alg, v, sgn == '+' ? +1 : -1);
}

}  // namespace

Word parse_word_literal(const StringAlgebra& alg, const std::string& text) {
  std::string s = text;
  auto strip = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
  };
  strip(s);
  if (s.rfind("periodic:", 0) == 0) {
    auto toks = split_ws(s.substr(9));
    std::vector<Letter> ls;
    for (const auto& t : toks) ls.push_back(alg.parse_letter(t));
    return Word::periodic(alg, std::move(ls));
  }
  if (s.rfind("eventually:", 0) == 0) {
    std::string rest = s.substr(11);
    auto bar = rest.find('|');
    if (bar == std::string::npos) throw parse_error("eventually-periodic literal needs '<prefix> | <period>'");
    std::vector<Letter> pre, per;
    for (const auto& t : split_ws(rest.substr(0, bar))) pre.push_back(alg.parse_letter(t));
    for (const auto& t : split_ws(rest.substr(bar + 1))) per.push_back(alg.parse_letter(t));
    return Word::ev_periodic(alg, std::move(pre), std::move(per));
  }
  if (s.rfind("1_", 0) == 0 && s.find(' ') == std::string::npos) return trivial_from_literal(alg, s);
  auto toks = split_ws(s);
  if (toks.empty()) throw parse_error("empty word literal");
  return word_from_tokens(alg, toks);
}

namespace {

// "<letters>", "<letters> % <period>", or "ladder: <letters> % <period> @ <step>"
std::pair<std::vector<Letter>, TailPattern> parse_half(const StringAlgebra& alg, std::string s) {
  TailPattern tail;
  bool ladder = false;
  if (s.rfind("ladder:", 0) == 0) {
    ladder = true;
    s = s.substr(7);
  }
  int step = 1;
  auto at = s.find('@');
  if (at != std::string::npos) {
    step = std::stoi(s.substr(at + 1));
    s = s.substr(0, at);
  }
  std::vector<Letter> prefix, period;
  auto pct = s.find('%');
  std::string pre_str = pct == std::string::npos ? s : s.substr(0, pct);
  std::string per_str = pct == std::string::npos ? "" : s.substr(pct + 1);
  for (const auto& t : split_ws(pre_str)) prefix.push_back(alg.parse_letter(t));
  for (const auto& t : split_ws(per_str)) period.push_back(alg.parse_letter(t));
  if (period.empty()) {
    tail.kind = TailPattern::Kind::none;
  } else if (ladder) {
    tail.kind = TailPattern::Kind::ladder;
    tail.letters = period;
    tail.ladder_step = step;
  } else {
    tail.kind = TailPattern::Kind::periodic;
    tail.letters = period;
  }
  return {prefix, tail};
}

// Ladder continuation: shift the integer suffix of each arrow name.
std::optional<Letter> shift_letter(const StringAlgebra& alg, const Letter& l, int shift) {
  const std::string& name = alg.arrow(l.arrow).name;
  std::size_t pos = name.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) --pos;
  if (pos == name.size()) throw parse_error("ladder pattern needs arrows with integer suffixes ('" + name + "')");
  int idx = std::stoi(name.substr(pos));
  std::string shifted = name.substr(0, pos) + std::to_string(idx + shift);
  int a = alg.quiver().arrow_index(shifted);
  if (a < 0) return std::nullopt;
  return Letter{a, l.inv};
}

// Materialize the first letters of a half (prefix then tail pattern), as far
// as the quiver window allows.
std::vector<Letter> materialize_half(const StringAlgebra& alg, const std::vector<Letter>& prefix,
                                     const TailPattern& tail, int periods, bool* complete) {
  std::vector<Letter> letters = prefix;
  if (complete) *complete = true;
  if (tail.kind == TailPattern::Kind::periodic) {
    for (int rep = 0; rep < periods; ++rep) letters.insert(letters.end(), tail.letters.begin(), tail.letters.end());
  } else if (tail.kind == TailPattern::Kind::ladder) {
    for (int rep = 0; rep < periods; ++rep) {
      for (const auto& l : tail.letters) {
        auto sl = shift_letter(alg, l, rep * tail.ladder_step);
        if (!sl) {
          if (complete) *complete = false;
          return letters;
        }
        letters.push_back(*sl);
      }
    }
  }
  return letters;
}

void validate_half(const StringAlgebra& alg, const std::vector<Letter>& prefix, const TailPattern& tail) {
  bool complete = true;
  std::vector<Letter> letters = materialize_half(alg, prefix, tail, tail.kind == TailPattern::Kind::periodic ? 3 : 2,
                                                 &complete);
  if (tail.kind == TailPattern::Kind::ladder && letters.size() < prefix.size() + tail.letters.size())
    throw parse_error("ladder pattern does not fit the quiver window (need at least one full period)");
  if (!letters.empty() && !is_word_letters(alg, letters))
    throw domain_error("half of the two-sided word is not a word");
}

}  // namespace

std::variant<Word, TwoSidedWord> parse_props_literal(const StringAlgebra& alg, const std::string& text) {
  std::string s = text;
  if (s.rfind("twosided:", 0) == 0) {
    std::string rest = s.substr(9);
    auto sep = rest.find("||");
    if (sep == std::string::npos) throw parse_error("two-sided literal needs '<left> || <right>'");
    TwoSidedWord w;
    auto [lp, lt] = parse_half(alg, rest.substr(0, sep));
    auto [rp, rt] = parse_half(alg, rest.substr(sep + 2));
    w.left_prefix = lp;
    w.left_tail = lt;
    w.right_prefix = rp;
    w.right_tail = rt;
    validate_half(alg, lp, lt);
    validate_half(alg, rp, rt);
    // junction window: the left half reads outward, so its letters invert
    // back into C_{<=0}
    std::vector<Letter> lmat = materialize_half(alg, lp, lt, 1, nullptr);
    std::vector<Letter> rmat = materialize_half(alg, rp, rt, 1, nullptr);
    std::vector<Letter> window;
    std::size_t take = std::min<std::size_t>(lmat.size(), alg.max_relation_length());
    for (std::size_t i = take; i > 0; --i) window.push_back(lmat[i - 1].inverse());
    std::size_t rtake = std::min<std::size_t>(rmat.size(), alg.max_relation_length());
    for (std::size_t i = 0; i < rtake; ++i) window.push_back(rmat[i]);
    if (!window.empty() && !is_word_letters(alg, window))
      throw domain_error("two-sided word fails the word conditions at the junction");
    return w;
  }
  return parse_word_literal(alg, text);
}

std::string report_to_json_text(const StringAlgebra& alg, const DecompositionReport& report, bool pretty) {
  json j;
  j["strings"] = json::array();
  for (const auto& s : report.strings)
    j["strings"].push_back(json{{"word", word_to_string(alg, s.word)}, {"mult", s.mult}});
  j["bands"] = json::array();
  if (!report.bands.empty()) j["field"] = field_to_json(report.bands.front().g.field());
  for (const auto& b : report.bands)
    j["bands"].push_back(json{{"word", word_to_string(alg, b.word)},
                              {"poly", b.g.to_string()},
                              {"power", b.power},
                              {"mult", b.mult}});
  json audit;
  for (const auto& [k, v] : report.audit) audit[k] = v;
  j["audit"] = audit;
  return pretty ? j.dump(2) : j.dump();
}

DecompositionReport report_from_json_text(const StringAlgebra& alg, const std::string& text) {
  json j = parse_json(text);
  DecompositionReport report;
  FieldSpec qf = FieldSpec::Q();  // polynomial literals carry their own field below
  for (const auto& s : j.at("strings"))
    report.strings.push_back(StringEntry{parse_word_literal(alg, s.at("word").get<std::string>()),
                                         s.at("mult").get<std::size_t>()});
  if (j.contains("field")) qf = field_from_json(j["field"]);
  for (const auto& b : j.at("bands"))
    report.bands.push_back(BandEntry{parse_word_literal(alg, b.at("word").get<std::string>()),
                                     parse_poly(qf, b.at("poly").get<std::string>()),
                                     b.at("power").get<int>(), b.at("mult").get<std::size_t>()});
  if (j.contains("audit"))
    for (auto it = j["audit"].begin(); it != j["audit"].end(); ++it)
      report.audit[it.key()] = it.value().get<std::size_t>();
  return report;
}

std::string certificate_to_json_text(const StringAlgebra& alg, const Certificate& cert, bool pretty) {
  json j;
  j["ok"] = cert.ok;
  if (!cert.ok) j["diagnostics"] = cert.diagnostics;
  json thetas;
  for (int v = 0; v < alg.vertex_count() && cert.ok; ++v) thetas[alg.vertex_name(v)] = matrix_to_json(cert.theta[v]);
  j["theta"] = thetas;
  return pretty ? j.dump(2) : j.dump();
}

std::vector<Scalar> parse_vector_literal(const FieldSpec& f, const std::string& text) {
  std::vector<Scalar> out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back(parse_scalar_string(f, cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace stringalg
