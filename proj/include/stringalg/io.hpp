#pragma once

#include <string>
#include <variant>

#include "stringalg/decompose.hpp"

namespace stringalg {

FieldSpec parse_field_string(const std::string& s);

std::shared_ptr<const StringAlgebra> algebra_from_json_text(const std::string& text);
std::shared_ptr<const StringAlgebra> algebra_from_file(const std::string& path);

Representation representation_from_json_text(const std::string& text, const std::string& base_dir);
Representation representation_from_file(const std::string& path);
std::string representation_to_json_text(const Representation& rep, bool pretty);

GradedWindow graded_from_json_text(const std::string& text, bool has_window_override, int lo, int hi);
GradedWindow graded_from_file(const std::string& path, bool has_window_override, int lo, int hi);

Word parse_word_literal(const StringAlgebra& alg, const std::string& text);
std::variant<Word, TwoSidedWord> parse_props_literal(const StringAlgebra& alg, const std::string& text);

std::string report_to_json_text(const StringAlgebra& alg, const DecompositionReport& report, bool pretty);
DecompositionReport report_from_json_text(const StringAlgebra& alg, const std::string& text);

std::string certificate_to_json_text(const StringAlgebra& alg, const Certificate& cert, bool pretty);

std::vector<Scalar> parse_vector_literal(const FieldSpec& f, const std::string& text);
Scalar parse_scalar_string(const FieldSpec& f, const std::string& text);

}  // namespace stringalg
