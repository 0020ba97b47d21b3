#pragma once

#include <stdexcept>
#include <string>

namespace stringalg {

// Violation of a mathematical precondition or axiom in otherwise
// well-formed input (bad string algebra, sign condition, field mismatch...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unparsable files, unknown arrow names, bad literals.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure (dimension audit, unverifiable covering word).
// Reaching this indicates a bug, not a property of the input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace stringalg
