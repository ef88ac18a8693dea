#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boxdot/formula.hpp"

namespace boxdot {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the ASCII formula syntax:
///
///   atoms      identifiers [a-z][a-zA-Z0-9_]*, true, false
///   unary      ~  []  <>  [.]      (tightest; [.]A expands to A & []A)
///   binary     &  then  |  then  ->  (right assoc)  then  <->
///
/// & | and <-> group to the left. The Unicode spellings ¬ □ ◇ ⊡ ∧ ∨ → ↔ ⊤ ⊥
/// are accepted as well.
Formula parse_formula(std::string_view text);

}  // namespace boxdot
