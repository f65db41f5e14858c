#pragma once

#include "comax/lie_algebra.hpp"

#include <string>
#include <string_view>

namespace comax {

/// Syntax or semantic error in a structure-constants file.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Parses the text format
///
///     field p^k
///     dim n
///     bracket i j : c_1 ... c_n
///
/// with basis indices 1..n, i < j, `#` comments, and unlisted brackets
/// zero. The result is validated; axiom violations throw Error with the
/// offending triples.
AlgebraPtr parse_algebra_text(std::string_view text, std::string name = {});
AlgebraPtr load_algebra_file(const std::string& path);

/// Inverse of parse_algebra_text: one bracket line per nonzero [e_i, e_j].
std::string format_algebra_text(const LieAlgebra& algebra);

} // namespace comax
