#include "comax/algebra_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace comax {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

} // namespace

AlgebraPtr parse_algebra_text(std::string_view text, std::string name) {
  FieldPtr field;
  std::optional<int> dim;
  std::vector<BracketSpec> brackets;
  std::set<std::pair<int, int>> seen;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "field") {
      if (field) throw ParseError(lineno, "duplicate 'field' line");
      if (toks.size() != 2) throw ParseError(lineno, "expected 'field p^k'");
      try {
        field = Field::from_designation(toks[1]);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (toks[0] == "dim") {
      if (dim) throw ParseError(lineno, "duplicate 'dim' line");
      if (toks.size() != 2) throw ParseError(lineno, "expected 'dim n'");
      dim = parse_int(toks[1], lineno, "a dimension");
      if (*dim < 1) throw ParseError(lineno, "dimension must be positive");
    } else if (toks[0] == "bracket") {
      if (!field || !dim) throw ParseError(lineno, "'field' and 'dim' must precede brackets");
      if (toks.size() < 4 || toks[3] != ":") throw ParseError(lineno, "expected 'bracket i j : c_1 ... c_n'");
      const int i = parse_int(toks[1], lineno, "a basis index");
      const int j = parse_int(toks[2], lineno, "a basis index");
      if (i < 1 || j < 1 || i > *dim || j > *dim) throw ParseError(lineno, "basis index out of range 1.." + std::to_string(*dim));
      if (i >= j) throw ParseError(lineno, "expected i < j");
      if (!seen.insert({i, j}).second) throw ParseError(lineno, "duplicate bracket " + toks[1] + " " + toks[2]);
      if (static_cast<int>(toks.size()) - 4 != *dim)
        throw ParseError(lineno, "expected " + std::to_string(*dim) + " coefficients, got " + std::to_string(toks.size() - 4));
      BracketSpec b{i - 1, j - 1, {}};
      for (std::size_t t = 4; t < toks.size(); ++t) {
        try {
          b.coeffs.push_back(field->parse(toks[t]));
        } catch (const Error& e) {
          throw ParseError(lineno, e.what());
        }
      }
      brackets.push_back(std::move(b));
    } else {
      throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!field) throw ParseError(lineno, "missing 'field' line");
  if (!dim) throw ParseError(lineno, "missing 'dim' line");

  auto algebra = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(field, *dim, brackets, std::move(name)));
  if (const auto report = algebra->validate(); !report.ok()) {
    throw Error("structure constants are not a Lie algebra: " + report.describe());
  }
  return algebra;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), path);
}

std::string format_algebra_text(const LieAlgebra& L) {
  const Field& f = L.field();
  std::ostringstream out;
  if (!L.name().empty()) out << "# " << L.name() << "\n";
  out << "field " << f.designation() << "\n";
  out << "dim " << L.dim() << "\n";
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i + 1; j < L.dim(); ++j) {
      const auto b = L.basis_bracket(i, j);
      bool nonzero = false;
      for (Elem e : b) nonzero = nonzero || e.code != 0;
      if (!nonzero) continue;
      out << "bracket " << i + 1 << " " << j + 1 << " :";
      for (Elem e : b) out << " " << f.format(e);
      out << "\n";
    }
  }
  return out.str();
}

} // namespace comax
