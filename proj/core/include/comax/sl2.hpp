#pragma once

#include "comax/lie_algebra.hpp"

#include <string>
#include <vector>

namespace comax {

enum class LineKind { nilpotent, split, nonsplit, generic };

std::string to_string(LineKind kind);

/// L has exactly the sl2 structure constants in the basis (x, y, h).
bool is_standard_sl2(const LieAlgebra& algebra);

/// Delta(u) = c^2 + ab for u = a x + b y + c h; u in sl2 has characteristic
/// polynomial t^2 - Delta(u).
Elem sl2_discriminant(const Field& field, std::span<const Elem> u);

/// Nilpotent / split / nonsplit by whether Delta is zero, a nonzero square,
/// or a nonsquare. Throws for even q, non-sl2 algebras, or non-lines.
LineKind classify_line_sl2(const Subspace& line);

/// B = Fx + Fh, then B(alpha) = F(h + alpha x) + F(y + alpha^2/4 x) for
/// alpha in element order. Throws for even q.
std::vector<Subspace> borels_closed_form(const AlgebraPtr& algebra);

/// Number of Borels containing the line, from the quadratic criterion
/// alone: nu = 0 decides B, and B(alpha) contains the line iff
/// nu alpha^2 + 4 alpha - 4 mu = 0 (lambda = 1) or nu alpha^2 = 4 mu
/// (lambda = 0), where the line is spanned by mu x + nu y + lambda h.
int borel_membership_count(const Subspace& line);

/// The same count by direct containment against a given Borel list.
int borel_membership_count_exhaustive(const Subspace& line, const std::vector<Subspace>& borels);

} // namespace comax
