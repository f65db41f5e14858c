#include "comax/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace comax {

std::string ValidationReport::describe() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) {
    switch (v.kind) {
      case AxiomViolation::Kind::alternating:
        os << "alternating fails: [e" << v.i << ",e" << v.i << "] != 0\n";
        break;
      case AxiomViolation::Kind::antisymmetry:
        os << "antisymmetry fails: [e" << v.i << ",e" << v.j << "] != -[e" << v.j << ",e" << v.i << "]\n";
        break;
      case AxiomViolation::Kind::jacobi:
        os << "Jacobi fails on (e" << v.i << ",e" << v.j << ",e" << v.k << ")\n";
        break;
    }
  }
  return os.str();
}

LieAlgebra::LieAlgebra(FieldPtr field, int dim, std::vector<Elem> constants, std::string name)
    : field_(std::move(field)), dim_(dim), c_(std::move(constants)), name_(std::move(name)) {
  if (dim_ < 0) throw Error("negative algebra dimension");
  if (c_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_) {
    throw Error("structure-constant tensor has " + std::to_string(c_.size()) + " entries, expected " +
                std::to_string(dim_ * dim_ * dim_));
  }
  for (Elem e : c_) {
    if (e.code >= field_->order()) throw Error("structure constant outside the field");
  }
}

LieAlgebra LieAlgebra::from_brackets(FieldPtr field, int dim, std::span<const BracketSpec> brackets,
                                     std::string name) {
  std::vector<Elem> c(static_cast<std::size_t>(dim) * dim * dim, field->zero());
  auto at = [&](int i, int j, int m) -> Elem& { return c[(static_cast<std::size_t>(i) * dim + j) * dim + m]; };
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) throw Error("bracket index out of range");
    if (b.i == b.j) throw Error("bracket [e_i, e_i] must not be listed");
    if (static_cast<int>(b.coeffs.size()) != dim) throw Error("bracket coefficient vector has wrong length");
    for (int m = 0; m < dim; ++m) {
      at(b.i, b.j, m) = b.coeffs[m];
      at(b.j, b.i, m) = field->neg(b.coeffs[m]);
    }
  }
  return LieAlgebra(std::move(field), dim, std::move(c), std::move(name));
}

Vector LieAlgebra::bracket(std::span<const Elem> u, std::span<const Elem> v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_) {
    throw Error("bracket: vector length does not match algebra dimension " + std::to_string(dim_));
  }
  const Field& f = *field_;
  Vector out(dim_, f.zero());
  for (int i = 0; i < dim_; ++i) {
    if (u[i].code == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j].code == 0 || i == j) continue;
      const Elem w = f.mul(u[i], v[j]);
      const auto b = basis_bracket(i, j);
      for (int m = 0; m < dim_; ++m) {
        if (b[m].code != 0) out[m] = f.add(out[m], f.mul(w, b[m]));
      }
    }
  }
  return out;
}

Vector LieAlgebra::basis_vector(int i) const {
  Vector v(dim_, field_->zero());
  v.at(i) = field_->one();
  return v;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport report;
  const Field& f = *field_;
  const Elem zero = f.zero();
  for (int i = 0; i < dim_; ++i) {
    for (int m = 0; m < dim_; ++m) {
      if (constant(i, i, m) != zero) {
        report.violations.push_back({AxiomViolation::Kind::alternating, i, i, -1});
        break;
      }
    }
    for (int j = i + 1; j < dim_; ++j) {
      for (int m = 0; m < dim_; ++m) {
        if (constant(i, j, m) != f.neg(constant(j, i, m))) {
          report.violations.push_back({AxiomViolation::Kind::antisymmetry, i, j, -1});
          break;
        }
      }
    }
  }
  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] on all triples.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        const Vector ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        const Vector t1 = bracket(ei, bracket(ej, ek));
        const Vector t2 = bracket(ej, bracket(ek, ei));
        const Vector t3 = bracket(ek, bracket(ei, ej));
        for (int m = 0; m < dim_; ++m) {
          if (f.add(f.add(t1[m], t2[m]), t3[m]) != zero) {
            report.violations.push_back({AxiomViolation::Kind::jacobi, i, j, k});
            break;
          }
        }
      }
    }
  }
  return report;
}

int LieAlgebra::derived_dim() const {
  std::vector<Elem> m;
  int rows = 0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const auto b = basis_bracket(i, j);
      m.insert(m.end(), b.begin(), b.end());
      ++rows;
    }
  }
  if (rows == 0) return 0;
  return rref_in_place(*field_, m, rows, dim_);
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e.code == 0; });
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  return *field_ == *other.field_ && dim_ == other.dim_ && c_ == other.c_;
}

int rref_in_place(const Field& f, std::vector<Elem>& m, int rows, int cols) {
  auto at = [&](int r, int c) -> Elem& { return m[static_cast<std::size_t>(r) * cols + c]; };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, col).code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const Elem scale = f.inv(at(rank, col));
    for (int c = col; c < cols; ++c) at(rank, c) = f.mul(at(rank, c), scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || at(r, col).code == 0) continue;
      const Elem factor = at(r, col);
      for (int c = col; c < cols; ++c) at(r, c) = f.sub(at(r, c), f.mul(factor, at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

Subspace Subspace::span(AlgebraPtr algebra, std::span<const Vector> vectors) {
  const int n = algebra->dim();
  std::vector<Elem> m;
  m.reserve(vectors.size() * n);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw Error("vector length does not match algebra dimension");
    m.insert(m.end(), v.begin(), v.end());
  }
  const int rank = rref_in_place(algebra->field(), m, static_cast<int>(vectors.size()), n);
  m.resize(static_cast<std::size_t>(rank) * n);
  return Subspace(std::move(algebra), rank, std::move(m));
}

Subspace Subspace::zero(AlgebraPtr algebra) { return Subspace(std::move(algebra), 0, {}); }

Subspace Subspace::whole(AlgebraPtr algebra) {
  const int n = algebra->dim();
  std::vector<Elem> m(static_cast<std::size_t>(n) * n, algebra->field().zero());
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = algebra->field().one();
  return Subspace(std::move(algebra), n, std::move(m));
}

Subspace Subspace::from_rref(AlgebraPtr algebra, int rows, std::vector<Elem> rref) {
  if (rref.size() != static_cast<std::size_t>(rows) * algebra->dim()) throw Error("RREF matrix has wrong size");
  return Subspace(std::move(algebra), rows, std::move(rref));
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (int r = 0; r < rows_; ++r) {
    auto row_view = row(r);
    out.emplace_back(row_view.begin(), row_view.end());
  }
  return out;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (int r = 0; r < rows_; ++r) {
    auto rv = row(r);
    const auto it = std::find_if(rv.begin(), rv.end(), [](Elem e) { return e.code != 0; });
    out.push_back(static_cast<int>(it - rv.begin()));
  }
  return out;
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  const int n = ambient_dim();
  if (static_cast<int>(v.size()) != n) throw Error("vector length does not match algebra dimension");
  const Field& f = algebra_->field();
  // Reduce v against the RREF rows using their pivots.
  Vector w(v.begin(), v.end());
  const auto piv = pivots();
  for (int r = 0; r < rows_; ++r) {
    const Elem factor = w[piv[r]];
    if (factor.code == 0) continue;
    auto rv = row(r);
    for (int c = 0; c < n; ++c) w[c] = f.sub(w[c], f.mul(factor, rv[c]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e.code == 0; });
}

bool Subspace::is_subalgebra() const {
  const LieAlgebra& L = *algebra_;
  for (int a = 0; a < rows_; ++a) {
    for (int b = a + 1; b < rows_; ++b) {
      if (!contains_vector(L.bracket(row(a), row(b)))) return false;
    }
  }
  return true;
}

std::string Subspace::to_string() const {
  const Field& f = algebra_->field();
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out += ";";
    auto rv = row(r);
    for (int c = 0; c < ambient_dim(); ++c) {
      if (c > 0) out += " ";
      out += f.format(rv[c]);
    }
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

namespace {

void require_same_algebra(const Subspace& a, const Subspace& b) {
  if (a.algebra() != b.algebra() && !a.algebra()->same_structure(*b.algebra())) {
    throw Error("subspaces belong to different algebras");
  }
}

} // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_algebra(a, b);
  std::vector<Vector> vs = a.basis();
  auto bb = b.basis();
  vs.insert(vs.end(), bb.begin(), bb.end());
  return Subspace::span(a.algebra(), vs);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_same_algebra(a, b);
  // Zassenhaus: rows [a | a] and [b | 0]; after RREF the rows with a zero
  // left half carry a basis of the intersection in their right half.
  const int n = a.ambient_dim();
  const int rows = a.dim() + b.dim();
  const Field& f = a.algebra()->field();
  std::vector<Elem> m(static_cast<std::size_t>(rows) * 2 * n, f.zero());
  for (int r = 0; r < a.dim(); ++r) {
    auto rv = a.row(r);
    for (int c = 0; c < n; ++c) {
      m[static_cast<std::size_t>(r) * 2 * n + c] = rv[c];
      m[static_cast<std::size_t>(r) * 2 * n + n + c] = rv[c];
    }
  }
  for (int r = 0; r < b.dim(); ++r) {
    auto rv = b.row(r);
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(a.dim() + r) * 2 * n + c] = rv[c];
  }
  const int rank = rref_in_place(f, m, rows, 2 * n);
  std::vector<Vector> meet;
  for (int r = 0; r < rank; ++r) {
    const auto* base = m.data() + static_cast<std::size_t>(r) * 2 * n;
    if (std::all_of(base, base + n, [](Elem e) { return e.code == 0; })) meet.emplace_back(base + n, base + 2 * n);
  }
  return Subspace::span(a.algebra(), meet);
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_same_algebra(outer, inner);
  if (inner.dim() > outer.dim()) return false;
  for (int r = 0; r < inner.dim(); ++r) {
    if (!outer.contains_vector(inner.row(r))) return false;
  }
  return true;
}

Subspace generated_subalgebra(const Subspace& s) {
  const LieAlgebra& L = *s.algebra();
  Subspace current = s;
  while (true) {
    std::vector<Vector> vs = current.basis();
    for (int a = 0; a < current.dim(); ++a) {
      for (int b = a + 1; b < current.dim(); ++b) vs.push_back(L.bracket(current.row(a), current.row(b)));
    }
    Subspace next = Subspace::span(s.algebra(), vs);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

Subspace generated_by(const Subspace& a, const Subspace& b) { return generated_subalgebra(sum(a, b)); }

} // namespace comax
