#include "comax/finite_field.hpp"

#include <charconv>
#include <sstream>

namespace comax {

namespace {

using Poly = std::vector<int>; // lowest degree first

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod_p(int a, int p) {
  // p is small; Fermat is clearer than extended Euclid here.
  long long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a nonzero g over F_p.
Poly poly_rem(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int lead_inv = inverse_mod_p(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int factor = static_cast<int>(static_cast<long long>(f.back()) * lead_inv % p);
    for (int i = 0; i <= dg; ++i) {
      f[i + shift] = mod_p(f[i + shift] - static_cast<long long>(factor) * g[i], p);
    }
    trim(f);
  }
  return f;
}

Poly code_to_poly(int code, int p, int k) {
  Poly out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

int ipow(int base, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

} // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_over_prime_field(int p, std::span<const int> low_coeffs) {
  const int k = static_cast<int>(low_coeffs.size());
  if (k < 1) return false;
  Poly f(low_coeffs.begin(), low_coeffs.end());
  for (auto& c : f) c = mod_p(c, p);
  f.push_back(1);
  if (k == 1) return true;
  for (int d = 1; d <= k / 2; ++d) {
    const int count = ipow(p, d);
    for (int code = 0; code < count; ++code) {
      Poly g = code_to_poly(code, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  const auto q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  std::vector<Poly> polys(q);
  for (int c = 0; c < q_; ++c) polys[c] = code_to_poly(c, p_, k_);
  auto to_code = [&](const Poly& f) {
    int code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + (i < static_cast<int>(f.size()) ? f[i] : 0);
    return static_cast<std::uint16_t>(code);
  };

  Poly full_modulus = modulus_;
  full_modulus.push_back(1);

  for (int a = 0; a < q_; ++a) {
    Poly n(k_);
    for (int i = 0; i < k_; ++i) n[i] = mod_p(-polys[a][i], p_);
    neg_[a] = to_code(n);
    for (int b = 0; b < q_; ++b) {
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[index(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)})] = to_code(s);

      Poly prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
        }
      }
      if (k_ > 1) prod = poly_rem(prod, full_modulus, p_);
      mul_[index(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)})] = to_code(prod);
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[static_cast<std::size_t>(a) * q + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
}

std::shared_ptr<const Field> Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field degree must be at least 1, got " + std::to_string(k));
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error("field order exceeds the supported maximum " + std::to_string(kMaxOrder));
  }

  std::vector<int> mod;
  if (k > 1) {
    if (modulus) {
      if (static_cast<int>(modulus->size()) == k + 1) {
        if (mod_p(modulus->back(), p) != 1) throw Error("modulus must be monic");
        modulus->pop_back();
      }
      if (static_cast<int>(modulus->size()) != k) {
        throw Error("modulus must have degree " + std::to_string(k));
      }
      for (int c : *modulus) mod.push_back(mod_p(c, p));
      if (!is_irreducible_over_prime_field(p, mod)) throw Error("supplied modulus is reducible");
    } else {
      const int count = ipow(p, k);
      for (int code = 0; code < count; ++code) {
        Poly cand = code_to_poly(code, p, k);
        if (is_irreducible_over_prime_field(p, cand)) {
          mod = std::move(cand);
          break;
        }
      }
    }
  }
  return std::shared_ptr<const Field>(new Field(p, k, std::move(mod)));
}

std::shared_ptr<const Field> Field::from_designation(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error("bad field designation '" + std::string(text) + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    // A bare prime power such as "4" is read as 2^2.
    const int q = parse_int(text);
    for (int p = 2; p <= q; ++p) {
      if (!is_prime(p) || q % p != 0) continue;
      int k = 0;
      for (int r = q; r > 1 && r % p == 0; r /= p) ++k;
      int power = 1;
      for (int i = 0; i < k; ++i) power *= p;
      if (power == q) return make(p, k);
      break;
    }
    return make(q, 1);
  }
  return make(parse_int(text.substr(0, caret)), parse_int(text.substr(caret + 1)));
}

std::string Field::designation() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

Elem Field::from_int(long long value) const { return Elem{static_cast<std::uint16_t>(mod_p(value, p_))}; }

Elem Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) throw Error("too many coefficients for F_" + designation());
  int code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) code = code * p_ + mod_p(coeffs[i], p_);
  return Elem{static_cast<std::uint16_t>(code)};
}

std::vector<int> Field::coeffs(Elem a) const { return code_to_poly(a.code, p_, k_); }

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw Error("inverse of zero in F_" + designation());
  return Elem{inv_[a.code]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Field::is_square(Elem a) const {
  if (!is_odd()) throw Error("square classes are only defined here for odd q; F_" + designation() + " is even");
  if (a.code == 0) return true;
  return pow(a, static_cast<std::uint64_t>(q_ - 1) / 2) == one();
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (int c = 0; c < q_; ++c) out[c] = Elem{static_cast<std::uint16_t>(c)};
  return out;
}

std::string Field::format(Elem a) const {
  if (k_ == 1) return std::to_string(a.code);
  const auto c = coeffs(a);
  std::string out = std::to_string(c[0]);
  for (int i = 1; i < k_; ++i) {
    out += "+" + std::to_string(c[i]) + "*t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Elem Field::parse(std::string_view text) const {
  auto fail = [&]() -> Elem { throw Error("cannot parse '" + std::string(text) + "' as an element of F_" + designation()); };
  if (text.empty()) return fail();
  std::vector<int> c(k_, 0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') negative = true;
      else if (text[pos] != '+') return fail();
      ++pos;
    }
    first = false;
    long long coeff = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), coeff);
    if (ec != std::errc{}) return fail();
    pos = static_cast<std::size_t>(ptr - text.data());
    int power = 0;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      if (pos >= text.size() || text[pos] != 't') return fail();
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + text.size(), power);
        if (ec2 != std::errc{}) return fail();
        pos = static_cast<std::size_t>(p2 - text.data());
      }
    }
    if (power < 0 || power >= k_) return fail();
    c[power] = mod_p(c[power] + (negative ? -coeff : coeff), p_);
  }
  return from_coeffs(c);
}

const Field& FieldElement::common(const FieldElement& o) const {
  if (!(*field_ == *o.field_)) {
    throw Error("mixed fields: F_" + field_->designation() + " and F_" + o.field_->designation());
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, common(o).add(value_, o.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, common(o).sub(value_, o.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, common(o).mul(value_, o.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, common(o).div(value_, o.value_)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.common(b);
  return a.value_ == b.value_;
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (Elem e : field->elements()) out.emplace_back(field, e);
  return out;
}

} // namespace comax
