#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace comax {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raw element of a finite field: its index in the field's canonical order.
///
/// For q = p^k the index is sum(a_i * p^i) over the polynomial-basis
/// coefficients, so index order is lexicographic on the coefficient vector
/// read from the highest degree down, and zero is always index 0.
struct Elem {
  std::uint16_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Arithmetic context for F_q, q = p^k, in a polynomial basis over F_p.
///
/// Addition, multiplication, and inversion are tabulated at construction,
/// so every operation is a table lookup. Fields are immutable and shared by
/// pointer; two fields compare equal iff p, k and the modulus agree.
class Field {
public:
  static constexpr int kMaxOrder = 256;

  /// Builds F_{p^k}. If `modulus` is omitted for k > 1, the smallest monic
  /// irreducible polynomial of degree k is chosen (smallest by the same
  /// index order used for elements, so t^2+1 for F_9 and t^3+t+1 for F_8).
  /// `modulus` lists the k low-order coefficients, lowest degree first; the
  /// leading coefficient 1 is implicit.
  static std::shared_ptr<const Field> make(int p, int k = 1,
                                           std::optional<std::vector<int>> modulus = std::nullopt);

  /// Parses a designation "p^k", "p", or a bare prime power such as "4".
  static std::shared_ptr<const Field> from_designation(std::string_view text);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  bool is_odd() const { return p_ != 2; }

  /// Low-order modulus coefficients (lowest degree first); empty for k = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  /// "3" or "2^2".
  std::string designation() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long long value) const;
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const { return Elem{add_[index(a, b)]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[index(a, b)]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.code]}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Euler criterion a^((q-1)/2) == 1; zero counts as a square.
  /// Throws for even q, where the square/nonsquare split is not used.
  bool is_square(Elem a) const;

  /// All q elements in canonical order, zero first.
  std::vector<Elem> elements() const;

  /// Integer for prime fields, "a0+a1*t+a2*t^2..." otherwise.
  std::string format(Elem a) const;
  /// Accepts the `format` output; a bare integer is read as a constant.
  Elem parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

private:
  Field(int p, int k, std::vector<int> modulus);

  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a.code) * static_cast<std::size_t>(q_) + b.code;
  }

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int n);

/// True iff the monic polynomial with the given low-order coefficients
/// (lowest degree first, implicit leading 1) is irreducible over F_p.
/// Exhaustive trial division by every monic polynomial of degree <= k/2.
bool is_irreducible_over_prime_field(int p, std::span<const int> low_coeffs);

/// An element bound to its field. Mixing fields throws.
class FieldElement {
public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}
  FieldElement(FieldPtr field, long long integer)
      : field_(std::move(field)), value_(field_->from_int(integer)) {}

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_.code == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
  bool is_square() const { return field_->is_square(value_); }

  std::string to_string() const { return field_->format(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
  const Field& common(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

/// All elements of `field` as bound FieldElements, zero first.
std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

} // namespace comax
