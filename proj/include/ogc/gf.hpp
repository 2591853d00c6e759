#pragma once

// Exact arithmetic in small finite fields F_q, q = p^e.
//
// An element is stored as its canonical integer encoding in [0, q): the
// base-p digits of the integer are the polynomial coefficients, lowest
// degree first.  Addition is digitwise mod p; multiplication reduces modulo
// the field's monic irreducible polynomial.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ogc::gf {

struct Elem {
  std::uint32_t rep = 0;

  constexpr bool is_zero() const noexcept { return rep == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  /// Coefficients low-to-high, monic, length e + 1.
  std::vector<std::uint32_t> irreducible{0, 1};

  std::uint32_t q() const noexcept;
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Returns (p, e) if q = p^e with p prime and e >= 1.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// True iff `poly` (low-to-high, monic) is irreducible over F_p.  Exhaustive
/// trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// The shipped default spec for order q.  Primes use x; the non-prime orders
/// 4, 8, 9, 16, 25, 27, 32, 49 use Conway polynomials; other prime powers get
/// the lexicographically first monic irreducible polynomial.
FieldSpec default_spec(std::uint32_t q);

/// Spec for order q with an explicit irreducible polynomial.
FieldSpec make_spec(std::uint32_t q, std::vector<std::uint32_t> poly);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr std::uint32_t kMaxTableOrder = 4096;

  /// Validates `spec` and builds the arithmetic tables.
  static FieldPtr make(FieldSpec spec);
  static FieldPtr of_order(std::uint32_t q);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t e() const noexcept { return spec_.e; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return spec_.e == 1; }
  bool is_even() const noexcept { return spec_.p == 2; }
  bool uses_tables() const noexcept { return !log_.empty(); }

  bool same_as(const Field& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;
  /// Checked conversion of a canonical encoding.
  Elem element(std::uint64_t rep) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const noexcept;
  bool is_square(Elem a) const noexcept;

  /// All q elements in ascending encoding order.
  std::vector<Elem> elements() const;
  /// A generator of the multiplicative group.
  Elem primitive() const noexcept { return primitive_; }

 private:
  explicit Field(FieldSpec spec);

  Elem mul_schoolbook(Elem a, Elem b) const noexcept;

  FieldSpec spec_;
  std::uint32_t q_;
  Elem primitive_{};
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<std::uint32_t> exp_;  // exp_[i], i in [0, 2(q-1))
};

/// An element bundled with its field; operations check that fields agree.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  FieldElement(FieldPtr field, std::uint64_t rep);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::uint32_t rep() const noexcept { return value_.rep; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t n);
bool is_square(const FieldElement& a);
std::vector<FieldElement> elements(const FieldPtr& field);

}  // namespace ogc::gf
