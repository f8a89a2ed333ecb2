// Exact arithmetic in GF(q), q = p^r.
//
// Elements are encoded as integers in [0, q): the base-p digits of the
// encoding are the coefficients c0, c1, ... of the residue polynomial
// c0 + c1 x + ... modulo the field's modulus. Zero encodes 0, one encodes 1.
// Multiplication goes through discrete log / antilog tables built from the
// designated primitive element alpha; addition is table driven for q <= 256
// and digit-wise otherwise.

#ifndef GENARCS_GF_HPP
#define GENARCS_GF_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genarcs {

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 14;

class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_ = 0;
};

/// Serialized identity of a field: {p, r, modulus: [c0..cr], alpha}.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, length r + 1, low degree first
  std::uint32_t alpha = 0;             // canonical encoding of the primitive element

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field {
 public:
  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t r() const { return spec_.r; }
  std::uint32_t q() const { return spec_.q; }
  FieldElement alpha() const { return FieldElement{spec_.alpha}; }

  static constexpr FieldElement zero() { return FieldElement{0}; }
  static constexpr FieldElement one() { return FieldElement{1}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (!add_table_.empty()) return FieldElement{add_table_[a.value() * spec_.q + b.value()]};
    return slow_add(a, b);
  }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_table_[a.value()]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return FieldElement{exp_table_[log_table_[a.value()] + log_table_[b.value()]]};
  }
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t n) const;

  /// Discrete log base alpha; a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  /// alpha^k for any k >= 0.
  FieldElement alpha_pow(std::uint64_t k) const {
    return FieldElement{exp_table_[k % (spec_.q - 1)]};
  }

  /// Multiplicative order of a nonzero element.
  std::uint32_t order(FieldElement a) const;

  /// Base-p digits (c0, ..., c_{r-1}) of an element.
  std::vector<std::uint32_t> digits(FieldElement a) const;

  /// Literal used in point syntax: the residue for prime fields, "0", "1",
  /// "a" or "a^k" otherwise.
  std::string format(FieldElement a) const;
  /// Accepts integers (residues for prime fields, canonical encodings for
  /// extensions, negatives reduced mod p), "a", "a^k" and "α^k".
  FieldElement parse(std::string_view text) const;

  friend Field make_field(std::uint32_t p, std::uint32_t r,
                          std::optional<std::vector<std::uint32_t>> modulus,
                          std::optional<std::uint32_t> alpha);

 private:
  Field() = default;
  FieldElement slow_add(FieldElement a, FieldElement b) const;

  FieldSpec spec_;
  std::vector<std::uint16_t> add_table_;  // q*q, only for q <= 256
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> inv_table_;
  std::vector<std::uint32_t> log_table_;  // log_table_[0] unused
  std::vector<std::uint16_t> exp_table_;  // length 2(q-1)
};

/// Builds GF(p^r). Without a modulus, the least monic irreducible of degree r
/// is used (ordered by the base-p integer of (c_{r-1}, ..., c0)); without
/// alpha, the least element of order q-1.
/// Throws std::invalid_argument when p is not prime, r == 0, q exceeds
/// kMaxFieldOrder, the modulus is not monic of degree r or is reducible, or
/// alpha is not primitive.
Field make_field(std::uint32_t p, std::uint32_t r,
                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                 std::optional<std::uint32_t> alpha = std::nullopt);

inline Field make_field(const FieldSpec& spec) {
  return make_field(spec.p, spec.r, spec.modulus, spec.alpha);
}

/// Field of order q with default modulus and primitive element.
/// Throws std::invalid_argument when q is not a prime power.
Field make_field_of_order(std::uint32_t q);

/// All q elements in ascending canonical encoding.
std::vector<FieldElement> elements(const Field& field);

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t h = 0;
};
/// q = p^h with p prime, h >= 1; nullopt otherwise.
std::optional<PrimePower> prime_power(std::uint64_t q);

/// Irreducibility of a monic polynomial over GF(p) by trial division.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace genarcs

#endif  // GENARCS_GF_HPP
