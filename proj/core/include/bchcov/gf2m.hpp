#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bchcov {

/// Element of GF(2^m): coordinates in the polynomial basis {1, x, ..., x^(m-1)}.
/// Bit i is the coefficient of x^i. Only meaningful together with a FieldSpec.
struct Felt {
  std::uint32_t bits = 0;

  constexpr Felt() = default;
  constexpr explicit Felt(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

/// Field addition is coordinate-wise xor and needs no FieldSpec.
constexpr Felt operator+(Felt a, Felt b) { return Felt{a.bits ^ b.bits}; }
constexpr Felt& operator+=(Felt& a, Felt b) {
  a.bits ^= b.bits;
  return a;
}

namespace gf2poly {

// Polynomials over GF(2) packed into a word, bit i = coefficient of x^i.
int degree(std::uint64_t p);
std::uint64_t mod(std::uint64_t a, std::uint64_t b);

/// Smallest-valued nontrivial factor of p, or 0 if p is irreducible.
/// Exhaustive trial division by every polynomial of degree <= deg(p)/2.
std::uint64_t find_factor(std::uint64_t p);

}  // namespace gf2poly

/// Lexicographically smallest primitive polynomial of degree m (2 <= m <= 32).
std::uint64_t default_modulus(int m);

/// Distinct prime divisors of n in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// An explicit model of GF(2^m). Immutable after construction.
class FieldSpec {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 32;

  /// Builds GF(2^m) over the given modulus, or over default_modulus(m).
  /// Throws PreconditionError for m out of range or a modulus that is not
  /// monic of degree m, and ReducibleModulusError when it factors.
  static FieldSpec make(int m, std::optional<std::uint64_t> modulus = std::nullopt);

  int m() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  Felt generator() const { return generator_; }
  /// q = 2^m.
  std::uint64_t size() const { return std::uint64_t{1} << m_; }
  /// q - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return size() - 1; }

  bool contains(Felt a) const { return (std::uint64_t{a.bits} >> m_) == 0; }
  /// Checked conversion from raw coordinates.
  Felt element(std::uint64_t bits) const;

  Felt one() const { return Felt{1}; }
  /// The class of the polynomial x.
  Felt x() const { return Felt{2}; }

  Felt add(Felt a, Felt b) const { return a + b; }
  Felt mul(Felt a, Felt b) const;
  Felt frobenius(Felt a) const { return mul(a, a); }
  Felt cube(Felt a) const { return mul(frobenius(a), a); }
  Felt pow(Felt a, std::uint64_t e) const;
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  /// Unique square root, a^(2^(m-1)).
  Felt sqrt(Felt a) const;

  /// Absolute trace to GF(2).
  int trace(Felt a) const;

  /// Cube test. Always true for odd m; throws PreconditionError for a = 0.
  bool is_cube(Felt a) const;

  /// Roots {w, w + 1} of w^2 + w = c (smaller first), or nullopt when Tr(c) = 1.
  std::optional<std::pair<Felt, Felt>> solve_artin_schreier(Felt c) const;

  /// All roots of x^2 + a x + b in ascending order (0, 1 or 2 of them).
  std::vector<Felt> solve_quadratic(Felt a, Felt b) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order_of(Felt a) const;

  friend bool operator==(const FieldSpec& lhs, const FieldSpec& rhs) {
    return lhs.m_ == rhs.m_ && lhs.modulus_ == rhs.modulus_ && lhs.generator_ == rhs.generator_;
  }

 private:
  FieldSpec(int m, std::uint64_t modulus);
  void check(Felt a) const;

  int m_ = 0;
  std::uint64_t modulus_ = 0;
  Felt generator_{};
  // Tr(a) = parity(a & trace_mask_).
  std::uint32_t trace_mask_ = 0;
  // Echelon basis of the image of w -> w^2 + w, keyed by leading bit.
  std::array<std::uint32_t, kMaxDegree> as_image_{};
  std::array<std::uint32_t, kMaxDegree> as_preimage_{};
};

/// Lowercase hex, e.g. "0x5".
std::string to_hex(Felt a);
std::string to_hex(std::uint64_t bits);
/// Parses "0x..." (or bare hex digits); throws PreconditionError when malformed.
std::uint64_t parse_hex(std::string_view text);
/// parse_hex followed by a range check against the field.
Felt parse_felt(const FieldSpec& f, std::string_view text);

}  // namespace bchcov
