#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "bchcov/bitlin.hpp"
#include "bchcov/codes.hpp"
#include "bchcov/gf2m.hpp"

namespace bchcov {

/// Element (a, b) of GF(2^m)^2: a BCH(2,m) syndrome, a column (x, x^3), or a
/// cover target.
struct SyndromePair {
  Felt a;
  Felt b;

  friend constexpr auto operator<=>(const SyndromePair&, const SyndromePair&) = default;
};

constexpr SyndromePair operator+(SyndromePair x, SyndromePair y) { return {x.a + y.a, x.b + y.b}; }

/// 2m-bit coordinate vector: a in bits 0..m-1, b in bits m..2m-1.
constexpr std::uint64_t pack(SyndromePair p, int m) {
  return std::uint64_t{p.a.bits} | (std::uint64_t{p.b.bits} << m);
}
constexpr SyndromePair unpack(std::uint64_t v, int m) {
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  return {Felt{static_cast<std::uint32_t>(v & mask)}, Felt{static_cast<std::uint32_t>(v >> m)}};
}
BitVec to_bitvec(SyndromePair p, int m);

/// The column (x, x^3).
inline SyndromePair column_of(const FieldSpec& f, Felt x) { return {x, f.cube(x)}; }

/// Columns (alpha^j, alpha^(3j)), j = 0..2^m-2, of the BCH(2,m) parity-check
/// over GF(2^m), alpha the field generator.
class ColumnSystem {
 public:
  explicit ColumnSystem(FieldSpec field);

  const FieldSpec& field() const { return field_; }
  int m() const { return field_.m(); }
  std::size_t n() const { return columns_.size(); }
  const std::vector<SyndromePair>& columns() const { return columns_; }
  const SyndromePair& column(std::size_t j) const { return columns_[j]; }
  /// Column j as a packed 2m-bit vector.
  std::uint64_t packed(std::size_t j) const { return packed_[j]; }
  const std::vector<std::uint64_t>& packed_columns() const { return packed_; }
  /// Index j with alpha^j = x (x nonzero).
  std::size_t index_of(Felt x) const { return index_of_[x.bits]; }

 private:
  FieldSpec field_;
  std::vector<SyndromePair> columns_;
  std::vector<std::uint64_t> packed_;
  std::vector<std::size_t> index_of_;
};

/// Requires m <= 16.
ColumnSystem build_columns(const FieldSpec& f);

/// The me x n binary parity-check of BCH(e,m) for e in {1, 2}: block i
/// (i = 1, 3) holds the polynomial-basis coordinates of alpha^(ij).
/// Requires m <= 12.
BitMatrix binary_parity_check(const FieldSpec& f, int e = 2);

/// BCH(e,m) as a binary code with binary_parity_check as parity-check.
/// Requires m <= 6.
BinaryCode bch_code(const FieldSpec& f, int e);

/// Sum of the columns at the word's support.
SyndromePair syndrome(const ColumnSystem& cs, const BitVec& word);

}  // namespace bchcov
