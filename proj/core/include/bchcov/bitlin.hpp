#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bchcov {

/// Bit-vector over GF(2) of fixed width. Coordinate i is stored in bit i.
class BitVec {
 public:
  static constexpr std::size_t kMaxWidth = 4096;

  BitVec() = default;
  explicit BitVec(std::size_t width);

  /// Low `width` bits of `value`, coordinate i = bit i.
  static BitVec from_u64(std::uint64_t value, std::size_t width);
  /// Parses "0b0110" with coordinate 0 first.
  static BitVec parse(std::string_view text);

  std::size_t width() const { return width_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool is_zero() const;
  std::size_t weight() const;
  /// Smallest set coordinate, or -1 for the zero vector.
  long lowest_set() const;

  /// Requires width <= 64.
  std::uint64_t to_u64() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// "0b" followed by coordinates 0..width-1.
  std::string to_string() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;
  /// Lexicographic order of the coordinate strings (coordinate 0 most significant).
  friend bool lex_less(const BitVec& a, const BitVec& b);

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row list of equal-width bit-vectors.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t width);
  BitMatrix(std::size_t width, std::vector<BitVec> rows);
  static BitMatrix from_u64(std::size_t width, std::span<const std::uint64_t> rows);
  /// Row strings in "0b..." form; width taken from the first row.
  static BitMatrix parse(std::span<const std::string> rows);

  std::size_t width() const { return width_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  void add_row(BitVec row);

  BitVec column(std::size_t j) const;
  BitMatrix transposed() const;
  /// Rows packed into words; requires width <= 64.
  std::vector<std::uint64_t> packed_rows() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<BitVec> rows_;
};

struct Echelon {
  BitMatrix rref;  ///< Nonzero rows only, pivots (lowest set coordinate) ascending.
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Equal row spaces give identical results.
Echelon rref_rank(const BitMatrix& m);

/// Incrementally maintained row basis for span membership.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t width) : width_(width) {}
  explicit SpanBasis(const BitMatrix& m);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return basis_.size(); }
  /// Adds v; returns false when v was already in the span.
  bool insert(const BitVec& v);
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

 private:
  std::size_t width_;
  std::vector<BitVec> basis_;  // distinct lowest set coordinates
  std::vector<std::size_t> pivots_;
};

/// True iff v is a GF(2)-combination of m's rows. Throws on width mismatch.
bool in_span(const BitMatrix& m, const BitVec& v);

/// All 2^rank elements of a row space.
class SpanSet {
 public:
  static constexpr std::size_t kMaxRank = 24;
  static constexpr std::size_t kMaxTableWidth = 24;

  std::size_t width() const { return width_; }
  std::size_t size() const { return elements_.size(); }
  /// Elements in Gray-code order over the echelon basis, starting at 0.
  const std::vector<BitVec>& elements() const { return elements_; }
  /// Membership bit-table indexed by packed value; empty when width > 24.
  const std::vector<bool>& table() const { return table_; }
  bool contains(const BitVec& v) const;

 private:
  friend SpanSet enumerate_span(const BitMatrix& m);
  std::size_t width_ = 0;
  std::vector<BitVec> elements_;
  std::vector<bool> table_;
};

/// Throws PreconditionError when rank(m) > 24.
SpanSet enumerate_span(const BitMatrix& m);

/// Helpers over rows packed into 64-bit words (width <= 64), used by the
/// search loops.
namespace packed {

/// Row basis with distinct leading (highest) bits, kept in descending order,
/// so that reduction is a chain of `v = min(v, v ^ b)`.
class XorBasis {
 public:
  std::size_t rank() const { return n_; }
  std::uint64_t reduce(std::uint64_t v) const {
    for (std::size_t i = 0; i < n_; ++i) v = std::min(v, v ^ rows_[i]);
    return v;
  }
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    std::size_t pos = n_;
    while (pos > 0 && rows_[pos - 1] < v) {
      rows_[pos] = rows_[pos - 1];
      --pos;
    }
    rows_[pos] = v;
    ++n_;
    return true;
  }

 private:
  std::uint64_t rows_[64] = {};
  std::size_t n_ = 0;
};

/// Canonical reduced echelon form: pivot = lowest set bit, rows sorted by
/// pivot ascending, zero rows dropped.
std::vector<std::uint64_t> rref(std::span<const std::uint64_t> rows);

std::size_t rank(std::span<const std::uint64_t> rows);

/// Number of dim-k subspaces of GF(2)^n (as a double, for work estimates).
double gaussian_binomial(int n, int k);

/// Calls fn(std::span<const std::uint64_t>) once per k-dimensional subspace
/// of GF(2)^n with its canonical rref rows. Order: pivot sets
/// lexicographically, then free-entry assignments in counting order.
template <class Fn>
void for_each_subspace(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> piv(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k));
  // free_pos[i] lists the positions row i may set beyond its pivot.
  std::vector<std::vector<int>> free_pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t pivot_mask = 0;
    for (int p : piv) pivot_mask |= std::uint64_t{1} << p;
    int total_free = 0;
    for (int i = 0; i < k; ++i) {
      auto& fp = free_pos[static_cast<std::size_t>(i)];
      fp.clear();
      for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j) {
        if (!((pivot_mask >> j) & 1u)) fp.push_back(j);
      }
      total_free += static_cast<int>(fp.size());
    }
    const std::uint64_t assignments = std::uint64_t{1} << total_free;
    for (std::uint64_t a = 0; a < assignments; ++a) {
      std::uint64_t bits = a;
      for (int i = 0; i < k; ++i) {
        std::uint64_t r = std::uint64_t{1} << piv[static_cast<std::size_t>(i)];
        for (int j : free_pos[static_cast<std::size_t>(i)]) {
          if (bits & 1u) r |= std::uint64_t{1} << j;
          bits >>= 1;
        }
        rows[static_cast<std::size_t>(i)] = r;
      }
      fn(std::span<const std::uint64_t>(rows));
    }
    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace packed

}  // namespace bchcov
