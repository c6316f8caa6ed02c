#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bchcov/bitlin.hpp"

namespace bchcov {

/// Binary linear [n, k] code given by a full-rank generator matrix and,
/// optionally, the parity-check matrix it was built from.
class BinaryCode {
 public:
  /// Dependent generator rows are dropped, so k = rank(gen).
  static BinaryCode from_generator(const BitMatrix& gen);
  /// Code = right kernel of `par`; the parity-check is kept as given.
  static BinaryCode from_parity_check(const BitMatrix& par);

  std::size_t n() const { return gen_.width(); }
  std::size_t k() const { return gen_.num_rows(); }
  const BitMatrix& generator() const { return gen_; }
  /// The stored parity-check, if the code was built from one.
  const std::optional<BitMatrix>& stored_parity_check() const { return par_; }
  /// A full-rank (n - k) x n parity-check (stored one reduced, or computed).
  BitMatrix parity_check() const;

  bool contains(const BitVec& word) const;
  /// True iff every generator row of `sub` lies in this code.
  bool contains(const BinaryCode& sub) const;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return rref_rank(a.gen_).rref == rref_rank(b.gen_).rref;
  }

 private:
  BinaryCode(BitMatrix gen, std::optional<BitMatrix> par)
      : gen_(std::move(gen)), par_(std::move(par)) {}

  BitMatrix gen_;
  std::optional<BitMatrix> par_;
};

/// Basis of {x : M x^T = 0}.
BitMatrix null_space(const BitMatrix& m);

/// [2^r - 1, 2^r - 1 - r, 3] Hamming code; parity-check column j is the
/// binary expansion of j + 1.
BinaryCode hamming_code(int r);

/// Minimum weight of a nonzero codeword. Requires k <= 24 and n <= 64.
int min_distance(const BinaryCode& c);

/// r-th generalized Hamming weight by enumerating r-dimensional subcodes
/// through their rref coefficient matrices. Throws WorkLimitError when the
/// number of subcodes exceeds `max_subcodes`.
int ghw(const BinaryCode& c, int r, double max_subcodes = 1e9);

/// Weight hierarchy of the length 2^m - 1 Hamming code: 1..2^m-1 with the
/// powers of two removed. Element access is O(log) and never materializes
/// the sequence.
class HammingGhwSequence {
 public:
  explicit HammingGhwSequence(int m);

  int m() const { return m_; }
  std::uint64_t size() const;
  /// d_r for 1 <= r <= size().
  std::uint64_t at(std::uint64_t r) const;
  /// Materialized copy; refuses m > 24.
  std::vector<std::uint64_t> to_vector() const;

 private:
  int m_;
};

HammingGhwSequence hamming_ghw_sequence(int m);

struct CodeClass {
  BinaryCode representative;  ///< Lexicographically least rref over column permutations.
  int min_distance = 0;
  std::size_t class_size = 0;  ///< Number of distinct codes in the permutation orbit.
};

struct Classification {
  int n = 0, k = 0, d = 0;
  std::size_t codes_enumerated = 0;  ///< All k-dim subspaces of GF(2)^n.
  std::size_t codes_matching = 0;    ///< Those with minimum distance >= d.
  std::vector<CodeClass> classes;    ///< Sorted by representative.
};

/// All [n, k, >= d] binary codes up to permutation equivalence.
/// Requires 1 <= k <= n <= 8, k <= 5 and 1 <= d <= n.
Classification classify_small(int n, int k, int d);

/// Lexicographically least generator rref over all column permutations
/// (n <= 8).
BinaryCode canonical_form(const BinaryCode& c);
bool permutation_equivalent(const BinaryCode& a, const BinaryCode& b);

/// For a [2^r - 2, 2^r - 2 - r] code whose parity-check columns are distinct
/// and nonzero, the single nonzero vector of GF(2)^r missing from the column
/// set. nullopt whenever any hypothesis fails.
std::optional<BitVec> missing_column_certificate(const BinaryCode& c);

}  // namespace bchcov
