#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bchcov/bch.hpp"
#include "bchcov/gf2m.hpp"

namespace bchcov {

using BigInt = boost::multiprecision::cpp_int;

enum class ScanOrder { kSequential, kRandomized };

/// Targets (a_i, b_i) written as (x, x^3) + (y_i, y_i^3) + (z_i, z_i^3),
/// reduced to a set of distinct nonzero columns with mod-2 coefficients.
struct CoverSolution {
  Felt x;
  std::vector<Felt> ys;
  std::vector<Felt> zs;
  /// Distinct nonzero column values c, standing for (c, c^3).
  std::vector<Felt> columns;
  /// coefficients[i][j] is 1 when column j appears in target i's sum.
  std::vector<std::vector<std::uint8_t>> coefficients;
  /// Candidates x examined before acceptance.
  std::uint64_t candidates_scanned = 0;
};

/// Constant term of (a + x) y^2 + (a^2 + x^2) y + (a x^2 + a^2 x + a^3 + b).
Felt quadratic_constant(const FieldSpec& f, Felt a, Felt b, Felt x);

/// Scans x over GF(2^m)* minus {a_i} and accepts the first x for which every
/// quadratic in y_i is solvable. nullopt when no x is accepted.
/// Sequential order follows generator powers alpha^0, alpha^1, ...
std::optional<CoverSolution> cover_2kplus1(const FieldSpec& f, std::span<const SyndromePair> targets,
                                           ScanOrder order = ScanOrder::kSequential,
                                           std::uint64_t seed = 0);

/// Independent check: each target lies in the F2-span of the solution's
/// columns and equals the sum selected by its coefficient vector.
bool verify_solution(const FieldSpec& f, std::span<const SyndromePair> targets,
                     const CoverSolution& sol);

/// Number of ordered tuples (x, y_1..y_k, z_1..z_k) with a_i = x + y_i + z_i
/// and b_i = x^3 + y_i^3 + z_i^3 for all i. Requires m <= 14, 1 <= k <= 4.
BigInt count_solutions(const FieldSpec& f, std::span<const SyndromePair> targets);

/// Whether N >= 2^m - k 2^k - 2 sqrt(2^m) ((k-1) 2^k + 1), compared exactly.
bool meets_count_lower_bound(const BigInt& count, int k, int m);
/// The same lower bound as a floating-point value, for reporting.
double count_lower_bound(int k, int m);

}  // namespace bchcov
