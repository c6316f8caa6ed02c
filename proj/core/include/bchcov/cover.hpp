#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bchcov/bch.hpp"
#include "bchcov/codes.hpp"

namespace bchcov {

struct MinCover {
  /// Least t; -1 when the targets are outside the column span.
  int t = 0;
  /// Lexicographically first covering t-subset (column indices, ascending).
  std::vector<std::size_t> witness;
  /// DFS nodes visited while searching.
  std::uint64_t nodes = 0;

  bool reachable() const { return t >= 0; }
};

/// Exact covering search over one column system. Holds the coset-leader
/// weight table of the 2m-bit syndrome space; requires 2 <= m <= 8.
/// Immutable after construction and safe to share between threads.
class CoverEngine {
 public:
  static constexpr int kMaxDegree = 8;
  static constexpr std::size_t kMaxTargets = 6;

  explicit CoverEngine(ColumnSystem cs);

  const ColumnSystem& columns() const { return cs_; }
  int m() const { return cs_.m(); }
  std::size_t n() const { return cs_.n(); }

  /// Fewest columns summing to v (0 for v = 0, -1 if unreachable).
  int leader_weight(std::uint64_t v) const { return leader_[v]; }

  /// Least t such that some t distinct columns span every target.
  MinCover min_cover(std::span<const std::uint64_t> targets) const;
  MinCover min_cover(std::span<const SyndromePair> targets) const;

  /// Whether some t-subset covers the targets, searched by DFS without the
  /// minimality pruning. Used to cross-check min_cover.
  bool covered_at(std::span<const std::uint64_t> targets, int t,
                  std::vector<std::size_t>* witness = nullptr) const;

 private:
  bool search(std::span<const std::uint64_t> target_basis, int t, std::vector<std::size_t>& chosen,
              std::uint64_t& nodes, bool prune_dependent) const;

  ColumnSystem cs_;
  std::vector<std::int8_t> leader_;
};

/// Convenience wrapper building a CoverEngine. Requires 1 <= |targets| <= 6.
MinCover min_cover(const ColumnSystem& cs, std::span<const SyndromePair> targets);

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

struct SearchOptions {
  bool symmetry = true;
  unsigned jobs = 1;
  /// Called from worker threads (serialized) every `progress_interval` items.
  ProgressFn progress;
  std::uint64_t progress_interval = 1000;
};

struct GcrResult {
  int rho = 0;
  int m = 0;
  int r = 0;
  bool symmetry = true;
  /// A worst-case target tuple (basis of the worst span) and its minimal cover.
  std::vector<SyndromePair> witness_targets;
  std::vector<std::size_t> witness_cover;
  /// Target spans (symmetry off) or orbit representatives (on) evaluated.
  std::uint64_t orbits_visited = 0;
  /// Tuples (off) or subspaces (on) enumerated before reduction.
  std::uint64_t enumerated = 0;
  std::uint64_t search_nodes = 0;
};

/// Exact r-th generalized covering radius of BCH(2,m): the maximum of
/// min_cover over all r-tuples of targets in GF(2^m)^2. Feasible for
/// 3 <= m <= 4 with r <= 3, or m = 5 with r <= 2.
GcrResult gcr_exact(const CoverEngine& engine, int r, const SearchOptions& opts = {});
GcrResult gcr_exact(const ColumnSystem& cs, int r, const SearchOptions& opts = {});

enum class Verdict { kNoCoverAtT, kCovered };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct CoverCertificate {
  FieldSpec field;
  std::vector<SyndromePair> targets;
  int t = 0;
  std::uint64_t subsets_checked = 0;
  Verdict verdict = Verdict::kNoCoverAtT;
  std::optional<std::vector<std::size_t>> witness;
};

/// Enumerates t-subsets of columns in lexicographic order, stopping at the
/// first one whose span holds every target. Requires C(n, t) <= 1e8.
CoverCertificate certify_no_cover(const ColumnSystem& cs, std::span<const SyndromePair> targets,
                                  int t);

/// Re-verifies a certificate through BitMatrix span tests, independently of
/// the packed search path.
bool recheck(const CoverCertificate& cert);

struct DccResult {
  int value = 0;
  std::vector<Felt> witness_alphas;
  std::vector<std::size_t> witness_cover;
  std::uint64_t orbits_visited = 0;
};

/// d_r(BCH(2,m), BCH(1,m)) via targets (0, alpha_i) over F2-independent
/// alpha tuples. Requires 1 <= r <= min(4, m), m <= 5.
DccResult d_cc(const CoverEngine& engine, int r, const SearchOptions& opts = {});
DccResult d_cc(const ColumnSystem& cs, int r, const SearchOptions& opts = {});

/// Direct evaluation of d_r(C, C'): max over tuples of C' independent modulo
/// C, min over C-translates of the union support. Requires C in C',
/// dim C' - dim C >= r, n <= 16, dim C' <= 12.
int d_cc_generic(const BinaryCode& c, const BinaryCode& csup, int r);

enum class BoundKind { kSupercode, kCounting, kThreshold };
std::string to_string(BoundKind k);

struct BoundReport {
  BoundKind kind = BoundKind::kSupercode;
  int k_or_r = 0;
  std::optional<int> m;
  std::optional<int> bound;  ///< Absent when the hypothesis fails.
  bool hypothesis_holds = false;
};

/// rho_r(C) >= d_r(C') when dim C' - dim C >= r.
BoundReport supercode_bound(int r, int dim_c, int dim_sup, int ghw_of_sup,
                            std::optional<int> m = std::nullopt);

/// rho_k(BCH(2,m)) >= 2k whenever 2^m (2k-1)! >= 2^(k(2k-1)) (exact integers).
BoundReport counting_bound(int k, int m);

/// Least m with 2^m >= ((k-1) 2^(k+1) + 3)^2, above which
/// rho_k(BCH(2,m)) <= 2k+1. Requires k >= 2.
int threshold_upper(int k);
BoundReport threshold_report(int k, int m);

}  // namespace bchcov
