#include "bchcov/cover.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "bchcov/error.hpp"

namespace bchcov {

namespace {

using boost::multiprecision::cpp_int;

// Xor basis over at most 16-bit vectors, leading bits distinct and descending.
class SmallBasis {
 public:
  std::size_t rank() const { return n_; }
  std::uint32_t reduce(std::uint32_t v) const {
    for (std::size_t i = 0; i < n_; ++i) v = std::min(v, v ^ rows_[i]);
    return v;
  }
  bool insert(std::uint32_t v) {
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
  std::span<const std::uint32_t> rows() const { return {rows_, n_}; }

 private:
  std::uint32_t rows_[16] = {};
  std::size_t n_ = 0;
};

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return std::round(r);
}

std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Runs fn(i) for i in [0, count) on `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, const Fn& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

class ProgressTicker {
 public:
  ProgressTicker(const SearchOptions& opts, std::uint64_t total) : opts_(opts), total_(total) {}
  void tick() {
    const auto done = ++done_;
    if (opts_.progress && opts_.progress_interval > 0 &&
        (done % opts_.progress_interval == 0 || done == total_)) {
      const std::lock_guard lock(mu_);
      opts_.progress(done, total_);
    }
  }

 private:
  const SearchOptions& opts_;
  std::uint64_t total_;
  std::atomic<std::uint64_t> done_{0};
  std::mutex mu_;
};

// F2-linear maps on packed vectors, stored as images of the unit vectors.
struct LinearMap {
  std::vector<std::uint64_t> images;
  std::uint64_t apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (std::size_t b = 0; v != 0; ++b, v >>= 1) {
      if (v & 1u) out ^= images[b];
    }
    return out;
  }
};

// Maps (a, b) -> (lambda a^(2^j), lambda^3 b^(2^j)) on the 2m-bit syndrome
// space, or a -> lambda^3 a^(2^j) on GF(2^m) when `second_only`.
std::vector<LinearMap> symmetry_group(const FieldSpec& f, bool second_only) {
  const int m = f.m();
  std::vector<LinearMap> group;
  Felt lambda = f.one();
  for (std::uint64_t i = 0; i < f.group_order(); ++i) {
    const Felt lambda3 = f.cube(lambda);
    for (int j = 0; j < m; ++j) {
      LinearMap g;
      auto frob = [&](Felt x) {
        for (int s = 0; s < j; ++s) x = f.frobenius(x);
        return x;
      };
      for (int b = 0; b < m; ++b) {
        const Felt xb{std::uint32_t{1} << b};
        if (second_only) {
          g.images.push_back(f.mul(lambda3, frob(xb)).bits);
        } else {
          g.images.push_back(f.mul(lambda, frob(xb)).bits);
        }
      }
      if (!second_only) {
        for (int b = 0; b < m; ++b) {
          const Felt xb{std::uint32_t{1} << b};
          g.images.push_back(std::uint64_t{f.mul(lambda3, frob(xb)).bits} << m);
        }
      }
      group.push_back(std::move(g));
    }
    lambda = f.mul(lambda, f.generator());
  }
  return group;
}

// Subspaces of GF(2)^width of dimension dim that are least (as rref row
// sequences) within their orbit under `group`.
std::vector<std::vector<std::uint64_t>> orbit_representatives(int width, int dim,
                                                              const std::vector<LinearMap>& group,
                                                              std::uint64_t& enumerated) {
  std::vector<std::vector<std::uint64_t>> reps;
  std::vector<std::uint64_t> moved(static_cast<std::size_t>(dim));
  packed::for_each_subspace(width, dim, [&](std::span<const std::uint64_t> rows) {
    ++enumerated;
    const std::vector<std::uint64_t> self(rows.begin(), rows.end());
    for (const auto& g : group) {
      for (std::size_t i = 0; i < self.size(); ++i) moved[i] = g.apply(self[i]);
      if (packed::rref(moved) < self) return;
    }
    reps.push_back(self);
  });
  return reps;
}

void require_targets(const CoverEngine& e, std::span<const std::uint64_t> targets) {
  if (targets.empty() || targets.size() > CoverEngine::kMaxTargets) {
    throw PreconditionError("min_cover needs 1 to 6 targets, got " +
                            std::to_string(targets.size()));
  }
  const std::uint64_t limit = std::uint64_t{1} << (2 * e.m());
  for (const auto v : targets) {
    if (v >= limit) throw PreconditionError("target outside GF(2^m)^2");
  }
}

std::vector<std::uint64_t> pack_all(std::span<const SyndromePair> targets, const FieldSpec& f) {
  std::vector<std::uint64_t> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    if (!f.contains(t.a) || !f.contains(t.b)) {
      throw PreconditionError("target (" + to_hex(t.a) + ", " + to_hex(t.b) +
                              ") outside GF(2^" + std::to_string(f.m()) + ")^2");
    }
    out.push_back(pack(t, f.m()));
  }
  return out;
}

}  // namespace

CoverEngine::CoverEngine(ColumnSystem cs) : cs_(std::move(cs)) {
  if (cs_.m() < 2 || cs_.m() > kMaxDegree) {
    throw PreconditionError("cover engine requires 2 <= m <= 8, got m=" + std::to_string(cs_.m()));
  }
  const std::size_t size = std::size_t{1} << (2 * cs_.m());
  leader_.assign(size, -1);
  leader_[0] = 0;
  std::vector<std::uint32_t> frontier{0}, next;
  for (std::int8_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (const auto v : frontier) {
      for (const auto c : cs_.packed_columns()) {
        const auto w = static_cast<std::uint32_t>(v ^ c);
        if (leader_[w] < 0) {
          leader_[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
}

bool CoverEngine::search(std::span<const std::uint64_t> target_basis, int t,
                         std::vector<std::size_t>& chosen, std::uint64_t& nodes,
                         bool prune_dependent) const {
  const auto& cols = cs_.packed_columns();
  const std::size_t n = cols.size();

  auto dfs = [&](auto&& self, std::size_t start, int depth, const SmallBasis& prefix) -> bool {
    ++nodes;
    SmallBasis residual;
    for (const auto v : target_basis) {
      residual.insert(prefix.reduce(static_cast<std::uint32_t>(v)));
    }
    const int need = static_cast<int>(residual.rank());
    if (depth == t) return need == 0;
    if (need > t - depth) return false;
    const std::size_t last = n - static_cast<std::size_t>(t - depth);
    for (std::size_t c = start; c <= last; ++c) {
      const auto col = static_cast<std::uint32_t>(cols[c]);
      if (prune_dependent && prefix.reduce(col) == 0) continue;
      SmallBasis grown = prefix;
      grown.insert(col);
      chosen.push_back(c);
      if (self(self, c + 1, depth + 1, grown)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (static_cast<std::size_t>(t) > n) return false;
  return dfs(dfs, 0, 0, SmallBasis{});
}

MinCover CoverEngine::min_cover(std::span<const std::uint64_t> targets) const {
  require_targets(*this, targets);
  SmallBasis tb;
  for (const auto v : targets) tb.insert(static_cast<std::uint32_t>(v));
  MinCover out;
  if (tb.rank() == 0) return out;
  for (const auto v : targets) {
    if (leader_[v] < 0) {
      out.t = -1;
      return out;
    }
  }
  // Every element of the target span needs at least leader_weight columns.
  int lower = static_cast<int>(tb.rank());
  const auto basis = tb.rows();
  std::uint32_t e = 0;
  for (std::uint32_t g = 1; g < (1u << basis.size()); ++g) {
    e ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    lower = std::max(lower, static_cast<int>(leader_[e]));
  }
  const std::vector<std::uint64_t> target_basis(basis.begin(), basis.end());
  for (int t = lower; t <= static_cast<int>(n()); ++t) {
    out.witness.clear();
    if (search(target_basis, t, out.witness, out.nodes, true)) {
      out.t = t;
      return out;
    }
  }
  out.t = -1;
  return out;
}

MinCover CoverEngine::min_cover(std::span<const SyndromePair> targets) const {
  const auto packed_targets = pack_all(targets, cs_.field());
  return min_cover(packed_targets);
}

bool CoverEngine::covered_at(std::span<const std::uint64_t> targets, int t,
                             std::vector<std::size_t>* witness) const {
  require_targets(*this, targets);
  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
  const bool ok = t >= 0 && search(targets, t, chosen, nodes, false);
  if (ok && witness != nullptr) *witness = chosen;
  return ok;
}

MinCover min_cover(const ColumnSystem& cs, std::span<const SyndromePair> targets) {
  return CoverEngine(cs).min_cover(targets);
}

GcrResult gcr_exact(const CoverEngine& engine, int r, const SearchOptions& opts) {
  const int m = engine.m();
  const bool feasible = m >= 3 && r >= 1 && ((m <= 4 && r <= 3) || (m == 5 && r <= 2));
  if (!feasible) {
    const double work = packed::gaussian_binomial(2 * m, std::min(r, 2 * m)) *
                        binomial(engine.n(), static_cast<std::size_t>(std::max(1, 2 * r + 1)));
    throw WorkLimitError("gcr_exact supports 3 <= m <= 4 with r <= 3, or m = 5 with r <= 2; got m=" +
                             std::to_string(m) + ", r=" + std::to_string(r),
                         work);
  }
  GcrResult res;
  res.m = m;
  res.r = r;
  res.symmetry = opts.symmetry;
  const int width = 2 * m;

  if (opts.symmetry) {
    // Covering depends only on the span of the targets, and the max over
    // spans is attained at dimension r; scaling and Frobenius permute the
    // columns, so one subspace per orbit suffices.
    const auto group = symmetry_group(engine.columns().field(), false);
    const auto reps = orbit_representatives(width, std::min(r, width), group, res.enumerated);
    std::vector<MinCover> covers(reps.size());
    ProgressTicker ticker(opts, reps.size());
    parallel_for(reps.size(), opts.jobs, [&](std::size_t i) {
      covers[i] = engine.min_cover(reps[i]);
      ticker.tick();
    });
    res.orbits_visited = reps.size();
    std::size_t worst = 0;
    for (std::size_t i = 0; i < covers.size(); ++i) {
      res.search_nodes += covers[i].nodes;
      if (covers[i].t > covers[worst].t) worst = i;
    }
    res.rho = covers[worst].t;
    for (const auto v : reps[worst]) res.witness_targets.push_back(unpack(v, m));
    res.witness_cover = covers[worst].witness;
    return res;
  }

  // Every ordered r-tuple, memoized on the canonical span.
  const std::uint64_t space = std::uint64_t{1} << width;
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= space;
  std::unordered_map<std::uint64_t, int> memo;
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(r), 0);
  std::vector<std::uint64_t> worst_tuple;
  std::vector<std::size_t> worst_cover;
  ProgressTicker ticker(opts, total);
  res.rho = -1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = r - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = rest % space;
      rest /= space;
    }
    const auto red = packed::rref(tuple);
    std::uint64_t key = static_cast<std::uint64_t>(red.size()) << 60;
    for (std::size_t i = 0; i < red.size(); ++i) key |= red[i] << (static_cast<std::size_t>(width) * i);
    auto it = memo.find(key);
    int t;
    if (it == memo.end()) {
      MinCover mc = red.empty() ? MinCover{} : engine.min_cover(red);
      res.search_nodes += mc.nodes;
      t = mc.t;
      memo.emplace(key, t);
      if (t > res.rho) worst_cover = mc.witness;
    } else {
      t = it->second;
    }
    if (t > res.rho) {
      res.rho = t;
      worst_tuple = tuple;
    }
    ++res.enumerated;
    ticker.tick();
  }
  res.orbits_visited = memo.size();
  for (const auto v : worst_tuple) res.witness_targets.push_back(unpack(v, m));
  res.witness_cover = worst_cover;
  return res;
}

GcrResult gcr_exact(const ColumnSystem& cs, int r, const SearchOptions& opts) {
  return gcr_exact(CoverEngine(cs), r, opts);
}

std::string to_string(Verdict v) { return v == Verdict::kCovered ? "covered" : "no-cover-at-t"; }

Verdict parse_verdict(const std::string& s) {
  if (s == "covered") return Verdict::kCovered;
  if (s == "no-cover-at-t") return Verdict::kNoCoverAtT;
  throw PreconditionError("unknown verdict '" + s + "'");
}

CoverCertificate certify_no_cover(const ColumnSystem& cs, std::span<const SyndromePair> targets,
                                  int t) {
  const std::size_t n = cs.n();
  if (cs.m() > 8) throw PreconditionError("certify_no_cover requires m <= 8");
  if (targets.empty()) throw PreconditionError("certify_no_cover needs at least one target");
  if (t < 0 || static_cast<std::size_t>(t) > n) {
    throw PreconditionError("t=" + std::to_string(t) + " outside [0, n]");
  }
  const double work = binomial(n, static_cast<std::size_t>(t));
  if (work > 1e8) throw WorkLimitError("certify_no_cover: C(n, t) exceeds 1e8", work);

  CoverCertificate cert{cs.field(), std::vector<SyndromePair>(targets.begin(), targets.end()), t, 0,
                        Verdict::kNoCoverAtT, std::nullopt};
  const auto packed_targets = pack_all(targets, cs.field());
  const auto& cols = cs.packed_columns();
  const auto tt = static_cast<std::size_t>(t);
  std::vector<std::size_t> idx(tt);
  for (std::size_t i = 0; i < tt; ++i) idx[i] = i;
  while (true) {
    ++cert.subsets_checked;
    SmallBasis span;
    for (const auto j : idx) span.insert(static_cast<std::uint32_t>(cols[j]));
    const bool covers = std::all_of(packed_targets.begin(), packed_targets.end(), [&](std::uint64_t v) {
      return span.reduce(static_cast<std::uint32_t>(v)) == 0;
    });
    if (covers) {
      cert.verdict = Verdict::kCovered;
      cert.witness = idx;
      return cert;
    }
    std::size_t i = tt;
    while (i > 0 && idx[i - 1] == n - tt + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < tt; ++j) idx[j] = idx[j - 1] + 1;
  }
  return cert;
}

bool recheck(const CoverCertificate& cert) {
  const ColumnSystem cs = build_columns(cert.field);
  const int m = cs.m();
  const std::size_t n = cs.n();
  if (cert.t < 0 || static_cast<std::size_t>(cert.t) > n || cert.targets.empty()) return false;
  std::vector<BitVec> targets;
  for (const auto& p : cert.targets) {
    if (!cert.field.contains(p.a) || !cert.field.contains(p.b)) return false;
    targets.push_back(to_bitvec(p, m));
  }
  auto spans_all = [&](const std::vector<std::size_t>& subset) {
    BitMatrix h(static_cast<std::size_t>(2 * m));
    for (const auto j : subset) h.add_row(to_bitvec(cs.column(j), m));
    return std::all_of(targets.begin(), targets.end(),
                       [&](const BitVec& v) { return in_span(h, v); });
  };

  const auto tt = static_cast<std::size_t>(cert.t);
  if (cert.verdict == Verdict::kCovered) {
    if (!cert.witness || cert.witness->size() != tt) return false;
    const auto& w = *cert.witness;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= n || (i > 0 && w[i] <= w[i - 1])) return false;
    }
    return spans_all(w);
  }
  if (cert.witness) return false;
  if (cert.subsets_checked != binomial_exact(n, tt)) return false;
  std::vector<std::size_t> idx(tt);
  for (std::size_t i = 0; i < tt; ++i) idx[i] = i;
  while (true) {
    if (spans_all(idx)) return false;
    std::size_t i = tt;
    while (i > 0 && idx[i - 1] == n - tt + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < tt; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

DccResult d_cc(const CoverEngine& engine, int r, const SearchOptions& opts) {
  const int m = engine.m();
  if (m < 3 || m > 5 || r < 1 || r > std::min(4, m)) {
    throw PreconditionError("d_cc requires 3 <= m <= 5 and 1 <= r <= min(4, m); got m=" +
                            std::to_string(m) + ", r=" + std::to_string(r));
  }
  DccResult res;
  std::uint64_t enumerated = 0;
  std::vector<std::vector<std::uint64_t>> reps;
  if (opts.symmetry) {
    reps = orbit_representatives(m, r, symmetry_group(engine.columns().field(), true), enumerated);
  } else {
    packed::for_each_subspace(m, r, [&](std::span<const std::uint64_t> rows) {
      reps.emplace_back(rows.begin(), rows.end());
    });
  }
  std::vector<MinCover> covers(reps.size());
  ProgressTicker ticker(opts, reps.size());
  parallel_for(reps.size(), opts.jobs, [&](std::size_t i) {
    std::vector<std::uint64_t> targets;
    for (const auto alpha : reps[i]) targets.push_back(alpha << m);
    covers[i] = engine.min_cover(targets);
    ticker.tick();
  });
  std::size_t worst = 0;
  for (std::size_t i = 1; i < covers.size(); ++i) {
    if (covers[i].t > covers[worst].t) worst = i;
  }
  res.value = covers[worst].t;
  for (const auto alpha : reps[worst]) res.witness_alphas.push_back(Felt{static_cast<std::uint32_t>(alpha)});
  res.witness_cover = covers[worst].witness;
  res.orbits_visited = reps.size();
  return res;
}

DccResult d_cc(const ColumnSystem& cs, int r, const SearchOptions& opts) {
  return d_cc(CoverEngine(cs), r, opts);
}

int d_cc_generic(const BinaryCode& c, const BinaryCode& csup, int r) {
  const std::size_t n = csup.n();
  if (c.n() != n || n > 16) throw PreconditionError("d_cc_generic requires equal lengths n <= 16");
  if (csup.k() > 12) throw PreconditionError("d_cc_generic requires dim C' <= 12");
  if (!csup.contains(c)) throw PreconditionError("d_cc_generic: C is not a subcode of C'");
  const int gap = static_cast<int>(csup.k()) - static_cast<int>(c.k());
  if (r < 1 || gap < r) {
    throw PreconditionError("d_cc_generic: dimension gap " + std::to_string(gap) +
                            " is smaller than r=" + std::to_string(r));
  }
  // Complement of C inside C'.
  packed::XorBasis cb;
  for (const auto row : c.generator().packed_rows()) cb.insert(row);
  std::vector<std::uint64_t> quotient;
  for (const auto row : csup.generator().packed_rows()) {
    if (cb.insert(row)) quotient.push_back(row);
  }
  const auto sub_rows = c.generator().packed_rows();
  std::vector<std::uint64_t> sub_words(std::size_t{1} << sub_rows.size(), 0);
  for (std::size_t v = 1; v < sub_words.size(); ++v) {
    sub_words[v] = sub_words[v & (v - 1)] ^ sub_rows[static_cast<std::size_t>(std::countr_zero(v))];
  }

  const auto g = static_cast<std::size_t>(gap);
  const std::uint64_t cosets = std::uint64_t{1} << g;
  std::unordered_map<std::uint64_t, int> memo;
  std::vector<std::uint64_t> u(static_cast<std::size_t>(r));
  std::vector<std::uint64_t> reps(static_cast<std::size_t>(r));
  int result = 0;

  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= cosets;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < r; ++i) {
      u[static_cast<std::size_t>(i)] = rest % cosets;
      rest /= cosets;
    }
    if (packed::rank(u) != static_cast<std::size_t>(r)) continue;
    const auto red = packed::rref(u);
    std::uint64_t key = 0;
    for (const auto row : red) key = (key << g) | row;
    if (auto it = memo.find(key); it != memo.end()) {
      result = std::max(result, it->second);
      continue;
    }
    for (int i = 0; i < r; ++i) {
      std::uint64_t word = 0;
      for (std::size_t j = 0; j < g; ++j) {
        if ((u[static_cast<std::size_t>(i)] >> j) & 1u) word ^= quotient[j];
      }
      reps[static_cast<std::size_t>(i)] = word;
    }
    int best = static_cast<int>(n) + 1;
    auto inner = [&](auto&& self, int i, std::uint64_t acc) -> void {
      if (i == r) {
        best = std::min(best, std::popcount(acc));
        return;
      }
      for (const auto cw : sub_words) {
        const std::uint64_t next = acc | (reps[static_cast<std::size_t>(i)] ^ cw);
        if (std::popcount(next) < best) self(self, i + 1, next);
      }
    };
    inner(inner, 0, 0);
    memo.emplace(key, best);
    result = std::max(result, best);
  }
  return result;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kSupercode:
      return "supercode";
    case BoundKind::kCounting:
      return "counting";
    case BoundKind::kThreshold:
      return "threshold";
  }
  return "unknown";
}

BoundReport supercode_bound(int r, int dim_c, int dim_sup, int ghw_of_sup, std::optional<int> m) {
  BoundReport rep{BoundKind::kSupercode, r, m, std::nullopt, dim_sup - dim_c >= r};
  if (rep.hypothesis_holds) rep.bound = ghw_of_sup;
  return rep;
}

BoundReport counting_bound(int k, int m) {
  if (k < 1 || m < 0) throw PreconditionError("counting_bound needs k >= 1 and m >= 0");
  cpp_int lhs = cpp_int(1) << m;
  for (int i = 2; i <= 2 * k - 1; ++i) lhs *= i;
  const cpp_int rhs = cpp_int(1) << (k * (2 * k - 1));
  BoundReport rep{BoundKind::kCounting, k, m, std::nullopt, lhs >= rhs};
  if (rep.hypothesis_holds) rep.bound = 2 * k;
  return rep;
}

int threshold_upper(int k) {
  if (k < 2) throw PreconditionError("threshold_upper requires k >= 2");
  const cpp_int root = cpp_int(k - 1) * (cpp_int(1) << (k + 1)) + 3;
  const cpp_int target = root * root;
  int m = 0;
  while ((cpp_int(1) << m) < target) ++m;
  return m;
}

BoundReport threshold_report(int k, int m) {
  BoundReport rep{BoundKind::kThreshold, k, m, std::nullopt, m >= threshold_upper(k)};
  if (rep.hypothesis_holds) rep.bound = 2 * k + 1;
  return rep;
}

}  // namespace bchcov
