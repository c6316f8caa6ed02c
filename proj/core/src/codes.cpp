#include "bchcov/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "bchcov/error.hpp"

namespace bchcov {

namespace {

void require_packable(const BinaryCode& c, const char* op) {
  if (c.n() > 64) {
    throw PreconditionError(std::string(op) + " requires length n <= 64, got " +
                            std::to_string(c.n()));
  }
}

std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | ((v >> i) & 1u);
  }
  return r;
}

// Key ordering rref rows by their coordinate strings (coordinate 0 first).
std::uint64_t lex_key(std::span<const std::uint64_t> rref_rows, int n) {
  std::uint64_t key = 0;
  for (const auto r : rref_rows) key = (key << n) | reverse_bits(r, n);
  return key;
}

std::uint64_t raw_key(std::span<const std::uint64_t> rref_rows, int n) {
  std::uint64_t key = 0;
  for (const auto r : rref_rows) key = (key << n) | r;
  return key;
}

std::uint64_t permute_bits(std::uint64_t v, std::span<const int> perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((v >> i) & 1u) out |= std::uint64_t{1} << perm[i];
  }
  return out;
}

int min_weight_packed(std::span<const std::uint64_t> rows) {
  int best = 0;
  std::uint64_t cur = 0;
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  for (std::uint64_t g = 1; g < count; ++g) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(g))];
    const int w = std::popcount(cur);
    if (best == 0 || w < best) best = w;
  }
  return best;
}

}  // namespace

BinaryCode BinaryCode::from_generator(const BitMatrix& gen) {
  SpanBasis basis(gen.width());
  BitMatrix kept(gen.width());
  for (const auto& r : gen.rows()) {
    if (basis.insert(r)) kept.add_row(r);
  }
  return BinaryCode(std::move(kept), std::nullopt);
}

BinaryCode BinaryCode::from_parity_check(const BitMatrix& par) {
  return BinaryCode(null_space(par), par);
}

BitMatrix BinaryCode::parity_check() const {
  if (par_) return rref_rank(*par_).rref;
  return null_space(gen_);
}

bool BinaryCode::contains(const BitVec& word) const {
  if (word.width() != n()) {
    throw PreconditionError("word length " + std::to_string(word.width()) +
                            " does not match code length " + std::to_string(n()));
  }
  return in_span(gen_, word);
}

bool BinaryCode::contains(const BinaryCode& sub) const {
  if (sub.n() != n()) return false;
  const SpanBasis basis(gen_);
  return std::all_of(sub.gen_.rows().begin(), sub.gen_.rows().end(),
                     [&](const BitVec& r) { return basis.contains(r); });
}

BitMatrix null_space(const BitMatrix& m) {
  const Echelon e = rref_rank(m);
  const std::size_t n = m.width();
  std::vector<bool> is_pivot(n, false);
  for (const auto p : e.pivots) is_pivot[p] = true;
  BitMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    BitVec h(n);
    h.set(j);
    for (std::size_t i = 0; i < e.rank; ++i) {
      if (e.rref.row(i).get(j)) h.set(e.pivots[i]);
    }
    out.add_row(std::move(h));
  }
  return out;
}

BinaryCode hamming_code(int r) {
  if (r < 2 || r > 12) throw PreconditionError("Hamming code needs 2 <= r <= 12");
  const std::size_t n = (std::size_t{1} << r) - 1;
  BitMatrix par(n);
  for (int i = 0; i < r; ++i) {
    BitVec row(n);
    for (std::size_t j = 0; j < n; ++j) row.set(j, ((j + 1) >> i) & 1u);
    par.add_row(std::move(row));
  }
  return BinaryCode::from_parity_check(par);
}

int min_distance(const BinaryCode& c) {
  require_packable(c, "min_distance");
  if (c.k() > 24) {
    throw PreconditionError("min_distance requires k <= 24, got " + std::to_string(c.k()));
  }
  if (c.k() == 0) return 0;
  const auto rows = c.generator().packed_rows();
  return min_weight_packed(rows);
}

int ghw(const BinaryCode& c, int r, double max_subcodes) {
  require_packable(c, "ghw");
  const int k = static_cast<int>(c.k());
  if (r < 1 || r > k) {
    throw PreconditionError("ghw order r=" + std::to_string(r) + " outside [1, " +
                            std::to_string(k) + "]");
  }
  if (k > 24) throw PreconditionError("ghw requires k <= 24, got " + std::to_string(k));
  const double work = packed::gaussian_binomial(k, r);
  if (work > max_subcodes) {
    throw WorkLimitError("ghw: too many " + std::to_string(r) + "-dimensional subcodes", work);
  }
  // Codeword table indexed by coefficient vector.
  const auto gen = c.generator().packed_rows();
  std::vector<std::uint64_t> words(std::size_t{1} << k, 0);
  for (std::size_t v = 1; v < words.size(); ++v) {
    const auto low = static_cast<std::size_t>(std::countr_zero(v));
    words[v] = words[v & (v - 1)] ^ gen[low];
  }
  int best = static_cast<int>(c.n()) + 1;
  packed::for_each_subspace(k, r, [&](std::span<const std::uint64_t> rows) {
    std::uint64_t support = 0;
    for (const auto coeffs : rows) support |= words[coeffs];
    best = std::min(best, std::popcount(support));
  });
  return best;
}

HammingGhwSequence::HammingGhwSequence(int m) : m_(m) {
  if (m < 2 || m > 30) throw PreconditionError("Hamming GHW sequence needs 2 <= m <= 30");
}

std::uint64_t HammingGhwSequence::size() const {
  return (std::uint64_t{1} << m_) - 1 - static_cast<std::uint64_t>(m_);
}

std::uint64_t HammingGhwSequence::at(std::uint64_t r) const {
  if (r < 1 || r > size()) throw PreconditionError("GHW index out of range");
  // d is the r-th positive integer that is not a power of two.
  std::uint64_t d = r;
  while (d - static_cast<std::uint64_t>(std::bit_width(d)) < r) ++d;
  return d;
}

std::vector<std::uint64_t> HammingGhwSequence::to_vector() const {
  if (m_ > 24) throw PreconditionError("refusing to materialize GHW sequence for m > 24");
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::uint64_t d = 1; d < (std::uint64_t{1} << m_); ++d) {
    if (!std::has_single_bit(d)) out.push_back(d);
  }
  return out;
}

HammingGhwSequence hamming_ghw_sequence(int m) { return HammingGhwSequence(m); }

BinaryCode canonical_form(const BinaryCode& c) {
  const int n = static_cast<int>(c.n());
  if (n > 8) throw PreconditionError("canonical_form requires n <= 8");
  const auto rows = c.generator().packed_rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::uint64_t best_key = ~std::uint64_t{0};
  std::vector<std::uint64_t> moved(rows.size());
  do {
    for (std::size_t i = 0; i < rows.size(); ++i) moved[i] = permute_bits(rows[i], perm);
    auto red = packed::rref(moved);
    const auto key = lex_key(red, n);
    if (best.empty() || key < best_key) {
      best_key = key;
      best = std::move(red);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BinaryCode::from_generator(BitMatrix::from_u64(c.n(), best));
}

bool permutation_equivalent(const BinaryCode& a, const BinaryCode& b) {
  if (a.n() != b.n() || a.k() != b.k()) return false;
  return canonical_form(a).generator() == canonical_form(b).generator();
}

Classification classify_small(int n, int k, int d) {
  if (n < 1 || n > 8 || k < 1 || k > 5 || k > n || d < 1 || d > n) {
    throw PreconditionError("classify_small needs 1 <= k <= n <= 8, k <= 5, 1 <= d <= n; got [" +
                            std::to_string(n) + "," + std::to_string(k) + "," +
                            std::to_string(d) + "]");
  }
  Classification out{n, k, d, 0, 0, {}};
  std::unordered_set<std::uint64_t> seen;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> moved(static_cast<std::size_t>(k));

  struct Found {
    std::uint64_t key;
    std::vector<std::uint64_t> rows;
    int dist;
    std::size_t size;
  };
  std::vector<Found> found;

  packed::for_each_subspace(n, k, [&](std::span<const std::uint64_t> rows) {
    ++out.codes_enumerated;
    const int dist = min_weight_packed(rows);
    if (dist < d) return;
    ++out.codes_matching;
    if (seen.count(raw_key(rows, n)) != 0) return;
    // New class: sweep its whole orbit.
    Found f{~std::uint64_t{0}, {}, dist, 0};
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t i = 0; i < rows.size(); ++i) moved[i] = permute_bits(rows[i], perm);
      auto red = packed::rref(moved);
      if (seen.insert(raw_key(red, n)).second) ++f.size;
      const auto key = lex_key(red, n);
      if (key < f.key) {
        f.key = key;
        f.rows = std::move(red);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    found.push_back(std::move(f));
  });

  std::sort(found.begin(), found.end(),
            [](const Found& a, const Found& b) { return a.key < b.key; });
  for (auto& f : found) {
    out.classes.push_back(CodeClass{
        BinaryCode::from_generator(BitMatrix::from_u64(static_cast<std::size_t>(n), f.rows)),
        f.dist, f.size});
  }
  return out;
}

std::optional<BitVec> missing_column_certificate(const BinaryCode& c) {
  const std::size_t n = c.n();
  const std::size_t r = n - c.k();
  if (r < 2 || r > 16 || n + 2 != (std::size_t{1} << r)) return std::nullopt;
  const BitMatrix h = c.parity_check();
  if (h.num_rows() != r) return std::nullopt;
  std::set<std::uint64_t> columns;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t col = h.column(j).to_u64();
    if (col == 0 || !columns.insert(col).second) return std::nullopt;
  }
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << r); ++v) {
    if (columns.count(v) == 0) return BitVec::from_u64(v, r);
  }
  return std::nullopt;
}

}  // namespace bchcov
