#include "bchcov/bitlin.hpp"

#include <cmath>

#include "bchcov/error.hpp"

namespace bchcov {

namespace {

void require_width(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw PreconditionError("bit-vector width mismatch: expected " + std::to_string(expected) +
                            ", got " + std::to_string(got));
  }
}

}  // namespace

BitVec::BitVec(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {
  if (width > kMaxWidth) {
    throw PreconditionError("bit-vector width " + std::to_string(width) + " exceeds 4096");
  }
}

BitVec BitVec::from_u64(std::uint64_t value, std::size_t width) {
  BitVec v(width);
  if (width == 0) return v;
  if (width < 64) value &= (std::uint64_t{1} << width) - 1;
  v.words_[0] = value;
  return v;
}

BitVec BitVec::parse(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    text.remove_prefix(2);
  }
  BitVec v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw PreconditionError("malformed bit string '" + std::string(text) + "'");
    }
  }
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

bool BitVec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (const auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

long BitVec::lowest_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<long>(i * 64 + std::countr_zero(words_[i]));
  }
  return -1;
}

std::uint64_t BitVec::to_u64() const {
  if (width_ > 64) throw PreconditionError("bit-vector wider than 64 cannot be packed");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVec::to_string() const {
  std::string s = "0b";
  s.reserve(width_ + 2);
  for (std::size_t i = 0; i < width_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_width(width_, other.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool lex_less(const BitVec& a, const BitVec& b) {
  const std::size_t n = std::min(a.width(), b.width());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.get(i) != b.get(i)) return b.get(i);
  }
  return a.width() < b.width();
}

BitMatrix::BitMatrix(std::size_t width) : width_(width) {
  if (width > BitVec::kMaxWidth) {
    throw PreconditionError("matrix width " + std::to_string(width) + " exceeds 4096");
  }
}

BitMatrix::BitMatrix(std::size_t width, std::vector<BitVec> rows) : BitMatrix(width) {
  for (auto& r : rows) add_row(std::move(r));
}

BitMatrix BitMatrix::from_u64(std::size_t width, std::span<const std::uint64_t> rows) {
  BitMatrix m(width);
  for (const auto r : rows) m.add_row(BitVec::from_u64(r, width));
  return m;
}

BitMatrix BitMatrix::parse(std::span<const std::string> rows) {
  if (rows.empty()) return BitMatrix(0);
  std::vector<BitVec> parsed;
  for (const auto& r : rows) parsed.push_back(BitVec::parse(r));
  const std::size_t width = parsed.front().width();
  return BitMatrix(width, std::move(parsed));
}

void BitMatrix::add_row(BitVec row) {
  require_width(width_, row.width());
  rows_.push_back(std::move(row));
}

BitVec BitMatrix::column(std::size_t j) const {
  BitVec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c.set(i, rows_[i].get(j));
  return c;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(rows_.size());
  for (std::size_t j = 0; j < width_; ++j) t.add_row(column(j));
  return t;
}

std::vector<std::uint64_t> BitMatrix::packed_rows() const {
  std::vector<std::uint64_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_u64());
  return out;
}

Echelon rref_rank(const BitMatrix& m) {
  std::vector<BitVec> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.width() && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return Echelon{BitMatrix(m.width(), std::move(rows)), rank, std::move(pivots)};
}

SpanBasis::SpanBasis(const BitMatrix& m) : width_(m.width()) {
  for (const auto& r : m.rows()) insert(r);
}

BitVec SpanBasis::reduce(BitVec v) const {
  require_width(width_, v.width());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool SpanBasis::insert(const BitVec& v) {
  BitVec r = reduce(v);
  const long p = r.lowest_set();
  if (p < 0) return false;
  // Keep earlier rows free of the new pivot so that single-pass reduction works.
  for (auto& b : basis_) {
    if (b.get(static_cast<std::size_t>(p))) b ^= r;
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(static_cast<std::size_t>(p));
  return true;
}

bool in_span(const BitMatrix& m, const BitVec& v) {
  require_width(m.width(), v.width());
  return SpanBasis(m).contains(v);
}

bool SpanSet::contains(const BitVec& v) const {
  require_width(width_, v.width());
  if (!table_.empty()) return table_[v.to_u64()];
  return std::find(elements_.begin(), elements_.end(), v) != elements_.end();
}

SpanSet enumerate_span(const BitMatrix& m) {
  const Echelon e = rref_rank(m);
  if (e.rank > SpanSet::kMaxRank) {
    throw PreconditionError("span enumeration refused: rank " + std::to_string(e.rank) +
                            " exceeds 24");
  }
  SpanSet s;
  s.width_ = m.width();
  const std::size_t count = std::size_t{1} << e.rank;
  s.elements_.reserve(count);
  BitVec cur(m.width());
  s.elements_.push_back(cur);
  for (std::size_t g = 1; g < count; ++g) {
    cur ^= e.rref.row(static_cast<std::size_t>(std::countr_zero(g)));
    s.elements_.push_back(cur);
  }
  if (m.width() <= SpanSet::kMaxTableWidth) {
    s.table_.assign(std::size_t{1} << m.width(), false);
    for (const auto& x : s.elements_) s.table_[x.to_u64()] = true;
  }
  return s;
}

namespace packed {

std::vector<std::uint64_t> rref(std::span<const std::uint64_t> rows) {
  std::vector<std::uint64_t> r(rows.begin(), rows.end());
  std::size_t rank = 0;
  for (int col = 0; col < 64 && rank < r.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t sel = rank;
    while (sel < r.size() && !(r[sel] & bit)) ++sel;
    if (sel == r.size()) continue;
    std::swap(r[rank], r[sel]);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != rank && (r[i] & bit)) r[i] ^= r[rank];
    }
    ++rank;
  }
  r.resize(rank);
  return r;
}

std::size_t rank(std::span<const std::uint64_t> rows) {
  XorBasis b;
  for (const auto r : rows) b.insert(r);
  return b.rank();
}

double gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double num = 1.0;
  for (int i = 0; i < k; ++i) {
    num *= (std::ldexp(1.0, n - i) - 1.0) / (std::ldexp(1.0, i + 1) - 1.0);
  }
  return std::round(num);
}

}  // namespace packed

}  // namespace bchcov
