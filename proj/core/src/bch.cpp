#include "bchcov/bch.hpp"

#include "bchcov/error.hpp"

namespace bchcov {

BitVec to_bitvec(SyndromePair p, int m) {
  return BitVec::from_u64(pack(p, m), static_cast<std::size_t>(2 * m));
}

ColumnSystem::ColumnSystem(FieldSpec field) : field_(std::move(field)) {
  const std::size_t n = field_.group_order();
  columns_.reserve(n);
  packed_.reserve(n);
  index_of_.assign(field_.size(), 0);
  Felt x = field_.one();
  for (std::size_t j = 0; j < n; ++j) {
    const SyndromePair c = column_of(field_, x);
    columns_.push_back(c);
    packed_.push_back(pack(c, field_.m()));
    index_of_[x.bits] = j;
    x = field_.mul(x, field_.generator());
  }
}

ColumnSystem build_columns(const FieldSpec& f) {
  if (f.m() > 16) throw PreconditionError("column system requires m <= 16");
  return ColumnSystem(f);
}

BitMatrix binary_parity_check(const FieldSpec& f, int e) {
  if (e != 1 && e != 2) throw PreconditionError("only e = 1 and e = 2 are supported");
  if (f.m() > 12) throw PreconditionError("binary parity-check requires m <= 12");
  const int m = f.m();
  const std::size_t n = f.group_order();
  BitMatrix h(n);
  for (int block = 0; block < e; ++block) {
    const std::uint64_t power = 2 * static_cast<std::uint64_t>(block) + 1;
    const Felt step = f.pow(f.generator(), power);
    std::vector<BitVec> rows(static_cast<std::size_t>(m), BitVec(n));
    Felt x = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      for (int r = 0; r < m; ++r) {
        if ((x.bits >> r) & 1u) rows[static_cast<std::size_t>(r)].set(j);
      }
      x = f.mul(x, step);
    }
    for (auto& row : rows) h.add_row(std::move(row));
  }
  return h;
}

BinaryCode bch_code(const FieldSpec& f, int e) {
  if (f.m() > 6) throw PreconditionError("BCH code materialization requires m <= 6");
  return BinaryCode::from_parity_check(binary_parity_check(f, e));
}

SyndromePair syndrome(const ColumnSystem& cs, const BitVec& word) {
  if (word.width() != cs.n()) {
    throw PreconditionError("word length " + std::to_string(word.width()) + " != n = " +
                            std::to_string(cs.n()));
  }
  SyndromePair s{};
  for (std::size_t j = 0; j < cs.n(); ++j) {
    if (word.get(j)) s = s + cs.column(j);
  }
  return s;
}

}  // namespace bchcov
