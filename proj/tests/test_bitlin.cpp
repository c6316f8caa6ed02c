#include <doctest.h>

#include <random>
#include <set>

#include "bchcov/bitlin.hpp"
#include "bchcov/error.hpp"
#include "oracles.hpp"

using namespace bchcov;

namespace {

std::vector<std::uint64_t> random_rows(std::mt19937_64& rng, std::size_t count, int width) {
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(rng() & ((std::uint64_t{1} << width) - 1));
  return rows;
}

}  // namespace

TEST_CASE("BitVec parse and print") {
  const BitVec v = BitVec::parse("0b1011");
  CHECK(v.width() == 4);
  CHECK(v.get(0));
  CHECK_FALSE(v.get(1));
  CHECK(v.to_u64() == 0b1101);
  CHECK(v.to_string() == "0b1011");
  CHECK(v.weight() == 3);
  CHECK(v.lowest_set() == 0);
  CHECK(BitVec(5).lowest_set() == -1);
  CHECK(lex_less(BitVec::parse("0b0111"), BitVec::parse("0b1000")));
  CHECK(BitVec::parse("1011") == v);
  CHECK_THROWS_AS(BitVec::parse("0b1021"), PreconditionError);
  BitVec wide(200);
  wide.set(150);
  CHECK(wide.weight() == 1);
  CHECK(wide.lowest_set() == 150);
}

TEST_CASE("rref_rank agrees with span size") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 12);
    const auto rows = random_rows(rng, rng() % 8, width);
    const BitMatrix m = BitMatrix::from_u64(static_cast<std::size_t>(width), rows);
    const Echelon e = rref_rank(m);
    CHECK(e.rank == oracle::rank(rows));
    CHECK(packed::rank(rows) == e.rank);
    CHECK(oracle::span_size(e.rref.packed_rows()) == oracle::span_size(rows));
    for (std::size_t i = 1; i < e.pivots.size(); ++i) CHECK(e.pivots[i - 1] < e.pivots[i]);
    // reduced: each pivot column has a single one
    for (std::size_t i = 0; i < e.rank; ++i) {
      CHECK(e.rref.column(e.pivots[i]).weight() == 1);
    }
  }
}

TEST_CASE("in_span and enumerate_span agree with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 10);
    const auto rows = random_rows(rng, rng() % 6, width);
    const auto w = static_cast<std::size_t>(width);
    const BitMatrix m = BitMatrix::from_u64(w, rows);
    std::set<std::uint64_t> brute{0};
    for (const auto r : rows) {
      auto next = brute;
      for (const auto v : brute) next.insert(v ^ r);
      brute = next;
    }
    const SpanSet span = enumerate_span(m);
    CHECK(span.size() == brute.size());
    std::set<std::uint64_t> listed;
    for (const auto& v : span.elements()) listed.insert(v.to_u64());
    CHECK(listed == brute);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
      const BitVec bv = BitVec::from_u64(v, w);
      CHECK(in_span(m, bv) == (brute.count(v) == 1));
      CHECK(span.contains(bv) == (brute.count(v) == 1));
    }
  }
  CHECK_THROWS_AS(in_span(BitMatrix(3), BitVec(4)), PreconditionError);
}

TEST_CASE("enumerate_span refuses large ranks") {
  BitMatrix m(30);
  for (std::size_t i = 0; i < 25; ++i) {
    BitVec v(30);
    v.set(i);
    m.add_row(v);
  }
  CHECK_THROWS_AS(enumerate_span(m), PreconditionError);
}

TEST_CASE("XorBasis reduction") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = random_rows(rng, 1 + rng() % 7, 10);
    packed::XorBasis b;
    for (const auto r : rows) b.insert(r);
    CHECK(b.rank() == oracle::rank(rows));
    for (std::uint64_t v = 0; v < 1024; v += 13) {
      auto with = rows;
      with.push_back(v);
      CHECK(b.contains(v) == (oracle::rank(with) == oracle::rank(rows)));
    }
  }
}

TEST_CASE("for_each_subspace lists each subspace once") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<std::vector<std::uint64_t>> seen;
      std::size_t count = 0;
      packed::for_each_subspace(n, k, [&](std::span<const std::uint64_t> rows) {
        std::vector<std::uint64_t> v(rows.begin(), rows.end());
        CHECK(packed::rref(v) == v);
        CHECK(oracle::rank(v) == static_cast<std::size_t>(k));
        seen.insert(v);
        ++count;
      });
      CAPTURE(n);
      CAPTURE(k);
      CHECK(count == seen.size());
      CHECK(static_cast<double>(count) == packed::gaussian_binomial(n, k));
    }
  }
}
