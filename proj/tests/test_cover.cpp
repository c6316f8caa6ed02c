#include <doctest.h>

#include <random>

#include "bchcov/charsum.hpp"
#include "bchcov/cover.hpp"
#include "bchcov/error.hpp"
#include "oracles.hpp"

using namespace bchcov;

namespace {

// For every column subset, its span as a membership mask over the 2^(2m)
// syndromes (m = 3: 64 syndromes fit one word).
std::vector<std::pair<int, std::uint64_t>> subset_spans(const ColumnSystem& cs) {
  std::vector<std::pair<int, std::uint64_t>> out;
  const std::size_t n = cs.n();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::uint64_t mask = 1;  // contains 0
    for (std::size_t j = 0; j < n; ++j) {
      if (((s >> j) & 1u) == 0) continue;
      std::uint64_t shifted = 0;
      for (int v = 0; v < 64; ++v) {
        if ((mask >> v) & 1u) shifted |= std::uint64_t{1} << (v ^ static_cast<int>(cs.packed(j)));
      }
      mask |= shifted;
    }
    out.emplace_back(std::popcount(s), mask);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Literal max over all ordered r-tuples of min over column subsets.
int brute_gcr_m3(int r) {
  const ColumnSystem cs = build_columns(FieldSpec::make(3));
  const auto spans = subset_spans(cs);
  int worst = 0;
  std::vector<int> t(static_cast<std::size_t>(r), 0);
  while (true) {
    std::uint64_t need = 0;
    for (const int v : t) need |= std::uint64_t{1} << v;
    for (const auto& [size, mask] : spans) {
      if ((mask & need) == need) {
        worst = std::max(worst, size);
        break;
      }
    }
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == 64) t[i++] = 0;
    if (i == t.size()) break;
  }
  return worst;
}

}  // namespace

TEST_CASE("min_cover basics") {
  const FieldSpec f = FieldSpec::make(4);
  const ColumnSystem cs = build_columns(f);
  const std::vector<SyndromePair> zero{{}};
  CHECK(min_cover(cs, zero).t == 0);
  const std::vector<SyndromePair> col{cs.column(3)};
  const MinCover one = min_cover(cs, col);
  CHECK(one.t == 1);
  CHECK(one.witness == std::vector<std::size_t>{3});
  // a weight-2 syndrome
  const std::vector<SyndromePair> two{cs.column(1) + cs.column(5)};
  CHECK(min_cover(cs, two).t == 2);
  const std::vector<SyndromePair> none;
  CHECK_THROWS_AS(min_cover(cs, none), PreconditionError);
}

TEST_CASE("min_cover agrees with covered_at and the leader table") {
  const FieldSpec f = FieldSpec::make(4);
  const ColumnSystem cs = build_columns(f);
  const CoverEngine engine(cs);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> targets;
    const std::size_t r = 1 + rng() % 3;
    for (std::size_t i = 0; i < r; ++i) targets.push_back(rng() & 0xff);
    const MinCover mc = engine.min_cover(targets);
    REQUIRE(mc.reachable());
    if (r == 1) CHECK(mc.t == engine.leader_weight(targets[0]));
    std::vector<std::size_t> w;
    CHECK(engine.covered_at(targets, mc.t, &w));
    if (mc.t > 0) CHECK_FALSE(engine.covered_at(targets, mc.t - 1));
    // the witness really covers
    BitMatrix cols(8);
    for (const auto j : mc.witness) cols.add_row(BitVec::from_u64(cs.packed(j), 8));
    for (const auto v : targets) CHECK(in_span(cols, BitVec::from_u64(v, 8)));
    CHECK(mc.witness.size() == static_cast<std::size_t>(mc.t));
  }
}

TEST_CASE("covering radius of BCH(2,m)") {
  // rho_1(BCH(2,m)) = 3 for m >= 3
  for (int m = 3; m <= 5; ++m) {
    CHECK(gcr_exact(build_columns(FieldSpec::make(m)), 1).rho == 3);
  }
}

TEST_CASE("gcr_exact matches the brute-force oracle at m = 3") {
  const ColumnSystem cs = build_columns(FieldSpec::make(3));
  for (int r = 1; r <= 3; ++r) {
    SearchOptions on, off;
    off.symmetry = false;
    const int brute = brute_gcr_m3(r);
    CAPTURE(r);
    CHECK(gcr_exact(cs, r, on).rho == brute);
    CHECK(gcr_exact(cs, r, off).rho == brute);
  }
}

TEST_CASE("symmetry reduction is sound at m = 4") {
  const CoverEngine engine(build_columns(FieldSpec::make(4)));
  SearchOptions off;
  off.symmetry = false;
  for (int r = 1; r <= 2; ++r) {
    const GcrResult a = gcr_exact(engine, r);
    const GcrResult b = gcr_exact(engine, r, off);
    CHECK(a.rho == b.rho);
    CHECK(a.orbits_visited < b.orbits_visited);
    // the witness realizes the value
    CHECK(engine.min_cover(std::span<const SyndromePair>(a.witness_targets)).t == a.rho);
  }
}

TEST_CASE("gcr_exact is monotone, thread-independent and rejects infeasible sizes") {
  const CoverEngine engine(build_columns(FieldSpec::make(4)));
  int prev = 0;
  for (int r = 1; r <= 3; ++r) {
    SearchOptions seq, par;
    par.jobs = 3;
    const GcrResult a = gcr_exact(engine, r, seq);
    const GcrResult b = gcr_exact(engine, r, par);
    CHECK(a.rho >= prev);
    CHECK(a.rho == b.rho);
    CHECK(a.witness_targets == b.witness_targets);
    CHECK(a.search_nodes == b.search_nodes);
    prev = a.rho;
  }
  CHECK_THROWS_AS(gcr_exact(build_columns(FieldSpec::make(2)), 1), PreconditionError);
  CHECK_THROWS_AS(gcr_exact(build_columns(FieldSpec::make(6)), 2), PreconditionError);
  CHECK_THROWS_AS(gcr_exact(build_columns(FieldSpec::make(5)), 3), WorkLimitError);
}

TEST_CASE("progress callbacks fire") {
  const CoverEngine engine(build_columns(FieldSpec::make(4)));
  SearchOptions so;
  std::uint64_t calls = 0, last_total = 0;
  so.progress = [&](std::uint64_t, std::uint64_t total) {
    ++calls;
    last_total = total;
  };
  so.progress_interval = 10;
  gcr_exact(engine, 2, so);
  CHECK(calls > 0);
  CHECK(last_total > 0);
}

TEST_CASE("certificates") {
  const FieldSpec f = FieldSpec::make(4);
  const ColumnSystem cs = build_columns(f);
  const auto tri = find_noncube_triple(f);
  REQUIRE(tri.has_value());
  const std::vector<SyndromePair> targets{
      {Felt{}, tri->alpha1}, {Felt{}, tri->alpha2}, {Felt{}, tri->alpha3}};
  const CoverCertificate c6 = certify_no_cover(cs, targets, 6);
  CHECK(c6.verdict == Verdict::kNoCoverAtT);
  CHECK(c6.subsets_checked == 5005);
  CHECK(recheck(c6));

  const CoverCertificate c7 = certify_no_cover(cs, targets, 7);
  CHECK(c7.verdict == Verdict::kCovered);
  REQUIRE(c7.witness.has_value());
  CHECK(c7.witness->size() == 7);
  CHECK(recheck(c7));
  CHECK(min_cover(cs, targets).t == 7);

  // tampering is caught
  CoverCertificate bad = c6;
  bad.subsets_checked = 5004;
  CHECK_FALSE(recheck(bad));
  CoverCertificate lie = c7;
  lie.verdict = Verdict::kNoCoverAtT;
  lie.witness.reset();
  CHECK_FALSE(recheck(lie));
  CoverCertificate wrong = c7;
  (*wrong.witness)[0] = (*wrong.witness)[0] == 0 ? 1 : 0;
  CHECK_FALSE(recheck(wrong));

  CHECK(to_string(Verdict::kNoCoverAtT) == "no-cover-at-t");
  CHECK(parse_verdict("covered") == Verdict::kCovered);
}

TEST_CASE("d_cc equals the generic evaluation") {
  for (int m = 3; m <= 4; ++m) {
    const FieldSpec f = FieldSpec::make(m);
    const CoverEngine engine(build_columns(f));
    const BinaryCode c = bch_code(f, 2);
    const BinaryCode sup = bch_code(f, 1);
    for (int r = 1; r <= 2; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      CHECK(d_cc(engine, r).value == d_cc_generic(c, sup, r));
    }
  }
}

TEST_CASE("d_cc_generic on a small hand example") {
  // C = repetition code of length 3 inside the even-weight code.
  const BinaryCode c = BinaryCode::from_generator(BitMatrix::parse(std::vector<std::string>{"0b111"}));
  const BinaryCode whole = BinaryCode::from_generator(
      BitMatrix::parse(std::vector<std::string>{"0b100", "0b010", "0b001"}));
  // any vector outside C: min weight over its coset is 1
  CHECK(d_cc_generic(c, whole, 1) == 1);
  CHECK(d_cc_generic(c, whole, 2) == 2);
  CHECK_THROWS_AS(d_cc_generic(whole, c, 1), PreconditionError);
}

TEST_CASE("supercode chain at m = 4") {
  const FieldSpec f = FieldSpec::make(4);
  const CoverEngine engine(build_columns(f));
  for (int r = 1; r <= 3; ++r) {
    const int rho = gcr_exact(engine, r).rho;
    const int dcc = d_cc(engine, r).value;
    const auto ham = hamming_ghw_sequence(4).at(static_cast<std::uint64_t>(r));
    CAPTURE(r);
    CHECK(rho >= dcc);
    CHECK(dcc >= static_cast<int>(ham));
    const BoundReport b = supercode_bound(r, 7, 11, static_cast<int>(ham), 4);
    CHECK(b.hypothesis_holds);
    CHECK(*b.bound == static_cast<int>(ham));
  }
  CHECK_FALSE(supercode_bound(5, 7, 11, 9).hypothesis_holds);
}

TEST_CASE("counting bound and threshold") {
  CHECK(counting_bound(2, 4).hypothesis_holds);
  CHECK(*counting_bound(2, 4).bound == 4);
  CHECK(counting_bound(3, 9).hypothesis_holds);
  CHECK(*counting_bound(3, 9).bound == 6);
  CHECK_FALSE(counting_bound(3, 8).hypothesis_holds);
  CHECK_FALSE(counting_bound(3, 8).bound.has_value());
  for (int k = 1; k <= 6; ++k) {
    bool held = false;
    for (int m = 2; m <= 60; ++m) {
      const bool h = counting_bound(k, m).hypothesis_holds;
      if (held) CHECK(h);
      held = h;
    }
  }
  CHECK(threshold_upper(2) == 7);
  CHECK(threshold_upper(3) == 11);
  CHECK(threshold_upper(4) == 14);
  for (int k = 2; k <= 12; ++k) {
    const double relaxed = 2 * k + 3 + 2 * std::log2(static_cast<double>(k - 1));
    CHECK(threshold_upper(k) <= static_cast<int>(std::ceil(relaxed)));
  }
  CHECK_THROWS_AS(threshold_upper(1), PreconditionError);
  CHECK(threshold_report(3, 11).hypothesis_holds);
  CHECK(*threshold_report(3, 11).bound == 7);
  CHECK_FALSE(threshold_report(3, 10).hypothesis_holds);
}
