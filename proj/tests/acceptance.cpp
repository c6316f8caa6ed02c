// Acceptance driver: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "bchcov/bch.hpp"
#include "bchcov/charsum.hpp"
#include "bchcov/codes.hpp"
#include "bchcov/construct.hpp"
#include "bchcov/cover.hpp"
#include "oracles.hpp"

using namespace bchcov;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome c1() {
  const auto seq = hamming_ghw_sequence(3).to_vector();
  bool ok = seq == std::vector<std::uint64_t>{3, 5, 6, 7};
  const BinaryCode h = hamming_code(3);
  const auto gen = h.generator().packed_rows();
  for (int r = 1; r <= 4; ++r) {
    ok = ok && ghw(h, r) == static_cast<int>(seq[static_cast<std::size_t>(r - 1)]) &&
         oracle::ghw_by_supports(gen, 7, r) == ghw(h, r);
  }
  return {ok, "d = 3,5,6,7"};
}

Outcome c2() {
  const BinaryCode b4 = bch_code(FieldSpec::make(4), 2);
  const BinaryCode b3 = bch_code(FieldSpec::make(3), 2);
  const bool ok = b4.n() == 15 && b4.k() == 7 && min_distance(b4) == 5 && b3.n() == 7 && b3.k() == 1 &&
                  min_distance(b3) == 7;
  return {ok, "[15," + std::to_string(b4.k()) + "," + std::to_string(min_distance(b4)) + "] and [7," +
                  std::to_string(b3.k()) + "," + std::to_string(min_distance(b3)) + "]"};
}

Outcome c3() {
  const ColumnSystem cs = build_columns(FieldSpec::make(4));
  const GcrResult g = gcr_exact(cs, 2);
  const CoverCertificate cert = certify_no_cover(cs, g.witness_targets, 4);
  const bool ok = g.rho >= 5 && cert.verdict == Verdict::kNoCoverAtT && cert.subsets_checked == 1365 &&
                  recheck(cert);
  return {ok, "rho_2 = " + std::to_string(g.rho) + ", pair uncoverable at t = 4 over " +
                  std::to_string(cert.subsets_checked) + " subsets"};
}

Outcome no_cover(int t, std::vector<SyndromePair> targets, std::uint64_t expected) {
  const CoverCertificate cert = certify_no_cover(build_columns(FieldSpec::make(4)), targets, t);
  const bool ok = cert.verdict == Verdict::kNoCoverAtT && cert.subsets_checked == expected;
  return {ok, to_string(cert.verdict) + " after " + std::to_string(cert.subsets_checked) + " subsets"};
}

Outcome c4() {
  const FieldSpec f = FieldSpec::make(4);
  const auto tri = find_noncube_triple(f);
  if (!tri) return {false, "no non-cube triple"};
  return no_cover(6, {{Felt{}, tri->alpha1}, {Felt{}, tri->alpha2}, {Felt{}, tri->alpha3}}, 5005);
}

Outcome c5() {
  const FieldSpec f = FieldSpec::make(4);
  std::vector<SyndromePair> targets;
  for (int i = 0; i < 4; ++i) targets.push_back({Felt{}, f.element(std::uint64_t{1} << i)});
  return no_cover(7, targets, 6435);
}

Outcome c6() {
  const BinaryCode gmx = BinaryCode::from_generator(
      BitMatrix::parse(std::vector<std::string>{"0b100110", "0b010101", "0b001011"}));
  const Classification a = classify_small(6, 3, 3);
  const Classification b = classify_small(7, 4, 3);
  const bool ok = a.classes.size() == 1 && permutation_equivalent(a.classes[0].representative, gmx) &&
                  b.classes.size() == 1;
  return {ok, std::to_string(a.classes.size()) + " and " + std::to_string(b.classes.size()) + " classes"};
}

Outcome c7() {
  const FieldSpec f = FieldSpec::make(4, 0x13);
  const Felt w = f.x();
  const Felt a = span_product(f, f.one(), w, f.pow(w, 3));
  const Felt a5 = f.pow(a, 5);
  const bool ok = a == f.mul(w, w) + f.one() && a5 == f.mul(w, w) + w + f.one() && a5 != f.one() &&
                  !f.is_cube(a);
  return {ok, "A = " + to_hex(a) + ", A^5 = " + to_hex(a5)};
}

Outcome c8() {
  bool ok = true;
  std::string detail;
  for (const int m : {4, 6, 8, 10}) {
    const FieldSpec f = FieldSpec::make(m);
    const auto rep = weil_check(f, fpoly::from_binary(0b10010));
    const std::int64_t nine_q = 9 * static_cast<std::int64_t>(f.size());
    ok = ok && rep.squared_magnitude <= nine_q && rep.pass;
    detail += "m=" + std::to_string(m) + ":" + std::to_string(rep.squared_magnitude) + "<=" +
              std::to_string(nine_q) + " ";
  }
  return {ok, detail};
}

Outcome c9() {
  bool ok = true;
  int passed = 0, skipped = 0;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size_pick(1, 6);
  for (const int m : {8, 10, 12}) {
    const FieldSpec f = FieldSpec::make(m);
    int done = 0;
    while (done < 200) {
      const auto terms = random_terms(f, static_cast<std::size_t>(size_pick(rng)), rng);
      if (rational_is_psi_trivial(f, terms)) {
        ++skipped;
        continue;
      }
      const bool p = cochrane_check(f, terms).pass;
      ok = ok && p;
      passed += p;
      ++done;
    }
  }
  return {ok, std::to_string(passed) + "/600 (" + std::to_string(skipped) + " psi-trivial redrawn)"};
}

Outcome c10() {
  bool ok = true;
  std::size_t widest = 0;
  std::mt19937_64 rng(7);
  for (const auto [k, m] : {std::pair{2, 7}, std::pair{3, 11}}) {
    const FieldSpec f = FieldSpec::make(m);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<SyndromePair> targets;
      for (int i = 0; i < k; ++i) {
        targets.push_back({f.element(rng() % f.size()), f.element(rng() % f.size())});
      }
      const auto sol = cover_2kplus1(f, targets);
      ok = ok && sol && verify_solution(f, targets, *sol) &&
           sol->columns.size() <= static_cast<std::size_t>(2 * k + 1);
      if (sol) widest = std::max(widest, sol->columns.size());
    }
  }
  return {ok, "2000 tuples, widest cover " + std::to_string(widest)};
}

Outcome c11() {
  const BoundReport a = counting_bound(2, 4);
  const BoundReport b = counting_bound(3, 9);
  const BoundReport c = counting_bound(3, 8);
  const bool ok = a.hypothesis_holds && a.bound == 4 && b.hypothesis_holds && b.bound == 6 &&
                  !c.hypothesis_holds;
  return {ok, "rho_2 >= 4 at m=4, rho_3 >= 6 at m=9, fails at m=8"};
}

Outcome c12() {
  bool ok = true;
  std::uint64_t cases = 0;
  for (int m = 2; m <= 8; ++m) {
    const FieldSpec f = FieldSpec::make(m);
    for (std::uint64_t av = 1; av < f.size(); ++av) {
      const Felt a = f.element(av);
      const Felt a2 = f.mul(a, a);
      for (std::uint64_t bv = 0; bv < f.size(); ++bv) {
        const Felt b = f.element(bv);
        const auto roots = f.solve_quadratic(a, b);
        const bool tr0 = f.trace(f.div(b, a2)) == 0;
        ok = ok && roots.size() == (tr0 ? 2u : 0u);
        for (const Felt y : roots) ok = ok && f.mul(y, y) + f.mul(a, y) + b == Felt{};
        ++cases;
      }
    }
  }
  return {ok, std::to_string(cases) + " quadratics"};
}

Outcome c13() {
  const FieldSpec f = FieldSpec::make(4);
  const auto a = verify_y1y2y3(f, CheckMode::kExhaustive);
  const auto b = verify_cube_lemma(f, CheckMode::kExhaustive);
  const auto c = verify_beta4(f, CheckMode::kExhaustive);
  return {a.holds && b.holds && c.holds,
          std::to_string(a.cases + b.cases + c.cases) + " cases"};
}

Outcome c14() {
  const FieldSpec f = FieldSpec::make(4);
  const CoverEngine engine(build_columns(f));
  const BinaryCode c = bch_code(f, 2);
  const BinaryCode sup = bch_code(f, 1);
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 2; ++r) {
    const int rho = gcr_exact(engine, r).rho;
    const int dcc = d_cc(engine, r).value;
    const int gen = d_cc_generic(c, sup, r);
    const auto ham = static_cast<int>(hamming_ghw_sequence(4).at(static_cast<std::uint64_t>(r)));
    ok = ok && rho >= dcc && dcc >= ham && dcc == gen;
    detail += "r=" + std::to_string(r) + ":" + std::to_string(rho) + ">=" + std::to_string(dcc) + ">=" +
              std::to_string(ham) + " ";
  }
  return {ok, detail};
}

Outcome c15() {
  const GcrResult g = gcr_exact(build_columns(FieldSpec::make(4)), 3);
  return {g.rho >= 7, "rho_3 = " + std::to_string(g.rho)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{c1, c2,  c3,  c4,  c5,  c6,  c7, c8,
                                                       c9, c10, c11, c12, c13, c14, c15};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  (%.2fs)  %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
