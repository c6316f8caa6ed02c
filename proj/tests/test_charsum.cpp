#include <doctest.h>

#include <complex>
#include <random>

#include "bchcov/charsum.hpp"
#include "bchcov/error.hpp"

using namespace bchcov;

namespace {

// Floating-point value of the character sum, only to cross-check the exact
// Eisenstein arithmetic.
std::complex<double> as_complex(EisensteinInt z) {
  const std::complex<double> zeta(-0.5, std::sqrt(3.0) / 2);
  return static_cast<double>(z.a) + static_cast<double>(z.b) * zeta;
}

// Roots of a GF(2)-polynomial inside `big`; equals the closure count when
// `big` contains a splitting field.
int distinct_roots_in(const FieldSpec& big, std::uint64_t mask) {
  const FieldPoly p = fpoly::from_binary(mask);
  int count = 0;
  for (std::uint64_t v = 0; v < big.size(); ++v) {
    if (fpoly::evaluate(big, p, big.element(v)).is_zero()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("Eisenstein arithmetic") {
  const EisensteinInt z = EisensteinInt::zeta_pow(1);
  CHECK(z * z == EisensteinInt::zeta_pow(2));
  CHECK(z * z * z == EisensteinInt::zeta_pow(0));
  CHECK(EisensteinInt::zeta_pow(0) + z + z * z == EisensteinInt{});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const EisensteinInt a{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20};
    const EisensteinInt b{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20};
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(std::abs(std::norm(as_complex(a)) - static_cast<double>(a.norm())) < 1e-6);
  }
}

TEST_CASE("cubic character is multiplicative") {
  for (int m = 2; m <= 12; m += 2) {
    const FieldSpec f = FieldSpec::make(m);
    const CubicCharacter chi(f);
    std::mt19937_64 rng(static_cast<std::uint64_t>(m));
    for (int i = 0; i < 10000; ++i) {
      const Felt u = f.element(rng() % f.size());
      const Felt v = f.element(rng() % f.size());
      CHECK(chi(f.mul(u, v)) == chi(u) * chi(v));
    }
    CHECK(chi(Felt{}) == EisensteinInt{});
    // chi is trivial exactly on the cubes
    for (std::uint64_t a = 1; a < f.size(); a += 7) {
      CHECK((chi(f.element(a)) == EisensteinInt::zeta_pow(0)) == f.is_cube(f.element(a)));
    }
  }
  CHECK_THROWS_AS(CubicCharacter(FieldSpec::make(5)), PreconditionError);
}

TEST_CASE("additive character is a homomorphism") {
  for (int m = 2; m <= 8; ++m) {
    const FieldSpec f = FieldSpec::make(m);
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      for (std::uint64_t b = 0; b < f.size(); ++b) {
        CHECK(psi(f, f.element(a) + f.element(b)) == psi(f, f.element(a)) * psi(f, f.element(b)));
      }
    }
  }
}

TEST_CASE("mult_char_sum small cases") {
  const FieldSpec f = FieldSpec::make(4);
  CHECK(mult_char_sum(f, fpoly::from_binary(1)) == EisensteinInt{16, 0});
  CHECK(mult_char_sum(f, fpoly::from_binary(0b10)) == EisensteinInt{});
  CHECK(mult_char_sum(f, fpoly::from_binary(0b100)) == EisensteinInt{});
  CHECK_THROWS_AS(mult_char_sum(FieldSpec::make(5), fpoly::from_binary(0b10)), PreconditionError);
  CHECK_THROWS_AS(mult_char_sum(f, fpoly::from_binary(0x3ff)), PreconditionError);
}

TEST_CASE("polynomial helpers") {
  const FieldSpec f = FieldSpec::make(4);
  // x^4 + x = x (x+1)(x^2+x+1): four distinct roots
  CHECK(fpoly::distinct_roots(f, fpoly::from_binary(0b10010)) == 4);
  CHECK(fpoly::distinct_roots(f, fpoly::from_binary(0b10)) == 1);
  CHECK(fpoly::distinct_roots(f, fpoly::from_binary(0b100)) == 1);
  CHECK(fpoly::distinct_roots(f, fpoly::from_binary(0b1100)) == 2);    // x^2 (x+1)
  CHECK(fpoly::distinct_roots(f, fpoly::from_binary(0b10001)) == 1);   // (x+1)^4
  CHECK(fpoly::distinct_roots(f, fpoly::from_binary(0b101000)) == 2);  // x^3 (x^2+1)
  CHECK(fpoly::is_cube(f, fpoly::from_binary(0b1000)));                 // x^3
  CHECK(fpoly::is_cube(f, fpoly::from_binary(0b1111)));                 // (x+1)^3
  CHECK(fpoly::is_cube(f, fpoly::from_binary(1)));
  CHECK_FALSE(fpoly::is_cube(f, fpoly::from_binary(0b10010)));
  CHECK_FALSE(fpoly::is_cube(f, fpoly::from_binary(0b1001)));  // x^3 + 1, squarefree
  // cube of a polynomial with field coefficients
  const FieldPoly h{Felt{0x7}, Felt{0x3}, Felt{1}};
  const FieldPoly h3 = fpoly::mul(f, fpoly::mul(f, h, h), h);
  CHECK(fpoly::is_cube(f, h3));
  FieldPoly scaled = h3;
  for (auto& c : scaled) c = f.mul(c, Felt{0x2});
  CHECK(fpoly::is_cube(f, scaled));
  CHECK(fpoly::distinct_roots(f, h3) == 2);
  // division identity
  const auto [q, r] = fpoly::divmod(f, h3, h);
  CHECK(r.empty());
  CHECK(fpoly::mul(f, q, h) == h3);
}

TEST_CASE("distinct roots agree with counting roots in a splitting field") {
  // factor degrees of these all divide 12
  const FieldSpec f12 = FieldSpec::make(12);
  const FieldSpec f4 = FieldSpec::make(4);
  for (const std::uint64_t mask : {0b10010ull, 0b110ull, 0b1100ull, 0b1011ull, 0b10011ull}) {
    CHECK(fpoly::distinct_roots(f4, fpoly::from_binary(mask)) == distinct_roots_in(f12, mask));
  }
}

TEST_CASE("Weil bound on the corpus") {
  for (const int m : {4, 6, 8, 10}) {
    const FieldSpec f = FieldSpec::make(m);
    for (const auto& p : weil_corpus()) {
      const FieldPoly poly = fpoly::from_binary(p.mask);
      if (fpoly::is_cube(f, poly)) continue;
      const CharSumReport rep = weil_check(f, poly, p.name);
      CAPTURE(m);
      CAPTURE(p.name);
      CHECK(rep.pass);
      CHECK(rep.pass == (rep.squared_magnitude <= rep.bound_squared));
      CHECK(std::abs(std::norm(as_complex(*rep.mult_sum)) - static_cast<double>(rep.squared_magnitude)) < 1e-6);
    }
    const CharSumReport main = weil_check(f, fpoly::from_binary(0b10010));
    CHECK(main.parameter == 4);
    CHECK(main.bound_squared == 9 * static_cast<std::int64_t>(f.size()));
  }
  CHECK_THROWS_AS(weil_check(FieldSpec::make(4), fpoly::from_binary(0b1000)), PreconditionError);
}

TEST_CASE("rational sums") {
  const FieldSpec f = FieldSpec::make(8);
  const std::vector<RationalTerm> empty;
  const RationalSum e = additive_rational_sum(f, empty);
  CHECK(e.sum == 256);
  CHECK(e.degenerate);
  CHECK(e.identically_zero);

  // f_I at a single point agrees with the partial fraction reading
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto terms = random_terms(f, 1 + rng() % 6, rng);
    for (std::uint64_t xv = 0; xv < f.size(); xv += 17) {
      const Felt x = f.element(xv);
      bool pole = false;
      for (const auto& t : terms) pole = pole || t.a == x;
      if (pole) continue;
      Felt direct{};
      for (const auto& t : terms) {
        const Felt u = t.a + x;
        direct += f.div(f.mul(t.a, f.frobenius(x)) + f.mul(f.frobenius(t.a), x) + f.cube(t.a) + t.b,
                        f.mul(f.frobenius(u), u));
      }
      CHECK(rational_value(f, terms, x) == direct);
    }
  }

  // pairs that cancel exactly are zero; b = a^3 gives h^2 + h
  const Felt a = f.element(0x35);
  const Felt b = f.element(0x4c);
  const std::vector<RationalTerm> cancel{{a, b}, {a, b}};
  CHECK(rational_is_zero(f, cancel));
  CHECK(additive_rational_sum(f, cancel).sum == 255);
  const std::vector<RationalTerm> as{{a, f.cube(a)}};
  CHECK_FALSE(rational_is_zero(f, as));
  CHECK(rational_is_psi_trivial(f, as));
  const RationalSum s = additive_rational_sum(f, as);
  CHECK(s.degenerate);
  CHECK(s.sum == static_cast<std::int64_t>(s.domain));
  CHECK_THROWS_AS(cochrane_check(f, as), PreconditionError);

  std::vector<RationalTerm> seven(7, {a, b});
  CHECK_THROWS_AS(additive_rational_sum(f, seven), PreconditionError);
}

TEST_CASE("psi-triviality matches evaluation") {
  // Poles in {0, 1} keep L <= 8, so a nontrivial sum is at most 97 < q - 2.
  const FieldSpec f = FieldSpec::make(8);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<RationalTerm> terms;
    for (std::size_t i = 0; i < 1 + rng() % 4; ++i) {
      const Felt a = f.element(rng() % 2);
      const bool special = rng() % 2 == 0;
      terms.push_back({a, special ? f.cube(a) : f.element(rng() % 4)});
    }
    const RationalSum s = additive_rational_sum(f, terms);
    CHECK(s.degenerate == (s.sum == static_cast<std::int64_t>(s.domain)));
  }
}

TEST_CASE("Cochrane bound instances") {
  CHECK(cochrane_check(FieldSpec::make(8), std::vector<RationalTerm>{{Felt{3}, Felt{9}}}).bound_squared == 33 * 33);
  const auto two = cochrane_check(FieldSpec::make(8),
                                  std::vector<RationalTerm>{{Felt{3}, Felt{9}}, {Felt{5}, Felt{1}}});
  CHECK(two.parameter == 8);
  CHECK(two.bound_squared == 97 * 97);
  for (const int m : {8, 10, 12}) {
    const FieldSpec f = FieldSpec::make(m);
    std::mt19937_64 rng(static_cast<std::uint64_t>(m) * 31);
    int done = 0;
    while (done < 200) {
      const auto terms = random_terms(f, 1 + rng() % 6, rng);
      if (rational_is_psi_trivial(f, terms)) continue;
      const CharSumReport rep = cochrane_check(f, terms);
      CHECK(rep.pass);
      // the reduced fraction's L gives a bound that holds as well
      const std::int64_t c = *rep.reduced_parameter - 2;
      const auto q = static_cast<std::int64_t>(f.size());
      CHECK(static_cast<double>(std::abs(*rep.add_sum)) <= 1 + static_cast<double>(c) * std::sqrt(static_cast<double>(q)) + 1e-9);
      ++done;
    }
  }
}

TEST_CASE("identity suite") {
  const FieldSpec f4 = FieldSpec::make(4);
  CHECK(verify_y1y2y3(f4, CheckMode::kExhaustive).holds);
  const IdentityReport cube = verify_cube_lemma(f4, CheckMode::kExhaustive);
  CHECK(cube.holds);
  CHECK(cube.cases + cube.skipped == 4096);
  CHECK(cube.cases > 0);
  CHECK(verify_beta4(f4, CheckMode::kExhaustive).holds);
  const FieldSpec f12 = FieldSpec::make(12);
  CHECK(verify_y1y2y3(f12, CheckMode::kRandom, 10000, 5).holds);
  CHECK(verify_cube_lemma(f12, CheckMode::kRandom, 10000, 5).holds);
  CHECK(verify_beta4(f12, CheckMode::kRandom, 10000, 5).holds);
  CHECK(verify_beta4(FieldSpec::make(5), CheckMode::kExhaustive).holds);
  CHECK_THROWS_AS(verify_cube_lemma(FieldSpec::make(5), CheckMode::kRandom), PreconditionError);
  CHECK_THROWS_AS(verify_beta4(FieldSpec::make(8), CheckMode::kExhaustive), PreconditionError);
}

TEST_CASE("non-cube triples") {
  const FieldSpec f4 = FieldSpec::make(4);
  const Felt w = f4.x();
  const Felt w3 = f4.pow(w, 3);
  CHECK(span_product(f4, f4.one(), w, w3) == Felt{0x5});
  CHECK(f4.pow(Felt{0x5}, 5) == Felt{0x7});
  CHECK_FALSE(f4.is_cube(Felt{0x5}));
  CHECK(is_noncube_triple(f4, f4.one(), w, w3));
  CHECK_FALSE(is_noncube_triple(f4, f4.one(), w, f4.one() + w));  // dependent
  for (const int m : {4, 6, 8, 10, 12}) {
    const FieldSpec f = FieldSpec::make(m);
    const auto tri = find_noncube_triple(f);
    REQUIRE(tri.has_value());
    CHECK(is_noncube_triple(f, tri->alpha1, tri->alpha2, tri->alpha3));
    const Felt x0 = *tri->x0;
    // A = x0^4 (1+x0)^4 (1+x0+x0^2)
    const Felt x1 = f.one() + x0;
    const Felt expect = f.mul(f.mul(f.pow(x0, 4), f.pow(x1, 4)), f.one() + x0 + f.frobenius(x0));
    CHECK(tri->product == expect);
  }
  CHECK_THROWS_AS(find_noncube_triple(FieldSpec::make(5)), PreconditionError);
  CHECK_THROWS_AS(find_noncube_triple(FieldSpec::make(2)), PreconditionError);
}
