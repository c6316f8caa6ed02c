#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bchcov/bch.hpp"
#include "bchcov/gf2m.hpp"

namespace bchcov {

/// a + b*zeta with zeta a primitive cube root of unity; exact.
struct EisensteinInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  /// zeta^e.
  static EisensteinInt zeta_pow(std::uint64_t e);
  /// |a + b zeta|^2 = a^2 - ab + b^2.
  std::int64_t norm() const { return a * a - a * b + b * b; }

  EisensteinInt& operator+=(EisensteinInt o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend EisensteinInt operator+(EisensteinInt x, EisensteinInt y) { return x += y; }
  friend EisensteinInt operator*(EisensteinInt x, EisensteinInt y);
  friend bool operator==(EisensteinInt, EisensteinInt) = default;
};

/// Discrete logarithms to the field generator. Requires m <= 16.
class DlogTable {
 public:
  explicit DlogTable(const FieldSpec& f);
  std::uint32_t log(Felt x) const;

 private:
  std::vector<std::uint32_t> log_;
};

/// Order-3 multiplicative character chi(u) = zeta^(dlog u mod 3), chi(0) = 0.
/// Exists only for even m.
class CubicCharacter {
 public:
  explicit CubicCharacter(const FieldSpec& f);
  EisensteinInt operator()(Felt u) const;

 private:
  DlogTable dlog_;
};

/// Additive character (-1)^Tr(u).
inline int psi(const FieldSpec& f, Felt u) { return f.trace(u) ? -1 : 1; }

/// Polynomials over GF(2^m); coefficient i multiplies x^i.
using FieldPoly = std::vector<Felt>;

namespace fpoly {

void trim(FieldPoly& p);
int degree(const FieldPoly& p);
Felt evaluate(const FieldSpec& f, const FieldPoly& p, Felt x);
FieldPoly mul(const FieldSpec& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly derivative(const FieldPoly& p);
/// Quotient and remainder; b must be nonzero.
std::pair<FieldPoly, FieldPoly> divmod(const FieldSpec& f, const FieldPoly& a, const FieldPoly& b);
FieldPoly monic(const FieldSpec& f, const FieldPoly& p);
FieldPoly gcd(const FieldSpec& f, FieldPoly a, FieldPoly b);
/// Product of the distinct monic irreducible factors.
FieldPoly radical(const FieldSpec& f, const FieldPoly& p);
/// Number of distinct roots in the algebraic closure, deg radical(p).
int distinct_roots(const FieldSpec& f, const FieldPoly& p);
/// Whether p = c * h^3 over the closure (zero and constants included).
bool is_cube(const FieldSpec& f, const FieldPoly& p);
/// Polynomial with GF(2) coefficients from a bit mask (bit i -> x^i).
FieldPoly from_binary(std::uint64_t mask);

}  // namespace fpoly

/// Exact sum of chi(poly(x)) over GF(2^m). Requires even m <= 16, deg <= 8.
EisensteinInt mult_char_sum(const FieldSpec& f, const FieldPoly& poly);

struct CharSumReport {
  std::string kind;    ///< "weil" or "cochrane"
  std::string family;  ///< human-readable description of the summand
  int m = 0;
  std::optional<EisensteinInt> mult_sum;  ///< weil
  std::optional<std::int64_t> add_sum;    ///< cochrane
  /// s (distinct roots) for weil, L for cochrane.
  int parameter = 0;
  /// cochrane only: L of the reduced fraction (<= parameter).
  std::optional<int> reduced_parameter;
  std::int64_t squared_magnitude = 0;
  /// floor of the squared bound; pass <=> squared_magnitude <= bound_squared.
  std::int64_t bound_squared = 0;
  bool pass = false;
};

/// |sum chi(f)|^2 <= (s - 1)^2 q. Rejects polynomials that are cubes.
CharSumReport weil_check(const FieldSpec& f, const FieldPoly& poly, std::string family = {});

/// A named polynomial with GF(2) coefficients, valid over every GF(2^m).
struct NamedPoly {
  std::string name;
  std::uint64_t mask;
};
/// Built-in non-cube polynomials used by the Weil sweep.
std::vector<NamedPoly> weil_corpus();

struct RationalTerm {
  Felt a;
  Felt b;
};

struct RationalSum {
  std::int64_t sum = 0;
  /// psi(f_I) is constant on the domain (f_I = h^2 + h, zero included);
  /// the sum is then the domain size and the bound's hypothesis fails.
  bool degenerate = false;
  bool identically_zero = false;  ///< f_I is the zero function
  std::uint64_t domain = 0;  ///< q minus the number of distinct poles
};

/// f_I(x) = sum_i (a_i x^2 + a_i^2 x + a_i^3 + b_i) / (a_i + x)^3.
Felt rational_value(const FieldSpec& f, std::span<const RationalTerm> terms, Felt x);
/// Whether f_I vanishes identically, decided from its partial fractions.
bool rational_is_zero(const FieldSpec& f, std::span<const RationalTerm> terms);
/// L with multiplicity 3 at every distinct pole that survives cancellation
/// (4 per pole).
int rational_pole_weight(const FieldSpec& f, std::span<const RationalTerm> terms);
/// L of sum_a C_a / (X + a)^3, the fraction psi-equivalent to f_I after
/// removing its h^2 + h part: 4 per pole with C_a = c_a a^3 + B_a nonzero,
/// c_a the parity of the terms at a and B_a the sum of their b's.
int reduced_pole_weight(const FieldSpec& f, std::span<const RationalTerm> terms);
/// Whether psi(f_I) is constant, i.e. reduced_pole_weight is 0.
bool rational_is_psi_trivial(const FieldSpec& f, std::span<const RationalTerm> terms);

/// Exact sum of psi(f_I(x)) over x outside the poles {a_i}. |terms| <= 6.
RationalSum additive_rational_sum(const FieldSpec& f, std::span<const RationalTerm> terms);

/// |sum| <= 1 + (L - 2) sqrt(q) with M = 0. Rejects psi-trivial f_I.
CharSumReport cochrane_check(const FieldSpec& f, std::span<const RationalTerm> terms);

/// Uniformly random terms (a, b) in GF(2^m)^2.
std::vector<RationalTerm> random_terms(const FieldSpec& f, std::size_t count, std::mt19937_64& rng);

enum class CheckMode { kExhaustive, kRandom };

struct IdentityReport {
  bool holds = true;
  std::uint64_t cases = 0;    ///< instances evaluated
  std::uint64_t skipped = 0;  ///< instances outside the hypothesis (e.g. A = 0)
};

/// y3 = y1 + y2 implies y1^3 + y2^3 + y3^3 = y1 y2 (y1 + y2).
/// Exhaustive mode requires m <= 6.
IdentityReport verify_y1y2y3(const FieldSpec& f, CheckMode mode, std::uint64_t trials = 10000,
                             std::uint64_t seed = 1);

/// For alpha_1 = y1 y2 (y1+y2), alpha_2 = y2 y3 (y2+y3), alpha_3 = y3 y1 (y3+y1):
/// A is a cube and equals (y1 y2 y3 (y1+y2)(y2+y3)(y3+y1)(y1+y2+y3))^3.
/// Requires even m; exhaustive mode requires m <= 6.
IdentityReport verify_cube_lemma(const FieldSpec& f, CheckMode mode, std::uint64_t trials = 10000,
                                 std::uint64_t seed = 1);

/// (y5+y6+y7)^3 + y5^3 + y6^3 + y7^3 = y5 y6 (y5+y6) + y5 y7 (y5+y7) + y6 y7 (y6+y7).
/// Exhaustive mode requires m <= 6.
IdentityReport verify_beta4(const FieldSpec& f, CheckMode mode, std::uint64_t trials = 10000,
                            std::uint64_t seed = 1);

/// Product of the nonzero elements of span{a1, a2, a3}:
/// a1 a2 a3 (a1+a2)(a1+a3)(a2+a3)(a1+a2+a3).
Felt span_product(const FieldSpec& f, Felt a1, Felt a2, Felt a3);

struct NoncubeTriple {
  Felt alpha1, alpha2, alpha3;
  Felt product;  ///< span_product of the triple
  std::optional<Felt> x0;  ///< set when the triple is (1, x0, x0^2)
};

/// Whether {a1, a2, a3} is F2-independent with a non-cube span product.
bool is_noncube_triple(const FieldSpec& f, Felt a1, Felt a2, Felt a3);

/// First x0 (in increasing coordinate order) with (1, x0, x0^2) a non-cube
/// triple. Requires even m >= 4; nullopt if the scan exhausts the field.
std::optional<NoncubeTriple> find_noncube_triple(const FieldSpec& f);

}  // namespace bchcov
