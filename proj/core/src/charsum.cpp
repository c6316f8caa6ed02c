#include "bchcov/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bchcov/bitlin.hpp"
#include "bchcov/error.hpp"

namespace bchcov {

namespace {

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void require_even(const FieldSpec& f, const char* op) {
  if (f.m() % 2 != 0) {
    throw PreconditionError(std::string(op) + ": no order-3 character for odd m=" +
                            std::to_string(f.m()));
  }
}

template <class Fn>
IdentityReport run_triples(const FieldSpec& f, CheckMode mode, std::uint64_t trials,
                           std::uint64_t seed, const Fn& check) {
  IdentityReport rep;
  auto one = [&](Felt y1, Felt y2, Felt y3) {
    const int outcome = check(y1, y2, y3);
    if (outcome < 0) {
      ++rep.skipped;
    } else {
      ++rep.cases;
      rep.holds = rep.holds && outcome == 1;
    }
  };
  if (mode == CheckMode::kExhaustive) {
    if (f.m() > 6) throw PreconditionError("exhaustive triple checks require m <= 6");
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      for (std::uint64_t b = 0; b < f.size(); ++b) {
        for (std::uint64_t c = 0; c < f.size(); ++c) {
          one(f.element(a), f.element(b), f.element(c));
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
    for (std::uint64_t i = 0; i < trials; ++i) {
      const Felt y1 = f.element(pick(rng));
      const Felt y2 = f.element(pick(rng));
      const Felt y3 = f.element(pick(rng));
      one(y1, y2, y3);
    }
  }
  return rep;
}

// y1 y2 (y1 + y2)
Felt triad(const FieldSpec& f, Felt y1, Felt y2) { return f.mul(f.mul(y1, y2), y1 + y2); }

}  // namespace

EisensteinInt EisensteinInt::zeta_pow(std::uint64_t e) {
  switch (e % 3) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    default:
      return {-1, -1};  // zeta^2 = -1 - zeta
  }
}

EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
  // zeta^2 = -1 - zeta
  const std::int64_t bb = x.b * y.b;
  return {x.a * y.a - bb, x.a * y.b + x.b * y.a - bb};
}

DlogTable::DlogTable(const FieldSpec& f) : log_(f.size(), 0) {
  if (f.m() > 16) throw PreconditionError("discrete-log table requires m <= 16");
  Felt x = f.one();
  for (std::uint32_t j = 0; j < f.group_order(); ++j) {
    log_[x.bits] = j;
    x = f.mul(x, f.generator());
  }
}

std::uint32_t DlogTable::log(Felt x) const {
  if (x.is_zero()) throw PreconditionError("discrete log of 0");
  return log_[x.bits];
}

CubicCharacter::CubicCharacter(const FieldSpec& f) : dlog_((require_even(f, "cubic character"), f)) {}

EisensteinInt CubicCharacter::operator()(Felt u) const {
  if (u.is_zero()) return {};
  return EisensteinInt::zeta_pow(dlog_.log(u));
}

namespace fpoly {

void trim(FieldPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const FieldPoly& p) {
  for (auto i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return -1;
}

Felt evaluate(const FieldSpec& f, const FieldPoly& p, Felt x) {
  Felt acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.mul(acc, x) + *it;
  return acc;
}

FieldPoly mul(const FieldSpec& f, const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += f.mul(a[i], b[j]);
  }
  trim(out);
  return out;
}

FieldPoly derivative(const FieldPoly& p) {
  FieldPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(i % 2 == 1 ? p[i] : Felt{});
  trim(out);
  return out;
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldSpec& f, const FieldPoly& a, const FieldPoly& b) {
  const int db = degree(b);
  if (db < 0) throw DivisionByZeroError();
  FieldPoly rem = a;
  trim(rem);
  const Felt lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  FieldPoly quot(rem.size() > static_cast<std::size_t>(db) ? rem.size() - static_cast<std::size_t>(db) : 0);
  for (int dr = degree(rem); dr >= db; dr = degree(rem)) {
    const Felt c = f.mul(rem[static_cast<std::size_t>(dr)], lead_inv);
    const auto shift = static_cast<std::size_t>(dr - db);
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) {
      rem[shift + static_cast<std::size_t>(i)] += f.mul(c, b[static_cast<std::size_t>(i)]);
    }
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

FieldPoly monic(const FieldSpec& f, const FieldPoly& p) {
  FieldPoly out = p;
  trim(out);
  if (out.empty()) return out;
  const Felt inv = f.inv(out.back());
  for (auto& c : out) c = f.mul(c, inv);
  return out;
}

FieldPoly gcd(const FieldSpec& f, FieldPoly a, FieldPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

FieldPoly radical(const FieldSpec& f, const FieldPoly& p) {
  FieldPoly g = monic(f, p);
  if (degree(g) <= 0) return {f.one()};
  const FieldPoly d = derivative(g);
  if (d.empty()) {
    // g(x) = h(x)^2 with h's coefficients the square roots of g's even ones.
    FieldPoly h;
    for (std::size_t i = 0; i < g.size(); i += 2) h.push_back(f.sqrt(g[i]));
    return radical(f, h);
  }
  const FieldPoly common = gcd(f, g, d);
  if (degree(common) == 0) return g;
  // g / gcd(g, g') carries the factors of odd multiplicity; common carries
  // every repeated factor.
  const FieldPoly w = divmod(f, g, common).first;
  const FieldPoly r = radical(f, common);
  const FieldPoly overlap = gcd(f, w, r);
  return monic(f, divmod(f, mul(f, w, r), overlap).first);
}

int distinct_roots(const FieldSpec& f, const FieldPoly& p) { return degree(radical(f, p)); }

bool is_cube(const FieldSpec& f, const FieldPoly& p) {
  const FieldPoly g = monic(f, p);
  const int deg = degree(g);
  if (deg <= 0) return true;
  if (deg % 3 != 0) return false;
  const int d = deg / 3;
  // Monic cube root, fixed from the top: the x^(3d-j) coefficient of h^3 is
  // h_(d-j) plus terms in higher coefficients (3 = 1 in characteristic 2).
  FieldPoly h(static_cast<std::size_t>(d) + 1);
  h[static_cast<std::size_t>(d)] = f.one();
  for (int j = 1; j <= d; ++j) {
    const FieldPoly cube = mul(f, mul(f, h, h), h);
    const auto idx = static_cast<std::size_t>(3 * d - j);
    const Felt have = idx < cube.size() ? cube[idx] : Felt{};
    h[static_cast<std::size_t>(d - j)] = g[idx] + have;
  }
  FieldPoly cube = mul(f, mul(f, h, h), h);
  return cube == g;
}

FieldPoly from_binary(std::uint64_t mask) {
  FieldPoly p;
  for (int i = 0; mask >> i; ++i) p.push_back(Felt{static_cast<std::uint32_t>((mask >> i) & 1u)});
  return p;
}

}  // namespace fpoly

EisensteinInt mult_char_sum(const FieldSpec& f, const FieldPoly& poly) {
  require_even(f, "mult_char_sum");
  if (f.m() > 16) throw PreconditionError("mult_char_sum requires m <= 16");
  if (fpoly::degree(poly) > 8) throw PreconditionError("mult_char_sum requires degree <= 8");
  const CubicCharacter chi(f);
  EisensteinInt sum;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    sum += chi(fpoly::evaluate(f, poly, f.element(x)));
  }
  return sum;
}

CharSumReport weil_check(const FieldSpec& f, const FieldPoly& poly, std::string family) {
  require_even(f, "weil_check");
  if (fpoly::is_cube(f, poly)) {
    throw PreconditionError("weil_check: polynomial is a cube, Weil's bound does not apply");
  }
  CharSumReport rep;
  rep.kind = "weil";
  rep.family = std::move(family);
  rep.m = f.m();
  const EisensteinInt sum = mult_char_sum(f, poly);
  rep.mult_sum = sum;
  rep.parameter = fpoly::distinct_roots(f, poly);
  rep.squared_magnitude = sum.norm();
  const std::int64_t s1 = rep.parameter - 1;
  rep.bound_squared = s1 * s1 * static_cast<std::int64_t>(f.size());
  rep.pass = rep.squared_magnitude <= rep.bound_squared;
  return rep;
}

std::vector<NamedPoly> weil_corpus() {
  return {
      {"x(1+x)(1+x+x^2)", 0b10010},   // = x^4 + x
      {"x", 0b10},
      {"x^2", 0b100},
      {"x^2+x", 0b110},
      {"x^2(x+1)", 0b1100},
      {"x^3+x+1", 0b1011},
      {"x^4+x+1", 0b10011},
      {"x^5+x^2+1", 0b100101},
      {"x^6+x^3+x", 0b1001010},
      {"x^7+x+1", 0b10000011},
      {"x^8+x^4+x^3+x+1", 0b100011011},
  };
}

Felt rational_value(const FieldSpec& f, std::span<const RationalTerm> terms, Felt x) {
  Felt acc{};
  for (const auto& t : terms) {
    const Felt num = f.mul(t.a, f.frobenius(x)) + f.mul(f.frobenius(t.a), x) + f.cube(t.a) + t.b;
    acc += f.div(num, f.cube(t.a + x));
  }
  return acc;
}

namespace {

// Per distinct pole a: parity of the term count and the sum of the b's.
std::map<Felt, std::pair<int, Felt>> group_poles(std::span<const RationalTerm> terms) {
  std::map<Felt, std::pair<int, Felt>> poles;
  for (const auto& t : terms) {
    auto& g = poles[t.a];
    g.first ^= 1;
    g.second += t.b;
  }
  return poles;
}

}  // namespace

bool rational_is_zero(const FieldSpec& f, std::span<const RationalTerm> terms) {
  (void)f;
  // Each pole contributes (c (a X^2 + a^2 X + a^3) + B) / (X + a)^3, a proper
  // fraction; they sum to zero only if each numerator vanishes.
  for (const auto& [a, g] : group_poles(terms)) {
    const auto [parity, b_sum] = g;
    if (!b_sum.is_zero()) return false;
    if (parity == 1 && !a.is_zero()) return false;
  }
  return true;
}

int rational_pole_weight(const FieldSpec& f, std::span<const RationalTerm> terms) {
  (void)f;
  int weight = 0;
  for (const auto& [a, g] : group_poles(terms)) {
    const bool vanishes = g.second.is_zero() && (g.first == 0 || a.is_zero());
    if (!vanishes) weight += 4;
  }
  return weight;
}

bool rational_is_psi_trivial(const FieldSpec& f, std::span<const RationalTerm> terms) {
  return reduced_pole_weight(f, terms) == 0;
}

int reduced_pole_weight(const FieldSpec& f, std::span<const RationalTerm> terms) {
  // With u = X + a a pole group is c (a/u + (a/u)^2) + (c a^3 + B)/u^3, and
  // v + v^2 has trace 0, so psi sees only C/u^3 with C = c a^3 + B.
  int weight = 0;
  for (const auto& [a, g] : group_poles(terms)) {
    const auto [parity, b_sum] = g;
    const Felt c = (parity == 1 ? f.cube(a) : Felt{}) + b_sum;
    if (!c.is_zero()) weight += 4;
  }
  return weight;
}

RationalSum additive_rational_sum(const FieldSpec& f, std::span<const RationalTerm> terms) {
  if (terms.size() > 6) throw PreconditionError("additive_rational_sum supports at most 6 terms");
  if (f.m() > 20) throw PreconditionError("additive_rational_sum requires m <= 20");
  RationalSum out;
  out.identically_zero = rational_is_zero(f, terms);
  out.degenerate = rational_is_psi_trivial(f, terms);
  for (std::uint64_t xv = 0; xv < f.size(); ++xv) {
    const Felt x = f.element(xv);
    const bool pole = std::any_of(terms.begin(), terms.end(),
                                  [&](const RationalTerm& t) { return t.a == x; });
    if (pole) continue;
    ++out.domain;
    out.sum += psi(f, rational_value(f, terms, x));
  }
  return out;
}

CharSumReport cochrane_check(const FieldSpec& f, std::span<const RationalTerm> terms) {
  const RationalSum s = additive_rational_sum(f, terms);
  if (s.degenerate) {
    throw PreconditionError(
        "cochrane_check: psi(f_I) is constant, f_I = h^2 + h (degenerate family)");
  }
  CharSumReport rep;
  rep.kind = "cochrane";
  rep.m = f.m();
  rep.family = "f_I with " + std::to_string(terms.size()) + " term(s)";
  rep.add_sum = s.sum;
  rep.parameter = rational_pole_weight(f, terms);
  rep.reduced_parameter = reduced_pole_weight(f, terms);
  rep.squared_magnitude = s.sum * s.sum;
  // floor((1 + c sqrt(q))^2) = 1 + c^2 q + floor(2 c sqrt(q)), c = L - 2 >= 1.
  const std::int64_t c = rep.parameter - 2;
  const auto q = static_cast<std::int64_t>(f.size());
  rep.bound_squared = 1 + c * c * q + isqrt(4 * c * c * q);
  rep.pass = rep.squared_magnitude <= rep.bound_squared;
  return rep;
}

std::vector<RationalTerm> random_terms(const FieldSpec& f, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
  std::vector<RationalTerm> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Felt a = f.element(pick(rng));
    const Felt b = f.element(pick(rng));
    out.push_back({a, b});
  }
  return out;
}

IdentityReport verify_y1y2y3(const FieldSpec& f, CheckMode mode, std::uint64_t trials,
                             std::uint64_t seed) {
  IdentityReport rep;
  auto check = [&](Felt y1, Felt y2) {
    const Felt y3 = y1 + y2;
    const Felt alpha = f.cube(y1) + f.cube(y2) + f.cube(y3);
    ++rep.cases;
    rep.holds = rep.holds && alpha == triad(f, y1, y2);
  };
  if (mode == CheckMode::kExhaustive) {
    if (f.m() > 6) throw PreconditionError("exhaustive y1y2y3 check requires m <= 6");
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      for (std::uint64_t b = 0; b < f.size(); ++b) check(f.element(a), f.element(b));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
    for (std::uint64_t i = 0; i < trials; ++i) {
      const Felt y1 = f.element(pick(rng));
      check(y1, f.element(pick(rng)));
    }
  }
  return rep;
}

IdentityReport verify_cube_lemma(const FieldSpec& f, CheckMode mode, std::uint64_t trials,
                                 std::uint64_t seed) {
  require_even(f, "verify_cube_lemma");
  return run_triples(f, mode, trials, seed, [&](Felt y1, Felt y2, Felt y3) {
    const Felt a1 = triad(f, y1, y2);
    const Felt a2 = triad(f, y2, y3);
    const Felt a3 = triad(f, y3, y1);
    const Felt product = span_product(f, a1, a2, a3);
    if (product.is_zero()) return -1;
    Felt root = f.mul(f.mul(y1, y2), y3);
    root = f.mul(root, y1 + y2);
    root = f.mul(root, y2 + y3);
    root = f.mul(root, y3 + y1);
    root = f.mul(root, y1 + y2 + y3);
    return (f.is_cube(product) && product == f.cube(root)) ? 1 : 0;
  });
}

IdentityReport verify_beta4(const FieldSpec& f, CheckMode mode, std::uint64_t trials,
                            std::uint64_t seed) {
  return run_triples(f, mode, trials, seed, [&](Felt y5, Felt y6, Felt y7) {
    const Felt lhs = f.cube(y5 + y6 + y7) + f.cube(y5) + f.cube(y6) + f.cube(y7);
    const Felt rhs = triad(f, y5, y6) + triad(f, y5, y7) + triad(f, y6, y7);
    return lhs == rhs ? 1 : 0;
  });
}

Felt span_product(const FieldSpec& f, Felt a1, Felt a2, Felt a3) {
  Felt p = f.mul(f.mul(a1, a2), a3);
  p = f.mul(p, a1 + a2);
  p = f.mul(p, a1 + a3);
  p = f.mul(p, a2 + a3);
  return f.mul(p, a1 + a2 + a3);
}

bool is_noncube_triple(const FieldSpec& f, Felt a1, Felt a2, Felt a3) {
  const std::uint64_t rows[] = {a1.bits, a2.bits, a3.bits};
  if (packed::rank(rows) != 3) return false;
  const Felt product = span_product(f, a1, a2, a3);
  return !product.is_zero() && !f.is_cube(product);
}

std::optional<NoncubeTriple> find_noncube_triple(const FieldSpec& f) {
  if (f.m() < 4 || f.m() % 2 != 0) {
    throw PreconditionError("find_noncube_triple requires even m >= 4, got m=" +
                            std::to_string(f.m()));
  }
  for (std::uint64_t v = 0; v < f.size(); ++v) {
    const Felt x0 = f.element(v);
    const Felt x02 = f.frobenius(x0);
    if (is_noncube_triple(f, f.one(), x0, x02)) {
      return NoncubeTriple{f.one(), x0, x02, span_product(f, f.one(), x0, x02), x0};
    }
  }
  return std::nullopt;
}

}  // namespace bchcov
