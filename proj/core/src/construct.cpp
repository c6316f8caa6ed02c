#include "bchcov/construct.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bchcov/bitlin.hpp"
#include "bchcov/error.hpp"

namespace bchcov {

Felt quadratic_constant(const FieldSpec& f, Felt a, Felt b, Felt x) {
  const Felt a2 = f.frobenius(a);
  const Felt x2 = f.frobenius(x);
  return f.mul(a, x2) + f.mul(a2, x) + f.mul(a2, a) + b;
}

std::optional<CoverSolution> cover_2kplus1(const FieldSpec& f, std::span<const SyndromePair> targets,
                                           ScanOrder order, std::uint64_t seed) {
  if (targets.empty()) throw PreconditionError("cover_2kplus1 needs k >= 1 targets");
  for (const auto& t : targets) {
    if (!f.contains(t.a) || !f.contains(t.b)) throw PreconditionError("target outside the field");
  }
  const std::size_t k = targets.size();
  CoverSolution sol;
  if (std::all_of(targets.begin(), targets.end(),
                  [](const SyndromePair& t) { return t.a.is_zero() && t.b.is_zero(); })) {
    sol.ys.assign(k, Felt{});
    sol.zs.assign(k, Felt{});
    sol.coefficients.assign(k, {});
    return sol;
  }

  std::vector<Felt> candidates;
  candidates.reserve(f.group_order());
  Felt x = f.one();
  for (std::uint64_t j = 0; j < f.group_order(); ++j) {
    const bool in_a = std::any_of(targets.begin(), targets.end(),
                                  [&](const SyndromePair& t) { return t.a == x; });
    if (!in_a) candidates.push_back(x);
    x = f.mul(x, f.generator());
  }
  if (order == ScanOrder::kRandomized) {
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  std::vector<Felt> cs(k);
  for (const Felt cand : candidates) {
    ++sol.candidates_scanned;
    bool accepted = true;
    for (std::size_t i = 0; i < k && accepted; ++i) {
      const Felt d = targets[i].a + cand;
      cs[i] = f.div(quadratic_constant(f, targets[i].a, targets[i].b, cand), f.cube(d));
      accepted = f.trace(cs[i]) == 0;
    }
    if (!accepted) continue;

    sol.x = cand;
    sol.ys.clear();
    sol.zs.clear();
    for (std::size_t i = 0; i < k; ++i) {
      const auto w = f.solve_artin_schreier(cs[i]);
      const Felt y = f.mul(targets[i].a + cand, w->first);
      sol.ys.push_back(y);
      sol.zs.push_back(targets[i].a + cand + y);
    }
    // Mod-2 multiplicities of x, y_i, z_i per target; zero values vanish.
    std::vector<std::vector<Felt>> odd(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (const Felt v : {sol.x, sol.ys[i], sol.zs[i]}) {
        if (v.is_zero()) continue;
        auto it = std::find(odd[i].begin(), odd[i].end(), v);
        if (it == odd[i].end()) {
          odd[i].push_back(v);
        } else {
          odd[i].erase(it);
        }
      }
      for (const Felt v : odd[i]) {
        if (std::find(sol.columns.begin(), sol.columns.end(), v) == sol.columns.end()) {
          sol.columns.push_back(v);
        }
      }
    }
    sol.coefficients.assign(k, std::vector<std::uint8_t>(sol.columns.size(), 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (const Felt v : odd[i]) {
        const auto pos = std::find(sol.columns.begin(), sol.columns.end(), v) - sol.columns.begin();
        sol.coefficients[i][static_cast<std::size_t>(pos)] = 1;
      }
    }
    return sol;
  }
  return std::nullopt;
}

bool verify_solution(const FieldSpec& f, std::span<const SyndromePair> targets,
                     const CoverSolution& sol) {
  const int m = f.m();
  if (sol.coefficients.size() != targets.size()) return false;
  BitMatrix span(static_cast<std::size_t>(2 * m));
  for (std::size_t j = 0; j < sol.columns.size(); ++j) {
    const Felt c = sol.columns[j];
    if (c.is_zero() || !f.contains(c)) return false;
    if (std::find(sol.columns.begin(), sol.columns.begin() + static_cast<std::ptrdiff_t>(j), c) !=
        sol.columns.begin() + static_cast<std::ptrdiff_t>(j)) {
      return false;
    }
    span.add_row(to_bitvec(column_of(f, c), m));
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!in_span(span, to_bitvec(targets[i], m))) return false;
    if (sol.coefficients[i].size() != sol.columns.size()) return false;
    SyndromePair sum{};
    for (std::size_t j = 0; j < sol.columns.size(); ++j) {
      if (sol.coefficients[i][j] > 1) return false;
      if (sol.coefficients[i][j] == 1) sum = sum + column_of(f, sol.columns[j]);
    }
    if (sum != targets[i]) return false;
  }
  return true;
}

BigInt count_solutions(const FieldSpec& f, std::span<const SyndromePair> targets) {
  if (f.m() > 14) throw PreconditionError("count_solutions requires m <= 14");
  if (targets.empty() || targets.size() > 4) {
    throw PreconditionError("count_solutions requires 1 <= k <= 4");
  }
  BigInt total = 0;
  for (std::uint64_t xv = 0; xv < f.size(); ++xv) {
    const Felt x{static_cast<std::uint32_t>(xv)};
    BigInt product = 1;
    for (const auto& t : targets) {
      if (x == t.a) {
        // The quadratic collapses to the constant a^3 + b.
        if (t.b != f.cube(t.a)) {
          product = 0;
          break;
        }
        product *= f.size();
      } else {
        const Felt c = f.div(quadratic_constant(f, t.a, t.b, x), f.cube(t.a + x));
        if (f.trace(c) != 0) {
          product = 0;
          break;
        }
        product *= 2;
      }
    }
    total += product;
  }
  return total;
}

bool meets_count_lower_bound(const BigInt& count, int k, int m) {
  const BigInt q = BigInt(1) << m;
  const BigInt c = BigInt(k - 1) * (BigInt(1) << k) + 1;
  // count >= q - k 2^k - 2 c sqrt(q)  <=>  gap <= 2 c sqrt(q), gap = q - k 2^k - count.
  const BigInt gap = q - BigInt(k) * (BigInt(1) << k) - count;
  if (gap <= 0) return true;
  return gap * gap <= 4 * c * c * q;
}

double count_lower_bound(int k, int m) {
  const double q = std::ldexp(1.0, m);
  return q - k * std::ldexp(1.0, k) - 2.0 * std::sqrt(q) * ((k - 1) * std::ldexp(1.0, k) + 1.0);
}

}  // namespace bchcov
