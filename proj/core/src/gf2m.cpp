#include "bchcov/gf2m.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "bchcov/error.hpp"

namespace bchcov {

namespace {

constexpr std::array<std::uint64_t, 31> kDefaultModuli = {
    0x7,        0xb,        0x13,        0x25,       0x43,       0x83,       0x11d,
    0x211,      0x409,      0x805,       0x1053,     0x201b,     0x402b,     0x8003,
    0x1002d,    0x20009,    0x40027,     0x80027,    0x100009,   0x200005,   0x400003,
    0x800021,   0x100001b,  0x2000009,   0x4000047,  0x8000027,  0x10000009, 0x20000005,
    0x40000053, 0x80000009, 0x1000000af,
};

void check_degree(int m) {
  if (m < FieldSpec::kMinDegree || m > FieldSpec::kMaxDegree) {
    throw PreconditionError("field degree m=" + std::to_string(m) + " outside [2, 32]");
  }
}

}  // namespace

std::string WorkLimitError::format_work(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", w);
  return buf;
}

ReducibleModulusError::ReducibleModulusError(std::uint64_t modulus, std::uint64_t factor)
    : PreconditionError("modulus " + to_hex(modulus) + " is reducible: divisible by " +
                        to_hex(factor)),
      modulus_(modulus),
      factor_(factor) {}

namespace gf2poly {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

std::uint64_t find_factor(std::uint64_t p) {
  const int d = degree(p);
  for (int dd = 1; 2 * dd <= d; ++dd) {
    for (std::uint64_t g = std::uint64_t{1} << dd; g < (std::uint64_t{2} << dd); ++g) {
      if (mod(p, g) == 0) return g;
    }
  }
  return 0;
}

}  // namespace gf2poly

std::uint64_t default_modulus(int m) {
  check_degree(m);
  return kDefaultModuli[static_cast<std::size_t>(m - 2)];
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldSpec FieldSpec::make(int m, std::optional<std::uint64_t> modulus) {
  check_degree(m);
  if (!modulus) return FieldSpec(m, default_modulus(m));
  if (gf2poly::degree(*modulus) != m) {
    throw PreconditionError("modulus " + to_hex(*modulus) + " is not monic of degree " +
                            std::to_string(m));
  }
  if (const auto factor = gf2poly::find_factor(*modulus); factor != 0) {
    throw ReducibleModulusError(*modulus, factor);
  }
  return FieldSpec(m, *modulus);
}

FieldSpec::FieldSpec(int m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
  for (int i = 0; i < m_; ++i) {
    const Felt xi{std::uint32_t{1} << i};
    // Tr(x^i) as the sum of its Frobenius orbit.
    Felt t{}, y = xi;
    for (int j = 0; j < m_; ++j) {
      t += y;
      y = frobenius(y);
    }
    if (t.bits & 1u) trace_mask_ |= xi.bits;

    std::uint32_t image = (frobenius(xi) + xi).bits;
    std::uint32_t pre = xi.bits;
    while (image != 0) {
      const int lead = 31 - std::countl_zero(image);
      if (as_image_[lead] == 0) {
        as_image_[lead] = image;
        as_preimage_[lead] = pre;
        break;
      }
      image ^= as_image_[lead];
      pre ^= as_preimage_[lead];
    }
  }

  const auto divisors = prime_divisors(group_order());
  for (std::uint64_t g = 2; g < size(); ++g) {
    const Felt cand{static_cast<std::uint32_t>(g)};
    bool primitive = pow(cand, group_order()) == one();
    for (auto it = divisors.begin(); primitive && it != divisors.end(); ++it) {
      primitive = pow(cand, group_order() / *it) != one();
    }
    if (primitive) {
      generator_ = cand;
      return;
    }
  }
  // Unreachable for an irreducible modulus: GF(2^m)* is cyclic.
  throw PreconditionError("no primitive element found for modulus " + to_hex(modulus));
}

void FieldSpec::check(Felt a) const {
  if (!contains(a)) {
    throw PreconditionError("element " + to_hex(a) + " is not in GF(2^" + std::to_string(m_) + ")");
  }
}

Felt FieldSpec::element(std::uint64_t bits) const {
  if ((bits >> m_) != 0) {
    throw PreconditionError("element " + to_hex(bits) + " is not in GF(2^" + std::to_string(m_) +
                            ")");
  }
  return Felt{static_cast<std::uint32_t>(bits)};
}

Felt FieldSpec::mul(Felt a, Felt b) const {
  std::uint64_t acc = 0;
  std::uint64_t sh = a.bits;
  const std::uint64_t top = std::uint64_t{1} << m_;
  for (std::uint32_t y = b.bits; y != 0; y >>= 1) {
    if (y & 1u) acc ^= sh;
    sh <<= 1;
    if (sh & top) sh ^= modulus_;
  }
  return Felt{static_cast<std::uint32_t>(acc)};
}

Felt FieldSpec::pow(Felt a, std::uint64_t e) const {
  Felt result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = frobenius(a);
    e >>= 1;
  }
  return result;
}

Felt FieldSpec::inv(Felt a) const {
  if (a.is_zero()) throw DivisionByZeroError();
  return pow(a, group_order() - 1);
}

Felt FieldSpec::sqrt(Felt a) const {
  for (int i = 1; i < m_; ++i) a = frobenius(a);
  return a;
}

int FieldSpec::trace(Felt a) const { return std::popcount(a.bits & trace_mask_) & 1; }

bool FieldSpec::is_cube(Felt a) const {
  if (a.is_zero()) throw PreconditionError("cube test is undefined for 0");
  if (m_ % 2 == 1) return true;
  return pow(a, group_order() / 3) == one();
}

std::optional<std::pair<Felt, Felt>> FieldSpec::solve_artin_schreier(Felt c) const {
  std::uint32_t v = c.bits;
  std::uint32_t w = 0;
  while (v != 0) {
    const int lead = 31 - std::countl_zero(v);
    if (as_image_[lead] == 0) return std::nullopt;
    v ^= as_image_[lead];
    w ^= as_preimage_[lead];
  }
  const Felt w0{w}, w1{w ^ 1u};
  return w0 < w1 ? std::pair{w0, w1} : std::pair{w1, w0};
}

std::vector<Felt> FieldSpec::solve_quadratic(Felt a, Felt b) const {
  if (a.is_zero()) return {sqrt(b)};
  const auto w = solve_artin_schreier(div(b, frobenius(a)));
  if (!w) return {};
  Felt r0 = mul(a, w->first), r1 = mul(a, w->second);
  if (r1 < r0) std::swap(r0, r1);
  return {r0, r1};
}

std::uint64_t FieldSpec::order_of(Felt a) const {
  if (a.is_zero()) throw PreconditionError("0 has no multiplicative order");
  std::uint64_t order = group_order();
  for (const auto p : prime_divisors(group_order())) {
    while (order % p == 0 && pow(a, order / p) == one()) order /= p;
  }
  return order;
}

std::string to_hex(std::uint64_t bits) {
  std::ostringstream os;
  os << "0x" << std::hex << bits;
  return os.str();
}

std::string to_hex(Felt a) { return to_hex(std::uint64_t{a.bits}); }

std::uint64_t parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  if (digits.empty() || digits.size() > 16) {
    throw PreconditionError("malformed hex value '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  for (const char ch : digits) {
    int d;
    if (ch >= '0' && ch <= '9') {
      d = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      d = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      d = ch - 'A' + 10;
    } else {
      throw PreconditionError("malformed hex value '" + std::string(text) + "'");
    }
    value = (value << 4) | static_cast<std::uint64_t>(d);
  }
  return value;
}

Felt parse_felt(const FieldSpec& f, std::string_view text) { return f.element(parse_hex(text)); }

}  // namespace bchcov
