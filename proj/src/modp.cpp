#include "frobwedge/modp.hpp"

#include <string>

#include "frobwedge/errors.hpp"

namespace frobwedge {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeChar::PrimeChar(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw PreconditionError("characteristic must be prime, got " + std::to_string(p));
  }
  // Products of residues are formed in 64 bits.
  if (p >= (std::uint64_t{1} << 32)) {
    throw PreconditionError("characteristic too large: " + std::to_string(p));
  }
}

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return (a * b) % p;
}

std::uint64_t neg(std::uint64_t a, std::uint64_t p) noexcept { return a == 0 ? 0 : p - a; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept {
  std::uint64_t res = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) res = mul(res, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return res;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ContractViolation("inverse of zero residue");
  return pow(a, p - 2, p);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t p) noexcept {
  auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = a % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

}  // namespace modp

namespace {

// C(n, k) mod p for n, k < p, via the product formula.
std::uint64_t small_binom(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    num = modp::mul(num, (n + 1 - i) % p, p);
    den = modp::mul(den, i % p, p);
  }
  return modp::mul(num, modp::inv(den, p), p);
}

}  // namespace

std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, const PrimeChar& pc) {
  const std::uint64_t p = pc.value();
  if (k > n) return 0;
  std::uint64_t res = 1;
  while (n > 0 || k > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    res = modp::mul(res, small_binom(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return res;
}

bool check_binomial_congruences(const PrimeChar& pc) {
  const std::uint64_t p = pc.value();
  std::uint64_t sign = 1;  // (-1)^h
  for (std::uint64_t h = 0; h <= p - 1; ++h) {
    if (binom_mod(p - 1, h, pc) != sign) return false;
    if (h <= p - 2 && p >= 2) {
      std::uint64_t rhs = modp::mul(sign, (h + 1) % p, p);
      if (binom_mod(p - 2, h, pc) != rhs) return false;
    }
    sign = modp::neg(sign, p);
  }
  return true;
}

}  // namespace frobwedge
