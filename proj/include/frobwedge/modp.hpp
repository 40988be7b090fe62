#pragma once

#include <cstdint>

namespace frobwedge {

/// The characteristic of the ground field. Construction rejects non-primes.
class PrimeChar {
 public:
  explicit PrimeChar(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t neg(std::uint64_t a, std::uint64_t p) noexcept;
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept;
// a must be nonzero mod p.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Reduces a signed integer into [0, p).
std::uint64_t reduce(std::int64_t a, std::uint64_t p) noexcept;

}  // namespace modp

/// C(n, k) mod p by Lucas decomposition in base p. Returns 0 when k > n.
std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, const PrimeChar& p);

/// Checks C(p-1, h) == (-1)^h and C(p-2, h) == (-1)^h (h+1) mod p for every
/// valid h. The right-hand sides are computed without touching binom_mod.
bool check_binomial_congruences(const PrimeChar& p);

}  // namespace frobwedge
