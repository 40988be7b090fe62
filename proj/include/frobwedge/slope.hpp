#pragma once

// Exact (rank, degree) bookkeeping for bundles on a curve of genus g in
// characteristic p. Curves enter only through the pair (p, g).

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobwedge/modp.hpp"

namespace frobwedge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "n" for integers, otherwise "num/den" with positive denominator.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

BigInt ipow(std::uint64_t base, std::uint64_t exp);

class CurveContext {
 public:
  CurveContext(PrimeChar p, std::int64_t genus);

  PrimeChar characteristic() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }
  std::int64_t genus() const noexcept { return g_; }

 private:
  PrimeChar p_;
  std::int64_t g_;
};

class BundleClass {
 public:
  BundleClass(BigInt rank, BigInt degree);

  const BigInt& rank() const noexcept { return rank_; }
  const BigInt& degree() const noexcept { return degree_; }

  friend bool operator==(const BundleClass&, const BundleClass&) = default;

 private:
  BigInt rank_;
  BigInt degree_;
};

std::string to_string(const BundleClass& b);

Rational slope(const BundleClass& b);

/// Numeric class of F_*^n B: rank r p^n, degree d + r (p^n - 1)(g - 1).
BundleClass frob_push(const BundleClass& b, std::uint64_t n, const CurveContext& ctx);

BundleClass tensor(const BundleClass& x, const BundleClass& y);

/// Second exterior power. Requires rank >= 2.
BundleClass wedge2(const BundleClass& b);

/// Omega_C^m: rank 1, degree m (2g - 2).
BundleClass omega_power(const CurveContext& ctx, const BigInt& m);

/// B_1 = F_*O_C / O_C: rank p - 1, degree (p - 1)(g - 1).
BundleClass b1_class(const CurveContext& ctx);

struct FiltrationReport {
  std::vector<BundleClass> quotients;  // level 0 first
  std::vector<Rational> slopes;
  BundleClass total;
  bool conserved;
};

/// Graded pieces E (x) Omega^i, i = 0..p-1, of F^*F_*E.
FiltrationReport canonical_filtration_profile(const BundleClass& b, const CurveContext& ctx);

/// Graded pieces F_*(E (x) E (x) Omega^i) of F_*E (x) F_*E.
FiltrationReport pushforward_tensor_profile(const BundleClass& b, const CurveContext& ctx);

}  // namespace frobwedge
