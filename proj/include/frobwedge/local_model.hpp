#pragma once

// The local model of F^*F_*E over Spec k[[t]]: the ring
//
//     R = k[t] (x)_{k[s]} k[t],   s = t^p,
//
// free over F_p[s] on the monomials t^i (x) t^j, 0 <= i, j < p. Coefficients
// are kept in F_p[s]/(s^M). Every product of two basis monomials carries at
// most one power of s, so M = 2 is exact for the shipped checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "frobwedge/local_ring.hpp"
#include "frobwedge/modp.hpp"

namespace frobwedge::local {

inline constexpr std::size_t kDefaultTrunc = 2;

class BiTensorElement {
 public:
  /// The zero element.
  explicit BiTensorElement(PrimeChar p, std::size_t trunc = kDefaultTrunc);

  /// value * s^sdeg * (t^i (x) t^j).
  static BiTensorElement monomial(PrimeChar p, std::size_t i, std::size_t j,
                                  std::uint64_t value = 1, std::size_t sdeg = 0,
                                  std::size_t trunc = kDefaultTrunc);
  static BiTensorElement one(PrimeChar p, std::size_t trunc = kDefaultTrunc);

  /// Uniform random element; uses raw engine output so results are identical
  /// across standard library implementations.
  static BiTensorElement random(PrimeChar p, std::mt19937_64& rng,
                                std::size_t trunc = kDefaultTrunc);

  std::uint64_t prime() const noexcept { return p_.value(); }
  PrimeChar characteristic() const noexcept { return p_; }
  std::size_t trunc() const noexcept { return trunc_; }
  LocalRing ring() const noexcept { return {p_.value(), trunc_}; }

  std::uint64_t coeff(std::size_t i, std::size_t j, std::size_t sdeg = 0) const;
  /// The F_p[s] coefficient of t^i (x) t^j.
  std::span<const std::uint64_t> entry(std::size_t i, std::size_t j) const;
  std::span<const std::uint64_t> raw() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  BiTensorElement& add_term(std::size_t i, std::size_t j, std::int64_t value,
                            std::size_t sdeg = 0);

  BiTensorElement operator+(const BiTensorElement& o) const;
  BiTensorElement operator-(const BiTensorElement& o) const;
  BiTensorElement operator-() const;
  BiTensorElement scaled(std::int64_t c) const;

  friend bool operator==(const BiTensorElement&, const BiTensorElement&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t sdeg) const noexcept {
    return (i * p_.value() + j) * trunc_ + sdeg;
  }
  void require_compatible(const BiTensorElement& o) const;

  PrimeChar p_;
  std::size_t trunc_;
  std::vector<std::uint64_t> coeffs_;
};

/// 1 (x) t - t (x) 1.
BiTensorElement alpha(PrimeChar p, std::size_t trunc = kDefaultTrunc);

/// t^k (x) 1, i.e. the action of t^k through the left factor.
BiTensorElement left_t_power(PrimeChar p, std::size_t k, std::size_t trunc = kDefaultTrunc);

BiTensorElement multiply(const BiTensorElement& x, const BiTensorElement& y);
inline BiTensorElement operator*(const BiTensorElement& x, const BiTensorElement& y) {
  return multiply(x, y);
}
BiTensorElement power(const BiTensorElement& x, std::size_t e);

/// t^k alpha^m.
BiTensorElement filtration_basis_element(PrimeChar p, std::size_t k, std::size_t m,
                                         std::size_t trunc = kDefaultTrunc);

/// The dt-coefficient of the canonical connection: d/dt on the left factor,
/// F_p[s]-linear.
BiTensorElement connection(const BiTensorElement& x);

/// Exchanges the two tensor factors.
BiTensorElement swap_factors(const BiTensorElement& x);

/// Coordinates in the basis { t^k alpha^m : 0 <= k, m < p }.
class FiltrationCoordinates {
 public:
  FiltrationCoordinates(PrimeChar p, std::size_t trunc, std::vector<std::uint64_t> coeffs);

  std::uint64_t prime() const noexcept { return p_.value(); }
  std::size_t trunc() const noexcept { return trunc_; }
  std::span<const std::uint64_t> entry(std::size_t k, std::size_t m) const;
  std::span<const std::uint64_t> raw() const noexcept { return coeffs_; }

  /// Smallest m with a nonzero coordinate, or p for the zero element.
  std::size_t min_level() const;

  friend bool operator==(const FiltrationCoordinates&, const FiltrationCoordinates&) = default;

 private:
  PrimeChar p_;
  std::size_t trunc_;
  std::vector<std::uint64_t> coeffs_;  // ((k * p + m) * trunc + sdeg)
};

/// Precomputed change of basis between monomials and { t^k alpha^m }. Build
/// once and reuse for repeated coordinate queries.
class FiltrationBasis {
 public:
  explicit FiltrationBasis(PrimeChar p, std::size_t trunc = kDefaultTrunc,
                           Exec exec = Exec::serial);

  FiltrationCoordinates coordinates(const BiTensorElement& x) const;
  BiTensorElement expand(const FiltrationCoordinates& c) const;
  std::size_t level(const BiTensorElement& x) const { return coordinates(x).min_level(); }

 private:
  PrimeChar p_;
  std::size_t trunc_;
  std::vector<BiTensorElement> basis_;  // index k * p + m
  UnitEliminator solver_;
};

FiltrationCoordinates coordinates(const BiTensorElement& x);
BiTensorElement expand(const FiltrationCoordinates& c);
/// Largest l with x in I_l; p for x = 0.
std::size_t filtration_level(const BiTensorElement& x);

struct SymmetryRow {
  std::size_t k;
  bool top_symmetric;         // t^k alpha^{p-1}
  bool top_identity_holds;    // displayed reduction of t^k alpha^{p-1}
  bool next_symmetric;        // t^k alpha^{p-2}
  bool next_identity_holds;   // displayed reduction of t^k alpha^{p-2}
};

struct SymmetryReport {
  std::uint64_t p;
  std::vector<SymmetryRow> rows;

  /// All t^k alpha^{p-1} symmetric, t^k alpha^{p-2} symmetric iff k = 0 and
  /// p = 2, and every reduction identity holds.
  bool matches_expected() const;
};

/// Expected right-hand sides of the reduction identities, assembled from
/// monomials without using ring multiplication.
BiTensorElement top_reduction_identity(PrimeChar p, std::size_t k,
                                       std::size_t trunc = kDefaultTrunc);
BiTensorElement next_reduction_identity(PrimeChar p, std::size_t k,
                                        std::size_t trunc = kDefaultTrunc);

SymmetryReport classify_symmetry(PrimeChar p, std::size_t trunc = kDefaultTrunc);

/// An element of E (x) E over R for E free of rank r on formal symbols
/// e_0 .. e_{r-1}: one R-coefficient per symbol pair (a, b).
class PairedModuleElement {
 public:
  PairedModuleElement(PrimeChar p, std::size_t rank, std::size_t trunc = kDefaultTrunc);

  /// (e_a (x) e_b) * x.
  static PairedModuleElement embed(std::size_t rank, std::size_t a, std::size_t b,
                                   const BiTensorElement& x);

  std::size_t rank() const noexcept { return rank_; }
  std::uint64_t prime() const noexcept { return p_.value(); }
  std::size_t trunc() const noexcept { return trunc_; }
  std::span<const std::uint64_t> raw() const noexcept { return coeffs_; }
  /// Number of F_p[s] entries, r^2 p^2.
  std::size_t length() const noexcept { return rank_ * rank_ * p_.value() * p_.value(); }
  std::uint64_t coeff(std::size_t a, std::size_t b, std::size_t i, std::size_t j,
                      std::size_t sdeg = 0) const;

  PairedModuleElement operator+(const PairedModuleElement& o) const;
  PairedModuleElement operator-(const PairedModuleElement& o) const;

  /// Exchanges symbols and tensor factors together: (a, b, i, j) -> (b, a, j, i).
  PairedModuleElement swapped() const;

  friend bool operator==(const PairedModuleElement&, const PairedModuleElement&) = default;

 private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t i, std::size_t j,
                    std::size_t sdeg) const noexcept {
    const std::size_t p = p_.value();
    return (((a * rank_ + b) * p + i) * p + j) * trunc_ + sdeg;
  }
  void require_compatible(const PairedModuleElement& o) const;

  PrimeChar p_;
  std::size_t rank_;
  std::size_t trunc_;
  std::vector<std::uint64_t> coeffs_;
};

struct WedgeKernelReport {
  std::uint64_t p;
  std::size_t rank;
  std::size_t generator_count;          // p r^2
  bool generators_free;                 // all (e_a(x)e_b) t^k alpha^{p-1} independent
  bool swap_is_permutation;             // swap acts on them with constant 0/1 matrix
  std::size_t symmetric_rank;           // rank of the swap-invariant submodule
  std::size_t symmetric_count;          // listed generators, p r(r+1)/2
  bool symmetric_invariant;             // each listed generator is swap-fixed
  bool symmetric_independent;
  std::size_t complement_count;         // p r(r-1)/2
  bool complement_independent;          // (e_a(x)e_b) t^k alpha^{p-1}, a < b
  bool antisymmetrized_applicable;      // p odd
  bool antisymmetrized_independent;     // (e_a(x)e_b - e_b(x)e_a) t^k alpha^{p-1}, a < b

  bool passed() const;
};

/// Certifies at the local level that the symmetric part of
/// F_*(E (x) E (x) Omega^{p-1}) is exactly the listed generators and that
/// the quotient injects into F_*E ^ F_*E. Requires r >= 2.
WedgeKernelReport wedge_kernel_check(PrimeChar p, std::size_t rank,
                                     std::size_t trunc = kDefaultTrunc,
                                     Exec exec = Exec::serial);

}  // namespace frobwedge::local
