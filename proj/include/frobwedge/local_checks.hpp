#pragma once

// Verification battery for the local model at a fixed characteristic. Each
// check returns a named pass/fail row with a short human-readable detail.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobwedge/local_model.hpp"

namespace frobwedge::local {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

CheckResult check_alpha_nilpotent(PrimeChar p, std::size_t trunc);
/// connection(alpha^l) == -l alpha^{l-1} for 1 <= l <= p-1.
CheckResult check_connection_formula(PrimeChar p, std::size_t trunc);
CheckResult check_leibniz(PrimeChar p, std::size_t trunc, std::uint64_t seed, std::size_t pairs);
/// level(connection(x)) >= level(x) - 1 on the basis and on random elements.
CheckResult check_filtration_shift(const FiltrationBasis& basis, PrimeChar p, std::size_t trunc,
                                   std::uint64_t seed, std::size_t samples);
/// connection(t^k alpha^l) == -l t^k alpha^{l-1} modulo I_l, with -l a unit.
CheckResult check_graded_isomorphism(const FiltrationBasis& basis, PrimeChar p,
                                     std::size_t trunc);
CheckResult check_coordinates_roundtrip(const FiltrationBasis& basis, PrimeChar p,
                                        std::size_t trunc, std::uint64_t seed,
                                        std::size_t samples);
/// swap is an involutive ring map and swap(alpha^l) == (-1)^l alpha^l.
CheckResult check_swap(PrimeChar p, std::size_t trunc, std::uint64_t seed, std::size_t samples);

struct LocalSuite {
  std::vector<CheckResult> checks;
  SymmetryReport symmetry;
  std::optional<WedgeKernelReport> wedge;  // rank >= 2 only

  bool passed() const;
};

inline constexpr std::size_t kRandomSamples = 100;

LocalSuite run_local_suite(PrimeChar p, std::size_t rank, std::size_t trunc, std::uint64_t seed,
                           Exec exec = Exec::serial);

}  // namespace frobwedge::local
