#pragma once

// Grid sweep over (p, n, r, g, d) checking every destabilization verdict
// against its closed form and the predicate r > 1 or p^n > 3, plus degree
// conservation of both filtration profiles.
//
// `theorem_sweep` is the OpenMP kernel: each grid point is evaluated
// independently, recomputing the d = 0 and g = 2 reference verdicts it is
// compared against. `theorem_sweep_serial` is the reference path: it fills
// the whole table first and then checks cross-point relations by lookup.
// Both return rows in lexicographic (p, n, r, g, d) order.

#include <cstdint>
#include <string>
#include <vector>

#include "frobwedge/destabilization.hpp"

namespace frobwedge {

struct SweepBounds {
  std::uint64_t pmax = 13;
  std::uint64_t nmax = 4;
  std::uint64_t rmax = 5;
  std::int64_t gmax = 6;
  std::int64_t dmax = 20;
};

/// Validates bounds: all positive, gmax >= 2, dmax >= 0, pmax >= 2.
void validate(const SweepBounds& bounds);

std::vector<std::uint64_t> primes_up_to(std::uint64_t pmax);

struct GridPoint {
  std::uint64_t p;
  std::uint64_t n;
  std::uint64_t r;
  std::int64_t g;
  std::int64_t d;

  auto operator<=>(const GridPoint&) const = default;
};

std::string to_string(const GridPoint& pt);

struct SweepRow {
  GridPoint point;
  DestabilizationVerdict verdict;
  bool expected;
  bool canonical_conserved;
  bool tensor_conserved;
};

struct SweepFailure {
  GridPoint point;
  std::string check;
  std::string detail;

  auto operator<=>(const SweepFailure&) const = default;
};

struct SweepReport {
  SweepBounds bounds;
  std::vector<SweepRow> rows;
  std::vector<SweepFailure> failures;

  std::size_t destabilized_count() const;
};

SweepReport theorem_sweep(const SweepBounds& bounds);
SweepReport theorem_sweep_serial(const SweepBounds& bounds);

}  // namespace frobwedge
