#pragma once

// Linear algebra over the truncated coefficient ring F_p[s]/(s^M).
//
// A module vector of length L is stored flat: entry `idx` occupies the M
// residues [idx*M, idx*M + M), lowest s-degree first. An entry is a unit of
// the ring exactly when its constant term is nonzero.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace frobwedge {

enum class Exec { serial, parallel };

struct LocalRing {
  std::uint64_t p;
  std::size_t trunc;

  friend bool operator==(const LocalRing&, const LocalRing&) = default;
};

namespace series {

using Coeffs = std::vector<std::uint64_t>;

/// out = a * b truncated at s^M. All spans have length M.
void mul(const LocalRing& ring, std::span<const std::uint64_t> a,
         std::span<const std::uint64_t> b, std::span<std::uint64_t> out);

/// Inverse of a unit. Throws ContractViolation if the constant term vanishes.
Coeffs inverse(const LocalRing& ring, std::span<const std::uint64_t> u);

bool is_unit(std::span<const std::uint64_t> a);
bool is_zero(std::span<const std::uint64_t> a);

}  // namespace series

/// Row reduction of a family of module vectors using unit pivots only.
///
/// The number of pivots found is the rank of the family reduced mod s; when it
/// equals the family size the vectors are F_p[s]-independent and span a direct
/// summand. The transform from the input rows to the reduced rows is tracked so
/// that membership queries return coefficients against the original family.
class UnitEliminator {
 public:
  UnitEliminator(LocalRing ring, std::size_t length,
                 std::vector<std::vector<std::uint64_t>> rows, Exec exec = Exec::serial);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool full_rank() const noexcept { return rank() == count_; }

  /// Coefficients c (one series per input row, flat) with sum c_i row_i ==
  /// target, using only pivot rows. nullopt when target is not in that span.
  std::optional<std::vector<std::uint64_t>> express(std::span<const std::uint64_t> target) const;

 private:
  LocalRing ring_;
  std::size_t length_;
  std::size_t count_;
  std::vector<std::vector<std::uint64_t>> rows_;       // reduced rows
  std::vector<std::vector<std::uint64_t>> transform_;  // rows_[i] = sum transform_[i][j] * input_j
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, column)
};

}  // namespace frobwedge
