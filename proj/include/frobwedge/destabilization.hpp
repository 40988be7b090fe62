#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "frobwedge/slope.hpp"

namespace frobwedge {

enum class CaseTag {
  high_rank,   // r > 1
  line_odd,    // r = 1, p > 2
  line_char2,  // r = 1, p = 2
};

std::string_view to_string(CaseTag tag);
CaseTag case_for(const BigInt& rank, std::uint64_t p);

/// Canonical sub-sheaf of F_*^n E ^ F_*^n E. n >= 1.
std::pair<CaseTag, BundleClass> subbundle_class(const BundleClass& b, std::uint64_t n,
                                                const CurveContext& ctx);

/// The characteristic-2 line case compared against F_*^{n-1}E ^ F_*^{n-1}E
/// instead of level n. Informational; only defined when that wedge exists.
struct AlternateLevel {
  BundleClass ambient;
  Rational gap;
};

struct DestabilizationVerdict {
  CaseTag case_tag;
  BundleClass sub;
  BundleClass ambient;
  Rational gap;  // slope(sub) - slope(ambient)
  bool destabilized;
  std::optional<AlternateLevel> previous_level;
};

/// Requires g >= 2 and n >= 1.
DestabilizationVerdict verdict(const BundleClass& b, std::uint64_t n, const CurveContext& ctx);

/// Gap predicted by the slope computation of each case, written in closed
/// form. Used to cross-check `verdict`, never in place of it.
Rational closed_form_gap(CaseTag tag, std::uint64_t p, std::uint64_t n, std::int64_t g);

/// The predicate r > 1 or p^n > 3.
bool expected_destabilized(const BigInt& rank, std::uint64_t p, std::uint64_t n);

struct CohomCertificate {
  std::uint64_t p;
  std::int64_t g;
  std::uint64_t n;
  std::int64_t t;            // exterior power used, always 2
  BigInt chosen_degree;      // d = deg L
  BigInt modulus;            // p^{n-1} if p = 2, else p^n
  BigInt degA;
  Rational threshold;        // t * slope(F_*^n L)
  bool divisibility_ok;
  bool degree_ok;            // degA >= threshold
  BigInt witness_twist_degree;
  bool valid;
};

/// Degree arithmetic showing F_*^n L is stable but not cohomologically
/// stable. Requires g >= 2 and n >= 2; picks the least nonnegative d.
CohomCertificate cohom_certificate(const CurveContext& ctx, std::uint64_t n);

}  // namespace frobwedge
