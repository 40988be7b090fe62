#include "frobwedge/sweep.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "frobwedge/errors.hpp"

namespace frobwedge {

void validate(const SweepBounds& b) {
  if (b.pmax < 2) throw PreconditionError("pmax must be at least 2");
  if (b.nmax < 1) throw PreconditionError("nmax must be at least 1");
  if (b.rmax < 1) throw PreconditionError("rmax must be at least 1");
  if (b.gmax < 2) throw PreconditionError("gmax must be at least 2 (genus range starts at 2)");
  if (b.dmax < 0) throw PreconditionError("dmax must be nonnegative");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t pmax) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= pmax; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

std::string to_string(const GridPoint& pt) {
  return "p=" + std::to_string(pt.p) + " n=" + std::to_string(pt.n) + " r=" +
         std::to_string(pt.r) + " g=" + std::to_string(pt.g) + " d=" + std::to_string(pt.d);
}

std::size_t SweepReport::destabilized_count() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SweepRow& r) { return r.verdict.destabilized; }));
}

namespace {

DestabilizationVerdict verdict_at(const GridPoint& pt) {
  const CurveContext ctx(PrimeChar(pt.p), pt.g);
  return verdict(BundleClass(pt.r, pt.d), pt.n, ctx);
}

// Checks that only involve the point itself.
SweepRow evaluate_local(const GridPoint& pt, std::vector<SweepFailure>& failures) {
  const CurveContext ctx(PrimeChar(pt.p), pt.g);
  const BundleClass b(pt.r, pt.d);
  DestabilizationVerdict v = verdict(b, pt.n, ctx);
  const bool expected = expected_destabilized(b.rank(), pt.p, pt.n);
  const bool canonical = canonical_filtration_profile(b, ctx).conserved;
  const bool pushed = pushforward_tensor_profile(b, ctx).conserved;

  const Rational closed = closed_form_gap(v.case_tag, pt.p, pt.n, pt.g);
  if (v.gap != closed) {
    failures.push_back({pt, "closed_form", "gap " + to_string(v.gap) + " != " + to_string(closed)});
  }
  if (v.destabilized != expected) {
    failures.push_back({pt, "predicate", v.destabilized ? "destabilized but predicate false"
                                                        : "not destabilized but predicate true"});
  }
  if (v.gap < 0 || (v.gap == 0) == expected) {
    failures.push_back({pt, "boundary", "gap " + to_string(v.gap)});
  }
  const bool proper = v.sub.rank() < v.ambient.rank() ||
                      (v.sub.rank() == v.ambient.rank() && v.gap == 0);
  if (!proper) {
    failures.push_back({pt, "subsheaf_rank",
                        to_string(v.sub) + " inside " + to_string(v.ambient)});
  }
  if (!canonical) failures.push_back({pt, "canonical_conservation", "rank/degree mismatch"});
  if (!pushed) failures.push_back({pt, "tensor_conservation", "rank/degree mismatch"});
  return {pt, std::move(v), expected, canonical, pushed};
}

void check_d_independence(const SweepRow& row, const Rational& gap_d0,
                          std::vector<SweepFailure>& failures) {
  if (row.verdict.gap != gap_d0) {
    failures.push_back({row.point, "d_independence",
                        "gap " + to_string(row.verdict.gap) + " != " + to_string(gap_d0)});
  }
}

void check_g_linearity(const SweepRow& row, const Rational& gap_g2,
                       std::vector<SweepFailure>& failures) {
  const Rational expected = Rational(row.point.g - 1) * gap_g2;
  if (row.verdict.gap != expected) {
    failures.push_back({row.point, "g_linearity",
                        "gap " + to_string(row.verdict.gap) + " != " + to_string(expected)});
  }
}

std::vector<GridPoint> grid(const SweepBounds& b) {
  std::vector<GridPoint> pts;
  for (std::uint64_t p : primes_up_to(b.pmax))
    for (std::uint64_t n = 1; n <= b.nmax; ++n)
      for (std::uint64_t r = 1; r <= b.rmax; ++r)
        for (std::int64_t g = 2; g <= b.gmax; ++g)
          for (std::int64_t d = -b.dmax; d <= b.dmax; ++d) pts.push_back({p, n, r, g, d});
  return pts;
}

}  // namespace

SweepReport theorem_sweep(const SweepBounds& bounds) {
  validate(bounds);
  const std::vector<GridPoint> pts = grid(bounds);
  const auto count = static_cast<std::ptrdiff_t>(pts.size());
  std::vector<std::optional<SweepRow>> rows(pts.size());
  std::vector<std::vector<SweepFailure>> per_point(pts.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const GridPoint& pt = pts[i];
    auto& fails = per_point[i];
    SweepRow row = evaluate_local(pt, fails);
    check_d_independence(row, verdict_at({pt.p, pt.n, pt.r, pt.g, 0}).gap, fails);
    check_g_linearity(row, verdict_at({pt.p, pt.n, pt.r, 2, 0}).gap, fails);
    rows[i] = std::move(row);
  }

  SweepReport report{bounds, {}, {}};
  report.rows.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    report.rows.push_back(std::move(*rows[i]));
    for (auto& f : per_point[i]) report.failures.push_back(std::move(f));
  }
  std::stable_sort(report.failures.begin(), report.failures.end());
  return report;
}

SweepReport theorem_sweep_serial(const SweepBounds& bounds) {
  validate(bounds);
  SweepReport report{bounds, {}, {}};
  std::map<GridPoint, std::size_t> where;
  for (std::uint64_t p : primes_up_to(bounds.pmax))
    for (std::uint64_t n = 1; n <= bounds.nmax; ++n)
      for (std::uint64_t r = 1; r <= bounds.rmax; ++r)
        for (std::int64_t g = 2; g <= bounds.gmax; ++g)
          for (std::int64_t d = -bounds.dmax; d <= bounds.dmax; ++d) {
            const GridPoint pt{p, n, r, g, d};
            where[pt] = report.rows.size();
            report.rows.push_back(evaluate_local(pt, report.failures));
          }
  for (const SweepRow& row : report.rows) {
    const GridPoint& pt = row.point;
    check_d_independence(row, report.rows[where.at({pt.p, pt.n, pt.r, pt.g, 0})].verdict.gap,
                         report.failures);
    check_g_linearity(row, report.rows[where.at({pt.p, pt.n, pt.r, 2, 0})].verdict.gap,
                      report.failures);
  }
  std::stable_sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace frobwedge
