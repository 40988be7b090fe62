#include <doctest.h>

#include "frobwedge/errors.hpp"
#include "frobwedge/sweep.hpp"

using namespace frobwedge;

namespace {

void require_same(const SweepReport& a, const SweepReport& b) {
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    CHECK(x.point == y.point);
    CHECK(x.verdict.case_tag == y.verdict.case_tag);
    CHECK(x.verdict.sub == y.verdict.sub);
    CHECK(x.verdict.ambient == y.verdict.ambient);
    CHECK(x.verdict.gap == y.verdict.gap);
    CHECK(x.verdict.destabilized == y.verdict.destabilized);
    CHECK(x.expected == y.expected);
    CHECK(x.canonical_conserved == y.canonical_conserved);
    CHECK(x.tensor_conserved == y.tensor_conserved);
  }
  CHECK(a.failures == b.failures);
}

}  // namespace

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("bounds validation") {
  SweepBounds b;
  b.gmax = 1;
  CHECK_THROWS_AS(theorem_sweep(b), PreconditionError);
  b = SweepBounds{};
  b.pmax = 1;
  CHECK_THROWS_AS(theorem_sweep_serial(b), PreconditionError);
  b = SweepBounds{};
  b.nmax = 0;
  CHECK_THROWS_AS(theorem_sweep(b), PreconditionError);
}

TEST_CASE("single point") {
  const auto rep = theorem_sweep({2, 1, 1, 2, 0});
  REQUIRE(rep.rows.size() == 1);
  CHECK_FALSE(rep.rows[0].verdict.destabilized);
  CHECK(rep.rows[0].verdict.gap == 0);
  CHECK(rep.failures.empty());
}

TEST_CASE("boundary points and an odd line case") {
  const auto rep = theorem_sweep({7, 1, 1, 2, 0});
  for (const auto& row : rep.rows) {
    CHECK(row.verdict.destabilized == (row.point.p > 3));
  }
}

TEST_CASE("parallel kernel matches serial reference") {
  const SweepBounds b{7, 3, 3, 4, 5};
  const auto par = theorem_sweep(b);
  const auto ser = theorem_sweep_serial(b);
  require_same(par, ser);
  CHECK(par.failures.empty());
  CHECK(par.rows.size() == 4u * 3 * 3 * 3 * 11);
  // canonical ordering
  for (std::size_t i = 1; i < par.rows.size(); ++i) CHECK(par.rows[i - 1].point < par.rows[i].point);
}
