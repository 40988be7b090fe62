#include <doctest.h>

#include <random>

#include "frobwedge/errors.hpp"
#include "frobwedge/slope.hpp"

using namespace frobwedge;

namespace {

CurveContext ctx(std::uint64_t p, std::int64_t g) { return CurveContext(PrimeChar(p), g); }

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("slope") {
  CHECK(slope(BundleClass(2, 1)) == Rational(1, 2));
  CHECK(slope(BundleClass(1, 7)) == 7);
  CHECK(slope(BundleClass(3, -6)) == -2);
  CHECK(to_string(slope(BundleClass(2, 1))) == "1/2");
  CHECK(to_string(slope(BundleClass(3, -6))) == "-2");
  CHECK(to_string(slope(BundleClass(4, -6))) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(BundleClass(0, 1), PreconditionError);
  CHECK_THROWS_AS(ctx(3, 0), PreconditionError);
  CHECK_NOTHROW(ctx(3, 1));
}

TEST_CASE("frob_push") {
  const BundleClass line(1, 0);
  const auto pushed = frob_push(line, 1, ctx(2, 2));
  CHECK(pushed == BundleClass(2, 1));
  CHECK(slope(pushed) == Rational(1, 2));

  const BundleClass b(3, -4);
  CHECK(frob_push(b, 0, ctx(5, 4)) == b);

  SUBCASE("slope formula, evaluated as rationals") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (std::int64_t g = 1; g <= 5; ++g) {
        for (std::uint64_t n = 0; n <= 4; ++n) {
          for (int r = 1; r <= 4; ++r) {
            for (int d = -7; d <= 7; d += 3) {
              const Rational mu(d, r);
              const Rational q(ipow(p, n));
              const Rational expected = mu / q + (Rational(1) - Rational(1) / q) * (g - 1);
              const auto pushed_class = frob_push(BundleClass(r, d), n, ctx(p, g));
              CHECK(slope(pushed_class) == expected);
              // affine contraction toward g - 1
              CHECK(slope(pushed_class) - (g - 1) == (mu - (g - 1)) / q);
            }
          }
        }
      }
    }
  }

  SUBCASE("semigroup law") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const auto c = ctx(p, 3);
      for (std::uint64_t n = 0; n <= 4; ++n) {
        for (std::uint64_t m = 0; n + m <= 4; ++m) {
          const BundleClass e(2, -5);
          CHECK(frob_push(frob_push(e, n, c), m, c) == frob_push(e, n + m, c));
        }
      }
    }
  }
}

TEST_CASE("tensor") {
  CHECK(tensor(BundleClass(1, 3), BundleClass(1, -5)) == BundleClass(1, -2));
  CHECK(tensor(BundleClass(4, 9), BundleClass(1, 0)) == BundleClass(4, 9));
  CHECK(tensor(BundleClass(2, 3), BundleClass(3, -1)) == BundleClass(6, 7));
}

TEST_CASE("wedge2") {
  CHECK(wedge2(BundleClass(2, 5)) == BundleClass(1, 5));
  CHECK(wedge2(BundleClass(4, 6)) == BundleClass(6, 18));
  CHECK(slope(wedge2(BundleClass(4, 6))) == 3);
  CHECK_THROWS_AS(wedge2(BundleClass(1, 3)), PreconditionError);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const BundleClass b(2 + static_cast<int>(rng() % 40), static_cast<int>(rng() % 201) - 100);
    CHECK(slope(wedge2(b)) == 2 * slope(b));
  }
}

TEST_CASE("omega_power and b1_class") {
  CHECK(omega_power(ctx(3, 5), 0) == BundleClass(1, 0));
  CHECK(omega_power(ctx(3, 2), 1) == BundleClass(1, 2));
  CHECK(omega_power(ctx(3, 3), 4) == BundleClass(1, 16));
  CHECK(b1_class(ctx(2, 2)) == BundleClass(1, 1));
  CHECK(b1_class(ctx(5, 3)) == BundleClass(4, 8));
  for (std::uint64_t p : kPrimes) {
    for (std::int64_t g = 1; g <= 6; ++g) {
      CHECK(slope(b1_class(ctx(p, g))) == g - 1);
      // B_1 is the cokernel of O -> F_*O
      const auto fo = frob_push(BundleClass(1, 0), 1, ctx(p, g));
      CHECK(b1_class(ctx(p, g)).rank() + 1 == fo.rank());
      CHECK(b1_class(ctx(p, g)).degree() == fo.degree());
    }
  }
}

TEST_CASE("canonical filtration profile") {
  const auto rep = canonical_filtration_profile(BundleClass(1, 0), ctx(3, 2));
  REQUIRE(rep.quotients.size() == 3);
  CHECK(rep.quotients[0].degree() == 0);
  CHECK(rep.quotients[1].degree() == 2);
  CHECK(rep.quotients[2].degree() == 4);
  CHECK(rep.total == BundleClass(3, 6));
  CHECK(rep.conserved);

  for (std::uint64_t p : kPrimes)
    for (std::int64_t g = 1; g <= 6; ++g)
      for (int r = 1; r <= 5; ++r)
        for (int d = -20; d <= 20; ++d) {
          const auto c = ctx(p, g);
          const auto prof = canonical_filtration_profile(BundleClass(r, d), c);
          CHECK(prof.conserved);
          // independent closed form: p d + r (2g - 2) p (p - 1) / 2 = p deg F_*E
          const BigInt expect = BigInt(p) * d + BigInt(r) * (g - 1) * p * (p - 1);
          CHECK(prof.total.degree() == expect);
          for (std::size_t i = 1; i < prof.slopes.size(); ++i) {
            CHECK(prof.slopes[i] - prof.slopes[i - 1] == 2 * g - 2);
          }
        }
}

TEST_CASE("pushforward tensor profile") {
  const auto rep = pushforward_tensor_profile(BundleClass(1, 0), ctx(2, 2));
  REQUIRE(rep.quotients.size() == 2);
  CHECK(rep.quotients[0] == BundleClass(2, 1));
  CHECK(rep.quotients[1] == BundleClass(2, 3));
  CHECK(rep.total == BundleClass(4, 4));
  CHECK(rep.conserved);

  for (std::uint64_t p : kPrimes)
    for (std::int64_t g = 2; g <= 6; ++g)
      for (int r = 1; r <= 5; ++r)
        for (int d = -20; d <= 20; d += 4) {
          const auto c = ctx(p, g);
          const BundleClass b(r, d);
          const auto prof = pushforward_tensor_profile(b, c);
          CHECK(prof.conserved);
          CHECK(prof.quotients[0] == frob_push(tensor(b, b), 1, c));
          const BigInt closed = BigInt(2) * r * p * d + BigInt(2) * p * r * r * (p - 1) * (g - 1);
          CHECK(prof.total.degree() == closed);
        }
}
