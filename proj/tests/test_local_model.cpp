#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "frobwedge/errors.hpp"
#include "frobwedge/local_checks.hpp"
#include "frobwedge/local_model.hpp"

using namespace frobwedge;
using namespace frobwedge::local;

namespace {

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

// Independent expansion: alpha^l in k[t1, t2] by the binomial theorem, then
// t1^a t2^b -> s^{a/p + b/p} t^{a mod p} (x) t^{b mod p}.
BiTensorElement alpha_power_oracle(std::uint64_t p, std::size_t l, std::size_t k = 0,
                                   std::size_t trunc = 2) {
  BiTensorElement out(PrimeChar(p), trunc);
  std::int64_t binom = 1;  // C(l, h), exact for the small l used here
  for (std::size_t h = 0; h <= l; ++h) {
    if (h > 0) binom = binom * static_cast<std::int64_t>(l - h + 1) / static_cast<std::int64_t>(h);
    const std::int64_t sign = (h % 2 == 0) ? 1 : -1;
    const std::size_t a = k + h, b = l - h;
    out.add_term(a % p, b % p, sign * (binom % static_cast<std::int64_t>(p)), a / p + b / p);
  }
  return out;
}

BiTensorElement from_terms(std::uint64_t p,
                           std::initializer_list<std::tuple<int, int, int, int>> terms) {
  BiTensorElement x{PrimeChar(p)};
  for (auto [i, j, v, s] : terms) x.add_term(i, j, v, s);
  return x;
}

}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(PrimeChar(2)) == from_terms(2, {{0, 1, 1, 0}, {1, 0, 1, 0}}));
  CHECK(alpha(PrimeChar(3)) == from_terms(3, {{0, 1, 1, 0}, {1, 0, 2, 0}}));
  CHECK(alpha(PrimeChar(5)).coeff(1, 0) == 4);
  CHECK(alpha(PrimeChar(5)).coeff(0, 1) == 1);
}

TEST_CASE("multiply") {
  for (std::uint64_t p : kPrimes) {
    const PrimeChar pc(p);
    const auto t = BiTensorElement::monomial(pc, 1 % p, 0);
    const auto tp1 = BiTensorElement::monomial(pc, p - 1, 0);
    if (p > 2) CHECK(t * tp1 == BiTensorElement::monomial(pc, 0, 0, 1, 1));
  }
  CHECK(power(alpha(PrimeChar(3)), 2) == from_terms(3, {{0, 2, 1, 0}, {1, 1, 1, 0}, {2, 0, 1, 0}}));

  SUBCASE("mismatched operands") {
    CHECK_THROWS_AS(alpha(PrimeChar(3)) * alpha(PrimeChar(5)), ContractViolation);
    CHECK_THROWS_AS(alpha(PrimeChar(3), 2) * alpha(PrimeChar(3), 3), ContractViolation);
  }
}

TEST_CASE("alpha powers match the binomial expansion and alpha^p = 0") {
  for (std::uint64_t p : kPrimes) {
    const PrimeChar pc(p);
    const auto a = alpha(pc);
    BiTensorElement cur = BiTensorElement::one(pc);
    for (std::size_t l = 0; l < p; ++l) {
      CHECK_MESSAGE(cur == alpha_power_oracle(p, l), "p=" << p << " l=" << l);
      CHECK_FALSE(cur.is_zero());
      cur = cur * a;
    }
    CHECK(cur.is_zero());
    // truncation does not hide anything: alpha^p vanishes at every order
    CHECK(power(alpha(pc, 5), p).is_zero());
  }
}

TEST_CASE("connection") {
  for (std::uint64_t p : kPrimes) {
    const PrimeChar pc(p);
    CHECK(connection(alpha(pc)) == BiTensorElement::monomial(pc, 0, 0, p - 1));
    CHECK(connection(BiTensorElement::one(pc)).is_zero());
    for (std::size_t l = 1; l < p; ++l) {
      CHECK(connection(alpha_power_oracle(p, l)) ==
            alpha_power_oracle(p, l - 1).scaled(-static_cast<std::int64_t>(l)));
    }
    CHECK(check_connection_formula(pc, 2).passed);
    CHECK(check_leibniz(pc, 2, 11, 100).passed);
  }
}

TEST_CASE("swap") {
  for (std::uint64_t p : {3, 5}) {
    const PrimeChar pc(p);
    CHECK(swap_factors(alpha(pc)) == -alpha(pc));
    for (std::size_t l = 0; l < p; ++l) {
      const auto al = alpha_power_oracle(p, l);
      CHECK(swap_factors(al) == al.scaled(l % 2 == 0 ? 1 : -1));
    }
    CHECK(check_swap(pc, 2, 3, 100).passed);
  }
  std::mt19937_64 rng(5);
  for (int n = 0; n < 20; ++n) {
    const auto x = BiTensorElement::random(PrimeChar(7), rng);
    CHECK(swap_factors(swap_factors(x)) == x);
  }
}

TEST_CASE("coordinates") {
  const PrimeChar p5(5);
  const auto c = coordinates(power(alpha(p5), 2));
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t m = 0; m < 5; ++m) {
      const bool hit = (k == 0 && m == 2);
      CHECK(c.entry(k, m)[0] == (hit ? 1u : 0u));
      CHECK(c.entry(k, m)[1] == 0);
    }
  }

  // 1 (x) t = t (x) 1 + alpha
  const auto d = coordinates(BiTensorElement::monomial(p5, 0, 1));
  CHECK(d.entry(1, 0)[0] == 1);
  CHECK(d.entry(0, 1)[0] == 1);
  CHECK(d.min_level() == 0);

  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PrimeChar pc(p);
    const FiltrationBasis basis(pc);
    CHECK(check_coordinates_roundtrip(basis, pc, 2, 2024, 100).passed);
  }
}

TEST_CASE("filtration level") {
  for (std::uint64_t p : kPrimes) {
    const PrimeChar pc(p);
    CHECK(filtration_level(power(alpha(pc), p - 1)) == p - 1);
    CHECK(filtration_level(BiTensorElement::one(pc)) == 0);
    CHECK(filtration_level(BiTensorElement(pc)) == p);
  }
  for (std::uint64_t p : {3, 5}) {
    const PrimeChar pc(p);
    const FiltrationBasis basis(pc);
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t m = 0; m < p; ++m) {
        CHECK(basis.level(alpha_power_oracle(p, m, k)) == m);
      }
    }
  }
}

TEST_CASE("filtration shift and graded isomorphism") {
  for (std::uint64_t p : kPrimes) {
    const PrimeChar pc(p);
    const FiltrationBasis basis(pc);
    CHECK(check_filtration_shift(basis, pc, 2, 9, 100).passed);
    CHECK(check_graded_isomorphism(basis, pc, 2).passed);
  }
}

TEST_CASE("parallel and serial bases agree") {
  const PrimeChar pc(11);
  const FiltrationBasis serial(pc, 2, Exec::serial);
  const FiltrationBasis parallel(pc, 2, Exec::parallel);
  std::mt19937_64 rng(1);
  for (int n = 0; n < 10; ++n) {
    const auto x = BiTensorElement::random(pc, rng);
    CHECK(serial.coordinates(x) == parallel.coordinates(x));
  }
}

TEST_CASE("symmetry classification") {
  const PrimeChar p3(3);
  const auto t = left_t_power(p3, 1);
  const auto a = alpha(p3);

  const auto ta2 = t * power(a, 2);
  CHECK(ta2 == from_terms(3, {{1, 2, 1, 0}, {2, 1, 1, 0}, {0, 0, 1, 1}}));
  CHECK(swap_factors(ta2) == ta2);

  const auto ta = t * a;
  CHECK(ta == from_terms(3, {{1, 1, 1, 0}, {2, 0, 2, 0}}));
  CHECK(swap_factors(ta) != ta);

  const auto two = classify_symmetry(PrimeChar(2));
  REQUIRE(two.rows.size() == 2);
  CHECK(two.rows[0].next_symmetric);
  CHECK_FALSE(two.rows[1].next_symmetric);

  for (std::uint64_t p : kPrimes) {
    const auto rep = classify_symmetry(PrimeChar(p));
    CHECK_MESSAGE(rep.matches_expected(), "p=" << p);
    for (const auto& row : rep.rows) {
      CHECK(row.top_symmetric);
      CHECK(row.top_identity_holds);
      CHECK(row.next_identity_holds);
    }
  }
}

TEST_CASE("reduction identities against the binomial oracle") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PrimeChar pc(p);
    for (std::size_t k = 0; k < p; ++k) {
      CHECK(top_reduction_identity(pc, k) == alpha_power_oracle(p, p - 1, k));
      CHECK(next_reduction_identity(pc, k) == alpha_power_oracle(p, p - 2, k));
    }
  }
}

namespace {

// Brute force over F_p: are the constant terms of the vectors linearly
// independent? Enumerates every nonzero coefficient tuple.
bool independent_mod_s_bruteforce(const std::vector<PairedModuleElement>& xs) {
  const std::uint64_t p = xs.front().prime();
  const std::size_t n = xs.size();
  const std::size_t len = xs.front().length();
  const std::size_t trunc = xs.front().trunc();
  std::vector<std::uint64_t> coef(n, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < n && ++coef[pos] == p) coef[pos++] = 0;
    if (pos == n) return true;  // wrapped: every nonzero tuple tried
    bool zero = true;
    for (std::size_t e = 0; e < len && zero; ++e) {
      std::uint64_t acc = 0;
      for (std::size_t v = 0; v < n; ++v) acc += coef[v] * xs[v].raw()[e * trunc];
      zero = acc % p == 0;
    }
    if (zero) return false;
  }
}

std::vector<PairedModuleElement> symmetric_and_complement(std::uint64_t p, std::size_t r) {
  const PrimeChar pc(p);
  const auto top = power(alpha(pc), p - 1);
  std::vector<PairedModuleElement> out;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b)
      for (std::size_t k = 0; k < p; ++k) {
        const auto x = left_t_power(pc, k) * top;
        if (a == b) {
          out.push_back(PairedModuleElement::embed(r, a, a, x));
        } else {
          out.push_back(PairedModuleElement::embed(r, a, b, x) +
                        PairedModuleElement::embed(r, b, a, x));
          out.push_back(PairedModuleElement::embed(r, a, b, x));
        }
      }
  return out;
}

}  // namespace

TEST_CASE("wedge kernel") {
  struct Case {
    std::uint64_t p;
    std::size_t r;
    std::size_t sym;
    std::size_t anti;
  };
  for (const Case c : {Case{2, 2, 6, 2}, Case{3, 2, 9, 3}, Case{5, 3, 30, 15}}) {
    const auto rep = wedge_kernel_check(PrimeChar(c.p), c.r);
    CHECK_MESSAGE(rep.passed(), "p=" << c.p << " r=" << c.r);
    CHECK(rep.symmetric_count == c.sym);
    CHECK(rep.symmetric_rank == c.sym);
    CHECK(rep.complement_count == c.anti);
    CHECK(rep.generator_count == c.p * c.r * c.r);
  }
  CHECK_FALSE(wedge_kernel_check(PrimeChar(2), 2).antisymmetrized_applicable);
  CHECK(wedge_kernel_check(PrimeChar(3), 3, 2, Exec::parallel).passed());
  CHECK_THROWS_AS(wedge_kernel_check(PrimeChar(3), 1), PreconditionError);
}

TEST_CASE("wedge kernel independence against brute force") {
  CHECK(independent_mod_s_bruteforce(symmetric_and_complement(2, 2)));
  CHECK(independent_mod_s_bruteforce(symmetric_and_complement(3, 2)));
  // Antisymmetrizing in characteristic 2 reproduces a symmetric generator.
  const PrimeChar p2(2);
  const auto x = power(alpha(p2), 1);
  auto family = symmetric_and_complement(2, 2);
  family.push_back(PairedModuleElement::embed(2, 0, 1, x) - PairedModuleElement::embed(2, 1, 0, x));
  CHECK_FALSE(independent_mod_s_bruteforce(family));
}

TEST_CASE("local suite at p=2, r=1 records the lone symmetric t^0 alpha^0") {
  const auto suite = run_local_suite(PrimeChar(2), 1, 2, 1);
  CHECK(suite.passed());
  CHECK_FALSE(suite.wedge.has_value());
  CHECK(suite.symmetry.rows[0].next_symmetric);
}
