#include "frobwedge/local_checks.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "frobwedge/errors.hpp"

namespace frobwedge::local {

namespace {

std::string at(std::uint64_t p) { return "p=" + std::to_string(p); }

}  // namespace

CheckResult check_alpha_nilpotent(PrimeChar p, std::size_t trunc) {
  const BiTensorElement a = alpha(p, trunc);
  const BiTensorElement below = power(a, p.value() - 1);
  const BiTensorElement top = multiply(below, a);
  const bool ok = top.is_zero() && !below.is_zero();
  return {"alpha_nilpotent", ok,
          at(p.value()) + (ok ? ": alpha^p = 0, alpha^(p-1) != 0" : ": nilpotency order wrong")};
}

CheckResult check_connection_formula(PrimeChar p, std::size_t trunc) {
  const BiTensorElement a = alpha(p, trunc);
  BiTensorElement prev = BiTensorElement::one(p, trunc);  // alpha^{l-1}
  for (std::size_t l = 1; l < p.value(); ++l) {
    const BiTensorElement cur = multiply(prev, a);
    if (connection(cur) != prev.scaled(-static_cast<std::int64_t>(l))) {
      return {"connection_formula", false, at(p.value()) + ": fails at l=" + std::to_string(l)};
    }
    prev = cur;
  }
  return {"connection_formula", true, at(p.value()) + ": holds for 1 <= l <= p-1"};
}

CheckResult check_leibniz(PrimeChar p, std::size_t trunc, std::uint64_t seed, std::size_t pairs) {
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < pairs; ++n) {
    const auto x = BiTensorElement::random(p, rng, trunc);
    const auto y = BiTensorElement::random(p, rng, trunc);
    if (connection(x * y) != connection(x) * y + x * connection(y)) {
      return {"leibniz", false, at(p.value()) + ": fails on pair " + std::to_string(n)};
    }
  }
  return {"leibniz", true, at(p.value()) + ": " + std::to_string(pairs) + " random pairs"};
}

CheckResult check_filtration_shift(const FiltrationBasis& basis, PrimeChar p, std::size_t trunc,
                                   std::uint64_t seed, std::size_t samples) {
  const std::uint64_t pv = p.value();
  auto shifted_ok = [&](const BiTensorElement& x) {
    const std::size_t lx = basis.level(x);
    const std::size_t ly = basis.level(connection(x));
    return ly + 1 >= lx;
  };
  for (std::size_t k = 0; k < pv; ++k) {
    for (std::size_t m = 0; m < pv; ++m) {
      const auto x = filtration_basis_element(p, k, m, trunc);
      if (basis.level(x) != m) {
        return {"filtration_shift", false,
                at(pv) + ": t^" + std::to_string(k) + " alpha^" + std::to_string(m) +
                    " has wrong level"};
      }
      if (!shifted_ok(x)) {
        return {"filtration_shift", false,
                at(pv) + ": connection leaves I_(l-1) at k=" + std::to_string(k) +
                    " m=" + std::to_string(m)};
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    if (!shifted_ok(BiTensorElement::random(p, rng, trunc))) {
      return {"filtration_shift", false, at(pv) + ": fails on random sample " + std::to_string(n)};
    }
  }
  return {"filtration_shift", true, at(pv) + ": connection(I_(l+1)) in I_l"};
}

CheckResult check_graded_isomorphism(const FiltrationBasis& basis, PrimeChar p,
                                     std::size_t trunc) {
  const std::uint64_t pv = p.value();
  for (std::size_t l = 1; l < pv; ++l) {
    if (modp::neg(l % pv, pv) == 0) {
      return {"graded_isomorphism", false, at(pv) + ": -l vanishes at l=" + std::to_string(l)};
    }
    for (std::size_t k = 0; k < pv; ++k) {
      const auto x = filtration_basis_element(p, k, l, trunc);
      const auto image = filtration_basis_element(p, k, l - 1, trunc);
      const auto residue = connection(x) + image.scaled(static_cast<std::int64_t>(l));
      if (basis.level(residue) < l) {
        return {"graded_isomorphism", false,
                at(pv) + ": k=" + std::to_string(k) + " l=" + std::to_string(l)};
      }
    }
  }
  return {"graded_isomorphism", true, at(pv) + ": graded map is multiplication by -l"};
}

CheckResult check_coordinates_roundtrip(const FiltrationBasis& basis, PrimeChar p,
                                        std::size_t trunc, std::uint64_t seed,
                                        std::size_t samples) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto x = BiTensorElement::random(p, rng, trunc);
    const auto c = basis.coordinates(x);
    if (basis.expand(c) != x || basis.coordinates(basis.expand(c)) != c) {
      return {"coordinates_roundtrip", false, at(p.value()) + ": sample " + std::to_string(n)};
    }
  }
  return {"coordinates_roundtrip", true,
          at(p.value()) + ": " + std::to_string(samples) + " random elements"};
}

CheckResult check_swap(PrimeChar p, std::size_t trunc, std::uint64_t seed, std::size_t samples) {
  const std::uint64_t pv = p.value();
  const BiTensorElement a = alpha(p, trunc);
  BiTensorElement al = BiTensorElement::one(p, trunc);
  for (std::size_t l = 0; l < pv; ++l) {
    const std::int64_t sign = (l % 2 == 0) ? 1 : -1;
    if (swap_factors(al) != al.scaled(sign)) {
      return {"swap", false, at(pv) + ": swap(alpha^l) != (-1)^l alpha^l at l=" + std::to_string(l)};
    }
    al = al * a;
  }
  std::mt19937_64 rng(seed + 1);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto x = BiTensorElement::random(p, rng, trunc);
    const auto y = BiTensorElement::random(p, rng, trunc);
    if (swap_factors(swap_factors(x)) != x ||
        swap_factors(x * y) != swap_factors(x) * swap_factors(y) ||
        swap_factors(x + y) != swap_factors(x) + swap_factors(y)) {
      return {"swap", false, at(pv) + ": ring-map property fails on sample " + std::to_string(n)};
    }
  }
  return {"swap", true, at(pv) + ": involutive ring map, swap(alpha^l) = (-1)^l alpha^l"};
}

bool LocalSuite::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }) &&
         symmetry.matches_expected() && (!wedge || wedge->passed());
}

LocalSuite run_local_suite(PrimeChar p, std::size_t rank, std::size_t trunc, std::uint64_t seed,
                           Exec exec) {
  if (rank < 1) throw PreconditionError("rank must be at least 1");
  if (trunc < 2) throw PreconditionError("truncation order must be at least 2");
  const FiltrationBasis basis(p, trunc, exec);
  LocalSuite suite{{}, classify_symmetry(p, trunc), std::nullopt};
  suite.checks.push_back({"binomial_congruences", check_binomial_congruences(p),
                          at(p.value()) + ": C(p-1,h) and C(p-2,h) mod p"});
  suite.checks.push_back(check_alpha_nilpotent(p, trunc));
  suite.checks.push_back(check_connection_formula(p, trunc));
  suite.checks.push_back(check_leibniz(p, trunc, seed, kRandomSamples));
  suite.checks.push_back(check_filtration_shift(basis, p, trunc, seed, kRandomSamples));
  suite.checks.push_back(check_graded_isomorphism(basis, p, trunc));
  suite.checks.push_back(check_coordinates_roundtrip(basis, p, trunc, seed, kRandomSamples));
  suite.checks.push_back(check_swap(p, trunc, seed, kRandomSamples));
  suite.checks.push_back({"symmetry_classification", suite.symmetry.matches_expected(),
                          at(p.value()) + ": t^k alpha^(p-1) symmetric; t^k alpha^(p-2) "
                                          "symmetric iff k=0 and p=2"});
  if (rank >= 2) {
    suite.wedge = wedge_kernel_check(p, rank, trunc, exec);
    suite.checks.push_back({"wedge_kernel", suite.wedge->passed(),
                            at(p.value()) + " r=" + std::to_string(rank) + ": symmetric " +
                                std::to_string(suite.wedge->symmetric_count) + ", complement " +
                                std::to_string(suite.wedge->complement_count)});
  }
  return suite;
}

}  // namespace frobwedge::local
