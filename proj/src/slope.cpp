#include "frobwedge/slope.hpp"

#include <utility>

#include "frobwedge/errors.hpp"

namespace frobwedge {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& q) {
  // cpp_rational is always normalized with a positive denominator.
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BundleClass& b) {
  return "(rank " + b.rank().str() + ", degree " + b.degree().str() + ")";
}

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

CurveContext::CurveContext(PrimeChar p, std::int64_t genus) : p_(p), g_(genus) {
  if (genus < 1) throw PreconditionError("genus must be at least 1");
}

BundleClass::BundleClass(BigInt rank, BigInt degree)
    : rank_(std::move(rank)), degree_(std::move(degree)) {
  if (rank_ < 1) throw PreconditionError("rank must be at least 1");
}

Rational slope(const BundleClass& b) { return Rational(b.degree(), b.rank()); }

BundleClass frob_push(const BundleClass& b, std::uint64_t n, const CurveContext& ctx) {
  const BigInt q = ipow(ctx.p(), n);
  return BundleClass(b.rank() * q, b.degree() + b.rank() * (q - 1) * (ctx.genus() - 1));
}

BundleClass tensor(const BundleClass& x, const BundleClass& y) {
  return BundleClass(x.rank() * y.rank(), y.rank() * x.degree() + x.rank() * y.degree());
}

BundleClass wedge2(const BundleClass& b) {
  if (b.rank() < 2) throw PreconditionError("second exterior power needs rank >= 2");
  return BundleClass(b.rank() * (b.rank() - 1) / 2, (b.rank() - 1) * b.degree());
}

BundleClass omega_power(const CurveContext& ctx, const BigInt& m) {
  if (m < 0) throw PreconditionError("canonical twist exponent must be nonnegative");
  return BundleClass(1, m * (2 * ctx.genus() - 2));
}

BundleClass b1_class(const CurveContext& ctx) {
  const std::int64_t pm1 = static_cast<std::int64_t>(ctx.p()) - 1;
  return BundleClass(pm1, BigInt(pm1) * (ctx.genus() - 1));
}

namespace {

FiltrationReport finish(std::vector<BundleClass> quotients, BundleClass total) {
  BigInt rank_sum = 0, degree_sum = 0;
  std::vector<Rational> slopes;
  for (const auto& q : quotients) {
    rank_sum += q.rank();
    degree_sum += q.degree();
    slopes.push_back(slope(q));
  }
  const bool conserved = rank_sum == total.rank() && degree_sum == total.degree();
  return {std::move(quotients), std::move(slopes), std::move(total), conserved};
}

}  // namespace

FiltrationReport canonical_filtration_profile(const BundleClass& b, const CurveContext& ctx) {
  std::vector<BundleClass> quotients;
  for (std::uint64_t i = 0; i < ctx.p(); ++i) quotients.push_back(tensor(b, omega_power(ctx, i)));
  // F^*F_*E has rank p r and degree p deg(F_*E).
  const BundleClass pushed = frob_push(b, 1, ctx);
  BundleClass total(pushed.rank(), pushed.degree() * ctx.p());
  return finish(std::move(quotients), std::move(total));
}

FiltrationReport pushforward_tensor_profile(const BundleClass& b, const CurveContext& ctx) {
  const BundleClass square = tensor(b, b);
  std::vector<BundleClass> quotients;
  for (std::uint64_t i = 0; i < ctx.p(); ++i) {
    quotients.push_back(frob_push(tensor(square, omega_power(ctx, i)), 1, ctx));
  }
  const BundleClass pushed = frob_push(b, 1, ctx);
  return finish(std::move(quotients), tensor(pushed, pushed));
}

}  // namespace frobwedge
