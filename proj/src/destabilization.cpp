#include "frobwedge/destabilization.hpp"

#include "frobwedge/errors.hpp"

namespace frobwedge {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::high_rank:
      return "HIGH_RANK";
    case CaseTag::line_odd:
      return "LINE_ODD";
    case CaseTag::line_char2:
      return "LINE_CHAR2";
  }
  return "?";
}

CaseTag case_for(const BigInt& rank, std::uint64_t p) {
  if (rank > 1) return CaseTag::high_rank;
  return p == 2 ? CaseTag::line_char2 : CaseTag::line_odd;
}

std::pair<CaseTag, BundleClass> subbundle_class(const BundleClass& b, std::uint64_t n,
                                                const CurveContext& ctx) {
  if (n < 1) throw PreconditionError("pushforward level n must be at least 1");
  const std::uint64_t p = ctx.p();
  const BigInt q = ipow(p, n);
  const CaseTag tag = case_for(b.rank(), p);
  switch (tag) {
    case CaseTag::high_rank:
      // F_*^n(E ^ E (x) Omega^{p^n - 1})
      return {tag, frob_push(tensor(wedge2(b), omega_power(ctx, q - 1)), n, ctx)};
    case CaseTag::line_odd:
      // F_*^n(E (x) E (x) Omega^{p^n - 2})
      return {tag, frob_push(tensor(tensor(b, b), omega_power(ctx, q - 2)), n, ctx)};
    case CaseTag::line_char2: {
      // F_*^{n-1}(B_1 (x) E (x) Omega^{2^{n-1} - 1})
      const BigInt q1 = ipow(p, n - 1);
      return {tag, frob_push(tensor(tensor(b1_class(ctx), b), omega_power(ctx, q1 - 1)), n - 1,
                             ctx)};
    }
  }
  throw ContractViolation("unhandled case tag");
}

DestabilizationVerdict verdict(const BundleClass& b, std::uint64_t n, const CurveContext& ctx) {
  if (ctx.genus() < 2) throw PreconditionError("destabilization verdicts require genus >= 2");
  if (n < 1) throw PreconditionError("pushforward level n must be at least 1");
  auto [tag, sub] = subbundle_class(b, n, ctx);
  BundleClass ambient = wedge2(frob_push(b, n, ctx));
  Rational gap = slope(sub) - slope(ambient);
  const bool destabilized = gap > 0;

  std::optional<AlternateLevel> previous;
  if (tag == CaseTag::line_char2) {
    const BundleClass lower = frob_push(b, n - 1, ctx);
    if (lower.rank() >= 2) {
      BundleClass lower_ambient = wedge2(lower);
      Rational lower_gap = slope(sub) - slope(lower_ambient);
      previous = AlternateLevel{std::move(lower_ambient), std::move(lower_gap)};
    }
  }
  return {tag, std::move(sub), std::move(ambient), std::move(gap), destabilized,
          std::move(previous)};
}

Rational closed_form_gap(CaseTag tag, std::uint64_t p, std::uint64_t n, std::int64_t g) {
  const BigInt gm1 = g - 1;
  switch (tag) {
    case CaseTag::high_rank: {
      const BigInt q = ipow(p, n);
      return Rational((q - 1) * gm1, q);
    }
    case CaseTag::line_odd: {
      const BigInt q = ipow(p, n);
      return Rational((q - 3) * gm1, q);
    }
    case CaseTag::line_char2: {
      const BigInt q1 = ipow(2, n - 1);
      return Rational((q1 - 1) * gm1, q1);
    }
  }
  throw ContractViolation("unhandled case tag");
}

bool expected_destabilized(const BigInt& rank, std::uint64_t p, std::uint64_t n) {
  return rank > 1 || ipow(p, n) > 3;
}

CohomCertificate cohom_certificate(const CurveContext& ctx, std::uint64_t n) {
  if (ctx.genus() < 2) throw PreconditionError("certificate requires genus >= 2");
  if (n < 2) throw PreconditionError("certificate requires n > 1 (n = " + std::to_string(n) + ")");
  const std::uint64_t p = ctx.p();
  const std::int64_t g = ctx.genus();
  const BigInt qn = ipow(p, n);
  const BigInt shift = (qn - 1) * (g - 1);  // (p^n - 1)(g - 1)

  CohomCertificate c{};
  c.p = p;
  c.g = g;
  c.n = n;
  c.t = 2;

  BigInt quantity;
  if (p == 2) {
    // p^{n-1} | d + (p^n - 1)(g - 1)
    c.modulus = ipow(p, n - 1);
    c.chosen_degree = ((-shift) % c.modulus + c.modulus) % c.modulus;
    quantity = c.chosen_degree + shift;
  } else {
    // p^n | 2d + 2(p^n - 1)(g - 1); 2 is a unit mod p^n
    c.modulus = qn;
    c.chosen_degree = ((-shift) % c.modulus + c.modulus) % c.modulus;
    quantity = 2 * c.chosen_degree + 2 * shift;
  }
  c.divisibility_ok = quantity % c.modulus == 0;
  c.degA = quantity / c.modulus;

  const BundleClass line(1, c.chosen_degree);
  c.threshold = Rational(c.t) * slope(frob_push(line, n, ctx));
  c.degree_ok = Rational(c.degA) >= c.threshold;

  // deg of the bundle whose pushforward contains A, minus deg A^{modulus}
  BigInt twisted;
  if (p == 2) {
    twisted = tensor(tensor(b1_class(ctx), line), omega_power(ctx, c.modulus - 1)).degree();
  } else {
    twisted = tensor(tensor(line, line), omega_power(ctx, qn - 1)).degree();
  }
  c.witness_twist_degree = twisted - c.modulus * c.degA;
  c.valid = c.divisibility_ok && c.degree_ok && c.witness_twist_degree == 0;
  return c;
}

}  // namespace frobwedge
