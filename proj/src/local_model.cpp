#include "frobwedge/local_model.hpp"

#include <algorithm>
#include <string>

#include "frobwedge/errors.hpp"

namespace frobwedge::local {

// ---------------------------------------------------------------------------
// BiTensorElement

BiTensorElement::BiTensorElement(PrimeChar p, std::size_t trunc)
    : p_(p), trunc_(trunc), coeffs_(p.value() * p.value() * trunc, 0) {
  if (trunc == 0) throw PreconditionError("truncation order must be positive");
}

BiTensorElement BiTensorElement::monomial(PrimeChar p, std::size_t i, std::size_t j,
                                          std::uint64_t value, std::size_t sdeg,
                                          std::size_t trunc) {
  BiTensorElement x(p, trunc);
  if (i >= p.value() || j >= p.value()) throw PreconditionError("monomial index out of range");
  if (sdeg < trunc) x.coeffs_[x.index(i, j, sdeg)] = value % p.value();
  return x;
}

BiTensorElement BiTensorElement::one(PrimeChar p, std::size_t trunc) {
  return monomial(p, 0, 0, 1, 0, trunc);
}

BiTensorElement BiTensorElement::random(PrimeChar p, std::mt19937_64& rng, std::size_t trunc) {
  BiTensorElement x(p, trunc);
  for (auto& c : x.coeffs_) c = rng() % p.value();
  return x;
}

std::uint64_t BiTensorElement::coeff(std::size_t i, std::size_t j, std::size_t sdeg) const {
  if (sdeg >= trunc_) return 0;
  return coeffs_.at(index(i, j, sdeg));
}

std::span<const std::uint64_t> BiTensorElement::entry(std::size_t i, std::size_t j) const {
  return {coeffs_.data() + index(i, j, 0), trunc_};
}

bool BiTensorElement::is_zero() const noexcept { return series::is_zero(coeffs_); }

BiTensorElement& BiTensorElement::add_term(std::size_t i, std::size_t j, std::int64_t value,
                                           std::size_t sdeg) {
  if (i >= prime() || j >= prime()) throw PreconditionError("monomial index out of range");
  if (sdeg >= trunc_) return *this;
  auto& c = coeffs_[index(i, j, sdeg)];
  c = modp::add(c, modp::reduce(value, prime()), prime());
  return *this;
}

void BiTensorElement::require_compatible(const BiTensorElement& o) const {
  if (p_ != o.p_ || trunc_ != o.trunc_) {
    throw ContractViolation("bi-tensor operands differ in characteristic or truncation");
  }
}

BiTensorElement BiTensorElement::operator+(const BiTensorElement& o) const {
  require_compatible(o);
  BiTensorElement r(*this);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    r.coeffs_[n] = modp::add(coeffs_[n], o.coeffs_[n], prime());
  }
  return r;
}

BiTensorElement BiTensorElement::operator-(const BiTensorElement& o) const {
  require_compatible(o);
  BiTensorElement r(*this);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    r.coeffs_[n] = modp::sub(coeffs_[n], o.coeffs_[n], prime());
  }
  return r;
}

BiTensorElement BiTensorElement::operator-() const { return scaled(-1); }

BiTensorElement BiTensorElement::scaled(std::int64_t c) const {
  BiTensorElement r(*this);
  const std::uint64_t cc = modp::reduce(c, prime());
  for (auto& v : r.coeffs_) v = modp::mul(v, cc, prime());
  return r;
}

// ---------------------------------------------------------------------------
// Ring operations

BiTensorElement alpha(PrimeChar p, std::size_t trunc) {
  BiTensorElement a(p, trunc);
  a.add_term(0, 1, 1).add_term(1 % p.value(), 0, -1);
  return a;
}

BiTensorElement left_t_power(PrimeChar p, std::size_t k, std::size_t trunc) {
  // t^k = s^{k / p} t^{k mod p}
  return BiTensorElement::monomial(p, k % p.value(), 0, 1, k / p.value(), trunc);
}

BiTensorElement multiply(const BiTensorElement& x, const BiTensorElement& y) {
  if (x.characteristic() != y.characteristic() || x.trunc() != y.trunc()) {
    throw ContractViolation("multiply: operands differ in characteristic or truncation");
  }
  const std::uint64_t p = x.prime();
  const std::size_t m = x.trunc();
  BiTensorElement out(x.characteristic(), m);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      auto xe = x.entry(i, j);
      if (series::is_zero(xe)) continue;
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < p; ++l) {
          auto ye = y.entry(k, l);
          if (series::is_zero(ye)) continue;
          // Each factor reduces t^p -> s independently.
          const std::size_t carry = (i + k) / p + (j + l) / p;
          const std::size_t li = (i + k) % p, rj = (j + l) % p;
          for (std::size_t a = 0; a < m; ++a) {
            if (xe[a] == 0) continue;
            for (std::size_t b = 0; a + b + carry < m; ++b) {
              if (ye[b] == 0) continue;
              out.add_term(li, rj, static_cast<std::int64_t>(modp::mul(xe[a], ye[b], p)),
                           a + b + carry);
            }
          }
        }
      }
    }
  }
  return out;
}

BiTensorElement power(const BiTensorElement& x, std::size_t e) {
  BiTensorElement result = BiTensorElement::one(x.characteristic(), x.trunc());
  for (std::size_t n = 0; n < e; ++n) result = multiply(result, x);
  return result;
}

BiTensorElement filtration_basis_element(PrimeChar p, std::size_t k, std::size_t m,
                                         std::size_t trunc) {
  return multiply(left_t_power(p, k, trunc), power(alpha(p, trunc), m));
}

BiTensorElement connection(const BiTensorElement& x) {
  const std::uint64_t p = x.prime();
  BiTensorElement out(x.characteristic(), x.trunc());
  for (std::size_t i = 1; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      auto e = x.entry(i, j);
      for (std::size_t d = 0; d < x.trunc(); ++d) {
        if (e[d] == 0) continue;
        out.add_term(i - 1, j, static_cast<std::int64_t>(modp::mul(i % p, e[d], p)), d);
      }
    }
  }
  return out;
}

BiTensorElement swap_factors(const BiTensorElement& x) {
  const std::uint64_t p = x.prime();
  BiTensorElement out(x.characteristic(), x.trunc());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      auto e = x.entry(i, j);
      for (std::size_t d = 0; d < x.trunc(); ++d) {
        if (e[d] != 0) out.add_term(j, i, static_cast<std::int64_t>(e[d]), d);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coordinates in { t^k alpha^m }

FiltrationCoordinates::FiltrationCoordinates(PrimeChar p, std::size_t trunc,
                                             std::vector<std::uint64_t> coeffs)
    : p_(p), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != p.value() * p.value() * trunc) {
    throw ContractViolation("coordinate table has wrong size");
  }
}

std::span<const std::uint64_t> FiltrationCoordinates::entry(std::size_t k, std::size_t m) const {
  return {coeffs_.data() + (k * p_.value() + m) * trunc_, trunc_};
}

std::size_t FiltrationCoordinates::min_level() const {
  const std::uint64_t p = p_.value();
  for (std::size_t m = 0; m < p; ++m) {
    for (std::size_t k = 0; k < p; ++k) {
      if (!series::is_zero(entry(k, m))) return m;
    }
  }
  return p;
}

namespace {

std::vector<BiTensorElement> make_filtration_basis(PrimeChar p, std::size_t trunc) {
  const std::uint64_t pv = p.value();
  std::vector<BiTensorElement> out;
  out.reserve(pv * pv);
  const BiTensorElement a = alpha(p, trunc);
  std::vector<BiTensorElement> alpha_pows{BiTensorElement::one(p, trunc)};
  for (std::size_t m = 1; m < pv; ++m) alpha_pows.push_back(multiply(alpha_pows.back(), a));
  for (std::size_t k = 0; k < pv; ++k) {
    const BiTensorElement tk = left_t_power(p, k, trunc);
    for (std::size_t m = 0; m < pv; ++m) out.push_back(multiply(tk, alpha_pows[m]));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> raw_rows(const std::vector<BiTensorElement>& xs) {
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.emplace_back(x.raw().begin(), x.raw().end());
  return rows;
}

}  // namespace

FiltrationBasis::FiltrationBasis(PrimeChar p, std::size_t trunc, Exec exec)
    : p_(p),
      trunc_(trunc),
      basis_(make_filtration_basis(p, trunc)),
      solver_(LocalRing{p.value(), trunc}, p.value() * p.value(), raw_rows(basis_), exec) {
  if (!solver_.full_rank()) {
    throw ContractViolation("t^k alpha^m family is not a basis for p = " +
                            std::to_string(p.value()));
  }
}

FiltrationCoordinates FiltrationBasis::coordinates(const BiTensorElement& x) const {
  if (x.characteristic() != p_ || x.trunc() != trunc_) {
    throw ContractViolation("coordinates: element does not match basis ring");
  }
  auto c = solver_.express(x.raw());
  if (!c) throw ContractViolation("coordinates: change-of-basis solve failed");
  return FiltrationCoordinates(p_, trunc_, std::move(*c));
}

BiTensorElement FiltrationBasis::expand(const FiltrationCoordinates& c) const {
  if (c.prime() != p_.value() || c.trunc() != trunc_) {
    throw ContractViolation("expand: coordinates do not match basis ring");
  }
  const std::uint64_t p = p_.value();
  BiTensorElement out(p_, trunc_);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t m = 0; m < p; ++m) {
      BiTensorElement coef(p_, trunc_);
      auto e = c.entry(k, m);
      if (series::is_zero(e)) continue;
      for (std::size_t d = 0; d < trunc_; ++d) coef.add_term(0, 0, static_cast<std::int64_t>(e[d]), d);
      out = out + multiply(coef, basis_[k * p + m]);
    }
  }
  return out;
}

FiltrationCoordinates coordinates(const BiTensorElement& x) {
  return FiltrationBasis(x.characteristic(), x.trunc()).coordinates(x);
}

BiTensorElement expand(const FiltrationCoordinates& c) {
  return FiltrationBasis(PrimeChar(c.prime()), c.trunc()).expand(c);
}

std::size_t filtration_level(const BiTensorElement& x) { return coordinates(x).min_level(); }

// ---------------------------------------------------------------------------
// Symmetry classification

BiTensorElement top_reduction_identity(PrimeChar p, std::size_t k, std::size_t trunc) {
  const auto pv = static_cast<std::int64_t>(p.value());
  const auto kk = static_cast<std::int64_t>(k);
  BiTensorElement out(p, trunc);
  for (std::int64_t i = kk; i <= pv - 1; ++i) out.add_term(i, pv - 1 + kk - i, 1);
  for (std::int64_t j = 0; j <= kk - 1; ++j) out.add_term(j, kk - 1 - j, 1, 1);
  return out;
}

BiTensorElement next_reduction_identity(PrimeChar p, std::size_t k, std::size_t trunc) {
  const auto pv = static_cast<std::int64_t>(p.value());
  const auto kk = static_cast<std::int64_t>(k);
  BiTensorElement out(p, trunc);
  for (std::int64_t i = kk; i <= pv - 2; ++i) out.add_term(i, pv - 2 + kk - i, i - kk + 1);
  // t^{p-1} (x) t^{k-1}, absent when k = 0
  if (kk >= 1) out.add_term(pv - 1, kk - 1, pv - kk);
  for (std::int64_t j = 0; j <= kk - 2; ++j) out.add_term(j, kk - 2 - j, j - kk + 1, 1);
  return out;
}

bool SymmetryReport::matches_expected() const {
  if (rows.size() != p) return false;
  return std::all_of(rows.begin(), rows.end(), [this](const SymmetryRow& r) {
    const bool expect_next = (r.k == 0 && p == 2);
    return r.top_symmetric && r.top_identity_holds && r.next_identity_holds &&
           r.next_symmetric == expect_next;
  });
}

SymmetryReport classify_symmetry(PrimeChar p, std::size_t trunc) {
  const std::uint64_t pv = p.value();
  const BiTensorElement a = alpha(p, trunc);
  const BiTensorElement top = power(a, pv - 1);
  const BiTensorElement next = power(a, pv - 2);
  SymmetryReport report{pv, {}};
  for (std::size_t k = 0; k < pv; ++k) {
    const BiTensorElement tk = left_t_power(p, k, trunc);
    const BiTensorElement x = multiply(tk, top);
    const BiTensorElement y = multiply(tk, next);
    report.rows.push_back({k, swap_factors(x) == x, x == top_reduction_identity(p, k, trunc),
                           swap_factors(y) == y, y == next_reduction_identity(p, k, trunc)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rank-r paired module

PairedModuleElement::PairedModuleElement(PrimeChar p, std::size_t rank, std::size_t trunc)
    : p_(p), rank_(rank), trunc_(trunc), coeffs_(rank * rank * p.value() * p.value() * trunc, 0) {
  if (rank == 0) throw PreconditionError("rank must be at least 1");
  if (trunc == 0) throw PreconditionError("truncation order must be positive");
}

PairedModuleElement PairedModuleElement::embed(std::size_t rank, std::size_t a, std::size_t b,
                                               const BiTensorElement& x) {
  PairedModuleElement out(x.characteristic(), rank, x.trunc());
  if (a >= rank || b >= rank) throw PreconditionError("symbol index out of range");
  const std::uint64_t p = x.prime();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      auto e = x.entry(i, j);
      std::copy(e.begin(), e.end(), out.coeffs_.begin() + out.index(a, b, i, j, 0));
    }
  }
  return out;
}

std::uint64_t PairedModuleElement::coeff(std::size_t a, std::size_t b, std::size_t i,
                                         std::size_t j, std::size_t sdeg) const {
  if (sdeg >= trunc_) return 0;
  return coeffs_.at(index(a, b, i, j, sdeg));
}

void PairedModuleElement::require_compatible(const PairedModuleElement& o) const {
  if (p_ != o.p_ || rank_ != o.rank_ || trunc_ != o.trunc_) {
    throw ContractViolation("paired-module operands are incompatible");
  }
}

PairedModuleElement PairedModuleElement::operator+(const PairedModuleElement& o) const {
  require_compatible(o);
  PairedModuleElement r(*this);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    r.coeffs_[n] = modp::add(coeffs_[n], o.coeffs_[n], p_.value());
  }
  return r;
}

PairedModuleElement PairedModuleElement::operator-(const PairedModuleElement& o) const {
  require_compatible(o);
  PairedModuleElement r(*this);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    r.coeffs_[n] = modp::sub(coeffs_[n], o.coeffs_[n], p_.value());
  }
  return r;
}

PairedModuleElement PairedModuleElement::swapped() const {
  PairedModuleElement out(p_, rank_, trunc_);
  const std::uint64_t p = p_.value();
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = 0; b < rank_; ++b)
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
          for (std::size_t d = 0; d < trunc_; ++d)
            out.coeffs_[out.index(b, a, j, i, d)] = coeffs_[index(a, b, i, j, d)];
  return out;
}

// ---------------------------------------------------------------------------
// Wedge kernel

bool WedgeKernelReport::passed() const {
  const std::size_t sym_expected = p * rank * (rank + 1) / 2;
  const std::size_t comp_expected = p * rank * (rank - 1) / 2;
  return generators_free && swap_is_permutation && symmetric_invariant &&
         symmetric_independent && symmetric_count == sym_expected &&
         symmetric_rank == sym_expected && complement_count == comp_expected &&
         complement_independent && (!antisymmetrized_applicable || antisymmetrized_independent);
}

namespace {

std::vector<std::vector<std::uint64_t>> raw_rows(const std::vector<PairedModuleElement>& xs) {
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.emplace_back(x.raw().begin(), x.raw().end());
  return rows;
}

bool independent(const std::vector<PairedModuleElement>& xs, const LocalRing& ring,
                 std::size_t length, Exec exec) {
  return UnitEliminator(ring, length, raw_rows(xs), exec).full_rank();
}

}  // namespace

WedgeKernelReport wedge_kernel_check(PrimeChar p, std::size_t rank, std::size_t trunc,
                                     Exec exec) {
  if (rank < 2) throw PreconditionError("wedge kernel check requires rank >= 2");
  const std::uint64_t pv = p.value();
  const LocalRing ring{pv, trunc};

  const BiTensorElement top = power(alpha(p, trunc), pv - 1);
  std::vector<BiTensorElement> tk_top;
  for (std::size_t k = 0; k < pv; ++k) tk_top.push_back(multiply(left_t_power(p, k, trunc), top));

  WedgeKernelReport rep{};
  rep.p = pv;
  rep.rank = rank;

  // (e_a (x) e_b) t^k alpha^{p-1}, index (a * r + b) * p + k
  std::vector<PairedModuleElement> gens;
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t k = 0; k < pv; ++k)
        gens.push_back(PairedModuleElement::embed(rank, a, b, tk_top[k]));
  rep.generator_count = gens.size();
  const std::size_t length = gens.front().length();

  UnitEliminator all(ring, length, raw_rows(gens), exec);
  rep.generators_free = all.full_rank();

  // Matrix of swap on the span of the generators. It must be a permutation
  // matrix with constant entries; its fixed module then has the rank of the
  // kernel of (S - I) over F_p.
  rep.swap_is_permutation = rep.generators_free;
  std::vector<std::vector<std::uint64_t>> shifted;  // rows of S - I, constant terms
  const std::size_t count = gens.size();
  std::vector<std::size_t> hits(count, 0);
  for (std::size_t g = 0; g < count && rep.swap_is_permutation; ++g) {
    auto c = all.express(gens[g].swapped().raw());
    if (!c) {
      rep.swap_is_permutation = false;
      break;
    }
    std::vector<std::uint64_t> row(count, 0);
    std::size_t ones = 0;
    for (std::size_t h = 0; h < count; ++h) {
      const std::uint64_t c0 = (*c)[h * trunc];
      for (std::size_t d = 1; d < trunc; ++d) {
        if ((*c)[h * trunc + d] != 0) rep.swap_is_permutation = false;
      }
      if (c0 == 1) {
        ++ones;
        ++hits[h];
      } else if (c0 != 0) {
        rep.swap_is_permutation = false;
      }
      row[h] = c0;
    }
    if (ones != 1) rep.swap_is_permutation = false;
    row[g] = modp::sub(row[g], 1, pv);
    shifted.push_back(std::move(row));
  }
  if (rep.swap_is_permutation) {
    rep.swap_is_permutation =
        std::all_of(hits.begin(), hits.end(), [](std::size_t n) { return n == 1; });
  }
  if (rep.swap_is_permutation) {
    UnitEliminator moved(LocalRing{pv, 1}, count, std::move(shifted), exec);
    rep.symmetric_rank = count - moved.rank();
  }

  std::vector<PairedModuleElement> sym;
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t k = 0; k < pv; ++k) sym.push_back(gens[(a * rank + a) * pv + k]);
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = a + 1; b < rank; ++b)
      for (std::size_t k = 0; k < pv; ++k)
        sym.push_back(gens[(a * rank + b) * pv + k] + gens[(b * rank + a) * pv + k]);
  rep.symmetric_count = sym.size();
  rep.symmetric_invariant = std::all_of(sym.begin(), sym.end(), [](const PairedModuleElement& x) {
    return x.swapped() == x;
  });
  rep.symmetric_independent = independent(sym, ring, length, exec);

  std::vector<PairedModuleElement> with_complement = sym;
  std::vector<PairedModuleElement> with_antisym = sym;
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = a + 1; b < rank; ++b) {
      for (std::size_t k = 0; k < pv; ++k) {
        const auto& ab = gens[(a * rank + b) * pv + k];
        const auto& ba = gens[(b * rank + a) * pv + k];
        with_complement.push_back(ab);
        with_antisym.push_back(ab - ba);
      }
    }
  }
  rep.complement_count = with_complement.size() - sym.size();
  rep.complement_independent = independent(with_complement, ring, length, exec);
  // In characteristic 2 the antisymmetrization coincides with the symmetric
  // generators, so only the e_a (x) e_b representatives form a complement.
  rep.antisymmetrized_applicable = pv != 2;
  rep.antisymmetrized_independent =
      rep.antisymmetrized_applicable && independent(with_antisym, ring, length, exec);
  return rep;
}

}  // namespace frobwedge::local
