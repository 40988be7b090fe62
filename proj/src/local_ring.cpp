#include "frobwedge/local_ring.hpp"

#include <algorithm>
#include <utility>

#include "frobwedge/errors.hpp"
#include "frobwedge/modp.hpp"

namespace frobwedge {
namespace series {

void mul(const LocalRing& ring, std::span<const std::uint64_t> a,
         std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  const std::size_t m = ring.trunc;
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) {
      out[i + j] = modp::add(out[i + j], modp::mul(a[i], b[j], ring.p), ring.p);
    }
  }
}

Coeffs inverse(const LocalRing& ring, std::span<const std::uint64_t> u) {
  const std::size_t m = ring.trunc;
  Coeffs v(m, 0);
  v[0] = modp::inv(u[0], ring.p);
  for (std::size_t k = 1; k < m; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc = modp::add(acc, modp::mul(u[i], v[k - i], ring.p), ring.p);
    }
    v[k] = modp::neg(modp::mul(v[0], acc, ring.p), ring.p);
  }
  return v;
}

bool is_unit(std::span<const std::uint64_t> a) { return !a.empty() && a[0] != 0; }

bool is_zero(std::span<const std::uint64_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace series

namespace {

// dest -= f * src, entrywise over `length` entries.
void sub_scaled(const LocalRing& ring, std::size_t length, std::vector<std::uint64_t>& dest,
                std::span<const std::uint64_t> f, const std::vector<std::uint64_t>& src) {
  const std::size_t m = ring.trunc;
  for (std::size_t idx = 0; idx < length; ++idx) {
    const std::uint64_t* s = src.data() + idx * m;
    std::uint64_t* d = dest.data() + idx * m;
    for (std::size_t b = 0; b < m; ++b) {
      if (s[b] == 0) continue;
      for (std::size_t a = 0; a + b < m; ++a) {
        if (f[a] == 0) continue;
        d[a + b] = modp::sub(d[a + b], modp::mul(f[a], s[b], ring.p), ring.p);
      }
    }
  }
}

void scale(const LocalRing& ring, std::size_t length, std::vector<std::uint64_t>& v,
           std::span<const std::uint64_t> f) {
  const std::size_t m = ring.trunc;
  std::vector<std::uint64_t> tmp(m);
  for (std::size_t idx = 0; idx < length; ++idx) {
    std::span<std::uint64_t> entry(v.data() + idx * m, m);
    if (series::is_zero(entry)) continue;
    series::mul(ring, f, entry, tmp);
    std::copy(tmp.begin(), tmp.end(), entry.begin());
  }
}

}  // namespace

UnitEliminator::UnitEliminator(LocalRing ring, std::size_t length,
                               std::vector<std::vector<std::uint64_t>> rows, Exec exec)
    : ring_(ring), length_(length), count_(rows.size()), rows_(std::move(rows)) {
  const std::size_t m = ring_.trunc;
  if (m == 0) throw PreconditionError("truncation order must be positive");
  for (const auto& row : rows_) {
    if (row.size() != length_ * m) throw ContractViolation("module vector has wrong length");
  }
  transform_.assign(count_, std::vector<std::uint64_t>(count_ * m, 0));
  for (std::size_t i = 0; i < count_; ++i) transform_[i][i * m] = 1;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < length_ && rank < count_; ++col) {
    std::size_t found = count_;
    for (std::size_t r = rank; r < count_; ++r) {
      if (rows_[r][col * m] != 0) {
        found = r;
        break;
      }
    }
    if (found == count_) continue;
    std::swap(rows_[found], rows_[rank]);
    std::swap(transform_[found], transform_[rank]);

    const auto inv =
        series::inverse(ring_, std::span<const std::uint64_t>(rows_[rank].data() + col * m, m));
    scale(ring_, length_, rows_[rank], inv);
    scale(ring_, count_, transform_[rank], inv);

    const auto& prow = rows_[rank];
    const auto& ptrans = transform_[rank];
    const auto n = static_cast<std::ptrdiff_t>(count_);
    auto eliminate = [&](std::ptrdiff_t i) {
      if (static_cast<std::size_t>(i) == rank) return;
      std::span<const std::uint64_t> entry(rows_[i].data() + col * m, m);
      if (series::is_zero(entry)) return;
      std::vector<std::uint64_t> f(entry.begin(), entry.end());
      sub_scaled(ring_, length_, rows_[i], f, prow);
      sub_scaled(ring_, count_, transform_[i], f, ptrans);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) eliminate(i);
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) eliminate(i);
    }
    pivots_.emplace_back(rank, col);
    ++rank;
  }
}

std::optional<std::vector<std::uint64_t>> UnitEliminator::express(
    std::span<const std::uint64_t> target) const {
  const std::size_t m = ring_.trunc;
  if (target.size() != length_ * m) throw ContractViolation("target has wrong length");
  std::vector<std::uint64_t> rest(target.begin(), target.end());
  std::vector<std::uint64_t> coeffs(count_ * m, 0);
  for (const auto& [row, col] : pivots_) {
    std::span<const std::uint64_t> entry(rest.data() + col * m, m);
    if (series::is_zero(entry)) continue;
    std::vector<std::uint64_t> f(entry.begin(), entry.end());
    // coeffs += f * transform, written as coeffs -= (-f) * transform.
    std::vector<std::uint64_t> neg_f(m);
    for (std::size_t i = 0; i < m; ++i) neg_f[i] = modp::neg(f[i], ring_.p);
    sub_scaled(ring_, length_, rest, f, rows_[row]);
    sub_scaled(ring_, count_, coeffs, neg_f, transform_[row]);
  }
  if (!series::is_zero(rest)) return std::nullopt;
  return coeffs;
}

}  // namespace frobwedge
