#include "semispline/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace semispline {

namespace {

using int128 = __int128;

int64_t floor_div_128(int128 a, int128 b) {
  // b > 0
  int128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return static_cast<int64_t>(q);
}

int64_t ceil_div_128(int128 a, int128 b) { return -floor_div_128(-a, b); }

void check_target(int64_t n) {
  if (n < 0) throw InvalidArgument("target value must be nonnegative");
}

template <class Fn>
void walk_factorizations(const GeneratorVector& gens, int64_t n, Fn&& emit) {
  const size_t k = gens.size();
  std::vector<int64_t> coords(k, 0);
  // explicit stack would buy nothing here; depth == k
  auto rec = [&](auto&& self, size_t i, int64_t rem) -> void {
    if (i + 1 == k) {
      if (rem % gens[i] == 0) {
        coords[i] = rem / gens[i];
        emit(coords);
      }
      return;
    }
    const int64_t g = gens[i];
    for (int64_t x = 0; x * g <= rem; ++x) {
      coords[i] = x;
      self(self, i + 1, rem - x * g);
    }
  };
  rec(rec, 0, n);
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(const GeneratorVector& gens, int64_t n,
                                                    uint64_t capacity) {
  check_target(n);
  std::vector<Factorization> out;
  walk_factorizations(gens, n, [&](const std::vector<int64_t>& coords) {
    if (out.size() >= capacity)
      throw CapacityExceeded("factorization set exceeds capacity of " + std::to_string(capacity));
    out.push_back(Factorization{coords});
  });
  return out;
}

BigInt count_factorizations(const GeneratorVector& gens, int64_t n) {
  check_target(n);
  // memoized form of c(i, r) = c(i+1, r) + c(i, r - g_i), one row reused
  std::vector<BigInt> ways(static_cast<size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int64_t g : gens)
    for (int64_t r = g; r <= n; ++r) ways[static_cast<size_t>(r)] += ways[static_cast<size_t>(r - g)];
  return ways[static_cast<size_t>(n)];
}

LengthMultiset weighted_lengths(const GeneratorVector& gens, const std::vector<Rational>& weights,
                                int64_t n, uint64_t capacity) {
  check_target(n);
  const size_t k = gens.size();
  if (weights.size() != k)
    throw InvalidArgument("weight vector length must match generator count");

  // Clear denominators: scale = lcm of weight denominators, w_i integer.
  BigInt scale = 1;
  for (const Rational& w : weights) scale = big_lcm(scale, denominator(w));
  std::vector<int64_t> w(k);
  for (size_t i = 0; i < k; ++i) {
    BigInt wi = numerator(weights[i]) * (scale / denominator(weights[i]));
    // row offsets below are n * w_i and must stay inside int64
    BigInt reach = (wi < 0 ? -wi : wi) * std::max<int64_t>(n, 1);
    if (reach >= (BigInt(1) << 62))
      throw InvalidArgument("weights exceed supported magnitude after clearing denominators");
    w[i] = wi.convert_to<int64_t>();
  }

  // Every reachable state (r, l) satisfies l/r in [rho_min, rho_max] where
  // rho_i = w_i/g_i, so row r only needs indices ceil(r*rho_min) ..
  // floor(r*rho_max). That keeps the table near-linear for narrow weight
  // spreads instead of O(n * max|w| * n).
  size_t imin = 0, imax = 0;
  for (size_t i = 1; i < k; ++i) {
    if (static_cast<int128>(w[i]) * gens[imin] < static_cast<int128>(w[imin]) * gens[i]) imin = i;
    if (static_cast<int128>(w[i]) * gens[imax] > static_cast<int128>(w[imax]) * gens[i]) imax = i;
  }
  auto row_lo = [&](int64_t r) {
    return ceil_div_128(static_cast<int128>(r) * w[imin], gens[imin]);
  };
  auto row_hi = [&](int64_t r) {
    return floor_div_128(static_cast<int128>(r) * w[imax], gens[imax]);
  };

  uint64_t cells = 0;
  for (int64_t r = 0; r <= n; ++r) {
    int64_t lo = row_lo(r), hi = row_hi(r);
    if (hi >= lo) cells += static_cast<uint64_t>(hi - lo) + 1;
    if (cells > capacity)
      throw CapacityExceeded("length table exceeds capacity of " + std::to_string(capacity));
  }

  // Counts fit in int64 iff the per-target factorization count does (each
  // length class is a subset of Z(r)). Probe with a cheap 1D pass first.
  bool small_counts = true;
  {
    std::vector<BigInt> ways(static_cast<size_t>(n) + 1, 0);
    ways[0] = 1;
    const BigInt cap = BigInt(1) << 62;
    for (int64_t g : gens)
      for (int64_t r = g; r <= n; ++r) {
        ways[static_cast<size_t>(r)] += ways[static_cast<size_t>(r - g)];
        if (ways[static_cast<size_t>(r)] >= cap) small_counts = false;
      }
  }

  auto run = [&](auto zero) -> LengthMultiset {
    std::vector<std::vector<decltype(zero)>> rows(static_cast<size_t>(n) + 1);
    for (int64_t r = 0; r <= n; ++r) {
      int64_t lo = row_lo(r), hi = row_hi(r);
      if (hi >= lo) rows[static_cast<size_t>(r)].assign(static_cast<size_t>(hi - lo) + 1, zero);
    }
    if (!rows[0].empty()) rows[0][0] = zero + 1;  // l = 0 at r = 0
    for (size_t i = 0; i < k; ++i) {
      const int64_t g = gens[i];
      for (int64_t r = g; r <= n; ++r) {
        auto& dst = rows[static_cast<size_t>(r)];
        const auto& src = rows[static_cast<size_t>(r - g)];
        if (src.empty() || dst.empty()) continue;
        const int64_t src_lo = row_lo(r - g);
        const int64_t shift = src_lo + w[i] - row_lo(r);
        for (size_t j = 0; j < src.size(); ++j) {
          if (src[j] == zero) continue;
          const int64_t d = static_cast<int64_t>(j) + shift;
          assert(d >= 0 && d < static_cast<int64_t>(dst.size()));
          dst[static_cast<size_t>(d)] += src[j];
        }
      }
    }
    LengthMultiset out;
    const auto& last = rows[static_cast<size_t>(n)];
    const int64_t lo = row_lo(n);
    for (size_t j = 0; j < last.size(); ++j) {
      if (last[j] == zero) continue;
      BigInt c(last[j]);
      out.counts.emplace(Rational(BigInt(lo + static_cast<int64_t>(j)), scale), c);
      out.total += c;
    }
    return out;
  };

  return small_counts ? run(int64_t{0}) : run(BigInt{0});
}

std::vector<double> weighted_length_samples(const GeneratorVector& gens,
                                            const std::vector<double>& weights, int64_t n,
                                            uint64_t capacity) {
  check_target(n);
  if (weights.size() != gens.size())
    throw InvalidArgument("weight vector length must match generator count");
  std::vector<double> out;
  walk_factorizations(gens, n, [&](const std::vector<int64_t>& coords) {
    if (out.size() >= capacity)
      throw CapacityExceeded("factorization set exceeds capacity of " + std::to_string(capacity));
    double l = 0.0;
    for (size_t i = 0; i < coords.size(); ++i) l += weights[i] * static_cast<double>(coords[i]);
    out.push_back(l);
  });
  return out;
}

double polytope_diameter_bound(const GeneratorVector& gens, int64_t n) {
  check_target(n);
  if (gens.size() < 2) return 0.0;
  // maximized by the two smallest generators
  std::vector<int64_t> s(gens.begin(), gens.end());
  std::sort(s.begin(), s.end());
  const double a = static_cast<double>(s[0]);
  const double b = static_cast<double>(s[1]);
  return static_cast<double>(n) * std::sqrt(1.0 / (a * a) + 1.0 / (b * b));
}

}  // namespace semispline
