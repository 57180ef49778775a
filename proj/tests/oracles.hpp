#ifndef SEMISPLINE_TEST_ORACLES_HPP
#define SEMISPLINE_TEST_ORACLES_HPP

// Test-side oracles, deliberately written against the definitions rather than
// the library code paths they cross-check: straight recursive enumeration,
// stars and bars, the raw de Boor quantity M_{i,k}, and seeded random
// instance generators.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "semispline/numeric.hpp"

namespace oracle {

using semispline::BigInt;
using semispline::Rational;

inline void brute_step(const std::vector<int64_t>& gens, size_t i, int64_t rest,
                       std::vector<int64_t>& cur, std::vector<std::vector<int64_t>>& out) {
  if (i + 1 == gens.size()) {
    if (rest % gens[i] == 0) {
      cur.push_back(rest / gens[i]);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int64_t x = 0; x * gens[i] <= rest; ++x) {
    cur.push_back(x);
    brute_step(gens, i + 1, rest - x * gens[i], cur, out);
    cur.pop_back();
  }
}

// Every nonnegative solution of gens . x = n, in lexicographic order.
inline std::vector<std::vector<int64_t>> brute_factorizations(const std::vector<int64_t>& gens,
                                                              int64_t n) {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> cur;
  brute_step(gens, 0, n, cur, out);
  return out;
}

inline BigInt binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// Count solutions satisfying both rows by filtering the plain enumeration.
inline BigInt brute_vpf(const std::vector<int64_t>& weights, const std::vector<int64_t>& gens,
                        int64_t m, int64_t n) {
  BigInt count = 0;
  for (const auto& x : brute_factorizations(gens, n)) {
    int64_t dot = 0;
    for (size_t i = 0; i < x.size(); ++i) dot += weights[i] * x[i];
    if (dot == m) ++count;
  }
  return count;
}

// The raw de Boor quantity M_{i,k} on the sorted knot list a (0-based i here),
// transcribed from the recursion: the base case is (a_{i+1}-a_i)^{-1} on the
// half-open cell, zero denominators kill their term.
inline Rational raw_m(const std::vector<Rational>& a, size_t i, unsigned k, const Rational& x) {
  if (k == 1) {
    if (a[i] == a[i + 1]) return 0;
    return (a[i] <= x && x < a[i + 1]) ? Rational(1) / (a[i + 1] - a[i]) : Rational(0);
  }
  Rational out = 0;
  if (a[i + k] != a[i]) {
    Rational d = a[i + k] - a[i];
    out += (x - a[i]) / d * raw_m(a, i, k - 1, x);
    out += (a[i + k] - x) / d * raw_m(a, i + 1, k - 1, x);
  }
  return out;
}

inline Rational random_rational(std::mt19937& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

// Pairwise distinct rational knots, unsorted.
inline std::vector<Rational> random_distinct_knots(std::mt19937& rng, size_t count) {
  std::vector<Rational> v;
  while (v.size() < count) {
    Rational q = random_rational(rng, 12, 9);
    bool seen = false;
    for (const Rational& p : v)
      if (p == q) seen = true;
    if (!seen) v.push_back(q);
  }
  return v;
}

// Random 2xk integer system with positive second row, independent rows, and
// minor gcd 1, by rejection.
inline void random_unimodular(std::mt19937& rng, size_t k, std::vector<int64_t>& weights,
                              std::vector<int64_t>& gens) {
  std::uniform_int_distribution<int64_t> w(-6, 6);
  std::uniform_int_distribution<int64_t> g(1, 12);
  for (;;) {
    weights.clear();
    gens.clear();
    for (size_t i = 0; i < k; ++i) {
      weights.push_back(w(rng));
      gens.push_back(g(rng));
    }
    int64_t minor_gcd = 0;
    bool independent = false;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j) {
        int64_t d = weights[i] * gens[j] - weights[j] * gens[i];
        if (d != 0) independent = true;
        minor_gcd = std::gcd(minor_gcd, d < 0 ? -d : d);
      }
    if (independent && minor_gcd == 1) return;
  }
}

}  // namespace oracle

#endif
