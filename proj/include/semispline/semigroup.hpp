#ifndef SEMISPLINE_SEMIGROUP_HPP
#define SEMISPLINE_SEMIGROUP_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "semispline/errors.hpp"
#include "semispline/numeric.hpp"

namespace semispline {

// Generators of a numerical semigroup: a fixed-order tuple of positive
// integers. Repeats and non-coprime tuples are allowed; operations that need
// more structure check for it themselves.
class GeneratorVector {
public:
  explicit GeneratorVector(std::vector<int64_t> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw InvalidArgument("generator vector must be nonempty");
    for (int64_t g : e_)
      if (g <= 0) throw InvalidArgument("generators must be positive integers");
  }

  size_t size() const { return e_.size(); }
  int64_t operator[](size_t i) const { return e_[i]; }
  const std::vector<int64_t>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  int64_t gcd() const {
    int64_t g = 0;
    for (int64_t v : e_) g = std::gcd(g, v);
    return g;
  }

private:
  std::vector<int64_t> e_;
};

// One factorization: exponents in generator order.
struct Factorization {
  std::vector<int64_t> coords;
  bool operator==(const Factorization&) const = default;
};

// Weighted length distribution of Z(n): multiplicity per distinct value of
// sum_i m_i x_i, keys ascending. total is the number of factorizations.
struct LengthMultiset {
  std::map<Rational, BigInt> counts;
  BigInt total = 0;
};

// Cap on materialized factorizations / DP cells before CapacityExceeded.
inline constexpr uint64_t default_capacity = 20'000'000;

// All of Z(n) in lexicographic coordinate order (first coordinate slowest).
std::vector<Factorization> enumerate_factorizations(const GeneratorVector& gens, int64_t n,
                                                    uint64_t capacity = default_capacity);

// |Z(n)| without materializing the set.
BigInt count_factorizations(const GeneratorVector& gens, int64_t n);

// Exact rational-weighted distribution via dynamic programming.
LengthMultiset weighted_lengths(const GeneratorVector& gens, const std::vector<Rational>& weights,
                                int64_t n, uint64_t capacity = default_capacity);

// Floating weights: the raw lengths of every factorization, in the same order
// as enumerate_factorizations. No aggregation, ties stay separate.
std::vector<double> weighted_length_samples(const GeneratorVector& gens,
                                            const std::vector<double>& weights, int64_t n,
                                            uint64_t capacity = default_capacity);

// Euclidean diameter bound for the fiber polytope {x >= 0 : g.x = n}:
// n * max_{i<j} sqrt(1/g_i^2 + 1/g_j^2); zero when k == 1.
double polytope_diameter_bound(const GeneratorVector& gens, int64_t n);

}  // namespace semispline

#endif
