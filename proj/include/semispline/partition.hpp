#ifndef SEMISPLINE_PARTITION_HPP
#define SEMISPLINE_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "semispline/numeric.hpp"
#include "semispline/semigroup.hpp"
#include "semispline/tpower.hpp"

namespace semispline {

// Right-hand side b = (m, n) for the 2 x k system; n is the semigroup target
// and must be nonnegative, m is the prescribed weighted length.
struct TargetPair {
  int64_t m = 0;
  int64_t n = 0;
};

// Exact vector partition function: #{x in Z^k, x >= 0, Ax = b}. Weights must
// be integers. Exhaustive search over the first k-2 coordinates with interval
// pruning; the last two coordinates close via the 2x2 system when possible.
BigInt vpf(const SystemMatrix<Rational>& A, const TargetPair& b);

// Spline approximation of vpf at the same b (n >= 1): the truncated power.
Rational vpf_approx(const SystemMatrix<Rational>& A, const TargetPair& b);

// The semigroup-calibrated variant: |Z(n)| / n * M(m/n). Replaces the
// n^{k-1}/((k-1)! n_1...n_k) density prefactor with the true count.
Rational vpf_approx_normalized(const SystemMatrix<Rational>& A, const TargetPair& b);

// Number of factorizations of n with integer-weighted length exactly m.
BigInt length_count(const GeneratorVector& gens, const std::vector<int64_t>& weights, int64_t n,
                    int64_t m);

}  // namespace semispline

#endif
