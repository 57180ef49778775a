#ifndef SEMISPLINE_LATTICE_HPP
#define SEMISPLINE_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "semispline/numeric.hpp"
#include "semispline/semigroup.hpp"

namespace semispline {

// Arithmetic on the 2 x k integer matrix with rows (weights, generators).
// Everything here is about whether that matrix maps Z^k onto Z^2.

// All 2x2 minors det(columns i<j) in lexicographic (i,j) order, plus their gcd
// (gcd of absolute values; 0 when every minor vanishes).
struct MinorSet {
  std::vector<BigInt> values;
  BigInt gcd_value;
};

MinorSet minors(const std::vector<int64_t>& weights, const GeneratorVector& gens);

// gcd of all 2x2 minors equals 1. Requires k >= 2.
bool is_unimodular(const std::vector<int64_t>& weights, const GeneratorVector& gens);

// gcd of |g_{i+1} - g_i| over consecutive generators; 0 when all differences
// vanish. Requires k >= 2. Equals 1 iff (1,...,1 ; g) is unimodular.
int64_t delta_gcd(const GeneratorVector& gens);

// gcd of the entries equals 1.
bool is_primitive_vector(const GeneratorVector& gens);

// For a unimodular system, an integer preimage z with weights.z = m and
// gens.z = n, assembled from Bezout coefficients across the minors.
// nullopt when the system is not unimodular.
std::optional<std::vector<BigInt>> unimodular_witness(const std::vector<int64_t>& weights,
                                                      const GeneratorVector& gens,
                                                      const BigInt& m, const BigInt& n);

namespace detail {
// Does weights.z = m, gens.z = n admit any integer solution (sign-free)?
// Kernel parametrization of the generator equation plus one divisibility test.
bool solvable_over_z(const std::vector<int64_t>& weights, const GeneratorVector& gens,
                     const BigInt& m, const BigInt& n);
}  // namespace detail

}  // namespace semispline

#endif
