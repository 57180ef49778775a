#include "semispline/lattice.hpp"

#include <numeric>

#include "semispline/errors.hpp"

namespace semispline {

namespace {

void check_shape(const std::vector<int64_t>& weights, const GeneratorVector& gens) {
  if (weights.size() != gens.size())
    throw InvalidArgument("weight vector length must match generator count");
  if (gens.size() < 2) throw InvalidArgument("lattice tests need at least two columns");
}

// g = gcd(a, b) together with x, y solving a x + b y = g.
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  if (b == 0) {
    if (a < 0) { g = -a; x = -1; } else { g = a; x = a == 0 ? 0 : 1; }
    y = 0;
    return;
  }
  BigInt g1, x1, y1;
  ext_gcd(b, a % b, g1, x1, y1);
  g = g1;
  x = y1;
  y = x1 - (a / b) * y1;
}

}  // namespace

MinorSet minors(const std::vector<int64_t>& weights, const GeneratorVector& gens) {
  check_shape(weights, gens);
  MinorSet out;
  out.gcd_value = 0;
  const size_t k = gens.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      BigInt d = BigInt(weights[i]) * gens[j] - BigInt(weights[j]) * gens[i];
      out.gcd_value = big_gcd(out.gcd_value, d);
      out.values.push_back(std::move(d));
    }
  return out;
}

bool is_unimodular(const std::vector<int64_t>& weights, const GeneratorVector& gens) {
  return minors(weights, gens).gcd_value == 1;
}

int64_t delta_gcd(const GeneratorVector& gens) {
  if (gens.size() < 2) throw InvalidArgument("delta gcd needs at least two generators");
  int64_t g = 0;
  for (size_t i = 0; i + 1 < gens.size(); ++i) g = std::gcd(g, gens[i + 1] - gens[i]);
  return g;
}

bool is_primitive_vector(const GeneratorVector& gens) { return gens.gcd() == 1; }

std::optional<std::vector<BigInt>> unimodular_witness(const std::vector<int64_t>& weights,
                                                      const GeneratorVector& gens,
                                                      const BigInt& m, const BigInt& n) {
  check_shape(weights, gens);
  const size_t k = gens.size();
  // Bezout combination across the minors: if sum c_I det(A_I) = 1 then
  // z = sum c_I w_I works, where w_I puts adj(A_I) b on the columns of I.
  BigInt g = 0, dummyx, dummyy;
  std::vector<BigInt> coeff;  // per minor, aligned with minors() order
  std::vector<std::pair<size_t, size_t>> idx;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      BigInt d = BigInt(weights[i]) * gens[j] - BigInt(weights[j]) * gens[i];
      if (g == 0 && d == 0) {
        coeff.push_back(0);
      } else {
        BigInt g2, c_old, c_new;
        ext_gcd(g, d, g2, c_old, c_new);
        for (BigInt& c : coeff) c *= c_old;
        coeff.push_back(c_new);
        g = g2;
      }
      idx.emplace_back(i, j);
    }
  if (g != 1) return std::nullopt;
  std::vector<BigInt> z(k, 0);
  for (size_t t = 0; t < idx.size(); ++t) {
    if (coeff[t] == 0) continue;
    auto [i, j] = idx[t];
    // adj([[w_i, w_j], [g_i, g_j]]) applied to (m, n)
    BigInt zi = BigInt(gens[j]) * m - BigInt(weights[j]) * n;
    BigInt zj = BigInt(weights[i]) * n - BigInt(gens[i]) * m;
    z[i] += coeff[t] * zi;
    z[j] += coeff[t] * zj;
  }
  return z;
}

namespace detail {

bool solvable_over_z(const std::vector<int64_t>& weights, const GeneratorVector& gens,
                     const BigInt& m, const BigInt& n) {
  check_shape(weights, gens);
  const size_t k = gens.size();
  // Generator equation first: gens.z = n solvable iff gcd | n. Track a
  // particular solution through the running Bezout combination.
  BigInt d = gens[0];
  std::vector<BigInt> u(k, 0);  // gens.u = d over the processed prefix
  u[0] = 1;
  // kernel basis of gens.z = 0, built prefix by prefix
  std::vector<std::vector<BigInt>> kernel;
  for (size_t i = 1; i < k; ++i) {
    BigInt d2, a, b;
    ext_gcd(d, BigInt(gens[i]), d2, a, b);
    std::vector<BigInt> kv(k, 0);
    // gens . (u * (g_i/d2) - e_i * (d/d2)) = 0
    for (size_t t = 0; t < k; ++t) kv[t] = u[t] * (BigInt(gens[i]) / d2);
    kv[i] -= d / d2;
    kernel.push_back(std::move(kv));
    for (size_t t = 0; t < k; ++t) u[t] *= a;
    u[i] = b;
    d = d2;
  }
  if (n % d != 0) return false;
  BigInt q = n / d;
  // particular solution z0 = u * (n/d); remaining freedom is the kernel
  BigInt rhs = m;
  for (size_t t = 0; t < k; ++t) rhs -= BigInt(weights[t]) * u[t] * q;
  // weights restricted to the kernel: solvable iff gcd of the kernel dot
  // products divides the residual (gcd 0 forces rhs == 0)
  BigInt kg = 0;
  for (const auto& kv : kernel) {
    BigInt dot = 0;
    for (size_t t = 0; t < k; ++t) dot += BigInt(weights[t]) * kv[t];
    kg = big_gcd(kg, dot);
  }
  if (kg == 0) return rhs == 0;
  return rhs % kg == 0;
}

}  // namespace detail

}  // namespace semispline
