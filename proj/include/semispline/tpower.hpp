#ifndef SEMISPLINE_TPOWER_HPP
#define SEMISPLINE_TPOWER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "semispline/bspline.hpp"
#include "semispline/errors.hpp"
#include "semispline/numeric.hpp"
#include "semispline/semigroup.hpp"

namespace semispline {

// The 2 x k system: first row rational (or floating) weights m_i, second row
// positive integer generators n_i, with the rows linearly independent.
template <class T>
class SystemMatrix {
public:
  SystemMatrix(std::vector<T> weights, GeneratorVector gens)
      : weights_(std::move(weights)), gens_(std::move(gens)) {
    if (weights_.size() != gens_.size())
      throw InvalidArgument("weight vector length must match generator count");
    // rows are dependent iff all ratios m_i/n_i coincide (generators > 0)
    bool dependent = true;
    for (size_t i = 1; i < weights_.size(); ++i)
      if (weights_[i] * T(gens_[0]) != weights_[0] * T(gens_[i])) { dependent = false; break; }
    if (dependent)
      throw DegenerateRows("matrix rows are linearly dependent");
  }

  size_t cols() const { return gens_.size(); }
  const std::vector<T>& weights() const { return weights_; }
  const GeneratorVector& gens() const { return gens_; }

  // ratios m_i/n_i in column order; these are the spline knots
  std::vector<T> knots() const {
    std::vector<T> v(cols());
    for (size_t i = 0; i < cols(); ++i) v[i] = weights_[i] / T(gens_[i]);
    return v;
  }
  KnotSequence<T> knot_sequence() const { return make_knots(knots()); }

private:
  std::vector<T> weights_;
  GeneratorVector gens_;
};

// Truncated power T_A(m, n) for b = (m, n):
//   n > 0:  n^{k-2} / ((k-1)! n_1 ... n_k) * M(m/n; m_1/n_1, ..., m_k/n_k)
//   n <= 0: 0  (the cone {Ax : x >= 0} lies in the closed upper half plane,
//           and its boundary ray through n = 0 carries no k-2 volume)
template <class T>
T truncated_power(const SystemMatrix<T>& A, const T& m, const T& n) {
  if (!(n > T(0))) return T(0);
  const size_t k = A.cols();
  T x = m / n;
  T M = eval_recursive(A.knot_sequence(), x);
  if (M == T(0)) return T(0);
  T scale = scalar_pow(n, static_cast<unsigned>(k - 2));
  T den = from_rational<T>(Rational(factorial(static_cast<unsigned>(k - 1))));
  for (int64_t g : A.gens()) den *= T(g);
  return scale * M / den;
}

// Independent geometric evaluation for k = 3: the fiber {x >= 0 : Ax = b} is
// a segment on the line z0 + t d with d = m x g (cross product), and the
// normalizing sqrt(det(A A^T)) equals |d| by the Lagrange identity, so the
// relative volume is exactly the parameter length of the segment.
inline Rational segment_oracle_k3(const SystemMatrix<Rational>& A, const Rational& m,
                                  const Rational& n) {
  if (A.cols() != 3) throw InvalidArgument("segment oracle is specific to k = 3");
  const std::vector<Rational>& w = A.weights();
  const GeneratorVector& g = A.gens();
  Rational d[3] = {w[1] * g[2] - w[2] * g[1],
                   w[2] * g[0] - w[0] * g[2],
                   w[0] * g[1] - w[1] * g[0]};
  // particular solution via Cramer on a nonsingular 2x2 minor, third coord 0
  int pi = -1, pj = -1;
  Rational det;
  for (int i = 0; i < 3 && pi < 0; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Rational dd = w[i] * g[j] - w[j] * g[i];
      if (dd != 0) { pi = i; pj = j; det = dd; break; }
    }
  // rows independent, so some minor is nonzero
  Rational x0[3] = {0, 0, 0};
  x0[pi] = (m * g[pj] - w[pj] * n) / det;
  x0[pj] = (w[pi] * n - m * g[pi]) / det;
  // constrain x0 + t d >= 0 coordinatewise
  bool has_lo = false, has_hi = false;
  Rational lo = 0, hi = 0;
  for (int c = 0; c < 3; ++c) {
    if (d[c] == 0) {
      if (x0[c] < 0) return Rational(0);
      continue;
    }
    Rational bound = -x0[c] / d[c];
    if (d[c] > 0) {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    } else {
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    }
  }
  // generators positive and g.d = 0 force bounds on both sides
  if (!has_lo || !has_hi) return Rational(0);
  Rational len = hi - lo;
  return len > 0 ? len : Rational(0);
}

}  // namespace semispline

#endif
