#ifndef SEMISPLINE_BSPLINE_HPP
#define SEMISPLINE_BSPLINE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "semispline/errors.hpp"
#include "semispline/numeric.hpp"
#include "semispline/piecewise.hpp"
#include "semispline/poly.hpp"

namespace semispline {

// Knots for the normalized B-spline M(x; a_1, ..., a_n): kept sorted
// ascending, together with the stable permutation mapping sorted slots back
// to the caller's order. Repeats are allowed everywhere except "all equal".
template <class T>
class KnotSequence {
public:
  size_t size() const { return sorted_.size(); }
  // polynomial degree of the spline pieces
  size_t degree() const { return sorted_.size() - 2; }
  const std::vector<T>& sorted() const { return sorted_; }
  const T& operator[](size_t i) const { return sorted_[i]; }
  const T& min() const { return sorted_.front(); }
  const T& max() const { return sorted_.back(); }
  // input_order()[r] is the position in the caller's vector that landed in
  // sorted slot r (stable for ties)
  const std::vector<size_t>& input_order() const { return order_; }
  bool has_repeats() const {
    for (size_t i = 0; i + 1 < sorted_.size(); ++i)
      if (sorted_[i] == sorted_[i + 1]) return true;
    return false;
  }

private:
  template <class U>
  friend KnotSequence<U> make_knots(std::vector<U> values);
  std::vector<T> sorted_;
  std::vector<size_t> order_;
};

template <class T>
KnotSequence<T> make_knots(std::vector<T> values) {
  if (values.size() < 2) throw TooFewKnots("a knot sequence needs at least two knots");
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  KnotSequence<T> ks;
  ks.sorted_.reserve(values.size());
  for (size_t idx : order) ks.sorted_.push_back(values[idx]);
  ks.order_ = std::move(order);
  if (!(ks.sorted_.front() < ks.sorted_.back()))
    throw AllKnotsEqual("all knots coincide; the spline would be a point mass");
  return ks;
}

// Divided-difference recursion. Zero-width denominators contribute zero, so
// repeated knots are handled uniformly; the value at the last knot is zero
// (cells are half-open on the right).
template <class T>
T eval_recursive(const KnotSequence<T>& ks, const T& x) {
  const std::vector<T>& a = ks.sorted();
  const size_t n = a.size();
  if (x < a.front() || !(x < a.back())) return T(0);
  std::vector<T> cur(n - 1, T(0));
  for (size_t i = 0; i + 1 < n; ++i)
    if (a[i] < a[i + 1] && a[i] <= x && x < a[i + 1]) cur[i] = T(1) / (a[i + 1] - a[i]);
  for (size_t k = 2; k < n; ++k) {
    for (size_t i = 0; i + k < n; ++i) {
      T den = a[i + k] - a[i];
      cur[i] = den == T(0) ? T(0)
                           : ((x - a[i]) * cur[i] + (a[i + k] - x) * cur[i + 1]) / den;
    }
  }
  return T(static_cast<long>(n - 1)) * cur[0];
}

// Closed form for distinct knots:
//   M(x) = (n-1) * sum_i (a_i - x)_+^{n-2} / prod_{j != i} (a_i - a_j)
// with (t)_+^0 meaning 1 for t > 0 and 0 otherwise.
template <class T>
T eval_explicit(const KnotSequence<T>& ks, const T& x) {
  if (ks.has_repeats())
    throw RepeatedKnots("the explicit formula requires pairwise distinct knots");
  const std::vector<T>& a = ks.sorted();
  const size_t n = a.size();
  if (x < a.front() || !(x < a.back())) return T(0);
  T acc = T(0);
  for (size_t i = 0; i < n; ++i) {
    T t = a[i] - x;
    if (!(t > T(0))) continue;
    T num = scalar_pow(t, static_cast<unsigned>(n - 2));
    T den = T(1);
    for (size_t j = 0; j < n; ++j)
      if (j != i) den *= a[i] - a[j];
    acc += num / den;
  }
  return T(static_cast<long>(n - 1)) * acc;
}

// Symbolic version of the same recursion: polynomials per gap between
// distinct breakpoints. cur[i][g] is the restriction of M_{i,k} to gap g.
template <class T>
PiecewisePolynomial<T> piecewise_expand(const KnotSequence<T>& ks) {
  const std::vector<T>& a = ks.sorted();
  const size_t n = a.size();
  std::vector<T> bps;
  for (const T& v : a)
    if (bps.empty() || bps.back() != v) bps.push_back(v);
  const size_t G = bps.size() - 1;

  std::vector<std::vector<std::vector<T>>> cur(n - 1,
      std::vector<std::vector<T>>(G));
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!(a[i] < a[i + 1])) continue;
    T h = T(1) / (a[i + 1] - a[i]);
    for (size_t g = 0; g < G; ++g)
      if (a[i] <= bps[g] && bps[g + 1] <= a[i + 1]) cur[i][g] = {h};
  }
  for (size_t k = 2; k < n; ++k) {
    std::vector<std::vector<std::vector<T>>> nxt(n - k,
        std::vector<std::vector<T>>(G));
    for (size_t i = 0; i + k < n; ++i) {
      T den = a[i + k] - a[i];
      if (den == T(0)) continue;
      T inv = T(1) / den;
      for (size_t g = 0; g < G; ++g) {
        // (x - a_i)/den * cur[i] + (a_{i+k} - x)/den * cur[i+1]
        std::vector<T> left = poly_mul_linear(cur[i][g], T(-a[i] * inv), inv);
        std::vector<T> right = poly_mul_linear(cur[i + 1][g], T(a[i + k] * inv), T(-inv));
        nxt[i][g] = poly_add(left, right);
      }
    }
    cur = std::move(nxt);
  }
  std::vector<std::vector<T>> pieces(G);
  for (size_t g = 0; g < G; ++g) {
    pieces[g] = poly_scale(cur[0][g], T(static_cast<long>(n - 1)));
    poly_trim(pieces[g]);
    if (pieces[g].empty()) pieces[g] = {T(0)};
  }
  return PiecewisePolynomial<T>(std::move(bps), std::move(pieces));
}

}  // namespace semispline

#endif
