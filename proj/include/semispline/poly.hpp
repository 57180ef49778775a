#ifndef SEMISPLINE_POLY_HPP
#define SEMISPLINE_POLY_HPP

#include <cstddef>
#include <vector>

namespace semispline {

// Dense univariate polynomials as coefficient vectors, lowest degree first.
// The empty vector is the zero polynomial.

template <class T>
T poly_eval(const std::vector<T>& c, const T& x) {
  T acc = T(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

template <class T>
void poly_trim(std::vector<T>& c) {
  while (!c.empty() && c.back() == T(0)) c.pop_back();
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
std::vector<T> poly_scale(const std::vector<T>& a, const T& s) {
  std::vector<T> r = a;
  for (auto& v : r) v *= s;
  return r;
}

// (c0 + c1*x) * p, used by the spline recursion.
template <class T>
std::vector<T> poly_mul_linear(const std::vector<T>& p, const T& c0, const T& c1) {
  if (p.empty()) return {};
  std::vector<T> r(p.size() + 1, T(0));
  for (size_t i = 0; i < p.size(); ++i) {
    r[i] += c0 * p[i];
    r[i + 1] += c1 * p[i];
  }
  return r;
}

template <class T>
std::vector<T> poly_derivative(const std::vector<T>& p) {
  if (p.size() <= 1) return {};
  std::vector<T> r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * T(static_cast<long>(i));
  return r;
}

// Antiderivative with zero constant term.
template <class T>
std::vector<T> poly_antiderivative(const std::vector<T>& p) {
  std::vector<T> r(p.size() + 1, T(0));
  for (size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / T(static_cast<long>(i + 1));
  return r;
}

}  // namespace semispline

#endif
