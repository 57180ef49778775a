#include "semispline/partition.hpp"

#include <algorithm>

#include "semispline/errors.hpp"
#include "semispline/lattice.hpp"

namespace semispline {

namespace {

using int128 = __int128;

struct Frac {
  int64_t num = 0;
  int64_t den = 1;  // > 0
};

bool frac_less(const Frac& a, const Frac& b) {
  return static_cast<int128>(a.num) * b.den < static_cast<int128>(b.num) * a.den;
}

struct SearchState {
  std::vector<int64_t> w;
  std::vector<int64_t> g;
  // suffix_min[i] / suffix_max[i]: extreme weight ratios over columns i..k-1
  std::vector<Frac> suffix_min;
  std::vector<Frac> suffix_max;
  BigInt hits = 0;

  // remaining (m, n) must satisfy n * rho_min <= m <= n * rho_max over the
  // open columns, else no completion exists
  bool feasible(size_t i, int64_t m, int64_t n) const {
    if (static_cast<int128>(m) * suffix_min[i].den <
        static_cast<int128>(n) * suffix_min[i].num)
      return false;
    if (static_cast<int128>(m) * suffix_max[i].den >
        static_cast<int128>(n) * suffix_max[i].num)
      return false;
    return true;
  }

  void close_last_two(size_t i, int64_t m, int64_t n) {
    const int64_t wi = w[i], wj = w[i + 1];
    const int64_t gi = g[i], gj = g[i + 1];
    const int128 det = static_cast<int128>(wi) * gj - static_cast<int128>(wj) * gi;
    if (det != 0) {
      // unique real solution; count it if integral and nonnegative
      const int128 xi_num = static_cast<int128>(m) * gj - static_cast<int128>(wj) * n;
      const int128 xj_num = static_cast<int128>(wi) * n - static_cast<int128>(m) * gi;
      if (xi_num % det == 0 && xj_num % det == 0) {
        const int128 xi = xi_num / det, xj = xj_num / det;
        if (xi >= 0 && xj >= 0) ++hits;
      }
      return;
    }
    // parallel tail columns: scan the short direction
    for (int64_t x = 0; x * gi <= n; ++x) {
      const int64_t rn = n - x * gi;
      const int64_t rm = m - x * wi;
      if (rn % gj == 0 && static_cast<int128>(rn / gj) * wj == rm) ++hits;
    }
  }

  void search(size_t i, int64_t m, int64_t n) {
    if (n == 0) {
      // all remaining coordinates forced to zero
      if (m == 0) ++hits;
      return;
    }
    if (!feasible(i, m, n)) return;
    if (i + 2 == w.size()) {
      close_last_two(i, m, n);
      return;
    }
    if (i + 1 == w.size()) {
      if (n % g[i] == 0 && static_cast<int128>(n / g[i]) * w[i] == m) ++hits;
      return;
    }
    for (int64_t x = 0; x * g[i] <= n; ++x) search(i + 1, m - x * w[i], n - x * g[i]);
  }
};

std::vector<int64_t> integer_weights(const SystemMatrix<Rational>& A) {
  std::vector<int64_t> w(A.cols());
  for (size_t i = 0; i < A.cols(); ++i) {
    const Rational& q = A.weights()[i];
    if (denominator(q) != 1) throw InvalidArgument("vector partition function needs integer weights");
    BigInt num = numerator(q);
    if (num > std::numeric_limits<int64_t>::max() || num < std::numeric_limits<int64_t>::min())
      throw InvalidArgument("weight exceeds supported magnitude");
    w[i] = num.convert_to<int64_t>();
  }
  return w;
}

}  // namespace

BigInt vpf(const SystemMatrix<Rational>& A, const TargetPair& b) {
  if (b.n < 0) throw InvalidArgument("target value must be nonnegative");
  SearchState st;
  st.w = integer_weights(A);
  st.g = A.gens().entries();
  const size_t k = st.w.size();
  for (int64_t wi : st.w) {
    // partial sums x_i * w_i must stay inside int64
    BigInt reach = BigInt(wi < 0 ? -wi : wi) * std::max<int64_t>(b.n, 1) + (b.m < 0 ? -b.m : b.m);
    if (reach >= (BigInt(1) << 62)) throw InvalidArgument("weights exceed supported magnitude");
  }

  // cheap certificate of emptiness: no integer solution at all (ignoring
  // signs) means no nonnegative one either
  if (!detail::solvable_over_z(st.w, A.gens(), BigInt(b.m), BigInt(b.n))) return 0;

  st.suffix_min.resize(k);
  st.suffix_max.resize(k);
  for (size_t i = k; i-- > 0;) {
    Frac self{st.w[i], st.g[i]};
    st.suffix_min[i] = self;
    st.suffix_max[i] = self;
    if (i + 1 < k) {
      if (frac_less(st.suffix_min[i + 1], st.suffix_min[i])) st.suffix_min[i] = st.suffix_min[i + 1];
      if (frac_less(st.suffix_max[i], st.suffix_max[i + 1])) st.suffix_max[i] = st.suffix_max[i + 1];
    }
  }
  st.search(0, b.m, b.n);
  return st.hits;
}

Rational vpf_approx(const SystemMatrix<Rational>& A, const TargetPair& b) {
  if (b.n < 1) throw InvalidArgument("approximation requires a positive target");
  return truncated_power(A, Rational(b.m), Rational(b.n));
}

Rational vpf_approx_normalized(const SystemMatrix<Rational>& A, const TargetPair& b) {
  if (b.n < 1) throw InvalidArgument("approximation requires a positive target");
  Rational M = eval_recursive(A.knot_sequence(), Rational(b.m) / Rational(b.n));
  BigInt count = count_factorizations(A.gens(), b.n);
  return Rational(count, BigInt(b.n)) * M;
}

BigInt length_count(const GeneratorVector& gens, const std::vector<int64_t>& weights, int64_t n,
                    int64_t m) {
  std::vector<Rational> w(weights.begin(), weights.end());
  return vpf(SystemMatrix<Rational>(std::move(w), gens), TargetPair{m, n});
}

}  // namespace semispline
