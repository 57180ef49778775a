#ifndef SEMISPLINE_BOUNDS_HPP
#define SEMISPLINE_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semispline/functions.hpp"
#include "semispline/interval.hpp"
#include "semispline/numeric.hpp"
#include "semispline/partition.hpp"
#include "semispline/semigroup.hpp"
#include "semispline/tpower.hpp"

namespace semispline {

// Explicit error constants. Values are assembled in 50-digit floats and
// rounded outward, so using them as bounds is always safe.
//   e1(k) = 8^{k-2} (k-1)^{(3k^2 - k - 7)/2}          k >= 2
//   e2(k) = 8^{k-3} (k-2)^{(3k^2 - 7k - 3)/2}         k >= 3
double e1(unsigned k);
double e2(unsigned k);

// e3 = ((beta - alpha)(C1 e2(k) + C3) + 2 C2) n^{k-2} + C1 e2(k) n^{k-3}
double e3(int64_t n, unsigned k, double alpha, double beta, double c1, double c2, double c3);

// Outcome of one inequality check. lhs and bound are reported as doubles;
// exact marks that the comparison itself was carried out in rationals.
struct BoundReport {
  std::string theorem;
  std::string instance;
  double lhs = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool pass = false;
  bool exact = false;
  std::map<std::string, double> constants;
  std::string note;
};

// | #(lengths/n in [alpha,beta]) - n^{k-1}/((k-1)! n_1..n_k) int_I M |
//   <= n^{k-2} e1(k)
// Requires coprime generators and independent rows.
BoundReport check_theorem_a(const GeneratorVector& gens, const std::vector<Rational>& weights,
                            int64_t n, const Interval& interval);

// | vpf(A, b) - T_A(b) | <= n^{k-3} e2(k) for unimodular A (0^0 = 1 at n=0).
BoundReport check_theorem_b(const SystemMatrix<Rational>& A, const TargetPair& b);

// | sum_{lengths} f(l/n) - n^{k-1}/((k-1)! n_1..n_k) int_I f M | <= e3
// for unimodular systems and intervals of width >= 1/n.
BoundReport check_theorem_c(const GeneratorVector& gens, const std::vector<Rational>& weights,
                            int64_t n, const Interval& interval, const FunctionSpec& f);

}  // namespace semispline

#endif
