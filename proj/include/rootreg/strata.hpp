#ifndef ROOTREG_STRATA_HPP
#define ROOTREG_STRATA_HPP

#include <utility>
#include <vector>

#include "rootreg/exact.hpp"
#include "rootreg/poly.hpp"

namespace rootreg {

/// size_m for m = 2..n: max over m-subsets of the product of |xi_i - xi_j|
/// over ordered pairs in the subset.
struct SizeProfile {
  int n = 0;
  std::vector<double> values;  // values[m-2] = size_m

  double size(int m) const { return values.at(m - 2); }
};

SizeProfile size_profile(const CVec& roots);

/// Largest m with size_m > tol, or 1: the numeric count proxy for the number
/// of distinct roots.
int classify_stratum(const MonicPoly& poly, double tol);

/// Coprime factorization P = Pb * Pc by Newton iteration on the coefficient
/// map, seeded by the elementary symmetric functions of the two root groups.
struct SplitResult {
  MonicPoly pb, pc;
  Complex resultant;
  double residual;
};

SplitResult split(const MonicPoly& poly, const std::vector<Complex>& group_b,
                  const std::vector<Complex>& group_c, double tol = 1e-12);

/// Root branches given exactly as polynomials in t over Q(i).
struct ExactRootCurve {
  std::vector<ExactPoly> branches;

  int degree() const { return static_cast<int>(branches.size()); }
};

/// alpha(m) = min over m-subsets of ord prod_{i != j in I} (lambda_i - lambda_j),
/// m = 2..n.  kOrderInf marks identically equal branches in the minimizing set.
struct OrderVector {
  int n = 0;
  std::vector<long> alpha;  // alpha[m-2]

  long value(int m) const { return alpha.at(m - 2); }
};

/// Branches are shifted so their sum vanishes before orders are taken.
OrderVector alpha_orders(const ExactRootCurve& curve);

/// 2 alpha(m) + alpha(2) <= alpha(m-1) + alpha(m+1) for 3 <= m <= n-1, exact.
bool check_convexity(const OrderVector& orders);

/// Minimizers of beta(m1) + gamma(m - m1) over the admissible m1 range, where
/// beta/gamma are the alpha-functions of the two groups with
/// beta(0) = beta(1) = 0.  Requires every cross-difference to have t-adic
/// order 0; asserts the minimizing set is a contiguous integer interval.
std::pair<int, int> splitting_interval(const ExactRootCurve& group_b,
                                       const ExactRootCurve& group_c, int m);

}  // namespace rootreg

#endif
