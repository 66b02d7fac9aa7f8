#include "rootreg/strata.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rootreg {

namespace {

// Visit all m-element subsets of {0..n-1}.
template <typename F>
void for_each_subset(int n, int m, F&& visit) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SizeProfile size_profile(const CVec& roots) {
  const int n = static_cast<int>(roots.size());
  if (n < 2) throw std::invalid_argument("size_profile: need degree >= 2");
  SizeProfile out;
  out.n = n;
  for (int m = 2; m <= n; ++m) {
    double best = 0.0;
    for_each_subset(n, m, [&](const std::vector<int>& idx) {
      double prod = 1.0;
      for (int a : idx)
        for (int b : idx)
          if (a != b) prod *= std::abs(roots(a) - roots(b));
      best = std::max(best, prod);
    });
    out.values.push_back(best);
  }
  return out;
}

int classify_stratum(const MonicPoly& poly, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("classify_stratum: tol must be > 0");
  if (poly.degree() < 2) return 1;
  const SizeProfile prof = size_profile(solve_all(poly));
  for (int m = prof.n; m >= 2; --m)
    if (prof.size(m) > tol) return m;
  return 1;
}

namespace {

// Monic coefficient vector including the leading 1: [1, b_1, ..., b_d].
Eigen::VectorXcd with_leading_one(const CVec& coeffs) {
  Eigen::VectorXcd full(coeffs.size() + 1);
  full(0) = Complex(1.0, 0.0);
  full.tail(coeffs.size()) = coeffs;
  return full;
}

CVec elementary_symmetric(const std::vector<Complex>& roots) {
  return coeffs_from_roots(Eigen::Map<const CVec>(roots.data(), roots.size()));
}

}  // namespace

SplitResult split(const MonicPoly& poly, const std::vector<Complex>& group_b,
                  const std::vector<Complex>& group_c, double tol) {
  const int n = poly.degree();
  const int n1 = static_cast<int>(group_b.size());
  const int n2 = static_cast<int>(group_c.size());
  if (n1 < 1 || n2 < 1 || n1 + n2 != n)
    throw std::invalid_argument("split: group sizes must be positive and sum to degree");
  double gap = std::numeric_limits<double>::infinity();
  for (Complex b : group_b)
    for (Complex c : group_c) gap = std::min(gap, std::abs(b - c));
  if (!(gap > 0)) throw std::invalid_argument("split: groups share a root");

  CVec b = elementary_symmetric(group_b);
  CVec c = elementary_symmetric(group_c);
  const double scale = 1.0 + poly.coeffs.cwiseAbs().maxCoeff();

  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 50; ++iter) {
    const Eigen::VectorXcd fb = with_leading_one(b);
    const Eigen::VectorXcd fc = with_leading_one(c);
    // F_k = (fb * fc)_k - a_k for k = 1..n
    Eigen::VectorXcd F = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i <= n1; ++i)
      for (int j = 0; j <= n2; ++j)
        if (i + j >= 1) F(i + j - 1) += fb(i) * fc(j);
    F -= poly.coeffs;
    residual = F.cwiseAbs().maxCoeff();
    if (residual <= tol * scale) break;

    // d(product)_k / d b_i = fc_{k-i}, and symmetrically for c.
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
      for (int i = 1; i <= n1; ++i)
        if (k - i >= 0 && k - i <= n2) J(k - 1, i - 1) = fc(k - i);
      for (int j = 1; j <= n2; ++j)
        if (k - j >= 0 && k - j <= n1) J(k - 1, n1 + j - 1) = fb(k - j);
    }
    const Eigen::VectorXcd step = J.partialPivLu().solve(F);
    b -= step.head(n1);
    c -= step.tail(n2);
  }
  if (!(residual <= 1e3 * tol * scale))
    throw SolveError("split: Newton iteration failed to converge", residual);

  SplitResult out{MonicPoly(b), MonicPoly(c), Complex(1.0, 0.0), residual};
  // resultant(Pb, Pc) = prod_j Pb(gamma_j) over the roots of Pc
  const CVec gamma = solve_all(out.pc);
  for (Eigen::Index j = 0; j < gamma.size(); ++j) out.resultant *= eval(out.pb, gamma(j));
  if (std::abs(out.resultant) < 1e-12)
    throw std::invalid_argument("split: resultant vanishes, groups not coprime");
  return out;
}

namespace {

ExactPoly normalized_branch(const ExactRootCurve& curve, int i, const ExactPoly& mean) {
  return curve.branches[i] - mean;
}

ExactPoly branch_mean(const ExactRootCurve& curve) {
  ExactPoly sum;
  for (const auto& br : curve.branches) sum = sum + br;
  ExactPoly mean = sum;
  for (auto& coef : mean.coeffs) coef = coef.divided_by(curve.degree());
  return mean;
}

// alpha-style order function of a branch set: for m >= 2 the min over
// m-subsets of twice the sum of pairwise difference orders; 0 for m <= 1.
std::vector<long> subset_orders(const std::vector<ExactPoly>& branches) {
  const int n = static_cast<int>(branches.size());
  std::vector<std::vector<long>> pair_ord(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pair_ord[i][j] = pair_ord[j][i] = t_order(branches[i] - branches[j]);

  std::vector<long> out(n + 1, 0);
  for (int m = 2; m <= n; ++m) {
    long best = kOrderInf;
    for_each_subset(n, m, [&](const std::vector<int>& idx) {
      long total = 0;
      for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
          total = order_add(total, order_add(pair_ord[idx[a]][idx[b]], pair_ord[idx[a]][idx[b]]));
      if (order_le(total, best)) best = total;
    });
    out[m] = best;
  }
  return out;
}

}  // namespace

OrderVector alpha_orders(const ExactRootCurve& curve) {
  const int n = curve.degree();
  if (n < 2) throw std::invalid_argument("alpha_orders: need at least two branches");
  const ExactPoly mean = branch_mean(curve);
  std::vector<ExactPoly> normalized;
  for (int i = 0; i < n; ++i) normalized.push_back(normalized_branch(curve, i, mean));
  const std::vector<long> vals = subset_orders(normalized);
  OrderVector out;
  out.n = n;
  out.alpha.assign(vals.begin() + 2, vals.end());
  return out;
}

bool check_convexity(const OrderVector& orders) {
  for (int m = 3; m <= orders.n - 1; ++m) {
    const long lhs = order_add(order_add(orders.value(m), orders.value(m)), orders.value(2));
    const long rhs = order_add(orders.value(m - 1), orders.value(m + 1));
    if (!order_le(lhs, rhs)) return false;
  }
  return true;
}

std::pair<int, int> splitting_interval(const ExactRootCurve& group_b,
                                       const ExactRootCurve& group_c, int m) {
  const int nb = group_b.degree();
  const int nc = group_c.degree();
  for (const auto& bi : group_b.branches)
    for (const auto& cj : group_c.branches)
      if (t_order(bi - cj) != 0)
        throw std::invalid_argument(
            "splitting_interval: cross-difference of positive order, invalid splitting");

  const int lo = std::max(0, m - nc), hi = std::min(m, nb);
  if (lo > hi) throw std::invalid_argument("splitting_interval: m out of range");

  const std::vector<long> beta = subset_orders(group_b.branches);
  const std::vector<long> gamma = subset_orders(group_c.branches);
  long best = kOrderInf;
  bool have = false;
  for (int m1 = lo; m1 <= hi; ++m1) {
    const long phi = order_add(beta[m1], gamma[m - m1]);
    if (!have || (!order_le(best, phi))) { best = phi; have = true; }
  }
  std::vector<int> minimizers;
  for (int m1 = lo; m1 <= hi; ++m1)
    if (order_add(beta[m1], gamma[m - m1]) == best) minimizers.push_back(m1);
  for (size_t i = 1; i < minimizers.size(); ++i)
    if (minimizers[i] != minimizers[i - 1] + 1)
      throw std::logic_error("splitting_interval: minimizing set is not an interval");
  return {minimizers.front(), minimizers.back()};
}

}  // namespace rootreg
