#include "rootreg/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rootreg {

Complex eval(const MonicPoly& poly, Complex z) {
  Complex acc(1.0, 0.0);
  for (Eigen::Index j = 0; j < poly.coeffs.size(); ++j) acc = acc * z + poly.coeffs(j);
  return acc;
}

Complex eval_derivative(const MonicPoly& poly, Complex z) {
  const int n = poly.degree();
  Complex acc(static_cast<double>(n), 0.0);
  for (int j = 1; j < n; ++j) acc = acc * z + static_cast<double>(n - j) * poly.coeffs(j - 1);
  return acc;
}

Tschirnhausen tschirnhausen(const MonicPoly& poly) {
  const int n = poly.degree();
  const Complex shift = poly.coeffs(0) / static_cast<double>(n);
  if (shift == Complex(0.0, 0.0)) return {shift, poly};

  // Coefficients of P(Z - shift) by synthetic division (repeated Horner).
  CVec full(n + 1);
  full(0) = Complex(1.0, 0.0);
  for (int j = 1; j <= n; ++j) full(j) = poly.coeffs(j - 1);
  for (int pass = 0; pass < n; ++pass)
    for (int j = 1; j <= n - pass; ++j) full(j) += -shift * full(j - 1);

  CVec reduced = full.tail(n);
  reduced(0) = Complex(0.0, 0.0);  // exact by construction
  return {shift, MonicPoly(std::move(reduced))};
}

double root_bound(const MonicPoly& poly) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < poly.coeffs.size(); ++j) {
    const double m = std::pow(std::abs(poly.coeffs(j)), 1.0 / static_cast<double>(j + 1));
    best = std::max(best, m);
  }
  return 2.0 * best;
}

CVec weight_scale(const CVec& a, const WeightAction& w) {
  CVec out(a.size());
  double f = 1.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    f *= w.eta;
    out(i) = f * a(i);
  }
  return out;
}

CVec coeffs_from_roots(const CVec& roots) {
  const Eigen::Index n = roots.size();
  CVec a = CVec::Zero(n);
  // Multiply out prod (Z - r_i) incrementally.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j >= 1; --j) a(j) -= roots(i) * a(j - 1);
    a(0) -= roots(i);
  }
  return a;
}

CVec solve_all(const MonicPoly& poly, const SolveOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("solve_all: tol must be positive");
  const int n = poly.degree();

  // Strip exact trailing zero coefficients: each contributes a zero root.
  int zeros = 0;
  while (zeros < n && poly.coeffs(n - 1 - zeros) == Complex(0.0, 0.0)) ++zeros;
  if (zeros == n) return CVec::Zero(n);

  const int m = n - zeros;
  MonicPoly reduced{poly.coeffs.head(m).eval()};

  CVec z(m);
  const double radius = std::max(root_bound(reduced) * 1.0625, 1e-30);
  for (int i = 0; i < m; ++i) {
    const double theta = 2.0 * std::numbers::pi * (static_cast<double>(i) / m) +
                         0.3841 + opts.phase_seed;
    z(i) = radius * Complex(std::cos(theta), std::sin(theta));
  }

  auto residual_ok = [&](const CVec& zz, double* out_res) {
    double maxmod = 0.0, res = 0.0;
    for (int i = 0; i < m; ++i) maxmod = std::max(maxmod, std::abs(zz(i)));
    for (int i = 0; i < m; ++i) res = std::max(res, std::abs(eval(reduced, zz(i))));
    if (out_res) *out_res = res;
    return res <= opts.tol * std::pow(1.0 + maxmod, m);
  };

  double res = 0.0;
  bool converged = false;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < m; ++i) {
      const Complex pv = eval(reduced, z(i));
      if (pv == Complex(0.0, 0.0)) continue;
      const Complex dv = eval_derivative(reduced, z(i));
      Complex newton = (dv != Complex(0.0, 0.0)) ? pv / dv : Complex(0.0, 0.0);
      Complex repulse(0.0, 0.0);
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        const Complex d = z(i) - z(j);
        if (d != Complex(0.0, 0.0)) repulse += 1.0 / d;
      }
      const Complex denom = Complex(1.0, 0.0) - newton * repulse;
      const Complex step = (denom != Complex(0.0, 0.0)) ? newton / denom : newton;
      z(i) -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    // Iterate to stagnation; near multiple roots the residual criterion
    // alone would stop too early.
    if (max_step < 1e-15 * (1.0 + z.cwiseAbs().maxCoeff())) {
      converged = residual_ok(z, &res);
      break;
    }
    if (iter == opts.max_iters - 1) converged = residual_ok(z, &res);
  }
  if (!converged && !residual_ok(z, &res))
    throw SolveError("solve_all: no convergence after " + std::to_string(opts.max_iters) +
                         " iterations, residual " + std::to_string(res),
                     res);

  CVec out(n);
  out.head(m) = z;
  out.tail(zeros).setZero();
  return out;
}

}  // namespace rootreg
