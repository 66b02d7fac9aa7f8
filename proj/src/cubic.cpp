#include "rootreg/cubic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rootreg {

DepressedCubic to_depressed(Complex a1, Complex a2, Complex a3) {
  DepressedCubic out;
  out.p = a2 - a1 * a1 / 3.0;
  out.q = a3 - a1 * a2 / 3.0 + 2.0 * a1 * a1 * a1 / 27.0;
  out.shift = a1 / 3.0;
  out.delta = discriminant_cubic(out.p, out.q);
  return out;
}

namespace {

constexpr double kRegionSlack = 1e-9;

Complex ytilde(Complex p, Complex q) { return q * q / (p * p * p) + 4.0 / 27.0; }

bool in_c1(Complex p, Complex q) {
  return std::norm(q) > 0.0 &&
         std::pow(std::abs(p), 3) <= kChartC1 * std::norm(q) * (1.0 + kRegionSlack);
}

bool in_c2a(Complex p, Complex q) {
  return std::norm(p) > 0.0 &&
         std::norm(q) <= kChartC2 * std::pow(std::abs(p), 3) * (1.0 + kRegionSlack);
}

bool in_strict(Complex p, Complex q) {
  return std::norm(p) > 0.0 && std::abs(ytilde(p, q)) < kChartC3 * (1.0 + kRegionSlack);
}

CVec aux_roots(Complex lin, Complex constant, const SolveOptions& opts = {}) {
  CVec a(3);
  a << Complex(0.0, 0.0), lin, constant;
  return solve_all(MonicPoly(a), opts);
}

}  // namespace

ChartId chart_select(Complex p, Complex q) {
  if (p == 0.0 && q == 0.0) return ChartId::ORIGIN;
  if (in_strict(p, q)) return ChartId::C2BI_STRICT;
  if (in_c1(p, q)) return ChartId::C1;
  return ChartId::C2a;
}

ChartFrame chart_frame(Complex p, Complex q) {
  ChartFrame f;
  f.id = chart_select(p, q);
  if (p != 0.0) f.Ytilde = ytilde(p, q);
  switch (f.id) {
    case ChartId::ORIGIN:
      break;
    case ChartId::C1:
    case ChartId::C2BII:
      f.Y = q;
      f.X = p / q;
      break;
    case ChartId::C2a:
      f.X = p;
      f.Y = q / (p * p);
      break;
    case ChartId::C2BI_STRICT:
      f.X = p * p / q;
      f.Y = q * q / (p * p * p);
      break;
  }
  return f;
}

CVec chart_roots(ChartId chart, Complex p, Complex q) {
  switch (chart) {
    case ChartId::ORIGIN: {
      if (p != 0.0 || q != 0.0)
        throw std::invalid_argument("chart_roots: ORIGIN requires p = q = 0");
      return CVec::Zero(3);
    }
    case ChartId::C1:
    case ChartId::C2BII: {
      if (!in_c1(p, q)) throw std::invalid_argument("chart_roots: (p,q) outside Chart 1 region");
      // Z = q^{1/3} Phi(p / q^{2/3}), Phi realized by Ztilde^3 + u Ztilde + 1
      const Complex c = std::pow(q, 1.0 / 3.0);
      const Complex u = p / (c * c);
      return c * aux_roots(u, Complex(1.0, 0.0));
    }
    case ChartId::C2a: {
      if (!in_c2a(p, q))
        throw std::invalid_argument("chart_roots: (p,q) outside Chart 2a region");
      // Z = p^{1/2} Phi(q / p^{3/2}), Phi realized by Ztilde^3 + Ztilde + v
      const Complex s = std::sqrt(p);
      const Complex v = q / (s * s * s);
      return s * aux_roots(Complex(1.0, 0.0), v);
    }
    case ChartId::C2BI_STRICT: {
      if (!in_strict(p, q))
        throw std::invalid_argument("chart_roots: (p,q) outside strict-transform region");
      // Auxiliary Ztilde^3 + Ztilde + w factors as
      // (Ztilde^2 + b1 Ztilde + b2)(Ztilde + c): the pair Z0 +- Z1 plus a
      // simple root, everything rescaled by p^{1/2}.
      const Complex s = std::sqrt(p);
      const Complex w = q / (s * s * s);
      const CVec seeds = aux_roots(Complex(1.0, 0.0), w);
      int i0 = 0, i1 = 1;
      double gap = std::abs(seeds(0) - seeds(1));
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (std::abs(seeds(a) - seeds(b)) < gap) {
            gap = std::abs(seeds(a) - seeds(b));
            i0 = a;
            i1 = b;
          }
      const int is = 3 - i0 - i1;
      CVec aux(3);
      aux << Complex(0.0, 0.0), Complex(1.0, 0.0), w;
      const SplitResult f = split(MonicPoly(aux), {seeds(i0), seeds(i1)}, {seeds(is)});
      const Complex b1 = f.pb.coeffs(0), b2 = f.pb.coeffs(1), cc = f.pc.coeffs(0);
      const Complex z0 = -s * b1 / 2.0;
      const Complex z1 = s * std::sqrt(b1 * b1 / 4.0 - b2);
      CVec out(3);
      out << -s * cc, z0 + z1, z0 - z1;
      return out;
    }
  }
  throw std::invalid_argument("chart_roots: unknown chart");
}

double chart_consistency(Complex p, Complex q) {
  const CVec chart = chart_roots(chart_select(p, q), p, q);
  CVec a(3);
  a << Complex(0.0, 0.0), p, q;
  const CVec direct = solve_all(MonicPoly(a));
  const std::vector<int> sigma = match_step(direct, chart);
  double dev = 0.0, maxmod = 0.0;
  for (int j = 0; j < 3; ++j) {
    dev = std::max(dev, std::abs(chart(sigma[j]) - direct(j)));
    maxmod = std::max(maxmod, std::abs(direct(j)));
  }
  return dev / (1.0 + maxmod);
}

namespace {

constexpr int kAuditOrder = 6;
using DerivArray = std::array<Complex, kAuditOrder + 1>;

constexpr double kBinomial[kAuditOrder + 1][kAuditOrder + 1] = {
    {1, 0, 0, 0, 0, 0, 0},    {1, 1, 0, 0, 0, 0, 0},     {1, 2, 1, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 0, 0},    {1, 4, 6, 4, 1, 0, 0},     {1, 5, 10, 10, 5, 1, 0},
    {1, 6, 15, 20, 15, 6, 1}};

DerivArray leibniz(const DerivArray& f, const DerivArray& g) {
  DerivArray out{};
  for (int i = 0; i <= kAuditOrder; ++i)
    for (int j = 0; j <= i; ++j) out[i] += kBinomial[i][j] * f[j] * g[i - j];
  return out;
}

DerivArray operator-(const DerivArray& f, const DerivArray& g) {
  DerivArray out{};
  for (int i = 0; i <= kAuditOrder; ++i) out[i] = f[i] - g[i];
  return out;
}

DerivArray scaled(const DerivArray& f, Complex c) {
  DerivArray out{};
  for (int i = 0; i <= kAuditOrder; ++i) out[i] = c * f[i];
  return out;
}

// Derivative arrays of p, q and the discriminant at t.
struct PqDelta {
  DerivArray p, q, delta;
};

PqDelta pq_delta(const CoeffCurve& curve, double t) {
  DerivArray a1{}, a2{}, a3{};
  for (int ord = 0; ord <= kAuditOrder; ++ord) {
    const CVec v = curve_eval(curve, t, ord);
    a1[ord] = v(0);
    a2[ord] = v(1);
    a3[ord] = v(2);
  }
  const DerivArray a1sq = leibniz(a1, a1);
  const DerivArray a1cu = leibniz(a1sq, a1);
  PqDelta out;
  out.p = a2 - scaled(a1sq, Complex(1.0 / 3.0, 0.0));
  out.q = (a3 - scaled(leibniz(a1, a2), Complex(1.0 / 3.0, 0.0))) -
          scaled(a1cu, Complex(-2.0 / 27.0, 0.0));
  out.delta = scaled(leibniz(out.q, out.q), Complex(-27.0, 0.0)) -
              scaled(leibniz(leibniz(out.p, out.p), out.p), Complex(4.0, 0.0));
  return out;
}

ScalarCurve component_curve(const CoeffCurve& curve, int which) {
  ScalarCurve sc;
  sc.t0 = curve.t0;
  sc.t1 = curve.t1;
  sc.smoothness = kAuditOrder;
  sc.eval = [curve, which](double t, int order) {
    const PqDelta d = pq_delta(curve, t);
    const DerivArray& arr = which == 0 ? d.p : which == 1 ? d.q : d.delta;
    return arr[order];
  };
  return sc;
}

// Pointwise max of Lambda_k over p, q, delta on the grid.
std::vector<double> lambda_max(const std::array<ScalarCurve, 3>& comps, int k,
                               const std::vector<double>& grid) {
  std::vector<double> out(grid.size(), 0.0);
  for (const ScalarCurve& sc : comps) {
    const SampledFunction lam = radical_lambda(sc, k, grid);
    for (size_t i = 0; i < grid.size(); ++i) out[i] = std::max(out[i], lam.values[i]);
  }
  return out;
}

}  // namespace

ChartAudit derivative_bound_audit(const CoeffCurve& curve, double delta,
                                  const GridConfig& cfg) {
  if (curve.degree() != 3)
    throw std::invalid_argument("derivative_bound_audit: degree-3 curves only");
  if (curve.smoothness < kAuditOrder)
    throw std::invalid_argument("derivative_bound_audit: smoothness >= 6 required");
  if (!(delta >= 1.0 / 6.0 && delta < 1.0))
    throw std::invalid_argument("derivative_bound_audit: delta must lie in [1/6, 1)");

  const std::array<ScalarCurve, 3> comps = {component_curve(curve, 0),
                                            component_curve(curve, 1),
                                            component_curve(curve, 2)};
  const RootTrack tr = track(curve, cfg);
  const std::vector<double>& grid = tr.grid;

  const std::vector<double> l2 = lambda_max(comps, 2, grid);
  const std::vector<double> l3 = lambda_max(comps, 3, grid);
  const std::vector<double> l6 = lambda_max(comps, 6, grid);

  ChartAudit audit{};
  audit.k = static_cast<int>(std::ceil(1.0 / delta - 1e-12));
  audit.p_exponent = 1.0 / (1.0 - delta);

  const int n = tr.degree();
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    const double dt = grid[i + 1] - grid[i];
    const double lam = std::max(l2[i] + l3[i] + l6[i], l2[i + 1] + l3[i + 1] + l6[i + 1]);
    for (int j = 0; j < n; ++j) {
      const double dl = std::abs(tr.values[i + 1](j) - tr.values[i](j)) / dt;
      if (dl == 0.0) continue;
      audit.c_audit = std::max(audit.c_audit, dl / std::max(lam, 1e-300));
    }
  }

  // est1 spot check for Lambda_k at the audit exponent
  audit.est_pointwise = true;
  for (const ScalarCurve& sc : comps) {
    const SampledFunction lam = radical_lambda(sc, audit.k, grid);
    double scale = 0.0;
    for (double t : grid) scale = std::max(scale, std::abs(sc.eval(t, 1)));
    for (size_t i = 0; i < grid.size(); ++i) {
      const Complex f = sc.eval(grid[i], 0);
      if (f == 0.0) continue;
      const double lhs = std::abs(sc.eval(grid[i], 1));
      const double rhs =
          lam.values[i] * std::pow(std::abs(f), 1.0 - 1.0 / audit.k) + 1e-3 * (1.0 + scale);
      if (lhs > rhs) audit.est_pointwise = false;
    }
  }

  const std::vector<double> lk = lambda_max(comps, audit.k, grid);
  SampledFunction fine;
  for (size_t i = 0; i < grid.size(); ++i) {
    const double wl = (i > 0) ? 0.5 * (grid[i] - grid[i - 1]) : 0.0;
    const double wr = (i + 1 < grid.size()) ? 0.5 * (grid[i + 1] - grid[i]) : 0.0;
    fine.push(lk[i], wl + wr);
  }
  audit.lambda_quasinorm = weak_quasinorm(fine, audit.p_exponent);

  GridConfig coarse_cfg = cfg;
  coarse_cfg.displacement_cap = 2.0 * cfg.displacement_cap;
  coarse_cfg.min_step = 8.0 * cfg.min_step;
  const RootTrack coarse = track(curve, coarse_cfg);
  const std::vector<double> lk_c = lambda_max(comps, audit.k, coarse.grid);
  SampledFunction coarse_f;
  for (size_t i = 0; i < coarse.grid.size(); ++i) {
    const double wl = (i > 0) ? 0.5 * (coarse.grid[i] - coarse.grid[i - 1]) : 0.0;
    const double wr =
        (i + 1 < coarse.grid.size()) ? 0.5 * (coarse.grid[i + 1] - coarse.grid[i]) : 0.0;
    coarse_f.push(lk_c[i], wl + wr);
  }
  audit.lambda_quasinorm_coarse = weak_quasinorm(coarse_f, audit.p_exponent);
  return audit;
}

}  // namespace rootreg
