#include "rootreg/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rootreg {

double SampledFunction::total_length() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double weak_quasinorm(const SampledFunction& f, double p) {
  if (f.size() == 0) throw std::invalid_argument("weak_quasinorm: empty sample set");
  if (!(p >= 1.0)) throw std::invalid_argument("weak_quasinorm: p must be >= 1");
  std::vector<size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return f.values[a] > f.values[b]; });
  double cum = 0.0, best = 0.0;
  for (size_t i : idx) {
    cum += f.weights[i];
    best = std::max(best, f.values[i] * std::pow(cum, 1.0 / p));
  }
  return best;
}

double lq_norm(const SampledFunction& f, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q must be >= 1");
  double acc = 0.0;
  for (size_t i = 0; i < f.size(); ++i) acc += std::pow(f.values[i], q) * f.weights[i];
  return std::pow(acc, 1.0 / q);
}

bool embed_bound_check(const SampledFunction& f, double q, double p) {
  if (!(1.0 <= q && q < p)) throw std::invalid_argument("embed_bound_check: need 1 <= q < p");
  const double wq = weak_quasinorm(f, q);
  const double lq = lq_norm(f, q);
  const double wp = weak_quasinorm(f, p);
  const double len = f.total_length();
  const double rhs =
      std::pow(p / (p - q), 1.0 / q) * std::pow(len, 1.0 / q - 1.0 / p) * wp;
  const double eps = 1e-12 * (1.0 + lq + rhs);
  return wq <= lq + eps && lq <= rhs + eps;
}

std::vector<SampledFunction> diff_track(const RootTrack& track) {
  const int n = track.degree();
  std::vector<SampledFunction> out(n);
  for (size_t i = 0; i + 1 < track.values.size(); ++i) {
    const double dt = track.grid[i + 1] - track.grid[i];
    for (int j = 0; j < n; ++j)
      out[j].push(std::abs(track.values[i + 1](j) - track.values[i](j)) / dt, dt);
  }
  return out;
}

SampledFunction radical_lambda(const ScalarCurve& f, int k, const std::vector<double>& grid) {
  if (k < 1) throw std::invalid_argument("radical_lambda: k must be >= 1");
  const size_t m = grid.size();
  if (m < 2) throw std::invalid_argument("radical_lambda: grid too small");

  auto part_lambda = [&](auto component) {
    auto hval = [&](double t) {
      return std::pow(std::abs(component(f.eval(t, 0))), 1.0 / k);
    };
    std::vector<double> h(m);
    for (size_t i = 0; i < m; ++i) h[i] = hval(grid[i]);

    // Lambda = k |h'|.  Away from zeros of h the one-sided quotient is taken
    // over a cascade of internal steps well below the grid spacing, so the
    // value is pointwise up to rounding.  At zeros of h only the grid
    // neighbors are used: there h' blows up below grid scale and the sampled
    // function must stay at grid resolution.  Zero plateaus get 0.
    std::vector<double> lam(m, 0.0);
    for (size_t i = 0; i < m; ++i) {
      double spacing = std::numeric_limits<double>::infinity();
      if (i > 0) spacing = std::min(spacing, grid[i] - grid[i - 1]);
      if (i + 1 < m) spacing = std::min(spacing, grid[i + 1] - grid[i]);
      if (h[i] == 0.0) {
        const bool plateau =
            (i > 0 && h[i - 1] == 0.0) || (i + 1 < m && h[i + 1] == 0.0);
        if (plateau) continue;
        double left = 0.0, right = 0.0;
        if (i > 0) left = (h[i - 1] - h[i]) / (grid[i] - grid[i - 1]);
        if (i + 1 < m) right = (h[i + 1] - h[i]) / (grid[i + 1] - grid[i]);
        lam[i] = k * std::max(left, right);
        continue;
      }
      double best = 0.0;
      for (double s = 1e-4 * spacing; s >= 1e-10 * spacing; s *= 1e-2) {
        for (double sign : {1.0, -1.0}) {
          const double t2 = grid[i] + sign * s;
          if (t2 < f.t0 || t2 > f.t1) continue;
          const double h2 = hval(t2);
          // hval carries O(eps) relative rounding error which the quotient
          // amplifies by h/s; discount it so tiny steps only win when the
          // slope genuinely grows below grid scale
          const double noise =
              4.0 * std::numeric_limits<double>::epsilon() * std::max(h[i], h2) / s;
          best = std::max(best, std::abs(h2 - h[i]) / s - noise);
        }
      }
      lam[i] = k * best;
    }
    return lam;
  };

  const std::vector<double> lre = part_lambda([](Complex z) { return z.real(); });
  const std::vector<double> lim = part_lambda([](Complex z) { return z.imag(); });

  SampledFunction out;
  for (size_t i = 0; i < m; ++i) {
    const double wl = (i > 0) ? 0.5 * (grid[i] - grid[i - 1]) : 0.0;
    const double wr = (i + 1 < m) ? 0.5 * (grid[i + 1] - grid[i]) : 0.0;
    out.push(std::max(lre[i], lim[i]), wl + wr);
  }
  return out;
}

double gg_bound(const ScalarCurve& g, int k, int samples) {
  double dk = 0.0, d1 = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = g.t0 + (g.t1 - g.t0) * i / samples;
    dk = std::max(dk, std::abs(g.eval(t, k)));
    d1 = std::max(d1, std::abs(g.eval(t, 1)));
  }
  const double len = g.t1 - g.t0;
  const double inv_p = (k - 1) / static_cast<double>(k);  // 1/p with p = k/(k-1)
  return std::max(std::pow(dk, 1.0 / k) * std::pow(len, inv_p), std::pow(d1, 1.0 / k));
}

double n_value(double sup_norm, double alpha, int k, int s) {
  const double e1 = alpha - static_cast<double>(s) / k;
  const double e2 = alpha - 1.0 / k;
  if (sup_norm == 0.0 && (e1 < 0.0 || e2 < 0.0))
    throw std::domain_error("n_value: sup norm 0 with negative exponent, bound degenerates");
  return std::max(std::pow(sup_norm, e1), std::pow(sup_norm, e2));
}

ZeroExtensionResult zero_extension_quasinorm(const SampledFunction& f, double p,
                                             const std::vector<bool>& support_mask) {
  if (support_mask.size() != f.size())
    throw std::invalid_argument("zero_extension_quasinorm: mask length mismatch");
  SampledFunction extended, restricted;
  for (size_t i = 0; i < f.size(); ++i) {
    extended.push(support_mask[i] ? f.values[i] : 0.0, f.weights[i]);
    if (support_mask[i]) restricted.push(f.values[i], f.weights[i]);
  }
  return {weak_quasinorm(extended, p), weak_quasinorm(restricted, p)};
}

RegularityReport report_from_tracks(const RootTrack& fine, const RootTrack& coarse,
                                    const std::vector<double>& ps,
                                    const std::vector<double>& qs,
                                    double stability_threshold) {
  const auto dfine = diff_track(fine);
  const auto dcoarse = diff_track(coarse);
  const int n = fine.degree();

  // Weak quasinorms are computed on the resolved cells only.  A saturated
  // cell reports the chord average of the derivative over an unresolved
  // scale, which at a power singularity of critical exponent inflates the
  // weak estimator by up to p/(p-1); L^q norms keep every cell because cell
  // averaging can only shrink them (Jensen).
  auto resolved = [](const SampledFunction& d, const RootTrack& tr) {
    if (tr.saturated.empty()) return d;
    SampledFunction out;
    for (size_t i = 0; i < d.size(); ++i)
      if (!tr.saturated[i]) out.push(d.values[i], d.weights[i]);
    return out.size() ? out : d;
  };

  RegularityReport rep;
  rep.fine_points = fine.points();
  rep.coarse_points = coarse.points();
  rep.stability_threshold = stability_threshold;
  rep.roots.resize(n);
  for (int j = 0; j < n; ++j) {
    RootReport& rr = rep.roots[j];
    rr.sup_norm = 0.0;
    for (const CVec& row : fine.values) rr.sup_norm = std::max(rr.sup_norm, std::abs(row(j)));
    const SampledFunction rfine = resolved(dfine[j], fine);
    const SampledFunction rcoarse = resolved(dcoarse[j], coarse);
    for (double p : ps) {
      const double v = weak_quasinorm(rfine, p);
      const double c = weak_quasinorm(rcoarse, p);
      rr.weak_norms.push_back(
          {p, v, c, std::abs(v - c) < stability_threshold * std::max(v, 1e-300)});
    }
    for (double q : qs) {
      const double v = lq_norm(dfine[j], q);
      const double c = lq_norm(dcoarse[j], q);
      rr.lq_norms.push_back(
          {q, v, c, std::abs(v - c) < stability_threshold * std::max(v, 1e-300)});
    }
  }
  return rep;
}

RegularityReport report(const CoeffCurve& curve, const GridConfig& cfg,
                        const std::vector<double>& ps, const std::vector<double>& qs,
                        double stability_threshold) {
  // One refinement level coarser: cap doubled, min_step scaled by its cube so
  // the grid floor tracks the cap (divergent norms keep growing under
  // refinement instead of saturating at a fixed floor).
  GridConfig coarse_cfg = cfg;
  coarse_cfg.displacement_cap = 2.0 * cfg.displacement_cap;
  coarse_cfg.min_step = 8.0 * cfg.min_step;
  const RootTrack fine = track(curve, cfg);
  const RootTrack coarse = track(curve, coarse_cfg);
  return report_from_tracks(fine, coarse, ps, qs, stability_threshold);
}

}  // namespace rootreg
