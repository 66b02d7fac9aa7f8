#ifndef ROOTREG_REGULARITY_HPP
#define ROOTREG_REGULARITY_HPP

#include <functional>
#include <string>
#include <vector>

#include "rootreg/tracking.hpp"

namespace rootreg {

/// Nonnegative samples with per-sample measure weights; the discrete stand-in
/// for |f| on an interval.  total_length() is the measure of the domain.
struct SampledFunction {
  std::vector<double> values;
  std::vector<double> weights;

  void push(double v, double w) {
    values.push_back(v);
    weights.push_back(w);
  }
  size_t size() const { return values.size(); }
  double total_length() const;
};

/// Weak-L^p quasinorm sup_r r * measure{|f| > r}^{1/p}, order-statistics
/// estimator with nonuniform cell widths.
double weak_quasinorm(const SampledFunction& f, double p);

/// L^q norm by composite quadrature over the weighted samples.
double lq_norm(const SampledFunction& f, double q);

/// Checks the chain ||f||_{q,w} <= ||f||_{L^q} <= (p/(p-q))^{1/q}
/// |I|^{1/q-1/p} ||f||_{p,w} for 1 <= q < p on the sampled data.
bool embed_bound_check(const SampledFunction& f, double q, double p);

/// Forward differences |dlambda/dt| of each track column, each difference
/// carrying its cell width as measure.
std::vector<SampledFunction> diff_track(const RootTrack& track);

/// A scalar function with analytically evaluable derivatives, the substrate
/// for the radical estimates.
struct ScalarCurve {
  std::function<Complex(double t, int order)> eval;
  double t0, t1;
  int smoothness;
};

/// Lambda_k sampled as k |h'| with h = |f|^{1/k}, real and imaginary parts
/// handled separately then maxed.  Wherever f != 0,
/// |f'| <= Lambda_k |f|^{1-1/k} up to grid error.
SampledFunction radical_lambda(const ScalarCurve& f, int k, const std::vector<double>& grid);

/// H_{k,I}(g) = max{ ||g^(k)||_inf^{1/k} |I|^{1/p}, ||g'||_inf^{1/k} },
/// p = k/(k-1).
double gg_bound(const ScalarCurve& g, int k, int samples = 4096);

/// N_{alpha,k,s,I} = max{ ||g||_inf^{alpha-s/k}, ||g||_inf^{alpha-1/k} }.
/// Rejects sup-norm 0 combined with a negative exponent.
double n_value(double sup_norm, double alpha, int k, int s);

/// Quasinorm of a derivative supported on a subset, computed once on the
/// full grid with zero extension and once restricted to the support.
struct ZeroExtensionResult {
  double on_domain;
  double on_support;
};
ZeroExtensionResult zero_extension_quasinorm(const SampledFunction& f, double p,
                                             const std::vector<bool>& support_mask);

struct NormEntry {
  double exponent;
  double value;
  double coarse_value;  // one refinement level coarser
  bool stable;          // |value - coarse| < stability threshold * value
};

struct RootReport {
  double sup_norm;
  std::vector<NormEntry> weak_norms;  // per requested p
  std::vector<NormEntry> lq_norms;    // per requested q
};

struct RegularityReport {
  std::vector<RootReport> roots;
  int fine_points = 0;
  int coarse_points = 0;
  double stability_threshold = 0.02;
};

/// Full report for a curve: norms of each tracked root derivative at the
/// given resolution and at one refinement level coarser (displacement cap
/// doubled).  Verdict per entry: stable if the value moves less than
/// `stability_threshold` relatively between the levels.
RegularityReport report(const CoeffCurve& curve, const GridConfig& cfg,
                        const std::vector<double>& ps, const std::vector<double>& qs,
                        double stability_threshold = 0.02);

/// Same, from two precomputed tracks (fine and coarse).
RegularityReport report_from_tracks(const RootTrack& fine, const RootTrack& coarse,
                                    const std::vector<double>& ps,
                                    const std::vector<double>& qs,
                                    double stability_threshold = 0.02);

}  // namespace rootreg

#endif
