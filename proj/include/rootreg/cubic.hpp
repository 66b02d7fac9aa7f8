#ifndef ROOTREG_CUBIC_HPP
#define ROOTREG_CUBIC_HPP

#include "rootreg/regularity.hpp"
#include "rootreg/strata.hpp"

namespace rootreg {

/// Z^3 + pZ + q after removing a_1; roots(original) = roots(depressed) - shift.
struct DepressedCubic {
  Complex p, q;
  Complex shift;  // a_1 / 3
  Complex delta;  // -27 q^2 - 4 p^3
};

DepressedCubic to_depressed(Complex a1, Complex a2, Complex a3);

/// Affine charts of the blown-up (p,q)-space.  C2BII shares the C1 root
/// formula; C2BI_STRICT is the neighborhood of the strict transform Ytilde=0
/// carrying the double-root structure.
enum class ChartId { ORIGIN, C1, C2a, C2BI_STRICT, C2BII };

/// Chart-region constants: C1 accepts |p|^3 <= c1 |q|^2, C2a accepts
/// |q|^2 <= c2 |p|^3 away from the strict transform, strict means
/// |Ytilde| < c3 with Ytilde = q^2/p^3 + 4/27.
inline constexpr double kChartC1 = 8.0;
inline constexpr double kChartC2 = 8.0;
inline constexpr double kChartC3 = 1.0 / 27.0;

/// Local chart coordinates at (p,q).
struct ChartFrame {
  ChartId id = ChartId::ORIGIN;
  Complex X, Y;
  Complex Ytilde;  // defined when p != 0
};

/// First matching chart in priority order ORIGIN, C2BI_STRICT, C1, C2a.
/// The regions overlap and cover every (p,q).
ChartId chart_select(Complex p, Complex q);

ChartFrame chart_frame(Complex p, Complex q);

/// Roots of Z^3 + pZ + q through the chart's formula: solve the
/// bounded-coefficient auxiliary polynomial, rescale by the fractional-power
/// prefactor.  The multiset does not depend on the branch of the prefactor.
/// Rejects (p,q) outside the chart's validity region.
CVec chart_roots(ChartId chart, Complex p, Complex q);
inline CVec chart_roots(const ChartFrame& frame, Complex p, Complex q) {
  return chart_roots(frame.id, p, q);
}

/// Optimal-assignment distance between chart_roots and solve_all,
/// normalized by 1 + max root modulus.
double chart_consistency(Complex p, Complex q);

/// Audit of the derivative bounds for a degree-3 curve: Lambda_k of p, q and
/// the discriminant for k in {2,3,6}, the minimal constant with
/// |dlambda/dt| <= C (Lambda_2 + Lambda_3 + Lambda_6) over all cells, and
/// the weak quasinorm of Lambda_{ceil(1/delta)} at exponent 1/(1-delta)
/// together with its value on a coarser track.
struct ChartAudit {
  double c_audit;
  int k;
  double p_exponent;
  double lambda_quasinorm;
  double lambda_quasinorm_coarse;
  bool est_pointwise;  // est1 held at every sample with f != 0
};

ChartAudit derivative_bound_audit(const CoeffCurve& curve, double delta,
                                  const GridConfig& cfg = {});

}  // namespace rootreg

#endif
