#ifndef ROOTREG_CURVE_HPP
#define ROOTREG_CURVE_HPP

#include <variant>
#include <vector>

#include "rootreg/poly.hpp"

namespace rootreg {

/// Closed-form coefficient t -> c_0 + c_1 t + ... + c_d t^d.
struct PolyForm {
  CVec coeffs;  // ascending powers of t
};

/// Finite trigonometric sum t -> sum_j a_j cos(w_j t) + b_j sin(w_j t).
struct TrigForm {
  RVec freqs;
  CVec cos_amps;
  CVec sin_amps;
};

/// Tabulated samples with local polynomial interpolation of the stated order.
struct SampleForm {
  RVec ts;      // strictly increasing
  CVec values;
  int order = 3;
};

using CoeffForm = std::variant<PolyForm, TrigForm, SampleForm>;

/// Value or derivative of a single coefficient form at t.
Complex form_eval(const CoeffForm& form, double t, int order);

/// A curve of monic polynomials t -> P_{a(t)} on [t0,t1], with coefficients
/// evaluable together with derivatives up to `smoothness`.
struct CoeffCurve {
  double t0 = -1.0, t1 = 1.0;
  std::vector<CoeffForm> coeff_forms;  // length = degree
  int smoothness = 1;

  int degree() const { return static_cast<int>(coeff_forms.size()); }
  void validate() const;

  MonicPoly poly_at(double t) const;
};

/// Coefficient vector (a_1(t),...,a_n(t)) differentiated `order` times.
/// order > smoothness is rejected.
CVec curve_eval(const CoeffCurve& curve, double t, int order = 0);

/// Per-coefficient sup norms ||a_j^{(i)}||_{L^inf(I)} for i = 0..k,
/// by dense sampling with one refinement doubling.
struct CkSeminorms {
  // seminorms[j][i] = sup |a_{j+1}^{(i)}|, at the finer resolution
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> coarse;  // previous refinement level
};
CkSeminorms ck_seminorms(const CoeffCurve& curve, int k, int samples = 4096);

/// Curve with every coefficient scaled, (eta*a)_i = eta^i a_i.
CoeffCurve weight_scale(const CoeffCurve& curve, const WeightAction& w);

}  // namespace rootreg

#endif
