#ifndef ROOTREG_TEST_UTIL_HPP
#define ROOTREG_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "rootreg/curve.hpp"

namespace rootreg::testutil {

inline CVec cvec(std::initializer_list<Complex> vals) {
  CVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (Complex c : vals) v(i++) = c;
  return v;
}

inline RVec rvec(std::initializer_list<double> vals) {
  RVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double c : vals) v(i++) = c;
  return v;
}

/// Curve with polynomial-in-t coefficients, one ascending coefficient list
/// per a_j, on [t0, t1].
inline CoeffCurve poly_curve(std::vector<std::vector<Complex>> coeff_lists,
                             double t0 = -1.0, double t1 = 1.0, int smoothness = 6) {
  CoeffCurve curve;
  curve.t0 = t0;
  curve.t1 = t1;
  curve.smoothness = smoothness;
  for (const auto& list : coeff_lists) {
    PolyForm form;
    form.coeffs = CVec(static_cast<Eigen::Index>(list.size()));
    for (size_t i = 0; i < list.size(); ++i)
      form.coeffs(static_cast<Eigen::Index>(i)) = list[i];
    curve.coeff_forms.emplace_back(std::move(form));
  }
  return curve;
}

/// a(t) = (0, 0, -t): the cube-root benchmark curve.
inline CoeffCurve cube_root_curve() {
  return poly_curve({{0.0}, {0.0}, {0.0, -1.0}});
}

/// a(t) = (0, 0, -t^3): roots t * (cube roots of 1).
inline CoeffCurve smooth_cubic_curve() {
  return poly_curve({{0.0}, {0.0}, {0.0, 0.0, 0.0, -1.0}});
}

}  // namespace rootreg::testutil

#endif
