#include "rootreg/curve.hpp"

#include <algorithm>
#include <cmath>

namespace rootreg {

namespace {

Complex poly_form_eval(const PolyForm& f, double t, int order) {
  const Eigen::Index d = f.coeffs.size();
  Complex acc(0.0, 0.0);
  for (Eigen::Index j = d - 1; j >= order; --j) {
    double fall = 1.0;
    for (int i = 0; i < order; ++i) fall *= static_cast<double>(j - i);
    acc = acc * t + fall * f.coeffs(j);
  }
  return acc;
}

Complex trig_form_eval(const TrigForm& f, double t, int order) {
  Complex acc(0.0, 0.0);
  for (Eigen::Index j = 0; j < f.freqs.size(); ++j) {
    const double w = f.freqs(j);
    double wp = 1.0;
    for (int i = 0; i < order; ++i) wp *= w;
    // d/dt rotates (cos, sin) -> (-w sin, w cos); cycle of 4.
    const double c = std::cos(w * t), s = std::sin(w * t);
    double dc, ds;
    switch (order % 4) {
      case 0: dc = c; ds = s; break;
      case 1: dc = -s; ds = c; break;
      case 2: dc = -c; ds = -s; break;
      default: dc = s; ds = -c; break;
    }
    acc += wp * (f.cos_amps(j) * dc + f.sin_amps(j) * ds);
  }
  return acc;
}

// Local Newton-form interpolation on the order+1 nearest nodes, converted to
// monomial coefficients so derivatives are available.
Complex sample_form_eval(const SampleForm& f, double t, int order) {
  const Eigen::Index n = f.ts.size();
  const int deg = std::min<int>(f.order, static_cast<int>(n) - 1);
  // stencil start: window of deg+1 points around t
  Eigen::Index lo = std::lower_bound(f.ts.data(), f.ts.data() + n, t) - f.ts.data();
  Eigen::Index start = std::clamp<Eigen::Index>(lo - (deg + 1) / 2, 0, n - deg - 1);

  // divided differences
  std::vector<Complex> dd(f.values.data() + start, f.values.data() + start + deg + 1);
  for (int lvl = 1; lvl <= deg; ++lvl)
    for (int i = deg; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (f.ts(start + i) - f.ts(start + i - lvl));

  // Newton form -> monomial coefficients
  std::vector<Complex> mono(deg + 1, Complex(0, 0));
  for (int i = deg; i >= 0; --i) {
    // mono <- mono * (t - ts[start+i]) + dd[i]
    for (int j = deg; j >= 1; --j) mono[j] = mono[j - 1] + (-f.ts(start + i)) * mono[j];
    mono[0] = dd[i] + (-f.ts(start + i)) * mono[0];
  }

  Complex acc(0, 0);
  for (int j = deg; j >= order; --j) {
    double fall = 1.0;
    for (int i = 0; i < order; ++i) fall *= static_cast<double>(j - i);
    acc = acc * t + fall * mono[j];
  }
  return acc;
}

}  // namespace

Complex form_eval(const CoeffForm& form, double t, int order) {
  return std::visit(
      [&](const auto& f) -> Complex {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PolyForm>) return poly_form_eval(f, t, order);
        else if constexpr (std::is_same_v<T, TrigForm>) return trig_form_eval(f, t, order);
        else return sample_form_eval(f, t, order);
      },
      form);
}

void CoeffCurve::validate() const {
  if (!(t0 < t1)) throw std::invalid_argument("CoeffCurve: interval must satisfy t0 < t1");
  if (coeff_forms.empty()) throw std::invalid_argument("CoeffCurve: degree must be >= 1");
  if (smoothness < 1) throw std::invalid_argument("CoeffCurve: smoothness must be >= 1");
  for (const auto& form : coeff_forms) {
    if (const auto* s = std::get_if<SampleForm>(&form)) {
      if (s->order < smoothness)
        throw std::invalid_argument("CoeffCurve: sample interpolation order < smoothness");
      if (s->ts.size() != s->values.size() || s->ts.size() < 2)
        throw std::invalid_argument("CoeffCurve: malformed sample table");
    }
  }
}

MonicPoly CoeffCurve::poly_at(double t) const { return MonicPoly(curve_eval(*this, t, 0)); }

CVec curve_eval(const CoeffCurve& curve, double t, int order) {
  if (order < 0 || order > curve.smoothness)
    throw std::invalid_argument("curve_eval: derivative order exceeds smoothness");
  if (t < curve.t0 - 1e-12 || t > curve.t1 + 1e-12)
    throw std::invalid_argument("curve_eval: t outside interval");
  CVec out(curve.degree());
  for (int j = 0; j < curve.degree(); ++j) out(j) = form_eval(curve.coeff_forms[j], t, order);
  return out;
}

CkSeminorms ck_seminorms(const CoeffCurve& curve, int k, int samples) {
  if (k > curve.smoothness)
    throw std::invalid_argument("ck_seminorms: k exceeds smoothness");
  CkSeminorms out;
  auto level = [&](int m) {
    std::vector<std::vector<double>> vals(curve.degree(), std::vector<double>(k + 1, 0.0));
    for (int s = 0; s <= m; ++s) {
      const double t = curve.t0 + (curve.t1 - curve.t0) * s / m;
      for (int ord = 0; ord <= k; ++ord) {
        const CVec v = curve_eval(curve, t, ord);
        for (int j = 0; j < curve.degree(); ++j)
          vals[j][ord] = std::max(vals[j][ord], std::abs(v(j)));
      }
    }
    return vals;
  };
  out.coarse = level(samples);
  out.values = level(2 * samples);
  return out;
}

CoeffCurve weight_scale(const CoeffCurve& curve, const WeightAction& w) {
  CoeffCurve out = curve;
  double f = 1.0;
  for (int j = 0; j < curve.degree(); ++j) {
    f *= w.eta;
    std::visit(
        [&](auto& form) {
          using T = std::decay_t<decltype(form)>;
          if constexpr (std::is_same_v<T, PolyForm>) form.coeffs *= f;
          else if constexpr (std::is_same_v<T, TrigForm>) {
            form.cos_amps *= f;
            form.sin_amps *= f;
          } else form.values *= f;
        },
        out.coeff_forms[j]);
  }
  return out;
}

}  // namespace rootreg
