#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rootreg/curve.hpp"
#include "test_util.hpp"

using namespace rootreg;
using namespace rootreg::testutil;

TEST_CASE("curve_eval examples") {
  SUBCASE("linear coefficient") {
    const CVec v = curve_eval(cube_root_curve(), 0.5, 1);
    CHECK(v(0) == Complex(0, 0));
    CHECK(v(1) == Complex(0, 0));
    CHECK(v(2) == Complex(-1, 0));
  }
  SUBCASE("monomial second derivative") {
    const CVec v = curve_eval(smooth_cubic_curve(), 1.0, 2);
    CHECK(v(2) == Complex(-6, 0));
  }
  SUBCASE("trig derivative at 0") {
    CoeffCurve curve = poly_curve({{0.0}, {0.0}, {0.0}});
    TrigForm cosine;
    cosine.freqs = rvec({1.0});
    cosine.cos_amps = cvec({1.0});
    cosine.sin_amps = cvec({0.0});
    curve.coeff_forms[1] = cosine;
    const CVec v = curve_eval(curve, 0.0, 1);
    CHECK(std::abs(v(1)) == 0.0);
    CHECK(std::abs(v(0)) == 0.0);
    CHECK(std::abs(v(2)) == 0.0);
  }
}

TEST_CASE("curve_eval rejects order above smoothness") {
  CoeffCurve curve = cube_root_curve();
  curve.smoothness = 2;
  CHECK_THROWS_AS(curve_eval(curve, 0.0, 3), std::invalid_argument);
  CHECK_NOTHROW(curve_eval(curve, 0.0, 2));
}

TEST_CASE("validate rejects bad intervals") {
  CoeffCurve curve = cube_root_curve();
  curve.t0 = 1.0;
  curve.t1 = 1.0;
  CHECK_THROWS_AS(curve.validate(), std::invalid_argument);
  curve.t0 = -1.0;
  CHECK_NOTHROW(curve.validate());
}

TEST_CASE("ck_seminorms examples") {
  SUBCASE("linear") {
    const CkSeminorms s = ck_seminorms(cube_root_curve(), 1, 512);
    CHECK(s.values[2][0] == doctest::Approx(1.0));
    CHECK(s.values[2][1] == doctest::Approx(1.0));
    CHECK(s.values[0][0] == 0.0);
  }
  SUBCASE("cubic") {
    const CkSeminorms s = ck_seminorms(smooth_cubic_curve(), 3, 512);
    CHECK(s.values[2][0] == doctest::Approx(1.0));
    CHECK(s.values[2][1] == doctest::Approx(3.0));
    CHECK(s.values[2][2] == doctest::Approx(6.0));
    CHECK(s.values[2][3] == doctest::Approx(6.0));
  }
  SUBCASE("constant") {
    const CoeffCurve curve = poly_curve({{Complex(2, -1)}, {0.0}});
    const CkSeminorms s = ck_seminorms(curve, 2, 128);
    CHECK(s.values[0][0] == doctest::Approx(std::abs(Complex(2, -1))));
    CHECK(s.values[0][1] == 0.0);
    CHECK(s.values[0][2] == 0.0);
  }
  SUBCASE("stabilizes under refinement") {
    CoeffCurve curve = poly_curve({{0.0}, {0.0}, {0.0}});
    TrigForm f;
    f.freqs = rvec({0.7, 2.3});
    f.cos_amps = cvec({0.4, Complex(0.1, 0.2)});
    f.sin_amps = cvec({Complex(0, 0.3), 0.2});
    curve.coeff_forms[2] = f;
    const CkSeminorms s = ck_seminorms(curve, 2, 2048);
    for (int ord = 0; ord <= 2; ++ord)
      CHECK(std::abs(s.values[2][ord] - s.coarse[2][ord]) <
            1e-4 * (1.0 + s.values[2][ord]));
  }
}

TEST_CASE("sample form reproduces a cubic with derivatives") {
  const int m = 200;
  SampleForm form;
  form.order = 3;
  form.ts = RVec(m + 1);
  form.values = CVec(m + 1);
  for (int i = 0; i <= m; ++i) {
    const double t = -1.0 + 2.0 * i / m;
    form.ts(i) = t;
    form.values(i) = Complex(t * t * t - 0.5 * t, 0.25 * t * t);
  }
  for (double t : {-0.83, -0.2, 0.0, 0.41, 0.97}) {
    const Complex v = form_eval(form, t, 0);
    const Complex d = form_eval(form, t, 1);
    CHECK(std::abs(v - Complex(t * t * t - 0.5 * t, 0.25 * t * t)) < 1e-9);
    CHECK(std::abs(d - Complex(3 * t * t - 0.5, 0.5 * t)) < 1e-7);
  }
}

TEST_CASE("weight_scale acts degree-wise on forms") {
  const CoeffCurve curve = poly_curve({{1.0}, {0.0, 1.0}, {Complex(0, 1)}});
  const CoeffCurve scaled = weight_scale(curve, WeightAction(2.0));
  const CVec base = curve_eval(curve, 0.5, 0);
  const CVec v = curve_eval(scaled, 0.5, 0);
  CHECK(v(0) == 2.0 * base(0));
  CHECK(v(1) == 4.0 * base(1));
  CHECK(v(2) == 8.0 * base(2));
}
