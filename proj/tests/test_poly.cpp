#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootreg/poly.hpp"
#include "rootreg/tracking.hpp"

using namespace rootreg;

namespace {

MonicPoly make_poly(std::initializer_list<Complex> coeffs) {
  CVec a(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (Complex c : coeffs) a(i++) = c;
  return MonicPoly(a);
}

CVec make_vec(std::initializer_list<Complex> vals) {
  CVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (Complex c : vals) v(i++) = c;
  return v;
}

Complex random_disc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return z;
  }
}

}  // namespace

TEST_CASE("eval") {
  CHECK(eval(make_poly({0, 0, 0}), 2.0) == Complex(8, 0));
  CHECK(std::abs(eval(make_poly({3, 3, 1}), Complex(-1, 0))) == 0.0);
  CHECK(std::abs(eval(make_poly({0, 1}), Complex(0, 1))) == 0.0);
}

TEST_CASE("tschirnhausen") {
  SUBCASE("(Z+1)^3 centers to Z^3") {
    const Tschirnhausen t = tschirnhausen(make_poly({3, 3, 1}));
    CHECK(t.shift == Complex(1, 0));
    for (int j = 0; j < 3; ++j) CHECK(std::abs(t.reduced.coeffs(j)) < 1e-14);
    CHECK(t.reduced.coeffs(0) == Complex(0, 0));
  }
  SUBCASE("depressed input unchanged") {
    const MonicPoly p = make_poly({0, Complex(2, 1), Complex(-1, 0.5)});
    const Tschirnhausen t = tschirnhausen(p);
    CHECK(t.shift == Complex(0, 0));
    CHECK(t.reduced.coeffs == p.coeffs);
  }
  SUBCASE("Z^2-2Z+2 -> Z^2+1") {
    const Tschirnhausen t = tschirnhausen(make_poly({-2, 2}));
    CHECK(t.shift == Complex(-1, 0));
    CHECK(std::abs(t.reduced.coeffs(0)) < 1e-14);
    CHECK(std::abs(t.reduced.coeffs(1) - Complex(1, 0)) < 1e-14);
  }
}

TEST_CASE("discriminant_cubic") {
  CHECK(discriminant_cubic(0, 0) == Complex(0, 0));
  CHECK(std::abs(discriminant_cubic(-3, 2)) < 1e-12);
  CHECK(std::abs(discriminant_cubic(1, 0) - Complex(-4, 0)) < 1e-12);
}

TEST_CASE("solve_all examples") {
  SUBCASE("roots of unity") {
    const CVec roots = solve_all(make_poly({0, 0, -1}));
    const CVec expect = make_vec({Complex(1, 0), std::polar(1.0, 2.0943951023931953),
                                  std::polar(1.0, -2.0943951023931953)});
    CHECK(match_cost(expect, roots) < 1e-10);
  }
  SUBCASE("double root") {
    const CVec roots = solve_all(make_poly({0, -3, 2}));
    const CVec expect = make_vec({1, 1, -2});
    CHECK(match_cost(expect, roots) < 1e-6);
  }
  SUBCASE("Z^2") {
    const CVec roots = solve_all(make_poly({0, 0}));
    CHECK(roots.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("root_bound examples") {
  CHECK(root_bound(make_poly({0, 0, 0})) == 0.0);
  CHECK(root_bound(make_poly({0, -1})) == 2.0);
  const MonicPoly p = make_poly({0, -3, 2});
  CHECK(root_bound(p) == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(solve_all(p).cwiseAbs().maxCoeff() <= root_bound(p) + 1e-9);
}

TEST_CASE("weight_scale examples") {
  const CVec a = make_vec({1, 1});
  CHECK(weight_scale(a, WeightAction(1.0)) == a);
  const CVec b = weight_scale(make_vec({0, 0, -1}), WeightAction(2.0));
  CHECK(b(2) == Complex(-8, 0));
  const CVec c = weight_scale(make_vec({1, 1}), WeightAction(3.0));
  CHECK(c(0) == Complex(3, 0));
  CHECK(c(1) == Complex(9, 0));
}

TEST_CASE("root/coefficient round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    CVec a(n);
    for (int j = 0; j < n; ++j) a(j) = random_disc(rng);
    const MonicPoly poly{a};
    const CVec rebuilt = coeffs_from_roots(solve_all(poly));
    const double scale = 1.0 + a.cwiseAbs().maxCoeff();
    CHECK((rebuilt - a).cwiseAbs().maxCoeff() < 1e-8 * scale);
  }
}

TEST_CASE("root bound and scaling equivariance properties") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_real_distribution<double> eta_d(0.3, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    CVec a(n);
    for (int j = 0; j < n; ++j) a(j) = random_disc(rng);
    const MonicPoly poly{a};
    const CVec roots = solve_all(poly);
    CHECK(roots.cwiseAbs().maxCoeff() <= root_bound(poly) + 1e-9);

    const double eta = eta_d(rng);
    const CVec scaled = solve_all(weight_scale(poly, WeightAction(eta)));
    CHECK(match_cost(eta * roots, scaled) < 1e-7 * n * (1.0 + eta));
  }
}

TEST_CASE("tschirnhausen consistency property") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    CVec a(n);
    for (int j = 0; j < n; ++j) a(j) = random_disc(rng);
    const MonicPoly poly{a};
    const Tschirnhausen t = tschirnhausen(poly);
    const CVec shifted = (solve_all(t.reduced).array() - t.shift).matrix();
    CHECK(match_cost(solve_all(poly), shifted) < 1e-7 * n);
  }
}

TEST_CASE("solver failure carries residual") {
  SolveOptions opts;
  opts.max_iters = 1;
  opts.tol = 1e-300;
  CHECK_THROWS_AS(solve_all(make_poly({1, 2, Complex(0.5, 0.25)}), opts), SolveError);
}
