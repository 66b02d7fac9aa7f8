#ifndef ROOTREG_POLY_HPP
#define ROOTREG_POLY_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rootreg {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;

/// Monic polynomial P(Z) = Z^n + a_1 Z^{n-1} + ... + a_n with complex
/// coefficients.  coeffs(j-1) holds a_j (the coefficient of Z^{n-j}).
struct MonicPoly {
  CVec coeffs;

  MonicPoly() = default;
  explicit MonicPoly(CVec a) : coeffs(std::move(a)) {
    if (coeffs.size() < 1) throw std::invalid_argument("MonicPoly: degree must be >= 1");
  }

  int degree() const { return static_cast<int>(coeffs.size()); }
};

/// Scaling action eta * a with (eta*a)_i = eta^i a_i.  Roots scale by eta.
struct WeightAction {
  double eta;
  explicit WeightAction(double e) : eta(e) {
    if (!(e > 0.0)) throw std::invalid_argument("WeightAction: eta must be positive");
  }
};

struct SolveError : std::runtime_error {
  double residual;
  SolveError(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
};

/// Horner evaluation of P(z).
Complex eval(const MonicPoly& poly, Complex z);

/// Derivative P'(z).
Complex eval_derivative(const MonicPoly& poly, Complex z);

/// Shift Z -> Z - a_1/n, killing the subleading coefficient.
/// Roots of `reduced` are roots of `poly` shifted by +a_1/n.
struct Tschirnhausen {
  Complex shift;
  MonicPoly reduced;
};
Tschirnhausen tschirnhausen(const MonicPoly& poly);

/// Discriminant of the depressed cubic Z^3 + pZ + q.
inline Complex discriminant_cubic(Complex p, Complex q) {
  return -27.0 * q * q - 4.0 * p * p * p;
}

/// Every root z of P satisfies |z| <= 2 max_j |a_j|^{1/j}.
double root_bound(const MonicPoly& poly);

/// (eta*a)_i = eta^i a_i componentwise.
CVec weight_scale(const CVec& a, const WeightAction& w);
inline MonicPoly weight_scale(const MonicPoly& poly, const WeightAction& w) {
  return MonicPoly(weight_scale(poly.coeffs, w));
}

struct SolveOptions {
  double tol = 1e-12;
  int max_iters = 400;
  // Phase offset of the initial circle of guesses; varying it gives
  // independent runs for the comparison tests.
  double phase_seed = 0.0;
};

/// All roots by Aberth-Ehrlich simultaneous iteration, initial guesses on a
/// circle of radius root_bound * (1+eps).  Throws SolveError on
/// non-convergence.  Exact trailing zero coefficients are stripped first, so
/// zero roots are returned exactly.
CVec solve_all(const MonicPoly& poly, const SolveOptions& opts = {});

/// Coefficients of the monic polynomial with the given roots,
/// via elementary symmetric functions.  Inverse of solve_all up to tol.
CVec coeffs_from_roots(const CVec& roots);

}  // namespace rootreg

#endif
