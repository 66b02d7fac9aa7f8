#ifndef ROOTREG_EXACT_HPP
#define ROOTREG_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace rootreg {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i).  Exact field arithmetic, no rounding anywhere.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r, long i = 0) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }

  GaussianRational divided_by(long n) const {
    if (n == 0) throw std::invalid_argument("GaussianRational: division by zero");
    return {re / n, im / n};
  }
};

/// Polynomial in t over Q(i), coefficients in ascending powers.
struct ExactPoly {
  std::vector<GaussianRational> coeffs;

  ExactPoly() = default;
  explicit ExactPoly(std::vector<GaussianRational> c) : coeffs(std::move(c)) {}

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
  }
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly nb = b;
    for (auto& c : nb.coeffs) c = -c;
    return a + nb;
  }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    ExactPoly out;
    out.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      for (size_t j = 0; j < b.coeffs.size(); ++j)
        out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
  }
};

/// Sentinel for the t-adic order of the zero polynomial.
inline constexpr long kOrderInf = -1;

/// t-adic valuation: index of the lowest nonzero coefficient, kOrderInf for 0.
inline long t_order(const ExactPoly& f) {
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    if (!f.coeffs[i].is_zero()) return static_cast<long>(i);
  return kOrderInf;
}

/// Sum of orders respecting the infinity sentinel; ord(fg) = ord f + ord g.
inline long order_add(long a, long b) {
  if (a == kOrderInf || b == kOrderInf) return kOrderInf;
  return a + b;
}

/// a <= b in the extended order where kOrderInf plays the role of +infinity.
inline bool order_le(long a, long b) {
  if (a == kOrderInf) return b == kOrderInf;
  return b == kOrderInf || a <= b;
}

}  // namespace rootreg

#endif
