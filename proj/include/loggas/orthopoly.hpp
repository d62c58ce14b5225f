#ifndef LOGGAS_ORTHOPOLY_HPP
#define LOGGAS_ORTHOPOLY_HPP

#include <complex>
#include <stdexcept>
#include <vector>

namespace loggas {

struct QuantizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { Hermite, Laguerre, Jacobi, ExceptionalLaguerre };

/// Classical family tag.  Conventions: physicists' Hermite H_n; generalized
/// Laguerre L_n^(a) with weight x^a e^-x; Jacobi with weight
/// (1+x)^a (1-x)^b on [-1,1].  The exceptional tag selects the X1 Laguerre
/// family (l = 1) generated by the deformed oscillator.
struct PolynomialFamily {
  Family family;
  double a = 0.0;  // Laguerre parameter, or Jacobi (1+x) exponent
  double b = 0.0;  // Jacobi (1-x) exponent
  double g = 0.0;  // exceptional deformation parameter
  int l = 1;       // exceptional index, fixed to 1 (X1)
  int degree = 0;

  static PolynomialFamily hermite(int n) { return {Family::Hermite, 0, 0, 0, 1, n}; }
  static PolynomialFamily laguerre(double a, int n) {
    if (a <= -1.0) throw std::invalid_argument("laguerre requires a > -1");
    return {Family::Laguerre, a, 0, 0, 1, n};
  }
  static PolynomialFamily jacobi(double a, double b, int n) {
    if (a <= -1.0 || b <= -1.0)
      throw std::invalid_argument("jacobi requires a, b > -1");
    return {Family::Jacobi, a, b, 0, 1, n};
  }
  static PolynomialFamily exceptional_laguerre(double g, int n) {
    if (g <= 0.0) throw std::invalid_argument("exceptional requires g > 0");
    return {Family::ExceptionalLaguerre, 0, 0, g, 1, n};
  }
};

/// Value of the degree-n family member at x, by three-term recurrence.
double evaluate(const PolynomialFamily& fam, double x);

/// All n roots, strictly increasing, from the symmetric tridiagonal
/// (Jacobi) recurrence matrix.  Exceptional families are rejected here;
/// use exceptional_roots.
std::vector<double> roots(const PolynomialFamily& fam, int n);

/// Orthogonality weight.  The exceptional denominator is evaluated as a
/// classical Laguerre value at -x^2.
double weight(const PolynomialFamily& fam, double x);

/// Monic coefficient vector (c0..cn, cn = 1) of the classical family member.
std::vector<double> monic_coefficients(const PolynomialFamily& fam);

/// Polynomial part of an X1 exceptional-Laguerre state: the degree-n
/// polynomial y(t) in t = x^2 solving the denominator-cleared deformed
/// oscillator equation, with its eigenvalue and L2 normalization of the
/// full wave function psi = x^(g+1) e^(-x^2/2) y(x^2)/(x^2+g+1/2).
struct ExceptionalSolution {
  double g;
  int degree;            // n >= 1; the X1 family has no degree-0 member
  double energy;         // 2g - 1 + 4n
  std::vector<double> coeffs;  // y coefficients in t, monic
  double norm;           // sqrt(int psi^2 dx)

  double polynomial(double t) const;  // y(t)
  double psi(double x) const;         // normalized wave function
};

ExceptionalSolution solve_exceptional(double g, int n);

/// Zeros of the solved polynomial (in the t variable), from the companion
/// matrix of the coefficient vector.
std::vector<std::complex<double>> exceptional_roots(
    const ExceptionalSolution& sol);

/// Gauss-Legendre nodes/weights on [a, b] (via Jacobi(0,0) tridiagonal).
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre(int n, double a, double b);

}  // namespace loggas

#endif
