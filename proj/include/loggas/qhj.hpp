#ifndef LOGGAS_QHJ_HPP
#define LOGGAS_QHJ_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "loggas/potentials.hpp"

namespace loggas {

using Complex = std::complex<double>;

struct UnsupportedPotentialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PoleCollisionError : std::runtime_error {
  PoleCollisionError(std::string msg, double t)
      : std::runtime_error(std::move(msg)), time(t) {}
  double time;
};

/// Quantum momentum function with simple moving poles:
///   p(z) = sum_k -i/(z - z_k) + i * fixed_w(z).
/// fixed_w is the (complex-analytic) fixed part, Q = i*fixed_w; for the
/// catalog potentials it is the superpotential of the relevant prefactor.
struct MomentumFunction {
  std::vector<Complex> moving_poles;
  PotentialSpec::ComplexFn fixed_w;
  PotentialSpec::ComplexFn fixed_wp;
  std::function<double(double)> fixed_wint;  // antiderivative of fixed_w on R

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  void validate() const;  // moving poles must be simple (distinct)
};

/// Builds the momentum function of a polynomial state f with the given
/// fixed part; moving poles are the zeros of f (companion matrix).
MomentumFunction momentum_from_polynomial(const std::vector<double>& f_coeffs,
                                          PotentialSpec::ComplexFn fixed_w,
                                          PotentialSpec::ComplexFn fixed_wp,
                                          std::function<double(double)> wint);

/// p(x)^2 - i p'(x) - (E - V(x)); identically zero on exact bound states.
Complex riccati_residual(const MomentumFunction& p, double E,
                         const PotentialSpec::ComplexFn& V, Complex x);
Complex riccati_residual(const MomentumFunction& p, double E,
                         const PotentialSpec& potential, Complex x);

/// One bound state of a catalog potential: quantization eigenvalue,
/// moving-pole polynomial, and the momentum function/potential pair that
/// closes the Riccati equation.
struct BoundState {
  int index = 0;                 // node count in the domain
  double energy = 0.0;           // E_n (harmonic/oscillator), lambda = n (Coulomb)
  std::vector<double> f_coeffs;  // monic; variable x, or t = x^2 if coeffs_in_t
  bool coeffs_in_t = false;
  std::vector<double> nodes;     // real zeros of f inside the domain
  MomentumFunction p;
  PotentialSpec::ComplexFn v_eff;  // level potential for the Riccati pair
  double e_eff = 0.0;              // level energy for the Riccati pair
  PotentialSpec potential;

  /// Unnormalized wave function f * exp(-int fixed_w).
  double psi(double x) const;
};

/// Polynomial quantization: states n = 0..n_max from nullspace detection of
/// the denominator-cleared coefficient map.  Supported: harmonic, Coulomb
/// (eigenvalue lambda = n), 3d oscillator, deformed oscillator (X1 route).
std::vector<BoundState> polynomial_spectrum(const PotentialSpec& potential,
                                            int n_max);

/// Axis-aligned rectangle contour, corners lo (bottom-left) and hi
/// (top-right).
struct Rectangle {
  Complex lo;
  Complex hi;
};

/// (1/2pi) contour integral of p over the rectangle, composite trapezoid
/// with at least 4096 nodes; equals the enclosed moving-pole count when the
/// contour avoids fixed singularities.
double quantization_integral(const MomentumFunction& p,
                             const Rectangle& contour, int nodes = 4096);

/// Max over probe points and consecutive steps of
///   |(p_{s+1} - p_s)/dt - (p p_x - (i/2) p_xx + V'/2)|,
/// the pole-evolution form of the Burgers-Hopf equation (V' omitted when no
/// potential is given, the free case).
double burgers_residual(const std::vector<std::vector<Complex>>& pole_traj,
                        double dt, const PotentialSpec* potential,
                        const std::vector<double>& probe_points);

}  // namespace loggas

#endif
