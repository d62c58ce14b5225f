#ifndef LOGGAS_DYSON_HPP
#define LOGGAS_DYSON_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "loggas/potentials.hpp"

namespace loggas {

struct StepUnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One state of the stochastic eigenvalue gas.
struct GasTrajectoryState {
  double time = 0.0;
  std::vector<double> positions;  // strictly increasing
  int beta = 1;
  PotentialSpec potential;
  std::uint64_t halvings = 0;  // dt halvings forced by ordering violations
  std::uint64_t bounces = 0;   // noise resamples after dt underflow
};

/// Component j: sum_{k != j} 1/(x_j - x_k) - W(x_j); the negative of the
/// electrostatic gradient, zero at equilibrium.
std::vector<double> drift(const GasTrajectoryState& state);

/// Euler-Maruyama step dx = drift dt + sqrt(2/beta) dB.  Ordering
/// violations retry with dt/2 down to dt/2^12, then resample the noise;
/// noise_scale = 0 gives the deterministic gradient flow.
GasTrajectoryState step(const GasTrajectoryState& state, double dt,
                        std::mt19937_64& rng, double noise_scale = 1.0);

/// Two-sample Kolmogorov-Smirnov sup-distance between pooled trajectory
/// positions and pooled direct eigenvalues.
double ks_distance(std::vector<double> a, std::vector<double> b);

struct PoleTrajectoryState {
  double time = 0.0;
  std::vector<std::complex<double>> poles;
};

/// Fixed-step RK4 for dz_k/dt = sum_{j != k} i/(z_k - z_j) - i W(z_k)
/// (the W term dropped when no potential is given).  Real electrostatic
/// equilibria are fixed points.  Pole collisions abort with the time.
std::vector<PoleTrajectoryState> pole_dynamics(
    const std::vector<std::complex<double>>& initial,
    const PotentialSpec* potential, double dt, int steps,
    int record_every = 1);

}  // namespace loggas

#endif
