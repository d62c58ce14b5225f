#ifndef LOGGAS_ELECTROSTATICS_HPP
#define LOGGAS_ELECTROSTATICS_HPP

#include <stdexcept>
#include <vector>

#include "loggas/potentials.hpp"

namespace loggas {

struct SingularConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(std::string msg, std::vector<double> iterate, double gnorm)
      : std::runtime_error(std::move(msg)),
        last_iterate(std::move(iterate)),
        gradient_norm(gnorm) {}
  std::vector<double> last_iterate;
  double gradient_norm;
};

/// n unit charges on a line in the confinement whose gradient is the
/// potential's superpotential W; pairwise logarithmic repulsion.
struct ChargeConfiguration {
  std::vector<double> positions;  // strictly increasing
  int beta = 2;                   // Dyson index; JPDF layer only
  PotentialSpec potential;

  void validate() const;
};

/// W-convention gas energy: sum Wint(x_i) - sum_{i<j} ln|x_i - x_j|.
double energy(const ChargeConfiguration& cfg);

/// Component k: W(x_k) - sum_{j != k} 1/(x_k - x_j); zero iff equilibrium.
std::vector<double> gradient(const ChargeConfiguration& cfg);

enum class SeedLayout { Chebyshev, Uniform };

/// Damped Newton solve of the stationarity system with analytic Jacobian;
/// step-halving keeps the ordering and descends the energy.  Gradient
/// max-norm below 1e-10 on success.
ChargeConfiguration equilibrium(int n, const PotentialSpec& potential,
                                SeedLayout layout = SeedLayout::Chebyshev);

/// Max over j of |f''(x_j)/(2 f'(x_j)) - sum_{k != j} 1/(x_j - x_k)| for
/// f = prod (x - x_k).
double stieltjes_identity_check(const std::vector<double>& f_roots);

}  // namespace loggas

#endif
