#ifndef LOGGAS_ENSEMBLES_HPP
#define LOGGAS_ENSEMBLES_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "loggas/orthopoly.hpp"
#include "loggas/potentials.hpp"

namespace loggas {

/// Sorted eigenvalues of one sampled Gaussian matrix.  The (seed, stream)
/// pair fully determines the draw; resampling reproduces it bit-identically.
struct SpectrumSample {
  int dim = 0;
  int beta = 1;  // 1 or 2 sampled; 4 accepted for JPDF evaluation only
  std::vector<double> eigenvalues;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Entry scaling: beta=1 diagonal variance 1, off-diagonal 1/2 (eigenvalue
/// JPDF ~ |Delta| e^{-sum x^2/2}); beta=2 diagonal variance 1/2, complex
/// off-diagonals with variance 1/4 per part (JPDF ~ |Delta|^2 e^{-sum x^2}).
SpectrumSample sample_gaussian(int dim, int beta, std::uint64_t seed,
                               std::uint64_t stream = 0);

/// Unnormalized log density -beta [ sum V(x_j) - sum_{i<j} ln|x_i-x_j| ].
/// Coincident entries return -infinity.
double joint_log_pdf(const std::vector<double>& x, int beta,
                     const std::function<double(double)>& V);
/// PotentialSpec overload: V is the gas confinement (antiderivative of W).
double joint_log_pdf(const std::vector<double>& x, int beta,
                     const PotentialSpec& potential);

/// Factorized form prod w(x_i)^(1/2) * prod_{i<j} |x_i - x_j|.
double factorized_pdf(const std::vector<double>& x,
                      const PolynomialFamily& fam);

/// prod_{k>j} (x_k - x_j) * prod_i exp(-Wint(x_i)).
double product_wavefunction(const std::vector<double>& x,
                            const PotentialSpec& potential);

struct Histogram {
  std::vector<double> edges;    // bins + 1 entries
  std::vector<double> density;  // normalized to unit integral
  std::size_t count = 0;
};

struct SpectralStatistics {
  Histogram density;   // eigenvalue density
  Histogram spacing;   // nearest-neighbor spacings / mean spacing
  double mean_spacing = 0.0;
};

/// Pooled histograms over samples of uniform (dim, beta).
SpectralStatistics spectral_statistics(
    const std::vector<SpectrumSample>& samples, int density_bins = 60,
    int spacing_bins = 40);

}  // namespace loggas

#endif
