#include "loggas/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace loggas {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

void check_interval(const PolynomialFamily& fam, double x) {
  bool ok = true;
  switch (fam.family) {
    case Family::Hermite: break;
    case Family::Laguerre:
    case Family::ExceptionalLaguerre: ok = x >= 0.0; break;
    case Family::Jacobi: ok = x >= -1.0 && x <= 1.0; break;
  }
  if (!ok) throw std::invalid_argument("entry outside the family interval");
}

}  // namespace

SpectrumSample sample_gaussian(int dim, int beta, std::uint64_t seed,
                               std::uint64_t stream) {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (beta != 1 && beta != 2)
    throw std::invalid_argument("sampling supports beta = 1 or 2 only");
  std::mt19937_64 rng = make_rng(seed, stream);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::VectorXd eigs(dim);
  if (beta == 1) {
    Eigen::MatrixXd A(dim, dim);
    for (int i = 0; i < dim; ++i) {
      A(i, i) = normal(rng);
      for (int j = i + 1; j < dim; ++j) {
        A(i, j) = A(j, i) = normal(rng) * M_SQRT1_2;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A,
                                                      Eigen::EigenvaluesOnly);
    eigs = es.eigenvalues();
  } else {
    Eigen::MatrixXcd A(dim, dim);
    for (int i = 0; i < dim; ++i) {
      A(i, i) = normal(rng) * M_SQRT1_2;
      for (int j = i + 1; j < dim; ++j) {
        const std::complex<double> z{normal(rng) * 0.5, normal(rng) * 0.5};
        A(i, j) = z;
        A(j, i) = std::conj(z);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A,
                                                       Eigen::EigenvaluesOnly);
    eigs = es.eigenvalues();
  }

  SpectrumSample s;
  s.dim = dim;
  s.beta = beta;
  s.seed = seed;
  s.stream = stream;
  s.eigenvalues.assign(eigs.data(), eigs.data() + dim);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

double joint_log_pdf(const std::vector<double>& x, int beta,
                     const std::function<double(double)>& V) {
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be 1, 2 or 4");
  double w = 0.0;
  for (double xi : x) w += V(xi);
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) return -std::numeric_limits<double>::infinity();
      w -= std::log(std::abs(x[i] - x[j]));
    }
  }
  return -beta * w;
}

double joint_log_pdf(const std::vector<double>& x, int beta,
                     const PotentialSpec& potential) {
  return joint_log_pdf(
      x, beta, [&potential](double t) { return potential.Wint(t); });
}

double factorized_pdf(const std::vector<double>& x,
                      const PolynomialFamily& fam) {
  double p = 1.0;
  for (double xi : x) {
    check_interval(fam, xi);
    p *= std::sqrt(weight(fam, xi));
  }
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      p *= std::abs(x[i] - x[j]);
  return p;
}

double product_wavefunction(const std::vector<double>& x,
                            const PotentialSpec& potential) {
  double v = 1.0;
  for (size_t j = 0; j < x.size(); ++j) {
    if (!potential.domain().contains(x[j]))
      throw std::invalid_argument("entry outside the potential domain");
    v *= std::exp(-potential.Wint(x[j]));
    for (size_t k = j + 1; k < x.size(); ++k) v *= x[k] - x[j];
  }
  return v;
}

namespace {

Histogram histogram(const std::vector<double>& data, double lo, double hi,
                    int bins) {
  Histogram h;
  h.count = data.size();
  h.edges.resize(bins + 1);
  h.density.assign(bins, 0.0);
  if (lo >= hi) {  // degenerate support
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + i * width;
  for (double x : data) {
    int b = static_cast<int>((x - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    h.density[b] += 1.0;
  }
  if (!data.empty()) {
    for (double& d : h.density) d /= data.size() * width;
  }
  return h;
}

}  // namespace

SpectralStatistics spectral_statistics(
    const std::vector<SpectrumSample>& samples, int density_bins,
    int spacing_bins) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  const int dim = samples.front().dim;
  const int beta = samples.front().beta;
  for (const auto& s : samples) {
    if (s.dim != dim || s.beta != beta)
      throw std::invalid_argument("mixed-ensemble input rejected");
  }

  std::vector<double> pooled;
  std::vector<double> spacings;
  pooled.reserve(samples.size() * dim);
  for (const auto& s : samples) {
    pooled.insert(pooled.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    for (int i = 0; i + 1 < dim; ++i)
      spacings.push_back(s.eigenvalues[i + 1] - s.eigenvalues[i]);
  }

  SpectralStatistics out;
  const auto [mn, mx] = std::minmax_element(pooled.begin(), pooled.end());
  out.density = histogram(pooled, *mn, *mx, density_bins);

  double mean = 0.0;
  for (double s : spacings) mean += s;
  mean = spacings.empty() ? 1.0 : mean / spacings.size();
  out.mean_spacing = mean;
  for (double& s : spacings) s /= mean;
  out.spacing = histogram(spacings, 0.0, 4.0, spacing_bins);
  return out;
}

}  // namespace loggas
