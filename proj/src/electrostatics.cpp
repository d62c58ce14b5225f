#include "loggas/electrostatics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace loggas {

void ChargeConfiguration::validate() const {
  if (positions.empty())
    throw SingularConfigError("empty charge configuration");
  for (size_t i = 0; i + 1 < positions.size(); ++i) {
    if (!(positions[i] < positions[i + 1]))
      throw SingularConfigError("positions must be strictly increasing");
  }
  for (double x : positions) {
    if (!potential.domain().contains(x))
      throw SingularConfigError("position outside potential domain");
  }
}

double energy(const ChargeConfiguration& cfg) {
  cfg.validate();
  const auto& x = cfg.positions;
  double e = 0.0;
  for (double xi : x) e += cfg.potential.Wint(xi);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      e -= std::log(std::abs(x[i] - x[j]));
  return e;
}

std::vector<double> gradient(const ChargeConfiguration& cfg) {
  cfg.validate();
  const auto& x = cfg.positions;
  const size_t n = x.size();
  std::vector<double> g(n);
  for (size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (size_t j = 0; j < n; ++j)
      if (j != k) s += 1.0 / (x[k] - x[j]);
    g[k] = cfg.potential.W(x[k]) - s;
  }
  return g;
}

namespace {

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool ordered_in_domain(const std::vector<double>& x, const Interval& dom) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (!dom.contains(x[i])) return false;
    if (i + 1 < x.size() && !(x[i] < x[i + 1])) return false;
  }
  return true;
}

// Seed interval per catalog shape; spans bracket the known equilibrium
// supports (Hermite-type ~ sqrt(2n), Laguerre-type ~ 4n).
std::pair<double, double> seed_span(int n, const PotentialSpec& pot) {
  const double dn = n;
  switch (pot.name()) {
    case PotentialName::HarmonicOscillator: {
      const double s = std::sqrt(2.0 * dn + 1.0) + 0.5;
      return {-s, s};
    }
    case PotentialName::Coulomb: {
      const double a = 2.0 * pot.params().at("l") + 1.0;
      return {0.4, 4.0 * dn + 2.0 * a + 4.0};
    }
    case PotentialName::Oscillator3D:
    case PotentialName::DeformedOscillator: {
      const double s = std::sqrt(4.0 * dn + 6.0) + 1.0;
      return {0.2, s};
    }
    case PotentialName::Morse: {
      const double A = pot.params().at("A");
      const double B = pot.params().at("B");
      const double a = pot.params().at("alpha");
      const double x0 = -std::log(A / B) / a;  // W(x0) = 0
      return {x0 - 2.0 / a, x0 + (dn + 2.0) / a};
    }
    case PotentialName::Scarf: {
      const double a = pot.params().at("alpha");
      const double hi = 0.5 * M_PI / a;
      return {0.05 * hi, 0.95 * hi};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<double> seed_positions(int n, const PotentialSpec& pot,
                                   SeedLayout layout, double widen) {
  auto [lo, hi] = seed_span(n, pot);
  const double mid = 0.5 * (lo + hi);
  lo = mid - (mid - lo) * widen;
  hi = mid + (hi - mid) * widen;
  if (pot.domain().lo >= 0.0 && lo <= pot.domain().lo)
    lo = pot.domain().lo + 0.05 * (hi - pot.domain().lo);
  if (std::isfinite(pot.domain().hi) && hi >= pot.domain().hi)
    hi = pot.domain().hi - 0.02 * (pot.domain().hi - lo);
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) {
    if (layout == SeedLayout::Chebyshev) {
      const double t = std::cos(M_PI * (2.0 * (n - k) - 1.0) / (2.0 * n));
      x[k] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
    } else {
      x[k] = n == 1 ? 0.5 * (lo + hi)
                    : lo + (hi - lo) * k / static_cast<double>(n - 1);
    }
  }
  return x;
}

}  // namespace

ChargeConfiguration equilibrium(int n, const PotentialSpec& potential,
                                SeedLayout layout) {
  if (n < 1) throw std::invalid_argument("equilibrium requires n >= 1");
  constexpr double kTol = 1e-10;
  constexpr int kMaxIter = 200;

  ChargeConfiguration cfg;
  cfg.potential = potential;

  for (double widen : {1.0, 0.6, 1.8}) {
    cfg.positions = seed_positions(n, potential, layout, widen);
    double e = energy(cfg);
    std::vector<double> g = gradient(cfg);
    bool stuck = false;
    for (int iter = 0; iter < kMaxIter && !stuck; ++iter) {
      if (max_norm(g) < kTol) return cfg;
      const auto& x = cfg.positions;
      Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
      Eigen::VectorXd rhs(n);
      for (int k = 0; k < n; ++k) {
        double diag = potential.Wp(x[k]);
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          const double inv2 = 1.0 / ((x[k] - x[j]) * (x[k] - x[j]));
          diag += inv2;
          J(k, j) = -inv2;
        }
        J(k, k) = diag;
        rhs(k) = -g[k];
      }
      const Eigen::VectorXd d = J.partialPivLu().solve(rhs);

      double alpha = 1.0;
      stuck = true;
      for (int h = 0; h < 40; ++h, alpha *= 0.5) {
        std::vector<double> xnew(x);
        for (int k = 0; k < n; ++k) xnew[k] += alpha * d(k);
        if (!ordered_in_domain(xnew, potential.domain())) continue;
        ChargeConfiguration trial = cfg;
        trial.positions = std::move(xnew);
        const double enew = energy(trial);
        std::vector<double> gnew = gradient(trial);
        if (enew < e || max_norm(gnew) < max_norm(g)) {
          cfg = std::move(trial);
          e = enew;
          g = std::move(gnew);
          stuck = false;
          break;
        }
      }
    }
    if (!stuck && max_norm(g) < kTol) return cfg;
  }
  const auto g = gradient(cfg);
  throw ConvergenceError("equilibrium did not converge", cfg.positions,
                         max_norm(g));
}

double stieltjes_identity_check(const std::vector<double>& f_roots) {
  const size_t n = f_roots.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (f_roots[i] == f_roots[j])
        throw SingularConfigError("repeated roots");

  // f = prod (x - x_k) expanded, then f', f'' by Horner.
  std::vector<double> c{1.0};
  for (double r : f_roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  auto deriv = [](const std::vector<double>& p) {
    std::vector<double> d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = i * p[i];
    return d;
  };
  auto horner = [](const std::vector<double>& p, double x) {
    double v = 0.0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
  };
  const auto d1 = deriv(c);
  const auto d2 = deriv(d1);

  double worst = 0.0;
  for (size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (size_t k = 0; k < n; ++k)
      if (k != j) s += 1.0 / (f_roots[j] - f_roots[k]);
    const double lhs = n >= 2
        ? horner(d2, f_roots[j]) / (2.0 * horner(d1, f_roots[j]))
        : 0.0;
    worst = std::max(worst, std::abs(lhs - s));
  }
  return worst;
}

}  // namespace loggas
