#include "loggas/dyson.hpp"

#include <algorithm>
#include <cmath>

#include "loggas/qhj.hpp"

namespace loggas {

std::vector<double> drift(const GasTrajectoryState& state) {
  const auto& x = state.positions;
  const size_t n = x.size();
  std::vector<double> d(n);
  for (size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (size_t k = 0; k < n; ++k)
      if (k != j) s += 1.0 / (x[j] - x[k]);
    d[j] = s - state.potential.W(x[j]);
  }
  return d;
}

namespace {

bool valid_positions(const std::vector<double>& x, const Interval& dom) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (!dom.contains(x[i])) return false;
    if (i + 1 < x.size() && !(x[i] < x[i + 1])) return false;
  }
  return true;
}

}  // namespace

GasTrajectoryState step(const GasTrajectoryState& state, double dt,
                        std::mt19937_64& rng, double noise_scale) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const size_t n = state.positions.size();
  const std::vector<double> d = drift(state);
  const double sigma = noise_scale * std::sqrt(2.0 / state.beta);
  std::normal_distribution<double> normal(0.0, 1.0);

  GasTrajectoryState next = state;
  for (int resample = 0; resample < 32; ++resample) {
    std::vector<double> noise(n);
    for (double& z : noise) z = normal(rng);
    double h = dt;
    for (int halve = 0; halve <= 12; ++halve, h *= 0.5) {
      std::vector<double> xnew(n);
      const double sq = std::sqrt(h);
      for (size_t j = 0; j < n; ++j)
        xnew[j] = state.positions[j] + d[j] * h + sigma * sq * noise[j];
      if (valid_positions(xnew, state.potential.domain())) {
        next.positions = std::move(xnew);
        next.time = state.time + h;
        next.halvings += halve;
        next.bounces += resample;
        return next;
      }
    }
  }
  throw StepUnderflowError("dt underflow after repeated halving/resampling");
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

std::vector<PoleTrajectoryState> pole_dynamics(
    const std::vector<std::complex<double>>& initial,
    const PotentialSpec* potential, double dt, int steps, int record_every) {
  using C = std::complex<double>;
  const C kI{0.0, 1.0};
  const size_t n = initial.size();

  auto velocity = [&](const std::vector<C>& z, double t) {
    std::vector<C> v(n);
    for (size_t k = 0; k < n; ++k) {
      C s{0.0, 0.0};
      for (size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const C d = z[k] - z[j];
        if (std::abs(d) < 1e-8)
          throw PoleCollisionError("pole collision", t);
        s += kI / d;
      }
      if (potential) s -= kI * potential->W(z[k]);
      v[k] = s;
    }
    return v;
  };

  std::vector<PoleTrajectoryState> out;
  std::vector<C> z = initial;
  out.push_back({0.0, z});
  for (int s = 1; s <= steps; ++s) {
    const double t = (s - 1) * dt;
    const std::vector<C> k1 = velocity(z, t);
    std::vector<C> tmp(n);
    for (size_t i = 0; i < n; ++i) tmp[i] = z[i] + 0.5 * dt * k1[i];
    const std::vector<C> k2 = velocity(tmp, t + 0.5 * dt);
    for (size_t i = 0; i < n; ++i) tmp[i] = z[i] + 0.5 * dt * k2[i];
    const std::vector<C> k3 = velocity(tmp, t + 0.5 * dt);
    for (size_t i = 0; i < n; ++i) tmp[i] = z[i] + dt * k3[i];
    const std::vector<C> k4 = velocity(tmp, t + dt);
    for (size_t i = 0; i < n; ++i)
      z[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (s % record_every == 0 || s == steps)
      out.push_back({s * dt, z});
  }
  return out;
}

}  // namespace loggas
