// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Mirrors the cross-validation contract of the library: every
// numerical claim is checked against an independent oracle.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "loggas/dyson.hpp"
#include "loggas/electrostatics.hpp"
#include "loggas/ensembles.hpp"
#include "loggas/orthopoly.hpp"
#include "loggas/qhj.hpp"

using namespace loggas;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d (%s): %s  [%.1f s]\n", ok ? "PASS" : "FAIL",
              idx, name, detail.c_str(), seconds);
  if (!ok) ++g_failures;
}

double semicircle_cdf(double x) {
  if (x <= -1) return 0;
  if (x >= 1) return 1;
  return 0.5 + (x * std::sqrt(1 - x * x) + std::asin(x)) / M_PI;
}

// 1. equilibrium positions vs classical polynomial roots
void criterion1() {
  auto t0 = Clock::now();
  double worst = 0;
  auto h = make_potential(PotentialName::HarmonicOscillator);
  for (int n = 2; n <= 50; ++n) {
    auto eq = equilibrium(n, h);
    auto r = roots(PolynomialFamily::hermite(n), n);
    for (int k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(eq.positions[k] - r[k]));
  }
  for (double l : {0.0, 1.0, 2.0}) {
    auto c = make_potential(PotentialName::Coulomb, {{"l", l}});
    for (int n = 1; n <= 30; ++n) {
      auto eq = equilibrium(n, c);
      auto r = roots(PolynomialFamily::laguerre(2 * l + 1, n), n);
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(eq.positions[k] - r[k]));
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max deviation %.3e (< 1e-8)", worst);
  report(1, "equilibrium vs roots", worst < 1e-8 && dt < 30.0, buf, dt);
}

// 2. Stieltjes identity on random root sets
void criterion2() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> nn(2, 20);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = nn(rng);
    std::vector<double> r;
    while ((int)r.size() < n) {
      double x = u(rng);
      bool ok = true;
      for (double y : r)
        if (std::abs(x - y) < 0.05) ok = false;
      if (ok) r.push_back(x);
    }
    worst = std::max(worst, stieltjes_identity_check(r));
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max residual %.3e (< 1e-10)", worst);
  report(2, "Stieltjes identity", worst < 1e-10 && dt < 5.0, buf, dt);
}

// 3. polynomial quantization spectra + Riccati residuals
void criterion3() {
  auto t0 = Clock::now();
  double spacing_err = 0, lambda_err = 0, res = 0;
  auto h = make_potential(PotentialName::HarmonicOscillator);
  auto hs = polynomial_spectrum(h, 20);
  for (int n = 0; n <= 20; ++n) {
    spacing_err = std::max(spacing_err, std::abs(hs[n].energy - (1.0 + 2 * n)));
    for (int i = 0; i < 64; ++i) {
      Complex x(-6.0 + 12.0 * i / 63.0, 0.4);
      res = std::max(res, std::abs(riccati_residual(hs[n].p, hs[n].e_eff,
                                                    hs[n].v_eff, x)));
    }
  }
  for (double l : {0.0, 1.0}) {
    auto c = make_potential(PotentialName::Coulomb, {{"l", l}});
    auto cs = polynomial_spectrum(c, 20);
    for (int n = 0; n <= 20; ++n) {
      lambda_err = std::max(lambda_err, std::abs(cs[n].energy - n));
      for (int i = 0; i < 64; ++i) {
        Complex r(0.25 + 100.0 * i / 63.0, 0.4);
        res = std::max(res, std::abs(riccati_residual(cs[n].p, cs[n].e_eff,
                                                      cs[n].v_eff, r)));
      }
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "spacing err %.2e, lambda err %.2e, max residual %.2e",
                spacing_err, lambda_err, res);
  report(3, "QHJ quantization",
         spacing_err < 1e-10 && lambda_err < 1e-10 && res < 1e-8 && dt < 10.0,
         buf, dt);
}

// 4. contour quantization counts enclosed poles
void criterion4() {
  auto t0 = Clock::now();
  auto h = make_potential(PotentialName::HarmonicOscillator);
  auto states = polynomial_spectrum(h, 10);
  double worst = 0;
  for (int n = 0; n <= 10; ++n) {
    const auto& st = states[n];
    double span = 1.0;
    for (double z : st.nodes) span = std::max(span, std::abs(z) + 1.0);
    std::vector<Rectangle> contours = {
        {Complex(-span, -0.8), Complex(span, 0.8)},
        {Complex(span + 1, -0.5), Complex(span + 2, 0.5)},
    };
    // third contour: a box cut at a node midpoint, enclosing only part of
    // the pole set
    double cut;
    if (n == 0)
      cut = 0.3;
    else if (n == 1)
      cut = st.nodes[0] + 0.5;
    else
      cut = (st.nodes[0] + st.nodes[1]) / 2;
    contours.push_back({Complex(-span, -0.6), Complex(cut, 0.6)});
    for (const auto& c : contours) {
      int expect = 0;
      for (double z : st.nodes)
        if (z > c.lo.real() && z < c.hi.real()) ++expect;
      worst = std::max(worst,
                       std::abs(quantization_integral(st.p, c) - expect));
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max count deviation %.3e (< 1e-6)", worst);
  report(4, "contour quantization", worst < 1e-6 && dt < 10.0, buf, dt);
}

// 5. product wavefunction squared vs beta=2 JPDF
void criterion5() {
  auto t0 = Clock::now();
  auto h = make_potential(PotentialName::HarmonicOscillator);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  std::uniform_int_distribution<int> nn(2, 10);
  double worst = 0;
  // log-ratio of pw^2 to the beta=2 JPDF is configuration independent for
  // fixed n; across n it shifts by normalization, so compare within n
  std::vector<double> ref(11, 0.0);
  std::vector<bool> seen(11, false);
  int done = 0;
  while (done < 50) {
    int n = nn(rng);
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (int i = 1; i < n; ++i)
      if (x[i] - x[i - 1] < 0.02) ok = false;
    if (!ok) continue;
    double lr = 2 * std::log(std::abs(product_wavefunction(x, h))) -
                joint_log_pdf(x, 2, h);
    if (!seen[n]) {
      ref[n] = lr;
      seen[n] = true;
    } else {
      worst = std::max(worst, std::abs(lr - ref[n]));
    }
    ++done;
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max log-ratio spread %.3e (< 1e-10)", worst);
  report(5, "RPDF as wave function", worst < 1e-10, buf, dt);
}

// 6. Fokker-Planck stationarity via KS
void criterion6() {
  auto t0 = Clock::now();
  auto h = make_potential(PotentialName::HarmonicOscillator);
  const int n = 8;
  double worst = 0;
  for (std::uint64_t seed : {101ull, 202ull, 303ull}) {
    std::mt19937_64 rng(seed);
    auto eq = equilibrium(n, h);
    GasTrajectoryState st;
    st.positions = eq.positions;
    st.beta = 1;
    st.potential = h;
    const double dt = 0.005;
    for (int k = 0; k < 10000; ++k) st = step(st, dt, rng);  // burn-in
    std::vector<double> pooled;
    while (pooled.size() < 10000) {
      for (int k = 0; k < 60; ++k) st = step(st, dt, rng);  // thin
      pooled.insert(pooled.end(), st.positions.begin(), st.positions.end());
    }
    std::vector<double> direct;
    int s = 0;
    while (direct.size() < 10000) {
      auto e = sample_gaussian(n, 1, seed, 1000 + s++).eigenvalues;
      direct.insert(direct.end(), e.begin(), e.end());
    }
    worst = std::max(worst, ks_distance(pooled, direct));
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max KS distance %.4f (< 0.03)", worst);
  report(6, "Fokker-Planck stationarity", worst < 0.03 && dt < 120.0, buf, dt);
}

// 7. sampling sanity: semicircle bulk + 2x2 spacing law
void criterion7() {
  auto t0 = Clock::now();
  const int dim = 200, count = 500;
  std::vector<double> eigs;
  eigs.reserve((size_t)dim * count);
  for (int i = 0; i < count; ++i) {
    auto s = sample_gaussian(dim, 1, 77, i);
    eigs.insert(eigs.end(), s.eigenvalues.begin(), s.eigenvalues.end());
  }
  std::sort(eigs.begin(), eigs.end());
  const double radius = std::sqrt(2.0 * dim);
  double sup = 0;
  for (double x = -0.8; x <= 0.8; x += 0.004) {
    double emp = (double)(std::upper_bound(eigs.begin(), eigs.end(),
                                           x * radius) -
                          eigs.begin()) /
                 eigs.size();
    sup = std::max(sup, std::abs(emp - semicircle_cdf(x)));
  }

  // 2x2 spacing: Monte Carlo mean vs quadrature of the closed-form density
  double mean_mc = 0;
  const int N = 100000;
  for (int i = 0; i < N; ++i) {
    auto e = sample_gaussian(2, 1, 123, i).eigenvalues;
    mean_mc += e[1] - e[0];
  }
  mean_mc /= N;
  auto q = gauss_legendre(400, 0.0, 40.0);
  double mean_quad = 0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    double s = q.nodes[i];
    mean_quad += q.weights[i] * s * (s / 2.0) * std::exp(-s * s / 4.0);
  }
  double rel = std::abs(mean_mc - mean_quad) / mean_quad;
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "semicircle sup-dist %.4f (< 0.05), 2x2 spacing rel err %.4f "
                "(< 0.02)",
                sup, rel);
  report(7, "sampling sanity", sup < 0.05 && rel < 0.02 && dt < 120.0, buf,
         dt);
}

// 8. X1 exceptional Laguerre states
void criterion8() {
  auto t0 = Clock::now();
  double ode_worst = 0, orth_worst = 0;
  bool positive = true;
  for (double g : {1.0, 2.0}) {
    double c = g + 0.5;
    std::vector<ExceptionalSolution> sols;
    for (int n = 1; n <= 6; ++n) sols.push_back(solve_exceptional(g, n));
    for (const auto& sol : sols) {
      int n = sol.degree;
      for (int i = 1; i <= 50; ++i) {
        double t = 0.6 * i;
        double y = 0, yp = 0, ypp = 0;
        for (int k = n; k >= 0; --k) {
          ypp = ypp * t + 2 * yp;
          yp = yp * t + y;
          y = y * t + sol.coeffs[k];
        }
        double r = t * (t + c) * ypp + (c - t) * (c + t + 1) * yp +
                   0.125 * (2 * sol.energy * (t + c) + (2 - 4 * g) * t -
                            (4 * g * g + 16 * g + 7)) *
                       y;
        double scale = std::max({std::abs(t * (t + c) * ypp),
                                 std::abs((c - t) * (c + t + 1) * yp),
                                 std::abs(y) * t * t, 1.0});
        ode_worst = std::max(ode_worst, std::abs(r) / scale);
      }
    }
    auto q = gauss_legendre(800, 1e-9, 18.0 + 2 * g);
    for (size_t a = 0; a < sols.size(); ++a)
      for (size_t b = a + 1; b < sols.size(); ++b) {
        double s = 0;
        for (size_t i = 0; i < q.nodes.size(); ++i)
          s += q.weights[i] * sols[a].psi(q.nodes[i]) * sols[b].psi(q.nodes[i]);
        orth_worst = std::max(orth_worst, std::abs(s));
      }
    for (double x = 0; x <= 50.0; x += 0.1)
      positive = positive && (x * x + g + 0.5 > 0);
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "ODE residual %.2e (< 1e-8), orthogonality %.2e (< 1e-6), "
                "denominator positive: %s",
                ode_worst, orth_worst, positive ? "yes" : "no");
  report(8, "exceptional Laguerre",
         ode_worst < 1e-8 && orth_worst < 1e-6 && positive && dt < 10.0, buf,
         dt);
}

// 9. drift = -gradient
void criterion9() {
  auto t0 = Clock::now();
  auto h = make_potential(PotentialName::HarmonicOscillator);
  auto c = make_potential(PotentialName::Coulomb, {{"l", 1.0}});
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> nn(2, 12);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& pot = (trial % 2) ? c : h;
    int n = nn(rng);
    std::vector<double> x(n);
    double base = (trial % 2) ? 0.3 : -3.0;
    for (int i = 0; i < n; ++i) {
      base += 0.1 + u(rng);
      x[i] = base;
    }
    ChargeConfiguration cfg;
    cfg.positions = x;
    cfg.potential = pot;
    auto g = gradient(cfg);
    GasTrajectoryState st;
    st.positions = x;
    st.potential = pot;
    auto d = drift(st);
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(d[i] + g[i]));
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |drift + gradient| %.3e (< 1e-14)",
                worst);
  report(9, "drift vs gradient", worst < 1e-14, buf, dt);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
