#include "loggas/qhj.hpp"

#include "loggas/orthopoly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace loggas {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<Complex> polynomial_zeros(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  std::sort(out.begin(), out.end(), [](Complex u, Complex v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  return out;
}

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Nullspace vector of M at the smallest singular value; throws if M is far
// from singular.
Eigen::VectorXd nullspace(const Eigen::MatrixXd& M, const std::string& what) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) > 1e-10 * s(0))
    throw UnsupportedPotentialError("coefficient map not singular: " + what);
  return svd.matrixV().col(M.cols() - 1);
}

std::vector<double> real_nodes(const std::vector<Complex>& zeros,
                               const Interval& dom) {
  std::vector<double> nodes;
  for (Complex z : zeros) {
    if (std::abs(z.imag()) < 1e-8 && dom.contains(z.real()))
      nodes.push_back(z.real());
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

Complex MomentumFunction::operator()(Complex z) const {
  Complex p{0.0, 0.0};
  for (Complex zk : moving_poles) p += -kI / (z - zk);
  if (fixed_w) p += kI * fixed_w(z);
  return p;
}

Complex MomentumFunction::derivative(Complex z) const {
  Complex d{0.0, 0.0};
  for (Complex zk : moving_poles) d += kI / ((z - zk) * (z - zk));
  if (fixed_wp) d += kI * fixed_wp(z);
  return d;
}

void MomentumFunction::validate() const {
  for (size_t i = 0; i < moving_poles.size(); ++i)
    for (size_t j = i + 1; j < moving_poles.size(); ++j)
      if (std::abs(moving_poles[i] - moving_poles[j]) < 1e-12)
        throw GeometryError("moving poles must be simple");
}

MomentumFunction momentum_from_polynomial(const std::vector<double>& f_coeffs,
                                          PotentialSpec::ComplexFn fixed_w,
                                          PotentialSpec::ComplexFn fixed_wp,
                                          std::function<double(double)> wint) {
  MomentumFunction p;
  p.moving_poles = polynomial_zeros(f_coeffs);
  p.fixed_w = std::move(fixed_w);
  p.fixed_wp = std::move(fixed_wp);
  p.fixed_wint = std::move(wint);
  p.validate();
  return p;
}

Complex riccati_residual(const MomentumFunction& p, double E,
                         const PotentialSpec::ComplexFn& V, Complex x) {
  for (Complex zk : p.moving_poles)
    if (std::abs(x - zk) < 1e-9)
      throw GeometryError("riccati residual evaluated at a pole");
  const Complex pv = p(x);
  return pv * pv - kI * p.derivative(x) - (E - V(x));
}

Complex riccati_residual(const MomentumFunction& p, double E,
                         const PotentialSpec& potential, Complex x) {
  return riccati_residual(
      p, E, [&potential](Complex z) { return potential.V(z); }, x);
}

double BoundState::psi(double x) const {
  const double f = coeffs_in_t ? horner(f_coeffs, x * x) : horner(f_coeffs, x);
  return f * std::exp(-p.fixed_wint(x));
}

namespace {

BoundState make_state(const PotentialSpec& pot, int index, double energy,
                      std::vector<double> coeffs, bool in_t,
                      PotentialSpec::ComplexFn fixed_w,
                      PotentialSpec::ComplexFn fixed_wp,
                      std::function<double(double)> wint,
                      PotentialSpec::ComplexFn v_eff, double e_eff) {
  BoundState st;
  st.index = index;
  st.energy = energy;
  st.f_coeffs = std::move(coeffs);
  st.coeffs_in_t = in_t;
  st.potential = pot;
  std::vector<double> xcoeffs;
  if (in_t) {
    // y(t) with t = x^2 -> even polynomial in x
    xcoeffs.assign(2 * st.f_coeffs.size() - 1, 0.0);
    for (size_t i = 0; i < st.f_coeffs.size(); ++i)
      xcoeffs[2 * i] = st.f_coeffs[i];
  } else {
    xcoeffs = st.f_coeffs;
  }
  st.p = momentum_from_polynomial(xcoeffs, std::move(fixed_w),
                                  std::move(fixed_wp), std::move(wint));
  st.nodes = real_nodes(st.p.moving_poles, pot.domain());
  st.v_eff = std::move(v_eff);
  st.e_eff = e_eff;
  return st;
}

std::vector<BoundState> harmonic_spectrum(const PotentialSpec& pot,
                                          int n_max) {
  std::vector<BoundState> states;
  for (int n = 0; n <= n_max; ++n) {
    const double E = pot.factorization_energy() + 2.0 * n;  // 1, 3, 5, ...
    // f'' - 2x f' + (E - E0) f = 0 on coefficients a_0..a_n
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
      if (k + 2 <= n) M(k, k + 2) += (k + 2.0) * (k + 1.0);
      M(k, k) += -2.0 * k + (E - pot.factorization_energy());
    }
    Eigen::VectorXd f = nullspace(M, "harmonic n=" + std::to_string(n));
    f /= f(n);
    states.push_back(make_state(
        pot, n, E, std::vector<double>(f.data(), f.data() + n + 1), false,
        [pot](Complex z) { return pot.W(z); },
        [](Complex) { return Complex{1.0, 0.0}; },
        [pot](double x) { return pot.Wint(x); },
        [pot](Complex z) { return pot.V(z); }, E));
  }
  return states;
}

std::vector<BoundState> coulomb_spectrum(const PotentialSpec& pot,
                                         int n_max) {
  const double l = pot.params().at("l");
  std::vector<BoundState> states;
  for (int n = 0; n <= n_max; ++n) {
    const double lambda = n;
    // r f'' + (2(l+1) - r) f' + lambda f = 0
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
      if (k + 1 <= n) M(k, k + 1) += (k + 1.0) * (k + 2.0 * (l + 1.0));
      M(k, k) += lambda - k;
    }
    Eigen::VectorXd f = nullspace(M, "coulomb n=" + std::to_string(n));
    f /= f(n);
    // The scaled level problem has charge n+l+1 at fixed energy -1/4.
    const double zc = n + l + 1.0;
    states.push_back(make_state(
        pot, n, lambda, std::vector<double>(f.data(), f.data() + n + 1),
        false, [pot](Complex z) { return pot.W(z); },
        [pot, l](Complex z) { return (l + 1.0) / (z * z); },
        [pot](double x) { return pot.Wint(x); },
        [l, zc](Complex z) { return l * (l + 1.0) / (z * z) - zc / z; },
        -0.25));
  }
  return states;
}

std::vector<BoundState> oscillator3d_spectrum(const PotentialSpec& pot,
                                              int n_max) {
  const double l = pot.params().at("l");
  std::vector<BoundState> states;
  for (int k = 0; k <= n_max; ++k) {
    const int deg = 2 * k;  // even polynomials only
    const double E = pot.factorization_energy() + 2.0 * k;
    // x f'' + (2(l+1) - x^2) f' + (E - E0) x f = 0, rows 0..deg+1
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(deg + 2, deg + 1);
    for (int c = 0; c <= deg; ++c) {
      if (c >= 1) M(c - 1, c) += c * (c - 1.0) + 2.0 * (l + 1.0) * c;
      M(c + 1, c) += -c + (E - pot.factorization_energy());
    }
    Eigen::VectorXd f = nullspace(M, "oscillator3d k=" + std::to_string(k));
    f /= f(deg);
    states.push_back(make_state(
        pot, k, E, std::vector<double>(f.data(), f.data() + deg + 1), false,
        [pot](Complex z) { return pot.W(z); },
        [l](Complex z) { return 0.5 + (l + 1.0) / (z * z); },
        [pot](double x) { return pot.Wint(x); },
        [pot](Complex z) { return pot.V(z); }, E));
  }
  return states;
}

}  // namespace

std::vector<BoundState> polynomial_spectrum(const PotentialSpec& potential,
                                            int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  switch (potential.name()) {
    case PotentialName::HarmonicOscillator:
      return harmonic_spectrum(potential, n_max);
    case PotentialName::Coulomb:
      return coulomb_spectrum(potential, n_max);
    case PotentialName::Oscillator3D:
      return oscillator3d_spectrum(potential, n_max);
    case PotentialName::DeformedOscillator:
      break;  // handled below (declared in orthopoly to avoid a cycle)
    default:
      throw UnsupportedPotentialError(
          "polynomial-in-x quantization needs the mapped variable for " +
          to_string(potential.name()));
  }

  // Deformed oscillator: X1 route, state index k <-> polynomial degree k+1.
  const double g = potential.params().at("g");
  const double c = g + 0.5;
  std::vector<BoundState> states;
  for (int k = 0; k <= n_max; ++k) {
    ExceptionalSolution sol = solve_exceptional(g, k + 1);
    const double E = sol.energy;
    states.push_back(make_state(
        potential, k, E, std::move(sol.coeffs), true,
        [g, c](Complex z) {
          return z - (g + 1.0) / z + 2.0 * z / (z * z + c);
        },
        [g, c](Complex z) {
          const Complex d = z * z + c;
          return 1.0 + (g + 1.0) / (z * z) + 2.0 * (c - z * z) / (d * d);
        },
        [g, c](double x) {
          return 0.5 * x * x - (g + 1.0) * std::log(x) +
                 std::log(x * x + c);
        },
        [potential](Complex z) { return potential.V(z); }, E));
  }
  return states;
}

double quantization_integral(const MomentumFunction& p,
                             const Rectangle& contour, int nodes) {
  nodes = std::max(nodes, 4096);
  const Complex corners[5] = {
      contour.lo, {contour.hi.real(), contour.lo.imag()}, contour.hi,
      {contour.lo.real(), contour.hi.imag()}, contour.lo};
  // pole-distance check against the whole boundary
  for (Complex zk : p.moving_poles) {
    const double dx = std::max({contour.lo.real() - zk.real(),
                                zk.real() - contour.hi.real(), 0.0});
    const double dy = std::max({contour.lo.imag() - zk.imag(),
                                zk.imag() - contour.hi.imag(), 0.0});
    const bool inside = dx == 0.0 && dy == 0.0;
    double dist;
    if (inside) {
      dist = std::min({zk.real() - contour.lo.real(),
                       contour.hi.real() - zk.real(),
                       zk.imag() - contour.lo.imag(),
                       contour.hi.imag() - zk.imag()});
    } else {
      dist = std::hypot(dx, dy);
    }
    if (dist < 1e-3)
      throw GeometryError("contour passes within 1e-3 of a moving pole");
  }

  const int per_edge = (nodes + 3) / 4;
  Complex integral{0.0, 0.0};
  for (int e = 0; e < 4; ++e) {
    const Complex a = corners[e], b = corners[e + 1];
    const Complex dz = (b - a) / static_cast<double>(per_edge);
    Complex prev = p(a);
    for (int i = 1; i <= per_edge; ++i) {
      const Complex cur = p(a + dz * static_cast<double>(i));
      integral += 0.5 * (prev + cur) * dz;
      prev = cur;
    }
  }
  return (integral / (2.0 * M_PI)).real();
}

double burgers_residual(const std::vector<std::vector<Complex>>& pole_traj,
                        double dt, const PotentialSpec* potential,
                        const std::vector<double>& probe_points) {
  if (pole_traj.size() < 2)
    throw std::invalid_argument("need at least two trajectory steps");
  auto build = [&](const std::vector<Complex>& poles) {
    MomentumFunction p;
    p.moving_poles = poles;
    if (potential) {
      p.fixed_w = [potential](Complex z) { return potential->W(z); };
    }
    p.validate();
    return p;
  };

  double worst = 0.0;
  for (size_t s = 0; s + 1 < pole_traj.size(); ++s) {
    const MomentumFunction p0 = build(pole_traj[s]);
    const MomentumFunction p1 = build(pole_traj[s + 1]);
    for (double x : probe_points) {
      const Complex z{x, 0.0};
      for (Complex zk : p0.moving_poles)
        if (std::abs(z - zk) < 1e-6)
          throw PoleCollisionError("probe point on a pole", s * dt);
      const Complex pt = (p1(z) - p0(z)) / dt;
      // p_x and p_xx analytically; fixed-part second derivative via the
      // pole sum only is exact for the entire fixed parts used here.
      Complex px{0.0, 0.0}, pxx{0.0, 0.0};
      for (Complex zk : p0.moving_poles) {
        const Complex d = z - zk;
        px += kI / (d * d);
        pxx += -2.0 * kI / (d * d * d);
      }
      if (potential) {
        // numerical derivative of W on the real axis (h chosen for the
        // smooth catalog superpotentials)
        const double h = 1e-5;
        px += kI * (potential->W(x + h) - potential->W(x - h)) / (2.0 * h);
        pxx += kI *
               (potential->W(x + h) - 2.0 * potential->W(x) +
                potential->W(x - h)) /
               (h * h);
      }
      Complex rhs = p0(z) * px - 0.5 * kI * pxx;
      if (potential) rhs += 0.5 * potential->Vp(x);
      worst = std::max(worst, std::abs(pt - rhs));
    }
  }
  return worst;
}

}  // namespace loggas
