#include "loggas/orthopoly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace loggas {

namespace {

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1},
// b_k > 0 for k >= 1.  These coefficients define both the evaluation and
// the symmetric tridiagonal (Jacobi) matrix whose eigenvalues are roots.
struct Recurrence {
  std::vector<double> a;  // a_0 .. a_{n-1}
  std::vector<double> b;  // b_1 .. b_{n-1} (index shifted by one)
};

Recurrence recurrence(const PolynomialFamily& fam, int n) {
  Recurrence r;
  r.a.resize(n);
  if (n > 1) r.b.resize(n - 1);
  switch (fam.family) {
    case Family::Hermite:
      for (int k = 0; k < n; ++k) r.a[k] = 0.0;
      for (int k = 1; k < n; ++k) r.b[k - 1] = 0.5 * k;
      break;
    case Family::Laguerre:
      for (int k = 0; k < n; ++k) r.a[k] = 2.0 * k + fam.a + 1.0;
      for (int k = 1; k < n; ++k) r.b[k - 1] = k * (k + fam.a);
      break;
    case Family::Jacobi: {
      // Standard coefficients for weight (1-x)^al (1+x)^be with
      // al = fam.b, be = fam.a.
      const double al = fam.b, be = fam.a;
      const double s = al + be;
      r.a[0] = (be - al) / (s + 2.0);
      for (int k = 1; k < n; ++k) {
        const double d = 2.0 * k + s;
        r.a[k] = (be * be - al * al) / (d * (d + 2.0));
      }
      if (n > 1)
        r.b[0] = 4.0 * (1.0 + al) * (1.0 + be) /
                 ((2.0 + s) * (2.0 + s) * (3.0 + s));
      for (int k = 2; k < n; ++k) {
        const double d = 2.0 * k + s;
        r.b[k - 1] = 4.0 * k * (k + al) * (k + be) * (k + s) /
                     (d * d * (d + 1.0) * (d - 1.0));
      }
      break;
    }
    case Family::ExceptionalLaguerre:
      throw std::invalid_argument(
          "exceptional family has no classical recurrence");
  }
  return r;
}

double hermite_eval(int n, double x) {
  if (n == 0) return 1.0;
  double pm = 1.0, p = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * p - 2.0 * k * pm;
    pm = p;
    p = next;
  }
  return p;
}

double laguerre_eval(int n, double a, double x) {
  if (n == 0) return 1.0;
  double pm = 1.0, p = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + a + 1.0 - x) * p - (k + a) * pm) / (k + 1.0);
    pm = p;
    p = next;
  }
  return p;
}

double jacobi_eval(int n, double al, double be, double x) {
  if (n == 0) return 1.0;
  double pm = 1.0, p = 0.5 * (al - be + (al + be + 2.0) * x);
  for (int k = 1; k < n; ++k) {
    const double a1 = 2.0 * (k + 1.0) * (k + al + be + 1.0) *
                      (2.0 * k + al + be);
    const double a2 = (2.0 * k + al + be + 1.0) * (al * al - be * be);
    const double a3 = (2.0 * k + al + be) * (2.0 * k + al + be + 1.0) *
                      (2.0 * k + al + be + 2.0);
    const double a4 = 2.0 * (k + al) * (k + be) * (2.0 * k + al + be + 2.0);
    const double next = ((a2 + a3 * x) * p - a4 * pm) / a1;
    pm = p;
    p = next;
  }
  return p;
}

}  // namespace

double evaluate(const PolynomialFamily& fam, double x) {
  switch (fam.family) {
    case Family::Hermite:
      return hermite_eval(fam.degree, x);
    case Family::Laguerre:
      return laguerre_eval(fam.degree, fam.a, x);
    case Family::Jacobi:
      return jacobi_eval(fam.degree, fam.b, fam.a, x);
    case Family::ExceptionalLaguerre:
      return solve_exceptional(fam.g, fam.degree).polynomial(x * x);
  }
  throw std::logic_error("unreachable");
}

std::vector<double> roots(const PolynomialFamily& fam, int n) {
  if (n < 1) throw std::invalid_argument("roots requires n >= 1");
  if (fam.family == Family::ExceptionalLaguerre)
    throw std::invalid_argument(
        "exceptional family: use exceptional_roots on solve_exceptional");
  const Recurrence r = recurrence(fam, n);
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(r.a.data(), n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) sub[k] = std::sqrt(r.b[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

double weight(const PolynomialFamily& fam, double x) {
  switch (fam.family) {
    case Family::Hermite:
      return std::exp(-x * x);
    case Family::Laguerre:
      return std::pow(x, fam.a) * std::exp(-x);
    case Family::Jacobi:
      return std::pow(1.0 + x, fam.a) * std::pow(1.0 - x, fam.b);
    case Family::ExceptionalLaguerre: {
      const double m = fam.g + fam.l;
      const double denom = laguerre_eval(fam.l, 2.0 * m - 3.0, -x * x);
      return std::pow(x, 2.0 * m) * std::exp(-x * x) / denom;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<double> monic_coefficients(const PolynomialFamily& fam) {
  const int n = fam.degree;
  const Recurrence r = recurrence(fam, std::max(n, 1));
  std::vector<double> pm{1.0};           // degree 0
  if (n == 0) return pm;
  std::vector<double> p{-r.a[0], 1.0};   // degree 1
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      next[i + 1] += p[i];
      next[i] -= r.a[k] * p[i];
    }
    for (int i = 0; i < static_cast<int>(pm.size()); ++i)
      next[i] -= r.b[k - 1] * pm[i];
    pm = std::move(p);
    p = std::move(next);
  }
  return p;
}

double ExceptionalSolution::polynomial(double t) const {
  double v = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    v = v * t + coeffs[i];
  return v;
}

double ExceptionalSolution::psi(double x) const {
  const double c = g + 0.5;
  const double t = x * x;
  return std::pow(x, g + 1.0) * std::exp(-0.5 * t) * polynomial(t) /
         ((t + c) * norm);
}

ExceptionalSolution solve_exceptional(double g, int n) {
  if (g <= 0.0) throw std::invalid_argument("solve_exceptional requires g > 0");
  if (n < 1)
    throw QuantizationError(
        "X1 family has no polynomial solution below degree 1");
  const double c = g + 0.5;
  const double E = 2.0 * g - 1.0 + 4.0 * n;

  // Denominator-cleared equation in t = x^2:
  //   t(t+c) y'' + (c-t)(c+t+1) y' + (1/8)[2E(t+c) + (2-4g)t - (4g^2+16g+7)] y = 0
  // assembled as a linear map from y coefficients to coefficients of the
  // residual polynomial (degree n+1).
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 2, n + 1);
  for (int k = 0; k <= n; ++k) {
    if (k >= 2) {
      M(k, k) += k * (k - 1.0);
      M(k - 1, k) += c * k * (k - 1.0);
    }
    if (k >= 1) {
      M(k - 1, k) += (c * c + c) * k;
      M(k, k) += -static_cast<double>(k);
      M(k + 1, k) += -static_cast<double>(k);
    }
    M(k + 1, k) += (2.0 * E + 2.0 - 4.0 * g) / 8.0;
    M(k, k) += (2.0 * E * c - (4.0 * g * g + 16.0 * g + 7.0)) / 8.0;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const double scale = svd.singularValues()(0);
  const double smin = svd.singularValues()(n);
  if (smin > 1e-8 * scale)
    throw QuantizationError("no polynomial solution at degree " +
                            std::to_string(n));
  Eigen::VectorXd y = svd.matrixV().col(n);
  if (std::abs(y(n)) < 1e-12 * y.norm())
    throw QuantizationError("nullspace vector degenerate at degree " +
                            std::to_string(n));
  y /= y(n);  // monic

  ExceptionalSolution sol;
  sol.g = g;
  sol.degree = n;
  sol.energy = E;
  sol.coeffs.assign(y.data(), y.data() + n + 1);
  sol.norm = 1.0;
  const Quadrature q = gauss_legendre(400, 0.0, 14.0 + 2.0 * g);
  double s = 0.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    const double p = sol.psi(q.nodes[i]);
    s += q.weights[i] * p * p;
  }
  // Extreme g overflows the quadrature; keep the raw polynomial usable.
  sol.norm = (std::isfinite(s) && s > 0.0) ? std::sqrt(s) : 1.0;
  return sol;
}

std::vector<std::complex<double>> exceptional_roots(
    const ExceptionalSolution& sol) {
  const int n = sol.degree;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -sol.coeffs[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  std::sort(out.begin(), out.end(), [](auto u, auto v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  return out;
}

Quadrature gauss_legendre(int n, double a, double b) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k)
    sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = mid + half * es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    q.weights[i] = 2.0 * v0 * v0 * half;
  }
  return q;
}

}  // namespace loggas
