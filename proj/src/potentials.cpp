#include "loggas/potentials.hpp"

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace loggas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double get_param(const std::map<std::string, double>& p, const std::string& k,
                 double fallback) {
  auto it = p.find(k);
  return it == p.end() ? fallback : it->second;
}

double require_param(const std::map<std::string, double>& p,
                     const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) throw ParameterError("missing parameter: " + k);
  return it->second;
}

}  // namespace

std::string to_string(PotentialName name) {
  switch (name) {
    case PotentialName::HarmonicOscillator: return "harmonic";
    case PotentialName::Coulomb: return "coulomb";
    case PotentialName::Oscillator3D: return "oscillator3d";
    case PotentialName::Morse: return "morse";
    case PotentialName::Scarf: return "scarf";
    case PotentialName::DeformedOscillator: return "deformed";
  }
  throw std::logic_error("unreachable");
}

PotentialName potential_name_from_string(const std::string& s) {
  if (s == "harmonic") return PotentialName::HarmonicOscillator;
  if (s == "coulomb") return PotentialName::Coulomb;
  if (s == "oscillator3d") return PotentialName::Oscillator3D;
  if (s == "morse") return PotentialName::Morse;
  if (s == "scarf") return PotentialName::Scarf;
  if (s == "deformed") return PotentialName::DeformedOscillator;
  throw ParameterError("unknown potential name: " + s);
}

PotentialSpec make_potential(PotentialName name,
                             const std::map<std::string, double>& params) {
  using C = std::complex<double>;
  PotentialSpec spec;
  spec.name_ = name;

  switch (name) {
    case PotentialName::HarmonicOscillator: {
      spec.domain_ = {-kInf, kInf};
      spec.e0_ = 1.0;
      spec.w_ = [](double x) { return x; };
      spec.wp_ = [](double) { return 1.0; };
      spec.wint_ = [](double x) { return 0.5 * x * x; };
      spec.v_ = [](double x) { return x * x; };
      spec.vp_ = [](double x) { return 2.0 * x; };
      spec.wc_ = [](C z) { return z; };
      spec.vc_ = [](C z) { return z * z; };
      break;
    }
    case PotentialName::Coulomb: {
      const double l = get_param(params, "l", 0.0);
      if (l < 0.0) throw ParameterError("coulomb requires l >= 0");
      spec.params_ = {{"l", l}};
      spec.domain_ = {0.0, kInf};
      spec.e0_ = -0.25;
      const double lp1 = l + 1.0;
      // W = 1/2 - (l+1)/r, so V = W^2 - W' + E0 = l(l+1)/r^2 - (l+1)/r,
      // the hydrogen-like problem with charge l+1 (ground level at E0).
      spec.w_ = [lp1](double r) { return 0.5 - lp1 / r; };
      spec.wp_ = [lp1](double r) { return lp1 / (r * r); };
      spec.wint_ = [lp1](double r) { return 0.5 * r - lp1 * std::log(r); };
      spec.v_ = [l, lp1](double r) { return l * lp1 / (r * r) - lp1 / r; };
      spec.vp_ = [l, lp1](double r) {
        return -2.0 * l * lp1 / (r * r * r) + lp1 / (r * r);
      };
      spec.wc_ = [lp1](C z) { return 0.5 - lp1 / z; };
      spec.vc_ = [l, lp1](C z) { return l * lp1 / (z * z) - lp1 / z; };
      break;
    }
    case PotentialName::Oscillator3D: {
      const double l = get_param(params, "l", 0.0);
      if (l < 0.0) throw ParameterError("oscillator3d requires l >= 0");
      spec.params_ = {{"l", l}};
      spec.domain_ = {0.0, kInf};
      spec.e0_ = l + 1.5;
      const double lp1 = l + 1.0;
      spec.w_ = [lp1](double x) { return 0.5 * x - lp1 / x; };
      spec.wp_ = [lp1](double x) { return 0.5 + lp1 / (x * x); };
      spec.wint_ = [lp1](double x) {
        return 0.25 * x * x - lp1 * std::log(x);
      };
      spec.v_ = [l, lp1](double x) {
        return 0.25 * x * x + l * lp1 / (x * x);
      };
      spec.vp_ = [l, lp1](double x) {
        return 0.5 * x - 2.0 * l * lp1 / (x * x * x);
      };
      spec.wc_ = [lp1](C z) { return 0.5 * z - lp1 / z; };
      spec.vc_ = [l, lp1](C z) { return 0.25 * z * z + l * lp1 / (z * z); };
      break;
    }
    case PotentialName::Morse: {
      const double A = require_param(params, "A");
      const double B = require_param(params, "B");
      const double a = require_param(params, "alpha");
      if (a <= 0.0) throw ParameterError("morse requires alpha > 0");
      spec.params_ = {{"A", A}, {"B", B}, {"alpha", a}};
      spec.domain_ = {-kInf, kInf};
      spec.e0_ = 0.0;
      spec.w_ = [A, B, a](double x) { return A - B * std::exp(-a * x); };
      spec.wp_ = [B, a](double x) { return a * B * std::exp(-a * x); };
      spec.wint_ = [A, B, a](double x) {
        return A * x + (B / a) * std::exp(-a * x);
      };
      spec.v_ = [A, B, a](double x) {
        const double e = std::exp(-a * x);
        return A * A + B * B * e * e - 2.0 * B * (A + 0.5 * a) * e;
      };
      spec.vp_ = [A, B, a](double x) {
        const double e = std::exp(-a * x);
        return -2.0 * a * B * B * e * e + 2.0 * a * B * (A + 0.5 * a) * e;
      };
      spec.wc_ = [A, B, a](C z) { return A - B * std::exp(-a * z); };
      spec.vc_ = [A, B, a](C z) {
        const C e = std::exp(-a * z);
        return A * A + B * B * e * e - 2.0 * B * (A + 0.5 * a) * e;
      };
      break;
    }
    case PotentialName::Scarf: {
      const double A = require_param(params, "A");
      const double B = require_param(params, "B");
      const double a = require_param(params, "alpha");
      if (a <= 0.0) throw ParameterError("scarf requires alpha > 0");
      spec.params_ = {{"A", A}, {"B", B}, {"alpha", a}};
      // One branch with sin(alpha x) in (0,1), so the map to r = 1/sin is
      // single-valued and the sec/tan singularities sit on the boundary.
      spec.domain_ = {0.0, 0.5 * M_PI / a};
      spec.e0_ = 0.0;
      spec.w_ = [A, B, a](double x) {
        return A * std::tan(a * x) - B / std::cos(a * x);
      };
      spec.wp_ = [A, B, a](double x) {
        const double s = 1.0 / std::cos(a * x);
        return a * A * s * s - a * B * s * std::tan(a * x);
      };
      spec.wint_ = [A, B, a](double x) {
        const double c = std::cos(a * x);
        const double t = std::tan(a * x);
        return -(A / a) * std::log(c) - (B / a) * std::log(1.0 / c + t);
      };
      spec.v_ = [A, B, a](double x) {
        const double s = 1.0 / std::cos(a * x);
        const double t = std::tan(a * x);
        return -A * A + (A * A + B * B - A * a) * s * s -
               B * (2.0 * A - a) * t * s;
      };
      spec.vp_ = [A, B, a](double x) {
        const double s = 1.0 / std::cos(a * x);
        const double t = std::tan(a * x);
        return (A * A + B * B - A * a) * 2.0 * a * s * s * t -
               B * (2.0 * A - a) * a * s * (s * s + t * t);
      };
      spec.wc_ = [A, B, a](C z) {
        return A * std::tan(a * z) - B / std::cos(a * z);
      };
      spec.vc_ = [A, B, a](C z) {
        const C s = 1.0 / std::cos(a * z);
        const C t = std::tan(a * z);
        return -A * A + (A * A + B * B - A * a) * s * s -
               B * (2.0 * A - a) * t * s;
      };
      break;
    }
    case PotentialName::DeformedOscillator: {
      const double g = require_param(params, "g");
      if (g <= 0.0) throw ParameterError("deformed requires g > 0");
      spec.params_ = {{"g", g}, {"l", 1.0}};
      spec.domain_ = {0.0, kInf};
      // Rationally extended radial oscillator behind the X1 Laguerre
      // family; c = g + 1/2 is the denominator shift and the ground state
      // is x^(g+1) exp(-x^2/2) (x^2+c+1)/(x^2+c) at E0 = 2g+3.
      const double c = g + 0.5;
      spec.e0_ = 2.0 * g + 3.0;
      auto V = [g, c](double x) {
        const double d = x * x + c;
        return x * x + g * (g + 1.0) / (x * x) + 4.0 / d - 8.0 * c / (d * d);
      };
      spec.v_ = V;
      spec.vp_ = [g, c](double x) {
        const double d = x * x + c;
        return 2.0 * x - 2.0 * g * (g + 1.0) / (x * x * x) -
               8.0 * x / (d * d) + 32.0 * c * x / (d * d * d);
      };
      spec.w_ = [g, c](double x) {
        const double d = x * x + c;
        const double e = x * x + c + 1.0;
        return x - (g + 1.0) / x + 2.0 * x / d - 2.0 * x / e;
      };
      spec.wp_ = [g, c](double x) {
        const double d = x * x + c;
        const double e = x * x + c + 1.0;
        return 1.0 + (g + 1.0) / (x * x) + 2.0 * (c - x * x) / (d * d) -
               2.0 * (c + 1.0 - x * x) / (e * e);
      };
      spec.wint_ = [g, c](double x) {
        return 0.5 * x * x - (g + 1.0) * std::log(x) +
               std::log(x * x + c) - std::log(x * x + c + 1.0);
      };
      spec.wc_ = [g, c](C z) {
        const C d = z * z + c;
        const C e = z * z + c + 1.0;
        return z - (g + 1.0) / z + 2.0 * z / d - 2.0 * z / e;
      };
      spec.vc_ = [g, c](C z) {
        const C d = z * z + c;
        return z * z + g * (g + 1.0) / (z * z) + 4.0 / d - 8.0 * c / (d * d);
      };
      break;
    }
  }
  return spec;
}

PartnerPair partner_potentials(const PotentialSpec& spec) {
  const double e = spec.factorization_energy();
  return PartnerPair{
      [spec, e](double x) { return spec.W(x) * spec.W(x) - spec.Wp(x) + e; },
      [spec, e](double x) { return spec.W(x) * spec.W(x) + spec.Wp(x) + e; }};
}

VariableMap variable_map(MapName name,
                         const std::map<std::string, double>& params) {
  VariableMap m;
  switch (name) {
    case MapName::Oscillator3DToCoulomb: {
      const double l = get_param(params, "l", 0.0);
      const double E = get_param(params, "E", 1.0);
      m.source = make_potential(PotentialName::Oscillator3D, {{"l", l}});
      m.target = make_potential(PotentialName::Coulomb, {{"l", l}});
      m.forward = [](double x) { return x * x; };
      m.multiplier = [](double r) { return 1.0 / r; };
      m.source_form = [l, E](double x) {
        return l * (l + 1.0) / (x * x) + 0.25 * x * x - E;
      };
      m.target_form = [l, E](double r) {
        return l * (l + 1.0) / (r * r) + 0.25 - E / r;
      };
      break;
    }
    case MapName::MorseToCoulomb: {
      const double A = get_param(params, "A", 1.0);
      const double B = get_param(params, "B", 1.0);
      const double a = get_param(params, "alpha", 1.0);
      m.source = make_potential(PotentialName::Morse,
                                {{"A", A}, {"B", B}, {"alpha", a}});
      m.target = make_potential(PotentialName::Coulomb, {});
      m.forward = [a](double x) { return std::exp(-a * x); };
      m.multiplier = [](double) { return 1.0; };
      m.source_form = [A, B, a](double x) {
        const double e = std::exp(-a * x);
        return A * A + B * B * e * e - 2.0 * B * (A + 0.5 * a) * e;
      };
      // In the variable r = exp(-alpha x) the Morse shape is polynomial;
      // the reciprocal variable gives the printed 1/r Coulomb form.
      m.target_form = [A, B, a](double r) {
        return A * A + B * B * r * r - 2.0 * B * (A + 0.5 * a) * r;
      };
      break;
    }
    case MapName::ScarfToCoulomb: {
      const double A = get_param(params, "A", 2.0);
      const double B = get_param(params, "B", 1.0);
      const double a = get_param(params, "alpha", 1.0);
      m.source = make_potential(PotentialName::Scarf,
                                {{"A", A}, {"B", B}, {"alpha", a}});
      m.target = make_potential(PotentialName::Coulomb, {});
      m.forward = [a](double x) { return 1.0 / std::sin(a * x); };
      m.multiplier = [](double r) { return (r * r - 1.0) / (r * r); };
      m.source_form = [spec = m.source](double x) { return spec.V(x); };
      m.target_form = [A, B, a](double r) {
        return A * A / (r * r) + (B * B - A * a) - B * (2.0 * A - a) / r;
      };
      break;
    }
  }
  return m;
}

std::string PotentialSpec::to_json() const {
  nlohmann::json j;
  j["name"] = loggas::to_string(name_);
  j["params"] = params_;
  j["domain"] = {domain_.lo, domain_.hi};
  j["E0"] = e0_;
  return j.dump();
}

PotentialSpec PotentialSpec::from_json(const std::string& doc) {
  const auto j = nlohmann::json::parse(doc);
  std::map<std::string, double> params;
  if (j.contains("params")) {
    params = j.at("params").get<std::map<std::string, double>>();
  }
  return make_potential(potential_name_from_string(j.at("name")), params);
}

}  // namespace loggas
