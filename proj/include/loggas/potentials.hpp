#ifndef LOGGAS_POTENTIALS_HPP
#define LOGGAS_POTENTIALS_HPP

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace loggas {

// Natural units throughout: hbar = 1, 2m = 1, so the Riccati equation reads
// p^2 - i p' = E - V and the Schrodinger equation -psi'' + V psi = E psi.

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class PotentialName {
  HarmonicOscillator,
  Coulomb,
  Oscillator3D,
  Morse,
  Scarf,
  DeformedOscillator
};

std::string to_string(PotentialName name);
PotentialName potential_name_from_string(const std::string& s);

/// Open interval of the radial/line coordinate.
struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x > lo && x < hi; }
};

/// A confining model from the catalog: potential V, its derivative, the
/// superpotential W with W' and an antiderivative of W, plus the
/// factorization energy E0 satisfying V - E0 = W^2 - W'.
///
/// The log-gas layer uses W as the confinement gradient and the
/// antiderivative of W as the confinement energy; this is the convention in
/// which the equilibrium charges sit at classical orthogonal polynomial
/// zeros.
class PotentialSpec {
 public:
  /// Empty spec; evaluators unset until assigned from make_potential.
  PotentialSpec() = default;

  using RealFn = std::function<double(double)>;
  using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

  PotentialName name() const { return name_; }
  const std::map<std::string, double>& params() const { return params_; }
  const Interval& domain() const { return domain_; }
  double factorization_energy() const { return e0_; }

  double V(double x) const { return v_(x); }
  double Vp(double x) const { return vp_(x); }
  double W(double x) const { return w_(x); }
  double Wp(double x) const { return wp_(x); }
  /// Antiderivative of W (closed form), used for wave functions and the
  /// gas confinement energy.
  double Wint(double x) const { return wint_(x); }
  /// Analytic continuation of W, used by contour integrals.
  std::complex<double> W(std::complex<double> z) const { return wc_(z); }
  /// Analytic continuation of V.
  std::complex<double> V(std::complex<double> z) const { return vc_(z); }

  // JSON round-trip: {"name":..., "params":{...}, "domain":[lo,hi], "E0":...}
  std::string to_json() const;
  static PotentialSpec from_json(const std::string& doc);

  friend PotentialSpec make_potential(PotentialName,
                                      const std::map<std::string, double>&);

 private:
  PotentialName name_{};
  std::map<std::string, double> params_;
  Interval domain_{};
  double e0_ = 0.0;
  RealFn v_, vp_, w_, wp_, wint_;
  ComplexFn wc_, vc_;
};

PotentialSpec make_potential(PotentialName name,
                             const std::map<std::string, double>& params = {});

/// SUSY partner potentials V+- = W^2 -+ W' + E (E defaults to the stored
/// factorization energy, so V_plus coincides with V).
struct PartnerPair {
  std::function<double(double)> plus;
  std::function<double(double)> minus;
};

PartnerPair partner_potentials(const PotentialSpec& spec);

enum class MapName { Oscillator3DToCoulomb, MorseToCoulomb, ScarfToCoulomb };

/// A change of variable x -> r carrying one catalog model onto Coulomb form:
/// target_form(r) = multiplier(r) * source_form(x(r)) pointwise.  The
/// source/target evaluators are the mapped potential shapes (they carry the
/// free energy parameter of the map, not the E0-shifted catalog V).
struct VariableMap {
  PotentialSpec source;
  PotentialSpec target;
  std::function<double(double)> forward;       // x -> r
  std::function<double(double)> multiplier;    // m(r)
  std::function<double(double)> source_form;   // evaluated at x
  std::function<double(double)> target_form;   // evaluated at r
};

VariableMap variable_map(MapName name,
                         const std::map<std::string, double>& params = {});

}  // namespace loggas

#endif
