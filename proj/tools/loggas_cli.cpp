// loggas: command-line driver for the log-gas / QHJ cross-validation
// library.  Every run writes its artifact files plus a manifest.json
// recording the configuration, seed, version, and wall time.
//
// Exit codes: 0 ok, 2 configuration error, 3 numerical failure,
// 4 check-suite failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loggas/dyson.hpp"
#include "loggas/electrostatics.hpp"
#include "loggas/ensembles.hpp"
#include "loggas/orthopoly.hpp"
#include "loggas/qhj.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace loggas;
using Clock = std::chrono::steady_clock;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_table(const Table& t, const fs::path& path,
                 const std::string& format) {
  std::ofstream out(path);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json obj;
      for (size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
      rows.push_back(obj);
    }
    out << rows.dump(2) << "\n";
    return;
  }
  for (size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << fmt(r[i]);
    out << "\n";
  }
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const json& config, std::uint64_t seed, double wall) {
  json m = {{"command", command},
            {"config", config},
            {"seed", seed},
            {"version", kVersion},
            {"wall_time_seconds", wall}};
  std::ofstream(dir / "manifest.json") << m.dump(2) << "\n";
}

struct PotentialFlags {
  std::string name = "harmonic";
  double l = 0.0, g = 1.0, A = 1.0, B = 1.0, alpha = 1.0;
  std::string json_spec;

  void attach(CLI::App* cmd) {
    cmd->add_option("--potential", name,
                    "harmonic|coulomb|oscillator3d|morse|scarf|deformed");
    cmd->add_option("--l", l, "angular momentum (coulomb, oscillator3d)");
    cmd->add_option("--g", g, "deformation parameter (deformed)");
    cmd->add_option("--A", A, "Morse/Scarf parameter A");
    cmd->add_option("--B", B, "Morse/Scarf parameter B");
    cmd->add_option("--alpha", alpha, "Morse/Scarf parameter alpha");
    cmd->add_option("--potential-json", json_spec,
                    "full potential spec as inline JSON or a file path");
  }

  PotentialSpec build() const {
    if (!json_spec.empty()) {
      std::string doc = json_spec;
      if (fs::exists(json_spec)) {
        std::ifstream in(json_spec);
        doc.assign(std::istreambuf_iterator<char>(in), {});
      }
      return PotentialSpec::from_json(doc);
    }
    auto n = potential_name_from_string(name);
    std::map<std::string, double> params;
    switch (n) {
      case PotentialName::Coulomb:
      case PotentialName::Oscillator3D:
        params = {{"l", l}};
        break;
      case PotentialName::DeformedOscillator:
        params = {{"g", g}};
        break;
      case PotentialName::Morse:
      case PotentialName::Scarf:
        params = {{"A", A}, {"B", B}, {"alpha", alpha}};
        break;
      default:
        break;
    }
    return make_potential(n, params);
  }

  json to_json() const {
    return {{"potential", name}, {"l", l},     {"g", g},
            {"A", A},            {"B", B},     {"alpha", alpha},
            {"json", json_spec}};
  }
};

std::uint64_t resolve_seed(std::uint64_t seed, bool seed_given) {
  if (seed_given) return seed;
  std::random_device rd;
  return ((std::uint64_t)rd() << 32) | rd();
}

// Known classical oracle for the equilibrium of a catalog gas, when one
// exists (harmonic -> Hermite zeros, Coulomb -> Laguerre(2l+1) zeros).
std::vector<double> equilibrium_oracle(const PotentialSpec& p, int n) {
  switch (p.name()) {
    case PotentialName::HarmonicOscillator:
      return roots(PolynomialFamily::hermite(n), n);
    case PotentialName::Coulomb: {
      double l = p.params().at("l");
      return roots(PolynomialFamily::laguerre(2 * l + 1, n), n);
    }
    default:
      return {};
  }
}

int run_check(const fs::path& dir);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log-gas electrostatics, QHJ quantization, and Gaussian "
               "ensemble cross-validation"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  if (const char* env = std::getenv("LOGGAS_OUT")) out_dir = env;
  std::string format = "csv";
  std::uint64_t seed = 0;
  app.add_option("--out", out_dir, "output directory")->envname("LOGGAS_OUT");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (generated and "
                                                  "recorded when omitted)");

  // equilibrium
  auto* eq_cmd = app.add_subcommand("equilibrium",
                                    "solve the n-charge equilibrium");
  int eq_n = 5;
  PotentialFlags eq_pot;
  eq_cmd->add_option("--n", eq_n, "number of charges")->required();
  eq_pot.attach(eq_cmd);

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "classical polynomial roots");
  std::string roots_family = "hermite";
  int roots_n = 5;
  double roots_a = 0, roots_b = 0;
  roots_cmd->add_option("--family", roots_family, "hermite|laguerre|jacobi")
      ->check(CLI::IsMember({"hermite", "laguerre", "jacobi"}));
  roots_cmd->add_option("--n", roots_n, "degree")->required();
  roots_cmd->add_option("--a", roots_a, "family parameter a");
  roots_cmd->add_option("--b", roots_b, "Jacobi parameter b");

  // quantize
  auto* q_cmd = app.add_subcommand("quantize", "polynomial bound states");
  int q_nmax = 3;
  PotentialFlags q_pot;
  q_cmd->add_option("--nmax", q_nmax, "highest state index");
  q_pot.attach(q_cmd);

  // sample
  auto* s_cmd = app.add_subcommand("sample", "Gaussian ensemble eigenvalues");
  int s_dim = 2, s_beta = 1, s_count = 1;
  s_cmd->add_option("--dim", s_dim, "matrix dimension")->required();
  s_cmd->add_option("--beta", s_beta, "Dyson index (1 or 2)");
  s_cmd->add_option("--count", s_count, "number of samples");

  // evolve
  auto* e_cmd = app.add_subcommand("evolve", "Dyson gas trajectory");
  int e_n = 4, e_beta = 1, e_steps = 1000, e_burnin = -1;
  double e_dt = 0.005;
  PotentialFlags e_pot;
  e_cmd->add_option("--n", e_n, "number of charges")->required();
  e_cmd->add_option("--beta", e_beta, "Dyson index");
  e_cmd->add_option("--dt", e_dt, "time step");
  e_cmd->add_option("--steps", e_steps, "recorded steps after burn-in");
  e_cmd->add_option("--burnin", e_burnin,
                    "burn-in steps (default 10 n^2 / dt heuristic)");
  e_pot.attach(e_cmd);

  // pdf
  auto* p_cmd = app.add_subcommand("pdf", "JPDF and wave-function values");
  std::vector<double> p_x;
  int p_beta = 2;
  PotentialFlags p_pot;
  p_cmd->add_option("--x", p_x, "configuration (sorted positions)")
      ->required()
      ->delimiter(',');
  p_cmd->add_option("--beta", p_beta, "Dyson index");
  p_pot.attach(p_cmd);

  // check
  auto* c_cmd = app.add_subcommand("check", "cross-validation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  auto t0 = Clock::now();
  fs::path dir(out_dir);
  std::uint64_t used_seed = resolve_seed(seed, seed_opt->count() > 0);

  try {
    std::error_code ec;
    fs::create_directories(dir, ec);
    json config = {{"out", out_dir}, {"format", format}};

    if (*eq_cmd) {
      auto pot = eq_pot.build();
      auto eq = equilibrium(eq_n, pot);
      auto oracle = equilibrium_oracle(pot, eq_n);
      Table t;
      t.columns = {"index", "position", "gradient", "deviation"};
      auto grad = gradient(eq);
      for (int k = 0; k < eq_n; ++k) {
        double dev = oracle.empty()
                         ? 0.0
                         : std::abs(eq.positions[k] - oracle[k]);
        t.rows.push_back({(double)k, eq.positions[k], grad[k], dev});
      }
      write_table(t, dir / ("equilibrium." + format), format);
      config["n"] = eq_n;
      config.update(eq_pot.to_json());
      write_manifest(dir, "equilibrium", config, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
    } else if (*roots_cmd) {
      PolynomialFamily fam =
          roots_family == "hermite"
              ? PolynomialFamily::hermite(roots_n)
              : roots_family == "laguerre"
                    ? PolynomialFamily::laguerre(roots_a, roots_n)
                    : PolynomialFamily::jacobi(roots_a, roots_b, roots_n);
      auto r = roots(fam, roots_n);
      Table t;
      t.columns = {"index", "root"};
      for (size_t k = 0; k < r.size(); ++k)
        t.rows.push_back({(double)k, r[k]});
      write_table(t, dir / ("roots." + format), format);
      config["family"] = roots_family;
      config["n"] = roots_n;
      config["a"] = roots_a;
      config["b"] = roots_b;
      write_manifest(dir, "roots", config, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
    } else if (*q_cmd) {
      auto pot = q_pot.build();
      auto states = polynomial_spectrum(pot, q_nmax);
      Table t;
      t.columns = {"index", "energy", "nodes", "max_riccati_residual"};
      for (const auto& st : states) {
        double res = 0;
        for (int i = 0; i < 32; ++i) {
          double lo = std::isfinite(pot.domain().lo) ? pot.domain().lo + 0.2
                                                     : -5.0;
          double hi = std::isfinite(pot.domain().hi)
                          ? pot.domain().hi - 0.2
                          : (pot.domain().lo > -1e300 ? 12.0 : 5.0);
          Complex x(lo + (hi - lo) * i / 31.0, 0.4);
          res = std::max(res,
                         std::abs(riccati_residual(st.p, st.e_eff, st.v_eff,
                                                   x)));
        }
        t.rows.push_back({(double)st.index, st.energy,
                          (double)st.nodes.size(), res});
      }
      write_table(t, dir / ("spectrum." + format), format);
      config["nmax"] = q_nmax;
      config.update(q_pot.to_json());
      write_manifest(dir, "quantize", config, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
    } else if (*s_cmd) {
      Table t;
      t.columns = {"sample", "stream"};
      for (int k = 0; k < s_dim; ++k)
        t.columns.push_back("ev" + std::to_string(k));
      for (int i = 0; i < s_count; ++i) {
        auto s = sample_gaussian(s_dim, s_beta, used_seed, i);
        std::vector<double> row = {(double)i, (double)i};
        row.insert(row.end(), s.eigenvalues.begin(), s.eigenvalues.end());
        t.rows.push_back(std::move(row));
      }
      write_table(t, dir / ("samples." + format), format);
      config["dim"] = s_dim;
      config["beta"] = s_beta;
      config["count"] = s_count;
      write_manifest(dir, "sample", config, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
    } else if (*e_cmd) {
      auto pot = e_pot.build();
      int burnin = e_burnin >= 0
                       ? e_burnin
                       : (int)std::min(2e5, 10.0 * e_n * e_n / e_dt);
      std::mt19937_64 rng(used_seed);
      GasTrajectoryState st;
      st.positions = equilibrium(e_n, pot).positions;
      st.beta = e_beta;
      st.potential = pot;
      for (int k = 0; k < burnin; ++k) st = step(st, e_dt, rng);
      Table t;
      t.columns = {"time"};
      for (int k = 0; k < e_n; ++k)
        t.columns.push_back("x" + std::to_string(k));
      for (int k = 0; k < e_steps; ++k) {
        st = step(st, e_dt, rng);
        std::vector<double> row = {st.time};
        row.insert(row.end(), st.positions.begin(), st.positions.end());
        t.rows.push_back(std::move(row));
      }
      write_table(t, dir / ("trajectory." + format), format);
      config["n"] = e_n;
      config["beta"] = e_beta;
      config["dt"] = e_dt;
      config["steps"] = e_steps;
      config["burnin"] = burnin;
      config["thinning"] = e_n;
      config["halvings"] = (double)st.halvings;
      config["bounces"] = (double)st.bounces;
      config.update(e_pot.to_json());
      write_manifest(dir, "evolve", config, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
    } else if (*p_cmd) {
      auto pot = p_pot.build();
      std::sort(p_x.begin(), p_x.end());
      Table t;
      t.columns = {"beta", "joint_log_pdf", "product_wavefunction"};
      t.rows.push_back({(double)p_beta, joint_log_pdf(p_x, p_beta, pot),
                        product_wavefunction(p_x, pot)});
      write_table(t, dir / ("pdf." + format), format);
      config["beta"] = p_beta;
      config["x"] = p_x;
      config.update(p_pot.to_json());
      write_manifest(dir, "pdf", config, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
    } else if (*c_cmd) {
      int rc = run_check(dir);
      json cfg = {{"out", out_dir}};
      write_manifest(dir, "check", cfg, used_seed,
                     std::chrono::duration<double>(Clock::now() - t0).count());
      return rc;
    }
  } catch (const ParameterError& e) {
    std::cerr << json{{"error", "config"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "config"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "numerical"}, {"message", e.what()}}.dump()
              << "\n";
    return 3;
  }
  return 0;
}

namespace {

int run_check(const fs::path& dir) {
  json report = json::array();
  bool all_ok = true;
  auto add = [&](const std::string& name, double value, double threshold) {
    bool ok = value < threshold;
    all_ok = all_ok && ok;
    report.push_back({{"check", name},
                      {"value", value},
                      {"threshold", threshold},
                      {"pass", ok}});
    std::printf("[%s] %-32s %.3e (< %.0e)\n", ok ? "PASS" : "FAIL",
                name.c_str(), value, threshold);
  };

  auto h = make_potential(PotentialName::HarmonicOscillator);
  double dev = 0;
  for (int n = 2; n <= 20; ++n) {
    auto eq = equilibrium(n, h);
    auto r = roots(PolynomialFamily::hermite(n), n);
    for (int k = 0; k < n; ++k)
      dev = std::max(dev, std::abs(eq.positions[k] - r[k]));
  }
  auto c0 = make_potential(PotentialName::Coulomb, {{"l", 0.0}});
  for (int n = 1; n <= 15; ++n) {
    auto eq = equilibrium(n, c0);
    auto r = roots(PolynomialFamily::laguerre(1, n), n);
    for (int k = 0; k < n; ++k)
      dev = std::max(dev, std::abs(eq.positions[k] - r[k]));
  }
  add("equilibrium_vs_roots", dev, 1e-8);

  double res = 0;
  auto states = polynomial_spectrum(h, 10);
  for (const auto& st : states)
    for (int i = 0; i < 32; ++i) {
      Complex x(-4.0 + 8.0 * i / 31.0, 0.4);
      res = std::max(res,
                     std::abs(riccati_residual(st.p, st.e_eff, st.v_eff, x)));
    }
  add("riccati_residual", res, 1e-8);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double didev = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> x;
    while (x.size() < 6) {
      double v = u(rng);
      bool ok = true;
      for (double y : x)
        if (std::abs(v - y) < 0.05) ok = false;
      if (ok) x.push_back(v);
    }
    std::sort(x.begin(), x.end());
    ChargeConfiguration cfg;
    cfg.positions = x;
    cfg.potential = h;
    auto g = gradient(cfg);
    GasTrajectoryState st;
    st.positions = x;
    st.potential = h;
    auto d = drift(st);
    for (int i = 0; i < 6; ++i)
      didev = std::max(didev, std::abs(d[i] + g[i]));
  }
  add("drift_vs_gradient", didev, 1e-14);

  // reduced stationarity check
  {
    const int n = 4;
    std::mt19937_64 r2(99);
    GasTrajectoryState st;
    st.positions = equilibrium(n, h).positions;
    st.beta = 1;
    st.potential = h;
    const double dt = 0.005;
    for (int k = 0; k < 6000; ++k) st = step(st, dt, r2);
    std::vector<double> pooled;
    while (pooled.size() < 4000) {
      for (int k = 0; k < 60; ++k) st = step(st, dt, r2);
      pooled.insert(pooled.end(), st.positions.begin(), st.positions.end());
    }
    std::vector<double> direct;
    int s = 0;
    while (direct.size() < 4000) {
      auto e = sample_gaussian(n, 1, 99, s++).eigenvalues;
      direct.insert(direct.end(), e.begin(), e.end());
    }
    add("stationarity_ks", ks_distance(pooled, direct), 0.05);
  }

  std::ofstream(dir / "check_report.json") << report.dump(2) << "\n";
  std::printf("%s\n", all_ok ? "check suite passed" : "check suite FAILED");
  return all_ok ? 0 : 4;
}

}  // namespace
