#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlslab/common.hpp"
#include "nlslab/experiment.hpp"
#include "nlslab/serialization.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Common {
  std::string output_dir = ".";
  std::uint64_t seed = 0;
  std::string timestamp;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-o,--out", c.output_dir, "Output directory")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed for randomized test data")->capture_default_str();
  cmd->add_option("--timestamp", c.timestamp, "Fixed timestamp for the metadata header");
}

// Flags that were given on the command line become parameters; the rest are
// left to the module defaults.
template <typename T>
void put(json& params, const char* key, const std::optional<T>& value) {
  if (value) params[key] = *value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient dynamics, Talbot revivals and vortex filaments for 1d cubic NLS"};
  app.require_subcommand(1);
  Common common;
  json params = json::object();

  // gauss
  std::optional<std::int64_t> g_p, g_m, g_q;
  auto* gauss = app.add_subcommand(
      "gauss", "Quadratic Gauss sum G(-p, m, q) = sum_l exp(2 pi i (-p l^2 + m l)/q).\n"
               "For odd q coprime to p the modulus is sqrt(q); prints real, imag, modulus, phase.");
  gauss->add_option("--p", g_p, "p")->required();
  gauss->add_option("--m", g_m, "m")->required();
  gauss->add_option("--q", g_q, "q (positive)")->required();
  add_common(gauss, common);

  // talbot
  std::optional<std::int64_t> t_p, t_q, t_grid;
  std::optional<std::string> t_spec, t_norm;
  std::optional<double> t_eta;
  auto* talbot = app.add_subcommand(
      "talbot",
      "Linear evolution of 2 pi-periodic-spectrum data at t = p/(2 pi q), comparing the\n"
      "closed-form modulus gain |hat u0(xi_x)| near x in Z/q with direct summation.\n"
      "Spectrum file: JSON map k -> [re, im]; the default is the standard bump.");
  talbot->add_option("--p", t_p, "p")->required();
  talbot->add_option("--q", t_q, "q (odd)")->required();
  talbot->add_option("--spectrum", t_spec, "Spectrum file, or 'bump'");
  talbot->add_option("--grid", t_grid, "Points on [0, 1) (default 512)");
  talbot->add_option("--eta", t_eta, "Spectral support parameter (default 0.1)");
  talbot->add_option("--norm", t_norm, "constant_free | physical");
  add_common(talbot, common);

  // evolve
  std::optional<std::string> e_data, e_mode;
  std::optional<double> e_t0, e_t1, e_tol;
  std::optional<int> e_N, e_M, e_outputs, e_rsize;
  auto* evolve = app.add_subcommand(
      "evolve",
      "Integrates the coefficient system from t0 to t1 and reports the conserved\n"
      "quantities and the energy. The system carries A_j(t) at slow time 1/(4t).\n"
      "Data are A_j(t0) (j = 0..M-1 when periodic): JSON map j -> [re, im], or 'random'.");
  evolve->add_option("--data", e_data, "Data file")->required();
  evolve->add_option("--t0", e_t0, "Start time")->required();
  evolve->add_option("--t1", e_t1, "End time")->required();
  evolve->add_option("--tol", e_tol, "Local error tolerance (default 1e-10)");
  evolve->add_option("--mode", e_mode, "line | periodic")->check(CLI::IsMember({"line", "periodic"}));
  evolve->add_option("--N", e_N, "Line window |j| <= N");
  evolve->add_option("--M", e_M, "Period");
  evolve->add_option("--outputs", e_outputs, "Snapshots, log-spaced in tau (default 11)");
  evolve->add_option("--random-size", e_rsize, "Index range of random data");
  add_common(evolve, common);

  // field
  std::optional<std::string> f_state, f_grid;
  std::optional<double> f_t;
  auto* field = app.add_subcommand(
      "field",
      "u(x, t) = (it)^{-1/2} e^{ix^2/4t} conj(V)(x/2t) from a line state file; with --t the\n"
      "state is integrated to tau = 1/t first.");
  field->add_option("--state", f_state, "State JSON file")->required();
  field->add_option("--grid", f_grid, "x0:x1:n")->required();
  field->add_option("--t", f_t, "Evaluation time");
  add_common(field, common);

  // filament
  std::optional<std::string> fl_data, fl_grid;
  std::optional<double> fl_t, fl_c0, fl_theta;
  std::optional<int> fl_N;
  auto* filament = app.add_subcommand(
      "filament",
      "Parallel frame transport T_x = a e1 + b e2 with u = a + ib and curve reconstruction.\n"
      "Either coefficient data (integrated from large tau) or the self-similar datum\n"
      "c0 t^{-1/2} e^{ix^2/4t}, whose corner obeys sin(theta) = exp(-pi c0^2/2).");
  filament->add_option("--data", fl_data, "Data file (a_j)");
  filament->add_option("--c0", fl_c0, "Self-similar amplitude");
  filament->add_option("--theta", fl_theta, "Self-similar corner angle");
  filament->add_option("--t", fl_t, "Time")->required();
  filament->add_option("--grid", fl_grid, "x0:x1:n")->required();
  filament->add_option("--N", fl_N, "Coefficient window");
  add_common(filament, common);

  // cascade
  std::optional<double> c_tmin, c_tmax, c_a1, c_window;
  std::optional<int> c_steps, c_N;
  auto* cascade = app.add_subcommand(
      "cascade",
      "Sup of |hat(T_x)|^2 over B(+-1/t, sqrt t) for data a_{-1} = a_1, at log-spaced\n"
      "t from tmax down to tmin, with a least-squares slope against |log t|.");
  cascade->add_option("--tmin", c_tmin, "Smallest time (default 0.01)");
  cascade->add_option("--tmax", c_tmax, "Largest time (default 0.2)");
  cascade->add_option("--steps", c_steps, "Number of times (default 5)");
  cascade->add_option("--a1", c_a1, "a_{-1} = a_1 (default 0.2)");
  cascade->add_option("--N", c_N, "Coefficient window (default 16)");
  cascade->add_option("--window", c_window, "Half width of the x window (default 16)");
  add_common(cascade, common);

  // rogue
  std::optional<std::string> r_config;
  bool r_linear_only = false;
  std::optional<double> r_dtau;
  std::optional<int> r_window;
  auto* rogue = app.add_subcommand(
      "rogue",
      "Bump data concentrated near 0 in frequency: small almost periodic waves at\n"
      "t_{p,q} = p/(2 pi q) and a large localized wave at t_{p~,q~}, amplitude ratio\n"
      "about sqrt(q/q~). Config: JSON with eta, p, q, s, beta, p_tilde, q_tilde.");
  rogue->add_option("--config", r_config, "Config JSON file");
  rogue->add_flag("--linear-only", r_linear_only, "Skip the nonlinear run");
  rogue->add_option("--dtau", r_dtau, "Split-step size in tau (default 0.02)");
  rogue->add_option("--window", r_window, "Nonlinear mode window (default 128)");
  add_common(rogue, common);

  // run
  std::string run_config;
  auto* run = app.add_subcommand("run", "Runs an experiment from a JSON config "
                                        "{command, parameters, output_dir, seed}.");
  run->add_option("--config", run_config, "Experiment JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    nlslab::ExperimentConfig cfg;
    if (*run) {
      cfg = nlslab::ExperimentConfig::from_json(nlslab::read_json_file(run_config));
    } else {
      CLI::App* sub = app.get_subcommands().front();
      cfg.command = sub->get_name();
      if (sub == gauss) {
        put(params, "p", g_p);
        put(params, "m", g_m);
        put(params, "q", g_q);
      } else if (sub == talbot) {
        put(params, "p", t_p);
        put(params, "q", t_q);
        put(params, "spectrum", t_spec);
        put(params, "grid", t_grid);
        put(params, "eta", t_eta);
        put(params, "norm", t_norm);
      } else if (sub == evolve) {
        put(params, "data", e_data);
        put(params, "t0", e_t0);
        put(params, "t1", e_t1);
        put(params, "tol", e_tol);
        put(params, "mode", e_mode);
        put(params, "N", e_N);
        put(params, "M", e_M);
        put(params, "outputs", e_outputs);
        put(params, "random_size", e_rsize);
      } else if (sub == field) {
        put(params, "state", f_state);
        put(params, "grid", f_grid);
        put(params, "t", f_t);
      } else if (sub == filament) {
        put(params, "data", fl_data);
        put(params, "c0", fl_c0);
        put(params, "theta", fl_theta);
        put(params, "t", fl_t);
        put(params, "grid", fl_grid);
        put(params, "N", fl_N);
      } else if (sub == cascade) {
        put(params, "tmin", c_tmin);
        put(params, "tmax", c_tmax);
        put(params, "steps", c_steps);
        put(params, "a1", c_a1);
        put(params, "N", c_N);
        put(params, "window", c_window);
      } else if (sub == rogue) {
        put(params, "config", r_config);
        put(params, "dtau", r_dtau);
        put(params, "window", r_window);
        params["nonlinear"] = !r_linear_only;
      }
      cfg.parameters = params;
      cfg.output_dir = common.output_dir;
      cfg.seed = common.seed;
      cfg.timestamp = common.timestamp;
    }
    const nlslab::RunOutcome out = nlslab::run(cfg);
    std::cout << out.summary;
    for (const auto& f : out.files) std::cerr << "wrote " << f.string() << "\n";
    return kExitOk;
  } catch (const nlslab::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlslab::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
