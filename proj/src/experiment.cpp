#include "nlslab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "nlslab/cascade.hpp"
#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/field_eval.hpp"
#include "nlslab/frame_flow.hpp"
#include "nlslab/gauss_sums.hpp"
#include "nlslab/integrator.hpp"
#include "nlslab/linear_talbot.hpp"
#include "nlslab/rogue_experiment.hpp"
#include "nlslab/serialization.hpp"

namespace fs = std::filesystem;

namespace nlslab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- parameter access -------------------------------------------------------

template <typename T>
T param(const json& p, const std::string& key, T fallback) {
  if (!p.contains(key) || p.at(key).is_null()) return fallback;
  try {
    return p.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError("parameter '" + key + "' has the wrong type");
  }
}

template <typename T>
T required(const json& p, const std::string& key) {
  if (!p.contains(key) || p.at(key).is_null())
    throw ValidationError("missing required parameter '" + key + "'");
  return param<T>(p, key, T{});
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Grid {
  double x0, x1;
  std::size_t n;
  std::vector<double> points() const {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
      xs[i] = n == 1 ? x0 : x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(n - 1);
    return xs;
  }
};

// "x0:x1:n"
Grid parse_grid(const std::string& spec) {
  std::stringstream ss(spec);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) )
    throw ValidationError("grid must look like x0:x1:n, got '" + spec + "'");
  Grid g{};
  try {
    std::size_t used = 0;
    g.x0 = std::stod(a);
    g.x1 = std::stod(b);
    const long n = std::stol(c, &used);
    require(used == c.size() && n >= 2, "");
    g.n = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw ValidationError("grid must look like x0:x1:n with n >= 2, got '" + spec + "'");
  }
  require(g.x1 > g.x0, "grid: x1 must exceed x0");
  return g;
}

// Coefficient data: a file path, an inline object, or "random" (seeded).
std::map<int, cplx> load_coefficients(const json& p, const std::string& key, std::uint64_t seed) {
  const json& d = p.at(key);
  if (d.is_object()) return coeff_map_from_json(d);
  require(d.is_string(), "parameter '" + key + "' must be a file path or an object");
  const std::string s = d.get<std::string>();
  if (s != "random") return coeff_map_from_json(read_json_file(s));

  const int n = param<int>(p, "random_size", 4);
  const double amp = param<double>(p, "random_amplitude", 0.05);
  require(n >= 0 && amp >= 0.0, "random data: size and amplitude must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<int, cplx> out;
  for (int j = -n; j <= n; ++j) out[j] = amp * cplx{u(rng), u(rng)};
  return out;
}

PropagatorNorm parse_norm(const std::string& s) {
  if (s == "constant_free") return PropagatorNorm::constant_free;
  if (s == "physical") return PropagatorNorm::physical;
  throw ValidationError("norm must be 'constant_free' or 'physical'");
}

// ---- artifact writing -------------------------------------------------------

class Artifacts {
 public:
  Artifacts(const ExperimentConfig& cfg, json tolerances)
      : dir_(cfg.output_dir), meta_{cfg.command, cfg.to_json(), std::move(tolerances),
                                    cfg.timestamp.empty() ? utc_now() : cfg.timestamp} {}

  void csv(const std::string& name, const CsvTable& table) {
    put(name, table.render(&meta_));
  }
  void json_file(const std::string& name, json body) {
    body["metadata"] = meta_.to_json();
    put(name, body.dump(2) + "\n");
  }
  void text(const std::string& name, const std::string& header_comment, const std::string& body) {
    put(name, meta_.csv_header() + header_comment + body);
  }

  Metadata& meta() { return meta_; }
  RunOutcome outcome;

 private:
  void put(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    write_text_file(path, content);
    outcome.files.push_back(path);
  }

  fs::path dir_;
  Metadata meta_;
};

std::string fmt(double v) { return format_double(v); }

// ---- commands ---------------------------------------------------------------

RunOutcome run_gauss(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  const auto pp = required<std::int64_t>(p, "p");
  const auto m = required<std::int64_t>(p, "m");
  const auto q = required<std::int64_t>(p, "q");
  require(q >= 1, "gauss: q must be a positive integer");
  const cplx g = gauss_sum({-pp, m, q});
  const double phase = wrap_angle(std::arg(g));

  Artifacts out(cfg, json::object());
  CsvTable table({"p", "m", "q", "real", "imag", "modulus", "phase"});
  table.add_row({static_cast<double>(pp), static_cast<double>(m), static_cast<double>(q), g.real(),
                 g.imag(), std::abs(g), phase});
  out.csv("gauss.csv", table);
  out.outcome.summary = "real,imag,modulus,phase\n" + fmt(g.real()) + "," + fmt(g.imag()) + "," +
                        fmt(std::abs(g)) + "," + fmt(phase) + "\n";
  return out.outcome;
}

PeriodicSpectrum talbot_spectrum(const json& p, std::int64_t pp, double eta) {
  if (p.contains("spectrum") && !(p.at("spectrum").is_string() &&
                                  p.at("spectrum").get<std::string>() == "bump")) {
    PeriodicSpectrum spec;
    const json& s = p.at("spectrum");
    spec.coeffs = s.is_object() ? coeff_map_from_json(s)
                                : coeff_map_from_json(read_json_file(param<std::string>(p, "spectrum", "")));
    return spec;
  }
  RogueConfig rc;
  rc.p = pp;
  rc.eta = eta;
  rc.beta = param<double>(p, "beta", rc.beta);
  return build_bump_coefficients(rc, suggest_bump_truncation(rc));
}

RunOutcome run_talbot(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  const auto pp = required<std::int64_t>(p, "p");
  const auto q = required<std::int64_t>(p, "q");
  const auto n = param<std::int64_t>(p, "grid", 512);
  const double eta = param<double>(p, "eta", 0.1);
  const PropagatorNorm norm = parse_norm(param<std::string>(p, "norm", "constant_free"));
  require(n >= 2, "talbot: grid must be at least 2");
  const RationalTime t(pp, q);
  const PeriodicSpectrum spec = talbot_spectrum(p, pp, eta);
  const TalbotClosedForm closed(spec, t, eta, norm);

  Artifacts out(cfg, {{"concentration_defect_max", 1e-8}});
  CsvTable table({"x", "abs_u_closed_form", "abs_u_oracle"});
  double diff = 0.0, peak = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(n);
    const double c = closed(x);
    const double o = std::abs(linear_evolve_direct(spec, t, x, norm));
    diff = std::max(diff, std::abs(c - o));
    peak = std::max(peak, o);
    table.add_row({x, c, o});
  }
  out.csv("talbot.csv", table);
  out.outcome.summary = "max relative difference closed form vs oracle: " +
                        fmt(peak > 0.0 ? diff / peak : diff) + "\n";
  return out.outcome;
}

struct TrajectoryRow {
  CoefficientState state;
  ConservedReport report;
};

RunOutcome run_evolve(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  const double t0 = required<double>(p, "t0");
  const double t1 = required<double>(p, "t1");
  const double tol = param<double>(p, "tol", 1e-10);
  const std::string mode = param<std::string>(p, "mode", "line");
  const int outputs = param<int>(p, "outputs", 11);
  require(t0 > 0.0 && t1 > 0.0, "evolve: t0 and t1 must be positive");
  require(tol > 0.0, "evolve: tol must be positive");
  require(outputs >= 2, "evolve: outputs must be at least 2");
  require(mode == "line" || mode == "periodic", "evolve: mode must be line or periodic");
  if (!p.contains("data")) throw ValidationError("missing required parameter 'data'");
  const std::map<int, cplx> data = load_coefficients(p, "data", cfg.seed);

  IntegratorOptions opts;
  opts.tol = tol;
  Artifacts out(cfg, {{"tol", tol}});
  CsvTable table({"t", "sigma", "cl1", "cl2", "cl3", "moment2", "energy", "m0"});
  json snapshots = json::array();

  if (!data.empty()) {
    std::optional<CoefficientState> start;
    if (mode == "line") {
      LineData a;
      a.coeffs = data;
      const int N = param<int>(p, "N", a.max_index());
      require(N >= a.max_index(), "evolve: N must cover every data index");
      start = system_state(a, t0, N);
    } else {
      const int M = required<int>(p, "M");
      require(M >= 1, "evolve: M must be positive");
      std::vector<cplx> values(static_cast<std::size_t>(M));
      for (const auto& [j, c] : data) {
        require(j >= 0 && j < M, "evolve: periodic data indices must lie in 0..M-1");
        values[static_cast<std::size_t>(j)] = c;
      }
      start = CoefficientState::periodic(system_time(t0), M, std::move(values));
    }
    const CoefficientSystem system(start->mode(), start->extent(), opts.engine);
    std::vector<double> taus(static_cast<std::size_t>(outputs));
    const double l0 = std::log(system_time(t0)), l1 = std::log(system_time(t1));
    for (int i = 0; i < outputs; ++i)
      taus[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (outputs - 1));
    taus.front() = system_time(t0);
    taus.back() = system_time(t1);
    const std::vector<CoefficientState> states = integrate_snapshots(system, *start, taus, opts);
    for (const CoefficientState& s : states) {
      const ConservedReport r = conserved(s);
      table.add_row({physical_time(s.tau()), s.tau(), r.cl1, r.cl2.value_or(kNaN), r.cl3.value_or(kNaN),
                     r.moment2.value_or(kNaN), r.energy.value_or(kNaN), r.m0});
      snapshots.push_back(state_to_json(s));
    }
  }
  out.json_file("trajectory.json", {{"snapshots", snapshots}});
  out.csv("conserved.csv", table);
  out.outcome.summary = std::to_string(snapshots.size()) + " snapshots written\n";
  return out.outcome;
}

RunOutcome run_field(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  const std::string path = required<std::string>(p, "state");
  CoefficientState state = state_from_json(read_json_file(path));
  require(state.mode() == Mode::line, "field: the state must be in line mode");
  const Grid grid = parse_grid(required<std::string>(p, "grid"));
  const double tol = param<double>(p, "tol", 1e-10);
  if (p.contains("t") && !p.at("t").is_null()) {
    const double t = required<double>(p, "t");
    require(t > 0.0, "field: t must be positive");
    if (std::abs(1.0 / t - state.tau()) > 1e-15 * state.tau()) {
      IntegratorOptions opts;
      opts.tol = tol;
      const double t_state = 1.0 / state.tau();
      const CoefficientState sys = system_state(a_from_b(state), t_state, state.extent());
      state = field_state(integrate(sys, system_time(t), opts).state);
    }
  }
  Artifacts out(cfg, {{"tol", tol}});
  CsvTable table({"x", "re_u", "im_u", "abs_u"});
  const std::vector<double> xs = grid.points();
  for (const FieldSample& s : u_on_grid(state, xs))
    table.add_row({s.x, s.value.real(), s.value.imag(), std::abs(s.value)});
  out.csv("field.csv", table);
  out.outcome.summary = "t = " + fmt(1.0 / state.tau()) + ", " + std::to_string(xs.size()) + " points\n";
  return out.outcome;
}

RunOutcome run_filament(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  const double t = required<double>(p, "t");
  require(t > 0.0, "filament: t must be positive");
  const Grid grid = parse_grid(required<std::string>(p, "grid"));
  const std::vector<double> xs = grid.points();
  const double h = xs[1] - xs[0];

  std::vector<cplx> u(xs.size());
  json source;
  if (p.contains("data")) {
    LineData a;
    a.coeffs = load_coefficients(p, "data", cfg.seed);
    const int N = param<int>(p, "N", std::max(a.max_index(), 1));
    const double tau_start = param<double>(p, "tau_start", 2000.0);
    require(1.0 / t < tau_start, "filament: tau_start must exceed 1/t");
    IntegratorOptions opts;
    opts.tol = param<double>(p, "tol", 1e-10);
    const CoefficientState state =
        field_state(integrate(state_from_data(a, 1.0 / tau_start, N), system_time(t), opts).state);
    for (std::size_t i = 0; i < xs.size(); ++i) u[i] = u_from_state(state, xs[i]);
    source = {{"kind", "data"}, {"N", N}, {"tau_start", tau_start}};
  } else {
    double c0 = 0.0;
    if (p.contains("theta")) {
      c0 = c_from_angle(required<double>(p, "theta"));
    } else {
      c0 = required<double>(p, "c0");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) u[i] = self_similar(c0, xs[i], t);
    source = {{"kind", "self_similar"}, {"c0", c0}, {"theta_law", angle_from_c(c0)}};
  }

  const FrameField field = transport_x(u, xs.front(), h, Frame{}, t);
  const Curve curve = curve_from_tangent(field);
  const HasimotoDiagnostics hd = hasimoto_diagnostics(u, h);
  const CornerMeasurement corner = measure_corner(field, param<double>(p, "corner_fraction", 0.1));

  Artifacts out(cfg, {{"frame_defect", field.max_orthonormality_defect()}});
  CsvTable table({"x", "T1", "T2", "T3", "chi1", "chi2", "chi3", "curvature", "torsion"});
  std::ostringstream points;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vec3& T = field.frames[i].T;
    const Vec3& c = curve.points[i];
    table.add_row({xs[i], T.x(), T.y(), T.z(), c.x(), c.y(), c.z(), hd.curvature[i], hd.torsion[i]});
    points << fmt(c.x()) << ' ' << fmt(c.y()) << ' ' << fmt(c.z()) << '\n';
  }
  out.csv("filament.csv", table);
  out.text("filament_points.txt", "# x y z\n", points.str());
  out.json_file("filament.json",
                {{"source", source},
                 {"derivative_scheme", "centered"},
                 {"corner_theta", corner.theta},
                 {"frame_defect", field.max_orthonormality_defect()},
                 {"arclength_defect", curve.arclength_defect()}});
  out.outcome.summary = "corner angle " + fmt(corner.theta) + "\n";
  return out.outcome;
}

std::vector<double> cascade_times(const json& p) {
  if (p.contains("times")) {
    std::vector<double> ts;
    try {
      ts = p.at("times").get<std::vector<double>>();
    } catch (const json::exception&) {
      throw ValidationError("cascade: times must be a list of numbers");
    }
    std::sort(ts.begin(), ts.end(), std::greater<>());
    return ts;
  }
  const double tmin = param<double>(p, "tmin", 0.01);
  const double tmax = param<double>(p, "tmax", 0.2);
  const int steps = param<int>(p, "steps", 5);
  require(tmin > 0.0 && tmax > tmin, "cascade: need 0 < tmin < tmax");
  require(steps >= 2, "cascade: steps must be at least 2");
  std::vector<double> ts(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    ts[static_cast<std::size_t>(i)] = tmax * std::pow(tmin / tmax, static_cast<double>(i) / (steps - 1));
  ts.back() = tmin;
  return ts;
}

RunOutcome run_cascade(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  const std::vector<double> ts = cascade_times(p);
  LineData a;
  if (p.contains("data")) {
    a.coeffs = load_coefficients(p, "data", cfg.seed);
  } else {
    const double a1 = param<double>(p, "a1", 0.2);
    a.coeffs = {{-1, a1}, {1, a1}};
  }
  CascadeOptions opts;
  opts.truncation = param<int>(p, "N", opts.truncation);
  opts.tau_start = param<double>(p, "tau_start", opts.tau_start);
  opts.half_window = param<double>(p, "window", opts.half_window);
  opts.oversample = param<double>(p, "oversample", opts.oversample);
  opts.integrator.tol = param<double>(p, "tol", opts.integrator.tol);

  const CascadeReport rep = cascade_diagnostic(a, ts, opts);
  Artifacts out(cfg, {{"tol", opts.integrator.tol}});
  CsvTable table({"t", "sup", "window", "sup_plus", "sup_minus", "sup_half_window", "linear_sup",
                  "grid_points", "frame_defect"});
  for (const CascadeRow& r : rep.rows)
    table.add_row({r.t, r.sup, r.half_window, r.sup_plus, r.sup_minus, r.sup_half_window,
                   r.linear_sup, static_cast<double>(r.grid_points), r.frame_defect});
  out.csv("cascade.csv", table);
  const bool fit_ok = rep.rows.size() >= 3;
  out.json_file("cascade_fit.json",
                {{"slope", fit_ok ? json(rep.fit.slope) : json(nullptr)},
                 {"slope_stderr", fit_ok ? json(rep.fit.slope_stderr) : json(nullptr)},
                 {"intercept", fit_ok ? json(rep.fit.intercept) : json(nullptr)},
                 {"excess_slope", fit_ok ? json(rep.excess_fit.slope) : json(nullptr)},
                 {"excess_slope_stderr", fit_ok ? json(rep.excess_fit.slope_stderr) : json(nullptr)},
                 {"worst_dip", rep.worst_dip}});
  out.outcome.summary = "slope " + fmt(rep.fit.slope) + " +- " + fmt(rep.fit.slope_stderr) +
                        ", worst dip " + fmt(rep.worst_dip) + "\n";
  return out.outcome;
}

void profile_csv(Artifacts& out, const std::string& name, const std::vector<double>& grid,
                 const std::vector<double>& linear, const std::vector<double>* nonlinear) {
  CsvTable table(nonlinear ? std::vector<std::string>{"x", "abs_u_linear", "abs_u_nonlinear"}
                           : std::vector<std::string>{"x", "abs_u_linear"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (nonlinear)
      table.add_row({grid[i], linear[i], (*nonlinear)[i]});
    else
      table.add_row({grid[i], linear[i]});
  }
  out.csv(name, table);
}

RunOutcome run_rogue(const ExperimentConfig& cfg) {
  const json& p = cfg.parameters;
  json cj = json::object();
  if (p.contains("config")) {
    const json& c = p.at("config");
    cj = c.is_object() ? c : read_json_file(param<std::string>(p, "config", ""));
  }
  const RogueConfig rc = rogue_config_from_json(cj);
  rc.validate();
  const int K = param<int>(p, "K", 0) > 0 ? param<int>(p, "K", 0) : suggest_bump_truncation(rc);
  const PeriodicSpectrum alpha = build_bump_coefficients(rc, K);

  NonlinearRunOptions opts;
  opts.linear.norm = parse_norm(param<std::string>(p, "norm", "constant_free"));
  opts.target_l1 = param<double>(p, "target_l1", opts.target_l1);
  opts.window = param<int>(p, "window", opts.window);
  opts.tau_start = param<double>(p, "tau_start", opts.tau_start);
  opts.stepper.dtau = param<double>(p, "dtau", opts.stepper.dtau);
  opts.tau_start_sensitivity = param<bool>(p, "tau_start_sensitivity", false);
  const bool nonlinear = param<bool>(p, "nonlinear", true);

  Artifacts out(cfg, {{"bump_tail", 1e-12}, {"dtau", opts.stepper.dtau}});
  json body = {{"config", rogue_config_to_json(rc)}, {"K", K}};
  if (nonlinear) {
    // "linear" always describes the data as given; the nonlinear comparison
    // runs on data rescaled to target_l1, with its own linear baseline
    body["linear"] = rogue_report_to_json(run_linear(rc, alpha, opts.linear));
    const NonlinearReport rep = run_nonlinear(rc, alpha, opts);
    body["linear_rescaled"] = rogue_report_to_json(rep.linear);
    body["nonlinear"] = rogue_report_to_json(rep.nonlinear);
    body["nonlinear"]["l1_norm"] = rep.l1_norm;
    body["nonlinear"]["l2s_norm"] = rep.l2s_norm;
    body["nonlinear"]["scale"] = rep.scale;
    body["nonlinear"]["relative_change_tpq"] = rep.relative_change_tpq;
    body["nonlinear"]["relative_change_tilde"] = rep.relative_change_tilde;
    body["nonlinear"]["perturbative_ratio"] = rep.perturbative_ratio;
    body["nonlinear"]["max_remainder"] = rep.max_remainder;
    body["nonlinear"]["smallness_warning"] = rep.smallness_warning;
    if (rep.tau_start_sensitivity) body["nonlinear"]["tau_start_sensitivity"] = *rep.tau_start_sensitivity;
    body["dichotomy"] = rep.linear.dichotomy && rep.nonlinear.dichotomy;
    profile_csv(out, "rogue_profile_tpq.csv", rep.linear.grid_tpq, rep.linear.profile_tpq,
                &rep.nonlinear.profile_tpq);
    profile_csv(out, "rogue_profile_tilde.csv", rep.linear.grid_tilde, rep.linear.profile_tilde,
                &rep.nonlinear.profile_tilde);
  } else {
    const RogueReport rep = run_linear(rc, alpha, opts.linear);
    body["linear"] = rogue_report_to_json(rep);
    body["dichotomy"] = rep.dichotomy;
    profile_csv(out, "rogue_profile_tpq.csv", rep.grid_tpq, rep.profile_tpq, nullptr);
    profile_csv(out, "rogue_profile_tilde.csv", rep.grid_tilde, rep.profile_tilde, nullptr);
  }
  out.json_file("rogue_report.json", body);
  out.outcome.summary = std::string("dichotomy: ") + (body["dichotomy"].get<bool>() ? "true" : "false") + "\n";
  return out.outcome;
}

}  // namespace

const std::vector<std::string>& experiment_commands() {
  static const std::vector<std::string> names{"gauss",    "talbot",  "evolve", "field",
                                              "filament", "cascade", "rogue"};
  return names;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  require(j.is_object(), "experiment config must be a JSON object");
  ExperimentConfig cfg;
  try {
    cfg.command = j.at("command").get<std::string>();
    cfg.parameters = j.value("parameters", json::object());
    cfg.output_dir = j.value("output_dir", std::string("."));
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.timestamp = j.value("timestamp", std::string());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("experiment config: ") + e.what());
  }
  return cfg;
}

json ExperimentConfig::to_json() const {
  return {{"command", command}, {"parameters", parameters}, {"seed", seed}};
}

RunOutcome run(const ExperimentConfig& config) {
  const auto& names = experiment_commands();
  require(std::find(names.begin(), names.end(), config.command) != names.end(),
          "unknown command '" + config.command + "'");
  require(config.parameters.is_object(), "parameters must be a JSON object");
  try {
    if (config.command == "gauss") return run_gauss(config);
    if (config.command == "talbot") return run_talbot(config);
    if (config.command == "evolve") return run_evolve(config);
    if (config.command == "field") return run_field(config);
    if (config.command == "filament") return run_filament(config);
    if (config.command == "cascade") return run_cascade(config);
    return run_rogue(config);
  } catch (const IntegrationError& e) {
    const fs::path path = config.output_dir / "last_good_state.json";
    write_text_file(path, state_to_json(e.last_good()).dump(2) + "\n");
    throw NumericalError(std::string(e.what()) + "; last good state written to " + path.string());
  }
}

}  // namespace nlslab
