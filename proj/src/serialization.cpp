#include "nlslab/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nlslab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::map<int, cplx> coeff_map_from_json(const json& j) {
  require(j.is_object(), "coefficient data must be a JSON object mapping index -> [re, im]");
  std::map<int, cplx> out;
  for (const auto& [key, value] : j.items()) {
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(key, &used);
      require(used == key.size(), "");
    } catch (const std::exception&) {
      throw ValidationError("coefficient index '" + key + "' is not an integer");
    }
    require(value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number(),
            "coefficient " + key + " must be a pair [re, im]");
    out[idx] = {value[0].get<double>(), value[1].get<double>()};
  }
  return out;
}

json coeff_map_to_json(const std::map<int, cplx>& m) {
  json j = json::object();
  for (const auto& [k, c] : m) j[std::to_string(k)] = {c.real(), c.imag()};
  return j;
}

json state_to_json(const CoefficientState& state) {
  std::map<int, cplx> m;
  for (std::size_t i = 0; i < state.size(); ++i) m[state.index(i)] = state.values()[i];
  return {{"tau", state.tau()},
          {"mode", state.mode() == Mode::line ? "line" : "periodic"},
          {"extent", state.extent()},
          {"coeffs", coeff_map_to_json(m)}};
}

CoefficientState state_from_json(const json& j) {
  require(j.is_object() && j.contains("tau") && j.contains("mode") && j.contains("extent") &&
              j.contains("coeffs"),
          "state file needs tau, mode, extent and coeffs");
  const double tau = j.at("tau").get<double>();
  const std::string mode = j.at("mode").get<std::string>();
  const int extent = j.at("extent").get<int>();
  const std::map<int, cplx> m = coeff_map_from_json(j.at("coeffs"));
  if (mode == "line") return CoefficientState::line(tau, extent, m);
  require(mode == "periodic", "state mode must be 'line' or 'periodic'");
  std::vector<cplx> values(static_cast<std::size_t>(std::max(extent, 0)));
  for (const auto& [k, c] : m) {
    require(k >= 0 && k < extent, "periodic state indices must lie in 0..M-1");
    values[static_cast<std::size_t>(k)] = c;
  }
  return CoefficientState::periodic(tau, extent, std::move(values));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::uint64_t config_hash(const json& config) {
  const std::string s = config.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

json Metadata::to_json() const {
  return {{"command", command},
          {"config_hash", hex64(config_hash(config))},
          {"config", config},
          {"versions", {{"nlslab", kLibraryVersion}}},
          {"tolerances", tolerances},
          {"timestamp", timestamp}};
}

std::string Metadata::csv_header() const {
  std::ostringstream os;
  os << "# command: " << command << "\n";
  os << "# config_hash: " << hex64(config_hash(config)) << "\n";
  os << "# config: " << config.dump() << "\n";
  os << "# versions: nlslab " << kLibraryVersion << "\n";
  os << "# tolerances: " << tolerances.dump() << "\n";
  os << "# timestamp: " << timestamp << "\n";
  return os.str();
}

void CsvTable::add_row(const std::vector<double>& row) {
  require(row.size() == columns_.size(), "CsvTable: row width does not match the header");
  rows_.push_back(row);
}

std::string CsvTable::render(const Metadata* meta) const {
  std::ostringstream os;
  if (meta) os << meta->csv_header();
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << "\n";
  }
  return os.str();
}

RogueConfig rogue_config_from_json(const json& j) {
  require(j.is_object(), "rogue config must be a JSON object");
  RogueConfig cfg;
  try {
    cfg.eta = j.value("eta", cfg.eta);
    cfg.p = j.value("p", cfg.p);
    cfg.q = j.value("q", cfg.q);
    cfg.s = j.value("s", cfg.s);
    cfg.beta = j.value("beta", cfg.beta);
    cfg.p_tilde = j.value("p_tilde", cfg.p_tilde);
    cfg.q_tilde = j.value("q_tilde", cfg.q_tilde);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("rogue config: ") + e.what());
  }
  const std::string bump = j.value("bump", std::string("standard"));
  require(bump == "standard", "rogue config: only the 'standard' bump profile is built in");
  return cfg;
}

json rogue_config_to_json(const RogueConfig& cfg) {
  return {{"eta", cfg.eta},         {"p", cfg.p},   {"q", cfg.q},
          {"s", cfg.s},             {"beta", cfg.beta},
          {"p_tilde", cfg.p_tilde}, {"q_tilde", cfg.q_tilde},
          {"bump", cfg.bump.name}};
}

json rogue_report_to_json(const RogueReport& r) {
  return {{"amp_at_0_tpq", r.amp_at_0_tpq},
          {"amp_max_tpq", r.amp_max_tpq},
          {"amp_at_0_tilde", r.amp_at_0_tilde},
          {"zero_region_max_tpq", r.zero_region_max_tpq},
          {"period_check", r.period_check},
          {"remainder_estimate", r.remainder_estimate},
          {"predicted_amp_stated", r.predicted_amp_stated},
          {"predicted_amp_kernel", r.predicted_amp_kernel},
          {"predicted_amp_tilde_stated", r.predicted_amp_tilde_stated},
          {"predicted_amp_tilde_ptilde", r.predicted_amp_tilde_ptilde},
          {"oracle_agreement", r.oracle_agreement},
          {"oracle_agreement_tilde", r.oracle_agreement_tilde},
          {"dichotomy_ratio", r.dichotomy_ratio},
          {"dichotomy", r.dichotomy},
          {"warnings", r.warnings}};
}

json conserved_to_json(const ConservedReport& r) {
  json j = {{"tau", r.tau}, {"cl1", r.cl1}, {"m0", r.m0}};
  if (r.cl2) j["cl2"] = *r.cl2;
  if (r.cl3) j["cl3"] = *r.cl3;
  if (r.moment2) j["moment2"] = *r.moment2;
  if (r.energy) j["energy"] = *r.energy;
  return j;
}

}  // namespace nlslab
