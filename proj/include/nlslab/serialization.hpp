#ifndef NLSLAB_SERIALIZATION_HPP
#define NLSLAB_SERIALIZATION_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/linear_talbot.hpp"
#include "nlslab/rogue_experiment.hpp"

namespace nlslab {

using json = nlohmann::json;

/// Library version written into every output header.
inline constexpr const char* kLibraryVersion = "1.0.0";

/// %.17g: enough digits for an exact double round trip.
std::string format_double(double v);

/// {"j": [re, im], ...} <-> map. Keys must parse as integers.
std::map<int, cplx> coeff_map_from_json(const json& j);
json coeff_map_to_json(const std::map<int, cplx>& m);

/// {"tau", "mode", "extent", "coeffs"}; coeffs keyed by index.
json state_to_json(const CoefficientState& state);
CoefficientState state_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Stable 64-bit FNV-1a of the canonical (sorted-key, compact) dump.
std::uint64_t config_hash(const json& config);

/// Provenance attached to every artifact. The timestamp is the only field
/// that differs between two runs of the same configuration.
struct Metadata {
  std::string command;
  json config;
  json tolerances = json::object();
  std::string timestamp;

  json to_json() const;
  /// "# key: value" lines for CSV files.
  std::string csv_header() const;
};

/// Column-oriented CSV with a metadata preamble; numbers use format_double.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add_row(const std::vector<double>& row);
  std::size_t rows() const { return rows_.size(); }
  std::string render(const Metadata* meta = nullptr) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

RogueConfig rogue_config_from_json(const json& j);
json rogue_config_to_json(const RogueConfig& cfg);
/// Scalars and flags only; the profiles go to CSV.
json rogue_report_to_json(const RogueReport& r);
json conserved_to_json(const ConservedReport& r);

}  // namespace nlslab

#endif  // NLSLAB_SERIALIZATION_HPP
