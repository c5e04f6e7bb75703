#pragma once

#include "polydual/counting.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polydual {

using Json = nlohmann::ordered_json;

/// Counts are decimal strings. `seconds` is omitted when timing is off.
Json to_json(const CountReport& r, bool timing = true);
/// Inverse of to_json. Throws Error(parse_error) on schema violations.
CountReport count_report_from_json(const Json& j);

inline constexpr std::string_view kCsvHeader = "ring,k,quantity,formula,enum,match,seconds";
std::string csv_row(const CountReport& r);
std::string text_line(const CountReport& r);

/// Result cache: one JSON file per key, written to a temporary file and
/// renamed into place.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  /// FNV-1a 64 over the key fields, separated by a unit separator.
  static std::string key(const std::vector<std::string>& fields);

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace polydual
