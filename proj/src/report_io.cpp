#include "polydual/report_io.hpp"

#include "polydual/error.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

namespace polydual {

Json to_json(const CountReport& r, bool timing) {
  Json j;
  j["ring"] = r.ring;
  j["k"] = r.k;
  j["quantity"] = r.quantity;
  j["method"] = r.method;
  if (r.formula) j["formula"] = to_decimal(*r.formula);
  if (r.oracle) {
    j["enum"] = to_decimal(*r.oracle);
  } else if (r.oracle_skipped) {
    j["enum"] = "skipped:" + *r.oracle_skipped;
  }
  j["relation"] = r.relation == Relation::equal ? "equal" : "differ";
  if (r.match) j["match"] = *r.match;
  if (timing && (r.formula_seconds || r.oracle_seconds)) {
    Json s = Json::object();
    if (r.formula_seconds) s["formula"] = *r.formula_seconds;
    if (r.oracle_seconds) s["enum"] = *r.oracle_seconds;
    j["seconds"] = s;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::parse_error, "report: " + what);
}

Count parse_count(const Json& v, const char* field) {
  if (!v.is_string()) schema_error(std::string(field) + " must be a decimal string");
  const std::string s = v.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    schema_error(std::string(field) + " must be a decimal string");
  }
  return Count(s);
}

}  // namespace

CountReport count_report_from_json(const Json& j) {
  if (!j.is_object()) schema_error("not an object");
  for (const char* f : {"ring", "k", "quantity", "method", "relation"}) {
    if (!j.contains(f)) schema_error(std::string("missing ") + f);
  }
  CountReport r;
  try {
    r.ring = j.at("ring").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.quantity = j.at("quantity").get<std::string>();
    r.method = j.at("method").get<std::string>();
    const std::string rel = j.at("relation").get<std::string>();
    if (rel != "equal" && rel != "differ") schema_error("relation must be equal or differ");
    r.relation = rel == "equal" ? Relation::equal : Relation::differ;
    if (j.contains("formula")) r.formula = parse_count(j.at("formula"), "formula");
    if (j.contains("enum")) {
      const std::string e = j.at("enum").get<std::string>();
      if (e.rfind("skipped:", 0) == 0) {
        r.oracle_skipped = e.substr(8);
      } else {
        r.oracle = parse_count(j.at("enum"), "enum");
      }
    }
    if (j.contains("match")) r.match = j.at("match").get<bool>();
    if (j.contains("seconds")) {
      const Json& s = j.at("seconds");
      if (s.contains("formula")) r.formula_seconds = s.at("formula").get<double>();
      if (s.contains("enum")) r.oracle_seconds = s.at("enum").get<double>();
    }
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds_text(const CountReport& r) {
  if (!r.formula_seconds && !r.oracle_seconds) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << r.formula_seconds.value_or(0) + r.oracle_seconds.value_or(0);
  return os.str();
}

}  // namespace

std::string csv_row(const CountReport& r) {
  std::string row = csv_field(r.ring) + ',' + std::to_string(r.k) + ',' + csv_field(r.quantity) + ',';
  if (r.formula) row += to_decimal(*r.formula);
  row += ',';
  if (r.oracle) {
    row += to_decimal(*r.oracle);
  } else if (r.oracle_skipped) {
    row += csv_field("skipped:" + *r.oracle_skipped);
  }
  row += ',';
  if (r.match) row += *r.match ? "true" : "false";
  row += ',' + seconds_text(r);
  return row;
}

std::string text_line(const CountReport& r) {
  std::string s = r.ring + " k=" + std::to_string(r.k) + " " + r.quantity + ":";
  if (r.formula) s += " formula=" + to_decimal(*r.formula);
  if (r.oracle) s += " enum=" + to_decimal(*r.oracle);
  if (r.oracle_skipped) s += " enum=skipped:" + *r.oracle_skipped;
  if (r.match) s += *r.match ? " match" : " MISMATCH";
  if (!r.note.empty()) s += " (" + r.note + ")";
  return s;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ReportCache::key(const std::vector<std::string>& fields) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& f : fields) {
    for (unsigned char c : f) mix(c);
    mix(0x1F);
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::optional<std::string> ReportCache::load(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ReportCache::store(const std::string& key, const std::string& payload) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir_);
  const auto final_path = dir_ / (key + ".json");
  const auto tmp = dir_ / (key + ".json.tmp." + std::to_string(::getpid()) + "." +
                           std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << payload;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("cache: cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace polydual
