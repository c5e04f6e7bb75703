#include "polydual/cli.hpp"

#include "polydual/counting.hpp"
#include "polydual/error.hpp"
#include "polydual/null_ideals.hpp"
#include "polydual/permutations.hpp"
#include "polydual/poly_text.hpp"
#include "polydual/report_io.hpp"
#include "polydual/ring_spec.hpp"
#include "polydual/table_ring.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace polydual {

namespace {

struct Options {
  std::string ring;
  std::string poly;
  std::size_t k = 0;
  std::size_t n = 0;
  std::string quantity = "functions";
  std::string method = "both";
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  std::string rings_file;
  std::string values;
  std::string derivative;
  std::string path = "auto";
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  bool no_timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EnumOptions enum_options(const Options& o) { return EnumOptions{o.budget, o.workers}; }

std::optional<ReportCache> open_cache(const Options& o) {
  if (!o.cache_dir.empty()) return ReportCache(o.cache_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') {
    return ReportCache(env);
  }
  return std::nullopt;
}

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + render_value(e);
    return "[" + s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, e] : v.items()) s += (s.empty() ? "" : ", ") + key + "=" + render_value(e);
    return "{" + s + "}";
  }
  return v.dump();
}

std::string render(const Json& j, const std::string& format) {
  if (format == "csv") throw UsageError("csv output is available for count, verify and sweep");
  if (format == "text") {
    std::string s;
    for (const auto& [key, v] : j.items()) s += key + ": " + render_value(v) + "\n";
    return s;
  }
  return j.dump(2) + "\n";
}

std::size_t resolve_k(const Options& o, const RingDescriptor& d, bool required) {
  if (o.k != 0 && d.k != 0 && o.k != d.k) throw UsageError("--k conflicts with the [k] in --ring");
  const std::size_t k = o.k != 0 ? o.k : d.k;
  if (required && k == 0) throw UsageError("k is required: pass --k or write the ring as SPEC[k]");
  return k;
}

Json ring_info(const Options& o) {
  const RingDescriptor d = parse_ring_descriptor(o.ring);
  const RingPtr r = FiniteRing::build(d.base);
  Json j;
  j["ring"] = to_string(d);
  j["base"] = to_string(d.base);
  j["order"] = std::to_string(r->order());
  j["characteristic"] = std::to_string(r->characteristic());
  j["units"] = std::to_string(r->unit_count());
  j["is_field"] = r->is_field();
  j["is_local"] = r->is_local();
  Json parts = Json::array();
  for (const RingPtr& s : r->summands()) parts.push_back(to_string(s->spec()));
  j["summands"] = parts;
  if (const auto ls = r->local_structure()) {
    j["maximal_ideal_size"] = std::to_string(ls->maximal_ideal.size());
    j["nilpotency"] = ls->nilpotency;
    j["residue_field"] = to_string(ls->residue_field->spec());
    if (r->order() <= kMaxTableRingOrder) j["suitable"] = is_suitable(*r);
  }
  if (d.k > 0) {
    const DualRing dual(r, d.k);
    Json dj;
    dj["k"] = d.k;
    dj["order"] = to_decimal(dual.order());
    dj["units"] = to_decimal(Count(r->unit_count()) * ipow(Count(r->order()), d.k));
    dj["is_local"] = r->is_local();
    if (const auto ls = r->local_structure()) {
      dj["nilpotency"] = ls->nilpotency + 1;
      if (dual.order() <= kMaxTableRingOrder) dj["suitable"] = is_suitable(dual);
    }
    j["dual"] = dj;
  }
  return j;
}

Json null_check(const Options& o) {
  const RingDescriptor d = parse_ring_descriptor(o.ring);
  const std::size_t k = resolve_k(o, d, false);
  const RingPtr r = FiniteRing::build(d.base);
  Json j;
  j["ring"] = to_string(d.base);
  if (k == 0) {
    const Poly f = parse_poly(o.poly, r);
    j["poly"] = format_poly(f);
    j["in_N"] = in_N(f);
    j["in_Nprime"] = in_Nprime(f);
    return j;
  }
  const DualPoly f = parse_dual_poly(o.poly, r, k);
  j["k"] = k;
  j["poly"] = format_dual_poly(f);
  j["null_on_dual"] = is_null_on_dual(f);
  j["f0_in_Nprime"] = in_Nprime(f.f0);
  Json parts = Json::array();
  for (const Poly& p : f.parts) parts.push_back(in_N(p));
  j["parts_in_N"] = parts;
  return j;
}

Json null_canonical(const Options& o) {
  const RingPtr r = FiniteRing::build(parse_ring_spec(o.ring));
  const Poly base = canonical_monic_null_base(r);
  const Poly dual = canonical_monic_null_dual(r);
  Json j;
  j["ring"] = to_string(r->spec());
  j["base"] = format_poly(base);
  j["base_degree"] = *base.degree();
  j["dual"] = format_poly(dual);
  j["dual_degree"] = *dual.degree();
  return j;
}

Json null_enumerate(const Options& o) {
  const RingPtr r = FiniteRing::build(parse_ring_spec(o.ring));
  const BoundedNullSets sets = enumerate_bounded_null(r, o.n, enum_options(o));
  auto listing = [](const std::vector<Poly>& ps) {
    Json l;
    l["size"] = std::to_string(ps.size());
    Json m = Json::array();
    for (const Poly& p : ps) m.push_back(format_poly(p));
    l["members"] = m;
    return l;
  };
  Json j;
  j["ring"] = to_string(r->spec());
  j["n"] = o.n;
  j["N"] = listing(sets.null);
  j["Nprime"] = listing(sets.null_primed);
  return j;
}

Json witness_json(const PermWitness& w, const FiniteRing& r, std::size_t k) {
  Json j;
  if (w.kind == PermWitness::Kind::nonunit_derivative) {
    j["kind"] = "nonunit_derivative";
    j["point"] = r.format(w.point);
    return j;
  }
  j["kind"] = "collision";
  if (k == 0) {
    j["x"] = r.format(w.x[0]);
    j["y"] = r.format(w.y[0]);
  } else {
    const DualRing d(r.shared_from_this(), k);
    j["x"] = d.format(DualElement{w.x});
    j["y"] = d.format(DualElement{w.y});
  }
  return j;
}

Json perm_check(const Options& o) {
  const RingDescriptor d = parse_ring_descriptor(o.ring);
  const std::size_t k = resolve_k(o, d, false);
  const RingPtr r = FiniteRing::build(d.base);
  PermVerdict v;
  Json j;
  j["ring"] = k == 0 ? to_string(d.base) : to_string(RingDescriptor{d.base, k});
  if (k == 0) {
    const Poly f = parse_poly(o.poly, r);
    j["poly"] = format_poly(f);
    std::string path = o.path;
    if (path == "auto") path = r->is_direct_sum() ? "directsum" : r->is_field() ? "exhaustive" : "local";
    if (path == "exhaustive") {
      v = is_perm_on_base(f);
    } else if (path == "local") {
      v = is_perm_local(f);
    } else if (path == "directsum") {
      v = is_perm_directsum(f);
    } else {
      throw UsageError("--path " + path + " applies to dual rings only");
    }
  } else {
    const DualPoly f = parse_dual_poly(o.poly, r, k);
    j["poly"] = format_dual_poly(f);
    if (o.path == "auto" || o.path == "dual") {
      v = is_perm_on_dual(f);
    } else if (o.path == "nonfield") {
      v = is_perm_dual_nonfield(f);
    } else {
      throw UsageError("--path " + o.path + " applies to base rings only");
    }
  }
  j["is_permutation"] = v.is_permutation;
  j["criterion_path"] = std::string(criterion_path_name(v.path));
  if (v.witness) j["witness"] = witness_json(*v.witness, *r, k);
  return j;
}

std::vector<Elem> parse_table(const std::string& text, const FiniteRing& r, const char* flag) {
  std::vector<Elem> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(r.parse_literal(item));
  if (values.size() != r.order()) {
    throw Error(ErrorCode::precondition, std::string(flag) + " needs " + std::to_string(r.order()) +
                                             " values, got " + std::to_string(values.size()));
  }
  return values;
}

Json pair_construct(const Options& o) {
  const RingPtr r = FiniteRing::build(parse_ring_spec(o.ring));
  const FunctionTable F{r, parse_table(o.values, *r, "--values")};
  const FunctionTable G{r, parse_table(o.derivative, *r, "--derivative")};
  const Poly f = construct_pair_field(F, G);
  Json j;
  j["ring"] = to_string(r->spec());
  j["poly"] = format_poly(f);
  j["degree"] = f.degree() ? Json(*f.degree()) : Json(nullptr);
  j["verified"] = induce(f) == F && induce(derivative(f)) == G;
  return j;
}

std::string count_key(const std::string& spec, std::size_t k, const std::string& quantity,
                      const std::string& method, std::uint64_t budget) {
  return ReportCache::key({"count", spec, std::to_string(k), quantity, method, std::to_string(budget)});
}

// Computes or loads one count report; the returned JSON has passed through
// the serialized form either way.
CountReport cached_count(const Options& o, const RingPtr& r, std::size_t k, const std::string& quantity,
                         const std::string& method, std::uint64_t budget) {
  const auto cache = open_cache(o);
  const std::string key = count_key(to_string(r->spec()), k, quantity, method, budget);
  if (cache) {
    if (auto payload = cache->load(key)) return count_report_from_json(Json::parse(*payload));
  }
  EnumOptions opt = enum_options(o);
  opt.budget = budget;
  const CountReport fresh = count(r, k, parse_quantity(quantity), parse_method(method), opt);
  const std::string payload = to_json(fresh).dump();
  if (cache) cache->store(key, payload);
  return count_report_from_json(Json::parse(payload));
}

std::string count_command(const Options& o) {
  const RingDescriptor d = parse_ring_descriptor(o.ring);
  const std::size_t k = resolve_k(o, d, true);
  const RingPtr r = FiniteRing::build(d.base);
  const CountReport rep = cached_count(o, r, k, o.quantity, o.method, o.budget);
  if (o.format == "csv") return std::string(kCsvHeader) + "\n" + csv_row(rep) + "\n";
  if (o.format == "text") return text_line(rep) + "\n";
  return to_json(rep, !o.no_timing).dump(2) + "\n";
}

std::string verify_command(const Options& o) {
  const RingDescriptor d = parse_ring_descriptor(o.ring);
  const std::size_t k = resolve_k(o, d, true);
  const RingPtr r = FiniteRing::build(d.base);
  const auto cache = open_cache(o);
  const std::string key =
      ReportCache::key({"verify", to_string(r->spec()), std::to_string(k), std::to_string(o.budget)});
  std::optional<std::string> payload;
  if (cache) payload = cache->load(key);
  if (!payload) {
    Json arr = Json::array();
    for (const CountReport& rep : verify_identities(r, k, enum_options(o))) arr.push_back(to_json(rep));
    payload = arr.dump();
    if (cache) cache->store(key, *payload);
  }
  std::vector<CountReport> reports;
  for (const Json& e : Json::parse(*payload)) reports.push_back(count_report_from_json(e));

  std::string s;
  if (o.format == "csv") {
    s = std::string(kCsvHeader) + "\n";
    for (const auto& rep : reports) s += csv_row(rep) + "\n";
  } else if (o.format == "text") {
    for (const auto& rep : reports) s += text_line(rep) + "\n";
  } else {
    Json arr = Json::array();
    for (const auto& rep : reports) arr.push_back(to_json(rep, !o.no_timing));
    s = arr.dump(2) + "\n";
  }
  return s;
}

std::vector<std::size_t> sweep_ks(const Json& v) {
  std::vector<std::size_t> ks;
  if (v.is_number_unsigned()) {
    ks.push_back(v.get<std::size_t>());
  } else if (v.is_array()) {
    for (const Json& e : v) ks.push_back(e.get<std::size_t>());
  } else if (v.is_object()) {
    for (std::size_t k = v.at("from").get<std::size_t>(); k <= v.at("to").get<std::size_t>(); ++k) {
      ks.push_back(k);
    }
  } else {
    throw Error(ErrorCode::parse_error, "sweep config: k must be a number, a list or {from, to}");
  }
  return ks;
}

std::string sweep_command(const Options& o) {
  std::ifstream in(o.rings_file);
  if (!in) throw Error(ErrorCode::precondition, "cannot read sweep config " + o.rings_file);
  Json cfg;
  std::vector<std::string> rings, quantities{"functions", "perms", "stab"};
  std::vector<std::size_t> ks{1};
  std::string method = o.method;
  std::uint64_t budget = o.budget;
  try {
    cfg = Json::parse(in);
    rings = cfg.at("rings").get<std::vector<std::string>>();
    if (cfg.contains("k")) ks = sweep_ks(cfg.at("k"));
    if (cfg.contains("quantities")) quantities = cfg.at("quantities").get<std::vector<std::string>>();
    if (cfg.contains("method")) method = cfg.at("method").get<std::string>();
    if (cfg.contains("budget")) budget = cfg.at("budget").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("sweep config: ") + e.what());
  }
  parse_method(method);
  for (const auto& qn : quantities) parse_quantity(qn);

  std::string csv = std::string(kCsvHeader) + "\n";
  Json arr = Json::array();
  for (const std::string& spec : rings) {
    for (std::size_t k : ks) {
      for (const std::string& quantity : quantities) {
        try {
          const RingPtr r = FiniteRing::build(parse_ring_spec(spec));
          const CountReport rep = cached_count(o, r, k, quantity, method, budget);
          csv += csv_row(rep) + "\n";
          arr.push_back(to_json(rep, !o.no_timing));
        } catch (const Error& e) {
          const std::string code(error_code_name(e.code()));
          CountReport failed;
          failed.ring = spec;
          failed.k = k;
          failed.quantity = quantity;
          failed.method = method;
          failed.oracle_skipped = "error:" + code;
          failed.note = e.what();
          csv += csv_row(failed) + "\n";
          arr.push_back(to_json(failed, false));
        }
      }
    }
  }
  if (o.format == "json") return arr.dump(2) + "\n";
  return csv;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::precondition, "cannot write " + o.out);
  f << text;
}

Json error_json(const Error& e) {
  Json j;
  j["code"] = std::string(error_code_name(e.code()));
  j["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["offset"] = pe->offset();
  Json wrap;
  wrap["error"] = j;
  return wrap;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polynomial functions and permutations on dual-number rings over finite rings", "polydual"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember(formats));
    c->add_option("--out", o.out, "Write the report to this file");
  };
  auto add_enum = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Candidate cap per enumeration")->check(CLI::PositiveNumber);
    c->add_option("--workers", o.workers, "Enumeration threads")->check(CLI::Range(1U, 256U));
  };
  auto add_counting = [&](CLI::App* c) {
    add_enum(c);
    c->add_option("--cache-dir", o.cache_dir, std::string("Report cache directory (default: $") + kCacheDirEnv + ")");
    c->add_flag("--no-timing", o.no_timing, "Omit wall times from JSON output");
  };
  auto ring_opt = [&](CLI::App* c, const char* help) { c->add_option("--ring", o.ring, help)->required(); };

  CLI::App* ring = app.add_subcommand("ring", "Ring inspection");
  ring->require_subcommand(1);
  CLI::App* ring_info_cmd = ring->add_subcommand("info", "Order, units, local structure");
  ring_opt(ring_info_cmd, "Ring, optionally with [k]");
  add_common(ring_info_cmd);

  CLI::App* null = app.add_subcommand("null", "Null polynomials");
  null->require_subcommand(1);
  CLI::App* null_check_cmd = null->add_subcommand("check", "Membership in N and N', or nullity on R[a1..ak]");
  ring_opt(null_check_cmd, "Ring, optionally with [k]");
  null_check_cmd->add_option("--poly", o.poly, "Polynomial")->required();
  null_check_cmd->add_option("--k", o.k, "Dual variables")->check(CLI::Range(1, 64));
  add_common(null_check_cmd);
  CLI::App* null_canonical_cmd = null->add_subcommand("canonical", "Monic null polynomials");
  ring_opt(null_canonical_cmd, "Ring");
  add_common(null_canonical_cmd);
  CLI::App* null_enum_cmd = null->add_subcommand("enumerate", "N_n and N'_n by exhaustive filter");
  ring_opt(null_enum_cmd, "Ring");
  null_enum_cmd->add_option("--n", o.n, "Degree bound (deg < n)")->required()->check(CLI::Range(1, 4096));
  add_common(null_enum_cmd);
  add_enum(null_enum_cmd);

  CLI::App* perm = app.add_subcommand("perm", "Permutation polynomials");
  perm->require_subcommand(1);
  CLI::App* perm_check_cmd = perm->add_subcommand("check", "Permutation verdict with witness");
  ring_opt(perm_check_cmd, "Ring, optionally with [k]");
  perm_check_cmd->add_option("--poly", o.poly, "Polynomial")->required();
  perm_check_cmd->add_option("--k", o.k, "Dual variables")->check(CLI::Range(1, 64));
  perm_check_cmd->add_option("--path", o.path, "auto, exhaustive, local, directsum, dual or nonfield")
      ->check(CLI::IsMember({"auto", "exhaustive", "local", "directsum", "dual", "nonfield"}));
  add_common(perm_check_cmd);

  CLI::App* pair = app.add_subcommand("pair", "Function/derivative pairs over fields");
  pair->require_subcommand(1);
  CLI::App* pair_cmd = pair->add_subcommand("construct", "Polynomial with prescribed [f] and [f']");
  ring_opt(pair_cmd, "Finite field");
  pair_cmd->add_option("--values", o.values, "Comma separated table of [f]")->required();
  pair_cmd->add_option("--derivative", o.derivative, "Comma separated table of [f']")->required();
  add_common(pair_cmd);

  const std::vector<std::string> quantities{"functions", "perms", "stab"};
  const std::vector<std::string> methods{"formula", "enum", "both"};
  CLI::App* count_cmd = app.add_subcommand("count", "One counting quantity on R[a1..ak]");
  ring_opt(count_cmd, "Ring, optionally with [k]");
  count_cmd->add_option("--k", o.k, "Dual variables")->check(CLI::Range(1, 64));
  count_cmd->add_option("--quantity", o.quantity, "functions, perms or stab")->check(CLI::IsMember(quantities));
  count_cmd->add_option("--method", o.method, "formula, enum or both")->check(CLI::IsMember(methods));
  add_common(count_cmd);
  add_counting(count_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "All counting identities on R[a1..ak]");
  ring_opt(verify_cmd, "Ring, optionally with [k]");
  verify_cmd->add_option("--k", o.k, "Dual variables")->check(CLI::Range(1, 64));
  add_common(verify_cmd);
  add_counting(verify_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Batch counts from a JSON config into CSV");
  sweep_cmd->add_option("--rings", o.rings_file, "Config file")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--method", o.method, "Default method")->check(CLI::IsMember(methods));
  add_common(sweep_cmd);
  add_counting(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (sweep_cmd->parsed() && sweep_cmd->count("--format") == 0) o.format = "csv";

  try {
    std::string text;
    if (ring_info_cmd->parsed()) text = render(ring_info(o), o.format);
    else if (null_check_cmd->parsed()) text = render(null_check(o), o.format);
    else if (null_canonical_cmd->parsed()) text = render(null_canonical(o), o.format);
    else if (null_enum_cmd->parsed()) text = render(null_enumerate(o), o.format);
    else if (perm_check_cmd->parsed()) text = render(perm_check(o), o.format);
    else if (pair_cmd->parsed()) text = render(pair_construct(o), o.format);
    else if (count_cmd->parsed()) text = count_command(o);
    else if (verify_cmd->parsed()) text = verify_command(o);
    else if (sweep_cmd->parsed()) text = sweep_command(o);
    emit(o, text, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    Json j;
    j["error"]["code"] = "io_error";
    j["error"]["message"] = e.what();
    err << j.dump() << "\n";
    return kExitDomainError;
  }
}

}  // namespace polydual
