// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nilspec/cmatrix.hpp"
#include "nilspec/errors.hpp"
#include "nilspec/eta.hpp"
#include "nilspec/rational.hpp"
#include "nilspec/spectrum.hpp"

namespace nilspec {
namespace {

using ordered_json = nlohmann::ordered_json;

// 17 significant digits: enough to round-trip any binary64 value, so
// identical runs emit identical bytes.
std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  try {
    return Rational::parse(v).to_double();
  } catch (const Error&) {
  }
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size() && std::isfinite(d)) return d;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError,
              "key " + key + ": cannot read \"" + v + "\" as a number");
}

Param parse_param(const std::string& key, const std::string& raw, bool float_mode) {
  const std::string v = trim(raw);
  if (float_mode) return Param::from_double(parse_real(key, v));
  try {
    return Param(Rational::parse(v));
  } catch (const Error&) {
  }
  // Decimal literal: the exact dyadic value of its double reading.
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size() && std::isfinite(d)) return Param(Rational::from_double(d));
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError,
              "key " + key + ": cannot read \"" + v + "\" as a rational or decimal");
}

std::int64_t parse_integer(const std::string& key, const std::string& raw) {
  try {
    return Rational::parse(trim(raw)).to_int64();
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "key " + key + ": expected an integer");
  }
}

bool parse_bool(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw Error(ErrorCode::ParseError, "key " + key + ": expected true or false");
}

SpinStructure parse_eps(const std::string& raw) {
  const std::vector<std::string> parts = split(raw, ',');
  if (parts.size() != 3) {
    throw Error(ErrorCode::ParseError,
                "key eps: expected three comma-separated signs, e.g. \"+,+,-\"");
  }
  int signs[3];
  for (int i = 0; i < 3; ++i) {
    const std::string t = trim(parts[static_cast<std::size_t>(i)]);
    if (t == "+") {
      signs[i] = 1;
    } else if (t == "-") {
      signs[i] = -1;
    } else {
      throw Error(ErrorCode::ParseError,
                  "key eps: component " + std::to_string(i + 1) + " must be + or -");
    }
  }
  SpinStructure spin;
  spin.eps1 = signs[0];
  spin.eps2 = signs[1];
  spin.eps3 = signs[2];
  return spin;
}

std::string json_scalar_to_string(const std::string& key, const ordered_json& val) {
  if (val.is_string()) return val.get<std::string>();
  if (val.is_boolean()) return val.get<bool>() ? "true" : "false";
  if (val.is_number_integer()) return std::to_string(val.get<std::int64_t>());
  if (val.is_number_unsigned()) return std::to_string(val.get<std::uint64_t>());
  if (val.is_number_float()) return g17(val.get<double>());
  throw Error(ErrorCode::ParseError, "key " + key + ": unsupported JSON value");
}

// Both config dialects reduce to an ordered key/value list.
std::vector<std::pair<std::string, std::string>> collect_kvs(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::vector<std::pair<std::string, std::string>> kvs;

  if (i < text.size() && text[i] == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("config JSON: ") + e.what());
    }
    if (!j.is_object()) {
      throw Error(ErrorCode::ParseError, "config JSON must be an object");
    }
    for (const auto& [key, val] : j.items()) {
      if (val.is_array()) {
        std::string joined;
        for (const auto& elem : val) {
          if (!joined.empty()) joined += ',';
          joined += json_scalar_to_string(key, elem);
        }
        kvs.emplace_back(key, joined);
      } else {
        kvs.emplace_back(key, json_scalar_to_string(key, val));
      }
    }
    return kvs;
  }

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": expected key=value");
    }
    kvs.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return kvs;
}

const char* sign_str(int e) { return e > 0 ? "+" : "-"; }

std::string param_str(const Param& p) {
  return p.exact() ? p.rational().str() : g17(p.value());
}

// ---- command bodies -------------------------------------------------------

std::string orbit_kind(const OrbitKey& k) {
  switch (k.family) {
    case OrbitKey::Family::AlphaZero:
      return "alpha0";
    case OrbitKey::Family::Toroidal:
      return "toroidal";
    case OrbitKey::Family::Central:
      return "central";
  }
  return "unknown";
}

std::string orbit_params(const OrbitKey& k, const EigEntry& e) {
  switch (k.family) {
    case OrbitKey::Family::AlphaZero:
      return "";
    case OrbitKey::Family::Toroidal:
      return "j1=" + std::to_string(k.j1) + ";j2=" + std::to_string(k.j2) +
             ";branch=" + std::to_string(e.branch);
    case OrbitKey::Family::Central:
      return "m=" + std::to_string(k.m) + ";mu=" + k.mu.str() +
             ";p=" + std::to_string(e.p) + ";branch=" + std::to_string(e.branch);
  }
  return "";
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.window > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "window must be positive");
  }
  const std::int64_t cap = cfg.p_cap >= 0 ? cfg.p_cap : 100000;
  const std::vector<SpectrumSlice> slices =
      assemble_spectrum(cfg.manifold, cfg.window, cap);

  struct Row {
    double value;
    std::int64_t mult;
    std::string kind;
    std::string params;
  };
  std::vector<Row> rows;
  for (const SpectrumSlice& s : slices) {
    for (const EigEntry& e : s.eigenvalues) {
      rows.push_back({e.value, e.multiplicity, orbit_kind(s.origin),
                      orbit_params(s.origin, e)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.params != b.params) return a.params < b.params;
    return a.mult < b.mult;
  });

  if (cfg.format == "csv") {
    out << "eigenvalue,multiplicity,orbit_kind,orbit_params\n";
    for (const Row& r : rows) {
      out << g17(r.value) << ',' << r.mult << ',' << r.kind << ',' << r.params
          << '\n';
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json o;
      o["eigenvalue"] = r.value;
      o["multiplicity"] = r.mult;
      o["orbit_kind"] = r.kind;
      o["orbit_params"] = r.params;
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
  }
  return 0;
}

ordered_json breakdown_json(const EtaBreakdown& b) {
  ordered_json o;
  o["toroidal_strict"] = b.toroidal_strict;
  o["toroidal_boundary"] = b.toroidal_boundary;
  o["central_mu_sum"] = b.central_mu_sum;
  o["p_sum"] = b.p_sum;
  o["boundary_zero"] = b.boundary_zero;
  o["alpha0"] = b.alpha0;
  return o;
}

int run_eta(const RunConfig& cfg, std::ostream& out) {
  const EtaReport rep = eta_3d(cfg.manifold);
  if (rep.indeterminate) {
    throw Error(ErrorCode::IndeterminateBoundary,
                "a membership test landed within tolerance of a window "
                "boundary; rerun with exact rational parameters");
  }
  if (cfg.format == "csv") {
    out << "field,value\n";
    out << "eta0," << g17(rep.eta0) << '\n';
    out << "N," << rep.N << '\n';
    out << "lambda_bar," << g17(rep.lambda_bar) << '\n';
    out << "toroidal_strict," << rep.breakdown.toroidal_strict << '\n';
    out << "toroidal_boundary," << rep.breakdown.toroidal_boundary << '\n';
    out << "central_mu_sum," << rep.breakdown.central_mu_sum << '\n';
    out << "p_sum," << rep.breakdown.p_sum << '\n';
    out << "boundary_zero," << rep.breakdown.boundary_zero << '\n';
    out << "alpha0," << rep.breakdown.alpha0 << '\n';
    out << "indeterminate,0\n";
  } else {
    ordered_json o;
    o["eta0"] = rep.eta0;
    o["N"] = rep.N;
    o["lambda_bar"] = rep.lambda_bar;
    o["breakdown"] = breakdown_json(rep.breakdown);
    o["indeterminate"] = false;
    out << o.dump(2) << '\n';
  }
  return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const EtaReport formula = count_N(cfg.manifold);
  const SpectralCounts oracle = spectral_counts(cfg.manifold);
  if (formula.indeterminate || oracle.indeterminate) {
    throw Error(ErrorCode::IndeterminateBoundary,
                "a membership test landed within tolerance of a window "
                "boundary; rerun with exact rational parameters");
  }
  const std::int64_t n_oracle = 2 * oracle.open + oracle.closed;
  const bool match = formula.N == n_oracle;
  out << "N_formula=" << formula.N << " N_oracle=" << n_oracle << '\n';
  if (cfg.format == "csv") {
    out << "field,value\n";
    out << "N_formula," << formula.N << '\n';
    out << "open," << oracle.open << '\n';
    out << "closed," << oracle.closed << '\n';
    out << "N_oracle," << n_oracle << '\n';
    out << "match," << (match ? 1 : 0) << '\n';
  } else {
    ordered_json o;
    o["N_formula"] = formula.N;
    o["open"] = oracle.open;
    o["closed"] = oracle.closed;
    o["N_oracle"] = n_oracle;
    o["match"] = match;
    out << o.dump(2) << '\n';
  }
  return match ? 0 : 1;
}

int run_family(const RunConfig& cfg, std::ostream& out) {
  if (cfg.r_values.empty()) {
    throw Error(ErrorCode::InvalidParameter, "family needs a nonempty r_values list");
  }
  const std::vector<EtaReport> reps =
      constant_eta_family(cfg.b1, cfg.b2, cfg.manifold.m_v, cfg.manifold.m_w,
                          cfg.manifold.spin, cfg.r_values);
  for (const EtaReport& rep : reps) {
    if (rep.indeterminate) {
      throw Error(ErrorCode::IndeterminateBoundary,
                  "a membership test landed within tolerance of a window boundary");
    }
  }
  if (cfg.format == "csv") {
    out << "r,eta0,N,lambda_bar\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out << g17(cfg.r_values[i]) << ',' << g17(reps[i].eta0) << ','
          << reps[i].N << ',' << g17(reps[i].lambda_bar) << '\n';
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ordered_json o;
      o["r"] = cfg.r_values[i];
      o["eta0"] = reps[i].eta0;
      o["N"] = reps[i].N;
      o["lambda_bar"] = reps[i].lambda_bar;
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
  }
  return 0;
}

int run_example5d(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t p_max = cfg.p_cap >= 0 ? cfg.p_cap : 30;
  if (p_max < 10) {
    throw Error(ErrorCode::InvalidParameter,
                "example5d needs a ladder depth of at least 10 for the drift column");
  }
  const std::array<double, 4> finite =
      five_dim_finite_eigenvalues(cfg.aX, cfg.aY1, cfg.aY2);
  const FiveDimBand deep = five_dim_band_matrix(cfg.b2, cfg.g1, cfg.g2, p_max);
  const FiveDimBand shallow =
      five_dim_band_matrix(cfg.b2, cfg.g1, cfg.g2, p_max - 10);
  const std::vector<double> ev_deep = hermitian_eigenvalues(deep.matrix);
  const std::vector<double> ev_shallow = hermitian_eigenvalues(shallow.matrix);

  // Distance from an eigenvalue of the deep truncation to the nearest
  // eigenvalue of the shallow one: interior levels barely move, so a large
  // drift marks a truncation artifact near the band edge.
  const auto drift = [&ev_shallow](double x) {
    const auto it = std::lower_bound(ev_shallow.begin(), ev_shallow.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != ev_shallow.end()) best = std::min(best, *it - x);
    if (it != ev_shallow.begin()) best = std::min(best, x - *(it - 1));
    return best;
  };

  if (cfg.format == "csv") {
    out << "kind,eigenvalue,drift\n";
    for (const double v : finite) out << "finite," << g17(v) << ",\n";
    for (const double v : ev_deep) {
      out << "band," << g17(v) << ',' << g17(drift(v)) << '\n';
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (const double v : finite) {
      ordered_json o;
      o["kind"] = "finite";
      o["eigenvalue"] = v;
      o["drift"] = nullptr;
      arr.push_back(std::move(o));
    }
    for (const double v : ev_deep) {
      ordered_json o;
      o["kind"] = "band";
      o["eigenvalue"] = v;
      o["drift"] = drift(v);
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  static const std::vector<std::string> known = {
      "command", "A",  "r",  "w2",       "m_v", "m_w", "eps",
      "window",  "p_cap", "output", "format", "float_mode",
      "b1",      "b2", "r_values", "g1",  "g2",  "aX",  "aY1", "aY2"};

  std::map<std::string, std::string> kv;
  for (const auto& [key, value] : collect_kvs(text)) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(ErrorCode::ParseError, "unknown key \"" + key + "\"");
    }
    if (!kv.emplace(key, value).second) {
      throw Error(ErrorCode::ParseError, "duplicate key \"" + key + "\"");
    }
  }

  RunConfig cfg;
  if (const auto it = kv.find("float_mode"); it != kv.end()) {
    cfg.float_mode = parse_bool(it->first, it->second);
  }
  if (const auto it = kv.find("command"); it != kv.end()) {
    static const std::vector<std::string> commands = {"spectrum", "eta", "verify",
                                                      "family", "example5d"};
    if (std::find(commands.begin(), commands.end(), it->second) == commands.end()) {
      throw Error(ErrorCode::ParseError,
                  "command must be spectrum|eta|verify|family|example5d");
    }
    cfg.command = it->second;
  }
  if (const auto it = kv.find("A"); it != kv.end()) {
    cfg.manifold.A = parse_param(it->first, it->second, cfg.float_mode);
  }
  if (const auto it = kv.find("r"); it != kv.end()) {
    cfg.manifold.r = parse_param(it->first, it->second, cfg.float_mode);
  }
  if (const auto it = kv.find("w2"); it != kv.end()) {
    cfg.manifold.w2 = parse_param(it->first, it->second, cfg.float_mode);
  }
  if (const auto it = kv.find("m_v"); it != kv.end()) {
    cfg.manifold.m_v = parse_integer(it->first, it->second);
  }
  if (const auto it = kv.find("m_w"); it != kv.end()) {
    cfg.manifold.m_w = parse_integer(it->first, it->second);
  }
  if (const auto it = kv.find("eps"); it != kv.end()) {
    cfg.manifold.spin = parse_eps(it->second);
  }
  if (const auto it = kv.find("window"); it != kv.end()) {
    cfg.window = parse_real(it->first, it->second);
    if (!(cfg.window > 0.0)) {
      throw Error(ErrorCode::ParseError, "window must be positive");
    }
  }
  if (const auto it = kv.find("p_cap"); it != kv.end()) {
    cfg.p_cap = parse_integer(it->first, it->second);
    if (cfg.p_cap < 0) {
      throw Error(ErrorCode::ParseError, "p_cap must be nonnegative");
    }
  }
  if (const auto it = kv.find("output"); it != kv.end()) cfg.output = it->second;
  if (const auto it = kv.find("format"); it != kv.end()) {
    if (it->second != "csv" && it->second != "json") {
      throw Error(ErrorCode::ParseError, "format must be csv or json");
    }
    cfg.format = it->second;
  }
  if (const auto it = kv.find("b1"); it != kv.end()) {
    cfg.b1 = parse_real(it->first, it->second);
  }
  if (const auto it = kv.find("b2"); it != kv.end()) {
    cfg.b2 = parse_real(it->first, it->second);
  }
  if (const auto it = kv.find("r_values"); it != kv.end()) {
    for (const std::string& part : split(it->second, ',')) {
      cfg.r_values.push_back(parse_real("r_values", part));
    }
  }
  if (const auto it = kv.find("g1"); it != kv.end()) {
    cfg.g1 = parse_real(it->first, it->second);
  }
  if (const auto it = kv.find("g2"); it != kv.end()) {
    cfg.g2 = parse_real(it->first, it->second);
  }
  if (const auto it = kv.find("aX"); it != kv.end()) {
    cfg.aX = parse_real(it->first, it->second);
  }
  if (const auto it = kv.find("aY1"); it != kv.end()) {
    cfg.aY1 = parse_real(it->first, it->second);
  }
  if (const auto it = kv.find("aY2"); it != kv.end()) {
    cfg.aY2 = parse_real(it->first, it->second);
  }

  cfg.manifold = validate(cfg.manifold);
  return cfg;
}

std::string manifold_to_config(const Heisenberg3& h) {
  std::ostringstream out;
  out << "A=" << param_str(h.A) << '\n';
  out << "r=" << param_str(h.r) << '\n';
  out << "w2=" << param_str(h.w2) << '\n';
  out << "m_v=" << h.m_v << '\n';
  out << "m_w=" << h.m_w << '\n';
  out << "eps=" << sign_str(h.spin.eps1) << ',' << sign_str(h.spin.eps2) << ','
      << sign_str(h.spin.eps3) << '\n';
  if (h.float_mode()) out << "float_mode=true\n";
  return out.str();
}

void force_float_mode(RunConfig& config) {
  config.float_mode = true;
  config.manifold.A = Param::from_double(config.manifold.A.value());
  config.manifold.r = Param::from_double(config.manifold.r.value());
  config.manifold.w2 = Param::from_double(config.manifold.w2.value());
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file.open(config.output, std::ios::binary | std::ios::trunc);
      if (!file) {
        throw Error(ErrorCode::InvalidParameter,
                    "cannot open output path " + config.output);
      }
      sink = &file;
    }
    if (config.format != "csv" && config.format != "json") {
      throw Error(ErrorCode::InvalidParameter, "format must be csv or json");
    }
    if (config.command == "spectrum") return run_spectrum(config, *sink);
    if (config.command == "eta") return run_eta(config, *sink);
    if (config.command == "verify") return run_verify(config, *sink);
    if (config.command == "family") return run_family(config, *sink);
    if (config.command == "example5d") return run_example5d(config, *sink);
    throw Error(ErrorCode::InvalidParameter,
                "command must be spectrum|eta|verify|family|example5d");
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = error_code_name(e.code());
    j["message"] = e.what();
    err << j.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = "Unexpected";
    j["message"] = e.what();
    err << j.dump() << '\n';
    return 2;
  }
}

}  // namespace nilspec
