#include "sg/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "json.hpp"
#include "sg/errors.hpp"

namespace sg {

namespace {

using nlohmann::json;

double positive_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(key, "must be positive and finite");
  return x;
}

std::size_t positive_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  if (v.is_number_unsigned() ? v.get<std::uint64_t>() < 1 : v.get<std::int64_t>() < 1) {
    throw ConfigError(key, "must be at least 1");
  }
  return v.get<std::size_t>();
}

std::string string_value(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

template <typename Parse>
auto enum_value(const json& v, const std::string& key, Parse parse) {
  const std::string s = string_value(v, key);
  try {
    return parse(s);
  } catch (const ArgumentError& e) {
    throw ConfigError(key, e.what());
  }
}

CaseSpec parse_case(const json& v) {
  CaseSpec spec;
  if (v.is_string()) {
    spec.preset = v.get<std::string>();
  } else if (v.is_object()) {
    for (const auto& [k, item] : v.items()) {
      if (k == "preset") {
        spec.preset = string_value(item, "case.preset");
      } else if (k == "domain") {
        if (!item.is_array() || item.size() != 4 ||
            !std::all_of(item.begin(), item.end(), [](const json& x) { return x.is_number(); })) {
          throw ConfigError("case.domain", "expected [a, b, c, d]");
        }
        const Domain d{item[0].get<double>(), item[1].get<double>(), item[2].get<double>(),
                       item[3].get<double>()};
        if (!(d.b > d.a) || !(d.d > d.c)) throw ConfigError("case.domain", "needs b > a and d > c");
        spec.domain = d;
      } else if (k == "c") {
        if (!item.is_number() || item.get<double>() == 0.0) {
          throw ConfigError("case.c", "expected a nonzero number");
        }
        spec.breather_c = item.get<double>();
      } else {
        throw ConfigError("case." + k, "unknown key");
      }
    }
    if (spec.preset.empty()) throw ConfigError("case.preset", "required");
  } else {
    throw ConfigError("case", "expected a case name or an object");
  }
  try {
    (void)find_case(spec.preset);
  } catch (const ArgumentError& e) {
    throw ConfigError(v.is_string() ? "case" : "case.preset", e.what());
  }
  if (spec.breather_c && spec.preset != "breather") {
    throw ConfigError("case.c", "only the breather case takes a velocity");
  }
  return spec;
}

}  // namespace

Scheme parse_scheme(const std::string& s) {
  if (s == "pepm") return Scheme::Pepm;
  if (s == "svm") return Scheme::Svm;
  if (s == "baseline") return Scheme::PcCnBaseline;
  throw ArgumentError("unknown scheme '" + s + "' (pepm, svm, baseline)");
}

GridFamily parse_family(const std::string& s) {
  if (s == "mid") return GridFamily::MidPoint;
  if (s == "regular") return GridFamily::Regular;
  throw ArgumentError("unknown grid '" + s + "' (mid, regular)");
}

GChoice parse_g(const std::string& s) {
  if (s == "g1") return GChoice::G1;
  if (s == "g2") return GChoice::G2;
  throw ArgumentError("unknown g '" + s + "' (g1, g2)");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Pepm: return "pepm";
    case Scheme::Svm: return "svm";
    case Scheme::PcCnBaseline: return "baseline";
  }
  return "?";
}

std::string to_string(GridFamily f) { return f == GridFamily::MidPoint ? "mid" : "regular"; }
std::string to_string(GChoice g) { return g == GChoice::G1 ? "g1" : "g2"; }

RunConfig parse_config(const std::string& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ConfigError("(document)", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("(document)", "expected a JSON object");

  RunConfig cfg;
  bool have_case = false;
  bool have_scheme = false;
  for (const auto& [key, v] : doc.items()) {
    if (key == "case") {
      cfg.case_spec = parse_case(v);
      have_case = true;
    } else if (key == "scheme") {
      cfg.scheme = enum_value(v, key, parse_scheme);
      have_scheme = true;
    } else if (key == "grid") {
      cfg.grid = enum_value(v, key, parse_family);
    } else if (key == "g") {
      cfg.g = enum_value(v, key, parse_g);
    } else if (key == "nx") {
      cfg.nx = positive_integer(v, key);
    } else if (key == "ny") {
      cfg.ny = positive_integer(v, key);
    } else if (key == "tau") {
      cfg.tau = positive_number(v, key);
    } else if (key == "t_end") {
      cfg.t_end = positive_number(v, key);
    } else if (key == "tol") {
      cfg.tol = positive_number(v, key);
    } else if (key == "snapshot_times") {
      if (!v.is_array()) throw ConfigError(key, "expected an array of times");
      for (const auto& t : v) {
        if (!t.is_number() || !(t.get<double>() >= 0.0)) {
          throw ConfigError(key, "times must be non-negative numbers");
        }
        cfg.snapshot_times.push_back(t.get<double>());
      }
    } else if (key == "out_dir") {
      cfg.out_dir = string_value(v, key);
      if (cfg.out_dir.empty()) throw ConfigError(key, "must not be empty");
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  if (!have_case) throw ConfigError("case", "required");
  if (!have_scheme) throw ConfigError("scheme", "required");

  const BenchmarkCase resolved = resolve_case(cfg.case_spec);
  try {
    scheme_config(cfg, resolved).validate();
  } catch (const ArgumentError& e) {
    throw ConfigError(cfg.t_end ? "t_end" : "tau", e.what());
  }
  return cfg;
}

BenchmarkCase resolve_case(const CaseSpec& spec) {
  BenchmarkCase bc = spec.breather_c ? make_breather_case(*spec.breather_c) : find_case(spec.preset);
  if (spec.domain) bc.problem.domain = *spec.domain;
  return bc;
}

SchemeConfig scheme_config(const RunConfig& cfg, const BenchmarkCase& resolved) {
  SchemeConfig s;
  s.scheme = cfg.scheme;
  s.grid_family = cfg.grid;
  s.g_choice = cfg.g;
  s.tau = cfg.tau.value_or(resolved.default_tau);
  s.t_end = cfg.t_end.value_or(resolved.default_t_end);
  s.newton_tol = cfg.tol;
  return s;
}

std::size_t effective_nx(const RunConfig& cfg, const BenchmarkCase& resolved) {
  return cfg.nx.value_or(resolved.default_nx);
}

std::size_t effective_ny(const RunConfig& cfg, const BenchmarkCase& resolved) {
  return cfg.ny.value_or(resolved.default_ny);
}

}  // namespace sg
