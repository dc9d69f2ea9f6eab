#include "idp/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace idp {

using nlohmann::json;

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::FirstOrder: return "first_order";
    case SchemeKind::DG: return "dg";
    case SchemeKind::Weno5: return "weno5";
  }
  return "?";
}
std::string to_string(LimiterKind k) {
  switch (k) {
    case LimiterKind::None: return "none";
    case LimiterKind::ZhangShu: return "zhang_shu";
    case LimiterKind::Simplified: return "simplified";
    case LimiterKind::Zalesak: return "zalesak";
    case LimiterKind::Parametrized: return "parametrized";
    case LimiterKind::HuAdamsShu: return "hu_adams_shu";
    case LimiterKind::Monolithic: return "monolithic";
    case LimiterKind::Guermond: return "guermond";
  }
  return "?";
}
std::string to_string(FluxKind k) {
  switch (k) {
    case FluxKind::GlobalLaxFriedrichs: return "global_lax_friedrichs";
    case FluxKind::LocalLaxFriedrichs: return "local_lax_friedrichs";
    case FluxKind::GodunovScalar: return "godunov";
    case FluxKind::EngquistOsherScalar: return "engquist_osher";
  }
  return "?";
}
std::string to_string(Decomposition2DKind k) {
  return k == Decomposition2DKind::ZhangShu ? "zs" : "optimal";
}

namespace {

template <typename T>
T from_string_impl(const std::string& s,
                   const std::vector<std::pair<std::string, T>>& table,
                   const char* what) {
  for (const auto& [name, val] : table)
    if (name == s) return val;
  std::string names;
  for (const auto& [name, val] : table) names += (names.empty() ? "" : ", ") + name;
  throw ConfigError(std::string(what) + ": unknown value '" + s +
                    "' (expected one of: " + names + ")");
}

}  // namespace

SchemeKind scheme_from_string(const std::string& s) {
  return from_string_impl<SchemeKind>(
      s,
      {{"first_order", SchemeKind::FirstOrder},
       {"dg", SchemeKind::DG},
       {"weno5", SchemeKind::Weno5}},
      "scheme");
}
LimiterKind limiter_from_string(const std::string& s) {
  return from_string_impl<LimiterKind>(
      s,
      {{"none", LimiterKind::None},
       {"zhang_shu", LimiterKind::ZhangShu},
       {"simplified", LimiterKind::Simplified},
       {"zalesak", LimiterKind::Zalesak},
       {"parametrized", LimiterKind::Parametrized},
       {"hu_adams_shu", LimiterKind::HuAdamsShu},
       {"monolithic", LimiterKind::Monolithic},
       {"guermond", LimiterKind::Guermond}},
      "limiter");
}
FluxKind flux_from_string(const std::string& s) {
  return from_string_impl<FluxKind>(
      s,
      {{"global_lax_friedrichs", FluxKind::GlobalLaxFriedrichs},
       {"local_lax_friedrichs", FluxKind::LocalLaxFriedrichs},
       {"godunov", FluxKind::GodunovScalar},
       {"engquist_osher", FluxKind::EngquistOsherScalar}},
      "flux");
}
Decomposition2DKind decomposition_from_string(const std::string& s) {
  return from_string_impl<Decomposition2DKind>(
      s,
      {{"zs", Decomposition2DKind::ZhangShu},
       {"optimal", Decomposition2DKind::Optimal}},
      "decomposition");
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  static const std::set<std::string> known = {
      "problem",      "scheme",         "dg_degree",
      "flux",         "lf_alpha",       "limiter",
      "decomposition", "cfl",           "resolution",
      "t_final",      "output_cadence", "out_dir",
      "limit_final_stage_only",         "entropy_constraint",
      "floors",       "problem_params", "threads",
      "seed"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw ConfigError("unknown config key: '" + it.key() + "'");

  RunConfig c;
  auto get = [&](const char* key, auto& dst, bool required = false) {
    if (!j.contains(key)) {
      if (required) throw ConfigError(std::string("missing config key: ") + key);
      return false;
    }
    try {
      dst = j.at(key).get<std::decay_t<decltype(dst)>>();
    } catch (const json::exception&) {
      throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
    return true;
  };

  get("problem", c.problem, true);
  std::string s;
  if (get("scheme", s)) c.scheme = scheme_from_string(s);
  get("dg_degree", c.dg_degree);
  if (get("flux", s)) c.flux = flux_from_string(s);
  get("lf_alpha", c.lf_alpha);
  if (get("limiter", s)) c.limiter = limiter_from_string(s);
  if (get("decomposition", s)) c.decomposition = decomposition_from_string(s);
  get("cfl", c.cfl);
  get("resolution", c.resolution);
  get("t_final", c.t_final);
  get("output_cadence", c.output_cadence);
  get("out_dir", c.out_dir);
  get("limit_final_stage_only", c.limit_final_stage_only);
  get("entropy_constraint", c.entropy_constraint);
  if (j.contains("floors")) {
    if (!j["floors"].is_object()) throw ConfigError("'floors' must be an object");
    for (auto it = j["floors"].begin(); it != j["floors"].end(); ++it)
      c.floors[it.key()] = it.value().get<double>();
  }
  if (j.contains("problem_params")) {
    if (!j["problem_params"].is_object())
      throw ConfigError("'problem_params' must be an object");
    for (auto it = j["problem_params"].begin(); it != j["problem_params"].end();
         ++it)
      c.problem_params[it.key()] = it.value().get<double>();
  }
  get("threads", c.threads);
  get("seed", c.seed);
  validate_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  json j;
  j["problem"] = c.problem;
  j["scheme"] = to_string(c.scheme);
  j["dg_degree"] = c.dg_degree;
  j["flux"] = to_string(c.flux);
  j["lf_alpha"] = c.lf_alpha;
  j["limiter"] = to_string(c.limiter);
  j["decomposition"] = to_string(c.decomposition);
  j["cfl"] = c.cfl;
  j["resolution"] = c.resolution;
  j["t_final"] = c.t_final;
  j["output_cadence"] = c.output_cadence;
  j["out_dir"] = c.out_dir;
  j["limit_final_stage_only"] = c.limit_final_stage_only;
  j["entropy_constraint"] = c.entropy_constraint;
  j["floors"] = c.floors;
  j["problem_params"] = c.problem_params;
  j["threads"] = c.threads;
  j["seed"] = c.seed;
  return j.dump(2);
}

void validate_config(const RunConfig& c) {
  if (c.problem.empty()) throw ConfigError("'problem' must be set");
  if (c.cfl < 0.0) throw ConfigError("'cfl' must be positive");
  if (c.threads < 1) throw ConfigError("'threads' must be >= 1");
  if (c.resolution.size() > 2)
    throw ConfigError("'resolution' takes at most [nx, ny]");
  for (int n : c.resolution)
    if (n < 1) throw ConfigError("'resolution' entries must be positive");

  const bool scaling = is_scaling_limiter(c.limiter);
  const bool fluxlim = is_flux_limiter(c.limiter);
  if (c.scheme == SchemeKind::DG) {
    if (fluxlim)
      throw ConfigError("limiter '" + to_string(c.limiter) +
                        "' is a flux limiter and requires scheme 'weno5', "
                        "not scheme 'dg'");
    if (c.dg_degree < 1 || c.dg_degree > 3)
      throw ConfigError("'dg_degree' must be 1..3");
  } else {
    if (scaling)
      throw ConfigError("limiter '" + to_string(c.limiter) +
                        "' is a scaling limiter and requires scheme 'dg', "
                        "not scheme '" + to_string(c.scheme) + "'");
  }
  if (c.scheme == SchemeKind::FirstOrder && c.limiter != LimiterKind::None)
    throw ConfigError("scheme 'first_order' requires limiter 'none', got '" +
                      to_string(c.limiter) + "'");
  if (c.scheme == SchemeKind::Weno5 && fluxlim &&
      c.flux != FluxKind::GlobalLaxFriedrichs &&
      c.flux != FluxKind::LocalLaxFriedrichs)
    throw ConfigError("flux limiters require a Lax-Friedrichs low flux, got '" +
                      to_string(c.flux) + "'");
  if (c.limit_final_stage_only && c.scheme != SchemeKind::Weno5)
    throw ConfigError(
        "'limit_final_stage_only' applies to flux correction, i.e. scheme "
        "'weno5', not scheme '" + to_string(c.scheme) + "'");
}

std::string report_to_json(const RunReport& r) {
  json j;
  j["problem"] = r.problem;
  j["scheme"] = r.scheme;
  j["limiter"] = r.limiter;
  j["dim"] = r.dim;
  j["nx"] = r.nx;
  j["ny"] = r.ny;
  j["t_final"] = r.t_final;
  j["t_reached"] = r.t_reached;
  j["steps"] = r.steps;
  j["restarts"] = r.restarts;
  j["wall_time_s"] = r.wall_time_s;
  j["min_constraints"] = r.min_constraints;
  j["total_initial"] = r.total_initial;
  j["total_final"] = r.total_final;
  j["boundary_flux_accum"] = r.boundary_flux_accum;
  j["conservation_residual"] = r.conservation_residual;
  j["conservation_residual_rel"] = r.conservation_residual_rel;
  j["theta_min"] = r.theta_min;
  j["theta_mean"] = r.theta_mean;
  j["limited_fraction"] = r.limited_fraction;
  j["violation"] = r.violation;
  j["message"] = r.message;
  j["artifacts"] = r.artifacts;
  return j.dump(2);
}

RunReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  RunReport r;
  r.problem = j.value("problem", "");
  r.scheme = j.value("scheme", "");
  r.limiter = j.value("limiter", "");
  r.dim = j.value("dim", 1);
  r.nx = j.value("nx", 0);
  r.ny = j.value("ny", 1);
  r.t_final = j.value("t_final", 0.0);
  r.t_reached = j.value("t_reached", 0.0);
  r.steps = j.value("steps", 0L);
  r.restarts = j.value("restarts", 0L);
  r.wall_time_s = j.value("wall_time_s", 0.0);
  if (j.contains("min_constraints"))
    for (auto it = j["min_constraints"].begin(); it != j["min_constraints"].end(); ++it)
      r.min_constraints[it.key()] = it.value().get<double>();
  r.total_initial = j.value("total_initial", std::vector<double>{});
  r.total_final = j.value("total_final", std::vector<double>{});
  r.boundary_flux_accum = j.value("boundary_flux_accum", std::vector<double>{});
  r.conservation_residual = j.value("conservation_residual", std::vector<double>{});
  r.conservation_residual_rel =
      j.value("conservation_residual_rel", std::vector<double>{});
  r.theta_min = j.value("theta_min", 1.0);
  r.theta_mean = j.value("theta_mean", 1.0);
  r.limited_fraction = j.value("limited_fraction", 0.0);
  r.violation = j.value("violation", false);
  r.message = j.value("message", "");
  r.artifacts = j.value("artifacts", std::vector<std::string>{});
  return r;
}

}  // namespace idp
