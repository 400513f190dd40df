#include "dyna/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "dyna/errors.hpp"
#include "dyna/rng.hpp"

namespace dyna {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t idx = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &idx);
  } catch (const std::exception&) {
    throw UsageError("config: " + key + " expects a number, got '" + v + "'");
  }
  if (idx != v.size()) throw UsageError("config: " + key + " expects a number, got '" + v + "'");
  return d;
}

long parse_long(const std::string& key, const std::string& v) {
  std::size_t idx = 0;
  long n = 0;
  try {
    n = std::stol(v, &idx);
  } catch (const std::exception&) {
    throw UsageError("config: " + key + " expects an integer, got '" + v + "'");
  }
  if (idx != v.size()) throw UsageError("config: " + key + " expects an integer, got '" + v + "'");
  return n;
}

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

bool is_known_algorithm(const std::string& name) {
  static const std::set<std::string> known = {
      "qlearning",
      "one-step-successor",
      "multi-step-successor",
      "one-step-predecessor",
      "iterated-one-step-predecessor",
      "uniterated-one-step-predecessor",
      "multi-step-predecessor",
  };
  return known.count(name) > 0;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string raw;
  int lineno = 0;

  while (std::getline(ss, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw UsageError("config line " + std::to_string(lineno) + ": empty key or value");
    if (!seen.insert(key).second)
      throw UsageError("config: duplicate key '" + key + "'");

    if (key == "env") {
      cfg.env = val;
    } else if (key == "algorithms") {
      cfg.algorithms = split_list(val);
    } else if (key == "alpha") {
      cfg.alpha = parse_double(key, val);
    } else if (key == "alpha_list") {
      for (const std::string& a : split_list(val)) cfg.alpha_list.push_back(parse_double(key, a));
    } else if (key == "alpha_samples") {
      cfg.alpha_samples = static_cast<int>(parse_long(key, val));
    } else if (key == "sweep_seed") {
      cfg.sweep_seed = static_cast<std::uint64_t>(parse_long(key, val));
    } else if (key == "beta") {
      cfg.beta = parse_double(key, val);
    } else if (key == "beta_list") {
      for (const std::string& b : split_list(val)) cfg.beta_list.push_back(parse_double(key, b));
    } else if (key == "gamma") {
      cfg.gamma = parse_double(key, val);
      cfg.gamma_set = true;
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(key, val);
    } else if (key == "rho") {
      cfg.rho = parse_double(key, val);
    } else if (key == "planning_steps") {
      cfg.planning_steps = static_cast<int>(parse_long(key, val));
    } else if (key == "queue_capacity") {
      cfg.queue_capacity = static_cast<std::size_t>(parse_long(key, val));
    } else if (key == "total_steps") {
      cfg.total_steps = parse_long(key, val);
    } else if (key == "episode_cap") {
      cfg.episode_cap = static_cast<int>(parse_long(key, val));
    } else if (key == "log_interval") {
      cfg.log_interval = static_cast<int>(parse_long(key, val));
    } else if (key == "seeds") {
      const std::vector<std::string> parts = split_list(val);
      if (parts.size() == 1 && parts[0].find_first_not_of("0123456789") == std::string::npos) {
        // A single integer is a count: seeds 0..k-1.
        const long k = parse_long(key, parts[0]);
        if (k <= 0) throw UsageError("config: seeds count must be positive");
        for (long i = 0; i < k; ++i) cfg.seeds.push_back(static_cast<std::uint64_t>(i));
      } else {
        for (const std::string& s : parts)
          cfg.seeds.push_back(static_cast<std::uint64_t>(parse_long(key, s)));
      }
    } else if (key == "model") {
      cfg.model_kind = val;
    } else if (key == "features") {
      cfg.features = val;
    } else if (key == "q_init") {
      cfg.q_init = val;
    } else if (key == "pretrained_path") {
      cfg.pretrained_path = val;
    } else if (key == "model_lr") {
      cfg.model_lr = parse_double(key, val);
    } else if (key == "model_hidden") {
      cfg.model_hidden = static_cast<int>(parse_long(key, val));
    } else if (key == "tilings") {
      cfg.tilings = static_cast<int>(parse_long(key, val));
    } else if (key == "tiles_per_dim") {
      cfg.tiles_per_dim = static_cast<int>(parse_long(key, val));
    } else if (key == "heatmaps") {
      cfg.emit_heatmaps = parse_long(key, val) != 0;
    } else if (key == "run_logs") {
      cfg.emit_run_logs = parse_long(key, val) != 0;
    } else {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }

  cfg.finalize();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void ExperimentConfig::finalize() {
  auto fail = [](const std::string& m) { throw UsageError("config: " + m); };

  if (env != "borderworld" && env != "puddleworld" && env != "cartpole" && env != "catcher")
    fail("unknown env '" + env + "'");
  const bool tabular_env = env == "borderworld";

  if (algorithms.empty()) fail("algorithms must list at least one algorithm");
  std::set<std::string> dedup;
  for (const std::string& a : algorithms) {
    if (!is_known_algorithm(a)) fail("unknown algorithm '" + a + "'");
    if (!dedup.insert(a).second) fail("algorithm '" + a + "' listed twice");
  }

  if (!gamma_set) gamma = tabular_env ? 0.95 : 0.99;
  if (model_kind.empty()) model_kind = tabular_env ? "exact-hallucinating" : "learned";
  if (features.empty()) features = tabular_env ? "tabular" : "tilecoder";
  if (q_init.empty()) q_init = features == "tabular" ? "optimistic" : "normal";
  if (seeds.empty())
    for (std::uint64_t i = 0; i < 10; ++i) seeds.push_back(i);

  const int ways = (alpha ? 1 : 0) + (alpha_list.empty() ? 0 : 1) + (alpha_samples > 0 ? 1 : 0);
  if (ways > 1) fail("give only one of alpha, alpha_list, alpha_samples");
  if (alpha_samples < 0) fail("alpha_samples must be non-negative");
  for (double a : alpha_list)
    if (!(a > 0.0) || a > 1.0) fail("alpha_list entries must be in (0, 1]");
  if (alpha && (!(*alpha > 0.0) || *alpha > 1.0)) fail("alpha must be in (0, 1]");

  if (beta < 0.0 || beta > 1.0) fail("beta must be in [0, 1]");
  for (double b : beta_list)
    if (b < 0.0 || b > 1.0) fail("beta_list entries must be in [0, 1]");

  // Range checks shared with the per-run validation, done early so a sweep
  // cannot die halfway through.
  RunConfig probe = run_config(algorithms.front(), 0.1, 0.5);
  probe.total_steps = std::max(0L, total_steps);
  (void)probe;
}

std::vector<double> ExperimentConfig::resolve_alphas() const {
  if (alpha) return {*alpha};
  if (!alpha_list.empty()) {
    std::vector<double> out = alpha_list;
    std::sort(out.begin(), out.end());
    return out;
  }
  const int k = alpha_samples > 0 ? alpha_samples : 1;
  if (alpha_samples == 0) return {0.1};
  // Uniform draws from (0, 0.5]; the upper end is inclusive, zero excluded.
  Rng rng(derive_stream(sweep_seed, stream::kSweep));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back(0.5 * (1.0 - rng.uniform()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> ExperimentConfig::resolve_betas(const std::string& algorithm) const {
  if (algorithm == "qlearning" || algorithm == "uniterated-one-step-predecessor") return {0.0};
  std::vector<double> base = beta_list.empty() ? std::vector<double>{beta} : beta_list;
  if (algorithm == "iterated-one-step-predecessor") {
    std::vector<double> out;
    for (double b : base)
      if (b > 0.0) out.push_back(b);
    if (out.empty())
      throw UsageError("config: iterated-one-step-predecessor needs beta > 0");
    return out;
  }
  return base;
}

RunConfig ExperimentConfig::run_config(const std::string& algorithm, double alpha_value,
                                       double beta_value) const {
  RunConfig rc;
  rc.env_name = env;
  if (algorithm == "qlearning") {
    rc.baseline = true;
  } else if (algorithm == "one-step-successor") {
    rc.variant = Variant::OneStepSuccessor;
  } else if (algorithm == "multi-step-successor") {
    rc.variant = Variant::MultiStepSuccessor;
  } else if (algorithm == "one-step-predecessor" || algorithm == "iterated-one-step-predecessor" ||
             algorithm == "uniterated-one-step-predecessor") {
    rc.variant = Variant::OneStepPredecessor;
  } else if (algorithm == "multi-step-predecessor") {
    rc.variant = Variant::MultiStepPredecessor;
  } else {
    throw UsageError("config: unknown algorithm '" + algorithm + "'");
  }
  rc.alpha = alpha_value;
  rc.beta = algorithm == "uniterated-one-step-predecessor" ? 0.0 : beta_value;
  rc.gamma = gamma;
  rc.epsilon = epsilon;
  rc.rho = rho;
  rc.planning_steps = planning_steps;
  rc.queue_capacity = queue_capacity;
  rc.total_steps = total_steps;
  rc.episode_cap = episode_cap;
  rc.log_interval = log_interval;
  rc.model_kind = model_kind;
  rc.features = features;
  rc.q_init = q_init;
  rc.pretrained_path = pretrained_path;
  rc.model_lr = model_lr;
  rc.model_hidden = model_hidden;
  rc.tilings = tilings;
  rc.tiles_per_dim = tiles_per_dim;
  return rc;
}

std::vector<std::string> ExperimentConfig::echo() const {
  std::vector<std::string> lines;
  auto add = [&](const std::string& k, const std::string& v) { lines.push_back(k + " = " + v); };

  add("env", env);
  std::string algos;
  for (std::size_t i = 0; i < algorithms.size(); ++i)
    algos += (i ? "," : "") + algorithms[i];
  add("algorithms", algos);

  if (alpha) add("alpha", fmt_num(*alpha));
  if (!alpha_list.empty()) {
    std::string s;
    for (std::size_t i = 0; i < alpha_list.size(); ++i) s += (i ? "," : "") + fmt_num(alpha_list[i]);
    add("alpha_list", s);
  }
  if (alpha_samples > 0) add("alpha_samples", std::to_string(alpha_samples));
  add("sweep_seed", std::to_string(sweep_seed));
  add("beta", fmt_num(beta));
  if (!beta_list.empty()) {
    std::string s;
    for (std::size_t i = 0; i < beta_list.size(); ++i) s += (i ? "," : "") + fmt_num(beta_list[i]);
    add("beta_list", s);
  }
  add("gamma", fmt_num(gamma));
  add("epsilon", fmt_num(epsilon));
  add("rho", fmt_num(rho));
  add("planning_steps", std::to_string(planning_steps));
  add("queue_capacity", std::to_string(queue_capacity));
  add("total_steps", std::to_string(total_steps));
  add("episode_cap", std::to_string(episode_cap));
  add("log_interval", std::to_string(log_interval));
  std::string seed_s;
  for (std::size_t i = 0; i < seeds.size(); ++i)
    seed_s += (i ? "," : "") + std::to_string(seeds[i]);
  add("seeds", seed_s);
  add("model", model_kind);
  add("features", features);
  add("q_init", q_init);
  if (!pretrained_path.empty()) add("pretrained_path", pretrained_path);
  add("model_lr", fmt_num(model_lr));
  add("model_hidden", std::to_string(model_hidden));
  add("tilings", std::to_string(tilings));
  add("tiles_per_dim", std::to_string(tiles_per_dim));
  add("heatmaps", emit_heatmaps ? "1" : "0");
  add("run_logs", emit_run_logs ? "1" : "0");
  return lines;
}

}  // namespace dyna
