#include "sncqa/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sncqa {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + "." + key + ": unknown key");
  }
}

template <typename T>
T get_field(const json& obj, const std::string& where, const std::string& key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <typename T>
void read_optional(const json& obj, const std::string& where, const std::string& key, T& out) {
  if (obj.contains(key)) out = get_field<T>(obj, where, key);
}

std::vector<Edge> read_edges(const json& obj, const std::string& where, const std::string& key) {
  std::vector<Edge> edges;
  if (!obj.contains(key)) return edges;
  const json& list = obj.at(key);
  if (!list.is_array()) throw ConfigError(where + "." + key + ": expected an array of [i, j] pairs");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ConfigError(where + "." + key + "[" + std::to_string(i) + "]: expected [i, j] with integer sites");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

LatticeConfig read_lattice(const json& obj) {
  const std::string where = "lattice";
  reject_unknown(obj, where, {"builtin", "n_sites", "j1_edges", "j2_edges", "J1", "J2", "name"});
  LatticeConfig cfg;
  double J1 = 1.0;
  double J2 = 0.0;
  read_optional(obj, where, "J1", J1);
  read_optional(obj, where, "J2", J2);
  if (obj.contains("builtin")) {
    for (const char* key : {"n_sites", "j1_edges", "j2_edges", "name"}) {
      if (obj.contains(key)) throw ConfigError(where + "." + key + ": not allowed together with builtin");
    }
    cfg.builtin = get_field<std::string>(obj, where, "builtin");
    try {
      cfg.spec = builtin_lattice(cfg.builtin, J1, J2);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ".builtin: " + e.what());
    }
    return cfg;
  }
  if (!obj.contains("n_sites")) throw ConfigError(where + ": needs either builtin or n_sites");
  cfg.spec.n_sites = get_field<int>(obj, where, "n_sites");
  cfg.spec.j1_edges = read_edges(obj, where, "j1_edges");
  cfg.spec.j2_edges = read_edges(obj, where, "j2_edges");
  cfg.spec.J1 = J1;
  cfg.spec.J2 = J2;
  read_optional(obj, where, "name", cfg.spec.name);
  try {
    cfg.spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return cfg;
}

TrainConfig read_train(const json& obj) {
  const std::string where = "train";
  reject_unknown(obj, where,
                 {"p", "lr", "beta1", "beta2", "eps", "iters", "seed", "record_every", "init_scale", "mixer_first"});
  TrainConfig cfg;
  read_optional(obj, where, "p", cfg.p);
  read_optional(obj, where, "lr", cfg.lr);
  read_optional(obj, where, "beta1", cfg.beta1);
  read_optional(obj, where, "beta2", cfg.beta2);
  read_optional(obj, where, "eps", cfg.eps);
  read_optional(obj, where, "iters", cfg.iters);
  read_optional(obj, where, "seed", cfg.seed);
  read_optional(obj, where, "record_every", cfg.record_every);
  read_optional(obj, where, "init_scale", cfg.init_scale);
  read_optional(obj, where, "mixer_first", cfg.mixer_first);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < json_text.size(); ++i) line += json_text[i] == '\n';
    throw ConfigError("line " + std::to_string(line) + ": " + e.what());
  }
  reject_unknown(root, "config", {"lattice", "irrep", "train", "output", "verify"});
  if (!root.contains("lattice")) throw ConfigError("config.lattice: required");

  RunConfig cfg;
  cfg.lattice = read_lattice(root.at("lattice"));
  if (root.contains("irrep")) {
    try {
      cfg.irrep = Partition::parse(get_field<std::string>(root, "config", "irrep"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config.irrep: ") + e.what());
    }
    if (cfg.irrep->size() != cfg.lattice.spec.n_sites) {
      throw ConfigError("config.irrep: shape (" + cfg.irrep->to_string() + ") has " +
                        std::to_string(cfg.irrep->size()) + " boxes but lattice.n_sites is " +
                        std::to_string(cfg.lattice.spec.n_sites));
    }
  }
  if (root.contains("train")) cfg.train = read_train(root.at("train"));
  if (root.contains("output")) {
    const json& out = root.at("output");
    reject_unknown(out, "output", {"trace_csv", "summary_json"});
    read_optional(out, "output", "trace_csv", cfg.output.trace_csv);
    read_optional(out, "output", "summary_json", cfg.output.summary_json);
  }
  if (root.contains("verify")) {
    const json& v = root.at("verify");
    reject_unknown(v, "verify", {"second_order", "max_depth", "max_rows"});
    read_optional(v, "verify", "second_order", cfg.verify.second_order);
    read_optional(v, "verify", "max_depth", cfg.verify.max_depth);
    read_optional(v, "verify", "max_rows", cfg.verify.max_rows);
    if (cfg.verify.max_depth < 1) throw ConfigError("verify.max_depth: must be >= 1");
    if (cfg.verify.max_rows < 0) throw ConfigError("verify.max_rows: must be >= 0");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string config_to_json(const RunConfig& cfg, int indent) {
  json lattice;
  if (!cfg.lattice.builtin.empty()) {
    lattice["builtin"] = cfg.lattice.builtin;
  } else {
    const auto& s = cfg.lattice.spec;
    lattice["n_sites"] = s.n_sites;
    auto edges = [](const std::vector<Edge>& list) {
      json arr = json::array();
      for (auto [a, b] : list) arr.push_back({a, b});
      return arr;
    };
    lattice["j1_edges"] = edges(s.j1_edges);
    lattice["j2_edges"] = edges(s.j2_edges);
    lattice["name"] = s.name;
  }
  lattice["J1"] = cfg.lattice.spec.J1;
  lattice["J2"] = cfg.lattice.spec.J2;

  json root;
  root["lattice"] = lattice;
  if (cfg.irrep) root["irrep"] = cfg.irrep->to_string();
  const auto& t = cfg.train;
  root["train"] = {{"p", t.p},         {"lr", t.lr},       {"beta1", t.beta1},
                   {"beta2", t.beta2}, {"eps", t.eps},     {"iters", t.iters},
                   {"seed", t.seed},   {"record_every", t.record_every},
                   {"init_scale", t.init_scale}, {"mixer_first", t.mixer_first}};
  root["output"] = {{"trace_csv", cfg.output.trace_csv}, {"summary_json", cfg.output.summary_json}};
  root["verify"] = {{"second_order", cfg.verify.second_order},
                    {"max_depth", cfg.verify.max_depth},
                    {"max_rows", cfg.verify.max_rows}};
  return root.dump(indent);
}

}  // namespace sncqa
