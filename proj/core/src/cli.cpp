#include "sncqa/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sncqa/config.hpp"
#include "sncqa/costmodel.hpp"
#include "sncqa/cqa.hpp"
#include "sncqa/ed.hpp"
#include "sncqa/lieclosure.hpp"
#include "sncqa/optimizer.hpp"
#include "sncqa/schur.hpp"
#include "sncqa/yor.hpp"

namespace sncqa {

using nlohmann::json;

std::vector<ScalingRow> scaling_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("scaling needs n_max >= 1");
  if (n_max > 62) throw ResourceLimitError("scaling limited to n <= 62");
  std::vector<ScalingRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& shape : enumerate_partitions(n, 2)) {
      ScalingRow row;
      row.n = n;
      row.shape = shape;
      row.states = std::uint64_t{1} << n;
      row.dim = dim_irrep(shape);
      row.ratio = static_cast<double>(row.states) / static_cast<double>(row.dim);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SectorResult> sector_sweep(const LatticeSpec& lattice) {
  std::vector<SectorResult> out;
  for (const auto& shape : enumerate_partitions(lattice.n_sites, 2)) {
    auto h = heisenberg_irrep(shape, lattice);
    auto report = ed_irrep(h);
    SectorResult s;
    s.shape = shape;
    s.dim = h.dim();
    s.ground = report.ground_energy();
    s.degeneracy = report.degeneracy;
    s.spin = HalfInteger{shape.row(0) - (shape.num_rows() > 1 ? shape.row(1) : 0)};
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t minimizing_sector(const std::vector<SectorResult>& sectors) {
  if (sectors.empty()) throw std::invalid_argument("no sectors");
  std::size_t best = 0;
  for (std::size_t i = 1; i < sectors.size(); ++i) {
    if (sectors[i].ground < sectors[best].ground - kDegeneracyTolerance) best = i;
  }
  return best;
}

int full_space_degeneracy(const std::vector<SectorResult>& sectors, double tol) {
  const double e0 = sectors[minimizing_sector(sectors)].ground;
  int total = 0;
  for (const auto& s : sectors) {
    if (s.ground <= e0 + tol) total += (s.spin.twice + 1) * s.degeneracy;
  }
  return total;
}

namespace {

std::string fmt(double v, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// Write to a sibling temp file, then rename over the target.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError(path + ": cannot write output file");
    os << text;
    if (!os) throw ConfigError(path + ": write failed");
  }
  fs::rename(tmp, target);
}

int cmd_tableaux(const std::string& shape_text, std::ostream& out) {
  const Partition shape = Partition::parse(shape_text);
  const auto tableaux = enumerate_syt(shape);
  out << "shape (" << shape.to_string() << ") dim " << tableaux.size() << "\n";
  out << "index  tableau  content";
  if (shape.num_rows() <= 2) out << "  spin_labels";
  out << "\n";
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    const auto& t = tableaux[i];
    out << i << "  " << t.to_string() << "  (" << join(t.content()) << ")";
    if (shape.num_rows() <= 2) {
      out << "  (";
      auto labels = spin_labels(t);
      for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? "," : "") << labels[k].to_string();
      out << ")";
    }
    out << "\n";
  }
  return kExitOk;
}

std::vector<Partition> requested_shapes(const RunConfig& cfg) {
  if (cfg.irrep) return {*cfg.irrep};
  return enumerate_partitions(cfg.lattice.spec.n_sites, 2);
}

int cmd_ham(const RunConfig& cfg, std::ostream& out) {
  const auto& lattice = cfg.lattice.spec;
  out << "lattice " << (lattice.name.empty() ? "custom" : lattice.name) << " n_sites " << lattice.n_sites
      << " |E1| " << lattice.j1_edges.size() << " |E2| " << lattice.j2_edges.size() << " J1 " << lattice.J1
      << " J2 " << lattice.J2 << " shift " << fmt(lattice.psd_shift(), 6) << "\n";
  out << "lambda,dim,trace,frobenius,nonzeros,symmetric_error,path_connected,blocks\n";
  for (const auto& shape : requested_shapes(cfg)) {
    auto h = heisenberg_irrep(shape, lattice);
    const auto nnz = (h.matrix.array().abs() > 1e-12).count();
    const auto blocks = connected_blocks(h.matrix);
    out << "\"" << shape.to_string() << "\"," << h.dim() << "," << fmt(h.matrix.trace(), 9) << ","
        << fmt(h.matrix.norm(), 9) << "," << nnz << "," << (h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff()
        << "," << (blocks.size() <= 1 ? "true" : "false") << "," << blocks.size() << "\n";
  }
  return kExitOk;
}

int cmd_ed(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto& lattice = cfg.lattice.spec;
  const auto sectors = sector_sweep(lattice);
  out << "lambda,spin,dim,ground_energy,degeneracy\n";
  for (const auto& s : sectors) {
    out << "\"" << s.shape.to_string() << "\"," << s.spin.to_string() << "," << s.dim << "," << fmt(s.ground)
        << "," << s.degeneracy << "\n";
  }
  const auto& best = sectors[minimizing_sector(sectors)];
  out << "ground_sector (" << best.shape.to_string() << ") energy " << fmt(best.ground)
      << " full_space_degeneracy " << full_space_degeneracy(sectors) << "\n";
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json summary = {{"command", "ed"},
                  {"config", json::parse(config_to_json(cfg))},
                  {"final_energy", best.ground},
                  {"overlap", nullptr},
                  {"ground_sector", best.shape.to_string()},
                  {"runtime_seconds", seconds}};
  if (!cfg.output.summary_json.empty()) write_atomic(cfg.output.summary_json, summary.dump(2) + "\n");
  return kExitOk;
}

int cmd_train(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.irrep) throw ConfigError("config.irrep: required for train");
  const auto start = std::chrono::steady_clock::now();
  const IrrepRep rep(*cfg.irrep);
  const auto h = heisenberg_irrep(rep, cfg.lattice.spec);
  const Eigen::VectorXcd init = default_initial_state(rep);
  err << "training (" << cfg.irrep->to_string() << ") dim " << rep.dim() << " p " << cfg.train.p << " iters "
      << cfg.train.iters << " seed " << cfg.train.seed << "\n";
  const auto trace = train(rep, h, init, cfg.train);

  std::ostringstream csv;
  csv << "iter,shifted_energy,unshifted_energy\n";
  for (const auto& r : trace.records) csv << r.iter << "," << fmt_g(r.shifted) << "," << fmt_g(r.unshifted) << "\n";
  if (!cfg.output.trace_csv.empty()) write_atomic(cfg.output.trace_csv, csv.str());

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json summary = {{"command", "train"},
                  {"config", json::parse(config_to_json(cfg))},
                  {"final_energy", trace.final_energy},
                  {"final_shifted_energy", trace.final_shifted},
                  {"best_energy", trace.best_energy},
                  {"ed_ground_energy", trace.ed_ground},
                  {"overlap", trace.overlap},
                  {"seed", cfg.train.seed},
                  {"ground_sector", cfg.irrep->to_string()},
                  {"runtime_seconds", seconds}};
  if (!cfg.output.summary_json.empty()) write_atomic(cfg.output.summary_json, summary.dump(2) + "\n");

  out << "final_energy " << fmt(trace.final_energy) << "\n";
  out << "ed_ground_energy " << fmt(trace.ed_ground) << "\n";
  out << "overlap " << fmt(trace.overlap, 9) << "\n";
  out << "records " << trace.records.size() << "\n";
  if (trace.used_imaginary) out << "note: real part vanished, imaginary part used\n";
  return kExitOk;
}

int cmd_init_expand(int n, int k, std::string ordering, std::ostream& out) {
  if (ordering.empty()) ordering = default_ordering(n, k);
  const auto terms = expand_initial_state(n, k, ordering);
  out << "n " << n << " k " << k << " ordering " << ordering << " lambda (" << terms.front().shape.to_string()
      << ")\n";
  out << "tableau,content,coefficient\n";
  double norm2 = 0.0;
  for (const auto& t : terms) {
    out << "\"" << t.tableau.to_string() << "\",\"" << join(t.tableau.content()) << "\"," << fmt(t.coefficient)
        << "\n";
    norm2 += t.coefficient * t.coefficient;
  }
  out << "norm " << fmt(std::sqrt(norm2)) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto& lattice = cfg.lattice.spec;
  int max_rows = cfg.verify.max_rows;
  if (max_rows == 0) max_rows = lattice.n_sites <= 6 ? lattice.n_sites : 2;
  out << "lambda,dim,path_connected,blocks,closure_dim,target,closed,result\n";
  bool all_ok = true;
  for (const auto& shape : enumerate_partitions(lattice.n_sites, max_rows)) {
    const IrrepRep rep(shape);
    const Eigen::MatrixXd hp = exchange_irrep(rep, lattice);
    const auto blocks = connected_blocks(hp);
    out << "\"" << shape.to_string() << "\"," << rep.dim() << "," << (blocks.size() <= 1 ? "true" : "false") << ",";
    for (std::size_t b = 0; b < blocks.size(); ++b) out << (b ? "|" : "") << blocks[b].size();
    out << ",";
    if (rep.dim() > 16) {
      out << ",," << rep.dim() * rep.dim() << ",skipped (dim > 16)\n";
      continue;
    }
    const auto closure = closure_dimension(cqa_generators(rep, hp, cfg.verify.second_order), cfg.verify.max_depth);
    const int target = rep.dim() * rep.dim();
    std::string result;
    if (blocks.size() > 1) {
      result = "not path-connected";
    } else if (closure.closed && closure.dimension == target) {
      result = "PASS";
    } else {
      result = "FAIL";
      all_ok = false;
    }
    out << closure.dimension << "," << target << "," << (closure.closed ? "true" : "false") << "," << result << "\n";
  }
  for (int n = 1; n <= 2; ++n) {
    const auto c = closure_dimension(qaoa_generators(n));
    const bool ok = c.closed && c.dimension == (1 << (2 * n));
    all_ok = all_ok && ok;
    out << "qaoa n=" << n << " closure " << c.dimension << " target " << (1 << (2 * n)) << " "
        << (ok ? "PASS" : "FAIL") << "\n";
  }
  const auto neg = closure_dimension(qaoa_generators(2, true));
  out << "qaoa n=2 diagonal mixer closure " << neg.dimension << " (expected < 16) "
      << (neg.dimension < 16 ? "PASS" : "FAIL") << "\n";
  all_ok = all_ok && neg.dimension < 16;
  out << (all_ok ? "verify: all checks passed" : "verify: some checks failed") << "\n";
  return kExitOk;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cost." + key + ": cannot parse '" + item + "'");
    }
  }
  if (values.empty()) throw ConfigError("cost." + key + ": empty list");
  return values;
}

int cmd_cost(const std::vector<std::string>& grid, std::ostream& out) {
  std::vector<double> ns{12}, ks{2}, ts{1}, epss{1e-3}, cs{1};
  std::vector<CostModel> models{CostModel::kQuditSwap, CostModel::kQubitPauli};
  std::string csv_path;
  for (const auto& token : grid) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ConfigError("cost: expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n") {
      ns = parse_list(key, value);
    } else if (key == "k") {
      ks = parse_list(key, value);
    } else if (key == "t") {
      ts = parse_list(key, value);
    } else if (key == "eps") {
      epss = parse_list(key, value);
    } else if (key == "C") {
      cs = parse_list(key, value);
    } else if (key == "model") {
      models.clear();
      std::stringstream ss(value);
      std::string item;
      try {
        while (std::getline(ss, item, ',')) models.push_back(parse_cost_model(item));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("cost.model: ") + e.what());
      }
    } else if (key == "csv") {
      csv_path = value;
    } else {
      throw ConfigError("cost." + key + ": unknown key");
    }
  }
  std::ostringstream table;
  table << "model,n,k,t,eps,C,L,M,K,K_surrogate,gate_count,log_gate_count,term_count,term_bound\n";
  for (auto model : models) {
    for (double n : ns) {
      for (double k : ks) {
        for (double t : ts) {
          for (double eps : epss) {
            for (double c : cs) {
              if (k > n) continue;
              const auto e = estimate(model, static_cast<int>(n), static_cast<int>(k), t, eps, c);
              table << to_string(model) << "," << e.n << "," << e.k << "," << fmt_g(t) << "," << fmt_g(eps) << ","
                    << fmt_g(c) << "," << fmt_g(e.L) << "," << fmt_g(e.M) << "," << e.K << "," << e.K_surrogate
                    << "," << fmt_g(e.gate_count) << "," << fmt(e.log_gate_count, 6) << "," << fmt_g(e.term_count)
                    << "," << fmt_g(e.term_bound) << "\n";
            }
          }
        }
      }
    }
  }
  out << table.str();
  if (!csv_path.empty()) write_atomic(csv_path, table.str());
  return kExitOk;
}

int cmd_scaling(int n_max, std::ostream& out) {
  out << "n,lambda,states,dim,ratio\n";
  for (const auto& row : scaling_table(n_max)) {
    out << row.n << ",\"" << row.shape.to_string() << "\"," << row.states << "," << row.dim << ","
        << fmt(row.ratio, 6) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sn-equivariant CQA toolkit: Young-basis Heisenberg models, training and checks", "sncqa"};
  app.require_subcommand(1);

  std::string shape_text;
  auto* tableaux = app.add_subcommand("tableaux", "list standard tableaux with content vectors");
  tableaux->add_option("shape", shape_text, "partition, e.g. 4,2")->required();

  std::string config_path;
  auto* ham = app.add_subcommand("ham", "build irrep Hamiltonians and report their structure");
  ham->add_option("config", config_path, "JSON config")->required();
  auto* ed = app.add_subcommand("ed", "per-sector exact diagonalization");
  ed->add_option("config", config_path, "JSON config")->required();
  auto* train_cmd = app.add_subcommand("train", "train the ansatz inside one irrep");
  train_cmd->add_option("config", config_path, "JSON config")->required();
  auto* verify = app.add_subcommand("verify", "Lie closure and path-connectedness report");
  verify->add_option("config", config_path, "JSON config")->required();

  int n = 0, k = 0;
  std::string ordering;
  auto* init = app.add_subcommand("init-expand", "Young-basis coefficients of a product initial state");
  init->add_option("n", n)->required();
  init->add_option("k", k)->required();
  init->add_option("ordering", ordering, "placement pattern such as 00ss");

  std::vector<std::string> grid;
  auto* cost = app.add_subcommand("cost", "gate-count estimates, e.g. cost n=8,12 k=2,4 t=1 eps=1e-3");
  cost->add_option("grid", grid, "key=value entries: n k t eps C model csv");

  int n_max = 0;
  auto* scaling = app.add_subcommand("scaling", "2^n / dim(lambda) table");
  scaling->add_option("n_max", n_max)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (tableaux->parsed()) return cmd_tableaux(shape_text, out);
    if (init->parsed()) return cmd_init_expand(n, k, ordering, out);
    if (cost->parsed()) return cmd_cost(grid, out);
    if (scaling->parsed()) return cmd_scaling(n_max, out);
    const RunConfig cfg = load_config(config_path);
    if (ham->parsed()) return cmd_ham(cfg, out);
    if (ed->parsed()) return cmd_ed(cfg, out);
    if (train_cmd->parsed()) return cmd_train(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace sncqa
