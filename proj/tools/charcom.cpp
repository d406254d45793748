// Copyright 2026 The charcom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charcom/builtin_groups.hpp"
#include "charcom/character_table.hpp"
#include "charcom/circuits.hpp"
#include "charcom/complexity.hpp"
#include "charcom/decomposition.hpp"
#include "charcom/experiments.hpp"
#include "charcom/group.hpp"
#include "charcom/rng.hpp"
#include "charcom/svg.hpp"

namespace fs = std::filesystem;
using namespace charcom;

namespace {

// Flat key=value config file; keys are long option names without the
// leading dashes. Values only apply to options not already set on the
// command line, so flags override the file.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kConfigError, "config", "cannot open " + path);
  }
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kConfigError, "config",
                  path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw Error(ErrorKind::kConfigError, "config",
                  path + ":" + std::to_string(line_no) + ": bad key");
    }
    CLI::Option* option = cmd->get_option_no_throw("--" + key);
    if (option == nullptr) {
      throw Error(ErrorKind::kConfigError, "config",
                  path + ":" + std::to_string(line_no) + ": unknown key \"" + key + "\"");
    }
    if (option->count() > 0) continue;  // command line wins
    option->add_result(value);
    option->run_callback();
  }
}

// Flags shared by every subcommand.
struct CommonOptions {
  std::string group_name;
  std::string generators_file;
  std::size_t order_cap = kDefaultOrderCap;
  std::string out_dir = ".";
  std::string config_path;

  void attach(CLI::App* cmd, bool with_group) {
    if (with_group) {
      cmd->add_option("--group", group_name,
                      "Built-in gate-set group (z2, z8, s3, pauli1, pauli2, clifford1, "
                      "cnot_phase2)");
      cmd->add_option("--generators", generators_file,
                      "JSON file with generator matrices (rows of [re, im] pairs)");
    }
    cmd->add_option("--order-cap", order_cap, "Group closure cap")
        ->envname("CHARCOM_ORDER_CAP");
    cmd->add_option("--out-dir", out_dir, "Output directory (all files land here)");
    cmd->add_option("--config", config_path,
                    "Config file, one key=value per line; flags override");
  }

  void load_config(CLI::App* cmd) const {
    if (!config_path.empty()) apply_config_file(cmd, config_path);
  }

  fs::path prepare_out_dir() const {
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw Error(ErrorKind::kIoError, "out_dir", "cannot create " + dir.string());
    }
    return dir;
  }
};

CMatrix parse_matrix_json(const nlohmann::json& rows) {
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  if (nrows == 0) {
    throw Error(ErrorKind::kIoError, "load_generators", "empty matrix");
  }
  const auto ncols = static_cast<Eigen::Index>(rows.at(0).size());
  CMatrix m(nrows, ncols);
  for (Eigen::Index i = 0; i < nrows; ++i) {
    if (static_cast<Eigen::Index>(rows.at(static_cast<std::size_t>(i)).size()) != ncols) {
      throw Error(ErrorKind::kIoError, "load_generators", "ragged matrix rows");
    }
    for (Eigen::Index j = 0; j < ncols; ++j) {
      const auto& entry = rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
      m(i, j) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

std::vector<CMatrix> load_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIoError, "load_generators", "cannot open " + path);
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kIoError, "load_generators", e.what());
  }
  const nlohmann::json& list = parsed.is_object() ? parsed.at("generators") : parsed;
  std::vector<CMatrix> generators;
  for (const auto& matrix : list) generators.push_back(parse_matrix_json(matrix));
  return generators;
}

FiniteGroup load_group(const CommonOptions& common, bool projective = false) {
  std::vector<CMatrix> generators;
  if (!common.group_name.empty()) {
    generators = builtin_group_generators(common.group_name);
  } else if (!common.generators_file.empty()) {
    generators = load_generators_file(common.generators_file);
  } else {
    throw Error(ErrorKind::kConfigError, "load_group",
                "one of --group or --generators is required");
  }
  return FiniteGroup::close(generators, CloseOptions{common.order_cap, projective});
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIoError, "read_circuit", "cannot open " + path);
  }
  return read_circuit_jsonl(in);
}

StateVector parse_state_spec(const std::string& spec, Eigen::Index dim) {
  if (spec == "zero" || spec.empty()) {
    CVector v = CVector::Zero(dim);
    v(0) = 1.0;
    return StateVector::from_vector(std::move(v));
  }
  if (spec.rfind("basis:", 0) == 0) {
    const auto index = static_cast<Eigen::Index>(std::stoll(spec.substr(6)));
    if (index < 0 || index >= dim) {
      throw Error(ErrorKind::kConfigError, "state_spec", "basis index outside dimension");
    }
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return StateVector::from_vector(std::move(v));
  }
  if (spec.rfind("random:", 0) == 0) {
    SplitMix64 rng(static_cast<std::uint64_t>(std::stoull(spec.substr(7))));
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = Complex(rng.next_gaussian(), rng.next_gaussian());
    }
    v /= v.norm();
    return StateVector::from_vector(std::move(v));
  }
  throw Error(ErrorKind::kConfigError, "state_spec",
              "expected zero, basis:<index> or random:<seed>, got \"" + spec + "\"");
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kConfigError, what, "bad integer list \"" + text + "\"");
    }
  }
  if (values.empty()) {
    throw Error(ErrorKind::kConfigError, what, "empty integer list");
  }
  return values;
}

int run_group_info(const CommonOptions& common, bool projective) {
  const FiniteGroup group = load_group(common, projective);
  const fs::path dir = common.prepare_out_dir();
  std::ostringstream json;
  group.dump_json(json);
  write_file(dir / "group.json", json.str());
  std::cout << "order=" << group.order() << " dim=" << group.dim()
            << " classes=" << group.num_classes()
            << " abelian=" << (group.is_abelian() ? "yes" : "no")
            << " projective=" << (group.projective() ? "yes" : "no") << "\n"
            << "wrote " << (dir / "group.json").string() << "\n";
  return 0;
}

int run_char_table(const CommonOptions& common) {
  const FiniteGroup group = load_group(common);
  const CharacterTable table = CharacterTable::compute(group);
  const OrthogonalityReport report = table.verify_orthogonality();
  const fs::path dir = common.prepare_out_dir();
  std::ostringstream csv;
  table.write_csv(csv);
  write_file(dir / "char_table.csv", csv.str());
  std::cout << "irreps=" << table.num_irreps()
            << " row_residual=" << format_double(report.max_row_residual, 6)
            << " col_residual=" << format_double(report.max_col_residual, 6)
            << " pass=" << (report.pass ? "yes" : "no") << "\n"
            << "wrote " << (dir / "char_table.csv").string() << "\n";
  return 0;
}

int run_complexity(const CommonOptions& common, int class_index,
                   const std::string& circuit_file) {
  const FiniteGroup group = load_group(common);
  const CharacterTable table = CharacterTable::compute(group);

  ElementId element = 0;
  if (!circuit_file.empty()) {
    const Circuit circuit = load_circuit(circuit_file);
    element = group.require_element(compile_circuit(circuit), "cmd_complexity");
  } else if (class_index >= 0) {
    if (static_cast<std::size_t>(class_index) >= group.num_classes()) {
      throw Error(ErrorKind::kConfigError, "cmd_complexity",
                  "class index " + std::to_string(class_index) + " out of range");
    }
    element = group.class_rep(static_cast<std::size_t>(class_index));
  }

  const ComplexityReport report = character_complexity(group, table, element);
  const fs::path dir = common.prepare_out_dir();
  std::ostringstream json;
  report.write_json(json);
  write_file(dir / "complexity.json", json.str());
  std::cout << "element=" << report.element << " class=" << report.class_index
            << " complexity=" << format_double(report.value, 12) << "\n"
            << "wrote " << (dir / "complexity.json").string() << "\n";
  return 0;
}

int run_simulate(const CommonOptions& common, const std::string& circuit_file,
                 const std::string& state_spec, std::optional<double> threshold,
                 const std::string& mode_name) {
  const auto mode = decomp_mode_from_name(mode_name);
  if (!mode) {
    throw Error(ErrorKind::kConfigError, "cmd_simulate",
                "mode must be isotypic or verbatim-eq3, got \"" + mode_name + "\"");
  }
  const FiniteGroup group = load_group(common);
  const CharacterTable table = CharacterTable::compute(group);
  const Circuit circuit = load_circuit(circuit_file);
  const ElementId element = group.require_element(compile_circuit(circuit), "cmd_simulate");
  const StateVector psi = parse_state_spec(state_spec, group.dim());

  const fs::path dir = common.prepare_out_dir();

  std::vector<double> thresholds = {0.0,  1e-8, 1e-6, 1e-4, 1e-2,
                                    0.1,  0.3,  0.6,  1.0,
                                    std::numeric_limits<double>::infinity()};
  if (threshold) thresholds.push_back(*threshold);
  const auto rows = truncation_study(group, table, element, psi, thresholds);
  std::ostringstream trunc_csv;
  write_truncation_csv(rows, trunc_csv);
  write_file(dir / "truncation.csv", trunc_csv.str());

  // One observable per qubit (Z_q) when the space is qubit-shaped, else the
  // projector onto the first basis state.
  std::vector<std::pair<std::string, CMatrix>> observables;
  const auto dim = group.dim();
  int n_qubits = 0;
  while ((Eigen::Index{1} << (n_qubits + 1)) <= dim) ++n_qubits;
  if ((Eigen::Index{1} << n_qubits) == dim && n_qubits >= 1) {
    for (int q = 0; q < n_qubits; ++q) {
      observables.emplace_back("Z_q" + std::to_string(q),
                               embed_gate({GateKind::kZ, {q}, 0}, n_qubits));
    }
  } else {
    CMatrix p0 = CMatrix::Zero(dim, dim);
    p0(0, 0) = 1.0;
    observables.emplace_back("P0", std::move(p0));
  }

  const SignificantSet set = significant_set(table, element, std::max(1, n_qubits), threshold);
  std::ostringstream measurement_csv;
  measurement_csv << "observable,mode,set_size,value,imag_residual,oracle,abs_difference\n";
  for (const auto& [name, observable] : observables) {
    const MeasurementResult result =
        simulate_measurement(group, table, element, observable, psi, set, *mode);
    const CVector exact = group.matrix(element) * psi.amplitudes;
    const double oracle = exact.dot(observable * exact).real();
    measurement_csv << name << "," << decomp_mode_name(*mode) << "," << set.indices.size()
                    << "," << format_double(result.value, 12) << ","
                    << format_double(result.imag_residual, 12) << ","
                    << format_double(oracle, 12) << ","
                    << format_double(std::fabs(result.value - oracle), 12) << "\n";
  }
  write_file(dir / "measurement.csv", measurement_csv.str());

  std::cout << "group order=" << group.order() << " element=" << element
            << " significant_set=" << set.indices.size() << "/" << table.num_irreps()
            << " threshold=" << format_double(set.threshold, 6) << "\n"
            << "wrote " << (dir / "truncation.csv").string() << " and "
            << (dir / "measurement.csv").string() << "\n";
  return 0;
}

struct ExperimentOptions {
  std::string kind;
  std::string family = "random";
  std::string gate_set = "xz";
  int n = 1;
  int gates = 8;
  std::size_t samples = 200;
  int bins = 30;
  std::uint64_t seed = 42;
  std::string qubit_range = "1,2";
  std::string gate_range = "0,2,4,8";
  std::string source = "uniform01";
  int cloud_n = 10;
  int threads = 1;
  int max_phase_level = 1;
  int qaoa_max_level = 1;
};

int run_experiment(const CommonOptions& common, const ExperimentOptions& opts) {
  const auto family = family_from_name(opts.family);
  if (!family) {
    throw Error(ErrorKind::kConfigError, "cmd_experiment",
                "family must be random, qft or qaoa, got \"" + opts.family + "\"");
  }
  ExperimentParams params;
  params.gate_set = builtin_gate_set(opts.gate_set);
  params.gate_set_name = opts.gate_set;
  params.order_cap = common.order_cap;
  params.threads = opts.threads;
  params.max_phase_level = opts.max_phase_level;
  params.qaoa_max_level = opts.qaoa_max_level;
  params.cloud_gate_count = opts.gates;
  GroupCache cache;
  const fs::path dir = common.prepare_out_dir();

  auto emit_all = [&](const auto& data, const std::string& stem) {
    std::ostringstream csv, json, svg;
    emit_csv(data, csv);
    emit_json(data, json);
    emit_svg(data, svg);
    write_file(dir / (stem + ".csv"), csv.str());
    write_file(dir / (stem + ".json"), json.str());
    write_file(dir / (stem + ".svg"), svg.str());
    std::cout << "wrote " << (dir / stem).string() << ".{csv,json,svg}\n";
  };

  if (opts.kind == "hist") {
    emit_all(complexity_histogram(*family, opts.n, opts.gates, opts.samples, opts.bins,
                                  opts.seed, params, cache),
             "histogram");
  } else if (opts.kind == "heatmap") {
    emit_all(complexity_heatmap(parse_int_list(opts.qubit_range, "qubit_range"),
                                parse_int_list(opts.gate_range, "gate_range"), *family,
                                opts.samples, opts.seed, params, cache),
             "heatmap");
  } else if (opts.kind == "scaling") {
    emit_all(scaling_curve(*family, opts.n, parse_int_list(opts.gate_range, "gate_range"),
                           opts.samples, opts.seed, params, cache),
             "scaling");
  } else if (opts.kind == "cloud") {
    const auto source = complexity_source_from_name(opts.source);
    if (!source) {
      throw Error(ErrorKind::kConfigError, "cmd_experiment",
                  "source must be uniform01 or circuit, got \"" + opts.source + "\"");
    }
    emit_all(hypersphere_cloud(opts.cloud_n, opts.samples, opts.seed, *source, params, cache),
             "cloud");
  } else {
    throw Error(ErrorKind::kConfigError, "cmd_experiment",
                "kind must be hist, heatmap, scaling or cloud, got \"" + opts.kind + "\"");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group character toolkit: groups from quantum gates, character "
               "tables, character complexity, decomposition simulation, figure pipelines"};
  app.require_subcommand(1);

  CommonOptions gi_common;
  bool projective = false;
  auto* group_info = app.add_subcommand("group-info", "Close a group and report order/classes");
  gi_common.attach(group_info, true);
  group_info->add_flag("--projective", projective, "Quotient by the scalar subgroup");

  CommonOptions ct_common;
  auto* char_table = app.add_subcommand("char-table", "Character table CSV plus residuals");
  ct_common.attach(char_table, true);

  CommonOptions cx_common;
  int class_index = -1;
  std::string cx_circuit;
  auto* complexity_cmd = app.add_subcommand("complexity", "Character complexity report");
  cx_common.attach(complexity_cmd, true);
  complexity_cmd->add_option("--class-index", class_index, "Conjugacy class to evaluate");
  complexity_cmd->add_option("--circuit", cx_circuit, "Circuit JSONL; its compiled element");

  CommonOptions sim_common;
  std::string sim_circuit, sim_state = "zero", sim_mode = "isotypic";
  double sim_threshold = -1.0;
  auto* simulate = app.add_subcommand("simulate", "Decomposition simulation vs dense oracle");
  sim_common.attach(simulate, true);
  simulate->add_option("--circuit", sim_circuit, "Circuit JSONL file")->required();
  simulate->add_option("--state", sim_state, "zero | basis:<index> | random:<seed>");
  simulate->add_option("--threshold", sim_threshold, "Significance threshold override");
  simulate->add_option("--mode", sim_mode, "isotypic | verbatim-eq3");

  CommonOptions exp_common;
  ExperimentOptions exp;
  auto* experiment = app.add_subcommand("experiment", "Figure pipelines (deterministic)");
  exp_common.attach(experiment, false);
  experiment->add_option("--kind", exp.kind, "hist | heatmap | scaling | cloud")->required();
  experiment->add_option("--family", exp.family, "random | qft | qaoa");
  experiment->add_option("--gate-set", exp.gate_set,
                         "xz, paulis, xzcnot, hs, hscnot, cnot_phase2");
  experiment->add_option("-n,--qubits", exp.n, "Circuit width");
  experiment->add_option("--gates", exp.gates, "Gate count per sampled circuit");
  experiment->add_option("--samples", exp.samples, "Samples (per histogram/cell/point)");
  experiment->add_option("--bins", exp.bins, "Histogram bins over [0, 1]");
  experiment->add_option("--seed", exp.seed, "Root seed; fully determines the output");
  experiment->add_option("--qubit-range", exp.qubit_range, "Heatmap qubit values, e.g. 1,2");
  experiment->add_option("--gate-range", exp.gate_range, "Heatmap/scaling gate counts");
  experiment->add_option("--source", exp.source, "Cloud complexity source");
  experiment->add_option("--cloud-qubits", exp.cloud_n, "Cloud hypersphere qubit count");
  experiment->add_option("--threads", exp.threads, "Worker threads (output is identical)");
  experiment->add_option("--max-phase-level", exp.max_phase_level, "QFT family k_cap draw bound");
  experiment->add_option("--qaoa-max-level", exp.qaoa_max_level, "QAOA family level draw bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (group_info->parsed()) {
      gi_common.load_config(group_info);
      return run_group_info(gi_common, projective);
    }
    if (char_table->parsed()) {
      ct_common.load_config(char_table);
      return run_char_table(ct_common);
    }
    if (complexity_cmd->parsed()) {
      cx_common.load_config(complexity_cmd);
      return run_complexity(cx_common, class_index, cx_circuit);
    }
    if (simulate->parsed()) {
      sim_common.load_config(simulate);
      return run_simulate(sim_common, sim_circuit, sim_state,
                          sim_threshold >= 0.0 ? std::optional<double>(sim_threshold)
                                               : std::nullopt,
                          sim_mode);
    }
    if (experiment->parsed()) {
      exp_common.load_config(experiment);
      return run_experiment(exp_common, exp);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_io_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
