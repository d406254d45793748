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

#include "charcom/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "charcom/rng.hpp"

namespace charcom {

const char* family_name(CircuitFamily family) {
  switch (family) {
    case CircuitFamily::kRandom: return "random";
    case CircuitFamily::kQft: return "qft";
    case CircuitFamily::kQaoa: return "qaoa";
  }
  return "?";
}

std::optional<CircuitFamily> family_from_name(const std::string& name) {
  if (name == "random") return CircuitFamily::kRandom;
  if (name == "qft") return CircuitFamily::kQft;
  if (name == "qaoa") return CircuitFamily::kQaoa;
  return std::nullopt;
}

const char* complexity_source_name(ComplexitySource source) {
  return source == ComplexitySource::kUniform01 ? "uniform01" : "circuit";
}

std::optional<ComplexitySource> complexity_source_from_name(const std::string& name) {
  if (name == "uniform01") return ComplexitySource::kUniform01;
  if (name == "circuit") return ComplexitySource::kCircuit;
  return std::nullopt;
}

const GroupCache::Entry& GroupCache::get(const std::vector<CMatrix>& generators,
                                         std::size_t order_cap) {
  std::vector<std::uint64_t> key;
  key.reserve(generators.size() + 1);
  key.push_back(static_cast<std::uint64_t>(generators.front().rows()));
  for (const CMatrix& g : generators) key.push_back(matrix_fingerprint(g));
  std::sort(key.begin() + 1, key.end());

  auto it = entries_.find(key);
  if (it != entries_.end()) return *it->second;

  auto entry = std::make_unique<Entry>(Entry{
      FiniteGroup::close(generators, CloseOptions{order_cap, false}), CharacterTable{}, {}});
  entry->table = CharacterTable::compute(entry->group);
  entry->profile = complexity_profile(entry->group, entry->table);
  return *entries_.emplace(std::move(key), std::move(entry)).first->second;
}

namespace {

// One prepared sample: the drawn circuit plus its (cached) host group.
struct PreparedSample {
  Circuit circuit;
  const GroupCache::Entry* entry = nullptr;
};

Circuit draw_circuit(CircuitFamily family, int n, int gate_count, std::uint64_t sample_seed,
                     const ExperimentParams& params) {
  switch (family) {
    case CircuitFamily::kRandom:
      return random_circuit(n, gate_count, sample_seed, params.gate_set);
    case CircuitFamily::kQft: {
      if (params.max_phase_level < 1) {
        throw Error(ErrorKind::kDomainError, "complexity_histogram",
                    "max_phase_level must be >= 1");
      }
      SplitMix64 rng(sample_seed);
      const int k_cap = 1 + static_cast<int>(rng.next_below(
                                static_cast<std::uint64_t>(params.max_phase_level)));
      return qft_circuit(n, k_cap);
    }
    case CircuitFamily::kQaoa: {
      SplitMix64 rng(sample_seed);
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (rng.next_below(2) == 1) edges.emplace_back(a, b);
      // gate_count is a budget: enough layers to reach it.
      const int per_layer = 3 * static_cast<int>(edges.size()) + 3 * n;
      const int layers = gate_count > 0 ? (gate_count + per_layer - 1) / per_layer : 0;
      std::vector<int> gammas(layers), betas(layers);
      for (int l = 0; l < layers; ++l) {
        gammas[l] = static_cast<int>(
            rng.next_below(static_cast<std::uint64_t>(params.qaoa_max_level) + 1));
        betas[l] = static_cast<int>(
            rng.next_below(static_cast<std::uint64_t>(params.qaoa_max_level) + 1));
      }
      return qaoa_circuit(n, layers, edges, gammas, betas);
    }
  }
  throw Error(ErrorKind::kDomainError, "draw_circuit", "unknown circuit family");
}

PreparedSample prepare_sample(CircuitFamily family, int n, int gate_count,
                              std::uint64_t sample_seed, const ExperimentParams& params,
                              GroupCache& cache) {
  PreparedSample sample;
  sample.circuit = draw_circuit(family, n, gate_count, sample_seed, params);
  // The random family lives in the group of the whole gate set (one closure
  // per set); qft/qaoa host groups depend on the drawn parameters.
  const std::vector<CMatrix> generators =
      family == CircuitFamily::kRandom ? embedded_gate_set(params.gate_set, n)
                                       : distinct_embedded_gates(sample.circuit);
  sample.entry = &cache.get(generators, params.order_cap);
  return sample;
}

double evaluate_sample(const PreparedSample& sample) {
  const GroupCache::Entry& entry = *sample.entry;
  const ElementId element =
      entry.group.require_element(compile_circuit(sample.circuit), "experiment_sample");
  return entry.profile.per_class[entry.group.class_of(element)];
}

// Index-parallel evaluation; results land in slot `i`, so the output is
// identical for every thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = count * t / nthreads;
      const std::size_t hi = count * (t + 1) / nthreads;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& worker : pool) worker.join();
}

std::vector<double> evaluate_all(const std::vector<PreparedSample>& samples, int threads) {
  std::vector<double> values(samples.size());
  parallel_for(samples.size(), threads,
               [&](std::size_t i) { values[i] = evaluate_sample(samples[i]); });
  return values;
}

bool all_equal(const std::vector<double>& values) {
  for (double v : values) {
    if (v != values.front()) return false;
  }
  return true;
}

// Sample mean, exact when every value is identical (zero-gate cells must pin
// the identity complexity bit for bit).
double mean_of(const std::vector<double>& values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  if (all_equal(values)) return values.front();
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double stderr_of(const std::vector<double>& values, double mean) {
  if (values.size() < 2 || all_equal(values)) return 0.0;
  double variance = 0.0;
  for (double v : values) variance += (v - mean) * (v - mean);
  return std::sqrt(variance / static_cast<double>(values.size() - 1) /
                   static_cast<double>(values.size()));
}

}  // namespace

HistogramData complexity_histogram(CircuitFamily family, int n, int gate_count,
                                   std::size_t sample_count, int bins, std::uint64_t seed,
                                   const ExperimentParams& params, GroupCache& cache) {
  if (bins < 1) {
    throw Error(ErrorKind::kDomainError, "complexity_histogram", "bins must be >= 1");
  }
  HistogramData data;
  data.family = family_name(family);
  data.n = n;
  data.gate_count = gate_count;
  data.gate_set_name = params.gate_set_name;
  data.seed = seed;
  data.sample_count = sample_count;
  data.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b) {
    data.bin_edges[static_cast<std::size_t>(b)] = static_cast<double>(b) / bins;
  }
  data.counts.assign(static_cast<std::size_t>(bins), 0);

  std::vector<PreparedSample> samples;
  samples.reserve(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j) {
    samples.push_back(prepare_sample(family, n, gate_count, sub_seed(seed, j), params, cache));
  }
  for (double value : evaluate_all(samples, params.threads)) {
    const auto bin = std::min<std::size_t>(
        static_cast<std::size_t>(value * bins), static_cast<std::size_t>(bins) - 1);
    ++data.counts[bin];
  }
  return data;
}

HeatmapGrid complexity_heatmap(const std::vector<int>& qubit_values,
                               const std::vector<int>& gate_values, CircuitFamily family,
                               std::size_t samples_per_cell, std::uint64_t seed,
                               const ExperimentParams& params, GroupCache& cache) {
  HeatmapGrid grid;
  grid.qubit_values = qubit_values;
  grid.gate_values = gate_values;
  grid.family = family_name(family);
  grid.gate_set_name = params.gate_set_name;
  grid.samples_per_cell = samples_per_cell;
  grid.seed = seed;
  grid.cells.assign(qubit_values.size() * gate_values.size(),
                    std::numeric_limits<double>::quiet_NaN());

  for (std::size_t qi = 0; qi < qubit_values.size(); ++qi) {
    for (std::size_t gi = 0; gi < gate_values.size(); ++gi) {
      const int n = qubit_values[qi];
      const int m = gate_values[gi];
      try {
        std::vector<PreparedSample> samples;
        samples.reserve(samples_per_cell);
        for (std::size_t j = 0; j < samples_per_cell; ++j) {
          samples.push_back(prepare_sample(
              family, n, m,
              sub_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m), j),
              params, cache));
        }
        const std::vector<double> values = evaluate_all(samples, params.threads);
        grid.cells[qi * gate_values.size() + gi] = mean_of(values);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kGroupNotClosed) throw;
        // Unclosable cell: recorded as missing rather than aborting the grid.
      }
    }
  }
  return grid;
}

ScalingSeries scaling_curve(CircuitFamily family, int n, const std::vector<int>& gate_counts,
                            std::size_t samples_per_point, std::uint64_t seed,
                            const ExperimentParams& params, GroupCache& cache) {
  ScalingSeries series;
  series.family = family_name(family);
  series.n = n;
  series.gate_set_name = params.gate_set_name;
  series.samples_per_point = samples_per_point;
  series.seed = seed;
  series.gate_counts = gate_counts;
  std::sort(series.gate_counts.begin(), series.gate_counts.end());

  for (int m : series.gate_counts) {
    std::vector<PreparedSample> samples;
    samples.reserve(samples_per_point);
    for (std::size_t j = 0; j < samples_per_point; ++j) {
      samples.push_back(prepare_sample(family, n, m,
                                       sub_seed(seed, static_cast<std::uint64_t>(m), j),
                                       params, cache));
    }
    const std::vector<double> values = evaluate_all(samples, params.threads);
    const double mean = values.empty() ? 0.0 : mean_of(values);
    series.mean_complexity.push_back(mean);
    series.stderr_complexity.push_back(stderr_of(values, mean));
  }
  return series;
}

HypersphereCloud hypersphere_cloud(int n, std::size_t sample_count, std::uint64_t seed,
                                   ComplexitySource source, const ExperimentParams& params,
                                   GroupCache& cache) {
  HypersphereCloud cloud;
  cloud.n = n;
  cloud.projection_seed = seed;
  cloud.complexity_source = complexity_source_name(source);
  cloud.points.reserve(sample_count);

  std::vector<double> complexities(sample_count);
  if (source == ComplexitySource::kUniform01) {
    for (std::size_t j = 0; j < sample_count; ++j) {
      SplitMix64 value_rng(sub_seed(seed, j, 0));
      complexities[j] = value_rng.next_double();
    }
  } else {
    std::vector<PreparedSample> samples;
    samples.reserve(sample_count);
    for (std::size_t j = 0; j < sample_count; ++j) {
      samples.push_back(prepare_sample(CircuitFamily::kRandom, n, params.cloud_gate_count,
                                       sub_seed(seed, j, 0), params, cache));
    }
    complexities = evaluate_all(samples, params.threads);
  }

  for (std::size_t j = 0; j < sample_count; ++j) {
    SplitMix64 direction_rng(sub_seed(seed, j, 1));
    const double radius = hypersphere_radius(n, complexities[j]);
    const double z = 2.0 * direction_rng.next_double() - 1.0;
    const double phi = 2.0 * M_PI * direction_rng.next_double();
    const double s = std::sqrt(1.0 - z * z);
    cloud.points.push_back({radius * s * std::cos(phi), radius * s * std::sin(phi),
                            radius * z, radius, complexities[j]});
  }
  return cloud;
}

bool HeatmapGrid::operator==(const HeatmapGrid& other) const {
  if (qubit_values != other.qubit_values || gate_values != other.gate_values ||
      samples_per_cell != other.samples_per_cell || seed != other.seed ||
      family != other.family || gate_set_name != other.gate_set_name ||
      cells.size() != other.cells.size()) {
    return false;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool both_nan = std::isnan(cells[i]) && std::isnan(other.cells[i]);
    if (!both_nan && cells[i] != other.cells[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Emission

void emit_csv(const HistogramData& data, std::ostream& out) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b + 1 < data.bin_edges.size(); ++b) {
    out << format_double(data.bin_edges[b], 12) << "," << format_double(data.bin_edges[b + 1], 12)
        << "," << data.counts[b] << "\n";
  }
}

void emit_csv(const HeatmapGrid& data, std::ostream& out) {
  out << "n,gates,mean_complexity,samples\n";
  for (std::size_t qi = 0; qi < data.qubit_values.size(); ++qi) {
    for (std::size_t gi = 0; gi < data.gate_values.size(); ++gi) {
      out << data.qubit_values[qi] << "," << data.gate_values[gi] << ","
          << format_double(data.cell(qi, gi), 12) << "," << data.samples_per_cell << "\n";
    }
  }
}

void emit_csv(const ScalingSeries& data, std::ostream& out) {
  out << "gates,mean,stderr\n";
  for (std::size_t i = 0; i < data.gate_counts.size(); ++i) {
    out << data.gate_counts[i] << "," << format_double(data.mean_complexity[i], 12) << ","
        << format_double(data.stderr_complexity[i], 12) << "\n";
  }
}

void emit_csv(const HypersphereCloud& data, std::ostream& out) {
  out << "x,y,z,radius,complexity\n";
  for (const auto& p : data.points) {
    out << format_double(p.x, 12) << "," << format_double(p.y, 12) << ","
        << format_double(p.z, 12) << "," << format_double(p.radius, 12) << ","
        << format_double(p.complexity, 12) << "\n";
  }
}

namespace {

using OrderedJson = nlohmann::ordered_json;

void dump_json(const OrderedJson& j, std::ostream& out) { out << j.dump(2) << "\n"; }

OrderedJson parse_stream(std::istream& in, const char* operation) {
  try {
    return OrderedJson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kIoError, operation, e.what());
  }
}

}  // namespace

void emit_json(const HistogramData& data, std::ostream& out) {
  OrderedJson j;
  j["kind"] = "histogram";
  j["family"] = data.family;
  j["n"] = data.n;
  j["gate_count"] = data.gate_count;
  j["gate_set"] = data.gate_set_name;
  j["seed"] = data.seed;
  j["sample_count"] = data.sample_count;
  j["bin_edges"] = data.bin_edges;
  j["counts"] = data.counts;
  dump_json(j, out);
}

void emit_json(const HeatmapGrid& data, std::ostream& out) {
  OrderedJson j;
  j["kind"] = "heatmap";
  j["family"] = data.family;
  j["gate_set"] = data.gate_set_name;
  j["seed"] = data.seed;
  j["samples_per_cell"] = data.samples_per_cell;
  j["qubit_values"] = data.qubit_values;
  j["gate_values"] = data.gate_values;
  j["cells"] = data.cells;  // NaN serializes as null (missing cell)
  dump_json(j, out);
}

void emit_json(const ScalingSeries& data, std::ostream& out) {
  OrderedJson j;
  j["kind"] = "scaling";
  j["family"] = data.family;
  j["n"] = data.n;
  j["gate_set"] = data.gate_set_name;
  j["seed"] = data.seed;
  j["samples_per_point"] = data.samples_per_point;
  j["gate_counts"] = data.gate_counts;
  j["mean_complexity"] = data.mean_complexity;
  j["stderr"] = data.stderr_complexity;
  dump_json(j, out);
}

void emit_json(const HypersphereCloud& data, std::ostream& out) {
  OrderedJson j;
  j["kind"] = "cloud";
  j["n"] = data.n;
  j["projection_seed"] = data.projection_seed;
  j["complexity_source"] = data.complexity_source;
  OrderedJson points = OrderedJson::array();
  for (const auto& p : data.points) {
    points.push_back(OrderedJson::array({p.x, p.y, p.z, p.radius, p.complexity}));
  }
  j["points"] = points;
  dump_json(j, out);
}

HistogramData parse_histogram_json(std::istream& in) {
  const OrderedJson j = parse_stream(in, "parse_histogram");
  HistogramData data;
  data.family = j.at("family").get<std::string>();
  data.n = j.at("n").get<int>();
  data.gate_count = j.at("gate_count").get<int>();
  data.gate_set_name = j.at("gate_set").get<std::string>();
  data.seed = j.at("seed").get<std::uint64_t>();
  data.sample_count = j.at("sample_count").get<std::size_t>();
  data.bin_edges = j.at("bin_edges").get<std::vector<double>>();
  data.counts = j.at("counts").get<std::vector<std::size_t>>();
  return data;
}

HeatmapGrid parse_heatmap_json(std::istream& in) {
  const OrderedJson j = parse_stream(in, "parse_heatmap");
  HeatmapGrid data;
  data.family = j.at("family").get<std::string>();
  data.gate_set_name = j.at("gate_set").get<std::string>();
  data.seed = j.at("seed").get<std::uint64_t>();
  data.samples_per_cell = j.at("samples_per_cell").get<std::size_t>();
  data.qubit_values = j.at("qubit_values").get<std::vector<int>>();
  data.gate_values = j.at("gate_values").get<std::vector<int>>();
  for (const auto& cell : j.at("cells")) {
    data.cells.push_back(cell.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                        : cell.get<double>());
  }
  return data;
}

ScalingSeries parse_scaling_json(std::istream& in) {
  const OrderedJson j = parse_stream(in, "parse_scaling");
  ScalingSeries data;
  data.family = j.at("family").get<std::string>();
  data.n = j.at("n").get<int>();
  data.gate_set_name = j.at("gate_set").get<std::string>();
  data.seed = j.at("seed").get<std::uint64_t>();
  data.samples_per_point = j.at("samples_per_point").get<std::size_t>();
  data.gate_counts = j.at("gate_counts").get<std::vector<int>>();
  data.mean_complexity = j.at("mean_complexity").get<std::vector<double>>();
  data.stderr_complexity = j.at("stderr").get<std::vector<double>>();
  return data;
}

HypersphereCloud parse_cloud_json(std::istream& in) {
  const OrderedJson j = parse_stream(in, "parse_cloud");
  HypersphereCloud data;
  data.n = j.at("n").get<int>();
  data.projection_seed = j.at("projection_seed").get<std::uint64_t>();
  data.complexity_source = j.at("complexity_source").get<std::string>();
  for (const auto& p : j.at("points")) {
    data.points.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>(),
                           p.at(3).get<double>(), p.at(4).get<double>()});
  }
  return data;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIoError, "read_file", "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIoError, "write_file", "cannot open " + path.string());
  }
  out << bytes;
  if (!out) {
    throw Error(ErrorKind::kIoError, "write_file", "short write to " + path.string());
  }
}

}  // namespace charcom
