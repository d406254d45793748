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

#ifndef CHARCOM_EXPERIMENTS_HPP_
#define CHARCOM_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charcom/character_table.hpp"
#include "charcom/circuits.hpp"
#include "charcom/complexity.hpp"
#include "charcom/group.hpp"

namespace charcom {

enum class CircuitFamily { kRandom, kQft, kQaoa };

const char* family_name(CircuitFamily family);
std::optional<CircuitFamily> family_from_name(const std::string& name);

enum class ComplexitySource { kUniform01, kCircuit };

const char* complexity_source_name(ComplexitySource source);
std::optional<ComplexitySource> complexity_source_from_name(const std::string& name);

// Shared knobs for the figure pipelines. Every pipeline is a pure function
// of (its arguments, seed); per-sample sub-seeding makes the output
// independent of the thread count.
struct ExperimentParams {
  std::vector<GateSpec> gate_set;  // random family and circuit-source clouds
  std::string gate_set_name = "xz";
  int max_phase_level = 1;  // qft family draws k_cap in [1, max_phase_level]
  int qaoa_max_level = 1;   // qaoa family draws levels in [0, qaoa_max_level]
  int cloud_gate_count = 8;
  std::size_t order_cap = kDefaultOrderCap;
  int threads = 1;
};

// Memoizes (group, character table, per-class complexity) per generator set;
// pipelines close each gate-set group once.
class GroupCache {
 public:
  struct Entry {
    FiniteGroup group;
    CharacterTable table;
    ComplexityProfile profile;
  };

  const Entry& get(const std::vector<CMatrix>& generators, std::size_t order_cap);

 private:
  std::map<std::vector<std::uint64_t>, std::unique_ptr<Entry>> entries_;
};

struct HistogramData {
  std::string family;
  std::vector<double> bin_edges;      // bins + 1, equal width over [0, 1]
  std::vector<std::size_t> counts;    // per bin
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  int n = 1;
  int gate_count = 0;
  std::string gate_set_name;

  bool operator==(const HistogramData&) const = default;
};

struct HeatmapGrid {
  std::vector<int> qubit_values;
  std::vector<int> gate_values;
  // Row-major |qubit_values| x |gate_values|; NaN marks a cell whose group
  // did not close under the cap.
  std::vector<double> cells;
  std::size_t samples_per_cell = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::string gate_set_name;

  double cell(std::size_t qi, std::size_t gi) const {
    return cells[qi * gate_values.size() + gi];
  }
  // Not defaulted: missing cells are NaN and must compare equal to each other.
  bool operator==(const HeatmapGrid& other) const;
};

struct ScalingSeries {
  std::string family;
  std::vector<int> gate_counts;  // ascending
  std::vector<double> mean_complexity;
  std::vector<double> stderr_complexity;
  std::size_t samples_per_point = 0;
  std::uint64_t seed = 0;
  int n = 1;
  std::string gate_set_name;

  bool operator==(const ScalingSeries&) const = default;
};

struct HypersphereCloud {
  struct Point {
    double x = 0.0, y = 0.0, z = 0.0;
    double radius = 0.0;
    double complexity = 0.0;

    bool operator==(const Point&) const = default;
  };

  int n = 1;
  std::vector<Point> points;
  std::uint64_t projection_seed = 0;
  std::string complexity_source;

  bool operator==(const HypersphereCloud&) const = default;
};

// Per sample: draw a circuit from the family (sub_seed(seed, sample)), close
// the gate-set group (cached), locate the compiled element and bin its
// complexity into `bins` equal-width bins over [0, 1].
HistogramData complexity_histogram(CircuitFamily family, int n, int gate_count,
                                   std::size_t sample_count, int bins, std::uint64_t seed,
                                   const ExperimentParams& params, GroupCache& cache);

// Mean complexity per (qubits, gates) cell, sub-seeded hash(seed, n, m,
// sample). Cells whose group exceeds the cap are recorded as missing (NaN)
// rather than aborting the grid.
HeatmapGrid complexity_heatmap(const std::vector<int>& qubit_values,
                               const std::vector<int>& gate_values, CircuitFamily family,
                               std::size_t samples_per_cell, std::uint64_t seed,
                               const ExperimentParams& params, GroupCache& cache);

// Mean +/- standard error at each gate count, sub-seeded hash(seed, m,
// sample) so growing samples_per_point extends the sample set in place.
ScalingSeries scaling_curve(CircuitFamily family, int n, const std::vector<int>& gate_counts,
                            std::size_t samples_per_point, std::uint64_t seed,
                            const ExperimentParams& params, GroupCache& cache);

// Per sample: draw a complexity value (synthetic uniform draw or the
// complexity of a sampled preparing circuit), map it to a radius, place the
// point uniformly on the sphere of that radius.
HypersphereCloud hypersphere_cloud(int n, std::size_t sample_count, std::uint64_t seed,
                                   ComplexitySource source, const ExperimentParams& params,
                                   GroupCache& cache);

// CSV schemas: histogram "bin_lo,bin_hi,count"; heatmap
// "n,gates,mean_complexity,samples"; scaling "gates,mean,stderr"; cloud
// "x,y,z,radius,complexity". Floats carry 12 significant digits.
void emit_csv(const HistogramData& data, std::ostream& out);
void emit_csv(const HeatmapGrid& data, std::ostream& out);
void emit_csv(const ScalingSeries& data, std::ostream& out);
void emit_csv(const HypersphereCloud& data, std::ostream& out);

void emit_json(const HistogramData& data, std::ostream& out);
void emit_json(const HeatmapGrid& data, std::ostream& out);
void emit_json(const ScalingSeries& data, std::ostream& out);
void emit_json(const HypersphereCloud& data, std::ostream& out);

HistogramData parse_histogram_json(std::istream& in);
HeatmapGrid parse_heatmap_json(std::istream& in);
ScalingSeries parse_scaling_json(std::istream& in);
HypersphereCloud parse_cloud_json(std::istream& in);

// Whole-file helpers; throw kIoError on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace charcom

#endif  // CHARCOM_EXPERIMENTS_HPP_
