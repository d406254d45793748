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

#include <cmath>
#include <sstream>

#include <doctest.h>

#include "charcom/builtin_groups.hpp"
#include "charcom/svg.hpp"
#include "test_support.hpp"

using namespace charcom;

namespace {

ExperimentParams params_for(const std::string& gate_set, int threads = 1) {
  ExperimentParams params;
  params.gate_set = builtin_gate_set(gate_set);
  params.gate_set_name = gate_set;
  params.threads = threads;
  return params;
}

template <typename Data>
std::string csv_bytes(const Data& data) {
  std::ostringstream out;
  emit_csv(data, out);
  return out.str();
}

template <typename Data>
std::string json_bytes(const Data& data) {
  std::ostringstream out;
  emit_json(data, out);
  return out.str();
}

template <typename Data>
std::string svg_bytes(const Data& data) {
  std::ostringstream out;
  emit_svg(data, out);
  return out.str();
}

}  // namespace

TEST_CASE("sub_seed scheme is pinned") {
  // These constants are part of the reproducibility contract; golden files
  // depend on them.
  CHECK(sub_seed(42, 0) == 13679457532755275413ULL);
  CHECK(sub_seed(42, 1, 2) == 9347878797982206644ULL);
  CHECK(sub_seed(7, 3, 1, 0) == 13165932047966906413ULL);
}

TEST_CASE("histogram: invariants and determinism") {
  GroupCache cache;
  const auto params = params_for("xz");
  const HistogramData h =
      complexity_histogram(CircuitFamily::kRandom, 1, 5, 100, 30, 42, params, cache);

  std::size_t total = 0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) total += h.counts[b];
  CHECK(total == 100);
  REQUIRE(h.bin_edges.size() == 31);
  for (std::size_t b = 1; b < h.bin_edges.size(); ++b) {
    CHECK(h.bin_edges[b] > h.bin_edges[b - 1]);
  }

  // Single-qubit circuits over {X, Z} live in an 8-element group whose only
  // class complexities are 0.5 and 0.75: bins 15 and 22 of 30.
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.counts[b] != 0) CHECK((b == 15 || b == 22));
  }

  GroupCache cache2;
  const HistogramData again =
      complexity_histogram(CircuitFamily::kRandom, 1, 5, 100, 30, 42, params, cache2);
  CHECK(h == again);
  CHECK(csv_bytes(h) == csv_bytes(again));
  CHECK(json_bytes(h) == json_bytes(again));
  CHECK(svg_bytes(h) == svg_bytes(again));

  const HistogramData empty =
      complexity_histogram(CircuitFamily::kRandom, 1, 5, 0, 30, 42, params, cache);
  for (std::size_t count : empty.counts) CHECK(count == 0);
}

TEST_CASE("histogram: qft and qaoa families") {
  GroupCache cache;
  ExperimentParams params = params_for("xz");
  params.max_phase_level = 1;

  const HistogramData qft =
      complexity_histogram(CircuitFamily::kQft, 2, 0, 40, 20, 7, params, cache);
  std::size_t nonzero_bins = 0, total = 0;
  for (std::size_t count : qft.counts) {
    if (count) ++nonzero_bins;
    total += count;
  }
  CHECK(total == 40);
  CHECK(nonzero_bins == 1);  // k_cap is always 1, so every sample is the same circuit

  params.qaoa_max_level = 1;
  const HistogramData qaoa =
      complexity_histogram(CircuitFamily::kQaoa, 2, 6, 30, 20, 7, params, cache);
  total = 0;
  for (std::size_t count : qaoa.counts) total += count;
  CHECK(total == 30);
}

TEST_CASE("histogram: byte-identical across thread counts") {
  GroupCache cache1, cache4;
  const HistogramData one = complexity_histogram(CircuitFamily::kRandom, 2, 6, 60, 30, 9,
                                                 params_for("xzcnot", 1), cache1);
  const HistogramData four = complexity_histogram(CircuitFamily::kRandom, 2, 6, 60, 30, 9,
                                                  params_for("xzcnot", 4), cache4);
  CHECK(one == four);
  CHECK(csv_bytes(one) == csv_bytes(four));
  CHECK(json_bytes(one) == json_bytes(four));
  CHECK(svg_bytes(one) == svg_bytes(four));
}

TEST_CASE("heatmap: zero-gate cells and reproducibility") {
  GroupCache cache;
  const auto params = params_for("xzcnot");
  const HeatmapGrid grid = complexity_heatmap({1, 2}, {0, 2, 4}, CircuitFamily::kRandom, 5, 7,
                                              params, cache);

  for (std::size_t qi = 0; qi < 2; ++qi) {
    for (std::size_t gi = 0; gi < 3; ++gi) {
      const double value = grid.cell(qi, gi);
      REQUIRE_FALSE(std::isnan(value));
      CHECK(value >= 0.0);
      CHECK(value <= 1.0);
    }
    // Empty circuits compile to the identity of the cell's gate-set group.
    const FiniteGroup host =
        FiniteGroup::close(embedded_gate_set(params.gate_set, grid.qubit_values[qi]));
    const double expected = identity_complexity(host, CharacterTable::compute(host));
    CHECK(std::fabs(grid.cell(qi, 0) - expected) < 1e-12);
  }

  GroupCache cache2;
  const HeatmapGrid again = complexity_heatmap({1, 2}, {0, 2, 4}, CircuitFamily::kRandom, 5, 7,
                                               params, cache2);
  CHECK(grid == again);
  CHECK(csv_bytes(grid) == csv_bytes(again));
}

TEST_CASE("heatmap: unclosable cells are recorded as missing") {
  GroupCache cache;
  // H, S, CNOT at two qubits generates the full two-qubit Clifford group,
  // far beyond the cap; at one qubit it is the 192-element group.
  const HeatmapGrid grid = complexity_heatmap({1, 2}, {3}, CircuitFamily::kRandom, 4, 11,
                                              params_for("hscnot"), cache);
  CHECK_FALSE(std::isnan(grid.cell(0, 0)));
  CHECK(std::isnan(grid.cell(1, 0)));
  CHECK(csv_bytes(grid).find("nan") != std::string::npos);

  // Round trip keeps the missing cell missing.
  std::stringstream stream(json_bytes(grid));
  CHECK(parse_heatmap_json(stream) == grid);
}

TEST_CASE("scaling: gate count zero pins the identity complexity") {
  GroupCache cache;
  const auto params = params_for("xzcnot");
  const ScalingSeries series =
      scaling_curve(CircuitFamily::kRandom, 2, {0, 1, 2, 4}, 8, 3, params, cache);
  REQUIRE(series.gate_counts == std::vector<int>{0, 1, 2, 4});
  const FiniteGroup host = FiniteGroup::close(embedded_gate_set(params.gate_set, 2));
  const CharacterTable table = CharacterTable::compute(host);
  CHECK(std::fabs(series.mean_complexity[0] - identity_complexity(host, table)) < 1e-12);
  CHECK(series.stderr_complexity[0] == 0.0);
  for (double mean : series.mean_complexity) {
    CHECK(mean >= 0.0);
    CHECK(mean <= 1.0);
  }

  // With one sample per point, each mean is a single class complexity.
  GroupCache cache2;
  const ScalingSeries single =
      scaling_curve(CircuitFamily::kRandom, 2, {1, 3, 9}, 1, 3, params, cache2);
  const ComplexityProfile profile = complexity_profile(host, table);
  for (double mean : single.mean_complexity) {
    bool in_profile = false;
    for (double value : profile.per_class) {
      if (std::fabs(mean - value) < 1e-12) in_profile = true;
    }
    CHECK(in_profile);
  }
}

TEST_CASE("cloud: radius equation and bounds") {
  GroupCache cache;
  const HypersphereCloud cloud = hypersphere_cloud(10, 200, 42, ComplexitySource::kUniform01,
                                                   params_for("xz"), cache);
  REQUIRE(cloud.points.size() == 200);
  const double bound = std::sqrt(1023.0 / 1024.0);
  for (const auto& p : cloud.points) {
    CHECK(std::fabs(p.x * p.x + p.y * p.y + p.z * p.z - p.radius * p.radius) < 1e-9);
    CHECK(p.radius <= bound + 1e-12);
    CHECK(p.complexity >= 0.0);
  }

  GroupCache cache2;
  const HypersphereCloud again = hypersphere_cloud(10, 200, 42, ComplexitySource::kUniform01,
                                                   params_for("xz"), cache2);
  CHECK(cloud == again);

  // Circuit-sourced complexities take values from the host group's profile.
  GroupCache cache3;
  ExperimentParams circuit_params = params_for("xz");
  circuit_params.cloud_gate_count = 4;
  const HypersphereCloud sourced =
      hypersphere_cloud(1, 50, 5, ComplexitySource::kCircuit, circuit_params, cache3);
  for (const auto& p : sourced.points) {
    CHECK((std::fabs(p.complexity - 0.5) < 1e-12 || std::fabs(p.complexity - 0.75) < 1e-12));
  }
}

TEST_CASE("JSON round trips") {
  GroupCache cache;
  const auto params = params_for("xz");

  const HistogramData hist =
      complexity_histogram(CircuitFamily::kRandom, 1, 4, 50, 10, 1, params, cache);
  std::stringstream hist_stream(json_bytes(hist));
  CHECK(parse_histogram_json(hist_stream) == hist);

  const HeatmapGrid grid =
      complexity_heatmap({1}, {0, 2}, CircuitFamily::kRandom, 3, 2, params, cache);
  std::stringstream grid_stream(json_bytes(grid));
  CHECK(parse_heatmap_json(grid_stream) == grid);

  const ScalingSeries series =
      scaling_curve(CircuitFamily::kRandom, 1, {0, 2}, 4, 3, params, cache);
  std::stringstream series_stream(json_bytes(series));
  CHECK(parse_scaling_json(series_stream) == series);

  const HypersphereCloud cloud =
      hypersphere_cloud(3, 20, 4, ComplexitySource::kUniform01, params, cache);
  std::stringstream cloud_stream(json_bytes(cloud));
  CHECK(parse_cloud_json(cloud_stream) == cloud);
}

TEST_CASE("SVG output is well-formed") {
  GroupCache cache;
  const auto params = params_for("xz");

  const HistogramData empty =
      complexity_histogram(CircuitFamily::kRandom, 1, 4, 0, 10, 1, params, cache);
  const std::string svg = svg_bytes(empty);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
        std::string::npos);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(svg.find("nan") == std::string::npos);

  const HeatmapGrid grid =
      complexity_heatmap({1}, {0, 2}, CircuitFamily::kRandom, 2, 2, params, cache);
  CHECK(svg_bytes(grid).find("</svg>") != std::string::npos);
  const ScalingSeries series =
      scaling_curve(CircuitFamily::kRandom, 1, {0, 2}, 2, 3, params, cache);
  CHECK(svg_bytes(series).find("polyline") != std::string::npos);
  const HypersphereCloud cloud =
      hypersphere_cloud(2, 10, 4, ComplexitySource::kUniform01, params, cache);
  CHECK(svg_bytes(cloud).find("circle") != std::string::npos);
}

TEST_CASE("golden files: seed-42 pauli1 histogram bytes") {
  const std::string golden_dir = charcom::testing::env_or_fail("CHARCOM_GOLDEN_DIR");
  GroupCache cache;
  const HistogramData hist = complexity_histogram(CircuitFamily::kRandom, 1, 8, 200, 30, 42,
                                                  params_for("paulis"), cache);
  CHECK(csv_bytes(hist) == read_file(golden_dir + "/histogram_paulis_n1_seed42.csv"));
  CHECK(json_bytes(hist) == read_file(golden_dir + "/histogram_paulis_n1_seed42.json"));
  CHECK(svg_bytes(hist) == read_file(golden_dir + "/histogram_paulis_n1_seed42.svg"));
}
