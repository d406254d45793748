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

#include "charcom/circuits.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "charcom/rng.hpp"

namespace charcom {

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kCnot:
    case GateKind::kCz:
    case GateKind::kSwap:
    case GateKind::kCphase:
      return 2;
    default:
      return 1;
  }
}

bool gate_has_phase_level(GateKind kind) {
  return kind == GateKind::kT || kind == GateKind::kCphase;
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kI: return "I";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kT: return "T";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCz: return "CZ";
    case GateKind::kSwap: return "SWAP";
    case GateKind::kCphase: return "CPHASE";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(const std::string& name) {
  static const std::vector<GateKind> kAll = {
      GateKind::kI,    GateKind::kX,  GateKind::kY,    GateKind::kZ,
      GateKind::kH,    GateKind::kS,  GateKind::kT,    GateKind::kCnot,
      GateKind::kCz,   GateKind::kSwap, GateKind::kCphase,
  };
  for (GateKind kind : kAll) {
    if (name == gate_name(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

Complex dyadic_phase(int k) {
  // 2 pi / 2^k; k = 0 means a full turn, numerically the identity phase.
  return std::polar(1.0, std::ldexp(2.0 * M_PI, -k));
}

}  // namespace

CMatrix gate_matrix(GateKind kind, int k) {
  const Complex i(0.0, 1.0);
  switch (kind) {
    case GateKind::kI:
      return CMatrix::Identity(2, 2);
    case GateKind::kX: {
      CMatrix m = CMatrix::Zero(2, 2);
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m;
    }
    case GateKind::kY: {
      CMatrix m = CMatrix::Zero(2, 2);
      m(0, 1) = -i;
      m(1, 0) = i;
      return m;
    }
    case GateKind::kZ: {
      CMatrix m = CMatrix::Identity(2, 2);
      m(1, 1) = -1.0;
      return m;
    }
    case GateKind::kH: {
      CMatrix m(2, 2);
      const double s = 1.0 / std::sqrt(2.0);
      m << s, s, s, -s;
      return m;
    }
    case GateKind::kS: {
      CMatrix m = CMatrix::Identity(2, 2);
      m(1, 1) = i;
      return m;
    }
    case GateKind::kT: {
      CMatrix m = CMatrix::Identity(2, 2);
      m(1, 1) = dyadic_phase(k);
      return m;
    }
    case GateKind::kCnot: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return m;
    }
    case GateKind::kCz: {
      CMatrix m = CMatrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::kSwap: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      m(3, 3) = 1.0;
      return m;
    }
    case GateKind::kCphase: {
      CMatrix m = CMatrix::Identity(4, 4);
      m(3, 3) = dyadic_phase(k);
      return m;
    }
  }
  throw Error(ErrorKind::kDomainError, "gate_matrix", "unknown gate kind");
}

CMatrix embed_gate(const Gate& gate, int n) {
  const int arity = gate_arity(gate.kind);
  if (static_cast<int>(gate.targets.size()) != arity) {
    throw Error(ErrorKind::kDomainError, "embed_gate",
                std::string(gate_name(gate.kind)) + " takes " + std::to_string(arity) +
                    " target(s)");
  }
  for (std::size_t a = 0; a < gate.targets.size(); ++a) {
    if (gate.targets[a] < 0 || gate.targets[a] >= n) {
      throw Error(ErrorKind::kDomainError, "embed_gate",
                  "target " + std::to_string(gate.targets[a]) + " outside width " +
                      std::to_string(n));
    }
    for (std::size_t b = a + 1; b < gate.targets.size(); ++b) {
      if (gate.targets[a] == gate.targets[b]) {
        throw Error(ErrorKind::kDomainError, "embed_gate", "duplicate gate target");
      }
    }
  }

  const CMatrix base = gate_matrix(gate.kind, gate.k);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t gate_dim = std::size_t{1} << arity;

  // Qubit q lives at bit (n - 1 - q); targets[0] is the high bit of the
  // gate-local index.
  std::vector<std::size_t> bit(arity);
  std::size_t target_mask = 0;
  for (int a = 0; a < arity; ++a) {
    bit[a] = std::size_t{1} << (n - 1 - gate.targets[a]);
    target_mask |= bit[a];
  }
  auto spread = [&](std::size_t local) {
    std::size_t result = 0;
    for (int a = 0; a < arity; ++a) {
      if (local & (std::size_t{1} << (arity - 1 - a))) result |= bit[a];
    }
    return result;
  };

  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t rest = 0; rest < dim; ++rest) {
    if (rest & target_mask) continue;
    for (std::size_t gi = 0; gi < gate_dim; ++gi) {
      const std::size_t row = rest | spread(gi);
      for (std::size_t gj = 0; gj < gate_dim; ++gj) {
        out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(rest | spread(gj))) =
            base(static_cast<Eigen::Index>(gi), static_cast<Eigen::Index>(gj));
      }
    }
  }
  return out;
}

CMatrix compile_circuit(const Circuit& circuit) {
  if (circuit.n < 1 || circuit.n > kMaxQubits) {
    throw Error(ErrorKind::kWidthExceeded, "compile_circuit",
                "width " + std::to_string(circuit.n) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.n);
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const Gate& gate : circuit.gates) {
    u = embed_gate(gate, circuit.n) * u;
  }
  return u;
}

Circuit qft_circuit(int n, int max_phase_level) {
  Circuit circuit;
  circuit.n = n;
  circuit.family_tag = "qft";
  if (n < 1) {
    throw Error(ErrorKind::kDomainError, "qft_circuit", "width must be >= 1");
  }
  for (int q = 0; q < n; ++q) {
    circuit.gates.push_back({GateKind::kH, {q}, 0});
    for (int j = q + 1; j < n; ++j) {
      const int k = j - q + 1;
      if (k > max_phase_level) continue;  // clamped ladder
      circuit.gates.push_back({GateKind::kCphase, {j, q}, k});
    }
  }
  for (int q = 0; q < n / 2; ++q) {
    circuit.gates.push_back({GateKind::kSwap, {q, n - 1 - q}, 0});
  }
  return circuit;
}

Circuit qaoa_circuit(int n, int layers, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<int>& gamma_levels,
                     const std::vector<int>& beta_levels) {
  if (n < 1) {
    throw Error(ErrorKind::kDomainError, "qaoa_circuit", "width must be >= 1");
  }
  if (static_cast<int>(gamma_levels.size()) != layers ||
      static_cast<int>(beta_levels.size()) != layers) {
    throw Error(ErrorKind::kDomainError, "qaoa_circuit",
                "need one gamma and one beta level per layer");
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw Error(ErrorKind::kInvalidEdge, "qaoa_circuit",
                  "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") invalid for " +
                      std::to_string(n) + " qubits");
    }
  }

  Circuit circuit;
  circuit.n = n;
  circuit.family_tag = "qaoa";
  for (int layer = 0; layer < layers; ++layer) {
    for (const auto& [a, b] : edges) {
      circuit.gates.push_back({GateKind::kCnot, {a, b}, 0});
      circuit.gates.push_back({GateKind::kT, {b}, gamma_levels[layer]});
      circuit.gates.push_back({GateKind::kCnot, {a, b}, 0});
    }
    for (int q = 0; q < n; ++q) {
      circuit.gates.push_back({GateKind::kH, {q}, 0});
      circuit.gates.push_back({GateKind::kT, {q}, beta_levels[layer]});
      circuit.gates.push_back({GateKind::kH, {q}, 0});
    }
  }
  return circuit;
}

namespace {

// All (gate, target tuple) combinations at width n, in gate-set order then
// lexicographic tuple order. This enumeration is part of the reproducibility
// contract of random_circuit.
std::vector<Gate> placement_table(const std::vector<GateSpec>& gate_set, int n) {
  std::vector<Gate> placements;
  for (const GateSpec& spec : gate_set) {
    if (gate_arity(spec.kind) == 1) {
      for (int q = 0; q < n; ++q) placements.push_back({spec.kind, {q}, spec.k});
    } else {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a != b) placements.push_back({spec.kind, {a, b}, spec.k});
        }
      }
    }
  }
  return placements;
}

}  // namespace

Circuit random_circuit(int n, int gate_count, std::uint64_t seed,
                       const std::vector<GateSpec>& gate_set) {
  if (gate_set.empty()) {
    throw Error(ErrorKind::kDomainError, "random_circuit", "empty gate set");
  }
  const std::vector<Gate> placements = placement_table(gate_set, n);
  if (placements.empty()) {
    throw Error(ErrorKind::kDomainError, "random_circuit",
                "no valid gate placement at width " + std::to_string(n));
  }
  Circuit circuit;
  circuit.n = n;
  circuit.family_tag = "random";
  circuit.seed = seed;
  circuit.gates.reserve(static_cast<std::size_t>(gate_count));
  for (int j = 0; j < gate_count; ++j) {
    SplitMix64 rng(sub_seed(seed, static_cast<std::uint64_t>(j)));
    circuit.gates.push_back(placements[rng.next_below(placements.size())]);
  }
  return circuit;
}

std::vector<CMatrix> embedded_gate_set(const std::vector<GateSpec>& gate_set, int n) {
  std::vector<CMatrix> result;
  for (const Gate& gate : placement_table(gate_set, n)) {
    CMatrix embedded = embed_gate(gate, n);
    const bool duplicate = std::any_of(result.begin(), result.end(), [&](const CMatrix& m) {
      return frobenius_distance(m, embedded) < kElementTol;
    });
    if (!duplicate) result.push_back(std::move(embedded));
  }
  return result;
}

std::vector<CMatrix> distinct_embedded_gates(const Circuit& circuit) {
  std::vector<CMatrix> generators;
  for (const Gate& gate : circuit.gates) {
    CMatrix embedded = embed_gate(gate, circuit.n);
    const bool duplicate =
        std::any_of(generators.begin(), generators.end(), [&](const CMatrix& m) {
          return frobenius_distance(m, embedded) < kElementTol;
        });
    if (!duplicate) generators.push_back(std::move(embedded));
  }
  if (generators.empty()) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.n);
    generators.push_back(CMatrix::Identity(dim, dim));
  }
  return generators;
}

CircuitGroup circuit_group(const Circuit& circuit, std::size_t order_cap) {
  CloseOptions opts;
  opts.order_cap = order_cap;
  FiniteGroup group = FiniteGroup::close(distinct_embedded_gates(circuit), opts);
  const ElementId element = group.require_element(compile_circuit(circuit), "circuit_group");
  return {std::move(group), element};
}

void write_circuit_jsonl(const Circuit& circuit, std::ostream& out) {
  out << "{\"n\":" << circuit.n << ",\"family_tag\":\"" << circuit.family_tag << "\"";
  if (circuit.seed) out << ",\"seed\":" << *circuit.seed;
  out << "}\n";
  for (const Gate& gate : circuit.gates) {
    out << "{\"name\":\"" << gate_name(gate.kind) << "\",\"targets\":[";
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
      if (i) out << ",";
      out << gate.targets[i];
    }
    out << "]";
    if (gate_has_phase_level(gate.kind)) out << ",\"k\":" << gate.k;
    out << "}\n";
  }
}

Circuit read_circuit_jsonl(std::istream& in) {
  using nlohmann::json;
  std::string line;
  Circuit circuit;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json parsed;
    try {
      parsed = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kIoError, "read_circuit",
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!have_header) {
      if (!parsed.contains("n") || !parsed["n"].is_number_integer()) {
        throw Error(ErrorKind::kIoError, "read_circuit", "header line must carry \"n\"");
      }
      circuit.n = parsed["n"].get<int>();
      circuit.family_tag = parsed.value("family_tag", std::string("custom"));
      if (parsed.contains("seed")) circuit.seed = parsed["seed"].get<std::uint64_t>();
      have_header = true;
      continue;
    }
    if (!parsed.contains("name") || !parsed.contains("targets")) {
      throw Error(ErrorKind::kIoError, "read_circuit",
                  "line " + std::to_string(line_no) + ": gate needs name and targets");
    }
    const auto kind = gate_kind_from_name(parsed["name"].get<std::string>());
    if (!kind) {
      throw Error(ErrorKind::kIoError, "read_circuit",
                  "line " + std::to_string(line_no) + ": unknown gate \"" +
                      parsed["name"].get<std::string>() + "\"");
    }
    Gate gate;
    gate.kind = *kind;
    gate.targets = parsed["targets"].get<std::vector<int>>();
    gate.k = parsed.value("k", 0);
    circuit.gates.push_back(std::move(gate));
  }
  if (!have_header) {
    throw Error(ErrorKind::kIoError, "read_circuit", "missing header line");
  }
  return circuit;
}

}  // namespace charcom
