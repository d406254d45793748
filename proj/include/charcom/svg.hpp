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

#ifndef CHARCOM_SVG_HPP_
#define CHARCOM_SVG_HPP_

#include <ostream>

#include "charcom/experiments.hpp"

namespace charcom {

// Self-contained SVG 1.1, 800x600 canvas with 60px margins, no external
// references, byte-deterministic for fixed input. Heatmap and cloud colors
// interpolate a viridis-like 8-stop gradient on [0, 1].
void emit_svg(const HistogramData& data, std::ostream& out);
void emit_svg(const HeatmapGrid& data, std::ostream& out);
void emit_svg(const ScalingSeries& data, std::ostream& out);
void emit_svg(const HypersphereCloud& data, std::ostream& out);

}  // namespace charcom

#endif  // CHARCOM_SVG_HPP_
