// Copyright 2026 The zxamp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "zxamp/decomp.hpp"
#include "zxamp/diagram.hpp"

namespace zxamp {

struct RunStats {
    uint64_t initial_t = 0; // T-count of the graph-like diagram before reduction
    uint64_t leaf_terms = 0;
    std::array<uint64_t, 8> decompositions_by_kind{}; // indexed by DecompKind
    uint64_t max_depth = 0;
    double wall_seconds = 0;
    double effective_alpha = 0; // log2(leaf_terms) / initial_t, 0 when t = 0
};

struct SimResult {
    ExactScalar amplitude;
    RunStats stats;
};

struct SimOptions {
    StrategyKind strategy = StrategyKind::CatsThenPartial;
    unsigned workers = 1;
    bool gadget_fusion = false;
    std::ostream* trace = nullptr; // one line per applied decomposition
};

// Exact amplitude of a closed diagram by recursive decomposition: simplify,
// decompose the best candidate, recurse depth-first over the weighted terms,
// sum the fully reduced leaf scalars. Deterministic for any worker count.
SimResult amplitude(Diagram d, const SimOptions& opts = {});

// Closed diagram with T-count 0 reduces to its exact scalar.
ExactScalar reduce_clifford_scalar(Diagram d);

// Translate circuit + product state/effect specs, normalise and simulate.
struct Circuit; // defined in zxamp/circuit.hpp
SimResult run_simulation(const Circuit& c, std::string_view in_spec,
                         std::string_view out_spec, const SimOptions& opts = {});

} // namespace zxamp
