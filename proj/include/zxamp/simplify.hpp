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

#include <cstdint>
#include <span>
#include <vector>

#include "zxamp/diagram.hpp"

namespace zxamp {

// One applied rewrite; replaying a logged sequence from the initial diagram
// reproduces the final diagram exactly.
struct RewriteStep {
    enum class Rule : uint8_t {
        FuseSpiders,
        RemoveIdentity,
        PiBridge,
        CopyState,
        AbsorbScalar,
        LocalComplement,
        Pivot,
        PivotGadget,
        GadgetFusion,
    };
    Rule rule;
    std::vector<VertexId> verts;
    ExactScalar scalar_delta;
};
const char* rule_name(RewriteStep::Rule rule);
using RewriteLog = std::vector<RewriteStep>;

struct SimplifyOptions {
    // gadget pipeline: pivot across Pauli--odd edges by gadgetising the odd
    // side, then fuse phase gadgets with identical support. Off by default;
    // its effect is measured in the benchmarks rather than assumed.
    bool gadget_fusion = false;
    RewriteLog* log = nullptr;
};

// ---- individual rules (throw std::invalid_argument on bad preconditions) ----

// plain-wire spider fusion (graph-like diagrams only see this transiently)
void fuse_spiders(Diagram& d, VertexId v, VertexId w);

// phase-0 arity-2 spider with matching edge kinds drops out
void remove_identity(Diagram& d, VertexId v);

// phase-pi arity-2 internal spider: neighbours join through a NOT; the
// eliminated side's phase is negated into the kept side
void pi_bridge(Diagram& d, VertexId v);

// arity-1 internal spider with phase 0 or pi copies a basis state through its
// neighbour, removing both
void copy_state(Diagram& d, VertexId v);

// arity-0 spider becomes the scalar 1 + e^{i phase}
void absorb_scalar(Diagram& d, VertexId v);

// local complementation at an internal +-pi/2 spider
void local_complement(Diagram& d, VertexId v);

// pivot along an internal Hadamard edge between two {0, pi} spiders
void pivot(Diagram& d, VertexId u, VertexId v);

// ---- engine ----

// Run the rewrite system to its fixpoint. Seeded variant restricts the initial
// worklist (used after local edits of an already-reduced diagram).
size_t full_simplify(Diagram& d, const SimplifyOptions& opts = {});
size_t full_simplify_seeded(Diagram& d, std::span<const VertexId> seeds,
                            const SimplifyOptions& opts = {});

// ---- reduced-form checks (restricted to internal spiders) ----
bool lemma_no_adjacent_cliffords(const Diagram& d);
bool lemma_no_small_internal_cliffords(const Diagram& d);
bool lemma_no_internal_half_turns(const Diagram& d);
bool is_reduced(const Diagram& d);

// re-apply a logged sequence (tests, --log-rewrites debugging)
void replay(Diagram& d, const RewriteLog& log);

} // namespace zxamp
