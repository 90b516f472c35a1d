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

#include <optional>
#include <vector>

#include "zxamp/diagram.hpp"

namespace zxamp {

// An internal {0, pi} spider whose neighbours all carry odd phases: the unit
// the decomposition strategy consumes. Phase gadgets match as the same shape
// (the leaf counts as a leg).
struct CatCandidate {
    VertexId center = kNoVertex;
    std::vector<VertexId> legs; // sorted by id
    size_t arity() const { return legs.size(); }
};

// One weighted branch of a decomposition.
struct DecompTerm {
    ExactScalar weight;
    Diagram diagram;
    // vertices touched by the rewrite, for seeding the simplifier
    std::vector<VertexId> touched;
};

enum class StrategyKind { CatsThenPartial, BSS, Naive };
const char* strategy_name(StrategyKind s);
std::optional<StrategyKind> strategy_from_name(std::string_view name);

enum class DecompKind : uint8_t {
    Cat3,
    Cat4,
    Cat5,
    Cat6,
    Partial5T,
    TPair,
    TSingle,
    Bss6,
};
const char* decomp_kind_name(DecompKind k);

// What the strategy decided to do next on a reduced diagram.
struct Selection {
    DecompKind kind;
    std::optional<CatCandidate> cat;  // for Cat3..Cat6
    std::vector<VertexId> targets;    // odd spiders for the product decompositions
};

// Priority selection on a reduced diagram: cat4, cat6, cat5, cat3, then the
// partial decomposition on any 5 odd spiders, then pairwise/single fallbacks.
// Empty optional iff the diagram has T-count 0.
std::optional<Selection> find_best_candidate(const Diagram& d, StrategyKind strategy);

// pi-center normalisation: pushes the center's pi through the lowest-id leg
// whose other neighbours are all spiders
void normalize_cat_pi(Diagram& d, CatCandidate& c);

// magic-state unfusion: v's odd phase loses pi/4 into a fresh phase gadget
// (hub + pi/4 leaf); returns the leaf id
VertexId unfuse_t(Diagram& d, VertexId v);

std::vector<DecompTerm> apply_cat_decomp(const Diagram& d, const CatCandidate& c);
std::vector<DecompTerm> apply_t5_partial(const Diagram& d,
                                         const std::vector<VertexId>& targets);
std::vector<DecompTerm> apply_fallback(const Diagram& d, StrategyKind strategy,
                                       const std::vector<VertexId>& targets);

// dispatch on a Selection
std::vector<DecompTerm> apply_selection(const Diagram& d, const Selection& sel,
                                        StrategyKind strategy);

// log2(leaf_terms) / initial_t
double effective_alpha(uint64_t initial_t, uint64_t leaf_terms);

} // namespace zxamp
