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

#include "zxamp/simplify.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace zxamp {

const char* rule_name(RewriteStep::Rule rule) {
    switch (rule) {
        case RewriteStep::Rule::FuseSpiders: return "fuse";
        case RewriteStep::Rule::RemoveIdentity: return "id";
        case RewriteStep::Rule::PiBridge: return "pi-bridge";
        case RewriteStep::Rule::CopyState: return "copy";
        case RewriteStep::Rule::AbsorbScalar: return "absorb";
        case RewriteStep::Rule::LocalComplement: return "lcomp";
        case RewriteStep::Rule::Pivot: return "pivot";
        case RewriteStep::Rule::PivotGadget: return "pivot-gadget";
        case RewriteStep::Rule::GadgetFusion: return "gadget-fuse";
    }
    return "?";
}

namespace {

void log_step(const SimplifyOptions& opts, RewriteStep::Rule rule,
              std::vector<VertexId> verts, const ExactScalar& before,
              const ExactScalar& after) {
    if (!opts.log) return;
    // delta only meaningful when before != 0
    ExactScalar delta = after; // replay recomputes; delta is informational
    (void)before;
    opts.log->push_back({rule, std::move(verts), std::move(delta)});
}

bool all_neighbours_spiders(const Diagram& d, VertexId v) {
    for (const auto& [w, k] : d.neighbors(v))
        if (!d.is_spider(w)) return false;
    return true;
}

} // namespace

void fuse_spiders(Diagram& d, VertexId v, VertexId w) {
    if (!d.is_spider(v) || !d.is_spider(w) || v == w)
        throw std::invalid_argument("fuse_spiders: need two distinct spiders");
    auto k = d.edge_kind(v, w);
    if (!k.has_value() || *k != EdgeKind::Plain)
        throw std::invalid_argument("fuse_spiders: no plain wire between spiders");
    d.fuse_into(v, w);
}

void remove_identity(Diagram& d, VertexId v) {
    if (!d.is_spider(v) || !d.phase(v).is_zero() || d.degree(v) != 2)
        throw std::invalid_argument("remove_identity: need a phase-0 arity-2 spider");
    auto [x, k1] = d.neighbors(v)[0];
    auto [y, k2] = d.neighbors(v)[1];
    if (k1 != k2)
        throw std::invalid_argument("remove_identity: incompatible edge kinds");
    d.remove_vertex(v);
    if (x == y) return; // both edges to one vertex: plain self-loop, drops
    d.add_edge_smart(x, y, EdgeKind::Plain);
}

void pi_bridge(Diagram& d, VertexId v) {
    if (!d.is_spider(v) || d.phase(v) != Phase(4) || d.degree(v) != 2 || !d.internal(v))
        throw std::invalid_argument("pi_bridge: need an internal phase-pi arity-2 spider");
    VertexId w = d.neighbors(v)[0].first;
    VertexId u = d.neighbors(v)[1].first;
    if (w == u) throw std::invalid_argument("pi_bridge: parallel pair");
    // eliminate the side whose other neighbours are all spiders
    if (!all_neighbours_spiders(d, u)) std::swap(w, u);
    if (!all_neighbours_spiders(d, u))
        throw std::invalid_argument("pi_bridge: both sides boundary-adjacent");
    Phase phi = d.phase(u);
    std::vector<Diagram::Nbr> others;
    for (const auto& [n, k] : d.neighbors(u))
        if (n != v) others.push_back({n, k});
    d.remove_vertex(v);
    d.remove_vertex(u);
    d.add_to_phase(w, -phi);
    d.scalar_mul(ExactScalar::from_phase(phi.eighths()));
    for (const auto& [n, k] : others) {
        if (n == w) {
            d.scalar_mul(ExactScalar::sqrt2_power(-1));
        } else {
            d.add_to_phase(n, Phase(4));
            d.add_edge_smart(w, n, EdgeKind::Hadamard);
        }
    }
}

void copy_state(Diagram& d, VertexId v) {
    if (!d.is_spider(v) || d.degree(v) != 1 || !d.phase(v).is_proper_clifford())
        throw std::invalid_argument("copy_state: need an arity-1 {0, pi} spider");
    VertexId w = d.neighbors(v)[0].first;
    if (!d.is_spider(w) || !all_neighbours_spiders(d, w))
        throw std::invalid_argument("copy_state: neighbour is boundary-adjacent");
    bool flip = d.phase(v) == Phase(4);
    Phase phi = d.phase(w);
    std::vector<VertexId> others;
    for (const auto& [n, k] : d.neighbors(w))
        if (n != v) others.push_back(n);
    d.remove_vertex(v);
    d.remove_vertex(w);
    // sqrt2 from the forced branch, 2^{-1/2} per dropped neighbour edge
    d.scalar_mul(ExactScalar::sqrt2_power(1 - static_cast<int64_t>(others.size())));
    if (flip) {
        d.scalar_mul(ExactScalar::from_phase(phi.eighths()));
        for (VertexId n : others) d.add_to_phase(n, Phase(4));
    }
}

void absorb_scalar(Diagram& d, VertexId v) {
    if (!d.is_spider(v) || d.degree(v) != 0)
        throw std::invalid_argument("absorb_scalar: need an arity-0 spider");
    d.scalar_mul(ExactScalar::one_plus_phase(d.phase(v).eighths()));
    d.remove_vertex(v);
}

void local_complement(Diagram& d, VertexId v) {
    if (!d.is_spider(v) || !d.phase(v).is_half_turn() || !d.internal(v))
        throw std::invalid_argument("local_complement: need an internal +-pi/2 spider");
    int eps = d.phase(v) == Phase(2) ? 1 : -1;
    std::vector<VertexId> nbrs;
    for (const auto& [w, k] : d.neighbors(v)) nbrs.push_back(w);
    int64_t k = static_cast<int64_t>(nbrs.size());
    int64_t existing = 0;
    for (size_t i = 0; i < nbrs.size(); i++)
        for (size_t j = i + 1; j < nbrs.size(); j++)
            if (d.has_edge(nbrs[i], nbrs[j])) existing++;
    d.remove_vertex(v);
    for (size_t i = 0; i < nbrs.size(); i++)
        for (size_t j = i + 1; j < nbrs.size(); j++) d.toggle_h_edge(nbrs[i], nbrs[j]);
    for (VertexId n : nbrs) d.add_to_phase(n, Phase(-2 * eps));
    d.scalar_mul(ExactScalar::from_phase(eps));
    d.scalar_mul(ExactScalar::sqrt2_power((k - 1) * (k - 2) / 2 - 2 * existing));
}

void pivot(Diagram& d, VertexId u, VertexId v) {
    if (!d.is_spider(u) || !d.is_spider(v) || !d.internal(u) || !d.internal(v) ||
        !d.phase(u).is_proper_clifford() || !d.phase(v).is_proper_clifford())
        throw std::invalid_argument("pivot: need internal {0, pi} spiders");
    auto ek = d.edge_kind(u, v);
    if (!ek.has_value() || *ek != EdgeKind::Hadamard)
        throw std::invalid_argument("pivot: vertices not H-adjacent");
    int a = d.phase(u) == Phase(4) ? 1 : 0;
    int b = d.phase(v) == Phase(4) ? 1 : 0;
    std::vector<VertexId> nu, nv, common;
    {
        std::vector<VertexId> un, vn;
        for (const auto& [w, k] : d.neighbors(u))
            if (w != v) un.push_back(w);
        for (const auto& [w, k] : d.neighbors(v))
            if (w != u) vn.push_back(w);
        std::sort(un.begin(), un.end());
        std::sort(vn.begin(), vn.end());
        std::set_intersection(un.begin(), un.end(), vn.begin(), vn.end(),
                              std::back_inserter(common));
        std::set_difference(un.begin(), un.end(), common.begin(), common.end(),
                            std::back_inserter(nu));
        std::set_difference(vn.begin(), vn.end(), common.begin(), common.end(),
                            std::back_inserter(nv));
    }
    int64_t alpha = nu.size(), beta = nv.size(), gamma = common.size();
    int64_t existing = 0;
    auto count_between = [&](const std::vector<VertexId>& xs,
                             const std::vector<VertexId>& ys) {
        for (VertexId x : xs)
            for (VertexId y : ys)
                if (d.has_edge(x, y)) existing++;
    };
    count_between(nu, nv);
    count_between(nu, common);
    count_between(nv, common);
    d.remove_vertex(u);
    d.remove_vertex(v);
    auto toggle_between = [&](const std::vector<VertexId>& xs,
                              const std::vector<VertexId>& ys) {
        for (VertexId x : xs)
            for (VertexId y : ys) d.toggle_h_edge(x, y);
    };
    toggle_between(nu, nv);
    toggle_between(nu, common);
    toggle_between(nv, common);
    for (VertexId x : nu) d.add_to_phase(x, Phase(4 * b));
    for (VertexId x : nv) d.add_to_phase(x, Phase(4 * a));
    for (VertexId x : common) d.add_to_phase(x, Phase(4 * (a + b + 1)));
    if (a && b) d.scalar_mul(ExactScalar::from_int(-1));
    d.scalar_mul(ExactScalar::sqrt2_power(1 - alpha - beta - 2 * gamma +
                                          alpha * beta + alpha * gamma + beta * gamma -
                                          2 * existing));
}

namespace {

class Engine {
  public:
    Engine(Diagram& d, const SimplifyOptions& opts) : d_(d), opts_(opts) {}

    size_t run(std::span<const VertexId> seeds) {
        in_work_.assign(d_.vertex_bound(), false);
        if (seeds.empty()) {
            for (VertexId v = 0; v < d_.vertex_bound(); v++)
                if (d_.is_spider(v)) push(v);
        } else {
            for (VertexId v : seeds) push(v);
        }
        size_t applied = drain();
        if (!opts_.gadget_fusion) return applied;
        for (size_t round = 0;; round++) {
            size_t work = pivot_gadget_pass();
            applied += work + drain();
            size_t fused = fuse_gadgets();
            work += fused;
            applied += fused + drain();
            if (work == 0) break;
            if (round > 100000)
                throw std::logic_error("full_simplify: gadget passes did not settle");
        }
        return applied;
    }

  private:
    Diagram& d_;
    const SimplifyOptions& opts_;
    std::vector<VertexId> work_;
    std::vector<bool> in_work_;

    void push(VertexId v) {
        if (v < in_work_.size() && !in_work_[v] && d_.alive(v) && d_.is_spider(v)) {
            in_work_[v] = true;
            work_.push_back(v);
        }
    }
    void touch_with_neighbours(VertexId v) {
        if (!d_.alive(v)) return;
        push(v);
        for (const auto& [w, k] : d_.neighbors(v)) push(w);
    }
    void grow_flags() {
        if (in_work_.size() < d_.vertex_bound()) in_work_.resize(d_.vertex_bound(), false);
    }

    size_t drain() {
        size_t applied = 0;
        while (!work_.empty()) {
            VertexId v = work_.back();
            work_.pop_back();
            if (v < in_work_.size()) in_work_[v] = false;
            if (!d_.alive(v) || !d_.is_spider(v)) continue;
            if (try_rules(v)) {
                applied++;
                grow_flags();
            }
        }
        return applied;
    }

    // affected-set helpers capture ids before mutation
    bool try_rules(VertexId v) {
        size_t before = d_.num_spiders();
        size_t deg = d_.degree(v);
        Phase ph = d_.phase(v);
        ExactScalar s0 = d_.scalar();

        if (deg == 0) {
            absorb_scalar(d_, v);
            log_step(opts_, RewriteStep::Rule::AbsorbScalar, {v}, s0, d_.scalar());
            assert(d_.num_spiders() < before);
            return true;
        }
        if (deg == 1 && ph.is_proper_clifford() && d_.internal(v)) {
            VertexId w = d_.neighbors(v)[0].first;
            if (d_.is_spider(w) && all_neighbours_spiders(d_, w)) {
                std::vector<VertexId> affected;
                for (const auto& [n, k] : d_.neighbors(w)) affected.push_back(n);
                copy_state(d_, v);
                log_step(opts_, RewriteStep::Rule::CopyState, {v, w}, s0, d_.scalar());
                for (VertexId n : affected) touch_with_neighbours(n);
                assert(d_.num_spiders() < before);
                return true;
            }
        }
        if (deg == 2 && ph.is_zero()) {
            auto [x, k1] = d_.neighbors(v)[0];
            auto [y, k2] = d_.neighbors(v)[1];
            if (k1 == k2) {
                remove_identity(d_, v);
                log_step(opts_, RewriteStep::Rule::RemoveIdentity, {v}, s0, d_.scalar());
                touch_with_neighbours(x);
                touch_with_neighbours(y);
                assert(d_.num_spiders() < before);
                return true;
            }
        }
        if (deg == 2 && ph == Phase(4) && d_.internal(v)) {
            VertexId w = d_.neighbors(v)[0].first;
            VertexId u = d_.neighbors(v)[1].first;
            if (w != u && (all_neighbours_spiders(d_, u) || all_neighbours_spiders(d_, w))) {
                std::vector<VertexId> affected{w, u};
                for (const auto& [n, k] : d_.neighbors(u)) affected.push_back(n);
                for (const auto& [n, k] : d_.neighbors(w)) affected.push_back(n);
                pi_bridge(d_, v);
                log_step(opts_, RewriteStep::Rule::PiBridge, {v}, s0, d_.scalar());
                for (VertexId n : affected) touch_with_neighbours(n);
                assert(d_.num_spiders() < before);
                return true;
            }
        }
        if (ph.is_half_turn() && d_.internal(v)) {
            std::vector<VertexId> affected;
            for (const auto& [n, k] : d_.neighbors(v)) affected.push_back(n);
            local_complement(d_, v);
            log_step(opts_, RewriteStep::Rule::LocalComplement, {v}, s0, d_.scalar());
            for (VertexId n : affected) touch_with_neighbours(n);
            assert(d_.num_spiders() < before);
            return true;
        }
        if (ph.is_proper_clifford() && d_.internal(v)) {
            // pivot with the lowest-id qualifying partner
            VertexId best = kNoVertex;
            for (const auto& [w, k] : d_.neighbors(v)) {
                if (d_.is_spider(w) && d_.phase(w).is_proper_clifford() &&
                    d_.internal(w) && (best == kNoVertex || w < best))
                    best = w;
            }
            if (best != kNoVertex) {
                std::vector<VertexId> affected;
                for (const auto& [n, k] : d_.neighbors(v)) affected.push_back(n);
                for (const auto& [n, k] : d_.neighbors(best)) affected.push_back(n);
                pivot(d_, v, best);
                log_step(opts_, RewriteStep::Rule::Pivot, {v, best}, s0, d_.scalar());
                for (VertexId n : affected) touch_with_neighbours(n);
                assert(d_.num_spiders() < before);
                return true;
            }
        }
        return false;
    }

    bool has_unary_neighbour(VertexId v) {
        for (const auto& [w, k] : d_.neighbors(v))
            if (d_.degree(w) == 1) return true;
        return false;
    }

    // extract v's full phase into a fresh gadget (hub + leaf); exact
    void gadgetise(VertexId v) {
        Phase alpha = d_.phase(v);
        d_.set_phase(v, Phase(0));
        VertexId hub = d_.add_z(Phase(0));
        VertexId leaf = d_.add_z(alpha);
        d_.add_edge(v, hub, EdgeKind::Hadamard);
        d_.add_edge(hub, leaf, EdgeKind::Hadamard);
        grow_flags();
        push(hub);
        push(leaf);
    }

    // pivot across a Pauli--odd edge by first gadgetising the odd side.
    // Gadget hubs (spiders with an arity-1 neighbour) never fire as the Pauli
    // side, so gadgets themselves are stable under this pass.
    size_t pivot_gadget_pass() {
        size_t applied = 0;
        for (VertexId u = 0; u < d_.vertex_bound(); u++) {
            if (!d_.alive(u) || !d_.is_spider(u)) continue;
            if (!d_.phase(u).is_proper_clifford() || !d_.internal(u)) continue;
            if (!all_neighbours_spiders(d_, u) || has_unary_neighbour(u)) continue;
            VertexId v = kNoVertex;
            for (const auto& [w, k] : d_.neighbors(u)) {
                if (d_.is_spider(w) && d_.phase(w).is_t_like() && d_.internal(w) &&
                    all_neighbours_spiders(d_, w) && !has_unary_neighbour(w)) {
                    v = w;
                    break;
                }
            }
            if (v == kNoVertex) continue;
            ExactScalar s0 = d_.scalar();
            std::vector<VertexId> affected;
            for (const auto& [n, k] : d_.neighbors(u)) affected.push_back(n);
            for (const auto& [n, k] : d_.neighbors(v)) affected.push_back(n);
            gadgetise(v);
            pivot(d_, u, v);
            log_step(opts_, RewriteStep::Rule::PivotGadget, {u, v}, s0, d_.scalar());
            grow_flags();
            for (VertexId n : affected) touch_with_neighbours(n);
            applied++;
        }
        return applied;
    }

    // fuse phase gadgets with identical support; returns fusions performed
    size_t fuse_gadgets() {
        std::map<std::vector<VertexId>, std::pair<VertexId, VertexId>> seen;
        size_t fused = 0;
        for (VertexId leaf = 0; leaf < d_.vertex_bound(); leaf++) {
            if (!d_.is_spider(leaf) || d_.degree(leaf) != 1) continue;
            VertexId hub = d_.neighbors(leaf)[0].first;
            if (!d_.is_spider(hub) || !d_.phase(hub).is_proper_clifford()) continue;
            if (!d_.internal(hub) || d_.degree(hub) < 2) continue;
            // exactly one leaf per hub
            std::vector<VertexId> support;
            int leaves = 0;
            for (const auto& [n, k] : d_.neighbors(hub)) {
                if (d_.degree(n) == 1)
                    leaves++;
                else
                    support.push_back(n);
            }
            if (leaves != 1 || support.empty()) continue;
            // pi hubs are left alone so that replaying the log stays exact
            if (d_.phase(hub) != Phase(0)) continue;
            std::sort(support.begin(), support.end());
            auto it = seen.find(support);
            if (it == seen.end()) {
                seen.emplace(std::move(support), std::make_pair(hub, leaf));
                continue;
            }
            auto [hub0, leaf0] = it->second;
            ExactScalar s0 = d_.scalar();
            d_.add_to_phase(leaf0, d_.phase(leaf));
            d_.remove_vertex(leaf);
            d_.remove_vertex(hub);
            d_.scalar_mul(
                ExactScalar::sqrt2_power(1 - static_cast<int64_t>(support.size())));
            log_step(opts_, RewriteStep::Rule::GadgetFusion, {hub0, leaf0, hub, leaf},
                     s0, d_.scalar());
            touch_with_neighbours(hub0);
            push(leaf0);
            fused++;
        }
        return fused;
    }
};

} // namespace

size_t full_simplify(Diagram& d, const SimplifyOptions& opts) {
    size_t n = Engine(d, opts).run({});
    assert(is_reduced(d));
    return n;
}

size_t full_simplify_seeded(Diagram& d, std::span<const VertexId> seeds,
                            const SimplifyOptions& opts) {
    return Engine(d, opts).run(seeds);
}

bool lemma_no_adjacent_cliffords(const Diagram& d) {
    for (VertexId v = 0; v < d.vertex_bound(); v++) {
        if (!d.is_spider(v) || !d.phase(v).is_clifford() || !d.internal(v)) continue;
        for (const auto& [w, k] : d.neighbors(v))
            if (d.is_spider(w) && d.phase(w).is_clifford() && d.internal(w)) return false;
    }
    return true;
}

bool lemma_no_small_internal_cliffords(const Diagram& d) {
    for (VertexId v = 0; v < d.vertex_bound(); v++)
        if (d.is_spider(v) && d.internal(v) && d.phase(v).is_clifford() &&
            d.degree(v) <= 2)
            return false;
    return true;
}

bool lemma_no_internal_half_turns(const Diagram& d) {
    for (VertexId v = 0; v < d.vertex_bound(); v++)
        if (d.is_spider(v) && d.internal(v) && d.phase(v).is_half_turn()) return false;
    return true;
}

bool is_reduced(const Diagram& d) {
    return lemma_no_adjacent_cliffords(d) && lemma_no_small_internal_cliffords(d) &&
           lemma_no_internal_half_turns(d);
}

void replay(Diagram& d, const RewriteLog& log) {
    for (const auto& step : log) {
        switch (step.rule) {
            case RewriteStep::Rule::FuseSpiders:
                fuse_spiders(d, step.verts[0], step.verts[1]);
                break;
            case RewriteStep::Rule::RemoveIdentity:
                remove_identity(d, step.verts[0]);
                break;
            case RewriteStep::Rule::PiBridge:
                pi_bridge(d, step.verts[0]);
                break;
            case RewriteStep::Rule::CopyState:
                copy_state(d, step.verts[0]);
                break;
            case RewriteStep::Rule::AbsorbScalar:
                absorb_scalar(d, step.verts[0]);
                break;
            case RewriteStep::Rule::LocalComplement:
                local_complement(d, step.verts[0]);
                break;
            case RewriteStep::Rule::Pivot:
                pivot(d, step.verts[0], step.verts[1]);
                break;
            case RewriteStep::Rule::PivotGadget: {
                VertexId u = step.verts[0], v = step.verts[1];
                Phase alpha = d.phase(v);
                d.set_phase(v, Phase(0));
                VertexId hub = d.add_z(Phase(0));
                VertexId leaf = d.add_z(alpha);
                d.add_edge(v, hub, EdgeKind::Hadamard);
                d.add_edge(hub, leaf, EdgeKind::Hadamard);
                pivot(d, u, v);
                break;
            }
            case RewriteStep::Rule::GadgetFusion: {
                // re-fuse: add the second leaf's phase onto the first
                VertexId leaf0 = step.verts[1], hub = step.verts[2], leaf = step.verts[3];
                size_t support = d.degree(hub) - 1;
                d.add_to_phase(leaf0, d.phase(leaf));
                d.remove_vertex(leaf);
                d.remove_vertex(hub);
                d.scalar_mul(
                    ExactScalar::sqrt2_power(1 - static_cast<int64_t>(support)));
                break;
            }
        }
    }
}

} // namespace zxamp
