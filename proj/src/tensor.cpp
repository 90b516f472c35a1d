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

#include "zxamp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zxamp {

namespace {

constexpr size_t kMaxTableBits = 22;
constexpr double INV_SQRT2 = 0.70710678118654752440;

struct Factor {
    std::vector<uint32_t> vars; // sorted variable ids
    std::vector<std::complex<double>> data;

    static Factor unary(uint32_t v, std::complex<double> f0, std::complex<double> f1) {
        return {{v}, {f0, f1}};
    }
};

std::complex<double> phase_value(Phase p, int bit) {
    if (!bit) return {1.0, 0.0};
    static const double C = INV_SQRT2;
    switch (p.eighths()) {
        case 0: return {1, 0};
        case 1: return {C, C};
        case 2: return {0, 1};
        case 3: return {-C, C};
        case 4: return {-1, 0};
        case 5: return {-C, -C};
        case 6: return {0, -1};
        default: return {C, -C};
    }
}

Factor binary_factor(uint32_t u, uint32_t v, bool effective_h) {
    Factor f;
    f.vars = {std::min(u, v), std::max(u, v)};
    f.data.resize(4);
    for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++) {
            std::complex<double> val;
            if (effective_h)
                val = (a && b) ? -INV_SQRT2 : INV_SQRT2;
            else
                val = a == b ? 1.0 : 0.0;
            f.data[a | (b << 1)] = val; // vars[0] = LSB
        }
    if (f.vars[0] != u) {
        // symmetric in both kinds; no reorder needed
    }
    return f;
}

// multiply factors sharing variables and sum out `elim` (or keep all when
// elim == UINT32_MAX)
Factor contract(const std::vector<Factor>& fs, uint32_t elim) {
    std::vector<uint32_t> vars;
    for (const auto& f : fs)
        for (uint32_t v : f.vars)
            if (v != elim && std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    if (vars.size() > kMaxTableBits)
        throw std::invalid_argument("to_tensor: contraction table too large");
    Factor out;
    out.vars = vars;
    out.data.assign(size_t(1) << vars.size(), {0.0, 0.0});
    size_t n = out.data.size();
    bool has_elim = elim != UINT32_MAX;
    for (size_t idx = 0; idx < n; idx++) {
        std::complex<double> total = 0;
        for (int eb = 0; eb < (has_elim ? 2 : 1); eb++) {
            std::complex<double> prod = 1;
            for (const auto& f : fs) {
                size_t fi = 0;
                for (size_t k = 0; k < f.vars.size(); k++) {
                    uint32_t v = f.vars[k];
                    int bit;
                    if (v == elim) {
                        bit = eb;
                    } else {
                        size_t pos =
                            std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
                        bit = (idx >> pos) & 1;
                    }
                    fi |= size_t(bit) << k;
                }
                prod *= f.data[fi];
            }
            total += prod;
        }
        out.data[idx] = total;
    }
    return out;
}

} // namespace

DenseTensor to_tensor(const Diagram& d) {
    if (d.boundary_size() > 16)
        throw std::invalid_argument("to_tensor: more than 16 open wires");

    // internalise H-boxes on a clone
    Diagram work = d;
    bool hboxes = true;
    while (hboxes) {
        hboxes = false;
        for (VertexId h = 0; h < work.vertex_bound(); h++) {
            if (!work.alive(h) || work.kind(h) != VertexKind::HBox) continue;
            hboxes = true;
            const auto& n = work.neighbors(h);
            if (n.size() != 2)
                throw std::invalid_argument("to_tensor: H-box without 2 endpoints");
            auto [a, ka] = n[0];
            auto [b, kb] = n[1];
            if (a == h && b == h) {
                work.scalar_mul(ExactScalar::zero()); // tr(H) = 0
                work.remove_vertex(h);
                continue;
            }
            work.remove_vertex(h);
            work.add_edge(a, b, ka ^ kb ^ EdgeKind::Hadamard);
        }
    }

    // assign variables: boundaries first (kept), then spiders (eliminated)
    std::vector<uint32_t> var_of(work.vertex_bound(), UINT32_MAX);
    uint32_t next = 0;
    std::vector<VertexId> bound_order; // outputs then inputs
    for (VertexId b : work.outputs()) bound_order.push_back(b);
    for (VertexId b : work.inputs()) bound_order.push_back(b);
    for (VertexId b : bound_order) {
        if (!work.is_boundary(b))
            throw std::invalid_argument("to_tensor: boundary list references non-boundary");
        var_of[b] = next++;
    }
    uint32_t num_bound = next;
    std::vector<uint32_t> spider_vars;
    for (VertexId v = 0; v < work.vertex_bound(); v++) {
        if (work.is_spider(v)) {
            var_of[v] = next;
            spider_vars.push_back(next);
            next++;
        }
    }

    std::vector<Factor> factors;
    for (VertexId v = 0; v < work.vertex_bound(); v++) {
        if (!work.is_spider(v)) continue;
        if (!work.phase(v).is_zero())
            factors.push_back(
                Factor::unary(var_of[v], 1.0, phase_value(work.phase(v), 1)));
    }
    work.for_each_edge([&](VertexId u, VertexId v, EdgeKind k) {
        bool ux = work.alive(u) && work.kind(u) == VertexKind::XSpider;
        bool vx = work.alive(v) && work.kind(v) == VertexKind::XSpider;
        bool eff_h = (k == EdgeKind::Hadamard) ^ ux ^ vx;
        if (u == v) {
            if (eff_h)
                factors.push_back(
                    Factor::unary(var_of[u], INV_SQRT2, -INV_SQRT2));
            // plain self-loop: identity
            return;
        }
        factors.push_back(binary_factor(var_of[u], var_of[v], eff_h));
    });

    // eliminate spider variables, smallest-join first
    std::vector<Factor> pool = std::move(factors);
    std::vector<uint32_t> remaining = spider_vars;
    while (!remaining.empty()) {
        size_t best_i = 0;
        size_t best_size = SIZE_MAX;
        for (size_t i = 0; i < remaining.size(); i++) {
            std::vector<uint32_t> uni;
            for (const auto& f : pool)
                if (std::find(f.vars.begin(), f.vars.end(), remaining[i]) != f.vars.end())
                    for (uint32_t v : f.vars)
                        if (v != remaining[i] &&
                            std::find(uni.begin(), uni.end(), v) == uni.end())
                            uni.push_back(v);
            if (uni.size() < best_size) {
                best_size = uni.size();
                best_i = i;
            }
        }
        uint32_t elim = remaining[best_i];
        remaining.erase(remaining.begin() + best_i);
        std::vector<Factor> touching, rest;
        for (auto& f : pool) {
            if (std::find(f.vars.begin(), f.vars.end(), elim) != f.vars.end())
                touching.push_back(std::move(f));
            else
                rest.push_back(std::move(f));
        }
        if (touching.empty()) {
            // isolated spider variable: plain sum over its two branches
            Factor f;
            f.data = {std::complex<double>(2.0, 0.0)};
            touching.push_back(f);
            rest.push_back(contract(touching, UINT32_MAX));
        } else {
            rest.push_back(contract(touching, elim));
        }
        pool = std::move(rest);
    }

    // combine everything over the boundary variables
    Factor final_f;
    if (pool.empty()) {
        final_f.data = {std::complex<double>(1.0, 0.0)};
    } else {
        final_f = contract(pool, UINT32_MAX);
    }

    DenseTensor out;
    out.num_outputs = work.outputs().size();
    out.num_inputs = work.inputs().size();
    out.data.assign(size_t(1) << num_bound, {0.0, 0.0});
    std::complex<double> g = work.scalar().to_complex();
    for (size_t flat = 0; flat < out.data.size(); flat++) {
        // flat: first boundary = most significant bit
        size_t fi = 0;
        for (size_t k = 0; k < final_f.vars.size(); k++) {
            uint32_t v = final_f.vars[k]; // v < num_bound
            int bit = (flat >> (num_bound - 1 - v)) & 1;
            fi |= size_t(bit) << k;
        }
        out.data[flat] = final_f.data[fi] * g;
    }
    return out;
}

double tensor_distance(const DenseTensor& a, const DenseTensor& b) {
    if (a.num_outputs != b.num_outputs || a.num_inputs != b.num_inputs ||
        a.data.size() != b.data.size())
        throw std::invalid_argument("tensor_distance: shape mismatch");
    double m = 0;
    for (size_t i = 0; i < a.data.size(); i++)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

} // namespace zxamp
