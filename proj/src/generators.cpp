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

#include <algorithm>
#include <set>

#include "zxamp/circuit.hpp"
#include "zxamp/rng.hpp"

namespace zxamp {

Circuit gen_random_cliffordt(uint32_t qubits, uint32_t tcount, uint64_t seed) {
    if (qubits < 4) throw std::invalid_argument("gen_random_cliffordt: need >= 4 qubits");
    if (tcount < 1) throw std::invalid_argument("gen_random_cliffordt: need t >= 1");
    Rng rng(seed);
    Circuit c;
    c.qubits = qubits;
    static const char kLetters[3] = {'X', 'Y', 'Z'};
    for (uint32_t i = 0; i < tcount; i++) {
        uint32_t weight = 2 + static_cast<uint32_t>(rng.bounded(3)); // 2..4
        Gate g;
        g.kind = Gate::Kind::PauliExp;
        // support without replacement
        std::set<uint32_t> support;
        while (support.size() < weight)
            support.insert(static_cast<uint32_t>(rng.bounded(qubits)));
        for (uint32_t q : support) {
            g.qubits.push_back(q);
            g.paulis.push_back(kLetters[rng.bounded(3)]);
        }
        g.phase_eighths = static_cast<int>(2 * rng.bounded(4) + 1); // odd mod 8
        c.gates.push_back(std::move(g));
    }
    return c;
}

namespace {

// emit the phase oracle of a shifted monomial product prod_{q in vars}(y_q ^ s_q)
// as Z/CZ/CCZ gates (constant terms are global signs and are dropped)
void emit_shifted_monomial(Circuit& c, const std::vector<uint32_t>& vars,
                           const std::vector<uint8_t>& shift_bits) {
    size_t k = vars.size();
    for (uint32_t sub = 1; sub < (1u << k); sub++) {
        // the monomial over vars[i] for i in sub, with coefficient
        // prod of shifts over the complement
        uint8_t coeff = 1;
        std::vector<uint32_t> mono;
        for (size_t i = 0; i < k; i++) {
            if (sub >> i & 1)
                mono.push_back(vars[i]);
            else
                coeff &= shift_bits[vars[i]];
        }
        if (!coeff) continue;
        if (mono.size() == 1)
            c.gates.push_back(Gate::single(Gate::Kind::Z, mono[0]));
        else if (mono.size() == 2)
            c.gates.push_back({Gate::Kind::CZ, {mono[0], mono[1]}, 0, {}});
        else
            c.gates.push_back({Gate::Kind::CCZ, {mono[0], mono[1], mono[2]}, 0, {}});
    }
}

} // namespace

// Maiorana-McFarland bent function f(x, y) = x.y + g(y) on n = 2m bits;
// the circuit H^n O_{f shifted} H^n O_{f~} H^n maps |0..0> to |shift>.
// g gets ccz_count/2 distinct cubic monomials (each appearing once here and
// once in the dual oracle), plus quadratic and linear seasoning.
HiddenShiftInstance gen_hidden_shift(uint32_t qubits, uint32_t ccz_count, uint64_t seed) {
    if (qubits & 1) throw std::invalid_argument("gen_hidden_shift: qubit count must be even");
    if (qubits < 4) throw std::invalid_argument("gen_hidden_shift: need >= 4 qubits");
    if (ccz_count & 1)
        throw std::invalid_argument(
            "gen_hidden_shift: ccz_count must be even (the bent function and its dual "
            "each realise half the CCZ occurrences)");
    uint32_t m = qubits / 2;
    uint64_t triples = static_cast<uint64_t>(m) * (m - 1) * (m - 2) / 6;
    if (ccz_count > 0 && (m < 3 || triples < ccz_count / 2))
        throw std::invalid_argument("gen_hidden_shift: not enough qubits for ccz_count");
    Rng rng(seed);

    HiddenShiftInstance inst;
    Circuit& c = inst.circuit;
    c.qubits = qubits;
    inst.shift.resize(qubits);
    for (auto& b : inst.shift) b = static_cast<uint8_t>(rng.bounded(2));

    // g's terms over register indices 0..m-1
    std::set<std::vector<uint32_t>> cubics;
    while (cubics.size() < ccz_count / 2) {
        std::set<uint32_t> pick;
        while (pick.size() < 3) pick.insert(static_cast<uint32_t>(rng.bounded(m)));
        cubics.insert(std::vector<uint32_t>(pick.begin(), pick.end()));
    }
    std::vector<std::vector<uint32_t>> quads, lins;
    for (uint32_t i = 0; i < m; i++) {
        if (rng.coin()) {
            uint32_t a = static_cast<uint32_t>(rng.bounded(m));
            uint32_t b = static_cast<uint32_t>(rng.bounded(m));
            if (a != b) quads.push_back({std::min(a, b), std::max(a, b)});
        }
        if (rng.coin()) lins.push_back({static_cast<uint32_t>(rng.bounded(m))});
    }

    auto h_layer = [&]() {
        for (uint32_t q = 0; q < qubits; q++)
            c.gates.push_back(Gate::single(Gate::Kind::H, q));
    };
    // oracle for f(z ^ s): x-register = qubits 0..m-1, y-register = m..2m-1
    auto emit_f = [&](bool shifted, bool dual) {
        std::vector<uint8_t> sb(qubits, 0);
        if (shifted)
            for (uint32_t q = 0; q < qubits; q++) sb[q] = inst.shift[q];
        // x.y part: monomials x_i y_i
        for (uint32_t i = 0; i < m; i++) {
            std::vector<uint32_t> vars{i, m + i};
            emit_shifted_monomial(c, vars, sb);
        }
        // g over y (or over x for the dual)
        uint32_t off = dual ? 0 : m;
        for (const auto& t : cubics) {
            std::vector<uint32_t> vars{t[0] + off, t[1] + off, t[2] + off};
            emit_shifted_monomial(c, vars, sb);
        }
        for (const auto& t : quads) {
            std::vector<uint32_t> vars{t[0] + off, t[1] + off};
            emit_shifted_monomial(c, vars, sb);
        }
        for (const auto& t : lins) {
            std::vector<uint32_t> vars{t[0] + off};
            emit_shifted_monomial(c, vars, sb);
        }
    };

    h_layer();
    emit_f(/*shifted=*/true, /*dual=*/false);
    h_layer();
    emit_f(/*shifted=*/false, /*dual=*/true);
    h_layer();
    return inst;
}

} // namespace zxamp
