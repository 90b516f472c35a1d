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

#include "zxamp/circuit.hpp"

#include <algorithm>
#include <set>

namespace zxamp {

namespace {

// fixed 7-T realisation of ccz over {cx, t, tdg}; validated against the
// diagonal matrix by the unit tests
const Gate* ccz_expansion(uint32_t a, uint32_t b, uint32_t c, size_t* n) {
    thread_local std::vector<Gate> seq;
    seq.clear();
    auto cx = [&](uint32_t x, uint32_t y) { seq.push_back({Gate::Kind::CX, {x, y}, 0, {}}); };
    auto t = [&](uint32_t q) { seq.push_back(Gate::single(Gate::Kind::T, q)); };
    auto tdg = [&](uint32_t q) { seq.push_back(Gate::single(Gate::Kind::Tdg, q)); };
    cx(b, c);
    tdg(c);
    cx(a, c);
    t(c);
    cx(b, c);
    tdg(c);
    cx(a, c);
    t(b);
    t(c);
    cx(a, b);
    t(a);
    tdg(b);
    cx(a, b);
    *n = seq.size();
    return seq.data();
}

} // namespace

uint64_t Circuit::tcount() const {
    uint64_t t = 0;
    for (const auto& g : gates) {
        switch (g.kind) {
            case Gate::Kind::T:
            case Gate::Kind::Tdg: t++; break;
            case Gate::Kind::Rz:
                if (g.phase_eighths & 1) t++;
                break;
            case Gate::Kind::PauliExp:
                if (g.phase_eighths & 1) t++;
                break;
            case Gate::Kind::CCZ: t += 7; break;
            default: break;
        }
    }
    return t;
}

void Circuit::validate() const {
    for (const auto& g : gates) {
        std::set<uint32_t> seen;
        for (uint32_t q : g.qubits) {
            if (q >= qubits) throw std::invalid_argument("gate qubit index out of range");
            if (!seen.insert(q).second)
                throw std::invalid_argument("gate qubit indices must be distinct");
        }
        if (g.kind == Gate::Kind::PauliExp) {
            if (g.paulis.size() != g.qubits.size() || g.qubits.empty())
                throw std::invalid_argument("PauliExp weight must be >= 1");
            if (!(g.phase_eighths & 1))
                throw std::invalid_argument("PauliExp multiplier must be odd");
            for (char p : g.paulis)
                if (p != 'X' && p != 'Y' && p != 'Z')
                    throw std::invalid_argument("PauliExp letters must be X, Y or Z");
        }
    }
}

namespace {

void check_spec(std::string_view spec, uint32_t qubits, const char* which) {
    if (spec.size() != qubits)
        throw std::invalid_argument(std::string(which) +
                                    " spec length does not match qubit count");
    for (char c : spec)
        if (c != '0' && c != '1' && c != '+' && c != '-')
            throw std::invalid_argument(std::string(which) +
                                        " spec must be over {0,1,+,-}");
}

class Builder {
  public:
    explicit Builder(uint32_t qubits) : cur_(qubits, kNoVertex) {}

    Diagram& diagram() { return d_; }

    void start_open() {
        for (auto& c : cur_) {
            VertexId b = d_.add_input();
            c = b;
        }
    }
    void start_states(std::string_view spec) {
        for (size_t q = 0; q < cur_.size(); q++) {
            bool x_basis = spec[q] == '0' || spec[q] == '1';
            Phase ph(spec[q] == '1' || spec[q] == '-' ? 4 : 0);
            cur_[q] = x_basis ? d_.add_x(ph) : d_.add_z(ph);
            d_.scalar_mul(ExactScalar::sqrt2_power(-1));
        }
    }
    void finish_open() {
        for (auto& c : cur_) {
            VertexId b = d_.add_output();
            d_.add_edge(c, b, EdgeKind::Plain);
        }
    }
    void finish_effects(std::string_view spec) {
        for (size_t q = 0; q < cur_.size(); q++) {
            bool x_basis = spec[q] == '0' || spec[q] == '1';
            Phase ph(spec[q] == '1' || spec[q] == '-' ? 4 : 0);
            VertexId e = x_basis ? d_.add_x(ph) : d_.add_z(ph);
            d_.scalar_mul(ExactScalar::sqrt2_power(-1));
            d_.add_edge(cur_[q], e, EdgeKind::Plain);
        }
    }

    void apply(const Gate& g) {
        switch (g.kind) {
            case Gate::Kind::H: {
                VertexId h = d_.add_vertex(VertexKind::HBox);
                wire(g.qubits[0], h);
                break;
            }
            case Gate::Kind::X: {
                VertexId v = d_.add_x(Phase(4));
                wire(g.qubits[0], v);
                break;
            }
            case Gate::Kind::Z: zphase(g.qubits[0], 4); break;
            case Gate::Kind::S: zphase(g.qubits[0], 2); break;
            case Gate::Kind::Sdg: zphase(g.qubits[0], 6); break;
            case Gate::Kind::T: zphase(g.qubits[0], 1); break;
            case Gate::Kind::Tdg: zphase(g.qubits[0], 7); break;
            case Gate::Kind::Rz: zphase(g.qubits[0], g.phase_eighths); break;
            case Gate::Kind::CX: {
                VertexId zc = d_.add_z();
                VertexId xt = d_.add_x();
                wire(g.qubits[0], zc);
                wire(g.qubits[1], xt);
                d_.add_edge(zc, xt, EdgeKind::Plain);
                d_.scalar_mul(ExactScalar::sqrt2_power(1));
                break;
            }
            case Gate::Kind::CZ: {
                VertexId za = d_.add_z();
                VertexId zb = d_.add_z();
                wire(g.qubits[0], za);
                wire(g.qubits[1], zb);
                d_.add_edge(za, zb, EdgeKind::Hadamard);
                d_.scalar_mul(ExactScalar::sqrt2_power(1));
                break;
            }
            case Gate::Kind::CCZ: {
                size_t n = 0;
                const Gate* seq = ccz_expansion(g.qubits[0], g.qubits[1], g.qubits[2], &n);
                for (size_t i = 0; i < n; i++) apply(seq[i]);
                break;
            }
            case Gate::Kind::PauliExp: {
                // cladding into the Z basis, phase gadget, cladding back; the
                // gadget needs sqrt2^{|S|-1} to be the unit-determinant phase
                for (size_t i = 0; i < g.qubits.size(); i++) clad(g.qubits[i], g.paulis[i], false);
                VertexId hub = d_.add_z();
                VertexId leaf = d_.add_z(Phase(g.phase_eighths));
                d_.add_edge(hub, leaf, EdgeKind::Hadamard);
                for (uint32_t q : g.qubits) {
                    VertexId zq = d_.add_z();
                    wire(q, zq);
                    d_.add_edge(hub, zq, EdgeKind::Hadamard);
                }
                d_.scalar_mul(ExactScalar::sqrt2_power(
                    static_cast<int64_t>(g.qubits.size()) - 1));
                for (size_t i = 0; i < g.qubits.size(); i++) clad(g.qubits[i], g.paulis[i], true);
                break;
            }
        }
    }

  private:
    Diagram d_;
    std::vector<VertexId> cur_;

    void wire(uint32_t q, VertexId v) {
        d_.add_edge(cur_[q], v, EdgeKind::Plain);
        cur_[q] = v;
    }
    void zphase(uint32_t q, int eighths) {
        VertexId v = d_.add_z(Phase(eighths));
        wire(q, v);
    }
    // W maps the Pauli eigenbasis to Z: X -> H, Y -> H S^dg; undo reverses
    void clad(uint32_t q, char p, bool undo) {
        if (p == 'Z') return;
        if (p == 'X') {
            apply(Gate::single(Gate::Kind::H, q));
            return;
        }
        if (!undo) {
            apply(Gate::single(Gate::Kind::Sdg, q));
            apply(Gate::single(Gate::Kind::H, q));
        } else {
            apply(Gate::single(Gate::Kind::H, q));
            apply(Gate::single(Gate::Kind::S, q));
        }
    }
};

} // namespace

Diagram circuit_to_diagram(const Circuit& c, std::string_view in_spec,
                           std::string_view out_spec) {
    c.validate();
    check_spec(in_spec, c.qubits, "input");
    check_spec(out_spec, c.qubits, "output");
    Builder b(c.qubits);
    b.start_states(in_spec);
    for (const auto& g : c.gates) b.apply(g);
    b.finish_effects(out_spec);
    return std::move(b.diagram());
}

Diagram circuit_to_diagram(const Circuit& c) {
    c.validate();
    Builder b(c.qubits);
    b.start_open();
    for (const auto& g : c.gates) b.apply(g);
    b.finish_open();
    return std::move(b.diagram());
}

} // namespace zxamp
