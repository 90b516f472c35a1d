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

#include <cmath>

#include "zxamp/circuit.hpp"

namespace zxamp {

// Plain state-vector simulation, the ground truth for acceptance tests.
// Conventions match the diagram translation bit for bit: qubit 0 is the most
// significant index bit; Rz(k) = diag(1, w^k); PauliExp applies the basis
// cladding and the diagonal w^{k * parity} exactly like the gadget lowering.
namespace {

constexpr double INV_SQRT2 = 0.70710678118654752440;

std::complex<double> omega(int k) {
    k = ((k % 8) + 8) % 8;
    static const double c = INV_SQRT2;
    switch (k) {
        case 0: return {1, 0};
        case 1: return {c, c};
        case 2: return {0, 1};
        case 3: return {-c, c};
        case 4: return {-1, 0};
        case 5: return {-c, -c};
        case 6: return {0, -1};
        default: return {c, -c};
    }
}

class State {
  public:
    State(uint32_t qubits, std::string_view spec) : n_(qubits) {
        amp_.assign(size_t(1) << n_, {0, 0});
        amp_[0] = 1.0;
        // build product state: qubit 0 = most significant bit
        for (uint32_t q = 0; q < n_; q++) {
            char c = spec[q];
            if (c == '1') {
                x(q);
            } else if (c == '+') {
                h(q);
            } else if (c == '-') {
                x(q);
                h(q);
            }
        }
    }

    size_t dim() const { return amp_.size(); }
    std::complex<double> amp(size_t i) const { return amp_[i]; }

    size_t bit(uint32_t q) const { return size_t(1) << (n_ - 1 - q); }

    void h(uint32_t q) {
        size_t b = bit(q);
        for (size_t i = 0; i < amp_.size(); i++) {
            if (i & b) continue;
            auto a0 = amp_[i], a1 = amp_[i | b];
            amp_[i] = (a0 + a1) * INV_SQRT2;
            amp_[i | b] = (a0 - a1) * INV_SQRT2;
        }
    }
    void x(uint32_t q) {
        size_t b = bit(q);
        for (size_t i = 0; i < amp_.size(); i++)
            if (!(i & b)) std::swap(amp_[i], amp_[i | b]);
    }
    void phase(uint32_t q, int eighths) {
        size_t b = bit(q);
        auto ph = omega(eighths);
        for (size_t i = 0; i < amp_.size(); i++)
            if (i & b) amp_[i] *= ph;
    }
    void cx(uint32_t c, uint32_t t) {
        size_t bc = bit(c), bt = bit(t);
        for (size_t i = 0; i < amp_.size(); i++)
            if ((i & bc) && !(i & bt)) std::swap(amp_[i], amp_[i | bt]);
    }
    void cz(uint32_t a, uint32_t b2) {
        size_t ba = bit(a), bb = bit(b2);
        for (size_t i = 0; i < amp_.size(); i++)
            if ((i & ba) && (i & bb)) amp_[i] = -amp_[i];
    }
    void ccz(uint32_t a, uint32_t b2, uint32_t c) {
        size_t ba = bit(a), bb = bit(b2), bc = bit(c);
        for (size_t i = 0; i < amp_.size(); i++)
            if ((i & ba) && (i & bb) && (i & bc)) amp_[i] = -amp_[i];
    }
    void s(uint32_t q, bool dagger) { phase(q, dagger ? 6 : 2); }

    void pauli_exp(const Gate& g) {
        // clad to Z basis
        for (size_t i = 0; i < g.qubits.size(); i++) {
            if (g.paulis[i] == 'X') {
                h(g.qubits[i]);
            } else if (g.paulis[i] == 'Y') {
                s(g.qubits[i], true);
                h(g.qubits[i]);
            }
        }
        auto ph = omega(g.phase_eighths);
        for (size_t i = 0; i < amp_.size(); i++) {
            int par = 0;
            for (uint32_t q : g.qubits) par ^= (i & bit(q)) ? 1 : 0;
            if (par) amp_[i] *= ph;
        }
        for (size_t i = 0; i < g.qubits.size(); i++) {
            if (g.paulis[i] == 'X') {
                h(g.qubits[i]);
            } else if (g.paulis[i] == 'Y') {
                h(g.qubits[i]);
                s(g.qubits[i], false);
            }
        }
    }

    void apply(const Gate& g) {
        switch (g.kind) {
            case Gate::Kind::H: h(g.qubits[0]); break;
            case Gate::Kind::X: x(g.qubits[0]); break;
            case Gate::Kind::Z: phase(g.qubits[0], 4); break;
            case Gate::Kind::S: phase(g.qubits[0], 2); break;
            case Gate::Kind::Sdg: phase(g.qubits[0], 6); break;
            case Gate::Kind::T: phase(g.qubits[0], 1); break;
            case Gate::Kind::Tdg: phase(g.qubits[0], 7); break;
            case Gate::Kind::Rz: phase(g.qubits[0], g.phase_eighths); break;
            case Gate::Kind::CX: cx(g.qubits[0], g.qubits[1]); break;
            case Gate::Kind::CZ: cz(g.qubits[0], g.qubits[1]); break;
            case Gate::Kind::CCZ: ccz(g.qubits[0], g.qubits[1], g.qubits[2]); break;
            case Gate::Kind::PauliExp: pauli_exp(g); break;
        }
    }

  private:
    uint32_t n_;
    std::vector<std::complex<double>> amp_;
};

} // namespace

std::complex<double> dense_oracle(const Circuit& c, std::string_view in_spec,
                                  std::string_view out_spec) {
    if (c.qubits > 14)
        throw std::invalid_argument("dense_oracle: more than 14 qubits");
    if (in_spec.size() != c.qubits || out_spec.size() != c.qubits)
        throw std::invalid_argument("dense_oracle: spec length mismatch");
    c.validate();
    State psi(c.qubits, in_spec);
    for (const auto& g : c.gates) psi.apply(g);
    State out(c.qubits, out_spec);
    std::complex<double> amp = 0;
    for (size_t i = 0; i < psi.dim(); i++) amp += std::conj(out.amp(i)) * psi.amp(i);
    return amp;
}

} // namespace zxamp
