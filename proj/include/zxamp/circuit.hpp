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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxamp/diagram.hpp"

namespace zxamp {

// Gate set: H, X, Z, S, S†, T, T†, Rz(k pi/4), CX, CZ, CCZ and exponentiated
// Pauli unitaries with odd multiples of pi/4 (one T contribution each).
struct Gate {
    enum class Kind : uint8_t { H, X, Z, S, Sdg, T, Tdg, Rz, CX, CZ, CCZ, PauliExp };
    Kind kind;
    std::vector<uint32_t> qubits;   // targets; distinct
    int phase_eighths = 0;          // Rz / PauliExp phase, mod 8
    std::string paulis;             // PauliExp letters over {X,Y,Z}, one per qubit

    static Gate single(Kind k, uint32_t q) { return {k, {q}, 0, {}}; }
    static Gate rz(uint32_t q, int eighths) {
        return {Kind::Rz, {q}, ((eighths % 8) + 8) % 8, {}};
    }
};

struct Circuit {
    uint32_t qubits = 0;
    std::vector<Gate> gates;

    // T-count of the translated diagram: odd Rz/T/Tdg, odd PauliExp, 7 per CCZ
    uint64_t tcount() const;
    void validate() const; // index ranges, distinctness, PauliExp invariants
};

struct QasmError : std::runtime_error {
    int line, col;
    QasmError(int line_, int col_, const std::string& msg)
        : std::runtime_error("qasm:" + std::to_string(line_) + ":" + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

// OpenQASM-2.0-style subset: qreg/creg/include/OPENQASM headers, gates
// h x z s sdg t tdg rz(<multiple of pi/4>) cx cz ccz. Anything else raises
// QasmError with position.
Circuit parse_qasm(std::string_view text);
std::string to_qasm(const Circuit& c); // PauliExp gates are lowered

// product state/effect specs: string over {0,1,+,-}, one char per qubit
// closed diagram (fixed input state and output effect)
Diagram circuit_to_diagram(const Circuit& c, std::string_view in_spec,
                           std::string_view out_spec);
// open diagram of the bare circuit unitary
Diagram circuit_to_diagram(const Circuit& c);

// random Clifford+T circuits: t exponentiated Paulis of weight 2..4 [PAPER shape]
Circuit gen_random_cliffordt(uint32_t qubits, uint32_t tcount, uint64_t seed);

struct HiddenShiftInstance {
    Circuit circuit;
    std::vector<uint8_t> shift; // the bitstring the circuit maps |0..0> to
};
// Maiorana-McFarland construction over {H, Z, CZ, CCZ}; ccz_count must be even
HiddenShiftInstance gen_hidden_shift(uint32_t qubits, uint32_t ccz_count, uint64_t seed);

// dense state-vector ground truth, guard: qubits <= 14
std::complex<double> dense_oracle(const Circuit& c, std::string_view in_spec,
                                  std::string_view out_spec);

} // namespace zxamp
