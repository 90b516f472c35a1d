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

#include <cctype>
#include <sstream>

#include "zxamp/circuit.hpp"

namespace zxamp {

namespace {

struct Lexer {
    std::string_view s;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance(size_t n) {
        for (size_t i = 0; i < n && pos < s.size(); i++, pos++) {
            if (s[pos] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
    }
    void skip_ws() {
        for (;;) {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                advance(1);
            if (pos + 1 < s.size() && s[pos] == '/' && s[pos + 1] == '/') {
                while (pos < s.size() && s[pos] != '\n') advance(1);
                continue;
            }
            break;
        }
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            advance(1);
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_eat(c))
            throw QasmError(line, col, std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            advance(1);
        if (pos == start) throw QasmError(line, col, "expected identifier");
        return std::string(s.substr(start, pos - start));
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) advance(1);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            advance(1);
        if (pos == start) throw QasmError(line, col, "expected integer");
        return std::stol(std::string(s.substr(start, pos - start)));
    }
};

// angle expressions restricted to multiples of pi/4:
//   0 | [-][k*]pi[/d] with the value k*pi/d a multiple of pi/4
int parse_angle_eighths(Lexer& lx) {
    lx.skip_ws();
    int sign = 1;
    if (lx.try_eat('-')) sign = -1;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        long num = lx.integer();
        if (lx.try_eat('*')) {
            std::string p = lx.ident();
            if (p != "pi") throw QasmError(lx.line, lx.col, "expected pi");
            long den = 1;
            if (lx.try_eat('/')) den = lx.integer();
            if (den == 0 || (4 * num) % den != 0)
                throw QasmError(lx.line, lx.col, "angle is not a multiple of pi/4");
            return static_cast<int>(((sign * 4 * num / den) % 8 + 8) % 8);
        }
        if (num != 0) throw QasmError(lx.line, lx.col, "unsupported numeric angle");
        return 0;
    }
    std::string p = lx.ident();
    if (p != "pi") throw QasmError(lx.line, lx.col, "expected pi");
    long den = 1;
    if (lx.try_eat('/')) den = lx.integer();
    if (den == 0 || 4 % den != 0)
        throw QasmError(lx.line, lx.col, "angle is not a multiple of pi/4");
    return static_cast<int>(((sign * 4 / den) % 8 + 8) % 8);
}

} // namespace

Circuit parse_qasm(std::string_view text) {
    Lexer lx{text};
    Circuit c;
    bool have_qreg = false;
    std::string qreg_name;

    auto qubit_arg = [&]() -> uint32_t {
        std::string name = lx.ident();
        if (!have_qreg) throw QasmError(lx.line, lx.col, "qubit used before qreg");
        if (name != qreg_name)
            throw QasmError(lx.line, lx.col, "unknown register '" + name + "'");
        lx.expect('[');
        long idx = lx.integer();
        lx.expect(']');
        if (idx < 0 || idx >= static_cast<long>(c.qubits))
            throw QasmError(lx.line, lx.col, "qubit index out of range");
        return static_cast<uint32_t>(idx);
    };

    while (!lx.eof()) {
        int line = lx.line, col = lx.col;
        std::string tok = lx.ident();
        if (tok == "OPENQASM") {
            // version like 2.0
            lx.integer();
            lx.expect('.');
            lx.integer();
            lx.expect(';');
        } else if (tok == "include") {
            lx.skip_ws();
            lx.expect('"');
            while (lx.pos < lx.s.size() && lx.s[lx.pos] != '"') lx.advance(1);
            lx.expect('"');
            lx.expect(';');
        } else if (tok == "qreg") {
            if (have_qreg) throw QasmError(line, col, "only one qreg is supported");
            qreg_name = lx.ident();
            lx.expect('[');
            long n = lx.integer();
            lx.expect(']');
            lx.expect(';');
            if (n <= 0) throw QasmError(line, col, "empty qreg");
            c.qubits = static_cast<uint32_t>(n);
            have_qreg = true;
        } else if (tok == "creg") {
            lx.ident();
            lx.expect('[');
            lx.integer();
            lx.expect(']');
            lx.expect(';');
        } else if (tok == "h" || tok == "x" || tok == "z" || tok == "s" || tok == "sdg" ||
                   tok == "t" || tok == "tdg") {
            uint32_t q = qubit_arg();
            lx.expect(';');
            Gate::Kind k = tok == "h"   ? Gate::Kind::H
                           : tok == "x" ? Gate::Kind::X
                           : tok == "z" ? Gate::Kind::Z
                           : tok == "s" ? Gate::Kind::S
                           : tok == "sdg" ? Gate::Kind::Sdg
                           : tok == "t" ? Gate::Kind::T
                                        : Gate::Kind::Tdg;
            c.gates.push_back(Gate::single(k, q));
        } else if (tok == "rz") {
            lx.expect('(');
            int eighths = parse_angle_eighths(lx);
            lx.expect(')');
            uint32_t q = qubit_arg();
            lx.expect(';');
            c.gates.push_back(Gate::rz(q, eighths));
        } else if (tok == "cx" || tok == "cz") {
            uint32_t a = qubit_arg();
            lx.expect(',');
            uint32_t b = qubit_arg();
            lx.expect(';');
            if (a == b) throw QasmError(line, col, "gate qubits must be distinct");
            c.gates.push_back(
                {tok == "cx" ? Gate::Kind::CX : Gate::Kind::CZ, {a, b}, 0, {}});
        } else if (tok == "ccz") {
            uint32_t a = qubit_arg();
            lx.expect(',');
            uint32_t b = qubit_arg();
            lx.expect(',');
            uint32_t d = qubit_arg();
            lx.expect(';');
            if (a == b || a == d || b == d)
                throw QasmError(line, col, "gate qubits must be distinct");
            c.gates.push_back({Gate::Kind::CCZ, {a, b, d}, 0, {}});
        } else {
            throw QasmError(line, col, "unsupported gate or statement '" + tok + "'");
        }
    }
    if (!have_qreg) throw QasmError(lx.line, lx.col, "missing qreg declaration");
    return c;
}

std::string to_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.qubits << "];\n";
    auto q = [&](uint32_t i) {
        return "q[" + std::to_string(i) + "]";
    };
    static const char* kRz[8] = {"0",      "pi/4",   "pi/2",   "3*pi/4",
                                 "pi",     "5*pi/4", "3*pi/2", "7*pi/4"};
    std::vector<Gate> flat;
    for (const auto& g : c.gates) {
        if (g.kind != Gate::Kind::PauliExp) {
            flat.push_back(g);
            continue;
        }
        // lower: cladding + CX ladder + rz + unladder + uncladding
        auto clad = [&](bool undo) {
            for (size_t i = 0; i < g.qubits.size(); i++) {
                char p = g.paulis[i];
                uint32_t t = g.qubits[i];
                if (p == 'X') {
                    flat.push_back(Gate::single(Gate::Kind::H, t));
                } else if (p == 'Y') {
                    if (!undo) {
                        flat.push_back(Gate::single(Gate::Kind::Sdg, t));
                        flat.push_back(Gate::single(Gate::Kind::H, t));
                    } else {
                        flat.push_back(Gate::single(Gate::Kind::H, t));
                        flat.push_back(Gate::single(Gate::Kind::S, t));
                    }
                }
            }
        };
        clad(false);
        for (size_t i = 0; i + 1 < g.qubits.size(); i++)
            flat.push_back({Gate::Kind::CX, {g.qubits[i], g.qubits[i + 1]}, 0, {}});
        flat.push_back(Gate::rz(g.qubits.back(), g.phase_eighths));
        for (size_t i = g.qubits.size() - 1; i-- > 0;)
            flat.push_back({Gate::Kind::CX, {g.qubits[i], g.qubits[i + 1]}, 0, {}});
        clad(true);
    }
    for (const auto& g : flat) {
        switch (g.kind) {
            case Gate::Kind::H: out << "h " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::X: out << "x " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::Z: out << "z " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::S: out << "s " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::Sdg: out << "sdg " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::T: out << "t " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::Tdg: out << "tdg " << q(g.qubits[0]) << ";\n"; break;
            case Gate::Kind::Rz:
                out << "rz(" << kRz[g.phase_eighths & 7] << ") " << q(g.qubits[0])
                    << ";\n";
                break;
            case Gate::Kind::CX:
                out << "cx " << q(g.qubits[0]) << "," << q(g.qubits[1]) << ";\n";
                break;
            case Gate::Kind::CZ:
                out << "cz " << q(g.qubits[0]) << "," << q(g.qubits[1]) << ";\n";
                break;
            case Gate::Kind::CCZ:
                out << "ccz " << q(g.qubits[0]) << "," << q(g.qubits[1]) << ","
                    << q(g.qubits[2]) << ";\n";
                break;
            case Gate::Kind::PauliExp: break; // unreachable
        }
    }
    return out.str();
}

} // namespace zxamp
