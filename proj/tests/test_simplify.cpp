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

#include <doctest.h>

#include "test_helpers.hpp"
#include "zxamp/circuit.hpp"
#include "zxamp/simplify.hpp"
#include "zxamp/tensor.hpp"

using namespace zxamp;
using zxamp::testing::oracle_distance;
using zxamp::testing::random_graph_like;

namespace {

// random small circuit over the full gate set, closed with random specs
Diagram random_circuit_diagram(Rng& rng, uint32_t qubits, uint32_t gates) {
    Circuit c;
    c.qubits = qubits;
    for (uint32_t i = 0; i < gates; i++) {
        switch (rng.bounded(8)) {
            case 0: c.gates.push_back(Gate::single(Gate::Kind::H, static_cast<uint32_t>(rng.bounded(qubits)))); break;
            case 1: c.gates.push_back(Gate::single(Gate::Kind::T, static_cast<uint32_t>(rng.bounded(qubits)))); break;
            case 2: c.gates.push_back(Gate::single(Gate::Kind::S, static_cast<uint32_t>(rng.bounded(qubits)))); break;
            case 3: c.gates.push_back(Gate::single(Gate::Kind::X, static_cast<uint32_t>(rng.bounded(qubits)))); break;
            case 4: c.gates.push_back(Gate::rz(static_cast<uint32_t>(rng.bounded(qubits)), static_cast<int>(rng.bounded(8)))); break;
            default: {
                uint32_t a = static_cast<uint32_t>(rng.bounded(qubits));
                uint32_t b = static_cast<uint32_t>(rng.bounded(qubits));
                if (a == b) b = (b + 1) % qubits;
                c.gates.push_back({rng.bounded(2) ? Gate::Kind::CX : Gate::Kind::CZ,
                                   {a, b},
                                   0,
                                   {}});
            }
        }
    }
    static const char* kSpecs = "01+-";
    std::string in, out;
    for (uint32_t q = 0; q < qubits; q++) {
        in.push_back(kSpecs[rng.bounded(4)]);
        out.push_back(kSpecs[rng.bounded(4)]);
    }
    Diagram d = circuit_to_diagram(c, in, out);
    d.to_graph_like();
    return d;
}

} // namespace

TEST_CASE("individual rules preserve the tensor on random diagrams") {
    Rng rng(101);
    int applied = 0;
    for (int trial = 0; trial < 700 && applied < 520; trial++) {
        Diagram d = random_graph_like(rng, 3 + rng.bounded(5), rng.bounded(3));
        Diagram before = d;
        // pick a random applicable rule at a random vertex
        bool done = false;
        for (VertexId v = 0; v < d.vertex_bound() && !done; v++) {
            if (!d.is_spider(v)) continue;
            size_t deg = d.degree(v);
            Phase ph = d.phase(v);
            try {
                if (deg == 0) {
                    absorb_scalar(d, v);
                    done = true;
                } else if (deg == 1 && ph.is_proper_clifford() && d.internal(v)) {
                    copy_state(d, v);
                    done = true;
                } else if (deg == 2 && ph.is_zero()) {
                    remove_identity(d, v);
                    done = true;
                } else if (deg == 2 && ph == Phase(4) && d.internal(v)) {
                    pi_bridge(d, v);
                    done = true;
                } else if (ph.is_half_turn() && d.internal(v)) {
                    local_complement(d, v);
                    done = true;
                } else if (ph.is_proper_clifford() && d.internal(v)) {
                    for (const auto& [w, k] : d.neighbors(v))
                        if (d.is_spider(w) && d.phase(w).is_proper_clifford() &&
                            d.internal(w)) {
                            pivot(d, v, w);
                            done = true;
                            break;
                        }
                }
            } catch (const std::invalid_argument&) {
                // boundary-adjacency edge cases; skip
            }
        }
        if (!done) continue;
        applied++;
        CHECK(oracle_distance(before, d) < 1e-10);
    }
    CHECK(applied >= 520);
}

TEST_CASE("rule preconditions are enforced") {
    Diagram d;
    VertexId a = d.add_z(Phase(1));
    VertexId b = d.add_z(Phase(2));
    d.add_edge(a, b, EdgeKind::Hadamard);
    CHECK_THROWS_AS(local_complement(d, a), std::invalid_argument); // odd phase
    CHECK_THROWS_AS(pivot(d, a, b), std::invalid_argument);
    CHECK_THROWS_AS(remove_identity(d, b), std::invalid_argument); // arity 1
    CHECK_THROWS_AS(absorb_scalar(d, a), std::invalid_argument);
}

TEST_CASE("local complement on small instances") {
    // triangle around a pi/2 spider: neighbours disconnect, phases shift
    Diagram d;
    VertexId c = d.add_z(Phase(2));
    std::vector<VertexId> legs;
    for (int i = 0; i < 3; i++) {
        VertexId v = d.add_z(Phase(1));
        VertexId o = d.add_output();
        d.add_edge(v, o, EdgeKind::Plain);
        d.add_edge(c, v, EdgeKind::Hadamard);
        legs.push_back(v);
    }
    for (int i = 0; i < 3; i++)
        d.add_edge(legs[i], legs[(i + 1) % 3], EdgeKind::Hadamard);
    Diagram before = d;
    local_complement(d, c);
    CHECK(!d.alive(c));
    CHECK(!d.has_edge(legs[0], legs[1]));
    CHECK(oracle_distance(before, d) < 1e-10);
}

TEST_CASE("full_simplify reaches the reduced form on random circuits") {
    Rng rng(103);
    for (int trial = 0; trial < 60; trial++) {
        Diagram d = random_circuit_diagram(rng, 2 + rng.bounded(3), 4 + rng.bounded(10));
        DenseTensor before = to_tensor(d);
        size_t t_before = d.tcount();
        size_t spiders_before = d.num_spiders();
        size_t n = full_simplify(d);
        (void)n;
        CHECK(d.tcount() <= t_before);
        CHECK(d.num_spiders() <= spiders_before);
        CHECK(is_reduced(d));
        CHECK(tensor_distance(before, to_tensor(d)) < 1e-10);
        // fixpoint: a second run changes nothing
        CHECK(full_simplify(d) == 0);
    }
}

TEST_CASE("pure Clifford closed circuits reduce to a bare scalar") {
    Rng rng(107);
    for (int trial = 0; trial < 40; trial++) {
        Circuit c;
        c.qubits = 3;
        for (int i = 0; i < 12; i++) {
            switch (rng.bounded(5)) {
                case 0: c.gates.push_back(Gate::single(Gate::Kind::H, static_cast<uint32_t>(rng.bounded(3)))); break;
                case 1: c.gates.push_back(Gate::single(Gate::Kind::S, static_cast<uint32_t>(rng.bounded(3)))); break;
                case 2: c.gates.push_back(Gate::single(Gate::Kind::Z, static_cast<uint32_t>(rng.bounded(3)))); break;
                default: {
                    uint32_t a = static_cast<uint32_t>(rng.bounded(3));
                    uint32_t b = (a + 1 + static_cast<uint32_t>(rng.bounded(2))) % 3;
                    c.gates.push_back({rng.bounded(2) ? Gate::Kind::CX : Gate::Kind::CZ,
                                       {a, b},
                                       0,
                                       {}});
                }
            }
        }
        Diagram d = circuit_to_diagram(c, "000", "000");
        d.to_graph_like();
        auto expect = to_tensor(d).data[0];
        full_simplify(d);
        CHECK(d.num_vertices() == 0);
        auto got = d.scalar().to_complex();
        CHECK(std::abs(got - expect) < 1e-10);
    }
}

TEST_CASE("identity removal edge kinds") {
    SUBCASE("H-H around a phase-0 spider becomes a plain connection") {
        Diagram d;
        VertexId a = d.add_z(Phase(1));
        VertexId m = d.add_z(Phase(0));
        VertexId b = d.add_z(Phase(3));
        VertexId o1 = d.add_output();
        VertexId o2 = d.add_output();
        d.add_edge(a, o1, EdgeKind::Plain);
        d.add_edge(b, o2, EdgeKind::Plain);
        d.add_edge(a, m, EdgeKind::Hadamard);
        d.add_edge(m, b, EdgeKind::Hadamard);
        Diagram before = d;
        remove_identity(d, m);
        // the plain join fuses the two spiders
        CHECK(d.num_spiders() == 1);
        CHECK(oracle_distance(before, d) < 1e-12);
    }
    SUBCASE("boundary - Z(0) - boundary leaves a bare wire") {
        Diagram d;
        VertexId i = d.add_input();
        VertexId o = d.add_output();
        VertexId m = d.add_z(Phase(0));
        d.add_edge(i, m, EdgeKind::Plain);
        d.add_edge(m, o, EdgeKind::Plain);
        remove_identity(d, m);
        CHECK(d.num_spiders() == 0);
        auto t = to_tensor(d);
        CHECK(std::abs(t.data[0b00] - 1.0) < 1e-12);
        CHECK(std::abs(t.data[0b11] - 1.0) < 1e-12);
        CHECK(std::abs(t.data[0b01]) < 1e-12);
    }
}

TEST_CASE("H CX T circuit reduces to a single odd spider") {
    Circuit c;
    c.qubits = 2;
    c.gates.push_back(Gate::single(Gate::Kind::H, 0));
    c.gates.push_back({Gate::Kind::CX, {0, 1}, 0, {}});
    c.gates.push_back(Gate::single(Gate::Kind::T, 1));
    Diagram d = circuit_to_diagram(c); // open diagram: boundaries keep the T alive
    d.to_graph_like();
    DenseTensor before = to_tensor(d);
    full_simplify(d);
    CHECK(d.tcount() == 1);
    size_t odd = 0;
    for (VertexId v = 0; v < d.vertex_bound(); v++)
        if (d.is_spider(v) && d.phase(v).is_t_like()) odd++;
    CHECK(odd == 1);
    CHECK(tensor_distance(before, to_tensor(d)) < 1e-10);
}

TEST_CASE("gadget hubs survive and gadget fusion is sound when enabled") {
    // two gadgets over the same support fuse into one with added phases
    Diagram d;
    std::vector<VertexId> qubits;
    for (int i = 0; i < 3; i++) {
        VertexId v = d.add_z(Phase(1));
        VertexId o = d.add_output();
        d.add_edge(v, o, EdgeKind::Plain);
        qubits.push_back(v);
    }
    auto add_gadget = [&](int leaf_phase) {
        VertexId hub = d.add_z();
        VertexId leaf = d.add_z(Phase(leaf_phase));
        d.add_edge(hub, leaf, EdgeKind::Hadamard);
        for (VertexId q : qubits) d.add_edge(hub, q, EdgeKind::Hadamard);
    };
    add_gadget(1);
    add_gadget(1);
    Diagram before = d;
    SimplifyOptions opts;
    opts.gadget_fusion = true;
    full_simplify(d, opts);
    CHECK(oracle_distance(before, d) < 1e-10);
    CHECK(d.tcount() < before.tcount()); // pi/4 + pi/4 merged into pi/2
    // without the pass, hubs are preserved as first-class shapes
    Diagram d2 = before;
    full_simplify(d2);
    CHECK(oracle_distance(before, d2) < 1e-10);
    size_t hubs = 0;
    for (VertexId v = 0; v < d2.vertex_bound(); v++)
        if (d2.is_spider(v) && d2.phase(v).is_proper_clifford() && d2.degree(v) >= 2)
            hubs++;
    CHECK(hubs >= 1);
}

TEST_CASE("rewrite log replays to the same diagram") {
    Rng rng(109);
    for (int trial = 0; trial < 30; trial++) {
        Diagram d = random_circuit_diagram(rng, 3, 8);
        Diagram copy = d;
        RewriteLog log;
        SimplifyOptions opts;
        opts.log = &log;
        full_simplify(d, opts);
        replay(copy, log);
        CHECK(copy.serialize() == d.serialize());
        CHECK((copy.scalar() == d.scalar()));
    }
}

TEST_CASE("seeded simplify after a local edit matches the full fixpoint") {
    Rng rng(113);
    for (int trial = 0; trial < 30; trial++) {
        Diagram d = random_circuit_diagram(rng, 3, 10);
        full_simplify(d);
        if (d.num_vertices() == 0) continue;
        // poke: flip a spider phase by pi (keeps parity class)
        VertexId target = kNoVertex;
        for (VertexId v = 0; v < d.vertex_bound(); v++)
            if (d.is_spider(v)) target = v;
        if (target == kNoVertex) continue;
        d.add_to_phase(target, Phase(4));
        Diagram full = d;
        std::vector<VertexId> seeds{target};
        full_simplify_seeded(d, seeds);
        full_simplify(full);
        CHECK(is_reduced(d));
        CHECK(oracle_distance(d, full) < 1e-10);
    }
}
