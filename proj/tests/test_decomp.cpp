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

#include <cmath>
#include <complex>

#include "test_helpers.hpp"
#include "zxamp/decomp.hpp"
#include "zxamp/tensor.hpp"

using namespace zxamp;
using zxamp::testing::random_graph_like;

namespace {

// weighted sum of term tensors must reproduce the source tensor
double decomp_distance(const Diagram& src, const std::vector<DecompTerm>& terms) {
    DenseTensor want = to_tensor(src);
    DenseTensor sum;
    sum.num_outputs = want.num_outputs;
    sum.num_inputs = want.num_inputs;
    sum.data.assign(want.data.size(), {0, 0});
    for (const auto& t : terms) {
        DenseTensor tt = to_tensor(t.diagram);
        REQUIRE(tt.data.size() == want.data.size());
        auto w = t.weight.to_complex();
        for (size_t i = 0; i < tt.data.size(); i++) sum.data[i] += w * tt.data[i];
    }
    return tensor_distance(want, sum);
}

// standalone cat_n state: phase-0 hub, n odd legs, each leg an open output
Diagram cat_state(size_t n, int center_phase = 0, int leg_phase = 1) {
    Diagram d;
    VertexId hub = d.add_z(Phase(center_phase));
    for (size_t i = 0; i < n; i++) {
        VertexId leg = d.add_z(Phase(leg_phase));
        VertexId o = d.add_output();
        d.add_edge(hub, leg, EdgeKind::Hadamard);
        d.add_edge(leg, o, EdgeKind::Plain);
    }
    return d;
}

CatCandidate candidate_of(const Diagram& d, VertexId hub) {
    CatCandidate c;
    c.center = hub;
    for (const auto& [w, k] : d.neighbors(hub)) c.legs.push_back(w);
    std::sort(c.legs.begin(), c.legs.end());
    return c;
}

// |T~>^k as k arity-1 odd spiders with outputs
Diagram t_state(size_t k, int phase = 1) {
    Diagram d;
    for (size_t i = 0; i < k; i++) {
        VertexId v = d.add_z(Phase(phase));
        VertexId o = d.add_output();
        d.add_edge(v, o, EdgeKind::Plain);
    }
    return d;
}

std::vector<VertexId> odd_spiders(const Diagram& d) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < d.vertex_bound(); v++)
        if (d.is_spider(v) && d.phase(v).is_t_like()) out.push_back(v);
    return out;
}

// host with a cat structure planted among random spiders
struct Embedded {
    Diagram d;
    VertexId hub;
};
Embedded embed_cat(Rng& rng, size_t arity, int center_phase = 0) {
    Embedded e;
    e.d = random_graph_like(rng, arity + 2 + rng.bounded(3), 2);
    std::vector<VertexId> legs;
    for (VertexId v = 0; v < e.d.vertex_bound() && legs.size() < arity; v++) {
        if (!e.d.is_spider(v)) continue;
        if (!e.d.phase(v).is_t_like())
            e.d.add_to_phase(v, Phase(1 + 2 * static_cast<int>(rng.bounded(4))));
        legs.push_back(v);
    }
    REQUIRE(legs.size() == arity);
    e.hub = e.d.add_z(Phase(center_phase));
    for (VertexId l : legs) e.d.add_edge(e.hub, l, EdgeKind::Hadamard);
    return e;
}

} // namespace

TEST_CASE("cat decompositions: term counts, soundness, t-accounting") {
    for (size_t arity : {3, 4, 5, 6}) {
        CAPTURE(arity);
        Diagram d = cat_state(arity);
        auto c = candidate_of(d, 0);
        auto terms = apply_cat_decomp(d, c);
        size_t expect_terms = arity <= 4 ? 2 : 3;
        CHECK(terms.size() == expect_terms);
        CHECK(decomp_distance(d, terms) < 1e-10);
        for (const auto& t : terms) {
            CHECK(t.diagram.tcount() == d.tcount() - arity);
            CHECK(!t.weight.is_zero());
        }
    }
}

TEST_CASE("cat decompositions embedded in random hosts") {
    Rng rng(211);
    for (size_t arity : {3, 4, 5, 6}) {
        CAPTURE(arity);
        for (int trial = 0; trial < 12; trial++) {
            Embedded e = embed_cat(rng, arity);
            auto c = candidate_of(e.d, e.hub);
            auto terms = apply_cat_decomp(e.d, c);
            CHECK(decomp_distance(e.d, terms) < 1e-9);
            for (const auto& t : terms)
                CHECK(t.diagram.tcount() == e.d.tcount() - arity);
        }
    }
}

TEST_CASE("legs with any odd phase are consumed") {
    Rng rng(213);
    for (int trial = 0; trial < 8; trial++) {
        Diagram d = cat_state(4, 0, 1 + 2 * static_cast<int>(rng.bounded(4)));
        auto terms = apply_cat_decomp(d, candidate_of(d, 0));
        CHECK(terms.size() == 2);
        CHECK(decomp_distance(d, terms) < 1e-10);
    }
}

TEST_CASE("pi-center normalisation") {
    SUBCASE("standalone cat3 with a pi hub") {
        Diagram d = cat_state(3, /*center_phase=*/4);
        Diagram before = d;
        auto c = candidate_of(d, 0);
        normalize_cat_pi(d, c);
        CHECK(d.phase(c.center).is_zero());
        CHECK(zxamp::testing::oracle_distance(before, d) < 1e-10);
        // one leg's phase got negated
        int neg = 0;
        for (VertexId l : c.legs)
            if (d.phase(l) == Phase(7)) neg++;
        CHECK(neg == 1);
    }
    SUBCASE("cat4 embedded keeps the semantics") {
        Rng rng(217);
        Embedded e = embed_cat(rng, 4, /*center_phase=*/4);
        Diagram before = e.d;
        auto c = candidate_of(e.d, e.hub);
        normalize_cat_pi(e.d, c);
        CHECK(zxamp::testing::oracle_distance(before, e.d) < 1e-9);
        auto terms = apply_cat_decomp(e.d, c);
        CHECK(decomp_distance(before, terms) < 1e-9);
    }
    SUBCASE("center already 0 is a precondition error") {
        Diagram d = cat_state(3, 0);
        auto c = candidate_of(d, 0);
        CHECK_THROWS_AS(normalize_cat_pi(d, c), std::invalid_argument);
    }
}

TEST_CASE("unfuse_t") {
    Diagram d;
    VertexId v = d.add_z(Phase(3));
    VertexId o = d.add_output();
    d.add_edge(v, o, EdgeKind::Plain);
    Diagram before = d;
    VertexId leaf = unfuse_t(d, v);
    CHECK(d.phase(v) == Phase(2));
    CHECK(d.phase(leaf) == Phase(1));
    CHECK(d.tcount() == 1);
    CHECK(zxamp::testing::oracle_distance(before, d) < 1e-12);

    Diagram even;
    VertexId w = even.add_z(Phase(2));
    CHECK_THROWS_AS(unfuse_t(even, w), std::invalid_argument);
}

TEST_CASE("partial 5T decomposition") {
    SUBCASE("standalone |T>^5: 3 terms, each keeps one odd spider") {
        Diagram d = t_state(5);
        auto targets = odd_spiders(d);
        auto terms = apply_t5_partial(d, targets);
        CHECK(terms.size() == 3);
        CHECK(decomp_distance(d, terms) < 1e-10);
        for (const auto& t : terms) CHECK(t.diagram.tcount() == 1);
    }
    SUBCASE("embedded: T-count drops by exactly 4 per term") {
        Rng rng(219);
        for (int trial = 0; trial < 10; trial++) {
            Diagram d = random_graph_like(rng, 7, 2);
            auto odd = odd_spiders(d);
            while (odd.size() < 5) {
                // force more odd spiders
                for (VertexId v = 0; v < d.vertex_bound() && odd.size() < 5; v++)
                    if (d.is_spider(v) && !d.phase(v).is_t_like()) {
                        d.add_to_phase(v, Phase(1));
                        odd.push_back(v);
                    }
            }
            odd.resize(5);
            auto terms = apply_t5_partial(d, odd);
            CHECK(terms.size() == 3);
            CHECK(decomp_distance(d, terms) < 1e-9);
            for (const auto& t : terms)
                CHECK(t.diagram.tcount() == d.tcount() - 4);
        }
    }
    SUBCASE("fewer than 5 targets is an error") {
        Diagram d = t_state(4);
        CHECK_THROWS_AS(apply_t5_partial(d, odd_spiders(d)), std::invalid_argument);
    }
}

TEST_CASE("fallback decompositions") {
    SUBCASE("single T: |T> = (|0> + w |1>)/sqrt2 as two weighted terms") {
        Diagram d = t_state(1);
        auto terms = apply_fallback(d, StrategyKind::Naive, odd_spiders(d));
        CHECK(terms.size() == 2);
        CHECK(decomp_distance(d, terms) < 1e-12);
        for (const auto& t : terms) CHECK(t.diagram.tcount() == 0);
        // the two weights are 1/sqrt2 and w/sqrt2
        CHECK(terms[0].weight == ExactScalar::sqrt2_power(-1));
        CHECK(terms[1].weight ==
              ExactScalar::sqrt2_power(-1) * ExactScalar::from_phase(1));
    }
    SUBCASE("two T: 2 terms") {
        Diagram d = t_state(2);
        auto terms = apply_fallback(d, StrategyKind::CatsThenPartial, odd_spiders(d));
        CHECK(terms.size() == 2);
        CHECK(decomp_distance(d, terms) < 1e-12);
        for (const auto& t : terms) CHECK(t.diagram.tcount() == 0);
    }
    SUBCASE("six T under BSS: 7 terms") {
        Diagram d = t_state(6);
        auto terms = apply_fallback(d, StrategyKind::BSS, odd_spiders(d));
        CHECK(terms.size() == 7);
        CHECK(decomp_distance(d, terms) < 1e-10);
        for (const auto& t : terms) CHECK(t.diagram.tcount() == 0);
    }
    SUBCASE("embedded fallbacks stay sound") {
        Rng rng(223);
        for (int trial = 0; trial < 10; trial++) {
            Diagram d = random_graph_like(rng, 8, 2);
            auto odd = odd_spiders(d);
            if (odd.size() < 6) continue;
            odd.resize(6);
            auto terms = apply_fallback(d, StrategyKind::BSS, odd);
            CHECK(terms.size() == 7);
            CHECK(decomp_distance(d, terms) < 1e-9);
        }
    }
}

TEST_CASE("strategy candidate priority") {
    SUBCASE("cat4 wins over cat6") {
        Diagram d;
        // two hubs: arity 4 and arity 6, disjoint legs
        VertexId h4 = d.add_z();
        for (int i = 0; i < 4; i++) {
            VertexId leg = d.add_z(Phase(1));
            d.add_edge(h4, leg, EdgeKind::Hadamard);
        }
        VertexId h6 = d.add_z();
        for (int i = 0; i < 6; i++) {
            VertexId leg = d.add_z(Phase(1));
            d.add_edge(h6, leg, EdgeKind::Hadamard);
        }
        auto sel = find_best_candidate(d, StrategyKind::CatsThenPartial);
        REQUIRE(sel.has_value());
        CHECK(sel->kind == DecompKind::Cat4);
        CHECK(sel->cat->center == h4);
    }
    SUBCASE("priority order cat4 > cat6 > cat5 > cat3") {
        auto build = [&](std::vector<int> arities) {
            Diagram d;
            for (int a : arities) {
                VertexId h = d.add_z();
                for (int i = 0; i < a; i++) {
                    VertexId leg = d.add_z(Phase(1));
                    d.add_edge(h, leg, EdgeKind::Hadamard);
                }
            }
            return d;
        };
        auto kind_of = [&](std::vector<int> arities) {
            auto sel = find_best_candidate(build(arities), StrategyKind::CatsThenPartial);
            REQUIRE(sel.has_value());
            return sel->kind;
        };
        CHECK(kind_of({6, 5}) == DecompKind::Cat6);
        CHECK(kind_of({5, 3}) == DecompKind::Cat5);
        CHECK(kind_of({3}) == DecompKind::Cat3);
        CHECK(kind_of({3, 4, 5, 6}) == DecompKind::Cat4);
    }
    SUBCASE("no cats, 7 odd spiders picks the partial decomposition") {
        Diagram d = t_state(7);
        auto sel = find_best_candidate(d, StrategyKind::CatsThenPartial);
        REQUIRE(sel.has_value());
        CHECK(sel->kind == DecompKind::Partial5T);
        CHECK(sel->targets.size() == 5);
    }
    SUBCASE("2 odd spiders and no cats falls back pairwise") {
        Diagram d = t_state(2);
        auto sel = find_best_candidate(d, StrategyKind::CatsThenPartial);
        REQUIRE(sel.has_value());
        CHECK(sel->kind == DecompKind::TPair);
    }
    SUBCASE("T-count 0 yields no candidate") {
        Diagram d = t_state(0);
        CHECK(!find_best_candidate(d, StrategyKind::CatsThenPartial).has_value());
    }
    SUBCASE("phase gadget matches as a cat with the leaf as a leg") {
        // 3-legged gadget = cat4 shape: hub with 3 qubit spiders + 1 leaf
        Diagram d;
        VertexId hub = d.add_z();
        VertexId leaf = d.add_z(Phase(1));
        d.add_edge(hub, leaf, EdgeKind::Hadamard);
        for (int i = 0; i < 3; i++) {
            VertexId q = d.add_z(Phase(1));
            VertexId o = d.add_output();
            d.add_edge(q, o, EdgeKind::Plain);
            d.add_edge(hub, q, EdgeKind::Hadamard);
        }
        auto sel = find_best_candidate(d, StrategyKind::CatsThenPartial);
        REQUIRE(sel.has_value());
        CHECK(sel->kind == DecompKind::Cat4);
        CHECK(sel->cat->center == hub);
    }
    SUBCASE("bss strategy takes 6 odd spiders when available") {
        Diagram d = t_state(8);
        auto sel = find_best_candidate(d, StrategyKind::BSS);
        REQUIRE(sel.has_value());
        CHECK(sel->kind == DecompKind::Bss6);
        CHECK(sel->targets.size() == 6);
    }
}

TEST_CASE("effective alpha") {
    CHECK(effective_alpha(4, 2) == doctest::Approx(0.25));
    CHECK(effective_alpha(1, 2) == doctest::Approx(1.0));
    CHECK(effective_alpha(4, 3) == doctest::Approx(std::log2(3.0) / 4));
    CHECK_THROWS_AS(effective_alpha(0, 1), std::invalid_argument);
}

TEST_CASE("strategy ordering matches the alpha ranking") {
    // alpha values: cat4 0.25 < cat6 ~0.264 < cat5 ~0.317 < cat3 ~0.333 < partial ~0.396
    CHECK(0.25 < std::log2(3.0) / 6);
    CHECK(std::log2(3.0) / 6 < std::log2(3.0) / 5);
    CHECK(std::log2(3.0) / 5 < std::log2(2.0) / 3);
    CHECK(std::log2(2.0) / 3 < std::log2(3.0) / 4);
}
