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

#include "zxamp/driver.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zxamp/circuit.hpp"
#include "zxamp/simplify.hpp"

namespace zxamp {

ExactScalar reduce_clifford_scalar(Diagram d) {
    if (d.tcount() != 0)
        throw std::invalid_argument("reduce_clifford_scalar: non-Clifford spider present");
    if (!d.inputs().empty() || !d.outputs().empty())
        throw std::invalid_argument("reduce_clifford_scalar: diagram is not closed");
    full_simplify(d);
    if (d.num_vertices() != 0)
        throw std::logic_error("reduce_clifford_scalar: fixpoint left vertices behind");
    return d.scalar();
}

namespace {

struct Shared {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<std::pair<Diagram, uint32_t>> queue; // (reduced diagram, depth)
    unsigned working = 0;
    SimOptions opts;
    std::mutex trace_mu;

    // merged on completion
    std::mutex acc_mu;
    ExactScalar total;
    RunStats stats;
};

class Worker {
  public:
    explicit Worker(Shared& sh) : sh_(sh) {}

    void run() {
        for (;;) {
            std::unique_lock lk(sh_.mu);
            sh_.cv.wait(lk, [&] { return !sh_.queue.empty() || sh_.working == 0; });
            if (sh_.queue.empty()) {
                if (sh_.working == 0) {
                    sh_.cv.notify_all();
                    break;
                }
                continue;
            }
            auto [d, depth] = std::move(sh_.queue.front());
            sh_.queue.pop_front();
            sh_.working++;
            lk.unlock();

            descend(std::move(d), depth);

            lk.lock();
            sh_.working--;
            if (sh_.queue.empty() && sh_.working == 0) sh_.cv.notify_all();
        }
        merge();
    }

  private:
    Shared& sh_;
    std::vector<std::pair<Diagram, uint32_t>> local_;
    ExactScalar sum_;
    uint64_t leaves_ = 0;
    uint64_t max_depth_ = 0;
    std::array<uint64_t, 8> by_kind_{};

    // child diagrams arrive already reduced; T-count 0 and zero-scalar
    // branches are consumed immediately as leaves
    void settle(Diagram&& d, uint32_t depth, bool may_handoff) {
        max_depth_ = std::max<uint64_t>(max_depth_, depth);
        if (d.scalar().is_zero()) {
            leaves_++;
            return;
        }
        if (d.tcount() == 0) {
            full_simplify(d); // residual Clifford structure drains to a scalar
            if (d.num_vertices() != 0)
                throw std::logic_error("amplitude: Clifford leaf did not reduce");
            sum_ += d.scalar();
            leaves_++;
            return;
        }
        if (may_handoff && depth < 12 && sh_.opts.workers > 1) {
            std::lock_guard lk(sh_.mu);
            if (sh_.queue.size() < 2 * sh_.opts.workers) {
                sh_.queue.push_back({std::move(d), depth});
                sh_.cv.notify_one();
                return;
            }
        }
        local_.push_back({std::move(d), depth});
    }

    void descend(Diagram d, uint32_t depth) {
        settle(std::move(d), depth, /*may_handoff=*/false);
        while (!local_.empty()) {
            auto [cur, cur_depth] = std::move(local_.back());
            local_.pop_back();
            expand(std::move(cur), cur_depth);
        }
    }

    void expand(Diagram d, uint32_t depth) {
        auto sel = find_best_candidate(d, sh_.opts.strategy);
        if (!sel.has_value())
            throw std::logic_error("amplitude: no candidate on a non-Clifford diagram");
        auto terms = apply_selection(d, *sel, sh_.opts.strategy);
        by_kind_[static_cast<size_t>(sel->kind)]++;
        if (sh_.opts.trace) {
            std::lock_guard lk(sh_.trace_mu);
            (*sh_.opts.trace) << decomp_kind_name(sel->kind) << " arity="
                              << (sel->cat ? sel->cat->arity() : sel->targets.size())
                              << " branches=" << terms.size() << "\n";
        }
        SimplifyOptions sopts;
        sopts.gadget_fusion = sh_.opts.gadget_fusion;
        for (auto& term : terms) {
            term.diagram.scalar_mul(term.weight);
            full_simplify_seeded(term.diagram, term.touched, sopts);
            settle(term.diagram.compacted(), depth + 1, /*may_handoff=*/true);
        }
    }

    void merge() {
        std::lock_guard lk(sh_.acc_mu);
        sh_.total += sum_;
        sh_.stats.leaf_terms += leaves_;
        sh_.stats.max_depth = std::max(sh_.stats.max_depth, max_depth_);
        for (size_t i = 0; i < by_kind_.size(); i++)
            sh_.stats.decompositions_by_kind[i] += by_kind_[i];
    }
};

} // namespace

SimResult amplitude(Diagram d, const SimOptions& opts) {
    if (!d.inputs().empty() || !d.outputs().empty())
        throw std::invalid_argument("amplitude: open boundary wires present");
    auto t0 = std::chrono::steady_clock::now();

    d.to_graph_like();
    uint64_t initial_t = d.tcount();

    Shared sh;
    sh.opts = opts;
    if (sh.opts.workers == 0) sh.opts.workers = 1;
    sh.stats.initial_t = initial_t;

    SimplifyOptions sopts;
    sopts.gadget_fusion = opts.gadget_fusion;
    full_simplify(d, sopts);
    {
        std::lock_guard lk(sh.mu);
        sh.queue.push_back({d.compacted(), 0});
    }

    if (sh.opts.workers == 1) {
        Worker(sh).run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < sh.opts.workers; i++)
            pool.emplace_back([&sh] { Worker(sh).run(); });
        for (auto& th : pool) th.join();
    }

    SimResult res;
    res.amplitude = sh.total;
    res.stats = sh.stats;
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.stats.effective_alpha =
        initial_t == 0 ? 0.0 : effective_alpha(initial_t, res.stats.leaf_terms);
    return res;
}

SimResult run_simulation(const Circuit& c, std::string_view in_spec,
                         std::string_view out_spec, const SimOptions& opts) {
    return amplitude(circuit_to_diagram(c, in_spec, out_spec), opts);
}

} // namespace zxamp
