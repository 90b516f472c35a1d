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
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zxamp/circuit.hpp"
#include "zxamp/driver.hpp"
#include "zxamp/simplify.hpp"

namespace {

using namespace zxamp;

StrategyKind parse_strategy(const std::string& name) {
    auto s = strategy_from_name(name);
    if (!s.has_value())
        throw CLI::ValidationError("--strategy", "must be one of cats, bss, naive");
    return *s;
}

void print_result(const SimResult& res) {
    auto amp = res.amplitude.to_complex();
    std::cout << "amplitude_exact: " << res.amplitude.to_string() << "\n";
    std::cout << "amplitude: " << amp.real() << (amp.imag() < 0 ? " - " : " + ")
              << std::abs(amp.imag()) << "i\n";
    std::cout << "initial_t: " << res.stats.initial_t << "\n";
    std::cout << "leaf_terms: " << res.stats.leaf_terms << "\n";
    std::cout << "effective_alpha: " << res.stats.effective_alpha << "\n";
    std::cout << "max_depth: " << res.stats.max_depth << "\n";
    std::cout << "wall_seconds: " << res.stats.wall_seconds << "\n";
    std::cout << "decompositions:";
    for (int k = 0; k < 8; k++) {
        uint64_t n = res.stats.decompositions_by_kind[k];
        if (n)
            std::cout << " " << decomp_kind_name(static_cast<DecompKind>(k)) << "=" << n;
    }
    std::cout << "\n";
}

struct BenchRecord {
    std::string id;
    uint32_t qubits;
    uint64_t t_count;
    std::string strategy;
    uint64_t seed;
    double wall_ms;
    uint64_t leaf_terms;
    double effective_alpha;
    std::complex<double> amp;
};

void write_record(std::ostream& os, const BenchRecord& r) {
    os << r.id << "," << r.qubits << "," << r.t_count << "," << r.strategy << ","
       << r.seed << "," << r.wall_ms << "," << r.leaf_terms << "," << r.effective_alpha
       << "," << r.amp.real() << "," << r.amp.imag() << "\n";
}

void write_summary(const std::vector<BenchRecord>& records) {
    if (records.empty()) return;
    double mean = 0, var = 0;
    for (const auto& r : records) mean += std::log10(std::max(r.wall_ms, 1e-6));
    mean /= static_cast<double>(records.size());
    for (const auto& r : records) {
        double d = std::log10(std::max(r.wall_ms, 1e-6)) - mean;
        var += d * d;
    }
    var /= static_cast<double>(records.size());
    std::cerr << "# log10(wall_ms): mean=" << mean << " variance=" << var << " over "
              << records.size() << " runs\n";
}

int run_simulate(const std::string& qasm_path, const std::string& in_spec,
                 const std::string& out_spec, StrategyKind strategy, unsigned workers,
                 bool dump_diagram, bool trace, bool log_rewrites, bool gadget_fusion) {
    std::ifstream f(qasm_path);
    if (!f) {
        std::cerr << "error: cannot open " << qasm_path << "\n";
        return 3;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    Circuit c = parse_qasm(buf.str());
    std::string in = in_spec.empty() ? std::string(c.qubits, '0') : in_spec;
    std::string out = out_spec.empty() ? std::string(c.qubits, '0') : out_spec;
    Diagram d = circuit_to_diagram(c, in, out);
    d.to_graph_like();
    if (dump_diagram) std::cout << d.serialize();
    if (log_rewrites) {
        // reduce a copy once with a log, then replay-check it
        Diagram copy = d;
        RewriteLog log;
        SimplifyOptions opts;
        opts.log = &log;
        opts.gadget_fusion = gadget_fusion;
        full_simplify(copy, opts);
        for (const auto& step : log) {
            std::cout << "rewrite: " << rule_name(step.rule);
            for (VertexId v : step.verts) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    SimOptions opts;
    opts.strategy = strategy;
    opts.workers = workers;
    opts.gadget_fusion = gadget_fusion;
    opts.trace = trace ? &std::cerr : nullptr;
    SimResult res = amplitude(std::move(d), opts);
    print_result(res);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Clifford+T amplitudes via ZX-calculus stabiliser decompositions"};
    app.require_subcommand(1);

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "compute one closed-diagram amplitude");
    std::string qasm_path, in_spec, out_spec, strategy_name = "cats";
    unsigned workers = 1;
    uint64_t seed = 0;
    bool dump_diagram = false, trace = false, log_rewrites = false, gadget_fusion = false;
    sim->add_option("--qasm", qasm_path, "path to a QASM file")->required();
    sim->add_option("--in", in_spec, "input product state over {0,1,+,-}");
    sim->add_option("--out", out_spec, "output product effect over {0,1,+,-}");
    sim->add_option("--strategy", strategy_name, "cats | bss | naive");
    sim->add_option("--workers", workers, "worker threads");
    sim->add_option("--seed", seed, "unused by simulate; accepted for symmetry");
    sim->add_flag("--dump-diagram", dump_diagram, "print the graph-like diagram");
    sim->add_flag("--trace", trace, "print one line per applied decomposition");
    sim->add_flag("--log-rewrites", log_rewrites, "print the simplifier rewrite log");
    sim->add_flag("--gadget-fusion", gadget_fusion,
                  "enable the gadget pipeline (pivot-gadget + fusion)");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "run benchmark sweeps, CSV to stdout");
    bench->require_subcommand(1);
    std::string bench_strategy = "cats", out_file;
    unsigned bench_workers = 1;
    uint64_t bench_seed = 1;
    bool bench_gadget_fusion = false;

    auto* ct = bench->add_subcommand("cliffordt", "random Clifford+T sweep");
    uint32_t ct_qubits = 20, ct_tmax = 43, ct_step = 3, ct_reps = 10;
    ct->add_option("--qubits", ct_qubits, "qubit count")->required();
    ct->add_option("--tmax", ct_tmax, "largest T-count")->required();
    ct->add_option("--step", ct_step, "T-count step");
    ct->add_option("--reps", ct_reps, "instances per T-count");

    auto* hs = bench->add_subcommand("hiddenshift", "hidden-shift instances");
    uint32_t hs_qubits = 20, hs_ccz = 16, hs_count = 10;
    hs->add_option("--qubits", hs_qubits, "qubit count (even)")->required();
    hs->add_option("--ccz", hs_ccz, "CCZ occurrences (even)")->required();
    hs->add_option("--count", hs_count, "number of instances");

    for (auto* b : {ct, hs}) {
        b->add_option("--strategy", bench_strategy, "cats | bss | naive");
        b->add_option("--seed", bench_seed, "base seed");
        b->add_option("--workers", bench_workers, "worker threads");
        b->add_option("--out", out_file, "write CSV to a file instead of stdout");
        b->add_flag("--gadget-fusion", bench_gadget_fusion,
                    "enable the gadget pipeline (pivot-gadget + fusion)");
    }

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "emit generated benchmark circuits");
    gen->require_subcommand(1);
    std::string gen_qasm_out, gen_diagram_out;
    uint64_t gen_seed = 1;
    auto* gct = gen->add_subcommand("cliffordt", "random Clifford+T circuit");
    uint32_t gct_qubits = 20, gct_t = 10;
    gct->add_option("--qubits", gct_qubits)->required();
    gct->add_option("--t", gct_t, "T-count")->required();
    auto* ghs = gen->add_subcommand("hiddenshift", "hidden-shift circuit");
    uint32_t ghs_qubits = 20, ghs_ccz = 16;
    ghs->add_option("--qubits", ghs_qubits)->required();
    ghs->add_option("--ccz", ghs_ccz)->required();
    for (auto* g : {gct, ghs}) {
        g->add_option("--seed", gen_seed, "seed");
        g->add_option("--qasm-out", gen_qasm_out, "write QASM here (default stdout)");
        g->add_option("--diagram-out", gen_diagram_out, "also write the diagram text");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) {
            return run_simulate(qasm_path, in_spec, out_spec,
                                parse_strategy(strategy_name), workers, dump_diagram,
                                trace, log_rewrites, gadget_fusion);
        }
        if (bench->parsed()) {
            StrategyKind strat = parse_strategy(bench_strategy);
            std::ofstream file_out;
            std::ostream* os = &std::cout;
            if (!out_file.empty()) {
                file_out.open(out_file);
                if (!file_out) {
                    std::cerr << "error: cannot open " << out_file << "\n";
                    return 3;
                }
                os = &file_out;
            }
            (*os) << "id,qubits,t_count,strategy,seed,wall_ms,leaf_terms,"
                     "effective_alpha,amp_re,amp_im\n";
            std::vector<BenchRecord> records;
            auto run_one = [&](const std::string& id, const Circuit& c,
                               const std::string& in, const std::string& out,
                               uint64_t used_seed) {
                Diagram d = circuit_to_diagram(c, in, out);
                SimOptions opts;
                opts.strategy = strat;
                opts.workers = bench_workers;
                opts.gadget_fusion = bench_gadget_fusion;
                SimResult res = amplitude(std::move(d), opts);
                BenchRecord r{id,
                              c.qubits,
                              c.tcount(),
                              zxamp::strategy_name(strat),
                              used_seed,
                              res.stats.wall_seconds * 1000.0,
                              res.stats.leaf_terms,
                              res.stats.effective_alpha,
                              res.amplitude.to_complex()};
                write_record(*os, r);
                os->flush();
                records.push_back(r);
            };
            if (ct->parsed()) {
                uint64_t idx = 0;
                for (uint32_t t = 1; t <= ct_tmax; t += ct_step)
                    for (uint32_t rep = 0; rep < ct_reps; rep++, idx++) {
                        uint64_t s = bench_seed + idx;
                        Circuit c = gen_random_cliffordt(ct_qubits, t, s);
                        std::string spec(ct_qubits, '+');
                        run_one("ct-t" + std::to_string(t) + "-r" + std::to_string(rep),
                                c, spec, spec, s);
                    }
            } else {
                for (uint32_t i = 0; i < hs_count; i++) {
                    uint64_t s = bench_seed + i;
                    auto inst = gen_hidden_shift(hs_qubits, hs_ccz, s);
                    std::string in(hs_qubits, '0'), out(hs_qubits, '0');
                    for (uint32_t q = 0; q < hs_qubits; q++)
                        out[q] = inst.shift[q] ? '1' : '0';
                    run_one("hs-" + std::to_string(i), inst.circuit, in, out, s);
                }
            }
            write_summary(records);
            return 0;
        }
        if (gen->parsed()) {
            Circuit c;
            std::string shift_note;
            if (gct->parsed()) {
                c = gen_random_cliffordt(gct_qubits, gct_t, gen_seed);
            } else {
                auto inst = gen_hidden_shift(ghs_qubits, ghs_ccz, gen_seed);
                c = inst.circuit;
                shift_note = "// shift: ";
                for (auto b : inst.shift) shift_note += b ? '1' : '0';
                shift_note += "\n";
            }
            std::string qasm = shift_note + to_qasm(c);
            if (gen_qasm_out.empty()) {
                std::cout << qasm;
            } else {
                std::ofstream qf(gen_qasm_out);
                qf << qasm;
            }
            if (!gen_diagram_out.empty()) {
                Diagram d = circuit_to_diagram(c);
                d.to_graph_like();
                std::ofstream df(gen_diagram_out);
                df << d.serialize();
            }
            return 0;
        }
    } catch (const QasmError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
