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

#include "zxamp/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace zxamp {

VertexId Diagram::add_vertex(VertexKind kind, Phase phase) {
    VertexData d;
    d.kind = kind;
    d.phase = phase;
    d.alive = true;
    verts_.push_back(std::move(d));
    alive_count_++;
    VertexId v = static_cast<VertexId>(verts_.size() - 1);
    if (counts_t(v)) tcount_++;
    return v;
}

void Diagram::remove_vertex(VertexId v) {
    assert(alive(v));
    if (counts_t(v)) tcount_--;
    // detach from neighbours
    for (auto& [w, k] : verts_[v].nbrs) {
        if (w == v) continue; // self-loop entries vanish with the vertex
        auto& wn = verts_[w].nbrs;
        for (size_t i = 0; i < wn.size(); i++) {
            if (wn[i].first == v && wn[i].second == k) {
                wn[i] = wn.back();
                wn.pop_back();
                break;
            }
        }
    }
    verts_[v].nbrs.clear();
    verts_[v].alive = false;
    alive_count_--;
}

void Diagram::set_phase(VertexId v, Phase p) {
    bool was = counts_t(v);
    verts_[v].phase = p;
    bool now = counts_t(v);
    if (was && !now) tcount_--;
    if (!was && now) tcount_++;
}

size_t Diagram::num_spiders() const {
    size_t n = 0;
    for (VertexId v = 0; v < verts_.size(); v++)
        if (is_spider(v)) n++;
    return n;
}

bool Diagram::internal(VertexId v) const {
    if (!is_spider(v)) return false;
    for (const auto& [w, k] : verts_[v].nbrs)
        if (verts_[w].kind == VertexKind::Boundary) return false;
    return true;
}

void Diagram::add_edge(VertexId u, VertexId v, EdgeKind k) {
    assert(alive(u) && alive(v));
    verts_[u].nbrs.push_back({v, k});
    if (u == v)
        verts_[u].nbrs.push_back({v, k}); // loops occupy two endpoints
    else
        verts_[v].nbrs.push_back({u, k});
}

void Diagram::detach_entry(VertexId from, VertexId to, EdgeKind k) {
    auto& n = verts_[from].nbrs;
    for (size_t i = 0; i < n.size(); i++) {
        if (n[i].first == to && n[i].second == k) {
            n[i] = n.back();
            n.pop_back();
            return;
        }
    }
    assert(false && "edge entry not found");
}

void Diagram::remove_edge(VertexId u, VertexId v, EdgeKind k) {
    detach_entry(u, v, k);
    detach_entry(v, u, k);
}

bool Diagram::has_edge(VertexId u, VertexId v) const {
    const auto& a = verts_[u].nbrs;
    const auto& b = verts_[v].nbrs;
    const auto& n = a.size() <= b.size() ? a : b;
    VertexId t = a.size() <= b.size() ? v : u;
    for (const auto& [w, k] : n)
        if (w == t) return true;
    return false;
}

std::optional<EdgeKind> Diagram::edge_kind(VertexId u, VertexId v) const {
    for (const auto& [w, k] : verts_[u].nbrs)
        if (w == v) return k;
    return std::nullopt;
}

void Diagram::toggle_h_edge(VertexId u, VertexId v) {
    assert(u != v);
    auto k = edge_kind(u, v);
    if (k.has_value()) {
        assert(*k == EdgeKind::Hadamard);
        remove_edge(u, v, EdgeKind::Hadamard);
    } else {
        add_edge(u, v, EdgeKind::Hadamard);
    }
}

void Diagram::for_each_edge(
    const std::function<void(VertexId, VertexId, EdgeKind)>& fn) const {
    for (VertexId v = 0; v < verts_.size(); v++) {
        if (!verts_[v].alive) continue;
        int self_seen[2] = {0, 0};
        for (const auto& [w, k] : verts_[v].nbrs) {
            if (w > v) {
                fn(v, w, k);
            } else if (w == v) {
                // two entries per loop; report once
                int idx = k == EdgeKind::Hadamard ? 1 : 0;
                if (self_seen[idx]++ % 2 == 0) fn(v, v, k);
            }
        }
    }
}

size_t Diagram::num_edges() const {
    size_t n = 0;
    for_each_edge([&](VertexId, VertexId, EdgeKind) { n++; });
    return n;
}

void Diagram::resolve_self_loop(VertexId v, EdgeKind k) {
    if (k == EdgeKind::Hadamard) {
        add_to_phase(v, Phase(4));
        scalar_ *= ExactScalar::sqrt2_power(-1);
    }
    // plain self-loop is the identity
}

void Diagram::add_edge_smart(VertexId u, VertexId v, EdgeKind k) {
    assert(alive(u) && alive(v));
    if (u == v) {
        resolve_self_loop(u, k);
        return;
    }
    bool u_b = is_boundary(u), v_b = is_boundary(v);
    if (u_b || v_b) {
        assert(k == EdgeKind::Plain && "boundaries attach by plain wires");
        add_edge(u, v, k);
        return;
    }
    if (k == EdgeKind::Plain) {
        fuse_into(u, v);
        return;
    }
    // Hadamard between spiders: parallel pair cancels, scalar 1/2
    auto existing = edge_kind(u, v);
    if (existing.has_value()) {
        assert(*existing == EdgeKind::Hadamard);
        remove_edge(u, v, EdgeKind::Hadamard);
        scalar_ *= ExactScalar::sqrt2_power(-2);
        return;
    }
    add_edge(u, v, EdgeKind::Hadamard);
}

void Diagram::fuse_into(VertexId u, VertexId v) {
    assert(u != v);
    assert(verts_[u].kind == VertexKind::ZSpider && verts_[v].kind == VertexKind::ZSpider);
    add_to_phase(u, verts_[v].phase);
    // move v's edges (other than one connecting plain wire, which is consumed)
    std::vector<Nbr> moved = verts_[v].nbrs;
    bool consumed = false;
    // drop exactly one plain u-v entry pair if present (the fusing wire)
    for (size_t i = 0; i < moved.size(); i++) {
        if (moved[i].first == u && moved[i].second == EdgeKind::Plain) {
            moved[i] = moved.back();
            moved.pop_back();
            consumed = true;
            break;
        }
    }
    (void)consumed;
    // detach v entirely, then replay the surviving edges onto u
    // (self-loops on v appear twice in moved; replay each loop once)
    int self_plain = 0, self_h = 0;
    for (auto& [w, k] : moved) {
        if (w == v) {
            int& c = k == EdgeKind::Hadamard ? self_h : self_plain;
            c++;
        }
    }
    std::vector<Nbr> replay;
    for (auto& [w, k] : moved)
        if (w != v) replay.push_back({w, k});
    for (int i = 0; i < self_plain / 2; i++) replay.push_back({u, EdgeKind::Plain});
    for (int i = 0; i < self_h / 2; i++) replay.push_back({u, EdgeKind::Hadamard});
    remove_vertex(v);
    for (auto& [w, k] : replay)
        add_edge_smart(u, w, k);
}

VertexId Diagram::add_input() {
    VertexId v = add_vertex(VertexKind::Boundary);
    inputs_.push_back(v);
    return v;
}

VertexId Diagram::add_output() {
    VertexId v = add_vertex(VertexKind::Boundary);
    outputs_.push_back(v);
    return v;
}

Diagram Diagram::tensor(const Diagram& d1, const Diagram& d2) {
    Diagram r = d1;
    VertexId off = static_cast<VertexId>(r.verts_.size());
    r.verts_.reserve(r.verts_.size() + d2.verts_.size());
    for (const auto& vd : d2.verts_) {
        VertexData nd = vd;
        for (auto& [w, k] : nd.nbrs) w += off;
        r.verts_.push_back(std::move(nd));
    }
    for (VertexId b : d2.inputs_) r.inputs_.push_back(b + off);
    for (VertexId b : d2.outputs_) r.outputs_.push_back(b + off);
    r.scalar_ *= d2.scalar_;
    r.tcount_ += d2.tcount_;
    r.alive_count_ += d2.alive_count_;
    return r;
}

Diagram Diagram::compose(const Diagram& d1, const Diagram& d2) {
    if (d1.outputs_.size() != d2.inputs_.size())
        throw std::invalid_argument("compose: boundary arity mismatch (" +
                                    std::to_string(d1.outputs_.size()) + " outputs vs " +
                                    std::to_string(d2.inputs_.size()) + " inputs)");
    Diagram r = tensor(d1, d2);
    VertexId off = static_cast<VertexId>(d1.verts_.size());
    // boundary lists of the result
    r.inputs_ = d1.inputs_;
    r.outputs_.clear();
    for (VertexId b : d2.outputs_) r.outputs_.push_back(b + off);

    for (size_t idx = 0; idx < d1.outputs_.size(); idx++) {
        VertexId o = d1.outputs_[idx];
        VertexId i = d2.inputs_[idx] + off;
        assert(r.verts_[o].nbrs.size() == 1 && r.verts_[i].nbrs.size() == 1);
        auto [x, kx] = r.verts_[o].nbrs[0];
        if (x == i) {
            // the two boundaries are wired straight to each other: closing
            // this pair makes a circle, worth 2 for a plain wire, 0 for H
            r.scalar_ *= kx == EdgeKind::Plain ? ExactScalar::from_int(2)
                                               : ExactScalar::zero();
            r.remove_vertex(o);
            r.remove_vertex(i);
            continue;
        }
        auto [y, ky] = r.verts_[i].nbrs[0];
        r.remove_vertex(o);
        r.remove_vertex(i);
        r.add_edge(x, y, kx ^ ky);
    }
    return r;
}

bool Diagram::is_graph_like() const {
    for (VertexId v = 0; v < verts_.size(); v++) {
        if (!verts_[v].alive) continue;
        const auto& d = verts_[v];
        if (d.kind == VertexKind::XSpider || d.kind == VertexKind::HBox) return false;
        if (d.kind == VertexKind::Boundary) {
            if (d.nbrs.size() != 1) return false;
            if (d.nbrs[0].second != EdgeKind::Plain) return false;
            continue;
        }
        // Z spider: no self-loops, no parallel edges, spider-spider edges H,
        // boundary edges plain
        std::vector<VertexId> seen;
        for (const auto& [w, k] : d.nbrs) {
            if (w == v) return false;
            if (std::find(seen.begin(), seen.end(), w) != seen.end()) return false;
            seen.push_back(w);
            bool nb_boundary = verts_[w].kind == VertexKind::Boundary;
            if (nb_boundary && k != EdgeKind::Plain) return false;
            if (!nb_boundary && k != EdgeKind::Hadamard) return false;
        }
    }
    return true;
}

void Diagram::to_graph_like() {
    // 1. internalise H-boxes as Hadamard wires (to fixpoint: chains collapse)
    bool hboxes = true;
    while (hboxes) {
        hboxes = false;
        for (VertexId h = 0; h < verts_.size(); h++) {
            if (!verts_[h].alive || verts_[h].kind != VertexKind::HBox) continue;
            hboxes = true;
            auto& n = verts_[h].nbrs;
            if (n.size() != 2) throw std::logic_error("H-box without exactly 2 endpoints");
            auto [a, ka] = n[0];
            auto [b, kb] = n[1];
            if (a == h && b == h) {
                // closed H-circle: trace(H) = 0
                scalar_ = ExactScalar::zero();
                remove_vertex(h);
                continue;
            }
            remove_vertex(h);
            add_edge(a, b, ka ^ kb ^ EdgeKind::Hadamard);
        }
    }

    // 2. colour change: X spiders become Z, each incident edge toggled once
    //    per X endpoint (rebuild adjacency from a global edge list)
    {
        std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges;
        for_each_edge([&](VertexId u, VertexId v, EdgeKind k) {
            edges.push_back({u, v, k});
        });
        for (auto& vd : verts_) vd.nbrs.clear();
        for (auto& [u, v, k] : edges) {
            EdgeKind nk = k;
            if (verts_[u].kind == VertexKind::XSpider) nk = nk ^ EdgeKind::Hadamard;
            if (verts_[v].kind == VertexKind::XSpider) nk = nk ^ EdgeKind::Hadamard;
            add_edge(u, v, nk);
        }
        for (auto& vd : verts_)
            if (vd.alive && vd.kind == VertexKind::XSpider) vd.kind = VertexKind::ZSpider;
    }

    // 3. resolve self-loops
    for (VertexId v = 0; v < verts_.size(); v++) {
        if (!verts_[v].alive || verts_[v].kind != VertexKind::ZSpider) continue;
        int loops_p = 0, loops_h = 0;
        auto& n = verts_[v].nbrs;
        for (size_t i = 0; i < n.size();) {
            if (n[i].first == v) {
                (n[i].second == EdgeKind::Hadamard ? loops_h : loops_p)++;
                n[i] = n.back();
                n.pop_back();
            } else {
                i++;
            }
        }
        for (int i = 0; i < loops_h / 2; i++) resolve_self_loop(v, EdgeKind::Hadamard);
    }

    // 4. fuse plain spider-spider wires
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < verts_.size() && !changed; v++) {
            if (!verts_[v].alive || verts_[v].kind != VertexKind::ZSpider) continue;
            for (size_t ei = 0; ei < verts_[v].nbrs.size(); ei++) {
                // copy: the fusion below mutates the adjacency vector
                auto [w, k] = verts_[v].nbrs[ei];
                if (k == EdgeKind::Plain && w != v &&
                    verts_[w].kind == VertexKind::ZSpider) {
                    // fuse w into v: remove the fusing wire first, then merge
                    remove_edge(v, w, EdgeKind::Plain);
                    add_to_phase(v, verts_[w].phase);
                    std::vector<Nbr> moved = verts_[w].nbrs;
                    int self_h = 0;
                    std::vector<Nbr> replay;
                    for (auto& [x, kx] : moved) {
                        if (x == w) {
                            if (kx == EdgeKind::Hadamard) self_h++;
                        } else {
                            replay.push_back({x, kx});
                        }
                    }
                    remove_vertex(w);
                    for (int i = 0; i < self_h / 2; i++)
                        resolve_self_loop(v, EdgeKind::Hadamard);
                    for (auto& [x, kx] : replay) {
                        if (x == v) {
                            resolve_self_loop(v, kx);
                        } else {
                            add_edge(v, x, kx);
                        }
                    }
                    changed = true;
                    break;
                }
            }
        }
    }

    // 5. cancel parallel Hadamard pairs between spiders
    for (VertexId v = 0; v < verts_.size(); v++) {
        if (!verts_[v].alive || verts_[v].kind != VertexKind::ZSpider) continue;
        // count H-edges per neighbour
        auto& n = verts_[v].nbrs;
        std::sort(n.begin(), n.end());
        for (size_t i = 0; i < n.size();) {
            size_t j = i;
            while (j < n.size() && n[j].first == n[i].first && n[j].second == n[i].second)
                j++;
            size_t cnt = j - i;
            VertexId w = n[i].first;
            EdgeKind k = n[i].second;
            if (w > v && verts_[w].kind == VertexKind::ZSpider &&
                k == EdgeKind::Hadamard && cnt >= 2) {
                size_t pairs = cnt / 2;
                for (size_t p = 0; p < pairs; p++) {
                    remove_edge(v, w, EdgeKind::Hadamard);
                    remove_edge(v, w, EdgeKind::Hadamard);
                    scalar_ *= ExactScalar::sqrt2_power(-2);
                }
                // restart the group scan at i (entries shifted)
                std::sort(n.begin(), n.end());
                i = 0;
                continue;
            }
            i = j;
        }
    }

    // 6. boundaries attach by plain wires: buffer H-edges with a phase-0 spider
    for (VertexId b = 0; b < verts_.size(); b++) {
        if (!verts_[b].alive || verts_[b].kind != VertexKind::Boundary) continue;
        assert(verts_[b].nbrs.size() == 1);
        auto [w, k] = verts_[b].nbrs[0];
        if (k == EdgeKind::Hadamard) {
            remove_edge(b, w, EdgeKind::Hadamard);
            VertexId z = add_z();
            add_edge(b, z, EdgeKind::Plain);
            add_edge(z, w, EdgeKind::Hadamard);
        }
    }
}

Diagram Diagram::compacted() const {
    Diagram r;
    r.scalar_ = scalar_;
    std::vector<VertexId> remap(verts_.size(), kNoVertex);
    for (VertexId v = 0; v < verts_.size(); v++)
        if (verts_[v].alive) remap[v] = r.add_vertex(verts_[v].kind, verts_[v].phase);
    for_each_edge([&](VertexId u, VertexId v, EdgeKind k) {
        r.add_edge(remap[u], remap[v], k);
    });
    for (VertexId b : inputs_) r.inputs_.push_back(remap[b]);
    for (VertexId b : outputs_) r.outputs_.push_back(remap[b]);
    return r;
}

size_t Diagram::tcount_recount() const {
    size_t n = 0;
    for (VertexId v = 0; v < verts_.size(); v++)
        if (counts_t(v)) n++;
    return n;
}

std::string Diagram::serialize() const {
    std::ostringstream out;
    out << "zx 1\n";
    out << "s " << scalar_.to_string() << "\n";
    for (VertexId v = 0; v < verts_.size(); v++) {
        if (!verts_[v].alive) continue;
        char k = 'Z';
        switch (verts_[v].kind) {
            case VertexKind::ZSpider: k = 'Z'; break;
            case VertexKind::XSpider: k = 'X'; break;
            case VertexKind::HBox: k = 'H'; break;
            case VertexKind::Boundary: k = 'B'; break;
        }
        out << "v " << v << " " << k << " " << verts_[v].phase.eighths() << "\n";
    }
    for_each_edge([&](VertexId u, VertexId v, EdgeKind k) {
        out << "e " << u << " " << v << " " << (k == EdgeKind::Hadamard ? 'H' : 'P')
            << "\n";
    });
    out << "in";
    for (VertexId b : inputs_) out << " " << b;
    out << "\nout";
    for (VertexId b : outputs_) out << " " << b;
    out << "\n";
    return out.str();
}

Diagram Diagram::deserialize(std::string_view text) {
    Diagram d;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "zx") {
            header = true;
        } else if (tag == "s") {
            std::string rest;
            std::getline(ls, rest);
            d.scalar_ = ExactScalar::parse(rest);
        } else if (tag == "v") {
            uint64_t id;
            std::string kind;
            int ph;
            if (!(ls >> id >> kind >> ph)) throw std::invalid_argument("bad v line");
            while (d.verts_.size() <= id) d.verts_.push_back(VertexData{});
            auto& vd = d.verts_[id];
            if (vd.alive) throw std::invalid_argument("duplicate vertex id");
            vd.alive = true;
            vd.phase = Phase(ph);
            switch (kind[0]) {
                case 'Z': vd.kind = VertexKind::ZSpider; break;
                case 'X': vd.kind = VertexKind::XSpider; break;
                case 'H': vd.kind = VertexKind::HBox; break;
                case 'B': vd.kind = VertexKind::Boundary; break;
                default: throw std::invalid_argument("bad vertex kind");
            }
            d.alive_count_++;
        } else if (tag == "e") {
            uint64_t a, b;
            std::string kind;
            if (!(ls >> a >> b >> kind)) throw std::invalid_argument("bad e line");
            if (a >= d.verts_.size() || b >= d.verts_.size() || !d.verts_[a].alive ||
                !d.verts_[b].alive)
                throw std::invalid_argument("edge references missing vertex");
            d.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b),
                       kind[0] == 'H' ? EdgeKind::Hadamard : EdgeKind::Plain);
        } else if (tag == "in" || tag == "out") {
            uint64_t id;
            auto& list = tag == "in" ? d.inputs_ : d.outputs_;
            while (ls >> id) {
                if (id >= d.verts_.size() || !d.verts_[id].alive)
                    throw std::invalid_argument("boundary references missing vertex");
                list.push_back(static_cast<VertexId>(id));
            }
        } else {
            throw std::invalid_argument("unknown line tag: " + tag);
        }
    }
    if (!header) throw std::invalid_argument("missing zx header");
    d.tcount_ = d.tcount_recount();
    return d;
}

} // namespace zxamp
