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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zxamp/phase.hpp"
#include "zxamp/scalar.hpp"

namespace zxamp {

using VertexId = uint32_t;
inline constexpr VertexId kNoVertex = UINT32_MAX;

enum class VertexKind : uint8_t { ZSpider, XSpider, HBox, Boundary };
enum class EdgeKind : uint8_t { Plain, Hadamard };

inline EdgeKind operator^(EdgeKind a, EdgeKind b) {
    return static_cast<EdgeKind>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

// Open multigraph of spiders with plain/Hadamard wires, an ordered boundary
// and one exact global scalar.  Vertex ids are never reused within a diagram
// lifetime.  Self-loops are stored as two adjacency entries on the vertex.
//
// Graph-like form (established by to_graph_like, maintained by add_edge_smart
// and the rewrite engine): all spiders are Z, spider-spider edges are single
// Hadamard edges, no self-loops, boundaries attach by plain wires.
class Diagram {
  public:
    using Nbr = std::pair<VertexId, EdgeKind>;

    Diagram() : scalar_(ExactScalar::one()) {}

    // ---- vertices ----
    VertexId add_vertex(VertexKind kind, Phase phase = Phase(0));
    VertexId add_z(Phase phase = Phase(0)) { return add_vertex(VertexKind::ZSpider, phase); }
    VertexId add_x(Phase phase = Phase(0)) { return add_vertex(VertexKind::XSpider, phase); }
    void remove_vertex(VertexId v); // detaches all incident edges
    bool alive(VertexId v) const { return v < verts_.size() && verts_[v].alive; }
    VertexKind kind(VertexId v) const { return verts_[v].kind; }
    bool is_spider(VertexId v) const {
        return alive(v) &&
               (verts_[v].kind == VertexKind::ZSpider || verts_[v].kind == VertexKind::XSpider);
    }
    bool is_boundary(VertexId v) const {
        return alive(v) && verts_[v].kind == VertexKind::Boundary;
    }
    Phase phase(VertexId v) const { return verts_[v].phase; }
    void set_phase(VertexId v, Phase p);
    void add_to_phase(VertexId v, Phase delta) { set_phase(v, verts_[v].phase + delta); }
    VertexId vertex_bound() const { return static_cast<VertexId>(verts_.size()); }
    size_t num_vertices() const { return alive_count_; }
    size_t num_spiders() const;
    size_t degree(VertexId v) const { return verts_[v].nbrs.size(); }
    const std::vector<Nbr>& neighbors(VertexId v) const { return verts_[v].nbrs; }

    // spider with no boundary neighbour (and itself not a boundary)
    bool internal(VertexId v) const;

    // ---- edges ----
    void add_edge(VertexId u, VertexId v, EdgeKind k); // raw multigraph edge
    void remove_edge(VertexId u, VertexId v, EdgeKind k); // one instance
    bool has_edge(VertexId u, VertexId v) const;
    // unique edge kind between u,v (graph-like form)
    std::optional<EdgeKind> edge_kind(VertexId u, VertexId v) const;
    // raw set-toggle of a Hadamard edge (local complementation / pivot)
    void toggle_h_edge(VertexId u, VertexId v);
    void for_each_edge(const std::function<void(VertexId, VertexId, EdgeKind)>& fn) const;
    size_t num_edges() const;

    // graph-like-preserving edge insertion: resolves self-loops, parallel
    // Hadamard pairs and plain spider-spider edges (fusion) immediately,
    // with the oracle-pinned scalar corrections.
    void add_edge_smart(VertexId u, VertexId v, EdgeKind k);

    // merge spider v into spider u (plain-wire fusion); phases add, v's edges
    // move to u through add_edge_smart
    void fuse_into(VertexId u, VertexId v);

    // ---- boundary ----
    VertexId add_input();
    VertexId add_output();
    const std::vector<VertexId>& inputs() const { return inputs_; }
    const std::vector<VertexId>& outputs() const { return outputs_; }
    size_t boundary_size() const { return inputs_.size() + outputs_.size(); }

    // ---- scalar ----
    const ExactScalar& scalar() const { return scalar_; }
    void set_scalar(ExactScalar s) { scalar_ = std::move(s); }
    void scalar_mul(const ExactScalar& s) { scalar_ *= s; }

    // ---- whole-diagram ops ----
    // outputs of d1 plugged into inputs of d2
    static Diagram compose(const Diagram& d1, const Diagram& d2);
    static Diagram tensor(const Diagram& d1, const Diagram& d2);

    void to_graph_like();
    bool is_graph_like() const;

    // copy without dead vertex slots (fresh id space)
    Diagram compacted() const;

    // ---- stats ----
    size_t tcount() const { return tcount_; }
    size_t tcount_recount() const;

    // ---- serialisation ----
    std::string serialize() const;
    static Diagram deserialize(std::string_view text);

  private:
    struct VertexData {
        VertexKind kind = VertexKind::ZSpider;
        Phase phase;
        bool alive = false;
        std::vector<Nbr> nbrs;
    };
    std::vector<VertexData> verts_;
    std::vector<VertexId> inputs_, outputs_;
    ExactScalar scalar_;
    size_t tcount_ = 0;
    size_t alive_count_ = 0;

    bool counts_t(VertexId v) const {
        const auto& d = verts_[v];
        return d.alive &&
               (d.kind == VertexKind::ZSpider || d.kind == VertexKind::XSpider) &&
               d.phase.is_t_like();
    }
    void detach_entry(VertexId from, VertexId to, EdgeKind k); // remove one entry
    void resolve_self_loop(VertexId v, EdgeKind k);
};

} // namespace zxamp
