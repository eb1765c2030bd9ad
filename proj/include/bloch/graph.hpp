/*
   Copyright 2026 The blochcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BLOCH_GRAPH_HPP
#define BLOCH_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bloch/ratpoly.hpp"

namespace bloch {

/// Potentials and weights are either fixed rationals or free parameters
/// (nullopt).
using Param = std::optional<Rational>;

struct VertexSpec {
    Param potential;  // nullopt = free

    bool operator==(const VertexSpec&) const = default;
};

/// One periodic edge orbit: connects u and v+offset (and all Z^d translates).
/// Canonical storage: u <= v; loops (u == v) carry a lexicographically
/// positive offset. The reverse edge (offset negated) is implicit.
struct EdgeSpec {
    int u = 0;
    int v = 0;
    std::vector<int> offset;
    Param weight;  // nullopt = free; fixed weights must be nonzero

    bool operator==(const EdgeSpec&) const = default;
};

/// Z^d-periodic weighted graph, stored through its quotient data.
/// Vertices are 0-based internally (1-based in the file format).
struct PeriodicGraph {
    int d = 1;
    int n = 1;
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;

    bool operator==(const PeriodicGraph&) const = default;
};

/// Throws std::invalid_argument with a diagnostic on any invariant breach.
void validate(const PeriodicGraph& g);

struct QuotientGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // i < j
};

QuotientGraph quotient_graph(const PeriodicGraph& g);
std::vector<std::vector<int>> quotient_components(const PeriodicGraph& g);

/// Per-vertex shifts t_v plus the BFS spanning tree that realizes a connected
/// fundamental domain: every tree edge has offset 0 after replacing each edge
/// offset a by a + t_v - t_u.
struct Anchoring {
    std::vector<std::vector<int>> shifts;
    std::vector<int> tree_edges;  // indices into g.edges

    bool operator==(const Anchoring&) const = default;
};

Anchoring connected_anchoring(const PeriodicGraph& g);

/// Re-anchored offset of edge e under the shifts: a + t_v - t_u.
std::vector<int> reanchored_offset(const PeriodicGraph& g, const Anchoring& anc, int edge_index);

/// Copy of g with all offsets re-anchored (weights and potentials unchanged).
PeriodicGraph reanchored(const PeriodicGraph& g, const Anchoring& anc);

enum class StructuralKind { SingleVertex, QuotientDisconnected, Trivial, Eligible };

struct StructuralClass {
    StructuralKind kind = StructuralKind::Eligible;
    std::vector<std::vector<int>> components;  // for QuotientDisconnected

    bool operator==(const StructuralClass&) const = default;
};

StructuralClass classify(const PeriodicGraph& g);

std::string structural_kind_name(StructuralKind k);

}  // namespace bloch

#endif
