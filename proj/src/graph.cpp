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

#include "bloch/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace bloch {

namespace {

bool lex_positive(const std::vector<int>& a) {
    for (int x : a) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

std::vector<int> negated(std::vector<int> a) {
    for (int& x : a) x = -x;
    return a;
}

bool all_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

}  // namespace

void validate(const PeriodicGraph& g) {
    if (g.d < 1) throw std::invalid_argument("graph: dimension must be >= 1");
    if (g.n < 1) throw std::invalid_argument("graph: need at least one vertex");
    if (static_cast<int>(g.vertices.size()) != g.n)
        throw std::invalid_argument("graph: vertex list size mismatch");
    std::set<std::tuple<int, int, std::vector<int>>> seen;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeSpec& e = g.edges[i];
        std::string where = "edge " + std::to_string(i + 1) + ": ";
        if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
            throw std::invalid_argument(where + "vertex id out of range");
        if (static_cast<int>(e.offset.size()) != g.d)
            throw std::invalid_argument(where + "offset length != dimension");
        if (e.u > e.v) throw std::invalid_argument(where + "not canonical (u > v required u <= v)");
        if (e.u == e.v) {
            if (all_zero(e.offset))
                throw std::invalid_argument(where + "self-loop with zero offset");
            if (!lex_positive(e.offset))
                throw std::invalid_argument(where + "loop offset must be lexicographically positive");
        }
        if (e.weight && sgn(*e.weight) == 0)
            throw std::invalid_argument(where + "fixed weight must be nonzero");
        if (!seen.emplace(e.u, e.v, e.offset).second)
            throw std::invalid_argument(where + "duplicate (u, v, offset)");
    }
}

QuotientGraph quotient_graph(const PeriodicGraph& g) {
    QuotientGraph q;
    q.n = g.n;
    for (const EdgeSpec& e : g.edges)
        if (e.u != e.v) q.edges.emplace(e.u, e.v);
    return q;
}

std::vector<std::vector<int>> quotient_components(const PeriodicGraph& g) {
    QuotientGraph q = quotient_graph(g);
    std::vector<std::vector<int>> adj(g.n);
    for (auto [a, b] : q.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> bfs;
        bfs.push(s);
        comp[s] = id;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            out[id].push_back(u);
            for (int w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = id;
                    bfs.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Anchoring connected_anchoring(const PeriodicGraph& g) {
    if (quotient_components(g).size() != 1)
        throw std::invalid_argument("quotient disconnected");
    Anchoring anc;
    anc.shifts.assign(g.n, std::vector<int>(g.d, 0));
    std::vector<bool> visited(g.n, false);
    visited[0] = true;

    // Oriented incidences per vertex: (neighbor, oriented offset, edge index),
    // visited in (vertex id, lexicographic offset) order for determinism.
    struct Inc {
        int w;
        std::vector<int> a;  // offset oriented u -> w
        int e;
        bool operator<(const Inc& o) const {
            if (w != o.w) return w < o.w;
            if (a != o.a) return a < o.a;
            return e < o.e;
        }
    };
    std::vector<std::vector<Inc>> inc(g.n);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeSpec& e = g.edges[i];
        inc[e.u].push_back({e.v, e.offset, static_cast<int>(i)});
        if (e.u != e.v) inc[e.v].push_back({e.u, negated(e.offset), static_cast<int>(i)});
    }
    for (auto& v : inc) std::sort(v.begin(), v.end());

    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (const Inc& in : inc[u]) {
            if (visited[in.w]) continue;
            visited[in.w] = true;
            // Choose t_w so the re-anchored offset a + t_w - t_u vanishes.
            for (int i = 0; i < g.d; ++i) anc.shifts[in.w][i] = anc.shifts[u][i] - in.a[i];
            anc.tree_edges.push_back(in.e);
            bfs.push(in.w);
        }
    }
    std::sort(anc.tree_edges.begin(), anc.tree_edges.end());
    return anc;
}

std::vector<int> reanchored_offset(const PeriodicGraph& g, const Anchoring& anc, int edge_index) {
    const EdgeSpec& e = g.edges[edge_index];
    std::vector<int> a = e.offset;
    for (int i = 0; i < g.d; ++i) a[i] += anc.shifts[e.v][i] - anc.shifts[e.u][i];
    return a;
}

PeriodicGraph reanchored(const PeriodicGraph& g, const Anchoring& anc) {
    PeriodicGraph out = g;
    for (size_t i = 0; i < g.edges.size(); ++i)
        out.edges[i].offset = reanchored_offset(g, anc, static_cast<int>(i));
    return out;
}

StructuralClass classify(const PeriodicGraph& g) {
    validate(g);
    if (g.n == 1) {
        // Single vertex: still Eligible-like when loop edges exist, but the
        // verdict short-circuits; report SingleVertex per contract.
        return {StructuralKind::SingleVertex, {}};
    }
    auto comps = quotient_components(g);
    if (comps.size() >= 2) return {StructuralKind::QuotientDisconnected, comps};
    Anchoring anc = connected_anchoring(g);
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (!all_zero(reanchored_offset(g, anc, static_cast<int>(i))))
            return {StructuralKind::Eligible, {}};
    return {StructuralKind::Trivial, {}};
}

std::string structural_kind_name(StructuralKind k) {
    switch (k) {
        case StructuralKind::SingleVertex: return "single_vertex";
        case StructuralKind::QuotientDisconnected: return "quotient_disconnected";
        case StructuralKind::Trivial: return "trivial";
        case StructuralKind::Eligible: return "eligible";
    }
    return "?";
}

}  // namespace bloch
