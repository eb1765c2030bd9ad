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

#include "bloch/reduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace bloch {

namespace {

int l1_norm(const std::vector<int>& a) {
    int s = 0;
    for (int x : a) s += std::abs(x);
    return s;
}

int first_nonzero(const std::vector<int>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

}  // namespace

ReductionPlan plan_reduction(const PeriodicGraph& g) {
    if (classify(g).kind != StructuralKind::Eligible)
        throw std::invalid_argument("plan_reduction: graph is not eligible");

    ReductionPlan plan;
    plan.anchoring = connected_anchoring(g);
    plan.tree_edges = plan.anchoring.tree_edges;

    std::vector<bool> in_tree(g.edges.size(), false);
    for (int e : plan.tree_edges) in_tree[static_cast<size_t>(e)] = true;

    // Canonical cross edge: smallest (L1 norm, (u,v), lexicographic offset)
    // among non-tree edges with nonzero re-anchored offset.
    int best = -1;
    std::tuple<int, int, int, std::vector<int>> best_key;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (in_tree[e]) continue;
        std::vector<int> a = reanchored_offset(g, plan.anchoring, static_cast<int>(e));
        if (first_nonzero(a) < 0) continue;
        std::tuple<int, int, int, std::vector<int>> key{l1_norm(a), g.edges[e].u, g.edges[e].v, a};
        if (best < 0 || key < best_key) {
            best = static_cast<int>(e);
            best_key = key;
        }
    }
    if (best < 0) throw std::invalid_argument("plan_reduction: graph is trivial");

    plan.cross_edge = best;
    plan.cross_offset = reanchored_offset(g, plan.anchoring, best);
    plan.coordinate = first_nonzero(plan.cross_offset);
    if (plan.cross_offset[static_cast<size_t>(plan.coordinate)] < 0) {
        plan.cross_flipped = true;
        for (int& x : plan.cross_offset) x = -x;
    }
    plan.a = plan.cross_offset[static_cast<size_t>(plan.coordinate)];

    for (size_t e = 0; e < g.edges.size(); ++e)
        if (!in_tree[e] && static_cast<int>(e) != best)
            plan.zeroed_edges.push_back(static_cast<int>(e));
    return plan;
}

PeriodicGraph specialized_graph(const PeriodicGraph& g, const ReductionPlan& plan,
                                std::vector<int>& kept) {
    PeriodicGraph h;
    h.d = g.d;
    h.n = g.n;
    h.vertices = g.vertices;
    kept.clear();
    for (int e : plan.tree_edges) {
        EdgeSpec es = g.edges[static_cast<size_t>(e)];
        es.offset = reanchored_offset(g, plan.anchoring, e);
        h.edges.push_back(es);
        kept.push_back(e);
    }
    {
        EdgeSpec es = g.edges[static_cast<size_t>(plan.cross_edge)];
        es.offset = reanchored_offset(g, plan.anchoring, plan.cross_edge);
        h.edges.push_back(es);
        kept.push_back(plan.cross_edge);
    }
    return h;
}

ReducedDispersion reduced_dispersion(const PeriodicGraph& g, const ReductionPlan& plan,
                                     const Assignment& asg) {
    std::vector<int> kept;
    PeriodicGraph h = specialized_graph(g, plan, kept);

    Assignment hasg;
    hasg.potentials = asg.potentials;
    for (int e : kept) {
        const Rational& w = asg.weights[static_cast<size_t>(e)];
        if (w == 0) throw std::invalid_argument("reduced_dispersion: zero kept weight");
        hasg.weights.push_back(w);
    }

    Dispersion disp = dispersion(h, hasg);

    ReducedDispersion rd;
    rd.a = plan.a;
    rd.specialized = specialize_to_x(disp.poly, plan.coordinate);

    std::set<long> sup = x_support(rd.specialized);
    for (long e : sup)
        if (e != 0 && e != rd.a && e != -rd.a)
            throw std::logic_error("reduced_dispersion: three-term shape violated");
    rd.r = coeff_of_xpower(rd.specialized, 0);
    rd.s = coeff_of_xpower(rd.specialized, rd.a);
    QPoly s_neg = coeff_of_xpower(rd.specialized, -rd.a);
    if (!(rd.s == s_neg)) throw std::logic_error("reduced_dispersion: asymmetric x parts");
    if (rd.s.is_zero()) throw std::logic_error("reduced_dispersion: degenerate reduced data");

    // Cycle: tree path from the cross target back to the source, closed by
    // the cross edge itself. Orientation follows the sign normalization.
    const EdgeSpec& cross = g.edges[static_cast<size_t>(plan.cross_edge)];
    int src = plan.cross_flipped ? cross.v : cross.u;
    int tgt = plan.cross_flipped ? cross.u : cross.v;

    if (src == tgt) {
        rd.eta = {src};
    } else {
        // BFS over the spanning tree.
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.n));
        for (int e : plan.tree_edges) {
            const EdgeSpec& es = g.edges[static_cast<size_t>(e)];
            adj[static_cast<size_t>(es.u)].push_back({es.v, e});
            adj[static_cast<size_t>(es.v)].push_back({es.u, e});
        }
        std::vector<int> prev(static_cast<size_t>(g.n), -1), prev_edge(static_cast<size_t>(g.n), -1);
        std::queue<int> q;
        prev[static_cast<size_t>(tgt)] = tgt;
        q.push(tgt);
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            if (w == src) break;
            for (auto [x, e] : adj[static_cast<size_t>(w)]) {
                if (prev[static_cast<size_t>(x)] >= 0) continue;
                prev[static_cast<size_t>(x)] = w;
                prev_edge[static_cast<size_t>(x)] = e;
                q.push(x);
            }
        }
        if (prev[static_cast<size_t>(src)] < 0)
            throw std::logic_error("reduced_dispersion: spanning tree does not connect cycle");
        std::vector<int> path;
        for (int w = src; w != tgt; w = prev[static_cast<size_t>(w)]) path.push_back(w);
        path.push_back(tgt);
        std::reverse(path.begin(), path.end());  // tgt ... src
        rd.eta = path;
    }
    rd.p = static_cast<int>(rd.eta.size());

    rd.kappa = asg.weights[static_cast<size_t>(plan.cross_edge)];
    if (rd.p > 1) {
        // Re-walk the path collecting tree-edge weights.
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.n));
        for (int e : plan.tree_edges) {
            const EdgeSpec& es = g.edges[static_cast<size_t>(e)];
            adj[static_cast<size_t>(es.u)].push_back({es.v, e});
            adj[static_cast<size_t>(es.v)].push_back({es.u, e});
        }
        for (size_t i = 0; i + 1 < rd.eta.size(); ++i) {
            int found = -1;
            for (auto [x, e] : adj[static_cast<size_t>(rd.eta[i])])
                if (x == rd.eta[i + 1]) {
                    found = e;
                    break;
                }
            if (found < 0) throw std::logic_error("reduced_dispersion: broken cycle path");
            rd.kappa *= asg.weights[static_cast<size_t>(found)];
        }
    }
    if (rd.p % 2 == 0) rd.kappa = -rd.kappa;  // (-1)^{p-1}

    std::vector<bool> on_cycle(static_cast<size_t>(g.n), false);
    for (int w : rd.eta) on_cycle[static_cast<size_t>(w)] = true;
    for (int w = 0; w < g.n; ++w)
        if (!on_cycle[static_cast<size_t>(w)]) rd.U.push_back(w);

    return rd;
}

bool crosscheck_s(const ReducedDispersion& rd, const PeriodicGraph& g, const ReductionPlan& plan,
                  const Assignment& asg) {
    std::vector<int> kept;
    PeriodicGraph h = specialized_graph(g, plan, kept);
    Assignment hasg;
    hasg.potentials = asg.potentials;
    for (int e : kept) hasg.weights.push_back(asg.weights[static_cast<size_t>(e)]);

    PolyMatrix L = build_floquet(h, hasg);

    QPoly det;
    if (rd.U.empty()) {
        det = qpoly({1});
    } else {
        int m = static_cast<int>(rd.U.size());
        PolyMatrix sub = PolyMatrix::make(m, g.d);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                sub.at(i, j) = L.at(rd.U[static_cast<size_t>(i)], rd.U[static_cast<size_t>(j)]);
                if (i == j) sub.at(i, j) = sub.at(i, j) - LaurentPoly::lambda(g.d);
            }
        det = to_unipoly(determinant(sub));  // throws if z survives
    }
    return poly_scale_rat(det, rd.kappa) == rd.s;
}

}  // namespace bloch
