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

#ifndef BLOCH_REDUCE_HPP
#define BLOCH_REDUCE_HPP

#include "bloch/floquet.hpp"
#include "bloch/graph.hpp"

namespace bloch {

/// Keep the BFS spanning tree plus one canonical cross edge; zero everything
/// else. The cross edge is oriented so its first nonzero re-anchored offset
/// coordinate is positive.
struct ReductionPlan {
    Anchoring anchoring;
    std::vector<int> tree_edges;    // indices into g.edges
    int cross_edge = -1;            // index into g.edges
    bool cross_flipped = false;     // orientation flipped to make a > 0
    std::vector<int> cross_offset;  // re-anchored, after flip
    int coordinate = 0;             // first index with nonzero offset (0-based)
    int a = 0;                      // cross_offset[coordinate] > 0
    std::vector<int> zeroed_edges;  // all remaining edge indices

    bool operator==(const ReductionPlan&) const = default;
};

ReductionPlan plan_reduction(const PeriodicGraph& g);

/// The data of the three-term reduced dispersion
/// D'(x,lambda) = r(lambda) + s(lambda) (x^a + x^-a).
struct ReducedDispersion {
    int a = 0;
    QPoly r;
    QPoly s;
    int p = 0;                // cycle length
    std::vector<int> eta;     // cycle vertices, starting at the cross target
    Rational kappa;           // (-1)^{p-1} * cross weight * product of path weights
    std::vector<int> U;       // complement of the cycle
    LaurentPoly specialized;  // D'(x,lambda), d = 1

    bool operator==(const ReducedDispersion&) const = default;
};

/// Re-anchored graph restricted to kept (tree + cross) edges; `kept` maps the
/// new edge index to the original one.
PeriodicGraph specialized_graph(const PeriodicGraph& g, const ReductionPlan& plan,
                                std::vector<int>& kept);

/// Build D' for the witness, verify the three-term shape, and extract
/// (a, r, s, eta, kappa, U). The assignment is on the original graph; zeroed
/// edges' weights are ignored.
ReducedDispersion reduced_dispersion(const PeriodicGraph& g, const ReductionPlan& plan,
                                     const Assignment& asg);

/// Independent check: s == kappa * det(L|_U - lambda I) with det |_emptyset = 1.
bool crosscheck_s(const ReducedDispersion& rd, const PeriodicGraph& g, const ReductionPlan& plan,
                  const Assignment& asg);

}  // namespace bloch

#endif
