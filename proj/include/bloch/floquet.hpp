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

#ifndef BLOCH_FLOQUET_HPP
#define BLOCH_FLOQUET_HPP

#include "bloch/graph.hpp"
#include "bloch/laurent.hpp"

namespace bloch {

/// A complete parameter point: one rational per vertex, one nonzero rational
/// per edge (aligned with g.vertices / g.edges).
struct Assignment {
    std::vector<Rational> potentials;
    std::vector<Rational> weights;

    bool operator==(const Assignment&) const = default;
};

/// Merge the graph's fixed values with values for the free slots
/// (free_* consumed in declaration order).
Assignment resolve_assignment(const PeriodicGraph& g, const std::vector<Rational>& free_potentials,
                              const std::vector<Rational>& free_weights);

void check_assignment(const PeriodicGraph& g, const Assignment& asg);

/// Floquet matrix L(z): entry (u,v) = delta_{u,v} V(u) + sum of weight*z^a
/// over periodic edges (u, v+a). Loop edges contribute z^a + z^{-a}.
PolyMatrix build_floquet(const PeriodicGraph& g, const Assignment& asg);

struct Dispersion {
    LaurentPoly poly;  // det(L(z) - lambda I)
    int n = 0;         // lambda-degree
};

Dispersion dispersion(const PeriodicGraph& g, const Assignment& asg);

/// L(z) == L(z^{-1})^T entrywise.
bool matrix_is_z_symmetric(const PolyMatrix& m);
bool check_symmetry(const PeriodicGraph& g, const Assignment& asg);

/// D evaluated at z = (s_1, ..., s_d) with each s_i in {+1, -1}.
QPoly dispersion_at_signs(const PeriodicGraph& g, const Assignment& asg,
                          const std::vector<int>& signs);

/// True iff D(1, lambda) is squarefree.
bool simple_roots_at_one(const PeriodicGraph& g, const Assignment& asg);

}  // namespace bloch

#endif
