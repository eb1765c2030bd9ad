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

#include "bloch/floquet.hpp"

#include <stdexcept>

namespace bloch {

Assignment resolve_assignment(const PeriodicGraph& g, const std::vector<Rational>& free_potentials,
                              const std::vector<Rational>& free_weights) {
    Assignment asg;
    size_t pi = 0, wi = 0;
    for (const VertexSpec& v : g.vertices) {
        if (v.potential) {
            asg.potentials.push_back(*v.potential);
        } else {
            if (pi >= free_potentials.size())
                throw std::invalid_argument("resolve_assignment: not enough free potentials");
            asg.potentials.push_back(free_potentials[pi++]);
        }
    }
    for (const EdgeSpec& e : g.edges) {
        if (e.weight) {
            asg.weights.push_back(*e.weight);
        } else {
            if (wi >= free_weights.size())
                throw std::invalid_argument("resolve_assignment: not enough free weights");
            asg.weights.push_back(free_weights[wi++]);
        }
    }
    check_assignment(g, asg);
    return asg;
}

void check_assignment(const PeriodicGraph& g, const Assignment& asg) {
    if (asg.potentials.size() != static_cast<size_t>(g.n))
        throw std::invalid_argument("assignment: potential count mismatch");
    if (asg.weights.size() != g.edges.size())
        throw std::invalid_argument("assignment: weight count mismatch");
    for (const Rational& w : asg.weights)
        if (sgn(w) == 0) throw std::invalid_argument("assignment: zero edge weight");
}

namespace {

LaurentPoly z_monomial(int d, const std::vector<int>& a, const Rational& c) {
    LaurentPoly f = LaurentPoly::zero(d);
    std::vector<int> zz(a.begin(), a.end());
    f.add_term(Monomial{zz, 0}, c);
    return f;
}

}  // namespace

PolyMatrix build_floquet(const PeriodicGraph& g, const Assignment& asg) {
    check_assignment(g, asg);
    PolyMatrix m = PolyMatrix::make(g.n, g.d);
    for (int u = 0; u < g.n; ++u)
        m.at(u, u) = LaurentPoly::constant(g.d, asg.potentials[u]);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeSpec& e = g.edges[i];
        const Rational& w = asg.weights[i];
        std::vector<int> neg = e.offset;
        for (int& x : neg) x = -x;
        if (e.u == e.v) {
            m.at(e.u, e.u) = m.at(e.u, e.u) + z_monomial(g.d, e.offset, w) + z_monomial(g.d, neg, w);
        } else {
            // Edge (u, v+a): z^a at (u,v), z^{-a} at (v,u).
            m.at(e.u, e.v) = m.at(e.u, e.v) + z_monomial(g.d, e.offset, w);
            m.at(e.v, e.u) = m.at(e.v, e.u) + z_monomial(g.d, neg, w);
        }
    }
    return m;
}

Dispersion dispersion(const PeriodicGraph& g, const Assignment& asg) {
    PolyMatrix m = build_floquet(g, asg);
    LaurentPoly lam = LaurentPoly::lambda(g.d);
    for (int i = 0; i < g.n; ++i) m.at(i, i) = m.at(i, i) - lam;
    LaurentPoly det = determinant(m);
    Dispersion out{std::move(det), g.n};
    if (lambda_degree(out.poly) != g.n) throw std::logic_error("dispersion: lambda degree != n");
    return out;
}

bool matrix_is_z_symmetric(const PolyMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (!(m.at(i, j) == invert_z(m.at(j, i)))) return false;
    return true;
}

bool check_symmetry(const PeriodicGraph& g, const Assignment& asg) {
    return matrix_is_z_symmetric(build_floquet(g, asg));
}

QPoly dispersion_at_signs(const PeriodicGraph& g, const Assignment& asg,
                          const std::vector<int>& signs) {
    if (signs.size() != static_cast<size_t>(g.d))
        throw std::invalid_argument("dispersion_at_signs: need one sign per variable");
    LaurentPoly D = dispersion(g, asg).poly;
    std::vector<Rational> c;
    for (const auto& [m, v] : D.terms) {
        int s = 1;
        for (int i = 0; i < g.d; ++i)
            if (signs[i] < 0 && (m.z[i] % 2 != 0)) s = -s;
        if (static_cast<int>(c.size()) <= m.lam) c.resize(m.lam + 1, Rational(0));
        c[m.lam] += s > 0 ? v : Rational(-v);
    }
    return QPoly(std::move(c));
}

bool simple_roots_at_one(const PeriodicGraph& g, const Assignment& asg) {
    QPoly f = dispersion_at_signs(g, asg, std::vector<int>(g.d, 1));
    return is_squarefree(f);
}

}  // namespace bloch
