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

#ifndef BLOCH_ORACLE_HPP
#define BLOCH_ORACLE_HPP

#include <random>

#include "bloch/certify.hpp"

namespace bloch {

// --- Cyclotomic arithmetic (test oracle only; the certifier never needs it) -

/// Q[t]/Phi_l(t) for l in 1..6 — big enough to house every root-of-unity
/// orbit the constructions use.
struct CycRing {
    int l = 1;
    QPoly phi;

    static CycRing make(int l);
    bool operator==(const CycRing& o) const { return l == o.l && phi == o.phi; }
};

struct CycElem {
    CycRing ring;
    QPoly rep;

    CycElem() = default;
    CycElem(CycRing r, QPoly p) : ring(std::move(r)), rep(std::move(p)) { reduce(); }

    void reduce() {
        if (rep.deg() >= ring.phi.deg()) rep = divrem(rep, ring.phi).second;
    }
    bool is_rational() const { return rep.deg() <= 0; }
    Rational rational_value() const { return rep.is_zero() ? Rational(0) : rep.c[0]; }
    bool operator==(const CycElem& o) const { return ring == o.ring && rep == o.rep; }
};

CycElem cyc_embed(const CycRing& ring, const Rational& x);
/// mu^j for the primitive l-th root of unity mu = t.
CycElem cyc_root_power(const CycRing& ring, int j);

inline void cyc_check(const CycElem& a, const CycElem& b) {
    if (!(a.ring == b.ring)) throw std::logic_error("cyclotomic ring mismatch");
}
inline CycElem operator+(const CycElem& a, const CycElem& b) {
    cyc_check(a, b);
    return CycElem(a.ring, a.rep + b.rep);
}
inline CycElem operator-(const CycElem& a, const CycElem& b) {
    cyc_check(a, b);
    return CycElem(a.ring, a.rep - b.rep);
}
inline CycElem operator*(const CycElem& a, const CycElem& b) {
    cyc_check(a, b);
    return CycElem(a.ring, a.rep * b.rep);
}
inline bool scalar_is_zero(const CycElem& x) { return x.rep.is_zero(); }
inline CycElem scalar_zero_like(const CycElem& x) { return CycElem(x.ring, QPoly()); }
inline CycElem scalar_one_like(const CycElem& x) { return cyc_embed(x.ring, Rational(1)); }
inline CycElem scalar_rat_mul(const CycElem& x, const Rational& c) {
    return CycElem(x.ring, poly_scale_rat(x.rep, c));
}

using CycPoly = UniPoly<CycElem>;  // lambda-polynomials over the ring

/// Laurent polynomial in one auxiliary variable y with CycPoly coefficients.
using CycLaurent = std::map<long, CycPoly>;

CycLaurent cyc_laurent_mul(const CycLaurent& a, const CycLaurent& b);

// --- Constructed reducible instances -----------------------------------------

struct ConstructedInstance {
    int l = 1;
    int a = 1;
    QPoly r, s;
    std::vector<std::string> factors;  // rendered factor list
};

/// Case 3 shape: prod over mu^l=1 of (r2 + s2 mu x^{a/l})(r2 + s2 mu x^{-a/l}).
/// Yields r = A^2 + B^2, s = (-1)^{l+1} A B with A = r2^l, B = s2^l.
ConstructedInstance construct_case3(const QPoly& r2, const QPoly& s2, int l, int a);

/// Case 2 shape: prod over mu^l=1 of (R + sigma mu x^{a/l} + tau mu^{-1} x^{-a/l}),
/// normalized by (-1)^n so that [lambda^n] r = (-1)^n. Requires sigma^l = tau^l.
ConstructedInstance construct_case2(const QPoly& R, const QPoly& sigma, const QPoly& tau, int l,
                                    int a);

/// Gate for the certifier's Case-2 decider: the cyclotomic expansion of
/// prod (R + sigma mu y + tau mu^{-1} y^{-1}) must equal
/// sum_j (-1)^j (l/(l-j)) C(l-j,j) R^{l-2j} (sigma tau)^j
///   + (-1)^{l+1} (sigma^l y^l + tau^l y^{-l})
/// term-for-term on random inputs.
bool collapse_identity_check(int l, int trials, std::uint64_t seed = 1);

/// The rational y^0-part of the orbit product, for re-expanding decider
/// evidence: sum_j (-1)^j (l/(l-j)) C(l-j,j) R^{l-2j} pi^j.
QPoly collapse_sum_rational(const QPoly& R, const QPoly& pi, int l);

// --- Metamorphic transforms ---------------------------------------------------

struct Transform {
    enum Kind { Shift, Scale, InvertX } kind = InvertX;
    Rational value;  // t for Shift, c != 0 for Scale
};

/// Exact identity for the transform plus verdict-class invariance of
/// certify_graph under the induced parameter change.
bool metamorphic_suite(const PeriodicGraph& g, const Assignment& asg, const Transform& tr);

// --- Random inputs -------------------------------------------------------------

/// Valid canonical graph: n <= 6, d <= 2, <= 10 edges, mixed free/fixed data.
PeriodicGraph random_graph(std::mt19937_64& rng);
PeriodicGraph random_eligible_graph(std::mt19937_64& rng);
Assignment random_assignment(const PeriodicGraph& g, std::mt19937_64& rng);
PolyMatrix random_poly_matrix(std::mt19937_64& rng, int max_n, int d);

/// Independent determinant: sum over permutations with the sign of each.
LaurentPoly determinant_permsum(const PolyMatrix& m);

}  // namespace bloch

#endif
