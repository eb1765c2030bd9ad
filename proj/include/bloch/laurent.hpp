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

#ifndef BLOCH_LAURENT_HPP
#define BLOCH_LAURENT_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bloch/ratpoly.hpp"

namespace bloch {

/// Exponent vector of one term: z_1^{e_1}...z_d^{e_d} * lam^{lambda_exp}.
struct Monomial {
    std::vector<int> z;
    int lam = 0;

    // Canonical ordering: lambda exponent first, then z lexicographic.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.lam <=> b.lam; c != 0) return c;
        return a.z <=> b.z;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Sparse exact-coefficient Laurent polynomial in z_1..z_d and lam.
/// No stored zero coefficients.
struct LaurentPoly {
    int d = 0;
    std::map<Monomial, Rational> terms;

    static LaurentPoly zero(int d) { return LaurentPoly{d, {}}; }
    static LaurentPoly constant(int d, const Rational& c);
    static LaurentPoly variable_z(int d, int i, int e = 1);
    static LaurentPoly lambda(int d, int e = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Rational& c);
    bool operator==(const LaurentPoly& o) const { return d == o.d && terms == o.terms; }
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_scale(const LaurentPoly& a, const Rational& c);
LaurentPoly lp_pow(const LaurentPoly& a, int e);

/// Highest lambda exponent, -1 for the zero polynomial.
int lambda_degree(const LaurentPoly& f);

/// All z exponents negated (z -> z^{-1} simultaneously).
LaurentPoly invert_z(const LaurentPoly& f);

/// Substitute lambda -> lambda - t (exact binomial expansion).
LaurentPoly lambda_shift(const LaurentPoly& f, const Rational& t);
/// Substitute lambda -> lambda * c.
LaurentPoly lambda_scale(const LaurentPoly& f, const Rational& c);

/// Per-variable specialization bindings.
struct Binding {
    enum Kind { Keep, SetOne, Rename } kind = Keep;
    int target = 0;  // output variable index for Keep/Rename
};

/// Specialize variables per bindings; output dimension is out_d.
/// Keep/Rename map a source variable onto an output index; SetOne sums
/// coefficients over that exponent.
LaurentPoly substitute(const LaurentPoly& f, const std::vector<Binding>& bindings, int out_d);

/// Convenience: z_coord -> x (single output variable), all other z_j -> 1.
LaurentPoly specialize_to_x(const LaurentPoly& f, int coord);

/// For d<=1 polynomials: the lambda-polynomial multiplying x^e.
QPoly coeff_of_xpower(const LaurentPoly& f, long e);
/// Set of occurring x exponents (d must be <= 1).
std::set<long> x_support(const LaurentPoly& f);

LaurentPoly from_unipoly(int d, const QPoly& f);
/// Requires f free of z variables.
QPoly to_unipoly(const LaurentPoly& f);

/// Canonical byte-stable text rendering: terms in canonical order,
/// "p/q*z1^-2*z2^3*lam^4" joined by " + "; zero renders as "0".
std::string render(const LaurentPoly& f);
std::string render_unipoly(const QPoly& f, const std::string& var);

// --- Matrices --------------------------------------------------------------

struct PolyMatrix {
    int n = 0;
    std::vector<LaurentPoly> a;  // row-major n*n

    static PolyMatrix make(int n, int d);
    LaurentPoly& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const LaurentPoly& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

/// Exact determinant by cofactor expansion with memoization on column
/// subsets. Refuses n > 16.
LaurentPoly determinant(const PolyMatrix& m);

/// Fraction-free Bareiss elimination cross-check route.
LaurentPoly determinant_bareiss(const PolyMatrix& m);

/// Exact division of Laurent polynomials; throws if not divisible.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

// --- Newton polytopes (d = 1) ----------------------------------------------

using LatticePoint = std::pair<long, long>;  // (x exponent, lambda exponent)

/// Convex hull vertices of the support, counterclockwise, starting at the
/// lexicographically smallest vertex. d must be 1.
std::vector<LatticePoint> newton_polytope_1d(const LaurentPoly& f);

/// Hull of pairwise sums of two d=1 hulls.
std::vector<LatticePoint> minkowski_sum_vertices(const std::vector<LatticePoint>& p,
                                                 const std::vector<LatticePoint>& q);

struct SupportBounds {
    int r = 0;
    std::set<LatticePoint> S;  // support of f
    std::set<LatticePoint> A;  // possible support of a monic degree-r factor
    std::set<LatticePoint> B;  // possible support of the cofactor
};

/// Lattice-point enumeration of the shifted Newton polytope:
/// A_r = (N - (0, n-r)) cap (Z x {0..r}), B_r = (N - (0, r)) cap (Z x {0..n-r}).
SupportBounds factor_support_bounds(const LaurentPoly& f, int n, int r);

}  // namespace bloch

#endif
