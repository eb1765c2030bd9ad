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

#ifndef BLOCH_RATPOLY_HPP
#define BLOCH_RATPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bloch {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator) under arithmetic; construction helpers below
/// canonicalize explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Rational> rat_parse(const std::string& text);
std::string rat_str(const Rational& q);
Rational rat_abs(const Rational& q);

// ---------------------------------------------------------------------------
// Scalar trait hooks used by the generic polynomial code. Every coefficient
// ring supplies these four; ringed scalars (quotient rings, cyclotomics)
// derive zero/one from a sample element so the ring parameters travel along.

inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational scalar_zero_like(const Rational&) { return Rational(0); }
inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline Rational scalar_rat_mul(const Rational& x, const Rational& c) { return x * c; }

// ---------------------------------------------------------------------------
// Dense univariate polynomial over a commutative Q-algebra K.
// Coefficients ascend by degree; the trailing coefficient is nonzero unless
// the polynomial is zero (empty vector).

template <class K>
struct UniPoly {
    std::vector<K> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && scalar_is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const K& lead() const {
        if (c.empty()) throw std::logic_error("lead() of zero polynomial");
        return c.back();
    }
    bool operator==(const UniPoly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!(c[i] == o.c[i])) return false;
        return true;
    }
};

using QPoly = UniPoly<Rational>;

template <class K>
UniPoly<K> operator+(const UniPoly<K>& a, const UniPoly<K>& b) {
    std::vector<K> r = a.c.size() >= b.c.size() ? a.c : b.c;
    const std::vector<K>& small = a.c.size() >= b.c.size() ? b.c : a.c;
    for (size_t i = 0; i < small.size(); ++i) r[i] = r[i] + small[i];
    return UniPoly<K>(std::move(r));
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a) {
    std::vector<K> r = a.c;
    for (auto& x : r) x = scalar_rat_mul(x, Rational(-1));
    return UniPoly<K>(std::move(r));
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a, const UniPoly<K>& b) {
    return a + (-b);
}

template <class K>
UniPoly<K> operator*(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<K>();
    std::vector<K> r(a.c.size() + b.c.size() - 1, scalar_zero_like(a.c.front()));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return UniPoly<K>(std::move(r));
}

template <class K>
UniPoly<K> poly_scale_rat(const UniPoly<K>& a, const Rational& s) {
    std::vector<K> r = a.c;
    for (auto& x : r) x = scalar_rat_mul(x, s);
    return UniPoly<K>(std::move(r));
}

/// Multiply by lambda^k.
template <class K>
UniPoly<K> poly_shift(const UniPoly<K>& a, int k) {
    if (a.is_zero() || k == 0) return a;
    std::vector<K> r(a.c.size() + k, scalar_zero_like(a.c.front()));
    for (size_t i = 0; i < a.c.size(); ++i) r[i + k] = a.c[i];
    return UniPoly<K>(std::move(r));
}

template <class K>
UniPoly<K> poly_pow(const UniPoly<K>& a, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    UniPoly<K> acc;
    bool have = false;
    UniPoly<K> base = a;
    while (e > 0) {
        if (e & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        base = base * base;
        e >>= 1;
    }
    if (!have) {
        // a^0 = 1; needs a sample to build one in ringed scalars.
        if (a.is_zero()) throw std::invalid_argument("poly_pow: 0^0 of ringed scalar");
        return UniPoly<K>({scalar_one_like(a.c.front())});
    }
    return acc;
}

template <class K>
K poly_eval(const UniPoly<K>& a, const K& x) {
    if (a.is_zero()) return scalar_rat_mul(x, Rational(0));
    K acc = a.c.back();
    for (int i = a.deg() - 1; i >= 0; --i) acc = acc * x + a.c[i];
    return acc;
}

// --- Field algorithms over Q --------------------------------------------

QPoly qpoly(std::vector<long> coeffs);
std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g);
QPoly monic(const QPoly& f);
QPoly derivative(const QPoly& f);
QPoly gcd_monic(const QPoly& f, const QPoly& g);
Rational resultant(const QPoly& f, const QPoly& g);
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);
bool is_squarefree(const QPoly& f);
std::optional<std::pair<Rational, QPoly>> perfect_square_over_C(const QPoly& f);
std::vector<Rational> rational_roots(const QPoly& f);

/// Unique monic l-th root of a monic polynomial, when it exists.
/// Top-down coefficient recursion; works over any commutative Q-algebra.
template <class K>
std::optional<UniPoly<K>> monic_lth_root(const UniPoly<K>& f, int l) {
    if (l < 1) throw std::invalid_argument("monic_lth_root: l must be positive");
    if (f.is_zero()) throw std::invalid_argument("monic_lth_root: zero input");
    const int n = f.deg();
    if (n % l != 0) return std::nullopt;
    if (l == 1) return f;
    const int m = n / l;
    const K one = f.lead();
    const K zero = scalar_zero_like(one);
    UniPoly<K> q;
    q.c.assign(m + 1, zero);
    q.c[m] = one;
    for (int k = 1; k <= m; ++k) {
        UniPoly<K> p = poly_pow(q, l);
        K have = (n - k <= p.deg()) ? p.c[n - k] : zero;
        K want = (n - k <= f.deg()) ? f.c[n - k] : zero;
        // Adding c at lambda^{m-k} moves [lambda^{n-k}] q^l by l*c.
        q.c[m - k] = scalar_rat_mul(want - have, Rational(1, l));
    }
    q.trim();
    if (poly_pow(q, l) == f) return q;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quotient ring Q[g]/(g^k - C). Elements are polynomials in g of degree < k,
// stored reduced. Houses the scalar unknowns gamma/delta of the deciders.

struct QuotientRing {
    int k = 1;
    Rational C = Rational(1);
    bool operator==(const QuotientRing& o) const { return k == o.k && C == o.C; }
};

struct QRingElem {
    QuotientRing ring;
    QPoly rep;

    QRingElem() = default;
    QRingElem(QuotientRing r, QPoly p) : ring(std::move(r)), rep(std::move(p)) { reduce(); }

    void reduce() {
        while (rep.deg() >= ring.k) {
            int dd = rep.deg();
            Rational top = rep.c[dd];
            rep.c[dd] = 0;
            rep.c[dd - ring.k] += top * ring.C;
            rep.trim();
        }
    }
    bool operator==(const QRingElem& o) const { return ring == o.ring && rep == o.rep; }
};

QRingElem qr_embed(const QuotientRing& ring, const Rational& x);
QRingElem qr_gen(const QuotientRing& ring);

inline void qr_check(const QRingElem& a, const QRingElem& b) {
    if (!(a.ring == b.ring)) throw std::logic_error("quotient ring mismatch");
}
inline QRingElem operator+(const QRingElem& a, const QRingElem& b) {
    qr_check(a, b);
    return QRingElem(a.ring, a.rep + b.rep);
}
inline QRingElem operator-(const QRingElem& a, const QRingElem& b) {
    qr_check(a, b);
    return QRingElem(a.ring, a.rep - b.rep);
}
inline QRingElem operator*(const QRingElem& a, const QRingElem& b) {
    qr_check(a, b);
    return QRingElem(a.ring, a.rep * b.rep);
}
inline bool scalar_is_zero(const QRingElem& x) { return x.rep.is_zero(); }
inline QRingElem scalar_zero_like(const QRingElem& x) { return QRingElem(x.ring, QPoly()); }
inline QRingElem scalar_one_like(const QRingElem& x) { return qr_embed(x.ring, Rational(1)); }
inline QRingElem scalar_rat_mul(const QRingElem& x, const Rational& c) {
    return QRingElem(x.ring, poly_scale_rat(x.rep, c));
}

using QRPoly = UniPoly<QRingElem>;

/// Lift a rational polynomial into (Q[g]/(g^k - C))[lambda].
QRPoly qr_lift(const QuotientRing& ring, const QPoly& f);

/// Monic gcd over Q[g] of {g^l - C} together with elems (zero entries are
/// skipped). Nonconstant iff a common complex root gamma with gamma^l = C
/// exists.
QPoly common_root_gcd(const std::vector<QPoly>& elems, int l, const Rational& C);
bool common_complex_root_exists(const std::vector<QPoly>& elems, int l, const Rational& C);

}  // namespace bloch

#endif
