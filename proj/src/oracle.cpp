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

#include "bloch/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bloch {

CycRing CycRing::make(int l) {
    CycRing r;
    r.l = l;
    switch (l) {
        case 1: r.phi = qpoly({-1, 1}); break;       // t - 1
        case 2: r.phi = qpoly({1, 1}); break;        // t + 1
        case 3: r.phi = qpoly({1, 1, 1}); break;     // t^2 + t + 1
        case 4: r.phi = qpoly({1, 0, 1}); break;     // t^2 + 1
        case 5: r.phi = qpoly({1, 1, 1, 1, 1}); break;
        case 6: r.phi = qpoly({1, -1, 1}); break;    // t^2 - t + 1
        default: throw std::invalid_argument("cyclotomic ring: l must be in 1..6");
    }
    return r;
}

CycElem cyc_embed(const CycRing& ring, const Rational& x) {
    QPoly p;
    if (sgn(x) != 0) p.c = {x};
    return CycElem(ring, p);
}

CycElem cyc_root_power(const CycRing& ring, int j) {
    j %= ring.l;
    if (j < 0) j += ring.l;
    QPoly p;
    p.c.assign(static_cast<size_t>(j) + 1, Rational(0));
    p.c[static_cast<size_t>(j)] = 1;
    p.trim();
    return CycElem(ring, p);
}

CycLaurent cyc_laurent_mul(const CycLaurent& a, const CycLaurent& b) {
    CycLaurent out;
    for (const auto& [ea, pa] : a)
        for (const auto& [eb, pb] : b) {
            CycPoly prod = pa * pb;
            if (prod.is_zero()) continue;
            auto it = out.find(ea + eb);
            if (it == out.end())
                out.emplace(ea + eb, prod);
            else
                it->second = it->second + prod;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

CycPoly cyc_lift(const CycRing& ring, const QPoly& f) {
    CycPoly out;
    out.c.reserve(f.c.size());
    for (const auto& x : f.c) out.c.push_back(cyc_embed(ring, x));
    out.trim();
    return out;
}

/// True rational content of a lambda-polynomial over the ring, or nullopt.
std::optional<QPoly> cyc_rational(const CycPoly& f) {
    QPoly out;
    out.c.reserve(f.c.size());
    for (const auto& x : f.c) {
        if (!x.is_rational()) return std::nullopt;
        out.c.push_back(x.rational_value());
    }
    out.trim();
    return out;
}

Rational binom(int n, int k) {
    Rational b(1);
    for (int i = 0; i < k; ++i) b *= rat(n - i, i + 1);
    return b;
}

QPoly collapse_sum_rat_impl(const QPoly& R, const QPoly& pi, int l) {
    QPoly acc;
    for (int j = 0; 2 * j <= l; ++j) {
        Rational coef = rat(l, l - j) * binom(l - j, j);
        if (j % 2 == 1) coef = -coef;
        QPoly term = poly_pow(R, l - 2 * j);
        if (j > 0) term = term * poly_pow(pi, j);
        acc = acc + poly_scale_rat(term, coef);
    }
    return acc;
}

std::string support_string(const CycLaurent& f) {
    std::string s = "{";
    for (const auto& [e, p] : f) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(e);
    }
    return s + "}";
}

}  // namespace

ConstructedInstance construct_case3(const QPoly& r2, const QPoly& s2, int l, int a) {
    if (l < 1 || l > 6) throw std::invalid_argument("construct_case3: l out of range");
    if (a % l != 0) throw std::invalid_argument("construct_case3: l must divide a");
    if (r2.is_zero() || s2.is_zero() || !(monic(r2) == r2))
        throw std::invalid_argument("construct_case3: need monic r2 and nonzero s2");

    CycRing ring = CycRing::make(l);
    CycLaurent prod{{0, cyc_lift(ring, qpoly({1}))}};
    ConstructedInstance out;
    out.l = l;
    out.a = a;
    for (int j = 0; j < l; ++j) {
        CycElem mu = cyc_root_power(ring, j);
        CycPoly s2mu = cyc_lift(ring, s2);
        for (auto& x : s2mu.c) x = x * mu;
        for (int dir : {+1, -1}) {
            CycLaurent factor{{0, cyc_lift(ring, r2)}, {dir, s2mu}};
            prod = cyc_laurent_mul(prod, factor);
            out.factors.push_back("(" + render_unipoly(r2, "lam") + ") + (" +
                                  render_unipoly(s2, "lam") + ")*mu^" + std::to_string(j) +
                                  "*x^" + std::to_string(dir * a / l));
        }
    }

    for (const auto& [e, p] : prod)
        if (e != 0 && e != l && e != -l)
            throw std::logic_error("construct_case3: unexpected support " + support_string(prod));
    auto get = [&](long e) -> QPoly {
        auto it = prod.find(e);
        if (it == prod.end()) return QPoly();
        auto q = cyc_rational(it->second);
        if (!q) throw std::logic_error("construct_case3: non-rational coefficient");
        return *q;
    };
    out.r = get(0);
    out.s = get(l);
    if (!(out.s == get(-l))) throw std::logic_error("construct_case3: asymmetric product");

    QPoly A = poly_pow(r2, l), B = poly_pow(s2, l);
    if (!(out.r == A * A + B * B) ||
        !(out.s == poly_scale_rat(A * B, Rational(l % 2 == 1 ? 1 : -1))))
        throw std::logic_error("construct_case3: A/B postcondition failed");
    return out;
}

ConstructedInstance construct_case2(const QPoly& R, const QPoly& sigma, const QPoly& tau, int l,
                                    int a) {
    if (l != 2 && l != 3) throw std::invalid_argument("construct_case2: l must be 2 or 3");
    if (a % l != 0) throw std::invalid_argument("construct_case2: l must divide a");
    if (R.is_zero() || !(monic(R) == R)) throw std::invalid_argument("construct_case2: R must be monic");
    if (sigma.is_zero() || tau.is_zero())
        throw std::invalid_argument("construct_case2: zero factor part");

    CycRing ring = CycRing::make(l);
    CycLaurent prod{{0, cyc_lift(ring, qpoly({1}))}};
    ConstructedInstance out;
    out.l = l;
    out.a = a;
    for (int j = 0; j < l; ++j) {
        CycPoly smu = cyc_lift(ring, sigma);
        for (auto& x : smu.c) x = x * cyc_root_power(ring, j);
        CycPoly tmu = cyc_lift(ring, tau);
        for (auto& x : tmu.c) x = x * cyc_root_power(ring, -j);
        CycLaurent factor{{0, cyc_lift(ring, R)}, {+1, smu}, {-1, tmu}};
        prod = cyc_laurent_mul(prod, factor);
        out.factors.push_back("(" + render_unipoly(R, "lam") + ") + (" +
                              render_unipoly(sigma, "lam") + ")*mu^" + std::to_string(j) +
                              "*x^" + std::to_string(a / l) + " + (" +
                              render_unipoly(tau, "lam") + ")*mu^-" + std::to_string(j) + "*x^-" +
                              std::to_string(a / l));
    }

    for (const auto& [e, p] : prod)
        if (e != 0 && e != l && e != -l)
            throw std::invalid_argument("construct_case2: non-three-term support " +
                                        support_string(prod));
    auto get = [&](long e) -> QPoly {
        auto it = prod.find(e);
        if (it == prod.end()) return QPoly();
        auto q = cyc_rational(it->second);
        if (!q) throw std::invalid_argument("construct_case2: non-rational coefficient");
        return *q;
    };
    QPoly r_raw = get(0), s_raw = get(l);
    if (!(s_raw == get(-l)))
        throw std::invalid_argument("construct_case2: x^a and x^-a parts differ (sigma^l != tau^l)");

    // Normalize so [lambda^n] r = (-1)^n like a genuine dispersion.
    const int n = r_raw.deg();
    const Rational flip(n % 2 == 1 ? -1 : 1);
    out.r = poly_scale_rat(r_raw, flip);
    out.s = poly_scale_rat(s_raw, flip);
    if (out.s.is_zero()) throw std::invalid_argument("construct_case2: degenerate s");
    return out;
}

bool collapse_identity_check(int l, int trials, std::uint64_t seed) {
    if (l != 2 && l != 3) throw std::invalid_argument("collapse_identity_check: l must be 2 or 3");
    std::mt19937_64 rng(seed);
    auto rnd_poly = [&](int maxdeg, bool want_monic) {
        int d = static_cast<int>(rng() % static_cast<std::uint64_t>(maxdeg + 1));
        QPoly f;
        f.c.assign(static_cast<size_t>(d) + 1, Rational(0));
        for (int i = 0; i < d; ++i)
            f.c[static_cast<size_t>(i)] = Rational(static_cast<long>(rng() % 11) - 5);
        f.c[static_cast<size_t>(d)] =
            want_monic ? Rational(1) : Rational(static_cast<long>(rng() % 5) + 1);
        return f;
    };

    CycRing ring = CycRing::make(l);
    for (int t = 0; t < trials; ++t) {
        QPoly R = rnd_poly(2, true);
        QPoly sigma = rnd_poly(2, false);
        QPoly tau = rnd_poly(2, false);

        CycLaurent prod{{0, cyc_lift(ring, qpoly({1}))}};
        for (int j = 0; j < l; ++j) {
            CycPoly smu = cyc_lift(ring, sigma);
            for (auto& x : smu.c) x = x * cyc_root_power(ring, j);
            CycPoly tmu = cyc_lift(ring, tau);
            for (auto& x : tmu.c) x = x * cyc_root_power(ring, -j);
            prod = cyc_laurent_mul(prod, CycLaurent{{0, cyc_lift(ring, R)}, {+1, smu}, {-1, tmu}});
        }

        CycLaurent expect;
        const Rational edge(l % 2 == 1 ? 1 : -1);  // (-1)^{l+1}
        expect[0] = cyc_lift(ring, collapse_sum_rat_impl(R, sigma * tau, l));
        expect[l] = cyc_lift(ring, poly_scale_rat(poly_pow(sigma, l), edge));
        expect[-l] = cyc_lift(ring, poly_scale_rat(poly_pow(tau, l), edge));
        for (auto it = expect.begin(); it != expect.end();)
            it = it->second.is_zero() ? expect.erase(it) : std::next(it);

        if (!(prod == expect)) return false;
    }
    return true;
}

bool metamorphic_suite(const PeriodicGraph& g, const Assignment& asg, const Transform& tr) {
    const LaurentPoly D = dispersion(g, asg).poly;
    const int n = g.n;
    SamplerOptions opt;

    PeriodicGraph g2 = g;
    Assignment asg2 = asg;
    LaurentPoly expected = D;

    switch (tr.kind) {
        case Transform::Shift: {
            for (auto& p : asg2.potentials) p += tr.value;
            for (auto& v : g2.vertices)
                if (v.potential) *v.potential += tr.value;
            expected = lambda_shift(D, tr.value);
            break;
        }
        case Transform::Scale: {
            if (sgn(tr.value) == 0) throw std::invalid_argument("metamorphic scale by zero");
            for (auto& p : asg2.potentials) p *= tr.value;
            for (auto& w : asg2.weights) w *= tr.value;
            for (auto& v : g2.vertices)
                if (v.potential) *v.potential *= tr.value;
            for (auto& e : g2.edges)
                if (e.weight) *e.weight *= tr.value;
            Rational cn(1);
            for (int i = 0; i < n; ++i) cn *= tr.value;
            expected = lp_scale(lambda_scale(D, Rational(1) / tr.value), cn);
            break;
        }
        case Transform::InvertX: {
            expected = invert_z(D);
            break;
        }
    }

    if (!(dispersion(g2, asg2).poly == expected)) return false;
    return certify_graph(g, opt).verdict == certify_graph(g2, opt).verdict;
}

QPoly collapse_sum_rational(const QPoly& R, const QPoly& pi, int l) {
    return collapse_sum_rat_impl(R, pi, l);
}

PeriodicGraph random_graph(std::mt19937_64& rng) {
    for (;;) {
        PeriodicGraph g;
        g.d = 1 + static_cast<int>(rng() % 2);
        g.n = 1 + static_cast<int>(rng() % 6);
        // Potentials stay free: the certifier's gap sampler owns them, and
        // the Gershgorin guarantee is deterministic only then.
        g.vertices.resize(static_cast<size_t>(g.n));

        int m = 1 + static_cast<int>(rng() % 10);
        std::set<std::tuple<int, int, std::vector<int>>> seen;
        for (int k = 0; k < m; ++k) {
            EdgeSpec e;
            e.u = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
            e.v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
            if (e.u > e.v) std::swap(e.u, e.v);
            e.offset.resize(static_cast<size_t>(g.d));
            for (auto& x : e.offset) x = static_cast<int>(rng() % 5) - 2;
            if (e.u == e.v) {
                bool zero = true, pos = false;
                for (int x : e.offset) {
                    if (x != 0) {
                        zero = false;
                        pos = x > 0;
                        break;
                    }
                }
                if (zero) e.offset[0] = 1;
                else if (!pos)
                    for (auto& x : e.offset) x = -x;
            }
            if (!seen.emplace(e.u, e.v, e.offset).second) continue;
            if (rng() % 2 == 0) e.weight = Rational(static_cast<long>(rng() % 4) + 1);
            g.edges.push_back(e);
        }
        if (g.edges.empty()) continue;
        validate(g);
        return g;
    }
}

PeriodicGraph random_eligible_graph(std::mt19937_64& rng) {
    for (;;) {
        PeriodicGraph g = random_graph(rng);
        if (classify(g).kind == StructuralKind::Eligible) return g;
    }
}

Assignment random_assignment(const PeriodicGraph& g, std::mt19937_64& rng) {
    std::vector<Rational> pots, wts;
    for (const auto& v : g.vertices)
        if (!v.potential) pots.push_back(Rational(static_cast<long>(rng() % 21) - 10));
    for (const auto& e : g.edges)
        if (!e.weight) wts.push_back(Rational(static_cast<long>(rng() % 5) + 1));
    return resolve_assignment(g, pots, wts);
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, int max_n, int d) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    PolyMatrix m = PolyMatrix::make(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int terms = static_cast<int>(rng() % 3);
            for (int t = 0; t < terms; ++t) {
                Monomial mo;
                mo.z.resize(static_cast<size_t>(d));
                for (auto& x : mo.z) x = static_cast<int>(rng() % 5) - 2;
                mo.lam = static_cast<int>(rng() % 2);
                m.at(i, j).add_term(mo, Rational(static_cast<long>(rng() % 7) - 3));
            }
        }
    return m;
}

LaurentPoly determinant_permsum(const PolyMatrix& m) {
    std::vector<int> perm(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i) perm[static_cast<size_t>(i)] = i;
    int d = m.n > 0 ? m.a[0].d : 0;
    LaurentPoly det = LaurentPoly::zero(d);
    do {
        // Parity by counting inversions.
        int inv = 0;
        for (int i = 0; i < m.n; ++i)
            for (int j = i + 1; j < m.n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        LaurentPoly term = LaurentPoly::constant(d, Rational(inv % 2 == 0 ? 1 : -1));
        for (int i = 0; i < m.n; ++i) term = term * m.at(i, perm[static_cast<size_t>(i)]);
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace bloch
