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

#include "bloch/ratpoly.hpp"

#include <algorithm>

namespace bloch {

std::optional<Rational> rat_parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    // Accept "p", "-p", "p/q" with decimal digits only.
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!valid_int(text)) return std::nullopt;
            Rational q(text);
            q.canonicalize();
            return q;
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-') return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        Rational q(Integer(num), d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rat_str(const Rational& q) { return q.get_str(); }

Rational rat_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

QPoly qpoly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    QPoly q, r = f;
    if (f.deg() >= g.deg()) q.c.assign(f.deg() - g.deg() + 1, Rational(0));
    const Rational& lg = g.lead();
    while (!r.is_zero() && r.deg() >= g.deg()) {
        int k = r.deg() - g.deg();
        Rational t = r.lead() / lg;
        q.c[k] = t;
        // r -= t * lambda^k * g
        for (int i = 0; i <= g.deg(); ++i) r.c[i + k] -= t * g.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly monic(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("monic: zero polynomial");
    return poly_scale_rat(f, Rational(1) / f.lead());
}

QPoly derivative(const QPoly& f) {
    if (f.deg() <= 0) return QPoly();
    std::vector<Rational> c(f.deg());
    for (int i = 1; i <= f.deg(); ++i) c[i - 1] = f.c[i] * Rational(i);
    return QPoly(std::move(c));
}

QPoly gcd_monic(const QPoly& f, const QPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("undefined gcd");
    QPoly a = f, b = g;
    while (!b.is_zero()) {
        QPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

namespace {

/// Fraction-free (Bareiss) determinant of a square rational matrix.
Rational bareiss_det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m[k][k]) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(m[i][k]) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Rational(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Rational(-m[n - 1][n - 1]);
}

}  // namespace

Rational resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) {
        if (f.deg() < 1 && g.deg() < 1) throw std::invalid_argument("resultant of two constants");
        return Rational(0);
    }
    const int s = f.deg(), t = g.deg();
    if (s < 1 && t < 1) throw std::invalid_argument("resultant of two constants");
    const int n = s + t;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    // Sylvester layout with ascending coefficients: t rows of f, s rows of g.
    for (int i = 0; i < t; ++i)
        for (int j = 0; j <= s; ++j) m[i][i + j] = f.c[j];
    for (int i = 0; i < s; ++i)
        for (int j = 0; j <= t; ++j) m[t + i][i + j] = g.c[j];
    return bareiss_det(std::move(m));
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero input");
    std::vector<std::pair<QPoly, int>> out;
    if (f.deg() == 0) return out;
    // Yun's algorithm on the monic part.
    QPoly a = monic(f);
    QPoly da = derivative(a);
    QPoly g = gcd_monic(a, da);
    QPoly w = divrem(a, g).first;
    QPoly y = divrem(da, g).first;
    int mult = 1;
    while (w.deg() > 0) {
        QPoly z = y - derivative(w);
        QPoly p = gcd_monic(w, z);
        if (p.deg() > 0) out.emplace_back(p, mult);
        w = divrem(w, p).first;
        y = divrem(z, p).first;
        ++mult;
    }
    return out;
}

bool is_squarefree(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero input");
    if (f.deg() == 0) return true;
    return gcd_monic(f, derivative(f)).deg() == 0;
}

std::optional<std::pair<Rational, QPoly>> perfect_square_over_C(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("perfect_square_over_C: zero input");
    auto parts = squarefree_decomposition(f);
    QPoly w({Rational(1)});
    for (const auto& [p, m] : parts) {
        if (m % 2 != 0) return std::nullopt;
        w = w * poly_pow(p, m / 2);
    }
    Rational c = f.lead();
    if (!(poly_scale_rat(w * w, c) == f)) throw std::logic_error("perfect square reassembly failed");
    return std::make_pair(c, w);
}

std::vector<Rational> rational_roots(const QPoly& f) {
    std::vector<Rational> roots;
    if (f.is_zero() || f.deg() == 0) return roots;
    // Clear denominators to integer coefficients.
    Integer lcm(1);
    for (const auto& q : f.c) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
    std::vector<Integer> ic(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Rational v = f.c[i] * Rational(lcm);
        ic[i] = v.get_num();
    }
    int low = 0;
    while (low < static_cast<int>(ic.size()) && ic[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    Integer a0 = ic[low];
    Integer an = ic.back();
    auto divisors = [](Integer v) {
        v = abs(v);
        std::vector<Integer> ds;
        for (Integer i(1); i * i <= v; ++i) {
            if (v % i == 0) {
                ds.push_back(i);
                if (i * i != v) ds.push_back(v / i);
            }
        }
        return ds;
    };
    for (const Integer& p : divisors(a0)) {
        for (const Integer& q : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s > 0 ? p : Integer(-p), q);
                cand.canonicalize();
                if (scalar_is_zero(poly_eval(f, cand)) &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

QRingElem qr_embed(const QuotientRing& ring, const Rational& x) {
    return QRingElem(ring, QPoly({x}));
}

QRingElem qr_gen(const QuotientRing& ring) {
    if (ring.k == 1) return qr_embed(ring, ring.C);
    return QRingElem(ring, QPoly({Rational(0), Rational(1)}));
}

QRPoly qr_lift(const QuotientRing& ring, const QPoly& f) {
    std::vector<QRingElem> c;
    c.reserve(f.c.size());
    for (const auto& x : f.c) c.push_back(qr_embed(ring, x));
    return QRPoly(std::move(c));
}

QPoly common_root_gcd(const std::vector<QPoly>& elems, int l, const Rational& C) {
    if (l < 1) throw std::invalid_argument("common_root_gcd: modulus degree must be >= 1");
    std::vector<Rational> mod(l + 1, Rational(0));
    mod[0] = -C;
    mod[l] = 1;
    QPoly g{std::vector<Rational>(mod)};
    for (const auto& e : elems) {
        if (e.is_zero()) continue;  // no constraint
        g = gcd_monic(g, e);
        if (g.deg() == 0) break;
    }
    return g;
}

bool common_complex_root_exists(const std::vector<QPoly>& elems, int l, const Rational& C) {
    return common_root_gcd(elems, l, C).deg() >= 1;
}

}  // namespace bloch
