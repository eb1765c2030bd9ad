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

#include "bloch/laurent.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace bloch {

namespace {
void check_dim(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.d != b.d) throw std::logic_error("laurent dimension mismatch");
}
}  // namespace

LaurentPoly LaurentPoly::constant(int d, const Rational& c) {
    LaurentPoly f = zero(d);
    if (sgn(c) != 0) f.terms.emplace(Monomial{std::vector<int>(d, 0), 0}, c);
    return f;
}

LaurentPoly LaurentPoly::variable_z(int d, int i, int e) {
    if (i < 0 || i >= d) throw std::invalid_argument("variable_z: index out of range");
    Monomial m{std::vector<int>(d, 0), 0};
    m.z[i] = e;
    LaurentPoly f = zero(d);
    f.terms.emplace(std::move(m), Rational(1));
    return f;
}

LaurentPoly LaurentPoly::lambda(int d, int e) {
    if (e < 0) throw std::invalid_argument("lambda: negative exponent");
    LaurentPoly f = zero(d);
    f.terms.emplace(Monomial{std::vector<int>(d, 0), e}, Rational(1));
    return f;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a, b);
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) { return lp_scale(a, Rational(-1)); }

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a, b);
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, Rational(-c));
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a, b);
    LaurentPoly r = LaurentPoly::zero(a.d);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Monomial m{ma.z, ma.lam + mb.lam};
            for (int i = 0; i < a.d; ++i) m.z[i] += mb.z[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly lp_scale(const LaurentPoly& a, const Rational& c) {
    LaurentPoly r = LaurentPoly::zero(a.d);
    if (sgn(c) == 0) return r;
    for (const auto& [m, x] : a.terms) r.terms.emplace(m, x * c);
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("lp_pow: negative exponent");
    LaurentPoly acc = LaurentPoly::constant(a.d, Rational(1));
    LaurentPoly base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int lambda_degree(const LaurentPoly& f) {
    int best = -1;
    for (const auto& [m, c] : f.terms) best = std::max(best, m.lam);
    return best;
}

LaurentPoly invert_z(const LaurentPoly& f) {
    LaurentPoly r = LaurentPoly::zero(f.d);
    for (const auto& [m, c] : f.terms) {
        Monomial mm = m;
        for (auto& e : mm.z) e = -e;
        r.terms.emplace(std::move(mm), c);
    }
    return r;
}

LaurentPoly lambda_shift(const LaurentPoly& f, const Rational& t) {
    // lam^k -> (lam - t)^k, expanded with binomial coefficients.
    int n = lambda_degree(f);
    std::vector<LaurentPoly> powers;  // (lam - t)^k
    powers.push_back(LaurentPoly::constant(f.d, Rational(1)));
    LaurentPoly lin = LaurentPoly::lambda(f.d) - LaurentPoly::constant(f.d, t);
    for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * lin);
    LaurentPoly r = LaurentPoly::zero(f.d);
    for (const auto& [m, c] : f.terms) {
        Monomial base{m.z, 0};
        LaurentPoly zpart = LaurentPoly::zero(f.d);
        zpart.terms.emplace(base, c);
        r = r + zpart * powers[m.lam];
    }
    return r;
}

LaurentPoly lambda_scale(const LaurentPoly& f, const Rational& c) {
    LaurentPoly r = LaurentPoly::zero(f.d);
    // lam^k -> c^k lam^k
    for (const auto& [m, x] : f.terms) {
        Rational ck(1);
        for (int i = 0; i < m.lam; ++i) ck *= c;
        r.add_term(m, x * ck);
    }
    return r;
}

LaurentPoly substitute(const LaurentPoly& f, const std::vector<Binding>& bindings, int out_d) {
    if (static_cast<int>(bindings.size()) != f.d)
        throw std::invalid_argument("substitute: bindings must cover all variables");
    LaurentPoly r = LaurentPoly::zero(out_d);
    for (const auto& [m, c] : f.terms) {
        Monomial mm{std::vector<int>(out_d, 0), m.lam};
        for (int i = 0; i < f.d; ++i) {
            const Binding& b = bindings[i];
            if (b.kind == Binding::SetOne) continue;
            if (b.target < 0 || b.target >= out_d)
                throw std::invalid_argument("substitute: binding target out of range");
            mm.z[b.target] += m.z[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

LaurentPoly specialize_to_x(const LaurentPoly& f, int coord) {
    std::vector<Binding> bs(f.d, Binding{Binding::SetOne, 0});
    if (coord < 0 || coord >= f.d) throw std::invalid_argument("specialize_to_x: bad coordinate");
    bs[coord] = Binding{Binding::Rename, 0};
    return substitute(f, bs, 1);
}

QPoly coeff_of_xpower(const LaurentPoly& f, long e) {
    if (f.d > 1) throw std::invalid_argument("coeff_of_xpower: d must be <= 1");
    std::vector<Rational> c;
    for (const auto& [m, v] : f.terms) {
        long xe = f.d == 1 ? m.z[0] : 0;
        if (xe != e) continue;
        if (static_cast<int>(c.size()) <= m.lam) c.resize(m.lam + 1, Rational(0));
        c[m.lam] = v;
    }
    return QPoly(std::move(c));
}

std::set<long> x_support(const LaurentPoly& f) {
    if (f.d > 1) throw std::invalid_argument("x_support: d must be <= 1");
    std::set<long> s;
    for (const auto& [m, v] : f.terms) s.insert(f.d == 1 ? m.z[0] : 0);
    return s;
}

LaurentPoly from_unipoly(int d, const QPoly& f) {
    LaurentPoly r = LaurentPoly::zero(d);
    for (int i = 0; i <= f.deg(); ++i)
        r.add_term(Monomial{std::vector<int>(d, 0), i}, f.c[i]);
    return r;
}

QPoly to_unipoly(const LaurentPoly& f) {
    std::vector<Rational> c;
    for (const auto& [m, v] : f.terms) {
        for (int e : m.z)
            if (e != 0) throw std::invalid_argument("to_unipoly: z variables present");
        if (static_cast<int>(c.size()) <= m.lam) c.resize(m.lam + 1, Rational(0));
        c[m.lam] = v;
    }
    return QPoly(std::move(c));
}

std::string render(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int i = 0; i < f.d; ++i)
            if (m.z[i] != 0) os << "*z" << (i + 1) << "^" << m.z[i];
        if (m.lam != 0) os << "*lam^" << m.lam;
    }
    return os.str();
}

std::string render_unipoly(const QPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= f.deg(); ++i) {
        if (scalar_is_zero(f.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(f.c[i]);
        if (i != 0) os << "*" << var << "^" << i;
    }
    return os.str();
}

PolyMatrix PolyMatrix::make(int n, int d) {
    PolyMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, LaurentPoly::zero(d));
    return m;
}

namespace {

LaurentPoly det_rec(const PolyMatrix& m, unsigned mask, int row,
                    std::unordered_map<unsigned, LaurentPoly>& memo, int d) {
    if (mask == 0) return LaurentPoly::constant(d, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LaurentPoly acc = LaurentPoly::zero(d);
    int sign = 1;
    for (int j = 0; j < m.n; ++j) {
        if (!(mask & (1u << j))) continue;
        const LaurentPoly& e = m.at(row, j);
        if (!e.is_zero()) {
            LaurentPoly sub = det_rec(m, mask & ~(1u << j), row + 1, memo, d);
            LaurentPoly term = e * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.n < 1) throw std::invalid_argument("determinant: empty matrix");
    if (m.n > 16) throw std::invalid_argument("determinant: refusing n > 16");
    int d = m.a.front().d;
    std::unordered_map<unsigned, LaurentPoly> memo;
    return det_rec(m, (1u << m.n) - 1, 0, memo, d);
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    LaurentPoly r = f;
    LaurentPoly q = LaurentPoly::zero(f.d);
    // Leading-term division in the canonical order; division is exact by
    // contract, so the loop strictly reduces the leading monomial.
    const auto& glead = *g.terms.rbegin();
    while (!r.is_zero()) {
        const Monomial rmono = r.terms.rbegin()->first;  // copy: r is reassigned below
        const Rational rcoef = r.terms.rbegin()->second;
        Monomial qm{rmono.z, rmono.lam - glead.first.lam};
        if (qm.lam < 0) throw std::runtime_error("exact_divide: not divisible");
        for (int i = 0; i < f.d; ++i) qm.z[i] -= glead.first.z[i];
        Rational qc = rcoef / glead.second;
        LaurentPoly t = LaurentPoly::zero(f.d);
        t.terms.emplace(qm, qc);
        q = q + t;
        r = r - t * g;
        if (!r.is_zero() && !(r.terms.rbegin()->first < rmono))
            throw std::runtime_error("exact_divide: not divisible");
    }
    return q;
}

LaurentPoly determinant_bareiss(const PolyMatrix& m) {
    if (m.n < 1) throw std::invalid_argument("determinant: empty matrix");
    const int n = m.n;
    const int d = m.a.front().d;
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(d)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    LaurentPoly prev = LaurentPoly::constant(d, Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return LaurentPoly::zero(d);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.is_zero() ? num : exact_divide(num, prev);
            }
            a[i][k] = LaurentPoly::zero(d);
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// --- Hull machinery ----------------------------------------------------------

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (static_cast<long long>(a.first) - o.first) * (b.second - o.second) -
           (static_cast<long long>(a.second) - o.second) * (b.first - o.first);
}

/// Andrew monotone chain; returns hull vertices counterclockwise starting at
/// the lexicographically smallest point. Collinear interior points removed.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.pop_back();
    return h;
}

std::vector<LatticePoint> support_points(const LaurentPoly& f) {
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : f.terms) pts.emplace_back(f.d == 1 ? m.z[0] : 0, m.lam);
    return pts;
}

}  // namespace

std::vector<LatticePoint> newton_polytope_1d(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("newton_polytope_1d: zero polynomial");
    if (f.d != 1) throw std::invalid_argument("newton_polytope_1d: d must be 1");
    return convex_hull(support_points(f));
}

std::vector<LatticePoint> minkowski_sum_vertices(const std::vector<LatticePoint>& p,
                                                 const std::vector<LatticePoint>& q) {
    if (p.empty() || q.empty()) throw std::invalid_argument("minkowski sum of empty hull");
    std::vector<LatticePoint> sums;
    sums.reserve(p.size() * q.size());
    for (const auto& a : p)
        for (const auto& b : q) sums.emplace_back(a.first + b.first, a.second + b.second);
    return convex_hull(std::move(sums));
}

namespace {

/// Integer points of the convex polygon (given by hull vertices) whose second
/// coordinate, after shifting down by `shift`, lies in [0, cap].
std::set<LatticePoint> shifted_lattice_points(const std::vector<LatticePoint>& hull, long shift,
                                              long cap) {
    std::set<LatticePoint> out;
    long xmin = hull.front().first, xmax = hull.front().first;
    for (const auto& v : hull) {
        xmin = std::min(xmin, v.first);
        xmax = std::max(xmax, v.first);
    }
    const size_t nv = hull.size();
    for (long x = xmin; x <= xmax; ++x) {
        bool any = false;
        Rational ylo, yhi;
        auto consider = [&](const Rational& y) {
            if (!any) {
                ylo = yhi = y;
                any = true;
            } else {
                if (y < ylo) ylo = y;
                if (y > yhi) yhi = y;
            }
        };
        for (size_t i = 0; i < nv; ++i) {
            const auto& a = hull[i];
            const auto& b = hull[(i + 1) % nv];
            if (nv == 1) {
                if (a.first == x) consider(Rational(a.second));
                break;
            }
            long x1 = a.first, x2 = b.first;
            if (x1 == x2) {
                if (x1 == x) {
                    consider(Rational(a.second));
                    consider(Rational(b.second));
                }
                continue;
            }
            if (x < std::min(x1, x2) || x > std::max(x1, x2)) continue;
            // y = y1 + (x - x1) * (y2 - y1) / (x2 - x1), exact.
            Rational y = Rational(a.second) +
                         Rational(x - x1) * Rational(b.second - a.second) / Rational(x2 - x1);
            consider(y);
        }
        if (!any) continue;
        // Integer lambda values in [max(0, ceil(ylo - shift)), min(cap, floor(yhi - shift))].
        Rational lo = ylo - Rational(shift);
        Rational hi = yhi - Rational(shift);
        Integer lo_i, hi_i;
        mpz_cdiv_q(lo_i.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_fdiv_q(hi_i.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        long lo_l = std::max(0L, static_cast<long>(lo_i.get_si()));
        long hi_l = std::min(cap, static_cast<long>(hi_i.get_si()));
        for (long y = lo_l; y <= hi_l; ++y) out.emplace(x, y);
    }
    return out;
}

}  // namespace

SupportBounds factor_support_bounds(const LaurentPoly& f, int n, int r) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("factor_support_bounds: r out of range");
    auto hull = newton_polytope_1d(f);
    SupportBounds sb;
    sb.r = r;
    for (const auto& p : support_points(f)) sb.S.insert(p);
    sb.A = shifted_lattice_points(hull, n - r, r);
    sb.B = shifted_lattice_points(hull, r, n - r);
    return sb;
}

}  // namespace bloch
