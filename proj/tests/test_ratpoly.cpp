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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bloch/ratpoly.hpp"

using namespace bloch;

namespace {

QPoly random_qpoly(std::mt19937_64& rng, int maxdeg, bool monic_out = false) {
    int d = static_cast<int>(rng() % static_cast<std::uint64_t>(maxdeg + 1));
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = Rational(static_cast<long>(rng() % 9) - 4);
    c[static_cast<size_t>(d)] = monic_out ? Rational(1) : Rational(static_cast<long>(rng() % 4) + 1);
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(*rat_parse("3/6") == rat(1, 2));
    CHECK(*rat_parse("-4/2") == rat(-2));
    CHECK(*rat_parse("7") == rat(7));
    CHECK(!rat_parse("1/0").has_value());
    CHECK(!rat_parse("x").has_value());
    CHECK(rat_str(rat(-1, 3)) == "-1/3");
}

TEST_CASE("gcd_monic") {
    // (lam^2 - 1, lam - 1) -> lam - 1
    CHECK(gcd_monic(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
    // (lam^2 + 1, lam + 1) -> 1
    CHECK(gcd_monic(qpoly({1, 0, 1}), qpoly({1, 1})) == qpoly({1}));
    // ladder r,s at v1=0, v2=1, b=1: r = (0-lam)(1-lam) - 1 = lam^2 - lam - 1
    CHECK(gcd_monic(qpoly({-1, -1, 1}), qpoly({1, -1})) == qpoly({1}));
    CHECK_THROWS(gcd_monic(QPoly(), QPoly()));
}

TEST_CASE("resultant via Sylvester determinant") {
    CHECK(resultant(qpoly({-1, 1}), qpoly({1, 1})) == rat(-2));
    QPoly f = qpoly({2, -3, 1});
    CHECK(resultant(f, f) == rat(0));
    CHECK(resultant(qpoly({1, 0, 1}), qpoly({0, 1})) == rat(1));
    CHECK_THROWS(resultant(qpoly({2}), qpoly({3})));
}

TEST_CASE("resultant zero iff gcd nonconstant") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        QPoly f = random_qpoly(rng, 6), g = random_qpoly(rng, 6);
        if (f.deg() < 1 && g.deg() < 1) continue;
        bool res_zero = resultant(f, g) == 0;
        bool gcd_big = gcd_monic(f, g).deg() >= 1;
        CHECK(res_zero == gcd_big);
    }
}

TEST_CASE("squarefree decomposition") {
    // (lam-1)^2 (lam+2)
    QPoly f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({2, 1});
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == qpoly({2, 1}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == qpoly({-1, 1}));
    CHECK(parts[1].second == 2);

    CHECK(squarefree_decomposition(qpoly({5})).empty());
    auto cube = squarefree_decomposition(qpoly({0, 0, 0, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].first == qpoly({0, 1}));
    CHECK(cube[0].second == 3);
    CHECK_THROWS(squarefree_decomposition(QPoly()));
}

TEST_CASE("squarefree decomposition reassembles") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        QPoly f = random_qpoly(rng, 3) * random_qpoly(rng, 2) * random_qpoly(rng, 2);
        if (f.is_zero()) continue;
        QPoly prod = QPoly({f.lead()});
        for (const auto& [p, m] : squarefree_decomposition(f)) prod = prod * poly_pow(p, m);
        CHECK(prod == f);
        CHECK(is_squarefree(f) == [&] {
            for (const auto& [p, m] : squarefree_decomposition(f))
                if (m > 1) return false;
            return true;
        }());
    }
}

TEST_CASE("perfect squares over C") {
    auto sq = perfect_square_over_C(qpoly({2, 4, 2}));
    REQUIRE(sq.has_value());
    CHECK(sq->first == rat(2));
    CHECK(sq->second == qpoly({1, 1}));

    CHECK(!perfect_square_over_C(qpoly({1, 0, 1})).has_value());

    QPoly g = poly_scale_rat(qpoly({-2, 0, 1}) * qpoly({-2, 0, 1}), rat(4));
    auto sq2 = perfect_square_over_C(g);
    REQUIRE(sq2.has_value());
    CHECK(sq2->first == rat(4));
    CHECK(sq2->second == qpoly({-2, 0, 1}));
}

TEST_CASE("perfect square postcondition on random inputs") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        QPoly f = random_qpoly(rng, 3);
        if (f.is_zero()) continue;
        QPoly g = f * f;
        auto sq = perfect_square_over_C(g);
        REQUIRE(sq.has_value());
        CHECK(poly_scale_rat(sq->second * sq->second, sq->first) == g);
    }
}

TEST_CASE("monic lth roots") {
    CHECK(monic_lth_root(qpoly({1, 2, 1}), 2) == qpoly({1, 1}));
    CHECK(!monic_lth_root(qpoly({1, 0, 1}), 2).has_value());
    CHECK(monic_lth_root(qpoly({0, 0, 0, 0, 0, 0, 1}), 3) == qpoly({0, 0, 1}));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        for (int l : {2, 3}) {
            QPoly q = random_qpoly(rng, 6, true);
            CHECK(monic_lth_root(poly_pow(q, l), l) == q);
        }
    }
}

TEST_CASE("quotient ring arithmetic") {
    QuotientRing ring{2, rat(4)};  // g^2 = 4
    QRingElem g = qr_gen(ring);
    CHECK((g * g).rep == qpoly({4}));
    CHECK((g * g * g).rep == qpoly({0, 4}));

    // reduction is idempotent and ring laws hold on random samples
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        QuotientRing r{2 + static_cast<int>(rng() % 3), Rational(static_cast<long>(rng() % 7) - 3)};
        auto rnd = [&] { return QRingElem(r, random_qpoly(rng, r.k + 2)); };
        QRingElem a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        QRingElem again(r, a.rep);
        CHECK(again == a);
    }
}

TEST_CASE("common complex roots with the norm constraint") {
    CHECK(common_complex_root_exists({qpoly({-2, 1})}, 2, rat(4)));
    CHECK(!common_complex_root_exists({qpoly({-3, 1})}, 2, rat(4)));
    CHECK(common_complex_root_exists({QPoly()}, 2, rat(4)));
}

TEST_CASE("divrem and monic") {
    QPoly f = qpoly({1, 2, 3, 4}), g = qpoly({1, 1});
    auto [q, r] = divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.deg() < g.deg());
    CHECK(monic(qpoly({2, 4})) == QPoly({rat(1, 2), rat(1)}));
}

TEST_CASE("rational roots") {
    QPoly f = qpoly({-2, 1}) * qpoly({3, 2});  // roots 2 and -3/2
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK((roots[0] == rat(2) || roots[1] == rat(2)));
    CHECK((roots[0] == rat(-3, 2) || roots[1] == rat(-3, 2)));
    CHECK(rational_roots(qpoly({1, 0, 1})).empty());
}
