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

#include "bloch/oracle.hpp"
#include "bloch/reduce.hpp"

using namespace bloch;

namespace {

PeriodicGraph ladder() {
    PeriodicGraph g;
    g.d = 1;
    g.n = 2;
    g.vertices.resize(2);
    g.edges = {{0, 0, {1}, std::nullopt}, {1, 1, {1}, std::nullopt}, {0, 1, {0}, std::nullopt}};
    return g;
}

}  // namespace

TEST_CASE("ladder reduction plan") {
    PeriodicGraph g = ladder();
    ReductionPlan plan = plan_reduction(g);
    CHECK(plan.tree_edges == std::vector<int>{2});
    CHECK(plan.cross_edge == 0);  // loop on vertex 0: smallest L1 norm, lowest (u,v)
    CHECK_FALSE(plan.cross_flipped);
    CHECK(plan.cross_offset == std::vector<int>{1});
    CHECK(plan.coordinate == 0);
    CHECK(plan.a == 1);
    CHECK(plan.zeroed_edges == std::vector<int>{1});

    std::vector<int> kept;
    PeriodicGraph spec = specialized_graph(g, plan, kept);
    CHECK(spec.edges.size() == 2);
    CHECK(kept == std::vector<int>{2, 0});  // tree edges first, then the cross edge
}

TEST_CASE("ladder reduced dispersion") {
    PeriodicGraph g = ladder();
    ReductionPlan plan = plan_reduction(g);
    // v1=2, v2=5, alpha=3 (kept loop), beta=7 (rung); second loop zeroed
    Assignment asg = resolve_assignment(g, {rat(2), rat(5)}, {rat(3), rat(99), rat(7)});
    ReducedDispersion rd = reduced_dispersion(g, plan, asg);
    CHECK(rd.a == 1);
    // r = (2-lam)(5-lam) - 49
    CHECK(rd.r == qpoly({-39, -7, 1}));
    // s = 3*(5-lam)
    CHECK(rd.s == qpoly({15, -3}));
    CHECK(rd.p == 1);
    CHECK(rd.eta == std::vector<int>{0});
    CHECK(rd.kappa == rat(3));
    CHECK(rd.U == std::vector<int>{1});
    CHECK(crosscheck_s(rd, g, plan, asg));

    LaurentPoly x = LaurentPoly::variable_z(1, 0);
    LaurentPoly xinv = LaurentPoly::variable_z(1, 0, -1);
    LaurentPoly expect = from_unipoly(1, rd.r) + from_unipoly(1, rd.s) * (x + xinv);
    CHECK(rd.specialized == expect);
}

TEST_CASE("two-vertex double edge gives p = 2") {
    PeriodicGraph g;
    g.d = 1;
    g.n = 2;
    g.vertices.resize(2);
    g.edges = {{0, 1, {0}, std::nullopt}, {0, 1, {1}, std::nullopt}};
    ReductionPlan plan = plan_reduction(g);
    CHECK(plan.tree_edges == std::vector<int>{0});
    CHECK(plan.cross_edge == 1);
    CHECK(plan.a == 1);
    CHECK(plan.zeroed_edges.empty());

    // v1=2, v2=5, beta=3, gamma=7
    Assignment asg = resolve_assignment(g, {rat(2), rat(5)}, {rat(3), rat(7)});
    ReducedDispersion rd = reduced_dispersion(g, plan, asg);
    CHECK(rd.p == 2);
    CHECK(rd.U.empty());
    CHECK(rd.kappa == rat(-21));  // (-1)^{p-1} * gamma * beta
    CHECK(rd.s == qpoly({-21}));
    // r = (2-lam)(5-lam) - 9 - 49
    CHECK(rd.r == qpoly({-48, -7, 1}));
    CHECK(crosscheck_s(rd, g, plan, asg));
}

TEST_CASE("reduction shape on random eligible graphs") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        PeriodicGraph g = random_eligible_graph(rng);
        ReductionPlan plan = plan_reduction(g);
        Assignment asg = random_assignment(g, rng);
        ReducedDispersion rd = reduced_dispersion(g, plan, asg);
        const int n = g.n;

        CHECK(rd.a >= 1);
        CHECK(rd.r.deg() == n);
        CHECK(rd.r.c[n] == rat(n % 2 == 0 ? 1 : -1));
        CHECK(rd.p >= 1);
        CHECK(rd.p <= n);
        CHECK(rd.s.deg() == n - rd.p);
        // [lam^{n-p}] s = (-1)^{n-1} * cycle weight product
        Rational cycle_prod = rd.kappa * rat(rd.p % 2 == 0 ? -1 : 1);
        CHECK(rd.s.c[n - rd.p] == cycle_prod * rat(n % 2 == 0 ? -1 : 1));
        CHECK(static_cast<int>(rd.eta.size()) == rd.p);
        CHECK(static_cast<int>(rd.U.size()) == n - rd.p);
        CHECK(crosscheck_s(rd, g, plan, asg));

        // support of the specialization is exactly {0, +-a} with symmetry
        std::set<long> sup = x_support(rd.specialized);
        CHECK(sup.count(rd.a) == 1);
        CHECK(sup.count(-rd.a) == 1);
        CHECK(coeff_of_xpower(rd.specialized, rd.a) == rd.s);
        CHECK(coeff_of_xpower(rd.specialized, -rd.a) == rd.s);
        CHECK(coeff_of_xpower(rd.specialized, 0) == rd.r);
    }
}

TEST_CASE("reduction commutes with potential shift") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 10; ++t) {
        PeriodicGraph g = random_eligible_graph(rng);
        ReductionPlan plan = plan_reduction(g);
        Assignment asg = random_assignment(g, rng);
        ReducedDispersion rd = reduced_dispersion(g, plan, asg);

        PeriodicGraph gfree = g;
        for (auto& v : gfree.vertices) v.potential = std::nullopt;
        Assignment shifted = asg;
        Rational c = rat(4);
        for (auto& p : shifted.potentials) p += c;
        ReducedDispersion rd2 = reduced_dispersion(gfree, plan_reduction(gfree), shifted);
        CHECK(rd2.r == to_unipoly(lambda_shift(from_unipoly(0, rd.r), c)));
        CHECK(rd2.s == to_unipoly(lambda_shift(from_unipoly(0, rd.s), c)));
    }
}

TEST_CASE("plan rejects structurally ineligible graphs") {
    PeriodicGraph rungs;
    rungs.d = 1;
    rungs.n = 2;
    rungs.vertices.resize(2);
    rungs.edges = {{0, 1, {0}, std::nullopt}};
    CHECK_THROWS(plan_reduction(rungs));

    PeriodicGraph single;
    single.d = 1;
    single.n = 1;
    single.vertices.resize(1);
    CHECK_THROWS(plan_reduction(single));
}
