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

// End-to-end acceptance gate. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bloch/cli.hpp"
#include "bloch/oracle.hpp"

using namespace bloch;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool ok) {
    std::cout << "criterion " << index << " (" << what << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"blochcert"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PeriodicGraph ladder_graph() {
    PeriodicGraph g;
    g.d = 1;
    g.n = 2;
    g.vertices.resize(2);
    g.edges = {{0, 0, {1}, std::nullopt}, {1, 1, {1}, std::nullopt}, {0, 1, {0}, std::nullopt}};
    return g;
}

// --- criterion 1: ladder reproduction ---------------------------------------

bool criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    PeriodicGraph g = ladder_graph();
    LaurentPoly x = LaurentPoly::variable_z(1, 0);
    LaurentPoly xinv = LaurentPoly::variable_z(1, 0, -1);
    LaurentPoly lam = LaurentPoly::lambda(1);

    int samples = 0;
    for (long k = 0; k < 22; ++k) {
        Rational v1 = rat(k, 2);
        Rational v2 = rat(-3 * k, 5);
        Rational alpha = rat(k + 1, 3);
        Rational beta = rat(2 * k + 1, 7);
        Assignment asg = resolve_assignment(g, {v1, v2}, {alpha, alpha, beta});

        PolyMatrix L = build_floquet(g, asg);
        LaurentPoly hop = lp_scale(x + xinv, alpha);
        if (!(L.at(0, 0) == LaurentPoly::constant(1, v1) + hop)) return false;
        if (!(L.at(1, 1) == LaurentPoly::constant(1, v2) + hop)) return false;
        if (!(L.at(0, 1) == LaurentPoly::constant(1, beta))) return false;
        if (!(L.at(1, 0) == LaurentPoly::constant(1, beta))) return false;

        // D = q(lambda - alpha (x + 1/x)), q(mu) = mu^2 - (v1+v2) mu + v1 v2 - beta^2
        LaurentPoly mu = lam - hop;
        LaurentPoly q = mu * mu - lp_scale(mu, v1 + v2) +
                        LaurentPoly::constant(1, v1 * v2 - beta * beta);
        if (!(dispersion(g, asg).poly == q)) return false;
        ++samples;
    }
    if (samples < 20) return false;
    if (run_cli({"ladder-demo"}) != cli::kExitOk) return false;
    return seconds_since(t0) < 1.0;
}

// --- criteria 2, 8, 9: random corpus, replay, Gershgorin --------------------

struct CorpusResult {
    std::vector<Certificate> certs;
    std::vector<std::string> cert_paths;
    bool criterion2 = false;
};

CorpusResult run_corpus() {
    CorpusResult out;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2026);
    int eligible = 0, first_try = 0;
    bool ok = true;

    for (int t = 0; t < 50; ++t) {
        PeriodicGraph g = random_graph(rng);
        StructuralClass sc = classify(g);
        std::string gpath = "/tmp/blochcert_acc_graph_" + std::to_string(t) + ".json";
        std::string cpath = "/tmp/blochcert_acc_cert_" + std::to_string(t) + ".json";
        write_file(gpath, cli::graph_to_json(g).dump(2) + "\n");
        int code = run_cli({"certify", gpath, "--out", cpath});
        std::remove(gpath.c_str());

        Certificate cert = cli::certificate_from_json(cli::Json::parse(read_file(cpath)));
        out.certs.push_back(cert);
        out.cert_paths.push_back(cpath);

        if (cert.verdict == VerdictKind::Inconclusive) ok = false;
        switch (sc.kind) {
            case StructuralKind::Eligible:
                ++eligible;
                if (code != cli::kExitOk) ok = false;
                if (cert.verdict != VerdictKind::GenericallyIrreducible) ok = false;
                if (cert.witness_attempt == 0) ++first_try;
                break;
            case StructuralKind::QuotientDisconnected:
            case StructuralKind::Trivial:
                if (g.n >= 2 && code != cli::kExitReducible) ok = false;
                if (cert.verdict != VerdictKind::AlwaysReducible) ok = false;
                break;
            case StructuralKind::SingleVertex:
                if (code != cli::kExitOk) ok = false;
                break;
        }
    }
    if (eligible == 0 || first_try * 100 < eligible * 95) ok = false;
    if (seconds_since(t0) >= 60.0) ok = false;
    out.criterion2 = ok;
    return out;
}

bool criterion8(const CorpusResult& corpus) {
    for (size_t i = 0; i < corpus.cert_paths.size(); ++i) {
        if (run_cli({"verify", corpus.cert_paths[i]}) != cli::kExitOk) return false;

        // single-field mutations must be rejected
        cli::Json j = cli::Json::parse(read_file(corpus.cert_paths[i]));
        std::string mpath = corpus.cert_paths[i] + ".mut";
        std::vector<cli::Json> mutants;

        cli::Json m1 = j;
        m1["verdict"] = (j["verdict"] == "GENERICALLY_IRREDUCIBLE") ? "INCONCLUSIVE"
                                                                    : "GENERICALLY_IRREDUCIBLE";
        mutants.push_back(m1);
        if (corpus.certs[i].verdict == VerdictKind::GenericallyIrreducible) {
            cli::Json m2 = j;
            m2["attempts"][0]["assignment"]["potentials"][0] = "123456789";
            mutants.push_back(m2);
            cli::Json m3 = j;
            m3["attempts"][0]["reduced"]["r"] = "42";
            mutants.push_back(m3);
        }
        for (const cli::Json& m : mutants) {
            write_file(mpath, m.dump(2) + "\n");
            if (run_cli({"verify", mpath}) != cli::kExitVerifyFail) {
                std::remove(mpath.c_str());
                return false;
            }
        }
        std::remove(mpath.c_str());
    }
    return true;
}

bool criterion9(const CorpusResult& corpus) {
    int attempts_seen = 0;
    for (const auto& cert : corpus.certs) {
        for (const auto& att : cert.attempts) {
            const QPoly& r = att.reduced.r;
            const QPoly& s = att.reduced.s;
            QPoly two_s = poly_scale_rat(s, rat(2));
            QPoly at_plus = r + two_s;
            QPoly at_minus = (att.reduced.a % 2 == 0) ? at_plus : r - two_s;
            if (!is_squarefree(at_plus)) return false;
            if (!is_squarefree(at_minus)) return false;
            ++attempts_seen;
        }
    }
    return attempts_seen > 0;
}

// --- criterion 3: constructed reducible instances ---------------------------

bool check_case1_instance(std::mt19937_64& rng) {
    long root = long(rng() % 7) - 3;
    QPoly shared = qpoly({-root, 1});
    QPoly u = qpoly({long(rng() % 9) - 4, 1 + long(rng() % 3)});
    QPoly v = qpoly({1 + long(rng() % 5)});
    QPoly r = shared * u;
    QPoly s = shared * v;
    Case1Evidence e = case1_decide(r, s);
    if (e.excluded || e.gcd.deg() < 1) return false;
    // the factor divides both inputs exactly
    if (!divrem(r, e.gcd).second.is_zero()) return false;
    if (!divrem(s, e.gcd).second.is_zero()) return false;
    return true;
}

bool check_case2_instance(std::mt19937_64& rng, int l, bool negate_tau) {
    int degR = 1 + int(rng() % 2);
    std::vector<long> rc(degR + 1);
    for (int i = 0; i < degR; ++i) rc[i] = long(rng() % 9) - 4;
    rc[degR] = 1;
    QPoly R = qpoly(rc);
    QPoly sigma = qpoly({1 + long(rng() % 3)});
    QPoly tau = negate_tau ? -sigma : sigma;
    ConstructedInstance inst = construct_case2(R, sigma, tau, l, l);

    // case 1 must not fire first: s is a nonzero constant here
    if (!case1_decide(inst.r, inst.s).excluded) return false;

    Case2Evidence e = case2_decide(inst.r, inst.s, inst.a);
    if (e.excluded) return false;
    const Case2Record* rec = nullptr;
    for (const auto& cand : e.per_l)
        if (cand.l == l && !cand.excluded) rec = &cand;
    if (!rec) return false;

    // re-expansion: at a rational root gamma of gcd_g, the recovered orbit
    // data must reproduce r through the collapse identity.
    std::vector<Rational> roots = rational_roots(rec->gcd_g);
    if (roots.empty()) return false;
    bool reproduced = false;
    const int n = inst.r.deg();
    QPoly q0sq = rec->q0 * rec->q0;
    for (const Rational& gamma : roots) {
        QPoly Rstar;
        {
            std::vector<Rational> cc;
            for (const QPoly& coef : rec->R_g) cc.push_back(poly_eval(coef, gamma));
            Rstar = QPoly(std::move(cc));
        }
        QPoly pi = poly_scale_rat(q0sq, gamma);
        QPoly lhs = collapse_sum_rational(Rstar, pi, l);
        if (lhs == poly_scale_rat(inst.r, rat(n % 2 == 0 ? 1 : -1))) {
            reproduced = true;
            break;
        }
    }
    return reproduced;
}

bool check_case3_instance(std::mt19937_64& rng, int l) {
    QPoly r2 = qpoly({long(rng() % 9) - 4, 1});
    QPoly s2 = qpoly({1 + long(rng() % 4)});
    ConstructedInstance inst = construct_case3(r2, s2, l, l);

    Case3Evidence e = case3_decide(inst.r, inst.s, inst.a);
    if (e.excluded) return false;
    const Case3Record* rec = nullptr;
    for (const auto& cand : e.per_l)
        if (cand.l == l && !cand.excluded) rec = &cand;
    if (!rec) return false;

    // re-expansion of the paired factors: c (A^2 + B^2)/4 = r, c A B / 4 = +-s
    QPoly lhs_r = poly_scale_rat(rec->A2 * rec->A2 + rec->B2 * rec->B2, rec->c / rat(4));
    QPoly lhs_s = poly_scale_rat(rec->A2 * rec->B2, rec->c / rat(4));
    if (!(lhs_r == inst.r)) return false;
    QPoly want_s = poly_scale_rat(inst.s, rat(l % 2 == 0 ? -1 : 1));
    return lhs_s == want_s || lhs_s == -want_s;
}

bool criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(404);
    int total = 0;
    for (int t = 0; t < 70; ++t, ++total)
        if (!check_case1_instance(rng)) return false;
    for (int t = 0; t < 22; ++t, total += 3) {
        if (!check_case2_instance(rng, 2, false)) return false;
        if (!check_case2_instance(rng, 2, true)) return false;
        if (!check_case2_instance(rng, 3, false)) return false;
    }
    for (int t = 0; t < 22; ++t, total += 3) {
        if (!check_case3_instance(rng, 1)) return false;
        if (!check_case3_instance(rng, 2)) return false;
        if (!check_case3_instance(rng, 3)) return false;
    }
    return total >= 200 && seconds_since(t0) < 30.0;
}

// --- criteria 4-7 ------------------------------------------------------------

bool criterion4() { return collapse_identity_check(2, 100) && collapse_identity_check(3, 100); }

bool criterion5() {
    std::mt19937_64 rng(505);
    for (int t = 0; t < 50; ++t) {
        PeriodicGraph g = random_eligible_graph(rng);
        ReductionPlan plan = plan_reduction(g);
        Assignment asg = random_assignment(g, rng);
        ReducedDispersion rd = reduced_dispersion(g, plan, asg);
        const int n = g.n;
        if (rd.r.deg() != n) return false;
        if (rd.r.c[n] != rat(n % 2 == 0 ? 1 : -1)) return false;
        if (rd.s.deg() != n - rd.p) return false;
        Rational cycle_prod = rd.kappa * rat(rd.p % 2 == 0 ? -1 : 1);
        if (rd.s.c[n - rd.p] != cycle_prod * rat(n % 2 == 0 ? -1 : 1)) return false;
        std::set<long> sup = x_support(rd.specialized);
        for (long e : sup)
            if (e != 0 && e != rd.a && e != -rd.a) return false;
        if (!crosscheck_s(rd, g, plan, asg)) return false;
    }
    return true;
}

bool criterion6() {
    std::mt19937_64 rng(606);
    for (int t = 0; t < 50; ++t) {
        PolyMatrix m = random_poly_matrix(rng, 5, 1 + int(rng() % 2));
        if (!(determinant(m) == determinant_bareiss(m))) return false;
    }
    return true;
}

bool criterion7() {
    std::mt19937_64 rng(707);
    for (int t = 0; t < 20; ++t) {
        PeriodicGraph g = random_graph(rng);
        Assignment asg = random_assignment(g, rng);
        if (!metamorphic_suite(g, asg, Transform{Transform::Shift, rat(3)})) return false;
        if (!metamorphic_suite(g, asg, Transform{Transform::Scale, rat(2)})) return false;
        if (!metamorphic_suite(g, asg, Transform{Transform::InvertX, rat(0)})) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, "ladder reproduction", criterion1());

    CorpusResult corpus = run_corpus();
    report(2, "random-corpus verdicts", corpus.criterion2);
    report(3, "trichotomy on constructed instances", criterion3());
    report(4, "collapse-identity gate", criterion4());
    report(5, "reduced-dispersion shape", criterion5());
    report(6, "determinant cross-check", criterion6());
    report(7, "metamorphic suite", criterion7());
    report(8, "certificate replay", criterion8(corpus));
    report(9, "gershgorin squarefree guarantee", criterion9(corpus));

    for (const auto& path : corpus.cert_paths) std::remove(path.c_str());
    return g_failures == 0 ? 0 : 1;
}
