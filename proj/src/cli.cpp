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

#include "bloch/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bloch/oracle.hpp"

namespace bloch::cli {

namespace {

std::string param_str(const Param& p) { return p ? rat_str(*p) : "free"; }

Param param_parse(const Json& j, const std::string& where) {
    if (!j.is_string()) throw std::runtime_error(where + ": expected a string");
    std::string s = j.get<std::string>();
    if (s == "free") return std::nullopt;
    auto q = rat_parse(s);
    if (!q) throw std::runtime_error(where + ": not a rational ('p/q' or integer): " + s);
    return *q;
}

Rational rat_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw std::runtime_error(where + ": expected a rational string");
    auto q = rat_parse(j.get<std::string>());
    if (!q) throw std::runtime_error(where + ": bad rational");
    return *q;
}

std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(" + ", pos);
        if (next == std::string::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 3;
    }
    return out;
}

std::vector<std::string> split_on(const std::string& s, char c) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, c)) out.push_back(piece);
    return out;
}

}  // namespace

QPoly parse_unipoly(const std::string& text, const std::string& var) {
    if (text == "0") return QPoly();
    std::vector<Rational> coeffs;
    for (const std::string& term : split_terms(text)) {
        auto factors = split_on(term, '*');
        if (factors.empty()) throw std::runtime_error("bad polynomial term: " + term);
        auto c = rat_parse(factors[0]);
        if (!c) throw std::runtime_error("bad coefficient: " + factors[0]);
        int e = 0;
        for (size_t i = 1; i < factors.size(); ++i) {
            auto ve = split_on(factors[i], '^');
            if (ve.size() != 2 || ve[0] != var)
                throw std::runtime_error("unexpected factor '" + factors[i] + "' (want " + var + "^k)");
            e = std::stoi(ve[1]);
        }
        if (e < 0) throw std::runtime_error("negative exponent in univariate polynomial");
        if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1, Rational(0));
        coeffs[static_cast<size_t>(e)] = *c;
    }
    return QPoly(std::move(coeffs));
}

LaurentPoly parse_laurent(const std::string& text, int d) {
    LaurentPoly f = LaurentPoly::zero(d);
    if (text == "0") return f;
    for (const std::string& term : split_terms(text)) {
        auto factors = split_on(term, '*');
        if (factors.empty()) throw std::runtime_error("bad polynomial term: " + term);
        auto c = rat_parse(factors[0]);
        if (!c) throw std::runtime_error("bad coefficient: " + factors[0]);
        Monomial m;
        m.z.assign(static_cast<size_t>(d), 0);
        for (size_t i = 1; i < factors.size(); ++i) {
            auto ve = split_on(factors[i], '^');
            if (ve.size() != 2) throw std::runtime_error("bad factor: " + factors[i]);
            int e = std::stoi(ve[1]);
            if (ve[0] == "lam") {
                m.lam = e;
            } else if (ve[0].size() >= 2 && ve[0][0] == 'z') {
                int idx = std::stoi(ve[0].substr(1));
                if (idx < 1 || idx > d) throw std::runtime_error("variable out of range: " + ve[0]);
                m.z[static_cast<size_t>(idx - 1)] = e;
            } else {
                throw std::runtime_error("unknown variable: " + ve[0]);
            }
        }
        f.add_term(m, *c);
    }
    return f;
}

// --- Graph files --------------------------------------------------------------

Json graph_to_json(const PeriodicGraph& g) {
    Json j;
    j["version"] = kFormatVersion;
    j["dimension"] = g.d;
    Json vs = Json::array();
    for (int i = 0; i < g.n; ++i) {
        Json v;
        v["id"] = i + 1;
        v["potential"] = param_str(g.vertices[static_cast<size_t>(i)].potential);
        vs.push_back(v);
    }
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : g.edges) {
        Json je;
        je["u"] = e.u + 1;
        je["v"] = e.v + 1;
        je["offset"] = e.offset;
        je["weight"] = param_str(e.weight);
        es.push_back(je);
    }
    j["edges"] = es;
    return j;
}

PeriodicGraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw std::runtime_error("graph file: not a JSON object");
    if (!j.contains("version") || j["version"] != kFormatVersion)
        throw std::runtime_error("graph file: missing or unsupported version (want bloch-cert/1)");
    PeriodicGraph g;
    g.d = j.at("dimension").get<int>();
    const Json& vs = j.at("vertices");
    g.n = static_cast<int>(vs.size());
    for (int i = 0; i < g.n; ++i) {
        const Json& v = vs[static_cast<size_t>(i)];
        std::string where = "vertex " + std::to_string(i + 1);
        if (v.at("id").get<int>() != i + 1)
            throw std::runtime_error(where + ": ids must be 1..n contiguous");
        g.vertices.push_back({param_parse(v.at("potential"), where + " potential")});
    }
    size_t ei = 0;
    for (const Json& je : j.at("edges")) {
        ++ei;
        std::string where = "edge " + std::to_string(ei);
        EdgeSpec e;
        e.u = je.at("u").get<int>() - 1;
        e.v = je.at("v").get<int>() - 1;
        e.offset = je.at("offset").get<std::vector<int>>();
        e.weight = param_parse(je.at("weight"), where + " weight");
        g.edges.push_back(e);
    }
    validate(g);
    return g;
}

// --- Certificate files ----------------------------------------------------------

namespace {

Json rats_to_json(const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(rat_str(x));
    return a;
}

std::vector<Rational> rats_from_json(const Json& a, const std::string& where) {
    std::vector<Rational> out;
    for (const auto& x : a) out.push_back(rat_field(x, where));
    return out;
}

Json polys_to_json(const std::vector<QPoly>& xs, const std::string& var) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(render_unipoly(x, var));
    return a;
}

std::vector<QPoly> polys_from_json(const Json& a, const std::string& var) {
    std::vector<QPoly> out;
    for (const auto& x : a) out.push_back(parse_unipoly(x.get<std::string>(), var));
    return out;
}

Json ids1(const std::vector<int>& xs) {
    Json a = Json::array();
    for (int x : xs) a.push_back(x + 1);
    return a;
}

std::vector<int> ids1_back(const Json& a) {
    std::vector<int> out;
    for (const auto& x : a) out.push_back(x.get<int>() - 1);
    return out;
}

Json plan_to_json(const ReductionPlan& p) {
    Json j;
    j["shifts"] = p.anchoring.shifts;
    j["tree_edges"] = ids1(p.tree_edges);
    j["cross_edge"] = p.cross_edge + 1;
    j["cross_flipped"] = p.cross_flipped;
    j["cross_offset"] = p.cross_offset;
    j["coordinate"] = p.coordinate + 1;
    j["a"] = p.a;
    j["zeroed_edges"] = ids1(p.zeroed_edges);
    return j;
}

ReductionPlan plan_from_json(const Json& j) {
    ReductionPlan p;
    p.anchoring.shifts = j.at("shifts").get<std::vector<std::vector<int>>>();
    p.anchoring.tree_edges = ids1_back(j.at("tree_edges"));
    p.tree_edges = p.anchoring.tree_edges;
    p.cross_edge = j.at("cross_edge").get<int>() - 1;
    p.cross_flipped = j.at("cross_flipped").get<bool>();
    p.cross_offset = j.at("cross_offset").get<std::vector<int>>();
    p.coordinate = j.at("coordinate").get<int>() - 1;
    p.a = j.at("a").get<int>();
    p.zeroed_edges = ids1_back(j.at("zeroed_edges"));
    return p;
}

Json evidence_to_json(const CaseEvidence& ev) {
    Json j;
    j["case1"] = {{"excluded", ev.case1.excluded}, {"gcd", render_unipoly(ev.case1.gcd, "lam")}};
    Json c2;
    c2["skipped"] = ev.case2.skipped;
    c2["excluded"] = ev.case2.excluded;
    Json perl2 = Json::array();
    for (const auto& rec : ev.case2.per_l) {
        Json r;
        r["l"] = rec.l;
        r["excluded"] = rec.excluded;
        r["reason"] = rec.reason;
        r["q0"] = render_unipoly(rec.q0, "lam");
        r["R_g"] = polys_to_json(rec.R_g, "g");
        r["residual_g"] = polys_to_json(rec.residual_g, "g");
        r["gcd_g"] = render_unipoly(rec.gcd_g, "g");
        perl2.push_back(r);
    }
    c2["per_l"] = perl2;
    j["case2"] = c2;
    Json c3;
    c3["skipped"] = ev.case3.skipped;
    c3["excluded"] = ev.case3.excluded;
    c3["fast_path"] = ev.case3.fast_path;
    Json perl3 = Json::array();
    for (const auto& rec : ev.case3.per_l) {
        Json r;
        r["l"] = rec.l;
        r["excluded"] = rec.excluded;
        r["reason"] = rec.reason;
        r["c"] = rat_str(rec.c);
        r["w_plus"] = render_unipoly(rec.w_plus, "lam");
        r["w_minus"] = render_unipoly(rec.w_minus, "lam");
        r["A2"] = render_unipoly(rec.A2, "lam");
        r["B2"] = render_unipoly(rec.B2, "lam");
        perl3.push_back(r);
    }
    c3["per_l"] = perl3;
    j["case3"] = c3;
    return j;
}

CaseEvidence evidence_from_json(const Json& j) {
    CaseEvidence ev;
    ev.case1.excluded = j.at("case1").at("excluded").get<bool>();
    ev.case1.gcd = parse_unipoly(j.at("case1").at("gcd").get<std::string>(), "lam");
    const Json& c2 = j.at("case2");
    ev.case2.skipped = c2.at("skipped").get<bool>();
    ev.case2.excluded = c2.at("excluded").get<bool>();
    for (const auto& r : c2.at("per_l")) {
        Case2Record rec;
        rec.l = r.at("l").get<int>();
        rec.excluded = r.at("excluded").get<bool>();
        rec.reason = r.at("reason").get<std::string>();
        rec.q0 = parse_unipoly(r.at("q0").get<std::string>(), "lam");
        rec.R_g = polys_from_json(r.at("R_g"), "g");
        rec.residual_g = polys_from_json(r.at("residual_g"), "g");
        rec.gcd_g = parse_unipoly(r.at("gcd_g").get<std::string>(), "g");
        ev.case2.per_l.push_back(rec);
    }
    const Json& c3 = j.at("case3");
    ev.case3.skipped = c3.at("skipped").get<bool>();
    ev.case3.excluded = c3.at("excluded").get<bool>();
    ev.case3.fast_path = c3.at("fast_path").get<bool>();
    for (const auto& r : c3.at("per_l")) {
        Case3Record rec;
        rec.l = r.at("l").get<int>();
        rec.excluded = r.at("excluded").get<bool>();
        rec.reason = r.at("reason").get<std::string>();
        rec.c = rat_field(r.at("c"), "case3 c");
        rec.w_plus = parse_unipoly(r.at("w_plus").get<std::string>(), "lam");
        rec.w_minus = parse_unipoly(r.at("w_minus").get<std::string>(), "lam");
        rec.A2 = parse_unipoly(r.at("A2").get<std::string>(), "lam");
        rec.B2 = parse_unipoly(r.at("B2").get<std::string>(), "lam");
        ev.case3.per_l.push_back(rec);
    }
    return ev;
}

VerdictKind verdict_from_name(const std::string& s) {
    if (s == "GENERICALLY_IRREDUCIBLE") return VerdictKind::GenericallyIrreducible;
    if (s == "ALWAYS_REDUCIBLE") return VerdictKind::AlwaysReducible;
    if (s == "ALWAYS_IRREDUCIBLE") return VerdictKind::AlwaysIrreducible;
    if (s == "INCONCLUSIVE") return VerdictKind::Inconclusive;
    throw std::runtime_error("unknown verdict: " + s);
}

ReducibleReason reason_from_name(const std::string& s) {
    if (s == "none") return ReducibleReason::None;
    if (s == "block_decomposition") return ReducibleReason::BlockDecomposition;
    if (s == "z_independent") return ReducibleReason::ZIndependent;
    throw std::runtime_error("unknown reducibility reason: " + s);
}

StructuralKind kind_from_name(const std::string& s) {
    for (auto k : {StructuralKind::SingleVertex, StructuralKind::QuotientDisconnected,
                   StructuralKind::Trivial, StructuralKind::Eligible})
        if (structural_kind_name(k) == s) return k;
    throw std::runtime_error("unknown structural kind: " + s);
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["version"] = kFormatVersion;
    j["kind"] = "certificate";
    j["graph"] = graph_to_json(cert.graph);
    Json st;
    st["class"] = structural_kind_name(cert.structure.kind);
    Json comps = Json::array();
    for (const auto& comp : cert.structure.components) comps.push_back(ids1(comp));
    st["components"] = comps;
    j["structure"] = st;
    j["sampler"] = {{"seed", cert.sampler.seed}, {"max_attempts", cert.sampler.max_attempts}};
    j["verdict"] = verdict_name(cert.verdict);
    j["reducible_reason"] = reducible_reason_name(cert.reducible_reason);
    if (cert.structure.kind == StructuralKind::Eligible) j["plan"] = plan_to_json(cert.plan);
    Json attempts = Json::array();
    for (const auto& at : cert.attempts) {
        Json a;
        a["attempt"] = at.attempt;
        a["assignment"] = {{"potentials", rats_to_json(at.assignment.potentials)},
                           {"weights", rats_to_json(at.assignment.weights)}};
        Json rd;
        rd["a"] = at.reduced.a;
        rd["r"] = render_unipoly(at.reduced.r, "lam");
        rd["s"] = render_unipoly(at.reduced.s, "lam");
        rd["p"] = at.reduced.p;
        rd["eta"] = ids1(at.reduced.eta);
        rd["kappa"] = rat_str(at.reduced.kappa);
        rd["U"] = ids1(at.reduced.U);
        rd["specialized"] = render(at.reduced.specialized);
        a["reduced"] = rd;
        a["evidence"] = evidence_to_json(at.evidence);
        a["certified"] = at.certified;
        attempts.push_back(a);
    }
    j["attempts"] = attempts;
    j["witness_attempt"] = cert.witness_attempt;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("version") || j["version"] != kFormatVersion ||
        !j.contains("kind") || j["kind"] != "certificate")
        throw std::runtime_error("certificate file: missing or unsupported version/kind");
    Certificate cert;
    cert.graph = graph_from_json(j.at("graph"));
    cert.structure.kind = kind_from_name(j.at("structure").at("class").get<std::string>());
    for (const auto& comp : j.at("structure").at("components"))
        cert.structure.components.push_back(ids1_back(comp));
    cert.sampler.seed = j.at("sampler").at("seed").get<std::uint64_t>();
    cert.sampler.max_attempts = j.at("sampler").at("max_attempts").get<int>();
    cert.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    cert.reducible_reason = reason_from_name(j.at("reducible_reason").get<std::string>());
    if (cert.structure.kind == StructuralKind::Eligible) cert.plan = plan_from_json(j.at("plan"));
    for (const auto& a : j.at("attempts")) {
        AttemptRecord at;
        at.attempt = a.at("attempt").get<int>();
        at.assignment.potentials = rats_from_json(a.at("assignment").at("potentials"), "potentials");
        at.assignment.weights = rats_from_json(a.at("assignment").at("weights"), "weights");
        const Json& rd = a.at("reduced");
        at.reduced.a = rd.at("a").get<int>();
        at.reduced.r = parse_unipoly(rd.at("r").get<std::string>(), "lam");
        at.reduced.s = parse_unipoly(rd.at("s").get<std::string>(), "lam");
        at.reduced.p = rd.at("p").get<int>();
        at.reduced.eta = ids1_back(rd.at("eta"));
        at.reduced.kappa = rat_field(rd.at("kappa"), "kappa");
        at.reduced.U = ids1_back(rd.at("U"));
        at.reduced.specialized = parse_laurent(rd.at("specialized").get<std::string>(), 1);
        at.evidence = evidence_from_json(a.at("evidence"));
        at.certified = a.at("certified").get<bool>();
        cert.attempts.push_back(at);
    }
    cert.witness_attempt = j.at("witness_attempt").get<int>();
    return cert;
}

// --- Built-in examples ----------------------------------------------------------

PeriodicGraph example_graph(const std::string& name) {
    PeriodicGraph g;
    g.d = 1;
    if (name == "ladder") {
        g.n = 2;
        g.vertices.resize(2);
        g.edges = {{0, 0, {1}, std::nullopt}, {1, 1, {1}, std::nullopt}, {0, 1, {0}, std::nullopt}};
    } else if (name == "chain") {
        g.n = 1;
        g.vertices.resize(1);
        g.edges = {{0, 0, {1}, std::nullopt}};
    } else if (name == "rungs") {
        g.n = 2;
        g.vertices.resize(2);
        g.edges = {{0, 1, {0}, std::nullopt}};
    } else if (name == "two-chains") {
        g.n = 2;
        g.vertices.resize(2);
        g.edges = {{0, 0, {1}, std::nullopt}, {1, 1, {1}, std::nullopt}};
    } else {
        throw std::runtime_error("unknown example '" + name +
                                 "' (want ladder|chain|rungs|two-chains)");
    }
    return g;
}

// --- Commands --------------------------------------------------------------------

namespace {

PeriodicGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": JSON parse error: " + e.what());
    }
    return graph_from_json(j);
}

int cmd_check(const std::string& path) {
    PeriodicGraph g = load_graph(path);
    StructuralClass sc = classify(g);
    std::cout << "structural class: " << structural_kind_name(sc.kind) << "\n";
    auto comps = quotient_components(g);
    std::cout << "quotient components: " << comps.size() << "\n";
    for (size_t i = 0; i < comps.size(); ++i) {
        std::cout << "  component " << (i + 1) << ":";
        for (int v : comps[i]) std::cout << " " << (v + 1);
        std::cout << "\n";
    }
    if (comps.size() == 1) {
        Anchoring anc = connected_anchoring(g);
        std::cout << "anchoring shifts:\n";
        for (int v = 0; v < g.n; ++v) {
            std::cout << "  vertex " << (v + 1) << ": [";
            for (size_t k = 0; k < anc.shifts[static_cast<size_t>(v)].size(); ++k)
                std::cout << (k ? ", " : "") << anc.shifts[static_cast<size_t>(v)][k];
            std::cout << "]\n";
        }
    }
    return kExitOk;
}

int cmd_certify(const std::string& path, std::uint64_t seed, int max_attempts,
                const std::string& out) {
    PeriodicGraph g = load_graph(path);
    SamplerOptions opt;
    opt.seed = seed;
    opt.max_attempts = max_attempts;
    Certificate cert = certify_graph(g, opt);
    std::string text = certificate_to_json(cert).dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << text;
    }
    std::cerr << "verdict: " << verdict_name(cert.verdict) << "\n";
    switch (cert.verdict) {
        case VerdictKind::GenericallyIrreducible:
        case VerdictKind::AlwaysIrreducible: return kExitOk;
        case VerdictKind::AlwaysReducible: return kExitReducible;
        case VerdictKind::Inconclusive: return kExitInconclusive;
    }
    return kExitInput;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": JSON parse error: " + e.what());
    }
    Certificate cert = certificate_from_json(j);
    if (verify_certificate(cert)) {
        std::cout << "certificate verified: replay reproduces all evidence\n";
        return kExitOk;
    }
    std::cout << "certificate verification FAILED: replay mismatch\n";
    return kExitVerifyFail;
}

int cmd_example(const std::string& name) {
    std::cout << graph_to_json(example_graph(name)).dump(2) << "\n";
    return kExitOk;
}

int cmd_dispersion(const std::string& path) {
    PeriodicGraph g = load_graph(path);
    std::vector<Rational> pots, wts;
    for (const auto& v : g.vertices)
        if (!v.potential) throw std::runtime_error("dispersion: free potential (fix all values)");
    for (const auto& e : g.edges)
        if (!e.weight) throw std::runtime_error("dispersion: free weight (fix all values)");
    Assignment asg = resolve_assignment(g, pots, wts);
    Dispersion disp = dispersion(g, asg);
    std::cout << "n = " << disp.n << "\n";
    std::cout << "D(z, lam) = " << render(disp.poly) << "\n";
    return kExitOk;
}

int cmd_ladder_demo(const Rational& alpha, const Rational& beta) {
    if (sgn(alpha) == 0 || sgn(beta) == 0)
        throw std::runtime_error("ladder-demo: weights must be nonzero");
    PeriodicGraph g = example_graph("ladder");

    // Spot-check pairs first (the classic (0,0) and (0,3)), then a sweep.
    std::vector<std::pair<Rational, Rational>> samples = {{Rational(0), Rational(0)},
                                                          {Rational(0), Rational(3)}};
    for (int k = 1; samples.size() < 22; ++k)
        samples.push_back({rat(k, 2), rat(-3 * k, 5)});

    for (const auto& [v1, v2] : samples) {
        Assignment asg = resolve_assignment(g, {v1, v2}, {alpha, alpha, beta});
        LaurentPoly D = dispersion(g, asg).poly;

        // q(mu) = mu^2 - (v1+v2) mu + v1 v2 - beta^2, composed at
        // mu = lambda - alpha (x + x^{-1}).
        LaurentPoly mu = LaurentPoly::lambda(1) -
                         lp_scale(LaurentPoly::variable_z(1, 0, 1) + LaurentPoly::variable_z(1, 0, -1),
                                  alpha);
        LaurentPoly q_of_mu = mu * mu - lp_scale(mu, v1 + v2) +
                              LaurentPoly::constant(1, v1 * v2 - beta * beta);
        if (!(D == q_of_mu)) {
            std::cerr << "ladder-demo: composition identity FAILED at (v1, v2) = (" << rat_str(v1)
                      << ", " << rat_str(v2) << ")\n";
            return kExitVerifyFail;
        }
        Rational disc = (v1 - v2) * (v1 - v2) + 4 * beta * beta;
        std::cout << "(v1, v2) = (" << rat_str(v1) << ", " << rat_str(v2)
                  << "): q(mu) = mu^2 + " << rat_str(-(v1 + v2)) << "*mu + "
                  << rat_str(v1 * v2 - beta * beta) << ", discriminant = " << rat_str(disc)
                  << ", reducible (two factors)\n";
    }
    std::cout << "verified D(x, lam) = q(lam - " << rat_str(alpha) << "*(x + x^-1)) for "
              << samples.size() << " potential pairs\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"certify generic irreducibility of dispersion polynomials of periodic graphs"};
    app.require_subcommand(1);

    std::string path, out, name = "ladder";
    std::uint64_t seed = 1;
    int max_attempts = 8;
    std::string a_str = "1", b_str = "1";

    auto* check = app.add_subcommand("check", "structural report for a graph file");
    check->add_option("file", path)->required();

    auto* certify = app.add_subcommand("certify", "produce an irreducibility certificate");
    certify->add_option("file", path)->required();
    certify->add_option("--seed", seed, "witness sampler seed");
    certify->add_option("--max-attempts", max_attempts, "witness attempts before giving up");
    certify->add_option("--out", out, "certificate output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "replay and verify a certificate");
    verify->add_option("file", path)->required();

    auto* example = app.add_subcommand("example", "print a built-in example graph file");
    example->add_option("name", name)->required();

    auto* disp = app.add_subcommand("dispersion", "print D(z, lam) of a fully fixed graph");
    disp->add_option("file", path)->required();

    auto* demo = app.add_subcommand("ladder-demo", "fixed-weight ladder reducibility demo");
    demo->add_option("--a", a_str, "loop weight alpha");
    demo->add_option("--b", b_str, "rung weight beta");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) return cmd_check(path);
        if (certify->parsed()) return cmd_certify(path, seed, max_attempts, out);
        if (verify->parsed()) return cmd_verify(path);
        if (example->parsed()) return cmd_example(name);
        if (disp->parsed()) return cmd_dispersion(path);
        if (demo->parsed()) {
            auto a = rat_parse(a_str), b = rat_parse(b_str);
            if (!a || !b) throw std::runtime_error("ladder-demo: bad rational weight");
            return cmd_ladder_demo(*a, *b);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace bloch::cli
