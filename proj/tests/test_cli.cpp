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

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bloch/cli.hpp"
#include "bloch/oracle.hpp"

using namespace bloch;

namespace {

int run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"blochcert"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string temp_path(const std::string& stem) {
    return "/tmp/blochcert_test_" + stem + ".json";
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

}  // namespace

TEST_CASE("example graphs") {
    PeriodicGraph ladder = cli::example_graph("ladder");
    CHECK(ladder.n == 2);
    CHECK(ladder.edges.size() == 3);
    CHECK(classify(ladder).kind == StructuralKind::Eligible);
    CHECK(classify(cli::example_graph("rungs")).kind == StructuralKind::Trivial);
    CHECK(classify(cli::example_graph("two-chains")).kind ==
          StructuralKind::QuotientDisconnected);
    CHECK(classify(cli::example_graph("chain")).kind == StructuralKind::SingleVertex);
    CHECK_THROWS(cli::example_graph("nonsense"));
}

TEST_CASE("graph json round trip") {
    PeriodicGraph g = cli::example_graph("ladder");
    g.vertices[0].potential = rat(-3, 2);
    g.edges[2].weight = rat(7);
    cli::Json j = cli::graph_to_json(g);
    CHECK(j["version"] == cli::kFormatVersion);
    CHECK(j["vertices"][0]["potential"] == "-3/2");
    CHECK(j["vertices"][1]["potential"] == "free");
    CHECK(cli::graph_from_json(j) == g);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 15; ++t) {
        PeriodicGraph rg = random_graph(rng);
        CHECK(cli::graph_from_json(cli::graph_to_json(rg)) == rg);
    }

    cli::Json bad = j;
    bad["version"] = "bloch-cert/0";
    CHECK_THROWS(cli::graph_from_json(bad));
}

TEST_CASE("polynomial text round trips") {
    QPoly f = qpoly({-3, 0, 7});
    CHECK(cli::parse_unipoly(render_unipoly(f, "lam"), "lam") == f);
    CHECK(cli::parse_unipoly("0", "lam") == QPoly());

    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        PolyMatrix m = random_poly_matrix(rng, 2, 2);
        const LaurentPoly& p = m.at(0, 0);
        CHECK(cli::parse_laurent(render(p), p.d) == p);
    }
}

TEST_CASE("certificate json round trip") {
    SamplerOptions opt;
    for (const char* name : {"ladder", "two-chains", "rungs", "chain"}) {
        Certificate cert = certify_graph(cli::example_graph(name), opt);
        cli::Json j = cli::certificate_to_json(cert);
        CHECK(cli::certificate_from_json(j) == cert);
        // byte-stable across repeated rendering
        CHECK(j.dump(2) == cli::certificate_to_json(certify_graph(cert.graph, opt)).dump(2));
    }

    std::mt19937_64 rng(17);
    for (int t = 0; t < 8; ++t) {
        Certificate cert = certify_graph(random_graph(rng), opt);
        CHECK(cli::certificate_from_json(cli::certificate_to_json(cert)) == cert);
    }
}

TEST_CASE("cli certify / verify workflow") {
    std::string gpath = temp_path("ladder_graph");
    std::string cpath = temp_path("ladder_cert");
    write_file(gpath, cli::graph_to_json(cli::example_graph("ladder")).dump(2) + "\n");

    CHECK(run_cli({"certify", gpath, "--out", cpath}) == cli::kExitOk);
    CHECK(run_cli({"verify", cpath}) == cli::kExitOk);

    // tampering with the verdict must fail verification
    cli::Json j = cli::Json::parse(read_file(cpath));
    j["verdict"] = "INCONCLUSIVE";
    write_file(cpath, j.dump(2) + "\n");
    CHECK(run_cli({"verify", cpath}) == cli::kExitVerifyFail);

    // malformed file is an input error
    write_file(cpath, "{\"version\": \"bloch-cert/1\"}\n");
    CHECK(run_cli({"verify", cpath}) == cli::kExitInput);

    std::remove(gpath.c_str());
    std::remove(cpath.c_str());
}

TEST_CASE("cli exit codes by structure") {
    std::string gpath = temp_path("structure_graph");

    write_file(gpath, cli::graph_to_json(cli::example_graph("two-chains")).dump(2) + "\n");
    CHECK(run_cli({"certify", gpath}) == cli::kExitReducible);

    write_file(gpath, cli::graph_to_json(cli::example_graph("rungs")).dump(2) + "\n");
    CHECK(run_cli({"certify", gpath}) == cli::kExitReducible);

    write_file(gpath, cli::graph_to_json(cli::example_graph("chain")).dump(2) + "\n");
    CHECK(run_cli({"certify", gpath}) == cli::kExitOk);

    CHECK(run_cli({"check", gpath}) == cli::kExitOk);
    CHECK(run_cli({"certify", "/tmp/blochcert_no_such_file.json"}) == cli::kExitInput);
    CHECK(run_cli({"example", "nonsense"}) == cli::kExitInput);
    std::remove(gpath.c_str());
}

TEST_CASE("cli dispersion and demo") {
    std::string gpath = temp_path("disp_graph");
    PeriodicGraph g = cli::example_graph("ladder");
    // dispersion demands all parameters fixed
    write_file(gpath, cli::graph_to_json(g).dump(2) + "\n");
    CHECK(run_cli({"dispersion", gpath}) == cli::kExitInput);

    for (auto& v : g.vertices) v.potential = rat(1);
    g.vertices[1].potential = rat(2);
    for (auto& e : g.edges) e.weight = rat(1);
    write_file(gpath, cli::graph_to_json(g).dump(2) + "\n");
    CHECK(run_cli({"dispersion", gpath}) == cli::kExitOk);

    CHECK(run_cli({"ladder-demo"}) == cli::kExitOk);
    std::remove(gpath.c_str());
}
