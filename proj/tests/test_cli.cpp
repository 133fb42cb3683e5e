// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string fixture(const std::string &name) {
    return std::string(DIAQ_FIXTURE_DIR) + "/" + name;
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = diaq::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string &row) {
    std::vector<std::string> out;
    std::istringstream is(row);
    for (std::string f; std::getline(is, f, ',');) out.push_back(f);
    if (!row.empty() && row.back() == ',') out.emplace_back();
    return out;
}

std::filesystem::path temp_file(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "diaq_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("run emits the GHZ state", "[cli]") {
    const auto r = cli({"run", fixture("ghz4.qasm"), "--backend", "diaq", "--shots", "0",
                        "--emit-state"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["circuit"] == "ghz4");
    CHECK(j["n_qubits"] == 4);
    CHECK(j["backend"] == "diaq");
    CHECK(j["counts"].empty());
    REQUIRE(j["state"].size() == 16);
    const double h = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 16; ++i) {
        const double want = (i == 0 || i == 15) ? h : 0.0;
        CHECK(std::abs(j["state"][i][0].get<double>() - want) <= 1e-12);
        CHECK(std::abs(j["state"][i][1].get<double>()) <= 1e-12);
    }
    for (const auto *phase : {"compile", "apply_total", "sample"}) {
        CHECK(j["timings_ns"][phase].get<long long>() >= 0);
    }
}

TEST_CASE("run counts agree across backends", "[cli]") {
    const auto dense = cli({"run", fixture("ghz4.qasm"), "--backend", "dense", "--seed", "7"});
    const auto diaq = cli({"run", fixture("ghz4.qasm"), "--backend", "diaq", "--seed", "7"});
    REQUIRE(dense.code == 0);
    REQUIRE(diaq.code == 0);
    const auto a = json::parse(dense.out);
    const auto b = json::parse(diaq.out);
    CHECK(a["counts"] == b["counts"]);
    CHECK(a["shots"] == 1024);
    CHECK(a["seed"] == 7);
    CHECK(a["counts"].size() == 2);

    const auto csv = cli({"run", fixture("ghz4.qasm"), "--seed", "7", "--out", "csv",
                          "--fusion", "on", "--threads", "2"});
    REQUIRE(csv.code == 0);
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "bitstring,count");
    CHECK(rows[1] == "0000," + std::to_string(b["counts"]["0000"].get<int>()));

    const auto single = cli({"run", fixture("ghz4.qasm"), "--precision", "single",
                             "--seed", "7"});
    REQUIRE(single.code == 0);
    // Single precision rounds to different integer weights, so only the
    // support of the distribution is compared.
    const auto sc = json::parse(single.out)["counts"];
    CHECK(sc.size() == 2);
    CHECK(sc["0000"].get<int>() + sc["1111"].get<int>() == 1024);
}

TEST_CASE("run exit codes", "[cli]") {
    const auto bad = cli({"run", fixture("bad.qasm")});
    CHECK(bad.code == diaq::cli::kParse);
    CHECK_THAT(bad.err, ContainsSubstring("bad.qasm:5:1"));

    const auto unsup = cli({"run", fixture("if_unsupported.qasm")});
    CHECK(unsup.code == diaq::cli::kUnsupported);
    CHECK_THAT(unsup.err, ContainsSubstring("'if'"));
    CHECK(cli({"run", fixture("unknown_gate.qasm")}).code == diaq::cli::kUnsupported);
    CHECK(cli({"run", fixture("midcircuit_measure.qasm")}).code == diaq::cli::kUnsupported);

    CHECK(cli({"run", fixture("wide16.qasm"), "--max-qubits", "8"}).code ==
          diaq::cli::kResource);
    CHECK(cli({"run", fixture("wide16.qasm"), "--span-limit", "4", "--shots", "0"}).code ==
          diaq::cli::kResource);

    CHECK(cli({"run", fixture("missing.qasm")}).code == diaq::cli::kUsage);
    CHECK(cli({"run", fixture("ghz4.qasm"), "--backend", "gpu"}).code == diaq::cli::kUsage);
    CHECK(cli({"run"}).code == diaq::cli::kUsage);
    CHECK(cli({}).code == diaq::cli::kUsage);
    CHECK(cli({"frobnicate"}).code == diaq::cli::kUsage);
    CHECK(cli({"--help"}).code == diaq::cli::kOk);
}

TEST_CASE("bench row accounting", "[cli]") {
    const auto path = temp_file("bench.csv");
    const auto gen = temp_file("ghz12.qasm");
    REQUIRE(cli({"gen", "ghz", "--qubits", "12", "--out", gen.string()}).code == 0);
    const auto r = cli({"bench", gen.string(), "--backends", "dense,diaq", "--reps", "3",
                        "--shots", "64", "--out", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    const auto rows = lines(buf.str());
    REQUIRE(rows.size() == 1 + 6 + 2);
    const auto header = split(rows[0]);
    CHECK(header.size() == 15);
    int detail = 0, summary = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split(rows[i]);
        REQUIRE(f.size() == header.size());
        CHECK(f[1] == "ghz12");
        CHECK(f[14] == "ok");
        if (f[0] == "detail") {
            ++detail;
            CHECK(std::stoll(f[10]) ==
                  std::stoll(f[7]) + std::stoll(f[8]) + std::stoll(f[9]));
        } else {
            ++summary;
            CHECK(f[0] == "summary");
            CHECK(std::stod(f[11]) > 0.0);
            CHECK(std::stod(f[13]) > 0.0);
        }
    }
    CHECK(detail == 6);
    CHECK(summary == 2);
    std::filesystem::remove(path);
    std::filesystem::remove(gen);
}

TEST_CASE("bench records failures and continues", "[cli]") {
    const auto r = cli({"bench", fixture("bad.qasm"), fixture("ghz4.qasm"), "--reps", "1",
                        "--backends", "diaq"});
    CHECK(r.code == diaq::cli::kUsage);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 1 + 1 + 1 + 1);
    CHECK(split(rows[1])[0] == "error");
    CHECK(split(rows[2])[0] == "detail");
    CHECK(split(rows[3])[0] == "summary");
    CHECK(split(rows[3])[13].empty());

    const auto limited = cli({"bench", fixture("wide16.qasm"), "--reps", "2",
                              "--backends", "diaq", "--max-qubits", "8"});
    const auto lrows = lines(limited.out);
    REQUIRE(lrows.size() == 3);
    CHECK(split(lrows[1])[14] != "ok");
    CHECK(split(lrows[2])[14] != "ok");
}

TEST_CASE("analyze modes", "[cli]") {
    const auto gen = temp_file("ghz10.qasm");
    REQUIRE(cli({"gen", "ghz", "--qubits", "10", "--out", gen.string()}).code == 0);
    const auto chain = cli({"analyze", gen.string(), "--mode", "chain", "--eps", "1e-15"});
    REQUIRE(chain.code == 0);
    const auto rows = lines(chain.out);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::stod(split(rows[i])[2]) >= 0.998);
    }

    const auto both = cli({"analyze", gen.string(), "--mode", "both"});
    const auto brows = lines(both.out);
    REQUIRE(brows.size() == 21);
    CHECK(split(brows[0])[0] == "mode");
    CHECK(split(brows[1])[0] == "timestep");
    CHECK(split(brows[11])[0] == "chain");

    const auto j = cli({"analyze", gen.string(), "--mode", "both", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto parsed = json::parse(j.out);
    CHECK(parsed["timestep"].size() == 10);
    CHECK(parsed["chain"].size() == 10);

    const auto zonly = temp_file("zonly.qasm");
    {
        std::ofstream f(zonly);
        f << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[5];\nz q;\nz q[2];\n";
    }
    const auto z = cli({"analyze", zonly.string(), "--mode", "timestep"});
    const auto zrows = lines(z.out);
    REQUIRE(zrows.size() == 7);
    for (std::size_t i = 1; i < zrows.size(); ++i) CHECK(split(zrows[i])[3] == "1");

    CHECK(cli({"analyze", fixture("wide16.qasm")}).code == diaq::cli::kResource);
    std::filesystem::remove(gen);
    std::filesystem::remove(zonly);
}

TEST_CASE("gen writes loadable QASM", "[cli]") {
    const auto r = cli({"gen", "qft", "--qubits", "3", "--measure"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("OPENQASM 2.0;"));
    CHECK_THAT(r.out, ContainsSubstring("measure q[2] -> c[2];"));
    CHECK(cli({"gen", "ghz", "--qubits", "0"}).code == diaq::cli::kUsage);
    CHECK(cli({"gen", "w", "--qubits", "3"}).code == diaq::cli::kUsage);
}
