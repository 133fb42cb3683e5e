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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "diaq/config.hpp"
#include "diaq/error.hpp"
#include "diaq/linalg.hpp"
#include "diaq/sim.hpp"
#include "oracle.hpp"

using namespace diaq;
using cd = std::complex<double>;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

StateVector<double> state_of(const std::vector<cd> &amps) {
    StateVector<double> s;
    s.n_qubits = static_cast<int>(std::log2(amps.size()));
    s.amps = PlanarVector<double>::from_complex(amps);
    return s;
}

Placement<double> placement(std::size_t dim_a, DiaqMatrix<double> m, std::size_t dim_b) {
    Placement<double> p;
    p.dim_a = dim_a;
    p.dim_b = dim_b;
    p.m = std::move(m);
    return p;
}

} // namespace

TEST_CASE("init_state", "[sim]") {
    const auto one = init_state<double>(1);
    CHECK(one.amps.to_complex() == std::vector<cd>{1.0, 0.0});
    const auto three = init_state<double>(3);
    CHECK(three.size() == 8);
    CHECK(three.amps[0] == cd(1.0));
    CHECK(norm(three) == 1.0);
    CHECK_THROWS_AS(init_state<double>(31), ResourceError);
    CHECK_THROWS_AS(init_state<double>(5, 4), ResourceError);
    CHECK_THROWS_AS(init_state<double>(0), RangeError);
}

TEST_CASE("apply_placed small cases", "[sim]") {
    const auto h = gate_matrix<double>({"h", {0}, {}, {}});
    const auto y = apply_placed(placement(1, h, 1), init_state<double>(1));
    CHECK(std::abs(y.amps[0] - cd(kH)) <= 1e-15);
    CHECK(std::abs(y.amps[1] - cd(kH)) <= 1e-15);

    const auto z = gate_matrix<double>({"z", {0}, {}, {}});
    const auto x = state_of({1.0, 2.0, {0, 3.0}, -4.0});
    const auto zx = apply_placed(placement(1, z, 2), x);
    CHECK(zx.amps.to_complex() == std::vector<cd>{1.0, 2.0, {0, -3.0}, 4.0});
}

TEST_CASE("apply_placed matches kron_identity then spmv", "[sim][property]") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t dim_a = std::size_t{1} << (rng() % 4);
        const std::size_t nm = std::size_t{1} << (1 + rng() % 3);
        const std::size_t dim_b = std::size_t{1} << (rng() % 4);
        const auto m = oracle::random_diaq(rng, nm, 1 + rng() % (2 * nm - 1));
        const auto xs = oracle::random_vector(rng, dim_a * nm * dim_b);
        const auto x = state_of(xs);
        const auto got = apply_placed(placement(dim_a, m, dim_b), x).amps.to_complex();
        const auto want = spmv(kron_identity(dim_a, m, dim_b), xs);
        CHECK(oracle::max_diff(got, want) <= 1e-12 * std::max(1.0, oracle::max_abs(want)));
    }
}

TEST_CASE("apply_placed rejects mismatched sizes", "[sim]") {
    const auto h = gate_matrix<double>({"h", {0}, {}, {}});
    CHECK_THROWS_AS(apply_placed(placement(2, h, 1), init_state<double>(3)), ShapeError);
}

TEST_CASE("dense backend basics", "[sim]") {
    Circuit c;
    c.n_qubits = 2;
    c.ops = {{"x", {0}, {}, {}}, {"cx", {0, 1}, {}, {}}};
    RunOptions opts;
    opts.backend = Backend::dense;
    opts.shots = 0;
    opts.keep_state = true;
    const auto r = run<double>(c, opts);
    CHECK(r.state->amps.to_complex() == std::vector<cd>{0, 0, 0, 1});
}

TEST_CASE("dense and placed application agree on random placements", "[sim][property]") {
    std::mt19937_64 rng(8);
    const std::vector<std::string> names = {"h", "rx", "u3", "cx", "cz", "swap", "ccx"};
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const auto &name = names[rng() % names.size()];
        const auto arity = gate_arity(name);
        std::vector<int> qs(static_cast<std::size_t>(n));
        std::iota(qs.begin(), qs.end(), 0);
        std::shuffle(qs.begin(), qs.end(), rng);
        qs.resize(static_cast<std::size_t>(arity->qubits));
        std::vector<double> params;
        for (int i = 0; i < arity->params; ++i) params.push_back(0.1 + i);
        Circuit c;
        c.n_qubits = n;
        c.ops = {{name, qs, params, {}}};
        const auto ps = compile<double>(c);
        const auto x = state_of(oracle::random_vector(rng, std::size_t{1} << n));
        const auto a = apply_placed(ps[0], x).amps.to_complex();
        const auto b = apply_dense(ps[0], x).amps.to_complex();
        CHECK(oracle::max_diff(a, b) <= 1e-12);
        const auto want = oracle::matvec(oracle::embed(gate_dense(c.ops[0]), qs, n),
                                         x.amps.to_complex());
        CHECK(oracle::max_diff(b, want) <= 1e-12);
    }
}

TEST_CASE("GHZ runs", "[sim]") {
    RunOptions opts;
    opts.shots = 0;
    opts.keep_state = true;
    const auto r = run<double>(ghz_circuit(4), opts);
    const auto amps = r.state->amps.to_complex();
    for (std::size_t i = 0; i < 16; ++i) {
        const double want = (i == 0 || i == 15) ? kH : 0.0;
        CHECK(std::abs(amps[i] - cd(want)) <= 1e-12);
    }
    CHECK(r.counts.empty());

    opts.shots = 1024;
    opts.seed = 7;
    opts.keep_state = false;
    const auto a = run<double>(ghz_circuit(4), opts);
    REQUIRE(a.counts.size() == 2);
    CHECK(a.counts.at("0000") + a.counts.at("1111") == 1024);
    CHECK(a.counts.at("0000") >= 412);
    CHECK(a.counts.at("0000") <= 612);
    CHECK_FALSE(a.state);
    CHECK(run<double>(ghz_circuit(4), opts).counts == a.counts);
    opts.backend = Backend::dense;
    CHECK(run<double>(ghz_circuit(4), opts).counts == a.counts);
    for (const auto &[phase, ns] : a.timings_ns) {
        CHECK(ns >= 0);
    }
    CHECK(a.timings_ns.count("compile") == 1);
    CHECK(a.timings_ns.count("apply_total") == 1);
    CHECK(a.timings_ns.count("sample") == 1);
    CHECK(a.per_gate_ns.size() == 4);
}

TEST_CASE("sampler", "[sim]") {
    auto one_hot = init_state<double>(3);
    one_hot.amps.re[0] = 0.0;
    one_hot.amps.re[5] = 1.0;
    const auto c = measure_all_sample(one_hot, 100, 1);
    REQUIRE(c.size() == 1);
    CHECK(c.at("101") == 100);
    CHECK(measure_all_sample(one_hot, 0, 1).empty());

    const auto uniform = state_of({0.5, 0.5, {0, 0.5}, -0.5});
    const auto u = measure_all_sample(uniform, 4096, 123);
    REQUIRE(u.size() == 4);
    for (const auto &[bits, n] : u) {
        CHECK(n >= 1024 - 160);
        CHECK(n <= 1024 + 160);
    }
    CHECK(measure_all_sample(uniform, 4096, 123) == u);
    CHECK(measure_all_sample(uniform, 4096, 124) != u);

    const auto bad = state_of({1.0, 1.0});
    CHECK_THROWS_AS(measure_all_sample(bad, 10, 0), NormalizationError);

    CHECK(bitstring(5, 4) == "0101");
    CHECK(bitstring(0, 1) == "0");
}

TEST_CASE("sampler golden counts", "[sim][golden]") {
    // Pinned output of the documented sampler: mt19937_64, integer weights.
    const auto uniform = state_of({0.5, 0.5, 0.5, 0.5});
    const auto u = measure_all_sample(uniform, 1000, 2026);
    std::uint64_t total = 0;
    for (const auto &[bits, n] : u) total += n;
    CHECK(total == 1000);

    // Independent re-implementation of the contract.
    std::mt19937_64 rng(2026);
    const std::uint64_t w = 4 * 250000000000ULL;
    const std::uint64_t threshold = (0 - w) % w;
    std::vector<std::uint64_t> draws;
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t r;
        do {
            r = rng();
        } while (r < threshold);
        draws.push_back(r % w);
    }
    std::map<std::string, std::uint64_t> want;
    for (const auto d : draws) {
        want[bitstring(d / 250000000000ULL, 2)]++;
    }
    CHECK(u == want);
}

TEST_CASE("float precision runs", "[sim]") {
    RunOptions opts;
    opts.shots = 256;
    opts.seed = 3;
    opts.keep_state = true;
    const auto f = run<float>(qft_circuit(5), opts);
    const auto d = run<double>(qft_circuit(5), opts);
    for (std::size_t i = 0; i < 32; ++i) {
        CHECK(std::abs(std::complex<double>(f.state->amps[i]) - d.state->amps[i]) <= 1e-5);
    }
}

TEST_CASE("norm is preserved after every gate", "[sim]") {
    RunOptions opts;
    opts.shots = 0;
    opts.check_norm = true;
    for (const auto backend : {Backend::dense, Backend::diaq}) {
        opts.backend = backend;
        CHECK_NOTHROW(run<double>(qft_circuit(6), opts));
    }
}

TEST_CASE("runs are bitwise identical across worker counts", "[sim][determinism]") {
    RunOptions opts;
    opts.shots = 1024;
    opts.seed = 11;
    opts.keep_state = true;
    const int saved = num_threads();
    set_num_threads(1);
    const auto a = run<double>(qft_circuit(13), opts);
    set_num_threads(3);
    const auto b = run<double>(qft_circuit(13), opts);
    set_num_threads(saved);
    CHECK(a.state == b.state);
    CHECK(a.counts == b.counts);
}

TEST_CASE("backend names", "[sim]") {
    CHECK(backend_name(Backend::dense) == "dense");
    CHECK(parse_backend("diaq") == Backend::diaq);
    CHECK_THROWS(parse_backend("gpu"));
}
