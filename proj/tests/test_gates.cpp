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
#include <numbers>

#include "diaq/error.hpp"
#include "diaq/gates.hpp"
#include "diaq/linalg.hpp"
#include "diaq/sim.hpp"
#include "oracle.hpp"

using namespace diaq;
using cd = std::complex<double>;
using Catch::Matchers::ContainsSubstring;

namespace {

constexpr double kPi = std::numbers::pi;
const double kH = 1.0 / std::sqrt(2.0);

GateOp op(std::string name, std::vector<int> qubits, std::vector<double> params = {}) {
    return {std::move(name), std::move(qubits), std::move(params), {}};
}

std::vector<cd> values(const DiaqMatrix<double> &m, DiagIndex d) {
    return m.find(d)->values.to_complex();
}

oracle::Dense dense2(cd a, cd b, cd c, cd d) {
    oracle::Dense m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// Hand-written textbook matrices, independent of the catalog code.
oracle::Dense reference(const GateOp &g) {
    const cd i(0.0, 1.0);
    const auto &p = g.params;
    if (g.name == "id") return dense2(1, 0, 0, 1);
    if (g.name == "x") return dense2(0, 1, 1, 0);
    if (g.name == "y") return dense2(0, -i, i, 0);
    if (g.name == "z") return dense2(1, 0, 0, -1);
    if (g.name == "h") return dense2(kH, kH, kH, -kH);
    if (g.name == "s") return dense2(1, 0, 0, i);
    if (g.name == "sdg") return dense2(1, 0, 0, -i);
    if (g.name == "t") return dense2(1, 0, 0, std::exp(i * kPi / 4.0));
    if (g.name == "tdg") return dense2(1, 0, 0, std::exp(-i * kPi / 4.0));
    if (g.name == "rx")
        return dense2(std::cos(p[0] / 2), -i * std::sin(p[0] / 2),
                      -i * std::sin(p[0] / 2), std::cos(p[0] / 2));
    if (g.name == "ry")
        return dense2(std::cos(p[0] / 2), -std::sin(p[0] / 2), std::sin(p[0] / 2),
                      std::cos(p[0] / 2));
    if (g.name == "rz")
        return dense2(std::exp(-i * p[0] / 2.0), 0, 0, std::exp(i * p[0] / 2.0));
    if (g.name == "u1") return dense2(1, 0, 0, std::exp(i * p[0]));
    if (g.name == "u2")
        return dense2(kH, -kH * std::exp(i * p[1]), kH * std::exp(i * p[0]),
                      kH * std::exp(i * (p[0] + p[1])));
    if (g.name == "u3")
        return dense2(std::cos(p[0] / 2), -std::exp(i * p[2]) * std::sin(p[0] / 2),
                      std::exp(i * p[1]) * std::sin(p[0] / 2),
                      std::exp(i * (p[1] + p[2])) * std::cos(p[0] / 2));
    oracle::Dense m(std::size_t{1} << g.qubits.size(), std::size_t{1} << g.qubits.size());
    auto perm = [&](std::size_t dim, auto f) {
        for (std::size_t c = 0; c < dim; ++c) m(f(c), c) = 1.0;
    };
    if (g.name == "cx") perm(4, [](std::size_t c) { return c >= 2 ? c ^ 1U : c; });
    if (g.name == "swap")
        perm(4, [](std::size_t c) { return ((c & 1U) << 1) | (c >> 1); });
    if (g.name == "ccx") perm(8, [](std::size_t c) { return c >= 6 ? c ^ 1U : c; });
    if (g.name == "cz") {
        m = oracle::eye(4);
        m(3, 3) = -1.0;
    }
    return m;
}

} // namespace

TEST_CASE("catalog gates equal their textbook matrices and are unitary", "[gates]") {
    const std::vector<GateOp> gates = {
        op("id", {0}),          op("x", {0}),           op("y", {0}),
        op("z", {0}),           op("h", {0}),           op("s", {0}),
        op("sdg", {0}),         op("t", {0}),           op("tdg", {0}),
        op("rx", {0}, {0.7}),   op("ry", {0}, {-1.3}),  op("rz", {0}, {2.1}),
        op("u1", {0}, {0.4}),   op("u2", {0}, {0.3, -0.8}),
        op("u3", {0}, {1.1, 0.2, -2.5}),
        op("cx", {0, 1}),       op("cz", {0, 1}),       op("swap", {0, 1}),
        op("ccx", {0, 1, 2}),
    };
    for (const auto &g : gates) {
        INFO(g.name);
        const auto ref = reference(g);
        CHECK(oracle::max_diff(gate_dense(g), ref) <= 1e-15);
        const auto m = gate_matrix<double>(g);
        CHECK(oracle::max_diff(to_dense(m), ref) <= 1e-15);
        const auto prod = to_dense(matmul(adjoint(m), m));
        CHECK(oracle::max_diff(prod, oracle::eye(ref.rows)) <= 1e-12);
    }
}

TEST_CASE("catalog gate diagonal layouts", "[gates]") {
    const auto z = gate_matrix<double>(op("z", {0}));
    REQUIRE(z.diag_count() == 1);
    CHECK(values(z, 0) == std::vector<cd>{1, -1});

    const auto h = gate_matrix<double>(op("h", {0}));
    REQUIRE(h.diag_count() == 3);
    CHECK(values(h, -1) == std::vector<cd>{kH});
    CHECK(values(h, 0) == std::vector<cd>{kH, -kH});
    CHECK(values(h, 1) == std::vector<cd>{kH});
    CHECK(adjoint(h) == h);

    const auto cx = gate_matrix<double>(op("cx", {0, 1}));
    REQUIRE(cx.diag_count() == 3);
    CHECK(values(cx, -1) == std::vector<cd>{0, 0, 1});
    CHECK(values(cx, 0) == std::vector<cd>{1, 1, 0, 0});
    CHECK(values(cx, 1) == std::vector<cd>{0, 0, 1});
}

TEST_CASE("catalog errors", "[gates]") {
    CHECK_THROWS_AS(gate_dense(op("foo", {0})), UnsupportedGate);
    CHECK_THROWS_AS(gate_dense(op("rx", {0})), RangeError);
    CHECK_THROWS_AS(gate_dense(op("h", {0}, {1.0})), RangeError);
}

TEST_CASE("compile places gates with qubit 0 as the most significant", "[gates]") {
    Circuit c;
    c.n_qubits = 4;
    c.ops = {op("h", {0}), op("h", {3}), op("barrier", {0, 1}), op("cx", {1, 2}),
             op("measure", {0})};
    c.ops.back().clbits = {0};
    const auto ps = compile<double>(c);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].dim_a == 1);
    CHECK(ps[0].dim_b == 8);
    CHECK(ps[1].dim_a == 8);
    CHECK(ps[1].dim_b == 1);
    CHECK(ps[2].dim_a == 2);
    CHECK(ps[2].dim_b == 2);
    CHECK(ps[2].span_lo == 1);
    CHECK(ps[2].span_hi == 2);
    for (const auto &p : ps) {
        CHECK(p.dim_a * p.m.n_dim() * p.dim_b == 16);
        CHECK(p.m.n_dim() == std::size_t{1} << p.span_width());
    }

    Circuit two;
    two.n_qubits = 2;
    two.ops = {op("cx", {0, 1})};
    const auto p2 = compile<double>(two);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].dim_a == 1);
    CHECK(p2[0].dim_b == 1);
    CHECK(p2[0].m == gate_matrix<double>(op("cx", {0, 1})));
}

TEST_CASE("span unitary of a non-adjacent cx", "[gates]") {
    const auto cx = gate_matrix<double>(op("cx", {0, 1}));
    const auto u = build_span_unitary(cx, {0, 2}, 3);
    REQUIRE(u.diag_count() == 3);
    CHECK(values(u, 0) == std::vector<cd>{1, 1, 1, 1, 0, 0, 0, 0});
    CHECK(values(u, 1) == std::vector<cd>{0, 0, 0, 0, 1, 0, 1});
    CHECK(values(u, -1) == std::vector<cd>{0, 0, 0, 0, 1, 0, 1});
    CHECK(to_dense(u) ==
          oracle::embed(to_dense(cx), {0, 2}, 3));

    CHECK(build_span_unitary(cx, {0, 1}, 2) == cx);

    Circuit c;
    c.n_qubits = 3;
    c.ops = {op("cx", {0, 2})};
    const auto ps = compile<double>(c);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].m == u);
}

TEST_CASE("span unitaries match basis enumeration for scattered gates", "[gates][property]") {
    const std::vector<GateOp> gates = {
        op("cx", {3, 0}), op("cz", {1, 4}), op("swap", {4, 2}),
        op("ccx", {0, 4, 2}), op("ccx", {3, 1, 0}), op("u3", {2}, {0.3, 0.1, 0.9}),
    };
    for (const auto &g : gates) {
        const int lo = *std::min_element(g.qubits.begin(), g.qubits.end());
        const int hi = *std::max_element(g.qubits.begin(), g.qubits.end());
        std::vector<int> pos;
        for (int q : g.qubits) pos.push_back(q - lo);
        const auto u = build_span_unitary(gate_matrix<double>(g), pos, hi - lo + 1);
        CHECK(to_dense(u) == oracle::embed(gate_dense(g), pos, hi - lo + 1));
        CHECK(oracle::max_diff(to_dense(matmul(adjoint(u), u)),
                               oracle::eye(u.n_dim())) <= 1e-12);
    }
}

TEST_CASE("span overflow names the op", "[gates]") {
    Circuit c;
    c.n_qubits = 6;
    c.ops = {op("h", {0}), op("cx", {0, 5})};
    CHECK_THROWS_AS(compile<double>(c, 4), SpanOverflow);
    CHECK_THROWS_WITH(compile<double>(c, 4), ContainsSubstring("op #1 'cx'"));
    CHECK_NOTHROW(compile<double>(c, 6));
    CHECK_THROWS_AS(compile<double>(c, 1), RangeError);
}

TEST_CASE("fusion pass", "[gates]") {
    Circuit zz;
    zz.n_qubits = 2;
    zz.ops = {op("z", {0}), op("z", {0})};
    const auto fused = fuse_pass(compile<double>(zz), true);
    REQUIRE(fused.size() == 1);
    CHECK(fused[0].m == DiaqMatrix<double>::identity(2));
    CHECK(fused[0].label == "z*z");

    const auto raw = compile<double>(zz);
    const auto off = fuse_pass(raw, false);
    REQUIRE(off.size() == raw.size());

    const auto ghz = ghz_circuit(4);
    CHECK(fuse_pass(compile<double>(ghz), true).size() == 4);
}

TEST_CASE("fused and unfused runs agree", "[gates][property]") {
    Circuit c;
    c.n_qubits = 4;
    c.ops = {op("h", {1}), op("t", {1}), op("rx", {1}, {0.3}), op("cx", {1, 2}),
             op("cz", {1, 2}), op("swap", {2, 1}), op("h", {3}), op("u3", {3}, {1, 2, 3}),
             op("ccx", {0, 1, 2}), op("cx", {0, 1}), op("ry", {0}, {0.5})};
    RunOptions opts;
    opts.shots = 0;
    opts.keep_state = true;
    const auto plain = run<double>(c, opts).state->amps.to_complex();
    opts.fusion = true;
    const auto fused = run<double>(c, opts);
    CHECK(fused.placements < c.gate_count());
    CHECK(oracle::max_diff(fused.state->amps.to_complex(), plain) <= 1e-10);
    CHECK(oracle::max_diff(plain, oracle::simulate(c)) <= 1e-12);
}
