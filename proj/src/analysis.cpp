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

#include "diaq/analysis.hpp"

#include <cstdio>
#include <sstream>

#include "diaq/error.hpp"

namespace diaq::analysis {
namespace {

void guard(const Circuit &circuit, const Options &opts) {
    if (circuit.n_qubits > opts.max_qubits) {
        throw ResourceError("analysis materializes 2^" +
                            std::to_string(circuit.n_qubits) +
                            " x 2^" + std::to_string(circuit.n_qubits) +
                            " unitaries; the limit is " +
                            std::to_string(opts.max_qubits) + " qubits");
    }
}

void write_row(std::ostream &os, const AnalysisRecord &r) {
    char sparsity[32];
    std::snprintf(sparsity, sizeof(sparsity), "%.9f", r.sparsity);
    os << r.timestep << ',' << r.gate << ',' << sparsity << ',' << r.diag_count
       << ',' << r.nnz << ',' << bytes_of(r.memory, StorageFormat::dense) << ','
       << bytes_of(r.memory, StorageFormat::diaq) << ','
       << bytes_of(r.memory, StorageFormat::csr) << ','
       << bytes_of(r.memory, StorageFormat::coo) << ','
       << bytes_of(r.memory, StorageFormat::bsr) << '\n';
}

constexpr const char *kColumns = "timestep,gate,sparsity,diag_count,nnz,"
                                 "bytes_dense,bytes_diaq,bytes_csr,bytes_coo,"
                                 "bytes_bsr";

} // namespace

void for_each_timestep_unitary(const Circuit &circuit, const Options &opts,
                               const TimestepVisitor &visit) {
    guard(circuit, opts);
    for (const auto &p : compile<double>(circuit, opts.span_limit)) {
        visit(p, kron_identity(p.dim_a, p.m, p.dim_b));
    }
}

std::vector<DiaqMatrix<double>> timestep_unitaries(const Circuit &circuit,
                                                   const Options &opts) {
    std::vector<DiaqMatrix<double>> out;
    for_each_timestep_unitary(
        circuit, opts,
        [&out](const Placement<double> &, const DiaqMatrix<double> &u) {
            out.push_back(u);
        });
    return out;
}

AnalysisRecord make_record(int timestep, std::string gate,
                           const DiaqMatrix<double> &m, double eps) {
    AnalysisRecord r;
    r.timestep = timestep;
    r.gate = std::move(gate);
    r.sparsity = sparsity(m, eps);
    r.diag_count = m.diag_count();
    r.nnz = nnz(m, eps);
    r.memory = memory_estimates(m, eps);
    return r;
}

std::vector<AnalysisRecord> timestep_analysis(const Circuit &circuit,
                                              const Options &opts) {
    std::vector<AnalysisRecord> out;
    int t = 0;
    for_each_timestep_unitary(
        circuit, opts,
        [&](const Placement<double> &p, const DiaqMatrix<double> &u) {
            out.push_back(make_record(++t, p.label, u, opts.eps));
        });
    return out;
}

std::vector<AnalysisRecord> chain_product_analysis(const Circuit &circuit,
                                                   const Options &opts) {
    guard(circuit, opts);
    std::vector<AnalysisRecord> out;
    DiaqMatrix<double> product = DiaqMatrix<double>::identity(
        std::size_t{1} << static_cast<std::size_t>(circuit.n_qubits));
    int t = 0;
    for_each_timestep_unitary(
        circuit, opts,
        [&](const Placement<double> &p, const DiaqMatrix<double> &u) {
            product = opts.order == ChainOrder::left
                          ? matmul(u, product, opts.eps)
                          : matmul(product, u, opts.eps);
            out.push_back(make_record(++t, p.label, product, opts.eps));
        });
    return out;
}

std::string emit_analysis_csv(const std::vector<AnalysisRecord> &records) {
    std::ostringstream os;
    os << kColumns << '\n';
    for (const auto &r : records) {
        write_row(os, r);
    }
    return os.str();
}

std::string emit_analysis_csv(const std::vector<Section> &sections) {
    std::ostringstream os;
    os << "mode," << kColumns << '\n';
    for (const auto &section : sections) {
        for (const auto &r : section.records) {
            os << section.mode << ',';
            write_row(os, r);
        }
    }
    return os.str();
}

nlohmann::json to_json(const std::vector<AnalysisRecord> &records) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : records) {
        nlohmann::json memory = nlohmann::json::object();
        for (const auto &m : r.memory) {
            memory[std::string(format_name(m.format))] = m.bytes;
        }
        out.push_back({{"timestep", r.timestep},
                       {"gate", r.gate},
                       {"sparsity", r.sparsity},
                       {"diag_count", r.diag_count},
                       {"nnz", r.nnz},
                       {"memory_bytes", std::move(memory)}});
    }
    return out;
}

} // namespace diaq::analysis
