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

/**
 * @file
 * Sparsity and memory study of circuit unitaries: per-timestep unitaries
 * I_above (x) gate (x) I_below, and the running chain product of them.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "gates.hpp"
#include "linalg.hpp"

namespace diaq::analysis {

inline constexpr double kDefaultEps = 1e-15;
inline constexpr int kDefaultMaxQubits = 14;

struct AnalysisRecord {
    int timestep = 0;
    std::string gate;
    double sparsity = 0.0;
    std::size_t diag_count = 0;
    std::size_t nnz = 0;
    std::vector<MemoryEstimate> memory;
};

/// Which side the next timestep multiplies the running product from.
enum class ChainOrder {
    left,  ///< P_t = U_t * P_{t-1}
    right, ///< P_t = P_{t-1} * U_t
};

struct Options {
    double eps = kDefaultEps;
    int span_limit = kDefaultSpanLimit;
    int max_qubits = kDefaultMaxQubits;
    ChainOrder order = ChainOrder::left;
};

using TimestepVisitor =
    std::function<void(const Placement<double> &, const DiaqMatrix<double> &)>;

/// Streams kron_identity(dim_a, m, dim_b) for every placement, in order.
/// Throws ResourceError above opts.max_qubits.
void for_each_timestep_unitary(const Circuit &circuit, const Options &opts,
                               const TimestepVisitor &visit);

[[nodiscard]] std::vector<DiaqMatrix<double>>
timestep_unitaries(const Circuit &circuit, const Options &opts = {});

/// Statistics of each U_t on its own.
[[nodiscard]] std::vector<AnalysisRecord>
timestep_analysis(const Circuit &circuit, const Options &opts = {});

/// Statistics of the running product P_t (P_0 = I), one record per t >= 1.
[[nodiscard]] std::vector<AnalysisRecord>
chain_product_analysis(const Circuit &circuit, const Options &opts = {});

[[nodiscard]] AnalysisRecord make_record(int timestep, std::string gate,
                                         const DiaqMatrix<double> &m,
                                         double eps);

/// Header: timestep,gate,sparsity,diag_count,nnz,bytes_dense,bytes_diaq,
/// bytes_csr,bytes_coo,bytes_bsr. Sparsity has 9 decimal places.
[[nodiscard]] std::string emit_analysis_csv(const std::vector<AnalysisRecord> &records);

struct Section {
    std::string mode;
    std::vector<AnalysisRecord> records;
};

/// Same columns with a leading "mode" column; sections appear in order.
[[nodiscard]] std::string emit_analysis_csv(const std::vector<Section> &sections);

[[nodiscard]] nlohmann::json to_json(const std::vector<AnalysisRecord> &records);

} // namespace diaq::analysis
