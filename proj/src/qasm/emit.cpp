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

#include <charconv>
#include <sstream>

#include "diaq/qasm/qasm.hpp"

namespace diaq::qasm {

std::string to_qasm(const Circuit &circuit) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    os << "qreg q[" << circuit.n_qubits << "];\n";
    if (circuit.creg_size > 0) {
        os << "creg c[" << circuit.creg_size << "];\n";
    }
    for (const auto &op : circuit.ops) {
        if (op.name == "measure") {
            os << "measure q[" << op.qubits.at(0) << "] -> c["
               << op.clbits.at(0) << "];\n";
            continue;
        }
        os << op.name;
        if (!op.params.empty()) {
            os << '(';
            for (std::size_t i = 0; i < op.params.size(); ++i) {
                char buf[32];
                const auto res = std::to_chars(buf, buf + sizeof(buf), op.params[i]);
                os << (i ? "," : "") << std::string_view(buf, res.ptr - buf);
            }
            os << ')';
        }
        for (std::size_t i = 0; i < op.qubits.size(); ++i) {
            os << (i ? "," : " ") << "q[" << op.qubits[i] << ']';
        }
        os << ";\n";
    }
    return os.str();
}

} // namespace diaq::qasm
