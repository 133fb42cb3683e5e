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

#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "diaq/error.hpp"
#include "diaq/qasm/qasm.hpp"

namespace diaq::qasm {
namespace {

struct Register {
    int offset = 0;
    int size = 0;
};

/// Either a catalog primitive or a macro to inline.
struct GateEntry {
    std::string primitive;
    const GateDef *macro = nullptr;
    int qubits = 0;
    int params = 0;
};

[[noreturn]] void fail(const std::string &msg, const SourceLoc &loc) {
    throw ParseError(msg, loc.line, loc.col);
}

class Lowerer {
  public:
    Lowerer() {
        // Language built-ins.
        table_["U"] = {"u3", nullptr, 1, 3};
        table_["CX"] = {"cx", nullptr, 2, 0};
        circuit_.n_qubits = 0;
    }

    Circuit run(const Program &program) {
        for (const auto &stmt : program.statements) {
            std::visit([this](const auto &s) { handle(s); }, stmt);
        }
        if (circuit_.n_qubits < 1) {
            throw ParseError("no quantum register declared", last_loc_.line,
                             last_loc_.col);
        }
        return std::move(circuit_);
    }

  private:
    void handle(const Include &inc) {
        last_loc_ = inc.loc;
        if (inc.path != "qelib1.inc") {
            throw UnsupportedFeature("include \"" + inc.path + "\"",
                                     inc.loc.line, inc.loc.col);
        }
        if (qelib_loaded_) {
            return;
        }
        qelib_loaded_ = true;
        for (const char *name : {"u3", "u2", "u1", "cx", "id", "x", "y", "z",
                                 "h", "s", "sdg", "t", "tdg", "rx", "ry", "rz",
                                 "cz", "swap", "ccx"}) {
            const auto arity = gate_arity(name);
            table_[name] = {name, nullptr, arity->qubits, arity->params};
        }
        qelib_ = std::make_unique<Program>(parse(qelib1_source()));
        for (const auto &stmt : qelib_->statements) {
            handle(std::get<GateDef>(stmt));
        }
    }

    void handle(const RegDecl &decl) {
        last_loc_ = decl.loc;
        auto &regs = decl.quantum ? qregs_ : cregs_;
        if (qregs_.count(decl.name) != 0 || cregs_.count(decl.name) != 0) {
            fail("register '" + decl.name + "' is already declared", decl.loc);
        }
        int &total = decl.quantum ? circuit_.n_qubits : circuit_.creg_size;
        regs[decl.name] = {total, decl.size};
        total += decl.size;
    }

    void handle(const GateDef &def) {
        last_loc_ = def.loc;
        const std::set<std::string> formals(def.qubits.begin(),
                                            def.qubits.end());
        if (formals.size() != def.qubits.size()) {
            fail("gate '" + def.name + "' repeats a qubit argument", def.loc);
        }
        for (const auto &stmt : def.body) {
            const std::vector<Operand> *args = nullptr;
            if (const auto *call = std::get_if<GateCall>(&stmt)) {
                if (call->name == def.name) {
                    fail("gate '" + def.name + "' is recursive", call->loc);
                }
                const auto it = table_.find(call->name);
                if (it == table_.end()) {
                    throw UnsupportedGate(call->name);
                }
                check_arity(*call, it->second);
                args = &call->args;
            } else {
                args = &std::get<Barrier>(stmt).args;
            }
            for (const auto &a : *args) {
                if (formals.count(a.reg) == 0) {
                    fail("'" + a.reg + "' is not an argument of gate '" +
                             def.name + "'",
                         a.loc);
                }
            }
        }
        table_[def.name] = {"", &def, static_cast<int>(def.qubits.size()),
                            static_cast<int>(def.params.size())};
    }

    void handle(const GateCall &call) {
        last_loc_ = call.loc;
        if (measured_) {
            throw UnsupportedFeature("gate '" + call.name + "' after measure",
                                     call.loc.line, call.loc.col);
        }
        const auto it = table_.find(call.name);
        if (it == table_.end()) {
            throw UnsupportedGate(call.name);
        }
        check_arity(call, it->second);
        std::vector<double> params;
        for (const auto &p : call.params) {
            params.push_back(eval(p, {}));
        }
        for (const auto &qubits : broadcast(call.args)) {
            std::set<int> distinct(qubits.begin(), qubits.end());
            if (distinct.size() != qubits.size()) {
                fail("gate '" + call.name + "' uses the same qubit twice",
                     call.loc);
            }
            emit(it->second, params, qubits, 0);
        }
    }

    void handle(const Barrier &barrier) {
        last_loc_ = barrier.loc;
        GateOp op{"barrier", {}, {}, {}};
        for (const auto &a : barrier.args) {
            const Register r = lookup(qregs_, a, "quantum");
            if (a.index) {
                op.qubits.push_back(r.offset + *a.index);
            } else {
                for (int i = 0; i < r.size; ++i) {
                    op.qubits.push_back(r.offset + i);
                }
            }
        }
        circuit_.ops.push_back(std::move(op));
    }

    void handle(const Measure &m) {
        last_loc_ = m.loc;
        measured_ = true;
        const Register q = lookup(qregs_, m.qubit, "quantum");
        const Register c = lookup(cregs_, m.target, "classical");
        const int qn = m.qubit.index ? 1 : q.size;
        const int cn = m.target.index ? 1 : c.size;
        if (qn != cn) {
            fail("measure operands have different sizes", m.loc);
        }
        for (int i = 0; i < qn; ++i) {
            const int qi = q.offset + (m.qubit.index ? *m.qubit.index : i);
            const int ci = c.offset + (m.target.index ? *m.target.index : i);
            circuit_.ops.push_back({"measure", {qi}, {}, {ci}});
        }
    }

    static void check_arity(const GateCall &call, const GateEntry &entry) {
        if (static_cast<int>(call.args.size()) != entry.qubits) {
            fail("gate '" + call.name + "' takes " +
                     std::to_string(entry.qubits) + " qubit argument(s), got " +
                     std::to_string(call.args.size()),
                 call.loc);
        }
        if (static_cast<int>(call.params.size()) != entry.params) {
            fail("gate '" + call.name + "' takes " +
                     std::to_string(entry.params) + " parameter(s), got " +
                     std::to_string(call.params.size()),
                 call.loc);
        }
    }

    static double eval(const Expr &e, const std::map<std::string, double> &env) {
        try {
            return evaluate(e, env);
        } catch (const RangeError &err) {
            fail(err.what(), e.loc);
        }
    }

    Register lookup(const std::map<std::string, Register> &regs,
                    const Operand &a, const char *kind) const {
        const auto it = regs.find(a.reg);
        if (it == regs.end()) {
            fail("unknown " + std::string(kind) + " register '" + a.reg + "'",
                 a.loc);
        }
        if (a.index && (*a.index < 0 || *a.index >= it->second.size)) {
            fail("index " + std::to_string(*a.index) + " is out of range for '" +
                     a.reg + "[" + std::to_string(it->second.size) + "]'",
                 a.loc);
        }
        return it->second;
    }

    /// Expands register-wide operands into one qubit tuple per position.
    std::vector<std::vector<int>>
    broadcast(const std::vector<Operand> &args) const {
        int width = 1;
        bool whole = false;
        for (const auto &a : args) {
            const Register r = lookup(qregs_, a, "quantum");
            if (!a.index) {
                if (whole && r.size != width) {
                    fail("registers in a broadcast must have equal size",
                         a.loc);
                }
                whole = true;
                width = r.size;
            }
        }
        std::vector<std::vector<int>> out;
        for (int i = 0; i < width; ++i) {
            std::vector<int> qubits;
            for (const auto &a : args) {
                const Register r = qregs_.at(a.reg);
                qubits.push_back(r.offset + (a.index ? *a.index : i));
            }
            out.push_back(std::move(qubits));
        }
        return out;
    }

    void emit(const GateEntry &entry, const std::vector<double> &params,
              const std::vector<int> &qubits, int depth) {
        if (depth > 64) {
            throw ParseError("gate definitions nest too deeply", last_loc_.line,
                             last_loc_.col);
        }
        if (!entry.primitive.empty()) {
            circuit_.ops.push_back({entry.primitive, qubits, params, {}});
            return;
        }
        const GateDef &def = *entry.macro;
        std::map<std::string, double> env;
        for (std::size_t i = 0; i < def.params.size(); ++i) {
            env[def.params[i]] = params[i];
        }
        std::map<std::string, int> wires;
        for (std::size_t i = 0; i < def.qubits.size(); ++i) {
            wires[def.qubits[i]] = qubits[i];
        }
        for (const auto &stmt : def.body) {
            if (const auto *call = std::get_if<GateCall>(&stmt)) {
                std::vector<double> inner_params;
                for (const auto &p : call->params) {
                    inner_params.push_back(eval(p, env));
                }
                std::vector<int> inner_qubits;
                for (const auto &a : call->args) {
                    inner_qubits.push_back(wires.at(a.reg));
                }
                const auto it = table_.find(call->name);
                if (it == table_.end()) {
                    throw UnsupportedGate(call->name);
                }
                emit(it->second, inner_params, inner_qubits, depth + 1);
            } else {
                GateOp op{"barrier", {}, {}, {}};
                for (const auto &a : std::get<Barrier>(stmt).args) {
                    op.qubits.push_back(wires.at(a.reg));
                }
                circuit_.ops.push_back(std::move(op));
            }
        }
    }

    Circuit circuit_;
    std::map<std::string, GateEntry> table_;
    std::map<std::string, Register> qregs_;
    std::map<std::string, Register> cregs_;
    std::unique_ptr<Program> qelib_;
    bool qelib_loaded_ = false;
    bool measured_ = false;
    SourceLoc last_loc_{1, 1};
};

} // namespace

Circuit lower(const Program &program) { return Lowerer().run(program); }

Circuit load(std::string_view source) { return lower(parse(source)); }

Circuit load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Circuit c = load(buf.str());
    c.name = std::filesystem::path(path).stem().string();
    return c;
}

} // namespace diaq::qasm
