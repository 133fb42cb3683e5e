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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diaq/analysis.hpp"
#include "diaq/config.hpp"
#include "diaq/error.hpp"
#include "diaq/qasm/qasm.hpp"
#include "diaq/sim.hpp"

namespace diaq::cli {
namespace {

using nlohmann::json;

/// Error already reported; carries the exit code out of a command.
struct Exit {
    int code;
};

int code_for(const std::exception &e) {
    if (dynamic_cast<const ParseError *>(&e) != nullptr) {
        return kParse;
    }
    if (dynamic_cast<const UnsupportedFeature *>(&e) != nullptr ||
        dynamic_cast<const UnsupportedGate *>(&e) != nullptr) {
        return kUnsupported;
    }
    if (dynamic_cast<const ResourceError *>(&e) != nullptr) {
        return kResource;
    }
    return kUsage;
}

Circuit load_or_exit(const std::string &path, std::ostream &err) {
    try {
        return qasm::load_file(path);
    } catch (const ParseError &e) {
        err << path << ':' << e.what() << '\n';
        throw Exit{kParse};
    } catch (const RangeError &e) {
        // Out-of-domain parameter expressions are input errors too.
        err << path << ": " << e.what() << '\n';
        throw Exit{kParse};
    } catch (const std::exception &e) {
        err << path << ": " << e.what() << '\n';
        throw Exit{code_for(e)};
    }
}

/// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot write '" + path + "'");
    }
    f << text;
}

void apply_threads(std::optional<int> threads) {
    if (threads) {
        if (*threads < 1) {
            throw RangeError("--threads must be at least 1");
        }
        set_num_threads(*threads);
    }
}

std::string csv_field(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

// ---------------------------------------------------------------- run

struct RunArgs {
    std::string file;
    std::string backend = "diaq";
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    bool fusion = false;
    int span_limit = kDefaultSpanLimit;
    bool emit_state = false;
    std::string out = "json";
    std::optional<int> threads;
    std::string precision = "double";
    int max_qubits = kDefaultMaxQubits;
};

template <class T>
std::string format_run(const Circuit &c, const RunResult<T> &r,
                       const RunArgs &a) {
    if (a.out == "csv") {
        std::ostringstream os;
        os << "bitstring,count\n";
        for (const auto &[bits, n] : r.counts) {
            os << bits << ',' << n << '\n';
        }
        return os.str();
    }
    json j;
    j["circuit"] = c.name;
    j["n_qubits"] = c.n_qubits;
    j["backend"] = std::string(backend_name(r.backend));
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["fusion"] = a.fusion;
    j["precision"] = a.precision;
    j["counts"] = r.counts;
    j["timings_ns"] = r.timings_ns;
    if (r.state) {
        json amps = json::array();
        for (std::size_t i = 0; i < r.state->size(); ++i) {
            amps.push_back({static_cast<double>(r.state->amps.re[i]),
                            static_cast<double>(r.state->amps.im[i])});
        }
        j["state"] = std::move(amps);
    }
    return j.dump(2) + "\n";
}

template <class T>
std::string do_run(const Circuit &c, const RunOptions &opts, const RunArgs &a) {
    return format_run(c, run<T>(c, opts), a);
}

int cmd_run(const RunArgs &a, std::ostream &out, std::ostream &err) {
    apply_threads(a.threads);
    const Circuit c = load_or_exit(a.file, err);
    RunOptions opts;
    opts.backend = parse_backend(a.backend);
    opts.shots = a.shots;
    opts.seed = a.seed;
    opts.fusion = a.fusion;
    opts.span_limit = a.span_limit;
    opts.keep_state = a.emit_state;
    opts.max_qubits = a.max_qubits;
    out << (a.precision == "single" ? do_run<float>(c, opts, a)
                                    : do_run<double>(c, opts, a));
    return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::vector<std::string> files;
    std::vector<std::string> backends{"dense", "diaq"};
    int reps = 10;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    bool fusion = false;
    int span_limit = kDefaultSpanLimit;
    std::string out;
    std::optional<int> threads;
    int max_qubits = kDefaultMaxQubits;
};

constexpr const char *kBenchHeader =
    "row,circuit,n_qubits,backend,rep,shots,fusion,compile_ns,apply_ns,"
    "sample_ns,total_ns,mean_ns,std_ns,speedup,status\n";

struct BenchSummary {
    std::string backend;
    std::vector<double> totals;
    std::string status = "ok";
};

int cmd_bench(const BenchArgs &a, std::ostream &out, std::ostream &err) {
    apply_threads(a.threads);
    if (a.reps < 1) {
        throw RangeError("--reps must be at least 1");
    }
    std::vector<Backend> backends;
    for (const auto &b : a.backends) {
        backends.push_back(parse_backend(b));
    }

    std::ostringstream os;
    os << kBenchHeader;
    const char *fusion = a.fusion ? "on" : "off";
    bool any_failed = false;

    for (const auto &file : a.files) {
        Circuit c;
        try {
            c = qasm::load_file(file);
        } catch (const std::exception &e) {
            err << file << ": " << e.what() << '\n';
            os << "error," << csv_field(file) << ",,,,," << fusion
               << ",,,,,,,," << csv_field(e.what()) << '\n';
            any_failed = true;
            continue;
        }

        std::vector<BenchSummary> summaries;
        for (const Backend b : backends) {
            BenchSummary s{std::string(backend_name(b)), {}, "ok"};
            RunOptions opts;
            opts.backend = b;
            opts.shots = a.shots;
            opts.seed = a.seed;
            opts.fusion = a.fusion;
            opts.span_limit = a.span_limit;
            opts.max_qubits = a.max_qubits;
            for (int rep = 1; rep <= a.reps; ++rep) {
                try {
                    const auto r = run<double>(c, opts);
                    const auto compile = r.timings_ns.at("compile");
                    const auto apply = r.timings_ns.at("apply_total");
                    const auto sample = r.timings_ns.at("sample");
                    const auto total = compile + apply + sample;
                    s.totals.push_back(static_cast<double>(total));
                    os << "detail," << csv_field(c.name) << ',' << c.n_qubits
                       << ',' << s.backend << ',' << rep << ',' << a.shots
                       << ',' << fusion << ',' << compile << ',' << apply << ','
                       << sample << ',' << total << ",,,,ok\n";
                } catch (const std::exception &e) {
                    err << file << " [" << s.backend << "]: " << e.what() << '\n';
                    s.status = csv_field(e.what());
                    os << "detail," << csv_field(c.name) << ',' << c.n_qubits
                       << ',' << s.backend << ',' << rep << ',' << a.shots
                       << ',' << fusion << ",,,,,,,," << s.status << '\n';
                    any_failed = true;
                    break;
                }
            }
            summaries.push_back(std::move(s));
        }

        auto mean_of = [](const std::vector<double> &v) {
            return std::accumulate(v.begin(), v.end(), 0.0) /
                   static_cast<double>(v.size());
        };
        std::optional<double> mean_dense;
        std::optional<double> mean_diaq;
        for (const auto &s : summaries) {
            if (s.status != "ok") {
                continue;
            }
            (s.backend == "dense" ? mean_dense : mean_diaq) = mean_of(s.totals);
        }
        std::string speedup;
        if (mean_dense && mean_diaq && *mean_diaq > 0.0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", *mean_dense / *mean_diaq);
            speedup = buf;
        }
        for (const auto &s : summaries) {
            os << "summary," << csv_field(c.name) << ',' << c.n_qubits << ','
               << s.backend << ",," << a.shots << ',' << fusion << ",,,,,";
            if (s.status == "ok") {
                const double mean = mean_of(s.totals);
                double ss = 0.0;
                for (const double t : s.totals) {
                    ss += (t - mean) * (t - mean);
                }
                const double sd =
                    s.totals.size() > 1
                        ? std::sqrt(ss / static_cast<double>(s.totals.size() - 1))
                        : 0.0;
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.1f,%.1f", mean, sd);
                os << buf << ',' << speedup << ",ok\n";
            } else {
                os << ",,," << s.status << '\n';
            }
        }
    }
    emit(a.out, os.str(), out);
    // Failures are recorded as rows; the exit code still flags them.
    return any_failed ? kUsage : kOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string file;
    double eps = analysis::kDefaultEps;
    std::string mode = "timestep";
    std::string order = "left";
    std::string format = "csv";
    int span_limit = kDefaultSpanLimit;
    int max_qubits = analysis::kDefaultMaxQubits;
    std::string out;
    std::optional<int> threads;
};

int cmd_analyze(const AnalyzeArgs &a, std::ostream &out, std::ostream &err) {
    apply_threads(a.threads);
    const Circuit c = load_or_exit(a.file, err);
    analysis::Options opts;
    opts.eps = a.eps;
    opts.span_limit = a.span_limit;
    opts.max_qubits = a.max_qubits;
    opts.order = a.order == "right" ? analysis::ChainOrder::right
                                    : analysis::ChainOrder::left;

    std::vector<analysis::Section> sections;
    if (a.mode == "timestep" || a.mode == "both") {
        sections.push_back({"timestep", analysis::timestep_analysis(c, opts)});
    }
    if (a.mode == "chain" || a.mode == "both") {
        sections.push_back({"chain", analysis::chain_product_analysis(c, opts)});
    }

    std::string text;
    if (a.format == "json") {
        json j;
        j["circuit"] = c.name;
        j["n_qubits"] = c.n_qubits;
        j["eps"] = a.eps;
        for (const auto &s : sections) {
            j[s.mode] = analysis::to_json(s.records);
        }
        text = j.dump(2) + "\n";
    } else if (a.mode == "both") {
        text = analysis::emit_analysis_csv(sections);
    } else {
        text = analysis::emit_analysis_csv(sections.front().records);
    }
    emit(a.out, text, out);
    return kOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string family;
    int qubits = 0;
    bool measure = false;
    std::string out;
};

int cmd_gen(const GenArgs &a, std::ostream &out) {
    Circuit c = a.family == "ghz" ? ghz_circuit(a.qubits) : qft_circuit(a.qubits);
    if (a.measure) {
        c.creg_size = c.n_qubits;
        for (int q = 0; q < c.n_qubits; ++q) {
            c.ops.push_back({"measure", {q}, {}, {q}});
        }
    }
    emit(a.out, qasm::to_qasm(c), out);
    return kOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"DiaQ sparse diagonal-format quantum simulator", "diaq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "diaq 0.1.0");

    const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

    RunArgs ra;
    auto *run_cmd = app.add_subcommand("run", "Simulate one circuit");
    run_cmd->add_option("file", ra.file, "OpenQASM 2.0 file")->required();
    run_cmd->add_option("--backend", ra.backend)
        ->check(CLI::IsMember({"dense", "diaq"}))
        ->capture_default_str();
    run_cmd->add_option("--shots", ra.shots)->capture_default_str();
    run_cmd->add_option("--seed", ra.seed)->capture_default_str();
    run_cmd->add_option("--fusion", ra.fusion, "on|off")
        ->transform(CLI::CheckedTransformer(on_off))
        ->default_str("off");
    run_cmd->add_option("--span-limit", ra.span_limit)->capture_default_str();
    run_cmd->add_flag("--emit-state", ra.emit_state, "Include the final state");
    run_cmd->add_option("--out", ra.out)
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    run_cmd->add_option("--threads", ra.threads, "Kernel workers (default: DIAQ_THREADS or all cores)");
    run_cmd->add_option("--precision", ra.precision)
        ->check(CLI::IsMember({"single", "double"}))
        ->capture_default_str();
    run_cmd->add_option("--max-qubits", ra.max_qubits)->capture_default_str();

    BenchArgs ba;
    auto *bench_cmd = app.add_subcommand("bench", "Time backends over repetitions");
    bench_cmd->add_option("files", ba.files, "OpenQASM 2.0 files")->required();
    bench_cmd->add_option("--backends", ba.backends)
        ->delimiter(',')
        ->check(CLI::IsMember({"dense", "diaq"}))
        ->capture_default_str();
    bench_cmd->add_option("--reps", ba.reps)->capture_default_str();
    bench_cmd->add_option("--shots", ba.shots)->capture_default_str();
    bench_cmd->add_option("--seed", ba.seed)->capture_default_str();
    bench_cmd->add_option("--fusion", ba.fusion, "on|off")
        ->transform(CLI::CheckedTransformer(on_off))
        ->default_str("off");
    bench_cmd->add_option("--span-limit", ba.span_limit)->capture_default_str();
    bench_cmd->add_option("--out", ba.out, "CSV path (default: stdout)");
    bench_cmd->add_option("--threads", ba.threads);
    bench_cmd->add_option("--max-qubits", ba.max_qubits)->capture_default_str();

    AnalyzeArgs aa;
    auto *analyze_cmd = app.add_subcommand("analyze", "Sparsity and memory per timestep");
    analyze_cmd->add_option("file", aa.file, "OpenQASM 2.0 file")->required();
    analyze_cmd->add_option("--eps", aa.eps)->capture_default_str();
    analyze_cmd->add_option("--mode", aa.mode)
        ->check(CLI::IsMember({"timestep", "chain", "both"}))
        ->capture_default_str();
    analyze_cmd->add_option("--order", aa.order, "Chain product side for new timesteps")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    analyze_cmd->add_option("--format", aa.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    analyze_cmd->add_option("--span-limit", aa.span_limit)->capture_default_str();
    analyze_cmd->add_option("--max-qubits", aa.max_qubits)->capture_default_str();
    analyze_cmd->add_option("--out", aa.out, "Output path (default: stdout)");
    analyze_cmd->add_option("--threads", aa.threads);

    GenArgs ga;
    auto *gen_cmd = app.add_subcommand("gen", "Write a generated circuit as QASM");
    gen_cmd->add_option("family", ga.family)
        ->required()
        ->check(CLI::IsMember({"ghz", "qft"}));
    gen_cmd->add_option("--qubits", ga.qubits)->required()->check(CLI::Range(1, 64));
    gen_cmd->add_flag("--measure", ga.measure, "Append terminal measurements");
    gen_cmd->add_option("--out", ga.out, "Output path (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(ra, out, err);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(ba, out, err);
        }
        if (analyze_cmd->parsed()) {
            return cmd_analyze(aa, out, err);
        }
        return cmd_gen(ga, out);
    } catch (const Exit &e) {
        return e.code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return code_for(e);
    }
}

} // namespace diaq::cli
