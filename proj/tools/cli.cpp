// exclcs: longest common subsequence excluding a forbidden substring.
//
//   exclcs solve --x abbb --y aab --p ab [--algo optimized] [--emit length]
//   exclcs diff  --trials 10000 --seed 0 --max-n 10 --max-m 10 --max-r 4 --alphabet abc --solvers naive,optimized
//   exclcs bench --n-list 500,1000 --m-list 500 --r-list 8 --reps 5 [--mode tensor]
//
// Exit codes: 0 ok, 1 discrepancies found, 2 invalid input, 3 unreadable
// file, 4 oracle size guard, 5 allocation failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exclcs/automaton.hpp"
#include "exclcs/difftest.hpp"
#include "exclcs/reference.hpp"
#include "exclcs/solver.hpp"

namespace {

using exclcs::SolverKind;
using json = nlohmann::ordered_json;

enum ExitCode : int {
    kOk = 0,
    kDiscrepancies = 1,
    kInvalid = 2,
    kUnreadable = 3,
    kOracleGuard = 4,
    kAllocation = 5,
};

struct CliError {
    int code;
    std::string message;
};

std::string load_source(const std::string& source) {
    if (source.empty() || source.front() != '@') {
        return source;
    }
    const std::string path = source.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kUnreadable, "cannot read '" + path + "'"};
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw CliError{kUnreadable, "cannot read '" + path + "'"};
    }
    if (!data.empty() && data.back() == '\n') {
        data.pop_back();
    }
    return data;
}

std::vector<std::int32_t> parse_int_list(const std::string& text, const char* flag) {
    std::vector<std::int32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long value = std::stol(item, &used);
            if (used != item.size() || value < 0 || static_cast<std::size_t>(value) > exclcs::kMaxSequenceLength) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<std::int32_t>(value));
        } catch (const std::exception&) {
            throw CliError{kInvalid, std::string("invalid value '") + item + "' in " + flag};
        }
    }
    if (out.empty()) {
        throw CliError{kInvalid, std::string(flag) + " must not be empty"};
    }
    return out;
}

// Grid layout: one row per i, one block of m columns per plane k.
void print_planes(std::ostream& out, std::int32_t n, std::int32_t m, std::int32_t planes,
                  const std::function<std::int32_t(std::int32_t, std::int32_t, std::int32_t)>& at) {
    std::size_t width = 1;
    for (std::int32_t i = 1; i <= n; ++i) {
        for (std::int32_t j = 1; j <= m; ++j) {
            for (std::int32_t k = 0; k < planes; ++k) {
                width = std::max(width, std::to_string(at(i, j, k)).size());
            }
        }
    }
    const std::string row_label_pad(std::to_string(n).size() + 2, ' ');
    const std::size_t block = std::max<std::size_t>(static_cast<std::size_t>(m) * (width + 1), 1) - 1;

    out << row_label_pad;
    for (std::int32_t k = 0; k < planes; ++k) {
        std::string label = "k=" + std::to_string(k);
        if (label.size() < block) {
            label.append(block - label.size(), ' ');
        }
        out << " | " << label;
    }
    out << '\n';
    for (std::int32_t i = 1; i <= n; ++i) {
        std::string label = "i=" + std::to_string(i);
        label.append(row_label_pad.size() - label.size(), ' ');
        out << label;
        for (std::int32_t k = 0; k < planes; ++k) {
            out << " |";
            for (std::int32_t j = 1; j <= m; ++j) {
                const auto value = std::to_string(at(i, j, k));
                out << ' ' << std::string(width - value.size(), ' ') << value;
            }
        }
        out << '\n';
    }
}

struct SolveArgs {
    std::string x;
    std::string y;
    std::string p;
    std::string algo = "optimized";
    std::string emit = "length";
};

int cmd_solve(const SolveArgs& args) {
    const auto kind = exclcs::parse_solver(args.algo);
    if (!kind) {
        throw CliError{kInvalid, "unknown algorithm '" + args.algo + "'"};
    }
    const auto& emit = args.emit;
    const bool chen_chao = *kind == SolverKind::ChenChao1 || *kind == SolverKind::ChenChao2;
    if (emit == "witness" && chen_chao) {
        throw CliError{kInvalid, "chen-chao does not produce a witness"};
    }
    if (emit == "table" && *kind == SolverKind::Brute) {
        throw CliError{kInvalid, "brute has no table to emit"};
    }

    const exclcs::Sequence x(load_source(args.x));
    const exclcs::Sequence y(load_source(args.y));
    const exclcs::ConstraintPattern p(exclcs::Sequence(load_source(args.p)));

    const bool want_witness = emit == "witness" || emit == "json";
    const exclcs::SolveOptions options{.witness = want_witness, .keep_tensor = emit == "table"};

    std::int32_t length = 0;
    std::int32_t best_state = 0;
    std::optional<exclcs::Sequence> witness;
    std::optional<exclcs::DpTensor> tensor;
    std::optional<exclcs::ChenChaoTable> table;

    const auto start = std::chrono::steady_clock::now();
    switch (*kind) {
        case SolverKind::Naive:
        case SolverKind::Optimized:
        case SolverKind::Brute: {
            auto outcome = *kind == SolverKind::Naive       ? exclcs::solve_naive(x, y, p, options)
                           : *kind == SolverKind::Optimized ? exclcs::solve_optimized(x, y, p, options)
                                                            : exclcs::brute_force_oracle(x, y, p);
            length = outcome.length;
            best_state = outcome.best_state;
            witness = std::move(outcome.witness);
            tensor = std::move(outcome.tensor);
            break;
        }
        case SolverKind::ChenChao1:
        case SolverKind::ChenChao2:
            table = exclcs::chen_chao_solve(
                x, y, p,
                *kind == SolverKind::ChenChao1 ? exclcs::ChenChaoVariant::Full : exclcs::ChenChaoVariant::Reduced);
            length = table->result();
            best_state = p.size();
            break;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();

    if (emit == "length") {
        std::cout << length << '\n';
    } else if (emit == "witness") {
        std::cout << witness->view() << '\n';
    } else if (emit == "json") {
        json record;
        record["length"] = length;
        record["witness"] = witness ? json(witness->str()) : json(nullptr);
        record["best_state"] = best_state;
        record["algorithm"] = args.algo;
        record["elapsed_ns"] = elapsed;
        std::cout << record.dump() << '\n';
    } else if (tensor) {
        print_planes(std::cout, x.size(), y.size(), p.size(),
                     [&](std::int32_t i, std::int32_t j, std::int32_t k) { return (*tensor)(i, j, k); });
    } else {
        print_planes(std::cout, x.size(), y.size(), p.size() + 1,
                     [&](std::int32_t i, std::int32_t j, std::int32_t k) { return (*table)(i, j, k); });
    }
    return kOk;
}

json discrepancy_json(const exclcs::Discrepancy& d) {
    json reported = json::object();
    for (const auto& [kind, length] : d.reported) {
        reported[std::string(exclcs::solver_name(kind))] = length;
    }
    json out;
    out["trial"] = d.trial;
    out["x"] = d.instance.x.str();
    out["y"] = d.instance.y.str();
    out["p"] = d.instance.p.symbols().str();
    out["expected"] = d.expected;
    out["reported"] = std::move(reported);
    out["minimized"] = d.minimized;
    return out;
}

struct DiffArgs {
    exclcs::InstanceSpec spec;
    std::string solvers = "naive,optimized";
    unsigned threads = 1;
};

int cmd_diff(const DiffArgs& args) {
    std::vector<SolverKind> solvers;
    try {
        solvers = exclcs::parse_solver_list(args.solvers);
    } catch (const std::invalid_argument& e) {
        throw CliError{kInvalid, e.what()};
    }
    exclcs::CampaignReport report;
    try {
        report = exclcs::run_campaign(args.spec, solvers, args.threads);
    } catch (const std::invalid_argument& e) {
        throw CliError{kInvalid, e.what()};
    }

    std::cout << report.trials << " trials, " << report.discrepancies.size() << " discrepancies, "
              << report.witness_failures.size() << " witness failures";
    if (!report.discrepancies.empty()) {
        const auto minimized = exclcs::shrink(report.discrepancies.front(), solvers);
        std::cout << "; first minimized: " << discrepancy_json(minimized).dump();
    }
    std::cout << '\n';
    for (const auto& d : report.discrepancies) {
        std::cout << discrepancy_json(d).dump() << '\n';
    }
    for (const auto& w : report.witness_failures) {
        json out;
        out["trial"] = w.trial;
        out["solver"] = std::string(exclcs::solver_name(w.solver));
        out["witness_error"] = w.reason;
        std::cout << out.dump() << '\n';
    }
    return report.clean() ? kOk : kDiscrepancies;
}

struct BenchArgs {
    std::string n_list = "500,1000";
    std::string m_list = "500";
    std::string r_list = "8";
    std::string alphabet = "abcd";
    std::string algos = "optimized";
    std::int32_t reps = 5;
    std::uint64_t seed = 42;
    std::string mode = "tensor";
};

std::int64_t time_once(SolverKind kind, const exclcs::Sequence& x, const exclcs::Sequence& y,
                       const exclcs::ConstraintPattern& p, const exclcs::SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    std::int32_t length = 0;
    switch (kind) {
        case SolverKind::Naive:
            length = exclcs::solve_naive(x, y, p, options).length;
            break;
        case SolverKind::Optimized:
            length = exclcs::solve_optimized(x, y, p, options).length;
            break;
        default:
            length = exclcs::solver_length(kind, x, y, p);
            break;
    }
    const auto stop = std::chrono::steady_clock::now();
    // Keep the result observable.
    if (length < 0) {
        std::cerr << "negative length\n";
    }
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

int cmd_bench(const BenchArgs& args) {
    if (args.reps < 1) {
        throw CliError{kInvalid, "--reps must be at least 1"};
    }
    if (args.alphabet.empty()) {
        throw CliError{kInvalid, "--alphabet must not be empty"};
    }
    const auto ns = parse_int_list(args.n_list, "--n-list");
    const auto ms = parse_int_list(args.m_list, "--m-list");
    const auto rs = parse_int_list(args.r_list, "--r-list");
    if (std::find(rs.begin(), rs.end(), 0) != rs.end()) {
        throw CliError{kInvalid, "empty constraint pattern is infeasible"};
    }
    std::vector<SolverKind> algos;
    try {
        algos = exclcs::parse_solver_list(args.algos);
    } catch (const std::invalid_argument& e) {
        throw CliError{kInvalid, e.what()};
    }
    const exclcs::SolveOptions options{.witness = args.mode == "witness", .keep_tensor = args.mode == "tensor"};

    std::cout << "n,m,r,algo,median_ns\n";
    for (const auto n : ns) {
        for (const auto m : ms) {
            for (const auto r : rs) {
                try {
                    // Inputs depend only on (seed, n, m, r) so every algorithm sees the same instance.
                    exclcs::SplitMix64 rng(exclcs::SplitMix64::mix(args.seed));
                    auto draw = [&](std::int32_t len) {
                        std::string s(static_cast<std::size_t>(len), '\0');
                        for (auto& c : s) {
                            c = args.alphabet[rng.below(args.alphabet.size())];
                        }
                        return s;
                    };
                    const exclcs::Sequence x(draw(n));
                    const exclcs::Sequence y(draw(m));
                    const exclcs::ConstraintPattern p(exclcs::Sequence(draw(r)));
                    for (const auto kind : algos) {
                        std::vector<std::int64_t> samples;
                        for (std::int32_t rep = 0; rep < args.reps; ++rep) {
                            samples.push_back(time_once(kind, x, y, p, options));
                        }
                        std::sort(samples.begin(), samples.end());
                        std::cout << n << ',' << m << ',' << r << ',' << exclcs::solver_name(kind) << ','
                                  << samples[samples.size() / 2] << '\n';
                    }
                } catch (const std::bad_alloc&) {
                    throw CliError{kAllocation, "allocation failed for n=" + std::to_string(n) +
                                                    " m=" + std::to_string(m) + " r=" + std::to_string(r)};
                } catch (const std::length_error&) {
                    throw CliError{kAllocation, "allocation failed for n=" + std::to_string(n) +
                                                    " m=" + std::to_string(m) + " r=" + std::to_string(r)};
                }
            }
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest common subsequence excluding a forbidden substring"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
    solve_cmd->add_option("--x", solve.x, "First sequence, or @path")->required();
    solve_cmd->add_option("--y", solve.y, "Second sequence, or @path")->required();
    solve_cmd->add_option("--p", solve.p, "Forbidden pattern, or @path")->required();
    solve_cmd->add_option("--algo", solve.algo, "naive|optimized|chen-chao-1|chen-chao-2|brute")
        ->check(CLI::IsMember({"naive", "optimized", "chen-chao-1", "chen-chao-2", "brute"}));
    solve_cmd->add_option("--emit", solve.emit, "length|witness|json|table")
        ->check(CLI::IsMember({"length", "witness", "json", "table"}));

    DiffArgs diff;
    auto* diff_cmd = app.add_subcommand("diff", "Differential campaign against the brute-force oracle");
    diff_cmd->add_option("--trials", diff.spec.trials);
    diff_cmd->add_option("--seed", diff.spec.seed);
    diff_cmd->add_option("--max-n", diff.spec.max_n);
    diff_cmd->add_option("--max-m", diff.spec.max_m);
    diff_cmd->add_option("--max-r", diff.spec.max_r);
    diff_cmd->add_option("--alphabet", diff.spec.alphabet);
    diff_cmd->add_option("--solvers", diff.solvers, "Comma-separated solver names");
    diff_cmd->add_option("--threads", diff.threads);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Median solve time per (n, m, r) as CSV");
    bench_cmd->add_option("--n-list", bench.n_list);
    bench_cmd->add_option("--m-list", bench.m_list);
    bench_cmd->add_option("--r-list", bench.r_list);
    bench_cmd->add_option("--alphabet", bench.alphabet);
    bench_cmd->add_option("--algos", bench.algos);
    bench_cmd->add_option("--reps", bench.reps);
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--mode", bench.mode, "tensor (full DP tensor), witness (tensor + backtrace), length (two rows)")
        ->check(CLI::IsMember({"tensor", "witness", "length"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(solve);
        }
        if (*diff_cmd) {
            return cmd_diff(diff);
        }
        return cmd_bench(bench);
    } catch (const CliError& e) {
        std::cerr << "exclcs: " << e.message << '\n';
        return e.code;
    } catch (const exclcs::InfeasiblePattern& e) {
        std::cerr << "exclcs: " << e.what() << '\n';
        return kInvalid;
    } catch (const exclcs::OracleSizeError& e) {
        std::cerr << "exclcs: " << e.what() << '\n';
        return kOracleGuard;
    } catch (const exclcs::InputTooLarge& e) {
        std::cerr << "exclcs: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::length_error& e) {
        std::cerr << "exclcs: " << e.what() << '\n';
        return kAllocation;
    } catch (const std::bad_alloc&) {
        std::cerr << "exclcs: allocation failed\n";
        return kAllocation;
    }
}
