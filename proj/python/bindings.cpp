#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "exclcs/automaton.hpp"
#include "exclcs/difftest.hpp"
#include "exclcs/reference.hpp"
#include "exclcs/solver.hpp"

namespace py = pybind11;
using namespace exclcs;

namespace {

using Grid = std::vector<std::vector<std::vector<std::int32_t>>>;

SolverKind solver_of(const std::string& name) {
    const auto kind = parse_solver(name);
    if (!kind) {
        throw py::value_error("unknown algorithm: " + name);
    }
    return *kind;
}

std::vector<SolverKind> solvers_of(const std::vector<std::string>& names) {
    std::vector<SolverKind> out;
    for (const auto& name : names) {
        out.push_back(solver_of(name));
    }
    return out;
}

py::dict solve(const std::string& x, const std::string& y, const std::string& p, const std::string& algorithm,
               bool witness) {
    const Sequence xs(x);
    const Sequence ys(y);
    const ConstraintPattern ps(p);
    const auto kind = solver_of(algorithm);
    py::dict out;
    out["algorithm"] = std::string(solver_name(kind));
    if (kind == SolverKind::ChenChao1 || kind == SolverKind::ChenChao2) {
        const auto variant = kind == SolverKind::ChenChao1 ? ChenChaoVariant::Full : ChenChaoVariant::Reduced;
        out["length"] = chen_chao_solve(xs, ys, ps, variant).result();
        out["witness"] = py::none();
        out["best_state"] = ps.size();
        return out;
    }
    SolveOutcome result;
    {
        py::gil_scoped_release release;
        const SolveOptions options{.witness = witness, .keep_tensor = false};
        if (kind == SolverKind::Naive) {
            result = solve_naive(xs, ys, ps, options);
        } else if (kind == SolverKind::Optimized) {
            result = solve_optimized(xs, ys, ps, options);
        } else {
            result = brute_force_oracle(xs, ys, ps);
        }
    }
    out["length"] = result.length;
    out["best_state"] = result.best_state;
    if (result.witness) {
        out["witness"] = result.witness->str();
    } else {
        out["witness"] = py::none();
    }
    return out;
}

Grid state_tensor(const std::string& x, const std::string& y, const std::string& p, const std::string& algorithm) {
    const Sequence xs(x);
    const Sequence ys(y);
    const ConstraintPattern ps(p);
    const auto kind = solver_of(algorithm);
    Grid grid;
    if (kind == SolverKind::ChenChao1 || kind == SolverKind::ChenChao2) {
        const auto variant = kind == SolverKind::ChenChao1 ? ChenChaoVariant::Full : ChenChaoVariant::Reduced;
        const auto L = chen_chao_solve(xs, ys, ps, variant);
        grid.assign(static_cast<std::size_t>(xs.size() + 1), {});
        for (std::int32_t i = 0; i <= xs.size(); ++i) {
            for (std::int32_t j = 0; j <= ys.size(); ++j) {
                auto& cell = grid[static_cast<std::size_t>(i)].emplace_back();
                for (std::int32_t k = 0; k <= ps.size(); ++k) {
                    cell.push_back(L(i, j, k));
                }
            }
        }
        return grid;
    }
    if (kind == SolverKind::Brute) {
        throw py::value_error("the brute-force oracle has no table");
    }
    const SolveOptions options{.witness = false, .keep_tensor = true};
    const auto out = kind == SolverKind::Naive ? solve_naive(xs, ys, ps, options) : solve_optimized(xs, ys, ps, options);
    const auto& f = *out.tensor;
    grid.assign(static_cast<std::size_t>(xs.size() + 1), {});
    for (std::int32_t i = 0; i <= xs.size(); ++i) {
        for (std::int32_t j = 0; j <= ys.size(); ++j) {
            const auto* cell = f.cell(i, j);
            grid[static_cast<std::size_t>(i)].emplace_back(cell, cell + ps.size());
        }
    }
    return grid;
}

py::dict transition_table(const std::string& p, const std::optional<std::string>& alphabet) {
    const ConstraintPattern ps(p);
    const auto table = alphabet ? build_transition_table(ps.view(), ps.prefix(), *alphabet) : ps.transitions();
    py::dict out;
    for (const char a : table.alphabet()) {
        const auto column = table.column(static_cast<unsigned char>(a));
        out[py::str(std::string(1, a))] = std::vector<std::int32_t>(column.begin(), column.end());
    }
    return out;
}

py::dict discrepancy_dict(const Discrepancy& d) {
    py::dict out;
    out["trial"] = d.trial;
    out["x"] = d.instance.x.str();
    out["y"] = d.instance.y.str();
    out["p"] = d.instance.p.symbols().str();
    out["expected"] = d.expected;
    py::dict reported;
    for (const auto& [kind, length] : d.reported) {
        reported[py::str(std::string(solver_name(kind)))] = length;
    }
    out["reported"] = reported;
    out["minimized"] = d.minimized;
    out["reproduced"] = d.reproduced;
    return out;
}

py::dict diff(std::uint64_t trials, std::uint64_t seed, std::int32_t max_n, std::int32_t max_m, std::int32_t max_r,
              const std::string& alphabet, const std::vector<std::string>& solvers, unsigned threads) {
    const InstanceSpec spec{.max_n = max_n, .max_m = max_m, .max_r = max_r, .alphabet = alphabet, .seed = seed,
                            .trials = trials};
    const auto kinds = solvers_of(solvers);
    CampaignReport report;
    {
        py::gil_scoped_release release;
        report = run_campaign(spec, kinds, threads);
    }
    py::list discrepancies;
    for (const auto& d : report.discrepancies) {
        discrepancies.append(discrepancy_dict(d));
    }
    py::list failures;
    for (const auto& w : report.witness_failures) {
        py::dict item;
        item["trial"] = w.trial;
        item["solver"] = std::string(solver_name(w.solver));
        item["reason"] = w.reason;
        failures.append(item);
    }
    py::dict out;
    out["trials"] = report.trials;
    out["discrepancies"] = discrepancies;
    out["witness_failures"] = failures;
    return out;
}

py::dict shrink_instance(const std::string& x, const std::string& y, const std::string& p,
                         const std::vector<std::string>& solvers) {
    const auto kinds = solvers_of(solvers);
    if (kinds.empty()) {
        throw py::value_error("at least one solver is required");
    }
    Instance inst{Sequence(x), Sequence(y), ConstraintPattern(p)};
    Discrepancy d{0, inst, brute_force_oracle(inst.x, inst.y, inst.p).length, {}, false, true};
    for (const auto kind : kinds) {
        d.reported.emplace_back(kind, solver_length(kind, inst.x, inst.y, inst.p));
    }
    d.reproduced = d.culprit().has_value();
    return discrepancy_dict(shrink(d, kinds));
}

}  // namespace

PYBIND11_MODULE(_exclcs, m) {
    m.doc() = "Longest common subsequence excluding a pattern as a substring";

    py::register_exception<InfeasiblePattern>(m, "InfeasiblePattern", PyExc_ValueError);
    py::register_exception<OracleSizeError>(m, "OracleSizeError", PyExc_OverflowError);
    py::register_exception<InternalInvariantError>(m, "InternalInvariantError", PyExc_RuntimeError);

    m.def("solve", &solve, py::arg("x"), py::arg("y"), py::arg("p"), py::arg("algorithm") = "optimized",
          py::arg("witness") = true,
          "Solve one instance. Returns a dict with length, witness, best_state and algorithm.");
    m.def("state_tensor", &state_tensor, py::arg("x"), py::arg("y"), py::arg("p"),
          py::arg("algorithm") = "optimized", "The filled table indexed [i][j][k].");
    m.def(
        "brute_force",
        [](const std::string& x, const std::string& y, const std::string& p, std::int32_t guard) {
            const auto out = brute_force_oracle(Sequence(x), Sequence(y), ConstraintPattern(p), guard);
            return py::make_tuple(out.length, out.witness->str());
        },
        py::arg("x"), py::arg("y"), py::arg("p"), py::arg("guard") = kDefaultOracleGuard,
        "Exhaustive oracle. Returns (length, lexicographically smallest optimal witness).");
    m.def(
        "prefix_function",
        [](const std::string& p) {
            const auto prefix = build_prefix_function(p);
            const auto values = prefix.values();
            return std::vector<std::int32_t>(values.begin(), values.end());
        },
        py::arg("p"), "Failure links kmp(0..r) with kmp(0) = -1.");
    m.def("transition_table", &transition_table, py::arg("p"), py::arg("alphabet") = py::none(),
          "Automaton columns keyed by symbol.");
    m.def("sigma", [](const std::string& p, const std::string& s) { return ConstraintPattern(p).sigma_of(s); },
          py::arg("p"), py::arg("s"), "Length of the longest suffix of s that is a prefix of p.");
    m.def("plain_lcs", [](const std::string& x, const std::string& y) { return plain_lcs(x, y); }, py::arg("x"),
          py::arg("y"));
    m.def("diff", &diff, py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("max_n") = 10,
          py::arg("max_m") = 10, py::arg("max_r") = 4, py::arg("alphabet") = "abc",
          py::arg("solvers") = std::vector<std::string>{"naive", "optimized"}, py::arg("threads") = 1,
          "Randomized differential campaign against the brute-force oracle.");
    m.def("shrink", &shrink_instance, py::arg("x"), py::arg("y"), py::arg("p"), py::arg("solvers"),
          "Greedy 1-minimization of an instance on which a solver disagrees with the oracle.");
}
