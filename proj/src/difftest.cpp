#include "exclcs/difftest.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

namespace exclcs {
namespace {

constexpr std::array<std::pair<SolverKind, std::string_view>, 5> kSolverNames{{
    {SolverKind::Naive, "naive"},
    {SolverKind::Optimized, "optimized"},
    {SolverKind::ChenChao1, "chen-chao-1"},
    {SolverKind::ChenChao2, "chen-chao-2"},
    {SolverKind::Brute, "brute"},
}};

bool is_core(SolverKind kind) noexcept { return kind == SolverKind::Naive || kind == SolverKind::Optimized; }

std::string random_symbols(SplitMix64& rng, std::string_view alphabet, std::int32_t length) {
    std::string out;
    out.reserve(static_cast<std::size_t>(length));
    for (std::int32_t i = 0; i < length; ++i) {
        out.push_back(alphabet[rng.below(alphabet.size())]);
    }
    return out;
}

struct TrialResult {
    std::optional<Discrepancy> discrepancy;
    std::vector<WitnessFailure> witness_failures;
};

TrialResult run_trial(const InstanceSpec& spec, const std::vector<SolverKind>& solvers, std::uint64_t trial) {
    TrialResult result;
    auto instance = generate_instance(spec, trial);
    const auto expected = brute_force_oracle(instance.x, instance.y, instance.p).length;

    Discrepancy d{trial, instance, expected, {}, false, true};
    bool differs = false;
    for (const auto kind : solvers) {
        std::int32_t length = 0;
        if (is_core(kind)) {
            const auto outcome = kind == SolverKind::Naive ? solve_naive(instance.x, instance.y, instance.p)
                                                           : solve_optimized(instance.x, instance.y, instance.p);
            length = outcome.length;
            if (auto failure = validate_witness(instance, outcome)) {
                result.witness_failures.push_back({trial, kind, std::move(*failure)});
            }
        } else {
            length = solver_length(kind, instance.x, instance.y, instance.p);
        }
        differs = differs || length != expected;
        d.reported.emplace_back(kind, length);
    }
    if (differs) {
        result.discrepancy = std::move(d);
    }
    return result;
}

bool disagrees(SolverKind kind, const Sequence& x, const Sequence& y, const ConstraintPattern& p) {
    return solver_length(kind, x, y, p) != brute_force_oracle(x, y, p).length;
}

}  // namespace

std::string_view solver_name(SolverKind kind) noexcept {
    for (const auto& [k, name] : kSolverNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<SolverKind> parse_solver(std::string_view name) noexcept {
    for (const auto& [k, n] : kSolverNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::vector<SolverKind> parse_solver_list(std::string_view list) {
    std::vector<SolverKind> out;
    while (true) {
        const auto comma = list.find(',');
        const auto item = list.substr(0, comma);
        const auto kind = parse_solver(item);
        if (!kind) {
            throw std::invalid_argument("unknown solver '" + std::string(item) + "'");
        }
        if (std::find(out.begin(), out.end(), *kind) == out.end()) {
            out.push_back(*kind);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    return out;
}

void InstanceSpec::validate() const {
    if (max_r < 1) {
        throw std::invalid_argument("max_r must be at least 1");
    }
    if (max_n < 0 || max_m < 0) {
        throw std::invalid_argument("max_n and max_m must be non-negative");
    }
    if (alphabet.empty()) {
        throw std::invalid_argument("alphabet must be non-empty");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
}

Instance generate_instance(const InstanceSpec& spec, std::uint64_t trial) {
    SplitMix64 rng(SplitMix64::mix(SplitMix64::mix(spec.seed) + trial));
    const auto n = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(spec.max_n) + 1));
    const auto m = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(spec.max_m) + 1));
    const auto r = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(spec.max_r)));
    auto x = random_symbols(rng, spec.alphabet, n);
    auto y = random_symbols(rng, spec.alphabet, m);
    auto p = random_symbols(rng, spec.alphabet, r);
    return {Sequence(std::move(x)), Sequence(std::move(y)), ConstraintPattern(Sequence(std::move(p)))};
}

std::int32_t solver_length(SolverKind kind, const Sequence& x, const Sequence& y, const ConstraintPattern& p) {
    constexpr SolveOptions length_only{.witness = false, .keep_tensor = false};
    switch (kind) {
        case SolverKind::Naive:
            return solve_naive(x, y, p, length_only).length;
        case SolverKind::Optimized:
            return solve_optimized(x, y, p, length_only).length;
        case SolverKind::ChenChao1:
            return chen_chao_solve(x, y, p, ChenChaoVariant::Full).result();
        case SolverKind::ChenChao2:
            return chen_chao_solve(x, y, p, ChenChaoVariant::Reduced).result();
        case SolverKind::Brute:
            return brute_force_oracle(x, y, p).length;
    }
    return 0;
}

std::optional<SolverKind> Discrepancy::culprit() const noexcept {
    for (const auto& [kind, length] : reported) {
        if (length != expected) {
            return kind;
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_witness(const Instance& instance, const SolveOutcome& outcome) {
    if (!outcome.witness) {
        return "no witness";
    }
    const auto w = outcome.witness->view();
    if (static_cast<std::int32_t>(w.size()) != outcome.length) {
        return "witness length " + std::to_string(w.size()) + " != reported " + std::to_string(outcome.length);
    }
    if (!is_subsequence(w, instance.x.view())) {
        return "witness is not a subsequence of x";
    }
    if (!is_subsequence(w, instance.y.view())) {
        return "witness is not a subsequence of y";
    }
    const auto pattern = instance.p.view();
    for (std::size_t start = 0; start + pattern.size() <= w.size(); ++start) {
        if (w.substr(start, pattern.size()) == pattern) {
            return "witness contains the pattern at offset " + std::to_string(start);
        }
    }
    const auto state = sigma_by_definition(pattern, w);
    if (state != outcome.best_state) {
        return "sigma(witness) = " + std::to_string(state) + " != best state " +
               std::to_string(outcome.best_state);
    }
    return std::nullopt;
}

CampaignReport run_campaign(const InstanceSpec& spec, const std::vector<SolverKind>& solvers, unsigned threads) {
    spec.validate();
    if (spec.max_n + spec.max_m > kDefaultOracleGuard) {
        throw std::invalid_argument("max_n + max_m exceeds the oracle guard of " +
                                    std::to_string(kDefaultOracleGuard));
    }
    if (solvers.empty()) {
        throw std::invalid_argument("no solvers selected");
    }

    std::vector<TrialResult> results(spec.trials);
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(spec.trials, 256))));
    if (threads == 1) {
        for (std::uint64_t t = 0; t < spec.trials; ++t) {
            results[t] = run_trial(spec, solvers, t);
        }
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::uint64_t t = w; t < spec.trials; t += threads) {
                    results[t] = run_trial(spec, solvers, t);
                }
            });
        }
    }

    CampaignReport report;
    report.trials = spec.trials;
    for (auto& r : results) {
        if (r.discrepancy) {
            report.discrepancies.push_back(std::move(*r.discrepancy));
        }
        for (auto& f : r.witness_failures) {
            report.witness_failures.push_back(std::move(f));
        }
    }
    return report;
}

Discrepancy shrink(const Discrepancy& d, const std::vector<SolverKind>& solvers) {
    const auto culprit = d.culprit();
    if (!culprit || !disagrees(*culprit, d.instance.x, d.instance.y, d.instance.p)) {
        Discrepancy unchanged = d;
        unchanged.reproduced = false;
        return unchanged;
    }

    std::string x = d.instance.x.str();
    std::string y = d.instance.y.str();
    std::string p = d.instance.p.symbols().str();
    auto still_fails = [&](const std::string& xs, const std::string& ys, const std::string& ps) {
        return disagrees(*culprit, Sequence(xs), Sequence(ys), ConstraintPattern(Sequence(ps)));
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const int which : {0, 1, 2}) {
            std::string& s = which == 0 ? x : which == 1 ? y : p;
            const std::size_t min_size = which == 2 ? 1 : 0;
            std::size_t pos = 0;
            while (pos < s.size() && s.size() > min_size) {
                std::string candidate = s;
                candidate.erase(pos, 1);
                const bool fails = which == 0   ? still_fails(candidate, y, p)
                                   : which == 1 ? still_fails(x, candidate, p)
                                                : still_fails(x, y, candidate);
                if (fails) {
                    s = std::move(candidate);
                    changed = true;
                } else {
                    ++pos;
                }
            }
        }
    }

    Instance small{Sequence(x), Sequence(y), ConstraintPattern(Sequence(p))};
    Discrepancy out{d.trial, small, brute_force_oracle(small.x, small.y, small.p).length, {}, true, true};
    for (const auto kind : solvers) {
        out.reported.emplace_back(kind, solver_length(kind, small.x, small.y, small.p));
    }
    if (std::find_if(out.reported.begin(), out.reported.end(),
                     [&](const auto& entry) { return entry.first == *culprit; }) == out.reported.end()) {
        out.reported.emplace_back(*culprit, solver_length(*culprit, small.x, small.y, small.p));
    }
    return out;
}

}  // namespace exclcs
