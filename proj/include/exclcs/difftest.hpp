#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exclcs/automaton.hpp"
#include "exclcs/reference.hpp"
#include "exclcs/sequence.hpp"
#include "exclcs/solver.hpp"

namespace exclcs {

/// SplitMix64 (Steele, Lea, Flood). The state advances by the golden-ratio
/// increment and each output is the finalizer applied to the new state.
class SplitMix64 {
public:
    static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() noexcept {
        state_ += kIncrement;
        return mix(state_);
    }

    /// Uniform-ish integer in [0, bound) by reduction modulo bound.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

enum class SolverKind : std::uint8_t { Naive, Optimized, ChenChao1, ChenChao2, Brute };

std::string_view solver_name(SolverKind kind) noexcept;
/// Parses "naive", "optimized", "chen-chao-1", "chen-chao-2", "brute".
std::optional<SolverKind> parse_solver(std::string_view name) noexcept;
/// Parses a comma-separated list; throws std::invalid_argument on unknown or empty entries.
std::vector<SolverKind> parse_solver_list(std::string_view list);

struct InstanceSpec {
    std::int32_t max_n = 10;
    std::int32_t max_m = 10;
    std::int32_t max_r = 4;
    std::string alphabet = "abc";
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;

    /// Throws std::invalid_argument when max_r < 1, the alphabet is empty,
    /// trials is zero or a bound is negative.
    void validate() const;
};

struct Instance {
    Sequence x;
    Sequence y;
    ConstraintPattern p;
};

/// Deterministic in (spec.seed, trial). The per-trial generator starts from
/// mix(mix(seed) + trial) and draws n, m, r, then the symbols of x, y and p.
Instance generate_instance(const InstanceSpec& spec, std::uint64_t trial);

/// Length reported by one solver; core-dp solvers run in length-only mode.
std::int32_t solver_length(SolverKind kind, const Sequence& x, const Sequence& y, const ConstraintPattern& p);

struct Discrepancy {
    std::uint64_t trial = 0;
    Instance instance;
    std::int32_t expected = 0;
    std::vector<std::pair<SolverKind, std::int32_t>> reported;
    bool minimized = false;
    /// False when the instance did not disagree with the oracle on re-run.
    bool reproduced = true;

    /// First solver whose length differs from the oracle.
    [[nodiscard]] std::optional<SolverKind> culprit() const noexcept;
};

struct WitnessFailure {
    std::uint64_t trial = 0;
    SolverKind solver = SolverKind::Optimized;
    std::string reason;
};

struct CampaignReport {
    std::uint64_t trials = 0;
    std::vector<Discrepancy> discrepancies;
    std::vector<WitnessFailure> witness_failures;

    [[nodiscard]] bool clean() const noexcept { return discrepancies.empty() && witness_failures.empty(); }
};

/// Checks a core-dp witness against the instance: length, common
/// subsequence of both inputs, no window equal to P, and sigma(w) equal to
/// the reported best state. Returns the first violation, if any.
std::optional<std::string> validate_witness(const Instance& instance, const SolveOutcome& outcome);

/// Runs every trial against the brute-force oracle. Core-dp solvers are run
/// with witness reconstruction and every witness is validated. Results are
/// ordered by trial index for any thread count.
CampaignReport run_campaign(const InstanceSpec& spec, const std::vector<SolverKind>& solvers,
                            unsigned threads = 1);

/// Greedy 1-minimization. Deletes symbols left to right from x, then y,
/// then p, keeping each deletion that preserves the culprit's disagreement,
/// until no single deletion does. A non-reproducing input comes back
/// unchanged with reproduced = false.
Discrepancy shrink(const Discrepancy& d, const std::vector<SolverKind>& solvers);

}  // namespace exclcs
