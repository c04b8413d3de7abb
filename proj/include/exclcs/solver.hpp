#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exclcs/automaton.hpp"
#include "exclcs/sequence.hpp"

namespace exclcs {

/// f(i, j, k) for 0 <= i <= n, 0 <= j <= m, 0 <= k < r, with k innermost.
class DpTensor {
public:
    DpTensor() = default;
    /// Throws std::length_error when (n+1)(m+1)r entries are not addressable.
    DpTensor(std::int32_t n, std::int32_t m, std::int32_t states)
        : n_(n), m_(m), states_(states), values_(checked_size(n, m, states), 0) {}

    [[nodiscard]] std::int32_t rows() const noexcept { return n_; }
    [[nodiscard]] std::int32_t cols() const noexcept { return m_; }
    [[nodiscard]] std::int32_t states() const noexcept { return states_; }

    [[nodiscard]] std::int32_t operator()(std::int32_t i, std::int32_t j, std::int32_t k) const noexcept {
        return values_[offset(i, j) + static_cast<std::size_t>(k)];
    }
    std::int32_t& operator()(std::int32_t i, std::int32_t j, std::int32_t k) noexcept {
        return values_[offset(i, j) + static_cast<std::size_t>(k)];
    }

    /// The r state values of one cell.
    [[nodiscard]] const std::int32_t* cell(std::int32_t i, std::int32_t j) const noexcept {
        return values_.data() + offset(i, j);
    }
    std::int32_t* cell(std::int32_t i, std::int32_t j) noexcept { return values_.data() + offset(i, j); }

    [[nodiscard]] const std::vector<std::int32_t>& values() const noexcept { return values_; }

    bool operator==(const DpTensor&) const = default;

private:
    static std::size_t checked_size(std::int32_t n, std::int32_t m, std::int32_t states) {
        const auto rows = static_cast<std::uint64_t>(n) + 1;
        const auto cols = static_cast<std::uint64_t>(m) + 1;
        const auto depth = static_cast<std::uint64_t>(states);
        constexpr auto limit = std::numeric_limits<std::uint64_t>::max() / sizeof(std::int32_t);
        if (rows * cols > limit / std::max<std::uint64_t>(depth, 1)) {
            throw std::length_error("DP tensor of " + std::to_string(rows) + " x " + std::to_string(cols) + " x " +
                                    std::to_string(depth) + " entries is not addressable");
        }
        return static_cast<std::size_t>(rows * cols * depth);
    }

    [[nodiscard]] std::size_t offset(std::int32_t i, std::int32_t j) const noexcept {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(states_);
    }

    std::int32_t n_ = 0;
    std::int32_t m_ = 0;
    std::int32_t states_ = 0;
    std::vector<std::int32_t> values_;
};

struct SolveOptions {
    /// Reconstruct a witness; forces the full tensor.
    bool witness = true;
    /// Return the full tensor in the outcome.
    bool keep_tensor = false;
};

struct SolveOutcome {
    std::int32_t length = 0;
    /// Smallest t maximizing f(n, m, t).
    std::int32_t best_state = 0;
    std::optional<Sequence> witness;
    std::optional<DpTensor> tensor;
};

/// Smallest t < r maximizing f(i-1, j-1, t) among those with
/// sigma(P[1:t] + x_i) = k, or nullopt when no t reaches k.
std::optional<std::int32_t> max_sigma(const DpTensor& f, const ConstraintPattern& p, const Sequence& x,
                                      std::int32_t i, std::int32_t j, std::int32_t k);

/// Direct evaluation of the state recurrence: each match cell scans every
/// predecessor state through max_sigma. O(n m r^2) failure-link steps.
SolveOutcome solve_naive(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                         const SolveOptions& options = {});

/// O(nmr) form: copy down the best of the upper and left cells, then on a
/// match scatter 1 + f(i-1, j-1, k) into lambda(k, x_i). Transitions that
/// complete P are dropped. Without witness or tensor output only two rows
/// of the tensor are kept.
SolveOutcome solve_optimized(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                             const SolveOptions& options = {});

/// Recovers a subsequence of length f(i, j, k) from a completed tensor.
/// Throws InternalInvariantError if the tensor is inconsistent with x, y, p.
Sequence backtrace(const DpTensor& f, const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                   std::int32_t i, std::int32_t j, std::int32_t k);

}  // namespace exclcs
