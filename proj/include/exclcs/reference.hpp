#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "exclcs/automaton.hpp"
#include "exclcs/sequence.hpp"
#include "exclcs/solver.hpp"

namespace exclcs {

// Baselines for differential testing. Nothing here shares code with the
// failure-link automaton or the state DP.

enum class ChenChaoVariant : std::uint8_t {
    /// 1 + max{L(i-1,j-1,k-1), L(i-1,j-1,k)} when x_i = y_j = p_k, k >= 2.
    Full = 1,
    /// 1 + L(i-1,j-1,k) in the same case.
    Reduced = 2,
};

/// L(i, j, k) for 0 <= i <= n, 0 <= j <= m, 0 <= k <= r.
class ChenChaoTable {
public:
    ChenChaoTable(std::int32_t n, std::int32_t m, std::int32_t r, ChenChaoVariant variant)
        : n_(n), m_(m), r_(r), variant_(variant),
          values_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m + 1) *
                      static_cast<std::size_t>(r + 1),
                  0) {}

    [[nodiscard]] std::int32_t rows() const noexcept { return n_; }
    [[nodiscard]] std::int32_t cols() const noexcept { return m_; }
    [[nodiscard]] std::int32_t pattern_length() const noexcept { return r_; }
    [[nodiscard]] ChenChaoVariant variant() const noexcept { return variant_; }

    [[nodiscard]] std::int32_t operator()(std::int32_t i, std::int32_t j, std::int32_t k) const noexcept {
        return values_[offset(i, j, k)];
    }
    std::int32_t& operator()(std::int32_t i, std::int32_t j, std::int32_t k) noexcept {
        return values_[offset(i, j, k)];
    }

    /// The value the method reports: L(n, m, r).
    [[nodiscard]] std::int32_t result() const noexcept { return (*this)(n_, m_, r_); }

private:
    [[nodiscard]] std::size_t offset(std::int32_t i, std::int32_t j, std::int32_t k) const noexcept {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(r_ + 1) +
               static_cast<std::size_t>(k);
    }

    std::int32_t n_;
    std::int32_t m_;
    std::int32_t r_;
    ChenChaoVariant variant_;
    std::vector<std::int32_t> values_;
};

/// The four-case recurrence of Chen and Chao. Known to overcount: on
/// X = abbb, Y = aab, P = ab it reports 2 where the true answer is 1.
ChenChaoTable chen_chao_solve(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                              ChenChaoVariant variant);

/// Raised when an instance is too large to enumerate.
class OracleSizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::int32_t kDefaultOracleGuard = 30;

/// Exhaustive search over the subsequences of the shorter input. Returns the
/// maximum length, the lexicographically smallest optimal witness, and
/// best_state = sigma(witness). Rejects n + m > guard.
SolveOutcome brute_force_oracle(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                                std::int32_t guard = kDefaultOracleGuard);

/// Classic O(nm) LCS length.
std::int32_t plain_lcs(std::string_view x, std::string_view y);

/// Longest suffix of s that is a prefix of pattern, by trying every suffix.
std::int32_t sigma_by_definition(std::string_view pattern, std::string_view s);

/// Prefix function by comparing every candidate border, O(r^2) per index.
std::vector<std::int32_t> prefix_function_by_definition(std::string_view pattern);

/// True when `sub` can be obtained from `s` by deletions.
bool is_subsequence(std::string_view sub, std::string_view s);

}  // namespace exclcs
