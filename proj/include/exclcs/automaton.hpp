#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exclcs/sequence.hpp"

namespace exclcs {

/// KMP failure array of a pattern, indexed 0..r.
///
/// values[0] is the -1 sentinel that terminates failure-link chains; for
/// 1 <= i <= r, values[i] is the length of the longest proper prefix of
/// P[1:i] that is also a suffix of P[1:i].
class PrefixFunction {
public:
    PrefixFunction() = default;
    explicit PrefixFunction(std::vector<std::int32_t> values) : values_(std::move(values)) {}

    [[nodiscard]] std::int32_t operator()(std::int32_t i) const noexcept {
        return values_[static_cast<std::size_t>(i)];
    }
    [[nodiscard]] std::span<const std::int32_t> values() const noexcept { return values_; }
    [[nodiscard]] std::int32_t pattern_length() const noexcept {
        return static_cast<std::int32_t>(values_.size()) - 1;
    }

    bool operator==(const PrefixFunction&) const = default;

private:
    std::vector<std::int32_t> values_;
};

/// Precomputed sigma(P[1:k] + a) for states 0..r-1.
///
/// Columns exist for every symbol of the alphabet the table was built over;
/// every other byte maps to a shared all-zero column. Storage is column-major
/// so the states reachable from one input symbol are contiguous.
class TransitionTable {
public:
    TransitionTable() = default;

    [[nodiscard]] std::int32_t states() const noexcept { return states_; }

    [[nodiscard]] std::int32_t next(std::int32_t k, unsigned char a) const noexcept {
        return column(a)[static_cast<std::size_t>(k)];
    }

    /// lambda(0..r-1, a).
    [[nodiscard]] std::span<const std::int32_t> column(unsigned char a) const noexcept {
        const auto offset = static_cast<std::size_t>(column_of_[a]) * static_cast<std::size_t>(states_);
        return {entries_.data() + offset, static_cast<std::size_t>(states_)};
    }

    /// Symbols with a dedicated column, in first-seen order.
    [[nodiscard]] const std::string& alphabet() const noexcept { return alphabet_; }

private:
    friend TransitionTable build_transition_table(std::string_view pattern,
                                                  const PrefixFunction& prefix,
                                                  std::string_view alphabet);

    std::int32_t states_ = 0;
    std::string alphabet_;
    std::array<std::int32_t, 256> column_of_{};  // 0 is the default column
    std::vector<std::int32_t> entries_;
};

/// O(r) failure-link construction. Requires a non-empty pattern.
PrefixFunction build_prefix_function(std::string_view pattern);

/// sigma(P[1:k] + ch) by walking failure links, for any 0 <= k <= r.
std::int32_t sigma(std::string_view pattern, const PrefixFunction& prefix, std::int32_t k,
                   unsigned char ch) noexcept;

/// Builds lambda over `alphabet`, which must contain every symbol of the
/// pattern. Each (k, a) pair is filled once from lambda(kmp(k), a).
TransitionTable build_transition_table(std::string_view pattern, const PrefixFunction& prefix,
                                       std::string_view alphabet);

/// The pattern P together with its automaton. Rejects the empty pattern.
class ConstraintPattern {
public:
    explicit ConstraintPattern(Sequence symbols);
    explicit ConstraintPattern(std::string_view symbols) : ConstraintPattern(Sequence(symbols)) {}
    explicit ConstraintPattern(const char* symbols) : ConstraintPattern(Sequence(symbols)) {}

    [[nodiscard]] std::int32_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] unsigned char at(std::int32_t k) const noexcept { return symbols_.at(k); }
    [[nodiscard]] const Sequence& symbols() const noexcept { return symbols_; }
    [[nodiscard]] std::string_view view() const noexcept { return symbols_.view(); }
    [[nodiscard]] const PrefixFunction& prefix() const noexcept { return prefix_; }
    [[nodiscard]] const TransitionTable& transitions() const noexcept { return transitions_; }

    /// Failure-link evaluation of sigma(P[1:k] + ch).
    [[nodiscard]] std::int32_t sigma(std::int32_t k, unsigned char ch) const noexcept {
        return exclcs::sigma(symbols_.view(), prefix_, k, ch);
    }

    /// sigma(S): length of the longest suffix of S that is a prefix of P.
    [[nodiscard]] std::int32_t sigma_of(std::string_view s) const noexcept;

private:
    Sequence symbols_;
    PrefixFunction prefix_;
    TransitionTable transitions_;
};

}  // namespace exclcs
