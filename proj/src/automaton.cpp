#include "exclcs/automaton.hpp"

#include <stdexcept>

namespace exclcs {

PrefixFunction build_prefix_function(std::string_view pattern) {
    if (pattern.empty()) {
        throw InfeasiblePattern();
    }
    const auto r = static_cast<std::int32_t>(pattern.size());
    std::vector<std::int32_t> kmp(static_cast<std::size_t>(r) + 1, 0);
    kmp[0] = -1;
    kmp[1] = 0;
    // p(i) is p_i, 1-based.
    auto p = [&](std::int32_t i) { return pattern[static_cast<std::size_t>(i - 1)]; };
    for (std::int32_t i = 2; i <= r; ++i) {
        // Extend the longest border of P[1:i-1].
        std::int32_t k = kmp[static_cast<std::size_t>(i - 1)];
        while (k >= 0 && p(k + 1) != p(i)) {
            k = kmp[static_cast<std::size_t>(k)];
        }
        kmp[static_cast<std::size_t>(i)] = k + 1;
    }
    return PrefixFunction(std::move(kmp));
}

std::int32_t sigma(std::string_view pattern, const PrefixFunction& prefix, std::int32_t k,
                   unsigned char ch) noexcept {
    const auto r = static_cast<std::int32_t>(pattern.size());
    // At k = r there is no p_{r+1}; fall back along the failure link.
    while (k >= 0 && (k == r || static_cast<unsigned char>(pattern[static_cast<std::size_t>(k)]) != ch)) {
        k = prefix(k);
    }
    return k + 1;
}

TransitionTable build_transition_table(std::string_view pattern, const PrefixFunction& prefix,
                                       std::string_view alphabet) {
    if (pattern.empty()) {
        throw InfeasiblePattern();
    }
    TransitionTable table;
    const auto r = static_cast<std::int32_t>(pattern.size());
    table.states_ = r;

    std::array<bool, 256> seen{};
    for (const char c : alphabet) {
        const auto a = static_cast<unsigned char>(c);
        if (!seen[a]) {
            seen[a] = true;
            table.alphabet_.push_back(c);
            table.column_of_[a] = static_cast<std::int32_t>(table.alphabet_.size());
        }
    }
    for (const char c : pattern) {
        if (!seen[static_cast<unsigned char>(c)]) {
            throw std::invalid_argument("alphabet does not cover every pattern symbol");
        }
    }

    const auto columns = table.alphabet_.size() + 1;
    table.entries_.assign(columns * static_cast<std::size_t>(r), 0);
    auto entry = [&](std::int32_t k, std::size_t col) -> std::int32_t& {
        return table.entries_[col * static_cast<std::size_t>(r) + static_cast<std::size_t>(k)];
    };

    const auto first = static_cast<std::size_t>(table.column_of_[static_cast<unsigned char>(pattern[0])]);
    entry(0, first) = 1;
    for (std::int32_t t = 1; t < r; ++t) {
        const auto next = static_cast<unsigned char>(pattern[static_cast<std::size_t>(t)]);
        const auto fallback = prefix(t);
        for (std::size_t col = 1; col < columns; ++col) {
            const auto a = static_cast<unsigned char>(table.alphabet_[col - 1]);
            entry(t, col) = a == next ? t + 1 : entry(fallback, col);
        }
    }
    return table;
}

ConstraintPattern::ConstraintPattern(Sequence symbols)
    : symbols_(std::move(symbols)),
      prefix_(build_prefix_function(symbols_.view())),
      transitions_(build_transition_table(symbols_.view(), prefix_, symbols_.view())) {}

std::int32_t ConstraintPattern::sigma_of(std::string_view s) const noexcept {
    std::int32_t state = 0;
    for (const char c : s) {
        state = sigma(state, static_cast<unsigned char>(c));
    }
    return state;
}

}  // namespace exclcs
