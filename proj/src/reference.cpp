#include "exclcs/reference.hpp"

#include <algorithm>
#include <string>

namespace exclcs {

ChenChaoTable chen_chao_solve(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                              ChenChaoVariant variant) {
    const std::int32_t n = x.size();
    const std::int32_t m = y.size();
    const std::int32_t r = p.size();
    ChenChaoTable L(n, m, r, variant);

    for (std::int32_t i = 1; i <= n; ++i) {
        for (std::int32_t j = 1; j <= m; ++j) {
            for (std::int32_t k = 0; k <= r; ++k) {
                if (x.at(i) != y.at(j)) {
                    L(i, j, k) = std::max(L(i - 1, j, k), L(i, j - 1, k));
                } else if (k == 0 || x.at(i) != p.at(k)) {
                    L(i, j, k) = 1 + L(i - 1, j - 1, k);
                } else if (k == 1) {
                    L(i, j, k) = L(i - 1, j - 1, k);
                } else if (variant == ChenChaoVariant::Full) {
                    L(i, j, k) = 1 + std::max(L(i - 1, j - 1, k - 1), L(i - 1, j - 1, k));
                } else {
                    L(i, j, k) = 1 + L(i - 1, j - 1, k);
                }
            }
        }
    }
    return L;
}

SolveOutcome brute_force_oracle(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                                std::int32_t guard) {
    if (x.size() + y.size() > guard) {
        throw OracleSizeError("oracle guard exceeded: n + m = " + std::to_string(x.size() + y.size()) + " > " +
                              std::to_string(guard));
    }
    const std::string_view shorter = x.size() <= y.size() ? x.view() : y.view();
    const std::string_view longer = x.size() <= y.size() ? y.view() : x.view();
    const std::string_view pattern = p.view();

    std::string best;
    bool found = false;
    std::string candidate;
    const std::uint64_t subsets = std::uint64_t{1} << shorter.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        candidate.clear();
        for (std::size_t b = 0; b < shorter.size(); ++b) {
            if ((mask >> b) & 1U) {
                candidate.push_back(shorter[b]);
            }
        }
        if (found && candidate.size() < best.size()) {
            continue;
        }
        if (candidate.find(pattern) != std::string::npos || !is_subsequence(candidate, longer)) {
            continue;
        }
        if (!found || candidate.size() > best.size() || candidate < best) {
            best = candidate;
            found = true;
        }
    }

    SolveOutcome out;
    out.length = static_cast<std::int32_t>(best.size());
    out.best_state = sigma_by_definition(pattern, best);
    out.witness = Sequence(std::move(best));
    return out;
}

std::int32_t plain_lcs(std::string_view x, std::string_view y) {
    std::vector<std::int32_t> prev(y.size() + 1, 0);
    std::vector<std::int32_t> cur(y.size() + 1, 0);
    for (const char xi : x) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            cur[j] = xi == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

std::int32_t sigma_by_definition(std::string_view pattern, std::string_view s) {
    const std::size_t longest = std::min(pattern.size(), s.size());
    for (std::size_t len = longest; len > 0; --len) {
        if (s.substr(s.size() - len) == pattern.substr(0, len)) {
            return static_cast<std::int32_t>(len);
        }
    }
    return 0;
}

std::vector<std::int32_t> prefix_function_by_definition(std::string_view pattern) {
    std::vector<std::int32_t> values(pattern.size() + 1, 0);
    values[0] = -1;
    for (std::size_t i = 1; i <= pattern.size(); ++i) {
        const auto prefix = pattern.substr(0, i);
        for (std::size_t len = i - 1; len > 0; --len) {
            if (prefix.substr(0, len) == prefix.substr(i - len)) {
                values[i] = static_cast<std::int32_t>(len);
                break;
            }
        }
    }
    return values;
}

bool is_subsequence(std::string_view sub, std::string_view s) {
    std::size_t pos = 0;
    for (const char c : s) {
        if (pos < sub.size() && sub[pos] == c) {
            ++pos;
        }
    }
    return pos == sub.size();
}

}  // namespace exclcs
