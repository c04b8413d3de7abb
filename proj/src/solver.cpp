#include "exclcs/solver.hpp"

#include <algorithm>
#include <string>

namespace exclcs {
namespace {

struct Best {
    std::int32_t length = 0;
    std::int32_t state = 0;
};

Best best_of(const std::int32_t* cell, std::int32_t r) {
    Best best;
    for (std::int32_t t = 0; t < r; ++t) {
        if (cell[t] > best.length) {
            best = {cell[t], t};
        }
    }
    return best;
}

SolveOutcome finish(DpTensor f, const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                    const SolveOptions& options) {
    const auto best = best_of(f.cell(x.size(), y.size()), p.size());
    SolveOutcome out;
    out.length = best.length;
    out.best_state = best.state;
    if (options.witness) {
        out.witness = backtrace(f, x, y, p, x.size(), y.size(), best.state);
    }
    if (options.keep_tensor) {
        out.tensor = std::move(f);
    }
    return out;
}

// Two-row variant of solve_optimized for length-only queries.
SolveOutcome solve_optimized_rolling(const Sequence& x, const Sequence& y, const ConstraintPattern& p) {
    const std::int32_t n = x.size();
    const std::int32_t m = y.size();
    const std::int32_t r = p.size();
    const auto& lambda = p.transitions();
    const auto row_size = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(r);
    std::vector<std::int32_t> prev_row(row_size, 0);
    std::vector<std::int32_t> cur_row(row_size, 0);

    for (std::int32_t i = 1; i <= n; ++i) {
        const auto xi = x.at(i);
        const auto next = lambda.column(xi);
        for (std::int32_t j = 1; j <= m; ++j) {
            const std::int32_t* up = prev_row.data() + static_cast<std::ptrdiff_t>(j) * r;
            const std::int32_t* left = cur_row.data() + static_cast<std::ptrdiff_t>(j - 1) * r;
            const std::int32_t* diag = prev_row.data() + static_cast<std::ptrdiff_t>(j - 1) * r;
            std::int32_t* here = cur_row.data() + static_cast<std::ptrdiff_t>(j) * r;
            for (std::int32_t k = 0; k < r; ++k) {
                here[k] = std::max(up[k], left[k]);
            }
            if (xi == y.at(j)) {
                for (std::int32_t k = 0; k < r; ++k) {
                    const std::int32_t t = next[static_cast<std::size_t>(k)];
                    if (t < r) {
                        here[t] = std::max(here[t], diag[k] + 1);
                    }
                }
            }
        }
        std::swap(prev_row, cur_row);
    }

    const auto best = best_of(prev_row.data() + static_cast<std::ptrdiff_t>(m) * r, r);
    SolveOutcome out;
    out.length = best.length;
    out.best_state = best.state;
    return out;
}

}  // namespace

std::optional<std::int32_t> max_sigma(const DpTensor& f, const ConstraintPattern& p, const Sequence& x,
                                      std::int32_t i, std::int32_t j, std::int32_t k) {
    const auto xi = x.at(i);
    std::int32_t best_value = -1;
    std::optional<std::int32_t> best;
    for (std::int32_t t = 0; t < p.size(); ++t) {
        if (p.sigma(t, xi) == k && f(i - 1, j - 1, t) > best_value) {
            best_value = f(i - 1, j - 1, t);
            best = t;
        }
    }
    return best;
}

SolveOutcome solve_naive(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                         const SolveOptions& options) {
    const std::int32_t n = x.size();
    const std::int32_t m = y.size();
    const std::int32_t r = p.size();
    DpTensor f(n, m, r);

    for (std::int32_t i = 1; i <= n; ++i) {
        for (std::int32_t j = 1; j <= m; ++j) {
            const bool match = x.at(i) == y.at(j);
            for (std::int32_t k = 0; k < r; ++k) {
                if (!match) {
                    f(i, j, k) = std::max(f(i - 1, j, k), f(i, j - 1, k));
                    continue;
                }
                std::int32_t value = f(i - 1, j - 1, k);
                if (const auto t = max_sigma(f, p, x, i, j, k)) {
                    value = std::max(value, 1 + f(i - 1, j - 1, *t));
                }
                f(i, j, k) = value;
            }
        }
    }
    return finish(std::move(f), x, y, p, options);
}

SolveOutcome solve_optimized(const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                             const SolveOptions& options) {
    if (!options.witness && !options.keep_tensor) {
        return solve_optimized_rolling(x, y, p);
    }
    const std::int32_t n = x.size();
    const std::int32_t m = y.size();
    const std::int32_t r = p.size();
    const auto& lambda = p.transitions();
    DpTensor f(n, m, r);

    for (std::int32_t i = 1; i <= n; ++i) {
        const auto xi = x.at(i);
        const auto next = lambda.column(xi);
        for (std::int32_t j = 1; j <= m; ++j) {
            const std::int32_t* up = f.cell(i - 1, j);
            const std::int32_t* left = f.cell(i, j - 1);
            const std::int32_t* diag = f.cell(i - 1, j - 1);
            std::int32_t* here = f.cell(i, j);
            for (std::int32_t k = 0; k < r; ++k) {
                here[k] = std::max(up[k], left[k]);
            }
            if (xi == y.at(j)) {
                for (std::int32_t k = 0; k < r; ++k) {
                    const std::int32_t t = next[static_cast<std::size_t>(k)];
                    if (t < r) {
                        here[t] = std::max(here[t], diag[k] + 1);
                    }
                }
            }
        }
    }
    return finish(std::move(f), x, y, p, options);
}

Sequence backtrace(const DpTensor& f, const Sequence& x, const Sequence& y, const ConstraintPattern& p,
                   std::int32_t i, std::int32_t j, std::int32_t k) {
    const std::int32_t expected = f(i, j, k);
    std::string reversed;
    reversed.reserve(static_cast<std::size_t>(expected));

    while (i > 0 && j > 0) {
        const std::int32_t here = f(i, j, k);
        if (x.at(i) == y.at(j)) {
            if (here == f(i - 1, j - 1, k)) {
                --i;
                --j;
                continue;
            }
            const auto t = max_sigma(f, p, x, i, j, k);
            if (!t || here != 1 + f(i - 1, j - 1, *t)) {
                throw InternalInvariantError("no recurrence case explains f(" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k) + ")");
            }
            reversed.push_back(static_cast<char>(x.at(i)));
            --i;
            --j;
            k = *t;
        } else if (f(i - 1, j, k) > f(i, j - 1, k)) {
            --i;
        } else {
            --j;
        }
    }

    if (static_cast<std::int32_t>(reversed.size()) != expected) {
        throw InternalInvariantError("backtrace produced " + std::to_string(reversed.size()) +
                                     " symbols, expected " + std::to_string(expected));
    }
    std::reverse(reversed.begin(), reversed.end());
    return Sequence(std::move(reversed));
}

}  // namespace exclcs
