#include <doctest.h>

#include <algorithm>
#include <string>

#include "exclcs/difftest.hpp"
#include "exclcs/reference.hpp"
#include "exclcs/solver.hpp"

using namespace exclcs;

namespace {

constexpr SolveOptions kFull{.witness = true, .keep_tensor = true};

bool excludes(std::string_view w, std::string_view p) { return w.find(p) == std::string_view::npos; }

std::string erase_all(std::string s, char c) {
    s.erase(std::remove(s.begin(), s.end(), c), s.end());
    return s;
}

// True when P[1:inner] is a suffix of P[1:outer].
bool is_border_of(std::string_view p, std::int32_t inner, std::int32_t outer) {
    if (inner > outer) {
        return false;
    }
    const auto whole = p.substr(0, static_cast<std::size_t>(outer));
    return whole.substr(whole.size() - static_cast<std::size_t>(inner)) == p.substr(0, static_cast<std::size_t>(inner));
}

}  // namespace

TEST_CASE("counterexample instance") {
    const Sequence x("abbb");
    const Sequence y("aab");
    const ConstraintPattern p("ab");

    const auto naive = solve_naive(x, y, p, kFull);
    const auto fast = solve_optimized(x, y, p, kFull);
    CHECK(naive.length == 1);
    CHECK(fast.length == 1);
    CHECK(*naive.tensor == *fast.tensor);
    CHECK(fast.best_state == 0);
    REQUIRE(fast.witness);
    const auto w = fast.witness->str();
    CHECK((w == "a" || w == "b"));
    CHECK(excludes(w, "ab"));
}

TEST_CASE("max_sigma") {
    const Sequence x("abbb");
    const Sequence y("aab");
    const ConstraintPattern p("ab");
    const auto f = *solve_naive(x, y, p, kFull).tensor;

    SUBCASE("ties resolve to the smallest state") {
        // sigma("" + a) = sigma("a" + a) = 1 and f(0,0,*) = 0.
        CHECK(p.sigma(0, 'a') == 1);
        CHECK(p.sigma(1, 'a') == 1);
        CHECK(max_sigma(f, p, x, 1, 1, 1) == 0);
    }
    SUBCASE("unreachable state") {
        // No state moves to 0 on 'a' for P = ab.
        CHECK_FALSE(max_sigma(f, p, x, 1, 1, 0).has_value());
    }
    SUBCASE("strict improvement") {
        // x_2 = b, y_3 = b: only t = 0 maps to 0 on 'b' (t = 1 completes P).
        CHECK(max_sigma(f, p, x, 2, 3, 0) == 0);
    }
}

TEST_CASE("empty inputs give zero") {
    const ConstraintPattern p("ab");
    for (const auto& [x, y] : {std::pair{"", "aab"}, std::pair{"abbb", ""}, std::pair{"", ""}}) {
        const auto naive = solve_naive(Sequence(x), Sequence(y), p);
        const auto fast = solve_optimized(Sequence(x), Sequence(y), p);
        CHECK(naive.length == 0);
        CHECK(fast.length == 0);
        CHECK(fast.witness->empty());
    }
}

TEST_CASE("single-symbol pattern") {
    const auto out = solve_optimized(Sequence("abc"), Sequence("abc"), ConstraintPattern("b"));
    CHECK(out.length == 2);
    CHECK(out.witness->str() == "ac");
}

TEST_CASE("pattern disjoint from the inputs") {
    const auto out = solve_optimized(Sequence("abbb"), Sequence("aab"), ConstraintPattern("zz"));
    CHECK(out.length == plain_lcs("abbb", "aab"));
    CHECK(out.length == 2);
}

TEST_CASE("length-only mode keeps the same answer") {
    const Sequence x("abcabcabcaabbcc");
    const Sequence y("cbacbacbaabcabc");
    const ConstraintPattern p("abc");
    const auto full = solve_optimized(x, y, p, kFull);
    const auto rolling = solve_optimized(x, y, p, {.witness = false, .keep_tensor = false});
    CHECK(rolling.length == full.length);
    CHECK(rolling.best_state == full.best_state);
    CHECK_FALSE(rolling.witness.has_value());
    CHECK_FALSE(rolling.tensor.has_value());
}

TEST_CASE("backtrace on a zero cell is empty") {
    const Sequence x("ab");
    const Sequence y("ba");
    const ConstraintPattern p("ab");
    const auto f = *solve_optimized(x, y, p, kFull).tensor;
    CHECK(backtrace(f, x, y, p, 0, 2, 0).empty());
    CHECK(backtrace(f, x, y, p, 2, 0, 1).empty());
    CHECK(f(1, 2, 1) == 1);
    CHECK(backtrace(f, x, y, p, 1, 2, 1).str() == "a");
}

TEST_CASE("backtrace rejects a corrupted tensor") {
    const Sequence x("ab");
    const Sequence y("ab");
    const ConstraintPattern p("ba");
    auto f = *solve_optimized(x, y, p, kFull).tensor;
    f(2, 2, 0) = 7;
    CHECK_THROWS_AS(backtrace(f, x, y, p, 2, 2, 0), InternalInvariantError);
}

TEST_CASE("oversized tensors are refused before allocation") {
    CHECK_THROWS_AS(DpTensor(kMaxSequenceLength, kMaxSequenceLength, kMaxSequenceLength), std::length_error);
}

TEST_CASE("randomized tensor properties") {
    InstanceSpec spec{.max_n = 9, .max_m = 9, .max_r = 4, .alphabet = "abc", .seed = 99, .trials = 1500};
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
        const auto inst = generate_instance(spec, trial);
        const auto naive = solve_naive(inst.x, inst.y, inst.p, kFull);
        const auto fast = solve_optimized(inst.x, inst.y, inst.p, kFull);
        const auto& f = *fast.tensor;
        const auto n = inst.x.size();
        const auto m = inst.y.size();
        const auto r = inst.p.size();

        REQUIRE(*naive.tensor == f);
        CHECK(naive.length == fast.length);
        CHECK(naive.best_state == fast.best_state);

        std::int32_t best = 0;
        for (std::int32_t t = 0; t < r; ++t) {
            best = std::max(best, f(n, m, t));
        }
        CHECK(fast.length == best);

        for (std::int32_t i = 0; i <= n; ++i) {
            for (std::int32_t j = 0; j <= m; ++j) {
                for (std::int32_t k = 0; k < r; ++k) {
                    const auto v = f(i, j, k);
                    if (i == 0 || j == 0) {
                        REQUIRE(v == 0);
                    }
                    REQUIRE(v >= 0);
                    REQUIRE(v <= std::min(i, j));
                    if (i > 0) {
                        REQUIRE(f(i - 1, j, k) <= v);
                    }
                    if (j > 0) {
                        REQUIRE(f(i, j - 1, k) <= v);
                    }
                    // Every cell backtraces to a valid subsequence; its true
                    // state is a border of k that scores at least as well.
                    const auto w = backtrace(f, inst.x, inst.y, inst.p, i, j, k);
                    REQUIRE(w.size() == v);
                    REQUIRE(is_subsequence(w.view(), inst.x.slice(1, i)));
                    REQUIRE(is_subsequence(w.view(), inst.y.slice(1, j)));
                    REQUIRE(excludes(w.view(), inst.p.view()));
                    const auto s = sigma_by_definition(inst.p.view(), w.view());
                    REQUIRE(is_border_of(inst.p.view(), s, k));
                    REQUIRE(f(i, j, s) >= v);
                }
            }
        }

        const auto w = fast.witness->view();
        CHECK(sigma_by_definition(inst.p.view(), w) == fast.best_state);
    }
}

TEST_CASE("single-symbol pattern reduces to LCS without that symbol") {
    InstanceSpec spec{.max_n = 12, .max_m = 12, .max_r = 1, .alphabet = "abc", .seed = 5, .trials = 500};
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
        const auto inst = generate_instance(spec, trial);
        const char banned = inst.p.view()[0];
        const auto expected = plain_lcs(erase_all(inst.x.str(), banned), erase_all(inst.y.str(), banned));
        CHECK(solve_optimized(inst.x, inst.y, inst.p).length == expected);
        CHECK(solve_naive(inst.x, inst.y, inst.p).length == expected);
    }
}

TEST_CASE("pattern sharing no symbol with the inputs reduces to plain LCS") {
    SplitMix64 rng(3);
    InstanceSpec spec{.max_n = 15, .max_m = 15, .max_r = 4, .alphabet = "ab", .seed = 8, .trials = 300};
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
        const auto inst = generate_instance(spec, trial);
        std::string p;
        for (std::size_t i = 0, r = 1 + rng.below(4); i < r; ++i) {
            p.push_back("cd"[rng.below(2)]);
        }
        CHECK(solve_optimized(inst.x, inst.y, ConstraintPattern(p)).length == plain_lcs(inst.x.view(), inst.y.view()));
    }
}
