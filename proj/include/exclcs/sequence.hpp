#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exclcs {

/// Raised when a constraint pattern cannot be satisfied by any sequence.
class InfeasiblePattern : public std::invalid_argument {
public:
    InfeasiblePattern() : std::invalid_argument("empty constraint pattern is infeasible") {}
};

/// Raised when an input does not fit the 32-bit length model.
class InputTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised when a DP tensor does not satisfy the recurrence it was built from.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::size_t kMaxSequenceLength =
    static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max());

/// Byte string with 1-based positional access. Immutable after construction.
class Sequence {
public:
    Sequence() = default;

    explicit Sequence(std::string symbols) : symbols_(std::move(symbols)) {
        if (symbols_.size() > kMaxSequenceLength) {
            throw InputTooLarge("sequence of " + std::to_string(symbols_.size()) +
                                " symbols exceeds the 2^31-1 limit");
        }
    }

    explicit Sequence(std::string_view symbols) : Sequence(std::string(symbols)) {}
    explicit Sequence(const char* symbols) : Sequence(std::string(symbols)) {}

    [[nodiscard]] std::int32_t size() const noexcept { return static_cast<std::int32_t>(symbols_.size()); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }

    /// x_i for 1 <= i <= n.
    [[nodiscard]] unsigned char at(std::int32_t i) const noexcept {
        return static_cast<unsigned char>(symbols_[static_cast<std::size_t>(i - 1)]);
    }

    /// X[i:j], empty when i > j.
    [[nodiscard]] std::string_view slice(std::int32_t i, std::int32_t j) const noexcept {
        if (i > j) {
            return {};
        }
        return std::string_view(symbols_).substr(static_cast<std::size_t>(i - 1),
                                                 static_cast<std::size_t>(j - i + 1));
    }

    [[nodiscard]] std::string_view view() const noexcept { return symbols_; }
    [[nodiscard]] const std::string& str() const noexcept { return symbols_; }

    bool operator==(const Sequence&) const = default;

private:
    std::string symbols_;
};

}  // namespace exclcs
