#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "su11/errors.hpp"

namespace su11 {

/// Exact half-integer value stored as twice the value. Labels such as 3/2 are
/// compared and combined in integer arithmetic only.
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }
    static constexpr HalfInteger from_int(std::int64_t value) { return HalfInteger(2 * value); }

    /// Accepts "3/2", "1.5", "2", "-1/2". Returns nullopt for anything that is
    /// not exactly representable as a half-integer.
    static std::optional<HalfInteger> parse(std::string_view text);

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

    std::string to_string() const;

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ + b.twice_); }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ - b.twice_); }
    friend constexpr HalfInteger operator-(HalfInteger a) { return HalfInteger(-a.twice_); }
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
    constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

/// Lowest-weight label of a holomorphic discrete-series representation,
/// eta in {1, 3/2, 2, ...}.
class RepLabel {
public:
    /// Throws InvalidLabel unless eta >= 1.
    explicit RepLabel(HalfInteger eta);

    static RepLabel from_twice(std::int64_t twice) { return RepLabel(HalfInteger::from_twice(twice)); }
    /// Throws InvalidLabel on malformed text or eta < 1.
    static RepLabel parse(std::string_view text);

    HalfInteger eta() const { return eta_; }
    std::int64_t twice() const { return eta_.twice(); }
    double value() const { return eta_.value(); }
    std::string to_string() const { return eta_.to_string(); }

    friend bool operator==(RepLabel, RepLabel) = default;
    friend auto operator<=>(RepLabel, RepLabel) = default;

private:
    HalfInteger eta_;
};

}  // namespace su11
