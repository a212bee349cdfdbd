#include "su11/half_integer.hpp"

#include <cctype>
#include <charconv>

namespace su11 {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool all_digits(std::string_view s) {
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<HalfInteger> HalfInteger::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (!num || !den) return std::nullopt;
        if (*den == 2) return from_twice(*num);
        if (*den == 1) return from_int(*num);
        return std::nullopt;
    }

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;

    std::int64_t w = 0;
    if (!whole.empty()) {
        auto v = parse_int(whole);
        if (!v) return std::nullopt;
        w = *v;
    }
    std::int64_t half = 0;
    if (!frac.empty()) {
        if (frac.front() == '5') half = 1;
        else if (frac.front() != '0') return std::nullopt;
        for (char c : frac.substr(1))
            if (c != '0') return std::nullopt;
    }
    std::int64_t twice = 2 * w + half;
    return from_twice(negative ? -twice : twice);
}

std::string HalfInteger::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

RepLabel::RepLabel(HalfInteger eta) : eta_(eta) {
    if (eta.twice() < 2)
        throw InvalidLabel("discrete-series label must satisfy eta >= 1, got " + eta.to_string());
}

RepLabel RepLabel::parse(std::string_view text) {
    auto h = HalfInteger::parse(text);
    if (!h) throw InvalidLabel("not an exact half-integer: '" + std::string(text) + "'");
    return RepLabel(*h);
}

}  // namespace su11
