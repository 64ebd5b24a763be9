#include "liquidpower/rational.hpp"

#include <cctype>
#include <charconv>

namespace liquidpower {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("parse_rational: bad " + std::string(what) + " in '" +
                                    std::string(text) + "'");
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("parse_rational: empty input");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = parse_int(text.substr(0, slash), "numerator");
        const std::int64_t den = parse_int(text.substr(slash + 1), "denominator");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if (frac_part.size() > 17)
            throw std::invalid_argument("parse_rational: more than 17 decimal digits in '" +
                                        std::string(text) + "'");
        std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, "integer part");
        std::int64_t den = 1;
        std::int64_t frac = 0;
        if (!frac_part.empty()) {
            frac = parse_int(frac_part, "fractional part");
            if (frac < 0) throw std::invalid_argument("parse_rational: malformed decimal");
            for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        }
        const std::int64_t num = whole * den + frac;
        return Rational(negative ? -num : num, den);
    }
    return Rational(parse_int(text, "integer"), 1);
}

} // namespace liquidpower
