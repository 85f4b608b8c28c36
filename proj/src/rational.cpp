#include "cyclic_rips/rational.hpp"

#include <algorithm>
#include <cctype>

namespace cyclic_rips {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Int pow10(std::size_t k) {
    Int p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    // trim whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) return std::nullopt;
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        std::string den_text(den);
        std::string num_text(num);
        Int d(den_text);
        if (d == 0) return std::nullopt;
        value = Rational(Int(num_text), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!whole.empty() && !all_digits(whole)) return std::nullopt;
        if (!frac.empty() && !all_digits(frac)) return std::nullopt;
        std::string whole_text(whole);
        Int w = whole.empty() ? Int(0) : Int(whole_text);
        std::string frac_text(frac);
        Int f = frac.empty() ? Int(0) : Int(frac_text);
        Int scale = pow10(frac.size());
        value = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(text)) return std::nullopt;
        std::string text_copy(text);
        value = Rational(Int(text_copy));
    }
    if (negative) value = -value;
    return value;
}

std::string format_rational(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace cyclic_rips
