#pragma once

// Exact rational helpers for conformal weights. Arithmetic itself is
// boost::rational; this header adds the mod-1 reduction and the "p/q"
// text form used by the serializers.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace kscoset {

using RationalWeight = boost::rational<std::int64_t>;

/// Reduces r into [0, 1).
inline RationalWeight mod1(const RationalWeight& r) {
    const std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();
    std::int64_t rem = num % den;
    if (rem < 0) rem += den;
    return RationalWeight(rem, den);
}

inline bool is_integer(const RationalWeight& r) { return r.denominator() == 1; }

/// Always "p/q", including integers ("1/1").
inline std::string to_string(const RationalWeight& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline RationalWeight parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("rational must have the form p/q: " + text);
    }
    std::size_t used_num = 0;
    std::size_t used_den = 0;
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = text.substr(slash + 1);
    std::int64_t num = 0;
    std::int64_t den = 0;
    try {
        num = std::stoll(num_text, &used_num);
        den = std::stoll(den_text, &used_den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (used_num != num_text.size() || used_den != den_text.size() || den <= 0) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    return RationalWeight(num, den);
}

}  // namespace kscoset
