#include "spindec/half_int.hpp"

#include <cctype>

namespace spindec {

namespace {

bool parse_int(const std::string& s, std::size_t begin, std::size_t end, std::int64_t& out) {
    if (begin >= end) return false;
    std::size_t i = begin;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= end || end - i > 15) return false; // bounded digits, no overflow
    std::int64_t v = 0;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

} // namespace

bool HalfInt::parse(const std::string& text, HalfInt& out) {
    const std::size_t slash = text.find('/');
    std::int64_t k = 0;
    if (slash == std::string::npos) {
        if (!parse_int(text, 0, text.size(), k)) return false;
        out = HalfInt(k);
        return true;
    }
    if (text.substr(slash) != "/2") return false;
    if (!parse_int(text, 0, slash, k)) return false;
    out = HalfInt::from_doubled(k);
    return true;
}

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
}

} // namespace spindec
