#include "fence/digits.hpp"

#include <algorithm>
#include <numeric>

namespace fence {

std::string DigitStream::to_string() const {
    std::string out;
    for (int d : prefix) out += static_cast<char>('0' + d);
    if (!period.empty()) {
        out += '(';
        for (int d : period) out += static_cast<char>('0' + d);
        out += ')';
    }
    return out;
}

DigitStream parse_digit_stream(const std::string& text) {
    DigitStream s;
    bool in_period = false;
    bool closed = false;
    for (char c : text) {
        if (c == '(') {
            if (in_period || closed) throw std::invalid_argument("bad digit stream: " + text);
            in_period = true;
        } else if (c == ')') {
            if (!in_period || closed) throw std::invalid_argument("bad digit stream: " + text);
            in_period = false;
            closed = true;
        } else if (c >= '0' && c <= '9') {
            if (closed) throw std::invalid_argument("digits after period: " + text);
            (in_period ? s.period : s.prefix).push_back(c - '0');
        } else {
            throw std::invalid_argument("bad character in digit stream: " + text);
        }
    }
    if (in_period) throw std::invalid_argument("unclosed period: " + text);
    return s;
}

void require_digits(const DigitStream& s, std::initializer_list<int> allowed,
                    const std::string& what) {
    auto ok = [&](int d) { return std::find(allowed.begin(), allowed.end(), d) != allowed.end(); };
    for (int d : s.prefix)
        if (!ok(d)) throw std::invalid_argument(what + ": digit " + std::to_string(d) + " not allowed");
    for (int d : s.period)
        if (!ok(d)) throw std::invalid_argument(what + ": digit " + std::to_string(d) + " not allowed");
}

Rational stream_value(const DigitStream& s, int base) {
    Rational value = 0;
    Rational scale(1, base);
    for (int d : s.prefix) {
        value += d * scale;
        scale /= base;
    }
    if (!s.period.empty()) {
        BigInt per_num = 0;
        for (int d : s.period) per_num = per_num * base + d;
        BigInt per_den = pow_int(base, static_cast<unsigned>(s.period.size())) - 1;
        // scale is base^-(|prefix|+1); the periodic tail starts one digit later.
        value += scale * base * Rational(per_num, per_den);
    }
    return value;
}

std::optional<std::size_t> first_difference(const DigitStream& a, const DigitStream& b) {
    std::size_t la = std::max<std::size_t>(a.period.size(), 1);
    std::size_t lb = std::max<std::size_t>(b.period.size(), 1);
    std::size_t bound = std::max(a.prefix.size(), b.prefix.size()) + std::lcm(la, lb);
    for (std::size_t i = 1; i <= bound; ++i)
        if (a.digit(i) != b.digit(i)) return i;
    return std::nullopt; // past the bound both streams are jointly periodic
}

} // namespace fence
