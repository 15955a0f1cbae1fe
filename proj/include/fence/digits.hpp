#pragma once

#include "fence/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fence {

/// An infinite digit sequence given as a finite prefix followed by a
/// repeating period. An empty period means the prefix is padded with zeros.
/// Text form: "0202(02)" = prefix 0,2,0,2 then 02 repeating; "1" = 1,0,0,...
struct DigitStream {
    std::vector<int> prefix;
    std::vector<int> period;

    // 1-based digit access.
    int digit(std::size_t i) const {
        if (i == 0) throw std::out_of_range("digit index is 1-based");
        if (i <= prefix.size()) return prefix[i - 1];
        if (period.empty()) return 0;
        return period[(i - 1 - prefix.size()) % period.size()];
    }

    std::string to_string() const;
};

DigitStream parse_digit_stream(const std::string& text);

// Validates every digit (prefix and period) against the allowed set.
void require_digits(const DigitStream& s, std::initializer_list<int> allowed,
                    const std::string& what);

/// Value of the stream read as base-`base` digits after the radix point.
/// Exact; eventually periodic streams are rationals.
Rational stream_value(const DigitStream& s, int base);

/// 1-based position of the first differing digit, or nullopt when the two
/// streams are equal as infinite sequences (decidable: both are eventually
/// periodic).
std::optional<std::size_t> first_difference(const DigitStream& a, const DigitStream& b);

} // namespace fence
