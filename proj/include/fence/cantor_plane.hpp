#pragma once

#include "fence/digits.hpp"
#include "fence/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fence {

/// Closed interval with exact rational endpoints, lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool strictly_contains(const Interval& other) const {
        return lo < other.lo && other.hi < hi;
    }
    bool operator==(const Interval& other) const { return lo == other.lo && hi == other.hi; }

    std::string to_string() const { return "[" + to_fraction_string(lo) + ", " + to_fraction_string(hi) + "]"; }
};

/// Word over {0,1}; "" addresses the whole of [0,1].
using BinaryWord = std::string;

void require_binary_word(const BinaryWord& w);

/// Chain indices along a branch together with the exponents bounding them:
/// index k at level j must satisfy 1 <= k <= 4^exponents[j].
struct ChainIndexWord {
    std::vector<std::uint64_t> indices;
    std::vector<int> exponents;

    std::size_t size() const { return indices.size(); }
};

struct PlanarRectangle {
    Interval horizontal; // a nested addressed segment
    Interval vertical;   // a middle-thirds segment

    bool contains(const Rational& x, const Rational& y) const {
        return horizontal.contains(x) && vertical.contains(y);
    }
    bool strictly_contains(const PlanarRectangle& other) const;
    bool contains(const PlanarRectangle& other) const {
        return horizontal.contains(other.horizontal) && vertical.contains(other.vertical);
    }
};

/// The middle-thirds segment addressed by w: digit 0 keeps the first third,
/// digit 1 the last. middle_thirds("") = [0,1].
Interval middle_thirds(const BinaryWord& w);

/// The 2^level subdivision segments of `L` in regular (left-to-right) order,
/// i.e. the affine images on L of the level-`level` middle-thirds segments.
std::vector<Interval> thirds_family(const Interval& L, unsigned level);

/// k-th member (1-based, regular order) of thirds_family(L, level) without
/// materializing the family.
Interval family_segment(const Interval& L, unsigned level, std::uint64_t k);

/// The nested segment addressed by a chain index word: level j refines the
/// previous segment into its 4^exponents[j] subdivision segments and picks
/// the indices[j]-th. Empty word gives [0,1].
Interval nested_segment(const ChainIndexWord& chain);

/// Rectangle of the alternating construction. |branch| must equal
/// |chain| (even step 2s) or |chain| + 1 (odd step 2s+1).
PlanarRectangle address_rectangle(const BinaryWord& branch, const ChainIndexWord& chain);

/// 1-based regular-order index of the family member containing x.
/// Rejects when x falls in a gap.
std::size_t locate_in_family(const Rational& x, const std::vector<Interval>& family);

/// Same, for the implicit family thirds_family(L, level); cost O(level).
std::uint64_t locate_in_family(const Rational& x, const Interval& L, unsigned level);

} // namespace fence
