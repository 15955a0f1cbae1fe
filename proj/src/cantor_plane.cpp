#include "fence/cantor_plane.hpp"

#include <stdexcept>

namespace fence {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("degenerate interval: " + to_fraction_string(lo) +
                                                " >= " + to_fraction_string(hi));
}

void require_binary_word(const BinaryWord& w) {
    for (char c : w)
        if (c != '0' && c != '1') throw std::invalid_argument("binary word expected, got '" + w + "'");
}

bool PlanarRectangle::strictly_contains(const PlanarRectangle& other) const {
    return horizontal.strictly_contains(other.horizontal) &&
           vertical.strictly_contains(other.vertical);
}

Interval middle_thirds(const BinaryWord& w) {
    require_binary_word(w);
    Rational lo = 0, hi = 1;
    for (char c : w) {
        Rational third = (hi - lo) / 3;
        if (c == '0')
            hi = lo + third;
        else
            lo = hi - third;
    }
    return Interval(lo, hi);
}

// Affine image of [t0,t1] under t -> a(1-t) + bt on L = [a,b].
static Interval map_onto(const Interval& L, const Interval& unit_sub) {
    Rational span = L.width();
    return Interval(L.lo + unit_sub.lo * span, L.lo + unit_sub.hi * span);
}

std::vector<Interval> thirds_family(const Interval& L, unsigned level) {
    if (level > 24) throw std::invalid_argument("thirds_family: level too deep to materialize");
    std::vector<Interval> out;
    out.reserve(std::size_t{1} << level);
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << level); ++k)
        out.push_back(family_segment(L, level, k));
    return out;
}

Interval family_segment(const Interval& L, unsigned level, std::uint64_t k) {
    if (level >= 63) throw std::invalid_argument("family_segment: level out of range");
    std::uint64_t count = std::uint64_t{1} << level;
    if (k < 1 || k > count)
        throw std::out_of_range("family_segment: index " + std::to_string(k) + " not in [1, 2^" +
                                std::to_string(level) + "]");
    // Regular order is binary-word lexicographic order: the (k-1)-th word.
    BinaryWord w(level, '0');
    std::uint64_t bits = k - 1;
    for (unsigned i = 0; i < level; ++i)
        if (bits >> (level - 1 - i) & 1) w[i] = '1';
    return map_onto(L, middle_thirds(w));
}

Interval nested_segment(const ChainIndexWord& chain) {
    if (chain.indices.size() != chain.exponents.size())
        throw std::invalid_argument("nested_segment: indices and exponents differ in length");
    Interval J(0, 1);
    for (std::size_t j = 0; j < chain.indices.size(); ++j) {
        int a = chain.exponents[j];
        if (a < 1 || a > 31)
            throw std::out_of_range("nested_segment: exponent at level " + std::to_string(j + 1) +
                                    " outside supported range [1,31]");
        std::uint64_t k = chain.indices[j];
        if (k < 1 || k > (std::uint64_t{1} << (2 * a)))
            throw std::out_of_range("nested_segment: index at level " + std::to_string(j + 1) +
                                    " exceeds 4^" + std::to_string(a));
        J = family_segment(J, static_cast<unsigned>(2 * a), k);
    }
    return J;
}

PlanarRectangle address_rectangle(const BinaryWord& branch, const ChainIndexWord& chain) {
    require_binary_word(branch);
    if (branch.size() != chain.size() && branch.size() != chain.size() + 1)
        throw std::invalid_argument("address_rectangle: |branch| must be |chain| or |chain|+1");
    return PlanarRectangle{nested_segment(chain), middle_thirds(branch)};
}

std::size_t locate_in_family(const Rational& x, const std::vector<Interval>& family) {
    if (family.empty()) throw std::invalid_argument("locate_in_family: empty family");
    std::size_t lo = 0, hi = family.size();
    while (lo < hi) { // first interval with x <= hi endpoint
        std::size_t mid = (lo + hi) / 2;
        if (family[mid].hi < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == family.size() || !family[lo].contains(x))
        throw std::domain_error("locate_in_family: point " + to_fraction_string(x) +
                                " lies in a gap of the family");
    return lo + 1;
}

std::uint64_t locate_in_family(const Rational& x, const Interval& L, unsigned level) {
    if (level >= 63) throw std::invalid_argument("locate_in_family: level out of range");
    if (!L.contains(x))
        throw std::domain_error("locate_in_family: point outside the base segment");
    // Pull back to [0,1] and read ternary digits over {0,2}; each digit is one
    // regular-order bit of the 1-based index.
    Rational t = (x - L.lo) / L.width();
    std::uint64_t index = 0;
    for (unsigned i = 0; i < level; ++i) {
        t *= 3;
        if (t <= 1) {
            index <<= 1;
        } else if (t >= 2) {
            index = (index << 1) | 1;
            t -= 2;
        } else {
            throw std::domain_error("locate_in_family: point lies in a middle-thirds gap at depth " +
                                    std::to_string(i + 1));
        }
    }
    return index + 1;
}

} // namespace fence
