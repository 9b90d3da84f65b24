#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace symcoh {

// Largest ambient dimension supported by the text grammars (indices 1-9, a-f).
inline constexpr int kMaxDimension = 15;

// A basis monomial e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik, stored as a bit mask
// (bit i-1 set for index i). Blades order by degree, then lexicographically by
// index list (e1 < e2 < e12 < e13 < e23); printing and every operator matrix
// use this order.
class Blade {
public:
    constexpr Blade() = default;
    constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

    static constexpr Blade unit() { return Blade(0); }
    static constexpr Blade generator(int index) { return Blade(std::uint32_t{1} << (index - 1)); }
    static Blade from_indices(const std::vector<int>& ascending);

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr int degree() const { return std::popcount(mask_); }
    constexpr bool contains(int index) const { return (mask_ >> (index - 1)) & 1U; }
    constexpr bool disjoint(Blade o) const { return (mask_ & o.mask_) == 0; }

    std::vector<int> indices() const;

    friend constexpr bool operator==(Blade, Blade) = default;
    friend constexpr std::strong_ordering operator<=>(Blade a, Blade b)
    {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        if (a.mask_ == b.mask_) return std::strong_ordering::equal;
        // The smallest index in exactly one of the two decides.
        const std::uint32_t first = (a.mask_ ^ b.mask_) & (~(a.mask_ ^ b.mask_) + 1);
        return (a.mask_ & first) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint32_t mask_ = 0;
};

// Sign of e_A ^ e_B relative to e_{A u B}; 0 when A and B overlap.
// Parity of the number of pairs (a, b) with a in A, b in B, a > b.
constexpr int wedge_sign(Blade a, Blade b)
{
    if (!a.disjoint(b)) return 0;
    int inversions = 0;
    std::uint32_t rest = b.mask();
    while (rest != 0) {
        const int bit = std::countr_zero(rest);
        rest &= rest - 1;
        const std::uint32_t above = bit >= 31 ? 0U : (a.mask() >> (bit + 1));
        inversions += std::popcount(above);
    }
    return (inversions & 1) ? -1 : 1;
}

// Sign of the left contraction i_{e_index} e_B; 0 when index is not in B.
constexpr int contraction_sign(int index, Blade b)
{
    if (!b.contains(index)) return 0;
    const std::uint32_t below = b.mask() & ((std::uint32_t{1} << (index - 1)) - 1);
    return (std::popcount(below) & 1) ? -1 : 1;
}

// All blades of the given degree in dimension dim, ascending.
std::vector<Blade> blades_of_degree(int dim, int degree);

} // namespace symcoh
