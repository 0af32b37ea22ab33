#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace covlat {

/// A subset of {0, ..., 63} stored as a single machine word.
///
/// Used both for vertex sets of small graphs and for elements of
/// sublattices of the Boolean lattice on [n].  Printing is 1-based.
class Subset {
public:
    static constexpr int kMaxBits = 64;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Subset empty() { return Subset{}; }

    /// {0, ..., n-1}
    static constexpr Subset range(int n) {
        return Subset{n >= kMaxBits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    static constexpr Subset singleton(int i) { return Subset{std::uint64_t{1} << i}; }

    static Subset of(std::initializer_list<int> elems) {
        Subset s;
        for (int e : elems) s.add(e);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr void add(int i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool is_proper_subset_of(Subset o) const { return is_subset_of(o) && bits_ != o.bits_; }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
    friend constexpr Subset operator^(Subset a, Subset b) { return Subset{a.bits_ ^ b.bits_}; }
    constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
    constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(Subset, Subset) = default;
    /// Raw word order; only for use as a map key.  See canonical_less for
    /// the ordering used in output.
    friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    /// "{}" or "{1,3}" (1-based).
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        });
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending element lists.
/// For equal-size sets this is decided by the least element of the
/// symmetric difference: whichever set holds it comes first.
inline bool lex_less(Subset a, Subset b) {
    if (a == b) return false;
    const int first_diff = (a ^ b).min();
    const Subset tail = Subset{~Subset::range(first_diff + 1).bits()};
    // The set holding first_diff wins unless the other one has already run
    // out, in which case the other one is a proper prefix.
    if (a.contains(first_diff)) return !(b & tail).is_empty();
    return (a & tail).is_empty();
}

/// (cardinality, then lexicographic).  The canonical order for cover
/// families and lattice elements.
inline bool canonical_less(Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

}  // namespace covlat

template <>
struct std::hash<covlat::Subset> {
    std::size_t operator()(covlat::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
