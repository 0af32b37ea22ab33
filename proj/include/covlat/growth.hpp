#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "covlat/algebra.hpp"
#include "covlat/error.hpp"

namespace covlat {

struct GrowthResult {
    /// hilbert[t - 1] = number of distinct sums of t rows, t = 1..max_degree.
    std::vector<std::int64_t> hilbert;
    /// 1 + degree of polynomial growth; empty when it did not stabilize.
    std::optional<int> dimension;

    bool inconclusive() const { return !dimension.has_value(); }
};

/// Smallest k whose k-th finite difference of `values` ends in three equal
/// entries, plus one.
inline std::optional<int> growth_dimension(std::vector<std::int64_t> values) {
    for (int k = 0; values.size() >= 3; ++k) {
        const std::size_t m = values.size();
        if (values[m - 1] == values[m - 2] && values[m - 2] == values[m - 3]) return k + 1;
        std::vector<std::int64_t> next(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) next[i] = values[i + 1] - values[i];
        values = std::move(next);
    }
    return std::nullopt;
}

/// Estimates the Krull dimension of the semigroup ring generated by the
/// rows of B_G from how fast the number of distinct t-fold row sums grows.
///
/// Independent of any rank computation.  Guards: d <= 12, n <= 6,
/// max_degree <= 12; LimitError otherwise.
inline GrowthResult growth_oracle(const ExponentMatrix& b, int max_degree) {
    const std::size_t d = b.rows.size();
    const int width = 2 * b.n;
    if (d > 12 || b.n > 6 || max_degree > 12 || max_degree < 1)
        throw LimitError("growth oracle guard: needs d <= 12, n <= 6, 1 <= max_degree <= 12");

    // 4 bits per coordinate; coordinates of a t-fold sum are at most t <= 12.
    std::vector<std::uint64_t> codes;
    for (const auto& row : b.rows) {
        std::uint64_t code = 0;
        for (int c = 0; c < width; ++c) code |= static_cast<std::uint64_t>(row.entries[c]) << (4 * c);
        codes.push_back(code);
    }

    GrowthResult result;
    std::unordered_set<std::uint64_t> sums(codes.begin(), codes.end());
    result.hilbert.push_back(static_cast<std::int64_t>(sums.size()));
    for (int t = 2; t <= max_degree; ++t) {
        std::unordered_set<std::uint64_t> next;
        next.reserve(sums.size() * 2);
        for (std::uint64_t s : sums)
            for (std::uint64_t r : codes) next.insert(s + r);
        sums = std::move(next);
        result.hilbert.push_back(static_cast<std::int64_t>(sums.size()));
    }
    result.dimension = growth_dimension(result.hilbert);
    return result;
}

}  // namespace covlat
