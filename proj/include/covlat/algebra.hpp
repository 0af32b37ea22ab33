#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "covlat/covers.hpp"
#include "covlat/error.hpp"
#include "covlat/graph.hpp"
#include "covlat/lattice.hpp"
#include "covlat/matrix.hpp"

namespace covlat {

/// 0/1 incidence vector of a cover: entries 0..n-1 are x_1..x_n, entries
/// n..2n-1 are y_1..y_n.
struct CoverVector {
    int n = 0;
    std::vector<std::int64_t> entries;

    Subset x_part() const {
        Subset s;
        for (int j = 0; j < n; ++j)
            if (entries[j]) s.add(j);
        return s;
    }

    friend bool operator==(const CoverVector&, const CoverVector&) = default;
};

/// Throws InconsistencyError unless c holds exactly one of x_j, y_j for every j.
inline CoverVector cover_vector(Cover c, const LabeledBipartiteGraph& g) {
    const int n = g.n();
    CoverVector v{n, std::vector<std::int64_t>(2 * n, 0)};
    for (int j = 0; j < n; ++j) {
        const bool x = c.members.contains(j);
        const bool y = c.members.contains(n + j);
        if (x == y)
            throw InconsistencyError("cover " + c.members.to_string() + " has " + (x ? "both" : "neither") +
                                         " of x" + std::to_string(j + 1) + ", y" + std::to_string(j + 1),
                                     serialize_labeled_graph(g));
        v.entries[j] = x;
        v.entries[n + j] = y;
    }
    return v;
}

/// The monomial u_C, e.g. "x1*y2".  "1" for the zero vector.
inline std::string monomial_string(const CoverVector& v) {
    std::string out;
    auto emit = [&](char var, int index, std::int64_t exponent) {
        if (exponent == 0) return;
        if (!out.empty()) out += '*';
        out += var + std::to_string(index);
        if (exponent > 1) out += '^' + std::to_string(exponent);
    };
    for (int j = 0; j < v.n; ++j) emit('x', j + 1, v.entries[j]);
    for (int j = 0; j < v.n; ++j) emit('y', j + 1, v.entries[v.n + j]);
    return out.empty() ? "1" : out;
}

/// B_G: one row per minimal cover.  The all-x cover comes first and the
/// all-y cover last; rows are ordered by x-part size descending, then
/// lexicographically on the x-part.
struct ExponentMatrix {
    int n = 0;
    std::vector<CoverVector> rows;

    IntMatrix to_matrix() const {
        IntMatrix m(rows.size(), 2 * n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < 2 * n; ++c) m(r, c) = rows[r].entries[c];
        return m;
    }
};

/// B̃_G: the x-columns of B_G.
struct TruncatedMatrix {
    int n = 0;
    std::vector<std::vector<std::int64_t>> rows;

    IntMatrix to_matrix() const {
        IntMatrix m(rows.size(), n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
        return m;
    }
};

struct Matrices {
    ExponentMatrix full;
    TruncatedMatrix truncated;
};

inline Matrices build_matrices(const CoverFamily& covers, const LabeledBipartiteGraph& g) {
    Matrices out;
    out.full.n = out.truncated.n = g.n();
    for (Cover c : covers) out.full.rows.push_back(cover_vector(c, g));
    std::ranges::sort(out.full.rows, [](const CoverVector& a, const CoverVector& b) {
        const Subset xa = a.x_part();
        const Subset xb = b.x_part();
        if (xa.size() != xb.size()) return xa.size() > xb.size();
        return lex_less(xa, xb);
    });
    for (const auto& row : out.full.rows)
        out.truncated.rows.emplace_back(row.entries.begin(), row.entries.begin() + g.n());
    return out;
}

/// Column n+j of B_G equals the all-ones column minus column j.
inline bool column_identity_holds(const ExponentMatrix& b) {
    return std::ranges::all_of(b.rows, [&](const CoverVector& row) {
        for (int j = 0; j < b.n; ++j)
            if (row.entries[b.n + j] != 1 - row.entries[j]) return false;
        return true;
    });
}

/// Everything the dimension formula relates, for one labeled graph.
struct DimensionReport {
    int n = 0;
    int d = 0;             // number of minimal covers
    int rank_B = 0;
    int rank_B_trunc = 0;
    int lattice_rank = 0;
    int dim = 0;           // Krull dimension of the cover semigroup ring, = rank_B
    bool theorem_holds = false;
    bool cm = false;
    bool column_identity = false;
    // rank of B_G over GF(2) and GF(3); reported, never asserted
    int rank_B_mod2 = 0;
    int rank_B_mod3 = 0;

    bool lemma_full_vs_truncated() const { return rank_B == rank_B_trunc + 1; }
    bool lemma_truncated_vs_lattice() const { return rank_B_trunc == lattice_rank; }
    bool corollary_holds() const { return !cm || dim == n + 1; }

    bool consistent() const {
        return theorem_holds && lemma_full_vs_truncated() && lemma_truncated_vs_lattice() && corollary_holds() &&
               column_identity && dim == rank_B;
    }

    /// key=value, one per line.
    std::string to_text() const {
        std::ostringstream out;
        auto yes = [](bool b) { return b ? "true" : "false"; };
        out << "n=" << n << '\n'
            << "d=" << d << '\n'
            << "rank_B=" << rank_B << '\n'
            << "rank_B_trunc=" << rank_B_trunc << '\n'
            << "lattice_rank=" << lattice_rank << '\n'
            << "dim=" << dim << '\n'
            << "theorem_holds=" << yes(theorem_holds) << '\n'
            << "cm=" << yes(cm) << '\n'
            << "column_identity=" << yes(column_identity) << '\n'
            << "rank_B_mod2=" << rank_B_mod2 << '\n'
            << "rank_B_mod3=" << rank_B_mod3 << '\n';
        return out.str();
    }
};

/// Fills a report without judging it.
inline DimensionReport compute_dimension_report(const LabeledBipartiteGraph& g, const CoverFamily& covers,
                                                const CoverLattice& lat) {
    const auto mats = build_matrices(covers, g);
    const IntMatrix b = mats.full.to_matrix();
    DimensionReport rep;
    rep.n = g.n();
    rep.d = static_cast<int>(covers.size());
    rep.rank_B = rank_exact(b);
    rep.rank_B_trunc = rank_exact(mats.truncated.to_matrix());
    rep.lattice_rank = rank(lat);
    rep.dim = rep.rank_B;
    rep.theorem_holds = rep.dim == rep.lattice_rank + 1;
    rep.cm = rep.lattice_rank == lat.n();
    rep.column_identity = column_identity_holds(mats.full);
    rep.rank_B_mod2 = rank_mod_p(b, 2);
    rep.rank_B_mod3 = rank_mod_p(b, 3);
    return rep;
}

/// Computes the report and throws InconsistencyError, carrying the graph
/// and the report, if either rank identity, the dimension formula, the
/// n+1 formula for full lattices, or the column identity fails.
inline DimensionReport dimension_report(const LabeledBipartiteGraph& g, const CoverFamily& covers,
                                        const CoverLattice& lat) {
    if (lat.n() != g.n()) throw InputError("lattice and graph disagree on n");
    if (lat.size() != covers.size()) throw InputError("lattice size differs from cover count");
    DimensionReport rep = compute_dimension_report(g, covers, lat);
    if (!rep.consistent()) {
        std::string what = "dimension identities violated:";
        if (!rep.lemma_full_vs_truncated()) what += " rank_B != rank_B_trunc + 1;";
        if (!rep.lemma_truncated_vs_lattice()) what += " rank_B_trunc != lattice_rank;";
        if (!rep.theorem_holds) what += " dim != lattice_rank + 1;";
        if (!rep.corollary_holds()) what += " full lattice but dim != n + 1;";
        if (!rep.column_identity) what += " column identity fails;";
        throw InconsistencyError(what, serialize_labeled_graph(g) + rep.to_text());
    }
    return rep;
}

}  // namespace covlat
