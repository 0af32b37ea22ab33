#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "covlat/error.hpp"
#include "covlat/graph.hpp"
#include "covlat/subset.hpp"

namespace covlat {

inline constexpr int kDefaultMaxVertices = 24;

/// A minimal vertex cover, as a bit set over the graph's vertices.
struct Cover {
    Subset members;

    int size() const { return members.size(); }
    friend bool operator==(Cover, Cover) = default;
};

/// All minimal vertex covers of one graph, in canonical order
/// (cardinality, then lexicographic).
struct CoverFamily {
    int vertex_count = 0;
    std::vector<Cover> covers;

    std::size_t size() const { return covers.size(); }
    auto begin() const { return covers.begin(); }
    auto end() const { return covers.end(); }
};

/// The x-part C ∩ {x_1..x_n} of a cover of a labeled graph, as a subset of [n].
struct CoverXPart {
    Subset x_indices;
    friend bool operator==(CoverXPart, CoverXPart) = default;
};

inline bool is_vertex_cover(const Graph& g, Subset s) {
    return std::ranges::all_of(g.edges(), [&](Edge e) { return s.contains(e.first) || s.contains(e.second); });
}

inline void sort_canonical(std::vector<Cover>& covers) {
    std::ranges::sort(covers, [](Cover a, Cover b) { return canonical_less(a.members, b.members); });
}

namespace detail {

// Bron-Kerbosch with pivoting, run on the complement graph, so that the
// reported sets are the maximal independent sets of the input.
template <typename Report>
void maximal_independent_sets(const std::vector<Subset>& non_adj, Subset chosen, Subset candidates,
                              Subset excluded, Report& report) {
    if (candidates.is_empty() && excluded.is_empty()) {
        report(chosen);
        return;
    }
    int pivot = -1;
    int best = -1;
    (candidates | excluded).for_each([&](int u) {
        int score = (candidates & non_adj[u]).size();
        if (score > best) {
            best = score;
            pivot = u;
        }
    });
    Subset branch = candidates - non_adj[pivot];
    branch.for_each([&](int v) {
        maximal_independent_sets(non_adj, chosen | Subset::singleton(v), candidates & non_adj[v],
                                 excluded & non_adj[v], report);
        candidates.remove(v);
        excluded.add(v);
    });
}

}  // namespace detail

/// Every minimal vertex cover of g, each verified minimal.
///
/// Minimal covers are the complements of maximal independent sets.
/// Throws LimitError if g has more than max_vertices vertices.
inline CoverFamily enumerate_minimal_covers(const Graph& g, int max_vertices = kDefaultMaxVertices) {
    const int nv = g.vertex_count();
    if (nv > max_vertices)
        throw LimitError("graph has " + std::to_string(nv) + " vertices, cover enumeration cap is " +
                         std::to_string(max_vertices));
    if (nv > Subset::kMaxBits) throw LimitError("cover enumeration supports at most 64 vertices");
    const Subset all = Subset::range(nv);
    const auto adj = g.adjacency_masks();
    std::vector<Subset> non_adj(nv);
    for (int v = 0; v < nv; ++v) non_adj[v] = all - adj[v] - Subset::singleton(v);

    CoverFamily family{nv, {}};
    auto report = [&](Subset independent) {
        const Subset cover = all - independent;
        // minimality: each member has a neighbor outside the cover
        cover.for_each([&](int v) {
            if ((adj[v] - cover).is_empty())
                throw InconsistencyError("enumerated cover is not minimal", serialize_graph(g));
        });
        family.covers.push_back(Cover{cover});
    };
    detail::maximal_independent_sets(non_adj, Subset{}, all, Subset{}, report);
    sort_canonical(family.covers);
    return family;
}

inline bool is_unmixed(const CoverFamily& family) {
    if (family.covers.empty()) return true;
    const int k = family.covers.front().size();
    return std::ranges::all_of(family.covers, [k](Cover c) { return c.size() == k; });
}

/// A perfect matching between the two sides, as (u, v) pairs sorted by u.
///
/// Side_u vertices are matched in ascending order.  Each search takes the
/// lowest free neighbor if one exists and otherwise augments along the
/// first path found scanning neighbors in ascending order.  Returns nullopt
/// if the sides differ in size or no perfect matching exists.
inline std::optional<std::vector<Edge>> perfect_matching(const Graph& g, const Bipartition& p) {
    if (p.side_u.size() != p.side_v.size()) return std::nullopt;
    const int nv = g.vertex_count();
    std::vector<int> mate(nv, -1);
    std::vector<char> visited(nv, 0);

    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : g.neighbors(u)) {
            if (mate[v] == -1) {
                mate[v] = u;
                mate[u] = v;
                return true;
            }
        }
        for (int v : g.neighbors(u)) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (self(self, mate[v])) {
                mate[v] = u;
                mate[u] = v;
                return true;
            }
        }
        return false;
    };

    for (int u : p.side_u) {
        std::ranges::fill(visited, 0);
        if (!augment(augment, u)) return std::nullopt;
    }
    std::vector<Edge> matching;
    for (int u : p.side_u) matching.emplace_back(u, mate[u]);
    return matching;
}

/// Original vertex of every x_i and y_i after relabeling.
struct RelabelMap {
    std::vector<int> x_vertex;
    std::vector<int> y_vertex;

    /// Maps a cover of the labeled graph (x_i at bit i, y_j at bit n + j)
    /// back to original vertices.
    Subset to_original(Subset labeled) const {
        const int n = static_cast<int>(x_vertex.size());
        Subset out;
        labeled.for_each([&](int b) { out.add(b < n ? x_vertex[b] : y_vertex[b - n]); });
        return out;
    }
};

struct Relabeling {
    LabeledBipartiteGraph graph;
    RelabelMap map;
};

/// Renames an unmixed bipartite graph so that {x_i, y_i} is an edge for
/// every i: side_u in ascending order becomes x_1..x_n and y_i is the
/// partner of x_i in perfect_matching.
///
/// Throws InputError if the graph is not unmixed or the sides differ in
/// size, and InconsistencyError if no perfect matching exists.
inline Relabeling relabel(const Graph& g, const Bipartition& p, const CoverFamily& covers) {
    if (!is_unmixed(covers)) throw InputError("graph is not unmixed");
    if (p.side_u.size() != p.side_v.size()) throw InputError("bipartition sides differ in size");
    auto matching = perfect_matching(g, p);
    if (!matching)
        throw InconsistencyError("unmixed bipartite graph without a perfect matching", serialize_graph(g));

    const int n = static_cast<int>(p.side_u.size());
    RelabelMap map;
    std::vector<int> label(g.vertex_count(), -1);  // x_i -> i, y_j -> n + j
    for (int i = 0; i < n; ++i) {
        auto [u, v] = (*matching)[i];
        map.x_vertex.push_back(u);
        map.y_vertex.push_back(v);
        label[u] = i;
        label[v] = n + i;
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        int la = label[a];
        int lb = label[b];
        if (la > lb) std::swap(la, lb);
        edges.emplace_back(la, lb - n);
    }
    return Relabeling{LabeledBipartiteGraph(n, edges), std::move(map)};
}

/// The x-parts of the covers of a labeled graph.  covers must be the minimal
/// covers of g.to_graph().  Throws InconsistencyError if some cover does not
/// contain exactly one of x_i, y_i for every i.
inline std::vector<CoverXPart> x_parts(const LabeledBipartiteGraph& g, const CoverFamily& covers) {
    const int n = g.n();
    const Subset low = Subset::range(n);
    std::vector<CoverXPart> out;
    out.reserve(covers.size());
    for (Cover c : covers) {
        const Subset xs = c.members & low;
        const Subset ys{c.members.bits() >> n};
        if (ys != low - xs)
            throw InconsistencyError("cover " + c.members.to_string() + " violates x_i/y_i complementarity",
                                     serialize_labeled_graph(g));
        out.push_back(CoverXPart{xs});
    }
    return out;
}

/// First U' ⊆ [n] (in word order) with |U'| > |N(U')|, or nullopt if Hall's
/// condition holds for every subset.  Exhaustive; n <= 20.
inline std::optional<Subset> hall_violation(const LabeledBipartiteGraph& g) {
    if (g.n() > 20) throw LimitError("exhaustive Hall check limited to n <= 20");
    const std::uint64_t count = std::uint64_t{1} << g.n();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        Subset u{bits};
        if (u.size() > neighborhood(g, u).size()) return u;
    }
    return std::nullopt;
}

/// One line per cover: sorted 1-based vertex indices, space separated.
inline std::string serialize_covers(const CoverFamily& family) {
    std::string out;
    for (Cover c : family) {
        bool first = true;
        c.members.for_each([&](int v) {
            if (!first) out += ' ';
            out += std::to_string(v + 1);
            first = false;
        });
        out += '\n';
    }
    return out;
}

}  // namespace covlat
