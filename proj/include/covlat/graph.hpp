#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covlat/error.hpp"
#include "covlat/subset.hpp"

namespace covlat {

using Edge = std::pair<int, int>;

/// Finite simple graph without isolated vertices.
///
/// Vertices are 0-based internally; every textual form is 1-based.  Edges
/// are stored normalized (first < second) and sorted.
class Graph {
public:
    /// Validates and builds.  Throws InputError on a loop, a repeated edge,
    /// an endpoint out of range, or a vertex that no edge touches.
    static Graph from_edges(int vertex_count, std::vector<Edge> edges) {
        if (vertex_count <= 0) throw InputError("graph must have at least one vertex");
        std::set<Edge> seen;
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw InputError("edge endpoint out of range");
            if (u == v) throw InputError("loop at vertex " + std::to_string(u + 1));
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw InputError("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
        }
        Graph g;
        g.vertex_count_ = vertex_count;
        g.edges_.assign(seen.begin(), seen.end());
        g.adjacency_.resize(vertex_count);
        for (auto [u, v] : g.edges_) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (int v = 0; v < vertex_count; ++v) {
            if (g.adjacency_[v].empty()) throw InputError("isolated vertex " + std::to_string(v + 1));
            std::ranges::sort(g.adjacency_[v]);
        }
        return g;
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::ranges::binary_search(edges_, Edge{u, v});
    }

    /// Neighbor sets as bit masks.  Requires vertex_count <= 64.
    std::vector<Subset> adjacency_masks() const {
        if (vertex_count_ > Subset::kMaxBits) throw LimitError("graph too large for bit-set representation");
        std::vector<Subset> masks(vertex_count_);
        for (auto [u, v] : edges_) {
            masks[u].add(v);
            masks[v].add(u);
        }
        return masks;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// Splits on whitespace and parses every token as a positive integer.
inline std::optional<std::vector<int>> parse_positive_ints(std::string_view line) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        int value = 0;
        const auto* first = line.data() + pos;
        const auto* last = line.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || value <= 0) return std::nullopt;
        out.push_back(value);
        pos = end;
    }
    return out;
}

/// Calls f(line_number, trimmed_line) for every non-blank, non-comment line.
template <typename F>
void for_each_content_line(std::string_view text, F&& f) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++line_no;
        auto line = trim(text.substr(pos, nl - pos));
        if (!line.empty() && line.front() != '#') f(line_no, line);
        pos = nl + 1;
    }
}

}  // namespace detail

/// Parses an edge list: one "u v" pair of 1-based vertices per line, '#'
/// comment lines and blank lines ignored.  The vertex count is the largest
/// index seen.
inline Graph parse_graph(std::string_view text) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<int> first_line;  // line where each vertex first appears
    int max_vertex = 0;
    int max_line = 0;
    detail::for_each_content_line(text, [&](int line_no, std::string_view line) {
        auto ints = detail::parse_positive_ints(line);
        if (!ints || ints->size() != 2)
            throw ParseError(line_no, "expected two positive vertex indices, got '" + std::string(line) + "'");
        int u = (*ints)[0] - 1;
        int v = (*ints)[1] - 1;
        if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u + 1));
        Edge key = std::minmax(u, v);
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge " + std::string(line));
        edges.push_back(key);
        if (std::max(u, v) + 1 > max_vertex) {
            max_vertex = std::max(u, v) + 1;
            max_line = line_no;
        }
    });
    if (edges.empty()) throw ParseError(1, "no edges");
    std::vector<bool> touched(max_vertex, false);
    for (auto [u, v] : edges) touched[u] = touched[v] = true;
    for (int v = 0; v < max_vertex; ++v)
        if (!touched[v])
            throw ParseError(max_line, "isolated vertex " + std::to_string(v + 1) + " (index gap below maximum " +
                                           std::to_string(max_vertex) + ")");
    return Graph::from_edges(max_vertex, std::move(edges));
}

/// Canonical form: sorted edges, one "u v" per line, 1-based.
inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

struct Bipartition {
    std::vector<int> side_u;
    std::vector<int> side_v;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// BFS 2-coloring.  Each component is rooted at its lowest vertex, which
/// goes to side_u.  Returns nullopt when the graph has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
    const int nv = g.vertex_count();
    std::vector<int> color(nv, -1);
    for (int root = 0; root < nv; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition p;
    for (int v = 0; v < nv; ++v) (color[v] == 0 ? p.side_u : p.side_v).push_back(v);
    return p;
}

/// Bipartite graph on {x_1..x_n} ∪ {y_1..y_n} with every {x_i, y_i} an edge.
///
/// Edge (i, j) means {x_i, y_j}.  Indices are 0-based internally.  As a plain
/// Graph (see to_graph) x_i is vertex i and y_j is vertex n + j, so a vertex
/// cover's bit mask is exactly its 0/1 cover vector.
class LabeledBipartiteGraph {
public:
    static constexpr int kMaxN = Subset::kMaxBits / 2;

    /// Throws InputError unless every (i, i) is present and indices are in range.
    LabeledBipartiteGraph(int n, const std::vector<Edge>& edges) : n_(n), x_adj_(n > 0 ? n : 0) {
        if (n <= 0) throw InputError("labeled graph needs n >= 1");
        if (n > kMaxN) throw LimitError("labeled graph n exceeds " + std::to_string(kMaxN));
        for (auto [i, j] : edges) {
            if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("labeled edge index out of range");
            x_adj_[i].add(j);
        }
        for (int i = 0; i < n; ++i)
            if (!x_adj_[i].contains(i))
                throw InputError("labeled graph is missing matching edge x" + std::to_string(i + 1) + " y" +
                                 std::to_string(i + 1));
    }

    int n() const { return n_; }
    bool has_edge(int i, int j) const { return x_adj_[i].contains(j); }
    /// {j : (i, j) is an edge}
    Subset x_neighbors(int i) const { return x_adj_[i]; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int i = 0; i < n_; ++i) x_adj_[i].for_each([&](int j) { out.emplace_back(i, j); });
        return out;
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (auto s : x_adj_) c += s.size();
        return c;
    }

    Graph to_graph() const {
        std::vector<Edge> es;
        for (auto [i, j] : edges()) es.emplace_back(i, n_ + j);
        return Graph::from_edges(2 * n_, std::move(es));
    }

    friend bool operator==(const LabeledBipartiteGraph& a, const LabeledBipartiteGraph& b) {
        return a.n_ == b.n_ && a.x_adj_ == b.x_adj_;
    }

private:
    int n_;
    std::vector<Subset> x_adj_;
};

/// N(U') = { j : some i in u_sub has (i, j) as an edge }.
inline Subset neighborhood(const LabeledBipartiteGraph& g, Subset u_sub) {
    if (!u_sub.is_subset_of(Subset::range(g.n()))) throw InputError("neighborhood: index out of range");
    Subset out;
    u_sub.for_each([&](int i) { out |= g.x_neighbors(i); });
    return out;
}

/// Header "n=<n>" followed by "i j" lines (1-based), sorted.
inline std::string serialize_labeled_graph(const LabeledBipartiteGraph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << '\n';
    for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

namespace detail {

inline std::optional<int> parse_header_n(std::string_view line) {
    if (!line.starts_with("n=")) return std::nullopt;
    auto ints = parse_positive_ints(line.substr(2));
    if (!ints || ints->size() != 1) return std::nullopt;
    return (*ints)[0];
}

inline bool has_n_header(std::string_view text) {
    bool header = false;
    bool decided = false;
    for_each_content_line(text, [&](int, std::string_view line) {
        if (!decided) header = line.starts_with("n=");
        decided = true;
    });
    return header;
}

}  // namespace detail

inline LabeledBipartiteGraph parse_labeled_graph(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    detail::for_each_content_line(text, [&](int line_no, std::string_view line) {
        if (!n) {
            n = detail::parse_header_n(line);
            if (!n) throw ParseError(line_no, "expected header 'n=<n>'");
            return;
        }
        auto ints = detail::parse_positive_ints(line);
        if (!ints || ints->size() != 2) throw ParseError(line_no, "expected 'i j'");
        if ((*ints)[0] > *n || (*ints)[1] > *n) throw ParseError(line_no, "index exceeds n");
        edges.emplace_back((*ints)[0] - 1, (*ints)[1] - 1);
    });
    if (!n) throw ParseError(1, "missing header 'n=<n>'");
    return LabeledBipartiteGraph(*n, edges);
}

/// Reads either format: a labeled graph (first content line "n=<n>",
/// x_i -> vertex i, y_j -> vertex n + j) or a plain edge list.
inline Graph parse_any_graph(std::string_view text) {
    if (detail::has_n_header(text)) return parse_labeled_graph(text).to_graph();
    return parse_graph(text);
}

}  // namespace covlat
