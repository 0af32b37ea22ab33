#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "covlat/covers.hpp"
#include "covlat/error.hpp"
#include "covlat/graph.hpp"
#include "covlat/subset.hpp"

namespace covlat {

/// Why a family of subsets of [n] fails to be a sublattice containing ∅ and [n].
struct SublatticeCertificate {
    enum class Kind { OutOfRange, UnionMissing, IntersectionMissing, MissingBottom, MissingTop };

    Kind kind;
    Subset a;
    Subset b;
    Subset result;  // the missing set

    std::string describe() const {
        switch (kind) {
            case Kind::OutOfRange: return "element " + a.to_string() + " is not a subset of [n]";
            case Kind::UnionMissing:
                return a.to_string() + " union " + b.to_string() + " = " + result.to_string() + " missing";
            case Kind::IntersectionMissing:
                return a.to_string() + " intersect " + b.to_string() + " = " + result.to_string() + " missing";
            case Kind::MissingBottom: return "empty set {} missing";
            case Kind::MissingTop: return "top element " + result.to_string() + " missing";
        }
        return {};
    }
};

struct SublatticeCheck {
    bool ok = false;
    std::optional<SublatticeCertificate> certificate;

    explicit operator bool() const { return ok; }
};

/// Is `family` a sublattice of the Boolean lattice on [n] that contains ∅
/// and [n]?  Closure is checked before the boundary elements, pairs in
/// the order given, union before intersection.
inline SublatticeCheck is_sublattice(int n, const std::vector<Subset>& family) {
    using Kind = SublatticeCertificate::Kind;
    const Subset top = Subset::range(n);
    for (Subset s : family)
        if (!s.is_subset_of(top)) return {false, SublatticeCertificate{Kind::OutOfRange, s, {}, {}}};
    const std::unordered_set<Subset> members(family.begin(), family.end());
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Subset a = family[i];
            const Subset b = family[j];
            if (!members.contains(a | b)) return {false, SublatticeCertificate{Kind::UnionMissing, a, b, a | b}};
            if (!members.contains(a & b))
                return {false, SublatticeCertificate{Kind::IntersectionMissing, a, b, a & b}};
        }
    }
    if (!members.contains(Subset{})) return {false, SublatticeCertificate{Kind::MissingBottom, {}, {}, {}}};
    if (!members.contains(top)) return {false, SublatticeCertificate{Kind::MissingTop, {}, {}, top}};
    return {true, std::nullopt};
}

/// A sublattice of the Boolean lattice on [n] containing ∅ and [n].
/// Elements are distinct and kept in canonical order, so front() is ∅ and
/// back() is [n].
class CoverLattice {
public:
    static constexpr int kMaxN = 32;

    /// Throws InputError (with the certificate in the message) if `family`
    /// is not a sublattice containing ∅ and [n].
    static CoverLattice from_family(int n, std::vector<Subset> family) {
        if (n <= 0) throw InputError("lattice needs n >= 1");
        if (n > kMaxN) throw LimitError("lattice n exceeds " + std::to_string(kMaxN));
        std::ranges::sort(family, canonical_less);
        auto dup = std::ranges::unique(family);
        family.erase(dup.begin(), dup.end());
        if (auto check = is_sublattice(n, family); !check)
            throw InputError("not a sublattice: " + check.certificate->describe());
        CoverLattice lat;
        lat.n_ = n;
        lat.elements_ = std::move(family);
        return lat;
    }

    int n() const { return n_; }
    const std::vector<Subset>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(Subset s) const { return std::ranges::binary_search(elements_, s, canonical_less); }

    friend bool operator==(const CoverLattice&, const CoverLattice&) = default;

private:
    CoverLattice() = default;
    int n_ = 0;
    std::vector<Subset> elements_;
};

/// L_G from the x-parts of an unmixed labeled graph's covers.  A closure or
/// boundary failure here means the upstream graph was not unmixed, so it
/// surfaces as InconsistencyError.
inline CoverLattice lattice_from_covers(const std::vector<CoverXPart>& parts, int n) {
    std::vector<Subset> family;
    family.reserve(parts.size());
    for (auto p : parts) family.push_back(p.x_indices);
    try {
        return CoverLattice::from_family(n, std::move(family));
    } catch (const InputError& e) {
        std::string listing;
        for (auto p : parts) listing += p.x_indices.to_string() + '\n';
        throw InconsistencyError(std::string("cover x-parts do not form a lattice: ") + e.what(), listing);
    }
}

struct HasseDiagram {
    std::vector<Subset> nodes;
    /// (lower, upper) node indices; lower is covered by upper.
    std::vector<std::pair<int, int>> cover_edges;
};

/// Cover relation of the inclusion order restricted to the lattice.
///
/// Nodes are scanned in canonical order, so every element strictly between
/// a and b has been seen before b.  b covers a iff it contains none of a's
/// upper covers found so far.
inline HasseDiagram hasse(const CoverLattice& lat) {
    HasseDiagram h;
    h.nodes = lat.elements();
    const auto& nodes = h.nodes;
    const int m = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> upper(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (!nodes[a].is_proper_subset_of(nodes[b])) continue;
            const bool blocked = std::ranges::any_of(upper[a], [&](int c) { return nodes[c].is_subset_of(nodes[b]); });
            if (!blocked) upper[a].push_back(b);
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b : upper[a]) h.cover_edges.emplace_back(a, b);
    return h;
}

/// Longest chain cardinality minus one.  Also checks that every maximal
/// chain has that length, throwing InconsistencyError otherwise.
inline int rank(const CoverLattice& lat) {
    const HasseDiagram h = hasse(lat);
    const int m = static_cast<int>(h.nodes.size());
    // Edges go from lower to higher canonical index, so index order is topological.
    std::vector<int> longest(m, -1);
    std::vector<int> shortest(m, m + 1);
    longest[0] = shortest[0] = 0;
    auto edges = h.cover_edges;
    std::ranges::sort(edges);
    for (auto [a, b] : edges) {
        longest[b] = std::max(longest[b], longest[a] + 1);
        shortest[b] = std::min(shortest[b], shortest[a] + 1);
    }
    if (longest[m - 1] != shortest[m - 1]) {
        std::ostringstream out;
        for (Subset s : lat.elements()) out << s.to_string() << '\n';
        throw InconsistencyError("lattice is not graded: maximal chains of lengths " +
                                     std::to_string(shortest[m - 1]) + " and " + std::to_string(longest[m - 1]),
                                 out.str());
    }
    return longest[m - 1];
}

/// rank == n.  For L_G this is the Cohen-Macaulay criterion.
inline bool is_full(const CoverLattice& lat) { return rank(lat) == lat.n(); }

/// The unique unmixed labeled graph whose cover x-parts are exactly the
/// lattice: (i, j) is an edge iff every element containing j contains i.
///
/// The result is verified by enumerating its minimal covers; a mismatch
/// throws InconsistencyError.
inline LabeledBipartiteGraph graph_from_lattice(const CoverLattice& lat) {
    const int n = lat.n();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool implied = std::ranges::all_of(lat.elements(), [&](Subset a) { return !a.contains(j) || a.contains(i); });
            if (implied) edges.emplace_back(i, j);
        }
    LabeledBipartiteGraph g(n, edges);

    std::ostringstream instance;
    instance << "n=" << n << '\n';
    for (Subset s : lat.elements()) instance << s.to_string() << '\n';
    const auto covers = enumerate_minimal_covers(g.to_graph(), 2 * n);
    std::vector<Subset> got;
    try {
        for (auto p : x_parts(g, covers)) got.push_back(p.x_indices);
    } catch (const InconsistencyError& e) {
        throw InconsistencyError(std::string("round trip failed: ") + e.what(), instance.str());
    }
    std::ranges::sort(got, canonical_less);
    if (got != lat.elements())
        throw InconsistencyError("round trip failed: cover x-parts differ from the lattice", instance.str());
    return g;
}

/// Calls f(lattice) for every sublattice of the Boolean lattice on [n]
/// containing ∅ and [n], by filtering all 2^(2^n) families.  n <= 4.
template <typename F>
void for_each_sublattice(int n, F&& f) {
    if (n < 1) throw InputError("n must be at least 1");
    if (n > 4) throw LimitError("exhaustive sublattice enumeration is limited to n <= 4");
    const int universe = 1 << n;  // subsets of [n], indexed by their bits
    const std::uint64_t families = std::uint64_t{1} << universe;
    const std::uint64_t top_bit = std::uint64_t{1} << (universe - 1);
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        if (!(fam & 1U) || !(fam & top_bit)) continue;
        bool closed = true;
        for (int a = 0; a < universe && closed; ++a) {
            if (!((fam >> a) & 1U)) continue;
            for (int b = a + 1; b < universe; ++b) {
                if (!((fam >> b) & 1U)) continue;
                if (!((fam >> (a | b)) & 1U) || !((fam >> (a & b)) & 1U)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        std::vector<Subset> elems;
        for (int a = 0; a < universe; ++a)
            if ((fam >> a) & 1U) elems.emplace_back(static_cast<std::uint64_t>(a));
        f(CoverLattice::from_family(n, std::move(elems)));
    }
}

inline std::vector<CoverLattice> enumerate_sublattices(int n) {
    std::vector<CoverLattice> out;
    for_each_sublattice(n, [&](CoverLattice lat) { out.push_back(std::move(lat)); });
    return out;
}

/// Union/intersection closure of {∅, [n]} ∪ generators.  Throws LimitError
/// once the closure exceeds max_elements.
inline CoverLattice close_family(int n, const std::vector<Subset>& generators, std::size_t max_elements) {
    const Subset top = Subset::range(n);
    std::vector<Subset> elems;
    std::unordered_set<Subset> seen;
    std::vector<Subset> pending{Subset{}, top};
    pending.insert(pending.end(), generators.begin(), generators.end());
    while (!pending.empty()) {
        const Subset s = pending.back();
        pending.pop_back();
        if (!s.is_subset_of(top)) throw InputError("generator " + s.to_string() + " is not a subset of [n]");
        if (!seen.insert(s).second) continue;
        if (seen.size() > max_elements)
            throw LimitError("closure exceeds " + std::to_string(max_elements) + " elements");
        for (Subset t : elems) {
            if (!seen.contains(s | t)) pending.push_back(s | t);
            if (!seen.contains(s & t)) pending.push_back(s & t);
        }
        elems.push_back(s);
    }
    return CoverLattice::from_family(n, std::move(elems));
}

/// Closure of {∅, [n]} and generator_count uniformly random subsets of [n]
/// drawn from mt19937_64(seed).  Deterministic per seed across platforms.
inline CoverLattice random_sublattice(int n, int generator_count, std::uint64_t seed,
                                      std::size_t max_elements = 0) {
    if (n < 1 || n > 16) throw InputError("random_sublattice needs 1 <= n <= 16");
    if (generator_count < 0) throw InputError("generator count must be non-negative");
    if (max_elements == 0) max_elements = std::size_t{1} << n;
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = Subset::range(n).bits();
    std::vector<Subset> gens;
    gens.reserve(generator_count);
    for (int k = 0; k < generator_count; ++k) gens.emplace_back(rng() & mask);
    return close_family(n, gens, max_elements);
}

/// Header "n=<n>", then one element per line as comma-separated 1-based
/// indices, "{}" for the empty set.
inline std::string serialize_lattice(const CoverLattice& lat) {
    std::ostringstream out;
    out << "n=" << lat.n() << '\n';
    for (Subset s : lat.elements()) {
        if (s.is_empty()) {
            out << "{}\n";
            continue;
        }
        auto str = s.to_string();
        out << str.substr(1, str.size() - 2) << '\n';
    }
    return out.str();
}

/// The raw family from a lattice file, before any closure check.
struct LatticeFile {
    int n = 0;
    std::vector<Subset> family;
};

inline LatticeFile parse_lattice_file(std::string_view text) {
    LatticeFile file;
    bool have_header = false;
    detail::for_each_content_line(text, [&](int line_no, std::string_view line) {
        if (!have_header) {
            auto n = detail::parse_header_n(line);
            if (!n) throw ParseError(line_no, "expected header 'n=<n>'");
            if (*n > CoverLattice::kMaxN) throw ParseError(line_no, "n too large");
            file.n = *n;
            have_header = true;
            return;
        }
        if (line.front() == '{' && line.back() == '}') line = detail::trim(line.substr(1, line.size() - 2));
        Subset s;
        std::string spaced(line);
        std::ranges::replace(spaced, ',', ' ');
        auto ints = detail::parse_positive_ints(spaced);
        if (!ints) throw ParseError(line_no, "expected comma-separated indices, got '" + std::string(line) + "'");
        for (int i : *ints) {
            if (i > file.n) throw ParseError(line_no, "index " + std::to_string(i) + " exceeds n");
            s.add(i - 1);
        }
        file.family.push_back(s);
    });
    if (!have_header) throw ParseError(1, "missing header 'n=<n>'");
    return file;
}

inline CoverLattice parse_lattice(std::string_view text) {
    auto file = parse_lattice_file(text);
    return CoverLattice::from_family(file.n, std::move(file.family));
}

/// Graphviz digraph, edges pointing from each element to its upper covers.
inline std::string hasse_to_dot(const HasseDiagram& h) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << h.nodes[i].to_string() << "\"];\n";
    for (auto [a, b] : h.cover_edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace covlat
