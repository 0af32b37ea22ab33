#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "covlat/covers.hpp"
#include "covlat/lattice.hpp"
#include "oracles.hpp"

using namespace covlat;

namespace {

CoverLattice lat(int n, std::initializer_list<std::initializer_list<int>> one_based) {
    std::vector<Subset> fam;
    for (auto l : one_based) {
        Subset s;
        for (int i : l) s.add(i - 1);
        fam.push_back(s);
    }
    return CoverLattice::from_family(n, fam);
}

CoverLattice boolean(int n) {
    std::vector<Subset> fam;
    for (std::uint64_t b = 0; b < (1ULL << n); ++b) fam.emplace_back(b);
    return CoverLattice::from_family(n, fam);
}

std::vector<Subset> x_sets_of(const LabeledBipartiteGraph& g) {
    std::vector<Subset> out;
    for (auto p : x_parts(g, enumerate_minimal_covers(g.to_graph(), 64))) out.push_back(p.x_indices);
    std::ranges::sort(out, canonical_less);
    return out;
}

// Lengths of all maximal chains from ∅ to [n], found by walking the strict
// inclusion order directly (no Hasse diagram).
std::set<int> maximal_chain_lengths(const CoverLattice& l) {
    std::set<int> lengths;
    const auto& el = l.elements();
    std::function<void(Subset, int)> walk = [&](Subset cur, int len) {
        bool extended = false;
        for (Subset next : el) {
            if (!cur.is_proper_subset_of(next)) continue;
            bool immediate = std::ranges::none_of(
                el, [&](Subset mid) { return cur.is_proper_subset_of(mid) && mid.is_proper_subset_of(next); });
            if (!immediate) continue;
            extended = true;
            walk(next, len + 1);
        }
        if (!extended) lengths.insert(len);
    };
    walk(Subset{}, 1);
    return lengths;
}

}  // namespace

TEST(IsSublattice, Examples) {
    EXPECT_TRUE(is_sublattice(2, {Subset{}, Subset::of({0}), Subset::of({1}), Subset::of({0, 1})}));
    EXPECT_TRUE(is_sublattice(2, {Subset{}, Subset::of({0}), Subset::of({0, 1})}));

    auto bad = is_sublattice(2, {Subset{}, Subset::of({0}), Subset::of({1})});
    ASSERT_FALSE(bad);
    ASSERT_TRUE(bad.certificate);
    EXPECT_EQ(bad.certificate->kind, SublatticeCertificate::Kind::UnionMissing);
    EXPECT_EQ(bad.certificate->result, Subset::of({0, 1}));
    EXPECT_EQ(bad.certificate->describe(), "{1} union {2} = {1,2} missing");
}

TEST(IsSublattice, BoundaryAndRange) {
    auto no_top = is_sublattice(2, {Subset{}, Subset::of({0})});
    EXPECT_EQ(no_top.certificate->kind, SublatticeCertificate::Kind::MissingTop);
    auto no_bottom = is_sublattice(2, {Subset::of({0}), Subset::of({0, 1})});
    EXPECT_EQ(no_bottom.certificate->kind, SublatticeCertificate::Kind::MissingBottom);
    auto meet = is_sublattice(3, {Subset{}, Subset::of({0, 1}), Subset::of({1, 2}), Subset::range(3)});
    EXPECT_EQ(meet.certificate->kind, SublatticeCertificate::Kind::IntersectionMissing);
    EXPECT_EQ(meet.certificate->result, Subset::of({1}));
    auto range = is_sublattice(2, {Subset{}, Subset::of({2})});
    EXPECT_EQ(range.certificate->kind, SublatticeCertificate::Kind::OutOfRange);
}

TEST(CoverLattice, RejectsNonLattice) {
    EXPECT_THROW(lat(2, {{}, {1}, {2}}), InputError);
    EXPECT_THROW(CoverLattice::from_family(0, {}), InputError);
}

TEST(LatticeFromCovers, Examples) {
    EXPECT_EQ(lattice_from_covers({{Subset{}}, {Subset::of({0, 1})}}, 2), lat(2, {{}, {1, 2}}));
    EXPECT_EQ(lattice_from_covers({{Subset{}}, {Subset::of({0})}, {Subset::of({1})}, {Subset::of({0, 1})}}, 2),
              boolean(2));
    EXPECT_EQ(lattice_from_covers({{Subset{}}, {Subset::of({0})}}, 1), lat(1, {{}, {1}}));
    EXPECT_THROW(lattice_from_covers({{Subset{}}, {Subset::of({0})}, {Subset::of({1})}}, 2), InconsistencyError);
}

TEST(Hasse, Examples) {
    EXPECT_EQ(hasse(lat(1, {{}, {1}})).cover_edges, (std::vector<std::pair<int, int>>{{0, 1}}));
    auto diamond = hasse(boolean(2));
    EXPECT_EQ(diamond.cover_edges.size(), 4U);
    auto chain = hasse(lat(2, {{}, {1}, {1, 2}}));
    EXPECT_EQ(chain.cover_edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(Hasse, ReachabilityMatchesInclusion) {
    for (int n = 1; n <= 3; ++n)
        for_each_sublattice(n, [](const CoverLattice& l) {
            auto h = hasse(l);
            const int m = static_cast<int>(h.nodes.size());
            std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
            for (int i = 0; i < m; ++i) reach[i][i] = 1;
            for (auto [a, b] : h.cover_edges) {
                ASSERT_LT(a, b);
                reach[a][b] = 1;
            }
            for (int k = 0; k < m; ++k)
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    EXPECT_EQ(static_cast<bool>(reach[i][j]), h.nodes[i].is_subset_of(h.nodes[j]));
        });
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(lat(2, {{}, {1, 2}})), 1);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(rank(boolean(n)), n);
    EXPECT_EQ(rank(lat(3, {{}, {1}, {1, 2}, {1, 2, 3}})), 3);
}

TEST(Rank, GradedAgainstChainWalk) {
    for (int n = 1; n <= 4; ++n)
        for_each_sublattice(n, [](const CoverLattice& l) {
            auto lengths = maximal_chain_lengths(l);
            ASSERT_EQ(lengths.size(), 1U) << serialize_lattice(l);
            EXPECT_EQ(*lengths.begin(), rank(l) + 1);
        });
}

TEST(IsFull, Examples) {
    EXPECT_TRUE(is_full(boolean(2)));
    EXPECT_FALSE(is_full(lat(2, {{}, {1, 2}})));
    EXPECT_TRUE(is_full(lat(1, {{}, {1}})));
    for (int n = 1; n <= 4; ++n)
        for_each_sublattice(n, [n](const CoverLattice& l) { EXPECT_EQ(is_full(l), rank(l) == n); });
}

TEST(GraphFromLattice, Examples) {
    EXPECT_EQ(graph_from_lattice(lat(2, {{}, {1, 2}})).edges(), (std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(graph_from_lattice(boolean(2)).edges(), (std::vector<Edge>{{0, 0}, {1, 1}}));
    EXPECT_EQ(graph_from_lattice(lat(2, {{}, {1}, {1, 2}})).edges(), (std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}}));
}

TEST(GraphFromLattice, MatchingGraphGivesBooleanLattice) {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> diag;
        for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
        LabeledBipartiteGraph matching(n, diag);
        auto l = lattice_from_covers(x_parts(matching, enumerate_minimal_covers(matching.to_graph())), n);
        EXPECT_EQ(l, boolean(n));
        EXPECT_TRUE(is_full(l));
        EXPECT_EQ(graph_from_lattice(l), matching);
    }
}

TEST(GraphFromLattice, RoundTripAExhaustive) {
    for (int n = 1; n <= 4; ++n)
        for_each_sublattice(n, [](const CoverLattice& l) { EXPECT_EQ(x_sets_of(graph_from_lattice(l)), l.elements()); });
}

TEST(GraphFromLattice, RoundTripARandom) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        auto l = random_sublattice(n, static_cast<int>(rng() % (2 * n + 1)), rng());
        EXPECT_EQ(x_sets_of(graph_from_lattice(l)), l.elements());
    }
}

TEST(GraphFromLattice, RoundTripBExhaustive) {
    // every unmixed labeled graph arises from some lattice; rebuild it from its own covers
    for (int n = 1; n <= 4; ++n)
        for_each_sublattice(n, [n](const CoverLattice& l) {
            auto g = graph_from_lattice(l);
            auto again = lattice_from_covers(x_parts(g, enumerate_minimal_covers(g.to_graph())), n);
            EXPECT_EQ(graph_from_lattice(again), g);
        });
}

TEST(GraphFromLattice, EdgeRelationIsTransitive) {
    for (int n = 1; n <= 4; ++n)
        for_each_sublattice(n, [n](const CoverLattice& l) {
            auto g = graph_from_lattice(l);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (g.has_edge(i, j) && g.has_edge(j, k)) {
                            EXPECT_TRUE(g.has_edge(i, k));
                        }
        });
}

TEST(EnumerateSublattices, SmallCounts) {
    auto one = enumerate_sublattices(1);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0], lat(1, {{}, {1}}));

    auto two = enumerate_sublattices(2);
    ASSERT_EQ(two.size(), 4U);
    std::vector<CoverLattice> expected{lat(2, {{}, {1, 2}}), lat(2, {{}, {1}, {1, 2}}), lat(2, {{}, {2}, {1, 2}}),
                                       boolean(2)};
    for (const auto& e : expected) EXPECT_NE(std::ranges::find(two, e), two.end());
}

TEST(EnumerateSublattices, CountsMatchPreorderOracle) {
    // regression constants, confirmed by counting preorders independently
    EXPECT_EQ(enumerate_sublattices(3).size(), 29U);
    EXPECT_EQ(oracle::count_preorders(3), 29);
    EXPECT_EQ(enumerate_sublattices(4).size(), 355U);
    EXPECT_EQ(oracle::count_preorders(4), 355);
    for (int n = 1; n <= 2; ++n) {
        EXPECT_EQ(static_cast<int>(enumerate_sublattices(n).size()), oracle::count_preorders(n));
    }
}

TEST(EnumerateSublattices, Limits) {
    EXPECT_THROW(enumerate_sublattices(5), LimitError);
    EXPECT_THROW(enumerate_sublattices(0), InputError);
}

TEST(RandomSublattice, NoGenerators) {
    for (int n = 1; n <= 16; ++n) EXPECT_EQ(random_sublattice(n, 0, 123).elements(), (std::vector<Subset>{Subset{}, Subset::range(n)}));
}

TEST(RandomSublattice, LandsInEnumeratedSet) {
    auto all = enumerate_sublattices(2);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto l = random_sublattice(2, 6, seed);
        EXPECT_NE(std::ranges::find(all, l), all.end());
    }
}

TEST(RandomSublattice, DeterministicAndClosed) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_sublattice(7, 5, seed);
        EXPECT_EQ(a, random_sublattice(7, 5, seed));
        EXPECT_TRUE(is_sublattice(7, a.elements()));
    }
}

TEST(RandomSublattice, SingletonsCloseToBoolean) {
    std::vector<Subset> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(Subset::singleton(i));
    EXPECT_EQ(close_family(5, gens, 1 << 5), boolean(5));
    EXPECT_THROW(close_family(5, gens, 10), LimitError);
}

TEST(Lattice, ModularIndicatorIdentity) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto l = random_sublattice(n, static_cast<int>(rng() % 8), rng());
        for (Subset a : l.elements())
            for (Subset b : l.elements()) {
                ASSERT_TRUE(l.contains(a | b));
                ASSERT_TRUE(l.contains(a & b));
                for (int i = 0; i < n; ++i)
                    EXPECT_EQ((a | b).contains(i) + (a & b).contains(i), a.contains(i) + b.contains(i));
            }
    }
}

TEST(LatticeFile, SerializeParse) {
    auto l = lat(3, {{}, {1}, {1, 2}, {1, 2, 3}});
    EXPECT_EQ(serialize_lattice(l), "n=3\n{}\n1\n1,2\n1,2,3\n");
    EXPECT_EQ(parse_lattice(serialize_lattice(l)), l);
    EXPECT_EQ(parse_lattice("# c\nn=2\n{}\n{1,2}\n"), lat(2, {{}, {1, 2}}));
    EXPECT_THROW(parse_lattice("{}\n"), ParseError);
    EXPECT_THROW(parse_lattice("n=2\n1,3\n"), ParseError);
    EXPECT_THROW(parse_lattice("n=2\n1;2\n"), ParseError);
    EXPECT_THROW(parse_lattice("n=2\n{}\n1\n2\n"), InputError);
}

TEST(LatticeFile, Dot) {
    auto dot = hasse_to_dot(hasse(lat(2, {{}, {1}, {1, 2}})));
    EXPECT_NE(dot.find("digraph hasse"), std::string::npos);
    EXPECT_NE(dot.find("n0 [label=\"{}\"]"), std::string::npos);
    EXPECT_NE(dot.find("n2 [label=\"{1,2}\"]"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
    EXPECT_NE(dot.find("n1 -> n2;"), std::string::npos);
}
