#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "covlat/algebra.hpp"
#include "covlat/covers.hpp"
#include "covlat/error.hpp"
#include "covlat/graph.hpp"
#include "covlat/growth.hpp"
#include "covlat/lattice.hpp"

namespace covlat {

/// Results of running a graph through covers, relabeling and L_G.
struct GraphAnalysis {
    std::optional<Bipartition> parts;
    CoverFamily covers;
    bool unmixed = false;

    // Set only for unmixed bipartite graphs.
    std::optional<Relabeling> relabeling;
    std::optional<CoverFamily> labeled_covers;
    std::optional<CoverLattice> lattice;

    bool unmixed_bipartite() const { return lattice.has_value(); }
};

inline GraphAnalysis analyze_graph(const Graph& g, int max_vertices = kDefaultMaxVertices) {
    GraphAnalysis a;
    a.parts = bipartition(g);
    a.covers = enumerate_minimal_covers(g, max_vertices);
    a.unmixed = is_unmixed(a.covers);
    if (!a.parts || !a.unmixed) return a;
    a.relabeling = relabel(g, *a.parts, a.covers);
    const auto& lg = a.relabeling->graph;
    a.labeled_covers = enumerate_minimal_covers(lg.to_graph(), max_vertices);
    a.lattice = lattice_from_covers(x_parts(lg, *a.labeled_covers), lg.n());
    return a;
}

struct VerifyOptions {
    int growth_max_n = 3;
    int growth_max_degree = 10;
    int hall_max_n = 5;
};

/// Everything checked for one sublattice.  `failures` is empty on success.
struct InstanceOutcome {
    std::string lattice_text;
    int n = 0;
    std::optional<DimensionReport> report;
    bool full = false;
    bool growth_checked = false;
    bool growth_inconclusive = false;
    bool hall_checked = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Runs lattice -> graph -> covers -> relabel -> lattice -> matrices ->
/// report, checking both round trips, the rank identities, the dimension
/// formula, relabeling invariance, Hall's condition (n <= hall_max_n) and
/// the growth oracle (n <= growth_max_n).
inline InstanceOutcome verify_lattice(const CoverLattice& lat, const VerifyOptions& opts = {}) {
    InstanceOutcome out;
    out.n = lat.n();
    out.lattice_text = serialize_lattice(lat);
    auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };
    try {
        // round trip A is verified inside graph_from_lattice
        const LabeledBipartiteGraph g = graph_from_lattice(lat);
        const Graph plain = g.to_graph();
        const int cap = plain.vertex_count();
        const CoverFamily covers = enumerate_minimal_covers(plain, cap);
        if (!is_unmixed(covers)) fail("constructed graph is not unmixed");

        const auto parts = bipartition(plain);
        if (!parts) {
            fail("constructed graph is not bipartite");
            return out;
        }
        const Relabeling rl = relabel(plain, *parts, covers);
        const CoverFamily covers2 = enumerate_minimal_covers(rl.graph.to_graph(), cap);
        const CoverLattice lat2 = lattice_from_covers(x_parts(rl.graph, covers2), rl.graph.n());
        if (!(graph_from_lattice(lat2) == rl.graph)) fail("round trip B: rebuilt graph differs from relabeled graph");

        const DimensionReport rep = dimension_report(rl.graph, covers2, lat2);
        out.report = rep;
        out.full = rep.cm;

        const DimensionReport direct = compute_dimension_report(g, covers, lat);
        if (direct.rank_B != rep.rank_B || direct.rank_B_trunc != rep.rank_B_trunc ||
            direct.lattice_rank != rep.lattice_rank || direct.dim != rep.dim)
            fail("relabeling changed rank or dimension");
        if (!direct.consistent()) fail("dimension identities fail on the unrelabeled graph");

        if (lat.n() <= opts.hall_max_n) {
            out.hall_checked = true;
            if (auto bad = hall_violation(rl.graph))
                fail("Hall condition fails for U' = " + bad->to_string());
        }

        if (lat.n() <= opts.growth_max_n) {
            out.growth_checked = true;
            const auto growth = growth_oracle(build_matrices(covers2, rl.graph).full, opts.growth_max_degree);
            if (growth.inconclusive())
                out.growth_inconclusive = true;
            else if (*growth.dimension != rep.rank_B)
                fail("growth oracle gives " + std::to_string(*growth.dimension) + ", rank_B is " +
                     std::to_string(rep.rank_B));
        }
    } catch (const InconsistencyError& e) {
        fail(std::string(e.what()) + "\n" + e.instance());
    } catch (const InputError& e) {
        fail(std::string("unexpected input error: ") + e.what());
    }
    return out;
}

struct VerifySummary {
    int instances = 0;
    int passed = 0;
    int full = 0;
    int growth_checked = 0;
    int growth_inconclusive = 0;
    int hall_checked = 0;
    std::vector<InstanceOutcome> failed;

    void add(InstanceOutcome o) {
        ++instances;
        full += o.full;
        growth_checked += o.growth_checked;
        growth_inconclusive += o.growth_inconclusive;
        hall_checked += o.hall_checked;
        if (o.passed())
            ++passed;
        else
            failed.push_back(std::move(o));
    }

    bool ok() const { return failed.empty(); }
};

template <typename OnInstance>
VerifySummary verify_exhaustive(int n, const VerifyOptions& opts, OnInstance&& on_instance) {
    VerifySummary s;
    for_each_sublattice(n, [&](const CoverLattice& lat) {
        auto o = verify_lattice(lat, opts);
        on_instance(o);
        s.add(std::move(o));
    });
    return s;
}

inline VerifySummary verify_exhaustive(int n, const VerifyOptions& opts = {}) {
    return verify_exhaustive(n, opts, [](const InstanceOutcome&) {});
}

/// The i-th random instance of a sweep: n uniform in [n_min, n_max],
/// generator count uniform in [0, 2n], all drawn from mt19937_64(seed).
struct RandomSweep {
    std::mt19937_64 rng;
    int n_min;
    int n_max;

    RandomSweep(std::uint64_t seed, int lo, int hi) : rng(seed), n_min(lo), n_max(hi) {
        if (lo < 1 || hi < lo || hi > 16) throw InputError("random sweep needs 1 <= n_min <= n_max <= 16");
    }

    CoverLattice next() {
        const int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
        const int gens = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n + 1));
        return random_sublattice(n, gens, rng());
    }
};

template <typename OnInstance>
VerifySummary verify_random(int count, std::uint64_t seed, int n_min, int n_max, const VerifyOptions& opts,
                            OnInstance&& on_instance) {
    VerifySummary s;
    RandomSweep sweep(seed, n_min, n_max);
    for (int i = 0; i < count; ++i) {
        auto o = verify_lattice(sweep.next(), opts);
        on_instance(o);
        s.add(std::move(o));
    }
    return s;
}

inline VerifySummary verify_random(int count, std::uint64_t seed, int n_min, int n_max,
                                   const VerifyOptions& opts = {}) {
    return verify_random(count, seed, n_min, n_max, opts, [](const InstanceOutcome&) {});
}

}  // namespace covlat
