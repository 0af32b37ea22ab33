// covlat: minimal vertex covers, cover lattices and semigroup ring
// dimensions of unmixed bipartite graphs.
//
// Exit codes: 0 all checked properties hold, 1 a structural identity was
// violated, 2 bad input or usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "covlat/covlat.hpp"
#include "covlat/report_json.hpp"

namespace {

using namespace covlat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string format = "text";
    int max_vertices = kDefaultMaxVertices;
    std::string input;
    std::string dot_path;
    std::string output_path;

    int n = 0;
    int n_max = 0;
    std::vector<std::uint64_t> random;  // count, seed
    int growth_degree = 10;
    bool quiet = false;

    int generators = 0;
    std::uint64_t seed = 0;
    bool emit_graph = false;

    bool structured() const { return format == "json"; }
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

/// Writes to the -o path when given, else stdout.
void emit(const Options& o, const std::string& text) {
    if (o.output_path.empty())
        std::cout << text;
    else
        write_file(o.output_path, text);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string relabel_comment(const RelabelMap& map) {
    std::string out = "# relabel:";
    for (std::size_t i = 0; i < map.x_vertex.size(); ++i) {
        out += " x" + std::to_string(i + 1) + "=" + std::to_string(map.x_vertex[i] + 1);
        out += " y" + std::to_string(i + 1) + "=" + std::to_string(map.y_vertex[i] + 1);
    }
    return out + "\n";
}

GraphAnalysis require_unmixed_bipartite(const Options& o) {
    auto a = analyze_graph(parse_any_graph(read_input(o.input)), o.max_vertices);
    if (!a.parts) throw InputError("graph is not bipartite");
    if (!a.unmixed) throw InputError("graph is not unmixed");
    return a;
}

int cmd_check(const Options& o) {
    const auto a = analyze_graph(parse_any_graph(read_input(o.input)), o.max_vertices);
    std::optional<bool> cm;
    if (a.unmixed_bipartite()) cm = is_full(*a.lattice);
    if (o.structured()) {
        json j = {{"bipartite", a.parts.has_value()}, {"unmixed", a.unmixed}, {"covers", a.covers.size()}};
        if (cm) j["cm"] = *cm;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "bipartite=" << yes_no(a.parts.has_value()) << " unmixed=" << yes_no(a.unmixed)
                  << " covers=" << a.covers.size();
        if (cm) std::cout << " cm=" << yes_no(*cm);
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_covers(const Options& o) {
    const auto g = parse_any_graph(read_input(o.input));
    const auto covers = enumerate_minimal_covers(g, o.max_vertices);
    if (o.structured()) {
        json list = json::array();
        for (Cover c : covers) {
            json members = json::array();
            c.members.for_each([&](int v) { members.push_back(v + 1); });
            list.push_back(members);
        }
        std::cout << json{{"covers", list}, {"unmixed", is_unmixed(covers)}}.dump() << '\n';
    } else {
        std::cout << serialize_covers(covers);
    }
    return kExitOk;
}

void maybe_write_dot(const Options& o, const CoverLattice& lat) {
    if (!o.dot_path.empty()) write_file(o.dot_path, hasse_to_dot(hasse(lat)));
}

int cmd_lattice(const Options& o) {
    const auto a = require_unmixed_bipartite(o);
    const auto& lat = *a.lattice;
    maybe_write_dot(o, lat);
    const int r = rank(lat);
    if (o.structured()) {
        json elems = json::array();
        for (Subset s : lat.elements()) {
            json e = json::array();
            s.for_each([&](int i) { e.push_back(i + 1); });
            elems.push_back(e);
        }
        std::cout << json{{"n", lat.n()}, {"elements", elems}, {"rank", r}, {"full", r == lat.n()}}.dump() << '\n';
    } else {
        emit(o, relabel_comment(a.relabeling->map) + "# rank=" + std::to_string(r) +
                    " full=" + yes_no(r == lat.n()) + "\n" + serialize_lattice(lat));
    }
    return kExitOk;
}

int cmd_dim(const Options& o) {
    const auto a = require_unmixed_bipartite(o);
    maybe_write_dot(o, *a.lattice);
    const auto rep = dimension_report(a.relabeling->graph, *a.labeled_covers, *a.lattice);
    if (o.structured())
        std::cout << to_json(rep).dump() << '\n';
    else
        std::cout << rep.to_text();
    return rep.theorem_holds ? kExitOk : kExitViolation;
}

int cmd_from_lattice(const Options& o) {
    auto file = parse_lattice_file(read_input(o.input));
    if (auto check = is_sublattice(file.n, file.family); !check) {
        std::cerr << "error: not a sublattice: " << check.certificate->describe() << '\n';
        return kExitInput;
    }
    const auto lat = CoverLattice::from_family(file.n, std::move(file.family));
    maybe_write_dot(o, lat);
    const auto g = graph_from_lattice(lat);
    if (o.structured()) {
        json edges = json::array();
        for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
        emit(o, json{{"n", g.n()}, {"edges", edges}, {"round_trip", true}, {"covers", lat.size()}}.dump() + "\n");
    } else {
        emit(o, serialize_labeled_graph(g) + "# round-trip: ok (" + std::to_string(lat.size()) +
                    " covers reproduce the lattice)\n");
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.growth_max_degree = o.growth_degree;
    auto on_instance = [&](const InstanceOutcome& inst) {
        if (o.structured() && !o.quiet) std::cout << to_json(inst).dump() << '\n';
    };
    VerifySummary s;
    if (!o.random.empty()) {
        if (o.random.size() != 2) throw InputError("--random takes COUNT SEED");
        const int n_min = o.n > 0 ? o.n : 5;
        const int n_max = std::max(n_min, o.n_max);
        s = verify_random(static_cast<int>(o.random[0]), o.random[1], n_min, n_max, vo, on_instance);
    } else {
        if (o.n <= 0) throw InputError("verify needs --n N or --random COUNT SEED");
        s = verify_exhaustive(o.n, vo, on_instance);
    }
    for (const auto& f : s.failed) {
        std::cerr << "FAILED instance:\n" << f.lattice_text;
        for (const auto& msg : f.failures) std::cerr << "  " << msg << '\n';
    }
    if (o.structured()) {
        std::cout << json{{"summary", true},
                          {"instances", s.instances},
                          {"passed", s.passed},
                          {"failed", s.failed.size()},
                          {"full", s.full},
                          {"growth_checked", s.growth_checked},
                          {"growth_inconclusive", s.growth_inconclusive},
                          {"hall_checked", s.hall_checked}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "instances=" << s.instances << " passed=" << s.passed << " failed=" << s.failed.size()
                  << " full=" << s.full << " growth_checked=" << s.growth_checked
                  << " growth_inconclusive=" << s.growth_inconclusive << " hall_checked=" << s.hall_checked << '\n';
    }
    return s.ok() ? kExitOk : kExitViolation;
}

int cmd_gen(const Options& o) {
    const auto lat = random_sublattice(o.n, o.generators, o.seed);
    maybe_write_dot(o, lat);
    emit(o, o.emit_graph ? serialize_labeled_graph(graph_from_lattice(lat)) : serialize_lattice(lat));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal vertex covers, cover lattices and dimensions of unmixed bipartite graphs"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-vertices", o.max_vertices, "Cap on vertices for cover enumeration")
        ->check(CLI::Range(1, 64));

    auto* check = app.add_subcommand("check", "Report bipartite / unmixed / Cohen-Macaulay status");
    check->add_option("graph", o.input, "Edge-list or labeled graph file ('-' for stdin)")->required();

    auto* covers = app.add_subcommand("covers", "List minimal vertex covers");
    covers->add_option("graph", o.input)->required();

    auto* lattice = app.add_subcommand("lattice", "Print the cover lattice of an unmixed bipartite graph");
    lattice->add_option("graph", o.input)->required();
    lattice->add_option("--dot", o.dot_path, "Write the Hasse diagram as Graphviz DOT");
    lattice->add_option("-o,--output", o.output_path, "Write the lattice file here");

    auto* dim = app.add_subcommand("dim", "Dimension report for an unmixed bipartite graph");
    dim->add_option("graph", o.input)->required();
    dim->add_option("--dot", o.dot_path, "Write the Hasse diagram as Graphviz DOT");

    auto* from = app.add_subcommand("from-lattice", "Build the unmixed bipartite graph of a sublattice");
    from->add_option("lattice", o.input, "Lattice file ('-' for stdin)")->required();
    from->add_option("-o,--output", o.output_path, "Write the labeled graph here");
    from->add_option("--dot", o.dot_path, "Write the Hasse diagram as Graphviz DOT");

    auto* verify = app.add_subcommand("verify", "Batch-check the dimension identities over many lattices");
    verify->add_option("--n", o.n, "Exhaustive over all sublattices for this n (<= 4); "
                                                   "with --random, the smallest n drawn")
        ->check(CLI::Range(1, 16));
    verify->add_option("--random", o.random, "COUNT SEED: random sublattices instead")->expected(2);
    verify->add_option("--n-max", o.n_max, "Largest n drawn with --random")->check(CLI::Range(1, 16));
    verify->add_option("--growth-degree", o.growth_degree, "Degree bound for the growth oracle")
        ->check(CLI::Range(3, 12));
    verify->add_flag("--quiet", o.quiet, "Suppress per-instance records in json mode");

    auto* gen = app.add_subcommand("gen", "Generate a random sublattice (or its graph)");
    gen->add_option("--n", o.n, "Ground set size")->required()->check(CLI::Range(1, 16));
    gen->add_option("--generators", o.generators, "Number of random generators")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_flag("--graph", o.emit_graph, "Emit the labeled graph instead of the lattice");
    gen->add_option("-o,--output", o.output_path, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*check) return cmd_check(o);
        if (*covers) return cmd_covers(o);
        if (*lattice) return cmd_lattice(o);
        if (*dim) return cmd_dim(o);
        if (*from) return cmd_from_lattice(o);
        if (*verify) return cmd_verify(o);
        if (*gen) return cmd_gen(o);
    } catch (const InconsistencyError& e) {
        std::cerr << "VIOLATION: " << e.what() << "\ninstance:\n" << e.instance();
        return kExitViolation;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
