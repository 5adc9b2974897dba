#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "qlogic/error.hpp"
#include "qlogic/grassmann.hpp"
#include "qlogic/suites.hpp"

using namespace qlogic;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string suite;
    std::optional<std::uint32_t> n, k, p;
    std::optional<std::string> field;
    std::uint64_t seed = 7;
    std::optional<std::size_t> samples;
    std::size_t jobs = 1;
    std::string out;
    std::string dot;
    bool quick = false;
    std::string cache_dir = ".qlogic-cache";
    std::string apartment_case;
    std::string transform_kind;
};

SuiteConfig to_config(const Options& o) {
    SuiteConfig c;
    c.seed = o.seed;
    c.samples = o.samples;
    c.n = o.n;
    c.k = o.k;
    c.p = o.p;
    c.quick = o.quick;
    c.jobs = o.jobs;
    if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
    return c;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

void print_summary(const Json& report) {
    if (report.contains("suites")) {
        for (const auto& r : report["suites"]) print_summary(r);
        return;
    }
    std::cout << report["suite"].get<std::string>() << ": " << (report["passed"].get<bool>() ? "PASS" : "FAIL")
              << " (" << report["samples"] << " samples, " << report["failures"] << " failures)\n";
    for (const auto& c : report["checks"])
        if (!c["passed"].get<bool>()) std::cout << "  failed: " << c["name"].get<std::string>() << "\n";
}

int emit_report(const Json& report, const Options& o) {
    if (o.out.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        write_text(o.out, report.dump(2) + "\n");
        print_summary(report);
    }
    return report["passed"].get<bool>() ? kExitPass : kExitFailures;
}

/// Keeps only the checks whose names start with one of `prefixes`.
Json filter_checks(Json report, const std::vector<std::string>& prefixes) {
    Json kept = Json::array();
    std::size_t samples = 0;
    std::size_t failures = 0;
    bool passed = true;
    for (const auto& c : report["checks"]) {
        const auto name = c["name"].get<std::string>();
        bool match = false;
        for (const auto& prefix : prefixes) match = match || name.rfind(prefix, 0) == 0;
        if (!match) continue;
        samples += c["samples"].get<std::size_t>();
        failures += c["failures"].get<std::size_t>() + (c["samples"].get<std::size_t>() == 0 ? 1 : 0);
        passed = passed && c["passed"].get<bool>();
        kept.push_back(c);
    }
    report["passed"] = passed && !kept.empty();
    report["checks_total"] = kept.size();
    report["samples"] = samples;
    report["failures"] = failures;
    report["checks"] = kept;
    return report;
}

int run_verify(const Options& o) {
    const SuiteConfig config = to_config(o);
    return emit_report(o.suite == "all" ? run_all(config) : run_suite(o.suite, config), o);
}

FieldTag subspace_field(const Options& o) {
    if (o.field && o.p) throw Error(ErrorKind::InvalidArgument, "give either --field or --p");
    if (o.field) return FieldTag::parse(*o.field);
    if (o.p) return FieldTag::prime(*o.p);
    throw Error(ErrorKind::InvalidArgument, "--field or --p is required");
}

int run_subspaces(const Options& o) {
    const FieldTag field = subspace_field(o);
    if (!field.is_finite()) throw Error(ErrorKind::InvalidArgument, "enumeration needs a finite field GF(p)");
    if (*o.k > *o.n) throw Error(ErrorKind::InvalidArgument, "--k must be at most --n");
    for_each_subspace(*o.n, *o.k, field.modulus, [](const Subspace& x) { std::cout << to_json(x).dump() << "\n"; });
    return kExitPass;
}

std::string escape_quotes(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out;
}

int run_graph(const Options& o) {
    const auto g = GrassmannGraph::build(*o.n, *o.k, *o.p);
    if (!o.dot.empty()) {
        std::string out = "graph grassmann {\n";
        for (std::size_t i = 0; i < g.size(); ++i)
            out += "  v" + std::to_string(i) + " [label=\"" + escape_quotes(to_json(g.vertex(i))["rows"].dump()) + "\"];\n";
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g.adjacent(i, j)) out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
        write_text(o.dot, out + "}\n");
    }
    if (!o.out.empty()) {
        Json vertices = Json::array();
        for (const auto& v : g.vertices()) vertices.push_back(to_json(v));
        Json edges = Json::array();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g.adjacent(i, j)) edges.push_back({i, j});
        write_text(o.out, Json{{"n", g.n()}, {"k", g.k()}, {"p", g.p()}, {"vertices", vertices}, {"edges", edges}}.dump(2) + "\n");
    }
    std::cout << "vertices " << g.size() << "\nedges " << g.edge_count() << "\ndiameter " << g.diameter() << "\n";
    return kExitPass;
}

int run_cliques(const Options& o) {
    const auto g = GrassmannGraph::build(*o.n, *o.k, *o.p);
    std::map<std::pair<std::string, std::size_t>, std::size_t> table;
    for (const auto& c : maximal_cliques(g)) ++table[{c.kind == CliqueKind::Star ? "star" : "top", c.members.size()}];
    std::cout << "kind  size  count\n";
    for (const auto& [key, count] : table) std::cout << key.first << "  " << key.second << "  " << count << "\n";
    return kExitPass;
}

int run_apartments(const Options& o) {
    return emit_report(run_suite(o.apartment_case == "linear" ? "apartments" : "ortho-apartments", to_config(o)), o);
}

int run_transforms(const Options& o) {
    static const std::map<std::string, std::vector<std::string>> sections{
        {"unitary", {"unitary/"}}, {"dual", {"dual/"}}, {"pi", {"pi/", "swap/"}}, {"factor", {"factor/"}}};
    return emit_report(filter_checks(run_suite("transforms", to_config(o)), sections.at(o.transform_kind)), o);
}

void add_shape(CLI::App* cmd, Options& o, bool required) {
    auto* n = cmd->add_option("--n", o.n, "Ambient dimension")->check(CLI::Range(1u, 20u));
    auto* k = cmd->add_option("--k", o.k, "Subspace dimension")->check(CLI::Range(0u, 20u));
    if (required) {
        n->required();
        k->required();
    }
}

void add_prime(CLI::App* cmd, Options& o, bool required) {
    auto* p = cmd->add_option("--p", o.p, "Prime field size")->check(CLI::Range(2u, 97u));
    if (required) p->required();
}

void add_run(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_option("--samples", o.samples, "Override the main sample count")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "Write the JSON report here");
    cmd->add_flag("--quick", o.quick, "Reduced samples");
    cmd->add_option("--cache-dir", o.cache_dir, "Cache for exhaustive enumerations (empty disables)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of subspace lattices, Grassmann graphs and apartments"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> action;

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", o.suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suites));
    add_shape(verify, o, false);
    add_prime(verify, o, false);
    add_run(verify, o);
    verify->add_option("--jobs", o.jobs, "Suites run in parallel")->check(CLI::PositiveNumber);
    verify->callback([&] { action = run_verify; });

    auto* subspaces = app.add_subcommand("subspaces", "Stream every k-subspace of GF(p)^n as JSON lines");
    add_shape(subspaces, o, true);
    add_prime(subspaces, o, false);
    subspaces->add_option("--field", o.field, "Field, e.g. GF(3)");
    subspaces->callback([&] { action = run_subspaces; });

    auto* graph = app.add_subcommand("graph", "Build a Grassmann graph and export it");
    add_shape(graph, o, true);
    add_prime(graph, o, true);
    graph->add_option("--dot", o.dot, "Write Graphviz DOT here");
    graph->add_option("--out", o.out, "Write JSON adjacency here");
    graph->callback([&] { action = run_graph; });

    auto* cliques = app.add_subcommand("cliques", "Summarise maximal cliques by kind and size");
    add_shape(cliques, o, true);
    add_prime(cliques, o, true);
    cliques->callback([&] { action = run_cliques; });

    auto* apartments = app.add_subcommand("apartments", "Apartment checks");
    apartments->require_subcommand(1);
    auto* apartments_verify = apartments->add_subcommand("verify", "Run the linear or orthogonal apartment suite");
    apartments_verify->add_option("--case", o.apartment_case, "linear or ortho")
        ->required()
        ->check(CLI::IsMember({"linear", "ortho"}));
    add_shape(apartments_verify, o, false);
    add_prime(apartments_verify, o, false);
    add_run(apartments_verify, o);
    apartments_verify->callback([&] { action = run_apartments; });

    auto* transforms = app.add_subcommand("transforms", "Semilinear map checks");
    transforms->require_subcommand(1);
    auto* transforms_check = transforms->add_subcommand("check", "Run one part of the transforms suite");
    transforms_check->add_option("--kind", o.transform_kind, "unitary, dual, pi or factor")
        ->required()
        ->check(CLI::IsMember({"unitary", "dual", "pi", "factor"}));
    add_shape(transforms_check, o, false);
    add_run(transforms_check, o);
    transforms_check->callback([&] { action = run_transforms; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return action(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::SizeCapExceeded ||
                       e.kind() == ErrorKind::AssumptionViolated || e.kind() == ErrorKind::ParseError
                   ? kExitUsage
                   : kExitFailures;
    }
}
