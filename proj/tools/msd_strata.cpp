// msd-strata: batch front end for the enhanced level graph library.
//
// Exit codes: 0 success, 1 bad input or invalid graph, 2 a mathematical
// check failed, 3 the two residue checkers disagree.

#include "msd/analysis.hpp"
#include "msd/degenerations.hpp"
#include "msd/enumerate.hpp"
#include "msd/io.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;
constexpr int kInconsistent = 3;

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            throw msd::InputError(std::string("bad entry \"") + item + "\" in " + what);
        }
        if constexpr (std::is_unsigned_v<T>) {
            if (value < 0) {
                throw msd::InputError(std::string("negative entry in ") + what);
            }
        }
        out.push_back(static_cast<T>(value));
    }
    return out;
}

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << hash;
    return os.str();
}

msd::EnhancedLevelGraph load_valid(const std::string& path)
{
    auto graph = msd::load_graph(path);
    const auto report = msd::validate(graph);
    if (!report.valid) {
        msd::AnalysisReport invalid;
        invalid.validation = report;
        std::cerr << msd::report_to_text(invalid);
        throw msd::InputError(path + " is not a valid enhanced level graph");
    }
    return graph;
}

int cmd_analyze(const std::string& path, bool json)
{
    const auto graph = msd::load_graph(path);
    const auto report = msd::analyze(graph);
    if (json) {
        std::cout << msd::report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << msd::report_to_text(report);
    }
    return report.validation.valid ? kOk : kInputError;
}

int cmd_enumerate(std::int64_t genus, const std::string& mu_text, std::int64_t max_codim,
                  const std::string& out_dir)
{
    msd::SignatureMu mu{parse_list<std::int64_t>(mu_text, "--mu"), genus};
    const auto graphs = msd::enumerate_enhanced_level_graphs(mu, max_codim);
    fs::create_directories(out_dir);
    msd::Json index;
    index["genus"] = genus;
    index["mu"] = mu.m;
    index["max_codim"] = max_codim;
    index["graphs"] = msd::Json::array();
    for (const auto& form : graphs) {
        const auto file = fnv1a_hex(form.key) + ".json";
        msd::save_graph(fs::path(out_dir) / file, form.graph);
        index["graphs"].push_back(
            {{"file", file}, {"codim", msd::codim(form.graph)}, {"key", form.key}});
    }
    std::ofstream out(fs::path(out_dir) / "index.json");
    out << index.dump(2) << "\n";
    std::cout << graphs.size() << " graphs written to " << out_dir << "\n";
    return kOk;
}

int cmd_grc(const std::string& graph_path, const std::string& residues_path)
{
    const auto graph = load_valid(graph_path);
    const auto rho = msd::load_residues(residues_path);
    msd::GrcReport direct;
    msd::GrcReport homological;
    try {
        direct = msd::check_grc(graph, rho);
        homological = msd::check_grc_homological(graph, rho);
    } catch (const std::invalid_argument& e) {
        throw msd::InputError(e.what());
    }

    // The relation form presupposes the residue theorem at pole-free vertices.
    std::vector<std::size_t> broken;
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        if (!graph.has_pole_leg(v) && !msd::vertex_residue_sum(graph, rho, v)->is_zero()) {
            broken.push_back(v);
        }
    }
    for (auto v : direct.residue_theorem_failures) {
        if (std::find(broken.begin(), broken.end(), v) == broken.end()) {
            broken.push_back(v);
        }
    }
    for (auto v : broken) {
        std::cout << "fail: residues at vertex " << v << " do not sum to zero\n";
    }

    const bool poleless_ok =
        std::none_of(broken.begin(), broken.end(), [&](auto v) { return !graph.has_pole_leg(v); });
    if (poleless_ok && direct.violated.empty() != homological.passed) {
        std::cout << "inconsistent: direct check " << (direct.violated.empty() ? "passes" : "fails")
                  << ", relation check " << (homological.passed ? "passes" : "fails") << "\n";
        return kInconsistent;
    }
    for (const auto& c : direct.violated) {
        std::cout << "fail: condition at level " << c.level << ", component {";
        for (std::size_t k = 0; k < c.component_vertices.size(); ++k) {
            std::cout << (k ? "," : "") << c.component_vertices[k];
        }
        std::cout << "}, edges {";
        for (std::size_t k = 0; k < c.edges.size(); ++k) {
            std::cout << (k ? "," : "") << c.edges[k];
        }
        std::cout << "}\n";
    }
    if (direct.violated.empty() && broken.empty()) {
        std::cout << "pass\n";
        return kOk;
    }
    return kCheckFailed;
}

int cmd_undegenerate(const std::string& path, const std::optional<std::string>& keep,
                     const std::optional<std::string>& smooth)
{
    const auto graph = load_valid(path);
    std::vector<std::int64_t> levels;
    if (keep) {
        levels = parse_list<std::int64_t>(*keep, "--keep-levels");
    } else {
        for (std::int64_t i = -1; i >= -graph.depth(); --i) {
            levels.push_back(i);
        }
    }
    std::vector<std::size_t> edges;
    if (smooth) {
        edges = parse_list<std::size_t>(*smooth, "--smooth-horizontal");
    }
    try {
        auto vertical = msd::undegenerate_by_level_subset(graph, levels);
        std::vector<std::size_t> image;
        for (auto e : edges) {
            if (e >= graph.num_edges() || !graph.is_horizontal(e)) {
                throw std::invalid_argument("edge " + std::to_string(e) + " is not horizontal");
            }
            image.push_back(*vertical.map.edge_map[e]);
        }
        auto result = msd::undegenerate_horizontal(vertical.graph, image);
        std::cout << msd::graph_to_json(result.graph).dump(2) << "\n";
    } catch (const std::invalid_argument& e) {
        throw msd::InputError(e.what());
    }
    return kOk;
}

int cmd_dot(const std::string& path)
{
    std::cout << msd::to_dot(msd::load_graph(path));
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of enhanced level graphs"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;
    auto* analyze = app.add_subcommand("analyze", "Full invariant report for one graph");
    analyze->add_option("file", path, "Graph JSON file")->required();
    analyze->add_flag("--json", json, "Machine-readable output");

    std::int64_t genus = 0;
    std::string mu_text;
    std::int64_t max_codim = 0;
    std::string out_dir;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate graphs of a signature");
    enumerate->add_option("--genus", genus, "Genus")->required();
    enumerate->add_option("--mu", mu_text, "Orders, comma separated")->required()->allow_extra_args(false);
    enumerate->add_option("--max-codim", max_codim, "Largest codimension")->required();
    enumerate->add_option("--out", out_dir, "Output directory")->required();

    std::string residues;
    auto* grc = app.add_subcommand("grc", "Check the global residue condition");
    grc->add_option("graph", path, "Graph JSON file")->required();
    grc->add_option("--residues", residues, "Residue JSON file")->required();

    std::optional<std::string> keep;
    std::optional<std::string> smooth;
    auto* undegenerate = app.add_subcommand("undegenerate", "Merge levels and smooth edges");
    undegenerate->add_option("graph", path, "Graph JSON file")->required();
    undegenerate->add_option("--keep-levels", keep, "Level passages to keep, e.g. -1,-2");
    undegenerate->add_option("--smooth-horizontal", smooth, "Horizontal edges to smooth");

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    dot->add_option("graph", path, "Graph JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(path, json);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(genus, mu_text, max_codim, out_dir);
        }
        if (grc->parsed()) {
            return cmd_grc(path, residues);
        }
        if (undegenerate->parsed()) {
            return cmd_undegenerate(path, keep, smooth);
        }
        if (dot->parsed()) {
            return cmd_dot(path);
        }
    } catch (const msd::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const msd::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const msd::EnumerationBoundsExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
