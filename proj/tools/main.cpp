#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "somspec/catalog.hpp"
#include "somspec/graph.hpp"
#include "somspec/group.hpp"
#include "somspec/spectral.hpp"
#include "somspec/verify.hpp"

namespace {

using namespace somspec;

struct CellFlags {
    std::string family = "D";
    std::string kind = "commuting";
    std::string relation = "equality";
    int n = 3;
};

struct TolFlags {
    double eigen_tol = 1e-12;
    double cluster_tol = 1e-6;
    double match_tol = 1e-6;

    Tolerances to_tolerances() const { return {eigen_tol, cluster_tol, match_tol}; }
};

void add_cell_flags(CLI::App* cmd, CellFlags& cell) {
    cmd->add_option("--family", cell.family, "group family: D, Q, SD or Z")->required();
    cmd->add_option("--n", cell.n, "family parameter n")->required();
    cmd->add_option("--kind", cell.kind, "base graph: power, enhanced or commuting")->required();
    cmd->add_option("--relation", cell.relation, "relation: equality, order or conjugacy")->required();
}

void add_tol_flags(CLI::App* cmd, TolFlags& tol) {
    cmd->add_option("--eigen-tol", tol.eigen_tol, "Jacobi off-diagonal target (relative)");
    cmd->add_option("--cluster-tol", tol.cluster_tol, "cluster tolerance (relative)");
    cmd->add_option("--match-tol", tol.match_tol, "claim match tolerance (relative)");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

SimpleGraph build_cell_graph(const CellFlags& cell) {
    auto group = make_group({family_from_code(cell.family), cell.n});
    return build_group_graph(group, kind_from_code(cell.kind), relation_from_code(cell.relation));
}

std::string graph_to_json(const SimpleGraph& g) {
    nlohmann::json j;
    j["order"] = g.vertex_count();
    j["size"] = g.edge_count();
    if (g.has_labels()) j["labels"] = g.labels();
    auto edges = nlohmann::json::array();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int k = i + 1; k < g.vertex_count(); ++k)
            if (g.adjacent(i, k)) edges.push_back({i, k});
    j["edges"] = edges;
    return j.dump(2);
}

std::string spectrum_to_json(const CellFlags& cell, const SpectrumSummary& summary) {
    nlohmann::json j;
    j["family"] = cell.family;
    j["kind"] = cell.kind;
    j["relation"] = cell.relation;
    j["n"] = cell.n;
    j["dim"] = summary.dim;
    j["clusterTol"] = std::strtod(format_real(summary.cluster_tol).c_str(), nullptr);
    auto pairs = nlohmann::json::array();
    for (const auto& c : summary.pairs) {
        pairs.push_back({{"value", std::strtod(format_real(c.value).c_str(), nullptr)},
                         {"multiplicity", c.multiplicity}});
    }
    j["pairs"] = pairs;
    return j.dump(2);
}

std::set<std::string> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden expectations file '" + path + "'");
    nlohmann::json j;
    in >> j;
    std::set<std::string> out;
    for (const auto& e : j) out.insert(e.get<std::string>());
    return out;
}

int strict_verdict(const std::vector<std::string>& flagged, const std::set<std::string>& golden) {
    std::set<std::string> got(flagged.begin(), flagged.end());
    bool drift = false;
    for (const auto& k : got)
        if (!golden.count(k)) {
            std::cerr << "unexpected flagged cell: " << k << "\n";
            drift = true;
        }
    for (const auto& k : golden)
        if (!got.count(k)) {
            std::cerr << "expected flagged cell is no longer flagged: " << k << "\n";
            drift = true;
        }
    return drift ? 1 : 0;
}

template <typename T>
std::vector<T> parse_codes(const std::vector<std::string>& codes, T (*parse)(const std::string&)) {
    std::vector<T> out;
    for (const auto& c : codes) out.push_back(parse(c));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphs on finite groups, Sombor spectra and closed-form verification"};
    app.require_subcommand(1);

    CellFlags cell;
    TolFlags tol;
    std::string format;
    std::string output_path;
    std::string golden_path;
    bool strict = false;

    auto* build = app.add_subcommand("build", "construct a graph and print it");
    add_cell_flags(build, cell);
    build->add_option("--format", format, "edgelist (default) or json");
    build->add_option("--output", output_path, "write to file instead of stdout");

    auto* spectrum = app.add_subcommand("spectrum", "clustered Sombor spectrum of a graph");
    add_cell_flags(spectrum, cell);
    add_tol_flags(spectrum, tol);
    spectrum->add_option("--format", format, "json (default: clustered spectrum) or csv (Sombor matrix)");
    spectrum->add_option("--output", output_path, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "verify one closed-form prediction against the oracle");
    add_cell_flags(verify, cell);
    add_tol_flags(verify, tol);
    verify->add_option("--format", format, "json (default)");
    verify->add_option("--output", output_path, "write to file instead of stdout");
    verify->add_flag("--strict", strict, "fail unless the flagged set matches the golden file");
    verify->add_option("--golden", golden_path, "golden expectations file for --strict");

    std::vector<std::string> families{"D", "Q", "SD"};
    std::vector<std::string> kinds{"power", "enhanced", "commuting"};
    std::vector<std::string> relations{"equality", "order", "conjugacy"};
    int n_min = 2, n_max = 6;

    auto* suite = app.add_subcommand("suite", "run the verification suite over a cell range");
    suite->add_option("--families", families, "family codes (default D Q SD)");
    suite->add_option("--kinds", kinds, "graph kinds");
    suite->add_option("--relations", relations, "relations");
    suite->add_option("--n-min", n_min, "smallest n (clamped to each family's minimum)");
    suite->add_option("--n-max", n_max, "largest n");
    add_tol_flags(suite, tol);
    suite->add_option("--output", output_path, "write to file instead of stdout");
    suite->add_flag("--strict", strict, "fail unless the flagged set matches the golden file");
    suite->add_option("--golden", golden_path, "golden expectations file for --strict");

    int catalog_n = 3;
    auto* export_cmd = app.add_subcommand("export-catalog", "dump the theorem catalog instantiated near n");
    export_cmd->add_option("--n", catalog_n, "instantiation parameter (default 3)");
    export_cmd->add_option("--output", output_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) {
            auto g = build_cell_graph(cell);
            if (format.empty() || format == "edgelist")
                emit(to_edge_list(g), output_path);
            else if (format == "json")
                emit(graph_to_json(g), output_path);
            else
                throw std::invalid_argument("build supports --format edgelist or json");
            return 0;
        }
        if (spectrum->parsed()) {
            auto g = build_cell_graph(cell);
            auto S = sombor_matrix(g);
            if (format == "csv") {
                emit(to_csv(S), output_path);
                return 0;
            }
            if (!format.empty() && format != "json")
                throw std::invalid_argument("spectrum supports --format json or csv");
            auto eigs = eigen_sym(S, tol.eigen_tol);
            auto summary = cluster_spectrum(eigs, tol.cluster_tol * std::max(1.0, S.max_abs_row_sum()));
            emit(spectrum_to_json(cell, summary), output_path);
            return 0;
        }
        if (verify->parsed()) {
            if (!format.empty() && format != "json")
                throw std::invalid_argument("verify supports --format json only");
            VerificationTask task{family_from_code(cell.family), kind_from_code(cell.kind),
                                  relation_from_code(cell.relation), cell.n, tol.to_tolerances()};
            // an uncovered cell is a usage-level error for the single-cell command
            predict(task.family, task.kind, task.relation, task.n);
            auto report = run_task(task);
            emit(report_to_json(report), output_path);
            if (strict) {
                if (golden_path.empty()) throw std::invalid_argument("--strict needs --golden FILE");
                SuiteResult one;
                one.reports = {report};
                return strict_verdict(flagged_keys(one), load_golden(golden_path));
            }
            return 0;
        }
        if (suite->parsed()) {
            auto result = run_suite(parse_codes(families, family_from_code), n_min, n_max,
                                    parse_codes(kinds, kind_from_code),
                                    parse_codes(relations, relation_from_code), tol.to_tolerances());
            emit(suite_to_json(result), output_path);
            std::cerr << "suite: " << result.pass << " pass, " << result.flagged << " flagged, "
                      << result.not_covered << " not covered\n";
            if (strict) {
                if (golden_path.empty()) throw std::invalid_argument("--strict needs --golden FILE");
                return strict_verdict(flagged_keys(result), load_golden(golden_path));
            }
            return 0;
        }
        if (export_cmd->parsed()) {
            emit(somspec::export_catalog(catalog_n), output_path);
            return 0;
        }
    } catch (const CatalogMiss& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
