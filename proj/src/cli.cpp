#include "weightlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "weightlab/compactness.hpp"
#include "weightlab/errors.hpp"
#include "weightlab/io.hpp"
#include "weightlab/presented.hpp"
#include "weightlab/solver.hpp"
#include "weightlab/splitting.hpp"

namespace weightlab {
namespace {

int parse_positive(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
        throw InputError("bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

struct Shared {
    std::string mode = "edge123";
    std::uint64_t budget = SearchConfig{}.node_budget;
    std::string output;
    std::optional<std::uint64_t> seed;
};

void add_mode(CLI::App* cmd, Shared& s) {
    cmd->add_option("--mode", s.mode, "edge123 | edgeK:<k> | total:<a>,<b> | lists-from-file");
}

void add_search(CLI::App* cmd, Shared& s) {
    cmd->add_option("--budget", s.budget, "node budget per search")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", s.seed, "shuffle value order with this seed");
}

SearchConfig search_config(const Shared& s) {
    SearchConfig cfg;
    cfg.node_budget = s.budget;
    cfg.seed = s.seed;
    return cfg;
}

void emit(const OrderedJson& j, const Shared& s, std::ostream& out) {
    if (s.output.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(s.output);
    if (!file) throw InputError("cannot write '" + s.output + "'");
    file << j.dump(2) << '\n';
}

OrderedJson status_json(const SolveOutcome& r) {
    OrderedJson j;
    j["status"] = to_string(r.status);
    j["diagnostic"] = r.diagnostic;
    j["nodes"] = r.nodes;
    return j;
}

int exit_for(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return exit_code::kOk;
        case SolveStatus::Unsat: return exit_code::kNegative;
        case SolveStatus::Aborted: return exit_code::kUnknown;
    }
    return exit_code::kInput;
}

}  // namespace

ListAssignment lists_for_mode(std::string_view mode, const FiniteGraph& g, const ListAssignment& file_lists) {
    if (mode == "edge123") return ListAssignment::edge123(g);
    if (mode.starts_with("edgeK:")) return ListAssignment::edge_k(g, parse_positive(mode.substr(6), "k"));
    if (mode.starts_with("total:")) {
        auto rest = mode.substr(6);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw InputError("mode total needs <a>,<b>");
        return ListAssignment::total(g, parse_positive(rest.substr(0, comma), "a"),
                                     parse_positive(rest.substr(comma + 1), "b"));
    }
    if (mode == "lists-from-file") {
        file_lists.require_total_on(g);
        return file_lists.restricted_to(g);
    }
    throw InputError("unknown mode '" + std::string(mode) + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Neighbour-sum-distinguishing weightings: solve, verify, enumerate, compactness and splitting"};
    app.require_subcommand(1);
    Shared s;

    std::string graph_path;
    std::string weighting_path;
    std::string pin_path;
    unsigned portfolio = 1;
    std::optional<std::size_t> limit;
    std::string family;
    std::string center;
    unsigned radius = 0;
    unsigned j = 2;
    unsigned nmax = 0;
    bool chain = false;
    double max_space = PersistenceOptions{}.max_candidate_space;

    auto* solve_cmd = app.add_subcommand("solve", "search for a valid weighting");
    solve_cmd->add_option("graph", graph_path, "graph file (JSON or edge list)")->required();
    add_mode(solve_cmd, s);
    add_search(solve_cmd, s);
    solve_cmd->add_option("--pin", pin_path, "weighting file with values to keep fixed");
    solve_cmd->add_option("--portfolio", portfolio, "concurrent seeded runs")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "check a weighting against a graph");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("weighting", weighting_path)->required();
    auto* verify_mode = verify_cmd->add_option("--mode", s.mode, "also check list membership");

    auto* enum_cmd = app.add_subcommand("enumerate", "list every valid weighting");
    enum_cmd->add_option("graph", graph_path)->required();
    add_mode(enum_cmd, s);
    enum_cmd->add_option("--limit", limit, "stop after this many");

    auto* ball_cmd = app.add_subcommand("ball", "ball of a presented graph");
    ball_cmd->add_option("--family", family, "path | grid2d | tree:<d> | ladder")->required();
    ball_cmd->add_option("--center", center);
    ball_cmd->add_option("--radius", radius)->required();

    auto* compact_cmd = app.add_subcommand("compact", "restriction sets over growing balls");
    compact_cmd->add_option("--family", family)->required();
    compact_cmd->add_option("--center", center);
    compact_cmd->add_option("--j", j, "inner radius");
    compact_cmd->add_option("--nmax", nmax, "largest outer radius")->required();
    add_mode(compact_cmd, s);
    add_search(compact_cmd, s);
    compact_cmd->add_flag("--chain", chain, "also extract a nested chain");
    compact_cmd->add_option("--max-space", max_space, "largest candidate space on the inner ball");

    auto* split_cmd = app.add_subcommand("split", "strip, split, solve and lift");
    split_cmd->add_option("graph", graph_path)->required();
    add_mode(split_cmd, s);
    add_search(split_cmd, s);

    for (auto* cmd : {solve_cmd, verify_cmd, enum_cmd, ball_cmd, compact_cmd, split_cmd}) {
        cmd->add_option("--output", s.output, "write JSON here instead of stdout");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kInput;
    }

    try {
        if (*solve_cmd) {
            GraphDocument doc = read_graph_file(graph_path);
            ListAssignment lists = lists_for_mode(s.mode, doc.graph, doc.lists);
            Weighting pinned = pin_path.empty() ? Weighting() : read_weighting_file(pin_path);
            SearchConfig cfg = search_config(s);
            SolveOutcome r = portfolio > 1 ? solve_portfolio(doc.graph, lists, cfg, portfolio, pinned)
                                           : solve(doc.graph, lists, cfg, pinned);
            emit(r.found() ? weighting_to_json(r.witness) : status_json(r), s, out);
            if (!r.found()) err << to_string(r.status) << ": " << r.diagnostic << '\n';
            return exit_for(r.status);
        }
        if (*verify_cmd) {
            GraphDocument doc = read_graph_file(graph_path);
            Weighting w = read_weighting_file(weighting_path);
            if (!w.is_total_on(doc.graph)) throw InputError("weighting does not cover every vertex and edge");
            ValidityReport report = check_validity(doc.graph, w);
            OrderedJson j = validity_to_json(report);
            bool in_lists = true;
            if (verify_mode->count() > 0 || doc.has_all_lists()) {
                std::string mode = verify_mode->count() > 0 ? s.mode : "lists-from-file";
                in_lists = restrict(w, doc.graph).respects(lists_for_mode(mode, doc.graph, doc.lists));
                j["within_lists"] = in_lists;
            }
            emit(j, s, out);
            return report.valid && in_lists ? exit_code::kOk : exit_code::kNegative;
        }
        if (*enum_cmd) {
            GraphDocument doc = read_graph_file(graph_path);
            ListAssignment lists = lists_for_mode(s.mode, doc.graph, doc.lists);
            auto all = enumerate_all(doc.graph, lists, limit);
            OrderedJson j;
            j["count"] = all.size();
            j["truncated"] = limit.has_value() && all.size() == *limit;
            OrderedJson items = OrderedJson::array();
            for (const auto& w : all) items.push_back(weighting_to_json(w));
            j["weightings"] = std::move(items);
            emit(j, s, out);
            return exit_code::kOk;
        }
        if (*ball_cmd) {
            PresentedGraph p = PresentedGraph::parse(family);
            VertexId c = center.empty() ? p.default_center() : VertexId(center);
            emit(ball_to_json(ball(p, c, radius)), s, out);
            return exit_code::kOk;
        }
        if (*compact_cmd) {
            PresentedGraph p = PresentedGraph::parse(family);
            VertexId c = center.empty() ? p.default_center() : VertexId(center);
            if (s.mode == "lists-from-file") throw InputError("compact needs a generated mode, not lists-from-file");
            if (j < 2 || nmax < j) throw InputError("need 2 <= j <= nmax");
            Ball outer = ball(p, c, nmax);
            ListAssignment lists = lists_for_mode(s.mode, outer.graph);
            PersistenceOptions options;
            options.max_candidate_space = max_space;
            options.search = search_config(s);
            PersistenceReport report = persistence(p, c, j, nmax, lists, options);
            OrderedJson out_json = persistence_to_json(report);
            out_json["mode"] = s.mode;
            if (chain) {
                OrderedJson items = OrderedJson::array();
                for (const auto& w : konig_chain(p, c, nmax, lists, options.search)) {
                    items.push_back(weighting_to_json(w));
                }
                out_json["chain"] = std::move(items);
            }
            emit(out_json, s, out);
            return report.exact ? exit_code::kOk : exit_code::kUnknown;
        }
        if (*split_cmd) {
            GraphDocument doc = read_graph_file(graph_path);
            ListAssignment lists = lists_for_mode(s.mode, doc.graph, doc.lists);
            SplitReport report = split_and_solve(doc.graph, lists, search_config(s));
            emit(split_report_to_json(report), s, out);
            if (report.status != SolveStatus::Found) return exit_for(report.status);
            return report.lifted->report.valid ? exit_code::kOk : exit_code::kNegative;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUnknown;
    }
    return exit_code::kInput;
}

}  // namespace weightlab
