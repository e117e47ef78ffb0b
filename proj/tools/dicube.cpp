// dicube: build, analyze, collapse and render directed cubical state spaces.
//
//   generate    PV program or builtin fixture -> complex JSON
//   analyze     past-link verdicts, obstructions, reachability
//   collapse    greedy directed collapse with a step log
//   check-pair  verdict for one collapsing pair
//   export      TikZ rendering of 2-dimensional complexes

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "dicube/dicube.hpp"

namespace {

using namespace dicube;

constexpr int kExitOk = 0;
constexpr int kExitObstruction = 1;
constexpr int kExitInput = 2;

CollapseMode parse_mode(const std::string& mode) {
    if (mode == "0" || mode == "zero") return CollapseMode::Zero;
    if (mode == "homotopy") return CollapseMode::Homotopy;
    throw Error("mode must be 0 or homotopy, got '" + mode + "'");
}

void dump_links(const CubicalComplex& K, const Vertex& w, std::uint64_t budget) {
    for (const auto& [v, lk] : past_links_all(K, w)) {
        const auto st = contractibility_status(lk, budget);
        std::cout << format_vertex(v) << ": " << to_string(st.kind);
        if (st.kind == ContractibilityStatus::Kind::NotContractible)
            std::cout << " (reduced beta_" << st.nonzero_betti << " != 0)";
        if (!lk.empty())
            std::cout << (is_connected(lk) ? ", connected" : ", disconnected");
        std::cout << '\n';
        std::istringstream lines(to_debug_string(lk));
        for (std::string line; std::getline(lines, line);) std::cout << "  " << line << '\n';
    }
}

struct GenerateArgs {
    std::string pv_path, builtin_name, out_path;
};

int run_generate(const GenerateArgs& a) {
    CubicalComplex K;
    if (!a.pv_path.empty()) {
        K = state_space_complex(program_from_json(load_json_file(a.pv_path)));
    } else if (!a.builtin_name.empty()) {
        K = builtin(a.builtin_name);
    } else {
        throw Error("generate needs --pv or --builtin");
    }
    const json j = complex_to_json(K);
    if (a.out_path.empty()) std::cout << j.dump(2) << '\n';
    else save_json_file(a.out_path, j);
    std::cerr << "generated complex: dim " << K.dim() << ", " << K.size() << " cubes\n";
    return kExitOk;
}

struct AnalyzeArgs {
    std::string in_path, json_path, start, final_vertex;
    bool reach = false, links = false, fail_on_obstruction = false, no_strict = false;
    std::uint64_t budget = kDefaultCollapseBudget;
    unsigned threads = 1;
};

int run_analyze(const AnalyzeArgs& a) {
    const auto K = complex_from_json(load_json_file(a.in_path));
    const Vertex w = parse_vertex(a.start);
    std::optional<Vertex> f;
    if (!a.final_vertex.empty()) f = parse_vertex(a.final_vertex);

    if (a.reach) {
        const auto report = reachability_report(K, w, f);
        const json j = reachability_report_to_json(report);
        if (a.json_path.empty()) std::cout << j.dump(2) << '\n';
        else save_json_file(a.json_path, j);
        return kExitOk;
    }

    const auto report = theorem_verdicts(K, w, !a.no_strict, a.budget, a.threads);
    std::cout << "initial vertex:        " << format_vertex(w) << '\n'
              << "contractibility:       " << to_string(report.verdict_contractible) << '\n'
              << "connectedness:         " << to_string(report.verdict_connected) << '\n';
    if (report.restricted)
        std::cout << "note: start is not minimal; claims cover vertices above it only\n";

    const auto print_set = [](const char* label, const std::vector<Vertex>& vs) {
        std::cout << label;
        if (vs.empty()) std::cout << " none";
        for (const Vertex& v : vs) std::cout << ' ' << format_vertex(v);
        std::cout << '\n';
    };
    print_set("type-0 obstructions:  ", report.obstructions_type0);
    print_set("type-inf obstructions:", report.obstructions_typeinf);
    if (!report.obstructions_unknown.empty())
        print_set("undecided links:      ", report.obstructions_unknown);
    print_set("realized disconnects: ", report.realized_disconnections);

    if (a.links) dump_links(K, w, a.budget);
    if (!a.json_path.empty()) save_json_file(a.json_path, analysis_report_to_json(report));

    if (a.fail_on_obstruction && !report.realized_disconnections.empty())
        return kExitObstruction;
    return kExitOk;
}

struct CollapseArgs {
    std::string in_path, out_path, log_path, mode = "0", start;
    std::vector<std::string> preserve;
    std::uint64_t budget = kDefaultCollapseBudget;
};

int run_collapse(const CollapseArgs& a) {
    const auto K = complex_from_json(load_json_file(a.in_path));
    const Vertex w = parse_vertex(a.start);
    const CollapseMode mode = parse_mode(a.mode);
    std::set<Vertex> preserve;
    for (const std::string& p : a.preserve) preserve.insert(parse_vertex(p));

    const auto result = greedy_collapse(K, w, mode, preserve, a.budget);
    std::cerr << "applied " << result.steps.size() << " collapse steps: " << K.size()
              << " -> " << result.final_complex.size() << " cubes\n";

    if (!a.out_path.empty()) save_json_file(a.out_path, complex_to_json(result.final_complex));
    else std::cout << complex_to_json(result.final_complex).dump(2) << '\n';
    if (!a.log_path.empty())
        save_json_file(a.log_path, step_log_to_json(K, result, w, mode, preserve));
    return kExitOk;
}

struct CheckPairArgs {
    std::string in_path, json_path, mode = "0", start, tau, sigma;
    std::uint64_t budget = kDefaultCollapseBudget;
};

int run_check_pair(const CheckPairArgs& a) {
    const auto K = complex_from_json(load_json_file(a.in_path));
    const Vertex w = parse_vertex(a.start);
    const auto step =
        check_pair(K, w, parse_cube(a.tau), parse_cube(a.sigma), parse_mode(a.mode), a.budget);

    std::cout << to_string(step.verdict);
    if (!step.reason.empty()) std::cout << ": " << step.reason;
    std::cout << '\n';
    for (const auto& c : step.checks) {
        std::cout << "  " << format_vertex(c.vertex) << ": "
                  << (c.before_empty ? "empty" : c.before_connected ? "connected" : "disconnected")
                  << " -> "
                  << (c.after_empty ? "empty" : c.after_connected ? "connected" : "disconnected")
                  << (c.ok ? "" : "  [fails]") << '\n';
    }
    if (!a.json_path.empty()) save_json_file(a.json_path, step_to_json(step));
    return kExitOk;
}

struct ExportArgs {
    std::string in_path, tikz_path;
};

int run_export(const ExportArgs& a) {
    const auto K = complex_from_json(load_json_file(a.in_path));
    const std::string pic = export_tikz(K);
    if (a.tikz_path.empty()) {
        std::cout << pic;
    } else {
        std::ofstream out(a.tikz_path);
        if (!out) throw Error("cannot write " + a.tikz_path);
        out << pic;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed cubical complex analysis"};
    app.set_version_flag("--version", "dicube 1.0.0");
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "build a complex from a PV program or fixture");
    generate->add_option("--pv", gen.pv_path, "PV program JSON file");
    generate->add_option("--builtin", gen.builtin_name,
                         "fixture: open_top_box, grid3, boundary333_plus_top, swiss_flag, "
                         "dining(n,cap)");
    generate->add_option("--out", gen.out_path, "output complex JSON (stdout when omitted)");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "past-link analysis of a complex");
    analyze->add_option("--in", an.in_path, "complex JSON file")->required();
    analyze->add_option("--start", an.start, "initial vertex, e.g. 0,0")->required();
    analyze->add_option("--final", an.final_vertex, "final vertex for deadlock reporting");
    analyze->add_flag("--reach", an.reach, "emit the reachability report instead");
    analyze->add_option("--json", an.json_path, "write the report as JSON");
    analyze->add_flag("--dump-links", an.links, "print every past link with its status");
    analyze->add_flag("--fail-on-obstruction", an.fail_on_obstruction,
                      "exit 1 when realized obstructions exist");
    analyze->add_flag("--no-strict", an.no_strict,
                      "allow a non-minimal start; claims cover vertices above it");
    analyze->add_option("--budget", an.budget, "collapsibility search budget");
    analyze->add_option("--threads", an.threads, "parallel past-link evaluation");

    CollapseArgs co;
    auto* collapse = app.add_subcommand("collapse", "greedy directed collapse");
    collapse->add_option("--in", co.in_path, "complex JSON file")->required();
    collapse->add_option("--mode", co.mode, "0 or homotopy")->required();
    collapse->add_option("--start", co.start, "initial vertex")->required();
    collapse->add_option("--preserve", co.preserve, "vertex to keep (repeatable)");
    collapse->add_option("--out", co.out_path, "output complex JSON (stdout when omitted)");
    collapse->add_option("--log", co.log_path, "step log JSON");
    collapse->add_option("--budget", co.budget, "collapsibility search budget");

    CheckPairArgs cp;
    auto* check = app.add_subcommand("check-pair", "verdict for one collapsing pair");
    check->add_option("--in", cp.in_path, "complex JSON file")->required();
    check->add_option("--start", cp.start, "initial vertex")->required();
    check->add_option("--mode", cp.mode, "0 or homotopy")->required();
    check->add_option("--tau", cp.tau, "free face as base:extent, e.g. 1,3:1,0")->required();
    check->add_option("--sigma", cp.sigma, "maximal cube as base:extent")->required();
    check->add_option("--json", cp.json_path, "write the step record as JSON");
    check->add_option("--budget", cp.budget, "collapsibility search budget");

    ExportArgs ex;
    auto* exp = app.add_subcommand("export", "render a 2-dimensional complex");
    exp->add_option("--in", ex.in_path, "complex JSON file")->required();
    exp->add_option("--tikz", ex.tikz_path, "output TikZ file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (analyze->parsed()) return run_analyze(an);
        if (collapse->parsed()) return run_collapse(co);
        if (check->parsed()) return run_check_pair(cp);
        if (exp->parsed()) return run_export(ex);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
