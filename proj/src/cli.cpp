#include "arrayprop/cli.hpp"

#include "arrayprop/bench.hpp"
#include "arrayprop/check.hpp"
#include "arrayprop/generators.hpp"
#include "arrayprop/parser.hpp"
#include "arrayprop/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace arrayprop {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Model load_model(const std::string& path, bool allow_nonlinear)
{
    auto text = read_file(path);
    try {
        auto model = parse_model(text, {allow_nonlinear});
        return validate_model(model, {allow_nonlinear});
    } catch (const ParseError& e) {
        std::string msg;
        for (const auto& i : e.issues())
            msg += path + ":" + std::to_string(i.line) + ":" + std::to_string(i.column) + ": " + i.message + "\n";
        throw InputError(msg.substr(0, msg.size() - 1));
    } catch (const ModelError& e) {
        std::string msg;
        for (const auto& i : e.issues())
            msg += path + ": " + to_string(i.kind) + ": " + i.message + "\n";
        throw InputError(msg.substr(0, msg.size() - 1));
    }
}

CrosswordSpec load_crossword(const std::string& grid_path, const std::string& words_path)
{
    std::istringstream grid(read_file(grid_path));
    std::istringstream words(read_file(words_path));
    return read_crossword(grid, words);
}

bool visible(const Model& model, VarId v)
{
    auto kind = model.variable(v).kind;
    return kind == VarKind::plain || kind == VarKind::cell;
}

std::string stats_line(const PropagationStats& stats)
{
    std::string out;
    for (const auto& [key, value] : stats.to_map())
        out += (out.empty() ? "" : " ") + key + "=" + std::to_string(value);
    return out;
}

nlohmann::json stats_json(const PropagationStats& stats)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : stats.to_map())
        j[key] = value;
    return j;
}

EngineKind engine_of(const std::string& name)
{
    return parse_engine(name).value_or(EngineKind::arrac);
}

std::string assignment_line(const Model& model, const Assignment& a)
{
    std::string out;
    for (VarId v = 0; v < model.num_variables(); ++v)
        if (visible(model, v))
            out += (out.empty() ? "" : " ") + model.name(v) + "=" + model.values().name(a[v]);
    return out;
}

struct Options {
    std::string file;
    std::string engine = "arrac";
    bool json = false;
    bool allow_nonlinear = false;
    bool rara_prime = false;
    bool early_restart = false;
    bool first = false;
    bool all = false;
    bool stats = false;
    std::string order = "smallest";
    std::size_t random = 0;
    std::size_t repeat = 20;
    std::string workload = "all";
    std::vector<std::string> crossword;
    std::string grid;
    std::string words;
    std::uint64_t seed = 1;
};

int cmd_propagate(const Options& o, std::ostream& out)
{
    auto model = load_model(o.file, o.allow_nonlinear);
    EngineOptions eo;
    eo.kind = engine_of(o.engine);
    eo.use_rara_prime = o.rara_prime;
    eo.arrac.early_restart = o.early_restart;
    auto r = propagate(model, eo);
    const char* status = r.failed ? "failure" : "stable";

    if (o.json) {
        nlohmann::json j;
        j["status"] = status;
        j["engine"] = to_string(eo.kind);
        j["domains"] = nlohmann::json::object();
        for (VarId v = 0; v < model.num_variables(); ++v) {
            if (!visible(model, v))
                continue;
            auto values = nlohmann::json::array();
            r.domains[v].for_each([&](ValueId id) { values.push_back(model.values().name(id)); });
            j["domains"][model.name(v)] = values;
        }
        j["stats"] = stats_json(r.stats);
        out << j.dump(2) << "\n";
    } else {
        out << "status: " << status << "\n";
        out << "engine: " << to_string(eo.kind) << "\n";
        for (VarId v = 0; v < model.num_variables(); ++v)
            if (visible(model, v))
                out << model.name(v) << " = " << r.domains[v].to_string(model.values()) << "\n";
        out << "stats: " << stats_line(r.stats) << "\n";
    }
    return r.failed ? exit_failure : exit_ok;
}

int cmd_solve(const Options& o, std::ostream& out)
{
    auto model = load_model(o.file, o.allow_nonlinear);
    SearchOptions so;
    so.engine = engine_of(o.engine);
    so.var_order = o.order == "first" ? VarOrder::first_unbound : VarOrder::smallest_domain;
    so.solution_limit = o.first ? 1 : 0;
    auto r = solve(model, so);
    for (std::size_t i = 0; i < r.solutions.size(); ++i)
        out << "solution " << i + 1 << ": " << assignment_line(model, r.solutions[i]) << "\n";
    if (r.solutions.empty())
        out << "UNSAT\n";
    out << "solutions: " << r.solutions.size() << "\n";
    out << "backtracks: " << r.stats.backtracks << "\n";
    if (o.stats)
        out << "stats: " << stats_line(r.stats) << "\n";
    return r.solutions.empty() ? exit_failure : exit_ok;
}

int cmd_check(const Options& o, std::ostream& out)
{
    if (o.random == 0) {
        if (o.file.empty())
            throw InputError("check needs a model file or --random N");
        auto model = load_model(o.file, o.allow_nonlinear);
        auto diffs = check_engines(model);
        for (const auto& d : diffs)
            out << describe(model, d) << "\n";
        out << (diffs.empty() ? "no divergence" : "divergence found") << "\n";
        return diffs.empty() ? exit_ok : exit_failure;
    }
    std::mt19937_64 rng(o.seed);
    std::size_t failing = 0;
    for (std::size_t i = 0; i < o.random; ++i) {
        RandomModelOptions ro;
        ro.extra_constraints = i % 4 == 3;
        auto model = random_array_model(rng, ro);
        auto diffs = check_engines(model);
        if (diffs.empty())
            continue;
        ++failing;
        out << "instance " << i << ":\n" << print_model(model);
        for (const auto& d : diffs)
            out << "  " << describe(model, d) << "\n";
    }
    out << "instances: " << o.random << " seed: " << o.seed << " divergent: " << failing << "\n";
    return failing == 0 ? exit_ok : exit_failure;
}

int cmd_bench(const Options& o, std::ostream& out)
{
    Model model;
    if (!o.crossword.empty()) {
        if (o.crossword.size() != 2)
            throw InputError("--crossword needs GRID and WORDS");
        model = build_crossword(load_crossword(o.crossword[0], o.crossword[1])).model;
    } else if (!o.file.empty()) {
        model = load_model(o.file, o.allow_nonlinear);
    } else {
        throw InputError("bench needs a model file or --crossword GRID WORDS");
    }
    auto workload = o.workload == "propagate" ? Workload::propagate
                    : o.workload == "first"   ? Workload::solve_first
                                              : Workload::solve_all;
    auto results = run_benchmark(model, o.repeat, workload);
    if (o.json) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& r : results) {
            auto& e = j[to_string(r.engine)];
            e["median_ms"] = r.median_ms;
            e["cell_domain_reads"] = r.stats.cell_domain_reads;
            e["t_computations"] = r.stats.t_computations;
            e["solutions"] = r.solutions;
        }
        j["repeat"] = o.repeat;
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "repeat: " << o.repeat << " workload: " << o.workload << "\n";
    for (const auto& r : results) {
        out << to_string(r.engine) << ": median_ms=" << std::fixed << std::setprecision(4) << r.median_ms
            << " cell_domain_reads=" << r.stats.cell_domain_reads << " t_computations=" << r.stats.t_computations
            << " solutions=" << r.solutions << "\n";
    }
    return exit_ok;
}

int cmd_crossword(const Options& o, std::ostream& out)
{
    auto spec = load_crossword(o.grid, o.words);
    CrosswordModel cw;
    try {
        cw = build_crossword(spec);
    } catch (const ModelError& e) {
        throw InputError(e.what());
    }
    SearchOptions so;
    so.engine = engine_of(o.engine);
    so.solution_limit = o.all ? 0 : 1;
    auto r = solve(cw.model, so);
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        if (i)
            out << "\n";
        for (const auto& row : render_crossword(spec, cw, r.solutions[i]))
            out << row << "\n";
    }
    if (r.solutions.empty())
        out << "UNSAT\n";
    if (o.all)
        out << "solutions: " << r.solutions.size() << "\n";
    out << "backtracks: " << r.stats.backtracks << "\n";
    if (o.stats)
        out << "stats: " << stats_line(r.stats) << "\n";
    return r.solutions.empty() ? exit_failure : exit_ok;
}

int cmd_print(const Options& o, std::ostream& out)
{
    out << print_model(load_model(o.file, o.allow_nonlinear));
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Arc-consistency propagation for array constraints x = a[y1, ..., yn]"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for every randomized generator");

    auto engine_opt = [&](CLI::App* cmd) {
        cmd->add_option("--engine", o.engine, "Propagation engine")->check(CLI::IsMember({"naive", "arrac"}));
    };
    auto nonlinear_opt = [&](CLI::App* cmd) {
        cmd->add_flag("--allow-nonlinear", o.allow_nonlinear,
                      "Admit array constraints that repeat a variable (propagation may be incomplete)");
    };

    auto* propagate_cmd = app.add_subcommand("propagate", "Propagate a model to its fixpoint");
    propagate_cmd->add_option("file", o.file, "Model file")->required();
    engine_opt(propagate_cmd);
    nonlinear_opt(propagate_cmd);
    propagate_cmd->add_flag("--json", o.json, "Machine-readable output");
    propagate_cmd->add_flag("--rara-prime", o.rara_prime, "Rewrite fixed-index accesses instead of pruning cells");
    propagate_cmd->add_flag("--early-restart", o.early_restart, "ARRAC: restart a run on the first definite reduction");

    auto* solve_cmd = app.add_subcommand("solve", "Search for solutions");
    solve_cmd->add_option("file", o.file, "Model file")->required();
    auto* first = solve_cmd->add_flag("--first", o.first, "Stop at the first solution");
    solve_cmd->add_flag("--all", o.all, "Enumerate all solutions (default)")->excludes(first);
    solve_cmd->add_flag("--stats", o.stats, "Print all counters");
    solve_cmd->add_option("--order", o.order, "Variable order")->check(CLI::IsMember({"smallest", "first"}));
    engine_opt(solve_cmd);
    nonlinear_opt(solve_cmd);

    auto* check_cmd = app.add_subcommand("check", "Compare both engines against the brute-force closure");
    check_cmd->add_option("file", o.file, "Model file");
    check_cmd->add_option("--random", o.random, "Check N seeded random instances instead of a file");
    nonlinear_opt(check_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "Time both engines");
    bench_cmd->add_option("file", o.file, "Model file");
    bench_cmd->add_option("--crossword", o.crossword, "GRID WORDS files instead of a model")->expected(2);
    bench_cmd->add_option("--repeat", o.repeat, "Repetitions per engine")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--workload", o.workload, "propagate, first or all")
        ->check(CLI::IsMember({"propagate", "first", "all"}));
    bench_cmd->add_flag("--json", o.json, "Machine-readable output");
    nonlinear_opt(bench_cmd);

    auto* crossword_cmd = app.add_subcommand("crossword", "Fill a crossword grid from a word list");
    crossword_cmd->add_option("grid", o.grid, "Grid file ('#' blocked, '.' open)")->required();
    crossword_cmd->add_option("words", o.words, "Word list, one per line")->required();
    crossword_cmd->add_flag("--stats", o.stats, "Print all counters");
    crossword_cmd->add_flag("--all", o.all, "Print every solution");
    engine_opt(crossword_cmd);

    auto* print_cmd = app.add_subcommand("print", "Print the parsed model");
    print_cmd->add_option("file", o.file, "Model file")->required();
    nonlinear_opt(print_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << sub->help();
        return exit_input;
    }

    try {
        if (propagate_cmd->parsed())
            return cmd_propagate(o, out);
        if (solve_cmd->parsed())
            return cmd_solve(o, out);
        if (check_cmd->parsed())
            return cmd_check(o, out);
        if (bench_cmd->parsed())
            return cmd_bench(o, out);
        if (crossword_cmd->parsed())
            return cmd_crossword(o, out);
        if (print_cmd->parsed())
            return cmd_print(o, out);
    } catch (const InputError& e) {
        err << e.what() << "\n";
        return exit_input;
    } catch (const ModelError& e) {
        err << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

} // namespace arrayprop
