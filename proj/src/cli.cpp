/*
 * Copyright 2026 The pgdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pgdet/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pgdet/errors.hpp"
#include "pgdet/game_io.hpp"
#include "pgdet/generate.hpp"
#include "pgdet/solver_constructive.hpp"
#include "pgdet/solver_short.hpp"
#include "pgdet/transforms.hpp"
#include "pgdet/verify.hpp"

namespace pgdet {

namespace {

struct UsageError : Error
{
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GameFile load_game(const std::string& path)
{
    try {
        return parse_game_file(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    } catch (const GameError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::uint64_t oracle_budget()
{
    const char* env = std::getenv(kOracleBudgetEnv);
    if (!env || !*env) return kDefaultOracleBudget;
    try {
        std::size_t used = 0;
        auto value = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string(kOracleBudgetEnv) + " must be a nonnegative integer");
    }
}

std::string format_region(const GameFile& file, const VertexSet& region)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : region) {
        out << (first ? "" : ",") << file.ids[v];
        first = false;
    }
    out << '}';
    return out.str();
}

struct AlgorithmRun
{
    std::string name;
    std::optional<Solution> solution;
    std::string note; // failure or skip reason
    bool skipped = false;
};

std::vector<AlgorithmRun> run_all(const ParityGame& game, std::uint64_t budget)
{
    std::vector<AlgorithmRun> runs;
    auto attempt = [&](const std::string& name, const std::function<Solution()>& solve) {
        AlgorithmRun run{name, std::nullopt, {}, false};
        try {
            auto sol = solve();
            if (auto diag = check_solution(game, sol))
                run.note = "certification failed: " + diag->message;
            run.solution = std::move(sol);
        } catch (const Error& e) {
            run.note = e.what();
        }
        runs.push_back(std::move(run));
    };
    attempt("short", [&] { return solve_short(game); });
    attempt("constructive", [&] { return solve_constructive(game); });
    const auto profiles = profile_count(game);
    if (profiles <= budget) {
        attempt("oracle", [&] { return brute_force_solve(game, budget); });
    } else {
        runs.push_back({"oracle", std::nullopt,
                        std::to_string(profiles) + " profiles exceed budget " + std::to_string(budget), true});
    }
    return runs;
}

bool runs_agree(const std::vector<AlgorithmRun>& runs)
{
    const Solution* reference = nullptr;
    for (const auto& run : runs) {
        if (run.skipped) continue;
        if (!run.solution || !run.note.empty()) return false;
        if (!reference) {
            reference = &*run.solution;
        } else if (reference->w0 != run.solution->w0 || reference->w1 != run.solution->w1) {
            return false;
        }
    }
    return true;
}

int cmd_solve(const std::string& algo, const std::string& path, std::ostream& out, std::ostream& err)
{
    const auto file = load_game(path);
    Solution sol;
    try {
        if (algo == "short")
            sol = solve_short(file.game);
        else if (algo == "constructive")
            sol = solve_constructive(file.game);
        else
            sol = brute_force_solve(file.game, oracle_budget());
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    out << emit_solution(file, sol);
    return kExitPass;
}

int cmd_verify(const std::string& game_path, const std::string& solution_path, std::ostream& out, std::ostream& err)
{
    const auto file = load_game(game_path);
    Solution sol;
    try {
        sol = parse_solution(file, read_file(solution_path));
    } catch (const ParseError& e) {
        throw UsageError(solution_path + ":" + e.what());
    }
    if (auto diag = check_solution(file.game, sol)) {
        err << "refuted: " << diag->message << '\n';
        return kExitRefuted;
    }
    out << "pass\n";
    return kExitPass;
}

int cmd_compare(const std::vector<std::string>& paths, std::ostream& out, std::ostream& err)
{
    const auto budget = oracle_budget();
    int status = kExitPass;
    for (const auto& path : paths) {
        const auto file = load_game(path);
        const auto runs = run_all(file.game, budget);
        for (const auto& run : runs) {
            out << path << ": " << run.name << ' ';
            if (run.skipped)
                out << "skipped (" << run.note << ")\n";
            else if (!run.solution)
                out << "failed (" << run.note << ")\n";
            else
                out << "w0=" << format_region(file, run.solution->w0) << " w1=" << format_region(file, run.solution->w1)
                    << (run.note.empty() ? " certified" : " " + run.note) << '\n';
        }
        if (runs_agree(runs)) {
            out << path << ": agree\n";
            continue;
        }
        status = kExitRefuted;
        out << path << ": DISAGREE\n";
        auto minimal = minimize_counterexample(file.game, [budget](const ParityGame& g) { return !runs_agree(run_all(g, budget)); });
        err << "counterexample (" << minimal.size() << " vertices):\n" << emit_game(minimal);
    }
    return status;
}

int cmd_transform(const std::string& op, const std::string& path, std::ostream& out)
{
    const auto file = load_game(path);
    ParityGame result;
    if (op.rfind("split:", 0) == 0) {
        Priority k = 0;
        try {
            std::size_t used = 0;
            auto value = std::stoul(op.substr(6), &used);
            if (used != op.size() - 6) throw std::invalid_argument(op);
            k = static_cast<Priority>(value);
        } catch (const std::exception&) {
            throw UsageError("bad split priority in '" + op + "'");
        }
        try {
            result = split_top(file.game, k).plus;
        } catch (const GameError& e) {
            throw UsageError(e.what());
        }
    } else if (op == "deloop") {
        result = remove_useless_self_loops(file.game).game;
    } else if (op == "unfair") {
        result = remove_unfair_win(file.game).game;
    } else if (op == "shiftswap") {
        result = shift_and_swap(file.game);
    } else {
        throw UsageError("unknown transform '" + op + "' (expected split:<k>, deloop, unfair or shiftswap)");
    }
    out << emit_game(result);
    return kExitPass;
}

}

ParityGame minimize_counterexample(const ParityGame& game, const std::function<bool(const ParityGame&)>& still_failing)
{
    ParityGame current = game;
    for (bool shrunk = true; shrunk && current.size() > 1;) {
        shrunk = false;
        for (Vertex drop = current.size(); drop-- > 0;) {
            VertexSet keep = current.all_vertices();
            keep.erase(drop);
            bool closed = true;
            for (Vertex v : keep) {
                auto succ = current.successors(v);
                closed = closed && std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return keep.contains(w); });
            }
            if (!closed) continue;
            auto candidate = restrict(current, keep).game;
            if (still_failing(candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity game solving with certified memoryless strategies", "pgdet"};
    app.require_subcommand(1);

    std::string algo = "short";
    std::string game_path, solution_path, op;
    std::vector<std::string> compare_paths;
    std::size_t n = 1, max_deg = 1;
    Priority max_prio = 0;
    std::uint64_t seed = 0;

    auto* solve = app.add_subcommand("solve", "Solve a game and print one line per vertex: id winner choice|-");
    solve->add_option("--algo", algo, "Solver")->check(CLI::IsMember({"short", "constructive", "oracle"}));
    solve->add_option("file", game_path, "Game file")->required();

    auto* verify = app.add_subcommand("verify", "Check a solution file against a game");
    verify->add_option("file", game_path, "Game file")->required();
    verify->add_option("solution", solution_path, "Solution file")->required();

    auto* compare = app.add_subcommand("compare", "Run every applicable solver and cross-check the regions");
    compare->add_option("files", compare_paths, "Game files")->required();

    auto* transform = app.add_subcommand("transform", "Print a transformed game");
    transform->add_option("--op", op, "split:<k> | deloop | unfair | shiftswap")->required();
    transform->add_option("file", game_path, "Game file")->required();

    auto* gen = app.add_subcommand("gen", "Print a random game");
    gen->add_option("--n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--max-prio", max_prio, "Largest priority")->required();
    gen->add_option("--max-deg", max_deg, "Largest out-degree")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Seed")->required();

    std::vector<std::string> argv_storage{"pgdet"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(algo, game_path, out, err);
        if (*verify) return cmd_verify(game_path, solution_path, out, err);
        if (*compare) return cmd_compare(compare_paths, out, err);
        if (*transform) return cmd_transform(op, game_path, out);
        if (*gen) {
            out << emit_game(gen_random({n, max_prio, max_deg, seed}));
            return kExitPass;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}
