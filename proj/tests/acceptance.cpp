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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "pgdet/errors.hpp"
#include "pgdet/game_io.hpp"
#include "pgdet/solver_constructive.hpp"
#include "pgdet/solver_short.hpp"
#include "pgdet/transforms.hpp"
#include "pgdet/verify.hpp"

namespace {

using namespace pgdet;
using namespace pgdet::corpus;

// Corpus sizes and bounds.
constexpr std::size_t kPartitionGames = 500;
constexpr std::size_t kPartitionMaxN = 10;
constexpr std::size_t kSmallGames = 500;
constexpr std::size_t kSmallMaxN = 6;
constexpr std::size_t kMaxOutdegree = 3;
constexpr Priority kMaxPriority = 5;
constexpr std::uint64_t kPartitionSeed = 1'000'000;
constexpr std::uint64_t kSmallSeed = 2'000'000;
constexpr std::size_t kLadderRungs = 6;

// Zero tolerance everywhere: every criterion allows this many mismatches.
constexpr std::size_t kAllowedMismatches = 0;

// Detour game expectations.
constexpr Priority kDetourBumpedFrom = 4;
constexpr Priority kDetourBumpedTo = 5;
constexpr std::size_t kDetourAlpha0 = 2;

// Ladder expectation: alpha0 at least this for two or more rungs.
constexpr std::size_t kLadderMinAlpha0 = 2;

struct Check
{
    std::size_t failures = 0;
    std::string first;

    void fail(const std::string& what)
    {
        if (failures++ == 0) first = what;
    }
    bool ok() const { return failures <= kAllowedMismatches; }
    std::string detail() const { return failures == 0 ? "" : std::to_string(failures) + " failure(s), first: " + first; }
};

std::string set_text(const VertexSet& s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : s) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    return out.str() + "}";
}

bool same_regions(const Solution& a, const Solution& b)
{
    return a.w0 == b.w0 && a.w1 == b.w1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<ParityGame> small_corpus()
{
    return random_corpus(kSmallGames, kSmallMaxN, kMaxPriority, kMaxOutdegree, kSmallSeed);
}

std::vector<ParityGame> partition_corpus()
{
    return random_corpus(kPartitionGames, kPartitionMaxN, kMaxPriority, kMaxOutdegree, kPartitionSeed);
}

std::vector<ParityGame> fixed_games()
{
    std::vector<ParityGame> games{detour(), two_cycle(), single_absorbing(0), single_absorbing(1),
                                  unfair_win_example(), useless_loop_example(), vanishing_choice()};
    for (std::size_t m = 1; m <= kLadderRungs; ++m) games.push_back(ladder(m));
    return games;
}

Check criterion_detour()
{
    Check c;
    const auto g = detour();
    const VertexSet all{0, 1, 2};
    const auto s = solve_short(g);
    if (s.w1 != all || !s.w0.empty()) c.fail("short: w1=" + set_text(s.w1));
    if (auto d = check_solution(g, s)) c.fail("short: " + d->message);

    const auto r = solve_constructive(g, ConstructiveOptions{true, true});
    if (r.solution.w1 != all || !r.solution.w0.empty()) c.fail("constructive: w1=" + set_text(r.solution.w1));
    if (auto d = check_solution(g, r.solution)) c.fail("constructive: " + d->message);
    if (r.trace.empty()) {
        c.fail("no fixpoint trace");
        return c;
    }
    const auto& top = r.trace[0];
    if (top.alpha0 != kDetourAlpha0) c.fail("alpha0 = " + std::to_string(top.alpha0));
    const Vertex copy = top.copies.at(1);
    if (top.states.front().pi[copy] != kDetourBumpedFrom) c.fail("copy of v does not start at priority 4");
    bool bumped_before_end = false;
    for (std::size_t i = 0; i + 1 < top.states.size(); ++i)
        bumped_before_end = bumped_before_end || top.states[i].pi[copy] == kDetourBumpedTo;
    if (!bumped_before_end) c.fail("copy of v not bumped to 5 before convergence");
    return c;
}

Check criterion_partition()
{
    Check c;
    std::size_t i = 0;
    for (const auto& g : partition_corpus()) {
        const auto tag = "game " + std::to_string(i++);
        for (auto [name, solve] : {std::pair<const char*, Solution (*)(const ParityGame&)>{"short", solve_short},
                                   {"constructive", static_cast<Solution (*)(const ParityGame&)>(solve_constructive)}}) {
            const auto sol = solve(g);
            VertexSet both = sol.w0;
            both.insert(sol.w1.begin(), sol.w1.end());
            if (both.size() != g.size() || sol.w0.size() + sol.w1.size() != g.size())
                c.fail(tag + " " + name + ": not a partition");
            if (auto d = check_solution(g, sol)) c.fail(tag + " " + name + ": " + d->message);
        }
    }
    return c;
}

Check criterion_oracle()
{
    Check c;
    std::size_t i = 0;
    for (const auto& g : small_corpus()) {
        const auto tag = "game " + std::to_string(i++);
        const auto oracle = brute_force_solve(g);
        if (!same_regions(solve_short(g), oracle)) c.fail(tag + ": short differs from oracle");
        if (!same_regions(solve_constructive(g), oracle)) c.fail(tag + ": constructive differs from oracle");
    }
    return c;
}

Check criterion_transforms()
{
    Check c;
    std::size_t i = 0;
    for (const auto& g : small_corpus()) {
        const auto tag = "game " + std::to_string(i++);
        const auto base = brute_force_solve(g);
        const auto deloop = remove_useless_self_loops(g).game;
        const auto unfair = remove_unfair_win(g).game;
        const auto both = remove_useless_self_loops(unfair).game;
        if (!same_regions(brute_force_solve(deloop), base)) c.fail(tag + ": useless self-loop removal");
        if (!same_regions(brute_force_solve(unfair), base)) c.fail(tag + ": unfair-win removal");
        if (!same_regions(brute_force_solve(both), base)) c.fail(tag + ": combined normalization");
    }
    return c;
}

Check criterion_duality()
{
    Check c;
    std::size_t i = 0;
    for (const auto& g : small_corpus()) {
        const auto tag = "game " + std::to_string(i++);
        const auto h = shift_and_swap(g);
        const auto a = brute_force_solve(g), b = brute_force_solve(h);
        if (a.w0 != b.w1 || a.w1 != b.w0) c.fail(tag + ": oracle regions not swapped");
        const auto sa = solve_short(g), sb = solve_short(h);
        if (sa.w0 != sb.w1 || sa.w1 != sb.w0) c.fail(tag + ": short regions not swapped");
    }
    return c;
}

Check criterion_combiner()
{
    Check c;
    std::size_t i = 0;
    for (const auto& g : small_corpus()) {
        const auto tag = "game " + std::to_string(i++);
        const auto analysis = brute_force_analyze(g);
        for (Player p : {Player::P0, Player::P1}) {
            std::vector<StrategyPart> parts;
            VertexSet united;
            for (Vertex v = 0; v < g.size(); ++v) {
                if (analysis.solution.winner(v) != p) continue;
                parts.push_back({analysis.least_winning[v], analysis.least_winning_region[v]});
                united.insert(analysis.least_winning_region[v].begin(), analysis.least_winning_region[v].end());
            }
            if (parts.empty()) continue;
            const auto fused = combine_strategies(g, p, parts);
            if (fused.region != united) c.fail(tag + ": combined region is not the union");
            if (!verify_strategy(g, fused.strategy, fused.region).passed())
                c.fail(tag + ": combined strategy not winning for player " + std::to_string(index(p)));
        }
    }
    return c;
}

Check criterion_invariants()
{
    Check c;
    std::vector<ParityGame> games = small_corpus();
    for (auto& g : partition_corpus()) games.push_back(std::move(g));
    for (auto& g : fixed_games()) games.push_back(std::move(g));
    std::size_t i = 0, loops = 0;
    for (const auto& g : games) {
        const auto tag = "game " + std::to_string(i++);
        try {
            const auto r = solve_constructive(g, ConstructiveOptions{true, true});
            loops += r.trace.size();
            for (const auto& entry : r.trace) {
                const auto& last = entry.states.back();
                if (entry.alpha0 + 1 != entry.states.size()) c.fail(tag + ": trace length");
                for (auto [orig, copy] : entry.copies)
                    if ((last.pi[copy] == entry.k + 1) != last.w1.contains(orig)) c.fail(tag + ": fixpoint equivalence");
            }
        } catch (const CertificationFailure& e) {
            c.fail(tag + ": " + e.what());
        }
    }
    if (loops == 0) c.fail("no fixpoint loop was exercised");
    return c;
}

Check criterion_ladders(std::string& measured)
{
    Check c;
    std::size_t previous = 0;
    for (std::size_t m = 1; m <= kLadderRungs; ++m) {
        const auto g = ladder(m);
        const auto tag = "m=" + std::to_string(m);
        const auto r = solve_constructive(g, ConstructiveOptions{true, true});
        if (!same_regions(r.solution, solve_short(g))) c.fail(tag + ": constructive differs from short");
        if (profile_count(g) <= kDefaultOracleBudget && !same_regions(r.solution, brute_force_solve(g)))
            c.fail(tag + ": constructive differs from oracle");
        const std::size_t alpha0 = r.trace.empty() ? 0 : r.trace[0].alpha0;
        measured += (m == 1 ? "" : ",") + std::to_string(alpha0);
        if (alpha0 < previous) c.fail(tag + ": alpha0 decreased");
        if (m >= 2 && alpha0 < kLadderMinAlpha0) c.fail(tag + ": alpha0 = " + std::to_string(alpha0));
        previous = alpha0;
    }
    return c;
}

Check criterion_round_trip()
{
    Check c;
    std::vector<ParityGame> games = small_corpus();
    for (auto& g : partition_corpus()) games.push_back(std::move(g));
    for (auto& g : fixed_games()) games.push_back(std::move(g));
    for (std::size_t i = 0; i < games.size(); ++i) {
        const auto text = emit_game(games[i]);
        const auto back = parse_game(text);
        if (!(back == games[i])) c.fail("game " + std::to_string(i) + ": parse(emit) differs");
        if (emit_game(back) != text) c.fail("game " + std::to_string(i) + ": emit not a fixpoint");
        const auto file = parse_game_file(text);
        const auto sol_text = emit_solution(file, solve_short(file.game));
        if (emit_solution(file, parse_solution(file, sol_text)) != sol_text)
            c.fail("game " + std::to_string(i) + ": solution text not a fixpoint");
    }
    for (const char* file : {"detour.pg", "random_6_5_3_42.pg"}) {
        const auto text = slurp(std::string(PGDET_TEST_DATA) + "/" + file);
        if (text.empty() || emit_game(parse_game(text)) != text) c.fail(std::string(file) + ": not byte-identical");
    }
    return c;
}

}

int main()
{
    int failed = 0;
    auto report = [&](int n, const std::string& title, const std::function<Check()>& run, const std::string& extra = "") {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.ok();
        failed += ok ? 0 : 1;
        std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << ms << " ms)";
        if (!extra.empty()) std::cout << " " << extra;
        if (!ok) std::cout << "\n    " << c.detail();
        std::cout << std::endl;
    };

    report(1, "detour game: both solvers give w1 = {u,v,w}, copy of v bumped 4->5, alpha0 = 2", criterion_detour);
    report(2, "determinacy partition, 500 random games n <= 10, strategies certified", criterion_partition);
    report(3, "oracle equivalence, 500 random games n <= 6", criterion_oracle);
    report(4, "self-loop and unfair-win removal preserve regions (oracle)", criterion_transforms);
    report(5, "duality under shift_and_swap", criterion_duality);
    report(6, "combined per-vertex oracle strategies win from the union", criterion_combiner);
    report(7, "fixpoint invariants and equivalence at every fixpoint", criterion_invariants);
    std::string alphas;
    report(8, "ladder truncations m = 1..6", [&] { return criterion_ladders(alphas); });
    std::cout << "    measured alpha0 for m = 1..6: " << alphas << std::endl;
    report(9, "canonical text round trip on the full corpus", criterion_round_trip);

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
