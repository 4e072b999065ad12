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

#include "pgdet/solver_constructive.hpp"

#include <algorithm>
#include <sstream>

#include "pgdet/errors.hpp"
#include "pgdet/solver_short.hpp"
#include "pgdet/verify.hpp"

namespace pgdet {

namespace {

std::string format_set(const VertexSet& s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : s) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string dump_history(const SplitGame& split, std::span<const FixpointState> history)
{
    std::ostringstream out;
    out << "split priority " << split.k << ", D = " << format_set(split.d) << '\n';
    for (const auto& s : history) {
        out << "  alpha " << s.alpha << ": X = " << format_set(s.x) << ", W1 = " << format_set(s.w1) << ", bumped copies =";
        for (auto [copy, orig] : split.copy_of)
            if (s.pi[copy] != split.k) out << ' ' << copy;
        out << ", tau =";
        for (auto [v, w] : s.tau.choices()) out << ' ' << v << "->" << w;
        out << '\n';
    }
    return out.str();
}

[[noreturn]] void fail(const SplitGame& split, std::span<const FixpointState> history, const std::string& what)
{
    throw CertificationFailure("fixpoint_solve: " + what + "\n" + dump_history(split, history));
}

bool subset(const VertexSet& a, const VertexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool wins(const ParityGame& game, const Strategy& s, const VertexSet& region)
{
    try {
        return verify_strategy(game, s, region).passed();
    } catch (const StrategyError&) {
        return false;
    }
}

class FixpointSolver
{
public:
    FixpointSolver(const ConstructiveOptions& options, std::vector<FixpointTrace>* trace)
        : options_(options), trace_(trace) { }

    Solution solve(const ParityGame& game, std::size_t depth, bool swapped)
    {
        for (Vertex v = 0; v < game.size(); ++v)
            if (game.has_self_loop(v) && game.has_proper_successor(v))
                throw GameError("fixpoint_solve: non-absorbing vertex " + std::to_string(v) + " has a self-loop");

        const auto relevant = relevant_priorities(game);
        if (relevant.empty()) return base_case_solve(game);
        const Priority k = *relevant.rbegin();
        if (k % 2 == 1) return swap_players(solve(shift_and_swap(game), depth, true));

        const auto split = split_top(game, k);
        std::size_t slot = 0;
        if (trace_) {
            slot = trace_->size();
            trace_->emplace_back();
        }

        std::vector<FixpointState> history;
        Solution last;
        VertexSet x;
        for (std::size_t alpha = 0;; ++alpha) {
            if (alpha > split.plus.size() + 1) fail(split, history, "no fixpoint within |V+|+1 rounds");

            FixpointState state;
            state.alpha = alpha;
            state.x = x;
            state.pi = bump_priorities(split, x);
            const auto bumped = split.plus.with_priorities(state.pi);
            last = solve(bumped, depth + 1, false);
            state.w1 = last.w1;
            state.tau = compose_tau(history, last.w1, last.tau);

            if (!subset(x, state.w1)) fail(split, history, "earlier player 1 region not contained in W1 at alpha " + std::to_string(alpha));
            const bool fixpoint = state.w1 == x;
            if (options_.check_invariants || fixpoint) check_round(split, bumped, history, state);

            history.push_back(std::move(state));
            if (fixpoint) break;
            x = history.back().w1;
        }
        const auto& final_state = history.back();

        for (Vertex v : split.d) {
            const bool bumped = final_state.pi[split.original_of.at(v)] == k + 1;
            if (bumped != final_state.w1.contains(v))
                fail(split, history, "bumped copies disagree with W1 at vertex " + std::to_string(v));
        }

        Solution out;
        for (Vertex v = 0; v < game.size(); ++v) out.region(final_state.w1.contains(v) ? Player::P1 : Player::P0).insert(v);
        out.tau = canonical(game, merge_strategy(split, final_state.tau).restricted_to(out.w1));
        out.sigma = canonical(game, merge_strategy(split, last.sigma).restricted_to(out.w0));
        if (auto diag = check_solution(game, out)) fail(split, history, "merged witnesses rejected: " + diag->message);

        if (trace_) {
            auto& entry = (*trace_)[slot];
            entry.depth = depth;
            entry.swapped = swapped;
            entry.k = k;
            entry.copies = split.original_of;
            entry.alpha0 = final_state.alpha;
            entry.states = std::move(history);
        }
        return out;
    }

private:
    void check_round(const SplitGame& split, const ParityGame& bumped, std::span<const FixpointState> history,
                     const FixpointState& state) const
    {
        const auto a = std::to_string(state.alpha);
        if (!history.empty()) {
            const auto& prev = history.back();
            if (!subset(prev.x, state.x)) fail(split, history, "X shrank at alpha " + a);
            if (!subset(prev.w1, state.w1)) fail(split, history, "W1 shrank at alpha " + a);
        }
        for (const auto& earlier : history)
            for (Vertex v : earlier.w1)
                if (earlier.tau.choice(v) != state.tau.choice(v))
                    fail(split, history, "tau at alpha " + a + " changed its choice at vertex " + std::to_string(v) +
                                             " fixed in round " + std::to_string(earlier.alpha));
        if (!wins(bumped, state.tau, state.w1)) fail(split, history, "tau does not win W1 in the bumped game at alpha " + a);

        VertexSet originals;
        for (Vertex v : state.w1)
            if (!split.is_copy(v)) originals.insert(originals.end(), v);
        if (!wins(split.base, merge_strategy(split, state.tau), originals))
            fail(split, history, "merged tau does not win W1 minus copies in the original game at alpha " + a);
    }

    const ConstructiveOptions& options_;
    std::vector<FixpointTrace>* trace_;
};

}

std::pair<ParityGame, TransformRecord> preprocess(const ParityGame& game)
{
    auto unfair = remove_unfair_win(game);
    auto useless = remove_useless_self_loops(unfair.game);
    TransformRecord record{game, std::move(unfair.changed), std::move(useless.changed)};
    return {std::move(useless.game), std::move(record)};
}

Solution lift_solution(const TransformRecord& record, const ParityGame& normalized, const Solution& sol)
{
    Solution out = sol;
    for (Player p : {Player::P0, Player::P1}) {
        for (Vertex v : out.region(p)) {
            if (record.original.owner(v) != p || out.strategy(p).has_choice(v)) continue;
            if (record.original.successors(v).size() > 1) out.strategy(p).set(v, normalized.successors(v)[0]);
        }
    }
    return out;
}

std::vector<Priority> bump_priorities(const SplitGame& split, const VertexSet& x)
{
    std::vector<Priority> pi(split.plus.size());
    for (Vertex v = 0; v < pi.size(); ++v) pi[v] = split.plus.priority(v);
    for (Vertex v : split.d)
        if (x.contains(v)) pi[split.original_of.at(v)] = split.k + 1;
    return pi;
}

Strategy compose_tau(std::span<const FixpointState> history, const VertexSet& w1_new, const Strategy& tau_plus)
{
    Strategy out(Player::P1);
    VertexSet earlier;
    for (const auto& state : history) earlier.insert(state.w1.begin(), state.w1.end());
    for (Vertex v : earlier) {
        for (const auto& state : history) {
            if (!state.w1.contains(v)) continue;
            if (auto c = state.tau.choice(v)) out.set(v, *c);
            break;
        }
    }
    for (Vertex v : w1_new) {
        if (earlier.contains(v)) continue;
        if (auto c = tau_plus.choice(v)) out.set(v, *c);
    }
    return out;
}

ConstructiveResult fixpoint_solve(const ParityGame& game, const ConstructiveOptions& options)
{
    ConstructiveResult result;
    FixpointSolver solver(options, options.record_trace ? &result.trace : nullptr);
    result.solution = solver.solve(game, 0, false);
    return result;
}

ConstructiveResult solve_constructive(const ParityGame& game, const ConstructiveOptions& options)
{
    auto [normalized, record] = preprocess(game);
    auto result = fixpoint_solve(normalized, options);
    result.solution = lift_solution(record, normalized, result.solution);
    if (auto diag = check_solution(game, result.solution))
        throw CertificationFailure("solve_constructive: lifted solution rejected: " + diag->message);
    return result;
}

Solution solve_constructive(const ParityGame& game)
{
    return solve_constructive(game, ConstructiveOptions{}).solution;
}

}
