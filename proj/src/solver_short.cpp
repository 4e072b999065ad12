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

#include "pgdet/solver_short.hpp"

#include "pgdet/errors.hpp"
#include "pgdet/transforms.hpp"
#include "pgdet/verify.hpp"

namespace pgdet {

namespace {

void certify(const ParityGame& game, const Strategy& s, const VertexSet& region, const char* what)
{
    Verdict verdict;
    try {
        verdict = verify_strategy(game, s, region);
    } catch (const StrategyError& e) {
        throw CertificationFailure(std::string(what) + ": " + e.what());
    }
    if (!verdict) throw CertificationFailure(std::string(what) + ": " + describe(game, *verdict.witness));
}

}

Solution base_case_solve(const ParityGame& game)
{
    Solution sol;
    for (Vertex v = 0; v < game.size(); ++v) {
        switch (classify(game, v)) {
            case VertexClass::Absorbing:
                sol.region(parity_winner(game.priority(v))).insert(v);
                break;
            case VertexClass::Vanishing: {
                const Player p = game.owner(v);
                std::optional<Vertex> good;
                for (Vertex w : game.successors(v)) {
                    if (classify(game, w) != VertexClass::Absorbing)
                        throw GameError("base_case_solve: successor " + std::to_string(w) + " of vanishing vertex " +
                                        std::to_string(v) + " is not absorbing");
                    if (parity_winner(game.priority(w)) == p && (!good || w < *good)) good = w;
                }
                if (good) {
                    sol.region(p).insert(v);
                    if (game.successors(v).size() > 1) sol.strategy(p).set(v, *good);
                } else {
                    sol.region(opponent(p)).insert(v);
                }
                break;
            }
            case VertexClass::Relevant:
                throw GameError("base_case_solve: vertex " + std::to_string(v) + " is relevant");
        }
    }
    return sol;
}

StrategyPart combine_strategies(const ParityGame& game, Player player, std::span<const StrategyPart> parts)
{
    StrategyPart out{Strategy(player), {}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        if (part.strategy.player() != player)
            throw GameError("combine_strategies: part " + std::to_string(i) + " belongs to the other player");
        Verdict verdict;
        try {
            verdict = verify_strategy(game, part.strategy, part.region);
        } catch (const StrategyError& e) {
            throw GameError("combine_strategies: part " + std::to_string(i) + ": " + e.what());
        }
        if (!verdict)
            throw GameError("combine_strategies: part " + std::to_string(i) + " does not win from its region");
        out.region.insert(part.region.begin(), part.region.end());
    }

    for (Vertex v : out.region) {
        if (game.owner(v) != player) continue;
        for (const auto& part : parts) {
            if (!part.region.contains(v)) continue;
            if (auto c = part.strategy.choice(v)) out.strategy.set(v, *c);
            break;
        }
    }
    certify(game, out.strategy, out.region, "combine_strategies");
    return out;
}

WinningCore nonempty_step(const ParityGame& game)
{
    const auto relevant = relevant_priorities(game);
    if (relevant.empty()) throw GameError("nonempty_step: game has no relevant priority");
    const Priority k = *relevant.rbegin();

    if (k % 2 == 1) {
        auto core = nonempty_step(shift_and_swap(game));
        core.player = opponent(core.player);
        core.strategy = core.strategy.relabeled(core.player);
        return core;
    }

    const auto split = split_top(game, k);
    const auto plus = solve_short(split.plus);

    WinningCore core;
    if (plus.w1.empty()) {
        core.player = Player::P0;
        core.region = game.all_vertices();
        core.strategy = merge_strategy(split, plus.sigma);
    } else {
        for (Vertex v : plus.w1)
            if (split.is_copy(v))
                throw CertificationFailure("nonempty_step: player 1 wins from split copy " + std::to_string(v) +
                                           " of even priority " + std::to_string(k));
        core.player = Player::P1;
        core.region = plus.w1;
        core.strategy = merge_strategy(split, plus.tau).restricted_to(core.region);
    }
    core.strategy = canonical(game, core.strategy);
    certify(game, core.strategy, core.region, "nonempty_step");
    return core;
}

Solution solve_short(const ParityGame& game)
{
    Solution acc;
    std::vector<StrategyPart> parts[2];

    auto record = [&](Player p) {
        certify(game, acc.strategy(p), acc.region(p), "solve_short");
        parts[index(p)].push_back({acc.strategy(p), acc.region(p)});
    };

    for (;;) {
        VertexSet residual;
        for (Vertex v = 0; v < game.size(); ++v)
            if (!acc.winner(v)) residual.insert(residual.end(), v);
        if (residual.empty()) break;

        const auto sub = restrict(game, residual);
        std::vector<WinningCore> cores;
        if (relevant_priorities(sub.game).empty()) {
            auto base = base_case_solve(sub.game);
            for (Player p : {Player::P0, Player::P1})
                if (!base.region(p).empty())
                    cores.push_back({p, sub.lift(base.region(p)), sub.lift(base.strategy(p), base.region(p))});
        } else {
            auto core = nonempty_step(sub.game);
            cores.push_back({core.player, sub.lift(core.region), sub.lift(core.strategy, core.region)});
        }

        for (const auto& core : cores) {
            auto& region = acc.region(core.player);
            auto& strategy = acc.strategy(core.player);
            region.insert(core.region.begin(), core.region.end());
            for (auto [v, w] : core.strategy.choices())
                if (!strategy.has_choice(v)) strategy.set(v, w);
            record(core.player);
        }

        const std::size_t before[2] = {acc.w0.size(), acc.w1.size()};
        acc = closure(game, std::move(acc));
        for (Player p : {Player::P0, Player::P1})
            if (acc.region(p).size() != before[index(p)]) record(p);
    }

    for (Player p : {Player::P0, Player::P1}) {
        if (parts[index(p)].empty()) continue;
        auto fused = combine_strategies(game, p, parts[index(p)]);
        acc.strategy(p) = canonical(game, fused.strategy.restricted_to(acc.region(p)));
    }
    return acc;
}

}
