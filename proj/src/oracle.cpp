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

#include <limits>

#include "pgdet/errors.hpp"
#include "pgdet/solver_short.hpp"
#include "pgdet/verify.hpp"

namespace pgdet {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Odometer over the total strategies of one player, in lexicographic order of
// (choice at lowest vertex, choice at next vertex, ...), choices in successor-list order.
class StrategyEnumerator
{
public:
    StrategyEnumerator(const ParityGame& game, Player player) : game_(game), player_(player)
    {
        for (Vertex v = 0; v < game.size(); ++v)
            if (game.owner(v) == player && game.successors(v).size() > 1) vertices_.push_back(v);
        digits_.assign(vertices_.size(), 0);
    }

    Strategy current() const
    {
        Strategy s(player_);
        for (std::size_t i = 0; i < vertices_.size(); ++i) s.set(vertices_[i], game_.successors(vertices_[i])[digits_[i]]);
        return s;
    }

    bool advance()
    {
        for (std::size_t i = vertices_.size(); i-- > 0;) {
            if (++digits_[i] < game_.successors(vertices_[i]).size()) return true;
            digits_[i] = 0;
        }
        return false;
    }

    std::uint64_t count() const
    {
        std::uint64_t c = 1;
        for (Vertex v : vertices_) c = saturating_mul(c, game_.successors(v).size());
        return c;
    }

private:
    const ParityGame& game_;
    Player player_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> digits_;
};

std::vector<Strategy> all_strategies(const ParityGame& game, Player player)
{
    std::vector<Strategy> out;
    StrategyEnumerator e(game, player);
    do out.push_back(e.current());
    while (e.advance());
    return out;
}

// Vertices from which `mine` wins against every strategy in `theirs`.
VertexSet winning_set(const ParityGame& game, const Strategy& mine, const std::vector<Strategy>& theirs)
{
    const Player me = mine.player();
    std::vector<char> candidate(game.size(), 1);
    std::size_t alive = game.size();
    for (const auto& adversary : theirs) {
        if (alive == 0) break;
        const Strategy& sigma = me == Player::P0 ? mine : adversary;
        const Strategy& tau = me == Player::P0 ? adversary : mine;
        for (Vertex v = 0; v < game.size(); ++v) {
            if (!candidate[v]) continue;
            if (play(game, sigma, tau, v).winner != me) {
                candidate[v] = 0;
                --alive;
            }
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < game.size(); ++v)
        if (candidate[v]) out.insert(out.end(), v);
    return out;
}

}

std::uint64_t profile_count(const ParityGame& game)
{
    return saturating_mul(StrategyEnumerator(game, Player::P0).count(), StrategyEnumerator(game, Player::P1).count());
}

OracleAnalysis brute_force_analyze(const ParityGame& game, std::uint64_t budget)
{
    const auto profiles = profile_count(game);
    if (profiles > budget)
        throw BudgetExceeded("oracle needs " + std::to_string(profiles) + " strategy profiles, budget is " +
                             std::to_string(budget));

    const std::vector<Strategy> strategies[2] = {all_strategies(game, Player::P0), all_strategies(game, Player::P1)};

    OracleAnalysis out;
    out.least_winning.resize(game.size());
    out.least_winning_region.resize(game.size());
    std::vector<char> settled(game.size(), 0);

    for (int i = 0; i < 2; ++i) {
        const Player p = player_from_index(i);
        for (const auto& s : strategies[i]) {
            auto wins = winning_set(game, s, strategies[1 - i]);
            for (Vertex v : wins) {
                out.solution.region(p).insert(v);
                if (settled[v] & (1 << i)) continue;
                settled[v] |= static_cast<char>(1 << i);
                out.least_winning[v] = canonical(game, s);
                out.least_winning_region[v] = wins;
            }
        }
    }

    for (Vertex v : out.solution.w0)
        if (out.solution.w1.contains(v))
            throw CertificationFailure("oracle: both players win from vertex " + std::to_string(v));
    for (Vertex v = 0; v < game.size(); ++v)
        if (!out.solution.winner(v))
            throw CertificationFailure("oracle: no player wins from vertex " + std::to_string(v));

    for (Player p : {Player::P0, Player::P1}) {
        std::vector<StrategyPart> parts;
        for (Vertex v : out.solution.region(p)) parts.push_back({out.least_winning[v], out.least_winning_region[v]});
        if (parts.empty()) continue;
        auto combined = combine_strategies(game, p, parts);
        out.solution.strategy(p) = canonical(game, combined.strategy.restricted_to(out.solution.region(p)));
    }
    return out;
}

Solution brute_force_solve(const ParityGame& game, std::uint64_t budget)
{
    return brute_force_analyze(game, budget).solution;
}

}
