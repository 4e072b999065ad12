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

#include "pgdet/game.hpp"

#include <algorithm>

#include "pgdet/errors.hpp"

namespace pgdet {

std::string to_string(Player p)
{
    return p == Player::P0 ? "P0" : "P1";
}

std::string to_string(VertexClass c)
{
    switch (c) {
        case VertexClass::Absorbing: return "absorbing";
        case VertexClass::Vanishing: return "vanishing";
        case VertexClass::Relevant: return "relevant";
    }
    return "?";
}

bool operator==(const VertexInfo& a, const VertexInfo& b)
{
    return a.owner == b.owner && a.priority == b.priority && a.successors == b.successors && a.name == b.name;
}

bool operator==(const ParityGame& a, const ParityGame& b)
{
    return a.vertices_ == b.vertices_;
}

ParityGame::ParityGame(std::vector<VertexInfo> vertices)
    : vertices_(std::move(vertices)), predecessors_(vertices_.size())
{
    const auto n = vertices_.size();
    for (Vertex v = 0; v < n; ++v) {
        auto& succ = vertices_[v].successors;
        if (succ.empty())
            throw GameError("vertex " + std::to_string(v) + " has no successor");
        std::vector<Vertex> unique;
        unique.reserve(succ.size());
        for (Vertex w : succ) {
            if (w >= n)
                throw GameError("vertex " + std::to_string(v) + " has out-of-range successor " + std::to_string(w));
            if (std::find(unique.begin(), unique.end(), w) == unique.end()) unique.push_back(w);
        }
        succ = std::move(unique);
        for (Vertex w : succ) predecessors_[w].push_back(v);
    }
}

void ParityGame::check(Vertex v) const
{
    if (v >= vertices_.size())
        throw GameError("vertex index " + std::to_string(v) + " out of range (size " + std::to_string(vertices_.size()) + ")");
}

const VertexInfo& ParityGame::vertex(Vertex v) const
{
    check(v);
    return vertices_[v];
}

std::span<const Vertex> ParityGame::predecessors(Vertex v) const
{
    check(v);
    return predecessors_[v];
}

bool ParityGame::has_edge(Vertex from, Vertex to) const
{
    auto succ = successors(from);
    return std::find(succ.begin(), succ.end(), to) != succ.end();
}

bool ParityGame::has_proper_successor(Vertex v) const
{
    auto succ = successors(v);
    return std::any_of(succ.begin(), succ.end(), [v](Vertex w) { return w != v; });
}

ParityGame ParityGame::with_priorities(std::vector<Priority> priorities) const
{
    if (priorities.size() != vertices_.size())
        throw GameError("priority function has wrong size");
    auto copy = vertices_;
    for (Vertex v = 0; v < copy.size(); ++v) copy[v].priority = priorities[v];
    return ParityGame(std::move(copy));
}

VertexSet ParityGame::all_vertices() const
{
    VertexSet all;
    for (Vertex v = 0; v < size(); ++v) all.insert(all.end(), v);
    return all;
}

std::string ParityGame::label(Vertex v) const
{
    const auto& n = name(v);
    return n.empty() ? std::to_string(v) : n;
}

VertexClass classify(const ParityGame& game, Vertex v)
{
    auto succ = game.successors(v);
    if (succ.size() == 1 && succ[0] == v) return VertexClass::Absorbing;
    if (game.predecessors(v).empty()) return VertexClass::Vanishing;
    return VertexClass::Relevant;
}

std::set<Priority> relevant_priorities(const ParityGame& game)
{
    std::set<Priority> out;
    for (Vertex v = 0; v < game.size(); ++v)
        if (classify(game, v) == VertexClass::Relevant) out.insert(game.priority(v));
    return out;
}

VertexSet relevant_vertices_with_priority(const ParityGame& game, Priority k)
{
    VertexSet out;
    for (Vertex v = 0; v < game.size(); ++v)
        if (game.priority(v) == k && classify(game, v) == VertexClass::Relevant) out.insert(out.end(), v);
    return out;
}

std::optional<Vertex> Strategy::choice(Vertex v) const
{
    auto it = choices_.find(v);
    if (it == choices_.end()) return std::nullopt;
    return it->second;
}

Strategy Strategy::restricted_to(const VertexSet& domain) const
{
    Strategy out(player_);
    for (auto [v, w] : choices_)
        if (domain.contains(v)) out.choices_.emplace_hint(out.choices_.end(), v, w);
    return out;
}

Strategy Strategy::relabeled(Player player) const
{
    Strategy out(player);
    out.choices_ = choices_;
    return out;
}

std::optional<Vertex> effective_choice(const ParityGame& game, const Strategy& s, Vertex v)
{
    if (auto c = s.choice(v)) return c;
    auto succ = game.successors(v);
    if (succ.size() == 1) return succ[0];
    return std::nullopt;
}

std::optional<std::string> strategy_defect(const ParityGame& game, const Strategy& s)
{
    for (auto [v, w] : s.choices()) {
        if (v >= game.size())
            return "strategy for " + to_string(s.player()) + " chooses at out-of-range vertex " + std::to_string(v);
        if (game.owner(v) != s.player())
            return "strategy for " + to_string(s.player()) + " chooses at vertex " + std::to_string(v) +
                   " owned by " + to_string(game.owner(v));
        if (!game.has_edge(v, w))
            return "strategy for " + to_string(s.player()) + " chooses non-edge " + std::to_string(v) + "->" +
                   std::to_string(w);
    }
    return std::nullopt;
}

Strategy canonical(const ParityGame& game, const Strategy& s)
{
    Strategy out(s.player());
    for (auto [v, w] : s.choices())
        if (game.successors(v).size() > 1) out.set(v, w);
    return out;
}

Lasso play(const ParityGame& game, const Strategy& sigma, const Strategy& tau, Vertex start)
{
    if (start >= game.size())
        throw GameError("play start " + std::to_string(start) + " out of range");
    std::vector<std::size_t> seen_at(game.size(), SIZE_MAX);
    std::vector<Vertex> run;
    Vertex v = start;
    while (seen_at[v] == SIZE_MAX) {
        seen_at[v] = run.size();
        run.push_back(v);
        const Strategy& s = game.owner(v) == Player::P0 ? sigma : tau;
        auto next = effective_choice(game, s, v);
        if (!next)
            throw StrategyError(v, "no strategy choice for " + to_string(game.owner(v)) + " at vertex " + std::to_string(v));
        if (!game.has_edge(v, *next))
            throw StrategyError(v, "strategy choice " + std::to_string(v) + "->" + std::to_string(*next) + " is not an edge");
        v = *next;
    }
    Lasso lasso;
    auto cut = run.begin() + static_cast<std::ptrdiff_t>(seen_at[v]);
    lasso.prefix.assign(run.begin(), cut);
    lasso.cycle.assign(cut, run.end());
    Priority top = 0;
    for (Vertex c : lasso.cycle) top = std::max(top, game.priority(c));
    lasso.winner = parity_winner(top);
    return lasso;
}

std::optional<Player> Solution::winner(Vertex v) const
{
    if (w0.contains(v)) return Player::P0;
    if (w1.contains(v)) return Player::P1;
    return std::nullopt;
}

Solution swap_players(const Solution& sol)
{
    Solution out;
    out.w0 = sol.w1;
    out.w1 = sol.w0;
    out.sigma = sol.tau.relabeled(Player::P0);
    out.tau = sol.sigma.relabeled(Player::P1);
    return out;
}

}
