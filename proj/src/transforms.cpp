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

#include "pgdet/transforms.hpp"

#include <algorithm>
#include <limits>

#include "pgdet/errors.hpp"

namespace pgdet {

VertexSet SplitGame::copies() const
{
    VertexSet out;
    for (auto [copy, orig] : copy_of) out.insert(out.end(), copy);
    return out;
}

Vertex SplitGame::merge(Vertex v) const
{
    if (v >= plus.size())
        throw GameError("vertex " + std::to_string(v) + " is not in the split game");
    if (!is_copy(v)) return v;
    return copy_of.at(v);
}

std::vector<Vertex> SplitGame::merge_map() const
{
    std::vector<Vertex> f(plus.size());
    for (Vertex v = 0; v < plus.size(); ++v) f[v] = merge(v);
    return f;
}

SplitGame split_top(const ParityGame& game, Priority k)
{
    SplitGame out;
    out.base = game;
    out.k = k;
    out.d = relevant_vertices_with_priority(game, k);
    if (out.d.empty())
        throw GameError("no relevant vertex of priority " + std::to_string(k));

    const auto n = game.size();
    Vertex next = n;
    for (Vertex v : out.d) {
        out.original_of.emplace(v, next);
        out.copy_of.emplace(next, v);
        ++next;
    }

    std::vector<VertexInfo> vertices;
    vertices.reserve(next);
    for (Vertex u = 0; u < n; ++u) {
        VertexInfo info = game.vertex(u);
        for (Vertex& w : info.successors) {
            auto it = out.original_of.find(w);
            if (it != out.original_of.end()) w = it->second;
        }
        vertices.push_back(std::move(info));
    }
    for (auto [copy, orig] : out.copy_of) {
        VertexInfo info;
        info.owner = game.owner(orig);
        info.priority = k;
        info.successors = {copy};
        info.name = game.label(orig) + "~";
        vertices.push_back(std::move(info));
    }
    out.plus = ParityGame(std::move(vertices));
    return out;
}

Strategy merge_strategy(const SplitGame& split, const Strategy& s)
{
    Strategy out(s.player());
    for (auto [v, w] : s.choices())
        if (!split.is_copy(v)) out.set(v, split.merge(w));
    return out;
}

namespace {

bool priority_favors_owner(const ParityGame& game, Vertex v)
{
    return parity_winner(game.priority(v)) == game.owner(v);
}

}

EdgeRemoval remove_unfair_win(const ParityGame& game)
{
    auto vertices = game.vertices();
    EdgeRemoval out;
    for (Vertex v = 0; v < game.size(); ++v) {
        if (game.has_self_loop(v) && game.has_proper_successor(v) && priority_favors_owner(game, v)) {
            vertices[v].successors = {v};
            out.changed.insert(out.changed.end(), v);
        }
    }
    out.game = ParityGame(std::move(vertices));
    return out;
}

EdgeRemoval remove_useless_self_loops(const ParityGame& game)
{
    auto vertices = game.vertices();
    EdgeRemoval out;
    for (Vertex v = 0; v < game.size(); ++v) {
        if (game.has_self_loop(v) && game.has_proper_successor(v) && !priority_favors_owner(game, v)) {
            auto& succ = vertices[v].successors;
            succ.erase(std::remove(succ.begin(), succ.end(), v), succ.end());
            out.changed.insert(out.changed.end(), v);
        }
    }
    out.game = ParityGame(std::move(vertices));
    return out;
}

ParityGame shift_and_swap(const ParityGame& game)
{
    auto vertices = game.vertices();
    for (auto& info : vertices) {
        if (info.priority == std::numeric_limits<Priority>::max())
            throw GameError("priority overflow in shift_and_swap");
        info.priority += 1;
        info.owner = opponent(info.owner);
    }
    return ParityGame(std::move(vertices));
}

VertexSet Subgame::lift(const VertexSet& vs) const
{
    VertexSet out;
    for (Vertex v : vs) out.insert(lift(v));
    return out;
}

Strategy Subgame::lift(const Strategy& s, const VertexSet& domain) const
{
    Strategy out(s.player());
    for (auto [v, w] : s.choices()) out.set(lift(v), lift(w));
    for (Vertex v : domain) {
        if (game.owner(v) != s.player() || s.has_choice(v)) continue;
        auto succ = game.successors(v);
        if (succ.size() == 1) out.set(lift(v), lift(succ[0]));
    }
    return out;
}

Subgame restrict(const ParityGame& game, const VertexSet& keep)
{
    Subgame out;
    for (Vertex v : keep) {
        if (v >= game.size())
            throw GameError("restrict: vertex " + std::to_string(v) + " out of range");
        out.from_original.emplace(v, out.to_original.size());
        out.to_original.push_back(v);
    }
    std::vector<VertexInfo> vertices;
    vertices.reserve(keep.size());
    for (Vertex v : keep) {
        VertexInfo info = game.vertex(v);
        std::vector<Vertex> succ;
        for (Vertex w : info.successors) {
            auto it = out.from_original.find(w);
            if (it != out.from_original.end()) succ.push_back(it->second);
        }
        if (succ.empty())
            throw GameError("restrict: vertex " + std::to_string(v) + " has no successor in the kept set");
        info.successors = std::move(succ);
        vertices.push_back(std::move(info));
    }
    out.game = ParityGame(std::move(vertices));
    return out;
}

Solution closure(const ParityGame& game, Solution partial, ClosureStats* stats)
{
    const auto n = game.size();
    std::vector<int> decided(n, -1);
    for (int i = 0; i < 2; ++i) {
        for (Vertex v : partial.region(player_from_index(i))) {
            if (v >= n) throw GameError("closure: region vertex " + std::to_string(v) + " out of range");
            if (decided[v] != -1) throw GameError("closure: regions intersect at vertex " + std::to_string(v));
            decided[v] = i;
        }
    }

    auto join = [&](Vertex v, Player p) {
        decided[v] = index(p);
        partial.region(p).insert(v);
    };

    std::size_t rounds = 0;
    for (;;) {
        bool round_changed = false;

        // rule (a): the owner steps into its own region
        for (bool progress = true; progress;) {
            progress = false;
            for (Vertex v = 0; v < n; ++v) {
                if (decided[v] != -1) continue;
                const Player p = game.owner(v);
                std::optional<Vertex> target;
                for (Vertex w : game.successors(v))
                    if (decided[w] == index(p) && (!target || w < *target)) target = w;
                if (!target) continue;
                join(v, p);
                if (game.successors(v).size() > 1) partial.strategy(p).set(v, *target);
                progress = round_changed = true;
            }
        }

        // rule (b): every move of the owner leads into the opponent's region
        for (Vertex v = 0; v < n; ++v) {
            if (decided[v] != -1) continue;
            const Player other = opponent(game.owner(v));
            auto succ = game.successors(v);
            if (std::all_of(succ.begin(), succ.end(), [&](Vertex w) { return decided[w] == index(other); })) {
                join(v, other);
                round_changed = true;
            }
        }

        if (!round_changed) break;
        ++rounds;
    }
    if (stats) stats->rounds = rounds;
    return partial;
}

}
