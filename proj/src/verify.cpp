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

#include "pgdet/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "pgdet/errors.hpp"

namespace pgdet {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Tarjan's algorithm on the subgraph induced by `active`. Returns component ids.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<Vertex>>& adj, const std::vector<char>& active)
{
    const auto n = adj.size();
    std::vector<std::size_t> comp(n, kNone), low(n, 0), order(n, kNone);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::size_t counter = 0, components = 0;

    // explicit call stack: (vertex, next successor position)
    std::vector<std::pair<Vertex, std::size_t>> frames;
    for (Vertex root = 0; root < n; ++root) {
        if (!active[root] || order[root] != kNone) continue;
        frames.emplace_back(root, 0);
        order[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < adj[v].size()) {
                Vertex w = adj[v][pos++];
                if (!active[w]) continue;
                if (order[w] == kNone) {
                    order[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
                continue;
            }
            Vertex done = v;
            frames.pop_back();
            if (!frames.empty()) {
                Vertex parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == order[done]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != done);
                ++components;
            }
        }
    }
    return comp;
}

// BFS from `sources` to the first vertex satisfying `stop`; returns the path
// including that vertex, or empty when unreachable.
std::vector<Vertex> bfs_path(const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& sources,
                             const std::function<bool(Vertex)>& allowed, const std::function<bool(Vertex)>& stop)
{
    const auto n = adj.size();
    std::vector<std::size_t> parent(n, kNone);
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (!seen[s] && allowed(s)) {
            seen[s] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (stop(v)) {
            std::vector<Vertex> path{v};
            while (parent[path.back()] != kNone) path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Vertex w : adj[v]) {
            if (seen[w] || !allowed(w)) continue;
            seen[w] = 1;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    return {};
}

}

Verdict verify_strategy(const ParityGame& game, const Strategy& s, const VertexSet& region)
{
    const auto n = game.size();
    const Player player = s.player();
    if (auto defect = strategy_defect(game, s)) throw GameError(*defect);

    // strategy-restricted adjacency, built lazily over the reachable part
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<char> reachable(n, 0);
    std::vector<Vertex> sources(region.begin(), region.end());
    std::deque<Vertex> queue;
    for (Vertex v : sources) {
        if (v >= n) throw GameError("verify: region vertex " + std::to_string(v) + " out of range");
        if (!reachable[v]) {
            reachable[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (game.owner(v) == player) {
            auto c = effective_choice(game, s, v);
            if (!c)
                throw StrategyError(v, "strategy for " + to_string(player) + " has no choice at reachable vertex " +
                                           std::to_string(v));
            adj[v] = {*c};
        } else {
            auto succ = game.successors(v);
            adj[v].assign(succ.begin(), succ.end());
        }
        for (Vertex w : adj[v]) {
            if (!reachable[w]) {
                reachable[w] = 1;
                queue.push_back(w);
            }
        }
    }

    std::set<Priority, std::greater<>> bad;
    for (Vertex v = 0; v < n; ++v)
        if (reachable[v] && parity_winner(game.priority(v)) != player) bad.insert(game.priority(v));

    for (Priority p : bad) {
        std::vector<char> active(n, 0);
        for (Vertex v = 0; v < n; ++v) active[v] = reachable[v] && game.priority(v) <= p;
        auto comp = strongly_connected(adj, active);

        for (Vertex x = 0; x < n; ++x) {
            if (!active[x] || game.priority(x) != p) continue;
            const auto cx = comp[x];
            auto in_comp = [&](Vertex w) { return active[w] && comp[w] == cx; };
            // a shortest cycle through x inside its component, if any
            auto back = bfs_path(adj, adj[x], in_comp, [x](Vertex w) { return w == x; });
            if (back.empty()) continue;

            std::vector<Vertex> cycle{x};
            cycle.insert(cycle.end(), back.begin(), back.end() - 1);
            std::vector<char> on_cycle(n, 0);
            for (Vertex c : cycle) on_cycle[c] = 1;

            auto to_cycle = bfs_path(adj, sources, [&](Vertex w) { return reachable[w] != 0; },
                                     [&](Vertex w) { return on_cycle[w] != 0; });
            const Vertex entry = to_cycle.back();
            to_cycle.pop_back();
            std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), entry), cycle.end());
            return Verdict{BadCycleWitness{std::move(to_cycle), std::move(cycle), p}};
        }
    }
    return Verdict{};
}

std::optional<Diagnostic> check_solution(const ParityGame& game, const Solution& sol)
{
    for (Vertex v : sol.w0)
        if (sol.w1.contains(v)) return Diagnostic{"regions intersect at vertex " + std::to_string(v), std::nullopt};
    for (Vertex v = 0; v < game.size(); ++v)
        if (!sol.w0.contains(v) && !sol.w1.contains(v))
            return Diagnostic{"regions do not cover vertex " + std::to_string(v), std::nullopt};
    for (const auto& region : {sol.w0, sol.w1})
        for (Vertex v : region)
            if (v >= game.size()) return Diagnostic{"region vertex " + std::to_string(v) + " out of range", std::nullopt};

    for (Player p : {Player::P0, Player::P1}) {
        const Strategy& s = sol.strategy(p);
        if (s.player() != p) return Diagnostic{"strategy for " + to_string(p) + " is labelled " + to_string(s.player()), std::nullopt};
        if (auto defect = strategy_defect(game, s)) return Diagnostic{*defect, std::nullopt};
    }

    for (Player p : {Player::P0, Player::P1}) {
        try {
            auto verdict = verify_strategy(game, sol.strategy(p), sol.region(p));
            if (!verdict)
                return Diagnostic{"strategy for " + to_string(p) + " does not win from its region: " +
                                      describe(game, *verdict.witness),
                                  verdict.witness};
        } catch (const StrategyError& e) {
            return Diagnostic{e.what(), std::nullopt};
        }
    }
    return std::nullopt;
}

std::string describe(const ParityGame& game, const BadCycleWitness& w)
{
    std::ostringstream out;
    out << "path [";
    for (std::size_t i = 0; i < w.path.size(); ++i) out << (i ? " " : "") << game.label(w.path[i]);
    out << "] cycle [";
    for (std::size_t i = 0; i < w.cycle.size(); ++i) out << (i ? " " : "") << game.label(w.cycle[i]);
    out << "] max priority " << w.max_priority;
    return out.str();
}

}
