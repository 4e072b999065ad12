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

#ifndef PGDET_GAME_HPP
#define PGDET_GAME_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace pgdet {

using Vertex = std::size_t;
using Priority = std::uint32_t;

/// Vertex sets iterate in ascending index order, which every construction
/// relies on for deterministic tie-breaking.
using VertexSet = std::set<Vertex>;

enum class Player : std::uint8_t { P0 = 0, P1 = 1 };

constexpr Player opponent(Player p) noexcept { return p == Player::P0 ? Player::P1 : Player::P0; }
constexpr int index(Player p) noexcept { return static_cast<int>(p); }
constexpr Player player_from_index(int i) noexcept { return i == 0 ? Player::P0 : Player::P1; }

/// The player who wins a play whose highest infinitely-recurring priority is `p`.
constexpr Player parity_winner(Priority p) noexcept { return (p % 2 == 0) ? Player::P0 : Player::P1; }

std::string to_string(Player p);

struct VertexInfo
{
    Player owner = Player::P0;
    Priority priority = 0;
    std::vector<Vertex> successors;
    std::string name;
};

/**
 * Finite parity game arena. Immutable once constructed: every vertex has at
 * least one successor, successor indices are in range and duplicates are
 * dropped (first occurrence kept).
 */
class ParityGame
{
public:
    ParityGame() = default;
    explicit ParityGame(std::vector<VertexInfo> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    const VertexInfo& vertex(Vertex v) const;
    const std::vector<VertexInfo>& vertices() const noexcept { return vertices_; }

    Player owner(Vertex v) const { return vertex(v).owner; }
    Priority priority(Vertex v) const { return vertex(v).priority; }
    const std::string& name(Vertex v) const { return vertex(v).name; }
    std::span<const Vertex> successors(Vertex v) const { return vertex(v).successors; }
    std::span<const Vertex> predecessors(Vertex v) const;

    bool has_edge(Vertex from, Vertex to) const;
    bool has_self_loop(Vertex v) const { return has_edge(v, v); }
    /// True when v has an edge to some vertex other than itself.
    bool has_proper_successor(Vertex v) const;

    /// Same arena with the priority function replaced.
    ParityGame with_priorities(std::vector<Priority> priorities) const;

    VertexSet all_vertices() const;

    /// Human-readable label: the name if present, the index otherwise.
    std::string label(Vertex v) const;

    friend bool operator==(const ParityGame& a, const ParityGame& b);

private:
    void check(Vertex v) const;

    std::vector<VertexInfo> vertices_;
    std::vector<std::vector<Vertex>> predecessors_;
};

bool operator==(const VertexInfo& a, const VertexInfo& b);

enum class VertexClass { Absorbing, Vanishing, Relevant };

std::string to_string(VertexClass c);

VertexClass classify(const ParityGame& game, Vertex v);

/// Priorities carried by relevant vertices, ascending.
std::set<Priority> relevant_priorities(const ParityGame& game);

/// Relevant vertices of priority `k`, ascending.
VertexSet relevant_vertices_with_priority(const ParityGame& game, Priority k);

/**
 * Memoryless strategy of one player, possibly partial. A vertex with a single
 * successor never needs an explicit choice.
 */
class Strategy
{
public:
    explicit Strategy(Player player = Player::P0) : player_(player) { }

    Player player() const noexcept { return player_; }
    const std::map<Vertex, Vertex>& choices() const noexcept { return choices_; }

    std::optional<Vertex> choice(Vertex v) const;
    bool has_choice(Vertex v) const { return choices_.contains(v); }
    void set(Vertex v, Vertex successor) { choices_[v] = successor; }
    void erase(Vertex v) { choices_.erase(v); }
    std::size_t size() const noexcept { return choices_.size(); }
    bool empty() const noexcept { return choices_.empty(); }

    Strategy restricted_to(const VertexSet& domain) const;
    /// Same choices, attributed to the other player. Used by the priority-shift symmetry.
    Strategy relabeled(Player player) const;

    bool operator==(const Strategy&) const = default;

private:
    Player player_;
    std::map<Vertex, Vertex> choices_;
};

/// The successor a play takes at `v` when `v`'s owner follows `s`: the recorded
/// choice, or the only successor of a forced vertex.
std::optional<Vertex> effective_choice(const ParityGame& game, const Strategy& s, Vertex v);

/// Describes the first violated strategy invariant, or nullopt when `s` is valid in `game`.
std::optional<std::string> strategy_defect(const ParityGame& game, const Strategy& s);

/// Drops choices at forced vertices so equal strategies compare equal.
Strategy canonical(const ParityGame& game, const Strategy& s);

struct Lasso
{
    std::vector<Vertex> prefix;
    std::vector<Vertex> cycle;
    Player winner = Player::P0;

    bool operator==(const Lasso&) const = default;
};

/**
 * The unique play from `start` compatible with both strategies, cut at the
 * first repeated vertex. Throws StrategyError when a reached non-forced vertex
 * has no choice.
 */
Lasso play(const ParityGame& game, const Strategy& sigma, const Strategy& tau, Vertex start);

struct Solution
{
    VertexSet w0;
    VertexSet w1;
    Strategy sigma{Player::P0};
    Strategy tau{Player::P1};

    const VertexSet& region(Player p) const { return p == Player::P0 ? w0 : w1; }
    VertexSet& region(Player p) { return p == Player::P0 ? w0 : w1; }
    const Strategy& strategy(Player p) const { return p == Player::P0 ? sigma : tau; }
    Strategy& strategy(Player p) { return p == Player::P0 ? sigma : tau; }

    std::optional<Player> winner(Vertex v) const;

    bool operator==(const Solution&) const = default;
};

/// Exchanges the roles of the players: regions and strategies swap.
Solution swap_players(const Solution& sol);

}

#endif
