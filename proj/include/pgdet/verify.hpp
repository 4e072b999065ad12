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

#ifndef PGDET_VERIFY_HPP
#define PGDET_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgdet/game.hpp"

namespace pgdet {

/**
 * A reachable cycle refuting a strategy. Like a Lasso, `path` holds the
 * vertices before the cycle is entered and `cycle` starts at the entry vertex.
 * Both live in the strategy-restricted graph, and max_priority has the
 * adversary's parity.
 */
struct BadCycleWitness
{
    std::vector<Vertex> path;
    std::vector<Vertex> cycle;
    Priority max_priority = 0;

    bool operator==(const BadCycleWitness&) const = default;
};

struct Verdict
{
    std::optional<BadCycleWitness> witness;

    bool passed() const noexcept { return !witness; }
    explicit operator bool() const noexcept { return passed(); }
};

/**
 * Checks that `s` wins for `s.player()` from every vertex of `region`.
 *
 * In the graph where the player's vertices keep only their chosen edge and
 * the adversary keeps everything, the strategy wins iff every cycle reachable
 * from `region` has a maximum priority of the player's parity. For each
 * adversary priority p (highest first) we look for a strongly connected
 * component of the reachable vertices with priority <= p that contains a
 * cycle through a priority-p vertex.
 *
 * Throws StrategyError when a reachable vertex of the player is missing a
 * choice, GameError when `s` chooses outside the game's edges.
 */
Verdict verify_strategy(const ParityGame& game, const Strategy& s, const VertexSet& region);

struct Diagnostic
{
    std::string message;
    std::optional<BadCycleWitness> witness;
};

/// Partition clauses first, then strategy validity, then verify_strategy for w0 and w1.
std::optional<Diagnostic> check_solution(const ParityGame& game, const Solution& sol);

std::string describe(const ParityGame& game, const BadCycleWitness& w);

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Number of (sigma, tau) profiles the oracle enumerates, saturated at UINT64_MAX.
std::uint64_t profile_count(const ParityGame& game);

struct OracleAnalysis
{
    Solution solution;
    /// For each vertex, the lexicographically least total strategy of its
    /// winner that wins from it, and the full set that strategy wins from.
    std::vector<Strategy> least_winning;
    std::vector<VertexSet> least_winning_region;
};

/// Exhaustive enumeration of total memoryless strategy profiles. Throws
/// BudgetExceeded when profile_count exceeds `budget`.
OracleAnalysis brute_force_analyze(const ParityGame& game, std::uint64_t budget = kDefaultOracleBudget);

Solution brute_force_solve(const ParityGame& game, std::uint64_t budget = kDefaultOracleBudget);

}

#endif
