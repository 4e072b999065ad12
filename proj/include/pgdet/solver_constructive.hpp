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

#ifndef PGDET_SOLVER_CONSTRUCTIVE_HPP
#define PGDET_SOLVER_CONSTRUCTIVE_HPP

#include <span>
#include <utility>
#include <vector>

#include "pgdet/game.hpp"
#include "pgdet/transforms.hpp"

namespace pgdet {

/// What preprocess changed, enough to lift a solution of the normalized game back.
struct TransformRecord
{
    ParityGame original;
    VertexSet unfair_win;
    VertexSet useless_loops;
};

/// Removes unfair-win edges, then useless self-loops. Afterwards only absorbing
/// vertices carry self-loops; winning regions are unchanged.
std::pair<ParityGame, TransformRecord> preprocess(const ParityGame& game);

/// Re-expresses a solution of the normalized game as a solution of the original.
Solution lift_solution(const TransformRecord& record, const ParityGame& normalized, const Solution& sol);

/// Priorities of the split game with every copy of a vertex in `d ∩ x` raised to k+1.
std::vector<Priority> bump_priorities(const SplitGame& split, const VertexSet& x);

/// One round of the bumping iteration over the split game's vertices.
struct FixpointState
{
    std::size_t alpha = 0;
    VertexSet x;               // union of all earlier player 1 regions
    std::vector<Priority> pi;  // bumped priority function
    Strategy tau{Player::P1};  // composed player 1 strategy in the bumped game
    VertexSet w1;              // player 1 region of the bumped game
};

/**
 * On vertices of earlier regions, keep the choice of the earliest round whose
 * region contains the vertex; on the rest of `w1_new`, use `tau_plus`.
 */
Strategy compose_tau(std::span<const FixpointState> history, const VertexSet& w1_new, const Strategy& tau_plus);

struct FixpointTrace
{
    std::size_t depth = 0;
    bool swapped = false;         // priorities were shifted because the top relevant one was odd
    Priority k = 0;
    std::map<Vertex, Vertex> copies; // original -> copy, in the (possibly shifted) game
    std::vector<FixpointState> states;
    std::size_t alpha0 = 0;
};

struct ConstructiveOptions
{
    /// Assert monotonicity, strategy stability and per-round certification
    /// in every iteration, not only at the fixpoint.
    bool check_invariants = false;
    bool record_trace = false;
};

struct ConstructiveResult
{
    Solution solution;
    /// One entry per bumping loop, in call order (outermost first).
    std::vector<FixpointTrace> trace;
};

/// Requires that only absorbing vertices have self-loops.
ConstructiveResult fixpoint_solve(const ParityGame& game, const ConstructiveOptions& options = {});

Solution solve_constructive(const ParityGame& game);
ConstructiveResult solve_constructive(const ParityGame& game, const ConstructiveOptions& options);

}

#endif
