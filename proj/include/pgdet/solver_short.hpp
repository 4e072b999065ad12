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

#ifndef PGDET_SOLVER_SHORT_HPP
#define PGDET_SOLVER_SHORT_HPP

#include <span>

#include "pgdet/game.hpp"

namespace pgdet {

/// A nonempty region together with a strategy certified to win from all of it.
struct WinningCore
{
    Player player = Player::P0;
    VertexSet region;
    Strategy strategy{Player::P0};
};

struct StrategyPart
{
    Strategy strategy;
    VertexSet region;
};

/// Solves a game without relevant vertices: every play visits at most two vertices.
Solution base_case_solve(const ParityGame& game);

/**
 * Fuses strategies that each win from their own region into one strategy
 * winning from the union. At each vertex the choice of the earliest part
 * containing it is used; a play leaving that part's strategy can only move to
 * a vertex of strictly earlier rank, so it eventually follows one part forever.
 *
 * Throws GameError when a part fails verification.
 */
StrategyPart combine_strategies(const ParityGame& game, Player player, std::span<const StrategyPart> parts);

/**
 * Finds a nonempty region won by some player: split the highest relevant
 * priority k (shifting priorities first when k is odd), solve the split game
 * and merge its strategy back. If player 0 wins the split game everywhere the
 * merged player 0 strategy wins the whole game, otherwise the merged player 1
 * strategy wins from player 1's region of the split game.
 */
WinningCore nonempty_step(const ParityGame& game);

/// Repeats nonempty_step on the undecided residue until the game is solved.
Solution solve_short(const ParityGame& game);

}

#endif
