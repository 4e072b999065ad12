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

#ifndef PGDET_TRANSFORMS_HPP
#define PGDET_TRANSFORMS_HPP

#include <map>
#include <vector>

#include "pgdet/game.hpp"

namespace pgdet {

/**
 * Result of splitting every relevant vertex of priority `k`.
 *
 * Each such vertex v stays in place as a vanishing vertex that keeps its
 * outgoing edges; a fresh absorbing copy (appended after the original
 * indices, in ascending order of v) receives all of v's incoming edges and a
 * self-loop. Copies inherit owner and priority of their original.
 */
struct SplitGame
{
    ParityGame base;
    ParityGame plus;
    Priority k = 0;
    VertexSet d;
    std::map<Vertex, Vertex> copy_of;     // copy -> original
    std::map<Vertex, Vertex> original_of; // original -> copy

    bool is_copy(Vertex v) const { return v >= base.size(); }
    VertexSet copies() const;
    /// The merge map: identity on the original vertices, copy -> original otherwise.
    Vertex merge(Vertex v) const;
    std::vector<Vertex> merge_map() const;
};

SplitGame split_top(const ParityGame& game, Priority k);

/// Restricts `s` to original vertices and maps its targets through the merge map.
Strategy merge_strategy(const SplitGame& split, const Strategy& s);

struct EdgeRemoval
{
    ParityGame game;
    VertexSet changed;
};

/// Vertices with a self-loop, proper successors and a priority good for their
/// owner lose their proper successors.
EdgeRemoval remove_unfair_win(const ParityGame& game);

/// Self-loops on vertices with proper successors whose priority is bad for
/// their owner are deleted.
EdgeRemoval remove_useless_self_loops(const ParityGame& game);

/// Every priority +1, owners exchanged, edges untouched.
ParityGame shift_and_swap(const ParityGame& game);

/// Induced subgame with the index correspondence kept on both sides.
struct Subgame
{
    ParityGame game;
    std::vector<Vertex> to_original;
    std::map<Vertex, Vertex> from_original;

    Vertex lift(Vertex v) const { return to_original.at(v); }
    VertexSet lift(const VertexSet& vs) const;
    /// Lifts `s` and pins explicit choices at `domain` vertices that were forced
    /// only inside the subgame.
    Strategy lift(const Strategy& s, const VertexSet& domain) const;
};

/// Throws GameError naming the first vertex of `keep` without a successor in `keep`.
Subgame restrict(const ParityGame& game, const VertexSet& keep);

struct ClosureStats
{
    std::size_t rounds = 0;
};

/**
 * Grows the regions of a partial solution until no undecided vertex owned by
 * player i has an edge into w_i and every undecided vertex keeps an undecided
 * successor. Rule (a), a vertex with an edge into its owner's region joins it, is
 * exhausted before each sweep of rule (b), a vertex whose every move leads into
 * the opponent's region joins that region.
 */
Solution closure(const ParityGame& game, Solution partial, ClosureStats* stats = nullptr);

}

#endif
