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

#ifndef PGDET_TESTS_CORPUS_HPP
#define PGDET_TESTS_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "pgdet/game.hpp"
#include "pgdet/generate.hpp"

namespace pgdet::corpus {

constexpr Player P0 = Player::P0;
constexpr Player P1 = Player::P1;

// u(0,3) -> v(_,4) -> w(_,1) -> w. The "_" owners are irrelevant (every move
// is forced); they are fixed to P0 here.
inline ParityGame detour()
{
    return ParityGame({
        {P0, 3, {1}, "u"},
        {P0, 4, {2}, "v"},
        {P0, 1, {2}, "w"},
    });
}

// u(P1,1) <-> v(P1,2)
inline ParityGame two_cycle()
{
    return ParityGame({
        {P1, 1, {1}, "u"},
        {P1, 2, {0}, "v"},
    });
}

inline ParityGame single_absorbing(Priority p)
{
    return ParityGame({{P0, p, {0}, "a"}});
}

// v(P0,2) with a self-loop and an edge to the absorbing w(_,1).
inline ParityGame unfair_win_example()
{
    return ParityGame({
        {P0, 2, {0, 1}, "v"},
        {P0, 1, {1}, "w"},
    });
}

// v(P0,1) with a self-loop and an edge to the absorbing w(_,1).
inline ParityGame useless_loop_example()
{
    return ParityGame({
        {P0, 1, {0, 1}, "v"},
        {P0, 1, {1}, "w"},
    });
}

// Vanishing s(P0,1) choosing between absorbing t0(2) and t1(1).
inline ParityGame vanishing_choice()
{
    return ParityGame({
        {P0, 1, {1, 2}, "s"},
        {P0, 2, {1}, "t0"},
        {P0, 1, {2}, "t1"},
    });
}

/**
 * Truncation of the infinite ladder with `rungs` top vertices t0..t{m-1}
 * (P0, priority 3). Top vertex j steps right to t{j+1} or down into column j,
 * which holds j vertices of priority 4 in a chain ending at an absorbing
 * priority-1 vertex. The last top vertex loses its rightward edge and keeps
 * only the downward one. Column vertices are P0-owned (all moves forced).
 */
inline ParityGame ladder(std::size_t rungs)
{
    std::vector<VertexInfo> vs;
    for (std::size_t j = 0; j < rungs; ++j) vs.push_back({P0, 3, {}, "t" + std::to_string(j)});
    for (std::size_t j = 0; j < rungs; ++j) {
        const Vertex first = vs.size();
        if (j + 1 < rungs) vs[j].successors.push_back(j + 1);
        vs[j].successors.push_back(first);
        for (std::size_t r = 0; r < j; ++r)
            vs.push_back({P0, 4, {vs.size() + 1}, "c" + std::to_string(j) + "_" + std::to_string(r)});
        vs.push_back({P0, 1, {vs.size()}, "c" + std::to_string(j) + "_end"});
    }
    return ParityGame(std::move(vs));
}

/// Seeded corpus: game i has 1 + i % max_n vertices, seed base_seed + i.
inline std::vector<ParityGame> random_corpus(std::size_t count, std::size_t max_n, Priority max_prio,
                                             std::size_t max_deg, std::uint64_t base_seed)
{
    std::vector<ParityGame> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen_random({1 + i % max_n, max_prio, max_deg, base_seed + i}));
    return out;
}

}

#endif
