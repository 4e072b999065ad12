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

#ifndef PGDET_GENERATE_HPP
#define PGDET_GENERATE_HPP

#include <cstdint>

#include "pgdet/game.hpp"

namespace pgdet {

struct RandomGameSpec
{
    std::size_t vertices = 1;
    Priority max_priority = 0;
    std::size_t max_outdegree = 1;
    std::uint64_t seed = 0;
};

/**
 * Uniform owner and priority per vertex; 1..max_outdegree distinct successors
 * (capped at the vertex count) listed in ascending order. Output depends only
 * on these parameters: draws come from std::mt19937_64, whose sequence is fixed by
 * the standard, reduced without implementation-defined distributions.
 */
ParityGame gen_random(const RandomGameSpec& spec);

}

#endif
