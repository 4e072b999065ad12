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

#include "pgdet/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pgdet/errors.hpp"

namespace pgdet {

namespace {

// Uniform integer in [0, bound) by rejection sampling.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    for (;;) {
        auto x = rng();
        if (x < limit) return x % bound;
    }
}

}

ParityGame gen_random(const RandomGameSpec& spec)
{
    if (spec.vertices < 1) throw GameError("gen_random: need at least one vertex");
    if (spec.max_outdegree < 1) throw GameError("gen_random: max out-degree must be at least 1");

    std::mt19937_64 rng(spec.seed);
    const auto n = spec.vertices;
    const auto degree_cap = std::min(spec.max_outdegree, n);

    std::vector<VertexInfo> vertices(n);
    std::vector<Vertex> pool(n);
    for (auto& info : vertices) {
        info.owner = player_from_index(static_cast<int>(below(rng, 2)));
        info.priority = static_cast<Priority>(below(rng, std::uint64_t{spec.max_priority} + 1));
        const auto degree = 1 + below(rng, degree_cap);
        std::iota(pool.begin(), pool.end(), Vertex{0});
        for (std::size_t i = 0; i < degree; ++i) std::swap(pool[i], pool[i + below(rng, n - i)]);
        info.successors.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(degree));
        std::sort(info.successors.begin(), info.successors.end());
    }
    return ParityGame(std::move(vertices));
}

}
