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

#ifndef PGDET_GAME_IO_HPP
#define PGDET_GAME_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgdet/game.hpp"

namespace pgdet {

/**
 * PGSolver-style text game:
 *
 *     parity <max id>;
 *     <id> <priority> <owner> <succ>,<succ>,... ["name"];
 *
 * The header and a `start <id>;` line are optional. Identifiers may be sparse;
 * vertices are indexed in ascending identifier order.
 */
struct GameFile
{
    ParityGame game;
    std::vector<std::uint64_t> ids; // index -> identifier in the file
};

/// Throws ParseError with the line and column of the offending token.
GameFile parse_game_file(std::string_view text);
ParityGame parse_game(std::string_view text);

/// Canonical text: dense ids, one record per line, names only when present.
std::string emit_game(const ParityGame& game);

/// One line per vertex: `<id> <winner> <choice>|-`.
std::string emit_solution(const GameFile& file, const Solution& sol);
std::string emit_solution(const ParityGame& game, const Solution& sol);

/// Inverse of emit_solution. Vertices missing from the text stay undecided.
Solution parse_solution(const GameFile& file, std::string_view text);

}

#endif
