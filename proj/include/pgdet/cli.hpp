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

#ifndef PGDET_CLI_HPP
#define PGDET_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pgdet/game.hpp"

namespace pgdet {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitPass = 0, kExitRefuted = 1, kExitUsage = 2 };

/// Environment variable overriding the oracle's profile budget.
inline constexpr const char* kOracleBudgetEnv = "PGDET_ORACLE_BUDGET";

/**
 * Greedily deletes vertices (highest index first) while the remaining set is
 * closed under "has a successor inside" and `still_failing` keeps holding.
 * Best effort: the result is locally, not globally, minimal.
 */
ParityGame minimize_counterexample(const ParityGame& game, const std::function<bool(const ParityGame&)>& still_failing);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}

#endif
