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

#include "pgdet/cli.hpp"

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "pgdet/game_io.hpp"
#include "pgdet/solver_short.hpp"

namespace pgdet {
namespace {

namespace fs = std::filesystem;
using namespace corpus;

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("pgdet_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        unsetenv(kOracleBudgetEnv);
    }
    void TearDown() override
    {
        fs::remove_all(dir_);
        unsetenv(kOracleBudgetEnv);
    }

    std::string write(const std::string& name, const std::string& text)
    {
        auto path = dir_ / name;
        std::ofstream(path, std::ios::binary) << text;
        return path.string();
    }

    fs::path dir_;
};

const std::string kDetour = PGDET_TEST_DATA "/detour.pg";

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"solve", "--algo", "zielonka", kDetour}).code, kExitUsage);
    EXPECT_EQ(run({"solve", (dir_ / "missing.pg").string()}).code, kExitUsage);
    EXPECT_EQ(run({"gen", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST_F(CliTest, MalformedGameIsUsageError)
{
    auto bad = write("bad.pg", "0 1 0 ;\n");
    auto r = run({"solve", bad});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("empty successor list"), std::string::npos) << r.err;
}

TEST_F(CliTest, SolveDetourWithEverySolver)
{
    for (std::string algo : {"short", "constructive", "oracle"}) {
        auto r = run({"solve", "--algo", algo, kDetour});
        EXPECT_EQ(r.code, kExitPass) << algo;
        EXPECT_EQ(r.out, "0 1 -\n1 1 -\n2 1 -\n") << algo;
    }
}

TEST_F(CliTest, SolvePrintsChoices)
{
    auto path = write("s.pg", emit_game(vanishing_choice()));
    auto r = run({"solve", path});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out, "0 0 1\n1 0 -\n2 1 -\n");
}

TEST_F(CliTest, OracleBudgetIsALimitError)
{
    auto path = write("wide.pg", emit_game(gen_random({8, 5, 4, 3})));
    setenv(kOracleBudgetEnv, "1000", 1);
    auto r = run({"solve", "--algo", "oracle", path});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("budget"), std::string::npos) << r.err;
    // the other solvers are unaffected
    EXPECT_EQ(run({"solve", "--algo", "short", path}).code, kExitPass);
    // compare skips the oracle rather than failing
    auto c = run({"compare", path});
    EXPECT_EQ(c.code, kExitPass);
    EXPECT_NE(c.out.find("oracle skipped"), std::string::npos) << c.out;

    setenv(kOracleBudgetEnv, "lots", 1);
    EXPECT_EQ(run({"solve", "--algo", "oracle", path}).code, kExitUsage);
}

TEST_F(CliTest, OracleBudgetDefault)
{
    std::vector<VertexInfo> wide;
    for (Vertex v = 0; v < 12; ++v)
        wide.push_back({P0, static_cast<Priority>(v % 3), {(v + 1) % 12, (v + 2) % 12, (v + 3) % 12, (v + 4) % 12}, ""});
    auto path = write("wide12.pg", emit_game(ParityGame(wide)));
    EXPECT_EQ(run({"solve", "--algo", "oracle", path}).code, kExitUsage);
}

TEST_F(CliTest, VerifyAcceptsSolverOutputAndRefutesLies)
{
    auto game = write("g.pg", emit_game(gen_random({7, 4, 3, 11})));
    auto solved = run({"solve", "--algo", "constructive", game});
    ASSERT_EQ(solved.code, kExitPass);
    auto sol = write("g.sol", solved.out);
    auto ok = run({"verify", game, sol});
    EXPECT_EQ(ok.code, kExitPass);
    EXPECT_EQ(ok.out, "pass\n");

    auto lie = write("detour.sol", "0 0 -\n1 1 -\n2 1 -\n");
    auto refuted = run({"verify", kDetour, lie});
    EXPECT_EQ(refuted.code, kExitRefuted);
    EXPECT_NE(refuted.err.find("refuted"), std::string::npos);

    auto partial = write("partial.sol", "0 1 -\n");
    EXPECT_EQ(run({"verify", kDetour, partial}).code, kExitRefuted);

    auto garbage = write("garbage.sol", "0 one -\n");
    EXPECT_EQ(run({"verify", kDetour, garbage}).code, kExitUsage);
}

TEST_F(CliTest, CompareDetour)
{
    auto r = run({"compare", kDetour});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_NE(r.out.find("short w0={} w1={0,1,2} certified"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("constructive w0={} w1={0,1,2} certified"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("oracle w0={} w1={0,1,2} certified"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(": agree"), std::string::npos);
}

TEST_F(CliTest, CompareManyRandomGames)
{
    std::vector<std::string> args{"compare"};
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        args.push_back(write("r" + std::to_string(seed) + ".pg", emit_game(gen_random({1 + seed % 9, 5, 3, seed}))));
    auto r = run(args);
    EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
    EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
    EXPECT_EQ(run(args).out, r.out);
}

TEST_F(CliTest, TransformSplit)
{
    auto r = run({"transform", "--op", "split:4", kDetour});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out, "parity 3;\n0 3 0 3 \"u\";\n1 4 0 2 \"v\";\n2 1 0 2 \"w\";\n3 4 0 3 \"v~\";\n");
    EXPECT_EQ(run({"transform", "--op", "split:3", kDetour}).code, kExitUsage);
    EXPECT_EQ(run({"transform", "--op", "split:x", kDetour}).code, kExitUsage);
    EXPECT_EQ(run({"transform", "--op", "rotate", kDetour}).code, kExitUsage);
}

TEST_F(CliTest, TransformOthers)
{
    EXPECT_EQ(run({"transform", "--op", "shiftswap", kDetour}).out,
              "parity 2;\n0 4 1 1 \"u\";\n1 5 1 2 \"v\";\n2 2 1 2 \"w\";\n");
    auto loop = write("loop.pg", emit_game(useless_loop_example()));
    EXPECT_EQ(run({"transform", "--op", "deloop", loop}).out, "parity 1;\n0 1 0 1 \"v\";\n1 1 0 1 \"w\";\n");
    auto unfair = write("unfair.pg", emit_game(unfair_win_example()));
    EXPECT_EQ(run({"transform", "--op", "unfair", unfair}).out, "parity 1;\n0 2 0 0 \"v\";\n1 1 0 1 \"w\";\n");
}

TEST_F(CliTest, GenMatchesGoldenFile)
{
    auto r = run({"gen", "--n", "6", "--max-prio", "5", "--max-deg", "3", "--seed", "42"});
    EXPECT_EQ(r.code, kExitPass);
    std::ifstream in(PGDET_TEST_DATA "/random_6_5_3_42.pg", std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(r.out, golden.str());
}

TEST(MinimizeTest, KeepsPredicateAndShrinks)
{
    auto has_priority_four = [](const ParityGame& g) {
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.priority(v) == 4) return true;
        return false;
    };
    auto small = minimize_counterexample(ladder(4), has_priority_four);
    EXPECT_TRUE(has_priority_four(small));
    EXPECT_EQ(small.size(), 2u);
    for (Vertex v = 0; v < small.size(); ++v) EXPECT_FALSE(small.successors(v).empty());
}

TEST(MinimizeTest, FailingEverywhereShrinksToOneVertex)
{
    auto small = minimize_counterexample(gen_random({9, 3, 3, 4}), [](const ParityGame&) { return true; });
    EXPECT_EQ(small.size(), 1u);
}

}
}
