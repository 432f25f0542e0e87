/*
 * Copyright 2026 The gbgame Authors
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

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace gbgame {
namespace {

using namespace gbgame::testing;

const std::vector<Edge> kSolid{{a, b}, {b, a}, {b, f}, {c, g}, {c, i}, {d, c}, {d, e}, {e, d}, {e, j}, {f, a},
                               {f, g}, {g, b}, {g, h}, {h, b}, {h, c}, {i, h}, {i, d}, {j, d}, {j, e}};
const std::vector<Edge> kDashed{{c, h}, {c, d}, {f, b}};

std::vector<Edge> sorted(std::vector<Edge> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

TEST(LevelGraph, FigureOneLevelOneIsSolidEdges)
{
    auto gr = figure1_graph();
    Arena ar(gr);
    Decomposition dec(ar);
    auto lg = dec.build_level(ar, 1);
    EXPECT_EQ(lg.sorted_edges(), sorted(kSolid));
    EXPECT_EQ(lg.z, make_set(10, {c}));
}

TEST(LevelGraph, FigureOneLevelTwoAddsDashedEdges)
{
    auto gr = figure1_graph();
    Arena ar(gr);
    Decomposition dec(ar);
    auto expected = kSolid;
    expected.insert(expected.end(), kDashed.begin(), kDashed.end());
    auto lg = dec.build_level(ar, 2);
    EXPECT_EQ(lg.sorted_edges(), sorted(expected));
    EXPECT_EQ(lg.z, make_set(10, {c}));
}

TEST(LevelGraph, TopLevelIsWholeArena)
{
    auto gr = figure1_graph();
    Arena ar(gr);
    Decomposition dec(ar);
    auto lg = dec.build_level(ar, ceil_log2(10));
    EXPECT_EQ(lg.sorted_edges(), sorted(gr.edges()));
    EXPECT_TRUE(lg.z.none());
}

TEST(LevelGraph, SizeAndLiveness)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto gen = gen_random_game(40, 300, 1, 0.5, seed);
        Arena ar(gen.graph);
        Decomposition dec(ar);
        VertexSet gone(40);
        gone.set(seed % 40);
        ar.remove(gone);
        for (unsigned lvl = 1; lvl <= ceil_log2(ar.size()); ++lvl) {
            auto lg = dec.build_level(ar, lvl);
            EXPECT_LE(lg.graph.num_edges(), 2 * (std::size_t{1} << lvl) * ar.size());
            for (const auto& ed : lg.graph.edges()) {
                EXPECT_TRUE(ar.contains(ed.from) && ar.contains(ed.to));
            }
        }
    }
}

TEST(SolveBasic, FigureOne)
{
    auto r = solve_basic(figure1_graph(), figure1_objective());
    EXPECT_EQ(r.w1, make_set(10, {a, b, c, f, g, h, i}));
    EXPECT_EQ(r.w2, make_set(10, {d, e, j}));
    ASSERT_EQ(r.trace.size(), 2u);
    EXPECT_EQ(r.trace[0].witness, 1u);
    EXPECT_EQ(r.trace[0].removed, make_set(10, {d, e, j}));
    EXPECT_EQ(r.trace[1].kind, RecordKind::terminal);
}

TEST(SolveFast, FigureOneTrace)
{
    auto r = solve_fast(figure1_graph(), figure1_objective());
    EXPECT_EQ(r.w1, make_set(10, {a, b, c, f, g, h, i}));
    ASSERT_EQ(r.trace.size(), 2u);
    EXPECT_EQ(r.trace[0].kind, RecordKind::dominion);
    EXPECT_EQ(r.trace[0].level, 1u);
    EXPECT_EQ(r.trace[0].witness, 1u);
    EXPECT_EQ(r.trace[0].dominion, make_set(10, {e, j}));
    EXPECT_EQ(r.trace[0].removed, make_set(10, {d, e, j}));
    EXPECT_EQ(r.trace[1].kind, RecordKind::terminal);
    EXPECT_EQ(r.trace[1].level, 3u);
}

TEST(LevelGraph, FigureOneDottedEdgeFirstAppearsAtLevelThree)
{
    auto gr = figure1_graph();
    Arena ar(gr);
    Decomposition dec(ar);
    for (unsigned lvl = 1; lvl <= 3; ++lvl) {
        auto edges = dec.build_level(ar, lvl).graph.edges();
        EXPECT_EQ(std::count(edges.begin(), edges.end(), Edge{c, b}), lvl == 3 ? 1 : 0) << lvl;
    }
}

TEST(Solve, EmptyTargetLosesEverywhere)
{
    auto gr = figure1_graph();
    GenBuchiObjective obj{{make_set(10, {a, e, i}), VertexSet(10)}};
    EXPECT_TRUE(solve_basic(gr, obj).w1.none());
    EXPECT_TRUE(solve_fast(gr, obj).w1.none());
}

TEST(Solve, SelfLoopInBothTargets)
{
    GameGraph gr(1, {Player::P1}, {{0, 0}});
    GenBuchiObjective obj{{make_set(1, {0}), make_set(1, {0})}};
    EXPECT_EQ(solve_basic(gr, obj).w1, make_set(1, {0}));
    EXPECT_EQ(solve_fast(gr, obj).w1, make_set(1, {0}));
}

TEST(Solve, FullTargetSingleIteration)
{
    auto gr = figure1_graph();
    GenBuchiObjective obj{{full_set(10)}};
    for (auto algo : {GenBuchiAlgo::basic, GenBuchiAlgo::fast}) {
        auto r = solve_with(algo, gr, obj);
        EXPECT_EQ(r.w1, full_set(10));
        ASSERT_EQ(r.trace.size(), 1u);
        EXPECT_EQ(r.trace[0].kind, RecordKind::terminal);
    }
}

TEST(Solve, RejectsInvalidInput)
{
    GameGraph gr(2, {Player::P1, Player::P1}, {{0, 1}});
    EXPECT_THROW(solve_basic(gr, GenBuchiObjective{{VertexSet(2)}}), InvalidGame);
    EXPECT_THROW(solve_fast(gr, GenBuchiObjective{{VertexSet(2)}}), InvalidGame);
}

TEST(Solve, TargetsBySizeIsStable)
{
    GenBuchiObjective obj{{make_set(5, {0, 1, 2}), make_set(5, {3}), make_set(5, {4}), make_set(5, {0, 1})}};
    EXPECT_EQ(targets_by_size(obj), (std::vector<std::size_t>{1, 2, 3, 0}));
}

class GenBuchiRandom : public ::testing::TestWithParam<int> {};

TEST_P(GenBuchiRandom, AgreesWithFixpointAndObeysTraceLaws)
{
    const auto seed = static_cast<std::uint64_t>(GetParam());
    auto sh = random_shape(seed, 30, 150, 3);
    auto gen = gen_random_game(sh.n, sh.m, sh.k, sh.bias, seed, sh.density);
    const auto& gr = gen.graph;
    const auto& obj = gen.objective;
    const auto expected = fixpoint_genbuchi(gr, obj.targets);

    auto basic = solve_basic(gr, obj);
    auto fast = solve_fast(gr, obj);
    EXPECT_EQ(basic.w1, expected);
    EXPECT_EQ(fast.w1, expected);
    EXPECT_EQ(basic.w1 | basic.w2, full_set(sh.n));
    EXPECT_TRUE((basic.w1 & basic.w2).none());
    EXPECT_LE(basic.trace.size(), 2 * obj.targets[0].count() + 2);

    for (const auto* r : {&basic, &fast}) {
        Arena cur(gr);
        VertexSet removed(sh.n);
        for (const auto& rec : r->trace) {
            if (rec.kind == RecordKind::terminal) continue;
            EXPECT_TRUE(is_closed(cur, Player::P1, rec.dominion));
            EXPECT_TRUE((rec.dominion & obj.targets[rec.witness]).none());
            EXPECT_EQ(rec.removed, attractor(cur, Player::P2, rec.dominion).members);
            if (rec.level > 1) EXPECT_GT(rec.removed.count(), std::size_t{1} << (rec.level - 1));
            EXPECT_TRUE((removed & rec.removed).none());
            removed |= rec.removed;
            cur.remove(rec.removed);
        }
        EXPECT_EQ(removed, r->w2);
    }

    // an extra target never enlarges W1
    auto more = obj;
    more.targets.push_back(gen_random_game(sh.n, sh.n, 1, 0.5, seed + 7, 0.5).objective.targets[0]);
    EXPECT_TRUE(solve_fast(gr, more).w1.is_subset_of(fast.w1));
}

INSTANTIATE_TEST_SUITE_P(Random, GenBuchiRandom, ::testing::Range(0, 150));

} // namespace
} // namespace gbgame
