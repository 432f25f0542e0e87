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

bool acyclic_without(const GameGraph& gr, VertexId skip)
{
    const auto n = gr.num_vertices();
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& ed : gr.edges())
        if (ed.from != skip && ed.to != skip) ++indeg[ed.to];
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
        if (v != skip && indeg[v] == 0) ready.push_back(v);
    std::size_t done = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++done;
        for (auto w : gr.successors(v))
            if (w != skip && --indeg[w] == 0) ready.push_back(w);
    }
    return done == n - 1;
}

TEST(TriangleReduction, FigureTwoGame)
{
    auto rg = triangle_to_game(figure2_instance());
    EXPECT_EQ(rg.graph.num_vertices(), 17u);
    EXPECT_EQ(rg.source, 16u);
    EXPECT_EQ(rg.objective.k(), 4u);
    EXPECT_EQ(rg.objective.targets[0], make_set(17, {1, 2, 3, 13, 14, 15}));
    EXPECT_TRUE(validate(rg.graph).empty());

    auto file = load_game("figure2-triangle.gbg");
    EXPECT_EQ(file.graph, rg.graph);
    EXPECT_EQ(file.genbuchi.targets, rg.objective.targets);
}

TEST(TriangleReduction, FigureTwoHasTriangle)
{
    auto t = figure2_instance();
    EXPECT_TRUE(brute_force_triangle(t));
    auto rg = triangle_to_game(t);
    for (auto algo : {GenBuchiAlgo::basic, GenBuchiAlgo::fast}) {
        auto r = solve_with(algo, rg.graph, rg.objective);
        EXPECT_TRUE(r.w1.none());
        EXPECT_TRUE(decode_triangle(r));
    }
    EXPECT_TRUE(has_triangle_via_game(t));
}

TEST(TriangleReduction, FigureTwoWithoutEdgeCA)
{
    auto t = figure2_instance();
    std::erase(t.edges, Edge{2, 0});
    EXPECT_FALSE(brute_force_triangle(t));
    auto rg = triangle_to_game(t);
    auto r = solve_fast(rg.graph, rg.objective);
    EXPECT_TRUE(r.w1.test(rg.source));
    EXPECT_FALSE(decode_triangle(r));
    EXPECT_FALSE(has_triangle_via_game(t, GenBuchiAlgo::basic));
}

TEST(TriangleReduction, ThreeCycle)
{
    TriangleInstance t{3, {{0, 1}, {1, 2}, {2, 0}}};
    auto rg = triangle_to_game(t);
    EXPECT_TRUE(solve_basic(rg.graph, rg.objective).w1.none());
}

TEST(TriangleReduction, EmptyGraphPrunesToNothing)
{
    TriangleInstance t{4, {}};
    auto rg = triangle_to_game(t);
    EXPECT_FALSE(validate(rg.graph).empty());
    auto p = prune_sinks(rg);
    EXPECT_EQ(p.game.graph.num_vertices(), 0u);
    EXPECT_EQ(p.game.source, kNoVertex);
    EXPECT_FALSE(has_triangle_via_game(t));
}

TEST(TriangleReduction, PruningKeepsTheAnswer)
{
    // 0->1->2->0 plus 0->3; copies of 3 in V1..V3 are sinks
    TriangleInstance t{4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}};
    auto p = prune_sinks(triangle_to_game(t));
    EXPECT_TRUE(validate(p.game.graph).empty());
    EXPECT_EQ(p.game.graph.num_vertices(), 14u);
    EXPECT_TRUE(has_triangle_via_game(t));
}

TEST(TriangleReduction, RejectsSelfLoops)
{
    EXPECT_THROW(triangle_to_game(TriangleInstance{2, {{0, 0}}}), std::invalid_argument);
    EXPECT_THROW(triangle_to_game(TriangleInstance{2, {{0, 2}}}), std::invalid_argument);
}

TEST(OvReduction, FigureThreeGame)
{
    auto rg = ov_to_game(figure3_instance());
    EXPECT_EQ(rg.graph.num_vertices(), 11u);
    EXPECT_EQ(rg.objective.k(), 4u);
    for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(rg.objective.targets[l], make_set(11, {static_cast<VertexId>(7 + l)}));
    EXPECT_EQ(rg.graph.owner(0), Player::P2);
    auto file = load_game("figure3-ov.gbg");
    EXPECT_EQ(file.graph, rg.graph);
    EXPECT_EQ(file.genbuchi.targets, rg.objective.targets);
}

TEST(OvReduction, FigureThreeHasOrthogonalPair)
{
    auto inst = figure3_instance();
    EXPECT_TRUE(brute_force_ov(inst));
    auto rg = ov_to_game(inst);
    auto r = solve_basic(rg.graph, rg.objective);
    EXPECT_TRUE(r.w1.none());
    EXPECT_TRUE(decode_ov(r));
    EXPECT_TRUE(has_orthogonal_pair_via_game(inst));
}

TEST(OvReduction, OnlyAllOnesInSecondFamily)
{
    auto inst = figure3_instance();
    inst.s2 = {bits("111")};
    EXPECT_FALSE(brute_force_ov(inst));
    auto rg = ov_to_game(inst);
    auto r = solve_fast(rg.graph, rg.objective);
    EXPECT_TRUE(r.w1.test(rg.source));
    EXPECT_EQ(r.w1, full_set(rg.graph.num_vertices()));
    EXPECT_FALSE(decode_ov(r));
}

TEST(OvReduction, DegenerateInputs)
{
    auto inst = figure3_instance();
    auto wrong = inst;
    wrong.s2.push_back(bits("1111"));
    EXPECT_THROW(ov_to_game(wrong), std::invalid_argument);
    auto zero = inst;
    zero.s1.push_back(bits("000"));
    EXPECT_THROW(ov_to_game(zero), std::invalid_argument);
    EXPECT_TRUE(has_orthogonal_pair_via_game(zero));
    auto no_ones = inst;
    no_ones.s2 = {bits("110")};
    EXPECT_THROW(ov_to_game(no_ones), std::invalid_argument);
    EXPECT_FALSE(brute_force_ov(no_ones));
    EXPECT_FALSE(has_orthogonal_pair_via_game(no_ones));
    EXPECT_FALSE(has_orthogonal_pair_via_game(OvInstance{3, {}, {bits("111")}}));
}

TEST(OvReduction, SeededInstanceMatchesBruteForce)
{
    auto inst = gen_random_ov(4, 3, 0.5, 7);
    EXPECT_EQ(has_orthogonal_pair_via_game(inst), brute_force_ov(inst));
}

TEST(Generators, SingleVertexGameIsSelfLoop)
{
    auto gen = gen_random_game(1, 1, 1, 0.5, 3);
    EXPECT_EQ(gen.graph.edges(), (std::vector<Edge>{Edge{0, 0}}));
}

TEST(Generators, Deterministic)
{
    auto g1 = gen_random_game(30, 90, 3, 0.5, 11);
    auto g2 = gen_random_game(30, 90, 3, 0.5, 11);
    EXPECT_EQ(serialize_game({GameKind::gbg, g1.graph, g1.objective, {}, {}}),
              serialize_game({GameKind::gbg, g2.graph, g2.objective, {}, {}}));
    auto t1 = gen_random_triangle(10, 0.3, 5), t2 = gen_random_triangle(10, 0.3, 5);
    EXPECT_EQ(t1.edges, t2.edges);
    auto o1 = gen_random_ov(6, 4, 0.5, 9), o2 = gen_random_ov(6, 4, 0.5, 9);
    EXPECT_EQ(o1.s1, o2.s1);
    EXPECT_EQ(o1.s2, o2.s2);
    EXPECT_NE(serialize_game({GameKind::gbg, gen_random_game(30, 90, 3, 0.5, 12).graph, g1.objective, {}, {}}),
              serialize_game({GameKind::gbg, g1.graph, g1.objective, {}, {}}));
}

TEST(Generators, RandomGamesAreValidWithoutSinks)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto gen = gen_random_game(20, 10, 2, 0.5, seed);
        EXPECT_TRUE(validate(gen.graph).empty());
    }
    EXPECT_THROW(gen_random_game(3, 10, 1, 0.5, 0), std::invalid_argument);
    EXPECT_THROW(gen_random_game(3, 3, 0, 0.5, 0), std::invalid_argument);
    EXPECT_THROW(gen_random_game(3, 3, 1, 1.5, 0), std::invalid_argument);
}

TEST(Generators, OvGeneratorShape)
{
    auto inst = gen_random_ov(8, 5, 0.3, 2);
    EXPECT_EQ(inst.s1.size(), 8u);
    EXPECT_GE(inst.s2.size(), 8u);
    EXPECT_LE(inst.s2.size(), 9u);
    for (const auto& v : inst.s1) EXPECT_TRUE(v.any());
    EXPECT_TRUE(std::any_of(inst.s2.begin(), inst.s2.end(), [](const VertexSet& v) { return v.all(); }));
}

class ReductionSoundness : public ::testing::TestWithParam<int> {};

TEST_P(ReductionSoundness, MatchesBruteForce)
{
    const auto seed = static_cast<std::uint64_t>(GetParam());
    Rng r(seed + 77);
    const std::size_t n = 1 + r.below(15);
    auto t = gen_random_triangle(n, 0.05 + 0.3 * r.unit(), seed);
    EXPECT_EQ(has_triangle_via_game(t, GenBuchiAlgo::basic), brute_force_triangle(t));
    EXPECT_EQ(has_triangle_via_game(t, GenBuchiAlgo::fast), brute_force_triangle(t));
    auto rg = triangle_to_game(t);
    EXPECT_EQ(rg.graph.num_vertices(), 4 * n + 1);
    EXPECT_TRUE(acyclic_without(rg.graph, rg.source));

    auto inst = gen_random_ov(1 + r.below(12), 1 + r.below(6), 0.2 + 0.6 * r.unit(), seed);
    EXPECT_EQ(has_orthogonal_pair_via_game(inst, GenBuchiAlgo::basic), brute_force_ov(inst));
    EXPECT_EQ(has_orthogonal_pair_via_game(inst, GenBuchiAlgo::fast), brute_force_ov(inst));
    auto og = ov_to_game(inst);
    EXPECT_EQ(og.graph.num_vertices(), inst.s1.size() + inst.s2.size() + inst.d + 1);
    EXPECT_TRUE(acyclic_without(og.graph, og.source));
}

INSTANTIATE_TEST_SUITE_P(Random, ReductionSoundness, ::testing::Range(0, 60));

} // namespace
} // namespace gbgame
