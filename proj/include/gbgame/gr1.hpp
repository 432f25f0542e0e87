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

#pragma once

#include <optional>
#include <vector>

#include "genbuchi.hpp"
#include "progress_measure.hpp"

namespace gbgame {

enum class GenBuchiAlgo { basic, fast };

struct Gr1Options {
    GenBuchiAlgo inner = GenBuchiAlgo::fast; // solver for the generalized Buchi sub-games
};

struct Gr1Found {
    VertexSet dominion;
    std::size_t witness;
    unsigned level;
};

namespace detail {

inline SolveResult solve_genbuchi(const Arena& a, const std::vector<VertexSet>& targets, GenBuchiAlgo algo)
{
    return algo == GenBuchiAlgo::fast ? solve_fast(a, targets) : solve_basic(a, targets);
}

/** First l for which player 2 wins the assumptions outside Attr_P1(U_l). */
inline std::optional<Gr1Found> large_dominion(const Arena& cur, const Gr1Objective& obj, GenBuchiAlgo algo)
{
    for (std::size_t l = 0; l < obj.guarantees.size(); ++l) {
        auto y = attractor(cur, Player::P1, obj.guarantees[l] & cur.members()).members;
        Arena rest = cur.restrict(~y);
        if (rest.empty()) continue;
        auto s = solve_genbuchi(rest.swap(), obj.assumptions, algo).w1;
        if (s.any()) return Gr1Found{std::move(s), l, 0};
    }
    return std::nullopt;
}

inline std::optional<Gr1Found> small_dominion(Decomposition& dec, const Arena& cur, const Gr1Objective& obj,
                                              std::size_t kmax)
{
    const unsigned cap = std::max(1u, ceil_log2(2 * kmax));
    const unsigned full = std::max(1u, ceil_log2(cur.max_out_degree()));
    for (unsigned i = 1; i <= cap; ++i) {
        std::optional<LevelGraph> lg;
        if (i < full) lg = dec.build_level(cur, i);
        const Arena la = lg ? lg->arena() : cur;
        for (std::size_t l = 0; l < obj.guarantees.size(); ++l) {
            VertexSet seed = obj.guarantees[l] & cur.members();
            if (lg) seed |= lg->z;
            auto y = attractor(la, Player::P1, seed).members;
            Arena rest = la.restrict(~y);
            if (rest.empty()) continue;
            const std::size_t h = std::min<std::size_t>(std::size_t{1} << std::min(i, 62u), rest.size());
            Arena swapped = rest.swap();
            auto x = lift_dominion(swapped, obj.assumptions, h).dominion;
            if (x.any()) return Gr1Found{std::move(x), l, i};
        }
    }
    return std::nullopt;
}

inline std::size_t ceil_sqrt(std::size_t n)
{
    std::size_t r = 0;
    while (r * r < n) ++r;
    return r;
}

} // namespace detail

/**
 * GR(1) winning sets in O(k1 * k2 * n^3): per iteration, find a set S that
 * avoids some guarantee U_l, where player 2 can satisfy all assumptions,
 * then remove Attr_P2(S).
 */
inline SolveResult solve_gr1_basic(const Arena& arena, const Gr1Objective& obj, Gr1Options opts = {})
{
    const auto n = arena.id_bound();
    Arena cur = arena;
    std::vector<IterationRecord> trace;
    for (;;) {
        auto found = detail::large_dominion(cur, obj, opts.inner);
        if (!found) {
            trace.push_back(detail::terminal_record(n, 0));
            break;
        }
        auto d = attractor(cur, Player::P2, found->dominion).members;
        trace.push_back({RecordKind::dominion, found->witness, 0, std::move(found->dominion), d});
        cur.remove(d);
    }
    return detail::finish(arena, cur, std::move(trace));
}

/**
 * Player-2 dominion of the GR(1) game whose attractor has at most kmax
 * vertices, searched level by level; empty if there is none (a larger
 * one may still be returned).
 */
inline VertexSet find_small_dominion(const Arena& arena, const Gr1Objective& obj, std::size_t kmax)
{
    Decomposition dec(arena);
    auto f = detail::small_dominion(dec, arena, obj, std::max<std::size_t>(1, kmax));
    return f ? f->dominion : VertexSet(arena.id_bound());
}

/**
 * GR(1) winning sets in O(k1 * k2 * n^2.5): small dominions come from
 * bounded lifting on the level graphs, large ones from the basic search,
 * which then runs at most sqrt(n) times.
 */
inline SolveResult solve_gr1_fast(const Arena& arena, const Gr1Objective& obj, Gr1Options opts = {})
{
    const auto n = arena.id_bound();
    const std::size_t kmax = std::max<std::size_t>(1, detail::ceil_sqrt(arena.size()));
    Arena cur = arena;
    Decomposition dec(arena);
    std::vector<IterationRecord> trace;
    for (;;) {
        if (cur.empty()) {
            trace.push_back(detail::terminal_record(n, 0));
            break;
        }
        RecordKind kind = RecordKind::small_dominion;
        auto found = detail::small_dominion(dec, cur, obj, kmax);
        if (!found) {
            kind = RecordKind::large_dominion;
            found = detail::large_dominion(cur, obj, opts.inner);
        }
        if (!found) {
            trace.push_back(detail::terminal_record(n, 0));
            break;
        }
        auto d = attractor(cur, Player::P2, found->dominion).members;
        trace.push_back({kind, found->witness, found->level, std::move(found->dominion), d});
        cur.remove(d);
    }
    return detail::finish(arena, cur, std::move(trace));
}

inline SolveResult solve_gr1_basic(const GameGraph& g, const Gr1Objective& obj, Gr1Options opts = {})
{
    require_valid(g, obj);
    return solve_gr1_basic(Arena(g), obj, opts);
}

inline SolveResult solve_gr1_fast(const GameGraph& g, const Gr1Objective& obj, Gr1Options opts = {})
{
    require_valid(g, obj);
    return solve_gr1_fast(Arena(g), obj, opts);
}

inline VertexSet find_small_dominion(const GameGraph& g, const Gr1Objective& obj, const VertexSet& alive,
                                     std::size_t kmax)
{
    require_valid(g, obj);
    return find_small_dominion(Arena(g, alive), obj, kmax);
}

} // namespace gbgame
