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

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gbgame {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Player : std::uint8_t { P1 = 1, P2 = 2 };

constexpr Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
    VertexId from;
    VertexId to;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline VertexSet make_set(std::size_t n, std::initializer_list<VertexId> ids)
{
    VertexSet s(n);
    for (auto v : ids) s.set(v);
    return s;
}

inline VertexSet make_set(std::size_t n, const std::vector<VertexId>& ids)
{
    VertexSet s(n);
    for (auto v : ids) s.set(v);
    return s;
}

inline VertexSet full_set(std::size_t n)
{
    VertexSet s(n);
    s.set();
    return s;
}

template <class F>
inline void for_each_vertex(const VertexSet& s, F&& f)
{
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) f(static_cast<VertexId>(v));
}

inline std::vector<VertexId> to_vector(const VertexSet& s)
{
    std::vector<VertexId> out;
    out.reserve(s.count());
    for_each_vertex(s, [&](VertexId v) { out.push_back(v); });
    return out;
}

/** Smallest i with 2^i >= x (x >= 1). */
inline unsigned ceil_log2(std::size_t x)
{
    unsigned i = 0;
    while ((std::size_t{1} << i) < x) ++i;
    return i;
}

} // namespace gbgame
