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

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strategies.hpp"

namespace gbgame {

// Game files are line oriented; '#' starts a comment.
//
//   gbg 1                  or   gr1 1
//   n <count>
//   owners <1|2> ...       one token per vertex
//   edges <m>
//   <u> <v>                m lines, 0-based ids
//   targets <k>            gbg: k set lines
//   assume <k1>            gr1: k1 set lines, then
//   guarantee <k2>         k2 set lines
//
// A set line is "<size> <ids...>".

enum class GameKind { gbg, gr1 };

struct GameFile {
    GameKind kind = GameKind::gbg;
    GameGraph graph;
    GenBuchiObjective genbuchi; // used when kind == gbg
    Gr1Objective gr1;           // used when kind == gr1
    std::vector<std::string> comments; // whole-line comments, emitted first on output
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

/** Non-blank lines with comments removed; whole-line comments collected. */
class LineReader {
public:
    explicit LineReader(std::string_view text, std::vector<std::string>* comments = nullptr)
    {
        std::size_t number = 0, pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            auto raw = text.substr(pos, end - pos);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            ++number;
            pos = end + 1;
            last_line_ = number;
            auto hash = raw.find('#');
            auto body = raw.substr(0, hash);
            Line line{number, {}};
            for (std::size_t i = 0; i < body.size();) {
                if (body[i] == ' ' || body[i] == '\t') {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < body.size() && body[j] != ' ' && body[j] != '\t') ++j;
                line.tokens.push_back({body.substr(i, j - i), i + 1});
                i = j;
            }
            if (!line.tokens.empty()) lines_.push_back(std::move(line));
            else if (hash != std::string_view::npos && comments && lines_.empty())
                comments->emplace_back(raw.substr(hash));
            if (end == text.size()) break;
        }
    }

    bool done() const { return next_ == lines_.size(); }

    const Line& take(const std::string& expected)
    {
        if (done()) throw ParseError(last_line_, 1, "expected " + expected + ", found end of input");
        return lines_[next_++];
    }

    const Line& peek() const { return lines_[next_]; }

private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
    std::size_t last_line_ = 0;
};

inline std::size_t to_number(const Line& l, std::size_t i, const std::string& what)
{
    if (i >= l.tokens.size()) {
        std::size_t col = l.tokens.empty() ? 1 : l.tokens.back().column + l.tokens.back().text.size();
        throw ParseError(l.number, col, "missing " + what);
    }
    const auto& t = l.tokens[i];
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(l.number, t.column, "expected " + what + ", found '" + std::string(t.text) + "'");
    return v;
}

inline void expect_count(const Line& l, std::size_t count, const std::string& what)
{
    if (l.tokens.size() > count)
        throw ParseError(l.number, l.tokens[count].column, "unexpected token '" +
                                                                std::string(l.tokens[count].text) + "' after " + what);
    if (l.tokens.size() < count) to_number(l, l.tokens.size(), what);
}

inline const Line& keyword(LineReader& r, std::string_view word)
{
    const auto& l = r.take("'" + std::string(word) + "' line");
    if (l.tokens[0].text != word)
        throw ParseError(l.number, l.tokens[0].column,
                         "expected '" + std::string(word) + "', found '" + std::string(l.tokens[0].text) + "'");
    return l;
}

inline VertexId vertex_id(const Line& l, std::size_t i, std::size_t n, const std::string& what)
{
    auto v = to_number(l, i, what);
    if (v >= n)
        throw ParseError(l.number, l.tokens[i].column,
                         "vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
    return static_cast<VertexId>(v);
}

inline VertexSet set_line(const Line& l, std::size_t n)
{
    const auto size = to_number(l, 0, "set size");
    expect_count(l, size + 1, "set members");
    VertexSet s(n);
    for (std::size_t i = 1; i <= size; ++i) {
        auto v = vertex_id(l, i, n, "vertex id");
        if (s.test(v))
            throw ParseError(l.number, l.tokens[i].column, "vertex " + std::to_string(v) + " listed twice");
        s.set(v);
    }
    return s;
}

inline std::vector<VertexSet> set_block(LineReader& r, std::string_view word, std::size_t n)
{
    const auto& head = keyword(r, word);
    const auto k = to_number(head, 1, "set count");
    expect_count(head, 2, "set count");
    std::vector<VertexSet> sets;
    for (std::size_t i = 0; i < k; ++i)
        sets.push_back(set_line(r.take(std::string(word) + " set " + std::to_string(i + 1) + " of " +
                                       std::to_string(k)),
                                n));
    return sets;
}

inline void write_ids(std::ostream& out, const VertexSet& s)
{
    for_each_vertex(s, [&](VertexId v) { out << ' ' << v; });
}

inline void write_set_line(std::ostream& out, const VertexSet& s)
{
    out << s.count();
    write_ids(out, s);
    out << '\n';
}

} // namespace detail

inline GameFile parse_game(std::string_view text)
{
    GameFile f;
    detail::LineReader r(text, &f.comments);
    const auto& head = r.take("header 'gbg 1' or 'gr1 1'");
    const auto tag = head.tokens[0].text;
    if (tag == "gbg") f.kind = GameKind::gbg;
    else if (tag == "gr1") f.kind = GameKind::gr1;
    else throw ParseError(head.number, head.tokens[0].column, "unknown format tag '" + std::string(tag) + "'");
    if (detail::to_number(head, 1, "format version") != 1)
        throw ParseError(head.number, head.tokens[1].column, "unsupported format version");
    detail::expect_count(head, 2, "format version");

    const auto& nl = detail::keyword(r, "n");
    const auto n = detail::to_number(nl, 1, "vertex count");
    detail::expect_count(nl, 2, "vertex count");

    const auto& ol = detail::keyword(r, "owners");
    detail::expect_count(ol, n + 1, "owners");
    std::vector<Player> owners(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& t = ol.tokens[v + 1];
        if (t.text == "1") owners[v] = Player::P1;
        else if (t.text == "2") owners[v] = Player::P2;
        else throw ParseError(ol.number, t.column, "owner must be 1 or 2, found '" + std::string(t.text) + "'");
    }

    const auto& el = detail::keyword(r, "edges");
    const auto m = detail::to_number(el, 1, "edge count");
    detail::expect_count(el, 2, "edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    std::map<std::pair<VertexId, VertexId>, std::size_t> first_seen;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& l = r.take("edge line " + std::to_string(i + 1) + " of " + std::to_string(m));
        auto u = detail::vertex_id(l, 0, n, "source vertex");
        auto v = detail::vertex_id(l, 1, n, "target vertex");
        detail::expect_count(l, 2, "edge");
        auto [it, fresh] = first_seen.emplace(std::pair{u, v}, l.number);
        if (!fresh)
            throw ParseError(l.number, 1, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) +
                                              " (first on line " + std::to_string(it->second) + ")");
        edges.push_back({u, v});
    }
    f.graph = GameGraph(n, std::move(owners), std::move(edges));
    for (VertexId v = 0; v < n; ++v)
        if (f.graph.out_degree(v) == 0)
            throw ParseError(el.number, 1, "vertex " + std::to_string(v) + " has out-degree 0");

    if (f.kind == GameKind::gbg) {
        f.genbuchi.targets = detail::set_block(r, "targets", n);
        if (f.genbuchi.targets.empty()) throw ParseError(el.number, 1, "at least one target set is required");
    } else {
        f.gr1.assumptions = detail::set_block(r, "assume", n);
        f.gr1.guarantees = detail::set_block(r, "guarantee", n);
        if (f.gr1.assumptions.empty() || f.gr1.guarantees.empty())
            throw ParseError(el.number, 1, "at least one assumption and one guarantee set are required");
    }
    if (!r.done()) {
        const auto& l = r.peek();
        throw ParseError(l.number, l.tokens[0].column, "unexpected content after the objective");
    }
    return f;
}

inline std::string serialize_game(const GameFile& f)
{
    std::ostringstream out;
    for (const auto& c : f.comments) out << c << '\n';
    const auto& g = f.graph;
    out << (f.kind == GameKind::gbg ? "gbg 1\n" : "gr1 1\n");
    out << "n " << g.num_vertices() << '\n';
    out << "owners";
    for (auto p : g.owners()) out << ' ' << (p == Player::P1 ? 1 : 2);
    out << "\nedges " << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << e.from << ' ' << e.to << '\n';
    auto block = [&](const char* word, const std::vector<VertexSet>& sets) {
        out << word << ' ' << sets.size() << '\n';
        for (const auto& s : sets) detail::write_set_line(out, s);
    };
    if (f.kind == GameKind::gbg) {
        block("targets", f.genbuchi.targets);
    } else {
        block("assume", f.gr1.assumptions);
        block("guarantee", f.gr1.guarantees);
    }
    return out.str();
}

// Result files:
//
//   W1: <ids>
//   W2: <ids>
//   certificate gbg|gr1          optional from here on
//   strategy <memory> <count>    then <count> lines "<c> <v> <u>"
//   records <r>                  then r blocks:
//   record <witness>
//   dominion: <ids>
//   removed: <ids>
//   stay <count>                 gbg: lines "<v> <u>"
//   inner <memory> <count>       gr1: lines "<c> <v> <u>"
//   attract <count>              lines "<v> <u>"

struct ResultFile {
    VertexSet w1, w2;
    std::optional<GameKind> certificate_kind;
    Certificates certificates;
};

namespace detail {

inline void write_strategy(std::ostream& out, const char* word, const CounterStrategy& s)
{
    std::size_t count = 0;
    for (const auto& row : s.moves)
        for (auto u : row) count += u != kNoVertex;
    out << word << ' ' << s.memory() << ' ' << count << '\n';
    for (std::size_t c = 0; c < s.memory(); ++c)
        for (std::size_t v = 0; v < s.moves[c].size(); ++v)
            if (s.moves[c][v] != kNoVertex) out << c << ' ' << v << ' ' << s.moves[c][v] << '\n';
}

inline void write_moves(std::ostream& out, const char* word, const std::vector<Move>& moves)
{
    out << word << ' ' << moves.size() << '\n';
    for (const auto& m : moves) out << m.from << ' ' << m.to << '\n';
}

inline VertexSet labelled_ids(const Line& l, std::string_view label, std::size_t n)
{
    if (l.tokens[0].text != label)
        throw ParseError(l.number, l.tokens[0].column,
                         "expected '" + std::string(label) + "', found '" + std::string(l.tokens[0].text) + "'");
    VertexSet s(n);
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        auto v = vertex_id(l, i, n, "vertex id");
        if (s.test(v)) throw ParseError(l.number, l.tokens[i].column, "vertex listed twice");
        s.set(v);
    }
    return s;
}

inline CounterStrategy read_strategy(LineReader& r, std::string_view word, std::size_t n)
{
    const auto& head = keyword(r, word);
    const auto memory = to_number(head, 1, "memory size");
    const auto count = to_number(head, 2, "move count");
    expect_count(head, 3, "move count");
    CounterStrategy s;
    s.moves.assign(memory, std::vector<VertexId>(n, kNoVertex));
    for (std::size_t i = 0; i < count; ++i) {
        const auto& l = r.take("strategy move " + std::to_string(i + 1) + " of " + std::to_string(count));
        const auto c = to_number(l, 0, "memory state");
        if (c >= memory) throw ParseError(l.number, l.tokens[0].column, "memory state out of range");
        auto v = vertex_id(l, 1, n, "vertex id");
        auto u = vertex_id(l, 2, n, "successor id");
        expect_count(l, 3, "move");
        if (s.moves[c][v] != kNoVertex) throw ParseError(l.number, 1, "move listed twice");
        s.moves[c][v] = u;
    }
    return s;
}

inline std::vector<Move> read_moves(LineReader& r, std::string_view word, std::size_t n)
{
    const auto& head = keyword(r, word);
    const auto count = to_number(head, 1, "move count");
    expect_count(head, 2, "move count");
    std::vector<Move> moves;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& l = r.take(std::string(word) + " move " + std::to_string(i + 1) + " of " + std::to_string(count));
        auto v = vertex_id(l, 0, n, "vertex id");
        auto u = vertex_id(l, 1, n, "successor id");
        expect_count(l, 2, "move");
        moves.push_back({v, u});
    }
    return moves;
}

} // namespace detail

inline void write_partition(std::ostream& out, const VertexSet& w1, const VertexSet& w2)
{
    out << "W1:";
    detail::write_ids(out, w1);
    out << "\nW2:";
    detail::write_ids(out, w2);
    out << '\n';
}

inline void write_certificates(std::ostream& out, GameKind kind, const Certificates& c)
{
    out << "certificate " << (kind == GameKind::gbg ? "gbg" : "gr1") << '\n';
    detail::write_strategy(out, "strategy", c.p1);
    out << "records " << c.p2.records.size() << '\n';
    for (const auto& rec : c.p2.records) {
        out << "record " << rec.witness << "\ndominion:";
        detail::write_ids(out, rec.dominion);
        out << "\nremoved:";
        detail::write_ids(out, rec.removed);
        out << '\n';
        if (kind == GameKind::gbg) detail::write_moves(out, "stay", rec.stay);
        else detail::write_strategy(out, "inner", rec.inner ? *rec.inner : CounterStrategy{});
        detail::write_moves(out, "attract", rec.attract);
    }
}

/** Reads a result file for a game with n vertices. */
inline ResultFile parse_result(std::string_view text, std::size_t n)
{
    ResultFile f;
    detail::LineReader r(text);
    f.w1 = detail::labelled_ids(r.take("'W1:' line"), "W1:", n);
    f.w2 = detail::labelled_ids(r.take("'W2:' line"), "W2:", n);
    if (r.done()) return f;
    const auto& head = detail::keyword(r, "certificate");
    detail::expect_count(head, 2, "certificate kind");
    const auto kind = head.tokens[1].text;
    if (kind == "gbg") f.certificate_kind = GameKind::gbg;
    else if (kind == "gr1") f.certificate_kind = GameKind::gr1;
    else throw ParseError(head.number, head.tokens[1].column, "unknown certificate kind");
    const bool gbg = *f.certificate_kind == GameKind::gbg;

    f.certificates.p1 = detail::read_strategy(r, "strategy", n);
    const auto& rl = detail::keyword(r, "records");
    const auto count = detail::to_number(rl, 1, "record count");
    detail::expect_count(rl, 2, "record count");
    for (std::size_t i = 0; i < count; ++i) {
        const auto& hl = detail::keyword(r, "record");
        CertificateRecord rec;
        rec.witness = detail::to_number(hl, 1, "witness index");
        detail::expect_count(hl, 2, "witness index");
        rec.dominion = detail::labelled_ids(r.take("'dominion:' line"), "dominion:", n);
        rec.removed = detail::labelled_ids(r.take("'removed:' line"), "removed:", n);
        if (gbg) rec.stay = detail::read_moves(r, "stay", n);
        else rec.inner = detail::read_strategy(r, "inner", n);
        rec.attract = detail::read_moves(r, "attract", n);
        f.certificates.p2.records.push_back(std::move(rec));
    }
    if (!r.done()) {
        const auto& l = r.peek();
        throw ParseError(l.number, l.tokens[0].column, "unexpected content after the certificate");
    }
    return f;
}

/** Order-independent 64-bit digest of a partition. */
inline std::uint64_t partition_checksum(const VertexSet& w1, const VertexSet& w2)
{
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    std::uint64_t h = 0;
    for_each_vertex(w1, [&](VertexId v) { h += mix(2 * std::uint64_t{v}); });
    for_each_vertex(w2, [&](VertexId v) { h += mix(2 * std::uint64_t{v} + 1); });
    return h;
}

} // namespace gbgame
