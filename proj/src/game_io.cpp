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

#include "pgdet/game_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "pgdet/errors.hpp"

namespace pgdet {

namespace {

class Cursor
{
public:
    explicit Cursor(std::string_view text) : text_(text) { }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    void advance()
    {
        if (at_end()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) advance();
    }

    // Skips spaces and tabs only; records must not be broken by a newline before ';'.
    void skip_blank()
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }

    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line_, column_, reason); }

    std::string_view word()
    {
        auto start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) advance();
        return text_.substr(start, pos_ - start);
    }

    template <typename T>
    T number(const char* what)
    {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        auto start = pos_;
        const auto l = line_, c = column_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
        T value{};
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) throw ParseError(l, c, std::string(what) + " out of range");
        if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ';' && peek() != ',' && peek() != '"')
            fail(std::string("malformed ") + what);
        return value;
    }

    std::string quoted()
    {
        advance(); // opening quote
        std::string out;
        for (;;) {
            if (at_end() || peek() == '\n') fail("unterminated name");
            char ch = peek();
            advance();
            if (ch == '"') return out;
            if (ch == '\\') {
                if (at_end()) fail("unterminated name");
                ch = peek();
                advance();
            }
            out.push_back(ch);
        }
    }

    void expect(char ch, const char* what)
    {
        if (peek() != ch) fail(std::string("expected ") + what);
        advance();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct RawRecord
{
    std::uint64_t id;
    Priority priority;
    Player owner;
    std::vector<std::uint64_t> successors;
    std::vector<std::pair<std::size_t, std::size_t>> successor_pos;
    std::string name;
};

std::string escape(const std::string& name)
{
    std::string out;
    for (char ch : name) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}

GameFile parse_game_file(std::string_view text)
{
    Cursor cur(text);
    std::vector<RawRecord> records;
    std::map<std::uint64_t, std::size_t> by_id;

    cur.skip_space();
    if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        const auto kl = cur.line(), kc = cur.column();
        auto kw = cur.word();
        if (kw != "parity") throw ParseError(kl, kc, "unknown keyword '" + std::string(kw) + "'");
        cur.skip_blank();
        cur.number<std::uint64_t>("maximal identifier");
        cur.skip_blank();
        cur.expect(';', "';' after header");
        cur.skip_space();
    }
    if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        const auto kl = cur.line(), kc = cur.column();
        auto kw = cur.word();
        if (kw != "start") throw ParseError(kl, kc, "unknown keyword '" + std::string(kw) + "'");
        cur.skip_blank();
        cur.number<std::uint64_t>("start identifier");
        cur.skip_blank();
        cur.expect(';', "';' after start");
        cur.skip_space();
    }

    while (!cur.at_end()) {
        RawRecord rec;
        const auto id_line = cur.line(), id_col = cur.column();
        rec.id = cur.number<std::uint64_t>("vertex identifier");
        if (by_id.contains(rec.id)) throw ParseError(id_line, id_col, "duplicate identifier " + std::to_string(rec.id));
        cur.skip_blank();
        rec.priority = cur.number<Priority>("priority");
        cur.skip_blank();
        const auto owner_line = cur.line(), owner_col = cur.column();
        auto owner = cur.number<std::uint64_t>("owner");
        if (owner > 1) throw ParseError(owner_line, owner_col, "owner must be 0 or 1");
        rec.owner = player_from_index(static_cast<int>(owner));
        cur.skip_blank();
        if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            if (cur.peek() == ';' || cur.peek() == '"' || cur.at_end() || cur.peek() == '\n')
                cur.fail("empty successor list");
            cur.fail("malformed successor list");
        }
        for (;;) {
            rec.successor_pos.emplace_back(cur.line(), cur.column());
            rec.successors.push_back(cur.number<std::uint64_t>("successor identifier"));
            cur.skip_blank();
            if (cur.peek() != ',') break;
            cur.advance();
            cur.skip_blank();
        }
        if (cur.peek() == '"') {
            rec.name = cur.quoted();
            cur.skip_blank();
        }
        cur.expect(';', "';' at end of record");
        by_id.emplace(rec.id, records.size());
        records.push_back(std::move(rec));
        cur.skip_space();
    }
    if (records.empty()) throw ParseError(cur.line(), cur.column(), "game has no vertices");

    GameFile out;
    std::map<std::uint64_t, Vertex> dense;
    for (auto [id, at] : by_id) {
        dense.emplace(id, out.ids.size());
        out.ids.push_back(id);
    }
    std::vector<VertexInfo> vertices(records.size());
    for (const auto& rec : records) {
        auto& info = vertices[dense.at(rec.id)];
        info.owner = rec.owner;
        info.priority = rec.priority;
        info.name = rec.name;
        for (std::size_t i = 0; i < rec.successors.size(); ++i) {
            auto it = dense.find(rec.successors[i]);
            if (it == dense.end())
                throw ParseError(rec.successor_pos[i].first, rec.successor_pos[i].second,
                                 "dangling successor identifier " + std::to_string(rec.successors[i]));
            info.successors.push_back(it->second);
        }
    }
    out.game = ParityGame(std::move(vertices));
    return out;
}

ParityGame parse_game(std::string_view text)
{
    return parse_game_file(text).game;
}

std::string emit_game(const ParityGame& game)
{
    std::ostringstream out;
    if (game.empty()) return {};
    out << "parity " << game.size() - 1 << ";\n";
    for (Vertex v = 0; v < game.size(); ++v) {
        out << v << ' ' << game.priority(v) << ' ' << index(game.owner(v)) << ' ';
        auto succ = game.successors(v);
        for (std::size_t i = 0; i < succ.size(); ++i) out << (i ? "," : "") << succ[i];
        if (!game.name(v).empty()) out << " \"" << escape(game.name(v)) << '"';
        out << ";\n";
    }
    return out.str();
}

std::string emit_solution(const GameFile& file, const Solution& sol)
{
    std::ostringstream out;
    for (Vertex v = 0; v < file.game.size(); ++v) {
        out << file.ids[v] << ' ';
        auto winner = sol.winner(v);
        if (!winner) {
            out << "? -\n";
            continue;
        }
        out << index(*winner) << ' ';
        if (auto c = sol.strategy(*winner).choice(v))
            out << file.ids[*c];
        else
            out << '-';
        out << '\n';
    }
    return out.str();
}

std::string emit_solution(const ParityGame& game, const Solution& sol)
{
    GameFile file{game, {}};
    for (Vertex v = 0; v < game.size(); ++v) file.ids.push_back(v);
    return emit_solution(file, sol);
}

Solution parse_solution(const GameFile& file, std::string_view text)
{
    std::map<std::uint64_t, Vertex> dense;
    for (Vertex v = 0; v < file.ids.size(); ++v) dense.emplace(file.ids[v], v);

    Solution sol;
    std::vector<char> seen(file.game.size(), 0);
    Cursor cur(text);
    cur.skip_space();
    while (!cur.at_end()) {
        const auto l = cur.line(), c = cur.column();
        auto id = cur.number<std::uint64_t>("vertex identifier");
        auto it = dense.find(id);
        if (it == dense.end()) throw ParseError(l, c, "unknown vertex identifier " + std::to_string(id));
        const Vertex v = it->second;
        if (seen[v]) throw ParseError(l, c, "vertex " + std::to_string(id) + " listed twice");
        seen[v] = 1;
        cur.skip_blank();
        const auto wl = cur.line(), wc = cur.column();
        auto w = cur.number<std::uint64_t>("winner");
        if (w > 1) throw ParseError(wl, wc, "winner must be 0 or 1");
        const Player winner = player_from_index(static_cast<int>(w));
        sol.region(winner).insert(v);
        cur.skip_blank();
        if (cur.peek() == '-') {
            cur.advance();
        } else {
            const auto sl = cur.line(), sc = cur.column();
            auto choice = cur.number<std::uint64_t>("choice identifier");
            auto ct = dense.find(choice);
            if (ct == dense.end()) throw ParseError(sl, sc, "unknown choice identifier " + std::to_string(choice));
            sol.strategy(winner).set(v, ct->second);
        }
        cur.skip_blank();
        if (!cur.at_end() && cur.peek() != '\n') cur.fail("trailing characters");
        cur.skip_space();
    }
    return sol;
}

}
