/*
   Copyright 2026 the subquad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "subquad/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "subquad/field.hpp"

namespace subquad {

namespace {

struct Token {
    enum class Kind { integer, name, plus, minus, star, caret, slash, end } kind;
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& s, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '#') break;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::integer, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                    s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::name, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Token::Kind::plus, "+", col}); break;
            case '-': out.push_back({Token::Kind::minus, "-", col}); break;
            case '*': out.push_back({Token::Kind::star, "*", col}); break;
            case '^': out.push_back({Token::Kind::caret, "^", col}); break;
            case '/': out.push_back({Token::Kind::slash, "/", col}); break;
            default:
                throw ParseError(line_no, col,
                                 std::string("unexpected character '") + ch + "'");
        }
        ++i;
    }
    out.push_back({Token::Kind::end, "", static_cast<int>(s.size()) + 1});
    return out;
}

long long parse_ll(const std::string& text, int line_no, int col) {
    try {
        return std::stoll(text);
    } catch (const std::exception&) {
        throw ParseError(line_no, col, "integer literal out of range: " + text);
    }
}

}  // namespace

RawPoly parse_poly_text(const std::string& text, const std::vector<std::string>& vars,
                        int line_no) {
    auto tokens = tokenize(text, line_no);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return tokens[pos]; };
    auto next = [&]() -> const Token& { return tokens[pos++]; };

    auto var_index = [&](const Token& t) -> unsigned {
        auto it = std::find(vars.begin(), vars.end(), t.text);
        if (it == vars.end())
            throw ParseError(line_no, t.column, "unknown variable '" + t.text + "'");
        return static_cast<unsigned>(it - vars.begin());
    };

    RawPoly poly;
    poly.line = line_no;
    if (peek().kind == Token::Kind::end)
        throw ParseError(line_no, 1, "empty polynomial");

    bool first_term = true;
    while (peek().kind != Token::Kind::end) {
        long long sign = 1;
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            if (next().kind == Token::Kind::minus) sign = -sign;
        }
        if (!first_term && sign == 1 && tokens[pos - 1].kind != Token::Kind::plus &&
            tokens[pos - 1].kind != Token::Kind::minus)
            throw ParseError(line_no, peek().column, "expected '+' or '-' between terms");

        RawTerm term;
        term.num = sign;
        term.exps.assign(vars.size(), 0);
        bool saw_factor = false;
        for (;;) {
            const Token& t = peek();
            if (t.kind == Token::Kind::integer) {
                next();
                long long v = parse_ll(t.text, line_no, t.column);
                term.num *= v;
                if (peek().kind == Token::Kind::slash) {
                    next();
                    const Token& d = peek();
                    if (d.kind != Token::Kind::integer)
                        throw ParseError(line_no, d.column, "expected integer denominator");
                    next();
                    long long dv = parse_ll(d.text, line_no, d.column);
                    if (dv == 0) throw ParseError(line_no, d.column, "zero denominator");
                    term.den *= dv;
                }
                saw_factor = true;
            } else if (t.kind == Token::Kind::name) {
                next();
                unsigned vi = var_index(t);
                unsigned exp = 1;
                if (peek().kind == Token::Kind::caret) {
                    next();
                    const Token& e = peek();
                    if (e.kind != Token::Kind::integer)
                        throw ParseError(line_no, e.column, "expected integer exponent");
                    next();
                    long long ev = parse_ll(e.text, line_no, e.column);
                    if (ev < 0 || ev > 1000)
                        throw ParseError(line_no, e.column, "exponent out of range");
                    exp = static_cast<unsigned>(ev);
                }
                term.exps[vi] += exp;
                saw_factor = true;
            } else {
                throw ParseError(line_no, t.column, "expected a coefficient or variable");
            }
            if (peek().kind == Token::Kind::star) {
                next();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError(line_no, peek().column, "empty term");
        poly.terms.push_back(std::move(term));
        first_term = false;
        if (peek().kind != Token::Kind::end && peek().kind != Token::Kind::plus &&
            peek().kind != Token::Kind::minus)
            throw ParseError(line_no, peek().column, "expected '+' or '-' between terms");
    }
    return poly;
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    bool have_field = false, have_vars = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped = stripped.substr(0, hash);
        std::istringstream ls(stripped);
        std::string keyword;
        if (!(ls >> keyword)) continue;

        if (keyword == "field") {
            std::string spec;
            if (!(ls >> spec)) throw ParseError(line_no, 1, "missing field specification");
            if (spec == "Q" || spec == "QQ") {
                pf.rational_field = true;
            } else {
                try {
                    unsigned long v = std::stoul(spec);
                    if (v < 2 || v > 2147483647ul)
                        throw ParseError(line_no, 1, "field modulus out of range");
                    if (!is_prime_u32(static_cast<std::uint32_t>(v)))
                        throw ParseError(line_no, 1,
                                         "field modulus " + spec + " is not prime");
                    pf.p = static_cast<std::uint32_t>(v);
                } catch (const ParseError&) {
                    throw;
                } catch (const std::exception&) {
                    throw ParseError(line_no, 1, "bad field specification '" + spec + "'");
                }
            }
            have_field = true;
        } else if (keyword == "vars") {
            std::string name;
            std::set<std::string> seen;
            while (ls >> name) {
                if (!seen.insert(name).second)
                    throw ParseError(line_no, 1, "duplicate variable '" + name + "'");
                pf.var_names.push_back(name);
            }
            if (pf.var_names.empty())
                throw ParseError(line_no, 1, "vars line declares no variables");
            have_vars = true;
        } else if (keyword == "seed") {
            std::string s;
            if (!(ls >> s)) throw ParseError(line_no, 1, "missing seed value");
            try {
                pf.seed = std::stoull(s);
            } catch (const std::exception&) {
                throw ParseError(line_no, 1, "bad seed '" + s + "'");
            }
            pf.seed_set = true;
        } else if (keyword == "form") {
            if (!have_vars)
                throw ParseError(line_no, 1, "form appears before vars");
            std::string rest;
            std::getline(ls, rest);
            RawPoly poly = parse_poly_text(rest, pf.var_names, line_no);
            for (auto& t : poly.terms) {
                unsigned deg = 0;
                for (unsigned e : t.exps) deg += e;
                if (deg > 2)
                    throw ParseError(line_no, 1,
                                     "degree " + std::to_string(deg) + " exceeds 2 at line " +
                                         std::to_string(line_no));
            }
            pf.forms.push_back(std::move(poly));
        } else {
            throw ParseError(line_no, 1, "unknown directive '" + keyword + "'");
        }
    }
    if (!have_field) throw ParseError(line_no, 1, "missing field line");
    if (!have_vars) throw ParseError(line_no, 1, "missing vars line");
    if (pf.forms.empty()) throw ParseError(line_no, 1, "no form lines");
    return pf;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    bool first = true;
    for (unsigned i = 0; i < m.nvars(); ++i) {
        if (!m[i]) continue;
        if (!first) out += "*";
        first = false;
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::vector<std::string> tag_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back("T" + std::to_string(i));
    return names;
}

}  // namespace subquad
