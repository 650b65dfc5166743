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

#ifndef SUBQUAD_PROBLEM_HPP
#define SUBQUAD_PROBLEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subquad/polynomial.hpp"

namespace subquad {

/// Field- and template-free polynomial literal: integer (or integer-ratio)
/// coefficients over named variables, as read from input files.
struct RawTerm {
    long long num = 1;
    long long den = 1;
    std::vector<unsigned> exps;  // per declared variable
};

struct RawPoly {
    std::vector<RawTerm> terms;
    int line = 0;
};

struct ProblemFile {
    bool rational_field = false;
    std::uint32_t p = 0;  // when prime
    std::vector<std::string> var_names;
    std::vector<RawPoly> forms;
    bool seed_set = false;
    std::uint64_t seed = 0;
};

/// Line-oriented problem format: `field`, `vars`, optional `seed`, then
/// `form` lines; `#` starts a comment. Errors carry line/column.
ProblemFile parse_problem(const std::string& text);

/// Expression parser shared with document loading: coefficients may be
/// integers or integer ratios, `*` multiplies, `^` takes exponents.
RawPoly parse_poly_text(const std::string& text, const std::vector<std::string>& vars,
                        int line_no);

template <typename K>
Poly<K> raw_to_poly(const RawPoly& raw, unsigned nvars, const FieldConfig& field) {
    std::vector<typename Poly<K>::Term> ts;
    for (auto& t : raw.terms) {
        K c = scalar_from_int<K>(t.num, field);
        if (t.den != 1) c = c / scalar_from_int<K>(t.den, field);
        Monomial m(nvars);
        for (unsigned i = 0; i < nvars && i < t.exps.size(); ++i) m[i] = t.exps[i];
        ts.emplace_back(std::move(m), std::move(c));
    }
    return Poly<K>::from_terms(nvars, std::move(ts));
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

template <typename K>
std::string poly_to_string(const Poly<K>& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string cs = c.str();
        if (m.is_one()) {
            out += cs;
        } else {
            std::string ms = format_monomial(m, names);
            if (c.is_one())
                out += ms;
            else
                out += cs + "*" + ms;
        }
    }
    return out;
}

std::vector<std::string> tag_names(std::size_t count);

}  // namespace subquad

#endif
