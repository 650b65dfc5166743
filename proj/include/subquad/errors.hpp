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

#ifndef SUBQUAD_ERRORS_HPP
#define SUBQUAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subquad {

// Mixing elements of different fields or rings of different variable counts.
struct MismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonHomogeneousError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Height of the unit ideal and similar degenerate requests.
struct UnitIdealError : std::domain_error {
    using std::domain_error::domain_error;
};

// A randomized generic choice failed for every trial in the retry budget.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resolution (or similar) computation exceeded its configured budget.
// Raised instead of ever returning a truncated answer.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state the underlying theorems rule out; always an implementation bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace subquad

#endif
