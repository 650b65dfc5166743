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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subquad/dimension.hpp"
#include "subquad/random.hpp"
#include "subquad/resolution.hpp"

using namespace subquad;
using P = Poly<Zp>;

namespace {
const FieldConfig kF = FieldConfig::prime(32003);
const Zp kOne(1, 32003);
P var(unsigned n, unsigned i) { return P::variable(n, i, kOne); }

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

TEST_CASE("Koszul complexes: pd of (x_1..x_k) is k with binomial betti numbers") {
    for (unsigned k = 1; k <= 4; ++k) {
        unsigned n = k + 1;
        std::vector<P> vars;
        for (unsigned i = 0; i < k; ++i) vars.push_back(var(n, i));
        auto res = projective_dimension(Ideal<Zp>(vars, n));
        CHECK(res.pd == static_cast<int>(k));
        REQUIRE(res.betti.size() == k + 1);
        for (unsigned i = 0; i <= k; ++i)
            CHECK(res.betti[i] == static_cast<std::size_t>(binom(k, i)));
    }
}

TEST_CASE("pd of (x^2, xy) is 2") {
    // I = x(x, y): resolution 0 -> R -> R^2 -> R
    unsigned n = 2;
    P x = var(n, 0), y = var(n, 1);
    auto res = projective_dimension(Ideal<Zp>({x * x, x * y}, n));
    CHECK(res.pd == 2);
    CHECK(res.betti == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("zero ideal resolves instantly; unit ideal is rejected") {
    CHECK(projective_dimension(Ideal<Zp>({}, 3)).pd == 0);
    CHECK_THROWS_AS((void)projective_dimension(Ideal<Zp>({P::constant(2, kOne)}, 2)),
                    UnitIdealError);
}

TEST_CASE("alternating rank sum vanishes for nonzero ideals") {
    Rng rng(13);
    unsigned n = 4;
    for (int round = 0; round < 10; ++round) {
        std::vector<P> gens;
        unsigned k = 1 + rng.below(3);
        for (unsigned i = 0; i < k; ++i) gens.push_back(random_quadric<Zp>(rng, kF, n));
        Ideal<Zp> I(gens, n);
        auto res = projective_dimension(I);
        long alt = 0, sign = 1;
        for (auto b : res.betti) {
            alt += sign * static_cast<long>(b);
            sign = -sign;
        }
        CHECK(alt == 0);  // rank of R/I as an R-module
    }
}

TEST_CASE("pd of a regular sequence of length t is t") {
    Rng rng(21);
    unsigned n = 5;
    for (int round = 0; round < 10; ++round) {
        unsigned t = 1 + rng.below(3);
        std::vector<P> forms;
        for (unsigned i = 0; i < t; ++i) forms.push_back(random_quadric<Zp>(rng, kF, n));
        if (!is_regular_sequence(forms, n).verdict) continue;
        auto res = projective_dimension(Ideal<Zp>(forms, n));
        CHECK(res.pd == static_cast<int>(t));
        // Koszul betti numbers again
        for (unsigned i = 0; i <= t; ++i)
            CHECK(res.betti[i] == static_cast<std::size_t>(binom(t, i)));
    }
}

TEST_CASE("three random quadrics resolve within pd 4") {
    Rng rng(31);
    unsigned n = 6;
    for (int round = 0; round < 8; ++round) {
        std::vector<P> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_quadric<Zp>(rng, kF, n));
        auto res = projective_dimension(Ideal<Zp>(gens, n));
        CHECK(res.pd <= 4);
    }
}

TEST_CASE("budget exhaustion raises instead of truncating") {
    unsigned n = 4;
    std::vector<P> vars;
    for (unsigned i = 0; i < 4; ++i) vars.push_back(var(n, i));
    ResolutionBudget tiny;
    tiny.max_reductions = 3;
    CHECK_THROWS_AS((void)projective_dimension(Ideal<Zp>(vars, n), tiny), BudgetError);
}

TEST_CASE("non-homogeneous input is rejected") {
    unsigned n = 2;
    P x = var(n, 0);
    CHECK_THROWS_AS(
        (void)projective_dimension(Ideal<Zp>({x * x + x}, n)), NonHomogeneousError);
}
