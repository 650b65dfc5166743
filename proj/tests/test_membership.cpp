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

#include "subquad/membership.hpp"
#include "subquad/random.hpp"

using namespace subquad;
using P = Poly<Zp>;

namespace {
const FieldConfig kF = FieldConfig::prime(32003);
const Zp kOne(1, 32003);
P var(unsigned n, unsigned i) { return P::variable(n, i, kOne); }
}  // namespace

TEST_CASE("membership in the symmetric-function subalgebra") {
    // x^2 + y^2 = (x+y)^2 - 2xy = T1^2 - 2 T2
    unsigned n = 2;
    P x = var(n, 0), y = var(n, 1);
    SubalgebraMembership<Zp> m({x + y, x * y}, n, kOne);
    auto res = m.test(x * x + y * y);
    REQUIRE(res.member);
    P t1 = P::variable(2, 0, kOne), t2 = P::variable(2, 1, kOne);
    CHECK(*res.expression == t1 * t1 - t2.scaled(Zp(2, 32003)));
    CHECK(m.expand(*res.expression) == x * x + y * y);
}

TEST_CASE("parity obstruction and powers") {
    unsigned n = 1;
    P x = var(n, 0);
    CHECK_FALSE(subalgebra_membership<Zp>(x, {x * x}, n, kOne).member);
    auto res = subalgebra_membership<Zp>(x * x * x, {x}, n, kOne);
    REQUIRE(res.member);
    P t1 = P::variable(1, 0, kOne);
    CHECK(*res.expression == t1 * t1 * t1);
}

TEST_CASE("expressions substitute back exactly on random members") {
    Rng rng(9);
    unsigned n = 3;
    for (int round = 0; round < 15; ++round) {
        std::vector<P> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(random_linear_form<Zp>(rng, kF, n, 0, n));
        if (gens[0].is_zero() || gens[1].is_zero()) continue;
        SubalgebraMembership<Zp> m(gens, n, kOne);
        // manufacture a member: random polynomial in the generators
        P member = gens[0] * gens[1] + gens[2].scaled(random_scalar<Zp>(rng, kF));
        auto res = m.test(member);
        REQUIRE(res.member);
        CHECK(m.expand(*res.expression) == member);
    }
}

TEST_CASE("front relations of the Veronese triple") {
    // (u^2, uv, v^2): kernel generated by T1 T3 - T2^2
    unsigned n = 2;
    P u = var(n, 0), v = var(n, 1);
    Ideal<Zp> P_ideal = front_relations<Zp>({u * u, u * v, v * v}, n, kOne);
    REQUIRE(P_ideal.generators().size() == 1);
    Poly<Zp> t1 = Poly<Zp>::variable(3, 0, kOne), t2 = Poly<Zp>::variable(3, 1, kOne),
             t3 = Poly<Zp>::variable(3, 2, kOne);
    const Poly<Zp>& g = P_ideal.generators()[0];
    CHECK((g == t1 * t3 - t2 * t2 || g == t2 * t2 - t1 * t3));
    // substituting the polynomials back kills every generator
    CHECK(g.substitute({u * u, u * v, v * v}, n).is_zero());
}

TEST_CASE("front relations degenerate cases") {
    unsigned n = 2;
    P u = var(n, 0), v = var(n, 1);
    // algebraically independent: zero kernel
    CHECK(front_relations<Zp>({u * u, v * v}, n, kOne).generators().empty());
    // repeated generator: kernel contains T1 - T2
    Ideal<Zp> rep = front_relations<Zp>({u * u, u * u}, n, kOne);
    Poly<Zp> t1 = Poly<Zp>::variable(2, 0, kOne), t2 = Poly<Zp>::variable(2, 1, kOne);
    bool found = false;
    for (auto& g : rep.generators())
        if (g == t1 - t2 || g == t2 - t1) found = true;
    CHECK(found);
    // zero polynomial: its tag is in the kernel
    Ideal<Zp> withzero = front_relations<Zp>({u * u, P::zero(n)}, n, kOne);
    bool tag2 = false;
    for (auto& g : withzero.generators())
        if (g == Poly<Zp>::variable(2, 1, kOne)) tag2 = true;
    CHECK(tag2);
}

TEST_CASE("kernel generators always vanish on their arguments") {
    Rng rng(77);
    unsigned n = 2;
    for (int round = 0; round < 10; ++round) {
        std::vector<P> polys;
        for (int i = 0; i < 3; ++i) polys.push_back(random_quadric<Zp>(rng, kF, n));
        Ideal<Zp> ker = front_relations(polys, n, kOne);
        for (auto& g : ker.generators()) CHECK(g.substitute(polys, n).is_zero());
        // three quadrics in two variables are always algebraically dependent
        CHECK(!ker.generators().empty());
    }
}

TEST_CASE("height of the relation ideal matches the transcendence defect") {
    // K[u^2, uv, v^2] has dimension 2, so the kernel has height 3 - 2 = 1
    unsigned n = 2;
    P u = var(n, 0), v = var(n, 1);
    Ideal<Zp> ker = front_relations<Zp>({u * u, u * v, v * v}, n, kOne);
    CHECK(height(ker) == 1);
}
