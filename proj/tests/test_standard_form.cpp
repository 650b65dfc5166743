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

#include "subquad/standard_form.hpp"

using namespace subquad;
using P = Poly<Zp>;

namespace {
const FieldConfig kF = FieldConfig::prime(32003);
const Zp kOne(1, 32003);
P var(unsigned n, unsigned i) { return P::variable(n, i, kOne); }

P random_form(Rng& rng, unsigned nvars, bool quadratic) {
    if (quadratic) {
        unsigned style = rng.below(3);
        if (style == 0) return random_quadric<Zp>(rng, kF, nvars);
        P a = random_linear_form<Zp>(rng, kF, nvars, 0, nvars);
        P b = style == 1 ? random_linear_form<Zp>(rng, kF, nvars, 0, nvars) : a;
        return a * b;
    }
    return random_linear_form<Zp>(rng, kF, nvars, 0, nvars);
}

// mutual membership of generators: same ideal
bool same_ideal(const std::vector<P>& A, const std::vector<P>& B) {
    auto gbA = buchberger(A, MonomialOrder::grevlex());
    auto gbB = buchberger(B, MonomialOrder::grevlex());
    for (auto& a : A)
        if (!normal_form(a, gbB).is_zero()) return false;
    for (auto& b : B)
        if (!normal_form(b, gbA).is_zero()) return false;
    return true;
}
}  // namespace

TEST_CASE("single quadric {u^2}") {
    unsigned n = 2;
    P u = var(n, 0);
    Rng rng(1);
    auto st = achieve_standard_form<Zp>({u * u}, n, kF, rng);
    CHECK(st.m == 0);
    CHECK(st.h == 1);
    CHECK(st.d == 1);
    CHECK(st.r == 0);
    CHECK(st.s == 0);
    CHECK(st.front_polys[0] == st.forms[0]);
    CHECK(st.tail_polys[0].is_zero());
    CHECK(st.front_relations_ideal.generators().empty());  // P = (0)
    auto rep = key_lemma_check(st);
    CHECK(rep.all_ok());
    CHECK(rep.P_height == 0);
}

TEST_CASE("{x1 y, x1}: h = 0 with one primary extension variable") {
    unsigned n = 2;
    P x1 = var(n, 0), y = var(n, 1);
    Rng rng(1);
    auto st = achieve_standard_form<Zp>({x1 * y, x1}, n, kF, rng);
    CHECK(st.m == 1);
    CHECK(st.h == 0);
    CHECK(st.r == 1);  // the coefficient of x1 in x1*y spans {y}
    CHECK(st.s == 0);
    CHECK(st.d == 0);
    CHECK(st.forms[1] == var(n, 0));
}

TEST_CASE("{u1 u2, u1^2 - u2^2}: h = n = 2, no extension variables") {
    unsigned n = 2;
    P u1 = var(n, 0), u2 = var(n, 1);
    Rng rng(4);
    auto st = achieve_standard_form<Zp>({u1 * u2, u1 * u1 - u2 * u2}, n, kF, rng);
    CHECK(st.m == 0);
    CHECK(st.h == 2);
    CHECK(st.d == 2);
    CHECK(st.r == 0);
    CHECK(st.s == 0);
    CHECK(st.front_relations_ideal.generators().empty());
    CHECK(key_lemma_check(st).all_ok());
}

TEST_CASE("all conditions hold and the ideal is preserved, randomized") {
    Rng gen(100);
    int done = 0;
    while (done < 25) {
        unsigned N = 2 + gen.below(5);  // 2..6
        unsigned nq = 1 + gen.below(3);
        unsigned nl = gen.below(3);
        std::vector<P> F;
        for (unsigned i = 0; i < nq; ++i) F.push_back(random_form(gen, N, true));
        for (unsigned i = 0; i < nl; ++i) F.push_back(random_form(gen, N, false));
        Rng rng(200 + done);
        auto st = achieve_standard_form(F, N, kF, rng);
        ++done;

        CHECK(check_standard_form(st).empty());

        // ideal equality after undoing the accumulated change
        std::vector<P> back;
        for (auto& f : st.forms) back.push_back(st.accumulated.unapply(f));
        CHECK(same_ideal(F, back));

        // transformed ideal equality, bit-exact on reduced bases
        std::vector<P> fwd;
        for (auto& f : F) fwd.push_back(st.accumulated.apply(f));
        auto gb1 = buchberger(fwd, MonomialOrder::grevlex());
        auto gb2 = buchberger(st.forms, MonomialOrder::grevlex());
        CHECK(gb1.elems == gb2.elems);

        // d bookkeeping: h <= d <= n and n - d zero front polynomials
        CHECK(st.h <= st.d);
        CHECK(st.d <= st.n);
        int zero_fronts = 0;
        for (auto& f : st.front_polys)
            if (f.is_zero()) ++zero_fronts;
        CHECK(st.d == st.n - zero_fronts);
        // n - d of the reduced relations are linear tag forms
        int linear_rels = 0;
        for (auto& g : st.front_relations_ideal.generators())
            if (g.is_homogeneous_of(1)) ++linear_rels;
        CHECK(linear_rels == st.n - st.d);

        // h matches the height after killing the leading variables
        std::vector<P> quads(st.forms.begin(), st.forms.begin() + st.n);
        std::vector<bool> kill(N, false);
        for (int i = 0; i < st.m; ++i) kill[i] = true;
        std::vector<P> nonzero;
        for (auto& q : quads)
            if (!q.is_zero()) nonzero.push_back(q);
        if (!nonzero.empty())
            CHECK(height_after_killing(Ideal<Zp>(nonzero, N), kill) == st.h);

        CHECK(st.r <= (st.m + st.h) * st.n);
        CHECK(st.s <= (st.m + st.h) * st.n * st.n);
    }
}

TEST_CASE("key lemma holds on 50 random standard forms") {
    Rng gen(500);
    int done = 0;
    while (done < 50) {
        unsigned N = 2 + gen.below(5);  // up to 6 variables
        unsigned nq = 1 + gen.below(3);
        unsigned nl = gen.below(2);
        std::vector<P> F;
        for (unsigned i = 0; i < nq; ++i) F.push_back(random_form(gen, N, true));
        for (unsigned i = 0; i < nl; ++i) F.push_back(random_form(gen, N, false));
        Rng rng(900 + done);
        auto st = achieve_standard_form(F, N, kF, rng);
        auto rep = key_lemma_check(st);
        CHECK(rep.all_ok());
        CHECK(rep.P_height == st.n - st.h);
        ++done;
    }
}

TEST_CASE("tail polynomials satisfy a nontrivial front relation") {
    // Veronese-patterned fronts with doubled tails force the relation
    // T1 T3 - T2^2 to vanish on the tails as well
    unsigned N = 4;
    P u1 = var(N, 0), u2 = var(N, 1), z1 = var(N, 2), z2 = var(N, 3);
    std::vector<P> F = {u1 * u1 + z1 * z1, u1 * u2 + z1 * z2, u2 * u2 + z2 * z2};
    Rng rng(3);
    auto st = achieve_standard_form(F, N, kF, rng);
    auto rep = key_lemma_check(st);
    CHECK(rep.all_ok());
    CHECK(rep.P_height == st.n - st.h);
    if (st.n - st.h == 1) {
        // the kernel is principal: check the generator degree is 2 (a true
        // Veronese-type relation, not a linear collapse)
        REQUIRE(st.front_relations_ideal.generators().size() >= 1);
    }
}

TEST_CASE("pinned prefix survives and skips the random recombination") {
    // forms whose first quadric is already a maximal regular sequence modulo
    // the leading variables
    unsigned N = 4;
    P a = var(N, 0), b = var(N, 1), x1 = var(N, 2);
    std::vector<P> F = {a * a, a * b, x1};
    Rng rng(8);
    auto st0 = achieve_standard_form(F, N, kF, rng);
    CHECK(st0.h == 1);
    // now the pinned variant must keep slot 0 equal to a^2 up to the change
    std::vector<P> F2 = {a * a, a * b, x1};
    Rng rng2(8);
    auto st = achieve_standard_form(F2, N, kF, rng2, kDefaultRetryBudget, 1);
    CHECK(st.h == 1);
    CHECK(check_standard_form(st).empty());
}

TEST_CASE("degenerate inputs") {
    unsigned N = 3;
    // all zero
    Rng rng(2);
    auto st = achieve_standard_form<Zp>({P::zero(N), P::zero(N)}, N, kF, rng);
    CHECK(st.m == 0);
    CHECK(st.h == 0);
    CHECK(st.n == 2);
    for (auto& f : st.forms) CHECK(f.is_zero());
    // all linear
    Rng rng2(2);
    auto st2 = achieve_standard_form<Zp>({var(N, 0) + var(N, 1), var(N, 2)}, N, kF, rng2);
    CHECK(st2.m == 2);
    CHECK(st2.n == 0);
    CHECK(st2.h == 0);
    // degree 3 rejected
    Rng rng3(2);
    P x = var(N, 0);
    CHECK_THROWS_AS(
        (void)achieve_standard_form<Zp>({x * x * x}, N, kF, rng3), NonHomogeneousError);
    // non-homogeneous rejected
    Rng rng4(2);
    CHECK_THROWS_AS(
        (void)achieve_standard_form<Zp>({x * x + x}, N, kF, rng4), NonHomogeneousError);
}

TEST_CASE("fields below the genericity floor are refused") {
    auto small = FieldConfig::prime(101);  // floor stays at 32003
    Rng rng(5);
    Zp one(1, 101);
    Poly<Zp> u = Poly<Zp>::variable(1, 0, one);
    CHECK_THROWS_AS((void)achieve_standard_form<Zp>({u * u}, 1, small, rng),
                    GenericityError);
    // lowering the floor makes the same field acceptable
    auto relaxed = FieldConfig::prime(101, 101);
    Rng rng2(5);
    auto st = achieve_standard_form<Zp>({u * u}, 1, relaxed, rng2);
    CHECK(st.h == 1);
}
