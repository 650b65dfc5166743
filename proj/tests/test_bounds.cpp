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

#include "subquad/bounds.hpp"

using namespace subquad;

namespace {
// plain recursion without the memo table, as an independent oracle
mpz_class B_oracle(const mpz_class& m, long n, long h) {
    if (h == 0) return m * (n + 1);
    mpz_class nz(n);
    mpz_class g = nz * nz * nz + nz * nz + nz + 1;
    return (m + h) * g + mpz_class(h) * (n + 1) + B_oracle((m + h) * nz * nz, n, h - 1);
}
}  // namespace

TEST_CASE("base cases and hand-evaluated values") {
    CHECK(bound_B(0, 1, 0) == 0);
    CHECK(bound_B(2, 3, 0) == 8);   // m(n+1) = 2*4
    CHECK(bound_B(4, 2, 0) == 12);  // 4*3
    // B(0,2,1) = 1*15 + 1*3 + B(4,2,0) = 15 + 3 + 12
    CHECK(bound_B(0, 2, 1) == 30);
    CHECK_THROWS_AS((void)bound_B(0, 1, 2), MismatchError);  // h > n
    CHECK_THROWS_AS((void)bound_B(-1, 1, 0), MismatchError);
}

TEST_CASE("memoized recursion agrees with the plain recursion") {
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 5; ++n)
            for (long h = 0; h <= n && h <= 4; ++h)
                CHECK(bound_B(m, n, h) == B_oracle(mpz_class(m), n, h));
}

TEST_CASE("C and C0 hand values") {
    // C(1): only (m,n)=(0,1) with h=0: B(0,1,0)+0 = 0
    CHECK(bound_C(1) == 0);
    CHECK(bound_C0(1) == 0);
    // C(2): maximum at (0,2,1): B(0,2,1)+1 = 31
    CHECK(bound_C(2) == 31);
    CHECK(bound_C0(2) == 31);
    CHECK_THROWS_AS((void)bound_C(0), MismatchError);
    CHECK_THROWS_AS((void)bound_C0(0), MismatchError);
}

TEST_CASE("C dominates every admissible single evaluation") {
    for (long s = 1; s <= 5; ++s) {
        mpz_class c = bound_C(s);
        for (long n = 0; n <= s; ++n)
            for (long h = 0; h <= n - 1; ++h)
                CHECK(c >= bound_B(s - n, n, h) + h);
    }
}

TEST_CASE("C0(s) <= C(s) + s on the small sweep") {
    for (long s = 1; s <= 6; ++s) CHECK(bound_C0(s) <= bound_C(s) + s);
}

TEST_CASE("theta closed form") {
    CHECK(theta(0, mpz_class(7)) == 0);
    CHECK(theta(2, mpz_class(4)) == 5);  // 1 + 4
    CHECK(theta(3, mpz_class(1)) == 3);
    // theta_h = t*theta_{h-1} + 1
    for (long h = 1; h <= 5; ++h)
        CHECK(theta(h, mpz_class(9)) == 9 * theta(h - 1, mpz_class(9)) + 1);
}

TEST_CASE("envelopes sandwich B over the full small sweep") {
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 6; ++n)
            for (long h = 0; h <= n && h <= 6; ++h) {
                Envelope env = envelope(mpz_class(m), n, h);
                mpz_class b = bound_B(m, n, h);
                CHECK(env.lower <= b);
                CHECK(b <= env.upper);
                if (h == 0) {
                    CHECK(env.lower == b);
                    CHECK(env.upper == b);
                }
            }
}

TEST_CASE("asymptotic table rows") {
    auto rows = asymptotic_report(6);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].C == 0);
    CHECK(rows[0].two_s_2s == 2);
    CHECK(rows[0].ratio == 0);
    CHECK(rows[1].C == 31);
    CHECK(rows[1].two_s_2s == 32);  // 2 * 2^4
    CHECK(rows[1].ratio == mpq_class(31, 32));
    // C strictly increases on 2..6
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].C > rows[i - 1].C);
    CHECK_THROWS_AS((void)asymptotic_report(99), MismatchError);
}

TEST_CASE("C(6) needs arbitrary precision") {
    // the value exceeds 2^64; exactness is the whole point of the module
    mpz_class c6 = bound_C(6);
    mpz_class two64;
    mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
    CHECK(c6 > two64);
}

TEST_CASE("B is monotone in m on the sweep") {
    for (long n = 1; n <= 5; ++n)
        for (long h = 0; h <= n && h <= 4; ++h)
            for (long m = 0; m <= 5; ++m)
                CHECK(bound_B(m, n, h) <= bound_B(m + 1, n, h));
}
