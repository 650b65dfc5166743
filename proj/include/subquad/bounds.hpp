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

#ifndef SUBQUAD_BOUNDS_HPP
#define SUBQUAD_BOUNDS_HPP

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "subquad/errors.hpp"

namespace subquad {

/// Exact evaluation of the recursion
///   B(m,n,0) = m(n+1)
///   B(m,n,h) = (m+h)(n^3+n^2+n+1) + h(n+1) + B((m+h)n^2, n, h-1)
/// together with C(s), C0(s) and the sandwich envelopes. The m argument grows
/// like n^(2h) along the recursion, so everything is arbitrary precision.
class BoundTable {
public:
    const mpz_class& B(const mpz_class& m, long n, long h) {
        if (m < 0 || n < 0 || h < 0)
            throw MismatchError("bound_B: arguments must be nonnegative");
        if (h > n) throw MismatchError("bound_B: h exceeds n");
        std::lock_guard<std::mutex> lock(mu_);
        return B_unlocked(m, n, h);
    }

    const mpz_class& C(long s) {
        if (s < 1) throw MismatchError("bound_C: s must be positive");
        std::lock_guard<std::mutex> lock(mu_);
        auto it = c_memo_.find(s);
        if (it != c_memo_.end()) return it->second;
        mpz_class best = 0;
        // h ranges over 0..n-1 only; n = 0 leaves an empty range by the same
        // quantifier and contributes nothing
        for (long n = 0; n <= s; ++n) {
            long m = s - n;
            for (long h = 0; h <= n - 1; ++h) {
                mpz_class v = B_unlocked(mpz_class(m), n, h) + h;
                if (v > best) best = v;
            }
        }
        return c_memo_.emplace(s, std::move(best)).first->second;
    }

    const mpz_class& C0(long s) {
        if (s < 1) throw MismatchError("bound_C0: s must be positive");
        std::lock_guard<std::mutex> lock(mu_);
        auto it = c0_memo_.find(s);
        if (it != c0_memo_.end()) return it->second;
        mpz_class best = 0;
        for (long n = 0; n <= s; ++n) {
            long m = s - n;
            for (long h = 0; h <= n - 1; ++h) {
                mpz_class v = B_unlocked(mpz_class(0), n, h) + m + h;
                if (v > best) best = v;
            }
        }
        return c0_memo_.emplace(s, std::move(best)).first->second;
    }

private:
    using Key = std::tuple<mpz_class, long, long>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            int c = cmp(std::get<0>(a), std::get<0>(b));
            if (c) return c < 0;
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            return std::get<2>(a) < std::get<2>(b);
        }
    };

    const mpz_class& B_unlocked(const mpz_class& m, long n, long h) {
        if (h > n) throw MismatchError("bound_B: h exceeds n");
        Key key{m, n, h};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        mpz_class value;
        if (h == 0) {
            value = m * (n + 1);
        } else {
            mpz_class nz(n);
            mpz_class g = nz * nz * nz + nz * nz + nz + 1;
            mpz_class inner_m = (m + h) * nz * nz;
            value = (m + h) * g + mpz_class(h) * (n + 1) + B_unlocked(inner_m, n, h - 1);
        }
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

    std::mutex mu_;
    std::map<Key, mpz_class, KeyLess> memo_;
    std::map<long, mpz_class> c_memo_;
    std::map<long, mpz_class> c0_memo_;
};

inline BoundTable& bound_table() {
    static BoundTable t;
    return t;
}

inline mpz_class bound_B(const mpz_class& m, long n, long h) {
    return bound_table().B(m, n, h);
}
inline mpz_class bound_B(long m, long n, long h) { return bound_B(mpz_class(m), n, h); }
inline mpz_class bound_C(long s) { return bound_table().C(s); }
inline mpz_class bound_C0(long s) { return bound_table().C0(s); }

/// theta_h(t) = 1 + t + ... + t^(h-1); closed form for t > 1.
inline mpz_class theta(long h, const mpz_class& t) {
    if (h <= 0) return 0;
    if (t == 1) return h;
    mpz_class th;
    mpz_pow_ui(th.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(h));
    return (th - 1) / (t - 1);
}

struct Envelope {
    mpz_class lower;
    mpz_class upper;
};

/// The sandwich around B: (m+h)((n+1)(n^2)^h + g*theta_h(n^2)) from below and
/// the same shape with n^2+1 and g1 = g+n+1 from above; both equal B at h = 0.
inline Envelope envelope(const mpz_class& m, long n, long h) {
    if (h < 0 || h > n) throw MismatchError("envelope: need 0 <= h <= n");
    mpz_class nz(n);
    mpz_class g = nz * nz * nz + nz * nz + nz + 1;
    mpz_class g1 = g + nz + 1;
    mpz_class n2 = nz * nz;
    mpz_class n2p1 = n2 + 1;
    auto powz = [](const mpz_class& b, long e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    Envelope env;
    env.lower = (m + h) * ((nz + 1) * powz(n2, h) + g * theta(h, n2));
    env.upper = (m + h) * ((nz + 1) * powz(n2p1, h) + g1 * theta(h, n2p1));
    return env;
}

struct AsymptoticRow {
    long s;
    mpz_class C;
    mpz_class C0;
    mpz_class two_s_2s;   // 2 s^(2s)
    mpq_class ratio;      // C(s) / 2s^(2s), exact
};

/// Exact table documenting the 2 s^{2s} asymptotics of C and C0.
inline std::vector<AsymptoticRow> asymptotic_report(long s_max, long ceiling = 8) {
    if (s_max > ceiling)
        throw MismatchError("asymptotic_report: s_max exceeds the configured ceiling");
    std::vector<AsymptoticRow> rows;
    for (long s = 1; s <= s_max; ++s) {
        AsymptoticRow r;
        r.s = s;
        r.C = bound_C(s);
        r.C0 = bound_C0(s);
        mpz_class sz(s);
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), sz.get_mpz_t(), static_cast<unsigned long>(2 * s));
        r.two_s_2s = 2 * p;
        r.ratio = mpq_class(r.C) / mpq_class(r.two_s_2s);
        r.ratio.canonicalize();
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace subquad

#endif
