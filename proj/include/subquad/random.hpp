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

#ifndef SUBQUAD_RANDOM_HPP
#define SUBQUAD_RANDOM_HPP

#include <cstdint>
#include <random>

#include "subquad/polynomial.hpp"

namespace subquad {

/// Deterministic RNG: raw mt19937_64 draws only, no std distributions, so the
/// byte-identical-output guarantee does not depend on library internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw MismatchError("Rng::below(0)");
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = g_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 g_;
};

template <typename K>
K random_scalar(Rng& rng, const FieldConfig& field);

template <>
inline Zp random_scalar<Zp>(Rng& rng, const FieldConfig& field) {
    return Zp(static_cast<std::int64_t>(rng.below(field.p)), field.p);
}
template <>
inline Rat random_scalar<Rat>(Rng& rng, const FieldConfig& field) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(field.genericity_floor) + 1;
    std::int64_t v = static_cast<std::int64_t>(rng.below(span)) -
                     static_cast<std::int64_t>(field.genericity_floor);
    return Rat(v);
}

template <typename K>
K random_nonzero_scalar(Rng& rng, const FieldConfig& field) {
    for (;;) {
        K c = random_scalar<K>(rng, field);
        if (!c.is_zero()) return c;
    }
}

/// Random linear form supported on variables [lo, hi).
template <typename K>
Poly<K> random_linear_form(Rng& rng, const FieldConfig& field, unsigned nvars,
                           unsigned lo, unsigned hi) {
    std::vector<typename Poly<K>::Term> ts;
    for (unsigned i = lo; i < hi; ++i) {
        K c = random_scalar<K>(rng, field);
        if (!c.is_zero()) ts.emplace_back(Monomial::var(nvars, i), c);
    }
    return Poly<K>::from_terms(nvars, std::move(ts));
}

template <typename K>
Poly<K> random_quadric(Rng& rng, const FieldConfig& field, unsigned nvars) {
    std::vector<typename Poly<K>::Term> ts;
    for (unsigned i = 0; i < nvars; ++i)
        for (unsigned j = i; j < nvars; ++j) {
            K c = random_scalar<K>(rng, field);
            if (c.is_zero()) continue;
            Monomial m(nvars);
            m[i] += 1;
            m[j] += 1;
            ts.emplace_back(std::move(m), c);
        }
    return Poly<K>::from_terms(nvars, std::move(ts));
}

}  // namespace subquad

#endif
