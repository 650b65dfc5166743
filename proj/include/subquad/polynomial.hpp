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

#ifndef SUBQUAD_POLYNOMIAL_HPP
#define SUBQUAD_POLYNOMIAL_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "subquad/field.hpp"
#include "subquad/monomial.hpp"

namespace subquad {

// Terms are kept sorted descending under this fixed canonical order so that
// equality, printing and iteration are deterministic regardless of the order
// any particular computation runs under.
inline const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored; the zero polynomial has an empty term list.
template <typename K>
class Poly {
public:
    using Term = std::pair<Monomial, K>;

    Poly() : nvars_(0) {}
    explicit Poly(unsigned nvars) : nvars_(nvars) {}

    static Poly zero(unsigned nvars) { return Poly(nvars); }
    static Poly constant(unsigned nvars, const K& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
        return p;
    }
    static Poly variable(unsigned nvars, unsigned i, const K& one) {
        Poly p(nvars);
        p.terms_.emplace_back(Monomial::var(nvars, i), one);
        return p;
    }
    static Poly from_terms(unsigned nvars, std::vector<Term> terms) {
        Poly p(nvars);
        std::map<Monomial, K, CanonLess> acc{CanonLess{}};
        for (auto& [m, c] : terms) {
            if (m.nvars() != nvars) throw MismatchError("term over wrong variable count");
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second += c;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.front().first.degree();
        for (auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }
    bool is_homogeneous_of(unsigned d) const {
        for (auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    std::uint64_t support_mask() const {
        std::uint64_t s = 0;
        for (auto& [m, c] : terms_) s |= m.support_mask();
        return s;
    }

    K coeff(const Monomial& m) const {
        for (auto& [mm, c] : terms_)
            if (mm == m) return c;
        return zero_like(sample_coeff());
    }

    // Some nonzero coefficient; used to manufacture zeros/ones of the right field.
    const K& sample_coeff() const {
        if (terms_.empty()) throw MismatchError("zero polynomial has no coefficients");
        return terms_.front().second;
    }

    Poly operator-() const {
        Poly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }

    Poly operator*(const Poly& o) const {
        check(o);
        std::map<Monomial, K, CanonLess> acc{CanonLess{}};
        for (auto& [ma, ca] : terms_) {
            for (auto& [mb, cb] : o.terms_) {
                Monomial m = ma * mb;
                K c = ca * cb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second += c;
            }
        }
        Poly r(nvars_);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(m, c);
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& [m, cc] : terms_) r.terms_.emplace_back(m, cc * c);
        return r;
    }

    Poly mono_mul(const Monomial& m, const K& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
        // multiplying by a fixed monomial preserves the canonical sort
        return r;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Leading term under an arbitrary order (not necessarily the canonical one).
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw MismatchError("leading term of zero polynomial");
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].first, terms_[best].first)) best = i;
        return terms_[best];
    }

    std::vector<Term> terms_sorted(const MonomialOrder& ord) const {
        std::vector<Term> ts = terms_;
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.first, b.first);
        });
        return ts;
    }

    /// Keep only the terms whose support lies inside `keep`; this is the ring
    /// map killing the other variables.
    Poly restrict_support(const std::vector<bool>& keep) const {
        Poly r(nvars_);
        for (auto& [m, c] : terms_) {
            bool ok = true;
            for (unsigned i = 0; i < nvars_ && ok; ++i)
                if (m[i] && !keep[i]) ok = false;
            if (ok) r.terms_.emplace_back(m, c);
        }
        return r;
    }

    /// Re-index into a smaller ring; every term must be supported on mapped
    /// variables (old index i -> map[i], or -1 to forbid).
    Poly compress(const std::vector<int>& map, unsigned new_nvars) const {
        Poly r(new_nvars);
        for (auto& [m, c] : terms_) {
            Monomial nm(new_nvars);
            for (unsigned i = 0; i < nvars_; ++i) {
                if (!m[i]) continue;
                if (map[i] < 0) throw MismatchError("compress: term uses a dropped variable");
                nm[static_cast<unsigned>(map[i])] = m[i];
            }
            r.terms_.emplace_back(std::move(nm), c);
        }
        return canonicalize(std::move(r));
    }

    /// Embed into a larger ring, old variable i becoming map[i].
    Poly embed(const std::vector<unsigned>& map, unsigned new_nvars) const {
        Poly r(new_nvars);
        for (auto& [m, c] : terms_) {
            Monomial nm(new_nvars);
            for (unsigned i = 0; i < nvars_; ++i)
                if (m[i]) nm[map[i]] = m[i];
            r.terms_.emplace_back(std::move(nm), c);
        }
        return canonicalize(std::move(r));
    }

    /// Substitute args[i] for x_i and expand into a ring on out_nvars variables.
    Poly substitute(const std::vector<Poly>& args, unsigned out_nvars) const {
        if (args.size() != nvars_) throw MismatchError("substitute: wrong argument count");
        Poly acc(out_nvars);
        for (auto& [m, c] : terms_) {
            Poly t = Poly::constant(out_nvars, c);
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = t * args[i];
            acc = acc + t;
        }
        return acc;
    }

private:
    // descending, so accumulation maps iterate in the stored term order
    struct CanonLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return canonical_order().greater(a, b);
        }
    };

    static Poly canonicalize(Poly p) {
        std::map<Monomial, K, CanonLess> acc{CanonLess{}};
        for (auto& [m, c] : p.terms_) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second += c;
        }
        p.terms_.clear();
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }

    void check(const Poly& o) const {
        if (nvars_ != o.nvars_)
            throw MismatchError("polynomials over different variable counts");
    }

    Poly merged(const Poly& o, bool subtract) const {
        check(o);
        Poly r(nvars_);
        const auto& ord = canonical_order();
        std::size_t i = 0, j = 0;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ord.compare(terms_[i].first, o.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                const auto& [m, cc] = o.terms_[j++];
                r.terms_.emplace_back(m, subtract ? -cc : cc);
            } else {
                K cc = subtract ? terms_[i].second - o.terms_[j].second
                                : terms_[i].second + o.terms_[j].second;
                if (!cc.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(cc));
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            const auto& [m, cc] = o.terms_[j];
            r.terms_.emplace_back(m, subtract ? -cc : cc);
        }
        // descending order is preserved: both inputs are sorted under the same
        // canonical order and the merge always emits the greater monomial first
        return r;
    }

    unsigned nvars_;
    std::vector<Term> terms_;  // sorted descending under canonical_order()
};

enum class PolyOp { add, sub, mul };

/// Dispatch wrapper kept for symmetry with the operator forms.
template <typename K>
Poly<K> poly_arith(const Poly<K>& a, const Poly<K>& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw MismatchError("unknown polynomial operation");
}

}  // namespace subquad

#endif
