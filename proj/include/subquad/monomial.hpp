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

#ifndef SUBQUAD_MONOMIAL_HPP
#define SUBQUAD_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "subquad/errors.hpp"

namespace subquad {

/// Exponent vector over variables x_0 .. x_{N-1}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(unsigned nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    static Monomial var(unsigned nvars, unsigned i, unsigned exp = 1) {
        Monomial m(nvars);
        m.e_[i] = exp;
        return m;
    }

    unsigned nvars() const { return static_cast<unsigned>(e_.size()); }
    unsigned operator[](unsigned i) const { return e_[i]; }
    unsigned& operator[](unsigned i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }
    bool is_one() const {
        for (unsigned x : e_)
            if (x) return false;
        return true;
    }

    // Bitmask of variables with positive exponent; rings here stay below 64 vars.
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (unsigned i = 0; i < e_.size(); ++i)
            if (e_[i]) m |= (std::uint64_t(1) << i);
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        check(o);
        Monomial r(nvars());
        for (unsigned i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        check(o);
        for (unsigned i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // o / *this, caller guarantees divisibility
    Monomial divide_into(const Monomial& o) const {
        check(o);
        Monomial r(nvars());
        for (unsigned i = 0; i < e_.size(); ++i) r.e_[i] = o.e_[i] - e_[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        check(o);
        Monomial r(nvars());
        for (unsigned i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        check(o);
        for (unsigned i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    void check(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw MismatchError("monomials over different variable counts");
    }
    std::vector<unsigned> e_;
};

/// Total order on monomials compatible with multiplication: grevlex, lex, or a
/// block elimination order whose front block dominates (grevlex within blocks).
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block_elim };

    MonomialOrder() : kind_(Kind::grevlex) {}

    static MonomialOrder grevlex() { return MonomialOrder(); }
    static MonomialOrder lex() {
        MonomialOrder o;
        o.kind_ = Kind::lex;
        return o;
    }
    static MonomialOrder block_elim(std::vector<bool> front) {
        MonomialOrder o;
        o.kind_ = Kind::block_elim;
        o.front_ = std::move(front);
        return o;
    }
    // front block = variables [0, k)
    static MonomialOrder eliminate_first(unsigned k, unsigned nvars) {
        std::vector<bool> f(nvars, false);
        for (unsigned i = 0; i < k; ++i) f[i] = true;
        return block_elim(std::move(f));
    }

    Kind kind() const { return kind_; }
    const std::vector<bool>& front() const { return front_; }

    // -1, 0, +1 for a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::lex: {
                for (unsigned i = 0; i < a.nvars(); ++i) {
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                }
                return 0;
            }
            case Kind::grevlex:
                return cmp_grevlex_all(a, b);
            case Kind::block_elim: {
                int c = cmp_grevlex_block(a, b, true);
                if (c) return c;
                return cmp_grevlex_block(a, b, false);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Stable identity for per-ideal Groebner caches.
    std::string cache_key() const {
        std::string s;
        switch (kind_) {
            case Kind::grevlex: s = "g"; break;
            case Kind::lex: s = "l"; break;
            case Kind::block_elim:
                s = "b";
                for (bool f : front_) s += f ? '1' : '0';
                break;
        }
        return s;
    }

private:
    static int cmp_grevlex_all(const Monomial& a, const Monomial& b) {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        // last differing variable, smaller exponent wins
        for (unsigned i = a.nvars(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    int cmp_grevlex_block(const Monomial& a, const Monomial& b, bool in_front) const {
        unsigned da = 0, db = 0;
        for (unsigned i = 0; i < a.nvars(); ++i) {
            bool f = i < front_.size() && front_[i];
            if (f == in_front) {
                da += a[i];
                db += b[i];
            }
        }
        if (da != db) return da > db ? 1 : -1;
        for (unsigned i = a.nvars(); i-- > 0;) {
            bool f = i < front_.size() && front_[i];
            if (f == in_front && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::vector<bool> front_;
};

}  // namespace subquad

#endif
