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

#ifndef SUBQUAD_GROEBNER_HPP
#define SUBQUAD_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "subquad/linalg.hpp"
#include "subquad/polynomial.hpp"

namespace subquad {

/// Reduced Groebner basis: monic, interreduced, elements sorted ascending by
/// leading monomial. Unique for a given ideal and order.
template <typename K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Poly<K>> elems;
    std::vector<Monomial> lead;  // parallel to elems

    bool is_unit() const {
        return elems.size() == 1 && !elems[0].is_zero() && elems[0].degree() == 0;
    }
    bool is_zero_ideal() const { return elems.empty(); }
};

namespace detail {

// Full reduction of f by the (monic) reducers: no term of the result is
// divisible by any reducer's lead. Optionally records quotients.
template <typename K>
Poly<K> reduce_full(const Poly<K>& f, const std::vector<Poly<K>>& reducers,
                    const std::vector<Monomial>& leads, const MonomialOrder& ord,
                    std::vector<Poly<K>>* quotients = nullptr) {
    struct OrdLess {
        const MonomialOrder* o;
        bool operator()(const Monomial& a, const Monomial& b) const { return o->greater(a, b); }
    };
    // work map sorted descending under ord; remainder accumulates separately
    std::map<Monomial, K, OrdLess> work{OrdLess{&ord}};
    for (auto& [m, c] : f.terms()) work.emplace(m, c);

    std::vector<typename Poly<K>::Term> rem;
    if (quotients) {
        quotients->assign(reducers.size(), Poly<K>::zero(f.nvars()));
    }
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        K c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        bool reduced = false;
        for (std::size_t k = 0; k < reducers.size(); ++k) {
            if (!leads[k].divides(m)) continue;
            Monomial q = leads[k].divide_into(m);
            // reducers are monic: subtract c * q * reducer
            for (auto& [mm, cc] : reducers[k].terms()) {
                Monomial tm = mm * q;
                K tc = cc * c;
                auto w = work.find(tm);
                if (tm == m) continue;  // cancels the head by construction
                if (w == work.end())
                    work.emplace(std::move(tm), -tc);
                else {
                    w->second -= tc;
                    if (w->second.is_zero()) work.erase(w);
                }
            }
            if (quotients)
                (*quotients)[k] = (*quotients)[k] +
                                  Poly<K>::from_terms(f.nvars(), {{q, c}});
            reduced = true;
            break;
        }
        if (!reduced) rem.emplace_back(m, c);
    }
    return Poly<K>::from_terms(f.nvars(), std::move(rem));
}

template <typename K>
Poly<K> make_monic(const Poly<K>& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    const auto& lt = f.leading_term(ord);
    if (lt.second.is_one()) return f;
    return f.scaled(lt.second.inv());
}

}  // namespace detail

/// Remainder of f on division by G; zero iff f lies in the ideal of G.
template <typename K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    if (f.nvars() != 0 && !gb.elems.empty() && gb.elems[0].nvars() != f.nvars())
        throw MismatchError("normal form over mismatched rings");
    return detail::reduce_full(f, gb.elems, gb.lead, gb.order);
}

template <typename K>
Poly<K> normal_form_with_quotients(const Poly<K>& f, const GroebnerBasis<K>& gb,
                                   std::vector<Poly<K>>& quotients) {
    return detail::reduce_full(f, gb.elems, gb.lead, gb.order, &quotients);
}

/// Buchberger with the normal selection strategy (minimal lcm degree, ties by
/// pair index) and both classical pair-dropping criteria, followed by full
/// interreduction. Deterministic.
template <typename K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& generators,
                            const MonomialOrder& order) {
    std::vector<Poly<K>> basis;
    std::vector<Monomial> leads;
    auto push = [&](const Poly<K>& p) {
        Poly<K> m = detail::make_monic(p, order);
        basis.push_back(m);
        leads.push_back(m.leading_term(order).first);
    };
    for (auto& g : generators)
        if (!g.is_zero()) push(g);

    struct Pair {
        unsigned deg;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> alive;  // pairs not yet discarded
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = leads[i].lcm(leads[j]);
            pending.insert({l.degree(), i, j});
            alive.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    auto alive_pair = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return alive.count({a, b}) != 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        if (!alive.count({i, j})) continue;
        alive.erase({i, j});

        // product criterion
        if (leads[i].coprime(leads[j])) continue;
        // chain criterion: some k with lt_k | lcm(i,j) and both (i,k),(j,k) settled
        Monomial lij = leads[i].lcm(leads[j]);
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (leads[k].divides(lij) && !alive_pair(i, k) && !alive_pair(j, k)) skip = true;
        }
        if (skip) continue;

        Monomial qi = leads[i].divide_into(lij);
        Monomial qj = leads[j].divide_into(lij);
        K one = one_like(basis[i].sample_coeff());
        Poly<K> s = basis[i].mono_mul(qi, one) - basis[j].mono_mul(qj, one);
        Poly<K> r = detail::reduce_full(s, basis, leads, order);
        if (!r.is_zero()) {
            push(r);
            add_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (leads[j].divides(leads[i]) &&
                (leads[j] != leads[i] || j < i))
                keep[i] = false;
        }
    std::vector<Poly<K>> min_basis;
    std::vector<Monomial> min_leads;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            min_basis.push_back(basis[i]);
            min_leads.push_back(leads[i]);
        }

    // fully reduce each element against the others
    GroebnerBasis<K> out;
    out.order = order;
    std::vector<std::size_t> idx(min_basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.less(min_leads[a], min_leads[b]);
    });
    for (std::size_t t = 0; t < idx.size(); ++t) {
        std::size_t i = idx[t];
        std::vector<Poly<K>> others;
        std::vector<Monomial> other_leads;
        for (std::size_t k = 0; k < min_basis.size(); ++k) {
            if (k == i) continue;
            others.push_back(min_basis[k]);
            other_leads.push_back(min_leads[k]);
        }
        Poly<K> r = detail::reduce_full(min_basis[i], others, other_leads, order);
        out.elems.push_back(detail::make_monic(r, order));
        out.lead.push_back(out.elems.back().leading_term(order).first);
    }
    return out;
}

/// Ideal with a lazily filled per-order cache of reduced Groebner bases.
/// The cache behaves as a write-once map per order key; copies share it.
template <typename K>
class Ideal {
public:
    Ideal() : nvars_(0), cache_(std::make_shared<Cache>()) {}
    Ideal(std::vector<Poly<K>> gens, unsigned nvars)
        : gens_(std::move(gens)), nvars_(nvars), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens_)
            if (g.nvars() != nvars_) throw MismatchError("generator over wrong ring");
    }

    const std::vector<Poly<K>>& generators() const { return gens_; }
    unsigned nvars() const { return nvars_; }

    const GroebnerBasis<K>& groebner(const MonomialOrder& order) const {
        std::string key = order.cache_key();
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(key);
        if (it == cache_->bases.end()) {
            auto gb = std::make_unique<GroebnerBasis<K>>(buchberger(gens_, order));
            it = cache_->bases.emplace(key, std::move(gb)).first;
        }
        return *it->second;
    }

    bool contains(const Poly<K>& f) const {
        return normal_form(f, groebner(MonomialOrder::grevlex())).is_zero();
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::unique_ptr<GroebnerBasis<K>>> bases;
    };
    std::vector<Poly<K>> gens_;
    unsigned nvars_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace subquad

#endif
