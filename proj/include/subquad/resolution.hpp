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

#ifndef SUBQUAD_RESOLUTION_HPP
#define SUBQUAD_RESOLUTION_HPP

#include <map>
#include <vector>

#include "subquad/groebner.hpp"

namespace subquad {

struct ResolutionBudget {
    std::size_t max_reductions = 5'000'000;  // head reduction steps, all levels
    std::size_t max_basis = 20'000;          // module elements per level
    std::size_t extra_levels = 8;            // slack past the variable count
};

/// Minimal graded free resolution of R/I. betti[i] is the rank of F_i
/// (betti[0] == 1); pd is the index of the last nonzero module.
template <typename K>
struct FreeResolution {
    int pd = 0;
    std::vector<std::size_t> betti;
    // diff[l] is the matrix of d_{l+1} : F_{l+1} -> F_l (rows index F_l).
    std::vector<std::vector<std::vector<Poly<K>>>> diff;
};

namespace detail {

// Free-module term c * m * e_comp.
template <typename K>
struct MTerm {
    unsigned comp;
    Monomial mono;
    K coeff;
};

template <typename K>
using MPoly = std::vector<MTerm<K>>;  // sorted descending under the level order

// Schreyer order induced by the previous level's basis: m e_i > m' e_j iff
// the expanded ring monomials m*lam_i > m'*lam_j under grevlex, with ties
// broken by the position chains, bottom level first, smaller position
// winning. Level one has lam = 1 and empty chains, i.e. the plain ring order.
struct SchreyerOrder {
    std::vector<Monomial> lam;
    std::vector<std::vector<unsigned>> chain;

    static SchreyerOrder ring_level(unsigned nvars, std::size_t comps) {
        SchreyerOrder o;
        o.lam.assign(comps, Monomial(nvars));
        o.chain.assign(comps, {});
        return o;
    }

    int cmp(unsigned ci, const Monomial& mi, unsigned cj, const Monomial& mj) const {
        int c = canonical_order().compare(mi * lam[ci], mj * lam[cj]);
        if (c) return c;
        const auto& a = chain[ci];
        const auto& b = chain[cj];
        for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
        if (ci != cj) return ci < cj ? 1 : -1;
        return 0;
    }
    template <typename K>
    bool greater(const MTerm<K>& x, const MTerm<K>& y) const {
        return cmp(x.comp, x.mono, y.comp, y.mono) > 0;
    }
};

template <typename K>
MPoly<K> mp_normalize(MPoly<K> v, const SchreyerOrder& ord) {
    std::sort(v.begin(), v.end(), [&](const MTerm<K>& a, const MTerm<K>& b) {
        return ord.greater(a, b);
    });
    MPoly<K> out;
    for (auto& t : v) {
        if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(t);
        }
    }
    return out;
}

template <typename K>
MPoly<K> mp_mono_mul(const MPoly<K>& a, const Monomial& m, const K& c) {
    MPoly<K> v;
    v.reserve(a.size());
    for (auto& t : a) v.push_back({t.comp, t.mono * m, t.coeff * c});
    return v;  // order-compatible multiplication keeps the sort
}

template <typename K>
MPoly<K> mp_monic(MPoly<K> f) {
    if (f.empty() || f.front().coeff.is_one()) return f;
    K inv = f.front().coeff.inv();
    for (auto& t : f) t.coeff *= inv;
    return f;
}

// Full reduction under the level order; reducers monic and sorted. Records
// ring-polynomial quotients when asked. Head reductions count into budget.
template <typename K>
MPoly<K> mp_reduce(const MPoly<K>& f, const std::vector<MPoly<K>>& basis,
                   const SchreyerOrder& ord, unsigned nvars, std::size_t& reductions,
                   const ResolutionBudget& budget,
                   std::vector<Poly<K>>* quotients = nullptr) {
    using Key = std::pair<unsigned, Monomial>;
    struct KeyGreater {
        const SchreyerOrder* o;
        bool operator()(const Key& a, const Key& b) const {
            return o->cmp(a.first, a.second, b.first, b.second) > 0;
        }
    };
    std::map<Key, K, KeyGreater> work{KeyGreater{&ord}};
    for (auto& t : f) {
        auto it = work.find({t.comp, t.mono});
        if (it == work.end())
            work.emplace(Key{t.comp, t.mono}, t.coeff);
        else
            it->second += t.coeff;
    }
    MPoly<K> rem;
    if (quotients) quotients->assign(basis.size(), Poly<K>::zero(nvars));
    while (!work.empty()) {
        auto head_it = work.begin();
        Key head = head_it->first;
        K c = head_it->second;
        work.erase(head_it);
        if (c.is_zero()) continue;
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const MTerm<K>& lt = basis[k].front();
            if (lt.comp != head.first || !lt.mono.divides(head.second)) continue;
            if (++reductions > budget.max_reductions)
                throw BudgetError("resolution budget exceeded (reduction steps)");
            Monomial q = lt.mono.divide_into(head.second);
            for (auto& t : basis[k]) {
                Key key{t.comp, t.mono * q};
                if (key.first == head.first && key.second == head.second) continue;
                K sub = t.coeff * c;
                auto w = work.find(key);
                if (w == work.end()) {
                    work.emplace(std::move(key), -sub);
                } else {
                    w->second -= sub;
                    if (w->second.is_zero()) work.erase(w);
                }
            }
            if (quotients)
                (*quotients)[k] = (*quotients)[k] + Poly<K>::from_terms(nvars, {{q, c}});
            reduced = true;
            break;
        }
        if (!reduced) rem.push_back({head.first, head.second, c});
    }
    return rem;
}

/// Syzygies of a Groebner basis from the S-pair reduction relations. By
/// Schreyer's theorem they are a Groebner basis of the syzygy module under
/// the induced order, so no further completion is needed; elements with a
/// redundant lead are dropped (still a basis of the lead module).
template <typename K>
std::pair<std::vector<MPoly<K>>, SchreyerOrder> schreyer_syzygies(
    const std::vector<MPoly<K>>& gb, const SchreyerOrder& ord, unsigned nvars,
    std::size_t& reductions, const ResolutionBudget& budget) {
    SchreyerOrder next;
    next.lam.reserve(gb.size());
    next.chain.reserve(gb.size());
    for (std::size_t i = 0; i < gb.size(); ++i) {
        const MTerm<K>& lt = gb[i].front();
        next.lam.push_back(lt.mono * ord.lam[lt.comp]);
        auto ch = ord.chain[lt.comp];
        ch.push_back(static_cast<unsigned>(i));
        next.chain.push_back(std::move(ch));
    }

    std::vector<MPoly<K>> syz;
    for (std::size_t i = 0; i < gb.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const MTerm<K>& li = gb[i].front();
            const MTerm<K>& lj = gb[j].front();
            if (li.comp != lj.comp) continue;
            Monomial l = li.mono.lcm(lj.mono);
            Monomial ui = li.mono.divide_into(l);
            Monomial uj = lj.mono.divide_into(l);
            K one = one_like(li.coeff);
            MPoly<K> s = mp_normalize<K>(
                [&] {
                    MPoly<K> v = mp_mono_mul(gb[i], ui, one);
                    for (auto& t : mp_mono_mul(gb[j], uj, one))
                        v.push_back({t.comp, t.mono, -t.coeff});
                    return v;
                }(),
                ord);
            std::vector<Poly<K>> q;
            MPoly<K> r = mp_reduce(s, gb, ord, nvars, reductions, budget, &q);
            if (!r.empty())
                throw InternalError("S-pair of a Groebner basis did not reduce to zero");
            MPoly<K> rel;
            rel.push_back({static_cast<unsigned>(i), ui, one});
            rel.push_back({static_cast<unsigned>(j), uj, -one});
            for (std::size_t k = 0; k < gb.size(); ++k)
                for (auto& [m, c] : q[k].terms())
                    rel.push_back({static_cast<unsigned>(k), m, -c});
            rel = mp_normalize(std::move(rel), next);
            if (!rel.empty()) {
                if (syz.size() >= budget.max_basis)
                    throw BudgetError("resolution budget exceeded (syzygy count)");
                syz.push_back(mp_monic(std::move(rel)));
            }
        }
    }

    // drop syzygies whose lead is divisible by another lead in the same
    // component; what remains is still a Groebner basis of the module
    std::vector<std::size_t> order_idx(syz.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return next.greater(syz[b].front(), syz[a].front());  // ascending leads
    });
    std::vector<bool> keep(syz.size(), true);
    for (std::size_t a = 0; a < order_idx.size(); ++a) {
        std::size_t i = order_idx[a];
        if (!keep[i]) continue;
        for (std::size_t b = a + 1; b < order_idx.size(); ++b) {
            std::size_t j = order_idx[b];
            if (!keep[j]) continue;
            if (syz[i].front().comp == syz[j].front().comp &&
                syz[i].front().mono.divides(syz[j].front().mono))
                keep[j] = false;
        }
    }
    std::vector<MPoly<K>> kept;
    for (std::size_t i = 0; i < syz.size(); ++i)
        if (keep[i]) kept.push_back(std::move(syz[i]));
    return {std::move(kept), std::move(next)};
}

template <typename K>
std::vector<std::vector<Poly<K>>> mpolys_to_matrix(const std::vector<MPoly<K>>& cols,
                                                   std::size_t rows, unsigned nvars) {
    std::vector<std::vector<Poly<K>>> m(rows,
                                        std::vector<Poly<K>>(cols.size(), Poly<K>::zero(nvars)));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (auto& t : cols[j]) {
            m[t.comp][j] = m[t.comp][j] + Poly<K>::from_terms(nvars, {{t.mono, t.coeff}});
        }
    }
    return m;
}

template <typename K>
bool is_unit_constant(const Poly<K>& p) {
    return !p.is_zero() && p.degree() == 0;
}

template <typename K>
void check_complex(const std::vector<std::vector<std::vector<Poly<K>>>>& diff,
                   unsigned nvars) {
    for (std::size_t l = 0; l + 1 < diff.size(); ++l) {
        const auto& a = diff[l];      // F_{l+1} -> F_l
        const auto& b = diff[l + 1];  // F_{l+2} -> F_{l+1}
        if (a.empty() || b.empty()) continue;
        std::size_t rows = a.size(), mid = b.size(), cols = b[0].size();
        if (!a[0].empty() && a[0].size() != mid)
            throw InternalError("resolution matrices have inconsistent shapes");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Poly<K> acc = Poly<K>::zero(nvars);
                for (std::size_t k = 0; k < mid; ++k) acc = acc + a[i][k] * b[k][j];
                if (!acc.is_zero())
                    throw InternalError("resolution differentials do not compose to zero");
            }
    }
}

/// Strip one unit entry d_l[i][j], adjusting the neighbors; implements the
/// standard cancellation of a split exact summand of the complex.
template <typename K>
void prune_entry(std::vector<std::vector<std::vector<Poly<K>>>>& diff, std::size_t l,
                 std::size_t i, std::size_t j) {
    auto& d = diff[l];
    std::size_t rows = d.size(), cols = d[0].size();
    K cinv = d[i][j].sample_coeff().inv();

    // clear row i outside column j (column ops on F_{l+1}); mirror as row ops
    // on the next differential
    for (std::size_t k = 0; k < cols; ++k) {
        if (k == j || d[i][k].is_zero()) continue;
        Poly<K> q = d[i][k].scaled(cinv);
        for (std::size_t r = 0; r < rows; ++r) d[r][k] = d[r][k] - q * d[r][j];
        if (l + 1 < diff.size() && !diff[l + 1].empty() && !diff[l + 1][0].empty()) {
            auto& nxt = diff[l + 1];
            for (std::size_t t = 0; t < nxt[0].size(); ++t)
                nxt[j][t] = nxt[j][t] + q * nxt[k][t];
        }
    }
    // clear column j outside row i (row ops on F_l); mirror as column ops on
    // the previous differential
    for (std::size_t r = 0; r < rows; ++r) {
        if (r == i || d[r][j].is_zero()) continue;
        Poly<K> p = d[r][j].scaled(cinv);
        for (std::size_t k = 0; k < cols; ++k) d[r][k] = d[r][k] - p * d[i][k];
        if (l > 0 && !diff[l - 1].empty()) {
            auto& prv = diff[l - 1];
            for (std::size_t s = 0; s < prv.size(); ++s)
                prv[s][i] = prv[s][i] + p * prv[s][r];
        }
    }
    // the complex identity forces the freed row/column of the neighbors to
    // vanish now; verify instead of assuming
    if (l + 1 < diff.size() && !diff[l + 1].empty() && !diff[l + 1][0].empty())
        for (std::size_t t = 0; t < diff[l + 1][0].size(); ++t)
            if (!diff[l + 1][j][t].is_zero())
                throw InternalError("pruning left a nonzero row in the next differential");
    if (l > 0 && !diff[l - 1].empty())
        for (std::size_t s = 0; s < diff[l - 1].size(); ++s)
            if (!diff[l - 1][s][i].is_zero())
                throw InternalError("pruning left a nonzero column in the previous differential");

    auto drop_col = [&](std::vector<std::vector<Poly<K>>>& m, std::size_t col) {
        for (auto& row : m) row.erase(row.begin() + static_cast<long>(col));
    };
    auto drop_row = [&](std::vector<std::vector<Poly<K>>>& m, std::size_t row) {
        m.erase(m.begin() + static_cast<long>(row));
    };
    drop_row(d, i);
    drop_col(d, j);
    if (l + 1 < diff.size() && !diff[l + 1].empty()) drop_row(diff[l + 1], j);
    if (l > 0 && !diff[l - 1].empty()) drop_col(diff[l - 1], i);
}

}  // namespace detail

/// Minimal free resolution of R/I by iterated Schreyer syzygies of a
/// Groebner basis, then pruning of unit entries. Desk-scale only; the budget
/// is a hard error, never a truncation.
template <typename K>
FreeResolution<K> projective_dimension(const Ideal<K>& ideal,
                                       const ResolutionBudget& budget = {}) {
    using namespace detail;
    unsigned nvars = ideal.nvars();
    for (auto& g : ideal.generators())
        if (!g.is_zero() && !g.is_homogeneous())
            throw NonHomogeneousError("projective_dimension requires a homogeneous ideal");

    FreeResolution<K> res;
    const auto& gb0 = ideal.groebner(canonical_order());
    if (gb0.is_unit()) throw UnitIdealError("projective_dimension of the unit ideal");
    if (gb0.is_zero_ideal()) {
        res.pd = 0;
        res.betti = {1};
        return res;
    }

    std::size_t reductions = 0;
    SchreyerOrder ord = SchreyerOrder::ring_level(nvars, 1);
    std::vector<MPoly<K>> level;
    for (auto& e : gb0.elems) {
        MPoly<K> v;
        for (auto& [m, c] : e.terms()) v.push_back({0u, m, c});
        level.push_back(mp_normalize(std::move(v), ord));
    }

    std::vector<std::size_t> ranks = {1};
    std::vector<std::vector<std::vector<Poly<K>>>> diff;
    std::size_t max_levels = nvars + ideal.generators().size() + budget.extra_levels;
    for (std::size_t l = 0;; ++l) {
        if (l > max_levels) throw BudgetError("resolution budget exceeded (levels)");
        diff.push_back(mpolys_to_matrix(level, ranks.back(), nvars));
        ranks.push_back(level.size());
        auto [syz, next] = schreyer_syzygies(level, ord, nvars, reductions, budget);
        if (syz.empty()) break;
        level = std::move(syz);
        ord = std::move(next);
    }

    check_complex(diff, nvars);

    // prune unit entries until none remain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t l = 0; l < diff.size() && !changed; ++l) {
            auto& d = diff[l];
            if (d.empty() || d[0].empty()) continue;
            for (std::size_t i = 0; i < d.size() && !changed; ++i)
                for (std::size_t j = 0; j < d[i].size() && !changed; ++j)
                    if (is_unit_constant(d[i][j])) {
                        prune_entry(diff, l, i, j);
                        changed = true;
                    }
        }
    }
    check_complex(diff, nvars);

    // read off ranks; drop vanished tail modules
    std::vector<std::size_t> betti = {diff.empty() || diff[0].empty() ? 1
                                                                      : diff[0].size()};
    for (auto& d : diff) betti.push_back(d.empty() ? 0 : d[0].size());
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    res.betti = betti;
    res.pd = static_cast<int>(betti.size()) - 1;
    res.diff = std::move(diff);
    while (res.diff.size() > static_cast<std::size_t>(res.pd)) res.diff.pop_back();
    return res;
}

}  // namespace subquad

#endif
