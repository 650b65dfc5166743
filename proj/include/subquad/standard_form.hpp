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

#ifndef SUBQUAD_STANDARD_FORM_HPP
#define SUBQUAD_STANDARD_FORM_HPP

#include <string>
#include <vector>

#include "subquad/dimension.hpp"
#include "subquad/membership.hpp"
#include "subquad/random.hpp"

namespace subquad {

inline constexpr int kDefaultRetryBudget = 25;

/// The normalized shape of a sequence of degree <= 2 forms. Variables are
/// partitioned as
///   leading [0, m) | front [m, m+h) | primary [m+h, m+h+r)
///   | secondary [m+h+r, m+h+r+s) | tail [m+h+r, N)
/// (tails include the secondaries). forms holds the n quadric slots followed
/// by the m leading variables.
template <typename K>
struct StandardFormState {
    FieldConfig field;
    unsigned nvars = 0;
    int m = 0, h = 0, n = 0, d = 0, r = 0, s = 0;
    std::vector<Poly<K>> forms;
    std::vector<Poly<K>> front_polys;  // pi images, supported on the front block
    std::vector<Poly<K>> tail_polys;   // tau images, supported on the tail block
    Ideal<K> front_relations_ideal;    // P, an ideal of K[T_1..T_n]
    LinearChange<K> accumulated;       // input coords -> state coords

    unsigned front_lo() const { return m; }
    unsigned primary_lo() const { return m + h; }
    unsigned tail_lo() const { return m + h + r; }
    unsigned secondary_hi() const { return m + h + r + s; }
};

namespace detail {

// Coefficient vector of a form over the degree-2 monomial basis x_i x_j, i<=j.
template <typename K>
std::vector<K> quad_coeff_vector(const Poly<K>& f, unsigned n, const K& zero) {
    std::vector<K> v(n * (n + 1) / 2, zero);
    for (auto& [m, c] : f.terms()) {
        if (m.degree() != 2) throw MismatchError("expected a quadratic form");
        std::vector<unsigned> idx;
        for (unsigned k = 0; k < n; ++k)
            for (unsigned e = 0; e < m[k]; ++e) idx.push_back(k);
        unsigned i = idx[0], j = idx[1];
        v[i * n - i * (i - 1) / 2 + (j - i)] = c;
    }
    return v;
}

template <typename K>
std::vector<K> form_coeff_vector(const Poly<K>& f, unsigned n, const K& zero) {
    if (f.is_zero()) return std::vector<K>(n * (n + 1) / 2, zero);
    if (f.is_homogeneous_of(1)) return linear_coeff_row(f, n, zero);
    return quad_coeff_vector(f, n, zero);
}

// coefficient (a linear form in variables >= lo) of x_k taken once, partner
// in [lo, N)
template <typename K>
Poly<K> linear_coefficient_of(const Poly<K>& f, unsigned k, unsigned lo) {
    unsigned n = f.nvars();
    std::vector<typename Poly<K>::Term> ts;
    for (auto& [m, c] : f.terms()) {
        if (m[k] != 1) continue;
        for (unsigned j = lo; j < n; ++j) {
            if (j == k || m[j] != 1) continue;
            if (m.degree() == 2) ts.emplace_back(Monomial::var(n, j), c);
        }
    }
    return Poly<K>::from_terms(n, std::move(ts));
}

}  // namespace detail

/// Conditions (1)-(6) checked from scratch; returns human-readable violations.
template <typename K>
std::vector<std::string> check_standard_form(const StandardFormState<K>& st) {
    std::vector<std::string> bad;
    unsigned N = st.nvars;
    const K one = scalar_from_int<K>(1, st.field);
    const K zero = zero_like(one);

    // (1)
    for (int i = 0; i < st.m; ++i) {
        if (st.forms[st.n + i] != Poly<K>::variable(N, i, one))
            bad.push_back("(1) trailing form " + std::to_string(i) + " is not x_" +
                          std::to_string(i));
    }
    for (int i = 0; i < st.n; ++i)
        if (!st.forms[i].is_zero() && !st.forms[i].is_homogeneous_of(2))
            bad.push_back("(1) quadric slot " + std::to_string(i) + " is not quadratic or zero");

    // (2)
    for (int i = 0; i < st.n; ++i) {
        for (auto& [mono, c] : st.forms[i].terms()) {
            bool inside = true;
            for (unsigned k = 0; k < N && inside; ++k)
                if (mono[k] && k >= static_cast<unsigned>(st.m)) inside = false;
            if (inside) {
                bad.push_back("(2) quadric slot " + std::to_string(i) +
                              " has a monomial in the leading variables");
                break;
            }
        }
    }

    // (3)
    {
        std::vector<Poly<K>> seq;
        for (int i = 0; i < st.h; ++i) seq.push_back(st.forms[i]);
        for (int i = 0; i < st.m; ++i) seq.push_back(Poly<K>::variable(N, i, one));
        for (unsigned j = st.primary_lo(); j < N; ++j)
            seq.push_back(Poly<K>::variable(N, j, one));
        if (!is_regular_sequence(seq, N).verdict)
            bad.push_back("(3) F_1..F_h, leading, trailing variables are not a regular sequence");
    }

    // (4) and (5)
    if (st.r > static_cast<int>(unsigned(st.m + st.h)) * st.n)
        bad.push_back("(4) r exceeds (m+h) n");
    for (int i = 0; i < st.n; ++i)
        for (unsigned k = 0; k < st.primary_lo(); ++k) {
            Poly<K> L = detail::linear_coefficient_of(st.forms[i], k, st.primary_lo());
            if (!L.is_zero()) {
                std::uint64_t allowed = 0;
                for (unsigned j = st.primary_lo(); j < st.tail_lo(); ++j)
                    allowed |= std::uint64_t(1) << j;
                if ((L.support_mask() & ~allowed) != 0) {
                    bad.push_back("(4) coefficient of x_" + std::to_string(k) + " in slot " +
                                  std::to_string(i) + " lies outside the primary block");
                }
            }
        }
    if (st.s > static_cast<int>(unsigned(st.m + st.h)) * st.n * st.n)
        bad.push_back("(5) s exceeds (m+h) n^2");
    for (int i = 0; i < st.n; ++i)
        for (unsigned t = st.primary_lo(); t < st.tail_lo(); ++t) {
            Poly<K> M = detail::linear_coefficient_of(st.forms[i], t, st.tail_lo());
            if (!M.is_zero()) {
                std::uint64_t allowed = 0;
                for (unsigned j = st.tail_lo(); j < st.secondary_hi(); ++j)
                    allowed |= std::uint64_t(1) << j;
                if ((M.support_mask() & ~allowed) != 0)
                    bad.push_back("(5) coefficient of v-variable " + std::to_string(t) +
                                  " in slot " + std::to_string(i) +
                                  " lies outside the secondary block");
            }
        }

    // (6)
    if (!(st.h <= st.d && st.d <= st.n)) bad.push_back("(6) d is outside [h, n]");
    {
        SpanTracker<K> span(zero);
        for (int i = 0; i < st.d; ++i) {
            if (!span.add_if_independent(
                    detail::form_coeff_vector(st.front_polys[i], N, zero)))
                bad.push_back("(6) f_" + std::to_string(i + 1) + " is dependent");
        }
        for (int i = st.d; i < st.n; ++i)
            if (!st.front_polys[i].is_zero())
                bad.push_back("(6) f_" + std::to_string(i + 1) + " is nonzero past d");
    }

    // tails include secondaries
    if (st.secondary_hi() > N) bad.push_back("secondary block exceeds the ring");
    return bad;
}

/// Puts forms of degree <= 2 into standard form. Deterministic given the Rng
/// state. pinned_prefix > 0 skips the random recombination of the first
/// pinned_prefix quadric slots and instead asserts they already form a
/// maximal regular sequence modulo the leading variables.
template <typename K>
StandardFormState<K> achieve_standard_form(const std::vector<Poly<K>>& input,
                                           unsigned nvars, const FieldConfig& field,
                                           Rng& rng,
                                           int retry_budget = kDefaultRetryBudget,
                                           int pinned_prefix = 0) {
    if (!field.large_enough_for_genericity())
        throw GenericityError("field is smaller than the genericity floor");
    const K one = scalar_from_int<K>(1, field);
    const K zero = zero_like(one);
    const unsigned N = nvars;
    if (N > 60) throw MismatchError("too many variables");

    for (auto& f : input) {
        if (f.nvars() != N) throw MismatchError("form over wrong ring");
        if (f.is_zero()) continue;
        if (!f.is_homogeneous() || f.degree() < 1 || f.degree() > 2)
            throw NonHomogeneousError("standard form requires forms of degree 1 or 2");
    }

    StandardFormState<K> st;
    st.field = field;
    st.nvars = N;
    st.accumulated = LinearChange<K>::identity(N, one);

    // ---- (i) linear dependence cleanup; zeros to the final quadric slots
    std::vector<Poly<K>> lin, quad;
    int zero_slots = 0;
    {
        SpanTracker<K> lin_span(zero);
        SpanTracker<K> quad_span(zero);
        for (auto& f : input) {
            if (f.is_zero()) {
                ++zero_slots;
            } else if (f.degree() == 1) {
                if (lin_span.add_if_independent(linear_coeff_row(f, N, zero)))
                    lin.push_back(f);
                else
                    ++zero_slots;
            } else {
                if (quad_span.add_if_independent(detail::quad_coeff_vector(f, N, zero)))
                    quad.push_back(f);
                else
                    ++zero_slots;
            }
        }
        if (pinned_prefix > 0 && static_cast<int>(quad.size()) < pinned_prefix)
            throw InternalError("pinned quadrics are not linearly independent");
        // pinned slots must not have moved
        if (pinned_prefix > 0) {
            int qi = 0;
            for (auto& f : input) {
                if (f.is_zero() || f.degree() != 2) continue;
                if (qi < pinned_prefix && f != quad[qi])
                    throw InternalError("pinned quadric slot was disturbed");
                if (++qi >= pinned_prefix) break;
            }
        }
    }
    st.m = static_cast<int>(lin.size());
    st.n = static_cast<int>(input.size()) - st.m;

    // ---- (ii) linear forms become the initial variables
    if (st.m > 0) {
        std::vector<std::pair<unsigned, Poly<K>>> assign;
        for (int i = 0; i < st.m; ++i) assign.emplace_back(i, lin[i]);
        LinearChange<K> t = change_mapping_forms_to_coords(assign, N, one);
        for (auto& q : quad) q = t.apply(q);
        st.accumulated = t.after(st.accumulated);
    }

    // ---- (iii) drop monomials supported in the leading variables
    std::vector<bool> leading_only(N, false);
    for (int i = 0; i < st.m; ++i) leading_only[i] = true;
    auto scrub_leading = [&](Poly<K>& q) { q = q - q.restrict_support(leading_only); };
    for (auto& q : quad) scrub_leading(q);
    // scrubbing can introduce fresh linear dependence (or zeros); clean up
    // again, dependents becoming zeros in the final slots
    {
        SpanTracker<K> qspan(zero);
        std::vector<Poly<K>> keep;
        for (std::size_t i = 0; i < quad.size(); ++i) {
            if (!quad[i].is_zero() &&
                qspan.add_if_independent(detail::quad_coeff_vector(quad[i], N, zero))) {
                keep.push_back(quad[i]);
                continue;
            }
            if (pinned_prefix > 0 && static_cast<int>(i) < pinned_prefix)
                throw InternalError("pinned quadric vanished modulo the leading variables");
            ++zero_slots;
        }
        quad = std::move(keep);
    }

    // ---- (iv) h and a maximal regular sequence up front
    std::vector<bool> kill_leading(N, false);
    for (int i = 0; i < st.m; ++i) kill_leading[i] = true;
    KilledRing kr = killed_ring(N, kill_leading);
    auto images_of = [&](const std::vector<Poly<K>>& polys) {
        std::vector<Poly<K>> imgs;
        for (auto& p : polys) {
            Poly<K> img = kill_variables(p, kill_leading, kr);
            if (!img.is_zero()) imgs.push_back(img);
        }
        return imgs;
    };
    auto height_mod_leading = [&](const std::vector<Poly<K>>& polys) {
        std::vector<Poly<K>> imgs = images_of(polys);
        Ideal<K> ideal(imgs, kr.new_nvars);
        int dim = dimension(ideal);
        if (dim < 0) throw InternalError("image of a form ideal became the unit ideal");
        return static_cast<int>(kr.new_nvars) - dim;
    };
    st.h = quad.empty() ? 0 : height_mod_leading(quad);

    if (pinned_prefix > 0) {
        if (st.h != pinned_prefix)
            throw InternalError("pinned prefix length disagrees with the computed height");
        std::vector<Poly<K>> head(quad.begin(), quad.begin() + pinned_prefix);
        if (height_mod_leading(head) != st.h)
            throw InternalError(
                "pinned quadrics are not a maximal regular sequence modulo the leading "
                "variables");
    } else if (st.h > 0) {
        int nq = static_cast<int>(quad.size());
        bool done = false;
        for (int attempt = 0; attempt < retry_budget && !done; ++attempt) {
            Mat<K> A(st.h, nq, zero);
            for (int i = 0; i < st.h; ++i)
                for (int j = 0; j < nq; ++j)
                    A(i, j) = random_scalar<K>(rng, field);
            // the replacement [A ; e_{h+1..nq}] must stay invertible
            Mat<K> head(st.h, st.h, zero);
            for (int i = 0; i < st.h; ++i)
                for (int j = 0; j < st.h; ++j) head(i, j) = A(i, j);
            if (head.rank() != static_cast<std::size_t>(st.h)) continue;
            std::vector<Poly<K>> cand;
            for (int i = 0; i < st.h; ++i) {
                Poly<K> c(N);
                for (int j = 0; j < nq; ++j) c = c + quad[j].scaled(A(i, j));
                cand.push_back(c);
            }
            if (height_mod_leading(cand) != st.h) continue;
            for (int i = 0; i < st.h; ++i) quad[i] = cand[i];
            done = true;
        }
        if (!done)
            throw GenericityError(
                "exhausted retries selecting a maximal regular sequence; a larger field "
                "may be needed");
    }

    // ---- (v) extend to a homogeneous system of parameters by linear forms
    // chosen inside span(x_m..x_{N-1}), then install them as the trailing
    // variables; the leading block is untouched, so condition (2) survives
    unsigned trailing = N - st.m - st.h;
    if (st.h > 0 && trailing > 0) {
        std::vector<Poly<K>> J;
        for (int i = 0; i < st.h; ++i) J.push_back(quad[i]);
        for (int i = 0; i < st.m; ++i) J.push_back(Poly<K>::variable(N, i, one));
        int cur = dimension(Ideal<K>(J, N));
        if (cur != static_cast<int>(trailing))
            throw InternalError("regular sequence prefix has the wrong dimension");
        std::vector<Poly<K>> chosen;
        while (cur > 0) {
            bool ok = false;
            for (int attempt = 0; attempt < retry_budget && !ok; ++attempt) {
                Poly<K> ell = random_linear_form<K>(rng, field, N, st.m, N);
                if (ell.is_zero()) continue;
                std::vector<Poly<K>> probe = J;
                probe.push_back(ell);
                if (dimension(Ideal<K>(probe, N)) == cur - 1) {
                    J.push_back(ell);
                    chosen.push_back(ell);
                    ok = true;
                }
            }
            if (!ok)
                throw GenericityError(
                    "exhausted retries extending to a homogeneous system of parameters");
            --cur;
        }
        std::vector<std::pair<unsigned, Poly<K>>> assign;
        for (int i = 0; i < st.m; ++i)
            assign.emplace_back(i, Poly<K>::variable(N, i, one));
        for (unsigned j = 0; j < trailing; ++j)
            assign.emplace_back(st.m + st.h + j, chosen[j]);
        LinearChange<K> t = change_mapping_forms_to_coords(assign, N, one);
        for (auto& q : quad) q = t.apply(q);
        st.accumulated = t.after(st.accumulated);
        for (auto& q : quad) scrub_leading(q);  // defensive; should be a no-op
    }

    // ---- (vi) arrange the front polynomials: f_1..f_d independent, rest zero
    auto front_of = [&](const Poly<K>& q) {
        std::vector<bool> keep(N, false);
        for (unsigned k = st.m; k < static_cast<unsigned>(st.m + st.h); ++k) keep[k] = true;
        return q.restrict_support(keep);
    };
    {
        SpanTracker<K> fspan(zero);
        std::vector<Poly<K>> reordered;
        std::vector<Poly<K>> rest;
        for (int i = 0; i < st.h; ++i) {
            if (!fspan.add_if_independent(
                    detail::quad_coeff_vector(front_of(quad[i]), N, zero)))
                throw InternalError("front images of the regular sequence are dependent");
            reordered.push_back(quad[i]);
        }
        std::vector<Poly<K>> basis_front;
        for (int i = 0; i < st.h; ++i) basis_front.push_back(front_of(quad[i]));
        for (std::size_t i = st.h; i < quad.size(); ++i) {
            Poly<K> fi = front_of(quad[i]);
            if (!fi.is_zero() &&
                fspan.add_if_independent(detail::quad_coeff_vector(fi, N, zero))) {
                reordered.push_back(quad[i]);
                basis_front.push_back(fi);
            } else {
                rest.push_back(quad[i]);
            }
        }
        st.d = static_cast<int>(reordered.size());
        // subtract combinations of F_1..F_d to zero the remaining fronts
        if (!rest.empty() && st.d > 0) {
            std::size_t dim = N * (N + 1) / 2;
            Mat<K> Bmat(dim, st.d, zero);
            for (int j = 0; j < st.d; ++j) {
                auto col = detail::quad_coeff_vector(basis_front[j], N, zero);
                for (std::size_t rrow = 0; rrow < dim; ++rrow) Bmat(rrow, j) = col[rrow];
            }
            for (auto& q : rest) {
                Poly<K> fi = front_of(q);
                if (fi.is_zero()) continue;
                auto rhs = detail::quad_coeff_vector(fi, N, zero);
                auto sol = solve_linear(Bmat, rhs, zero);
                if (!sol) throw InternalError("dependent front image failed to decompose");
                for (int j = 0; j < st.d; ++j)
                    if (!(*sol)[j].is_zero()) q = q - reordered[j].scaled((*sol)[j]);
            }
        }
        quad = std::move(reordered);
        // a form may collapse entirely into the basis combination; it then
        // becomes one of the zero slots
        for (auto& q : rest)
            if (!q.is_zero()) quad.push_back(q);
    }

    // ---- (vii) primary extension variables
    auto collect_linear_coeffs = [&](unsigned k_lo, unsigned k_hi, unsigned partner_lo) {
        std::vector<Poly<K>> forms;
        for (auto& q : quad)
            for (unsigned k = k_lo; k < k_hi; ++k) {
                Poly<K> L = detail::linear_coefficient_of(q, k, partner_lo);
                if (!L.is_zero()) forms.push_back(L);
            }
        return forms;
    };
    {
        auto Ls = collect_linear_coeffs(0, st.m + st.h, st.m + st.h);
        auto [rank, t] = span_basis(Ls, st.m + st.h, N, N, one);
        st.r = static_cast<int>(rank);
        for (auto& q : quad) q = t.apply(q);
        st.accumulated = t.after(st.accumulated);
    }

    // ---- (viii) secondary extension variables; the change fixes the primary
    // block, and condition (4) is re-asserted afterwards
    {
        auto Ms = collect_linear_coeffs(st.m + st.h, st.m + st.h + st.r, st.m + st.h + st.r);
        auto [rank, t] = span_basis(Ms, st.m + st.h + st.r, N, N, one);
        st.s = static_cast<int>(rank);
        for (auto& q : quad) q = t.apply(q);
        st.accumulated = t.after(st.accumulated);
    }

    // ---- assemble and verify
    while (static_cast<int>(quad.size()) < st.n) quad.push_back(Poly<K>::zero(N));
    st.forms = quad;
    for (int i = 0; i < st.m; ++i) st.forms.push_back(Poly<K>::variable(N, i, one));
    st.front_polys.clear();
    st.tail_polys.clear();
    std::vector<bool> tail_keep(N, false);
    for (unsigned j = st.tail_lo(); j < N; ++j) tail_keep[j] = true;
    for (int i = 0; i < st.n; ++i) {
        st.front_polys.push_back(front_of(st.forms[i]));
        st.tail_polys.push_back(st.forms[i].restrict_support(tail_keep));
    }
    {
        // front relations live in the ring on the front variables alone
        std::vector<int> to_front(N, -1);
        for (int k = 0; k < st.h; ++k) to_front[st.m + k] = k;
        std::vector<Poly<K>> fs;
        for (auto& f : st.front_polys) fs.push_back(f.compress(to_front, st.h));
        st.front_relations_ideal = front_relations(fs, st.h, one);
    }

    auto violations = check_standard_form(st);
    if (!violations.empty()) {
        std::string msg = "standard form conditions violated:";
        for (auto& v : violations) msg += " [" + v + "]";
        throw InternalError(msg);
    }
    return st;
}

/// The four Key Lemma checks on a standard form; every part holds by theorem,
/// so a false entry always means an implementation bug upstream.
struct KeyLemmaReport {
    bool hsop_ok = false;
    bool decomposition_ok = false;
    bool front_relations_satisfied = false;
    bool high_tails_vanish = false;
    int P_height = 0;

    bool all_ok() const {
        return hsop_ok && decomposition_ok && front_relations_satisfied && high_tails_vanish;
    }
};

template <typename K>
KeyLemmaReport key_lemma_check(const StandardFormState<K>& st) {
    KeyLemmaReport rep;
    const K one = scalar_from_int<K>(1, st.field);
    unsigned N = st.nvars;

    // (a) f_1..f_h is an hsop of the front ring, and P has height n - h
    {
        std::vector<int> to_front(N, -1);
        for (int k = 0; k < st.h; ++k) to_front[st.m + k] = k;
        std::vector<Poly<K>> fs;
        for (int i = 0; i < st.h; ++i)
            fs.push_back(st.front_polys[i].compress(to_front, st.h));
        Ideal<K> front_ideal(fs, st.h);
        rep.hsop_ok = dimension(front_ideal) == 0;
        rep.P_height = st.n == 0 ? 0 : height(st.front_relations_ideal);
        if (rep.hsop_ok && rep.P_height != st.n - st.h) rep.hsop_ok = false;
    }

    // (b) F_i = f_i + e_i + g_i with e_i in K[x,u,v,w] and in the ideal (x, v)
    {
        rep.decomposition_ok = true;
        std::uint64_t xuvw_mask = 0;
        for (unsigned j = 0; j < st.secondary_hi(); ++j)
            xuvw_mask |= std::uint64_t(1) << j;
        for (int i = 0; i < st.n; ++i) {
            Poly<K> e = st.forms[i] - st.front_polys[i] - st.tail_polys[i];
            if ((e.support_mask() & ~xuvw_mask) != 0) rep.decomposition_ok = false;
            for (auto& [mono, c] : e.terms()) {
                bool in_xv = false;
                for (unsigned j = 0; j < static_cast<unsigned>(st.m) && !in_xv; ++j)
                    if (mono[j]) in_xv = true;
                for (unsigned j = st.primary_lo(); j < st.tail_lo() && !in_xv; ++j)
                    if (mono[j]) in_xv = true;
                if (!in_xv) rep.decomposition_ok = false;
            }
        }
    }

    // (c) the tail polynomials satisfy the front relations
    {
        rep.front_relations_satisfied = true;
        std::vector<Poly<K>> tails;
        for (auto& g : st.tail_polys) tails.push_back(g);
        for (auto& H : st.front_relations_ideal.generators()) {
            Poly<K> val = H.substitute(tails, N);
            if (!val.is_zero()) rep.front_relations_satisfied = false;
        }
        (void)one;
    }

    // (d) g_i = 0 for i > d
    {
        rep.high_tails_vanish = true;
        for (int i = st.d; i < st.n; ++i)
            if (!st.tail_polys[i].is_zero()) rep.high_tails_vanish = false;
    }
    return rep;
}

}  // namespace subquad

#endif
