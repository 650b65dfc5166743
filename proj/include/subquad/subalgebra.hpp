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

#ifndef SUBQUAD_SUBALGEBRA_HPP
#define SUBQUAD_SUBALGEBRA_HPP

#include <string>
#include <vector>

#include "subquad/bounds.hpp"
#include "subquad/resolution.hpp"
#include "subquad/standard_form.hpp"

namespace subquad {

enum class CaseStep { Case1, Case2a, Case2b, BaseH0, AlreadyRegular };

inline const char* case_step_name(CaseStep s) {
    switch (s) {
        case CaseStep::Case1: return "Case1";
        case CaseStep::Case2a: return "Case2a";
        case CaseStep::Case2b: return "Case2b";
        case CaseStep::BaseH0: return "BaseH0";
        case CaseStep::AlreadyRegular: return "AlreadyRegular";
    }
    return "?";
}

/// The (m, n, h) of an instance as the Main Theorem defines them: m is the
/// dimension of the span of the linear forms, n the remaining slot count, and
/// h the height of the quadrics' image ideal modulo that span.
struct InstanceProfile {
    int m = 0;
    int n = 0;
    int h = 0;
};

template <typename K>
InstanceProfile instance_profile(const std::vector<Poly<K>>& forms, unsigned nvars,
                                 const K& one) {
    const K zero = zero_like(one);
    std::vector<Poly<K>> lin, quad;
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        if (f.degree() == 1)
            lin.push_back(f);
        else
            quad.push_back(f);
    }
    InstanceProfile p;
    p.m = static_cast<int>(rank_of_linear_forms(lin, nvars, zero));
    p.n = static_cast<int>(forms.size()) - p.m;
    if (!quad.empty()) {
        auto q = quotient_by_linear_span(quad, lin, nvars);
        std::vector<Poly<K>> imgs;
        for (auto& g : q.images)
            if (!g.is_zero()) imgs.push_back(g);
        Ideal<K> img(imgs, q.ring.new_nvars);
        int dim = dimension(img);
        if (dim < 0) throw InternalError("form ideal maps onto the unit ideal");
        p.h = static_cast<int>(q.ring.new_nvars) - dim;
    }
    return p;
}

struct BoundContext {
    InstanceProfile profile;
    mpz_class B;        // B(m, n, h)
    mpz_class B_plus_h;
    mpz_class C;        // C(m+n); meaningful when h <= n-1
    mpz_class C0;       // C0(m+n); same caveat
    bool c_applicable = false;  // the C/C0 chain is defined only for h <= n-1
};

inline BoundContext make_bound_context(const InstanceProfile& p) {
    BoundContext b;
    b.profile = p;
    b.B = bound_B(p.m, p.n, p.h);
    b.B_plus_h = b.B + p.h;
    long s = p.m + p.n;
    if (s >= 1) {
        b.C = bound_C(s);
        b.C0 = bound_C0(s);
    }
    b.c_applicable = p.h <= p.n - 1 && s >= 1;
    return b;
}

/// Main Theorem output: b <= B(m,n,h) independent linear forms that are
/// variables after a change of coordinates, and c <= h quadrics in I, whose
/// subalgebra contains every input form.
template <typename K>
struct SubalgebraCertificate {
    std::vector<Poly<K>> variables;  // original coordinates
    std::vector<Poly<K>> quadrics;   // elements of the span of the input quadrics
    std::vector<CaseStep> trace;
    BoundContext bound_used;
};

namespace detail {

template <typename K>
struct RawCert {
    std::vector<Poly<K>> vars;
    std::vector<Poly<K>> quads;
    std::vector<CaseStep> trace;
};

template <typename K>
std::vector<Poly<K>> dedup_by_span(const std::vector<Poly<K>>& forms, unsigned nvars,
                                   const K& zero) {
    SpanTracker<K> span(zero);
    std::vector<Poly<K>> out;
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        if (span.add_if_independent(linear_coeff_row(f, nvars, zero))) out.push_back(f);
    }
    return out;
}

// Height of the ideal of the nonzero polys after killing the first k
// coordinates, inside the given ring.
template <typename K>
int height_mod_first_coords(const std::vector<Poly<K>>& polys, unsigned nvars,
                            unsigned k) {
    std::vector<bool> kill(nvars, false);
    for (unsigned i = 0; i < k; ++i) kill[i] = true;
    KilledRing kr = killed_ring(nvars, kill);
    std::vector<Poly<K>> imgs;
    for (auto& p : polys) {
        Poly<K> img = kill_variables(p, kill, kr);
        if (!img.is_zero()) imgs.push_back(img);
    }
    Ideal<K> ideal(imgs, kr.new_nvars);
    int dim = dimension(ideal);
    if (dim < 0) throw InternalError("killing variables produced the unit ideal");
    return static_cast<int>(kr.new_nvars) - dim;
}

template <typename K>
RawCert<K> small_subalgebra_go(const std::vector<Poly<K>>& forms, unsigned nvars,
                               const FieldConfig& field, Rng& rng, int retry_budget,
                               int max_h) {
    const K one = scalar_from_int<K>(1, field);

    std::vector<Poly<K>> nonzero, lin, quad;
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        nonzero.push_back(f);
        if (f.degree() == 1)
            lin.push_back(f);
        else
            quad.push_back(f);
    }
    if (nonzero.empty()) return {{}, {}, {CaseStep::BaseH0}};

    // cheap shortcut: the nonzero forms may already be a regular sequence
    if (is_regular_sequence(nonzero, nvars).verdict)
        return {lin, quad, {CaseStep::AlreadyRegular}};

    InstanceProfile prof = instance_profile(forms, nvars, one);
    if (prof.h > max_h)
        throw InternalError("recursion failed to decrease h (case trace is buggy)");

    if (prof.h == 0) {
        // every quadric lies in the ideal of the linear forms with linear
        // multipliers; the certificate is the linear span plus the multipliers
        GroebnerBasis<K> gb_lin = buchberger(lin, MonomialOrder::grevlex());
        RawCert<K> cert;
        cert.trace = {CaseStep::BaseH0};
        for (auto& e : gb_lin.elems) cert.vars.push_back(e);
        for (auto& q : quad) {
            std::vector<Poly<K>> quot;
            Poly<K> nf = normal_form_with_quotients(q, gb_lin, quot);
            if (!nf.is_zero())
                throw InternalError("h = 0 but a quadric is not in the linear ideal");
            for (auto& mult : quot)
                if (!mult.is_zero()) cert.vars.push_back(mult);
        }
        return cert;
    }

    // h >= 1: normalize and recurse per the tail heights
    StandardFormState<K> st =
        achieve_standard_form(forms, nvars, field, rng, retry_budget, 0);
    if (st.h != prof.h)
        throw InternalError("standard form height disagrees with the instance profile");

    unsigned tail_lo = st.tail_lo();
    unsigned Nz = nvars - tail_lo;
    std::vector<int> to_tail(nvars, -1);
    std::vector<unsigned> tail_embed(Nz);
    for (unsigned j = 0; j < Nz; ++j) {
        to_tail[tail_lo + j] = static_cast<int>(j);
        tail_embed[j] = tail_lo + j;
    }
    std::vector<Poly<K>> g_z;
    for (auto& g : st.tail_polys) g_z.push_back(g.compress(to_tail, Nz));

    auto lift = [&](const Poly<K>& p) {
        return st.accumulated.unapply(p.embed(tail_embed, nvars));
    };
    auto coord_back = [&](unsigned j) {
        return st.accumulated.unapply(Poly<K>::variable(nvars, j, one));
    };

    std::vector<Poly<K>> inner_input = g_z;
    for (int j = 0; j < st.s; ++j)
        inner_input.push_back(Poly<K>::variable(Nz, j, one));

    int h_prime = height_mod_first_coords(g_z, Nz, st.s);
    if (h_prime > st.h) throw InternalError("tail height exceeded h");

    RawCert<K> cert;
    if (h_prime <= st.h - 1) {
        // Case 1: recurse on the tail polynomials and secondary variables
        RawCert<K> inner = small_subalgebra_go(inner_input, Nz, field, rng,
                                               retry_budget, st.h - 1);
        cert.trace.push_back(CaseStep::Case1);
        for (auto s : inner.trace) cert.trace.push_back(s);
        for (unsigned j = 0; j < st.primary_lo() + static_cast<unsigned>(st.r); ++j)
            cert.vars.push_back(coord_back(j));  // leading, front, primary
        for (auto& v : inner.vars) cert.vars.push_back(lift(v));
        for (auto& q : inner.quads) cert.quads.push_back(lift(q));
        return cert;
    }

    // Case 2: h' = h. The first h tails are already a maximal regular
    // sequence modulo the secondaries; pin them through the inner standard form.
    {
        std::vector<Poly<K>> head(g_z.begin(), g_z.begin() + st.h);
        if (height_mod_first_coords(head, Nz, st.s) != st.h)
            throw InternalError(
                "Case 2 entry: g_1..g_h are not a regular sequence modulo the "
                "secondary variables");
    }
    StandardFormState<K> st2 =
        achieve_standard_form(inner_input, Nz, field, rng, retry_budget, st.h);

    unsigned tail2_lo = st2.tail_lo();
    unsigned Nz2 = Nz - tail2_lo;
    std::vector<int> to_tail2(Nz, -1);
    std::vector<unsigned> tail2_embed(Nz2);
    for (unsigned j = 0; j < Nz2; ++j) {
        to_tail2[tail2_lo + j] = static_cast<int>(j);
        tail2_embed[j] = tail2_lo + j;
    }
    std::vector<Poly<K>> beta;
    for (auto& g : st2.tail_polys) beta.push_back(g.compress(to_tail2, Nz2));

    auto lift2 = [&](const Poly<K>& p) {
        return st2.accumulated.unapply(p.embed(tail2_embed, Nz));
    };
    auto coord2_back = [&](unsigned j) {
        return st2.accumulated.unapply(Poly<K>::variable(Nz, j, one));
    };

    int h_second = height_mod_first_coords(beta, Nz2, st2.s);
    if (h_second > st.h) throw InternalError("second tail height exceeded h");

    if (h_second <= st.h - 1) {
        // Subcase 2a
        std::vector<Poly<K>> inner2 = beta;
        for (int j = 0; j < st2.s; ++j)
            inner2.push_back(Poly<K>::variable(Nz2, j, one));
        RawCert<K> inner = small_subalgebra_go(inner2, Nz2, field, rng, retry_budget,
                                               st.h - 1);
        cert.trace.push_back(CaseStep::Case2a);
        for (auto s : inner.trace) cert.trace.push_back(s);
        // leading, front, primary, secondary of the outer level
        for (unsigned j = 0; j < st.secondary_hi(); ++j) cert.vars.push_back(coord_back(j));
        // front and primary of the inner level
        for (unsigned j = st2.front_lo();
             j < st2.primary_lo() + static_cast<unsigned>(st2.r); ++j)
            cert.vars.push_back(lift(coord2_back(j)));
        for (auto& v : inner.vars) cert.vars.push_back(lift(lift2(v)));
        for (auto& q : inner.quads) cert.quads.push_back(lift(lift2(q)));
        return cert;
    }

    // Subcase 2b: h'' = h forces d = h; the certificate is the variable
    // blocks together with F_1..F_h themselves.
    if (st.d != st.h)
        throw InternalError("Subcase 2b reached with d != h");
    for (int i = st.h; i < st.n; ++i)
        if (!st.tail_polys[i].is_zero())
            throw InternalError("Subcase 2b: a tail polynomial past h is nonzero");
    cert.trace.push_back(CaseStep::Case2b);
    for (unsigned j = 0; j < st.secondary_hi(); ++j) cert.vars.push_back(coord_back(j));
    for (int i = 0; i < st.h; ++i)
        cert.quads.push_back(st.accumulated.unapply(st.forms[i]));
    return cert;
}

// Rewrite each certificate quadric as an exact K-combination of the input
// quadrics, absorbing the rest into products of certificate variables. The
// recursion keeps every correction term inside span{y_s y_t}, so the system
// is always solvable; the replacement changes neither the generated
// subalgebra nor regularity modulo the variables.
template <typename K>
void project_quadrics_into_span(std::vector<Poly<K>>& quads,
                                const std::vector<Poly<K>>& input_quadrics,
                                const std::vector<Poly<K>>& variables, unsigned nvars,
                                const K& zero) {
    if (quads.empty()) return;
    std::vector<std::vector<K>> cols;
    for (auto& f : input_quadrics)
        cols.push_back(detail::quad_coeff_vector(f, nvars, zero));
    std::size_t input_count = cols.size();
    for (std::size_t s = 0; s < variables.size(); ++s)
        for (std::size_t t = s; t < variables.size(); ++t)
            cols.push_back(
                detail::quad_coeff_vector(variables[s] * variables[t], nvars, zero));

    std::size_t rows = nvars * (nvars + 1) / 2;
    Mat<K> A(rows, cols.size(), zero);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) A(i, j) = cols[j][i];

    for (auto& G : quads) {
        auto rhs = detail::quad_coeff_vector(G, nvars, zero);
        auto sol = solve_linear(A, rhs, zero);
        if (!sol)
            throw InternalError(
                "certificate quadric is not a combination of input quadrics and "
                "variable products");
        Poly<K> replacement(nvars);
        for (std::size_t j = 0; j < input_count; ++j)
            if (!(*sol)[j].is_zero())
                replacement = replacement + input_quadrics[j].scaled((*sol)[j]);
        if (replacement.is_zero())
            throw InternalError("certificate quadric collapsed to zero in the input span");
        G = replacement;
    }
}

}  // namespace detail

/// The Main Theorem pipeline: certificate of at most B(m,n,h) variables and
/// at most h quadrics in I containing all input forms. Deterministic in
/// (forms, seed).
template <typename K>
SubalgebraCertificate<K> small_subalgebra(const std::vector<Poly<K>>& forms,
                                          unsigned nvars, const FieldConfig& field,
                                          std::uint64_t seed,
                                          int retry_budget = kDefaultRetryBudget) {
    const K one = scalar_from_int<K>(1, field);
    const K zero = zero_like(one);
    for (auto& f : forms) {
        if (f.nvars() != nvars) throw MismatchError("form over wrong ring");
        if (f.is_zero()) continue;
        if (!f.is_homogeneous() || f.degree() < 1 || f.degree() > 2)
            throw NonHomogeneousError("small_subalgebra requires forms of degree 1 or 2");
    }

    Rng rng(seed);
    detail::RawCert<K> raw = detail::small_subalgebra_go(
        forms, nvars, field, rng, retry_budget, std::numeric_limits<int>::max());

    SubalgebraCertificate<K> cert;
    cert.trace = raw.trace;
    cert.variables = detail::dedup_by_span(raw.vars, nvars, zero);

    std::vector<Poly<K>> input_quadrics;
    for (auto& f : forms)
        if (!f.is_zero() && f.degree() == 2) input_quadrics.push_back(f);
    cert.quadrics = raw.quads;
    detail::project_quadrics_into_span(cert.quadrics, input_quadrics, cert.variables,
                                       nvars, zero);

    cert.bound_used = make_bound_context(instance_profile(forms, nvars, one));
    return cert;
}

/// Independent re-check of a certificate using only Groebner primitives.
struct VerifyOptions {
    bool check_bounds = true;
    bool check_pd = false;
    ResolutionBudget pd_budget;
};

template <typename K>
struct VerifyReport {
    bool ok = true;
    std::vector<std::string> reasons;

    bool regular_sequence = false;
    int sequence_height = 0;
    bool containment = false;
    std::vector<Poly<K>> expressions;  // tag expressions per input form
    bool quadrics_in_ideal = false;
    bool condition3 = false;
    bool bounds_ok = true;

    bool pd_checked = false;
    bool pd_skipped_budget = false;
    int pd_value = -1;
    bool pd_ok = true;

    void fail(const std::string& why) {
        ok = false;
        reasons.push_back(why);
    }
};

template <typename K>
VerifyReport<K> verify_certificate(const std::vector<Poly<K>>& forms, unsigned nvars,
                                   const FieldConfig& field,
                                   const SubalgebraCertificate<K>& cert,
                                   const VerifyOptions& opts = {}) {
    const K one = scalar_from_int<K>(1, field);
    const K zero = zero_like(one);
    VerifyReport<K> rep;

    // shape
    for (auto& y : cert.variables)
        if (y.is_zero() || !y.is_homogeneous_of(1))
            rep.fail("certificate variable is not a nonzero linear form");
    for (auto& G : cert.quadrics)
        if (G.is_zero() || !G.is_homogeneous_of(2))
            rep.fail("certificate quadric is not a nonzero quadratic form");
    if (rank_of_linear_forms(cert.variables, nvars, zero) != cert.variables.size())
        rep.fail("certificate variables are linearly dependent");

    std::size_t b = cert.variables.size(), c = cert.quadrics.size();

    // (1) regular sequence in R
    {
        std::vector<Poly<K>> seq = cert.variables;
        for (auto& G : cert.quadrics) seq.push_back(G);
        auto rs = is_regular_sequence(seq, nvars);
        rep.regular_sequence = rs.verdict;
        rep.sequence_height = rs.ambient_height;
        if (!rs.verdict) rep.fail("variables and quadrics are not a regular sequence");
    }

    // (2) containment, with expressions that substitute back exactly
    {
        std::vector<Poly<K>> gens = cert.variables;
        for (auto& G : cert.quadrics) gens.push_back(G);
        rep.containment = true;
        if (gens.empty()) {
            for (auto& f : forms) {
                rep.expressions.push_back(Poly<K>::zero(0));
                if (!f.is_zero()) {
                    rep.containment = false;
                    rep.fail("empty certificate cannot contain a nonzero form");
                }
            }
        } else {
            SubalgebraMembership<K> tester(gens, nvars, one);
            for (auto& f : forms) {
                auto res = tester.test(f);
                if (!res.member) {
                    rep.containment = false;
                    rep.fail("an input form is not in the certificate subalgebra");
                    rep.expressions.push_back(Poly<K>::zero(tester.tag_count()));
                    continue;
                }
                if (tester.expand(*res.expression) != f) {
                    rep.containment = false;
                    rep.fail("containment expression does not substitute back to the form");
                }
                rep.expressions.push_back(*res.expression);
            }
        }
    }

    // quadrics lie in I
    {
        Ideal<K> I(forms, nvars);
        rep.quadrics_in_ideal = true;
        for (auto& G : cert.quadrics)
            if (!I.contains(G)) {
                rep.quadrics_in_ideal = false;
                rep.fail("certificate quadric is not in the input ideal");
            }
    }

    // (3) quadrics regular modulo the generators of I that involve only the
    // certificate variables. Checked through the regular-sequence lemma
    // hypothesis (images modulo the variable span form a regular sequence)
    // plus the height-additivity consequence on the generators themselves.
    {
        rep.condition3 = true;
        if (c > 0) {
            auto q = quotient_by_linear_span(cert.quadrics, cert.variables, nvars);
            bool any_zero = false;
            for (auto& img : q.images)
                if (img.is_zero()) any_zero = true;
            if (any_zero) {
                rep.condition3 = false;
            } else {
                auto rs = is_regular_sequence(q.images, q.ring.new_nvars);
                if (!rs.verdict) rep.condition3 = false;
            }

            // generators of I expressible in the variables alone
            std::vector<Poly<K>> in_vars_gens;
            {
                SubalgebraMembership<K> vars_only(cert.variables, nvars, one);
                for (auto& f : forms) {
                    if (f.is_zero()) continue;
                    if (vars_only.test(f).member) in_vars_gens.push_back(f);
                }
            }
            std::vector<Poly<K>> joined = in_vars_gens;
            for (auto& G : cert.quadrics) joined.push_back(G);
            int ht_j0 = in_vars_gens.empty()
                            ? 0
                            : height(Ideal<K>(in_vars_gens, nvars));
            int ht_joined = height(Ideal<K>(joined, nvars));
            if (ht_joined != ht_j0 + static_cast<int>(c)) rep.condition3 = false;
            if (!rep.condition3)
                rep.fail("quadrics are not regular modulo the variable-only generators");
        }
    }

    // bounds
    if (opts.check_bounds) {
        const BoundContext& bc = cert.bound_used;
        auto expect = make_bound_context(instance_profile(forms, nvars, one));
        if (expect.profile.m != bc.profile.m || expect.profile.n != bc.profile.n ||
            expect.profile.h != bc.profile.h) {
            rep.bounds_ok = false;
            rep.fail("certificate bound context disagrees with the instance profile");
        }
        if (mpz_class(static_cast<long>(b)) > expect.B) {
            rep.bounds_ok = false;
            rep.fail("more variables than B(m,n,h)");
        }
        if (static_cast<int>(c) > expect.profile.h) {
            rep.bounds_ok = false;
            rep.fail("more quadrics than h");
        }
        if (mpz_class(static_cast<long>(b + c)) > expect.B_plus_h) {
            rep.bounds_ok = false;
            rep.fail("certificate size exceeds B(m,n,h)+h");
        }
        if (expect.c_applicable) {
            if (expect.B_plus_h > expect.C) {
                rep.bounds_ok = false;
                rep.fail("B(m,n,h)+h exceeds C(m+n)");
            }
            if (mpz_class(static_cast<long>(b + c)) > expect.C) {
                rep.bounds_ok = false;
                rep.fail("certificate size exceeds C(m+n)");
            }
        }
        if (!rep.bounds_ok) rep.ok = false;
    }

    // projective dimension (optional; budget failures are reported, not fatal)
    if (opts.check_pd) {
        rep.pd_checked = true;
        try {
            auto prof = cert.bound_used.profile;
            FreeResolution<K> res = projective_dimension(Ideal<K>(forms, nvars),
                                                         opts.pd_budget);
            rep.pd_value = res.pd;
            mpz_class bound = bound_B(0, prof.n, prof.h) + prof.m + prof.h;
            if (mpz_class(res.pd) > bound) {
                rep.pd_ok = false;
                rep.fail("projective dimension exceeds B(0,n,h)+m+h");
            }
            if (cert.bound_used.c_applicable && prof.m + prof.n >= 1 &&
                mpz_class(res.pd) > bound_C0(prof.m + prof.n)) {
                rep.pd_ok = false;
                rep.fail("projective dimension exceeds C0(m+n)");
            }
        } catch (const BudgetError&) {
            rep.pd_skipped_budget = true;
        }
    }

    return rep;
}

/// Lemma-based projective dimension bound: pd(R/I) <= m + b' + c' where
/// (b', c') certify the quadric images modulo the linear forms, plus the
/// closed-form bounds B(0,n,h)+m+h and C0(m+n).
template <typename K>
struct PdBoundCheck {
    bool computed = false;       // false when the resolution budget ran out
    int pd = -1;
    mpz_class bound_regseq;      // m + b' + c'
    mpz_class bound_B;           // B(0,n,h) + m + h
    mpz_class bound_C0;          // C0(m+n), when applicable
    bool c0_applicable = false;
    bool ok = false;
};

template <typename K>
PdBoundCheck<K> pd_bound_check(const std::vector<Poly<K>>& forms, unsigned nvars,
                               const FieldConfig& field, std::uint64_t seed,
                               int retry_budget = kDefaultRetryBudget,
                               const ResolutionBudget& budget = {}) {
    const K one = scalar_from_int<K>(1, field);
    PdBoundCheck<K> out;
    InstanceProfile prof = instance_profile(forms, nvars, one);
    out.bound_B = bound_B(0, prof.n, prof.h) + prof.m + prof.h;
    out.c0_applicable = prof.h <= prof.n - 1 && prof.m + prof.n >= 1;
    if (out.c0_applicable) out.bound_C0 = bound_C0(prof.m + prof.n);

    // quadric-only reduction: kill the linear span, certify the images there
    std::vector<Poly<K>> lin, quad;
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        if (f.degree() == 1)
            lin.push_back(f);
        else
            quad.push_back(f);
    }
    auto q = quotient_by_linear_span(quad, lin, nvars);
    std::vector<Poly<K>> imgs;
    for (auto& g : q.images)
        if (!g.is_zero()) imgs.push_back(g);
    SubalgebraCertificate<K> inner =
        small_subalgebra(imgs, q.ring.new_nvars, field, seed, retry_budget);
    out.bound_regseq = mpz_class(prof.m) + static_cast<long>(inner.variables.size()) +
                       static_cast<long>(inner.quadrics.size());

    try {
        FreeResolution<K> res = projective_dimension(Ideal<K>(forms, nvars), budget);
        out.computed = true;
        out.pd = res.pd;
        out.ok = mpz_class(out.pd) <= out.bound_regseq &&
                 mpz_class(out.pd) <= out.bound_B &&
                 (!out.c0_applicable || mpz_class(out.pd) <= out.bound_C0);
    } catch (const BudgetError&) {
        out.computed = false;
        out.ok = true;  // explicitly skipped, not failed
    }
    return out;
}

}  // namespace subquad

#endif
