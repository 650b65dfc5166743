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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>

#include "subquad/pipeline.hpp"

using namespace subquad;
using P = Poly<Zp>;
using Clock = std::chrono::steady_clock;

namespace {

const FieldConfig kF = FieldConfig::prime(32003);
const Zp kOne(1, 32003);
const Zp kZero(0, 32003);

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// mixed instance generator: dense quadrics, split and repeated products,
// squares, sparse quadrics, plus random linear forms
std::vector<P> random_instance(Rng& gen, unsigned N, unsigned nq, unsigned nl) {
    std::vector<P> F;
    P shared = random_linear_form<Zp>(gen, kF, N, 0, N);
    for (unsigned i = 0; i < nq; ++i) {
        switch (gen.below(5)) {
            case 0: F.push_back(random_quadric<Zp>(gen, kF, N)); break;
            case 1: {
                P a = random_linear_form<Zp>(gen, kF, N, 0, N);
                P b = random_linear_form<Zp>(gen, kF, N, 0, N);
                F.push_back(a * b);
                break;
            }
            case 2: {
                P a = random_linear_form<Zp>(gen, kF, N, 0, N);
                F.push_back(a * a);
                break;
            }
            case 3: F.push_back(shared * random_linear_form<Zp>(gen, kF, N, 0, N)); break;
            default: {
                std::vector<P::Term> ts;
                unsigned t = 1 + gen.below(3);
                for (unsigned k = 0; k < t; ++k) {
                    Monomial m(N);
                    m[gen.below(N)] += 1;
                    m[gen.below(N)] += 1;
                    ts.emplace_back(m, random_nonzero_scalar<Zp>(gen, kF));
                }
                F.push_back(P::from_terms(N, ts));
                break;
            }
        }
    }
    for (unsigned i = 0; i < nl; ++i)
        F.push_back(random_linear_form<Zp>(gen, kF, N, 0, N));
    return F;
}

P random_homog(Rng& rng, unsigned nvars, unsigned deg, unsigned nterms) {
    std::vector<P::Term> ts;
    for (unsigned t = 0; t < nterms; ++t) {
        Monomial m(nvars);
        for (unsigned k = 0; k < deg; ++k) m[rng.below(nvars)] += 1;
        ts.emplace_back(m, random_scalar<Zp>(rng, kF));
    }
    return P::from_terms(nvars, ts);
}

// ---- criterion 1: end-to-end Main Theorem ---------------------------------
void criterion1() {
    Rng gen(20260801);
    int pass = 0;
    double worst = 0;
    std::map<std::string, int> traces;
    std::string why;
    for (int i = 0; i < 200; ++i) {
        unsigned N = 2 + gen.below(6);          // <= 7 variables
        unsigned nq = 1 + gen.below(3);         // <= 3 quadrics
        unsigned nl = gen.below(3);             // <= 2 linear forms
        std::vector<P> F = random_instance(gen, N, nq, nl);
        auto t0 = Clock::now();
        auto cert = small_subalgebra(F, N, kF, 9000 + i);
        auto rep = verify_certificate(F, N, kF, cert);
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        std::string tr;
        for (auto s : cert.trace) {
            tr += case_step_name(s);
            tr += ' ';
        }
        traces[tr]++;

        const auto& bc = cert.bound_used;
        bool ok = rep.ok && dt < 10.0;
        mpz_class b(static_cast<long>(cert.variables.size()));
        mpz_class bc_total(static_cast<long>(cert.variables.size() + cert.quadrics.size()));
        if (b > bc.B) ok = false;
        if (bc_total > bc.B_plus_h) ok = false;
        if (bc.c_applicable && (bc.B_plus_h > bc.C || bc_total > bc.C)) ok = false;
        if (static_cast<int>(cert.quadrics.size()) > bc.profile.h) ok = false;
        if (ok) {
            ++pass;
        } else if (why.empty()) {
            why = "first failure at instance " + std::to_string(i);
            for (auto& r : rep.reasons) why += " [" + r + "]";
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "Main Theorem end-to-end: %d/200 verified certificates within bounds, "
                  "worst %.3fs per instance (limit 10s)",
                  pass, worst);
    std::string detail = buf;
    if (!why.empty()) detail += "; " + why;
    detail += "; traces:";
    for (auto& [k, v] : traces) detail += " " + std::to_string(v) + "x(" + k + ")";
    report(1, pass == 200 && worst < 10.0, detail);
}

// ---- criterion 2: projective dimension bounds ------------------------------
void criterion2() {
    Rng gen(20260802);
    int pass = 0, c0_checked = 0;
    for (int i = 0; i < 50; ++i) {
        unsigned N = 3 + gen.below(4);  // <= 6 variables
        unsigned nq = 1 + gen.below(3);
        std::vector<P> F = random_instance(gen, N, nq, 0);
        auto prof = instance_profile(F, N, kOne);
        bool ok = true;
        try {
            auto res = projective_dimension(Ideal<Zp>(F, N));
            mpz_class boundB = bound_B(0, prof.n, prof.h) + prof.m + prof.h;
            if (mpz_class(res.pd) > boundB) ok = false;
            if (prof.h <= prof.n - 1 && prof.m + prof.n >= 1) {
                ++c0_checked;
                if (mpz_class(res.pd) > bound_C0(prof.m + prof.n)) ok = false;
            }
        } catch (const BudgetError&) {
            ok = false;  // the default budget must suffice at this scale
        }
        if (ok) ++pass;
    }
    int pass34 = 0;
    for (int i = 0; i < 25; ++i) {
        unsigned N = 4 + gen.below(3);  // 4..6 variables
        std::vector<P> F;
        for (int k = 0; k < 3; ++k) F.push_back(random_quadric<Zp>(gen, kF, N));
        auto res = projective_dimension(Ideal<Zp>(F, N));
        if (res.pd <= 4) ++pass34;
    }
    report(2, pass == 50 && pass34 == 25,
           "projective dimension: " + std::to_string(pass) +
               "/50 within B(0,n,h)+m+h (C0 compared on " + std::to_string(c0_checked) +
               " instances with h <= n-1); " + std::to_string(pass34) +
               "/25 three-quadric instances with pd <= 4");
}

// ---- criterion 3: Key Lemma suite ------------------------------------------
void criterion3() {
    Rng gen(20260803);
    int pass = 0;
    for (int i = 0; i < 50; ++i) {
        unsigned N = 2 + gen.below(5);  // <= 6 variables
        unsigned nq = 1 + gen.below(3);
        unsigned nl = gen.below(2);
        std::vector<P> F = random_instance(gen, N, nq, nl);
        Rng rng(777 + i);
        auto st = achieve_standard_form(F, N, kF, rng);
        auto rep = key_lemma_check(st);
        if (rep.all_ok() && rep.P_height == st.n - st.h) ++pass;
    }
    report(3, pass == 50,
           "Key Lemma (a)-(d) with ht(P) = n-h on " + std::to_string(pass) +
               "/50 random standard forms");
}

// ---- criterion 4: bounds module ---------------------------------------------
void criterion4() {
    auto t0 = Clock::now();
    bool ok = bound_B(0, 2, 1) == 30 && bound_C(2) == 31 && bound_C0(2) == 31;
    for (long m = 0; m <= 6 && ok; ++m)
        for (long n = 0; n <= 6 && ok; ++n)
            for (long h = 0; h <= n && h <= 6 && ok; ++h) {
                Envelope env = envelope(mpz_class(m), n, h);
                mpz_class b = bound_B(m, n, h);
                if (env.lower > b || b > env.upper) ok = false;
                if (h == 0 && (env.lower != b || env.upper != b)) ok = false;
            }
    std::string table = "table:";
    auto rows = asymptotic_report(6);
    for (auto& r : rows)
        table += " C(" + std::to_string(r.s) + ")/2s^2s=" + r.ratio.get_str();
    double dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "bounds: exact values, sandwich sweep m,n,h <= 6, %.3fs (limit 1s); ",
                  dt);
    report(4, ok && dt < 1.0, buf + table);
}

// ---- criterion 5: Groebner kernel oracles -----------------------------------
std::vector<Monomial> monomials_of_degree(unsigned n, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    std::function<void(unsigned, unsigned)> go = [&](unsigned i, unsigned left) {
        if (i + 1 == n) {
            e[i] = left;
            Monomial mm(n);
            for (unsigned k = 0; k < n; ++k) mm[k] = e[k];
            out.push_back(mm);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[i] = v;
            go(i + 1, left - v);
        }
    };
    if (n) go(0, d);
    return out;
}

bool brute_force_member(const P& f, const std::vector<P>& gens, unsigned nvars) {
    if (f.is_zero()) return true;
    unsigned d = static_cast<unsigned>(f.degree());
    std::vector<P> products;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        unsigned dg = static_cast<unsigned>(g.degree());
        if (dg > d) continue;
        for (auto& m : monomials_of_degree(nvars, d - dg))
            products.push_back(g.mono_mul(m, kOne));
    }
    auto basis = monomials_of_degree(nvars, d);
    auto coeffs = [&](const P& p) {
        std::vector<Zp> v(basis.size(), kZero);
        for (auto& [mm, c] : p.terms())
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (basis[i] == mm) v[i] = c;
        return v;
    };
    Mat<Zp> A(basis.size(), products.size(), kZero);
    for (std::size_t j = 0; j < products.size(); ++j) {
        auto col = coeffs(products[j]);
        for (std::size_t i = 0; i < basis.size(); ++i) A(i, j) = col[i];
    }
    return solve_linear(A, coeffs(f), kZero).has_value();
}

void criterion5() {
    Rng rng(20260805);
    unsigned n = 3;
    int agree = 0, total = 0;
    while (total < 100) {
        std::vector<P> gens;
        unsigned k = 1 + rng.below(3);
        for (unsigned i = 0; i < k; ++i)
            gens.push_back(random_homog(rng, n, 1 + rng.below(2), 2));
        auto gb = buchberger(gens, MonomialOrder::grevlex());
        P f;
        if (rng.below(2) && !gens[0].is_zero()) {
            f = gens[0].mono_mul(Monomial::var(n, rng.below(n), 1 + rng.below(2)), kOne);
        } else {
            f = random_homog(rng, n, 1 + rng.below(4), 4);
        }
        if (f.is_zero() || !f.is_homogeneous() || f.degree() > 4) continue;
        ++total;
        if (normal_form(f, gb).is_zero() == brute_force_member(f, gens, n)) ++agree;
    }
    // fixed dimension corpus
    P x = P::variable(2, 0, kOne), y = P::variable(2, 1, kOne);
    bool corpus = dimension(Ideal<Zp>({x * x, y}, 2)) == 0 &&
                  dimension(Ideal<Zp>({x * y}, 2)) == 1 &&
                  dimension(Ideal<Zp>({}, 3)) == 3 &&
                  dimension(Ideal<Zp>({P::constant(2, kOne)}, 2)) == -1;
    report(5, agree == 100 && corpus,
           "membership agrees with brute-force linear algebra on " +
               std::to_string(agree) + "/100 ideals; dimension corpus " +
               (corpus ? "exact" : "WRONG"));
}

// ---- criterion 6: height never rises when killing variables -----------------
void criterion6() {
    Rng rng(20260806);
    int pass = 0, total = 0;
    while (total < 100) {
        unsigned N = 3 + rng.below(3);
        std::vector<P> gens;
        unsigned k = 1 + rng.below(3);
        for (unsigned i = 0; i < k; ++i)
            gens.push_back(random_homog(rng, N, 1 + rng.below(2), 2));
        bool any = false;
        for (auto& g : gens)
            if (!g.is_zero()) any = true;
        if (!any) continue;
        Ideal<Zp> I(gens, N);
        if (dimension(I) < 0) continue;
        std::vector<bool> kill(N, false);
        unsigned kills = 1 + rng.below(2);
        for (unsigned t = 0; t < kills; ++t) kill[rng.below(N)] = true;
        ++total;
        try {
            if (height_after_killing(I, kill) <= height(I)) ++pass;
        } catch (const UnitIdealError&) {
            // homogeneous images stay proper; reaching this is a failure
        }
    }
    report(6, pass == 100,
           "height after killing variables never rises: " + std::to_string(pass) +
               "/100");
}

// ---- criterion 7: determinism and round-trips -------------------------------
void criterion7() {
    const char* prob = R"(field 32003
vars a b c d e
seed 31
form a*b + c^2
form a*d - e^2 + b
form b*c + 2*d*e + 1
form a + b
)";
    ProblemFile pf = parse_problem(prob);
    PipelineOptions opts;
    bool ok = true;
    std::string why;

    CertificateDocument d1 = run_pipeline(pf, opts);
    CertificateDocument d2 = run_pipeline(pf, opts);
    std::string t1 = print_document_text(d1);
    if (t1 != print_document_text(d2)) {
        ok = false;
        why += " in-process documents differ;";
    }
    if (print_document_text(parse_document_text(t1)) != t1) {
        ok = false;
        why += " text round-trip differs;";
    }
    std::string j1 = print_document_json(d1);
    if (print_document_json(parse_document_json(j1)) != j1) {
        ok = false;
        why += " json round-trip differs;";
    }
    if (!recheck_document(parse_document_text(t1))) {
        ok = false;
        why += " in-process recheck failed;";
    }

    // fresh processes: byte-identical output and a clean recheck
    std::string path = "/tmp/subquad_acceptance_problem.subq";
    {
        std::FILE* f = std::fopen(path.c_str(), "wb");
        std::fputs(prob, f);
        std::fclose(f);
    }
    auto run = [](const std::string& cmd) {
        std::string out;
        std::FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return std::pair<int, std::string>{-1, out};
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        int status = pclose(pipe);
        return std::pair<int, std::string>{WEXITSTATUS(status), out};
    };
    std::string cli = SUBQUAD_CLI_PATH;
    auto [c1, o1] = run(cli + " --input " + path + " 2>/dev/null");
    auto [c2, o2] = run(cli + " --input " + path + " 2>/dev/null");
    if (c1 != 0 || c2 != 0 || o1 != o2) {
        ok = false;
        why += " fresh-process runs differ or failed;";
    }
    std::string doc_path = "/tmp/subquad_acceptance_doc.subq";
    {
        std::FILE* f = std::fopen(doc_path.c_str(), "wb");
        std::fwrite(o1.data(), 1, o1.size(), f);
        std::fclose(f);
    }
    auto [rc, ro] = run(cli + " --recheck " + doc_path + " 2>/dev/null");
    if (rc != 0) {
        ok = false;
        why += " fresh-process recheck failed;";
    }
    report(7, ok, "determinism and round-trips: byte-identical documents, "
                  "parse/print stable, fresh-process recheck" +
                      (why.empty() ? std::string() : ";" + why));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failures == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
