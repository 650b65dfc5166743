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

#ifndef SUBQUAD_PIPELINE_HPP
#define SUBQUAD_PIPELINE_HPP

#include <chrono>

#include "subquad/document.hpp"
#include "subquad/problem.hpp"
#include "subquad/subalgebra.hpp"

namespace subquad {

struct PipelineOptions {
    std::uint64_t seed = 0;
    bool seed_override = false;  // command line beats the problem file
    int retries = kDefaultRetryBudget;
    int verify_level = 2;
    std::uint32_t genericity_floor = kDefaultGenericityFloor;
    ResolutionBudget resolution_budget;
    bool with_timing = false;
};

/// Split polynomials of degree <= 2 into their homogeneous parts, dropping
/// constants; a nonzero constant makes the ideal the unit ideal, which is
/// flagged instead of processed.
template <typename K>
std::pair<std::vector<Poly<K>>, bool> homogenize_split(const std::vector<Poly<K>>& polys,
                                                       unsigned nvars) {
    std::vector<Poly<K>> out;
    bool unit = false;
    for (auto& f : polys) {
        if (f.is_zero()) {
            out.push_back(f);
            continue;
        }
        std::vector<typename Poly<K>::Term> quad, lin;
        bool nonzero_const = false;
        for (auto& [m, c] : f.terms()) {
            unsigned d = m.degree();
            if (d == 2)
                quad.emplace_back(m, c);
            else if (d == 1)
                lin.emplace_back(m, c);
            else
                nonzero_const = true;
        }
        if (!quad.empty()) out.push_back(Poly<K>::from_terms(nvars, std::move(quad)));
        if (!lin.empty()) out.push_back(Poly<K>::from_terms(nvars, std::move(lin)));
        if (nonzero_const) unit = true;
    }
    return {std::move(out), unit};
}

template <typename K>
CertificateDocument run_pipeline_typed(const ProblemFile& problem,
                                       const PipelineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    FieldConfig field = problem.rational_field
                            ? FieldConfig::rationals(opts.genericity_floor)
                            : FieldConfig::prime(problem.p, opts.genericity_floor);
    unsigned nvars = static_cast<unsigned>(problem.var_names.size());

    CertificateDocument doc;
    doc.field_spec = problem.rational_field ? "Q" : std::to_string(problem.p);
    doc.var_names = problem.var_names;
    doc.seed = opts.seed_override ? opts.seed : (problem.seed_set ? problem.seed : 0);
    doc.retries = opts.retries;
    doc.verify_level = opts.verify_level;
    doc.genericity_floor = opts.genericity_floor;
    doc.resolution_budget = opts.resolution_budget.max_reductions;

    std::vector<Poly<K>> inputs;
    for (auto& raw : problem.forms)
        inputs.push_back(raw_to_poly<K>(raw, nvars, field));
    for (auto& f : inputs) doc.input_forms.push_back(poly_to_string(f, problem.var_names));

    auto [forms, unit] = homogenize_split(inputs, nvars);
    for (auto& f : forms)
        doc.homogenized_forms.push_back(poly_to_string(f, problem.var_names));
    doc.unit_ideal = unit;
    if (unit) {
        // a nonzero scalar generator: R/I = 0, trivially resolved
        doc.pd_checked = true;
        doc.pd_value = 0;
        doc.pd_ok = true;
        doc.bounds_ok = true;
        doc.verdict = true;
        if (opts.with_timing)
            doc.timing_ms = static_cast<long>(
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count());
        return doc;
    }

    SubalgebraCertificate<K> cert =
        small_subalgebra(forms, nvars, field, doc.seed, opts.retries);

    doc.m = cert.bound_used.profile.m;
    doc.n = cert.bound_used.profile.n;
    doc.h = cert.bound_used.profile.h;
    doc.bound_B = cert.bound_used.B.get_str();
    doc.bound_B_plus_h = cert.bound_used.B_plus_h.get_str();
    doc.bound_C = cert.bound_used.C.get_str();
    doc.bound_C0 = cert.bound_used.C0.get_str();
    doc.c_applicable = cert.bound_used.c_applicable;
    for (auto& y : cert.variables)
        doc.variables.push_back(poly_to_string(y, problem.var_names));
    for (auto& G : cert.quadrics)
        doc.quadrics.push_back(poly_to_string(G, problem.var_names));
    for (auto s : cert.trace) doc.trace.push_back(case_step_name(s));

    VerifyOptions vopts;
    vopts.check_bounds = opts.verify_level >= 2;
    vopts.check_pd = opts.verify_level >= 3;
    vopts.pd_budget = opts.resolution_budget;
    VerifyReport<K> rep = verify_certificate(forms, nvars, field, cert, vopts);

    doc.regular_sequence = rep.regular_sequence;
    doc.containment = rep.containment;
    doc.quadrics_in_ideal = rep.quadrics_in_ideal;
    doc.condition3 = rep.condition3;
    doc.bounds_ok = vopts.check_bounds ? rep.bounds_ok : true;
    auto names = tag_names(cert.variables.size() + cert.quadrics.size());
    for (auto& e : rep.expressions) doc.expressions.push_back(poly_to_string(e, names));
    doc.pd_checked = rep.pd_checked;
    doc.pd_skipped_budget = rep.pd_skipped_budget;
    doc.pd_value = rep.pd_value;
    doc.pd_ok = rep.pd_ok;
    doc.verdict = rep.ok;

    if (opts.with_timing)
        doc.timing_ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count());
    return doc;
}

inline CertificateDocument run_pipeline(const ProblemFile& problem,
                                        const PipelineOptions& opts) {
    if (problem.rational_field) return run_pipeline_typed<Rat>(problem, opts);
    return run_pipeline_typed<Zp>(problem, opts);
}

/// Re-verifies a document from scratch: rebuild the forms and the
/// certificate, run verify_certificate, and compare the recorded instance
/// profile. No pipeline state is consulted.
template <typename K>
bool recheck_document_typed(const CertificateDocument& doc) {
    FieldConfig field = doc.field_spec == "Q"
                            ? FieldConfig::rationals(doc.genericity_floor)
                            : FieldConfig::prime(
                                  static_cast<std::uint32_t>(std::stoul(doc.field_spec)),
                                  doc.genericity_floor);
    unsigned nvars = static_cast<unsigned>(doc.var_names.size());
    const K one = scalar_from_int<K>(1, field);

    if (doc.unit_ideal) return doc.verdict;

    std::vector<Poly<K>> forms;
    for (auto& s : doc.homogenized_forms)
        forms.push_back(raw_to_poly<K>(parse_poly_text(s, doc.var_names, 0), nvars, field));

    SubalgebraCertificate<K> cert;
    for (auto& s : doc.variables)
        cert.variables.push_back(
            raw_to_poly<K>(parse_poly_text(s, doc.var_names, 0), nvars, field));
    for (auto& s : doc.quadrics)
        cert.quadrics.push_back(
            raw_to_poly<K>(parse_poly_text(s, doc.var_names, 0), nvars, field));
    cert.bound_used = make_bound_context(instance_profile(forms, nvars, one));
    if (cert.bound_used.profile.m != doc.m || cert.bound_used.profile.n != doc.n ||
        cert.bound_used.profile.h != doc.h)
        return false;

    VerifyOptions vopts;
    vopts.check_bounds = doc.verify_level >= 2;
    vopts.check_pd = false;  // resolution rerun is opt-in via the pipeline
    auto rep = verify_certificate(forms, nvars, field, cert, vopts);
    return rep.ok;
}

inline bool recheck_document(const CertificateDocument& doc) {
    if (doc.field_spec == "Q") return recheck_document_typed<Rat>(doc);
    return recheck_document_typed<Zp>(doc);
}

}  // namespace subquad

#endif
