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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "subquad/pipeline.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw subquad::ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"places degree <= 2 polynomials inside a small subalgebra generated "
                 "by a regular sequence, with exact verification"};

    std::string input_path, recheck_path;
    std::string emit = "text";
    subquad::PipelineOptions opts;
    long bounds_table = 0;
    std::uint64_t seed_flag = 0;
    std::uint64_t budget_flag = 0;

    app.add_option("--input", input_path, "problem file to run");
    auto* seed_opt = app.add_option("--seed", seed_flag, "random seed (overrides the file)");
    app.add_option("--retries", opts.retries, "genericity retry budget")
        ->capture_default_str();
    app.add_option("--verify-level", opts.verify_level,
                   "1 = invariants, 2 = + bounds, 3 = + projective dimension")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    app.add_option("--emit", emit, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--bounds-table", bounds_table,
                   "print the C(s) asymptotics table up to s and exit");
    auto* budget_opt = app.add_option("--resolution-budget", budget_flag,
                                      "reduction-step ceiling for resolutions");
    app.add_option("--genericity-floor", opts.genericity_floor,
                   "minimum field size for random choices")
        ->capture_default_str();
    app.add_flag("--timings", opts.with_timing, "include wall-clock timing in the output");
    app.add_option("--recheck", recheck_path,
                   "re-verify a previously emitted certificate document and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (bounds_table > 0) {
        auto rows = subquad::asymptotic_report(bounds_table);
        std::cout << "s C(s) C0(s) 2s^2s C(s)/2s^2s\n";
        for (auto& r : rows)
            std::cout << r.s << " " << r.C.get_str() << " " << r.C0.get_str() << " "
                      << r.two_s_2s.get_str() << " " << r.ratio.get_str() << "\n";
        return 0;
    }

    if (!recheck_path.empty()) {
        std::string text = slurp(recheck_path);
        subquad::CertificateDocument doc;
        if (!text.empty() && text.front() == '{')
            doc = subquad::parse_document_json(text);
        else
            doc = subquad::parse_document_text(text);
        bool ok = subquad::recheck_document(doc);
        std::cout << (ok ? "recheck pass" : "recheck fail") << "\n";
        return ok ? 0 : 3;
    }

    if (input_path.empty()) {
        std::cerr << "error: --input (or --bounds-table/--recheck) is required\n";
        return 1;
    }

    subquad::ProblemFile problem = subquad::parse_problem(slurp(input_path));
    if (seed_opt->count() > 0) {
        opts.seed = seed_flag;
        opts.seed_override = true;
    }
    if (budget_opt->count() > 0) opts.resolution_budget.max_reductions = budget_flag;

    subquad::CertificateDocument doc = subquad::run_pipeline(problem, opts);
    if (emit == "json")
        std::cout << subquad::print_document_json(doc);
    else
        std::cout << subquad::print_document_text(doc);
    return doc.verdict ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const subquad::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const subquad::GenericityError& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return 2;
    } catch (const subquad::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
