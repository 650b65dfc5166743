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

#include "subquad/document.hpp"

#include <json.hpp>

#include <sstream>

#include "subquad/errors.hpp"

namespace subquad {

namespace {
constexpr const char* kHeader = "subquad-certificate v1";
}

std::string print_document_text(const CertificateDocument& doc) {
    std::ostringstream out;
    out << kHeader << "\n";
    out << "field " << doc.field_spec << "\n";
    out << "vars";
    for (auto& v : doc.var_names) out << " " << v;
    out << "\n";
    out << "seed " << doc.seed << "\n";
    out << "retries " << doc.retries << "\n";
    out << "verify-level " << doc.verify_level << "\n";
    out << "genericity-floor " << doc.genericity_floor << "\n";
    out << "resolution-budget " << doc.resolution_budget << "\n";
    for (auto& f : doc.input_forms) out << "input " << f << "\n";
    for (auto& f : doc.homogenized_forms) out << "homogenized " << f << "\n";
    out << "unit-ideal " << (doc.unit_ideal ? 1 : 0) << "\n";
    out << "instance m " << doc.m << " n " << doc.n << " h " << doc.h << "\n";
    out << "bound-B " << doc.bound_B << "\n";
    out << "bound-B-plus-h " << doc.bound_B_plus_h << "\n";
    out << "bound-C " << doc.bound_C << "\n";
    out << "bound-C0 " << doc.bound_C0 << "\n";
    out << "bound-C-applicable " << (doc.c_applicable ? 1 : 0) << "\n";
    for (auto& v : doc.variables) out << "cert-variable " << v << "\n";
    for (auto& q : doc.quadrics) out << "cert-quadric " << q << "\n";
    out << "trace";
    for (auto& t : doc.trace) out << " " << t;
    out << "\n";
    out << "verify-regular-sequence " << (doc.regular_sequence ? 1 : 0) << "\n";
    out << "verify-containment " << (doc.containment ? 1 : 0) << "\n";
    for (auto& e : doc.expressions) out << "expression " << e << "\n";
    out << "verify-quadrics-in-ideal " << (doc.quadrics_in_ideal ? 1 : 0) << "\n";
    out << "verify-condition3 " << (doc.condition3 ? 1 : 0) << "\n";
    out << "verify-bounds " << (doc.bounds_ok ? 1 : 0) << "\n";
    out << "pd-checked " << (doc.pd_checked ? 1 : 0) << "\n";
    out << "pd-skipped-budget " << (doc.pd_skipped_budget ? 1 : 0) << "\n";
    out << "pd-value " << doc.pd_value << "\n";
    out << "pd-ok " << (doc.pd_ok ? 1 : 0) << "\n";
    out << "verdict " << (doc.verdict ? "pass" : "fail") << "\n";
    if (doc.timing_ms >= 0) out << "timing-ms " << doc.timing_ms << "\n";
    out << "end\n";
    return out.str();
}

CertificateDocument parse_document_text(const std::string& text) {
    CertificateDocument doc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false, saw_end = false;
    auto rest_of = [](std::istringstream& ls) {
        std::string rest;
        std::getline(ls, rest);
        if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
        return rest;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kHeader) throw ParseError(line_no, 1, "missing document header");
            saw_header = true;
            continue;
        }
        if (line == "end") {
            saw_end = true;
            break;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "field") {
            ls >> doc.field_spec;
        } else if (key == "vars") {
            std::string v;
            while (ls >> v) doc.var_names.push_back(v);
        } else if (key == "seed") {
            ls >> doc.seed;
        } else if (key == "retries") {
            ls >> doc.retries;
        } else if (key == "verify-level") {
            ls >> doc.verify_level;
        } else if (key == "genericity-floor") {
            ls >> doc.genericity_floor;
        } else if (key == "resolution-budget") {
            ls >> doc.resolution_budget;
        } else if (key == "input") {
            doc.input_forms.push_back(rest_of(ls));
        } else if (key == "homogenized") {
            doc.homogenized_forms.push_back(rest_of(ls));
        } else if (key == "unit-ideal") {
            int v = 0;
            ls >> v;
            doc.unit_ideal = v != 0;
        } else if (key == "instance") {
            std::string tag;
            ls >> tag >> doc.m >> tag >> doc.n >> tag >> doc.h;
        } else if (key == "bound-B") {
            ls >> doc.bound_B;
        } else if (key == "bound-B-plus-h") {
            ls >> doc.bound_B_plus_h;
        } else if (key == "bound-C") {
            ls >> doc.bound_C;
        } else if (key == "bound-C0") {
            ls >> doc.bound_C0;
        } else if (key == "bound-C-applicable") {
            int v = 0;
            ls >> v;
            doc.c_applicable = v != 0;
        } else if (key == "cert-variable") {
            doc.variables.push_back(rest_of(ls));
        } else if (key == "cert-quadric") {
            doc.quadrics.push_back(rest_of(ls));
        } else if (key == "trace") {
            std::string t;
            while (ls >> t) doc.trace.push_back(t);
        } else if (key == "verify-regular-sequence") {
            int v = 0;
            ls >> v;
            doc.regular_sequence = v != 0;
        } else if (key == "verify-containment") {
            int v = 0;
            ls >> v;
            doc.containment = v != 0;
        } else if (key == "expression") {
            doc.expressions.push_back(rest_of(ls));
        } else if (key == "verify-quadrics-in-ideal") {
            int v = 0;
            ls >> v;
            doc.quadrics_in_ideal = v != 0;
        } else if (key == "verify-condition3") {
            int v = 0;
            ls >> v;
            doc.condition3 = v != 0;
        } else if (key == "verify-bounds") {
            int v = 0;
            ls >> v;
            doc.bounds_ok = v != 0;
        } else if (key == "pd-checked") {
            int v = 0;
            ls >> v;
            doc.pd_checked = v != 0;
        } else if (key == "pd-skipped-budget") {
            int v = 0;
            ls >> v;
            doc.pd_skipped_budget = v != 0;
        } else if (key == "pd-value") {
            ls >> doc.pd_value;
        } else if (key == "pd-ok") {
            int v = 0;
            ls >> v;
            doc.pd_ok = v != 0;
        } else if (key == "verdict") {
            std::string v;
            ls >> v;
            doc.verdict = v == "pass";
        } else if (key == "timing-ms") {
            ls >> doc.timing_ms;
        } else {
            throw ParseError(line_no, 1, "unknown document key '" + key + "'");
        }
    }
    if (!saw_header) throw ParseError(line_no, 1, "missing document header");
    if (!saw_end) throw ParseError(line_no, 1, "missing end line");
    return doc;
}

std::string print_document_json(const CertificateDocument& doc) {
    nlohmann::ordered_json j;
    j["format"] = kHeader;
    j["field"] = doc.field_spec;
    j["vars"] = doc.var_names;
    j["seed"] = doc.seed;
    j["retries"] = doc.retries;
    j["verify_level"] = doc.verify_level;
    j["genericity_floor"] = doc.genericity_floor;
    j["resolution_budget"] = doc.resolution_budget;
    j["input"] = doc.input_forms;
    j["homogenized"] = doc.homogenized_forms;
    j["unit_ideal"] = doc.unit_ideal;
    j["instance"] = {{"m", doc.m}, {"n", doc.n}, {"h", doc.h}};
    j["bounds"] = {{"B", doc.bound_B},
                   {"B_plus_h", doc.bound_B_plus_h},
                   {"C", doc.bound_C},
                   {"C0", doc.bound_C0},
                   {"C_applicable", doc.c_applicable}};
    j["certificate"] = {{"variables", doc.variables},
                        {"quadrics", doc.quadrics},
                        {"trace", doc.trace}};
    j["verification"] = {{"regular_sequence", doc.regular_sequence},
                         {"containment", doc.containment},
                         {"expressions", doc.expressions},
                         {"quadrics_in_ideal", doc.quadrics_in_ideal},
                         {"condition3", doc.condition3},
                         {"bounds_ok", doc.bounds_ok},
                         {"pd_checked", doc.pd_checked},
                         {"pd_skipped_budget", doc.pd_skipped_budget},
                         {"pd_value", doc.pd_value},
                         {"pd_ok", doc.pd_ok}};
    j["verdict"] = doc.verdict ? "pass" : "fail";
    if (doc.timing_ms >= 0) j["timing_ms"] = doc.timing_ms;
    return j.dump(2) + "\n";
}

CertificateDocument parse_document_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(1, 1, std::string("bad JSON document: ") + e.what());
    }
    CertificateDocument doc;
    try {
        doc.field_spec = j.at("field").get<std::string>();
        doc.var_names = j.at("vars").get<std::vector<std::string>>();
        doc.seed = j.at("seed").get<std::uint64_t>();
        doc.retries = j.at("retries").get<int>();
        doc.verify_level = j.at("verify_level").get<int>();
        doc.genericity_floor = j.at("genericity_floor").get<std::uint32_t>();
        doc.resolution_budget = j.at("resolution_budget").get<std::uint64_t>();
        doc.input_forms = j.at("input").get<std::vector<std::string>>();
        doc.homogenized_forms = j.at("homogenized").get<std::vector<std::string>>();
        doc.unit_ideal = j.at("unit_ideal").get<bool>();
        doc.m = j.at("instance").at("m").get<int>();
        doc.n = j.at("instance").at("n").get<int>();
        doc.h = j.at("instance").at("h").get<int>();
        doc.bound_B = j.at("bounds").at("B").get<std::string>();
        doc.bound_B_plus_h = j.at("bounds").at("B_plus_h").get<std::string>();
        doc.bound_C = j.at("bounds").at("C").get<std::string>();
        doc.bound_C0 = j.at("bounds").at("C0").get<std::string>();
        doc.c_applicable = j.at("bounds").at("C_applicable").get<bool>();
        doc.variables = j.at("certificate").at("variables").get<std::vector<std::string>>();
        doc.quadrics = j.at("certificate").at("quadrics").get<std::vector<std::string>>();
        doc.trace = j.at("certificate").at("trace").get<std::vector<std::string>>();
        auto& v = j.at("verification");
        doc.regular_sequence = v.at("regular_sequence").get<bool>();
        doc.containment = v.at("containment").get<bool>();
        doc.expressions = v.at("expressions").get<std::vector<std::string>>();
        doc.quadrics_in_ideal = v.at("quadrics_in_ideal").get<bool>();
        doc.condition3 = v.at("condition3").get<bool>();
        doc.bounds_ok = v.at("bounds_ok").get<bool>();
        doc.pd_checked = v.at("pd_checked").get<bool>();
        doc.pd_skipped_budget = v.at("pd_skipped_budget").get<bool>();
        doc.pd_value = v.at("pd_value").get<int>();
        doc.pd_ok = v.at("pd_ok").get<bool>();
        doc.verdict = j.at("verdict").get<std::string>() == "pass";
        if (j.contains("timing_ms")) doc.timing_ms = j.at("timing_ms").get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("document field missing or mistyped: ") + e.what());
    }
    return doc;
}

}  // namespace subquad
