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

#ifndef SUBQUAD_DOCUMENT_HPP
#define SUBQUAD_DOCUMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace subquad {

/// Self-contained run record: the problem echo, the certificate in original
/// coordinates, and every verification result. Everything is held as strings
/// so the document is field-independent and byte-stable; timing is emitted
/// only on request so that equal (input, seed) runs stay byte-identical.
struct CertificateDocument {
    // problem echo
    std::string field_spec;  // decimal modulus or "Q"
    std::vector<std::string> var_names;
    std::vector<std::string> input_forms;
    std::uint64_t seed = 0;
    int retries = 25;
    int verify_level = 2;
    std::uint32_t genericity_floor = 32003;
    std::uint64_t resolution_budget = 2000000;

    // homogenization
    std::vector<std::string> homogenized_forms;
    bool unit_ideal = false;

    // instance profile and bounds
    int m = 0, n = 0, h = 0;
    std::string bound_B, bound_B_plus_h, bound_C, bound_C0;
    bool c_applicable = false;

    // certificate
    std::vector<std::string> variables;
    std::vector<std::string> quadrics;
    std::vector<std::string> trace;

    // verification
    bool regular_sequence = false;
    bool containment = false;
    std::vector<std::string> expressions;  // tag expressions per homogenized form
    bool quadrics_in_ideal = false;
    bool condition3 = false;
    bool bounds_ok = false;
    bool pd_checked = false;
    bool pd_skipped_budget = false;
    int pd_value = -1;
    bool pd_ok = true;
    bool verdict = false;

    long timing_ms = -1;  // < 0 means "do not emit"
};

std::string print_document_text(const CertificateDocument& doc);
CertificateDocument parse_document_text(const std::string& text);

std::string print_document_json(const CertificateDocument& doc);
CertificateDocument parse_document_json(const std::string& text);

}  // namespace subquad

#endif
