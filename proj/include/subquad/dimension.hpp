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

#ifndef SUBQUAD_DIMENSION_HPP
#define SUBQUAD_DIMENSION_HPP

#include <bit>
#include <vector>

#include "subquad/groebner.hpp"

namespace subquad {

/// Krull dimension of R/I, combinatorially from the lead-term ideal: the
/// largest variable set meeting no lead-term support. Unit ideal gives -1.
template <typename K>
int dimension(const Ideal<K>& ideal) {
    const auto& gb = ideal.groebner(MonomialOrder::grevlex());
    if (gb.is_unit()) return -1;
    unsigned n = ideal.nvars();
    if (n > 63) throw MismatchError("dimension: too many variables");

    std::vector<std::uint64_t> lt_masks;
    lt_masks.reserve(gb.lead.size());
    for (auto& m : gb.lead) lt_masks.push_back(m.support_mask());

    // variables absent from every lead term are free to join any independent set
    std::uint64_t involved = 0;
    for (auto msk : lt_masks) involved |= msk;
    unsigned free_vars = n - static_cast<unsigned>(std::popcount(involved));

    // enumerate subsets of the involved variables only
    std::vector<unsigned> inv_idx;
    for (unsigned i = 0; i < n; ++i)
        if (involved & (std::uint64_t(1) << i)) inv_idx.push_back(i);
    unsigned k = static_cast<unsigned>(inv_idx.size());
    if (k > 24) throw MismatchError("dimension: lead-term support too large");

    int best = 0;
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << k); ++sub) {
        std::uint64_t mask = 0;
        for (unsigned b = 0; b < k; ++b)
            if (sub & (std::uint64_t(1) << b)) mask |= std::uint64_t(1) << inv_idx[b];
        bool independent = true;
        for (auto msk : lt_masks) {
            if ((msk & ~mask) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(sub));
    }
    return best + static_cast<int>(free_vars);
}

/// Height of a proper ideal: N - dim(R/I), valid in a polynomial ring.
template <typename K>
int height(const Ideal<K>& ideal) {
    int d = dimension(ideal);
    if (d < 0) throw UnitIdealError("unit ideal has no height");
    return static_cast<int>(ideal.nvars()) - d;
}

/// Regular-sequence certificate per the Cohen-Macaulay criterion for forms:
/// the sequence is regular iff no form is zero and height equals the length.
template <typename K>
struct RegSeqCertificate {
    std::vector<Poly<K>> forms;
    int length = 0;
    int ambient_height = 0;
    bool verdict = false;
};

template <typename K>
RegSeqCertificate<K> is_regular_sequence(const std::vector<Poly<K>>& forms,
                                         unsigned nvars) {
    bool any_zero = false;
    for (auto& f : forms) {
        if (f.is_zero()) {
            any_zero = true;
            continue;
        }
        if (!f.is_homogeneous() || f.degree() < 1)
            throw NonHomogeneousError("regular sequence test requires forms of positive degree");
    }
    RegSeqCertificate<K> cert;
    cert.forms = forms;
    cert.length = static_cast<int>(forms.size());
    Ideal<K> ideal(forms, nvars);
    int d = dimension(ideal);
    cert.ambient_height = d < 0 ? static_cast<int>(nvars) : static_cast<int>(nvars) - d;
    cert.verdict = !any_zero && cert.ambient_height == cert.length;
    return cert;
}

struct KilledRing {
    std::vector<int> old_to_new;    // -1 for killed variables
    std::vector<unsigned> new_to_old;
    unsigned new_nvars = 0;
};

inline KilledRing killed_ring(unsigned nvars, const std::vector<bool>& kill) {
    KilledRing kr;
    kr.old_to_new.assign(nvars, -1);
    for (unsigned i = 0; i < nvars; ++i) {
        if (!kill[i]) {
            kr.old_to_new[i] = static_cast<int>(kr.new_nvars++);
            kr.new_to_old.push_back(i);
        }
    }
    return kr;
}

/// Image of f in the polynomial ring on the surviving variables.
template <typename K>
Poly<K> kill_variables(const Poly<K>& f, const std::vector<bool>& kill,
                       const KilledRing& kr) {
    std::vector<bool> keep(kill.size());
    for (std::size_t i = 0; i < kill.size(); ++i) keep[i] = !kill[i];
    return f.restrict_support(keep).compress(kr.old_to_new, kr.new_nvars);
}

/// Height of the image of I in R/(killed variables), computed in the smaller
/// polynomial ring. The zero image has height 0; a unit image is an error.
template <typename K>
int height_after_killing(const Ideal<K>& ideal, const std::vector<bool>& kill) {
    KilledRing kr = killed_ring(ideal.nvars(), kill);
    std::vector<Poly<K>> imgs;
    for (auto& g : ideal.generators()) {
        Poly<K> img = kill_variables(g, kill, kr);
        if (!img.is_zero()) imgs.push_back(img);
    }
    Ideal<K> image(imgs, kr.new_nvars);
    int d = dimension(image);
    if (d < 0) throw UnitIdealError("image ideal is the unit ideal");
    return static_cast<int>(kr.new_nvars) - d;
}

/// Substitute away the span of given independent linear forms: computes the
/// image of each polynomial in R/(forms), presented on the non-pivot
/// variables of the echelonized span. Killing actual variables is the
/// special case where the forms are coordinates.
template <typename K>
struct LinearQuotient {
    KilledRing ring;
    std::vector<Poly<K>> images;
};

template <typename K>
LinearQuotient<K> quotient_by_linear_span(const std::vector<Poly<K>>& polys,
                                          const std::vector<Poly<K>>& linear_forms,
                                          unsigned nvars) {
    std::vector<Poly<K>> nonzero;
    for (auto& f : linear_forms) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous_of(1))
            throw MismatchError("quotient_by_linear_span: non-linear form");
        nonzero.push_back(f);
    }
    LinearQuotient<K> out;
    if (nonzero.empty()) {
        std::vector<bool> kill(nvars, false);
        out.ring = killed_ring(nvars, kill);
        for (auto& p : polys) out.images.push_back(p);
        return out;
    }
    const GroebnerBasis<K> gb = buchberger(nonzero, MonomialOrder::grevlex());
    std::vector<bool> kill(nvars, false);
    for (auto& m : gb.lead)
        for (unsigned i = 0; i < nvars; ++i)
            if (m[i]) kill[i] = true;  // pivot variable of an echelon form
    out.ring = killed_ring(nvars, kill);
    for (auto& p : polys) {
        Poly<K> nf = normal_form(p, gb);
        out.images.push_back(nf.compress(out.ring.old_to_new, out.ring.new_nvars));
    }
    return out;
}

}  // namespace subquad

#endif
