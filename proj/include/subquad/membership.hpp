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

#ifndef SUBQUAD_MEMBERSHIP_HPP
#define SUBQUAD_MEMBERSHIP_HPP

#include <optional>
#include <vector>

#include "subquad/dimension.hpp"
#include "subquad/groebner.hpp"

namespace subquad {

/// Decides membership in the subalgebra K[g_1, ..., g_t] by eliminating the
/// original variables from (T_i - g_i) under a block order; the normal form
/// of a member is its expression in the tag variables. One Groebner basis is
/// computed per generator set and reused across queries.
template <typename K>
class SubalgebraMembership {
public:
    SubalgebraMembership(std::vector<Poly<K>> gens, unsigned nvars, const K& one)
        : gens_(std::move(gens)), nvars_(nvars), tags_(static_cast<unsigned>(gens_.size())) {
        unsigned total = nvars_ + tags_;
        embed_map_.resize(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) embed_map_[i] = i;
        std::vector<Poly<K>> rels;
        rels.reserve(gens_.size());
        for (unsigned t = 0; t < tags_; ++t) {
            if (gens_[t].nvars() != nvars_)
                throw MismatchError("subalgebra generator over wrong ring");
            rels.push_back(Poly<K>::variable(total, nvars_ + t, one) -
                           gens_[t].embed(embed_map_, total));
        }
        gb_ = buchberger(rels, MonomialOrder::eliminate_first(nvars_, total));
    }

    struct Result {
        bool member = false;
        std::optional<Poly<K>> expression;  // in K[T_1..T_t] when member
    };

    Result test(const Poly<K>& f) const {
        if (f.nvars() != nvars_) throw MismatchError("membership query over wrong ring");
        unsigned total = nvars_ + tags_;
        Poly<K> nf = normal_form(f.embed(embed_map_, total), gb_);
        Result r;
        std::uint64_t orig_mask =
            nvars_ >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << nvars_) - 1);
        if ((nf.support_mask() & orig_mask) != 0) return r;
        r.member = true;
        std::vector<int> to_tags(total, -1);
        for (unsigned t = 0; t < tags_; ++t) to_tags[nvars_ + t] = static_cast<int>(t);
        r.expression = nf.compress(to_tags, tags_);
        return r;
    }

    /// Substitutes the generators back into a tag expression.
    Poly<K> expand(const Poly<K>& expression) const {
        return expression.substitute(gens_, nvars_);
    }

    unsigned tag_count() const { return tags_; }

private:
    std::vector<Poly<K>> gens_;
    unsigned nvars_;
    unsigned tags_;
    std::vector<unsigned> embed_map_;
    GroebnerBasis<K> gb_;
};

template <typename K>
typename SubalgebraMembership<K>::Result subalgebra_membership(
    const Poly<K>& f, const std::vector<Poly<K>>& gens, unsigned nvars, const K& one) {
    SubalgebraMembership<K> m(gens, nvars, one);
    return m.test(f);
}

/// Kernel of T_i -> f_i as an ideal of K[T_1..T_n]: the reduced basis of the
/// ideal of relations among the f_i ("front relations" when the f_i are front
/// polynomials). Input polynomials live in their own ring on `nvars` variables.
template <typename K>
Ideal<K> front_relations(const std::vector<Poly<K>>& polys, unsigned nvars, const K& one) {
    unsigned t = static_cast<unsigned>(polys.size());
    unsigned total = nvars + t;
    std::vector<unsigned> embed_map(nvars);
    for (unsigned i = 0; i < nvars; ++i) embed_map[i] = i;

    std::vector<Poly<K>> rels;
    rels.reserve(t);
    for (unsigned i = 0; i < t; ++i)
        rels.push_back(Poly<K>::variable(total, nvars + i, one) -
                       polys[i].embed(embed_map, total));
    GroebnerBasis<K> gb = buchberger(rels, MonomialOrder::eliminate_first(nvars, total));

    std::uint64_t orig_mask = nvars >= 64 ? ~std::uint64_t(0)
                                          : ((std::uint64_t(1) << nvars) - 1);
    std::vector<int> to_tags(total, -1);
    for (unsigned i = 0; i < t; ++i) to_tags[nvars + i] = static_cast<int>(i);
    std::vector<Poly<K>> kernel;
    for (auto& e : gb.elems)
        if ((e.support_mask() & orig_mask) == 0)
            kernel.push_back(e.compress(to_tags, t));
    return Ideal<K>(kernel, t);
}

}  // namespace subquad

#endif
