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

#ifndef SUBQUAD_LINALG_HPP
#define SUBQUAD_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "subquad/polynomial.hpp"

namespace subquad {

/// Dense exact matrix. Row reduction is plain Gauss-Jordan with the first
/// nonzero pivot; over exact fields there is nothing numeric to stabilize.
template <typename K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n, const K& one) {
        Mat m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
        K z = zero_like(a_.empty() ? o.a_.front() : a_.front());
        Mat r(rows_, o.cols_, z);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& aik = (*this)(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && (*this)(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
            K inv = (*this)(r, c).inv();
            for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                K f = (*this)(i, c);
                if (f.is_zero()) continue;
                for (std::size_t j = 0; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Mat m = *this;
        return m.rref().size();
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        if (rows_ == 0) return Mat(0, 0, K{});
        K one = one_like(a_.front());
        Mat aug(rows_, 2 * cols_, zero_like(a_.front()));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = one;
        }
        auto piv = aug.rref();
        if (piv.size() != rows_ || piv.back() >= cols_) return std::nullopt;
        Mat inv(rows_, cols_, zero_like(a_.front()));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

/// Solve A x = b; any solution (free variables set to zero), or nullopt.
template <typename K>
std::optional<std::vector<K>> solve_linear(const Mat<K>& A, const std::vector<K>& b,
                                           const K& zero) {
    Mat<K> aug(A.rows(), A.cols() + 1, zero);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;  // inconsistent
    std::vector<K> x(A.cols(), zero);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, A.cols());
    return x;
}

/// Incremental row space: reduced echelon rows for greedy independence tests.
template <typename K>
class SpanTracker {
public:
    explicit SpanTracker(const K& zero) : zero_(zero) {}

    std::size_t rank() const { return rows_.size(); }

    bool contains(const std::vector<K>& v) const {
        auto r = residual(v);
        for (auto& c : r)
            if (!c.is_zero()) return false;
        return true;
    }

    // true if v extended the span
    bool add_if_independent(const std::vector<K>& v) {
        auto r = residual(v);
        std::size_t p = 0;
        while (p < r.size() && r[p].is_zero()) ++p;
        if (p == r.size()) return false;
        K inv = r[p].inv();
        for (auto& c : r) c *= inv;
        // keep rows reduced against each other
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            K f = rows_[i][p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < r.size(); ++j) rows_[i][j] -= f * r[j];
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

private:
    std::vector<K> residual(std::vector<K> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            K f = v[pivots_[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[i][j];
        }
        return v;
    }
    K zero_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Invertible linear change of variables x_i -> sum_j M[i][j] x_j, with the
/// inverse cached so certificates can be pulled back to original coordinates.
template <typename K>
class LinearChange {
public:
    LinearChange() = default;

    static LinearChange from_matrix(Mat<K> m) {
        auto inv = m.inverse();
        if (!inv) throw MismatchError("linear change matrix is singular");
        return LinearChange(std::move(m), std::move(*inv));
    }
    static LinearChange identity(std::size_t n, const K& one) {
        Mat<K> i = Mat<K>::identity(n, one);
        return LinearChange(i, i);
    }

    std::size_t dim() const { return m_.rows(); }
    const Mat<K>& matrix() const { return m_; }
    const Mat<K>& inverse_matrix() const { return inv_; }

    LinearChange inverted() const { return LinearChange(inv_, m_); }

    // this after other: apply(f, other then this) == apply(f, composed)
    LinearChange after(const LinearChange& other) const {
        return LinearChange(other.m_ * m_, inv_ * other.inv_);
    }

    Poly<K> apply(const Poly<K>& f) const { return substitute_rows(f, m_); }
    Poly<K> unapply(const Poly<K>& f) const { return substitute_rows(f, inv_); }

private:
    LinearChange(Mat<K> m, Mat<K> inv) : m_(std::move(m)), inv_(std::move(inv)) {}

    static Poly<K> substitute_rows(const Poly<K>& f, const Mat<K>& m) {
        if (f.nvars() != m.rows()) throw MismatchError("linear change dimension mismatch");
        if (f.is_zero()) return f;
        unsigned n = f.nvars();
        std::vector<Poly<K>> rows;
        rows.reserve(n);
        for (unsigned i = 0; i < n; ++i) {
            std::vector<typename Poly<K>::Term> ts;
            for (unsigned j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) ts.emplace_back(Monomial::var(n, j), m(i, j));
            rows.push_back(Poly<K>::from_terms(n, std::move(ts)));
        }
        return f.substitute(rows, n);
    }

    Mat<K> m_;
    Mat<K> inv_;
};

template <typename K>
Poly<K> apply_linear_change(const Poly<K>& f, const LinearChange<K>& t) {
    return t.apply(f);
}

/// Coefficient row of a linear form.
template <typename K>
std::vector<K> linear_coeff_row(const Poly<K>& f, unsigned nvars, const K& zero) {
    std::vector<K> row(nvars, zero);
    for (auto& [m, c] : f.terms()) {
        if (m.degree() != 1) throw MismatchError("expected a linear form");
        for (unsigned i = 0; i < nvars; ++i)
            if (m[i]) row[i] = c;
    }
    return row;
}

template <typename K>
std::size_t rank_of_linear_forms(const std::vector<Poly<K>>& forms, unsigned nvars,
                                 const K& zero) {
    if (forms.empty()) return 0;
    Mat<K> m(forms.size(), nvars, zero);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto row = linear_coeff_row(forms[i], nvars, zero);
        for (unsigned j = 0; j < nvars; ++j) m(i, j) = row[j];
    }
    return m.rank();
}

/// Build the change sending prescribed independent linear forms to prescribed
/// coordinates and completing the rest with unit vectors, greedily, keeping
/// the matrix invertible. Completion prefers each row's own unit vector, so
/// coordinates outside the prescription are fixed whenever possible.
template <typename K>
LinearChange<K> change_mapping_forms_to_coords(
    const std::vector<std::pair<unsigned, Poly<K>>>& assignments, unsigned nvars,
    const K& one) {
    K zero = zero_like(one);
    Mat<K> m(nvars, nvars, zero);
    std::vector<bool> assigned(nvars, false);
    for (auto& [coord, form] : assignments) {
        auto row = linear_coeff_row(form, nvars, zero);
        for (unsigned j = 0; j < nvars; ++j) m(coord, j) = row[j];
        assigned[coord] = true;
    }
    std::size_t filled = assignments.size();
    for (unsigned i = 0; i < nvars; ++i) {
        if (assigned[i]) continue;
        bool placed = false;
        for (unsigned attempt = 0; attempt < nvars && !placed; ++attempt) {
            unsigned j = (i + attempt) % nvars;
            m(i, j) = one;
            if (m.rank() == filled + 1) {
                placed = true;
            } else {
                m(i, j) = zero;
            }
        }
        if (!placed) throw MismatchError("could not complete change of variables");
        assigned[i] = true;
        ++filled;
    }
    return LinearChange<K>::from_matrix(std::move(m)).inverted();
}

/// Rank of the span of linear forms supported on a coordinate block, plus an
/// invertible change mapping that span onto the first `rank` coordinates of
/// the block (identity outside the block).
template <typename K>
std::pair<std::size_t, LinearChange<K>> span_basis(const std::vector<Poly<K>>& forms,
                                                   unsigned block_lo, unsigned block_hi,
                                                   unsigned nvars, const K& one) {
    K zero = zero_like(one);
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous_of(1)) throw MismatchError("span_basis: non-linear input");
        for (auto& [m, c] : f.terms())
            for (unsigned i = 0; i < nvars; ++i)
                if (m[i] && (i < block_lo || i >= block_hi))
                    throw MismatchError("span_basis: form outside designated block");
    }
    unsigned w = block_hi - block_lo;
    Mat<K> m(forms.size(), w, zero);
    std::size_t rrow = 0;
    for (auto& f : forms) {
        if (f.is_zero()) continue;
        auto row = linear_coeff_row(f, nvars, zero);
        for (unsigned j = 0; j < w; ++j) m(rrow, j) = row[block_lo + j];
        ++rrow;
    }
    Mat<K> red(rrow, w, zero);
    for (std::size_t i = 0; i < rrow; ++i)
        for (unsigned j = 0; j < w; ++j) red(i, j) = m(i, j);
    auto pivots = red.rref();
    std::size_t rank = pivots.size();

    // rows 0..rank-1 of `red` are an echelon basis of the span
    std::vector<std::pair<unsigned, Poly<K>>> assign;
    for (std::size_t i = 0; i < rank; ++i) {
        std::vector<typename Poly<K>::Term> ts;
        for (unsigned j = 0; j < w; ++j)
            if (!red(i, j).is_zero())
                ts.emplace_back(Monomial::var(nvars, block_lo + j), red(i, j));
        assign.emplace_back(block_lo + static_cast<unsigned>(i),
                            Poly<K>::from_terms(nvars, std::move(ts)));
    }
    return {rank, change_mapping_forms_to_coords(assign, nvars, one)};
}

}  // namespace subquad

#endif
