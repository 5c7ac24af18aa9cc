#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "syzlab/error.hpp"
#include "syzlab/matrix.hpp"

namespace syzlab {

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

namespace detail {

/// Row-based Gauss-Jordan elimination. Pivots are the smallest-bit-size
/// nonzero candidate in the column; rows whose multiplier vanishes are
/// never touched, so sparse blocks stay cheap.
template <class F>
class Eliminator {
   public:
    Eliminator(std::vector<std::vector<F>> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {}

    explicit Eliminator(const Matrix<F>& m) : cols_(m.cols()) {
        rows_.reserve(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) rows_.push_back(m.row(r));
    }

    /// Echelon form with unit pivots; eliminates above the pivots too when `reduce` is set.
    void run(bool reduce) {
        std::size_t rank = 0;
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < cols_ && rank < rows_.size(); ++c) {
            std::size_t best = rows_.size();
            std::size_t best_size = 0;
            for (std::size_t r = rank; r < rows_.size(); ++r) {
                if (is_zero(rows_[r][c])) continue;
                const std::size_t size = bit_size(rows_[r][c]);
                if (best == rows_.size() || size < best_size) {
                    best = r;
                    best_size = size;
                }
            }
            if (best == rows_.size()) continue;
            std::swap(rows_[rank], rows_[best]);
            auto& pivot_row = rows_[rank];
            support.clear();
            if (pivot_row[c] != F(1)) {
                const F inv = F(1) / pivot_row[c];
                for (std::size_t j = c; j < cols_; ++j)
                    if (!is_zero(pivot_row[j])) pivot_row[j] *= inv;
            }
            for (std::size_t j = c + 1; j < cols_; ++j)
                if (!is_zero(pivot_row[j])) support.push_back(j);
            for (std::size_t r = reduce ? 0 : rank + 1; r < rows_.size(); ++r) {
                if (r == rank || is_zero(rows_[r][c])) continue;
                const F factor = rows_[r][c];
                rows_[r][c] = F(0);
                for (std::size_t j : support) rows_[r][j] -= factor * pivot_row[j];
            }
            pivots_.push_back(c);
            ++rank;
        }
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::vector<F>>& rows() const { return rows_; }
    std::vector<std::vector<F>>& rows() { return rows_; }

   private:
    std::vector<std::vector<F>> rows_;
    std::size_t cols_;
    std::vector<std::size_t> pivots_;
};

}  // namespace detail

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
    detail::Eliminator<F> elim(m);
    elim.run(true);
    RrefResult<F> out;
    out.reduced = Matrix<F>(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.reduced(r, c) = elim.rows()[r][c];
    out.pivot_columns = elim.pivots();
    out.rank = elim.rank();
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // eliminate along the shorter side
    detail::Eliminator<F> elim(m.rows() <= m.cols() ? m : m.transpose());
    elim.run(false);
    return elim.rank();
}

/// Rank of the matrix whose rows are the given vectors.
template <class F>
std::size_t rank_of_rows(std::vector<std::vector<F>> rows, std::size_t cols) {
    detail::Eliminator<F> elim(std::move(rows), cols);
    elim.run(false);
    return elim.rank();
}

template <class F>
std::size_t image_dim(const Matrix<F>& m) {
    return rank(m);
}

/// Columns form a basis of the null space. Rank-nullity is asserted.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const RrefResult<F> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        k(f, j) = F(1);
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) k(r.pivot_columns[i], j) = -r.reduced(i, f);
    }
    if (r.rank + k.cols() != m.cols()) throw InternalInconsistency("rank-nullity failed in kernel_basis");
    return k;
}

/// rank(ambient) - rank(sub); the columns of sub must lie in the column span of ambient.
template <class F>
std::size_t quotient_dim(const Matrix<F>& ambient, const Matrix<F>& sub) {
    if (ambient.rows() != sub.rows()) throw PreconditionError("quotient_dim: row count mismatch");
    const std::size_t ra = rank(ambient);
    const std::size_t rs = rank(sub);
    if (rank(ambient.hconcat(sub)) > ra) throw PreconditionError("sub not contained in ambient");
    return ra - rs;
}

/// Some X with A X = B, or nullopt when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw PreconditionError("solve: row count mismatch");
    const RrefResult<F> r = rref(a.hconcat(b));
    Matrix<F> x(a.cols(), b.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t pc = r.pivot_columns[i];
        if (pc >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = r.reduced(i, a.cols() + j);
    }
    return x;
}

/// Echelon basis grown one vector at a time; add() reports whether the
/// vector was independent of everything added before.
template <class F>
class IncrementalEchelon {
   public:
    explicit IncrementalEchelon(std::size_t dim) : dim_(dim) {}

    bool add(std::vector<F> v) {
        if (v.size() != dim_) throw PreconditionError("IncrementalEchelon: dimension mismatch");
        reduce(v);
        std::size_t lead = 0;
        while (lead < dim_ && is_zero(v[lead])) ++lead;
        if (lead == dim_) return false;
        const F inv = F(1) / v[lead];
        for (std::size_t j = lead; j < dim_; ++j)
            if (!is_zero(v[j])) v[j] *= inv;
        auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead);
        const auto idx = pos - leads_.begin();
        leads_.insert(pos, lead);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
    }

    std::size_t rank() const { return rows_.size(); }

   private:
    void reduce(std::vector<F>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::size_t lead = leads_[i];
            if (is_zero(v[lead])) continue;
            const F factor = v[lead];
            const auto& row = rows_[i];
            for (std::size_t j = lead; j < dim_; ++j)
                if (!is_zero(row[j])) v[j] -= factor * row[j];
        }
    }

    std::size_t dim_;
    std::vector<std::size_t> leads_;
    std::vector<std::vector<F>> rows_;
};

}  // namespace syzlab
