#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "syzlab/error.hpp"
#include "syzlab/field.hpp"

namespace syzlab {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw PreconditionError("matrix entry count must equal rows * cols");
    }
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<F>& entries() const { return entries_; }

    F& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (!syzlab::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    std::vector<F> column(std::size_t c) const {
        std::vector<F> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    /// Columns given as vectors of equal length.
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<F>>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw PreconditionError("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    /// [this | rhs]
    Matrix hconcat(const Matrix& rhs) const {
        if (rhs.rows_ != rows_) throw PreconditionError("hconcat row mismatch");
        Matrix m(rows_, cols_ + rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
            for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, cols_ + c) = rhs(r, c);
        }
        return m;
    }

    /// this stacked on top of rhs
    Matrix vconcat(const Matrix& rhs) const {
        if (rhs.cols_ != cols_) throw PreconditionError("vconcat column mismatch");
        Matrix m(rows_ + rhs.rows_, cols_);
        std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
        std::copy(rhs.entries_.begin(), rhs.entries_.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
        return m;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
        return *this;
    }
    Matrix& operator*=(const F& s) {
        for (auto& x : entries_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const F& s) { return lhs *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (syzlab::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (syzlab::is_zero(bkj)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            os << (r ? ", [" : "[");
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
            os << "]";
        }
        os << "]";
        return os.str();
    }

   private:
    void check_same_shape(const Matrix& rhs) const {
        if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw PreconditionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> entries_;
};

}  // namespace syzlab
