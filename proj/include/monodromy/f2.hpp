/*
 * Dense linear algebra over the two-element field.
 *
 * Bit-packed rows, first-nonzero pivot selection, no tolerances anywhere.
 * Everything downstream (homology ranks, kernels, exactness bookkeeping)
 * reduces to the handful of routines in this file.
 */

#pragma once

#include "monodromy/rational.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlab {

class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static F2Vec unit(std::size_t n, std::size_t i)
    {
        F2Vec v(n);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v)
    {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    F2Vec& operator^=(const F2Vec& o)
    {
        if (o.size_ != size_)
            throw Error("F2Vec size mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    friend F2Vec operator^(F2Vec a, const F2Vec& b)
    {
        a ^= b;
        return a;
    }

    bool is_zero() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool operator==(const F2Vec& o) const = default;

    /// Index of the lowest set bit, or -1 when zero.
    long lowest_set() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return static_cast<long>((w << 6) + std::countr_zero(words_[w]));
        return -1;
    }

    std::size_t popcount() const
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    static bool dot(const F2Vec& a, const F2Vec& b)
    {
        if (a.size_ != b.size_)
            throw Error("F2Vec size mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            acc ^= a.words_[w] & b.words_[w];
        return std::popcount(acc) & 1u;
    }

    std::string to_string() const
    {
        std::string s;
        s.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i)
            s.push_back(get(i) ? '1' : '0');
        return s;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, F2Vec(cols))
    {
    }

    static F2Matrix identity(std::size_t n)
    {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }

    /// Convenience for tests and JSON parsing: rows of 0/1 values.
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        F2Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw Error("ragged rows in F2Matrix literal");
            for (std::size_t j = 0; j < c; ++j)
                m.set(i, j, rows[i][j] & 1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { row_[i].set(j, v); }

    const F2Vec& row(std::size_t i) const { return row_[i]; }
    F2Vec& row(std::size_t i) { return row_[i]; }

    F2Vec column(std::size_t j) const
    {
        F2Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v.set(i, get(i, j));
        return v;
    }

    void set_column(std::size_t j, const F2Vec& v)
    {
        if (v.size() != rows_)
            throw Error("column size mismatch");
        for (std::size_t i = 0; i < rows_; ++i)
            set(i, j, v.get(i));
    }

    bool is_zero() const
    {
        for (const auto& r : row_)
            if (!r.is_zero())
                return false;
        return true;
    }

    bool operator==(const F2Matrix& o) const = default;

    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("F2Matrix shape mismatch in +");
        F2Matrix out = a;
        for (std::size_t i = 0; i < a.rows_; ++i)
            out.row_[i] ^= b.row_[i];
        return out;
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error("F2Matrix shape mismatch in *: " + std::to_string(a.rows_) + "x" +
                        std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                        std::to_string(b.cols_));
        F2Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a.get(i, j))
                    out.row_[i] ^= b.row_[j];
        return out;
    }

    F2Vec mul_vec(const F2Vec& v) const
    {
        if (v.size() != cols_)
            throw Error("F2Matrix/vector size mismatch");
        F2Vec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.set(i, F2Vec::dot(row_[i], v));
        return out;
    }

    F2Matrix transpose() const
    {
        F2Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out.set(j, i, get(i, j));
        return out;
    }

    /// Reduced row echelon form; deterministic (first nonzero pivot per column).
    F2Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const
    {
        F2Matrix m = *this;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = rows_;
            for (std::size_t i = r; i < rows_; ++i) {
                if (m.get(i, c)) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == rows_)
                continue;
            std::swap(m.row_[r], m.row_[pivot]);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && m.get(i, c))
                    m.row_[i] ^= m.row_[r];
            if (pivot_cols)
                pivot_cols->push_back(c);
            ++r;
        }
        return m;
    }

    std::size_t rank() const
    {
        std::vector<std::size_t> pivots;
        rref(&pivots);
        return pivots.size();
    }

    /// Basis of { v : A v = 0 }. Size is cols - rank; deterministic.
    std::vector<F2Vec> kernel_basis() const
    {
        std::vector<std::size_t> pivots;
        F2Matrix r = rref(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        std::vector<F2Vec> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f])
                continue;
            F2Vec v(cols_);
            v.set(f, true);
            for (std::size_t p = 0; p < pivots.size(); ++p)
                v.set(pivots[p], r.get(p, f));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of A x = b, or nullopt when inconsistent.
    std::optional<F2Vec> solve(const F2Vec& b) const
    {
        if (b.size() != rows_)
            throw Error("solve: rhs size mismatch");
        F2Matrix m = *this;
        F2Vec rhs = b;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (m.get(i, c)) {
                    pivot = i;
                    break;
                }
            if (pivot == rows_)
                continue;
            std::swap(m.row_[r], m.row_[pivot]);
            bool br = rhs.get(r), bp = rhs.get(pivot);
            rhs.set(r, bp);
            rhs.set(pivot, br);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && m.get(i, c)) {
                    m.row_[i] ^= m.row_[r];
                    if (rhs.get(r))
                        rhs.flip(i);
                }
            pivots.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows_; ++i)
            if (rhs.get(i))
                return std::nullopt;
        F2Vec x(cols_);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            x.set(pivots[p], rhs.get(p));
        return x;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vec> row_;
};

/// Incremental echelon form of a set of vectors (a row-space accumulator).
class F2Span {
public:
    F2Span() = default;
    explicit F2Span(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return vecs_.size(); }

    /// Residual of v after eliminating against the stored echelon vectors.
    F2Vec reduce(F2Vec v) const
    {
        for (std::size_t i = 0; i < vecs_.size(); ++i)
            if (v.get(leads_[i]))
                v ^= vecs_[i];
        return v;
    }

    bool contains(const F2Vec& v) const { return reduce(v).is_zero(); }

    /// Insert v; returns true when v was independent of the current span.
    bool insert(const F2Vec& v)
    {
        F2Vec r = reduce(v);
        long lead = r.lowest_set();
        if (lead < 0)
            return false;
        vecs_.push_back(std::move(r));
        leads_.push_back(static_cast<std::size_t>(lead));
        return true;
    }

private:
    std::size_t dim_ = 0;
    std::vector<F2Vec> vecs_;
    std::vector<std::size_t> leads_;
};

/// Basis of the column space, chosen greedily from the columns in order.
inline std::vector<F2Vec> column_space_basis(const F2Matrix& m)
{
    F2Span span(m.rows());
    std::vector<F2Vec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        F2Vec c = m.column(j);
        if (span.insert(c))
            basis.push_back(std::move(c));
    }
    return basis;
}

inline F2Matrix matrix_from_columns(std::size_t rows, const std::vector<F2Vec>& cols)
{
    F2Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        m.set_column(j, cols[j]);
    return m;
}

} // namespace mlab
