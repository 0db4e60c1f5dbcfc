/*
 * Dense matrices with entries in the T^λ ring; the carrier for filtered
 * chain maps. Entries stay exact, so "this entry has no term with λ >= 0"
 * is a decidable check, which is all the Π+ ... Π- identities need.
 */

#pragma once

#include "monodromy/f2.hpp"
#include "monodromy/omega.hpp"

#include <vector>

namespace mlab {

class OmegaMatrix {
public:
    OmegaMatrix() = default;
    OmegaMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols)
    {
    }

    static OmegaMatrix identity(std::size_t n)
    {
        OmegaMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = OmegaElement::one();
        return m;
    }

    /// Embed a Z2 matrix as the T^0 slice.
    static OmegaMatrix from_f2(const F2Matrix& f)
    {
        OmegaMatrix m(f.rows(), f.cols());
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j)
                if (f.get(i, j))
                    m.at(i, j) = OmegaElement::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    OmegaElement& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const OmegaElement& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& e : a_)
            if (!e.is_zero())
                return false;
        return true;
    }

    bool operator==(const OmegaMatrix& o) const = default;

    friend OmegaMatrix operator+(const OmegaMatrix& x, const OmegaMatrix& y)
    {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw Error("OmegaMatrix shape mismatch in +");
        OmegaMatrix out(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k)
            out.a_[k] = x.a_[k] + y.a_[k];
        return out;
    }

    friend OmegaMatrix operator*(const OmegaMatrix& x, const OmegaMatrix& y)
    {
        if (x.cols_ != y.rows_)
            throw Error("OmegaMatrix shape mismatch in *");
        OmegaMatrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const OmegaElement& e = x.at(i, k);
                if (e.is_zero())
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!y.at(k, j).is_zero())
                        out.at(i, j) += e * y.at(k, j);
            }
        return out;
    }

    OmegaMatrix proj_nonneg() const
    {
        OmegaMatrix out(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            out.a_[k] = a_[k].proj_nonneg();
        return out;
    }

    OmegaMatrix proj_nonpos() const
    {
        OmegaMatrix out(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            out.a_[k] = a_[k].proj_nonpos();
        return out;
    }

    /// Z2 coefficient matrix of the T^λ slice.
    F2Matrix lambda_slice(const Rational& lambda) const
    {
        F2Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out.set(i, j, at(i, j).coefficient(lambda));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<OmegaElement> a_;
};

} // namespace mlab
