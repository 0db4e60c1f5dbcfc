/*
 * The coefficient ring of finite Z2-combinations of symbols T^λ with exact
 * rational exponents. Since coefficients live in Z2, an element is just its
 * support: a sorted set of exponents. λ = 0 belongs to both the non-negative
 * and the non-positive projection.
 */

#pragma once

#include "monodromy/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace mlab {

class OmegaElement {
public:
    OmegaElement() = default;

    static OmegaElement zero() { return OmegaElement(); }
    static OmegaElement one() { return monomial(Rational(0)); }

    static OmegaElement monomial(const Rational& exponent)
    {
        OmegaElement e;
        e.exps_.push_back(exponent);
        return e;
    }

    static OmegaElement from_exponents(std::vector<Rational> exps)
    {
        std::sort(exps.begin(), exps.end());
        OmegaElement e;
        for (const auto& x : exps) {
            // duplicated exponents cancel pairwise in characteristic 2
            if (!e.exps_.empty() && e.exps_.back() == x)
                e.exps_.pop_back();
            else
                e.exps_.push_back(x);
        }
        return e;
    }

    bool is_zero() const { return exps_.empty(); }
    std::size_t term_count() const { return exps_.size(); }
    const std::vector<Rational>& exponents() const { return exps_; }

    bool operator==(const OmegaElement& o) const = default;

    friend OmegaElement operator+(const OmegaElement& a, const OmegaElement& b)
    {
        OmegaElement out;
        out.exps_.reserve(a.exps_.size() + b.exps_.size());
        std::size_t i = 0, j = 0;
        while (i < a.exps_.size() && j < b.exps_.size()) {
            if (a.exps_[i] < b.exps_[j])
                out.exps_.push_back(a.exps_[i++]);
            else if (b.exps_[j] < a.exps_[i])
                out.exps_.push_back(b.exps_[j++]);
            else {
                ++i;
                ++j;
            }
        }
        out.exps_.insert(out.exps_.end(), a.exps_.begin() + i, a.exps_.end());
        out.exps_.insert(out.exps_.end(), b.exps_.begin() + j, b.exps_.end());
        return out;
    }

    OmegaElement& operator+=(const OmegaElement& o) { return *this = *this + o; }

    friend OmegaElement operator*(const OmegaElement& a, const OmegaElement& b)
    {
        std::map<Rational, int> parity;
        for (const auto& x : a.exps_)
            for (const auto& y : b.exps_)
                parity[x + y] ^= 1;
        OmegaElement out;
        for (const auto& [exp, p] : parity)
            if (p)
                out.exps_.push_back(exp);
        return out;
    }

    /// Π+: keep the terms with exponent λ >= 0.
    OmegaElement proj_nonneg() const
    {
        OmegaElement out;
        for (const auto& x : exps_)
            if (x >= Rational(0))
                out.exps_.push_back(x);
        return out;
    }

    /// Π-: keep the terms with exponent λ <= 0.
    OmegaElement proj_nonpos() const
    {
        OmegaElement out;
        for (const auto& x : exps_)
            if (x <= Rational(0))
                out.exps_.push_back(x);
        return out;
    }

    /// Z2 coefficient of T^λ.
    bool coefficient(const Rational& exponent) const
    {
        return std::binary_search(exps_.begin(), exps_.end(), exponent);
    }

    bool all_exponents_negative() const
    {
        return exps_.empty() || exps_.back() < Rational(0);
    }

    std::string to_string() const
    {
        if (exps_.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i)
                s += " + ";
            s += "T^";
            const Rational& x = exps_[i];
            if (x.denominator() == 1 && x.numerator() >= 0)
                s += format_rational(x);
            else
                s += "(" + format_rational(x) + ")";
        }
        return s;
    }

    /// Inverse of to_string: "0" or "T^e [+ T^e ...]", e as "p", "(p/q)", "(-p)".
    static OmegaElement parse(const std::string& text)
    {
        if (text == "0")
            return zero();
        std::vector<Rational> exps;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text.compare(pos, 2, "T^") != 0)
                throw Error("bad ring element: '" + text + "'");
            pos += 2;
            std::string token;
            if (pos < text.size() && text[pos] == '(') {
                std::size_t close = text.find(')', pos);
                if (close == std::string::npos)
                    throw Error("bad ring element: '" + text + "'");
                token = text.substr(pos + 1, close - pos - 1);
                pos = close + 1;
            } else {
                std::size_t end = text.find(" + ", pos);
                token = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
                pos = end == std::string::npos ? text.size() : end;
            }
            exps.push_back(parse_rational(token));
            if (pos < text.size()) {
                if (text.compare(pos, 3, " + ") != 0)
                    throw Error("bad ring element: '" + text + "'");
                pos += 3;
            }
        }
        return from_exponents(std::move(exps));
    }

private:
    std::vector<Rational> exps_; // strictly increasing
};

} // namespace mlab
