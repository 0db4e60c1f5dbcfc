/*
 * Hofer energy of a sampled Hamiltonian, by trapezoidal quadrature over an
 * exact-rational grid. Samples are snapped to rationals at ingestion so the
 * result can feed the filtration exponents without a tolerance. The norm of
 * any sampled representative upper-bounds the path-class energy; no
 * optimization over representatives is attempted.
 */

#pragma once

#include "monodromy/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace mlab {

struct SampledHamiltonian {
    std::vector<Rational> times;                // strictly increasing, spanning [0, 1]
    std::vector<std::vector<Rational>> values;  // per time, >= 1 spatial samples

    void validate() const
    {
        if (times.empty())
            throw Error("empty time grid");
        if (times.size() != values.size())
            throw Error("one sample row per time point required");
        if (times.front() != Rational(0) || times.back() != Rational(1))
            throw Error("time grid must span [0, 1]");
        for (std::size_t i = 0; i + 1 < times.size(); ++i)
            if (!(times[i] < times[i + 1]))
                throw Error("time grid must be strictly increasing");
        for (const auto& row : values)
            if (row.empty())
                throw Error("every time needs at least one spatial sample");
    }
};

struct HoferNorm {
    Rational norm;  // ∫ (max - min) dt
    Rational plus;  // ‖H‖₊ = ∫ max dt
    Rational minus; // ‖H‖₋ = -∫ min dt
};

inline HoferNorm hofer_norm(const SampledHamiltonian& h)
{
    h.validate();
    std::vector<Rational> maxs, mins;
    maxs.reserve(h.values.size());
    mins.reserve(h.values.size());
    for (const auto& row : h.values) {
        maxs.push_back(*std::max_element(row.begin(), row.end()));
        mins.push_back(*std::min_element(row.begin(), row.end()));
    }
    Rational plus(0), minus(0);
    for (std::size_t i = 0; i + 1 < h.times.size(); ++i) {
        Rational dt = h.times[i + 1] - h.times[i];
        plus += dt * (maxs[i] + maxs[i + 1]) / 2;
        minus -= dt * (mins[i] + mins[i + 1]) / 2;
    }
    return {plus + minus, plus, minus};
}

/// σ thresholds; a missing value means +∞ (no holomorphic object of that kind).
struct SigmaThresholds {
    std::optional<Rational> sigma_s, sigma_l;
    std::optional<Rational> eta; // rational-Lagrangian generator

    void validate() const
    {
        for (const auto& v : {sigma_s, sigma_l, eta})
            if (v && *v <= Rational(0))
                throw Error("thresholds must be positive");
    }
};

/// Strict inequality against min(σ_S, σ_L), or against η when only η is
/// given; an absent threshold never blocks.
inline bool sigma_gate(const Rational& norm, const SigmaThresholds& s)
{
    s.validate();
    std::optional<Rational> threshold;
    if (s.sigma_s)
        threshold = *s.sigma_s;
    if (s.sigma_l)
        threshold = threshold ? std::min(*threshold, *s.sigma_l) : *s.sigma_l;
    if (!threshold && s.eta)
        threshold = *s.eta;
    return !threshold || norm < *threshold;
}

} // namespace mlab
