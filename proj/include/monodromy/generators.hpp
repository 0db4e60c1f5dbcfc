/*
 * Seeded random instances: simplicial complexes, acyclic matchings, chain
 * maps. Batch verification and the self test draw from here; everything is
 * reproducible from a single 64-bit seed.
 */

#pragma once

#include "monodromy/morse.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace mlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform integer in [0, n).
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }

    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        std::shuffle(v.begin(), v.end(), eng_);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Random simplicial complex of dimension <= max_dim with at most max_cells
/// cells. Simplicial boundaries satisfy ∂∘∂ = 0 mod 2 automatically.
inline CellComplex random_simplicial_complex(Rng& rng, int max_dim, std::size_t max_cells)
{
    std::size_t nv = 3 + rng.below(6);
    if (nv > max_cells)
        nv = max_cells;
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < nv; ++i)
        verts.push_back("v" + std::to_string(i));
    std::size_t budget = max_cells - nv;

    auto edge_label = [](std::size_t i, std::size_t j) {
        return "e" + std::to_string(i) + "_" + std::to_string(j);
    };
    auto tri_label = [](std::size_t i, std::size_t j, std::size_t k) {
        return "t" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
    };
    auto tet_label = [](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return "s" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k) + "_" +
               std::to_string(l);
    };

    std::vector<std::pair<std::string, std::string>> incidence;
    std::vector<std::string> edges, tris, tets;
    std::vector<std::vector<bool>> has_edge(nv, std::vector<bool>(nv, false));

    std::vector<std::pair<std::size_t, std::size_t>> vpairs;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            vpairs.emplace_back(i, j);
    rng.shuffle(vpairs);
    for (auto [i, j] : vpairs) {
        if (edges.size() >= budget)
            break;
        if (!rng.chance(0.55))
            continue;
        has_edge[i][j] = true;
        edges.push_back(edge_label(i, j));
        incidence.emplace_back(edge_label(i, j), verts[i]);
        incidence.emplace_back(edge_label(i, j), verts[j]);
    }
    budget -= edges.size();

    auto tri_exists = [&](std::size_t i, std::size_t j, std::size_t k) {
        return std::find(tris.begin(), tris.end(), tri_label(i, j, k)) != tris.end();
    };

    if (max_dim >= 2) {
        std::vector<std::array<std::size_t, 3>> triples;
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = i + 1; j < nv; ++j)
                for (std::size_t k = j + 1; k < nv; ++k)
                    if (has_edge[i][j] && has_edge[j][k] && has_edge[i][k])
                        triples.push_back({i, j, k});
        rng.shuffle(triples);
        for (auto [i, j, k] : triples) {
            if (tris.size() >= budget)
                break;
            if (!rng.chance(0.5))
                continue;
            tris.push_back(tri_label(i, j, k));
            incidence.emplace_back(tri_label(i, j, k), edge_label(i, j));
            incidence.emplace_back(tri_label(i, j, k), edge_label(j, k));
            incidence.emplace_back(tri_label(i, j, k), edge_label(i, k));
        }
        budget -= tris.size();
    }

    if (max_dim >= 3) {
        std::vector<std::array<std::size_t, 4>> quads;
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = i + 1; j < nv; ++j)
                for (std::size_t k = j + 1; k < nv; ++k)
                    for (std::size_t l = k + 1; l < nv; ++l)
                        if (tri_exists(i, j, k) && tri_exists(i, j, l) && tri_exists(i, k, l) &&
                            tri_exists(j, k, l))
                            quads.push_back({i, j, k, l});
        rng.shuffle(quads);
        for (auto [i, j, k, l] : quads) {
            if (tets.size() >= budget)
                break;
            if (!rng.chance(0.5))
                continue;
            tets.push_back(tet_label(i, j, k, l));
            incidence.emplace_back(tet_label(i, j, k, l), tri_label(i, j, k));
            incidence.emplace_back(tet_label(i, j, k, l), tri_label(i, j, l));
            incidence.emplace_back(tet_label(i, j, k, l), tri_label(i, k, l));
            incidence.emplace_back(tet_label(i, j, k, l), tri_label(j, k, l));
        }
    }

    std::vector<std::vector<std::string>> cells{verts};
    if (!edges.empty())
        cells.push_back(edges);
    if (!tris.empty())
        cells.push_back(tris);
    if (!tets.empty())
        cells.push_back(tets);
    return CellComplex(std::move(cells), std::move(incidence));
}

/// Greedy random acyclic matching: shuffle the face-coface pairs and keep
/// whatever does not close a V-path loop.
inline std::vector<MatchingPair> random_acyclic_matching(const CellComplex& cx, Rng& rng)
{
    std::vector<MatchingPair> candidates;
    for (int d = 1; d < cx.dimension_count(); ++d)
        for (std::size_t j = 0; j < cx.count(d); ++j)
            for (std::size_t f : cx.faces({d, j}))
                candidates.push_back({cx.label({d - 1, f}), cx.label({d, j})});
    rng.shuffle(candidates);

    std::vector<MatchingPair> chosen;
    std::set<std::string> used;
    for (const auto& cand : candidates) {
        if (used.count(cand.lower) || used.count(cand.upper))
            continue;
        chosen.push_back(cand);
        MorseData trial(cx, chosen);
        if (validate_matching(trial).ok) {
            used.insert(cand.lower);
            used.insert(cand.upper);
        } else {
            chosen.pop_back();
        }
    }
    return chosen;
}

/// Random degree +1 map (raw matrices, no conditions).
inline ChainHomotopy random_degree_plus_one(const ChainComplex& c, Rng& rng, double density = 0.4)
{
    std::vector<F2Matrix> mats;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        F2Matrix m(c.dim(d + 1), c.dim(d));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.set(i, j, rng.chance(density));
        mats.push_back(std::move(m));
    }
    return ChainHomotopy(c, c, std::move(mats));
}

/// ∂K + K∂ for random K: a null-homotopic chain self-map.
inline ChainMap random_null_homotopic(const ChainComplex& c, Rng& rng, double density = 0.4)
{
    ChainHomotopy k = random_degree_plus_one(c, rng, density);
    std::vector<F2Matrix> mats;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d)
        mats.push_back(c.boundary(d + 1) * k.matrix_at(d) + k.matrix_at(d - 1) * c.boundary(d));
    return ChainMap(c, c, 0, std::move(mats));
}

/// Uniformly random element of the space of degree-preserving chain
/// self-maps, sampled via the kernel of the commutation constraints.
inline ChainMap random_chain_selfmap(const ChainComplex& c, Rng& rng)
{
    // variable layout: one block per degree, row-major within a block
    std::vector<std::size_t> offset;
    std::size_t vars = 0;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        offset.push_back(vars);
        vars += c.dim(d) * c.dim(d);
    }
    auto var = [&](int d, std::size_t i, std::size_t j) {
        return offset[d - c.min_degree()] + i * c.dim(d) + j;
    };

    // constraints: (∂ f)_d = (f ∂)_d for every degree d
    std::vector<F2Vec> rows;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        F2Matrix bd = c.boundary(d); // degree d -> d-1
        for (std::size_t i = 0; i < c.dim(d - 1); ++i)
            for (std::size_t j = 0; j < c.dim(d); ++j) {
                F2Vec eq(vars);
                // Σ_k ∂[i,k] f_d[k,j] + Σ_k f_{d-1}[i,k] ∂[k,j] = 0
                for (std::size_t k = 0; k < c.dim(d); ++k)
                    if (bd.get(i, k))
                        eq.flip(var(d, k, j));
                for (std::size_t k = 0; k < c.dim(d - 1); ++k)
                    if (bd.get(k, j))
                        eq.flip(var(d - 1, i, k));
                if (!eq.is_zero())
                    rows.push_back(std::move(eq));
            }
    }
    F2Matrix constraints(rows.size(), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        constraints.row(i) = rows[i];

    F2Vec x(vars);
    for (const auto& b : constraints.kernel_basis())
        if (rng.chance(0.5))
            x ^= b;

    std::vector<F2Matrix> mats;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        F2Matrix m(c.dim(d), c.dim(d));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.set(i, j, x.get(var(d, i, j)));
        mats.push_back(std::move(m));
    }
    return ChainMap(c, c, 0, std::move(mats));
}

} // namespace mlab
