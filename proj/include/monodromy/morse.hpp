/*
 * Discrete Morse theory on mod-2 cell complexes.
 *
 * An acyclic matching (discrete gradient field) plays the role of a
 * Morse-Smale pair: unmatched cells are the critical points, cell dimension
 * is the index, and the boundary operator counts gradient V-paths between
 * critical cells mod 2. Alongside the Morse complex we build the standard
 * chain equivalences
 *
 *     inclusion  ι : Morse -> cellular,   retraction π : cellular -> Morse,
 *
 * with π∘ι = Id and ι∘π = Id + ∂h + h∂ for the gradient homotopy h. All
 * four maps are path counts in the matching's modified Hasse diagram; the
 * identities are verified on every build, so a broken matching cannot
 * produce a silently wrong complex.
 */

#pragma once

#include "monodromy/cell_complex.hpp"
#include "monodromy/chain_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mlab {

struct MatchingPair {
    std::string lower, upper; // (σ^k, τ^{k+1}), σ a face of τ
    bool operator==(const MatchingPair&) const = default;
};

enum class CellRole { critical, matched_up, matched_down };

class MorseData {
public:
    MorseData() = default;

    MorseData(CellComplex complex, std::vector<MatchingPair> matching)
        : complex_(std::move(complex)), matching_(std::move(matching))
    {
        roles_.resize(complex_.dimension_count());
        partner_.resize(complex_.dimension_count());
        for (int d = 0; d < complex_.dimension_count(); ++d) {
            roles_[d].assign(complex_.count(d), CellRole::critical);
            partner_[d].assign(complex_.count(d), 0);
        }
        for (const auto& pair : matching_) {
            CellComplex::Cell lo = complex_.cell(pair.lower);
            CellComplex::Cell hi = complex_.cell(pair.upper);
            if (!complex_.is_face(lo, hi))
                throw Error("matching pair ('" + pair.lower + "', '" + pair.upper +
                            "') is not a face-coface pair");
            if (roles_[lo.dim][lo.index] != CellRole::critical ||
                roles_[hi.dim][hi.index] != CellRole::critical)
                throw Error("cell matched twice in pair ('" + pair.lower + "', '" + pair.upper +
                            "')");
            roles_[lo.dim][lo.index] = CellRole::matched_up;
            roles_[hi.dim][hi.index] = CellRole::matched_down;
            partner_[lo.dim][lo.index] = hi.index;
            partner_[hi.dim][hi.index] = lo.index;
        }
    }

    const CellComplex& complex() const { return complex_; }
    const std::vector<MatchingPair>& matching() const { return matching_; }

    CellRole role(int dim, std::size_t index) const { return roles_[dim][index]; }

    /// For a matched_up k-cell: index of its partner in dimension k+1.
    std::size_t partner_above(int dim, std::size_t index) const { return partner_[dim][index]; }
    /// For a matched_down k-cell: index of its partner in dimension k-1.
    std::size_t partner_below(int dim, std::size_t index) const { return partner_[dim][index]; }

    /// One-step V-path successors of a matched_up k-cell: the other
    /// matched_up faces of its partner.
    std::vector<std::size_t> vpath_successors(int dim, std::size_t index) const
    {
        std::vector<std::size_t> out;
        std::size_t tau = partner_above(dim, index);
        for (std::size_t f : complex_.faces({dim + 1, tau}))
            if (f != index && roles_[dim][f] == CellRole::matched_up)
                out.push_back(f);
        return out;
    }

private:
    CellComplex complex_;
    std::vector<MatchingPair> matching_;
    std::vector<std::vector<CellRole>> roles_;
    std::vector<std::vector<std::size_t>> partner_;
};

struct MatchingReport {
    bool ok = true;
    std::vector<std::string> cycle; // labels of the lower cells along a V-cycle
};

/// Acyclicity check: the V-path relation on matched_up cells has no loop.
/// On failure one offending cycle is returned.
inline MatchingReport validate_matching(const MorseData& d)
{
    const CellComplex& cx = d.complex();
    for (int dim = 0; dim < cx.dimension_count(); ++dim) {
        std::size_t n = cx.count(dim);
        std::vector<int> color(n, 0); // 0 unvisited, 1 on path, 2 done
        std::vector<std::size_t> path;
        for (std::size_t start = 0; start < n; ++start) {
            if (d.role(dim, start) != CellRole::matched_up || color[start])
                continue;
            // iterative DFS carrying the current path for cycle extraction
            std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
            color[start] = 1;
            path = {start};
            while (!stack.empty()) {
                auto& [cell, edge] = stack.back();
                auto succ = d.vpath_successors(dim, cell);
                if (edge == succ.size()) {
                    color[cell] = 2;
                    stack.pop_back();
                    path.pop_back();
                    continue;
                }
                std::size_t next = succ[edge++];
                if (color[next] == 1) {
                    MatchingReport r;
                    r.ok = false;
                    auto it = std::find(path.begin(), path.end(), next);
                    for (; it != path.end(); ++it)
                        r.cycle.push_back(cx.label({dim, *it}));
                    r.cycle.push_back(cx.label({dim, next}));
                    return r;
                }
                if (color[next] == 0) {
                    color[next] = 1;
                    path.push_back(next);
                    stack.push_back({next, 0});
                }
            }
        }
    }
    return {};
}

struct MorseComplex {
    ChainComplex complex;   // generators: the critical cells, graded by dimension
    CellComplex cells;      // the underlying complex
    std::vector<MatchingPair> matching;
    ChainMap inclusion;     // complex -> cellular chains
    ChainMap retraction;    // cellular chains -> complex
    ChainHomotopy homotopy; // cellular homotopy: ι∘π + Id = ∂h + h∂
};

namespace detail {

/// Post-order of the matched_up cells of one dimension (successors first).
inline std::vector<std::size_t> vpath_postorder(const MorseData& d, int dim)
{
    const CellComplex& cx = d.complex();
    std::size_t n = cx.count(dim);
    std::vector<int> color(n, 0);
    std::vector<std::size_t> order;
    for (std::size_t start = 0; start < n; ++start) {
        if (d.role(dim, start) != CellRole::matched_up || color[start])
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [cell, edge] = stack.back();
            auto succ = d.vpath_successors(dim, cell);
            if (edge == succ.size()) {
                color[cell] = 2;
                order.push_back(cell);
                stack.pop_back();
                continue;
            }
            std::size_t next = succ[edge++];
            if (color[next] == 1)
                throw Error("V-path cycle encountered; matching not validated?");
            if (color[next] == 0) {
                color[next] = 1;
                stack.push_back({next, 0});
            }
        }
    }
    return order;
}

} // namespace detail

/// Build the Morse chain complex plus the cellular chain equivalences.
/// Throws when the matching is not acyclic.
inline MorseComplex build_morse_complex(const MorseData& d)
{
    auto matching_report = validate_matching(d);
    if (!matching_report.ok) {
        std::string cycle;
        for (const auto& l : matching_report.cycle)
            cycle += (cycle.empty() ? "" : " -> ") + l;
        throw Error("matching is not acyclic; V-path cycle: " + cycle);
    }

    const CellComplex& cx = d.complex();
    int dims = cx.dimension_count();

    // critical cells per dimension
    std::vector<std::vector<std::size_t>> crit(dims);
    std::vector<std::vector<std::size_t>> crit_index(dims);
    for (int k = 0; k < dims; ++k) {
        crit_index[k].assign(cx.count(k), static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < cx.count(k); ++i)
            if (d.role(k, i) == CellRole::critical) {
                crit_index[k][i] = crit[k].size();
                crit[k].push_back(i);
            }
    }

    // flow_down[k][cell]: mod-2 count of V-paths from a k-cell down to each
    // critical k-cell (the retraction columns)
    std::vector<std::vector<F2Vec>> flow(dims);
    for (int k = 0; k < dims; ++k) {
        flow[k].assign(cx.count(k), F2Vec(crit[k].size()));
        for (std::size_t i = 0; i < cx.count(k); ++i)
            if (d.role(k, i) == CellRole::critical)
                flow[k][i].set(crit_index[k][i], true);
        for (std::size_t a : detail::vpath_postorder(d, k)) {
            F2Vec acc(crit[k].size());
            std::size_t tau = d.partner_above(k, a);
            for (std::size_t f : cx.faces({k + 1, tau}))
                if (f != a)
                    acc ^= flow[k][f];
            flow[k][a] = std::move(acc);
        }
    }

    // Morse boundary: flow the faces of each critical cell
    std::vector<F2Matrix> boundaries;
    for (int k = 1; k < dims; ++k) {
        F2Matrix b(crit[k - 1].size(), crit[k].size());
        for (std::size_t j = 0; j < crit[k].size(); ++j) {
            F2Vec acc(crit[k - 1].size());
            for (std::size_t f : cx.faces({k, crit[k][j]}))
                acc ^= flow[k - 1][f];
            b.set_column(j, acc);
        }
        boundaries.push_back(std::move(b));
    }

    std::vector<std::vector<std::string>> gens(dims);
    for (int k = 0; k < dims; ++k)
        for (std::size_t i : crit[k])
            gens[k].push_back(cx.label({k, i}));
    ChainComplex morse(0, gens, std::move(boundaries));

    const ChainComplex& cellular = cx.chain_complex();

    std::vector<F2Matrix> pi_mats;
    for (int k = 0; k < dims; ++k) {
        F2Matrix m(crit[k].size(), cx.count(k));
        for (std::size_t i = 0; i < cx.count(k); ++i)
            m.set_column(i, flow[k][i]);
        pi_mats.push_back(std::move(m));
    }
    ChainMap retraction(cellular, morse, 0, std::move(pi_mats));

    // Inclusion: spread a critical cell upward through the gradient.
    // cnt(a) = mod-2 number of V-paths from the faces of t into the
    // matched_up (k-1)-cell a; each a with cnt 1 contributes its partner.
    std::vector<std::vector<std::size_t>> forward_order(dims);
    for (int k = 0; k < dims; ++k) {
        forward_order[k] = detail::vpath_postorder(d, k);
        std::reverse(forward_order[k].begin(), forward_order[k].end());
    }
    auto propagate_up = [&](int k, F2Vec seeds) {
        // seeds live on matched_up k-cells; returns path-count parities
        for (std::size_t a : forward_order[k])
            if (seeds.get(a))
                for (std::size_t nxt : d.vpath_successors(k, a))
                    seeds.flip(nxt);
        return seeds;
    };

    std::vector<F2Matrix> iota_mats;
    for (int k = 0; k < dims; ++k) {
        F2Matrix m(cx.count(k), crit[k].size());
        for (std::size_t j = 0; j < crit[k].size(); ++j) {
            std::size_t t = crit[k][j];
            F2Vec col(cx.count(k));
            col.set(t, true);
            if (k > 0) {
                F2Vec seeds(cx.count(k - 1));
                for (std::size_t f : cx.faces({k, t}))
                    if (d.role(k - 1, f) == CellRole::matched_up)
                        seeds.flip(f);
                F2Vec cnt = propagate_up(k - 1, std::move(seeds));
                for (std::size_t a = 0; a < cx.count(k - 1); ++a)
                    if (cnt.get(a) && d.role(k - 1, a) == CellRole::matched_up)
                        col.flip(d.partner_above(k - 1, a));
            }
            m.set_column(j, col);
        }
        iota_mats.push_back(std::move(m));
    }
    ChainMap inclusion(morse, cellular, 0, std::move(iota_mats));

    // Gradient homotopy: h(x) = Σ (V-paths x -> a) · partner(a) for
    // matched_up x, zero elsewhere.
    std::vector<F2Matrix> h_mats;
    for (int k = 0; k < dims; ++k) {
        F2Matrix m(cx.count(k + 1), cx.count(k));
        for (std::size_t x = 0; x < cx.count(k); ++x) {
            if (d.role(k, x) != CellRole::matched_up)
                continue;
            F2Vec seeds(cx.count(k));
            seeds.set(x, true);
            F2Vec cnt = propagate_up(k, std::move(seeds));
            F2Vec col(cx.count(k + 1));
            for (std::size_t a = 0; a < cx.count(k); ++a)
                if (cnt.get(a) && d.role(k, a) == CellRole::matched_up)
                    col.flip(d.partner_above(k, a));
            m.set_column(x, col);
        }
        h_mats.push_back(std::move(m));
    }
    ChainHomotopy homotopy(cellular, cellular, std::move(h_mats));

    MorseComplex out{std::move(morse), cx, d.matching(), std::move(inclusion),
                     std::move(retraction), std::move(homotopy)};

    // Every build is checked against the theory it implements.
    if (auto v = out.complex.validate(); !v.ok)
        throw Error("Morse boundary fails ∂∘∂ = 0: " + v.violation->detail);
    if (auto r = is_chain_map(out.retraction); !r.ok)
        throw Error("Morse retraction is not a chain map: " + r.detail);
    if (auto r = is_chain_map(out.inclusion); !r.ok)
        throw Error("Morse inclusion is not a chain map: " + r.detail);
    if (!(compose(out.retraction, out.inclusion) == ChainMap::identity(out.complex)))
        throw Error("Morse retraction ∘ inclusion is not the identity");
    ChainMap round_trip = compose(out.inclusion, out.retraction);
    auto hi = check_homotopy_identity({round_trip, ChainMap::identity(cellular)}, out.homotopy);
    if (!hi.ok)
        throw Error("gradient homotopy identity fails: " + hi.detail);
    if (homology_dims(out.complex) != homology_dims(cellular))
        throw Error("Morse homology differs from cellular homology");

    return out;
}

/// Chain map MC(a) -> MC(b) for two matchings on the same complex;
/// always a homology isomorphism (verified).
inline ChainMap continuation_map(const MorseComplex& a, const MorseComplex& b)
{
    if (!(a.cells == b.cells))
        throw Error("continuation map needs matchings on the same underlying complex");
    ChainMap f = compose(b.retraction, a.inclusion);
    Homology ha(a.complex), hb(b.complex);
    for (int k = a.complex.min_degree(); k <= a.complex.max_degree(); ++k) {
        F2Matrix m = induced_matrix(f, ha, hb, k);
        if (m.rows() != m.cols() || m.rank() != m.rows())
            throw Error("continuation map is not a homology isomorphism at degree " +
                        std::to_string(k));
    }
    return f;
}

using CellAutomorphism = std::map<std::string, std::string>;

/// Chain self-map of MC(d) realizing a cellular automorphism followed by
/// the continuation back (π ∘ g ∘ ι).
inline ChainMap pushforward_map(const MorseComplex& d, const CellAutomorphism& g)
{
    const CellComplex& cx = d.cells;
    if (g.size() != cx.total_cells())
        throw Error("automorphism must map every cell exactly once");
    // bijectivity and dimension preservation
    std::vector<std::vector<bool>> hit(cx.dimension_count());
    for (int k = 0; k < cx.dimension_count(); ++k)
        hit[k].assign(cx.count(k), false);
    for (const auto& [from, to] : g) {
        CellComplex::Cell src = cx.cell(from);
        CellComplex::Cell dst = cx.cell(to);
        if (src.dim != dst.dim)
            throw Error("automorphism does not preserve dimension at '" + from + "'");
        if (hit[dst.dim][dst.index])
            throw Error("automorphism is not injective at '" + to + "'");
        hit[dst.dim][dst.index] = true;
    }
    // incidence preservation
    for (int k = 1; k < cx.dimension_count(); ++k)
        for (std::size_t i = 0; i < cx.count(k); ++i) {
            CellComplex::Cell img = cx.cell(g.at(cx.label({k, i})));
            std::vector<std::size_t> mapped;
            for (std::size_t f : cx.faces({k, i}))
                mapped.push_back(cx.cell(g.at(cx.label({k - 1, f}))).index);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != cx.faces(img))
                throw Error("map is not a cell-complex automorphism: incidence broken at '" +
                            cx.label({k, i}) + "'");
        }

    const ChainComplex& cellular = cx.chain_complex();
    std::vector<F2Matrix> mats;
    for (int k = 0; k < cx.dimension_count(); ++k) {
        F2Matrix m(cx.count(k), cx.count(k));
        for (std::size_t i = 0; i < cx.count(k); ++i)
            m.set(cx.cell(g.at(cx.label({k, i}))).index, i, true);
        mats.push_back(std::move(m));
    }
    ChainMap perm(cellular, cellular, 0, std::move(mats));
    return compose(d.retraction, compose(perm, d.inclusion));
}

} // namespace mlab
