/*
 * Mapping-cone model of a fiber bundle over the circle with monodromy.
 *
 * Given the fiber complexes over the two marked points and the two
 * continuation maps Φ, Φ^g between them, the total-space complex is the
 * cone of Φ + Φ^g:
 *
 *     Cone_d = Minus_d ⊕ Plus_{d-1},  ∂(x,y) = (∂x + Φy + Φ^g y, ∂y),
 *
 * with the long exact sequence ... -> H(plus) -k-> H(minus) -i-> H(cone)
 * -j-> H(plus)[-1] -> ... . Homological monodromy is trivial exactly when
 * i is injective in every degree.
 */

#pragma once

#include "monodromy/chain_complex.hpp"

#include <string>
#include <vector>

namespace mlab {

struct WangComplex {
    ChainComplex minus, plus;
    ChainMap phi, phi_g; // plus -> minus
    ChainComplex cone;
    ChainMap i; // minus -> cone,  x -> (x, 0)
    ChainMap j; // cone -> plus[-1],  (x, y) -> y
    ChainMap k; // plus -> minus,  y -> Φy + Φ^g y
};

/// Assemble the cone; rejects (with the witness square) when Φ + Φ^g fails
/// to be a chain map, which is exactly when ∂∘∂ would fail on the cone.
inline WangComplex build_wang(const ChainComplex& minus, const ChainComplex& plus,
                              const ChainMap& phi, const ChainMap& phi_g)
{
    for (const ChainMap* f : {&phi, &phi_g}) {
        if (!(f->source == plus) || !(f->target == minus))
            throw Error("Φ and Φ^g must map the plus fiber complex to the minus one");
        if (f->degree_shift != 0)
            throw Error("Φ and Φ^g must preserve degree");
    }
    ChainMap sum = add(phi, phi_g);
    if (auto r = is_chain_map(sum); !r.ok)
        throw Error("cone boundary fails ∂∘∂ = 0 because Φ + Φ^g is not a chain map: " +
                    r.detail);

    WangComplex w;
    w.minus = minus;
    w.plus = plus;
    w.phi = phi;
    w.phi_g = phi_g;
    w.cone = mapping_cone(sum);
    if (auto v = w.cone.validate(); !v.ok)
        throw Error("cone complex invalid: " + v.violation->detail);
    w.i = cone_inclusion(sum, w.cone);
    w.j = cone_projection(sum, w.cone);
    w.k = sum;
    return w;
}

struct MonodromyVerdict {
    bool trivial = true;
    int witness_degree = 0;
    F2Vec witness_chain;              // a cycle in the minus complex
    std::string witness;              // rendered witness class
    std::vector<std::size_t> betti_minus, betti_cone;
};

/// Monodromy is trivial iff i_* : H(minus) -> H(cone) is injective in every
/// degree; on failure a homology class in ker i_* is produced.
inline MonodromyVerdict monodromy_trivial_via_i(const WangComplex& w)
{
    Homology hm(w.minus), hc(w.cone);
    MonodromyVerdict v;
    v.betti_minus = hm.dims();
    v.betti_cone = hc.dims();
    for (int d = w.minus.min_degree(); d <= w.minus.max_degree(); ++d) {
        F2Matrix m = induced_matrix(w.i, hm, hc, d);
        auto kernel = m.kernel_basis();
        if (!kernel.empty()) {
            v.trivial = false;
            v.witness_degree = d;
            v.witness_chain = hm.chain_of(d, kernel.front());
            v.witness = chain_to_string(w.minus, d, v.witness_chain);
            return v;
        }
    }
    return v;
}

/// Direct check through the identification of the two fibers: with Φ_* an
/// isomorphism, (Φ^g ∘ Φ^{-1})_* = Id is equivalent to (Φ^g)_* = Φ_*.
inline bool monodromy_trivial_direct(const WangComplex& w)
{
    if (!(w.minus == w.plus))
        throw Error("direct monodromy check needs identified fiber complexes");
    Homology h(w.minus);
    for (int d = w.minus.min_degree(); d <= w.minus.max_degree(); ++d) {
        F2Matrix a = induced_matrix(w.phi, h, h, d);
        if (a.rank() != a.rows())
            throw Error("identification unavailable: Φ_* is not invertible at degree " +
                        std::to_string(d));
        F2Matrix b = induced_matrix(w.phi_g, h, h, d);
        if (!(a == b))
            return false;
    }
    return true;
}

struct WangExactnessReport {
    bool ok = true;
    int degree = 0;
    std::string position; // "minus", "cone" or "plus"
};

/// Exactness of k -> i -> j -> k at all three positions, every degree.
inline WangExactnessReport verify_wang_exactness(const WangComplex& w)
{
    Homology hm(w.minus), hp(w.plus), hc(w.cone);
    auto exact_at = [](const F2Matrix& m_in, const F2Matrix& m_out) {
        return (m_out * m_in).is_zero() && m_in.rank() == m_in.rows() - m_out.rank();
    };
    for (int d = w.cone.min_degree() - 1; d <= w.cone.max_degree() + 1; ++d) {
        // at H_d(minus): im k = ker i
        if (!exact_at(induced_matrix(w.k, hp, hm, d), induced_matrix(w.i, hm, hc, d)))
            return {false, d, "minus"};
        // at H_d(cone): im i = ker j
        if (!exact_at(induced_matrix(w.i, hm, hc, d), induced_matrix(w.j, hc, hp, d)))
            return {false, d, "cone"};
        // at H_d(plus): im j (from degree d+1) = ker k
        if (!exact_at(induced_matrix(w.j, hc, hp, d + 1), induced_matrix(w.k, hp, hm, d)))
            return {false, d, "plus"};
    }
    return {};
}

} // namespace mlab
