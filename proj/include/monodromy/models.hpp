/*
 * Small standard spaces used by the bundled fixtures, the self test and the
 * verification suites. Incidence is mod 2 throughout, so non-regular CW
 * structures (projective plane, Klein bottle) enter through their mod-2
 * boundary data.
 */

#pragma once

#include "monodromy/morse.hpp"

namespace mlab::models {

/// Circle: two vertices, two arcs; matching leaves one cell per dimension.
inline MorseData circle()
{
    CellComplex cx({{"v0", "v1"}, {"e0", "e1"}},
                   {{"e0", "v0"}, {"e0", "v1"}, {"e1", "v0"}, {"e1", "v1"}});
    return MorseData(cx, {{"v0", "e0"}});
}

/// Sphere: two vertices, two arcs, two hemispheres; the matching leaves the
/// minimum and the maximum.
inline MorseData sphere()
{
    CellComplex cx({{"v0", "v1"}, {"e0", "e1"}, {"f0", "f1"}},
                   {{"e0", "v0"},
                    {"e0", "v1"},
                    {"e1", "v0"},
                    {"e1", "v1"},
                    {"f0", "e0"},
                    {"f0", "e1"},
                    {"f1", "e0"},
                    {"f1", "e1"}});
    return MorseData(cx, {{"v0", "e0"}, {"e1", "f0"}});
}

/// Torus as S¹(2 cells per dim) × S¹(minimal): 2 vertices, 4 edges, 2 faces.
/// Labels: x_i vertices, a_i the arcs of the first circle crossed with the
/// base vertex, b_i the vertical edges, f_i = a_i × fiber.
inline MorseData torus()
{
    CellComplex cx({{"x0", "x1"}, {"a0", "a1", "b0", "b1"}, {"f0", "f1"}},
                   {
                       {"a0", "x0"},
                       {"a0", "x1"},
                       {"a1", "x0"},
                       {"a1", "x1"},
                       // b_i = x_i × fiber loop: both endpoints at x_i, so the
                       // mod-2 boundary vanishes
                       {"f0", "b0"},
                       {"f0", "b1"},
                       {"f1", "b0"},
                       {"f1", "b1"},
                   });
    return MorseData(cx, {{"x1", "a0"}, {"b0", "f0"}});
}

/// Projective plane: disc with antipodal boundary identification, the
/// boundary circle subdivided into two arcs. ∂f = 2(e0+e1) = 0 mod 2.
inline MorseData rp2()
{
    CellComplex cx({{"v0", "v1"}, {"e0", "e1"}, {"f"}},
                   {{"e0", "v0"}, {"e0", "v1"}, {"e1", "v0"}, {"e1", "v1"}});
    return MorseData(cx, {{"v1", "e1"}});
}

/// Klein bottle: square word a b a b^{-1} with the a-loop subdivided at a
/// midpoint m; ∂f = 2(a0+a1+b) = 0 mod 2.
inline MorseData klein_bottle()
{
    CellComplex cx({{"v", "m"}, {"a0", "a1", "b"}, {"f"}},
                   {{"a0", "v"}, {"a0", "m"}, {"a1", "v"}, {"a1", "m"}});
    return MorseData(cx, {{"m", "a1"}});
}

/// Minimal torus model: one vertex, the two 1-cells a and b, one face;
/// every boundary vanishes over Z2.
inline ChainComplex torus_minimal()
{
    return ChainComplex(0, {{"v"}, {"a", "b"}, {"f"}}, {F2Matrix(1, 2), F2Matrix(2, 1)});
}

/// The same cells as a CellComplex (all incidence numbers even).
inline CellComplex torus_minimal_cells()
{
    return CellComplex({{"v"}, {"a", "b"}, {"f"}}, {});
}

/// Dehn twist action on the minimal torus: a -> a, b -> a + b.
inline ChainMap dehn_twist(const ChainComplex& torus = torus_minimal())
{
    std::vector<F2Matrix> mats{F2Matrix::identity(1),
                               F2Matrix::from_rows({{1, 1}, {0, 1}}),
                               F2Matrix::identity(1)};
    return ChainMap(torus, torus, 0, std::move(mats));
}

/// Swap of the two 1-cells on the minimal torus, as a cell automorphism.
inline CellAutomorphism torus_swap_automorphism()
{
    return {{"v", "v"}, {"a", "b"}, {"b", "a"}, {"f", "f"}};
}

/// Circle as a minimal chain complex (one vertex, one edge).
inline ChainComplex circle_minimal()
{
    return ChainComplex(0, {{"v"}, {"e"}}, {F2Matrix(1, 1)});
}

} // namespace mlab::models
