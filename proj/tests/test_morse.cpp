#include <catch2/catch_amalgamated.hpp>

#include "monodromy/generators.hpp"
#include "monodromy/models.hpp"
#include "monodromy/morse.hpp"

using namespace mlab;

TEST_CASE("matching validation")
{
    // empty matching is always acyclic
    MorseData bare(models::torus().complex(), {});
    CHECK(validate_matching(bare).ok);

    // interval
    CellComplex interval({{"v0", "v1"}, {"e"}}, {{"e", "v0"}, {"e", "v1"}});
    CHECK(validate_matching(MorseData(interval, {{"v0", "e"}})).ok);

    // non-face pair is rejected outright
    CellComplex two_edges({{"v0", "v1", "v2"}, {"e0", "e1"}},
                          {{"e0", "v0"}, {"e0", "v1"}, {"e1", "v1"}, {"e1", "v2"}});
    CHECK_THROWS_AS(MorseData(two_edges, {{"v2", "e0"}}), Error);
    CHECK_THROWS_AS(MorseData(two_edges, {{"v1", "e0"}, {"v1", "e1"}}), Error);

    // two triangles glued along two edges, matched into a V-path loop
    CellComplex pillow({{"u", "v", "w"},
                        {"e0", "e1", "e2", "e3"},
                        {"T1", "T2"}},
                       {{"e0", "u"}, {"e0", "v"},
                        {"e1", "v"}, {"e1", "w"},
                        {"e2", "w"}, {"e2", "u"},
                        {"e3", "u"}, {"e3", "v"},
                        {"T1", "e0"}, {"T1", "e1"}, {"T1", "e2"},
                        {"T2", "e1"}, {"T2", "e2"}, {"T2", "e3"}});
    auto report = validate_matching(MorseData(pillow, {{"e1", "T1"}, {"e2", "T2"}}));
    REQUIRE_FALSE(report.ok);
    CHECK(report.cycle.size() >= 3);
    CHECK(report.cycle.front() == report.cycle.back());
}

TEST_CASE("Morse complexes of the standard spaces")
{
    auto circle = build_morse_complex(models::circle());
    CHECK(circle.complex.dim(0) == 1);
    CHECK(circle.complex.dim(1) == 1);
    CHECK(circle.complex.boundary(1).is_zero());
    CHECK(homology_dims(circle.complex) == std::vector<std::size_t>{1, 1});

    auto sphere = build_morse_complex(models::sphere());
    CHECK(homology_dims(sphere.complex) == std::vector<std::size_t>{1, 0, 1});
    CHECK(sphere.complex.dim(1) == 0);

    auto torus = build_morse_complex(models::torus());
    CHECK(torus.complex.dim(0) + torus.complex.dim(1) + torus.complex.dim(2) == 4);
    CHECK(homology_dims(torus.complex) == std::vector<std::size_t>{1, 2, 1});
    CHECK(homology_dims(torus.cells.chain_complex()) == std::vector<std::size_t>{1, 2, 1});

    auto rp2 = build_morse_complex(models::rp2());
    CHECK(homology_dims(rp2.complex) == std::vector<std::size_t>{1, 1, 1});

    auto klein = build_morse_complex(models::klein_bottle());
    CHECK(homology_dims(klein.complex) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("building with a cyclic matching is rejected")
{
    CellComplex pillow({{"u", "v", "w"},
                        {"e0", "e1", "e2", "e3"},
                        {"T1", "T2"}},
                       {{"e0", "u"}, {"e0", "v"},
                        {"e1", "v"}, {"e1", "w"},
                        {"e2", "w"}, {"e2", "u"},
                        {"e3", "u"}, {"e3", "v"},
                        {"T1", "e0"}, {"T1", "e1"}, {"T1", "e2"},
                        {"T2", "e1"}, {"T2", "e2"}, {"T2", "e3"}});
    CHECK_THROWS_AS(build_morse_complex(MorseData(pillow, {{"e1", "T1"}, {"e2", "T2"}})), Error);
}

TEST_CASE("continuation maps")
{
    // constant family: continuation along a = a is the homology identity
    auto a = build_morse_complex(models::circle());
    ChainMap self = continuation_map(a, a);
    Homology h(a.complex);
    for (int d = 0; d <= 1; ++d) {
        F2Matrix m = induced_matrix(self, h, h, d);
        CHECK(m == F2Matrix::identity(h.dim(d)));
    }

    // two different perfect matchings on the circle
    auto b = build_morse_complex(MorseData(models::circle().complex(), {{"v1", "e1"}}));
    ChainMap f = continuation_map(a, b);
    CHECK(is_chain_map(f).ok);
    Homology hb(b.complex);
    CHECK(induced_matrix(f, h, hb, 0).rank() == 1);
    CHECK(induced_matrix(f, h, hb, 1).rank() == 1);

    // torus: empty matching -> nontrivial matching
    auto full = build_morse_complex(models::torus());
    auto empty = build_morse_complex(MorseData(models::torus().complex(), {}));
    ChainMap g = continuation_map(empty, full);
    Homology he(empty.complex), hf(full.complex);
    for (int d = 0; d <= 2; ++d) {
        F2Matrix m = induced_matrix(g, he, hf, d);
        CHECK(m.rank() == he.dim(d));
    }

    // round trip induces the identity on homology
    ChainMap back = continuation_map(full, empty);
    ChainMap round = compose(back, g);
    for (int d = 0; d <= 2; ++d)
        CHECK(induced_matrix(round, he, he, d) == F2Matrix::identity(he.dim(d)));

    CHECK_THROWS_AS(continuation_map(a, full), Error);
}

TEST_CASE("pushforward of cell automorphisms")
{
    // identity automorphism, nontrivial matching: exactly the identity map
    auto torus = build_morse_complex(models::torus());
    CellAutomorphism ident;
    for (int d = 0; d < torus.cells.dimension_count(); ++d)
        for (const auto& l : torus.cells.labels(d))
            ident[l] = l;
    CHECK(pushforward_map(torus, ident) == ChainMap::identity(torus.complex));

    // swap of the two 1-cells on the minimal torus: a permutation matrix
    auto mini = build_morse_complex(MorseData(models::torus_minimal_cells(), {}));
    ChainMap swap = pushforward_map(mini, models::torus_swap_automorphism());
    CHECK(swap.matrix_at(1) == F2Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(swap.matrix_at(0) == F2Matrix::identity(1));

    // non-automorphism input is rejected: collapse both arcs of the circle
    auto circle = build_morse_complex(MorseData(models::circle().complex(), {}));
    CellAutomorphism bad{{"v0", "v0"}, {"v1", "v1"}, {"e0", "e0"}, {"e1", "e0"}};
    CHECK_THROWS_AS(pushforward_map(circle, bad), Error);

    // the Dehn twist has no cellular realization on the minimal torus and
    // enters as a validated chain map instead
    CHECK(is_chain_map(models::dehn_twist()).ok);
}

TEST_CASE("random acyclic matchings give valid complexes with the right homology")
{
    Rng rng(20240814);
    for (int trial = 0; trial < 20; ++trial) {
        CellComplex cx = random_simplicial_complex(rng, trial % 2 ? 3 : 2, 60);
        auto matching = random_acyclic_matching(cx, rng);
        MorseData data(cx, matching);
        REQUIRE(validate_matching(data).ok);
        // build_morse_complex internally asserts ∂² = 0, the chain-equivalence
        // identities, and cellular/Morse homology agreement
        auto mc = build_morse_complex(data);
        CHECK(mc.complex.validate().ok);
        CHECK(homology_dims(mc.complex) == homology_dims(cx.chain_complex()));
        CHECK(mc.complex.dim(0) + mc.complex.dim(1) + mc.complex.dim(2) + mc.complex.dim(3) ==
              cx.total_cells() - 2 * matching.size());
    }
}
