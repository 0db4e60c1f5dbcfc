#include <catch2/catch_amalgamated.hpp>

#include "monodromy/generators.hpp"
#include "monodromy/models.hpp"
#include "monodromy/wang.hpp"

using namespace mlab;

namespace {

WangComplex dehn_twist_wang()
{
    ChainComplex t = models::torus_minimal();
    return build_wang(t, t, ChainMap::identity(t), models::dehn_twist(t));
}

WangComplex trivial_wang()
{
    ChainComplex t = models::torus_minimal();
    return build_wang(t, t, ChainMap::identity(t), ChainMap::identity(t));
}

} // namespace

TEST_CASE("cone Betti numbers for trivial and twisted monodromy")
{
    // Φ = Φ^g: the connecting map cancels and the cone is a direct sum,
    // matching the product S¹ × T².
    WangComplex trivial = trivial_wang();
    CHECK(homology_dims(trivial.cone) == std::vector<std::size_t>{1, 3, 3, 1});

    WangComplex twist = dehn_twist_wang();
    CHECK(homology_dims(twist.cone) == std::vector<std::size_t>{1, 2, 2, 1});

    // circle fiber with identity monodromy: the total space is the torus
    ChainComplex c = models::circle_minimal();
    WangComplex circle = build_wang(c, c, ChainMap::identity(c), ChainMap::identity(c));
    CHECK(homology_dims(circle.cone) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("build_wang rejects non-chain-map data with a witness")
{
    // a target with nonzero boundary and a map that ignores it
    ChainComplex rp2 = models::rp2().complex().chain_complex();
    std::vector<F2Matrix> mats{F2Matrix(2, 2), F2Matrix(2, 2), F2Matrix(1, 1)};
    mats[1].set(0, 0, true); // e0 -> e0 in degree 1, nothing else: ∂f + f∂ != 0
    ChainMap broken(rp2, rp2, 0, std::move(mats));
    REQUIRE_FALSE(is_chain_map(broken).ok);
    CHECK_THROWS_WITH(build_wang(rp2, rp2, ChainMap::identity(rp2), broken),
                      Catch::Matchers::ContainsSubstring("not a chain map"));
}

TEST_CASE("monodromy verdict via the inclusion")
{
    CHECK(monodromy_trivial_via_i(trivial_wang()).trivial);

    MonodromyVerdict v = monodromy_trivial_via_i(dehn_twist_wang());
    REQUIRE_FALSE(v.trivial);
    CHECK(v.witness_degree == 1);
    CHECK(v.witness == "a"); // ker i_* = im k_*, and (Id + twist) hits exactly a

    // nothing to map in: plus fiber has no cells
    ChainComplex t = models::torus_minimal();
    ChainComplex empty(0, {{}, {}, {}}, {F2Matrix(0, 0), F2Matrix(0, 0)});
    WangComplex w = build_wang(t, empty, ChainMap::zero(empty, t), ChainMap::zero(empty, t));
    CHECK(monodromy_trivial_via_i(w).trivial);
}

TEST_CASE("direct monodromy verdict")
{
    CHECK(monodromy_trivial_direct(trivial_wang()));
    CHECK_FALSE(monodromy_trivial_direct(dehn_twist_wang()));

    // a <-> b swap: permutation differs from the identity on H_1
    ChainComplex t = models::torus_minimal();
    auto mini = build_morse_complex(MorseData(models::torus_minimal_cells(), {}));
    ChainMap swap = pushforward_map(mini, models::torus_swap_automorphism());
    ChainMap swap_on_t(t, t, 0, swap.matrices);
    CHECK_FALSE(monodromy_trivial_direct(build_wang(t, t, ChainMap::identity(t), swap_on_t)));

    // Φ = Φ^g with Φ the twist: composition with the inverse is the identity
    WangComplex odd = build_wang(t, t, models::dehn_twist(t), models::dehn_twist(t));
    CHECK(monodromy_trivial_direct(odd));

    // no identification when the fibers differ
    ChainComplex empty(0, {{}, {}, {}}, {F2Matrix(0, 0), F2Matrix(0, 0)});
    WangComplex mismatched =
        build_wang(t, empty, ChainMap::zero(empty, t), ChainMap::zero(empty, t));
    CHECK_THROWS_AS(monodromy_trivial_direct(mismatched), Error);
}

TEST_CASE("Wang exactness on the fixtures")
{
    CHECK(verify_wang_exactness(trivial_wang()).ok);
    CHECK(verify_wang_exactness(dehn_twist_wang()).ok); // exact regardless of monodromy
}

TEST_CASE("swapping phi and phi_g relabels the same cone")
{
    ChainComplex t = models::torus_minimal();
    WangComplex a = build_wang(t, t, ChainMap::identity(t), models::dehn_twist(t));
    WangComplex b = build_wang(t, t, models::dehn_twist(t), ChainMap::identity(t));
    for (int d = a.cone.min_degree(); d <= a.cone.max_degree(); ++d)
        CHECK(a.cone.boundary(d) == b.cone.boundary(d));
}

TEST_CASE("random instances: exactness and the equivalence of the two verdicts")
{
    Rng rng(20240815);
    int trials = 25;
    for (int trial = 0; trial < trials; ++trial) {
        CellComplex cx = random_simplicial_complex(rng, 2, 40);
        MorseData data(cx, random_acyclic_matching(cx, rng));
        ChainComplex fiber = build_morse_complex(data).complex;

        ChainMap phi = (trial % 2) ? ChainMap::identity(fiber)
                                   : add(ChainMap::identity(fiber),
                                         random_null_homotopic(fiber, rng));
        ChainMap phi_g = random_chain_selfmap(fiber, rng);
        REQUIRE(is_chain_map(phi_g).ok);

        WangComplex w = build_wang(fiber, fiber, phi, phi_g);
        CHECK(verify_wang_exactness(w).ok);
        CHECK(monodromy_trivial_via_i(w).trivial == monodromy_trivial_direct(w));
    }
}
