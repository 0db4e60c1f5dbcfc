#include <catch2/catch_amalgamated.hpp>

#include "monodromy/omega.hpp"

#include <random>

using namespace mlab;

namespace {

OmegaElement t(long long p, long long q = 1) { return OmegaElement::monomial(Rational(p, q)); }

OmegaElement random_element(std::mt19937_64& rng)
{
    std::vector<Rational> exps;
    std::size_t n = rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
        long long p = static_cast<long long>(rng() % 9) - 4;
        long long q = 1 + static_cast<long long>(rng() % 4);
        exps.emplace_back(p, q);
    }
    return OmegaElement::from_exponents(std::move(exps));
}

} // namespace

TEST_CASE("addition in characteristic 2")
{
    CHECK((t(1) + t(1)).is_zero());
    CHECK(t(0) + OmegaElement::zero() == t(0));

    // (T^{1/2} + T^2) + (T^2 + T^{-1}) = T^{-1} + T^{1/2}
    OmegaElement a = t(1, 2) + t(2);
    OmegaElement b = t(2) + t(-1);
    OmegaElement expect = t(-1) + t(1, 2);
    CHECK(a + b == expect);
}

TEST_CASE("multiplication convolves exponents")
{
    CHECK(t(3, 2) * t(1, 2) == t(2));
    CHECK((t(1) + t(-1)) * t(1) == t(2) + t(0));
    // cross terms 2*T^1 vanish mod 2
    OmegaElement s = t(0) + t(1);
    CHECK(s * s == t(0) + t(2));
}

TEST_CASE("projections keep the stated terms, with 0 in both")
{
    OmegaElement x = t(-2) + t(0) + t(3);
    CHECK(x.proj_nonneg() == t(0) + t(3));
    CHECK(x.proj_nonpos() == t(-2) + t(0));
    CHECK(OmegaElement::zero().proj_nonneg().is_zero());
    CHECK(t(-1, 3).proj_nonneg().is_zero());
    CHECK(t(0).proj_nonpos() == t(0));
    CHECK(t(5).proj_nonpos().is_zero());
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(20240812);
    for (int trial = 0; trial < 300; ++trial) {
        OmegaElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + OmegaElement::zero() == a);
        CHECK(a * OmegaElement::one() == a);
        CHECK((a + a).is_zero()); // every element is its own inverse
    }
}

TEST_CASE("projections are idempotent, linear, and sum to Id plus the T^0 slice")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        OmegaElement a = random_element(rng), b = random_element(rng);
        CHECK(a.proj_nonneg().proj_nonneg() == a.proj_nonneg());
        CHECK(a.proj_nonpos().proj_nonpos() == a.proj_nonpos());
        CHECK((a + b).proj_nonneg() == a.proj_nonneg() + b.proj_nonneg());
        CHECK((a + b).proj_nonpos() == a.proj_nonpos() + b.proj_nonpos());

        OmegaElement zero_part =
            a.coefficient(Rational(0)) ? OmegaElement::one() : OmegaElement::zero();
        CHECK(a.proj_nonneg() + a.proj_nonpos() == a + zero_part);
    }
}

TEST_CASE("text round-trip")
{
    std::mt19937_64 rng(5);
    CHECK(OmegaElement::zero().to_string() == "0");
    CHECK(t(0).to_string() == "T^0");
    CHECK((t(-1, 2) + t(3)).to_string() == "T^(-1/2) + T^3");
    for (int trial = 0; trial < 100; ++trial) {
        OmegaElement a = random_element(rng);
        CHECK(OmegaElement::parse(a.to_string()) == a);
    }
    CHECK_THROWS_AS(OmegaElement::parse("T^"), Error);
    CHECK_THROWS_AS(OmegaElement::parse("1 + T^0"), Error);
}
