#include <catch2/catch_amalgamated.hpp>

#include "monodromy/f2.hpp"

#include <random>

using namespace mlab;

namespace {

// Independent rank oracle: the rank of a set of rows over Z2 is log2 of the
// number of distinct vectors in their span, found by exhaustive enumeration.
std::size_t rank_by_enumeration(const F2Matrix& m)
{
    std::vector<F2Vec> span{F2Vec(m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<F2Vec> next = span;
        for (const auto& v : span) {
            F2Vec w = v ^ m.row(i);
            if (std::find(next.begin(), next.end(), w) == next.end())
                next.push_back(w);
        }
        span = std::move(next);
    }
    std::size_t r = 0;
    while ((std::size_t(1) << r) < span.size())
        ++r;
    return r;
}

// Independent kernel oracle: enumerate all 2^cols vectors.
std::vector<F2Vec> kernel_by_enumeration(const F2Matrix& m)
{
    std::vector<F2Vec> out;
    for (std::size_t bits = 0; bits < (std::size_t(1) << m.cols()); ++bits) {
        F2Vec v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.set(j, (bits >> j) & 1);
        if (m.mul_vec(v).is_zero())
            out.push_back(v);
    }
    return out;
}

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rng() & 1);
    return m;
}

} // namespace

TEST_CASE("rank on pinned examples")
{
    CHECK(F2Matrix::from_rows({{1, 1}, {0, 1}}).rank() == 2);
    CHECK(F2Matrix(3, 4).rank() == 0);

    // expected value frozen from the enumeration oracle
    F2Matrix ones = F2Matrix::from_rows({{1, 1}, {1, 1}});
    CHECK(rank_by_enumeration(ones) == 1);
    CHECK(ones.rank() == 1);
}

TEST_CASE("kernel_basis on pinned examples")
{
    CHECK(F2Matrix::identity(2).kernel_basis().empty());

    auto k1 = F2Matrix::from_rows({{1, 1}}).kernel_basis();
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].get(0));
    CHECK(k1[0].get(1));

    // oracle: of the 8 vectors in F2^3 exactly {0, (1,1,1)} lie in the kernel
    F2Matrix m = F2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    auto all = kernel_by_enumeration(m);
    REQUIRE(all.size() == 2);
    auto basis = m.kernel_basis();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == all[1]);
    CHECK(basis[0].popcount() == 3);
}

TEST_CASE("compose on pinned examples")
{
    F2Matrix m = F2Matrix::from_rows({{1, 0, 1}, {1, 1, 0}});
    CHECK(F2Matrix::identity(2) * m == m);
    CHECK(m * F2Matrix(3, 2) == F2Matrix(2, 2));

    // Dehn twist matrix squared is the identity over Z2
    F2Matrix t = F2Matrix::from_rows({{1, 1}, {0, 1}});
    CHECK(t * t == F2Matrix::identity(2));

    CHECK_THROWS_AS(m * m, Error);
}

TEST_CASE("rank and kernel agree with enumeration oracles on random matrices")
{
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        F2Matrix m = random_matrix(rng, r, c);
        CHECK(m.rank() == rank_by_enumeration(m));
        auto basis = m.kernel_basis();
        CHECK((std::size_t(1) << basis.size()) == kernel_by_enumeration(m).size());
        for (const auto& v : basis)
            CHECK(m.mul_vec(v).is_zero());
    }
}

TEST_CASE("rank is submultiplicative and rank-nullity holds")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 8, k = 1 + rng() % 8, m = 1 + rng() % 8;
        F2Matrix a = random_matrix(rng, n, k), b = random_matrix(rng, k, m);
        CHECK((a * b).rank() <= std::min(a.rank(), b.rank()));
        CHECK(a.kernel_basis().size() + a.rank() == a.cols());
    }
}

TEST_CASE("row reduction is deterministic")
{
    std::mt19937_64 rng(99);
    F2Matrix a = random_matrix(rng, 6, 9);
    std::vector<std::size_t> p1, p2;
    CHECK(a.rref(&p1) == a.rref(&p2));
    CHECK(p1 == p2);
}

TEST_CASE("solve finds solutions exactly when consistent")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        F2Matrix a = random_matrix(rng, r, c);
        F2Vec x(c);
        for (std::size_t j = 0; j < c; ++j)
            x.set(j, rng() & 1);
        F2Vec b = a.mul_vec(x);
        auto sol = a.solve(b);
        REQUIRE(sol.has_value());
        CHECK(a.mul_vec(*sol) == b);

        F2Vec rhs(r);
        for (std::size_t i = 0; i < r; ++i)
            rhs.set(i, rng() & 1);
        auto maybe = a.solve(rhs);
        if (maybe)
            CHECK(a.mul_vec(*maybe) == rhs);
        else {
            // cross-check insolvability: rank grows when rhs is appended
            F2Matrix aug(r, c + 1);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < c; ++j)
                    aug.set(i, j, a.get(i, j));
                aug.set(i, c, rhs.get(i));
            }
            CHECK(aug.rank() == a.rank() + 1);
        }
    }
}

TEST_CASE("span machinery tracks column spaces")
{
    F2Matrix m = F2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
    auto cols = column_space_basis(m);
    CHECK(cols.size() == m.rank());
    F2Span span(3);
    for (const auto& v : cols)
        CHECK(span.insert(v));
    CHECK(span.contains(m.column(2)));
}
