#include <doctest.h>

#include "solenoid/cone.hpp"
#include "solenoid/exact.hpp"
#include "support.hpp"

using namespace solenoid;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread)
{
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> d(-spread, spread);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng() % 3 == 0 ? 0 : d(rng);
    return m;
}

} // namespace

TEST_CASE("null space agrees with Gauss-Jordan on random integer matrices")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial)
    {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
        const IntMatrix m = random_matrix(rng, rows, cols, 4);
        const auto basis = null_space(m);
        const auto expected = oracle::kernel(support::to_q(m), cols);
        REQUIRE(basis.size() == expected.size());
        CHECK(rank(m) == oracle::rank(support::to_q(m), cols));
        for (const IntVector& v : basis)
        {
            const IntVector image = m * v;
            CHECK(std::all_of(image.begin(), image.end(), [](const Integer& z) { return z == 0; }));
        }
        if (!basis.empty())
            CHECK(oracle::same_span(support::to_q(basis), expected, cols));
    }
}

TEST_CASE("primitive scales to coprime integers")
{
    const IntVector v = primitive(RatVector{Rational(2, 3), Rational(4, 9), Rational(0)});
    CHECK(v == IntVector{3, 2, 0});
    CHECK(primitive(IntVector{0, -4, 6}) == IntVector{0, -2, 3});
}

TEST_CASE("rational text round trip")
{
    for (const char* text : {"0", "-7", "3/4", "-12/5"})
        CHECK(to_string(parse_rational(text)) == text);
}

TEST_CASE("extreme rays agree with support enumeration")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial)
    {
        const std::size_t n = 2 + rng() % 5, rows = rng() % 4;
        const IntMatrix e = rows == 0 ? IntMatrix(0, n) : random_matrix(rng, rows, n, 2);
        const auto rays = nonnegative_kernel_rays(e, n);
        CHECK(support::ray_set(rays) == oracle::extreme_rays(support::to_q(e), n));
        CHECK(support::ray_set(rays).size() == rays.size());
    }
}

TEST_CASE("conic hull membership")
{
    const std::vector<RatVector> g = {{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}};
    CHECK(in_conic_hull(g, {Rational(2), Rational(3), Rational(5)}, Rational(0)));
    CHECK_FALSE(in_conic_hull(g, {Rational(2), Rational(3), Rational(4)}, Rational(0)));
    CHECK_FALSE(in_conic_hull(g, {Rational(-1), Rational(2), Rational(1)}, Rational(0)));
    CHECK(conic_residual(g, {Rational(1), Rational(1), Rational(2)}) == 0);
}
