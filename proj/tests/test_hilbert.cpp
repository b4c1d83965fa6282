#include <doctest.h>

#include "solenoid/error.hpp"
#include "solenoid/hilbert.hpp"
#include "support.hpp"

using namespace solenoid;

namespace {

std::vector<double> random_positive(std::mt19937& rng, std::size_t n)
{
    std::uniform_real_distribution<double> e(-4.0, 4.0);
    std::vector<double> v(n);
    for (double& x : v)
        x = std::exp(e(rng));
    return v;
}

std::vector<double> image_of(const Matrix<double>& a, const std::vector<double>& x)
{
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

Matrix<double> to_double(const IntMatrix& m)
{
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).convert_to<double>();
    return out;
}

} // namespace

TEST_CASE("hilbert distance on hand examples")
{
    const std::vector<double> a{1, 2};
    CHECK(hilbert_distance(a, a) == 0.0);
    CHECK(hilbert_distance(std::vector<double>{1, 1}, std::vector<double>{2, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(hilbert_distance(std::vector<double>{1, 3}, std::vector<double>{3, 1}) == doctest::Approx(std::log(9.0)).epsilon(1e-15));
    CHECK(hilbert_distance(RatVector{Rational(1), Rational(3)}, RatVector{Rational(3), Rational(1)}) ==
          doctest::Approx(std::log(9.0)).epsilon(1e-15));
    CHECK_THROWS_AS(hilbert_distance(std::vector<double>{1, 0}, std::vector<double>{1, 1}), Error);
}

TEST_CASE("projective distance on faces of the orthant")
{
    CHECK(projective_distance(RatVector{Rational(1), Rational(0)}, RatVector{Rational(5), Rational(0)}) == 0.0);
    CHECK(std::isinf(projective_distance(RatVector{Rational(1), Rational(0)}, RatVector{Rational(1), Rational(1)})));
}

TEST_CASE("metric axioms on random triples")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const std::size_t n = 2 + trial % 4;
        const auto x = random_positive(rng, n), y = random_positive(rng, n), z = random_positive(rng, n);
        const double xy = hilbert_distance(x, y), yx = hilbert_distance(y, x);
        CHECK(xy == doctest::Approx(oracle::hilbert(x, y)).epsilon(1e-12));
        CHECK(std::abs(xy - yx) <= 1e-12);
        CHECK(xy <= hilbert_distance(x, z) + hilbert_distance(z, y) + 1e-12);
        CHECK(hilbert_distance_chord(x, y) == doctest::Approx(xy).epsilon(1e-9));

        std::vector<double> sx = x, sy = y;
        const double lambda = std::exp(std::uniform_real_distribution<double>(-3, 3)(rng));
        const double mu = std::exp(std::uniform_real_distribution<double>(-3, 3)(rng));
        for (double& v : sx)
            v *= lambda;
        for (double& v : sy)
            v *= mu;
        CHECK(std::abs(hilbert_distance(sx, sy) - xy) <= 1e-12 * std::max(1.0, xy));
    }
}

TEST_CASE("exact scale invariance in the rational form")
{
    const RatVector x{Rational(1), Rational(3), Rational(7)}, y{Rational(2), Rational(2), Rational(5)};
    RatVector sx, sy;
    for (const Rational& v : x)
        sx.push_back(v * Rational(17, 3));
    for (const Rational& v : y)
        sy.push_back(v * Rational(5, 11));
    CHECK(hilbert_distance(sx, sy) == hilbert_distance(x, y));
}

TEST_CASE("birkhoff coefficient")
{
    CHECK(birkhoff_coefficient(IntMatrix::from_rows({{1, 1}, {1, 1}})) == 0.0);
    CHECK(birkhoff_coefficient(IntMatrix::from_rows({{2, 1}, {1, 2}})) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(birkhoff_coefficient(IntMatrix::from_rows({{1, 0}, {0, 1}})), Error);
    const Contraction c = birkhoff_contraction(IntMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(c.degenerate);
    CHECK(c.coefficient == 1.0);
}

TEST_CASE("contraction bound holds and is nearly attained")
{
    std::mt19937 rng(5);
    std::vector<IntMatrix> matrices = {IntMatrix::from_rows({{2, 1}, {1, 2}}), IntMatrix::from_rows({{2, 1}, {1, 1}}),
                                       IntMatrix::from_rows({{3, 1, 2}, {1, 4, 1}, {2, 1, 5}})};
    for (int k = 0; k < 3; ++k)
    {
        IntMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) = 1 + rng() % 9;
        matrices.push_back(m);
    }
    for (const IntMatrix& a : matrices)
    {
        const double kappa = birkhoff_coefficient(a);
        const Matrix<double> ad = to_double(a);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial)
        {
            auto x = random_positive(rng, a.cols());
            auto y = random_positive(rng, a.cols());
            const double d = hilbert_distance(x, y);
            const double image = hilbert_distance(image_of(ad, x), image_of(ad, y));
            CHECK(image <= kappa * d + 1e-12);
            if (d > 1e-6)
                worst = std::max(worst, image / d);
        }
        CHECK(worst <= kappa + 1e-12);
    }

    // Near-tightness for [[2,1],[1,2]]: nearby pairs along the worst direction.
    const Matrix<double> a = to_double(IntMatrix::from_rows({{2, 1}, {1, 2}}));
    double best = 0.0;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const double s = std::exp(std::uniform_real_distribution<double>(-3, 3)(rng));
        const double d = std::exp(std::uniform_real_distribution<double>(-12, -2)(rng));
        const std::vector<double> x{1.0, s}, y{1.0, s * std::exp(d)};
        best = std::max(best, hilbert_distance(image_of(a, x), image_of(a, y)) / hilbert_distance(x, y));
    }
    CHECK(best == doctest::Approx(1.0 / 3.0).epsilon(1e-2));
}
