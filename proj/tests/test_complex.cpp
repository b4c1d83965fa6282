#include <doctest.h>

#include "solenoid/complex.hpp"
#include "solenoid/substitution.hpp"
#include "support.hpp"

using namespace solenoid;

namespace {

BranchedComplex two_to_one()
{
    // u => v along e1, e2; v -> u along e3.
    return graph_complex({"u", "v"}, {{"e1", 0, 1}, {"e2", 0, 1}, {"e3", 1, 0}});
}

std::vector<BranchedComplex> builtin_complexes()
{
    std::vector<BranchedComplex> out;
    for (const std::string& name : builtin_names())
    {
        if (auto s = builtin_1d(name))
        {
            out.push_back(anderson_putnam(*s, false));
            out.push_back(anderson_putnam(collar(*s), false));
        }
        else
            out.push_back(anderson_putnam(*builtin_2d(name)));
    }
    return out;
}

Chain as_chain(const IntVector& v)
{
    Chain z;
    for (const Integer& x : v)
        z.coefficients.emplace_back(x);
    return z;
}

} // namespace

TEST_CASE("validation of small complexes")
{
    CHECK(validate_complex(wedge_of_circles(2)).valid);
    CHECK(validate_complex(two_to_one()).valid);

    BranchedComplex broken = graph_complex({"a", "b", "c"}, {{"e", 0, 1}});
    broken.boundary[1](2, 0) = 1;
    const ComplexReport r = validate_complex(broken);
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.issues.empty());
    CHECK(r.issues.front().kind == "augmentation");
}

TEST_CASE("cycle spaces of hand-checked graphs")
{
    const auto wedge = top_cycle_space(wedge_of_circles(2));
    CHECK(wedge.size() == 2);
    CHECK(positive_cone(wedge_of_circles(2)).extremal_rays == std::vector<IntVector>{{1, 0}, {0, 1}});

    const BranchedComplex g = two_to_one();
    CHECK(top_cycle_space(g).size() == 2);
    CHECK(support::ray_set(positive_cone(g).extremal_rays) ==
          std::set<std::vector<oracle::Z>>{{1, 0, 1}, {0, 1, 1}});

    CHECK(top_cycle_space(wedge_of_circles(1)).size() == 1);

    const BranchedComplex dead_end = graph_complex({"u", "v"}, {{"e", 0, 1}});
    CHECK(top_cycle_space(dead_end).empty());
    CHECK(positive_cone(dead_end).extremal_rays.empty());
}

TEST_CASE("switching rule evaluation")
{
    const BranchedComplex g = two_to_one();
    CHECK(validate_switching(g, Chain{{Rational(0), Rational(0), Rational(0)}}));
    CHECK(validate_switching(wedge_of_circles(2), Chain{{Rational(3), Rational(-5)}}));
    CHECK_FALSE(validate_switching(g, Chain{{Rational(1), Rational(1), Rational(1)}}));
    CHECK(validate_switching(g, Chain{{Rational(1), Rational(1), Rational(2)}}));
}

TEST_CASE("switching matrix matches the side data")
{
    for (const BranchedComplex& c : builtin_complexes())
        CHECK(oracle::same_span(support::to_q(switching_matrix(c)), support::switching_rows(c), c.top_count()));
}

TEST_CASE("cycle space and rays match the brute-force oracles")
{
    auto complexes = builtin_complexes();
    for (auto& c : support::random_valid_graphs(20, 2024))
        complexes.push_back(std::move(c));
    for (const BranchedComplex& c : complexes)
    {
        CAPTURE(c.labels.back().size());
        const std::size_t n = c.top_count();
        const auto rows = support::switching_rows(c);
        const auto kernel = oracle::kernel(rows, n);
        const HomologyCone h = positive_cone(c);
        REQUIRE(h.dimension() == kernel.size());
        if (!kernel.empty())
            CHECK(oracle::same_span(support::to_q(h.cycle_basis), kernel, n));
        if (n <= 16)
            CHECK(support::ray_set(h.extremal_rays) == oracle::extreme_rays(rows, n));
    }
}

TEST_CASE("nonnegative ray combinations satisfy the switching rules and perturbations do not")
{
    std::mt19937 rng(99);
    std::vector<BranchedComplex> complexes = {two_to_one(), anderson_putnam(collar(*builtin_1d("fibonacci")), false),
                                              anderson_putnam(*builtin_2d("chair")),
                                              anderson_putnam(*builtin_2d("half_hex"))};
    for (const BranchedComplex& c : complexes)
    {
        const HomologyCone h = positive_cone(c);
        const auto rows = support::switching_rows(c);
        REQUIRE_FALSE(h.extremal_rays.empty());
        for (int trial = 0; trial < 250; ++trial)
        {
            RatVector z(c.top_count(), Rational(0));
            for (const IntVector& ray : h.extremal_rays)
            {
                const Rational w(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
                for (std::size_t i = 0; i < z.size(); ++i)
                    z[i] += w * Rational(ray[i]);
            }
            CHECK(validate_switching(c, Chain{z}));

            RatVector p(z.size(), Rational(0));
            bool cycle = true;
            while (cycle)
            {
                for (Rational& x : p)
                    x = Rational(static_cast<long>(rng() % 5) - 2);
                cycle = std::all_of(rows.begin(), rows.end(), [&](const std::vector<oracle::Q>& r) {
                    oracle::Q s = 0;
                    for (std::size_t i = 0; i < p.size(); ++i)
                        s += r[i] * oracle::Q(p[i]);
                    return s == 0;
                });
            }
            for (std::size_t i = 0; i < z.size(); ++i)
                p[i] += z[i];
            CHECK_FALSE(validate_switching(c, Chain{p}));
        }
    }
}

TEST_CASE("chain length mismatch is an error")
{
    CHECK_THROWS_AS(validate_switching(wedge_of_circles(2), as_chain({1})), Error);
}
