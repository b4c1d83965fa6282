#include <doctest.h>

#include "solenoid/rectify.hpp"
#include "support.hpp"

using namespace solenoid;

namespace {

Length exact(Rational q) { return {q.convert_to<double>(), q}; }
Length inexact(double v) { return {v, std::nullopt}; }

bool integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

} // namespace

TEST_CASE("box decompositions")
{
    const Substitution1D fib = *builtin_1d("fibonacci");
    const RectTiling t = rect_decompose(fib, {0}, 6);
    const std::string word = oracle::rewrite({{'a', "ab"}, {'b', "a"}}, "a", 6);
    REQUIRE(t.tiles.size() == word.size());
    const double phi = (1 + std::sqrt(5.0)) / 2;
    double x = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
    {
        CHECK(t.tiles[i].label == std::string(1, word[i]));
        CHECK(t.tiles[i].lo[0] == doctest::Approx(x));
        CHECK(t.tiles[i].size[0].value == doctest::Approx(word[i] == 'a' ? phi : 1.0));
        x += t.tiles[i].size[0].value;
    }
    CHECK(rect_decompose(fib, {}, 4).tiles.empty());

    const Substitution2D chair = *builtin_2d("chair");
    const RectTiling c = rect_decompose(chair, 0, 3);
    double area = 0;
    for (const RectTile& tile : c.tiles)
    {
        CHECK(tile.size[0].exact == std::optional<Rational>(1));
        CHECK(tile.size[1].exact == std::optional<Rational>(1));
        area += 1;
    }
    CHECK(area == doctest::Approx(measure(c.window, 2)));

    // Every chair inside the core box splits into three unit squares.
    std::map<std::pair<long, long>, std::string> cell;
    for (const RectTile& tile : c.tiles)
        cell[{std::lround(tile.lo[0]), std::lround(tile.lo[1])}] = tile.label;
    CHECK(cell.size() == c.tiles.size());
    CHECK_THROWS_AS(rect_decompose(*builtin_2d("half_hex"), 0, 2), Error);
}

TEST_CASE("commensurable rescaling")
{
    const RescaleMap gcd = commensurate_rescale({{{exact(1), exact(Rational(3, 2))}, {}}}, 1);
    CHECK(gcd.identity);
    CHECK(gcd.tau == Rational(1, 2));

    const double phi = (1 + std::sqrt(5.0)) / 2;
    const RescaleMap collapse = commensurate_rescale({{{inexact(1), inexact(phi)}, {}}}, 1);
    CHECK_FALSE(collapse.identity);
    CHECK(collapse.tau == 1);
    for (const RescaleEntry& e : collapse.axes[0])
        CHECK(e.scaled == 1);

    const RescaleMap roots = commensurate_rescale({{{inexact(1), inexact(std::sqrt(2.0)), inexact(std::sqrt(2.0))}, {}}}, 1);
    for (const RescaleEntry& e : roots.axes[0])
        CHECK(e.scaled == 1);

    RescaleOptions keep;
    keep.preserve_ratios = true;
    const RescaleMap ratios = commensurate_rescale({{{inexact(1), inexact(phi)}, {}}}, 1, keep);
    REQUIRE(ratios.axes[0].size() == 2);
    const Rational a = ratios.apply(0, inexact(phi)), b = ratios.apply(0, inexact(1));
    CHECK((a / b).convert_to<double>() == doctest::Approx(phi).epsilon(1e-2));
    for (const RescaleEntry& e : ratios.axes[0])
    {
        CHECK(e.scaled > 0);
        CHECK(integral(e.scaled / ratios.tau));
    }
}

TEST_CASE("torus fibration")
{
    const Substitution1D fib = *builtin_1d("fibonacci");
    const RectTiling t = rect_decompose(fib, {0}, 8);
    const RescaledTiling r = apply_rescale(t, commensurate_rescale(axis_lengths(t), 1));
    const FibrationReport f = torus_fibration(r);
    CHECK(f.commutes);
    CHECK(f.failures == 0);
    CHECK(f.corner_images == std::vector<std::array<Rational, 2>>{{Rational(0), Rational(0)}});

    const RectTiling c = rect_decompose(*builtin_2d("chair"), 0, 2);
    const FibrationReport fc = torus_fibration(apply_rescale(c, commensurate_rescale(axis_lengths(c), 2)));
    CHECK(fc.tau == 1);
    CHECK(fc.commutes);
    CHECK(fc.corner_images == std::vector<std::array<Rational, 2>>{{Rational(0), Rational(0)}});

    // Half-unit grid.
    RectTiling half;
    half.dim = 1;
    double x = 0;
    for (Rational len : {Rational(1), Rational(3, 2), Rational(1), Rational(3, 2)})
    {
        half.tiles.push_back({"t", {x, 0}, {exact(len), exact(1)}});
        x += len.convert_to<double>();
    }
    half.window = {{0, 0}, {x, 0}};
    const RescaledTiling hr = apply_rescale(half, commensurate_rescale(axis_lengths(half), 1));
    CHECK(hr.tau == Rational(1, 2));
    const FibrationReport hf = torus_fibration(hr);
    CHECK(hf.commutes);
    CHECK(hf.corner_images.size() == 1);
    CHECK(hf.corner_images[0][0] == 0);

    RescaledTiling off = hr;
    off.tiles[1].lo[0] += Rational(1, 3);
    CHECK_THROWS_AS(torus_fibration(off), Error);
}

TEST_CASE("lattice Delone sets")
{
    const Substitution1D fib = *builtin_1d("fibonacci");
    const RectTiling t = rect_decompose(fib, {0}, 10);
    const LatticeResult l = to_lattice_delone(t);
    const std::string word = oracle::rewrite({{'a', "ab"}, {'b', "a"}}, "a", 10);
    REQUIRE(l.lattice.points.size() == word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
    {
        CHECK(l.lattice.points[i].x == static_cast<double>(i));
        CHECK(l.lattice.label(i) == std::string(1, word[i]));
    }
    CHECK(l.certificate_kind == "label_sequence");
    CHECK(l.certificate);
    CHECK_FALSE(l.scope.empty());
    const DeloneReport d = verify_delone(l.lattice);
    CHECK(d.uniform_discrete);
    CHECK(d.relatively_dense);
    CHECK(l.lattice.r == doctest::Approx(0.5 * (1 - 1e-9)).epsilon(1e-15));

    const LatticeResult tm = to_lattice_delone(rect_decompose(*builtin_1d("thue_morse"), {0}, 6));
    CHECK(tm.map.identity);
    CHECK(tm.map.tau == 1);

    const LatticeResult chair = to_lattice_delone(rect_decompose(*builtin_2d("chair"), 0, 2));
    CHECK(chair.certificate_kind == "label_adjacency_graph");
    CHECK(chair.certificate);
    CHECK(chair.shift[0] == Rational(-1, 2));
    CHECK(chair.shift[1] == Rational(-1, 2));
    for (const Point& p : chair.lattice.points)
    {
        CHECK(p.x == std::round(p.x));
        CHECK(p.y == std::round(p.y));
    }
    const DeloneReport dc = verify_delone(chair.lattice);
    CHECK(dc.uniform_discrete);
    CHECK(dc.relatively_dense);
    CHECK(chair.lattice.R == doctest::Approx(std::sqrt(2.0)));
}
