#include "solenoid/rectify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace solenoid {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr double coordinate_tolerance = 1e-9;

Integer floor_div(const Rational& q)
{
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n < 0 && f * d != n)
        f -= 1;
    return f;
}

Rational mod(const Rational& q, const Rational& tau) { return q - tau * Rational(floor_div(q / tau)); }

bool integral(const Rational& q) { return denominator(q) == 1; }

Integer gcd(Integer a, Integer b)
{
    while (b != 0)
    {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? Integer(-a) : a;
}

Rational rational_gcd(const std::vector<Rational>& values)
{
    Integer num = 0, den = 1;
    for (const Rational& v : values)
        den = den / gcd(den, denominator(v)) * denominator(v);
    for (const Rational& v : values)
        num = gcd(num, Integer(numerator(v) * (den / denominator(v))));
    return Rational(num, den);
}

Rational continued_fraction(double v, long bound)
{
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = v;
    for (int i = 0; i < 64; ++i)
    {
        const double a = std::floor(x);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > bound)
            break;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::abs(x - a) < 1e-12)
            break;
        x = 1.0 / (x - a);
    }
    return Rational(h1, k1);
}

Length exact_length(long v) { return {static_cast<double>(v), Rational(v)}; }

// Distinct sorted coordinates, merging values closer than the tolerance.
std::vector<double> cuts(const RectTiling& t, int axis)
{
    std::vector<double> c;
    for (const RectTile& tile : t.tiles)
    {
        c.push_back(tile.lo[axis]);
        c.push_back(tile.lo[axis] + tile.size[axis].value);
    }
    std::sort(c.begin(), c.end());
    std::vector<double> out;
    for (double v : c)
        if (out.empty() || v - out.back() > coordinate_tolerance)
            out.push_back(v);
    return out;
}

std::size_t cut_index(const std::vector<double>& c, double v)
{
    auto it = std::lower_bound(c.begin(), c.end(), v - coordinate_tolerance);
    if (it == c.end() || std::abs(*it - v) > coordinate_tolerance)
        throw Error("inconsistent_rescale", "tile corner is not on the cut grid");
    return static_cast<std::size_t>(it - c.begin());
}

std::string key(double v) { return std::to_string(std::llround(v / coordinate_tolerance)); }

// Edges (i, j, axis): tile j starts where tile i ends along `axis` and the two
// overlap in the other axis.
template <class Lo, class Hi>
std::set<std::array<std::size_t, 3>> adjacency(std::size_t n, int dim, Lo lo, Hi hi)
{
    std::set<std::array<std::size_t, 3>> edges;
    for (int axis = 0; axis < dim; ++axis)
    {
        std::map<std::string, std::vector<std::size_t>> starting;
        for (std::size_t j = 0; j < n; ++j)
            starting[key(lo(j, axis))].push_back(j);
        for (std::size_t i = 0; i < n; ++i)
        {
            auto it = starting.find(key(hi(i, axis)));
            if (it == starting.end())
                continue;
            for (std::size_t j : it->second)
            {
                bool overlap = true;
                for (int other = 0; other < dim; ++other)
                    if (other != axis)
                        overlap = std::min(hi(i, other), hi(j, other)) - std::max(lo(i, other), lo(j, other)) >
                                  coordinate_tolerance;
                if (overlap)
                    edges.insert({i, j, static_cast<std::size_t>(axis)});
            }
        }
    }
    return edges;
}

} // namespace

bool Length::same_as(const Length& other) const
{
    if (exact && other.exact)
        return *exact == *other.exact;
    return std::abs(value - other.value) <= 1e-12 * std::max(std::abs(value), std::abs(other.value));
}

const Rational& RescaleMap::apply(int axis, const Length& l) const
{
    for (const RescaleEntry& e : axes.at(static_cast<std::size_t>(axis)))
        if (e.original.same_as(l))
            return e.scaled;
    throw Error("inconsistent_rescale", "length " + std::to_string(l.value) + " has no rescaled value");
}

RectTiling rect_decompose(const Substitution1D& s, const Word& seed, std::size_t n)
{
    RectTiling t;
    t.dim = 1;
    double pos = 0.0;
    for (int letter : iterate(s, seed, n))
    {
        const std::size_t x = static_cast<std::size_t>(letter);
        Length l{s.lengths[x], s.exact_lengths ? std::optional<Rational>((*s.exact_lengths)[x]) : std::nullopt};
        t.tiles.push_back({s.alphabet[x], {pos, 0.0}, {l, exact_length(0)}});
        pos += l.value;
    }
    t.window = {{0.0, 0.0}, {pos, 0.0}};
    return t;
}

RectTiling rect_decompose(const Substitution2D& s, std::size_t seed_prototile, std::size_t n)
{
    if (s.lattice != Lattice::square)
        throw Error("non_rectangular", "prototiles of '" + s.name + "' are not unions of axis-aligned squares");
    const DeloneSet core = to_delone(s, seed_prototile, 0);
    const long k = static_cast<long>(std::llround(std::pow(static_cast<double>(s.expansion), static_cast<double>(n))));
    const std::array<long, 2> lo{std::lround(core.window.lo.x) * k, std::lround(core.window.lo.y) * k};
    const std::array<long, 2> hi{std::lround(core.window.hi.x) * k, std::lround(core.window.hi.y) * k};

    RectTiling t;
    t.dim = 2;
    t.window = {{static_cast<double>(lo[0]), static_cast<double>(lo[1])},
                {static_cast<double>(hi[0]), static_cast<double>(hi[1])}};
    for (const Placement& p : iterate(s, {seed_prototile, 0, {0, 0}}, n))
    {
        const auto v = tile_vertices(s, p);
        long x0 = v[0][0], x1 = v[0][0], y0 = v[0][1], y1 = v[0][1];
        for (const auto& q : v)
        {
            x0 = std::min(x0, q[0]), x1 = std::max(x1, q[0]);
            y0 = std::min(y0, q[1]), y1 = std::max(y1, q[1]);
        }
        std::vector<Point> poly;
        for (const auto& q : v)
            poly.push_back(to_euclidean(s, q));
        for (long x = x0; x < x1; ++x)
            for (long y = y0; y < y1; ++y)
            {
                if (x < lo[0] || x >= hi[0] || y < lo[1] || y >= hi[1])
                    continue;
                // A unit square lies in the lattice polygon iff its center does.
                const Point c{x + 0.5, y + 0.5};
                bool in = false;
                for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
                    if ((poly[i].y > c.y) != (poly[j].y > c.y) &&
                        c.x < (poly[j].x - poly[i].x) * (c.y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x)
                        in = !in;
                if (in)
                    t.tiles.push_back({s.type_label(s.type_of(p)),
                                       {static_cast<double>(x), static_cast<double>(y)},
                                       {exact_length(1), exact_length(1)}});
            }
    }
    return t;
}

std::array<std::vector<Length>, 2> axis_lengths(const RectTiling& t)
{
    std::array<std::vector<Length>, 2> out;
    for (int axis = 0; axis < t.dim; ++axis)
        for (const RectTile& tile : t.tiles)
        {
            const Length& l = tile.size[static_cast<std::size_t>(axis)];
            auto& list = out[static_cast<std::size_t>(axis)];
            if (std::none_of(list.begin(), list.end(), [&](const Length& m) { return m.same_as(l); }))
                list.push_back(l);
        }
    for (auto& list : out)
        std::sort(list.begin(), list.end(), [](const Length& a, const Length& b) { return a.value < b.value; });
    return out;
}

RescaleMap commensurate_rescale(const std::array<std::vector<Length>, 2>& lengths, int dim, const RescaleOptions& options)
{
    RescaleMap m;
    m.dim = dim;
    bool all_exact = true;
    double smallest = std::numeric_limits<double>::infinity();
    for (int axis = 0; axis < dim; ++axis)
        for (const Length& l : lengths[static_cast<std::size_t>(axis)])
        {
            if (!(l.value > 0))
                throw Error("invalid_argument", "lengths must be positive");
            all_exact = all_exact && l.exact.has_value();
            smallest = std::min(smallest, l.value);
        }

    std::vector<Rational> scaled_values;
    for (int axis = 0; axis < dim; ++axis)
        for (const Length& l : lengths[static_cast<std::size_t>(axis)])
        {
            Rational q;
            if (all_exact)
                q = *l.exact;
            else if (options.preserve_ratios)
                q = continued_fraction(l.value / smallest, options.max_denominator);
            else
                q = 1;
            m.axes[static_cast<std::size_t>(axis)].push_back({l, q});
            scaled_values.push_back(q);
        }
    m.identity = all_exact;
    m.tau = scaled_values.empty() ? Rational(1) : rational_gcd(scaled_values);
    return m;
}

RescaledTiling apply_rescale(const RectTiling& t, const RescaleMap& m)
{
    RescaledTiling out;
    out.dim = t.dim;
    out.tau = m.tau;
    out.tiles.resize(t.tiles.size());
    for (int axis = 0; axis < t.dim; ++axis)
    {
        const std::size_t a = static_cast<std::size_t>(axis);
        const std::vector<double> c = cuts(t, axis);
        if (c.empty())
            continue;
        // New coordinate of each cut: the rescaled gaps accumulated from the
        // first cut. Every gap must be the length of some tile.
        std::vector<Rational> position{Rational(0)};
        for (std::size_t i = 1; i < c.size(); ++i)
        {
            const double gap = c[i] - c[i - 1];
            const RescaleEntry* entry = nullptr;
            for (const RescaleEntry& e : m.axes[a])
                if (std::abs(e.original.value - gap) <= coordinate_tolerance)
                    entry = &e;
            if (!entry)
                throw Error("inconsistent_rescale", "gap of length " + std::to_string(gap) + " is not a tile length");
            position.push_back(position.back() + entry->scaled);
        }
        for (std::size_t i = 0; i < t.tiles.size(); ++i)
        {
            const RectTile& tile = t.tiles[i];
            const std::size_t lo = cut_index(c, tile.lo[a]);
            const std::size_t hi = cut_index(c, tile.lo[a] + tile.size[a].value);
            out.tiles[i].label = tile.label;
            out.tiles[i].lo[a] = position[lo];
            out.tiles[i].size[a] = position[hi] - position[lo];
            if (out.tiles[i].size[a] != m.apply(axis, tile.size[a]))
                throw Error("inconsistent_rescale", "tile " + std::to_string(i) + " spans gaps of different rescaled length");
        }
        out.window_lo[a] = 0;
        out.window_hi[a] = position.back();
    }
    return out;
}

FibrationReport torus_fibration(const RescaledTiling& t, std::size_t samples, std::uint32_t seed)
{
    FibrationReport report;
    report.tau = t.tau;
    std::set<std::array<Rational, 2>> images;
    for (std::size_t i = 0; i < t.tiles.size(); ++i)
    {
        const GridTile& tile = t.tiles[i];
        std::array<Rational, 2> image{};
        for (int a = 0; a < t.dim; ++a)
        {
            const Rational lo = tile.lo[a], hi = tile.lo[a] + tile.size[a];
            if (!integral(lo / t.tau) || !integral(hi / t.tau))
                throw Error("off_grid", "tile " + std::to_string(i) + " ('" + tile.label + "') has a corner off the grid");
            image[a] = mod(lo, t.tau);
        }
        images.insert(image);
    }
    report.corner_images.assign(images.begin(), images.end());

    if (t.tiles.empty())
    {
        report.commutes = true;
        return report;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, t.tiles.size() - 1);
    std::uniform_int_distribution<int> frac(0, 63);
    auto point_in = [&](const GridTile& tile) {
        std::array<Rational, 2> x{};
        for (int a = 0; a < t.dim; ++a)
            x[a] = tile.lo[a] + tile.size[a] * Rational(frac(rng), 64);
        return x;
    };
    for (std::size_t k = 0; k < samples; ++k)
    {
        const GridTile& a = t.tiles[pick(rng)];
        const GridTile& b = t.tiles[pick(rng)];
        const auto x = point_in(a);
        const auto y = point_in(b);
        bool ok = true;
        for (int d = 0; d < t.dim; ++d)
        {
            // x + v = y lies in tile b; project there with b's own corner.
            const Rational v = y[d] - x[d];
            const Rational pi_x = mod(x[d] - a.lo[d], t.tau);
            const Rational pi_y = mod(y[d] - b.lo[d], t.tau);
            ok = ok && pi_y == mod(pi_x + v, t.tau);
        }
        ++report.samples;
        if (!ok)
            ++report.failures;
    }
    report.commutes = report.failures == 0;
    return report;
}

LatticeResult to_lattice_delone(const RectTiling& t, const RescaleOptions& options)
{
    LatticeResult out;
    out.map = commensurate_rescale(axis_lengths(t), t.dim, options);
    const RescaledTiling r = apply_rescale(t, out.map);
    out.scope = "finite-window combinatorial equivalence only";

    // Control points in units of tau: left endpoints (1D), square centers (2D).
    std::vector<std::array<Rational, 2>> pts;
    for (const GridTile& tile : r.tiles)
    {
        std::array<Rational, 2> p{};
        for (int a = 0; a < t.dim; ++a)
            p[a] = (t.dim == 1 ? tile.lo[a] : tile.lo[a] + tile.size[a] / 2) / r.tau;
        pts.push_back(p);
    }
    out.shift = {Rational(0), Rational(0)};
    if (!pts.empty())
        for (int a = 0; a < t.dim; ++a)
            out.shift[a] = -(pts[0][a] - Rational(floor_div(pts[0][a])));

    DeloneSet& x = out.lattice;
    x.dim = t.dim;
    Rational widest = 1;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        Point p;
        for (int a = 0; a < t.dim; ++a)
        {
            const Rational c = pts[i][a] + out.shift[a];
            if (!integral(c))
                throw Error("not_lattice", "control point " + std::to_string(i) + " is not on the integer lattice");
            (a == 0 ? p.x : p.y) = c.convert_to<double>();
            widest = std::max(widest, Rational(r.tiles[i].size[a] / r.tau));
        }
        x.points.push_back(p);
        x.labels.push_back(r.tiles[i].label);
    }
    auto corner = [&](const std::array<Rational, 2>& c) {
        Point p;
        p.x = (c[0] / r.tau + out.shift[0]).convert_to<double>();
        if (t.dim == 2)
            p.y = (c[1] / r.tau + out.shift[1]).convert_to<double>();
        return p;
    };
    x.window = {corner(r.window_lo), corner(r.window_hi)};
    x.r = 0.5 * (1.0 - 1e-9);
    x.R = std::sqrt(static_cast<double>(t.dim)) * widest.convert_to<double>();

    if (t.dim == 1)
    {
        out.certificate_kind = "label_sequence";
        std::vector<std::size_t> before(t.tiles.size()), after(t.tiles.size());
        for (std::size_t i = 0; i < before.size(); ++i)
            before[i] = after[i] = i;
        std::stable_sort(before.begin(), before.end(), [&](std::size_t i, std::size_t j) { return t.tiles[i].lo[0] < t.tiles[j].lo[0]; });
        std::stable_sort(after.begin(), after.end(), [&](std::size_t i, std::size_t j) { return r.tiles[i].lo[0] < r.tiles[j].lo[0]; });
        std::vector<std::string> a, b;
        for (std::size_t i : before)
            a.push_back(t.tiles[i].label);
        for (std::size_t i : after)
            b.push_back(x.labels[i]);
        out.certificate = a == b;
    }
    else
    {
        out.certificate_kind = "label_adjacency_graph";
        const auto g0 = adjacency(
            t.tiles.size(), 2, [&](std::size_t i, int a) { return t.tiles[i].lo[a]; },
            [&](std::size_t i, int a) { return t.tiles[i].lo[a] + t.tiles[i].size[a].value; });
        const auto g1 = adjacency(
            r.tiles.size(), 2, [&](std::size_t i, int a) { return Rational(r.tiles[i].lo[a] / r.tau).convert_to<double>(); },
            [&](std::size_t i, int a) {
                return Rational((r.tiles[i].lo[a] + r.tiles[i].size[a]) / r.tau).convert_to<double>();
            });
        bool labels_kept = true;
        for (std::size_t i = 0; i < t.tiles.size(); ++i)
            labels_kept = labels_kept && t.tiles[i].label == x.labels[i];
        out.certificate = labels_kept && g0 == g1;
    }
    return out;
}

} // namespace solenoid
