#include "solenoid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "point_grid.hpp"
#include "solenoid/parallel.hpp"
#include "solenoid/voronoi.hpp"

namespace solenoid {

double norm(Point p) { return std::hypot(p.x, p.y); }
double distance(Point a, Point b) { return norm(a - b); }

Point rotate(Point p, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

bool contains(const Box& box, Point p, int dim, double tol)
{
    if (p.x < box.lo.x - tol || p.x > box.hi.x + tol)
        return false;
    return dim == 1 || (p.y >= box.lo.y - tol && p.y <= box.hi.y + tol);
}

double boundary_distance(const Box& box, Point p, int dim)
{
    double d = std::min(p.x - box.lo.x, box.hi.x - p.x);
    if (dim == 2)
        d = std::min({d, p.y - box.lo.y, box.hi.y - p.y});
    return std::max(d, 0.0);
}

double measure(const Box& box, int dim)
{
    const double w = box.hi.x - box.lo.x;
    return dim == 1 ? w : w * (box.hi.y - box.lo.y);
}

const std::string& DeloneSet::label(std::size_t i) const
{
    static const std::string none;
    return labels.empty() ? none : labels[i];
}

void check_invariants(const DeloneSet& x)
{
    if (x.dim != 1 && x.dim != 2)
        throw Error("unsupported_dimension", "Delone sets are supported in dimensions 1 and 2");
    if (!x.labels.empty() && x.labels.size() != x.points.size())
        throw Error("invalid_delone_set", "label count differs from point count");
    if (!(x.r > 0) || !(x.R > 0) || x.r > x.R)
        throw Error("invalid_delone_set", "parameters must satisfy 0 < r <= R");
    if (x.window.hi.x < x.window.lo.x || (x.dim == 2 && x.window.hi.y < x.window.lo.y))
        throw Error("invalid_delone_set", "window is empty");
    for (std::size_t i = 0; i < x.points.size(); ++i)
    {
        const Point& p = x.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || (x.dim == 1 && p.y != 0.0))
            throw Error("invalid_delone_set", "point " + std::to_string(i) + " has invalid coordinates");
        if (!contains(x.window, p, x.dim))
            throw Error("invalid_delone_set", "point " + std::to_string(i) + " lies outside the window");
    }
}

namespace {

constexpr std::size_t max_witnesses = 16;

void check_discrete(std::span<const Point> points, int dim, const Box& window, double r, DeloneReport& report)
{
    report.uniform_discrete = true;
    const double limit = 2.0 * r;
    const double slack = geometric_tolerance * std::max(1.0, limit);
    detail::PointGrid grid(points, std::max(limit, detail::typical_spacing(points, window, dim)));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j : grid.within(points[i], limit))
        {
            if (j <= i || distance(points[i], points[j]) >= limit - slack)
                continue;
            report.uniform_discrete = false;
            if (report.witnesses.size() < max_witnesses)
                report.witnesses.push_back({"close_pair", 0.5 * (points[i] + points[j]), r, {i, j}});
        }
}

// Largest distance from a point of the interior region to the set, with the
// point where it is attained.
std::pair<double, Point> covering_gap_1d(std::span<const Point> points, double a, double b)
{
    std::vector<double> xs;
    for (const Point& p : points)
        xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    auto dist = [&](double t) {
        auto it = std::lower_bound(xs.begin(), xs.end(), t);
        double d = std::numeric_limits<double>::infinity();
        if (it != xs.end())
            d = *it - t;
        if (it != xs.begin())
            d = std::min(d, t - *std::prev(it));
        return d;
    };
    std::vector<double> candidates{a, b};
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    {
        const double m = 0.5 * (xs[i] + xs[i + 1]);
        if (m > a && m < b)
            candidates.push_back(m);
    }
    std::pair<double, Point> worst{-1.0, {}};
    for (double t : candidates)
        if (const double d = dist(t); d > worst.first)
            worst = {d, {t, 0.0}};
    return worst;
}

// Clips a convex CCW polygon to an axis-aligned box.
std::vector<Point> clip_to_box(std::vector<Point> poly, const Box& box)
{
    auto clip = [](const std::vector<Point>& in, auto inside, auto cross) {
        std::vector<Point> out;
        for (std::size_t i = 0; i < in.size(); ++i)
        {
            const Point& p = in[i];
            const Point& q = in[(i + 1) % in.size()];
            const bool ip = inside(p), iq = inside(q);
            if (ip)
                out.push_back(p);
            if (ip != iq)
                out.push_back(cross(p, q));
        }
        return out;
    };
    auto lerp_x = [](double v) {
        return [v](Point p, Point q) { double t = (v - p.x) / (q.x - p.x); return Point{v, p.y + t * (q.y - p.y)}; };
    };
    auto lerp_y = [](double v) {
        return [v](Point p, Point q) { double t = (v - p.y) / (q.y - p.y); return Point{p.x + t * (q.x - p.x), v}; };
    };
    poly = clip(poly, [&](Point p) { return p.x >= box.lo.x; }, lerp_x(box.lo.x));
    poly = clip(poly, [&](Point p) { return p.x <= box.hi.x; }, lerp_x(box.hi.x));
    poly = clip(poly, [&](Point p) { return p.y >= box.lo.y; }, lerp_y(box.lo.y));
    poly = clip(poly, [&](Point p) { return p.y <= box.hi.y; }, lerp_y(box.hi.y));
    return poly;
}

} // namespace

DeloneReport verify_delone(std::span<const Point> points, int dim, const Box& window, double r, double R)
{
    if (dim != 1 && dim != 2)
        throw Error("unsupported_dimension", "Delone sets are supported in dimensions 1 and 2");
    if (!(r > 0) || !(R > 0))
        throw Error("invalid_argument", "r and R must be positive");
    if (window.hi.x < window.lo.x || (dim == 2 && window.hi.y < window.lo.y))
        throw Error("invalid_argument", "window is empty");

    DeloneReport report;
    check_discrete(points, dim, window, r, report);

    Box interior{{window.lo.x + R, window.lo.y + R}, {window.hi.x - R, window.hi.y - R}};
    const bool interior_empty = !(interior.lo.x <= interior.hi.x) || (dim == 2 && !(interior.lo.y <= interior.hi.y));
    if (points.empty())
    {
        report.witnesses.push_back({"empty", {}, R, {}});
        return report;
    }
    if (interior_empty)
    {
        report.witnesses.push_back({"window_too_small", {}, R, {}});
        return report;
    }

    const double slack = geometric_tolerance * std::max(1.0, R);
    if (dim == 1)
    {
        auto [gap, where] = covering_gap_1d(points, interior.lo.x, interior.hi.x);
        report.relatively_dense = gap < R - slack;
        if (!report.relatively_dense)
            report.witnesses.push_back({"uncovered_point", where, R, {}});
        return report;
    }

    // Every interior point lies in some Voronoi cell, whose site is nearest;
    // the distance to the site is convex on the cell, so vertices suffice.
    report.relatively_dense = true;
    auto check_cell = [&](std::size_t site, std::vector<Point> poly) {
        for (const Point& v : clip_to_box(std::move(poly), interior))
            if (distance(v, points[site]) >= R - slack)
            {
                report.relatively_dense = false;
                if (report.witnesses.size() < max_witnesses)
                    report.witnesses.push_back({"uncovered_point", v, R, {site}});
                return;
            }
    };
    if (points.size() == 1)
    {
        check_cell(0, {window.lo, {window.hi.x, window.lo.y}, window.hi, {window.lo.x, window.hi.y}});
        return report;
    }
    DeloneSet tmp;
    tmp.dim = 2;
    tmp.points.assign(points.begin(), points.end());
    tmp.window = window;
    const VoronoiDiagram diagram = voronoi_diagram(tmp);
    for (const VoronoiCell& cell : diagram.cells)
        check_cell(cell.site, cell.vertices);
    return report;
}

DeloneReport verify_delone(const DeloneSet& x)
{
    return verify_delone(x.points, x.dim, x.window, x.r, x.R);
}

std::vector<Patch> extract_patches(const DeloneSet& x, double radius)
{
    if (!(radius > 0))
        throw Error("invalid_argument", "patch radius must be positive");
    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i < x.points.size(); ++i)
        if (boundary_distance(x.window, x.points[i], x.dim) >= radius - geometric_tolerance)
            anchors.push_back(i);

    detail::PointGrid grid(x.points, std::max(radius, detail::typical_spacing(x.points, x.window, x.dim)));
    std::vector<Patch> out(anchors.size());
    parallel_for(anchors.size(), [&](std::size_t k) {
        const std::size_t i = anchors[k];
        Patch& p = out[k];
        p.anchor_index = i;
        p.anchor = x.points[i];
        p.radius = radius;
        for (std::size_t j : grid.within(x.points[i], radius + geometric_tolerance))
            p.offsets.push_back({x.points[j] - x.points[i], x.label(j)});
        std::sort(p.offsets.begin(), p.offsets.end());
    });
    return out;
}

std::string to_string(GroupMode g)
{
    return g == GroupMode::translations ? "translations" : "planar_direct_isometries";
}

GroupMode parse_group_mode(const std::string& s)
{
    if (s == "translations")
        return GroupMode::translations;
    if (s == "planar_direct_isometries" || s == "isometries")
        return GroupMode::planar_direct_isometries;
    throw Error("invalid_argument", "unknown group mode '" + s + "'");
}

namespace {

bool covered_by(const std::vector<Offset>& a, const std::vector<Offset>& b, double angle, double tol)
{
    for (const Offset& o : a)
    {
        const Point v = angle == 0.0 ? o.v : rotate(o.v, angle);
        const bool hit = std::any_of(b.begin(), b.end(), [&](const Offset& w) {
            return w.label == o.label && distance(v, w.v) <= tol;
        });
        if (!hit)
            return false;
    }
    return true;
}

bool match_at_angle(const Patch& a, const Patch& b, double angle, double tol)
{
    if (!covered_by(a.offsets, b.offsets, angle, tol))
        return false;
    return covered_by(b.offsets, a.offsets, -angle, tol);
}

// Rotation angles that carry the shortest nonzero offset of a onto an offset
// of b with the same label and length.
std::vector<double> candidate_angles(const std::vector<Offset>& a, const std::vector<Offset>& b, double tol)
{
    const Offset* pivot = nullptr;
    for (const Offset& o : a)
        if (norm(o.v) > tol && (!pivot || norm(o.v) < norm(pivot->v) - tol))
            pivot = &o;
    if (!pivot)
        return {0.0};
    std::vector<double> out;
    const double base = std::atan2(pivot->v.y, pivot->v.x);
    for (const Offset& w : b)
        if (w.label == pivot->label && std::abs(norm(w.v) - norm(pivot->v)) <= tol)
            out.push_back(std::atan2(w.v.y, w.v.x) - base);
    return out;
}

} // namespace

bool patches_equivalent(const Patch& a, const Patch& b, GroupMode group, double tol)
{
    if (a.offsets.size() != b.offsets.size())
        return false;
    if (group == GroupMode::translations)
        return match_at_angle(a, b, 0.0, tol);
    for (double angle : candidate_angles(a.offsets, b.offsets, tol))
        if (match_at_angle(a, b, angle, tol))
            return true;
    return false;
}

std::vector<PatchClass> classify_patches(const std::vector<Patch>& patches, GroupMode group, double tol)
{
    std::vector<std::size_t> order(patches.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::tie(patches[i].offsets, i) < std::tie(patches[j].offsets, j);
    });

    // Equivalent patches share their size and label multiset.
    std::vector<std::string> bucket_key(patches.size());
    parallel_for(patches.size(), [&](std::size_t i) {
        std::vector<std::string> labels;
        for (const Offset& o : patches[i].offsets)
            labels.push_back(o.label);
        std::sort(labels.begin(), labels.end());
        std::string key = std::to_string(labels.size());
        for (const std::string& l : labels)
            key += '\x1f' + l;
        bucket_key[i] = std::move(key);
    });

    std::vector<PatchClass> classes;
    std::map<std::string, std::vector<std::size_t>> by_bucket;
    for (std::size_t i : order)
    {
        auto& candidates = by_bucket[bucket_key[i]];
        bool placed = false;
        for (std::size_t c : candidates)
            if (patches_equivalent(patches[classes[c].representative], patches[i], group, tol))
            {
                classes[c].members.push_back(i);
                placed = true;
                break;
            }
        if (!placed)
        {
            candidates.push_back(classes.size());
            classes.push_back({i, {i}});
        }
    }
    // Creation order follows the sorted order, so classes are already ordered
    // by representative.
    return classes;
}

double identity_distance(const GroupElement& g)
{
    return std::hypot(norm(g.translation), g.angle);
}

namespace {

std::vector<GroupElement> group_grid(int dim, double eps, const MetricGrid& grid)
{
    const double slack = 1e-12 * std::max(1.0, eps);
    const long nt = static_cast<long>(std::floor(eps / grid.step + 1e-9));
    std::vector<GroupElement> out;
    std::vector<double> angles{0.0};
    if (grid.group == GroupMode::planar_direct_isometries)
    {
        if (dim != 2)
            throw Error("unsupported_dimension", "isometry mode needs planar sets");
        const long na = static_cast<long>(std::floor(eps / grid.angle_step + 1e-9));
        for (long k = 1; k <= na; ++k)
        {
            angles.push_back(k * grid.angle_step);
            angles.push_back(-k * grid.angle_step);
        }
    }
    for (double angle : angles)
        for (long i = -nt; i <= nt; ++i)
            for (long j = (dim == 2 ? -nt : 0); j <= (dim == 2 ? nt : 0); ++j)
            {
                GroupElement g{{i * grid.step, j * grid.step}, angle};
                if (identity_distance(g) <= eps + slack)
                    out.push_back(g);
            }
    std::stable_sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
        return identity_distance(a) < identity_distance(b);
    });
    return out;
}

Point act(const GroupElement& g, Point p) { return rotate(p, g.angle) + g.translation; }
Point act_inverse(const GroupElement& g, Point p) { return rotate(p - g.translation, -g.angle); }

bool window_holds_ball(const DeloneSet& x, double radius)
{
    if (x.window.lo.x > -radius || x.window.hi.x < radius)
        return false;
    return x.dim == 1 || (x.window.lo.y <= -radius && x.window.hi.y >= radius);
}

// Every point of X1.g1 strictly inside the ball has a partner in X2.g2.
bool one_sided(const DeloneSet& x1, const std::vector<std::size_t>& near1, const GroupElement& g1, const DeloneSet& x2,
               const detail::PointGrid& grid2, const GroupElement& g2, double rho, double tol)
{
    for (std::size_t i : near1)
    {
        const Point p = act(g1, x1.points[i]);
        if (norm(p) >= rho - tol)
            continue;
        bool hit = false;
        for (std::size_t j : grid2.within(act_inverse(g2, p), tol))
            if (x2.label(j) == x1.label(i))
            {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

} // namespace

MetricResult delone_metric(const DeloneSet& a, const DeloneSet& b, const MetricGrid& grid, double tol)
{
    if (a.dim != b.dim)
        throw Error("shape_mismatch", "Delone sets have different dimensions");
    if (!(grid.step > 0) || (grid.group == GroupMode::planar_direct_isometries && !(grid.angle_step > 0)))
        throw Error("invalid_argument", "grid spacing must be positive");
    std::vector<double> eps = grid.epsilons;
    std::sort(eps.begin(), eps.end());

    const detail::PointGrid grid_a(a.points, detail::typical_spacing(a.points, a.window, a.dim));
    const detail::PointGrid grid_b(b.points, detail::typical_spacing(b.points, b.window, b.dim));

    MetricResult result;
    for (double e : eps)
    {
        if (!(e > 0 && e < 1))
            throw Error("invalid_argument", "epsilon values must lie in (0, 1)");
        const double rho = 1.0 / e;
        if (!window_holds_ball(a, rho + e) || !window_holds_ball(b, rho + e))
        {
            result.untestable.push_back(e);
            continue;
        }
        const std::vector<std::size_t> near_a = grid_a.within({0, 0}, rho + e + tol);
        const std::vector<std::size_t> near_b = grid_b.within({0, 0}, rho + e + tol);
        const std::vector<GroupElement> elements = group_grid(a.dim, e, grid);
        for (const GroupElement& g1 : elements)
            for (const GroupElement& g2 : elements)
                if (one_sided(a, near_a, g1, b, grid_b, g2, rho, tol) && one_sided(b, near_b, g2, a, grid_a, g1, rho, tol))
                {
                    result.value = e;
                    result.g1 = g1;
                    result.g2 = g2;
                    return result;
                }
    }
    return result;
}

namespace {

// Rotations (0 in translation mode) under which P occurs at point q.
std::optional<double> occurrence_angle(const DeloneSet& x, const detail::PointGrid& grid, std::size_t q, const Patch& p,
                                       GroupMode group, double tol)
{
    auto occurs = [&](double angle) {
        for (const Offset& o : p.offsets)
        {
            const Point target = x.points[q] + (angle == 0.0 ? o.v : rotate(o.v, angle));
            const auto hits = grid.within(target, tol);
            if (std::none_of(hits.begin(), hits.end(), [&](std::size_t j) { return x.label(j) == o.label; }))
                return false;
        }
        return true;
    };
    if (group == GroupMode::translations)
        return occurs(0.0) ? std::optional<double>(0.0) : std::nullopt;

    // Candidate rotations send P's shortest nonzero offset onto a neighbor of q.
    std::vector<Offset> around;
    double shortest = std::numeric_limits<double>::infinity();
    for (const Offset& o : p.offsets)
        if (norm(o.v) > tol)
            shortest = std::min(shortest, norm(o.v));
    if (!std::isfinite(shortest))
        return occurs(0.0) ? std::optional<double>(0.0) : std::nullopt;
    for (std::size_t j : grid.within(x.points[q], shortest + tol))
        around.push_back({x.points[j] - x.points[q], x.label(j)});
    for (double angle : candidate_angles(p.offsets, around, tol))
        if (occurs(angle))
            return angle;
    return std::nullopt;
}

} // namespace

RepetitivityResult repetitivity_radius(const DeloneSet& x, const Patch& p, const RepetitivityOptions& options)
{
    if (!(options.step > 0) || !(options.max_radius > 0))
        throw Error("invalid_argument", "step and max_radius must be positive");
    RepetitivityResult result;
    const double margin = options.max_radius;
    Box region{{x.window.lo.x + margin, x.window.lo.y + margin}, {x.window.hi.x - margin, x.window.hi.y - margin}};
    if (region.lo.x > region.hi.x || (x.dim == 2 && region.lo.y > region.hi.y))
    {
        result.diagnostic = "window too small for the requested maximum radius";
        return result;
    }

    const detail::PointGrid grid(x.points, detail::typical_spacing(x.points, x.window, x.dim));
    const std::string anchor_label = [&] {
        for (const Offset& o : p.offsets)
            if (norm(o.v) == 0.0)
                return o.label;
        return std::string();
    }();

    // Footprints of all occurrences.
    std::vector<std::optional<double>> angle(x.points.size());
    parallel_for(x.points.size(), [&](std::size_t q) {
        if (x.label(q) == anchor_label)
            angle[q] = occurrence_angle(x, grid, q, p, options.group, options.tol);
    });
    std::vector<Point> anchors;
    std::vector<std::vector<Point>> footprints;
    for (std::size_t q = 0; q < x.points.size(); ++q)
        if (angle[q])
        {
            anchors.push_back(x.points[q]);
            std::vector<Point> f;
            for (const Offset& o : p.offsets)
                f.push_back(x.points[q] + rotate(o.v, *angle[q]));
            footprints.push_back(std::move(f));
        }
    result.occurrences = anchors.size();
    const detail::PointGrid occ(anchors, std::max(options.max_radius, detail::typical_spacing(anchors, x.window, x.dim)));

    auto samples = [&](double lo, double hi) {
        std::vector<double> s;
        const long n = static_cast<long>(std::floor((hi - lo) / options.step + 1e-9));
        for (long i = 0; i <= n; ++i)
            s.push_back(lo + i * options.step);
        if (hi - s.back() > 1e-12)
            s.push_back(hi);
        return s;
    };
    const std::vector<double> xs = samples(region.lo.x, region.hi.x);
    const std::vector<double> ys = x.dim == 2 ? samples(region.lo.y, region.hi.y) : std::vector<double>{0.0};

    std::vector<Point> centers;
    for (double cx : xs)
        for (double cy : ys)
            centers.push_back({cx, cy});
    std::vector<double> need(centers.size());
    parallel_for(centers.size(), [&](std::size_t k) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t o : occ.within(centers[k], options.max_radius))
        {
            double worst = 0.0;
            for (const Point& f : footprints[o])
                worst = std::max(worst, distance(centers[k], f));
            best = std::min(best, worst);
        }
        need[k] = best;
    });

    result.found = true;
    for (std::size_t k = 0; k < centers.size(); ++k)
    {
        if (need[k] > options.max_radius)
        {
            result.found = false;
            result.radius = 0.0;
            result.worst_center = centers[k];
            result.diagnostic = "no copy of the patch within the maximum radius of a sampled center";
            return result;
        }
        if (need[k] > result.radius)
        {
            result.radius = need[k];
            result.worst_center = centers[k];
        }
    }
    result.upper_bound = result.radius + 0.5 * options.step * std::sqrt(static_cast<double>(x.dim));
    return result;
}

std::optional<std::size_t> word_repetitivity(std::span<const int> word, std::span<const int> factor)
{
    const std::size_t n = word.size(), m = factor.size();
    if (m == 0)
        return 0;
    if (m > n)
        return std::nullopt;
    // next[s] = first occurrence starting at or after s.
    std::vector<std::size_t> next(n + 1, n + 1);
    for (std::size_t s = n - m + 1; s-- > 0;)
        next[s] = std::equal(factor.begin(), factor.end(), word.begin() + static_cast<std::ptrdiff_t>(s)) ? s : next[s + 1];
    auto works = [&](std::size_t len) {
        for (std::size_t s = 0; s + len <= n; ++s)
            if (next[s] > n || next[s] + m > s + len)
                return false;
        return true;
    };
    if (!works(n))
        return std::nullopt;
    std::size_t lo = m, hi = n;
    while (lo < hi)
    {
        const std::size_t mid = (lo + hi) / 2;
        if (works(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace solenoid
