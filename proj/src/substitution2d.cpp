#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "solenoid/substitution.hpp"

namespace solenoid {

namespace {

using Wide = __int128;

Wide cross(LatticePoint o, LatticePoint a, LatticePoint b)
{
    return static_cast<Wide>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<Wide>(a[1] - o[1]) * (b[0] - o[0]);
}

// Twice the signed area.
Wide area2(const std::vector<LatticePoint>& v)
{
    Wide s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const LatticePoint& a = v[i];
        const LatticePoint& b = v[(i + 1) % v.size()];
        s += static_cast<Wide>(a[0]) * b[1] - static_cast<Wide>(a[1]) * b[0];
    }
    return s;
}

bool on_segment(LatticePoint p, LatticePoint a, LatticePoint b)
{
    if (cross(a, b, p) != 0)
        return false;
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
           p[1] <= std::max(a[1], b[1]);
}

bool on_boundary(LatticePoint p, const std::vector<LatticePoint>& poly)
{
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (on_segment(p, poly[i], poly[(i + 1) % poly.size()]))
            return true;
    return false;
}

// Closed point-in-polygon test in exact arithmetic.
bool inside_or_on(LatticePoint p, const std::vector<LatticePoint>& poly)
{
    if (on_boundary(p, poly))
        return true;
    int winding = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
    {
        const LatticePoint& a = poly[i];
        const LatticePoint& b = poly[(i + 1) % poly.size()];
        if (a[1] <= p[1])
        {
            if (b[1] > p[1] && cross(a, b, p) > 0)
                ++winding;
        }
        else if (b[1] <= p[1] && cross(a, b, p) < 0)
            --winding;
    }
    return winding != 0;
}

using Triangle = std::array<LatticePoint, 3>;

// Ear clipping of a simple CCW polygon.
std::vector<Triangle> triangulate(std::vector<LatticePoint> v)
{
    std::vector<Triangle> out;
    auto drop_collinear = [&] {
        for (std::size_t i = 0; i < v.size() && v.size() > 3;)
        {
            const std::size_t n = v.size();
            if (cross(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == 0)
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
    };
    drop_collinear();
    while (v.size() > 3)
    {
        const std::size_t n = v.size();
        bool clipped = false;
        for (std::size_t i = 0; i < n && !clipped; ++i)
        {
            const LatticePoint a = v[(i + n - 1) % n], b = v[i], c = v[(i + 1) % n];
            if (cross(a, b, c) <= 0)
                continue;
            bool empty = true;
            for (std::size_t j = 0; j < n && empty; ++j)
            {
                const LatticePoint& p = v[j];
                if (p == a || p == b || p == c)
                    continue;
                empty = !(cross(a, b, p) >= 0 && cross(b, c, p) >= 0 && cross(c, a, p) >= 0);
            }
            if (!empty)
                continue;
            out.push_back({a, b, c});
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
        }
        if (!clipped)
            throw Error("invalid_substitution", "polygon is not simple");
        drop_collinear();
    }
    out.push_back({v[0], v[1], v[2]});
    return out;
}

// Interiors of two CCW triangles are disjoint iff some edge line separates them.
bool interiors_disjoint(const Triangle& s, const Triangle& t)
{
    auto separated = [](const Triangle& a, const Triangle& b) {
        for (int i = 0; i < 3; ++i)
        {
            const LatticePoint p = a[i], q = a[(i + 1) % 3];
            if (std::all_of(b.begin(), b.end(), [&](const LatticePoint& x) { return cross(p, q, x) <= 0; }))
                return true;
        }
        return false;
    };
    return separated(s, t) || separated(t, s);
}

long gcd_abs(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

// Boundary points of a polygon, with every edge subdivided at lattice points.
std::vector<LatticePoint> subdivided(const std::vector<LatticePoint>& poly)
{
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < poly.size(); ++i)
    {
        const LatticePoint a = poly[i], b = poly[(i + 1) % poly.size()];
        const long g = gcd_abs(b[0] - a[0], b[1] - a[1]);
        for (long k = 0; k < g; ++k)
            out.push_back({a[0] + k * (b[0] - a[0]) / g, a[1] + k * (b[1] - a[1]) / g});
    }
    return out;
}

LatticePoint add(LatticePoint a, LatticePoint b) { return {a[0] + b[0], a[1] + b[1]}; }
LatticePoint scale(long k, LatticePoint a) { return {k * a[0], k * a[1]}; }

std::vector<Placement> children(const Substitution2D& s, const Placement& parent)
{
    std::vector<Placement> out;
    const int order = s.rotation_order();
    for (const Placement& c : s.rules[parent.prototile])
        out.push_back({c.prototile, (parent.rotation + c.rotation) % order,
                       add(scale(s.expansion, parent.translation), rotate(s, c.translation, parent.rotation))});
    return out;
}

std::vector<Point> euclidean(const Substitution2D& s, const std::vector<LatticePoint>& v)
{
    std::vector<Point> out;
    for (const LatticePoint& p : v)
        out.push_back(to_euclidean(s, p));
    return out;
}

Point centroid(const std::vector<Point>& v)
{
    double a = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const Point p = v[i], q = v[(i + 1) % v.size()];
        const double c = p.x * q.y - q.x * p.y;
        a += c;
        cx += (p.x + q.x) * c;
        cy += (p.y + q.y) * c;
    }
    return {cx / (3 * a), cy / (3 * a)};
}

double segment_distance(Point p, Point a, Point b)
{
    const Point d = b - a;
    const double len2 = d.x * d.x + d.y * d.y;
    const double t = len2 > 0 ? std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2, 0.0, 1.0) : 0.0;
    return distance(p, a + t * d);
}

bool inside_or_on(Point p, const std::vector<Point>& poly, double tol)
{
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (segment_distance(p, poly[i], poly[(i + 1) % poly.size()]) <= tol)
            return true;
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        if ((poly[i].y > p.y) != (poly[j].y > p.y) &&
            p.x < (poly[j].x - poly[i].x) * (p.y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x)
            in = !in;
    return in;
}

// Largest axis-aligned box with corners on the vertex coordinate grid that
// lies inside the polygon.
Box core_box(const std::vector<Point>& poly)
{
    std::vector<double> xs, ys;
    for (const Point& p : poly)
    {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const double tol = 1e-12;
    Box best{};
    double best_area = -1.0;
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            for (std::size_t c = 0; c < ys.size(); ++c)
                for (std::size_t d = c + 1; d < ys.size(); ++d)
                {
                    const Box box{{xs[a], ys[c]}, {xs[b], ys[d]}};
                    const double area = (xs[b] - xs[a]) * (ys[d] - ys[c]);
                    if (area <= best_area + tol)
                        continue;
                    const Point corners[] = {box.lo, {box.hi.x, box.lo.y}, box.hi, {box.lo.x, box.hi.y},
                                             0.5 * (box.lo + box.hi)};
                    bool ok = std::all_of(std::begin(corners), std::end(corners),
                                          [&](Point p) { return inside_or_on(p, poly, tol); });
                    for (const Point& v : poly)
                        ok = ok && !(v.x > box.lo.x + tol && v.x < box.hi.x - tol && v.y > box.lo.y + tol &&
                                     v.y < box.hi.y - tol);
                    if (ok)
                    {
                        best = box;
                        best_area = area;
                    }
                }
    if (best_area < 0)
        throw Error("invalid_substitution", "no axis-aligned core box fits inside the prototile");
    return best;
}

} // namespace

std::string Substitution2D::type_label(std::size_t type) const
{
    const std::size_t order = static_cast<std::size_t>(rotation_order());
    return prototiles.at(type / order).name + "@" + std::to_string((type % order) * (360 / order));
}

LatticePoint rotate(const Substitution2D& s, LatticePoint p, int rotation)
{
    const int order = s.rotation_order();
    rotation = ((rotation % order) + order) % order;
    for (int k = 0; k < rotation; ++k)
        p = s.lattice == Lattice::square ? LatticePoint{-p[1], p[0]} : LatticePoint{-p[1], p[0] + p[1]};
    return p;
}

Point to_euclidean(const Substitution2D& s, LatticePoint p)
{
    if (s.lattice == Lattice::square)
        return {static_cast<double>(p[0]), static_cast<double>(p[1])};
    return {static_cast<double>(p[0]) + 0.5 * static_cast<double>(p[1]), std::sqrt(3.0) / 2.0 * static_cast<double>(p[1])};
}

std::vector<LatticePoint> tile_vertices(const Substitution2D& s, const Placement& p)
{
    std::vector<LatticePoint> out;
    for (const LatticePoint& v : s.prototiles.at(p.prototile).vertices)
        out.push_back(add(rotate(s, v, p.rotation), p.translation));
    return out;
}

void validate(const Substitution2D& s)
{
    if (s.expansion < 2)
        throw Error("invalid_substitution", "expansion must be an integer >= 2");
    if (s.prototiles.empty() || s.rules.size() != s.prototiles.size())
        throw Error("invalid_substitution", "one rule per prototile is required");
    for (std::size_t p = 0; p < s.prototiles.size(); ++p)
    {
        const auto& proto = s.prototiles[p];
        if (proto.vertices.size() < 3 || area2(proto.vertices) <= 0)
            throw Error("invalid_substitution", "prototile '" + proto.name + "' is not a counter-clockwise polygon");
        triangulate(proto.vertices);
        std::vector<LatticePoint> big;
        for (const LatticePoint& v : proto.vertices)
            big.push_back(scale(s.expansion, v));

        Wide total = 0;
        std::vector<std::vector<Triangle>> pieces;
        for (const Placement& c : s.rules[p])
        {
            if (c.prototile >= s.prototiles.size() || c.rotation < 0 || c.rotation >= s.rotation_order())
                throw Error("invalid_substitution", "rule for '" + proto.name + "' has an invalid placement");
            const auto v = tile_vertices(s, c);
            total += area2(v);
            for (const LatticePoint& x : v)
                if (!inside_or_on(x, big))
                    throw Error("invalid_substitution", "image of '" + proto.name + "' leaves the expanded tile");
            pieces.push_back(triangulate(v));
        }
        if (total != static_cast<Wide>(s.expansion) * s.expansion * area2(proto.vertices))
            throw Error("invalid_substitution", "image areas of '" + proto.name + "' do not add up");
        for (std::size_t a = 0; a < pieces.size(); ++a)
            for (std::size_t b = a + 1; b < pieces.size(); ++b)
                for (const Triangle& t : pieces[a])
                    for (const Triangle& u : pieces[b])
                        if (!interiors_disjoint(t, u))
                            throw Error("invalid_substitution", "images in the rule for '" + proto.name + "' overlap");
    }
}

std::vector<Placement> iterate(const Substitution2D& s, const Placement& seed, std::size_t n)
{
    std::vector<Placement> tiles{seed};
    for (std::size_t step = 0; step < n; ++step)
    {
        std::size_t next = 0;
        for (const Placement& t : tiles)
            next += s.rules.at(t.prototile).size();
        if (next > max_tiles)
            throw Error("overflow", "iteration would exceed " + std::to_string(max_tiles) + " tiles");
        std::vector<Placement> out;
        out.reserve(next);
        for (const Placement& t : tiles)
            for (const Placement& c : children(s, t))
                out.push_back(c);
        tiles = std::move(out);
    }
    return tiles;
}

IntMatrix substitution_matrix(const Substitution2D& s)
{
    const std::size_t n = s.type_count();
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
        const Placement parent{j / static_cast<std::size_t>(s.rotation_order()),
                               static_cast<int>(j % static_cast<std::size_t>(s.rotation_order())),
                               {0, 0}};
        for (const Placement& c : children(s, parent))
            m(s.type_of(c), j) += 1;
    }
    return m;
}

bool primitive(const Substitution2D& s) { return primitivity_exponent(substitution_matrix(s)).has_value(); }

DeloneSet to_delone(const Substitution2D& s, std::size_t seed_prototile, std::size_t n)
{
    if (seed_prototile >= s.prototiles.size())
        throw Error("invalid_argument", "unknown seed prototile");
    DeloneSet x;
    x.dim = 2;
    const Box core = core_box(euclidean(s, s.prototiles[seed_prototile].vertices));
    const double k = std::pow(static_cast<double>(s.expansion), static_cast<double>(n));
    x.window = {k * core.lo, k * core.hi};

    x.r = std::numeric_limits<double>::infinity();
    x.R = 0.0;
    for (std::size_t t = 0; t < s.type_count(); ++t)
    {
        const Placement p{t / static_cast<std::size_t>(s.rotation_order()),
                          static_cast<int>(t % static_cast<std::size_t>(s.rotation_order())),
                          {0, 0}};
        const auto v = euclidean(s, tile_vertices(s, p));
        const Point c = centroid(v);
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            x.r = std::min(x.r, segment_distance(c, v[i], v[(i + 1) % v.size()]));
            for (std::size_t j = i + 1; j < v.size(); ++j)
                x.R = std::max(x.R, distance(v[i], v[j]));
        }
    }

    for (const Placement& t : iterate(s, {seed_prototile, 0, {0, 0}}, n))
    {
        const Point c = centroid(euclidean(s, tile_vertices(s, t)));
        if (!contains(x.window, c, 2, 0.0))
            continue;
        x.points.push_back(c);
        x.labels.push_back(s.type_label(s.type_of(t)));
    }
    return x;
}

namespace {

// Gluing data collected from iterated patches: vertex pairs and edge pairs
// with their relative orientation.
struct Gluings
{
    std::set<std::array<std::size_t, 2>> vertices;
    std::set<std::array<std::size_t, 3>> edges; // (node a, node b, same orientation)

    friend bool operator==(const Gluings&, const Gluings&) = default;
};

struct TypeBoundary
{
    std::vector<std::vector<LatticePoint>> points; // per type, subdivided CCW boundary
    std::vector<std::size_t> offset;               // node id of (type, 0)
    std::size_t nodes = 0;
};

TypeBoundary type_boundaries(const Substitution2D& s)
{
    TypeBoundary b;
    const int order = s.rotation_order();
    for (std::size_t t = 0; t < s.type_count(); ++t)
    {
        const Placement p{t / static_cast<std::size_t>(order), static_cast<int>(t % static_cast<std::size_t>(order)), {0, 0}};
        b.points.push_back(subdivided(tile_vertices(s, p)));
        b.offset.push_back(b.nodes);
        b.nodes += b.points.back().size();
    }
    return b;
}

void collect(const Substitution2D& s, const TypeBoundary& tb, const std::vector<Placement>& tiles, Gluings& out)
{
    std::map<LatticePoint, std::vector<std::size_t>> at_point;
    std::map<std::pair<LatticePoint, LatticePoint>, std::vector<std::pair<std::size_t, bool>>> at_segment;
    for (const Placement& tile : tiles)
    {
        const std::size_t t = s.type_of(tile);
        const auto& pts = tb.points[t];
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            const LatticePoint a = add(pts[i], tile.translation);
            const LatticePoint b = add(pts[(i + 1) % pts.size()], tile.translation);
            at_point[a].push_back(tb.offset[t] + i);
            const bool forward = a < b;
            at_segment[forward ? std::pair{a, b} : std::pair{b, a}].emplace_back(tb.offset[t] + i, forward);
        }
    }
    for (const auto& [p, nodes] : at_point)
        for (std::size_t k = 1; k < nodes.size(); ++k)
            out.vertices.insert({std::min(nodes[0], nodes[k]), std::max(nodes[0], nodes[k])});
    for (const auto& [seg, nodes] : at_segment)
        for (std::size_t k = 1; k < nodes.size(); ++k)
        {
            const auto [a, da] = nodes[0];
            const auto [b, db] = nodes[k];
            out.edges.insert({std::min(a, b), std::max(a, b), static_cast<std::size_t>(da == db)});
        }
}

Gluings stable_gluings(const Substitution2D& s, const TypeBoundary& tb)
{
    Gluings acc;
    std::size_t unchanged = 0;
    for (std::size_t n = 1; unchanged < 2; ++n)
    {
        const Gluings before = acc;
        for (std::size_t p = 0; p < s.prototiles.size(); ++p)
        {
            std::vector<Placement> tiles;
            try
            {
                tiles = iterate(s, {p, 0, {0, 0}}, n);
            }
            catch (const Error&)
            {
                throw Error("language_undecided", "tile adjacencies did not stabilize before the size cap");
            }
            collect(s, tb, tiles, acc);
        }
        unchanged = acc == before ? unchanged + 1 : 0;
    }
    return acc;
}

struct ParityUnionFind
{
    std::vector<std::size_t> parent;
    std::vector<int> parity; // relative to parent

    explicit ParityUnionFind(std::size_t n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

    std::pair<std::size_t, int> find(std::size_t v)
    {
        int p = 0;
        std::size_t r = v;
        while (parent[r] != r)
        {
            p ^= parity[r];
            r = parent[r];
        }
        // Path compression with parity bookkeeping.
        int q = p;
        while (parent[v] != v)
        {
            const std::size_t next = parent[v];
            const int pv = parity[v];
            parent[v] = r;
            parity[v] = q;
            q ^= pv;
            v = next;
        }
        return {r, p};
    }

    // Records x ~ y with relative parity `odd`; false on a conflict.
    bool unite(std::size_t x, std::size_t y, int odd)
    {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry)
            return (px ^ py) == odd;
        if (rx < ry)
        {
            parent[ry] = rx;
            parity[ry] = px ^ py ^ odd;
        }
        else
        {
            parent[rx] = ry;
            parity[rx] = px ^ py ^ odd;
        }
        return true;
    }
};

// Cell classes ordered by smallest member; returns class id per node.
std::vector<std::size_t> class_ids(ParityUnionFind& uf, std::size_t& count)
{
    std::map<std::size_t, std::size_t> id_of_root;
    std::vector<std::size_t> out(uf.parent.size());
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = id_of_root.try_emplace(uf.find(v).first, id_of_root.size()).first->second;
    count = id_of_root.size();
    return out;
}

} // namespace

BranchedComplex anderson_putnam(const Substitution2D& s)
{
    validate(s);
    const TypeBoundary tb = type_boundaries(s);
    const Gluings glue = stable_gluings(s, tb);

    ParityUnionFind vuf(tb.nodes), euf(tb.nodes);
    for (const auto& [a, b] : glue.vertices)
        vuf.unite(a, b, 0);
    for (const auto& e : glue.edges)
        if (!euf.unite(e[0], e[1], e[2] ? 0 : 1))
            throw Error("orientation_conflict", "an edge is glued to itself with reversed orientation");

    std::size_t nv = 0, ne = 0;
    const std::vector<std::size_t> vclass = class_ids(vuf, nv);
    const std::vector<std::size_t> eclass = class_ids(euf, ne);
    const std::size_t nt = s.type_count();

    // Orientation of each edge class: that of its smallest member.
    std::vector<std::size_t> rep(ne, tb.nodes);
    for (std::size_t v = 0; v < tb.nodes; ++v)
        rep[eclass[v]] = std::min(rep[eclass[v]], v);
    auto sign = [&](std::size_t node) { return euf.find(node).second == euf.find(rep[eclass[node]]).second ? 1 : -1; };

    BranchedComplex c;
    c.dim = 2;
    c.labels.resize(3);
    for (std::size_t i = 0; i < nv; ++i)
        c.labels[0].push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < ne; ++i)
        c.labels[1].push_back("e" + std::to_string(i));
    for (std::size_t t = 0; t < nt; ++t)
        c.labels[2].push_back(s.type_label(t));
    c.boundary = {IntMatrix(), IntMatrix(nv, ne), IntMatrix(ne, nt)};
    c.sides.resize(ne);

    std::vector<std::pair<std::size_t, std::size_t>> node_pos(tb.nodes);
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t i = 0; i < tb.points[t].size(); ++i)
            node_pos[tb.offset[t] + i] = {t, i};

    for (std::size_t e = 0; e < ne; ++e)
    {
        const auto [t, i] = node_pos[rep[e]];
        const std::size_t n = tb.points[t].size();
        c.boundary[1](vclass[tb.offset[t] + (i + 1) % n], e) += 1;
        c.boundary[1](vclass[tb.offset[t] + i], e) -= 1;
    }
    for (std::size_t v = 0; v < tb.nodes; ++v)
    {
        const auto [t, i] = node_pos[v];
        const int sg = sign(v);
        c.boundary[2](eclass[v], t) += sg;
        (sg > 0 ? c.sides[eclass[v]].positive : c.sides[eclass[v]].negative).push_back({t, i});
    }
    for (auto& side : c.sides)
    {
        std::sort(side.positive.begin(), side.positive.end());
        std::sort(side.negative.begin(), side.negative.end());
    }
    c.region_of_cell.resize(nt);
    std::iota(c.region_of_cell.begin(), c.region_of_cell.end(), 0);
    c.region_count = nt;
    return c;
}

Submersion self_submersion(const Substitution2D& s)
{
    auto complex = std::make_shared<const BranchedComplex>(anderson_putnam(s));
    const TypeBoundary tb = type_boundaries(s);
    const int order = s.rotation_order();
    Submersion tau{complex, complex, {}, BoundaryMetadata{}};
    for (std::size_t t = 0; t < s.type_count(); ++t)
    {
        const Placement parent{t / static_cast<std::size_t>(order), static_cast<int>(t % static_cast<std::size_t>(order)), {0, 0}};
        const std::vector<Placement> kids = children(s, parent);
        std::vector<LatticePoint> big;
        for (const LatticePoint& v : tile_vertices(s, parent))
            big.push_back(scale(s.expansion, v));

        std::vector<std::size_t> image;
        std::vector<bool> touches;
        for (const Placement& k : kids)
        {
            image.push_back(s.type_of(k));
            const auto v = tile_vertices(s, k);
            touches.push_back(std::any_of(v.begin(), v.end(), [&](const LatticePoint& p) { return on_boundary(p, big); }));
        }

        const auto& pts = tb.points[t];
        std::vector<std::vector<Germ>> slots;
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            const LatticePoint a = scale(s.expansion, pts[i]);
            const LatticePoint b = scale(s.expansion, pts[(i + 1) % pts.size()]);
            std::vector<std::pair<Wide, Germ>> met;
            for (const Placement& k : kids)
            {
                const auto& kp = tb.points[s.type_of(k)];
                for (std::size_t j = 0; j < kp.size(); ++j)
                {
                    const LatticePoint u = add(kp[j], k.translation), w = add(kp[(j + 1) % kp.size()], k.translation);
                    if (on_segment(u, a, b) && on_segment(w, a, b))
                    {
                        const Wide along = static_cast<Wide>(u[0] - a[0]) * (b[0] - a[0]) +
                                           static_cast<Wide>(u[1] - a[1]) * (b[1] - a[1]);
                        met.emplace_back(along, Germ{s.type_of(k), j});
                    }
                }
            }
            std::sort(met.begin(), met.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<Germ> germs;
            for (const auto& m : met)
                germs.push_back(m.second);
            slots.push_back(std::move(germs));
        }
        tau.cell_map.push_back(std::move(image));
        tau.boundary->slot_images.push_back(std::move(slots));
        tau.boundary->touches_boundary.push_back(std::move(touches));
    }
    return tau;
}

std::optional<Substitution1D> builtin_1d(const std::string& name)
{
    if (name == "fibonacci")
        return make_substitution(name, {"a", "b"}, {{0, 1}, {0}});
    if (name == "thue_morse")
        return make_substitution(name, {"a", "b"}, {{0, 1}, {1, 0}});
    if (name == "period_doubling")
        return make_substitution(name, {"a", "b"}, {{0, 1}, {0, 0}});
    return std::nullopt;
}

std::optional<Substitution2D> builtin_2d(const std::string& name)
{
    if (name == "chair")
    {
        Substitution2D s{name, Lattice::square, 2,
                         {{"chair", {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}},
                         {{{0, 0, {0, 0}}, {0, 0, {1, 1}}, {0, 1, {4, 0}}, {0, 3, {0, 4}}}}};
        validate(s);
        return s;
    }
    if (name == "half_hex")
    {
        Substitution2D s{name, Lattice::hexagonal, 2,
                         {{"half_hex", {{0, 0}, {2, 0}, {1, 1}, {0, 1}}}},
                         {{{0, 0, {1, 0}}, {0, 2, {4, 0}}, {0, 3, {2, 2}}, {0, 4, {0, 2}}}}};
        validate(s);
        return s;
    }
    return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"fibonacci", "thue_morse", "period_doubling", "chair", "half_hex"}; }

} // namespace solenoid
