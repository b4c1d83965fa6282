#include "solenoid/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "point_grid.hpp"

namespace solenoid {

namespace {

struct LabeledPolygon
{
    std::vector<Point> v;
    std::vector<long> edge; // edge i runs v[i] -> v[i+1]
};

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

double area(const std::vector<Point>& v)
{
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += cross(v[i], v[(i + 1) % v.size()]);
    return 0.5 * s;
}

// Keeps the side of the bisector of (p, q) that contains p. The new edge along
// the bisector is labeled q.
LabeledPolygon clip(const LabeledPolygon& poly, Point p, Point q, long q_index, double eps)
{
    const Point m = 0.5 * (p + q);
    const Point n = q - p;
    auto side = [&](Point x) { return (x.x - m.x) * n.x + (x.y - m.y) * n.y; };
    LabeledPolygon out;
    const std::size_t k = poly.v.size();
    for (std::size_t i = 0; i < k; ++i)
    {
        const Point a = poly.v[i], b = poly.v[(i + 1) % k];
        const double sa = side(a), sb = side(b);
        const bool ia = sa <= eps, ib = sb <= eps;
        auto cut = [&] {
            const double t = sa / (sa - sb);
            return a + t * (b - a);
        };
        if (ia && ib)
        {
            out.v.push_back(a);
            out.edge.push_back(poly.edge[i]);
        }
        else if (ia)
        {
            out.v.push_back(a);
            out.edge.push_back(poly.edge[i]);
            out.v.push_back(cut());
            out.edge.push_back(q_index);
        }
        else if (ib)
        {
            out.v.push_back(cut());
            out.edge.push_back(poly.edge[i]);
        }
    }
    // Drop zero-length edges.
    for (std::size_t i = 0; i < out.v.size() && out.v.size() > 1;)
    {
        const std::size_t j = (i + 1) % out.v.size();
        if (distance(out.v[i], out.v[j]) <= eps)
        {
            out.edge[i] = out.edge[j];
            out.v.erase(out.v.begin() + static_cast<std::ptrdiff_t>(j));
            out.edge.erase(out.edge.begin() + static_cast<std::ptrdiff_t>(j));
            if (j < i)
                --i;
        }
        else
            ++i;
    }
    return out;
}

VoronoiDiagram diagram_1d(const DeloneSet& x)
{
    VoronoiDiagram d;
    d.dim = 1;
    d.window = x.window;
    std::vector<std::size_t> order(x.points.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x.points[a].x < x.points[b].x; });
    d.cells.resize(x.points.size());
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        const std::size_t i = order[k];
        VoronoiCell& c = d.cells[i];
        c.site = i;
        const long left = k > 0 ? static_cast<long>(order[k - 1]) : -1;
        const long right = k + 1 < order.size() ? static_cast<long>(order[k + 1]) : -1;
        const double lo = left >= 0 ? 0.5 * (x.points[left].x + x.points[i].x) : x.window.lo.x;
        const double hi = right >= 0 ? 0.5 * (x.points[right].x + x.points[i].x) : x.window.hi.x;
        c.vertices = {{std::max(lo, x.window.lo.x), 0.0}, {std::min(hi, x.window.hi.x), 0.0}};
        c.neighbors = {left, right};
        c.clipped = left < 0 || right < 0;
        c.measure = c.vertices[1].x - c.vertices[0].x;
        if (right >= 0)
            d.adjacency.emplace_back(std::min<std::size_t>(i, right), std::max<std::size_t>(i, right));
    }
    return d;
}

VoronoiDiagram diagram_2d(const DeloneSet& x)
{
    VoronoiDiagram d;
    d.dim = 2;
    d.window = x.window;
    const Box& w = x.window;
    const double scale = std::max({1.0, w.hi.x - w.lo.x, w.hi.y - w.lo.y});
    const double eps = 1e-12 * scale;
    const detail::PointGrid grid(x.points, detail::typical_spacing(x.points, w, 2));
    d.cells.resize(x.points.size());

    for (std::size_t i = 0; i < x.points.size(); ++i)
    {
        const Point p = x.points[i];
        LabeledPolygon poly{{w.lo, {w.hi.x, w.lo.y}, w.hi, {w.lo.x, w.hi.y}}, {-1, -1, -1, -1}};
        std::size_t used = 0;
        std::size_t k = 8;
        while (true)
        {
            const std::vector<std::size_t> nbrs = grid.nearest(p, k, i);
            for (std::size_t t = used; t < nbrs.size(); ++t)
                poly = clip(poly, p, x.points[nbrs[t]], static_cast<long>(nbrs[t]), eps);
            used = nbrs.size();
            double reach = 0.0;
            for (const Point& v : poly.v)
                reach = std::max(reach, distance(v, p));
            // A site farther than twice the cell radius cannot cut the cell.
            if (nbrs.size() < k || distance(x.points[nbrs.back()], p) >= 2.0 * reach)
                break;
            k *= 2;
        }
        VoronoiCell& c = d.cells[i];
        c.site = i;
        c.vertices = poly.v;
        c.neighbors = poly.edge;
        c.clipped = std::find(poly.edge.begin(), poly.edge.end(), -1) != poly.edge.end();
        c.measure = area(poly.v);
        for (long n : poly.edge)
            if (n >= 0)
                d.adjacency.emplace_back(std::min<std::size_t>(i, n), std::max<std::size_t>(i, n));
    }
    std::sort(d.adjacency.begin(), d.adjacency.end());
    d.adjacency.erase(std::unique(d.adjacency.begin(), d.adjacency.end()), d.adjacency.end());
    return d;
}

} // namespace

VoronoiDiagram voronoi_diagram(const DeloneSet& x)
{
    if (x.dim != 1 && x.dim != 2)
        throw Error("unsupported_dimension", "Voronoi diagrams are supported in dimensions 1 and 2");
    if (x.points.size() < 2)
        throw Error("invalid_argument", "a Voronoi diagram needs at least two points");
    {
        std::vector<Point> sorted = x.points;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (distance(sorted[i], sorted[i + 1]) == 0.0)
                throw Error("duplicate_point", "two sites coincide");
    }
    VoronoiDiagram d = x.dim == 1 ? diagram_1d(x) : diagram_2d(x);
    std::sort(d.adjacency.begin(), d.adjacency.end());
    return d;
}

bool face_to_face(const VoronoiDiagram& v, double tol)
{
    if (v.dim == 1)
    {
        for (const VoronoiCell& c : v.cells)
            if (c.neighbors[1] >= 0)
            {
                const VoronoiCell& n = v.cells[static_cast<std::size_t>(c.neighbors[1])];
                if (n.neighbors[0] != static_cast<long>(c.site) || std::abs(n.vertices[0].x - c.vertices[1].x) > tol)
                    return false;
            }
        return true;
    }
    for (const VoronoiCell& c : v.cells)
        for (std::size_t e = 0; e < c.neighbors.size(); ++e)
        {
            if (c.neighbors[e] < 0)
                continue;
            const Point a = c.vertices[e], b = c.vertices[(e + 1) % c.vertices.size()];
            const VoronoiCell& n = v.cells[static_cast<std::size_t>(c.neighbors[e])];
            bool found = false;
            for (std::size_t f = 0; f < n.neighbors.size() && !found; ++f)
                found = n.neighbors[f] == static_cast<long>(c.site) && distance(n.vertices[f], b) <= tol &&
                        distance(n.vertices[(f + 1) % n.vertices.size()], a) <= tol;
            if (!found)
                return false;
        }
    return true;
}

std::vector<CellClass> cell_translation_classes(const VoronoiDiagram& v, const DeloneSet& x, double tol)
{
    std::vector<CellClass> classes;
    for (const VoronoiCell& c : v.cells)
    {
        if (c.clipped)
            continue;
        std::vector<Point> shape;
        for (const Point& p : c.vertices)
            shape.push_back(p - x.points[c.site]);
        if (v.dim == 2)
        {
            // Start the cycle at the lowest-then-leftmost vertex.
            auto first = std::min_element(shape.begin(), shape.end(), [&](Point a, Point b) {
                if (std::abs(a.y - b.y) > tol)
                    return a.y < b.y;
                return a.x < b.x;
            });
            std::rotate(shape.begin(), first, shape.end());
        }
        auto same = [&](const std::vector<Point>& s) {
            if (s.size() != shape.size())
                return false;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (distance(s[i], shape[i]) > tol)
                    return false;
            return true;
        };
        auto it = std::find_if(classes.begin(), classes.end(), [&](const CellClass& k) { return same(k.shape); });
        if (it == classes.end())
            classes.push_back({shape, {c.site}});
        else
            it->members.push_back(c.site);
    }
    std::sort(classes.begin(), classes.end(), [](const CellClass& a, const CellClass& b) { return a.shape < b.shape; });
    return classes;
}

std::string to_svg(const VoronoiDiagram& v, const DeloneSet& x)
{
    if (v.dim != 2)
        throw Error("unsupported_dimension", "SVG output is only available for planar diagrams");
    const Box& w = v.window;
    const double width = w.hi.x - w.lo.x, height = w.hi.y - w.lo.y;
    const double unit = 600.0 / std::max({width, height, 1e-12});
    auto sx = [&](double t) { return (t - w.lo.x) * unit; };
    auto sy = [&](double t) { return (w.hi.y - t) * unit; };
    std::ostringstream out;
    out.precision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * unit << "\" height=\"" << height * unit
        << "\">\n";
    for (const VoronoiCell& c : v.cells)
    {
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            out << (i ? " " : "") << sx(c.vertices[i].x) << ',' << sy(c.vertices[i].y);
        out << "\" fill=\"" << (c.clipped ? "#eeeeee" : "#cfe3f7") << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
    }
    for (std::size_t i = 0; i < x.points.size(); ++i)
        out << "<circle cx=\"" << sx(x.points[i].x) << "\" cy=\"" << sy(x.points[i].y) << "\" r=\"1.5\"/>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace solenoid
