#include "solenoid/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "solenoid/cone.hpp"

namespace solenoid {

BranchedComplex graph_complex(std::vector<std::string> vertex_labels, const std::vector<GraphEdge>& edges)
{
    BranchedComplex s;
    s.dim = 1;
    const std::size_t nv = vertex_labels.size();
    s.labels.resize(2);
    s.labels[0] = std::move(vertex_labels);
    s.boundary.resize(2);
    s.boundary[1] = IntMatrix(nv, edges.size());
    s.sides.resize(nv);
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
        const auto& edge = edges[e];
        if (edge.tail >= nv || edge.head >= nv)
            throw Error("invalid_complex", "edge '" + edge.label + "' references a missing vertex");
        s.labels[1].push_back(edge.label);
        s.boundary[1](edge.head, e) += 1;
        s.boundary[1](edge.tail, e) -= 1;
        s.sides[edge.head].positive.push_back({e, 1});
        s.sides[edge.tail].negative.push_back({e, 0});
        s.region_of_cell.push_back(e);
    }
    s.region_count = edges.size();
    for (auto& side : s.sides)
    {
        std::sort(side.positive.begin(), side.positive.end());
        std::sort(side.negative.begin(), side.negative.end());
    }
    return s;
}

BranchedComplex wedge_of_circles(std::size_t k)
{
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < k; ++i)
        edges.push_back({"e" + std::to_string(i), 0, 0});
    return graph_complex({"v"}, edges);
}

ComplexReport validate_complex(const BranchedComplex& s)
{
    ComplexReport report;
    auto fail = [&](std::string kind, int degree, std::vector<std::size_t> cells, std::string message) {
        report.valid = false;
        report.issues.push_back({std::move(kind), degree, std::move(cells), std::move(message)});
    };

    if (s.dim < 1)
    {
        fail("dimension", s.dim, {}, "top dimension must be at least 1");
        return report;
    }
    const auto g = static_cast<std::size_t>(s.dim);
    if (s.labels.size() != g + 1 || s.boundary.size() != g + 1)
    {
        fail("shape", s.dim, {}, "expected cell lists and boundary maps for degrees 0.." + std::to_string(g));
        return report;
    }
    for (std::size_t i = 1; i <= g; ++i)
    {
        const auto& d = s.boundary[i];
        if (d.rows() != s.labels[i - 1].size() || d.cols() != s.labels[i].size())
        {
            fail("shape", static_cast<int>(i), {}, "boundary map has the wrong shape");
            return report;
        }
    }

    // Augmentation: every 1-cell has boundary of total weight zero.
    for (std::size_t e = 0; e < s.labels[1].size(); ++e)
    {
        Integer sum = 0;
        for (std::size_t v = 0; v < s.labels[0].size(); ++v)
            sum += s.boundary[1](v, e);
        if (sum != 0)
            fail("augmentation", 1, {e}, "boundary of 1-cell '" + s.labels[1][e] + "' does not have weight zero");
    }

    for (std::size_t i = 1; i < g; ++i)
    {
        const IntMatrix prod = s.boundary[i] * s.boundary[i + 1];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (prod(r, c) != 0)
                    fail("boundary_squared", static_cast<int>(i + 1), {c, r},
                         "d" + std::to_string(i) + " d" + std::to_string(i + 1) + " is nonzero at (" +
                             std::to_string(r) + ", " + std::to_string(c) + ")");
    }

    const std::size_t top = s.labels[g].size();
    const std::size_t faces = s.labels[g - 1].size();
    if (s.sides.size() != faces)
        fail("sides", s.dim - 1, {}, "need one side record per codimension-one cell");
    else
        for (std::size_t f = 0; f < faces; ++f)
        {
            std::set<Germ> seen;
            std::vector<Integer> tally(top, Integer(0));
            bool bad = false;
            for (const auto& [list, sign] : {std::pair{&s.sides[f].positive, 1}, std::pair{&s.sides[f].negative, -1}})
                for (const Germ& germ : *list)
                {
                    if (germ.cell >= top || !seen.insert(germ).second)
                    {
                        bad = true;
                        continue;
                    }
                    tally[germ.cell] += sign;
                }
            if (bad)
                fail("sides", s.dim - 1, {f}, "side lists of '" + s.labels[g - 1][f] + "' repeat a germ or name a missing cell");
            for (std::size_t c = 0; c < top; ++c)
                if (tally[c] != s.boundary[g](f, c))
                    fail("sides", s.dim - 1, {f, c},
                         "side lists of '" + s.labels[g - 1][f] + "' disagree with the boundary of '" + s.labels[g][c] + "'");
        }

    if (s.region_of_cell.size() != top)
        fail("regions", s.dim, {}, "region map must cover every top cell");
    else
    {
        std::vector<bool> hit(s.region_count, false);
        for (std::size_t c = 0; c < top; ++c)
        {
            if (s.region_of_cell[c] >= s.region_count)
                fail("regions", s.dim, {c}, "top cell maps to an undeclared region");
            else
                hit[s.region_of_cell[c]] = true;
        }
        for (std::size_t r = 0; r < s.region_count; ++r)
            if (!hit[r])
                fail("regions", s.dim, {r}, "region " + std::to_string(r) + " has no cells");
    }
    return report;
}

IntMatrix switching_matrix(const BranchedComplex& s)
{
    const auto g = static_cast<std::size_t>(s.dim);
    const std::size_t top = s.labels.at(g).size();
    IntMatrix m(0, top);
    for (std::size_t f = 0; f < s.sides.size(); ++f)
    {
        IntVector row(top, Integer(0));
        for (const Germ& germ : s.sides[f].positive)
            row.at(germ.cell) += 1;
        for (const Germ& germ : s.sides[f].negative)
            row.at(germ.cell) -= 1;
        m.append_row(row);
    }
    std::map<std::size_t, std::size_t> first_in_region;
    for (std::size_t c = 0; c < top; ++c)
    {
        const std::size_t region = s.region_of_cell.at(c);
        auto [it, inserted] = first_in_region.try_emplace(region, c);
        if (inserted)
            continue;
        IntVector row(top, Integer(0));
        row[it->second] = 1;
        row[c] = -1;
        m.append_row(row);
    }
    return m;
}

std::vector<IntVector> top_cycle_space(const BranchedComplex& s)
{
    return null_space(switching_matrix(s));
}

bool validate_switching(const BranchedComplex& s, const Chain& z)
{
    const std::size_t top = s.top_count();
    if (z.coefficients.size() != top)
        throw Error("shape_mismatch", "chain has " + std::to_string(z.coefficients.size()) + " coefficients, complex has " +
                                          std::to_string(top) + " top cells");
    const IntMatrix m = switching_matrix(s);
    for (std::size_t r = 0; r < m.rows(); ++r)
    {
        Rational acc = 0;
        for (std::size_t c = 0; c < top; ++c)
            if (m(r, c) != 0)
                acc += Rational(m(r, c)) * z.coefficients[c];
        if (acc != 0)
            return false;
    }
    return true;
}

HomologyCone positive_cone(const BranchedComplex& s)
{
    HomologyCone cone;
    const IntMatrix m = switching_matrix(s);
    cone.cycle_basis = null_space(m);
    if (!cone.cycle_basis.empty())
        cone.extremal_rays = nonnegative_kernel_rays(m, s.top_count());
    return cone;
}

} // namespace solenoid
