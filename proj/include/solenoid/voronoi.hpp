#pragma once

// Voronoi tilings of Delone sets in R^1 and R^2, clipped to the window.

#include <cstddef>
#include <string>
#include <vector>

#include "solenoid/geometry.hpp"

namespace solenoid {

struct VoronoiCell
{
    std::size_t site = 0;
    /// d = 1: the two interval endpoints (x only). d = 2: CCW polygon.
    std::vector<Point> vertices;
    /// Per edge (vertices[i] -> vertices[i+1]; in d = 1 per endpoint): the
    /// neighboring site across it, or -1 for the window boundary.
    std::vector<long> neighbors;
    bool clipped = false;
    /// Length or area.
    double measure = 0.0;

    friend bool operator==(const VoronoiCell&, const VoronoiCell&) = default;
};

struct VoronoiDiagram
{
    int dim = 1;
    Box window;
    std::vector<VoronoiCell> cells;
    /// Sorted pairs (i, j), i < j, of sites whose cells share a face.
    std::vector<std::pair<std::size_t, std::size_t>> adjacency;

    friend bool operator==(const VoronoiDiagram&, const VoronoiDiagram&) = default;
};

/// Needs at least two points; throws Error("unsupported_dimension") for d > 2
/// and Error("duplicate_point") when two sites coincide.
VoronoiDiagram voronoi_diagram(const DeloneSet& x);

/// Every shared face appears in both cells with matching endpoints.
bool face_to_face(const VoronoiDiagram& v, double tol = geometric_tolerance);

struct CellClass
{
    /// Cell shape relative to its site, in canonical vertex order.
    std::vector<Point> shape;
    std::vector<std::size_t> members;

    friend bool operator==(const CellClass&, const CellClass&) = default;
};

/// Translation classes of the unclipped cells, ordered by shape.
std::vector<CellClass> cell_translation_classes(const VoronoiDiagram& v, const DeloneSet& x, double tol = geometric_tolerance);

/// SVG picture of a planar diagram with its sites.
std::string to_svg(const VoronoiDiagram& v, const DeloneSet& x);

} // namespace solenoid
