#pragma once

// Branched cell complexes: boundary operators, switching rules, the top cycle
// space Z_g and its nonnegative cone H_g^+.

#include <cstddef>
#include <string>
#include <vector>

#include "solenoid/exact.hpp"

namespace solenoid {

/// A germ of a top cell along a codimension-one cell. `slot` is the local
/// boundary position on the top cell (1D: 0 = initial vertex, 1 = terminal
/// vertex; 2D: index of the boundary edge in counter-clockwise order).
struct Germ
{
    std::size_t cell = 0;
    std::size_t slot = 0;

    friend auto operator<=>(const Germ&, const Germ&) = default;
};

/// The two sides of a codimension-one cell. Germs on the positive side enter
/// its boundary row with +1, germs on the negative side with -1.
struct Sides
{
    std::vector<Germ> positive;
    std::vector<Germ> negative;

    friend bool operator==(const Sides&, const Sides&) = default;
};

struct BranchedComplex
{
    int dim = 1;
    /// labels[i] lists the i-cells in basis order, i = 0..dim.
    std::vector<std::vector<std::string>> labels;
    /// boundary[i] maps C_i to C_{i-1}; boundary[0] is empty.
    std::vector<IntMatrix> boundary;
    /// Region id of every top cell.
    std::vector<std::size_t> region_of_cell;
    std::size_t region_count = 0;
    /// One entry per (dim-1)-cell.
    std::vector<Sides> sides;

    std::size_t cell_count(int degree) const { return labels.at(static_cast<std::size_t>(degree)).size(); }
    std::size_t top_count() const { return cell_count(dim); }

    friend bool operator==(const BranchedComplex&, const BranchedComplex&) = default;
};

/// Directed multigraph edge used to assemble one-dimensional complexes.
struct GraphEdge
{
    std::string label;
    std::size_t tail = 0;
    std::size_t head = 0;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// One-dimensional branched complex of a directed multigraph: one region per
/// edge, sides at each vertex = incoming germs (+) and outgoing germs (-).
BranchedComplex graph_complex(std::vector<std::string> vertex_labels, const std::vector<GraphEdge>& edges);

/// Wedge of k oriented circles on one vertex.
BranchedComplex wedge_of_circles(std::size_t k);

struct ComplexIssue
{
    std::string kind;
    int degree = 0;
    std::vector<std::size_t> cells;
    std::string message;

    friend bool operator==(const ComplexIssue&, const ComplexIssue&) = default;
};

struct ComplexReport
{
    bool valid = true;
    std::vector<ComplexIssue> issues;

    friend bool operator==(const ComplexReport&, const ComplexReport&) = default;
};

ComplexReport validate_complex(const BranchedComplex& s);

/// Kirchhoff rows (one per (dim-1)-cell, equal to the rows of the top boundary
/// operator) followed by region-equality rows x_a - x_b = 0.
IntMatrix switching_matrix(const BranchedComplex& s);

/// Exact basis of Z_g = ker(switching_matrix).
std::vector<IntVector> top_cycle_space(const BranchedComplex& s);

struct Chain
{
    RatVector coefficients;

    friend bool operator==(const Chain&, const Chain&) = default;
};

bool validate_switching(const BranchedComplex& s, const Chain& z);

struct HomologyCone
{
    std::vector<IntVector> cycle_basis;
    std::vector<IntVector> extremal_rays;

    std::size_t dimension() const { return cycle_basis.size(); }

    friend bool operator==(const HomologyCone&, const HomologyCone&) = default;
};

HomologyCone positive_cone(const BranchedComplex& s);

} // namespace solenoid
