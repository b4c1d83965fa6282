#pragma once

// Delone sets in R^1 and R^2: verification, patches, finite-type
// classification, the matching metric and repetitivity.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solenoid/error.hpp"

namespace solenoid {

/// Absolute tolerance for geometric equality.
inline constexpr double geometric_tolerance = 1e-9;

struct Point
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double norm(Point p);
double distance(Point a, Point b);
Point rotate(Point p, double angle);

/// Axis-aligned window. In one dimension only the x components are used.
struct Box
{
    Point lo;
    Point hi;

    friend bool operator==(const Box&, const Box&) = default;
};

bool contains(const Box& box, Point p, int dim, double tol = geometric_tolerance);
/// Distance from p to the boundary of the box (0 outside).
double boundary_distance(const Box& box, Point p, int dim);
double measure(const Box& box, int dim);

struct DeloneSet
{
    int dim = 1;
    std::vector<Point> points;
    /// Empty, or one label per point.
    std::vector<std::string> labels;
    Box window;
    double r = 0.0;
    double R = 0.0;

    const std::string& label(std::size_t i) const;

    friend bool operator==(const DeloneSet&, const DeloneSet&) = default;
};

/// Checks the structural invariants (dimension, label count, points inside
/// the window, 0 < r <= R) and throws Error("invalid_delone_set") otherwise.
void check_invariants(const DeloneSet& x);

struct DeloneWitness
{
    /// "close_pair", "uncovered_point", "window_too_small" or "empty".
    std::string kind;
    Point center;
    double radius = 0.0;
    std::vector<std::size_t> points;

    friend bool operator==(const DeloneWitness&, const DeloneWitness&) = default;
};

struct DeloneReport
{
    bool uniform_discrete = false;
    bool relatively_dense = false;
    std::vector<DeloneWitness> witnesses;

    friend bool operator==(const DeloneReport&, const DeloneReport&) = default;
};

/// Uniform discreteness: no two distinct points closer than 2r (the per-ball
/// condition for open balls of radius r). Relative density: every point of the
/// window at distance >= R from its boundary is within distance < R of a set
/// point. If no such window point exists the set is reported not relatively
/// dense (nothing can be certified).
DeloneReport verify_delone(std::span<const Point> points, int dim, const Box& window, double r, double R);
DeloneReport verify_delone(const DeloneSet& x);

struct Offset
{
    Point v;
    std::string label;

    friend bool operator==(const Offset&, const Offset&) = default;
    friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// Points of a Delone set within `radius` of an anchor point, as offsets from
/// the anchor (the anchor itself is the zero offset). Offsets are sorted.
struct Patch
{
    std::size_t anchor_index = 0;
    Point anchor;
    std::vector<Offset> offsets;
    double radius = 0.0;

    friend bool operator==(const Patch&, const Patch&) = default;
};

/// One patch per point at distance >= T from the window boundary.
std::vector<Patch> extract_patches(const DeloneSet& x, double radius);

enum class GroupMode
{
    translations,
    planar_direct_isometries
};

std::string to_string(GroupMode g);
GroupMode parse_group_mode(const std::string& s);

struct PatchClass
{
    /// Index (into the input) of the lexicographically smallest member.
    std::size_t representative = 0;
    std::vector<std::size_t> members;

    friend bool operator==(const PatchClass&, const PatchClass&) = default;
};

/// True when some group element maps a onto b (labels exact, positions within
/// Hausdorff distance tol). Patches are compared about their anchors.
bool patches_equivalent(const Patch& a, const Patch& b, GroupMode group, double tol);

/// Partition into equivalence classes, ordered by representative.
std::vector<PatchClass> classify_patches(const std::vector<Patch>& patches, GroupMode group, double tol);

struct MetricGrid
{
    /// Candidate epsilons in (0, 1); tested in increasing order.
    std::vector<double> epsilons;
    /// Translation grid spacing: tested translations lie on step * Z^d.
    double step = 0.01;
    /// Rotation grid spacing (isometry mode only).
    double angle_step = 0.01;
    GroupMode group = GroupMode::translations;

    friend bool operator==(const MetricGrid&, const MetricGrid&) = default;
};

struct GroupElement
{
    Point translation;
    double angle = 0.0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct MetricResult
{
    /// Smallest tested epsilon at which the sets agree, or 1. An upper bound
    /// for the infimum over all epsilons.
    double value = 1.0;
    std::optional<GroupElement> g1;
    std::optional<GroupElement> g2;
    std::vector<double> untestable;

    friend bool operator==(const MetricResult&, const MetricResult&) = default;
};

/// Distance from the identity: Euclidean norm of the translation combined with
/// the rotation angle in radians, sqrt(|t|^2 + angle^2).
double identity_distance(const GroupElement& g);

MetricResult delone_metric(const DeloneSet& a, const DeloneSet& b, const MetricGrid& grid, double tol = geometric_tolerance);

struct RepetitivityOptions
{
    /// Spacing of the sampled ball centers.
    double step = 0.25;
    /// Largest radius searched; also the margin kept from the window boundary.
    double max_radius = 5.0;
    GroupMode group = GroupMode::translations;
    double tol = geometric_tolerance;
};

struct RepetitivityResult
{
    bool found = false;
    /// Largest sampled value of (distance needed to cover a copy of P).
    double radius = 0.0;
    /// radius + half the sample diagonal (the function is 1-Lipschitz).
    double upper_bound = 0.0;
    Point worst_center;
    std::size_t occurrences = 0;
    std::string diagnostic;

    friend bool operator==(const RepetitivityResult&, const RepetitivityResult&) = default;
};

RepetitivityResult repetitivity_radius(const DeloneSet& x, const Patch& p, const RepetitivityOptions& options = {});

/// Symbolic mode: smallest L such that every length-L window of `word`
/// contains `factor`; nullopt when no L <= |word| works.
std::optional<std::size_t> word_repetitivity(std::span<const int> word, std::span<const int> factor);

} // namespace solenoid
