#pragma once

// Rectangular box decompositions of translation tilings, commensurable
// rescaling, the projection onto the torus R^d / tau Z^d, and lattice Delone
// sets with a label-preserving certificate.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/exact.hpp"
#include "solenoid/geometry.hpp"
#include "solenoid/substitution.hpp"

namespace solenoid {

struct Length
{
    double value = 0.0;
    std::optional<Rational> exact;

    /// Equal exact values, or values within a relative 1e-12 when either is
    /// inexact.
    bool same_as(const Length& other) const;

    friend bool operator==(const Length&, const Length&) = default;
};

struct RectTile
{
    std::string label;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<Length, 2> size;

    friend bool operator==(const RectTile&, const RectTile&) = default;
};

struct RectTiling
{
    int dim = 1;
    std::vector<RectTile> tiles;
    Box window;

    friend bool operator==(const RectTiling&, const RectTiling&) = default;
};

/// Intervals of s^n(seed) in order, labeled by letter.
RectTiling rect_decompose(const Substitution1D& s, const Word& seed, std::size_t n);
/// Unit squares of the tiles of s^n(seed prototile) inside the expanded core
/// box, labeled by tile type. Needs square-lattice prototiles.
RectTiling rect_decompose(const Substitution2D& s, std::size_t seed_prototile, std::size_t n);

struct RescaleOptions
{
    /// Approximate original ratios by continued fractions instead of mapping
    /// every length to 1 (only used when lengths are incommensurable).
    bool preserve_ratios = false;
    long max_denominator = 16;
};

struct RescaleEntry
{
    Length original;
    Rational scaled;

    friend bool operator==(const RescaleEntry&, const RescaleEntry&) = default;
};

struct RescaleMap
{
    int dim = 1;
    /// Per axis, one entry per distinct length.
    std::array<std::vector<RescaleEntry>, 2> axes;
    Rational tau = 1;
    bool identity = false;

    const Rational& apply(int axis, const Length& l) const;

    friend bool operator==(const RescaleMap&, const RescaleMap&) = default;
};

/// Distinct per-axis lengths of a tiling.
std::array<std::vector<Length>, 2> axis_lengths(const RectTiling& t);

RescaleMap commensurate_rescale(const std::array<std::vector<Length>, 2>& lengths, int dim,
                                const RescaleOptions& options = {});

struct GridTile
{
    std::string label;
    std::array<Rational, 2> lo;
    std::array<Rational, 2> size;

    friend bool operator==(const GridTile&, const GridTile&) = default;
};

struct RescaledTiling
{
    int dim = 1;
    std::vector<GridTile> tiles;
    std::array<Rational, 2> window_lo;
    std::array<Rational, 2> window_hi;
    Rational tau = 1;

    friend bool operator==(const RescaledTiling&, const RescaledTiling&) = default;
};

/// Recomputes tile corners from the rescaled lengths, axis by axis.
RescaledTiling apply_rescale(const RectTiling& t, const RescaleMap& m);

struct FibrationReport
{
    Rational tau = 1;
    /// Distinct images of tile corners in (R / tau Z)^d.
    std::vector<std::array<Rational, 2>> corner_images;
    std::size_t samples = 0;
    std::size_t failures = 0;
    bool commutes = false;

    friend bool operator==(const FibrationReport&, const FibrationReport&) = default;
};

/// Projection x -> (x - corner of the tile containing x) mod tau. Throws
/// Error("off_grid") naming the first tile with a corner off the tau-grid.
/// Checks pi(x + v) = pi(x) + v mod tau on random rational sample pairs.
FibrationReport torus_fibration(const RescaledTiling& t, std::size_t samples = 1000, std::uint32_t seed = 1);

struct LatticeResult
{
    DeloneSet lattice;
    RescaleMap map;
    /// Translation applied after scaling by 1/tau (half a unit for square
    /// barycenters).
    std::array<Rational, 2> shift;
    /// "label_sequence" (1D) or "label_adjacency_graph" (2D).
    std::string certificate_kind;
    bool certificate = false;
    std::string scope;

    friend bool operator==(const LatticeResult&, const LatticeResult&) = default;
};

LatticeResult to_lattice_delone(const RectTiling& t, const RescaleOptions& options = {});

} // namespace solenoid
