#pragma once

// Uniform bucket grid over a point set, used for neighbor queries.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "solenoid/geometry.hpp"

namespace solenoid::detail {

class PointGrid
{
public:
    PointGrid(std::span<const Point> points, double cell) : points_(points), cell_(cell > 0 ? cell : 1.0)
    {
        for (std::size_t i = 0; i < points.size(); ++i)
            buckets_[key(cell_of(points[i].x), cell_of(points[i].y))].push_back(i);
    }

    /// Indices of points within distance `radius` of p (inclusive).
    std::vector<std::size_t> within(Point p, double radius) const
    {
        std::vector<std::size_t> out;
        const long x0 = cell_of(p.x - radius), x1 = cell_of(p.x + radius);
        const long y0 = cell_of(p.y - radius), y1 = cell_of(p.y + radius);
        for (long cx = x0; cx <= x1; ++cx)
            for (long cy = y0; cy <= y1; ++cy)
            {
                auto it = buckets_.find(key(cx, cy));
                if (it == buckets_.end())
                    continue;
                for (std::size_t i : it->second)
                    if (distance(points_[i], p) <= radius)
                        out.push_back(i);
            }
        return out;
    }

    /// The k nearest points to p other than `exclude`, nearest first (ties by
    /// index).
    std::vector<std::size_t> nearest(Point p, std::size_t k, std::size_t exclude) const
    {
        const std::size_t available = points_.size() - (exclude < points_.size() ? 1 : 0);
        k = std::min(k, available);
        double radius = cell_;
        while (true)
        {
            std::vector<std::size_t> found = within(p, radius);
            std::erase(found, exclude);
            if (found.size() >= k || found.size() == available)
            {
                std::sort(found.begin(), found.end(), [&](std::size_t a, std::size_t b) {
                    const double da = distance(points_[a], p), db = distance(points_[b], p);
                    return da != db ? da < db : a < b;
                });
                found.resize(k);
                return found;
            }
            radius *= 2.0;
        }
    }

private:
    long cell_of(double v) const { return static_cast<long>(std::floor(v / cell_)); }
    static long long key(long cx, long cy) { return (static_cast<long long>(cx) << 32) ^ static_cast<long long>(static_cast<unsigned>(cy)); }

    std::span<const Point> points_;
    double cell_;
    std::unordered_map<long long, std::vector<std::size_t>> buckets_;
};

/// A bucket size giving a few points per cell.
inline double typical_spacing(std::span<const Point> points, const Box& window, int dim)
{
    if (points.empty())
        return 1.0;
    const double m = measure(window, dim);
    const double n = static_cast<double>(points.size());
    const double s = dim == 1 ? m / n : std::sqrt(m / n);
    return s > 0 && std::isfinite(s) ? 2.0 * s : 1.0;
}

} // namespace solenoid::detail
