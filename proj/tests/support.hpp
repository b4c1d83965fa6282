#pragma once

#include "oracles.hpp"
#include "solenoid/complex.hpp"

#include <random>

namespace support {

inline oracle::QMatrix to_q(const solenoid::IntMatrix& m)
{
    oracle::QMatrix out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = oracle::Q(m(i, j));
    return out;
}

inline oracle::QMatrix to_q(const std::vector<solenoid::IntVector>& rows)
{
    oracle::QMatrix out;
    for (const auto& r : rows)
    {
        std::vector<oracle::Q> q;
        for (const auto& z : r)
            q.emplace_back(z);
        out.push_back(q);
    }
    return out;
}

// Switching constraints read off the side data rather than the boundary
// operator: incoming germs minus outgoing germs at every branch locus, plus
// equal weights within a region.
inline oracle::QMatrix switching_rows(const solenoid::BranchedComplex& s)
{
    const std::size_t n = s.top_count();
    oracle::QMatrix rows;
    for (const auto& side : s.sides)
    {
        std::vector<oracle::Q> r(n, oracle::Q(0));
        for (const auto& g : side.positive)
            r[g.cell] += 1;
        for (const auto& g : side.negative)
            r[g.cell] -= 1;
        rows.push_back(r);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (s.region_of_cell[a] == s.region_of_cell[b])
            {
                std::vector<oracle::Q> r(n, oracle::Q(0));
                r[a] = 1;
                r[b] = -1;
                rows.push_back(r);
            }
    return rows;
}

inline std::set<std::vector<oracle::Z>> ray_set(const std::vector<solenoid::IntVector>& rays)
{
    std::set<std::vector<oracle::Z>> out;
    for (const auto& r : rays)
        out.insert(std::vector<oracle::Z>(r.begin(), r.end()));
    return out;
}

// Random directed multigraphs with at most six edges that pass validation.
inline std::vector<solenoid::BranchedComplex> random_valid_graphs(std::size_t count, unsigned seed)
{
    std::mt19937 rng(seed);
    std::vector<solenoid::BranchedComplex> out;
    while (out.size() < count)
    {
        const std::size_t v = 1 + rng() % 4;
        const std::size_t e = 1 + rng() % 6;
        std::vector<std::string> vertices;
        for (std::size_t i = 0; i < v; ++i)
            vertices.push_back("v" + std::to_string(i));
        std::vector<solenoid::GraphEdge> edges;
        for (std::size_t i = 0; i < e; ++i)
            edges.push_back({"e" + std::to_string(i), rng() % v, rng() % v});
        auto c = solenoid::graph_complex(vertices, edges);
        if (solenoid::validate_complex(c).valid)
            out.push_back(std::move(c));
    }
    return out;
}

} // namespace support
