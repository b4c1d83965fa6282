#include "solenoid/cone.hpp"

#include <algorithm>

namespace solenoid {

namespace {

struct Ray
{
    IntVector v;
    std::vector<bool> zero;
};

Ray make_ray(IntVector v)
{
    Ray r;
    r.v = primitive(v);
    r.zero.resize(r.v.size());
    for (std::size_t i = 0; i < r.v.size(); ++i)
        r.zero[i] = r.v[i] == 0;
    return r;
}

bool contains_zeros(const std::vector<bool>& big, const std::vector<bool>& small)
{
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] && !big[i])
            return false;
    return true;
}

bool adjacent(const std::vector<Ray>& rays, std::size_t p, std::size_t q)
{
    std::vector<bool> common(rays[p].zero.size());
    for (std::size_t i = 0; i < common.size(); ++i)
        common[i] = rays[p].zero[i] && rays[q].zero[i];
    for (std::size_t r = 0; r < rays.size(); ++r)
    {
        if (r == p || r == q)
            continue;
        if (contains_zeros(rays[r].zero, common))
            return false;
    }
    return true;
}

} // namespace

std::vector<IntVector> nonnegative_kernel_rays(const IntMatrix& equalities, std::size_t n)
{
    if (!equalities.empty() && equalities.cols() != n)
        throw Error("shape_mismatch", "constraint matrix width differs from ambient dimension");

    std::vector<Ray> rays;
    for (std::size_t i = 0; i < n; ++i)
    {
        IntVector e(n, Integer(0));
        e[i] = 1;
        rays.push_back(make_ray(e));
    }

    for (std::size_t row = 0; row < equalities.rows(); ++row)
    {
        const IntVector a = equalities.row(row);
        if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
            continue;

        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
        {
            s[r] = dot(a, rays[r].v);
            if (s[r] > 0)
                pos.push_back(r);
            else if (s[r] < 0)
                neg.push_back(r);
            else
                next.push_back(rays[r]);
        }
        for (std::size_t p : pos)
            for (std::size_t q : neg)
            {
                if (!adjacent(rays, p, q))
                    continue;
                IntVector w(n);
                for (std::size_t i = 0; i < n; ++i)
                    w[i] = s[p] * rays[q].v[i] - s[q] * rays[p].v[i];
                next.push_back(make_ray(std::move(w)));
            }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational conic_residual(const std::vector<RatVector>& generators, const RatVector& v)
{
    const std::size_t m = v.size();
    const std::size_t k = generators.size();
    for (const auto& g : generators)
        if (g.size() != m)
            throw Error("shape_mismatch", "generator and target differ in length");

    // Columns: k generators, m artificials, rhs. Rows with negative rhs are
    // negated so the artificial basis starts feasible.
    const std::size_t width = k + m + 1;
    RatMatrix t(m + 1, width);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        const int sign = v[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < k; ++j)
            t(i, j) = sign * generators[j][i];
        t(i, k + i) = 1;
        t(i, width - 1) = sign * v[i];
        basis[i] = k + i;
    }
    // Objective row holds reduced costs; its rhs is minus the objective value.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < k || j == width - 1)
                t(m, j) -= t(i, j);

    for (;;)
    {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t(m, j) < 0)
            {
                enter = j;
                break;
            }
        if (enter == width)
            break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (t(i, enter) <= 0)
                continue;
            const Rational ratio = t(i, width - 1) / t(i, enter);
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break; // unbounded direction cannot occur for a bounded-below objective

        const Rational piv = t(leave, enter);
        for (std::size_t j = 0; j < width; ++j)
            t(leave, j) /= piv;
        for (std::size_t i = 0; i <= m; ++i)
        {
            if (i == leave || t(i, enter) == 0)
                continue;
            const Rational f = t(i, enter);
            for (std::size_t j = 0; j < width; ++j)
                t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }
    return -t(m, width - 1);
}

bool in_conic_hull(const std::vector<RatVector>& generators, const RatVector& v, const Rational& tol)
{
    Rational norm = 0;
    for (const auto& x : v)
        norm += abs(x);
    return conic_residual(generators, v) <= tol * (1 + norm);
}

} // namespace solenoid
