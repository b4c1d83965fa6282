#include "solenoid/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace solenoid {

namespace {

double log_integer(const Integer& n)
{
    const std::size_t bits = msb(n) + 1;
    if (bits <= 1000)
        return std::log(n.convert_to<double>());
    const std::size_t shift = bits - 64;
    const Integer top = n >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

void require_same_size(std::size_t a, std::size_t b)
{
    if (a != b)
        throw Error("shape_mismatch", "vectors have different lengths");
    if (a == 0)
        throw Error("shape_mismatch", "empty vectors");
}

} // namespace

double log_rational(const Rational& q)
{
    if (q <= 0)
        throw Error("domain", "logarithm of a nonpositive rational");
    const Rational d = q - 1;
    if (abs(d) < Rational(1, 4))
        return std::log1p(d.convert_to<double>());
    return log_integer(boost::multiprecision::numerator(q)) - log_integer(boost::multiprecision::denominator(q));
}

double hilbert_distance(std::span<const double> x, std::span<const double> y)
{
    require_same_size(x.size(), y.size());
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] > 0) || !(y[i] > 0))
            throw Error("nonpositive", "Hilbert distance needs strictly positive vectors");
        const double r = std::log(x[i]) - std::log(y[i]);
        hi = std::max(hi, r);
        lo = std::min(lo, r);
    }
    return hi - lo;
}

double hilbert_distance(const RatVector& x, const RatVector& y)
{
    require_same_size(x.size(), y.size());
    Rational hi, lo;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (x[i] <= 0 || y[i] <= 0)
            throw Error("nonpositive", "Hilbert distance needs strictly positive vectors");
        const Rational r = x[i] / y[i];
        if (i == 0 || r > hi)
            hi = r;
        if (i == 0 || r < lo)
            lo = r;
    }
    return log_rational(hi / lo);
}

double projective_distance(const RatVector& x, const RatVector& y)
{
    require_same_size(x.size(), y.size());
    RatVector xs, ys;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (x[i] < 0 || y[i] < 0)
            throw Error("nonpositive", "projective distance needs nonnegative vectors");
        if ((x[i] == 0) != (y[i] == 0))
            return std::numeric_limits<double>::infinity();
        if (x[i] != 0)
        {
            xs.push_back(x[i]);
            ys.push_back(y[i]);
        }
    }
    if (xs.empty())
        throw Error("nonpositive", "projective distance of a zero vector");
    return hilbert_distance(xs, ys);
}

double projective_distance(std::span<const double> x, std::span<const double> y)
{
    require_same_size(x.size(), y.size());
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (x[i] < 0 || y[i] < 0)
            throw Error("nonpositive", "projective distance needs nonnegative vectors");
        if ((x[i] == 0) != (y[i] == 0))
            return std::numeric_limits<double>::infinity();
        if (x[i] != 0)
        {
            xs.push_back(x[i]);
            ys.push_back(y[i]);
        }
    }
    if (xs.empty())
        throw Error("nonpositive", "projective distance of a zero vector");
    return hilbert_distance(xs, ys);
}

double hilbert_distance_chord(std::span<const double> x, std::span<const double> y)
{
    require_same_size(x.size(), y.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] > 0) || !(y[i] > 0))
            throw Error("nonpositive", "Hilbert distance needs strictly positive vectors");
        sx += x[i];
        sy += y[i];
    }
    // Work on the slice {sum = 1}, where the chord through x and y is bounded.
    std::vector<double> p(x.size()), q(y.size());
    double norm = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        p[i] = x[i] / sx;
        q[i] = y[i] / sy;
        norm += (q[i] - p[i]) * (q[i] - p[i]);
    }
    const double m = std::sqrt(norm);
    if (m == 0)
        return 0.0;
    // Walk from q away from p (and from p away from q) until a coordinate hits 0.
    double beyond_q = std::numeric_limits<double>::infinity();
    double beyond_p = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        const double u = (q[i] - p[i]) / m;
        if (u < 0)
            beyond_q = std::min(beyond_q, q[i] / -u);
        if (u > 0)
            beyond_p = std::min(beyond_p, p[i] / u);
    }
    return std::log1p(m / beyond_p) + std::log1p(m / beyond_q);
}

double projective_diameter(const Matrix<double>& a)
{
    double best = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = j + 1; k < a.cols(); ++k)
        {
            double up = -std::numeric_limits<double>::infinity();
            double down = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < a.rows(); ++i)
            {
                if (!(a(i, j) > 0) || !(a(i, k) > 0))
                    throw Error("nonpositive", "projective diameter needs a strictly positive matrix");
                const double r = std::log(a(i, j)) - std::log(a(i, k));
                up = std::max(up, r);
                down = std::max(down, -r);
            }
            best = std::max(best, up + down);
        }
    return best;
}

double projective_diameter(const IntMatrix& a)
{
    double best = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) <= 0)
                throw Error("nonpositive", "projective diameter needs a strictly positive matrix");
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = j + 1; k < a.cols(); ++k)
        {
            Rational up, down;
            for (std::size_t i = 0; i < a.rows(); ++i)
            {
                const Rational r(a(i, j), a(i, k));
                if (i == 0 || r > up)
                    up = r;
                if (i == 0 || 1 / r > down)
                    down = 1 / r;
            }
            best = std::max(best, log_rational(up * down));
        }
    return best;
}

double birkhoff_coefficient(const Matrix<double>& a)
{
    return std::tanh(projective_diameter(a) / 4.0);
}

double birkhoff_coefficient(const IntMatrix& a)
{
    return std::tanh(projective_diameter(a) / 4.0);
}

Contraction birkhoff_contraction(const IntMatrix& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) <= 0)
                return {1.0, std::numeric_limits<double>::infinity(), true};
    const double diameter = projective_diameter(a);
    return {std::tanh(diameter / 4.0), diameter, false};
}

} // namespace solenoid
