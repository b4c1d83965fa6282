// Test-only reference computations. Deliberately naive: plain Gauss-Jordan over
// the rationals, support enumeration for extreme rays, string rewriting for
// substitutions. None of this shares code with the library.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::mpq_rational;
using Z = boost::multiprecision::mpz_int;
using QMatrix = std::vector<std::vector<Q>>;

// Reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c)
    {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Q lead = m[row][c];
        for (Q& v : m[row])
            v /= lead;
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != row && m[r][c] != 0)
            {
                const Q f = m[r][c];
                for (std::size_t k = 0; k < cols; ++k)
                    m[r][k] -= f * m[row][k];
            }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

inline std::size_t rank(QMatrix m, std::size_t cols) { return rref(m, cols).size(); }

// Kernel basis from free columns.
inline QMatrix kernel(QMatrix m, std::size_t cols)
{
    const auto pivots = rref(m, cols);
    QMatrix basis;
    for (std::size_t free = 0; free < cols; ++free)
    {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
            continue;
        std::vector<Q> v(cols, Q(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free];
        basis.push_back(v);
    }
    return basis;
}

// Same row space <=> same RREF.
inline bool same_span(QMatrix a, QMatrix b, std::size_t cols)
{
    rref(a, cols);
    rref(b, cols);
    return a == b;
}

inline std::vector<Z> primitive_positive(const std::vector<Q>& v)
{
    Z den = 1;
    for (const Q& q : v)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    std::vector<Z> out;
    Z g = 0;
    for (const Q& q : v)
    {
        out.push_back(boost::multiprecision::numerator(Q(q * den)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (g != 0)
        for (Z& z : out)
            z /= g;
    return out;
}

// Extreme rays of {x >= 0 : E x = 0} by enumerating supports: a support carries
// an extreme ray exactly when the kernel restricted to it is one-dimensional
// and spanned by a vector with constant sign on the support.
inline std::set<std::vector<Z>> extreme_rays(const QMatrix& e, std::size_t n)
{
    std::set<std::vector<Z>> rays;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
    {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                support.push_back(i);
        QMatrix sub;
        for (const auto& row : e)
        {
            std::vector<Q> r;
            for (std::size_t i : support)
                r.push_back(row[i]);
            sub.push_back(r);
        }
        if (sub.empty())
            sub.push_back(std::vector<Q>(support.size(), Q(0)));
        const QMatrix k = kernel(sub, support.size());
        if (k.size() != 1)
            continue;
        const auto& v = k.front();
        const bool pos = std::all_of(v.begin(), v.end(), [](const Q& q) { return q > 0; });
        const bool neg = std::all_of(v.begin(), v.end(), [](const Q& q) { return q < 0; });
        if (!pos && !neg)
            continue;
        std::vector<Q> full(n, Q(0));
        for (std::size_t i = 0; i < support.size(); ++i)
            full[support[i]] = pos ? v[i] : -v[i];
        rays.insert(primitive_positive(full));
    }
    return rays;
}

// Substitutions as string rewriting on single-character letters.
inline std::string rewrite(const std::map<char, std::string>& rules, std::string w, int n)
{
    for (int k = 0; k < n; ++k)
    {
        std::string next;
        for (char c : w)
            next += rules.at(c);
        w = std::move(next);
    }
    return w;
}

inline std::map<char, double> letter_frequencies(const std::string& w)
{
    std::map<char, double> f;
    for (char c : w)
        f[c] += 1.0;
    for (auto& [c, v] : f)
        v /= static_cast<double>(w.size());
    return f;
}

inline std::set<std::string> factors(const std::string& w, std::size_t len)
{
    std::set<std::string> out;
    for (std::size_t i = 0; i + len <= w.size(); ++i)
        out.insert(w.substr(i, len));
    return out;
}

// Hilbert projective distance straight from the definition.
inline double hilbert(const std::vector<double>& x, const std::vector<double>& y)
{
    double hi = -INFINITY, lo = INFINITY;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        hi = std::max(hi, std::log(x[i] / y[i]));
        lo = std::min(lo, std::log(x[i] / y[i]));
    }
    return hi - lo;
}

inline std::vector<std::vector<double>> matmul(const std::vector<std::vector<double>>& a,
                                               const std::vector<std::vector<double>>& b)
{
    std::vector<std::vector<double>> c(a.size(), std::vector<double>(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace oracle
