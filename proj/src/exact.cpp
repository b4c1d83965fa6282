#include "solenoid/exact.hpp"

#include <algorithm>
#include <utility>

namespace solenoid {

Echelon fraction_free_echelon(IntMatrix m)
{
    Echelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const IntMatrix& m)
{
    return fraction_free_echelon(m).pivots.size();
}

std::vector<IntVector> null_space(const IntMatrix& m)
{
    const std::size_t n = m.cols();
    const Echelon e = fraction_free_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < n; ++f)
    {
        if (is_pivot[f])
            continue;
        RatVector x(n, Rational(0));
        x[f] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;)
        {
            const std::size_t pc = e.pivots[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0)
                    s += Rational(e.rows(k, j)) * x[j];
            x[pc] = -s / Rational(e.rows(k, pc));
        }
        basis.push_back(primitive(x));
    }
    return basis;
}

IntVector primitive(const RatVector& v)
{
    Integer den = 1;
    for (const auto& q : v)
        if (q != 0)
            den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const Rational scaled = v[i] * Rational(den);
        out[i] = boost::multiprecision::numerator(scaled);
    }
    return primitive(out);
}

IntVector primitive(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        if (x != 0)
            g = boost::multiprecision::gcd(g, abs(x));
    if (g == 0 || g == 1)
        return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw Error("shape_mismatch", "dot product of vectors with different lengths");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::string to_string(const Rational& q)
{
    return q.str();
}

Rational parse_rational(const std::string& text)
{
    try
    {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw Error("parse", "zero denominator in rational '" + text + "'");
        return Rational(num, den);
    }
    catch (const std::runtime_error& e)
    {
        if (auto* err = dynamic_cast<const Error*>(&e))
            throw *err;
        throw Error("parse", "not a rational number: '" + text + "'");
    }
}

std::size_t max_bits(const IntMatrix& m)
{
    std::size_t bits = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                bits = std::max<std::size_t>(bits, msb(abs(m(i, j))) + 1);
    return bits;
}

} // namespace solenoid
