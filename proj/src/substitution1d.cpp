#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "solenoid/hilbert.hpp"
#include "solenoid/substitution.hpp"

namespace solenoid {

namespace {

bool single_char_names(const std::vector<std::string>& alphabet)
{
    return std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& a) { return a.size() == 1; });
}

// Best rational approximation with denominator at most `bound`.
Rational approximate(double v, long bound)
{
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = v;
    for (int i = 0; i < 64; ++i)
    {
        const double a = std::floor(x);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > bound)
            break;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::abs(x - a) < 1e-12)
            break;
        x = 1.0 / (x - a);
    }
    return Rational(h1, k1);
}

// Left Perron-Frobenius eigenvector of M (a positive right eigenvector of M^T),
// scaled to smallest entry 1. Power iteration on M^T + I avoids oscillation
// for imprimitive matrices.
std::vector<double> perron_lengths(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<double> v(n, 1.0);
    for (int it = 0; it < 10000; ++it)
    {
        std::vector<double> w(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
        {
            w[j] = v[j];
            for (std::size_t i = 0; i < n; ++i)
                w[j] += m(i, j).convert_to<double>() * v[i];
        }
        const double s = std::accumulate(w.begin(), w.end(), 0.0);
        double change = 0.0;
        for (std::size_t j = 0; j < n; ++j)
        {
            w[j] /= s;
            change = std::max(change, std::abs(w[j] - v[j]));
        }
        v = std::move(w);
        if (change < 1e-16)
            break;
    }
    const double lo = *std::min_element(v.begin(), v.end());
    if (!(lo > 1e-12))
        return std::vector<double>(n, 1.0);
    for (double& x : v)
        x /= lo;
    return v;
}

// Exact version of the lengths when they are rational: checks l^T M = c l^T.
std::optional<std::vector<Rational>> exact_lengths(const IntMatrix& m, const std::vector<double>& lengths)
{
    std::vector<Rational> l;
    for (double x : lengths)
        l.push_back(approximate(x, 1000));
    std::optional<Rational> ratio;
    for (std::size_t j = 0; j < m.cols(); ++j)
    {
        Rational s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            s += l[i] * Rational(m(i, j));
        const Rational c = s / l[j];
        if (ratio && *ratio != c)
            return std::nullopt;
        ratio = c;
    }
    return l;
}

} // namespace

Substitution1D make_substitution(std::string name, std::vector<std::string> alphabet, std::vector<Word> rules,
                                 std::optional<std::vector<double>> lengths)
{
    if (alphabet.empty())
        throw Error("invalid_substitution", "alphabet is empty");
    if (rules.size() != alphabet.size())
        throw Error("invalid_substitution", "one rule per letter is required");
    {
        std::vector<std::string> sorted = alphabet;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("invalid_substitution", "duplicate letter names");
    }
    for (std::size_t i = 0; i < rules.size(); ++i)
    {
        if (rules[i].empty())
            throw Error("invalid_substitution", "rule for '" + alphabet[i] + "' is empty");
        for (int x : rules[i])
            if (x < 0 || static_cast<std::size_t>(x) >= alphabet.size())
                throw Error("invalid_substitution", "rule for '" + alphabet[i] + "' uses an unknown letter");
    }
    Substitution1D s{std::move(name), std::move(alphabet), std::move(rules), {}, std::nullopt, {}};
    const IntMatrix m = substitution_matrix(s);
    if (lengths)
    {
        if (lengths->size() != s.alphabet.size())
            throw Error("invalid_substitution", "one length per letter is required");
        for (double l : *lengths)
            if (!(l > 0) || !std::isfinite(l))
                throw Error("invalid_substitution", "tile lengths must be positive");
        s.lengths = *lengths;
        std::vector<Rational> exact;
        for (double l : s.lengths)
        {
            const Rational q = approximate(l, 1000);
            if (std::abs(q.convert_to<double>() - l) > 1e-15 * l)
                return s;
            exact.push_back(q);
        }
        s.exact_lengths = std::move(exact);
        return s;
    }
    s.lengths = perron_lengths(m);
    s.exact_lengths = exact_lengths(m, s.lengths);
    if (s.exact_lengths)
        for (std::size_t i = 0; i < s.lengths.size(); ++i)
            s.lengths[i] = (*s.exact_lengths)[i].convert_to<double>();
    return s;
}

Word parse_word(const Substitution1D& s, const std::string& text)
{
    std::vector<std::string> tokens;
    if (single_char_names(s.alphabet))
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                tokens.emplace_back(1, c);
    }
    else
    {
        std::istringstream in(text);
        for (std::string t; in >> t;)
            tokens.push_back(t);
    }
    Word w;
    for (const std::string& t : tokens)
    {
        auto it = std::find(s.alphabet.begin(), s.alphabet.end(), t);
        if (it == s.alphabet.end())
            throw Error("invalid_argument", "unknown letter '" + t + "'");
        w.push_back(static_cast<int>(it - s.alphabet.begin()));
    }
    return w;
}

std::string format_word(const Substitution1D& s, const Word& w)
{
    const bool compact = single_char_names(s.alphabet);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        if (!compact && i)
            out += ' ';
        out += s.alphabet.at(static_cast<std::size_t>(w[i]));
    }
    return out;
}

Word iterate(const Substitution1D& s, const Word& seed, std::size_t n)
{
    Word w = seed;
    for (std::size_t step = 0; step < n; ++step)
    {
        std::size_t next = 0;
        for (int x : w)
            next += s.rules.at(static_cast<std::size_t>(x)).size();
        if (next > max_tiles)
            throw Error("overflow", "iteration would exceed " + std::to_string(max_tiles) + " tiles");
        Word out;
        out.reserve(next);
        for (int x : w)
            out.insert(out.end(), s.rules[static_cast<std::size_t>(x)].begin(), s.rules[static_cast<std::size_t>(x)].end());
        w = std::move(out);
    }
    return w;
}

IntMatrix substitution_matrix(const Substitution1D& s)
{
    const std::size_t n = s.alphabet.size();
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (int x : s.rules[j])
            m(static_cast<std::size_t>(x), j) += 1;
    return m;
}

bool primitive(const Substitution1D& s) { return primitivity_exponent(substitution_matrix(s)).has_value(); }

std::set<Word> language_factors(const Substitution1D& s, std::size_t length)
{
    std::set<Word> found;
    std::vector<Word> words;
    for (std::size_t x = 0; x < s.alphabet.size(); ++x)
        words.push_back({static_cast<int>(x)});
    std::size_t unchanged = 0;
    while (unchanged < 2)
    {
        const std::size_t before = found.size();
        for (const Word& w : words)
            for (std::size_t i = 0; i + length <= w.size(); ++i)
                found.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                                  w.begin() + static_cast<std::ptrdiff_t>(i + length)));
        const bool long_enough =
            std::all_of(words.begin(), words.end(), [&](const Word& w) { return w.size() >= length; });
        bool growing = false;
        for (Word& w : words)
        {
            const std::size_t old = w.size();
            try
            {
                w = iterate(s, w, 1);
            }
            catch (const Error&)
            {
                throw Error("language_undecided",
                            "factor set of length " + std::to_string(length) + " did not stabilize before the size cap");
            }
            growing = growing || w.size() > old;
        }
        if (found.size() == before && (long_enough || !growing))
            ++unchanged;
        else
            unchanged = 0;
    }
    return found;
}

Substitution1D collar(const Substitution1D& s)
{
    if (!primitive(s))
        throw Error("not_primitive", "collaring needs a primitive substitution");
    const std::set<Word> triples = language_factors(s, 3);
    const std::vector<Word> letters(triples.begin(), triples.end());
    std::map<Word, int> index;
    for (std::size_t i = 0; i < letters.size(); ++i)
        index[letters[i]] = static_cast<int>(i);

    const bool compact = single_char_names(s.alphabet);
    std::vector<std::string> names;
    for (const Word& t : letters)
    {
        std::string name;
        for (std::size_t k = 0; k < 3; ++k)
        {
            if (!compact && k)
                name += '|';
            name += s.alphabet[static_cast<std::size_t>(t[k])];
        }
        names.push_back(std::move(name));
    }

    std::vector<Word> rules;
    for (const Word& t : letters)
    {
        const Word& left = s.rules[static_cast<std::size_t>(t[0])];
        const Word& core = s.rules[static_cast<std::size_t>(t[1])];
        const Word& right = s.rules[static_cast<std::size_t>(t[2])];
        Word ext{left.back()};
        ext.insert(ext.end(), core.begin(), core.end());
        ext.push_back(right.front());
        Word rule;
        for (std::size_t i = 1; i + 1 < ext.size(); ++i)
        {
            auto it = index.find({ext[i - 1], ext[i], ext[i + 1]});
            if (it == index.end())
                throw Error("collar_failed", "image of a collared letter leaves the language");
            rule.push_back(it->second);
        }
        rules.push_back(std::move(rule));
    }

    std::vector<double> lengths;
    for (const Word& t : letters)
        lengths.push_back(s.lengths[static_cast<std::size_t>(t[1])]);
    Substitution1D c = make_substitution(s.name.empty() ? "" : s.name + "_collared", names, rules, lengths);
    c.lengths = lengths;
    c.exact_lengths.reset();
    if (s.exact_lengths)
    {
        std::vector<Rational> exact;
        for (const Word& t : letters)
            exact.push_back((*s.exact_lengths)[static_cast<std::size_t>(t[1])]);
        c.exact_lengths = std::move(exact);
    }
    for (const Word& t : letters)
        c.projection.push_back(t[1]);
    return c;
}

DeloneSet to_delone(const Substitution1D& s, const Word& seed, std::size_t n)
{
    const Word w = iterate(s, seed, n);
    DeloneSet x;
    x.dim = 1;
    double pos = 0.0;
    for (int letter : w)
    {
        x.points.push_back({pos, 0.0});
        x.labels.push_back(s.alphabet[static_cast<std::size_t>(letter)]);
        pos += s.lengths[static_cast<std::size_t>(letter)];
    }
    x.window = {{0.0, 0.0}, {pos, 0.0}};
    x.r = 0.5 * *std::min_element(s.lengths.begin(), s.lengths.end());
    x.R = *std::max_element(s.lengths.begin(), s.lengths.end());
    return x;
}

BranchedComplex anderson_putnam(const Substitution1D& s, bool collared)
{
    if (collared)
        return anderson_putnam(collar(s), false);
    const std::size_t n = s.alphabet.size();
    // Endpoint 2x is the initial vertex of letter x, 2x + 1 its terminal one.
    std::vector<std::size_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Word& f : language_factors(s, 2))
    {
        const std::size_t a = find(2 * static_cast<std::size_t>(f[0]) + 1), b = find(2 * static_cast<std::size_t>(f[1]));
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::size_t> vertex_of_root;
    for (std::size_t v = 0; v < 2 * n; ++v)
        vertex_of_root.try_emplace(find(v), vertex_of_root.size());
    std::vector<std::string> vertex_labels;
    for (std::size_t i = 0; i < vertex_of_root.size(); ++i)
        vertex_labels.push_back("v" + std::to_string(i));
    std::vector<GraphEdge> edges;
    for (std::size_t x = 0; x < n; ++x)
        edges.push_back({s.alphabet[x], vertex_of_root.at(find(2 * x)), vertex_of_root.at(find(2 * x + 1))});
    return graph_complex(std::move(vertex_labels), edges);
}

Submersion self_submersion(const Substitution1D& s, bool collared)
{
    const Substitution1D t = collared ? collar(s) : s;
    auto complex = std::make_shared<const BranchedComplex>(anderson_putnam(t, false));
    Submersion tau{complex, complex, {}, BoundaryMetadata{}};
    for (const Word& rule : t.rules)
    {
        std::vector<std::size_t> image(rule.begin(), rule.end());
        tau.boundary->slot_images.push_back({{Germ{image.front(), 0}}, {Germ{image.back(), 1}}});
        std::vector<bool> touches(image.size(), false);
        touches.front() = touches.back() = true;
        tau.boundary->touches_boundary.push_back(std::move(touches));
        tau.cell_map.push_back(std::move(image));
    }
    return tau;
}

} // namespace solenoid
