#include "solenoid/io.hpp"

#include <cmath>
#include <limits>

namespace solenoid {

namespace {

template <class T>
std::vector<T> decode_list(const Json& j, T (*decode)(const Json&))
{
    std::vector<T> out;
    for (const Json& e : j)
        out.push_back(decode(e));
    return out;
}

Json encode_vector(const IntVector& v)
{
    Json j = Json::array();
    for (const Integer& x : v)
        j.push_back(encode(x));
    return j;
}

Json encode_vector(const RatVector& v)
{
    Json j = Json::array();
    for (const Rational& x : v)
        j.push_back(encode(x));
    return j;
}

Json encode_vector(const std::vector<double>& v)
{
    Json j = Json::array();
    for (double x : v)
        j.push_back(encode(x));
    return j;
}

std::vector<double> decode_doubles(const Json& j) { return decode_list<double>(j, decode_double); }
RatVector decode_rationals(const Json& j) { return decode_list<Rational>(j, decode_rational); }
IntVector decode_integers(const Json& j) { return decode_list<Integer>(j, decode_integer); }

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw Error("invalid_json", std::string("missing field '") + name + "'");
    return j.at(name);
}

} // namespace

Json encode(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Integer decode_integer(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw Error("invalid_json", "expected an integer");
}

Json encode(const Rational& v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v) == 1)
        return encode(Integer(numerator(v)));
    return to_string(v);
}

Rational decode_rational(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw Error("invalid_json", "expected a rational");
}

Json encode(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

double decode_double(const Json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string())
    {
        const std::string s = j.get<std::string>();
        if (s == "inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
    }
    throw Error("invalid_json", "expected a number");
}

Json encode(const IntMatrix& m)
{
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        j.push_back(encode_vector(m.row(r)));
    return j;
}

IntMatrix decode_int_matrix(const Json& j)
{
    std::vector<IntVector> rows;
    for (const Json& r : j)
        rows.push_back(decode_integers(r));
    return IntMatrix::from_rows(rows);
}

void to_json(Json& j, const Point& p) { j = Json::array({encode(p.x), encode(p.y)}); }

void from_json(const Json& j, Point& p)
{
    p.x = decode_double(j.at(0));
    p.y = j.size() > 1 ? decode_double(j.at(1)) : 0.0;
}

void to_json(Json& j, const Box& b) { j = {{"lo", b.lo}, {"hi", b.hi}}; }

void from_json(const Json& j, Box& b)
{
    b.lo = field(j, "lo").get<Point>();
    b.hi = field(j, "hi").get<Point>();
}

void to_json(Json& j, const DeloneSet& x)
{
    Json pts = Json::array();
    for (std::size_t i = 0; i < x.points.size(); ++i)
    {
        Json p = Json::array({encode(x.points[i].x)});
        if (x.dim == 2)
            p.push_back(encode(x.points[i].y));
        if (!x.labels.empty())
            p.push_back(x.labels[i]);
        pts.push_back(std::move(p));
    }
    Json window = {{"lo", Json::array({encode(x.window.lo.x)})}, {"hi", Json::array({encode(x.window.hi.x)})}};
    if (x.dim == 2)
    {
        window["lo"].push_back(encode(x.window.lo.y));
        window["hi"].push_back(encode(x.window.hi.y));
    }
    j = {{"dim", x.dim}, {"r", encode(x.r)}, {"R", encode(x.R)}, {"window", window}, {"points", pts}};
}

void from_json(const Json& j, DeloneSet& x)
{
    x = DeloneSet{};
    x.dim = field(j, "dim").get<int>();
    x.r = decode_double(field(j, "r"));
    x.R = decode_double(field(j, "R"));
    x.window = field(j, "window").get<Box>();
    const std::size_t coords = static_cast<std::size_t>(x.dim);
    bool labeled = false;
    for (const Json& p : field(j, "points"))
        labeled = labeled || (p.size() > coords && p.at(coords).is_string());
    for (const Json& p : field(j, "points"))
    {
        if (p.size() < coords)
            throw Error("invalid_json", "point has too few coordinates");
        x.points.push_back({decode_double(p.at(0)), x.dim == 2 ? decode_double(p.at(1)) : 0.0});
        if (labeled)
        {
            if (p.size() <= coords || !p.at(coords).is_string())
                throw Error("invalid_json", "either every point or no point carries a label");
            x.labels.push_back(p.at(coords).get<std::string>());
        }
    }
    check_invariants(x);
}

void to_json(Json& j, const DeloneWitness& w)
{
    j = {{"kind", w.kind}, {"center", w.center}, {"radius", encode(w.radius)}, {"points", w.points}};
}

void from_json(const Json& j, DeloneWitness& w)
{
    w.kind = field(j, "kind").get<std::string>();
    w.center = field(j, "center").get<Point>();
    w.radius = decode_double(field(j, "radius"));
    w.points = field(j, "points").get<std::vector<std::size_t>>();
}

void to_json(Json& j, const DeloneReport& r)
{
    j = {{"uniform_discrete", r.uniform_discrete}, {"relatively_dense", r.relatively_dense}, {"witnesses", r.witnesses}};
}

void from_json(const Json& j, DeloneReport& r)
{
    r.uniform_discrete = field(j, "uniform_discrete").get<bool>();
    r.relatively_dense = field(j, "relatively_dense").get<bool>();
    r.witnesses = field(j, "witnesses").get<std::vector<DeloneWitness>>();
}

void to_json(Json& j, const GroupElement& g) { j = {{"translation", g.translation}, {"angle", encode(g.angle)}}; }

void from_json(const Json& j, GroupElement& g)
{
    g.translation = field(j, "translation").get<Point>();
    g.angle = decode_double(field(j, "angle"));
}

void to_json(Json& j, const MetricResult& r)
{
    j = {{"value", encode(r.value)}, {"untestable", encode_vector(r.untestable)}, {"upper_bound", true}};
    j["g1"] = r.g1 ? Json(*r.g1) : Json();
    j["g2"] = r.g2 ? Json(*r.g2) : Json();
}

void from_json(const Json& j, MetricResult& r)
{
    r.value = decode_double(field(j, "value"));
    r.untestable = decode_doubles(field(j, "untestable"));
    r.g1 = j.contains("g1") && !j.at("g1").is_null() ? std::optional(j.at("g1").get<GroupElement>()) : std::nullopt;
    r.g2 = j.contains("g2") && !j.at("g2").is_null() ? std::optional(j.at("g2").get<GroupElement>()) : std::nullopt;
}

void to_json(Json& j, const VoronoiCell& c)
{
    j = {{"site", c.site}, {"vertices", c.vertices}, {"neighbors", c.neighbors}, {"clipped", c.clipped},
         {"measure", encode(c.measure)}};
}

void from_json(const Json& j, VoronoiCell& c)
{
    c.site = field(j, "site").get<std::size_t>();
    c.vertices = field(j, "vertices").get<std::vector<Point>>();
    c.neighbors = field(j, "neighbors").get<std::vector<long>>();
    c.clipped = field(j, "clipped").get<bool>();
    c.measure = decode_double(field(j, "measure"));
}

void to_json(Json& j, const VoronoiDiagram& v)
{
    j = {{"dim", v.dim}, {"window", v.window}, {"cells", v.cells}, {"adjacency", v.adjacency}};
}

void from_json(const Json& j, VoronoiDiagram& v)
{
    v.dim = field(j, "dim").get<int>();
    v.window = field(j, "window").get<Box>();
    v.cells = field(j, "cells").get<std::vector<VoronoiCell>>();
    v.adjacency = field(j, "adjacency").get<std::vector<std::pair<std::size_t, std::size_t>>>();
}

void to_json(Json& j, const Germ& g) { j = Json::array({g.cell, g.slot}); }

void from_json(const Json& j, Germ& g)
{
    g.cell = j.at(0).get<std::size_t>();
    g.slot = j.at(1).get<std::size_t>();
}

void to_json(Json& j, const Sides& s) { j = {{"positive", s.positive}, {"negative", s.negative}}; }

void from_json(const Json& j, Sides& s)
{
    s.positive = field(j, "positive").get<std::vector<Germ>>();
    s.negative = field(j, "negative").get<std::vector<Germ>>();
}

void to_json(Json& j, const BranchedComplex& s)
{
    Json boundary = Json::array();
    for (std::size_t d = 1; d < s.boundary.size(); ++d)
    {
        const IntMatrix& m = s.boundary[d];
        Json entries = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(r, c) != 0)
                    entries.push_back(Json::array({r, c, encode(m(r, c))}));
        boundary.push_back({{"degree", d}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
    }
    j = {{"dim", s.dim},
         {"cells", s.labels},
         {"boundary", boundary},
         {"region_of_cell", s.region_of_cell},
         {"region_count", s.region_count},
         {"sides", s.sides}};
}

void from_json(const Json& j, BranchedComplex& s)
{
    s = BranchedComplex{};
    s.dim = field(j, "dim").get<int>();
    s.labels = field(j, "cells").get<std::vector<std::vector<std::string>>>();
    if (s.labels.size() != static_cast<std::size_t>(s.dim) + 1)
        throw Error("invalid_json", "one cell list per degree is required");
    s.boundary.assign(s.labels.size(), IntMatrix());
    for (const Json& b : field(j, "boundary"))
    {
        const std::size_t d = field(b, "degree").get<std::size_t>();
        if (d == 0 || d >= s.boundary.size())
            throw Error("invalid_json", "boundary degree out of range");
        IntMatrix m(field(b, "rows").get<std::size_t>(), field(b, "cols").get<std::size_t>());
        for (const Json& e : field(b, "entries"))
        {
            const std::size_t r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
            if (r >= m.rows() || c >= m.cols())
                throw Error("invalid_json", "boundary entry out of range");
            m(r, c) = decode_integer(e.at(2));
        }
        s.boundary[d] = std::move(m);
    }
    s.region_of_cell = field(j, "region_of_cell").get<std::vector<std::size_t>>();
    s.region_count = field(j, "region_count").get<std::size_t>();
    s.sides = field(j, "sides").get<std::vector<Sides>>();
}

void to_json(Json& j, const ComplexIssue& i)
{
    j = {{"kind", i.kind}, {"degree", i.degree}, {"cells", i.cells}, {"message", i.message}};
}

void from_json(const Json& j, ComplexIssue& i)
{
    i.kind = field(j, "kind").get<std::string>();
    i.degree = field(j, "degree").get<int>();
    i.cells = field(j, "cells").get<std::vector<std::size_t>>();
    i.message = field(j, "message").get<std::string>();
}

void to_json(Json& j, const ComplexReport& r) { j = {{"valid", r.valid}, {"issues", r.issues}}; }

void from_json(const Json& j, ComplexReport& r)
{
    r.valid = field(j, "valid").get<bool>();
    r.issues = field(j, "issues").get<std::vector<ComplexIssue>>();
}

void to_json(Json& j, const HomologyCone& h)
{
    Json basis = Json::array(), rays = Json::array();
    for (const IntVector& v : h.cycle_basis)
        basis.push_back(encode_vector(v));
    for (const IntVector& v : h.extremal_rays)
        rays.push_back(encode_vector(v));
    j = {{"dimension", h.dimension()}, {"cycle_basis", basis}, {"rays", rays}};
}

void from_json(const Json& j, HomologyCone& h)
{
    h = HomologyCone{};
    for (const Json& v : field(j, "cycle_basis"))
        h.cycle_basis.push_back(decode_integers(v));
    for (const Json& v : field(j, "rays"))
        h.extremal_rays.push_back(decode_integers(v));
}

void to_json(Json& j, const ZoomedOutReport& r)
{
    j = {{"nesting", to_string(r.nesting)},
         {"boundary_inclusion", to_string(r.boundary_inclusion)},
         {"strict_growth", to_string(r.strict_growth)},
         {"border_forcing", to_string(r.border_forcing)},
         {"notes", r.notes}};
}

Check parse_check(const std::string& s)
{
    if (s == "pass")
        return Check::pass;
    if (s == "fail")
        return Check::fail;
    if (s == "undecidable")
        return Check::undecidable;
    throw Error("invalid_json", "unknown check value '" + s + "'");
}

void from_json(const Json& j, ZoomedOutReport& r)
{
    r.nesting = parse_check(field(j, "nesting").get<std::string>());
    r.boundary_inclusion = parse_check(field(j, "boundary_inclusion").get<std::string>());
    r.strict_growth = parse_check(field(j, "strict_growth").get<std::string>());
    r.border_forcing = parse_check(field(j, "border_forcing").get<std::string>());
    r.notes = field(j, "notes").get<std::vector<std::string>>();
}

Verdict parse_verdict(const std::string& s)
{
    if (s == "unique")
        return Verdict::unique;
    if (s == "multiple")
        return Verdict::multiple;
    if (s == "undecided")
        return Verdict::undecided;
    throw Error("invalid_json", "unknown verdict '" + s + "'");
}

void to_json(Json& j, const MeasureConeReport& r)
{
    Json rays = Json::array(), exact = Json::array();
    for (const auto& v : r.rays)
        rays.push_back(encode_vector(v));
    for (const auto& v : r.exact_rays)
        exact.push_back(encode_vector(v));
    j = {{"depth", r.depth},
         {"rays", rays},
         {"exact_rays", exact},
         {"exact", r.exact},
         {"error_bound", encode(r.error_bound)},
         {"hilbert_diameter", encode(r.hilbert_diameter)},
         {"diameter_history", encode_vector(r.diameter_history)},
         {"verdict", to_string(r.verdict)},
         {"multiplicity", r.multiplicity},
         {"extremal_count", r.extremal_count},
         {"frequencies", encode_vector(r.frequencies)},
         {"exact_frequencies", encode_vector(r.exact_frequencies)},
         {"notes", r.notes}};
}

void from_json(const Json& j, MeasureConeReport& r)
{
    r = MeasureConeReport{};
    r.depth = field(j, "depth").get<std::size_t>();
    for (const Json& v : field(j, "rays"))
        r.rays.push_back(decode_doubles(v));
    for (const Json& v : field(j, "exact_rays"))
        r.exact_rays.push_back(decode_rationals(v));
    r.exact = field(j, "exact").get<bool>();
    r.error_bound = decode_double(field(j, "error_bound"));
    r.hilbert_diameter = decode_double(field(j, "hilbert_diameter"));
    r.diameter_history = decode_doubles(field(j, "diameter_history"));
    r.verdict = parse_verdict(field(j, "verdict").get<std::string>());
    r.multiplicity = field(j, "multiplicity").get<std::size_t>();
    r.extremal_count = field(j, "extremal_count").get<std::size_t>();
    r.frequencies = decode_doubles(field(j, "frequencies"));
    r.exact_frequencies = decode_rationals(field(j, "exact_frequencies"));
    r.notes = field(j, "notes").get<std::vector<std::string>>();
}

void to_json(Json& j, const ErgodicityCertificate& c)
{
    j = {{"kind", c.kind},
         {"power", c.power},
         {"coefficient", encode(c.coefficient)},
         {"block_coefficients", encode_vector(c.block_coefficients)},
         {"diameter_bound", encode(c.diameter_bound)},
         {"diameters", encode_vector(c.diameters)}};
}

void from_json(const Json& j, ErgodicityCertificate& c)
{
    c.kind = field(j, "kind").get<std::string>();
    c.power = field(j, "power").get<std::size_t>();
    c.coefficient = decode_double(field(j, "coefficient"));
    c.block_coefficients = decode_doubles(field(j, "block_coefficients"));
    c.diameter_bound = decode_double(field(j, "diameter_bound"));
    c.diameters = decode_doubles(field(j, "diameters"));
}

void to_json(Json& j, const ErgodicityResult& r)
{
    j = {{"verdict", to_string(r.verdict)},
         {"multiplicity", r.multiplicity},
         {"frequencies", encode_vector(r.cone.frequencies)},
         {"certificate", r.certificate},
         {"cone", r.cone}};
}

void from_json(const Json& j, ErgodicityResult& r)
{
    r.verdict = parse_verdict(field(j, "verdict").get<std::string>());
    r.multiplicity = field(j, "multiplicity").get<std::size_t>();
    r.certificate = field(j, "certificate").get<ErgodicityCertificate>();
    r.cone = field(j, "cone").get<MeasureConeReport>();
}

void to_json(Json& j, const Substitution1D& s)
{
    Json rules = Json::array();
    for (const Word& w : s.rules)
        rules.push_back(format_word(s, w));
    j = {{"dim", 1},
         {"name", s.name},
         {"alphabet", s.alphabet},
         {"rules", rules},
         {"lengths", encode_vector(s.lengths)},
         {"projection", s.projection}};
    j["exact_lengths"] = s.exact_lengths ? encode_vector(*s.exact_lengths) : Json();
}

void from_json(const Json& j, Substitution1D& s)
{
    const auto alphabet = field(j, "alphabet").get<std::vector<std::string>>();
    Substitution1D names{"", alphabet, {}, {}, std::nullopt, {}};
    std::vector<Word> rules;
    const Json& r = field(j, "rules");
    auto rule_text = [&](const Json& e) {
        if (e.is_string())
            return parse_word(names, e.get<std::string>());
        Word w;
        for (const Json& letter : e)
            w.push_back(parse_word(names, letter.get<std::string>()).at(0));
        return w;
    };
    if (r.is_object())
        for (const std::string& a : alphabet)
            rules.push_back(rule_text(field(r, a.c_str())));
    else
        for (const Json& e : r)
            rules.push_back(rule_text(e));
    std::optional<std::vector<double>> lengths;
    if (j.contains("lengths") && !j.at("lengths").is_null())
        lengths = decode_doubles(j.at("lengths"));
    s = make_substitution(j.value("name", std::string()), alphabet, rules, lengths);
    if (j.contains("exact_lengths"))
        s.exact_lengths = j.at("exact_lengths").is_null() ? std::nullopt
                                                           : std::optional(decode_rationals(j.at("exact_lengths")));
    if (j.contains("projection"))
        s.projection = j.at("projection").get<std::vector<int>>();
}

void to_json(Json& j, const Substitution2D& s)
{
    Json protos = Json::array(), rules = Json::array();
    for (const Prototile& p : s.prototiles)
        protos.push_back({{"name", p.name}, {"vertices", p.vertices}});
    for (const auto& rule : s.rules)
    {
        Json r = Json::array();
        for (const Placement& p : rule)
            r.push_back({{"prototile", p.prototile}, {"rotation", p.rotation}, {"translation", p.translation}});
        rules.push_back(r);
    }
    j = {{"dim", 2},
         {"name", s.name},
         {"lattice", s.lattice == Lattice::square ? "square" : "hexagonal"},
         {"expansion", s.expansion},
         {"prototiles", protos},
         {"rules", rules}};
}

void from_json(const Json& j, Substitution2D& s)
{
    s = Substitution2D{};
    s.name = j.value("name", std::string());
    const std::string lattice = field(j, "lattice").get<std::string>();
    if (lattice == "square")
        s.lattice = Lattice::square;
    else if (lattice == "hexagonal")
        s.lattice = Lattice::hexagonal;
    else
        throw Error("unsupported_rotations", "only square (90 degree) and hexagonal (60 degree) rotation sets are supported");
    s.expansion = field(j, "expansion").get<long>();
    for (const Json& p : field(j, "prototiles"))
        s.prototiles.push_back({field(p, "name").get<std::string>(), field(p, "vertices").get<std::vector<LatticePoint>>()});
    for (const Json& r : field(j, "rules"))
    {
        std::vector<Placement> rule;
        for (const Json& p : r)
        {
            Placement q;
            const Json& proto = field(p, "prototile");
            if (proto.is_string())
            {
                auto it = std::find_if(s.prototiles.begin(), s.prototiles.end(),
                                       [&](const Prototile& t) { return t.name == proto.get<std::string>(); });
                if (it == s.prototiles.end())
                    throw Error("invalid_substitution", "unknown prototile '" + proto.get<std::string>() + "'");
                q.prototile = static_cast<std::size_t>(it - s.prototiles.begin());
            }
            else
                q.prototile = proto.get<std::size_t>();
            q.rotation = field(p, "rotation").get<int>();
            q.translation = field(p, "translation").get<LatticePoint>();
            rule.push_back(q);
        }
        s.rules.push_back(std::move(rule));
    }
    validate(s);
}

void to_json(Json& j, const Length& l)
{
    j = {{"value", encode(l.value)}};
    j["exact"] = l.exact ? encode(*l.exact) : Json();
}

void from_json(const Json& j, Length& l)
{
    l.value = decode_double(field(j, "value"));
    l.exact = j.contains("exact") && !j.at("exact").is_null() ? std::optional(decode_rational(j.at("exact"))) : std::nullopt;
}

void to_json(Json& j, const RescaleMap& m)
{
    Json axes = Json::array();
    for (int a = 0; a < m.dim; ++a)
    {
        Json entries = Json::array();
        for (const RescaleEntry& e : m.axes[static_cast<std::size_t>(a)])
            entries.push_back({{"original", e.original}, {"scaled", encode(e.scaled)}});
        axes.push_back(entries);
    }
    j = {{"dim", m.dim}, {"axes", axes}, {"tau", encode(m.tau)}, {"identity", m.identity}};
}

void from_json(const Json& j, RescaleMap& m)
{
    m = RescaleMap{};
    m.dim = field(j, "dim").get<int>();
    std::size_t a = 0;
    for (const Json& axis : field(j, "axes"))
    {
        if (a >= 2)
            throw Error("invalid_json", "too many axes");
        for (const Json& e : axis)
            m.axes[a].push_back({field(e, "original").get<Length>(), decode_rational(field(e, "scaled"))});
        ++a;
    }
    m.tau = decode_rational(field(j, "tau"));
    m.identity = field(j, "identity").get<bool>();
}

void to_json(Json& j, const FibrationReport& r)
{
    Json images = Json::array();
    for (const auto& c : r.corner_images)
        images.push_back(Json::array({encode(c[0]), encode(c[1])}));
    j = {{"tau", encode(r.tau)}, {"corner_images", images}, {"samples", r.samples}, {"failures", r.failures},
         {"commutes", r.commutes}};
}

void from_json(const Json& j, FibrationReport& r)
{
    r = FibrationReport{};
    r.tau = decode_rational(field(j, "tau"));
    for (const Json& c : field(j, "corner_images"))
        r.corner_images.push_back({decode_rational(c.at(0)), decode_rational(c.at(1))});
    r.samples = field(j, "samples").get<std::size_t>();
    r.failures = field(j, "failures").get<std::size_t>();
    r.commutes = field(j, "commutes").get<bool>();
}

void to_json(Json& j, const LatticeResult& r)
{
    j = {{"lattice", r.lattice},
         {"rescale", r.map},
         {"shift", Json::array({encode(r.shift[0]), encode(r.shift[1])})},
         {"certificate", {{"kind", r.certificate_kind}, {"holds", r.certificate}, {"scope", r.scope}}}};
}

void from_json(const Json& j, LatticeResult& r)
{
    r.lattice = field(j, "lattice").get<DeloneSet>();
    r.map = field(j, "rescale").get<RescaleMap>();
    const Json& shift = field(j, "shift");
    r.shift = {decode_rational(shift.at(0)), decode_rational(shift.at(1))};
    const Json& c = field(j, "certificate");
    r.certificate_kind = field(c, "kind").get<std::string>();
    r.certificate = field(c, "holds").get<bool>();
    r.scope = field(c, "scope").get<std::string>();
}

Tower tower_from_json(const Json& j)
{
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "explicit")
    {
        std::vector<IntMatrix> matrices;
        for (const Json& m : field(j, "matrices"))
            matrices.push_back(decode_int_matrix(m));
        return Tower::explicit_matrices(std::move(matrices));
    }
    if (kind == "stationary")
        return Tower::stationary(decode_int_matrix(field(j, "matrix")));
    throw Error("invalid_json", "unknown tower kind '" + kind + "'");
}

} // namespace solenoid
