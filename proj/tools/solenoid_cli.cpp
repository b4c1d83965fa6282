// Command-line front end. Every command writes one JSON document (or CSV/SVG
// when requested) to --out or stdout; errors are JSON on stdout with a nonzero
// exit status (2 for usage and schema errors, 1 for everything else).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include "schemas.hpp"
#include "solenoid/hilbert.hpp"
#include "solenoid/io.hpp"
#include "solenoid/rectify.hpp"
#include "solenoid/schema.hpp"
#include "solenoid/substitution.hpp"
#include "solenoid/tower.hpp"
#include "solenoid/voronoi.hpp"

using namespace solenoid;

namespace {

struct UsageError : std::runtime_error
{
    UsageError(std::string code, const std::string& message) : std::runtime_error(message), code(std::move(code)) {}
    std::string code;
};

struct Options
{
    std::string command;
    std::string sub;
    std::string spec_path;
    std::string out;
    std::string format = "json";
    std::string group = "translations";
    std::vector<std::string> inputs;
    std::optional<std::size_t> depth;
    std::optional<double> tol;
    bool collared = false;
    std::vector<double> radius;
    std::vector<double> epsilons;
    std::optional<double> step;
    std::optional<double> angle_step;
    bool preserve_ratios = false;
    Json spec = Json::object();
};

struct Output
{
    Json json;
    std::optional<std::string> csv;
    std::optional<std::string> svg;
};

using AnySubstitution = std::variant<Substitution1D, Substitution2D>;

Json read_json_file(const std::string& path, const char* schema)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("missing_file", "cannot open '" + path + "'");
    Json doc;
    try
    {
        doc = Json::parse(in);
    }
    catch (const Json::parse_error& e)
    {
        throw UsageError("schema_error", "'" + path + "' is not valid JSON: " + e.what());
    }
    const auto errors = schema_errors(Json::parse(schema), doc);
    if (!errors.empty())
    {
        std::string message = "'" + path + "' does not match the schema:";
        for (const std::string& e : errors)
            message += " " + e + ";";
        throw UsageError("schema_error", message);
    }
    return doc;
}

AnySubstitution substitution_from(const Json& j)
{
    if (j.is_string())
    {
        const std::string name = j.get<std::string>();
        if (auto s = builtin_1d(name))
            return *s;
        if (auto s = builtin_2d(name))
            return *s;
        throw Error("unknown_substitution", "no built-in substitution named '" + name + "'");
    }
    if (j.value("dim", 1) == 2)
        return j.get<Substitution2D>();
    return j.get<Substitution1D>();
}

AnySubstitution resolve_substitution(const Options& o)
{
    if (!o.sub.empty())
        return substitution_from(Json(o.sub));
    if (o.spec.contains("substitution"))
        return substitution_from(o.spec.at("substitution"));
    if (o.spec.contains("tower") && o.spec.at("tower").contains("substitution"))
        return substitution_from(o.spec.at("tower").at("substitution"));
    throw UsageError("missing_input", "give --sub NAME or a spec file with a substitution");
}

std::size_t depth_or(const Options& o, std::size_t fallback) { return o.depth.value_or(fallback); }

DeloneSet input_set(const Options& o, std::size_t index, std::size_t default_depth_1d, std::size_t default_depth_2d)
{
    if (o.inputs.size() > index)
        return read_json_file(o.inputs[index], cli::delone_set_schema).get<DeloneSet>();
    const AnySubstitution s = resolve_substitution(o);
    if (const auto* s1 = std::get_if<Substitution1D>(&s))
        return to_delone(*s1, {0}, depth_or(o, default_depth_1d));
    return to_delone(std::get<Substitution2D>(s), 0, depth_or(o, default_depth_2d));
}

std::string polygons_svg(const std::vector<std::vector<Point>>& polys, const std::vector<std::string>& labels)
{
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    for (const auto& p : polys)
        for (const Point& v : p)
            x0 = std::min(x0, v.x), y0 = std::min(y0, v.y), x1 = std::max(x1, v.x), y1 = std::max(y1, v.y);
    const double unit = 600.0 / std::max({x1 - x0, y1 - y0, 1e-12});
    std::map<std::string, std::string> colors;
    const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
    std::ostringstream out;
    out.precision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (x1 - x0) * unit << "\" height=\"" << (y1 - y0) * unit
        << "\">\n";
    for (std::size_t i = 0; i < polys.size(); ++i)
    {
        auto [it, fresh] = colors.try_emplace(labels[i], palette[colors.size() % 8]);
        out << "<polygon points=\"";
        for (std::size_t k = 0; k < polys[i].size(); ++k)
            out << (k ? " " : "") << (polys[i][k].x - x0) * unit << ',' << (y1 - polys[i][k].y) * unit;
        out << "\" fill=\"" << it->second << "\" stroke=\"#333\" stroke-width=\"0.5\"><title>" << labels[i]
            << "</title></polygon>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string delone_csv(const DeloneSet& x)
{
    std::ostringstream out;
    out.precision(17);
    out << (x.dim == 1 ? "x,label\n" : "x,y,label\n");
    for (std::size_t i = 0; i < x.points.size(); ++i)
    {
        out << x.points[i].x;
        if (x.dim == 2)
            out << ',' << x.points[i].y;
        out << ',' << x.label(i) << '\n';
    }
    return out.str();
}

Output run_gen(const Options& o)
{
    const AnySubstitution s = resolve_substitution(o);
    Output out;
    if (const auto* s1 = std::get_if<Substitution1D>(&s))
    {
        const DeloneSet x = to_delone(*s1, {0}, depth_or(o, 10));
        out.json = x;
        out.csv = delone_csv(x);
        return out;
    }
    const auto& s2 = std::get<Substitution2D>(s);
    const std::size_t n = depth_or(o, 4);
    const DeloneSet x = to_delone(s2, 0, n);
    out.json = x;
    out.csv = delone_csv(x);
    std::vector<std::vector<Point>> polys;
    std::vector<std::string> labels;
    for (const Placement& p : iterate(s2, {0, 0, {0, 0}}, n))
    {
        std::vector<Point> poly;
        for (const LatticePoint& v : tile_vertices(s2, p))
            poly.push_back(to_euclidean(s2, v));
        polys.push_back(std::move(poly));
        labels.push_back(s2.type_label(s2.type_of(p)));
    }
    out.svg = polygons_svg(polys, labels);
    return out;
}

Output run_voronoi(const Options& o)
{
    const DeloneSet x = input_set(o, 0, 10, 4);
    const VoronoiDiagram v = voronoi_diagram(x);
    const auto classes = cell_translation_classes(v, x, o.tol.value_or(geometric_tolerance));
    Output out;
    out.json = {{"diagram", v}, {"face_to_face", face_to_face(v)}, {"translation_classes", classes.size()}};
    Json sizes = Json::array();
    for (const CellClass& c : classes)
        sizes.push_back(c.members.size());
    out.json["class_sizes"] = sizes;
    std::ostringstream csv;
    csv.precision(17);
    csv << "site,clipped,measure\n";
    for (const VoronoiCell& c : v.cells)
        csv << c.site << ',' << (c.clipped ? 1 : 0) << ',' << c.measure << '\n';
    out.csv = csv.str();
    if (x.dim == 2)
        out.svg = to_svg(v, x);
    return out;
}

Output run_patches(const Options& o)
{
    const DeloneSet x = input_set(o, 0, 10, 4);
    const GroupMode group = parse_group_mode(o.group);
    const double tol = o.tol.value_or(geometric_tolerance);
    const std::vector<double> radii = o.radius.empty() ? std::vector<double>{1.5} : o.radius;
    Json results = Json::array();
    std::ostringstream csv;
    csv << "radius,patches,classes\n";
    for (double r : radii)
    {
        const auto patches = extract_patches(x, r);
        const auto classes = classify_patches(patches, group, tol);
        Json sizes = Json::array();
        for (const PatchClass& c : classes)
            sizes.push_back(c.members.size());
        results.push_back({{"radius", r}, {"patches", patches.size()}, {"classes", classes.size()}, {"class_sizes", sizes}});
        csv << r << ',' << patches.size() << ',' << classes.size() << '\n';
    }
    Output out;
    out.json = {{"group", to_string(group)}, {"tol", tol}, {"results", results}};
    out.csv = csv.str();
    return out;
}

struct Stationary
{
    IntMatrix matrix;
    std::shared_ptr<const BranchedComplex> complex;
    std::vector<std::string> labels;
    std::vector<int> projection;
    std::vector<std::string> core_labels;
};

Stationary stationary_data(const AnySubstitution& s, bool collared)
{
    Stationary d;
    if (const auto* s1 = std::get_if<Substitution1D>(&s))
    {
        const Substitution1D t = collared ? collar(*s1) : *s1;
        d.matrix = substitution_matrix(t);
        d.complex = std::make_shared<const BranchedComplex>(anderson_putnam(t, false));
        d.labels = t.alphabet;
        d.projection = t.projection;
        d.core_labels = s1->alphabet;
        return d;
    }
    if (collared)
        throw Error("unsupported", "collaring is implemented for one-dimensional substitutions only");
    const auto& s2 = std::get<Substitution2D>(s);
    d.matrix = substitution_matrix(s2);
    d.complex = std::make_shared<const BranchedComplex>(anderson_putnam(s2));
    for (std::size_t t = 0; t < s2.type_count(); ++t)
        d.labels.push_back(s2.type_label(t));
    return d;
}

Output run_complex(const Options& o)
{
    const AnySubstitution s = resolve_substitution(o);
    const BranchedComplex c = *stationary_data(s, o.collared).complex;
    Output out;
    out.json = {{"collared", o.collared}, {"complex", c}, {"validation", validate_complex(c)}};
    return out;
}

Output run_homology(const Options& o)
{
    const AnySubstitution s = resolve_substitution(o);
    const Stationary d = stationary_data(s, o.collared);
    const HomologyCone h = positive_cone(*d.complex);
    Output out;
    out.json = h;
    out.json["dim_Z" + std::to_string(d.complex->dim)] = h.dimension();
    out.json["cells"] = d.complex->labels.back();
    out.json["collared"] = o.collared;
    return out;
}

struct TowerJob
{
    Tower tower;
    std::vector<std::string> labels;
    std::vector<int> projection;
    std::vector<std::string> core_labels;
};

TowerJob tower_job(const Options& o)
{
    const bool collared = o.collared || (o.spec.contains("tower") && o.spec.at("tower").value("collared", false));
    if (o.sub.empty() && o.spec.contains("tower"))
    {
        const Json& t = o.spec.at("tower");
        if (t.at("kind") == "explicit" || t.contains("matrix"))
        {
            Tower tower = tower_from_json(t);
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < tower.level_size(1); ++i)
                labels.push_back("x" + std::to_string(i));
            return {std::move(tower), labels, {}, {}};
        }
    }
    const Stationary d = stationary_data(resolve_substitution(o), collared);
    return {Tower::stationary(d.matrix, d.complex), d.labels, d.projection, d.core_labels};
}

Json projected(const TowerJob& job, const std::vector<double>& freq, const RatVector& exact)
{
    std::vector<double> p(job.core_labels.size(), 0.0);
    RatVector q(job.core_labels.size(), Rational(0));
    for (std::size_t i = 0; i < freq.size(); ++i)
        p[static_cast<std::size_t>(job.projection[i])] += freq[i];
    for (std::size_t i = 0; i < exact.size(); ++i)
        q[static_cast<std::size_t>(job.projection[i])] += exact[i];
    Json j = {{"labels", job.core_labels}, {"frequencies", p}};
    Json e = Json::array();
    if (!exact.empty())
        for (const Rational& r : q)
            e.push_back(encode(r));
    j["exact_frequencies"] = e;
    return j;
}

// Explicit towers default to their full length; stationary ones to 30 levels.
std::size_t tower_depth(const Options& o, const Tower& t) { return depth_or(o, std::min<std::size_t>(t.depth(), 30)); }

std::string frequency_csv(const std::vector<std::string>& labels, const std::vector<double>& f)
{
    std::ostringstream out;
    out.precision(17);
    out << "label,frequency\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        out << labels.at(i) << ',' << f[i] << '\n';
    return out.str();
}

Output run_measures(const Options& o)
{
    const TowerJob job = tower_job(o);
    const MeasureConeReport r = measure_cone(job.tower, tower_depth(o, job.tower), o.tol.value_or(1e-8));
    Output out;
    out.json = r;
    out.json["labels"] = job.labels;
    out.json["ergodic_bound"] = ergodic_bound(job.tower);
    if (!job.projection.empty())
        out.json["projected"] = projected(job, r.frequencies, r.exact_frequencies);
    out.csv = frequency_csv(job.labels, r.frequencies);
    return out;
}

Output run_ergodicity(const Options& o)
{
    const TowerJob job = tower_job(o);
    const ErgodicityResult r = unique_ergodicity(job.tower, tower_depth(o, job.tower), o.tol.value_or(1e-8));
    Output out;
    out.json = r;
    out.json["labels"] = job.labels;
    out.json["ergodic_bound"] = ergodic_bound(job.tower);
    out.json["exact_frequencies"] = out.json["cone"]["exact_frequencies"];
    if (!job.projection.empty())
        out.json["projected"] = projected(job, r.cone.frequencies, r.cone.exact_frequencies);
    out.csv = frequency_csv(job.labels, r.cone.frequencies);
    return out;
}

Output run_rectify(const Options& o)
{
    const AnySubstitution s = resolve_substitution(o);
    const RectTiling tiling = std::holds_alternative<Substitution1D>(s)
                                  ? rect_decompose(std::get<Substitution1D>(s), {0}, depth_or(o, 10))
                                  : rect_decompose(std::get<Substitution2D>(s), 0, depth_or(o, 3));
    RescaleOptions options;
    options.preserve_ratios = o.preserve_ratios;
    const RescaleMap map = commensurate_rescale(axis_lengths(tiling), tiling.dim, options);
    const RescaledTiling rescaled = apply_rescale(tiling, map);
    const FibrationReport fibration = torus_fibration(rescaled);
    const LatticeResult lattice = to_lattice_delone(tiling, options);
    const DeloneReport check = verify_delone(lattice.lattice);
    Output out;
    out.json = {{"tiles", tiling.tiles.size()},
                {"rescale", map},
                {"fibration", fibration},
                {"lattice", lattice},
                {"lattice_check", check}};
    out.csv = delone_csv(lattice.lattice);
    if (tiling.dim == 2)
    {
        std::vector<std::vector<Point>> polys;
        std::vector<std::string> labels;
        for (const GridTile& t : rescaled.tiles)
        {
            const double x0 = t.lo[0].convert_to<double>(), y0 = t.lo[1].convert_to<double>();
            const double x1 = x0 + t.size[0].convert_to<double>(), y1 = y0 + t.size[1].convert_to<double>();
            polys.push_back({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
            labels.push_back(t.label);
        }
        out.svg = polygons_svg(polys, labels);
    }
    return out;
}

Output run_metric(const Options& o)
{
    if (o.inputs.size() != 2)
        throw UsageError("usage", "metric needs exactly two --input files");
    const DeloneSet a = input_set(o, 0, 0, 0);
    const DeloneSet b = input_set(o, 1, 0, 0);
    MetricGrid grid;
    grid.group = parse_group_mode(o.group);
    grid.step = o.step.value_or(0.01);
    grid.angle_step = o.angle_step.value_or(0.01);
    grid.epsilons = o.epsilons;
    if (grid.epsilons.empty())
        for (int k = 1; k <= 50; ++k)
            grid.epsilons.push_back(0.01 * k);
    Output out;
    out.json = delone_metric(a, b, grid, o.tol.value_or(geometric_tolerance));
    return out;
}

void merge_spec(Options& o, CLI::App& sub)
{
    if (o.spec_path.empty())
        return;
    o.spec = read_json_file(o.spec_path, cli::job_schema);
    const Json& s = o.spec;
    if (s.contains("command") && s.at("command") != o.command)
        throw UsageError("usage", "spec file is for command '" + s.at("command").get<std::string>() + "'");
    auto given = [&](const char* flag) { return sub.count(flag) > 0; };
    if (s.contains("inputs") && !given("--input"))
        o.inputs = s.at("inputs").get<std::vector<std::string>>();
    if (s.contains("depth") && !given("--depth"))
        o.depth = s.at("depth").get<std::size_t>();
    if (s.contains("tol") && !given("--tol"))
        o.tol = s.at("tol").get<double>();
    if (s.contains("collared") && !given("--collared"))
        o.collared = s.at("collared").get<bool>();
    if (s.contains("group") && !given("--group"))
        o.group = s.at("group").get<std::string>();
    if (s.contains("radius") && !given("--radius"))
        o.radius = s.at("radius").get<std::vector<double>>();
    if (s.contains("epsilons") && !given("--epsilons"))
        o.epsilons = s.at("epsilons").get<std::vector<double>>();
    if (s.contains("step") && !given("--step"))
        o.step = s.at("step").get<double>();
    if (s.contains("angle_step") && !given("--angle-step"))
        o.angle_step = s.at("angle_step").get<double>();
    if (s.contains("preserve_ratios") && !given("--preserve-ratios"))
        o.preserve_ratios = s.at("preserve_ratios").get<bool>();
    if (s.contains("out") && !given("--out"))
        o.out = s.at("out").get<std::string>();
    if (s.contains("format") && !given("--format"))
        o.format = s.at("format").get<std::string>();
}

std::string render(const Output& out, const std::string& format)
{
    if (format == "json")
        return out.json.dump(2) + "\n";
    const auto& text = format == "csv" ? out.csv : out.svg;
    if (!text)
        throw UsageError("unsupported_format", "this command has no " + format + " output");
    return *text;
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw Error("io_error", "cannot write '" + o.out + "'");
    file << text;
}

int fail(const std::string& code, const std::string& message, int status)
{
    std::cout << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
    return status;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of tiling spaces: patches, Voronoi tilings, branched complexes, measure cones."};
    app.require_subcommand(1);
    Options o;

    const std::map<std::string, std::pair<std::string, Output (*)(const Options&)>> commands = {
        {"gen", {"substitution -> Delone set", run_gen}},
        {"voronoi", {"Voronoi tiling of a Delone set", run_voronoi}},
        {"patches", {"patch classes per radius", run_patches}},
        {"complex", {"Anderson-Putnam complex with validation", run_complex}},
        {"homology", {"top cycle space and positive cone", run_homology}},
        {"measures", {"cone of invariant measures", run_measures}},
        {"ergodicity", {"unique-ergodicity verdict with certificate", run_ergodicity}},
        {"rectify", {"commensurable rescale, torus fibration, lattice Delone set", run_rectify}},
        {"metric", {"matching distance between two Delone sets", run_metric}},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands)
    {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--sub", o.sub, "built-in substitution name");
        sub->add_option("--spec", o.spec_path, "JSON job file");
        sub->add_option("--input", o.inputs, "Delone set JSON file(s)");
        sub->add_option("--depth", o.depth, "iteration depth / tower depth");
        sub->add_option("--tol", o.tol, "tolerance");
        sub->add_flag("--collared", o.collared, "use the collared substitution");
        sub->add_option("--group", o.group, "translations | isometries")
            ->check(CLI::IsMember({"translations", "isometries", "planar_direct_isometries"}));
        sub->add_option("--radius", o.radius, "patch radius (repeatable)");
        sub->add_option("--epsilons", o.epsilons, "metric epsilon grid");
        sub->add_option("--step", o.step, "translation grid spacing");
        sub->add_option("--angle-step", o.angle_step, "rotation grid spacing");
        sub->add_flag("--preserve-ratios", o.preserve_ratios, "approximate length ratios when rescaling");
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--format", o.format, "json | csv | svg")->check(CLI::IsMember({"json", "csv", "svg"}));
        subs[name] = sub;
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        return fail("usage", e.what(), 2);
    }

    try
    {
        for (const auto& [name, sub] : subs)
            if (sub->parsed())
                o.command = name;
        merge_spec(o, *subs.at(o.command));
        const Output out = commands.at(o.command).second(o);
        emit(o, render(out, o.format));
        return 0;
    }
    catch (const UsageError& e)
    {
        return fail(e.code, e.what(), 2);
    }
    catch (const Error& e)
    {
        return fail(e.code(), e.what(), 1);
    }
    catch (const std::exception& e)
    {
        return fail("internal", e.what(), 1);
    }
}
