#include <doctest.h>

#include <fstream>
#include <sstream>

#include "solenoid/hilbert.hpp"
#include "solenoid/io.hpp"
#include "solenoid/rectify.hpp"
#include "solenoid/schema.hpp"
#include "solenoid/voronoi.hpp"

using namespace solenoid;

namespace {

// Serialize, print, reparse, deserialize.
template <class T>
T round_trip(const T& value)
{
    const std::string text = Json(value).dump();
    return Json::parse(text).get<T>();
}

Json load_schema(const char* name)
{
    std::ifstream in(std::string(SOLENOID_SCHEMA_DIR) + "/" + name);
    return Json::parse(in);
}

} // namespace

TEST_CASE("scalar encodings")
{
    const Integer big = Integer(1) << 100;
    CHECK(decode_integer(encode(big)) == big);
    CHECK(decode_integer(encode(Integer(-5))) == -5);
    CHECK(decode_rational(encode(Rational(-7, 3))) == Rational(-7, 3));
    CHECK(std::isinf(decode_double(encode(std::numeric_limits<double>::infinity()))));
    CHECK(std::isnan(decode_double(encode(std::numeric_limits<double>::quiet_NaN()))));
    const IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, big}});
    CHECK(decode_int_matrix(encode(m)) == m);
}

TEST_CASE("geometry round trips")
{
    const DeloneSet fib = to_delone(*builtin_1d("fibonacci"), {0}, 8);
    CHECK(round_trip(fib) == fib);
    const DeloneSet chair = to_delone(*builtin_2d("chair"), 0, 2);
    CHECK(round_trip(chair) == chair);
    CHECK(round_trip(verify_delone(chair)) == verify_delone(chair));
    const DeloneReport bad = verify_delone(chair.points, 2, chair.window, 5.0, 0.01);
    CHECK(round_trip(bad) == bad);
    const VoronoiDiagram v = voronoi_diagram(chair);
    CHECK(round_trip(v) == v);

    MetricGrid grid;
    grid.step = 0.1;
    grid.epsilons = {0.2, 0.5};
    const MetricResult r = delone_metric(fib, fib, grid);
    CHECK(round_trip(r) == r);
}

TEST_CASE("complex and tower round trips")
{
    const Substitution1D fib = *builtin_1d("fibonacci");
    const Substitution2D half = *builtin_2d("half_hex");
    for (const BranchedComplex& c : {anderson_putnam(collar(fib)), anderson_putnam(half)})
    {
        CHECK(round_trip(c) == c);
        CHECK(round_trip(validate_complex(c)) == validate_complex(c));
        CHECK(round_trip(positive_cone(c)) == positive_cone(c));
    }
    const ZoomedOutReport z = zoomed_out_check(self_submersion(fib));
    CHECK(round_trip(z) == z);

    const Tower t = Tower::stationary(substitution_matrix(fib));
    const ErgodicityResult e = unique_ergodicity(t, 30, 1e-8);
    CHECK(round_trip(e) == e);
    const MeasureConeReport m = measure_cone(t, 10, 1e-8);
    CHECK(round_trip(m) == m);
}

TEST_CASE("substitution round trips")
{
    for (const std::string& name : builtin_names())
    {
        CAPTURE(name);
        if (auto s = builtin_1d(name))
        {
            CHECK(round_trip(*s) == *s);
            CHECK(round_trip(collar(*s)) == collar(*s));
        }
        else
            CHECK(round_trip(*builtin_2d(name)) == *builtin_2d(name));
    }
    const Json inline_spec = Json::parse(R"({"name":"tm","alphabet":["a","b"],"rules":{"a":"ab","b":"ba"}})");
    const Substitution1D tm = inline_spec.get<Substitution1D>();
    CHECK(substitution_matrix(tm) == IntMatrix::from_rows({{1, 1}, {1, 1}}));

    Json pinwheel = Json(*builtin_2d("chair"));
    pinwheel["lattice"] = "pinwheel";
    CHECK_THROWS_AS(pinwheel.get<Substitution2D>(), Error);
}

TEST_CASE("rectify round trips")
{
    const RectTiling t = rect_decompose(*builtin_1d("fibonacci"), {0}, 6);
    const RescaleMap m = commensurate_rescale(axis_lengths(t), 1);
    CHECK(round_trip(m) == m);
    CHECK(round_trip(torus_fibration(apply_rescale(t, m))) == torus_fibration(apply_rescale(t, m)));
    const LatticeResult l = to_lattice_delone(rect_decompose(*builtin_2d("chair"), 0, 2));
    CHECK(round_trip(l) == l);
    const Length len{1.25, Rational(5, 4)};
    CHECK(round_trip(len) == len);
}

TEST_CASE("tower specs")
{
    const Tower s = tower_from_json(Json::parse(R"({"kind":"stationary","matrix":[[1,1],[1,0]]})"));
    CHECK(s.kind() == Tower::Kind::stationary);
    CHECK(s.matrix(7) == IntMatrix::from_rows({{1, 1}, {1, 0}}));
    const Tower e = tower_from_json(Json::parse(R"({"kind":"explicit","matrices":[[[2,1],[1,2]],[[4,1],[1,4]]]})"));
    CHECK(e.depth() == 3);
    CHECK(e.matrix(2) == IntMatrix::from_rows({{4, 1}, {1, 4}}));
    CHECK_THROWS_AS(tower_from_json(Json::parse(R"({"kind":"explicit","matrices":[[[1,2]],[[1],[2],[3]]]})")), Error);
    CHECK(parse_verdict("multiple") == Verdict::multiple);
    CHECK(parse_check("fail") == Check::fail);
}

TEST_CASE("schema validation")
{
    const Json job = load_schema("job.schema.json");
    CHECK(schema_errors(job, Json::parse(R"({"command":"ergodicity","substitution":"fibonacci","depth":30})")).empty());
    CHECK(schema_errors(job, Json::parse(
                                 R"({"command":"measures","tower":{"kind":"explicit","matrices":[[[1,1],[1,2]]]}})"))
              .empty());
    CHECK_FALSE(schema_errors(job, Json::parse(R"({"command":"dance"})")).empty());
    CHECK_FALSE(schema_errors(job, Json::parse(R"({"command":"gen","depth":-1})")).empty());
    CHECK_FALSE(schema_errors(job, Json::parse(R"({"command":"gen","unknown":1})")).empty());
    CHECK_FALSE(schema_errors(job, Json::parse(R"({"command":"gen","depth":"deep"})")).empty());

    const Json set = load_schema("delone_set.schema.json");
    CHECK(schema_errors(set, Json(to_delone(*builtin_2d("chair"), 0, 2))).empty());
    CHECK_FALSE(schema_errors(set, Json::parse(R"({"dim":3,"points":[]})")).empty());
}
