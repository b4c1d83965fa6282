#pragma once

// JSON encoding of every value the CLI reads or writes. Each to_json has a
// matching from_json so that emitted documents load back unchanged.

#include <nlohmann/json.hpp>

#include "solenoid/complex.hpp"
#include "solenoid/geometry.hpp"
#include "solenoid/rectify.hpp"
#include "solenoid/substitution.hpp"
#include "solenoid/tower.hpp"
#include "solenoid/voronoi.hpp"

namespace solenoid {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json encode(const Integer& v);
Integer decode_integer(const Json& j);
/// Integral rationals become numbers, others "p/q" strings.
Json encode(const Rational& v);
Rational decode_rational(const Json& j);
/// Non-finite values become "inf", "-inf" or "nan".
Json encode(double v);
double decode_double(const Json& j);

Json encode(const IntMatrix& m);
IntMatrix decode_int_matrix(const Json& j);

void to_json(Json& j, const Point& p);
void from_json(const Json& j, Point& p);
void to_json(Json& j, const Box& b);
void from_json(const Json& j, Box& b);
/// {dim, r, R, window, points: [[x, (y,) label], ...]}
void to_json(Json& j, const DeloneSet& x);
void from_json(const Json& j, DeloneSet& x);
void to_json(Json& j, const DeloneWitness& w);
void from_json(const Json& j, DeloneWitness& w);
void to_json(Json& j, const DeloneReport& r);
void from_json(const Json& j, DeloneReport& r);
void to_json(Json& j, const GroupElement& g);
void from_json(const Json& j, GroupElement& g);
void to_json(Json& j, const MetricResult& r);
void from_json(const Json& j, MetricResult& r);
void to_json(Json& j, const VoronoiCell& c);
void from_json(const Json& j, VoronoiCell& c);
void to_json(Json& j, const VoronoiDiagram& v);
void from_json(const Json& j, VoronoiDiagram& v);

void to_json(Json& j, const Germ& g);
void from_json(const Json& j, Germ& g);
void to_json(Json& j, const Sides& s);
void from_json(const Json& j, Sides& s);
/// Boundary matrices as sparse [row, column, value] triples.
void to_json(Json& j, const BranchedComplex& s);
void from_json(const Json& j, BranchedComplex& s);
void to_json(Json& j, const ComplexIssue& i);
void from_json(const Json& j, ComplexIssue& i);
void to_json(Json& j, const ComplexReport& r);
void from_json(const Json& j, ComplexReport& r);
void to_json(Json& j, const HomologyCone& h);
void from_json(const Json& j, HomologyCone& h);

void to_json(Json& j, const ZoomedOutReport& r);
void from_json(const Json& j, ZoomedOutReport& r);
void to_json(Json& j, const MeasureConeReport& r);
void from_json(const Json& j, MeasureConeReport& r);
void to_json(Json& j, const ErgodicityCertificate& c);
void from_json(const Json& j, ErgodicityCertificate& c);
void to_json(Json& j, const ErgodicityResult& r);
void from_json(const Json& j, ErgodicityResult& r);

void to_json(Json& j, const Substitution1D& s);
void from_json(const Json& j, Substitution1D& s);
void to_json(Json& j, const Substitution2D& s);
void from_json(const Json& j, Substitution2D& s);

void to_json(Json& j, const Length& l);
void from_json(const Json& j, Length& l);
void to_json(Json& j, const RescaleMap& m);
void from_json(const Json& j, RescaleMap& m);
void to_json(Json& j, const FibrationReport& r);
void from_json(const Json& j, FibrationReport& r);
void to_json(Json& j, const LatticeResult& r);
void from_json(const Json& j, LatticeResult& r);

/// {"kind": "explicit", "matrices": [...]} or {"kind": "stationary",
/// "matrix": [...]}; substitution-backed towers are assembled by the caller.
Tower tower_from_json(const Json& j);

Verdict parse_verdict(const std::string& s);
Check parse_check(const std::string& s);

} // namespace solenoid
