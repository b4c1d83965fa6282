#pragma once

// Hilbert projective metric on the positive orthant and Birkhoff's
// contraction coefficient of a positive matrix.

#include <span>
#include <vector>

#include "solenoid/exact.hpp"

namespace solenoid {

/// ln( max_i(x_i/y_i) / min_i(x_i/y_i) ). Both vectors strictly positive.
double hilbert_distance(std::span<const double> x, std::span<const double> y);

/// Exact-ratio variant for integer or rational rays; the logarithm is the only
/// rounding step, so tiny distances keep their relative accuracy.
double hilbert_distance(const RatVector& x, const RatVector& y);

/// Distance between two nonnegative rays: computed on the common support when
/// the zero patterns agree, +infinity otherwise. Zero vectors are rejected.
double projective_distance(const RatVector& x, const RatVector& y);
double projective_distance(std::span<const double> x, std::span<const double> y);

/// The same distance written as ln((m+l)(m+r)/(l r)) on the chord through x
/// and y of the simplex {sum = 1} (after normalizing both), where m = |x - y| and l, r are the lengths cut off
/// on either side. Used to cross-check the ratio form.
double hilbert_distance_chord(std::span<const double> x, std::span<const double> y);

/// Projective diameter Delta(A) = max over column pairs (j, k) of
/// ln( max_i(A_ij/A_ik) * max_i(A_ik/A_ij) ). Requires A > 0.
double projective_diameter(const Matrix<double>& a);
double projective_diameter(const IntMatrix& a);

/// tanh(Delta(A)/4); throws for matrices with a zero entry.
double birkhoff_coefficient(const Matrix<double>& a);
double birkhoff_coefficient(const IntMatrix& a);

struct Contraction
{
    double coefficient = 1.0;
    double diameter = 0.0;
    /// Set when A has a zero entry; the coefficient is then reported as 1.
    bool degenerate = false;
};

/// Nonnegative mode: never throws on zero entries, flags them instead.
Contraction birkhoff_contraction(const IntMatrix& a);

/// ln(q) for q > 0 without overflowing on large numerators or denominators.
double log_rational(const Rational& q);

} // namespace solenoid
