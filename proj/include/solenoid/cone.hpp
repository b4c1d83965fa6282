#pragma once

// Polyhedral cone utilities: extreme rays of {x >= 0 : E x = 0} by the double
// description method, and exact conic-hull membership by a phase-one simplex.

#include <vector>

#include "solenoid/exact.hpp"

namespace solenoid {

/// Extreme rays of the pointed cone {x in Q^n : x >= 0, E x = 0}.
///
/// Starts from the n coordinate rays of the orthant and intersects with one
/// hyperplane per row of `equalities`, in row order. Adjacency uses the
/// combinatorial test on zero patterns. Rays come back as primitive integer
/// vectors sorted in decreasing lexicographic order.
std::vector<IntVector> nonnegative_kernel_rays(const IntMatrix& equalities, std::size_t n);

/// Minimum of sum |v - R lambda| over lambda >= 0 where the columns of R are
/// `generators`. Computed exactly (Bland's rule, no cycling).
Rational conic_residual(const std::vector<RatVector>& generators, const RatVector& v);

/// True when `v` lies in the conic hull of `generators` up to an L1 residual
/// of `tol * (1 + |v|_1)`.
bool in_conic_hull(const std::vector<RatVector>& generators, const RatVector& v, const Rational& tol);

} // namespace solenoid
