#pragma once

// Submersions between branched complexes, their transition matrices, tower
// systems, the cone of transverse invariant measures as a nested intersection,
// and unique-ergodicity verdicts.

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/complex.hpp"
#include "solenoid/exact.hpp"

namespace solenoid {

/// Adjacency metadata a generator attaches to a submersion so that the
/// zoomed-out conditions can be decided.
struct BoundaryMetadata
{
    /// [source cell][slot] -> target germs met, from inside the image of the
    /// source cell, along the image of that boundary slot (in boundary order).
    std::vector<std::vector<std::vector<Germ>>> slot_images;
    /// [source cell][k] -> whether the k-th image cell touches the boundary of
    /// the image of the source cell.
    std::vector<std::vector<bool>> touches_boundary;
    /// Each source cell maps onto a union of whole target cells.
    bool images_exact = true;

    friend bool operator==(const BoundaryMetadata&, const BoundaryMetadata&) = default;
};

struct Submersion
{
    std::shared_ptr<const BranchedComplex> source;
    std::shared_ptr<const BranchedComplex> target;
    /// For each source top cell, the target top cells it covers, in order.
    std::vector<std::vector<std::size_t>> cell_map;
    std::optional<BoundaryMetadata> boundary;
};

Submersion identity_submersion(std::shared_ptr<const BranchedComplex> s);

/// outer o inner, i.e. first `inner` (S3 -> S2) then `outer` (S2 -> S1).
/// Slot images compose; boundary-touching flags are only carried in dimension 1.
Submersion compose(const Submersion& outer, const Submersion& inner);

/// A[i][j] = number of preimages in source region j of a point of target
/// region i. Throws when a target cell has no preimage.
IntMatrix induced_matrix(const Submersion& tau);

enum class Check
{
    pass,
    fail,
    undecidable
};

std::string to_string(Check c);

struct ZoomedOutReport
{
    Check nesting = Check::undecidable;
    Check boundary_inclusion = Check::undecidable;
    Check strict_growth = Check::undecidable;
    Check border_forcing = Check::undecidable;
    std::vector<std::string> notes;

    friend bool operator==(const ZoomedOutReport&, const ZoomedOutReport&) = default;
};

ZoomedOutReport zoomed_out_check(const Submersion& tau);

/// A finite truncation of (S_n, tau_n). Stationary towers repeat one matrix
/// (and optionally carry its complex); explicit towers list A_1, A_2, ...
class Tower
{
public:
    enum class Kind
    {
        stationary,
        explicit_matrices
    };

    static Tower stationary(IntMatrix a, std::shared_ptr<const BranchedComplex> complex = nullptr);
    static Tower explicit_matrices(std::vector<IntMatrix> matrices);

    Kind kind() const noexcept { return kind_; }
    /// Number of levels available (stationary: unbounded).
    std::size_t depth() const noexcept;
    /// A_n, 1-based.
    const IntMatrix& matrix(std::size_t n) const;
    /// Dimension p(n) of level n, 1-based.
    std::size_t level_size(std::size_t n) const;
    const std::shared_ptr<const BranchedComplex>& complex() const noexcept { return complex_; }

private:
    Kind kind_ = Kind::stationary;
    std::vector<IntMatrix> matrices_;
    std::shared_ptr<const BranchedComplex> complex_;
};

enum class Verdict
{
    unique,
    multiple,
    undecided
};

std::string to_string(Verdict v);

struct MeasureConeReport
{
    std::size_t depth = 0;
    /// Extremal rays of W_depth, normalized to entry sum 1, with rays closer
    /// than 100 tol in the Hilbert metric merged into their first member.
    std::vector<std::vector<double>> rays;
    /// Same rays as exact rationals while the computation stayed exact.
    std::vector<RatVector> exact_rays;
    bool exact = true;
    /// Bound on the relative rounding error of `rays` once in floating mode.
    double error_bound = 0.0;
    double hilbert_diameter = 0.0;
    /// diameter of W_n for n = 1..depth.
    std::vector<double> diameter_history;
    Verdict verdict = Verdict::undecided;
    /// Number of separated limiting directions (1 for unique).
    std::size_t multiplicity = 0;
    /// Number of extremal rays of W_depth before merging.
    std::size_t extremal_count = 0;
    /// Normalized mean of the extremal rays (before merging).
    std::vector<double> frequencies;
    RatVector exact_frequencies;
    std::vector<std::string> notes;

    friend bool operator==(const MeasureConeReport&, const MeasureConeReport&) = default;
};

struct ConeOptions
{
    /// Above this many bits per entry the product switches to floating rays.
    std::size_t exact_bit_limit = 1000;
    std::size_t stabilization_window = 5;
    double stabilization_change = 0.01;

    friend bool operator==(const ConeOptions&, const ConeOptions&) = default;
};

/// Exact rays of W_n = A_1 ... A_{n-1}(H_g^+(S_n)), normalized to sum 1, not
/// pruned. n is 1-based; requires the product to stay within exact range.
std::vector<RatVector> cone_generators(const Tower& t, std::size_t n);

MeasureConeReport measure_cone(const Tower& t, std::size_t depth, double tol, const ConeOptions& options = {});

struct ErgodicityCertificate
{
    /// "primitive_power", "birkhoff_product" or "measured".
    std::string kind;
    /// Stationary: smallest k with A^k > 0 and the coefficient of A^k.
    std::size_t power = 0;
    double coefficient = 1.0;
    /// Explicit: coefficients of the strictly positive blocks used.
    std::vector<double> block_coefficients;
    /// Upper bound on the Hilbert diameter of W_depth implied by contraction.
    double diameter_bound = std::numeric_limits<double>::infinity();
    std::vector<double> diameters;

    friend bool operator==(const ErgodicityCertificate&, const ErgodicityCertificate&) = default;
};

struct ErgodicityResult
{
    Verdict verdict = Verdict::undecided;
    std::size_t multiplicity = 0;
    ErgodicityCertificate certificate;
    MeasureConeReport cone;

    friend bool operator==(const ErgodicityResult&, const ErgodicityResult&) = default;
};

ErgodicityResult unique_ergodicity(const Tower& t, std::size_t depth, double tol, const ConeOptions& options = {});

/// Upper bound on the number of ergodic measures: dim Z_g of the complex for
/// stationary towers, otherwise the smallest level size.
std::size_t ergodic_bound(const Tower& t);

/// Smallest k <= (n-1)^2 + 1 with A^k strictly positive, if any.
std::optional<std::size_t> primitivity_exponent(const IntMatrix& a);

} // namespace solenoid
