#pragma once

// Symbolic (1D) and lattice-polygon (2D) substitutions: iteration, Delone
// sets, Anderson-Putnam complexes, collaring and the self-submersion.

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "solenoid/complex.hpp"
#include "solenoid/exact.hpp"
#include "solenoid/geometry.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

using Word = std::vector<int>;

/// Longest word or largest patch iterate() will build.
inline constexpr std::size_t max_tiles = 10'000'000;

struct Substitution1D
{
    std::string name;
    std::vector<std::string> alphabet;
    std::vector<Word> rules;
    /// Natural tile lengths (left Perron-Frobenius eigenvector, smallest = 1).
    std::vector<double> lengths;
    /// Exact lengths when all are rational.
    std::optional<std::vector<Rational>> exact_lengths;
    /// For collared substitutions: the core letter of each collared letter in
    /// the parent alphabet. Empty otherwise.
    std::vector<int> projection;

    friend bool operator==(const Substitution1D&, const Substitution1D&) = default;
};

/// Validates rules and fills in lengths (given or computed).
Substitution1D make_substitution(std::string name, std::vector<std::string> alphabet, std::vector<Word> rules,
                                 std::optional<std::vector<double>> lengths = std::nullopt);

Word parse_word(const Substitution1D& s, const std::string& text);
std::string format_word(const Substitution1D& s, const Word& w);

Word iterate(const Substitution1D& s, const Word& seed, std::size_t n);
/// M[i][j] = occurrences of letter i in the image of letter j.
IntMatrix substitution_matrix(const Substitution1D& s);
bool primitive(const Substitution1D& s);

/// Legal factors of the given length: factors of the images of all letters,
/// iterated until the set is unchanged for two consecutive steps.
std::set<Word> language_factors(const Substitution1D& s, std::size_t length);

/// Context-decorated substitution on the legal (left, letter, right) triples.
Substitution1D collar(const Substitution1D& s);

/// Control points at the left endpoints of the tiles of s^n(seed), labeled by
/// letter. r = half the shortest tile, R = the longest tile.
DeloneSet to_delone(const Substitution1D& s, const Word& seed, std::size_t n);

/// One oriented edge per letter; endpoints glued along legal two-letter words.
BranchedComplex anderson_putnam(const Substitution1D& s, bool collared = false);

/// Maps each edge across the edges of its image. Source and target are the
/// same complex (collared when requested); boundary metadata is attached.
Submersion self_submersion(const Substitution1D& s, bool collared = false);

using LatticePoint = std::array<long, 2>;

struct Prototile
{
    std::string name;
    /// Counter-clockwise vertices in lattice coordinates.
    std::vector<LatticePoint> vertices;

    friend bool operator==(const Prototile&, const Prototile&) = default;
};

/// A tile R^rotation(prototile) + translation.
struct Placement
{
    std::size_t prototile = 0;
    int rotation = 0;
    LatticePoint translation{0, 0};

    friend auto operator<=>(const Placement&, const Placement&) = default;
};

enum class Lattice
{
    square,
    hexagonal
};

struct Substitution2D
{
    std::string name;
    Lattice lattice = Lattice::square;
    /// Integer expansion factor.
    long expansion = 2;
    std::vector<Prototile> prototiles;
    /// Decomposition of expansion * prototile (rotation 0) into placements.
    std::vector<std::vector<Placement>> rules;

    /// 4 for the square lattice, 6 for the hexagonal one.
    int rotation_order() const { return lattice == Lattice::square ? 4 : 6; }
    /// Tile types: (prototile, rotation) pairs in index order.
    std::size_t type_count() const { return prototiles.size() * static_cast<std::size_t>(rotation_order()); }
    std::size_t type_of(const Placement& p) const
    {
        return p.prototile * static_cast<std::size_t>(rotation_order()) + static_cast<std::size_t>(p.rotation);
    }
    std::string type_label(std::size_t type) const;

    friend bool operator==(const Substitution2D&, const Substitution2D&) = default;
};

/// Checks the rules: exact area, pairwise interior-disjoint images inside the
/// expanded prototile. Throws Error("invalid_substitution") on failure.
void validate(const Substitution2D& s);

LatticePoint rotate(const Substitution2D& s, LatticePoint p, int rotation);
Point to_euclidean(const Substitution2D& s, LatticePoint p);
/// Lattice vertices of a placed tile.
std::vector<LatticePoint> tile_vertices(const Substitution2D& s, const Placement& p);

std::vector<Placement> iterate(const Substitution2D& s, const Placement& seed, std::size_t n);
/// Counts of tile types: M[i][j] = tiles of type i in the image of type j.
IntMatrix substitution_matrix(const Substitution2D& s);
bool primitive(const Substitution2D& s);

/// Control points at tile barycenters, inside the expanded core box of the
/// seed prototile. r = smallest barycenter-to-boundary distance, R = largest
/// tile diameter.
DeloneSet to_delone(const Substitution2D& s, std::size_t seed_prototile, std::size_t n);

/// One 2-cell per tile type; boundary edges subdivided at lattice points and
/// glued along the adjacencies occurring in iterates.
BranchedComplex anderson_putnam(const Substitution2D& s);
Submersion self_submersion(const Substitution2D& s);

/// Built-in 1D entries: fibonacci, thue_morse, period_doubling.
std::optional<Substitution1D> builtin_1d(const std::string& name);
/// Built-in 2D entries: chair, half_hex.
std::optional<Substitution2D> builtin_2d(const std::string& name);
std::vector<std::string> builtin_names();

} // namespace solenoid
