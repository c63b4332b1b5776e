#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tifs/geometry.hpp"
#include "tifs/symbolic.hpp"
#include "tifs/system.hpp"

namespace tifs {

/// Isometry class of a tile: a copy of s^scale_exponent A^vertex.
struct Prototile {
    int vertex = 0;
    int scale_exponent = 0;

    bool operator==(const Prototile& other) const {
        return vertex == other.vertex && scale_exponent == other.scale_exponent;
    }
    bool operator<(const Prototile& other) const {
        if (vertex != other.vertex) return vertex < other.vertex;
        return scale_exponent < other.scale_exponent;
    }
};

/// A tile is the affine image of one attractor component together with its
/// word provenance. The map carries the exact scale exponent; for tiles of
/// canonical and blow-up tilings the exponent equals xi(body) minus the
/// context level and lies in {1, ..., a_max}.
struct Tile {
    Word context{Orientation::Reversed};
    Word body{Orientation::Forward};
    AffineMap map;
    Prototile prototile;
};

/// A finite tiling plus its construction context: the level of its body
/// words in the canonical ladder, the blow-up word when built as one, and
/// the root vertex of its body words when rooted.
struct Tiling {
    std::vector<Tile> tiles;
    int level = 0;
    std::optional<Word> context_word;
    std::optional<int> root;

    std::size_t size() const { return tiles.size(); }
};

/// T_k = s^{-k} pi(Omega_k), the level-k refinement of the attractor blown
/// back up to prototile scale.
Tiling canonical_tiling(const System& system, int level, std::optional<int> root = std::nullopt);

/// The bounded blow-up tiling of a finite reversed word: tiles
/// f_{-theta} pi(sigma) over sigma in Omega_{xi(theta)} rooted at the end of
/// theta. The empty word yields the level-0 tiling; pass a root to pin its
/// component when the graph has several vertices.
Tiling tiling_of(const System& system, const Word& theta, std::optional<int> empty_root = std::nullopt);

/// All prototile classes (vertex, exponent 1..a_max) in deterministic order.
std::vector<Prototile> prototile_set(const System& system);

/// Representative cloud s^exponent A^vertex of one prototile class.
PointCloud realize_prototile(const System& system, const Prototile& prototile, int depth);

/// The isometry and canonical level that reproduce a blow-up tiling:
/// tiling_of(theta) = E * canonical_tiling(level, vertex) with
/// E = f_{-theta} s^{xi(theta)}.
struct CanonicalForm {
    IsometryRecord isometry;
    int level = 0;
    std::optional<int> vertex;
};

CanonicalForm canonical_form(const System& system, const Word& theta);

/// T_k as a disjoint union of isometric copies of lower canonical tilings,
/// one per word of omega(l); requires k >= a_max + l.
struct CanonicalBlock {
    Word prefix{Orientation::Forward};
    IsometryRecord isometry; // s^{-k} f_prefix s^{k - xi(prefix)}
    int level = 0;           // k - xi(prefix)
    int vertex = 0;          // end vertex of the prefix
};

std::vector<CanonicalBlock> decompose_canonical(const System& system, int k, int l,
                                                std::optional<int> root = std::nullopt);

// -- helpers used across the tiling, address, and dynamics modules --

/// Tile identity: same prototile class, same exact exponent, maps within
/// tolerance. Provenance words are not part of identity.
bool tile_equivalent(const Tile& a, const Tile& b, double tolerance);

/// Sorted index over a tiling for identity lookups within a tolerance.
class TileMatcher {
public:
    TileMatcher(const Tiling& tiling, double tolerance);
    const Tile* find(const Tile& tile) const;
    bool contains(const Tile& tile) const { return find(tile) != nullptr; }

private:
    const Tiling& tiling_;
    double tolerance_;
    std::vector<std::size_t> order_;
};

bool tiling_subset(const Tiling& inner, const Tiling& outer, double tolerance);
bool tiling_equal(const Tiling& a, const Tiling& b, double tolerance);

/// Applies an isometry to every tile; levels and provenance words survive,
/// the blow-up context word does not.
Tiling apply_isometry(const IsometryRecord& isometry, const Tiling& tiling);

/// Cloud of one tile at the depth of the prepared component clouds.
PointCloud realize_tile(const System& system, const PointCloud& components, const Tile& tile);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Exact support interval of a tile of a one-dimensional system.
Interval support_interval(const System& system, const Tile& tile);

/// Union support of a 1D tiling; exact for interval attractors.
Interval support_interval(const System& system, const Tiling& tiling);

/// True when the 1D tile interiors are pairwise disjoint within tolerance.
bool interiors_disjoint_1d(const System& system, const Tiling& tiling, double tolerance);

/// Overlap diagnostic for higher dimensions: fraction of occupied grid
/// cells claimed by more than one tile of the realized tiling. Tilings that
/// only touch along boundaries score near zero at sufficient depth.
double tiling_overlap_fraction(const System& system, const Tiling& tiling, int depth);

/// Prototile letter: exponent 1 -> 'l', 2 -> 's', larger exponents print as
/// digits.
char letter_for_exponent(int exponent);

/// Letter string of a 1D tiling read left to right.
std::string letters(const System& system, const Tiling& tiling);

/// Tiles ordered for output: by support position in 1D, by body word above.
std::vector<std::size_t> display_order(const System& system, const Tiling& tiling);

} // namespace tifs
