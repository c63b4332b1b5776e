#pragma once

#include <optional>
#include <vector>

#include "tifs/tiling.hpp"

namespace tifs {

/// Amalgamation and shrinking: each complete copy of a level-0 tiling
/// collapses to the single tile it refines and everything is scaled by s;
/// takes level-k tilings to level k-1, canonical ones exactly. Partner
/// detection uses word provenance when every tile carries one and falls
/// back to geometric matching; any ambiguity raises NotDeflatable.
Tiling deflate(const System& system, const Tiling& tiling);

/// Expansion and splitting, the inverse operation: scales by 1/s and splits
/// every tile congruent to s A^v into its children along the graph.
Tiling inflate(const System& system, const Tiling& tiling);

/// Witness that two blow-up words name isometric tilings: truncation depths
/// p, q with equal xi, equal shifted tails, and the isometry connecting the
/// two blow-ups.
struct EquivalenceWitness {
    int p = 0;
    int q = 0;
    IsometryRecord isometry;
};

/// Searches p, q up to the bound, increasing p+q first; the two words are
/// finite prefixes understood to share one unspecified admissible tail, so
/// the shifted remainders must agree symbol for symbol. Absence of a
/// witness is inconclusive, never a proof of inequivalence.
std::optional<EquivalenceWitness> check_equivalence(const System& system, const Word& theta,
                                                    const Word& psi, int bound);

/// A representative of an equivalence class of infinite reversed words: the
/// stored finite prefix plus one shared unspecified tail.
struct ClassRep {
    Word prefix{Orientation::Reversed};
};

enum class ShiftDirection { Forward, Backward };

/// The shift on equivalence classes: swaps a prefix for the
/// lexicographically smallest admissible padding word whose xi is one less
/// (forward) or one more (backward).
ClassRep shift_class(const System& system, const ClassRep& rep, ShiftDirection direction);

/// The self-similarity f_{-alpha} f_{-beta} f_{-alpha}^{-1} of the blow-up
/// along the eventually periodic word alpha beta beta ...; its exponent is
/// -xi(beta).
AffineMap self_similarity(const System& system, const Word& alpha, const Word& beta);

/// All system isometries mapping the patch into the tiling, found by
/// anchoring on prototile classes and matching maps within the tolerance.
/// A positive radius bounds how far the anchor tile may move.
std::vector<IsometryRecord> find_patch_occurrences(const System& system, const Tiling& tiling,
                                                   const std::vector<Tile>& patch, double radius = 0.0,
                                                   double tolerance = 1e-9);

/// Numeric heuristic for the local-rigidity neighbor-map condition: hunts
/// for a system isometry E != id under which the common tiles of T_0 and
/// E T_0 tile a nontrivial piece of the attractor overlap. Finding one
/// disproves local rigidity; finding none is only evidence for it.
struct RigidityReport {
    enum class Outcome { Passes, Fails, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    std::vector<IsometryRecord> witnesses;
    int depth = 0;
    double tolerance = 0.0;
    int word_bound = 0;
};

RigidityReport neighbor_map_check(const System& system, int depth, double tolerance, int word_bound = 0);

/// Forward (or reversed) words with xi exactly k, lexicographically sorted.
std::vector<Word> words_with_xi(const System& system, int k, Orientation orientation,
                                std::optional<int> root = std::nullopt);

} // namespace tifs
