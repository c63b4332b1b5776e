#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tifs/system.hpp"

namespace tifs {

/// The canonical symbolic tiling at one level: the forward words with
/// xi_minus(sigma) <= level < xi(sigma), optionally restricted to those
/// rooted at one vertex. Words are kept lexicographically sorted.
struct SymbolicTiling {
    int level = 0;
    std::optional<int> root;
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
    bool operator==(const SymbolicTiling& other) const {
        return level == other.level && words == other.words;
    }
};

/// Exact enumeration by depth-first extension of admissible words until xi
/// exceeds the level.
SymbolicTiling omega(const System& system, int level, std::optional<int> root = std::nullopt);

/// Level k -> k+1: words with xi >= k+2 are kept, words with xi = k+1 are
/// replaced by all their admissible one-symbol extensions.
SymbolicTiling split(const System& system, const SymbolicTiling& tiling);

/// The unique prefix of the word lying at the given level.
Word amalgamate(const System& system, const Word& word, int level);

/// Groups the level-m words by their level-k amalgamation; the blocks are
/// pairwise disjoint and cover omega(m).
std::map<Word, std::vector<Word>> partition(const System& system, int m, int k,
                                            std::optional<int> root = std::nullopt);

/// omega(k) written as the disjoint union over omega(l) of left-extended
/// lower-level tilings rooted where each prefix ends.
struct PredecessorDecomposition {
    int level = 0; // k
    std::vector<std::pair<Word, SymbolicTiling>> blocks;
};

PredecessorDecomposition predecessor_decomposition(const System& system, int k, int l,
                                                   std::optional<int> root = std::nullopt);

} // namespace tifs
