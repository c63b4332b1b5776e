#include "tifs/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace tifs {

SymbolicTiling omega(const System& system, int level, std::optional<int> root) {
    if (level < 0) throw std::invalid_argument("omega: level must be >= 0");

    SymbolicTiling tiling;
    tiling.level = level;
    tiling.root = root;

    Word current(Orientation::Forward);
    // Depth-first in ascending symbol order emits words already sorted.
    auto extend = [&](auto&& self, int vertex, int xi_so_far) -> void {
        for (int e : system.edges_from(vertex)) {
            int xi_next = xi_so_far + system.exponent_of(e);
            current.push_back(e);
            if (xi_next > level)
                tiling.words.push_back(current);
            else
                self(self, system.head(e), xi_next);
            current = current.prefix(current.length() - 1);
        }
    };

    if (root) {
        extend(extend, *root, 0);
    } else {
        for (int e = 1; e <= system.map_count(); ++e) {
            current.push_back(e);
            if (system.exponent_of(e) > level)
                tiling.words.push_back(current);
            else
                extend(extend, system.head(e), system.exponent_of(e));
            current = current.prefix(0);
        }
    }
    return tiling;
}

SymbolicTiling split(const System& system, const SymbolicTiling& tiling) {
    SymbolicTiling next;
    next.level = tiling.level + 1;
    next.root = tiling.root;
    next.words.reserve(tiling.words.size());
    for (const Word& word : tiling.words) {
        int value = system.xi(word);
        if (value >= tiling.level + 2) {
            next.words.push_back(word);
        } else {
            // value == level + 1: the word splits into its children.
            for (int e : system.edges_from(*system.end_vertex(word)))
                next.words.push_back(word.appended(e));
        }
    }
    // Splitting preserves lexicographic order since no word of a symbolic
    // tiling is a prefix of another.
    return next;
}

Word amalgamate(const System& system, const Word& word, int level) {
    if (word.orientation() != Orientation::Forward)
        throw std::invalid_argument("amalgamate: forward words only");
    if (system.xi(word) <= level)
        throw Error(ErrorKind::NoPrefixAtLevel,
                    "xi(" + word.str() + ") = " + std::to_string(system.xi(word)) +
                        " <= " + std::to_string(level));
    int acc = 0;
    for (int i = 0; i < word.length(); ++i) {
        acc += system.exponent_of(word.symbol(i));
        if (acc > level) return word.prefix(i + 1);
    }
    throw std::logic_error("amalgamate: unreachable");
}

std::map<Word, std::vector<Word>> partition(const System& system, int m, int k, std::optional<int> root) {
    if (m < k || k < 0) throw std::invalid_argument("partition: need m >= k >= 0");
    std::map<Word, std::vector<Word>> blocks;
    for (const Word& word : omega(system, k, root).words) blocks[word];
    for (Word& word : omega(system, m, root).words) {
        Word key = amalgamate(system, word, k);
        blocks[key].push_back(std::move(word));
    }
    return blocks;
}

PredecessorDecomposition predecessor_decomposition(const System& system, int k, int l,
                                                   std::optional<int> root) {
    if (l < 0) throw std::invalid_argument("predecessor_decomposition: l must be >= 0");
    if (k < system.a_max() + l)
        throw Error(ErrorKind::LevelTooSmall, "need level >= a_max + l = " +
                                                  std::to_string(system.a_max() + l) + ", got " +
                                                  std::to_string(k));
    PredecessorDecomposition decomposition;
    decomposition.level = k;
    for (const Word& prefix : omega(system, l, root).words) {
        SymbolicTiling rest = omega(system, k - system.xi(prefix), *system.end_vertex(prefix));
        decomposition.blocks.emplace_back(prefix, std::move(rest));
    }
    return decomposition;
}

} // namespace tifs
