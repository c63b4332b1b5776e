#pragma once

#include <vector>

#include "tifs/fixtures.hpp"
#include "tifs/geometry.hpp"
#include "tifs/symbolic.hpp"
#include "tifs/system.hpp"

namespace tifs::testing {

inline Word fw(std::initializer_list<int> symbols) { return Word(symbols, Orientation::Forward); }
inline Word rw(std::initializer_list<int> symbols) { return Word(symbols, Orientation::Reversed); }

inline std::vector<std::string> word_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(w.str());
    return out;
}

/// Random admissible reversed word of the given length, deterministic in the
/// generator state.
inline Word random_reversed_word(const System& system, int length, SplitMix64& rng) {
    Word word(Orientation::Reversed);
    if (length == 0) return word;
    int first = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(system.map_count())));
    word.push_back(first);
    int vertex = system.tail(first);
    for (int i = 1; i < length; ++i) {
        const std::vector<int>& choices = system.edges_into(vertex);
        int e = choices[static_cast<std::size_t>(rng.below(choices.size()))];
        word.push_back(e);
        vertex = system.tail(e);
    }
    return word;
}

/// All fixtures that exercise the general code paths.
inline std::vector<const System*> all_fixtures() {
    return {&fixtures::bin(), &fixtures::fib(), &fixtures::sier(), &fixtures::gd2()};
}

inline std::vector<const System*> fixtures_1d() {
    return {&fixtures::bin(), &fixtures::fib(), &fixtures::gd2()};
}

} // namespace tifs::testing
