#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace tifs {

enum class Orientation : std::uint8_t {
    Forward,  // edge path in the graph, head(w_i) = tail(w_{i+1})
    Reversed, // edge path in the reversed graph, tail(w_i) = head(w_{i+1})
};

/// A finite edge word over the symbols 1..N. Symbols are stored as raw
/// bytes so that words up to 15 symbols need no heap allocation and
/// lexicographic order is plain byte order.
class Word {
public:
    Word() = default;
    explicit Word(Orientation orientation) : orientation_(orientation) {}
    Word(std::initializer_list<int> symbols, Orientation orientation);
    Word(const std::vector<int>& symbols, Orientation orientation);

    static Word forward(std::initializer_list<int> symbols) { return Word(symbols, Orientation::Forward); }
    static Word reversed(std::initializer_list<int> symbols) { return Word(symbols, Orientation::Reversed); }

    /// Parses "112" (single digit symbols) or "10,2,3" (comma separated).
    /// An empty string is the empty word.
    static Word parse(std::string_view text, Orientation orientation);

    int length() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }

    int symbol(int i) const { return static_cast<unsigned char>(symbols_[static_cast<std::size_t>(i)]); }
    int front() const { return symbol(0); }
    int back() const { return symbol(length() - 1); }

    Orientation orientation() const { return orientation_; }

    Word prefix(int k) const;
    /// Drops the first p symbols (the shift map applied p times).
    Word dropped(int p) const;
    /// Same symbols in reverse order with the opposite orientation tag.
    Word transposed() const;

    void push_back(int symbol);
    Word appended(int symbol) const;
    Word concatenated(const Word& tail) const;

    std::vector<int> symbols() const;
    const std::string& raw() const { return symbols_; }

    /// "112" for short symbol values, "10.2.3" when a symbol exceeds 9,
    /// and the empty-set sign for the empty word.
    std::string str() const;

    bool operator==(const Word& other) const {
        return orientation_ == other.orientation_ && symbols_ == other.symbols_;
    }
    bool operator!=(const Word& other) const { return !(*this == other); }
    bool operator<(const Word& other) const {
        if (symbols_ != other.symbols_) return symbols_ < other.symbols_;
        return orientation_ < other.orientation_;
    }

private:
    std::string symbols_;
    Orientation orientation_ = Orientation::Forward;
};

/// S^steps: drops leading symbols; shifting past the end yields the empty word.
Word shift(const Word& word, int steps = 1);

/// Diagnostic word metric: 2^-(length of the longest common prefix), zero
/// for equal words.
double word_distance(const Word& a, const Word& b);

} // namespace tifs
