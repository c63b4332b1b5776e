#include "tifs/word.hpp"

#include <cmath>
#include <stdexcept>

namespace tifs {

namespace {

void check_symbol(int symbol) {
    if (symbol < 1 || symbol > 255)
        throw std::invalid_argument("word symbol out of range: " + std::to_string(symbol));
}

} // namespace

Word::Word(std::initializer_list<int> symbols, Orientation orientation) : orientation_(orientation) {
    symbols_.reserve(symbols.size());
    for (int s : symbols) {
        check_symbol(s);
        symbols_.push_back(static_cast<char>(s));
    }
}

Word::Word(const std::vector<int>& symbols, Orientation orientation) : orientation_(orientation) {
    symbols_.reserve(symbols.size());
    for (int s : symbols) {
        check_symbol(s);
        symbols_.push_back(static_cast<char>(s));
    }
}

Word Word::parse(std::string_view text, Orientation orientation) {
    Word word(orientation);
    if (text.empty()) return word;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string token(text.substr(pos, next == std::string_view::npos ? next : next - pos));
            if (token.empty()) throw std::invalid_argument("empty symbol in word: '" + std::string(text) + "'");
            word.push_back(std::stoi(token));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return word;
    }
    for (char c : text) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("word symbols must be digits 1-9 or comma separated: '" + std::string(text) + "'");
        word.push_back(c - '0');
    }
    return word;
}

Word Word::prefix(int k) const {
    Word result(orientation_);
    if (k > length()) k = length();
    if (k > 0) result.symbols_ = symbols_.substr(0, static_cast<std::size_t>(k));
    return result;
}

Word Word::dropped(int p) const {
    Word result(orientation_);
    if (p < 0) p = 0;
    if (p < length()) result.symbols_ = symbols_.substr(static_cast<std::size_t>(p));
    return result;
}

Word Word::transposed() const {
    Word result(orientation_ == Orientation::Forward ? Orientation::Reversed : Orientation::Forward);
    result.symbols_.assign(symbols_.rbegin(), symbols_.rend());
    return result;
}

void Word::push_back(int symbol) {
    check_symbol(symbol);
    symbols_.push_back(static_cast<char>(symbol));
}

Word Word::appended(int symbol) const {
    Word result(*this);
    result.push_back(symbol);
    return result;
}

Word Word::concatenated(const Word& tail) const {
    Word result(*this);
    result.symbols_ += tail.symbols_;
    return result;
}

std::vector<int> Word::symbols() const {
    std::vector<int> out;
    out.reserve(symbols_.size());
    for (char c : symbols_) out.push_back(static_cast<unsigned char>(c));
    return out;
}

std::string Word::str() const {
    if (symbols_.empty()) return "∅";
    bool wide = false;
    for (char c : symbols_)
        if (static_cast<unsigned char>(c) > 9) wide = true;
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (wide && i > 0) out += '.';
        out += std::to_string(static_cast<unsigned char>(symbols_[i]));
    }
    return out;
}

Word shift(const Word& word, int steps) {
    return word.dropped(steps);
}

double word_distance(const Word& a, const Word& b) {
    if (a == b) return 0.0;
    int common = 0;
    while (common < a.length() && common < b.length() && a.symbol(common) == b.symbol(common)) ++common;
    return std::pow(2.0, -common);
}

} // namespace tifs
