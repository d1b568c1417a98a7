#pragma once

#include <string>
#include <string_view>

#include "qd/sphere_point.hpp"

namespace qd {

/// A word over {a, b, B}: a is z -> -1/z, b is z -> z + 2, B its inverse.
/// Stored freely reduced (no aa, bB, Bb).
class Word {
public:
    Word() = default;
    explicit Word(std::string_view letters) {
        for (char c : letters) push_back(c);
    }

    static bool is_letter(char c) { return c == 'a' || c == 'b' || c == 'B'; }
    static char inverse_letter(char c) { return c == 'a' ? 'a' : (c == 'b' ? 'B' : 'b'); }

    /// True if `letters` is over the alphabet and already freely reduced.
    static bool is_reduced(std::string_view letters) {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (!is_letter(letters[i])) return false;
            if (i > 0 && letters[i] == inverse_letter(letters[i - 1])) return false;
        }
        return true;
    }

    void push_back(char c) {
        if (!is_letter(c)) throw Error(std::string("Word: invalid letter '") + c + "'");
        if (!s_.empty() && s_.back() == inverse_letter(c))
            s_.pop_back();
        else
            s_.push_back(c);
    }

    Word inverse() const {
        Word w;
        for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.push_back(inverse_letter(*it));
        return w;
    }

    friend Word operator*(const Word& x, const Word& y) {
        Word w = x;
        for (char c : y.s_) w.push_back(c);
        return w;
    }
    friend bool operator==(const Word&, const Word&) = default;

    const std::string& str() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    char operator[](std::size_t i) const { return s_[i]; }

private:
    std::string s_;
};

}  // namespace qd
