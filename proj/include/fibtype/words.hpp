#pragma once

#include "fibtype/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace fibtype {

/// One letter x_g^{±1} of the free group F_n.
struct Letter {
    int gen;   // 0 <= gen < n
    int sign;  // +1 or -1

    friend auto operator<=>(const Letter&, const Letter&) = default;
    Letter inverse() const { return {gen, -sign}; }
};

/// A word in F_n, stored as an explicit letter sequence.
class Word {
  public:
    Word() = default;
    Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
        if (n_ < 1) throw std::invalid_argument("Word: rank must be positive");
        for (auto& l : letters_) {
            l.gen = mod(l.gen, n_);
            if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("Word: sign must be +-1");
        }
    }

    int rank() const { return n_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& operator[](size_t i) const { return letters_[i]; }

    friend bool operator==(const Word&, const Word&) = default;

    Word inverse() const {
        std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
        for (auto& l : inv) l.sign = -l.sign;
        return Word(n_, std::move(inv));
    }

    Word rotated(size_t r) const {
        if (letters_.empty()) return *this;
        r %= letters_.size();
        std::vector<Letter> out(letters_.begin() + r, letters_.end());
        out.insert(out.end(), letters_.begin(), letters_.begin() + r);
        return Word(n_, std::move(out));
    }

    bool is_freely_reduced() const {
        for (size_t i = 0; i + 1 < letters_.size(); ++i)
            if (letters_[i] == letters_[i + 1].inverse()) return false;
        return true;
    }

    bool is_cyclically_reduced() const {
        if (!is_freely_reduced()) return false;
        if (letters_.size() >= 2 && letters_.front() == letters_.back().inverse()) return false;
        return true;
    }

    bool is_rotation_of(const Word& other) const {
        if (n_ != other.n_ || size() != other.size()) return false;
        for (size_t r = 0; r < std::max<size_t>(size(), 1); ++r)
            if (rotated(r) == other) return true;
        return false;
    }

  private:
    int n_ = 1;
    std::vector<Letter> letters_;
};

/// x_0 x_m x_k^{-1}, the defining word of P_n(m,k).
inline Word fib_word(int n, int m, int k) {
    if (n < 2) throw std::invalid_argument("fib_word: n must be >= 2");
    if (m < 0 || m >= n || k < 0 || k >= n)
        throw std::invalid_argument("fib_word: m,k must lie in [0,n)");
    return Word(n, {{0, +1}, {m, +1}, {k, -1}});
}

/// Apply theta^j: every generator index shifted by j mod n.
inline Word shift(const Word& w, int j) {
    std::vector<Letter> out = w.letters();
    for (auto& l : out) l.gen = mod(l.gen + j, w.rank());
    return Word(w.rank(), std::move(out));
}

/// Free reduction; with cyclic=true also cancel across the wrap-around.
inline Word reduce(const Word& w, bool cyclic = false) {
    std::vector<Letter> out;
    for (const auto& l : w.letters()) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    if (cyclic) {
        size_t lo = 0, hi = out.size();
        while (hi - lo >= 2 && out[lo] == out[hi - 1].inverse()) { ++lo; --hi; }
        out = std::vector<Letter>(out.begin() + lo, out.begin() + hi);
    }
    return Word(w.rank(), std::move(out));
}

/// P_n(w): relators w, theta(w), ..., theta^{n-1}(w).
struct CyclicPresentation {
    int n;
    Word w;

    CyclicPresentation(int n_, Word word) : n(n_), w(std::move(word)) {
        if (n < 2) throw std::invalid_argument("CyclicPresentation: n must be >= 2");
        if (w.rank() != n) throw std::invalid_argument("CyclicPresentation: word rank != n");
        if (!w.is_cyclically_reduced())
            throw std::invalid_argument("CyclicPresentation: word must be cyclically reduced");
    }

    std::vector<Word> relators() const {
        std::vector<Word> rs;
        rs.reserve(n);
        for (int i = 0; i < n; ++i) rs.push_back(shift(w, i));
        return rs;
    }
};

inline CyclicPresentation fib_presentation(int n, int m, int k) {
    return CyclicPresentation(n, fib_word(n, m, k));
}

// Word syntax: whitespace-separated tokens `xI` / `XI` (capital = inverse).

inline std::string to_string(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << (w[i].sign > 0 ? 'x' : 'X') << w[i].gen;
    }
    return os.str();
}

inline Word parse_word(const std::string& text, int n) {
    std::istringstream is(text);
    std::vector<Letter> letters;
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
            throw std::invalid_argument("parse_word: bad token '" + tok + "'");
        int g;
        try {
            size_t used = 0;
            g = std::stoi(tok.substr(1), &used);
            if (used + 1 != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("parse_word: bad token '" + tok + "'");
        }
        if (g < 0 || g >= n) throw std::invalid_argument("parse_word: generator out of range");
        letters.push_back({g, tok[0] == 'x' ? +1 : -1});
    }
    return Word(n, std::move(letters));
}

}  // namespace fibtype
