#pragma once

#include <string>
#include <vector>

#include "braidalex/errors.hpp"

// Braid words, their strand permutations, and the undercrossing-label
// sequence. A word lists its crossings top-down: letters[0] is the topmost
// crossing of the diagram. Strands are numbered by their starting position
// at the bottom, so the strand at bottom position j carries variable t_j.

namespace braidalex {

struct BraidLetter {
    int index;  // generator index i, 1 <= i <= strands-1
    int sign;   // +1 or -1
    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    std::size_t length() const { return letters.size(); }
    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

// Parses whitespace-separated signed generator indices: k > 0 is sigma_k,
// k < 0 is sigma_|k| inverse, text order is top to bottom. Empty text gives
// the empty word.
BraidWord parse_word(const std::string& text, int strands);

struct Permutation {
    // images[j-1] = pi(j), the top position reached by the strand starting
    // at bottom position j. Always a bijection on {1..n}.
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int j) const { return images[static_cast<std::size_t>(j) - 1]; }

    static Permutation identity(int n);
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
};

// Applies q first, then p (bottom-to-top stacking order).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation permutation_of(const BraidWord& w);

// Disjoint cycles, each starting at its minimum element, sorted by minimum.
// Fixed points appear as 1-cycles; the cycle count is the number of link
// components of the closure.
std::vector<std::vector<int>> components_of(const Permutation& p);

// labels[r-1] = a_r, the bottom starting position of the strand that goes
// under at crossing r, counted from the top of the braid.
using LabelSequence = std::vector<int>;

LabelSequence undercrossing_labels(const BraidWord& w);

}  // namespace braidalex
