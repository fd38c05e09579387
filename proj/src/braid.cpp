#include "braidalex/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

namespace braidalex {

BraidWord parse_word(const std::string& text, int strands) {
    if (strands < 1) throw IndexOutOfRange("parse_word: strand count must be at least 1");
    BraidWord w;
    w.strands = strands;
    std::istringstream in(text);
    std::string tok;
    int pos = 0;
    while (in >> tok) {
        ++pos;
        int k = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("token " + std::to_string(pos) + " ('" + tok +
                             "') is not an integer");
        int idx = std::abs(k);
        if (idx == 0 || idx > strands - 1)
            throw IndexOutOfRange("token " + std::to_string(pos) + " ('" + tok +
                                  "'): generator index must be in [1, " +
                                  std::to_string(strands - 1) + "] for " +
                                  std::to_string(strands) + " strands");
        w.letters.push_back({idx, k > 0 ? +1 : -1});
    }
    return w;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation out;
    out.images.resize(q.images.size());
    for (int j = 1; j <= q.size(); ++j) out.images[j - 1] = p(q(j));
    return out;
}

namespace {

// Sweeps the diagram bottom to top. strand_at[p-1] is the strand currently
// occupying position p; crossing r transposes positions i, i+1. The visitor
// sees each crossing before the transposition, in word order l..1.
template <typename Visit>
std::vector<int> sweep(const BraidWord& w, Visit&& visit) {
    std::vector<int> strand_at(static_cast<std::size_t>(w.strands));
    std::iota(strand_at.begin(), strand_at.end(), 1);
    for (std::size_t r = w.length(); r > 0; --r) {
        const BraidLetter& letter = w.letters[r - 1];
        if (letter.index < 1 || letter.index > w.strands - 1)
            throw IndexOutOfRange("braid word: generator index " +
                                  std::to_string(letter.index) + " out of range for " +
                                  std::to_string(w.strands) + " strands");
        visit(r, letter, strand_at);
        std::swap(strand_at[letter.index - 1], strand_at[letter.index]);
    }
    return strand_at;
}

}  // namespace

Permutation permutation_of(const BraidWord& w) {
    std::vector<int> top = sweep(w, [](std::size_t, const BraidLetter&, const std::vector<int>&) {});
    Permutation p;
    p.images.resize(top.size());
    for (int position = 1; position <= w.strands; ++position)
        p.images[static_cast<std::size_t>(top[position - 1]) - 1] = position;
    return p;
}

std::vector<std::vector<int>> components_of(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> cycles;
    // ascending start points: the first unseen element of a cycle is its minimum
    for (int j = 1; j <= n; ++j) {
        if (seen[j]) continue;
        std::vector<int> cycle;
        int cur = j;
        do {
            seen[cur] = true;
            cycle.push_back(cur);
            cur = p(cur);
        } while (cur != j);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

LabelSequence undercrossing_labels(const BraidWord& w) {
    LabelSequence labels(w.length());
    sweep(w, [&](std::size_t r, const BraidLetter& letter, const std::vector<int>& strand_at) {
        // positive crossing: the strand entering at position i+1 goes under;
        // negative crossing: the one entering at position i
        int under_pos = letter.sign > 0 ? letter.index + 1 : letter.index;
        labels[r - 1] = strand_at[under_pos - 1];
    });
    return labels;
}

}  // namespace braidalex
