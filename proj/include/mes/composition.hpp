#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mes {

// Index (n1,...,nr) of a multiple zeta value, q-series or Eisenstein series.
// Every part is >= 1; the empty index (r = 0) is allowed.  The increasing
// summation convention m1 < ... < mr is used throughout, so an index is
// admissible when its *last* part is >= 2.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) {}
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    int weight() const
    {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int depth() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool admissible() const { return parts.empty() || parts.back() >= 2; }
    bool all_parts_at_least(int m) const
    {
        for (int p : parts)
            if (p < m) return false;
        return true;
    }

    bool operator==(const Composition&) const = default;
};

// Canonical ordering: weight, then depth, then lexicographic on parts.
std::strong_ordering operator<=>(const Composition& a, const Composition& b);

std::string to_string(const Composition& c);
Composition parse_composition(const std::string& text); // "2,3" or "" for the empty index

// Word over the alphabet {0,1}.
using BinaryWord = std::vector<std::uint8_t>;

std::string to_string(const BinaryWord& w);

// (n1,...,nr) -> 1 0^{n1-1} ... 1 0^{nr-1}
BinaryWord composition_to_word(const Composition& c);

// Inverse of composition_to_word; throws std::invalid_argument on a word
// starting with 0 (such words are not monomials of the 1-generated algebra).
Composition word_to_composition(const BinaryWord& w);

// Word over the alphabet {x,y} marking the split of a lattice chain (or the
// matching marked-subsequence class of the coproduct).
using XYWord = std::vector<char>;

XYWord parse_xyword(const std::string& text);
std::string to_string(const XYWord& w);

// Positions (1-based) of the letters y in w.
std::vector<int> y_positions(const XYWord& w);

// All compositions of given weight (ordered canonically); optional minimum part.
std::vector<Composition> compositions_of_weight(int weight, int min_part = 1);

// All admissible compositions of given weight.
std::vector<Composition> admissible_compositions_of_weight(int weight);

} // namespace mes
