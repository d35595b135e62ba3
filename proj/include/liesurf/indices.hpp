#pragma once

#include <array>
#include <string>

#include "liesurf/errors.hpp"

namespace liesurf {

/// Coframe index alphabet in its canonical order: 1, 2, 1b, 2b
/// (phi^1, phi^2, conjugates). Internally 0..3.
constexpr int kAlphabet = 4;

constexpr int bar(int i) { return i < 2 ? i + 2 : i - 2; }
constexpr bool is_barred(int i) { return i >= 2; }

inline std::string index_name(int i) {
    static const std::array<std::string, 4> names{"1", "2", "1b", "2b"};
    return names.at(static_cast<size_t>(i));
}

inline int index_from_name(const std::string& s) {
    if (s == "1") return 0;
    if (s == "2") return 1;
    if (s == "1b") return 2;
    if (s == "2b") return 3;
    throw ParseError("index: expected one of 1, 2, 1b, 2b, got \"" + s + "\"");
}

/// Monomials of the exterior algebra are subsets of the alphabet,
/// encoded as 4-bit masks; bit order equals the canonical index order,
/// so a mask spells the canonically sorted monomial.
constexpr int kMonomials = 16;

constexpr int mono_degree(int m) { return __builtin_popcount(static_cast<unsigned>(m)); }
constexpr int mono_p(int m) { return __builtin_popcount(static_cast<unsigned>(m & 0b0011)); }
constexpr int mono_q(int m) { return __builtin_popcount(static_cast<unsigned>(m & 0b1100)); }

/// Sign of phi^A wedge phi^B for disjoint masks: parity of pairs (a in A, b in B)
/// out of order. Returns 0 when the masks overlap.
inline int wedge_sign(int a, int b) {
    if (a & b) return 0;
    int inv = 0;
    for (int i = 0; i < kAlphabet; ++i) {
        if (!(a & (1 << i))) continue;
        for (int j = 0; j < i; ++j) {
            if (b & (1 << j)) ++inv;
        }
    }
    return (inv & 1) ? -1 : 1;
}

/// Barred monomial mask and the sign of re-sorting the barred factors.
inline int bar_mask(int m) { return ((m & 0b0011) << 2) | ((m & 0b1100) >> 2); }

inline int bar_sign(int m) {
    // factors of m in canonical order map to their bars; count inversions
    // of the resulting sequence under the canonical order
    int seq[4];
    int n = 0;
    for (int i = 0; i < kAlphabet; ++i) {
        if (m & (1 << i)) seq[n++] = bar(i);
    }
    int inv = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (seq[i] > seq[j]) ++inv;
        }
    }
    return (inv & 1) ? -1 : 1;
}

/// Name of a monomial mask; the empty monomial (the constant) is "".
inline std::string mono_name(int m) {
    std::string s;
    for (int i = 0; i < kAlphabet; ++i) {
        if (m & (1 << i)) s += index_name(i);
    }
    return s;
}

}  // namespace liesurf
