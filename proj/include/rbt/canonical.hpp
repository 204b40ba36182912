#ifndef RBT_CANONICAL_HPP
#define RBT_CANONICAL_HPP

#include <string>

#include "rbt/graph.hpp"

namespace rbt {

enum class IsoMode { Exact, ColorBlind };

inline const char* mode_name(IsoMode m) { return m == IsoMode::Exact ? "exact" : "colorblind"; }
IsoMode parse_mode(const std::string& s);

/// Lexicographically minimal color string over all vertex permutations
/// (Exact) or vertex permutations composed with the 6 color permutations
/// (ColorBlind). Brute force; the permutation search is the reference
/// algorithm and is only supported for n <= 10.
std::string canonical_colors(const ColoredGraph& g, IsoMode mode);

/// Full key "n:<canonical colors>".
std::string canonical_key(const ColoredGraph& g, IsoMode mode);

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b, IsoMode mode);

/// Minimal color string over permutations that fix vertices 0..roots-1
/// pointwise, composed (in ColorBlind mode) with global color permutations.
/// This is the flag canonical form with the root pinned first.
std::string canonical_colors_rooted(const ColoredGraph& g, int roots, IsoMode mode);

inline constexpr int kMaxCanonicalN = 10;

}  // namespace rbt

#endif
