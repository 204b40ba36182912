#ifndef RBT_GRAPH_HPP
#define RBT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rbt {

// Edge colors are 0 = red, 1 = green, 2 = blue. This assignment is fixed:
// exact-mode canonical keys depend on it.
inline constexpr int kNumColors = 3;

/// A 3-edge-coloring of the complete graph K_n, n >= 1. Colors are stored
/// in a flat upper-triangular vector: edge {i,j} with i<j sits at index
/// i*n - i*(i+1)/2 + j - i - 1.
struct ColoredGraph {
  int n = 1;
  std::vector<uint8_t> colors;

  ColoredGraph() = default;
  explicit ColoredGraph(int n_) : n(n_), colors(static_cast<size_t>(n_) * (n_ - 1) / 2, 0) {}

  size_t edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + j - i - 1;
  }
  int color(int i, int j) const { return colors[edge_index(i, j)]; }
  void set_color(int i, int j, int c) { colors[edge_index(i, j)] = static_cast<uint8_t>(c); }
  size_t edge_count() const { return colors.size(); }

  bool operator==(const ColoredGraph& o) const { return n == o.n && colors == o.colors; }
};

/// "n:c1c2..." text form; for n = 1 the color part is empty ("1:").
std::string encode_graph(const ColoredGraph& g);

/// Inverse of encode_graph. Throws std::invalid_argument on malformed text,
/// wrong length, or digits outside {0,1,2}.
ColoredGraph decode_graph(const std::string& text);

/// Subgraph induced by the vertex set `vs` (ascending order of vs gives the
/// vertex order of the result). Throws on empty or out-of-range sets.
ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vs);

/// Relabels vertices: vertex v of the result is perm[v] of g.
ColoredGraph apply_vertex_perm(const ColoredGraph& g, const std::vector<int>& perm);

/// Recolors every edge through the color permutation cperm[0..2].
ColoredGraph apply_color_perm(const ColoredGraph& g, const std::array<int, 3>& cperm);

inline bool is_rainbow(const ColoredGraph& g, int a, int b, int c) {
  int x = g.color(a, b), y = g.color(a, c), z = g.color(b, c);
  return x != y && x != z && y != z;
}

inline bool is_monochromatic(const ColoredGraph& g, int a, int b, int c) {
  return g.color(a, b) == g.color(a, c) && g.color(a, c) == g.color(b, c);
}

ColoredGraph monochromatic(int n, int color = 0);
ColoredGraph random_graph(int n, std::mt19937& rng);

/// The properly 3-edge-colored K4 (every triangle rainbow); canonical form "4:012210".
ColoredGraph rb1111();

/// All six permutations of {0,1,2}.
const std::vector<std::array<int, 3>>& color_perms();

/// Iterates all t-subsets of {0..n-1} in lexicographic order: fn(vs).
template <typename F>
void for_each_subset(int n, int t, F&& fn) {
  std::vector<int> vs(t);
  for (int i = 0; i < t; ++i) vs[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(vs));
    int i = t - 1;
    while (i >= 0 && vs[i] == n - t + i) --i;
    if (i < 0) break;
    ++vs[i];
    for (int j = i + 1; j < t; ++j) vs[j] = vs[j - 1] + 1;
  }
}

/// Lexicographic unranking: the r-th t-subset of {0..n-1} (r zero-based).
std::vector<int> unrank_subset(int n, int t, unsigned long long r);

}  // namespace rbt

#endif
