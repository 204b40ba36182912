#include "rbt/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rbt/rational.hpp"

namespace rbt {

std::string encode_graph(const ColoredGraph& g) {
  std::string s = std::to_string(g.n);
  s += ':';
  for (uint8_t c : g.colors) s += static_cast<char>('0' + c);
  return s;
}

ColoredGraph decode_graph(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("graph text missing ':': " + text);
  int n;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad vertex count in graph text: " + text);
  }
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1: " + text);
  size_t m = static_cast<size_t>(n) * (n - 1) / 2;
  if (text.size() - colon - 1 != m)
    throw std::invalid_argument("color string has wrong length (want " + std::to_string(m) +
                                "): " + text);
  ColoredGraph g(n);
  for (size_t i = 0; i < m; ++i) {
    char c = text[colon + 1 + i];
    if (c < '0' || c > '2') throw std::invalid_argument("color digit outside {0,1,2}: " + text);
    g.colors[i] = static_cast<uint8_t>(c - '0');
  }
  return g;
}

ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vs) {
  if (vs.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> u(vs);
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end())
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  if (u.front() < 0 || u.back() >= g.n)
    throw std::invalid_argument("induced_subgraph: vertex out of range");
  ColoredGraph h(static_cast<int>(u.size()));
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j)
      h.set_color(static_cast<int>(i), static_cast<int>(j), g.color(u[i], u[j]));
  return h;
}

ColoredGraph apply_vertex_perm(const ColoredGraph& g, const std::vector<int>& perm) {
  ColoredGraph h(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) h.set_color(i, j, g.color(perm[i], perm[j]));
  return h;
}

ColoredGraph apply_color_perm(const ColoredGraph& g, const std::array<int, 3>& cperm) {
  ColoredGraph h = g;
  for (auto& c : h.colors) c = static_cast<uint8_t>(cperm[c]);
  return h;
}

ColoredGraph monochromatic(int n, int color) {
  ColoredGraph g(n);
  std::fill(g.colors.begin(), g.colors.end(), static_cast<uint8_t>(color));
  return g;
}

ColoredGraph random_graph(int n, std::mt19937& rng) {
  ColoredGraph g(n);
  std::uniform_int_distribution<int> d(0, 2);
  for (auto& c : g.colors) c = static_cast<uint8_t>(d(rng));
  return g;
}

ColoredGraph rb1111() { return decode_graph("4:012210"); }

const std::vector<std::array<int, 3>>& color_perms() {
  static const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return perms;
}

std::vector<int> unrank_subset(int n, int t, unsigned long long r) {
  std::vector<int> vs(t);
  Int rem = r;
  int v = 0;
  for (int i = 0; i < t; ++i) {
    while (true) {
      Int c = binomial(n - v - 1, t - i - 1);
      if (rem < c) break;
      rem -= c;
      ++v;
    }
    vs[i] = v++;
  }
  return vs;
}

}  // namespace rbt
