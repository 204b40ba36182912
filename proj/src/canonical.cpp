#include "rbt/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rbt {

IsoMode parse_mode(const std::string& s) {
  if (s == "exact") return IsoMode::Exact;
  if (s == "colorblind") return IsoMode::ColorBlind;
  throw std::invalid_argument("unknown mode '" + s + "' (want exact|colorblind)");
}

namespace {

// Compares the candidate string under (perm, cperm) against `best` edge by
// edge, overwriting `best` if smaller. Early exit on the first larger digit.
void try_improve(const ColoredGraph& g, const std::vector<int>& perm,
                 const std::array<int, 3>& cperm, std::string& best) {
  const int n = g.n;
  size_t idx = 0;
  bool smaller = false;
  for (int i = 0; i < n && !smaller; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      char c = static_cast<char>('0' + cperm[g.color(perm[i], perm[j])]);
      if (c > best[idx]) return;
      if (c < best[idx]) {
        smaller = true;
        // fill the rest from scratch
        size_t k = idx;
        for (int a = i; a < n; ++a)
          for (int b = (a == i ? j : a + 1); b < n; ++b, ++k)
            best[k] = static_cast<char>('0' + cperm[g.color(perm[a], perm[b])]);
        return;
      }
    }
  }
}

std::string minimize_over_perms(const ColoredGraph& g, int fixed_prefix, IsoMode mode) {
  const int n = g.n;
  std::string best(g.edge_count(), '3');  // above any real digit
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& cperms = color_perms();
  const size_t ncp = mode == IsoMode::ColorBlind ? cperms.size() : 1;
  do {
    for (size_t c = 0; c < ncp; ++c) try_improve(g, perm, cperms[c], best);
  } while (std::next_permutation(perm.begin() + fixed_prefix, perm.end()));
  return best;
}

}  // namespace

std::string canonical_colors(const ColoredGraph& g, IsoMode mode) {
  if (g.n > kMaxCanonicalN)
    throw std::invalid_argument("canonical form: n = " + std::to_string(g.n) +
                                " exceeds supported bound " + std::to_string(kMaxCanonicalN));
  if (g.n == 1) return "";
  return minimize_over_perms(g, 0, mode);
}

std::string canonical_key(const ColoredGraph& g, IsoMode mode) {
  return std::to_string(g.n) + ":" + canonical_colors(g, mode);
}

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b, IsoMode mode) {
  if (a.n != b.n) return false;
  return canonical_colors(a, mode) == canonical_colors(b, mode);
}

std::string canonical_colors_rooted(const ColoredGraph& g, int roots, IsoMode mode) {
  if (g.n > kMaxCanonicalN)
    throw std::invalid_argument("canonical form: n exceeds supported bound");
  if (roots < 0 || roots > g.n) throw std::invalid_argument("bad root count");
  if (g.n == 1) return "";
  return minimize_over_perms(g, roots, mode);
}

}  // namespace rbt
