#include "rbt/densities.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rbt {

int expression_arity(ExpressionName e) {
  switch (e) {
    case ExpressionName::RBT:
    case ExpressionName::TCT:
    case ExpressionName::MONOT:
      return 3;
    case ExpressionName::RB1111:
      return 4;
    case ExpressionName::RB2111:
    case ExpressionName::RB1111PLUS:
      return 5;
    case ExpressionName::RB3111:
    case ExpressionName::RB2211:
      return 6;
  }
  return 0;
}

const char* expression_name(ExpressionName e) {
  switch (e) {
    case ExpressionName::RBT: return "RBT";
    case ExpressionName::TCT: return "TCT";
    case ExpressionName::MONOT: return "MONOT";
    case ExpressionName::RB1111: return "RB1111";
    case ExpressionName::RB2111: return "RB2111";
    case ExpressionName::RB1111PLUS: return "RB1111PLUS";
    case ExpressionName::RB3111: return "RB3111";
    case ExpressionName::RB2211: return "RB2211";
  }
  return "?";
}

ExpressionName parse_expression(const std::string& s) {
  for (auto e : kAllExpressions)
    if (s == expression_name(e)) return e;
  throw std::invalid_argument("unknown density expression '" + s + "'");
}

namespace {

inline bool rainbow3(const ColoredGraph& g, int a, int b, int c) {
  int x = g.color(a, b), y = g.color(a, c), z = g.color(b, c);
  return x != y && x != z && y != z;
}

inline bool rb1111_quad(const ColoredGraph& g, int a, int b, int c, int d) {
  return rainbow3(g, a, b, c) && rainbow3(g, a, b, d) && rainbow3(g, a, c, d) &&
         rainbow3(g, b, c, d);
}

// Checks one concrete partition for uniform cross colors + proper contraction.
bool partition_is_proper_blowup(const ColoredGraph& g,
                                const std::vector<std::vector<int>>& parts) {
  const int k = static_cast<int>(parts.size());
  ColoredGraph contracted(k);
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      int c = -1;
      for (int u : parts[p])
        for (int v : parts[q]) {
          int cc = g.color(u, v);
          if (c < 0)
            c = cc;
          else if (c != cc)
            return false;
        }
      contracted.set_color(p, q, c);
    }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        if (!rainbow3(contracted, a, b, c)) return false;
  return true;
}

// (3,1,1,1) structure on exactly 6 vertices given as vs.
bool has_3111_structure(const ColoredGraph& g, const int* vs) {
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        std::vector<std::vector<int>> parts{{vs[a], vs[b], vs[c]}};
        for (int v = 0; v < 6; ++v)
          if (v != a && v != b && v != c) parts.push_back({vs[v]});
        if (partition_is_proper_blowup(g, parts)) return true;
      }
  return false;
}

}  // namespace

int count_rb1111_within(const ColoredGraph& g, const int* vs, int k) {
  int cnt = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d)
          if (rb1111_quad(g, vs[a], vs[b], vs[c], vs[d])) ++cnt;
  return cnt;
}

bool matches_expression(ExpressionName e, const ColoredGraph& g, const int* vs) {
  switch (e) {
    case ExpressionName::RBT:
      return rainbow3(g, vs[0], vs[1], vs[2]);
    case ExpressionName::MONOT:
      return g.color(vs[0], vs[1]) == g.color(vs[0], vs[2]) &&
             g.color(vs[0], vs[2]) == g.color(vs[1], vs[2]);
    case ExpressionName::TCT: {
      int x = g.color(vs[0], vs[1]), y = g.color(vs[0], vs[2]), z = g.color(vs[1], vs[2]);
      bool mono = x == y && y == z;
      bool rb = x != y && x != z && y != z;
      return !mono && !rb;
    }
    case ExpressionName::RB1111:
      return rb1111_quad(g, vs[0], vs[1], vs[2], vs[3]);
    case ExpressionName::RB2111:
      return count_rb1111_within(g, vs, 5) == 2;
    case ExpressionName::RB1111PLUS:
      return count_rb1111_within(g, vs, 5) == 1;
    case ExpressionName::RB2211:
      return count_rb1111_within(g, vs, 6) == 4;
    case ExpressionName::RB3111:
      // Exactly three copies is necessary but not sufficient; the census
      // scan shows seven non-blow-up classes with three copies.
      return count_rb1111_within(g, vs, 6) == 3 && has_3111_structure(g, vs);
  }
  return false;
}

bool is_blowup_of_proper_k4(const ColoredGraph& g, const std::vector<int>& sizes) {
  int total = 0;
  for (int s : sizes) total += s;
  if (total != g.n) throw std::invalid_argument("blow-up sizes must sum to v(g)");
  // Assign each vertex a part label respecting the size multiset, trying all
  // set partitions of the right shape. Fine for the small n this is used on.
  std::vector<int> label(g.n, -1);
  std::vector<int> remaining(sizes);
  std::vector<std::vector<int>> parts(sizes.size());
  // recursive backtracking over vertices in order
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == g.n) {
      std::vector<std::vector<int>> nonempty;
      for (auto& p : parts)
        if (!p.empty()) nonempty.push_back(p);
      return partition_is_proper_blowup(g, nonempty);
    }
    for (size_t p = 0; p < parts.size(); ++p) {
      if (remaining[p] == 0) continue;
      // symmetry break: identical empty parts are interchangeable
      if (parts[p].empty()) {
        bool dup = false;
        for (size_t q = 0; q < p; ++q)
          if (parts[q].empty() && sizes[q] == sizes[p]) {
            dup = true;
            break;
          }
        if (dup) continue;
      }
      parts[p].push_back(v);
      --remaining[p];
      if (rec(v + 1)) return true;
      ++remaining[p];
      parts[p].pop_back();
    }
    return false;
  };
  return rec(0);
}

long long count_induced(const ColoredGraph& h, const ColoredGraph& g, IsoMode mode) {
  const int t = h.n;
  if (t > g.n) return 0;
  const std::string want = canonical_colors(h, mode);
  long long cnt = 0;
  for_each_subset(g.n, t, [&](const std::vector<int>& vs) {
    if (canonical_colors(induced_subgraph(g, vs), mode) == want) ++cnt;
  });
  return cnt;
}

Rat density(const ColoredGraph& h, const ColoredGraph& g, IsoMode mode) {
  if (h.n > g.n) return Rat(0);
  return Rat(count_induced(h, g, mode), binomial(g.n, h.n));
}

DensityVector density_profile(const ColoredGraph& g, int level, IsoMode mode) {
  if (level > g.n) throw std::invalid_argument("density_profile: level exceeds v(g)");
  if (g.n > 12) throw std::invalid_argument("density_profile: v(g) > 12 unsupported");
  const Census& c = census(level, mode);
  const auto& ids = census_ids(level, mode);
  std::vector<long long> counts(c.members.size(), 0);
  for_each_subset(g.n, level, [&](const std::vector<int>& vs) {
    auto it = ids.find(canonical_key(induced_subgraph(g, vs), mode));
    if (it == ids.end()) throw std::logic_error("density_profile: subgraph missing from census");
    ++counts[it->second];
  });
  DensityVector dv{level, mode, {}};
  dv.entries.resize(counts.size());
  Int denom = binomial(g.n, level);
  for (size_t i = 0; i < counts.size(); ++i) dv.entries[i] = Rat(counts[i], denom);
  return dv;
}

namespace {

// Deterministic parallel scan: every t-subset of {0..n-1} is visited once;
// integer contributions are summed (order-independent).
template <typename Fn>
long long scan_subsets(int n, int t, bool parallel, Fn&& counts_subset) {
  unsigned long long total = binomial(n, t).convert_to<unsigned long long>();
  long long sum = 0;
  if (!parallel) {
    std::vector<int> vs = unrank_subset(n, t, 0);
    for (unsigned long long r = 0; r < total; ++r) {
      sum += counts_subset(vs.data());
      // advance to next subset in lexicographic order
      int i = t - 1;
      while (i >= 0 && vs[i] == n - t + i) --i;
      if (i < 0) break;
      ++vs[i];
      for (int j = i + 1; j < t; ++j) vs[j] = vs[j - 1] + 1;
    }
    return sum;
  }
#pragma omp parallel reduction(+ : sum)
  {
    int nth = 1, tid = 0;
#ifdef _OPENMP
    nth = omp_get_num_threads();
    tid = omp_get_thread_num();
#endif
    unsigned long long lo = total * tid / nth, hi = total * (tid + 1) / nth;
    if (lo < hi) {
      std::vector<int> vs = unrank_subset(n, t, lo);
      for (unsigned long long r = lo; r < hi; ++r) {
        sum += counts_subset(vs.data());
        int i = t - 1;
        while (i >= 0 && vs[i] == n - t + i) --i;
        if (i < 0) break;
        ++vs[i];
        for (int j = i + 1; j < t; ++j) vs[j] = vs[j - 1] + 1;
      }
    }
  }
  return sum;
}

long long count_expression_impl(ExpressionName e, const ColoredGraph& g, bool parallel) {
  const int t = expression_arity(e);
  if (t > g.n)
    throw std::invalid_argument(std::string("expression ") + expression_name(e) +
                                " needs at least " + std::to_string(t) + " vertices");
  return scan_subsets(g.n, t, parallel,
                      [&](const int* vs) { return matches_expression(e, g, vs) ? 1 : 0; });
}

}  // namespace

long long count_expression(ExpressionName e, const ColoredGraph& g) {
  return count_expression_impl(e, g, true);
}

long long count_expression_serial(ExpressionName e, const ColoredGraph& g) {
  return count_expression_impl(e, g, false);
}

Rat density_expression(ExpressionName e, const ColoredGraph& g) {
  return Rat(count_expression(e, g), binomial(g.n, expression_arity(e)));
}

std::array<long long, 8> count_all_expressions(const ColoredGraph& g) {
  std::array<long long, 8> out{};
  for (size_t i = 0; i < kAllExpressions.size(); ++i) {
    ExpressionName e = kAllExpressions[i];
    out[i] = expression_arity(e) <= g.n ? count_expression(e, g) : 0;
  }
  return out;
}

Rat rooted_density(ExpressionName e, const ColoredGraph& g, const std::vector<int>& roots) {
  const int t = expression_arity(e);
  const int k = static_cast<int>(roots.size());
  if (k > t) throw std::invalid_argument("rooted_density: |X| exceeds the expression arity");
  for (int v : roots)
    if (v < 0 || v >= g.n) throw std::invalid_argument("rooted_density: root out of range");
  std::vector<int> sorted(roots);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("rooted_density: repeated root");
  if (g.n - k < t - k) throw std::invalid_argument("rooted_density: host too small");
  std::vector<int> rest;
  for (int v = 0; v < g.n; ++v)
    if (!std::binary_search(sorted.begin(), sorted.end(), v)) rest.push_back(v);
  long long cnt = 0;
  std::vector<int> vs(t);
  for_each_subset(static_cast<int>(rest.size()), t - k, [&](const std::vector<int>& pick) {
    for (int i = 0; i < k; ++i) vs[i] = sorted[i];
    for (int i = 0; i < t - k; ++i) vs[k + i] = rest[pick[i]];
    std::sort(vs.begin(), vs.end());
    if (matches_expression(e, g, vs.data())) ++cnt;
  });
  return Rat(cnt, binomial(g.n - k, t - k));
}

namespace {
long long count_rainbow_impl(const ColoredGraph& g, bool parallel) {
  if (g.n < 3) return 0;
  return scan_subsets(g.n, 3, parallel,
                      [&](const int* vs) { return rainbow3(g, vs[0], vs[1], vs[2]) ? 1 : 0; });
}
}  // namespace

long long count_rainbow_triangles(const ColoredGraph& g) { return count_rainbow_impl(g, true); }
long long count_rainbow_triangles_serial(const ColoredGraph& g) {
  return count_rainbow_impl(g, false);
}

std::vector<long long> rainbow_triangles_per_vertex(const ColoredGraph& g) {
  std::vector<long long> cnt(g.n, 0);
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (rainbow3(g, a, b, c)) {
          ++cnt[a];
          ++cnt[b];
          ++cnt[c];
        }
  return cnt;
}

ColorProfile rooted_color_profile(const ColoredGraph& g, int v,
                                  const std::vector<std::vector<int>>* partition,
                                  const ColoredGraph* pattern) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("rooted_color_profile: vertex out of range");
  long long c[3] = {0, 0, 0};
  for (int u = 0; u < g.n; ++u)
    if (u != v) ++c[g.color(u, v)];
  ColorProfile out;
  out.red = Rat(c[0], g.n);
  out.green = Rat(c[1], g.n);
  out.blue = Rat(c[2], g.n);
  out.d_mono = Rat(std::max({c[0], c[1], c[2]}), g.n);
  if (partition) {
    std::vector<int> label(g.n, -1);
    for (size_t p = 0; p < partition->size(); ++p)
      for (int u : (*partition)[p]) {
        if (u < 0 || u >= g.n) throw std::invalid_argument("partition vertex out of range");
        if (label[u] != -1) throw std::invalid_argument("partition parts overlap");
        label[u] = static_cast<int>(p);
      }
    out.part_counts.assign(partition->size(), {0, 0, 0});
    for (int u = 0; u < g.n; ++u)
      if (u != v && label[u] >= 0) ++out.part_counts[label[u]][g.color(u, v)];
    if (pattern) {
      if (static_cast<int>(partition->size()) != pattern->n)
        throw std::invalid_argument("pattern size must match part count");
      if (label[v] >= 0) {
        long long funky = 0;
        for (int u = 0; u < g.n; ++u)
          if (label[u] >= 0 && label[u] != label[v] &&
              g.color(u, v) != pattern->color(label[u], label[v]))
            ++funky;
        out.d_funky = Rat(funky, g.n);
      }
    }
  }
  return out;
}

long long count_funky_edges(const ColoredGraph& g, const std::vector<std::vector<int>>& partition,
                            const ColoredGraph& pattern) {
  if (static_cast<int>(partition.size()) != pattern.n)
    throw std::invalid_argument("pattern size must match part count");
  std::vector<int> label(g.n, -1);
  for (size_t p = 0; p < partition.size(); ++p)
    for (int u : partition[p]) {
      if (label[u] != -1) throw std::invalid_argument("partition parts overlap");
      label[u] = static_cast<int>(p);
    }
  long long funky = 0;
  for (int u = 0; u < g.n; ++u)
    for (int w = u + 1; w < g.n; ++w)
      if (label[u] >= 0 && label[w] >= 0 && label[u] != label[w] &&
          g.color(u, w) != pattern.color(label[u], label[w]))
        ++funky;
  return funky;
}

}  // namespace rbt
