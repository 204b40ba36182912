#ifndef RBT_DENSITIES_HPP
#define RBT_DENSITIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rbt/census.hpp"
#include "rbt/graph.hpp"
#include "rbt/rational.hpp"

namespace rbt {

// The paper's named density expressions. RBT/TCT/MONOT partition the
// 3-vertex colorings; RB2111 and RB1111PLUS are disjoint 5-vertex classes;
// RB3111 and RB2211 are disjoint 6-vertex classes.
enum class ExpressionName { RBT, TCT, MONOT, RB1111, RB2111, RB1111PLUS, RB3111, RB2211 };

constexpr std::array<ExpressionName, 8> kAllExpressions = {
    ExpressionName::RBT,    ExpressionName::TCT,        ExpressionName::MONOT,
    ExpressionName::RB1111, ExpressionName::RB2111,     ExpressionName::RB1111PLUS,
    ExpressionName::RB3111, ExpressionName::RB2211};

int expression_arity(ExpressionName e);
const char* expression_name(ExpressionName e);
ExpressionName parse_expression(const std::string& s);

/// Number of 4-subsets of vs inducing a properly 3-edge-colored K4.
int count_rb1111_within(const ColoredGraph& g, const int* vs, int k);

/// Recognizer for the class on the induced subset vs (|vs| == arity).
/// RB2111 <=> exactly two RB1111 copies; RB1111PLUS <=> exactly one;
/// RB2211 <=> exactly four; RB3111 <=> exactly three AND a (3,1,1,1)
/// blow-up partition exists (copy count alone admits false positives;
/// the census-scan equivalence checks live in the tests).
bool matches_expression(ExpressionName e, const ColoredGraph& g, const int* vs);

/// Structure oracle: does some partition of all of g's vertices into blobs
/// of the given sizes have blob-wise uniform cross colors contracting to a
/// properly 3-edge-colored K_|sizes|?
bool is_blowup_of_proper_k4(const ColoredGraph& g, const std::vector<int>& sizes);

/// P(H,G): the number of v(h)-subsets of V(g) inducing a copy of h under
/// the mode's isomorphism. Zero when v(h) > v(g).
long long count_induced(const ColoredGraph& h, const ColoredGraph& g, IsoMode mode);
Rat density(const ColoredGraph& h, const ColoredGraph& g, IsoMode mode);

/// Entries indexed by census ID at the given level; they are non-negative
/// and sum to exactly 1.
struct DensityVector {
  int level;
  IsoMode mode;
  std::vector<Rat> entries;
};

/// Exact distribution of the induced class of a random level-subset.
/// Reference subset scan; requires level <= v(g) <= 12.
DensityVector density_profile(const ColoredGraph& g, int level, IsoMode mode);

long long count_expression(ExpressionName e, const ColoredGraph& g);
long long count_expression_serial(ExpressionName e, const ColoredGraph& g);
Rat density_expression(ExpressionName e, const ColoredGraph& g);

/// All eight expression counts in one scan over 3-, 4-, 5- and 6-subsets.
std::array<long long, 8> count_all_expressions(const ColoredGraph& g);

/// D(X): fraction of (arity-|X|)-subsets of V \ X that together with X
/// induce a member of the class.
Rat rooted_density(ExpressionName e, const ColoredGraph& g, const std::vector<int>& roots);

long long count_rainbow_triangles(const ColoredGraph& g);
long long count_rainbow_triangles_serial(const ColoredGraph& g);
std::vector<long long> rainbow_triangles_per_vertex(const ColoredGraph& g);

/// Per-vertex color statistics, normalized by n as in the paper.
struct ColorProfile {
  Rat red, green, blue;  // r(v), g(v), b(v)
  Rat d_mono;            // max of the three
  // per part: counts of red/green/blue edges from v into that part
  std::vector<std::array<long long, 3>> part_counts;
  std::optional<Rat> d_funky;  // d_f(v); set when a partition + pattern is given
};

/// partition: disjoint vertex sets (need not cover V). pattern: a colored
/// K_|partition| prescribing cross colors; an edge between parts i and j is
/// funky when its color differs from pattern.color(i,j). d_funky is filled
/// when both partition and pattern are present and v lies in a part.
ColorProfile rooted_color_profile(const ColoredGraph& g, int v,
                                  const std::vector<std::vector<int>>* partition = nullptr,
                                  const ColoredGraph* pattern = nullptr);

/// Funky edges (cross-part edges whose color differs from the pattern).
long long count_funky_edges(const ColoredGraph& g, const std::vector<std::vector<int>>& partition,
                            const ColoredGraph& pattern);

}  // namespace rbt

#endif
