#ifndef RBT_CONSTRUCTIONS_HPP
#define RBT_CONSTRUCTIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rbt/densities.hpp"
#include "rbt/graph.hpp"
#include "rbt/rational.hpp"

namespace rbt {

/// Blow-up description: each vertex of `base` becomes a class; cross-class
/// edges inherit the base color; each class holds either a concrete colored
/// graph or a nested spec.
struct BlowupSpec {
  struct Part {
    std::shared_ptr<const BlowupSpec> nested;  // set for nested specs
    ColoredGraph leaf;                         // used when nested is null
    int size() const;
  };
  ColoredGraph base;
  std::vector<Part> parts;  // one per base vertex

  int total_size() const;
};

ColoredGraph blow_up(const BlowupSpec& spec);

/// Text form: (blow <base-graph> <part> ...), part := <graph> | (blow ...).
BlowupSpec parse_blowup_spec(const std::string& text);
std::string emit_blowup_spec(const BlowupSpec& spec);

/// R^k, the (k-1)-times iterated blow-up of the properly colored K4;
/// 4^k vertices. Supported for 1 <= k <= 4.
ColoredGraph iterated_blowup(int k);

/// The conjectured extremal recurrence
///   F(n) = F(a)+F(b)+F(c)+F(d) + abc+abd+acd+bcd,  a+b+c+d = n as equal
/// as possible, with base cases F(1) = F(2) = 0 and F(3) = 1 pinned by
/// direct exhaustion rather than by the recurrence.
long long conjectured_F(long long n);

/// Exact limit densities of the 4-equal-parts iterated blow-up, obtained by
/// solving the self-similar fixed point: classify every assignment of the
/// pattern's vertices to the four classes by brute force over the free
/// inner colorings, then solve for the recursive term.
std::map<ExpressionName, Rat> limit_densities();

/// TCT/3 + MONOT for the same object (the paper's table lists the
/// combination; it equals 1/3).
Rat limit_tct3_monot();

}  // namespace rbt

#endif
