#include "rbt/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rbt {

int BlowupSpec::Part::size() const { return nested ? nested->total_size() : leaf.n; }

int BlowupSpec::total_size() const {
  int t = 0;
  for (const auto& p : parts) t += p.size();
  return t;
}

namespace {

void materialize(const BlowupSpec& spec, ColoredGraph& out, const std::vector<int>& verts);

void materialize_part(const BlowupSpec::Part& part, ColoredGraph& out,
                      const std::vector<int>& verts) {
  if (part.nested) {
    materialize(*part.nested, out, verts);
    return;
  }
  for (int i = 0; i < part.leaf.n; ++i)
    for (int j = i + 1; j < part.leaf.n; ++j)
      out.set_color(verts[i], verts[j], part.leaf.color(i, j));
}

void materialize(const BlowupSpec& spec, ColoredGraph& out, const std::vector<int>& verts) {
  if (static_cast<int>(spec.parts.size()) != spec.base.n)
    throw std::invalid_argument("blow-up spec: part count must equal base vertex count");
  std::vector<std::vector<int>> slots(spec.parts.size());
  int pos = 0;
  for (size_t p = 0; p < spec.parts.size(); ++p) {
    int s = spec.parts[p].size();
    for (int i = 0; i < s; ++i) slots[p].push_back(verts[pos++]);
  }
  for (size_t p = 0; p < spec.parts.size(); ++p)
    for (size_t q = p + 1; q < spec.parts.size(); ++q)
      for (int u : slots[p])
        for (int v : slots[q])
          out.set_color(u, v, spec.base.color(static_cast<int>(p), static_cast<int>(q)));
  for (size_t p = 0; p < spec.parts.size(); ++p) materialize_part(spec.parts[p], out, slots[p]);
}

}  // namespace

ColoredGraph blow_up(const BlowupSpec& spec) {
  int n = spec.total_size();
  ColoredGraph g(n);
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  materialize(spec, g, verts);
  return g;
}

namespace {

struct Tokens {
  std::vector<std::string> toks;
  size_t pos = 0;
  const std::string& peek() {
    if (pos >= toks.size()) throw std::invalid_argument("blow-up spec: unexpected end");
    return toks[pos];
  }
  std::string next() {
    auto t = peek();
    ++pos;
    return t;
  }
};

Tokens tokenize(const std::string& text) {
  Tokens t;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) {
        t.toks.push_back(cur);
        cur.clear();
      }
      t.toks.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        t.toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) t.toks.push_back(cur);
  return t;
}

BlowupSpec parse_spec(Tokens& t) {
  if (t.next() != "(") throw std::invalid_argument("blow-up spec: expected '('");
  if (t.next() != "blow") throw std::invalid_argument("blow-up spec: expected 'blow'");
  BlowupSpec spec;
  spec.base = decode_graph(t.next());
  while (t.peek() != ")") {
    BlowupSpec::Part part;
    if (t.peek() == "(") {
      part.nested = std::make_shared<BlowupSpec>(parse_spec(t));
    } else {
      part.leaf = decode_graph(t.next());
    }
    spec.parts.push_back(std::move(part));
  }
  t.next();  // ')'
  if (static_cast<int>(spec.parts.size()) != spec.base.n)
    throw std::invalid_argument("blow-up spec: part count must equal base vertex count");
  return spec;
}

}  // namespace

BlowupSpec parse_blowup_spec(const std::string& text) {
  Tokens t = tokenize(text);
  BlowupSpec s = parse_spec(t);
  if (t.pos != t.toks.size()) throw std::invalid_argument("blow-up spec: trailing tokens");
  return s;
}

std::string emit_blowup_spec(const BlowupSpec& spec) {
  std::string out = "(blow " + encode_graph(spec.base);
  for (const auto& p : spec.parts) {
    out += ' ';
    out += p.nested ? emit_blowup_spec(*p.nested) : encode_graph(p.leaf);
  }
  out += ')';
  return out;
}

ColoredGraph iterated_blowup(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("iterated_blowup: k must be in 1..4");
  ColoredGraph cur = rb1111();
  for (int step = 1; step < k; ++step) {
    BlowupSpec spec;
    spec.base = rb1111();
    for (int p = 0; p < 4; ++p) {
      BlowupSpec::Part part;
      part.leaf = cur;
      spec.parts.push_back(std::move(part));
    }
    cur = blow_up(spec);
  }
  return cur;
}

long long conjectured_F(long long n) {
  if (n < 1) throw std::invalid_argument("conjectured_F: n must be >= 1");
  if (n > 1000000) throw std::invalid_argument("conjectured_F: n too large");
  static std::unordered_map<long long, long long> memo;
  if (n <= 2) return 0;
  if (n == 3) return 1;  // pinned by exhaustion over the 27 colorings
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  long long a = (n + 3) / 4, b = (n + 2) / 4, c = (n + 1) / 4, d = n / 4;
  long long v = conjectured_F(a) + conjectured_F(b) + conjectured_F(c) + conjectured_F(d) +
                a * b * c + a * b * d + a * c * d + b * c * d;
  memo[n] = v;
  return v;
}

namespace {

// Assignment classification for the fixed point of the 4-equal-parts
// iterated blow-up. For an assignment of the pattern's m vertices to parts,
// the cross edges are forced by the seed coloring and the inner edges are
// free; membership must be constant over the free colorings except for the
// recognized recursive couplings.
struct FixedPointTerms {
  Rat forced;           // probability mass with membership forced true
  Rat recursive;        // mass of the all-in-one-part assignments
  Rat coupled_rb1111;   // mass of 4+1 splits whose membership is [inner quad proper]
};

FixedPointTerms classify_expression(ExpressionName e) {
  const int m = expression_arity(e);
  const ColoredGraph seed = rb1111();
  const Rat unit(1, Int(1) << (2 * m));  // (1/4)^m
  FixedPointTerms terms{Rat(0), Rat(0), Rat(0)};

  std::vector<int> assign(m, 0);
  unsigned total = 1;
  for (int i = 0; i < m; ++i) total *= 4;
  for (unsigned code = 0; code < total; ++code) {
    unsigned c = code;
    for (int i = 0; i < m; ++i) {
      assign[i] = static_cast<int>(c & 3);
      c >>= 2;
    }
    bool all_same = true;
    for (int i = 1; i < m; ++i) all_same &= assign[i] == assign[0];
    if (all_same) {
      terms.recursive += unit;
      continue;
    }
    // build the template with cross edges fixed; collect free inner edges
    ColoredGraph g(m);
    std::vector<std::pair<int, int>> inner;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (assign[i] == assign[j])
          inner.emplace_back(i, j);
        else
          g.set_color(i, j, seed.color(assign[i], assign[j]));
      }
    unsigned inner_total = 1;
    for (size_t i = 0; i < inner.size(); ++i) inner_total *= 3;
    std::vector<int> vs(m);
    for (int i = 0; i < m; ++i) vs[i] = i;
    int member_count = 0;
    std::vector<bool> member(inner_total);
    for (unsigned ic = 0; ic < inner_total; ++ic) {
      unsigned x = ic;
      for (auto [u, v] : inner) {
        g.set_color(u, v, static_cast<int>(x % 3));
        x /= 3;
      }
      member[ic] = matches_expression(e, g, vs.data());
      member_count += member[ic];
    }
    if (member_count == static_cast<int>(inner_total)) {
      terms.forced += unit;
      continue;
    }
    if (member_count == 0) continue;
    // mixed membership: the only supported couplings
    if (inner.size() == 1) {
      // a single co-part edge; its color is exactly uniform over the three
      // colors in the iterated blow-up (each level uses every color equally)
      terms.forced += unit * Rat(member_count, 3);
      continue;
    }
    if (m == 5 && inner.size() == 6) {
      // 4+1 split: check membership == [the co-part quadruple is properly colored]
      std::vector<int> quad;
      for (int i = 0; i < m; ++i) {
        int same = 0;
        for (int j = 0; j < m; ++j) same += assign[j] == assign[i];
        if (same == 4) quad.push_back(i);
      }
      bool ok = quad.size() == 4;
      if (ok) {
        for (unsigned ic = 0; ic < inner_total && ok; ++ic) {
          unsigned x = ic;
          for (auto [u, v] : inner) {
            g.set_color(u, v, static_cast<int>(x % 3));
            x /= 3;
          }
          bool proper = matches_expression(ExpressionName::RB1111, g, quad.data());
          ok = member[ic] == proper;
        }
      }
      if (ok) {
        terms.coupled_rb1111 += unit;
        continue;
      }
    }
    throw std::logic_error("limit_densities: unsupported mixed assignment for " +
                           std::string(expression_name(e)));
  }
  return terms;
}

}  // namespace

std::map<ExpressionName, Rat> limit_densities() {
  std::map<ExpressionName, Rat> out;
  // RB1111 first: the 4+1 coupling of RB1111PLUS refers to it.
  {
    FixedPointTerms t = classify_expression(ExpressionName::RB1111);
    out[ExpressionName::RB1111] = t.forced / (Rat(1) - t.recursive);
  }
  for (ExpressionName e : kAllExpressions) {
    if (e == ExpressionName::RB1111) continue;
    FixedPointTerms t = classify_expression(e);
    Rat num = t.forced + t.coupled_rb1111 * out[ExpressionName::RB1111];
    out[e] = num / (Rat(1) - t.recursive);
  }
  return out;
}

Rat limit_tct3_monot() {
  auto d = limit_densities();
  return d[ExpressionName::TCT] / 3 + d[ExpressionName::MONOT];
}

}  // namespace rbt
