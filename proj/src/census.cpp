#include "rbt/census.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rbt {

int Census::id_of(const std::string& key) const {
  auto it = std::lower_bound(members.begin(), members.end(), key);
  if (it == members.end() || *it != key) return -1;
  return static_cast<int>(it - members.begin());
}

namespace {

void check_level(int level) {
  if (level < 1 || level > kMaxCensusLevel)
    throw std::invalid_argument("unsupported census level " + std::to_string(level));
}

unsigned long long pow3(int k) {
  unsigned long long r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

// One augmentation step: every class at level l arises by appending a vertex
// to the canonical representative of its first l-1 vertices.
std::vector<std::string> extend_level(const std::vector<std::string>& prev, int level,
                                      IsoMode mode, bool parallel) {
  const unsigned long long ext = pow3(level - 1);
  const long long total = static_cast<long long>(prev.size()) * static_cast<long long>(ext);
  std::vector<ColoredGraph> reps;
  reps.reserve(prev.size());
  for (const auto& k : prev) reps.push_back(decode_graph(k));

  std::set<std::string> keys;
  std::mutex mu;
#pragma omp parallel if (parallel)
  {
    std::set<std::string> local;
#pragma omp for schedule(dynamic, 256)
    for (long long t = 0; t < total; ++t) {
      const ColoredGraph& base = reps[t / ext];
      unsigned long long code = t % ext;
      ColoredGraph g(level);
      for (int i = 0; i < level - 1; ++i)
        for (int j = i + 1; j < level - 1; ++j) g.set_color(i, j, base.color(i, j));
      for (int i = 0; i < level - 1; ++i) {
        g.set_color(i, level - 1, static_cast<int>(code % 3));
        code /= 3;
      }
      local.insert(canonical_key(g, mode));
    }
    std::lock_guard<std::mutex> lock(mu);
    keys.merge(local);
  }
  return {keys.begin(), keys.end()};
}

Census enumerate_impl(int level, IsoMode mode, bool parallel) {
  check_level(level);
  std::vector<std::string> cur = {"1:"};
  for (int l = 2; l <= level; ++l) cur = extend_level(cur, l, mode, parallel);
  Census c;
  c.level = level;
  c.mode = mode;
  c.members = std::move(cur);
  return c;
}

}  // namespace

Census enumerate_census(int level, IsoMode mode) { return enumerate_impl(level, mode, true); }

Census enumerate_census_serial(int level, IsoMode mode) {
  return enumerate_impl(level, mode, false);
}

Census census_brute_force(int level, IsoMode mode) {
  check_level(level);
  const int m = level * (level - 1) / 2;
  std::set<std::string> keys;
  const unsigned long long total = pow3(m);
  for (unsigned long long t = 0; t < total; ++t) {
    ColoredGraph g(level);
    unsigned long long code = t;
    for (int i = 0; i < m; ++i) {
      g.colors[i] = static_cast<uint8_t>(code % 3);
      code /= 3;
    }
    keys.insert(canonical_key(g, mode));
  }
  Census c;
  c.level = level;
  c.mode = mode;
  c.members.assign(keys.begin(), keys.end());
  return c;
}

void write_census(const Census& c, std::ostream& os) {
  os << "CENSUS v1 level=" << c.level << " mode=" << mode_name(c.mode)
     << " count=" << c.members.size() << "\n";
  for (const auto& k : c.members) os << k << "\n";
}

Census read_census(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("census: empty input");
  std::istringstream hs(header);
  std::string magic, ver, lf, mf, cf;
  hs >> magic >> ver >> lf >> mf >> cf;
  if (magic != "CENSUS" || ver != "v1" || lf.rfind("level=", 0) != 0 ||
      mf.rfind("mode=", 0) != 0 || cf.rfind("count=", 0) != 0)
    throw std::invalid_argument("census: bad header: " + header);
  Census c;
  c.level = std::stoi(lf.substr(6));
  c.mode = parse_mode(mf.substr(5));
  size_t count = std::stoul(cf.substr(6));
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    c.members.push_back(line);
  }
  if (c.members.size() != count) throw std::invalid_argument("census: count mismatch");
  if (!std::is_sorted(c.members.begin(), c.members.end()))
    throw std::invalid_argument("census: members not sorted");
  return c;
}

namespace {
std::string g_cache_dir;
}

void set_cache_dir(const std::string& dir) { g_cache_dir = dir; }
const std::string& cache_dir() { return g_cache_dir; }

namespace {

std::string census_cache_path(int level, IsoMode mode) {
  return g_cache_dir + "/census-v1-l" + std::to_string(level) + "-" + mode_name(mode) + ".txt";
}

Census load_or_enumerate(int level, IsoMode mode) {
  if (!g_cache_dir.empty()) {
    std::ifstream in(census_cache_path(level, mode));
    if (in) {
      try {
        Census c = read_census(in);
        if (c.level == level && c.mode == mode) return c;
      } catch (const std::exception&) {
        // stale or damaged cache entry; fall through and recompute
      }
    }
  }
  Census c = enumerate_census(level, mode);
  if (!g_cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(g_cache_dir, ec);
    if (!ec) {
      std::ofstream out(census_cache_path(level, mode));
      if (out) write_census(c, out);
    }
  }
  return c;
}

}  // namespace

const Census& census(int level, IsoMode mode) {
  check_level(level);
  static std::map<std::pair<int, int>, Census> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(level, static_cast<int>(mode));
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, load_or_enumerate(level, mode)).first;
  return it->second;
}

const std::unordered_map<std::string, int>& census_ids(int level, IsoMode mode) {
  static std::map<std::pair<int, int>, std::unordered_map<std::string, int>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(level, static_cast<int>(mode));
  auto it = memo.find(key);
  if (it == memo.end()) {
    const Census& c = census(level, mode);
    std::unordered_map<std::string, int> m;
    m.reserve(c.members.size() * 2);
    for (size_t i = 0; i < c.members.size(); ++i) m[c.members[i]] = static_cast<int>(i);
    it = memo.emplace(key, std::move(m)).first;
  }
  return it->second;
}

}  // namespace rbt
