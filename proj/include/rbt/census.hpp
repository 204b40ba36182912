#ifndef RBT_CENSUS_HPP
#define RBT_CENSUS_HPP

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbt/canonical.hpp"

namespace rbt {

/// All l-vertex 3-edge-colorings of K_l modulo the mode's isomorphism,
/// as sorted canonical keys. A key's position is its stable census ID.
struct Census {
  int level = 1;
  IsoMode mode = IsoMode::ColorBlind;
  std::vector<std::string> members;

  int id_of(const std::string& key) const;  // -1 if absent
};

inline constexpr int kMaxCensusLevel = 6;

/// Canonical augmentation: extends the (l-1)-census representatives by one
/// vertex in all 3^(l-1) ways and dedups by canonical key. Parallel over
/// extensions; the sorted result is identical for any worker count.
Census enumerate_census(int level, IsoMode mode);

/// Serial reference implementation of the same enumeration (kept for tests
/// and benchmarks).
Census enumerate_census_serial(int level, IsoMode mode);

/// Test oracle: canonicalizes every one of the 3^(l(l-1)/2) raw colorings.
/// Only sensible for level <= 5.
Census census_brute_force(int level, IsoMode mode);

void write_census(const Census& c, std::ostream& os);
Census read_census(std::istream& is);

/// Process-wide advisory disk cache. Empty dir disables caching.
void set_cache_dir(const std::string& dir);
const std::string& cache_dir();

/// Cached accessor: in-memory memo, backed by the disk cache when enabled.
const Census& census(int level, IsoMode mode);

/// key -> census id map for the cached census.
const std::unordered_map<std::string, int>& census_ids(int level, IsoMode mode);

}  // namespace rbt

#endif
