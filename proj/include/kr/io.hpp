#pragma once

#include <iosfwd>

#include "kr/energy.hpp"

namespace kr {

// Schema version for all JSON emissions and cache files.
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "krcg-1";

// Human/JSON element rendering: letters as signed integers, slots as arrays
// of rows.
std::string element_json(const Element& el);

// Graph exports with deterministic ordering. Includes 0-colored edges when
// present; `sigma` adds the vertex map when nonempty.
void write_graph_json(std::ostream& os, const CrystalGraph& g,
                      const std::vector<int>& sigma = {});
void write_graph_dot(std::ostream& os, const CrystalGraph& g);

// KR crystal cache files: {family}_{n}/{r}x{s}.krz under the cache dir.
// Returns the file path written.
std::string cache_path(const std::string& dir, const AffineType& type, int r, int s);
void save_kr_cache(const std::string& dir, const KRCrystal& k);
// Loads and rebuilds; returns false when missing or stale (wrong version).
// The reloaded graph is compared against `expect` vertex-for-vertex.
bool check_kr_cache(const std::string& dir, const KRCrystal& expect);

// Default cache directory from KR_CACHE_DIR (empty if unset).
std::string default_cache_dir();

// Laurent polynomial renderings.
std::string laurent_json(const Laurent& p);

}  // namespace kr
