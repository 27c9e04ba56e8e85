#pragma once

#include <string>
#include <vector>

#include "cubsurf/surfaces.hpp"

namespace cubsurf {

struct SearchOptions {
  long height = 1;
  // 0: read CUBSURF_THREADS, falling back to the hardware concurrency
  unsigned threads = 0;
};

struct SearchResult {
  std::vector<ProjPoint> points;  // sorted, duplicate-free
  long height_bound = 0;
  std::string convention = "max-abs-coordinate of primitive representative";
  double milliseconds = 0;
  unsigned threads_used = 1;
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// All points of v with a primitive integral representative of max |x_i| <= H.
SearchResult search(const DP4Surface& v, const SearchOptions& opts);
inline SearchResult search(const DP4Surface& v, long height) { return search(v, SearchOptions{height, 0}); }

bool verify_point(const DP4Surface& v, const ProjPoint& p);

unsigned default_thread_count();

}  // namespace cubsurf
