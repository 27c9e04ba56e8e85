#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubsurf/descent.hpp"
#include "cubsurf/frobenius.hpp"
#include "cubsurf/geometry.hpp"
#include "cubsurf/pointsearch.hpp"

namespace cubsurf {

struct PrimeRange {
  std::uint64_t from = 3, to = 500;
  std::size_t count = 40;  // good primes to sample
  friend bool operator==(const PrimeRange&, const PrimeRange&) = default;
};

struct PipelineConfig {
  UniPoly p;
  UniPoly x{0, 1};
  std::optional<std::vector<UniPoly>> l;  // nullopt: power basis
  long height = 100;
  PrimeRange primes;
  std::size_t lefschetz_primes = 5;
  unsigned threads = 0;  // 0: CUBSURF_THREADS or hardware
  std::optional<std::string> report_path;
  std::optional<std::string> cubic_path;
  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

// Checks every stage precondition that does not need the computation itself:
// p monic squarefree of degree 5, x a generator, l a basis, H >= 1, a sane
// prime range.
void validate(const PipelineConfig& config);

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

struct SmoothnessVerdicts {
  bool dp4 = false;
  bool raw_cubic = false;
  bool reduced_cubic = false;
  friend bool operator==(const SmoothnessVerdicts&, const SmoothnessVerdicts&) = default;
};

struct RunReport {
  PipelineConfig config;
  DP4Surface dp4;
  RadicandReport radicands;
  SearchResult points;
  ProjPoint chosen;
  CubicSurface raw_cubic;
  ReduceResult reduced;
  SmoothnessVerdicts smooth;
  std::vector<TritangentEntry> tritangents;
  std::vector<FrobSample> frobenius;
  SubgroupReport subgroup;
  std::vector<LefschetzResult> lefschetz;
  std::vector<StageTiming> timings;
};

// Minimal height, ties broken lexicographically. Throws no_points_found on
// an empty list.
ProjPoint choose_point(const std::vector<ProjPoint>& points);

using StageCallback = std::function<void(const std::string& stage)>;

// descend, search, blow up the chosen point, reduce, check smoothness, then
// the tritangent and Frobenius reports. No retry: an empty search throws
// no_points_found and a singular surface throws singular_surface.
RunReport run_pipeline(const PipelineConfig& config, const StageCallback& on_stage = {});

}  // namespace cubsurf
