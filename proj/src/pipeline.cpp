#include "cubsurf/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>

#include "cubsurf/error.hpp"
#include "cubsurf/groebner.hpp"

namespace cubsurf {

void validate(const PipelineConfig& config) {
  EtaleAlgebra alg(config.p);
  require(config.x.degree() < kAlgebraDegree, ErrorCode::invalid_argument, "x must be given by a representative of degree < 5");
  require(is_generator(alg.element(config.x)), ErrorCode::not_generator, "x does not generate the algebra");
  if (config.l) {
    require(config.l->size() == static_cast<std::size_t>(kAlgebraDegree), ErrorCode::invalid_argument,
            "l needs five coefficients");
    std::vector<AlgElement> l;
    for (const auto& c : *config.l) l.push_back(alg.element(c));
    require(basis_discriminant(l) != 0, ErrorCode::dependent_forms, "the coefficients of l are not a basis");
  }
  require(config.height >= 1, ErrorCode::invalid_argument, "height bound must be at least 1");
  require(config.primes.from <= config.primes.to, ErrorCode::invalid_argument, "empty prime range");
  require(config.primes.to <= (1u << 22), ErrorCode::invalid_argument, "prime range exceeds 2^22");
  require(config.primes.count >= 1, ErrorCode::invalid_argument, "need at least one sampled prime");
}

ProjPoint choose_point(const std::vector<ProjPoint>& points) {
  require(!points.empty(), ErrorCode::no_points_found, "no rational point found");
  return *std::min_element(points.begin(), points.end(), [](const ProjPoint& a, const ProjPoint& b) {
    Integer ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a < b;
  });
}

RunReport run_pipeline(const PipelineConfig& config, const StageCallback& on_stage) {
  validate(config);
  std::vector<StageTiming> timings;
  auto stage = [&](const std::string& name, auto&& body) {
    if (on_stage) on_stage(name);
    auto t0 = std::chrono::steady_clock::now();
    body();
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    timings.push_back({name, dt.count()});
  };

  std::optional<DescentResult> d;
  stage("descend", [&] {
    d = run_strategy(config.p, config.x, config.l);
    validate(d->surface);
  });
  const DP4Surface& dp4 = d->surface;
  SearchResult points;
  ProjPoint chosen;
  stage("search", [&] {
    points = search(dp4, SearchOptions{config.height, config.threads});
    require(!points.points.empty(), ErrorCode::no_points_found,
            "no rational point of height <= " + std::to_string(config.height) + "; retry with another x or a larger height");
    chosen = choose_point(points.points);
  });
  CubicSurface raw;
  stage("blow-up", [&] {
    raw = dp4_to_cubic(dp4, chosen).surface;
    raw.f = raw.f.primitive();  // same surface, integral coprime coefficients
    validate(raw);
  });
  ReduceResult reduced;
  stage("reduce", [&] {
    reduced = greedy_reduce(raw);
    validate(reduced.surface);
  });
  SmoothnessVerdicts smooth;
  stage("smoothness", [&] {
    auto v = std::async(std::launch::async, [&] { return smooth_dp4(dp4); });
    auto r = std::async(std::launch::async, [&] { return smooth_cubic(raw); });
    smooth.reduced_cubic = smooth_cubic(reduced.surface);
    smooth.dp4 = v.get();
    smooth.raw_cubic = r.get();
    require(smooth.dp4 && smooth.raw_cubic && smooth.reduced_cubic, ErrorCode::singular_surface,
            "the constructed surface is singular");
  });
  std::vector<TritangentEntry> tritangents;
  stage("tritangents", [&] { tritangents = tritangent_analysis(dp4); });
  std::vector<FrobSample> samples;
  SubgroupReport subgroup;
  stage("frobenius", [&] {
    FrobeniusData data = frobenius_data(*dp4.descent);
    samples = sample_classes(data, config.primes.from, config.primes.to, config.primes.count, config.threads);
    require(!samples.empty(), ErrorCode::bad_prime, "no good prime in the sampling range");
    subgroup = identify_subgroup(samples, data.blocks);
  });
  std::vector<LefschetzResult> lefschetz;
  stage("lefschetz", [&] {
    for (const auto& s : samples) {
      if (lefschetz.size() >= config.lefschetz_primes) break;
      // the class only predicts the count at primes of good reduction
      auto field = std::make_shared<const FiniteField>(s.q);
      try {
        if (has_singular_point(reduce_mod_p(reduced.surface, field))) continue;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::bad_prime) throw;
        continue;
      }
      lefschetz.push_back(lefschetz_check(reduced.surface, s));
    }
  });
  return RunReport{config,    dp4,         d->radicands, points,  chosen,    raw,
                   reduced,   smooth,      tritangents,  samples, subgroup,  lefschetz,
                   timings};
}

}  // namespace cubsurf
