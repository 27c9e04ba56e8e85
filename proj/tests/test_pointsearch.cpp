#include <doctest.h>

#include <numeric>
#include <random>

#include "cubsurf/pointsearch.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace cubsurf;

namespace {

// independent brute force over all primitive 5-tuples
std::vector<ProjPoint> naive(const DP4Surface& v, long h) {
  std::vector<ProjPoint> out;
  std::array<long, 5> x{};
  for (x[0] = -h; x[0] <= h; ++x[0])
    for (x[1] = -h; x[1] <= h; ++x[1])
      for (x[2] = -h; x[2] <= h; ++x[2])
        for (x[3] = -h; x[3] <= h; ++x[3])
          for (x[4] = -h; x[4] <= h; ++x[4]) {
            long g = 0;
            for (long c : x) g = std::gcd(g, std::labs(c));
            if (g != 1) continue;
            auto first = std::find_if(x.begin(), x.end(), [](long c) { return c != 0; });
            if (*first < 0) continue;
            Vec p(x.begin(), x.end());
            if (evaluate(v.q0, p) == 0 && evaluate(v.q1, p) == 0) out.emplace_back(p);
          }
  std::sort(out.begin(), out.end());
  return out;
}

DP4Surface example_dp4() { return DP4Surface{fixtures::example_q0(), fixtures::example_q1(), {}, {}}; }

}  // namespace

TEST_CASE("verify_point") {
  auto v = example_dp4();
  CHECK(verify_point(v, fixtures::example_point()));
  // x0^2 coefficients are 4 and 47
  CHECK_FALSE(verify_point(v, ProjPoint{1, 0, 0, 0, 0}));
}

TEST_CASE("search on small mechanical examples") {
  DP4Surface v{QuadForm(Matrix::diagonal({1, -1, 0, 0, 0})), QuadForm(Matrix::diagonal({0, 0, 1, -1, 0})), {}, {}};
  auto r = search(v, 1);
  CHECK(std::binary_search(r.points.begin(), r.points.end(), ProjPoint{1, 1, 1, 1, 0}));
  CHECK(std::binary_search(r.points.begin(), r.points.end(), ProjPoint{1, -1, 1, -1, 0}));
  for (long h = 1; h <= 3; ++h) CHECK(search(v, h).points == naive(v, h));

  DP4Surface empty{QuadForm(Matrix::identity(5)), QuadForm(Matrix::diagonal({2, 2, 2, 2, 3})), {}, {}};
  CHECK(search(empty, 5).points.empty());
}

TEST_CASE("search agrees with brute force on random surfaces") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 12; ++trial) {
    DP4Surface v{testutil::random_quad(rng, 5, -2, 2), testutil::random_quad(rng, 5, -2, 2), {}, {}};
    if (trial % 3 == 0) {
      // force a known point e0 + e1 by killing the affected coefficients
      Matrix g0 = v.q0.gram(), g1 = v.q1.gram();
      g0(0, 0) = g0(1, 1) = 0;
      g0(0, 1) = g0(1, 0) = 0;
      g1(0, 0) = 1;
      g1(1, 1) = -1;
      g1(0, 1) = g1(1, 0) = 0;
      v.q0 = QuadForm(g0);
      v.q1 = QuadForm(g1);
    }
    if (trial % 4 == 1) {
      // no square term in x4
      Matrix g0 = v.q0.gram(), g1 = v.q1.gram();
      g0(4, 4) = g1(4, 4) = 0;
      v.q0 = QuadForm(g0);
      v.q1 = QuadForm(g1);
    }
    long h = 1 + trial % 3;
    auto got = search(v, SearchOptions{h, 2});
    CHECK(got.points == naive(v, h));
  }
}

TEST_CASE("search with no square terms falls back to the scan") {
  // x0 x1 = x2 x3 - x1 x4 = 0
  DP4Surface v{QuadForm::from_upper(5, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
               QuadForm::from_upper(5, {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0}), {}, {}};
  CHECK(search(v, 2).points == naive(v, 2));
}

TEST_CASE("search on the worked example") {
  auto v = example_dp4();
  auto r1 = search(v, SearchOptions{30, 1});
  auto r4 = search(v, SearchOptions{30, 4});
  CHECK(r1.points == r4.points);
  CHECK(std::binary_search(r1.points.begin(), r1.points.end(), fixtures::example_point()));
  for (const auto& p : r1.points) CHECK(verify_point(v, p));
  MESSAGE("points up to height 30: " << r1.points.size() << " in " << r1.milliseconds << " ms");
}
