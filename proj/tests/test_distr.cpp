#include <doctest.h>

#include "demo_codes.hpp"
#include "sumrank/distr.hpp"

using namespace sumrank;
using namespace sumrank::testing;

TEST_CASE("Gaussian binomial") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(-1, 0, 2) == 0);
  CHECK(gaussian_binomial(2, -1, 2) == 0);
  CHECK(gaussian_binomial(2, 3, 2) == 0);
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(0, 0, 7) == 1);
  // symmetry and a known value
  for (int64_t n = 0; n <= 6; ++n)
    for (int64_t k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, 3) == gaussian_binomial(n, n - k, 3));
  CHECK(gaussian_binomial(4, 2, 2) == 35);
}

TEST_CASE("rank-list distributions of the duality pair") {
  DualityPair dp;
  auto d1 = distributions(dp.c1());
  CHECK(d1.rank_list.size() == 2);
  CHECK(d1.rank_list.at({0, 0}) == 1);
  CHECK(d1.rank_list.at({0, 1}) == 1);

  auto d1d = distributions(dual_code(dp.c1()));
  CHECK(d1d.rank_list.at({0, 0}) == 1);
  CHECK(d1d.rank_list.at({1, 0}) == 9);
  CHECK(d1d.rank_list.at({2, 0}) == 6);
  CHECK(d1d.rank_list.size() == 3);

  auto d2 = distributions(dp.c2());
  CHECK(d2.rank_list.at({0, 0}) == 1);
  CHECK(d2.rank_list.at({1, 0}) == 1);

  auto d2d = distributions(dual_code(dp.c2()));
  CHECK(d2d.rank_list.at({0, 0}) == 1);
  CHECK(d2d.rank_list.at({1, 0}) == 5);
  CHECK(d2d.rank_list.at({0, 1}) == 1);
  CHECK(d2d.rank_list.at({2, 0}) == 2);
  CHECK(d2d.rank_list.at({1, 1}) == 5);
  CHECK(d2d.rank_list.at({2, 1}) == 2);
  CHECK(d2d.rank_list.size() == 6);

  auto z = distributions(zero_code(dp.tower, dp.shape));
  CHECK(z.sum_rank[0] == 1);
  for (uint32_t r = 1; r < z.sum_rank.size(); ++r) CHECK(z.sum_rank[r] == 0);
}

TEST_CASE("rank-list transform reproduces the dual tallies") {
  DualityPair dp;
  auto d1 = distributions(dp.c1());
  auto pred = macwilliams_rank_list(d1.rank_list, dp.shape, 2, dp.c1().k());
  CHECK(pred.at({1, 0}) == 9);
  CHECK(pred.at({2, 0}) == 6);
  CHECK(pred == distributions(dual_code(dp.c1())).rank_list);

  // from the full space: dual is the zero code
  auto t = dp.tower;
  auto full = full_code(t, dp.shape);
  auto predz = macwilliams_rank_list(distributions(full).rank_list, dp.shape, 2, full.k());
  CHECK(predz.size() == 1);
  CHECK(predz.at({0, 0}) == 1);

  std::mt19937 rng(8);
  for (int i = 0; i < 25; ++i) {
    LinearCode c = random_code(t, dp.shape, rng() % (dp.shape.dim() + 1), rng);
    auto pc = macwilliams_rank_list(distributions(c).rank_list, dp.shape, 2, c.k());
    CHECK(pc == distributions(dual_code(c)).rank_list);
  }
}

TEST_CASE("transform applied twice returns the original distribution") {
  std::mt19937 rng(9);
  auto t = make_tower(3, 1, 1);
  AmbientShape shape({2, 1}, {1, 1});
  for (int i = 0; i < 20; ++i) {
    LinearCode c = random_code(t, shape, rng() % (shape.dim() + 1), rng);
    auto w = distributions(c).rank_list;
    auto fwd = macwilliams_rank_list(w, shape, 3, c.k());
    auto back = macwilliams_rank_list(fwd, shape, 3, shape.dim() - c.k());
    CHECK(back == w);
  }
}

TEST_CASE("support transform matches brute force and marginalizes") {
  DualityPair dp;
  Fq f = mid_field(*dp.tower);

  // zero code -> support distribution of the full space
  auto z = zero_code(dp.tower, dp.shape);
  auto predz = macwilliams_support(distributions(z).support, dp.shape, f, 0);
  CHECK(predz == distributions(full_code(dp.tower, dp.shape)).support);

  auto d1 = distributions(dp.c1());
  auto pred = macwilliams_support(d1.support, dp.shape, f, dp.c1().k());
  CHECK(pred == distributions(dual_code(dp.c1())).support);
  CHECK(support_to_rank_list(pred) == macwilliams_rank_list(d1.rank_list, dp.shape, 2, dp.c1().k()));

  std::mt19937 rng(10);
  for (int i = 0; i < 10; ++i) {
    LinearCode c = random_code(dp.tower, dp.shape, rng() % (dp.shape.dim() + 1), rng);
    auto dist = distributions(c);
    auto p = macwilliams_support(dist.support, dp.shape, f, c.k());
    CHECK(p == distributions(dual_code(c)).support);
    CHECK(support_to_rank_list(p) == macwilliams_rank_list(dist.rank_list, dp.shape, 2, c.k()));
  }
}

TEST_CASE("binomial moments") {
  std::mt19937 rng(12);
  auto t2 = make_tower(2, 1, 1);
  AmbientShape shape({2, 2, 1}, {2, 1, 1});
  for (int i = 0; i < 15; ++i)
    CHECK(binomial_moments_check(random_code(t2, shape, rng() % (shape.dim() + 1), rng)));

  // ell = 1 reduces to the rank-metric identity
  AmbientShape gab({3}, {2});
  for (int i = 0; i < 10; ++i)
    CHECK(binomial_moments_check(random_code(t2, gab, rng() % (gab.dim() + 1), rng)));

  // Hamming shape
  auto t3 = make_tower(3, 1, 1);
  AmbientShape ham({1, 1, 1}, {1, 1, 1});
  for (int i = 0; i < 10; ++i)
    CHECK(binomial_moments_check(random_code(t3, ham, rng() % (ham.dim() + 1), rng)));
}

TEST_CASE("no MacWilliams identity for plain sum-rank distributions") {
  auto w = no_macwilliams_witness();
  CHECK(w.sum_rank_c1 == w.sum_rank_c2);
  CHECK(w.sum_rank_c1[0] == 1);
  CHECK(w.sum_rank_c1[1] == 1);
  CHECK(w.w1_dual_c1 == 9);
  CHECK(w.w1_dual_c2 == 6);
  // consistent with the full tallies
  CHECK(distributions(dual_code(w.c1)).sum_rank[1] == 9);
  CHECK(distributions(dual_code(w.c2)).sum_rank[1] == 6);
}

TEST_CASE("marginal consistency of the three distributions") {
  std::mt19937 rng(13);
  auto t = make_tower(2, 1, 1);
  AmbientShape shape({2, 2}, {2, 2});
  for (int i = 0; i < 10; ++i) {
    LinearCode c = random_code(t, shape, rng() % (shape.dim() + 1), rng);
    auto d = distributions(c);
    CHECK(support_to_rank_list(d.support) == d.rank_list);
    CHECK(rank_list_to_sum_rank(d.rank_list, shape.n_total()) == d.sum_rank);
    BigInt total = 0;
    for (const auto& x : d.sum_rank) total += x;
    CHECK(total == BigInt(1) << c.k());
  }
}

TEST_CASE("distribution tallies are worker independent") {
  DualityPair dp;
  std::mt19937 rng(14);
  LinearCode c = random_code(dp.tower, dp.shape, 3, rng);
  int save = config().workers;
  config().workers = 1;
  auto a = distributions(c);
  config().workers = 3;
  auto b = distributions(c);
  config().workers = save;
  CHECK(a.sum_rank == b.sum_rank);
  CHECK(a.rank_list == b.rank_list);
  CHECK(a.support == b.support);
}
