#include <doctest.h>

#include <set>

#include "demo_codes.hpp"
#include "sumrank/anticode.hpp"

using namespace sumrank;
using namespace sumrank::testing;

TEST_CASE("per-block optimal anticode enumeration") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  AmbientShape sq({2, 1}, {2, 1});

  auto zero = enum_block_anticodes(f, sq, 0, 0);
  CHECK(zero.size() == 1);
  CHECK(zero[0].maxrank() == 0);

  auto mid = enum_block_anticodes(f, sq, 0, 1);
  CHECK(mid.size() == 6);  // 3 row-support + 3 column-support
  for (const auto& a : mid) {
    Matrix basis = block_anticode_flat_basis(sq, a);
    CHECK(mat_rank(f, basis) == 2);  // dim = m_i * t
    // every element has rank <= 1 and rank 1 is attained
    uint32_t best = 0;
    std::vector<uint32_t> scratch;
    sweep_span(f, basis, 0, 4, [&](std::span<const uint32_t> flat) {
      best = std::max(best, srk_flat(f, sq, flat, scratch));
    });
    CHECK(best == 1);
  }

  AmbientShape rect({3}, {2});
  auto fullspace = enum_block_anticodes(f, rect, 0, 2);
  CHECK(fullspace.size() == 1);
  CHECK(mat_rank(f, block_anticode_flat_basis(rect, fullspace[0])) == 6);
}

TEST_CASE("anticode bound on the duality pair") {
  DualityPair dp;
  CHECK(anticode_bound_value(dp.c2()) == 2);
  CHECK(!is_optimal_anticode(dp.c2()));
  CHECK(anticode_bound_value(dp.c1()) == 1);
  CHECK(is_optimal_anticode(dp.c1()));
  CHECK(anticode_bound_value(zero_code(dp.tower, dp.shape)) == 0);
  CHECK(is_optimal_anticode(full_code(dp.tower, dp.shape)));
}

TEST_CASE("the middle-block anticode of the six-block space") {
  SixBlock demo;
  // 0 x 0 x F_2^{2x2} x 0 x 0 x 0
  SupportElem L = zero_support(demo.shape);
  L.spaces[2] = Matrix::identity(2);
  LinearCode a = subcode_supported(full_code(demo.tower, demo.shape), L);
  CHECK(a.k() == 4);
  CHECK(distance_invariants(a).maxsrk == 2);
  CHECK(is_optimal_anticode(a));
  // the older per-prefix bound m_1 n_1 is not met
  CHECK(a.k() < demo.shape.m(0) * demo.shape.n(0));
}

TEST_CASE("generalized weights of the weight demo code are (1,1,2,4)") {
  WeightDemo wd;
  CHECK(generalized_weights(wd.code()) == std::vector<uint32_t>{1, 1, 2, 4});
  CHECK(generalized_row_support_weights(wd.code()) == std::vector<uint32_t>{1, 1, 2, 4});
}

TEST_CASE("ambient generalized weights match the closed form") {
  for (auto [ms, ns] : std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>>{
           {{2, 1}, {2, 1}}, {{2, 2}, {1, 1}}, {{3, 2, 1}, {1, 2, 1}}}) {
    AmbientShape shape(ms, ns);
    auto closed = ambient_generalized_weights(shape);
    // value n_1+...+n_{j-1}+t appears exactly m_j times
    std::vector<uint32_t> expect;
    uint32_t prefix = 0;
    for (uint32_t j = 0; j < shape.ell(); ++j) {
      for (uint32_t tv = 1; tv <= shape.n(j); ++tv)
        for (uint32_t c = 0; c < shape.m(j); ++c) expect.push_back(prefix + tv);
      prefix += shape.n(j);
    }
    CHECK(closed == expect);
    // engine agrees on the full code
    auto t = make_tower(2, 1, 1);
    CHECK(generalized_weights(full_code(t, shape)) == closed);
  }
}

TEST_CASE("one-dimensional codes: d_1 is the word weight footprint") {
  DualityPair dp;
  CHECK(generalized_weights(dp.c1()) == std::vector<uint32_t>{1});
  CHECK(generalized_weights(dp.c2()) == std::vector<uint32_t>{1});
}

TEST_CASE("duality pair separates d_4 of the duals") {
  DualityPair dp;
  auto d1 = generalized_weights(dual_code(dp.c1()));
  auto d2 = generalized_weights(dual_code(dp.c2()));
  CHECK(d1[0] == 1);
  CHECK(d2[0] == 1);
  CHECK(d1[3] == 2);
  CHECK(d2[3] == 3);
  CHECK_THROWS_AS(wei_duality_check(dp.c1()), std::invalid_argument);
}

TEST_CASE("weight-set duality holds for equal-m shapes") {
  std::mt19937 rng(2024);
  auto t = make_tower(2, 1, 1);
  for (auto [ms, ns] : std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>>{
           {{2, 2}, {2, 1}}, {{1, 1, 1}, {1, 1, 1}}, {{2, 2, 2}, {1, 1, 1}}}) {
    AmbientShape shape(ms, ns);
    for (int i = 0; i < 8; ++i) {
      LinearCode c = random_code(t, shape, 1 + rng() % (shape.dim() - 1), rng);
      CHECK(wei_duality_check(c));
    }
    CHECK(wei_duality_check(full_code(t, shape)));
  }
}

TEST_CASE("closed-form weights of optimal anticode products") {
  AmbientShape single({3}, {3});
  auto d = oac_generalized_weights(single, std::vector<uint32_t>{3});
  for (uint32_t r = 1; r <= 9; ++r) CHECK(d[r - 1] == (r + 2) / 3);  // ceil(r/m)

  AmbientShape shape({2, 2, 1}, {2, 1, 1});
  std::vector<uint32_t> prof{1, 1, 0};
  auto dd = oac_generalized_weights(shape, prof);
  CHECK(dd[0] == 1);  // r = 1 with some t_i > 0

  // brute-force cross-check: the closed form equals the generic engine on the
  // product viewed as a code
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  SupportElem L = zero_support(shape);
  L.spaces[0] = Matrix(1, 2, {1, 0});
  L.spaces[1] = Matrix(1, 1, {1});
  LinearCode prod = subcode_supported(full_code(t, shape), L);
  CHECK(prod.k() == 4);  // sum m_i t_i = 2 + 2
  CHECK(generalized_weights(prod) == oac_generalized_weights(shape, prof));
}

TEST_CASE("growth law and ambient-subsequence property") {
  std::mt19937 rng(77);
  auto t = make_tower(2, 1, 1);
  AmbientShape shape({2, 2}, {2, 1});
  auto ambient = ambient_generalized_weights(shape);
  for (int i = 0; i < 12; ++i) {
    LinearCode c = random_code(t, shape, 1 + rng() % shape.dim(), rng);
    auto d = generalized_weights(c);
    // subsequence of the ambient weights
    size_t pos = 0;
    for (uint32_t v : d) {
      while (pos < ambient.size() && ambient[pos] != v) ++pos;
      REQUIRE(pos < ambient.size());
      ++pos;
    }
    // growth: d_{r+m_k} > sum_{i<k} n_i implies d_{r+m_k} >= d_r + 1
    for (uint32_t kb = 0; kb < shape.ell(); ++kb) {
      uint32_t mk = shape.m(kb);
      uint32_t prefix = 0;
      for (uint32_t i = 0; i < kb; ++i) prefix += shape.n(i);
      for (uint32_t r = 1; r + mk <= d.size(); ++r)
        if (d[r + mk - 1] > prefix) CHECK(d[r + mk - 1] >= d[r - 1] + 1);
    }
  }
}

TEST_CASE("classification matches exhaustive enumeration on F_2^{2x2} x F_2") {
  auto t = make_tower(2, 1, 1);
  AmbientShape shape({2, 1}, {2, 1});
  Fq f = mid_field(*t);
  auto predicted = classify_optimal_anticodes(t, shape);
  CHECK(predicted.size() == 16);
  std::set<Matrix> predicted_set;
  for (const auto& ca : predicted) {
    predicted_set.insert(ca.code.basis_flat());
    CHECK(ca.maxsrk == distance_invariants(ca.code).maxsrk);
  }

  uint64_t checked = 0, optimal = 0;
  for (uint32_t dim = 0; dim <= shape.dim(); ++dim) {
    for (const auto& sub : subspaces_of(f, shape.dim(), dim)) {
      LinearCode c(t, shape, sub);
      ++checked;
      uint64_t bound = anticode_bound_value(c);
      CHECK(c.k() <= bound);
      bool opt = c.k() == bound;
      if (opt) ++optimal;
      CHECK(opt == (predicted_set.count(sub) != 0));
    }
  }
  CHECK(checked == 374);
  CHECK(optimal == 16);
}

TEST_CASE("pure Hamming shapes keep the non-product tail anticodes") {
  auto t = make_tower(2, 1, 1);
  AmbientShape shape({1, 1, 1}, {1, 1, 1});
  auto predicted = classify_optimal_anticodes(t, shape);
  // subspaces of F_2^3 with dim == maxwt: 1 + 3 + (3 + 1 even-weight) + 1
  CHECK(predicted.size() == 9);
  Fq f = mid_field(*t);
  uint64_t optimal = 0;
  for (uint32_t dim = 0; dim <= 3; ++dim)
    for (const auto& sub : subspaces_of(f, 3, dim))
      if (is_optimal_anticode(LinearCode(t, shape, sub))) ++optimal;
  CHECK(optimal == 9);
}

TEST_CASE("optimal anticodes: duality and max-weight generation (q = 3)") {
  auto t = make_tower(3, 1, 1);
  AmbientShape shape({2, 1}, {2, 1});
  Fq f = mid_field(*t);
  for (const auto& ca : classify_optimal_anticodes(t, shape)) {
    const LinearCode& a = ca.code;
    CHECK(is_optimal_anticode(a));
    CHECK(is_optimal_anticode(dual_code(a)));
    // spanned by its codewords of maximum sum-rank weight
    uint32_t maxw = distance_invariants(a).maxsrk;
    CHECK(maxw == ca.maxsrk);
    std::vector<uint32_t> scratch;
    Matrix span(0, shape.dim());
    sweep_span(f, a.basis_flat(), 0, a.size(), [&](std::span<const uint32_t> flat) {
      if (srk_flat(f, shape, flat, scratch) == maxw)
        span = mat_stack(span, Matrix(1, shape.dim(),
                                      std::vector<uint32_t>(flat.begin(), flat.end())));
    });
    CHECK(make_code_flat(t, shape, span) == a);
  }
}

TEST_CASE("generalized weights are isometry invariant") {
  std::mt19937 rng(55);
  SixBlock demo;
  WeightDemo wd;
  Fq f = mid_field(*wd.tower);
  LinearCode c = wd.code();
  auto base = generalized_weights(c);
  for (int i = 0; i < 3; ++i) {
    auto phi = random_isometry(wd.shape, f, rng);
    CHECK(generalized_weights(apply_isometry(phi, c)) == base);
  }
  // row-support weights: invariant under non-transposing isometries
  auto base_s = generalized_row_support_weights(c);
  for (int i = 0; i < 3; ++i) {
    auto phi = random_isometry(wd.shape, f, rng);
    for (auto&& flag : phi.transpose) flag = false;
    CHECK(generalized_row_support_weights(apply_isometry(phi, c)) == base_s);
  }
}

TEST_CASE("row-support weights equal generalized weights when m_i > n_i or 1x1") {
  std::mt19937 rng(42);
  auto t = make_tower(2, 1, 1);
  AmbientShape shape({3, 2, 1}, {1, 1, 1});
  for (int i = 0; i < 10; ++i) {
    LinearCode c = random_code(t, shape, 1 + rng() % shape.dim(), rng);
    CHECK(generalized_row_support_weights(c) == generalized_weights(c));
  }
}
