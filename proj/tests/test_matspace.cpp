#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "sumrank/matspace.hpp"

using namespace sumrank;

namespace {

// the six-block binary demo space F_2^{3x2} x F_2^{3x1} x F_2^{2x2} x F_2^{2x1} x F_2 x F_2
AmbientShape sixblock_shape() { return AmbientShape({3, 3, 2, 2, 1, 1}, {2, 1, 2, 1, 1, 1}); }

Codeword sixblock_word(uint32_t a1, uint32_t a2, uint32_t a3, uint32_t a4) {
  Codeword c;
  c.blocks.push_back(Matrix(3, 2, {a1, 0, 0, a1 ^ a2, a1, 0}));
  c.blocks.push_back(Matrix(3, 1, {a3, 0, 0}));
  c.blocks.push_back(Matrix(2, 2, {a2, 0, 0, a2}));
  c.blocks.push_back(Matrix(2, 1, {a4, 0}));
  c.blocks.push_back(Matrix(1, 1, {a3}));
  c.blocks.push_back(Matrix(1, 1, {a4}));
  return c;
}

Codeword random_word(Fq f, const AmbientShape& shape, std::mt19937& rng) {
  Codeword c = zero_codeword(shape);
  for (auto& b : c.blocks)
    for (auto& v : b.a) v = rng() % f.size();
  return c;
}

}  // namespace

TEST_CASE("rank and rref basics") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  CHECK(mat_rank(f, Matrix::identity(2)) == 2);
  Matrix blk(3, 2, {1, 0, 0, 0, 1, 0});
  CHECK(mat_rank(f, blk) == 1);
  CHECK(mat_rank(f, Matrix(3, 3)) == 0);
  CHECK(row_space(f, Matrix(3, 3)).rows == 0);
  Matrix rs = row_space(f, blk);
  CHECK(rs == Matrix(1, 2, {1, 0}));
}

TEST_CASE("rref is canonical over GF(3)") {
  auto t = make_tower(3, 1, 1);
  Fq f = mid_field(*t);
  Matrix m(2, 3, {2, 1, 0, 0, 0, 2});
  Matrix r = row_space(f, m);
  CHECK(r == Matrix(2, 3, {1, 2, 0, 0, 0, 1}));
  // scaled generators span the same row space
  Matrix m2(2, 3, {1, 2, 0, 0, 0, 1});
  CHECK(row_space(f, m2) == r);
}

TEST_CASE("six-block demo codewords have the expected weights") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  auto shape = sixblock_shape();
  Codeword cmin = sixblock_word(0, 0, 1, 0);
  Codeword dmax = sixblock_word(1, 1, 1, 1);
  CHECK(srk(f, cmin) == 2);
  CHECK(srk(f, dmax) == 7);
  CHECK(srk(f, zero_codeword(shape)) == 0);
  CHECK(sr_distance(f, shape, cmin, cmin) == 0);
}

TEST_CASE("trace form") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  auto shape = sixblock_shape();
  Codeword c = sixblock_word(1, 0, 1, 1);
  CHECK(trace_form(f, shape, c, zero_codeword(shape)) == 0);

  AmbientShape one({1}, {1});
  auto t5 = make_tower(5, 1, 1);
  Fq f5 = mid_field(*t5);
  Codeword x, y;
  x.blocks.push_back(Matrix(1, 1, {3}));
  y.blocks.push_back(Matrix(1, 1, {4}));
  CHECK(trace_form(f5, one, x, y) == f5.mul(3, 4));

  AmbientShape sq({2}, {2});
  Codeword e11;
  e11.blocks.push_back(Matrix(2, 2, {1, 0, 0, 0}));
  CHECK(trace_form(f, sq, e11, e11) == 1);
}

TEST_CASE("trace form is non-degenerate at desk scale") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  AmbientShape shape({2, 1}, {2, 1});
  for (uint32_t i = 0; i < shape.dim(); ++i) {
    std::vector<uint32_t> flat(shape.dim(), 0);
    flat[i] = 1;
    Codeword e = unflatten(shape, flat);
    bool hit = false;
    for (uint32_t j = 0; j < shape.dim() && !hit; ++j) {
      std::vector<uint32_t> g(shape.dim(), 0);
      g[j] = 1;
      hit = trace_form(f, shape, e, unflatten(shape, g)) != 0;
    }
    CHECK(hit);
  }
}

TEST_CASE("supports of the demo codewords") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  auto shape = sixblock_shape();
  auto sc = support_of(f, shape, sixblock_word(0, 0, 1, 0));
  CHECK(sc.dim_profile() == std::vector<uint32_t>{0, 1, 0, 0, 1, 0});
  auto sd = support_of(f, shape, sixblock_word(1, 1, 1, 1));
  CHECK(sd.dim_profile() == std::vector<uint32_t>{1, 1, 2, 1, 1, 1});
  CHECK(sd.spaces[0] == Matrix(1, 2, {1, 0}));
  CHECK(support_of(f, shape, zero_codeword(shape)) == zero_support(shape));
  CHECK(sd.total_dim() == srk(f, sixblock_word(1, 1, 1, 1)));
}

TEST_CASE("block-diagonal embedding preserves rank") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  auto shape = sixblock_shape();
  Codeword dmax = sixblock_word(1, 1, 1, 1);
  Matrix e = embed_block_diag(shape, dmax);
  CHECK(e.rows == 12);
  CHECK(e.cols == 8);
  CHECK(mat_rank(f, e) == 7);
  CHECK(embed_block_diag(shape, zero_codeword(shape)).is_zero());

  AmbientShape single({3}, {2});
  Codeword c;
  c.blocks.push_back(Matrix(3, 2, {1, 1, 0, 1, 1, 0}));
  CHECK(embed_block_diag(single, c) == c.blocks[0]);

  std::mt19937 rng(5);
  auto t3 = make_tower(3, 1, 1);
  Fq f3 = mid_field(*t3);
  AmbientShape sh({2, 2, 1}, {2, 1, 1});
  for (int i = 0; i < 100; ++i) {
    Codeword w = random_word(f3, sh, rng);
    CHECK(mat_rank(f3, embed_block_diag(sh, w)) == srk(f3, w));
    CHECK(support_of(f3, sh, w).total_dim() == srk(f3, w));
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937 rng(17);
  auto t = make_tower(3, 1, 1);
  Fq f = mid_field(*t);
  AmbientShape shape({2, 1}, {2, 1});
  for (int i = 0; i < 400; ++i) {
    Codeword a = random_word(f, shape, rng), b = random_word(f, shape, rng),
             c = random_word(f, shape, rng);
    uint32_t ab = sr_distance(f, shape, a, b);
    CHECK(ab == sr_distance(f, shape, b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(ab <= sr_distance(f, shape, a, c) + sr_distance(f, shape, c, b));
  }
}

TEST_CASE("normalized shape records the permutation") {
  auto [shape, perm] = AmbientShape::normalized({1, 3, 2}, {1, 2, 1});
  CHECK(shape.m_list() == std::vector<uint32_t>{3, 2, 1});
  CHECK(shape.n_list() == std::vector<uint32_t>{2, 1, 1});
  CHECK(perm == std::vector<uint32_t>{1, 2, 0});
  CHECK_THROWS_AS(AmbientShape({1, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(AmbientShape({2}, {3}), std::invalid_argument);
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  auto t2 = make_tower(2, 1, 1);
  auto t3 = make_tower(3, 1, 1);
  CHECK(subspaces_of(mid_field(*t2), 2, 1).size() == 3);  // [2 1]_2
  CHECK(count_subspaces(2, 2, 1) == 3);
  for (auto [q, tw] : {std::pair<uint64_t, const FieldTower*>{2, t2.get()}, {3, t3.get()}}) {
    Fq f = mid_field(*tw);
    for (uint32_t n = 0; n <= 4; ++n)
      for (uint32_t k = 0; k <= n; ++k) {
        auto subs = subspaces_of(f, n, k);
        CHECK(subs.size() == count_subspaces(q, n, k));
        std::set<Matrix> uniq(subs.begin(), subs.end());
        CHECK(uniq.size() == subs.size());  // each exactly once
        for (const auto& s : subs) {
          CHECK(s.rows == k);
          Matrix copy = s;
          CHECK(rref_inplace(f, copy) == k);
          CHECK(copy == s);  // already canonical
        }
      }
  }
}

TEST_CASE("support lattice enumeration") {
  auto t = make_tower(2, 1, 1);
  Fq f = mid_field(*t);
  AmbientShape shape({2, 2, 1}, {2, 1, 1});
  uint64_t n = 0;
  std::set<SupportElem> seen;
  for_each_support(f, shape, std::nullopt, [&](const SupportElem& s) {
    ++n;
    seen.insert(s);
  });
  CHECK(n == support_lattice_size(2, shape));
  CHECK(n == count_all_subspaces(2, 2) * count_all_subspaces(2, 1) * count_all_subspaces(2, 1));
  CHECK(seen.size() == n);

  uint64_t m = 0;
  for_each_support(f, shape, std::vector<uint32_t>{0, 0, 0}, [&](const SupportElem& s) {
    ++m;
    CHECK(s == zero_support(shape));
  });
  CHECK(m == 1);
  m = 0;
  for_each_support(f, shape, std::vector<uint32_t>{2, 1, 1}, [&](const SupportElem& s) {
    ++m;
    CHECK(s == ambient_support(shape));
  });
  CHECK(m == 1);
}

TEST_CASE("null space and inverse") {
  auto t = make_tower(3, 1, 1);
  Fq f = mid_field(*t);
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    Matrix m(2, 4);
    for (auto& v : m.a) v = rng() % 3;
    Matrix ns = null_space(f, m);
    CHECK(ns.rows == 4 - mat_rank(f, m));
    for (uint32_t r = 0; r < ns.rows; ++r) {
      // m * v^T = 0 for every basis vector v
      for (uint32_t row = 0; row < m.rows; ++row) {
        uint32_t s = 0;
        for (uint32_t c = 0; c < 4; ++c) s = f.add(s, f.mul(m.at(row, c), ns.at(r, c)));
        CHECK(s == 0);
      }
    }
  }
  Matrix a(2, 2, {1, 2, 1, 1});
  Matrix ai = mat_inverse(f, a);
  CHECK(mat_mul(f, a, ai) == Matrix::identity(2));
  CHECK_THROWS_AS(mat_inverse(f, Matrix(2, 2, {1, 2, 2, 1})), std::domain_error);
}
