#include "sumrank/distr.hpp"

#include <stdexcept>

#include "sumrank/parallel.hpp"

namespace sumrank {

BigInt gaussian_binomial(int64_t a, int64_t b, const BigInt& q) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b == 0) return 1;
  BigInt num = 1, den = 1;
  for (int64_t i = 0; i < b; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(a - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(b - i)) - 1;
  }
  BigInt out = num / den;
  if (out * den != num) throw std::logic_error("Gaussian binomial division not exact");
  return out;
}

Distributions distributions(const LinearCode& c) {
  Fq f = c.fq();
  const AmbientShape& shape = c.shape();
  uint64_t total = sweep_size(f.size(), c.k(), "distribution sweep");
  struct Tally {
    std::vector<BigInt> sum_rank;
    RankListDistribution rank_list;
    SupportDistribution support;
  };
  auto chunk = [&](uint64_t b, uint64_t e) {
    Tally t;
    t.sum_rank.assign(shape.n_total() + 1, 0);
    std::vector<uint32_t> scratch, ranks;
    sweep_span(f, c.basis_flat(), b, e, [&](std::span<const uint32_t> flat) {
      block_ranks_flat(f, shape, flat, scratch, ranks);
      uint32_t w = 0;
      for (uint32_t r : ranks) w += r;
      t.sum_rank[w] += 1;
      t.rank_list[ranks] += 1;
      t.support[support_of(f, shape, unflatten(shape, flat))] += 1;
    });
    return t;
  };
  Tally init;
  init.sum_rank.assign(shape.n_total() + 1, 0);
  Tally merged = parallel_reduce(total, config().workers, init, chunk, [](Tally a, Tally b) {
    for (size_t i = 0; i < a.sum_rank.size(); ++i) a.sum_rank[i] += b.sum_rank[i];
    for (auto& [k, v] : b.rank_list) a.rank_list[k] += v;
    for (auto& [k, v] : b.support) a.support[k] += v;
    return a;
  });
  return Distributions{std::move(merged.sum_rank), std::move(merged.rank_list),
                       std::move(merged.support)};
}

namespace {

BigInt q_pow(const BigInt& q, uint64_t e) {
  return boost::multiprecision::pow(q, static_cast<unsigned>(e));
}

// per-block inner sums of the rank-list transform:
// T[u][v] = sum_{w <= v} (-1)^{v-w} q^{m w} q^{binom(v-w,2)} [n-u, w]_q [n-w, v-w]_q
std::vector<std::vector<BigInt>> block_rank_table(uint32_t mi, uint32_t ni, const BigInt& q) {
  std::vector<std::vector<BigInt>> T(ni + 1, std::vector<BigInt>(ni + 1, 0));
  for (uint32_t u = 0; u <= ni; ++u)
    for (uint32_t v = 0; v <= ni; ++v) {
      BigInt s = 0;
      for (uint32_t w = 0; w <= v; ++w) {
        BigInt term = q_pow(q, static_cast<uint64_t>(mi) * w) *
                      q_pow(q, static_cast<uint64_t>(v - w) * (v - w - 1) / 2) *
                      gaussian_binomial(static_cast<int64_t>(ni) - u, w, q) *
                      gaussian_binomial(static_cast<int64_t>(ni) - w, static_cast<int64_t>(v) - w, q);
        if ((v - w) & 1) s -= term;
        else s += term;
      }
      T[u][v] = s;
    }
  return T;
}

void for_each_profile(const AmbientShape& shape, const std::function<void(const std::vector<uint32_t>&)>& fn) {
  std::vector<uint32_t> v(shape.ell(), 0);
  while (true) {
    fn(v);
    uint32_t i = 0;
    while (i < shape.ell() && ++v[i] > shape.n(i)) v[i++] = 0;
    if (i == shape.ell()) break;
  }
}

}  // namespace

RankListDistribution macwilliams_rank_list(const RankListDistribution& W,
                                           const AmbientShape& shape, uint64_t q, uint32_t k) {
  BigInt bq = q;
  for (const auto& [u, cnt] : W) {
    if (u.size() != shape.ell()) throw std::invalid_argument("rank vector has wrong length");
    for (uint32_t i = 0; i < shape.ell(); ++i)
      if (u[i] > shape.n(i)) throw std::invalid_argument("rank vector exceeds n_i");
    (void)cnt;
  }
  std::vector<std::vector<std::vector<BigInt>>> T;
  for (uint32_t i = 0; i < shape.ell(); ++i) T.push_back(block_rank_table(shape.m(i), shape.n(i), bq));
  BigInt csize = q_pow(bq, k);
  RankListDistribution out;
  for_each_profile(shape, [&](const std::vector<uint32_t>& v) {
    BigInt s = 0;
    for (const auto& [u, cnt] : W) {
      BigInt prod = cnt;
      for (uint32_t i = 0; i < shape.ell(); ++i) prod *= T[i][u[i]][v[i]];
      s += prod;
    }
    if (s % csize != 0) throw std::logic_error("rank-list transform is not integral");
    BigInt val = s / csize;
    if (val != 0) out[v] = val;
  });
  return out;
}

SupportDistribution macwilliams_support(const SupportDistribution& W, const AmbientShape& shape,
                                        Fq f, uint32_t k) {
  BigInt bq = f.size();
  // S[i][h][v] = sum_{u <= v} (-1)^{v-u} q^{m_i u} q^{binom(v-u,2)} [h, u]_q
  std::vector<std::vector<std::vector<BigInt>>> S(shape.ell());
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    uint32_t ni = shape.n(i);
    S[i].assign(ni + 1, std::vector<BigInt>(ni + 1, 0));
    for (uint32_t h = 0; h <= ni; ++h)
      for (uint32_t v = 0; v <= ni; ++v) {
        BigInt s = 0;
        for (uint32_t u = 0; u <= v; ++u) {
          BigInt term = q_pow(bq, static_cast<uint64_t>(shape.m(i)) * u) *
                        q_pow(bq, static_cast<uint64_t>(v - u) * (v - u - 1) / 2) *
                        gaussian_binomial(h, u, bq);
          if ((v - u) & 1) s -= term;
          else s += term;
        }
        S[i][h][v] = s;
      }
  }
  BigInt csize = q_pow(bq, k);
  // the Moebius inner sum runs over subspaces U <= L with U orthogonal to H,
  // so the block factor counts u-dim subspaces of H^perp ^ L
  std::vector<std::pair<SupportElem, std::vector<Matrix>>> entries;
  for (const auto& [H, cnt] : W) {
    (void)cnt;
    std::vector<Matrix> comp;
    for (uint32_t i = 0; i < shape.ell(); ++i) comp.push_back(null_space(f, H.spaces[i]));
    entries.emplace_back(H, std::move(comp));
  }
  SupportDistribution out;
  for_each_support(f, shape, std::nullopt, [&](const SupportElem& L) {
    auto v = L.dim_profile();
    BigInt s = 0;
    for (const auto& [H, comp] : entries) {
      BigInt prod = W.at(H);
      for (uint32_t i = 0; i < shape.ell(); ++i) {
        uint32_t g = intersection_dim(f, comp[i], L.spaces[i]);
        prod *= S[i][g][v[i]];
      }
      s += prod;
    }
    if (s % csize != 0) throw std::logic_error("support transform is not integral");
    BigInt val = s / csize;
    if (val != 0) out[L] = val;
  });
  return out;
}

bool binomial_moments_check(const LinearCode& c) {
  const AmbientShape& shape = c.shape();
  BigInt q = c.fq().size();
  Distributions dc = distributions(c);
  Distributions dd = distributions(dual_code(c));
  bool ok = true;
  for_each_profile(shape, [&](const std::vector<uint32_t>& v) {
    BigInt lhs = 0;
    for (const auto& [u, cnt] : dc.rank_list) {
      BigInt prod = cnt;
      for (uint32_t i = 0; i < shape.ell(); ++i)
        prod *= gaussian_binomial(static_cast<int64_t>(shape.n(i)) - u[i],
                                  static_cast<int64_t>(v[i]) - u[i], q);
      lhs += prod;
    }
    BigInt rhs = 0;
    for (const auto& [u, cnt] : dd.rank_list) {
      BigInt prod = cnt;
      for (uint32_t i = 0; i < shape.ell(); ++i)
        prod *= gaussian_binomial(static_cast<int64_t>(shape.n(i)) - u[i], v[i], q);
      rhs += prod;
    }
    uint64_t expo = 0;
    for (uint32_t i = 0; i < shape.ell(); ++i)
      expo += static_cast<uint64_t>(shape.m(i)) * (shape.n(i) - v[i]);
    // |C| / q^expo * rhs == lhs, cleared of denominators
    if (lhs * q_pow(q, expo) != q_pow(q, c.k()) * rhs) ok = false;
  });
  return ok;
}

NoMacWilliamsWitness no_macwilliams_witness() {
  auto tower = make_tower(2, 1, 1);
  AmbientShape shape({2, 1}, {2, 1});
  Codeword g1;
  g1.blocks.push_back(Matrix(2, 2));
  g1.blocks.push_back(Matrix(1, 1, {1}));
  Codeword g2;
  g2.blocks.push_back(Matrix(2, 2, {1, 0, 0, 0}));
  g2.blocks.push_back(Matrix(1, 1));
  std::vector<Codeword> gens1 = {g1}, gens2 = {g2};
  NoMacWilliamsWitness w{make_code(tower, shape, gens1), make_code(tower, shape, gens2),
                         {}, {}, 0, 0};
  w.sum_rank_c1 = distributions(w.c1).sum_rank;
  w.sum_rank_c2 = distributions(w.c2).sum_rank;
  w.w1_dual_c1 = distributions(dual_code(w.c1)).sum_rank[1];
  w.w1_dual_c2 = distributions(dual_code(w.c2)).sum_rank[1];
  return w;
}

RankListDistribution support_to_rank_list(const SupportDistribution& W) {
  RankListDistribution out;
  for (const auto& [L, cnt] : W) out[L.dim_profile()] += cnt;
  return out;
}

std::vector<BigInt> rank_list_to_sum_rank(const RankListDistribution& W, uint32_t n) {
  std::vector<BigInt> out(n + 1, 0);
  for (const auto& [v, cnt] : W) {
    uint32_t s = 0;
    for (uint32_t x : v) s += x;
    out[s] += cnt;
  }
  return out;
}

}  // namespace sumrank
