#include "sumrank/bounds.hpp"

#include <stdexcept>

namespace sumrank {

std::optional<MsrdProfile> profile_from_dim(const AmbientShape& shape, uint32_t dim) {
  const uint32_t ell = shape.ell();
  // the reachable dims per j are sum_{i>=j} m_i n_i - delta m_j with
  // 0 <= delta <= n_j - 1; the ranges are disjoint across j
  std::vector<uint32_t> suffix_dim(ell + 1, 0);
  for (uint32_t i = ell; i-- > 0;) suffix_dim[i] = suffix_dim[i + 1] + shape.m(i) * shape.n(i);
  for (uint32_t j = 0; j < ell; ++j) {
    uint32_t top = suffix_dim[j];
    if (dim > top) continue;
    uint32_t deficit = top - dim;
    if (deficit % shape.m(j) != 0) continue;
    uint32_t delta = deficit / shape.m(j);
    if (delta > shape.n(j) - 1) continue;
    uint32_t prefix_n = 0;
    for (uint32_t i = 0; i < j; ++i) prefix_n += shape.n(i);
    return MsrdProfile{j + 1, delta, prefix_n + delta + 1, dim};
  }
  return std::nullopt;
}

MsrdProfile profile_from_d(const AmbientShape& shape, uint32_t d) {
  if (d < 1 || d > shape.n_total()) throw std::invalid_argument("distance out of range");
  uint32_t rem = d - 1;
  uint32_t j = 0;
  while (rem >= shape.n(j)) {
    rem -= shape.n(j);
    ++j;
  }
  uint32_t dim = 0;
  for (uint32_t i = j; i < shape.ell(); ++i) dim += shape.m(i) * shape.n(i);
  dim -= rem * shape.m(j);
  return MsrdProfile{j + 1, rem, d, dim};
}

uint32_t r_h_value(const AmbientShape& shape, uint32_t h) {
  if (h == 0) return 0;
  if (h > shape.n_total()) throw std::invalid_argument("column index out of range");
  uint32_t rem = h - 1;
  uint32_t t = 0, acc = 0;
  while (rem >= shape.n(t)) {
    rem -= shape.n(t);
    acc += shape.m(t) * shape.n(t);
    ++t;
  }
  return acc + (rem + 1) * shape.m(t);
}

uint64_t singleton_bound_value(const AmbientShape& shape, uint32_t d_r, uint32_t r) {
  MsrdProfile p = profile_from_d(shape, d_r);
  return static_cast<uint64_t>(p.dim_target) + r - 1;
}

uint64_t singleton_bound(const LinearCode& c, uint32_t r) {
  if (r < 1 || r > c.k()) throw std::invalid_argument("r out of range");
  auto w = generalized_weights(c);
  uint64_t bound = singleton_bound_value(c.shape(), w[r - 1], r);
  if (c.k() > bound) throw std::logic_error("Singleton bound violated");
  return bound;
}

std::pair<bool, std::optional<MsrdProfile>> is_msrd(const LinearCode& c) {
  auto p = profile_from_dim(c.shape(), c.k());
  if (!p) return {false, std::nullopt};
  if (c.k() == 0) return {false, std::nullopt};  // d undefined
  uint32_t d = min_distance(c);
  if (d != p->d_target) return {false, p};
  return {true, p};
}

MsrdConditions msrd_equivalent_conditions(const LinearCode& c) {
  if (c.k() == 0) throw std::domain_error("extremality conditions need a nonzero code");
  Fq f = c.fq();
  const AmbientShape& shape = c.shape();
  MsrdConditions out;

  auto [msrd, prof] = is_msrd(c);
  out.definition = msrd;
  out.profile = prof;

  uint32_t d = min_distance(c);
  MsrdProfile dp = profile_from_d(shape, d);
  auto anticodes = classify_optimal_anticodes(c.field(), shape);

  // complement condition: C together with any maximal-dimension optimal
  // anticode of maxsrk d-1 fills the ambient space
  {
    uint32_t want_maxsrk = d - 1;
    uint32_t want_dim = 0;
    for (uint32_t i = 0; i + 1 < dp.j; ++i) want_dim += shape.m(i) * shape.n(i);
    want_dim += dp.delta * shape.m(dp.j - 1);
    bool ok = true;
    for (const auto& a : anticodes) {
      if (a.maxsrk != want_maxsrk || a.code.k() != want_dim) continue;
      if (dim_sum(f, c.basis_flat(), a.code.basis_flat()) != shape.dim()) {
        ok = false;
        break;
      }
    }
    out.anticode_complement = ok;
  }

  // trivial-intersection condition below the dimension target
  {
    auto p = profile_from_dim(shape, c.k());
    if (!p) {
      out.anticode_intersection = false;
    } else {
      uint32_t limit = p->d_target - 1;  // sum_{i<j} n_i + delta
      bool ok = true;
      for (const auto& a : anticodes) {
        if (a.maxsrk > limit) continue;
        if (dim_intersection(f, c.basis_flat(), a.code.basis_flat()) != 0) {
          ok = false;
          break;
        }
      }
      out.anticode_intersection = ok;
    }
  }

  // column-set condition: dim(C ^ F_q[S_h]) = m_k for S_h = [d-1] u {h}
  {
    bool ok = true;
    for (uint32_t h = d; h <= shape.n_total() && ok; ++h) {
      std::vector<bool> cols(shape.n_total(), false);
      for (uint32_t i = 0; i + 1 < d; ++i) cols[i] = true;
      cols[h - 1] = true;
      // flat basis of F_q[S]
      Matrix basis(0, shape.dim());
      uint32_t rows = 0;
      for (uint32_t gc = 0; gc < shape.n_total(); ++gc)
        if (cols[gc]) rows += shape.m(shape.locate_column(gc).first);
      basis = Matrix(rows, shape.dim());
      uint32_t r = 0;
      for (uint32_t gc = 0; gc < shape.n_total(); ++gc) {
        if (!cols[gc]) continue;
        auto [blk, local] = shape.locate_column(gc);
        for (uint32_t row = 0; row < shape.m(blk); ++row)
          basis.at(r++, shape.flat_offset(blk) + row * shape.n(blk) + local) = 1;
      }
      uint32_t kb = shape.locate_column(h - 1).first;
      ok = dim_intersection(f, c.basis_flat(), basis) == shape.m(kb);
    }
    out.column_sets = ok;
  }
  return out;
}

uint32_t r_msrd_index(const AmbientShape& shape, const MsrdProfile& p, uint32_t h) {
  uint32_t kb = shape.locate_column(h - 1).first;
  return r_h_value(shape, h) - r_h_value(shape, p.d_target - 1) - shape.m(kb) + 1;
}

bool is_r_msrd(const LinearCode& c, uint32_t h) {
  auto p = profile_from_dim(c.shape(), c.k());
  if (!p) throw std::invalid_argument("dimension is not of the extremal form");
  if (h < p->d_target || h > c.shape().n_total())
    throw std::invalid_argument("h outside [d_max, n]");
  uint32_t r = r_msrd_index(c.shape(), *p, h);
  auto w = generalized_weights(c);
  return w[r - 1] == h;
}

std::vector<uint32_t> msrd_weight_formula(const LinearCode& c) {
  auto [msrd, prof] = is_msrd(c);
  if (!msrd) throw std::invalid_argument("code is not MSRD");
  auto ambient = ambient_generalized_weights(c.shape());
  uint32_t off = r_h_value(c.shape(), prof->d_target - 1);
  std::vector<uint32_t> out;
  for (uint32_t r = 1; r <= c.k(); ++r) out.push_back(ambient[off + r - 1]);
  return out;
}

namespace {

int64_t ipow(uint64_t b, uint32_t e) {
  int64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= static_cast<int64_t>(b);
  return r;
}

}  // namespace

EllBoundReport msrd_ell_bound(uint32_t nu, uint32_t m, uint64_t q, uint32_t d) {
  if (d < 3) throw std::invalid_argument("the ell bound needs d >= 3");
  if (nu == 0 || m == 0 || nu > m) throw std::invalid_argument("need 1 <= nu <= m");
  EllBoundReport rep;
  const int64_t qn = ipow(q, nu), qm = ipow(q, m);
  const int64_t a = (d - 3) / nu;
  {
    uint32_t expo = static_cast<uint32_t>(nu * a + nu - (d - 3));
    int64_t v = a + (qn - ipow(q, expo) + (static_cast<int64_t>(q) - 1) * (qm + 1)) / (qn - 1);
    rep.cases.emplace_back("general line 1", v);
    int64_t v2 = a + 1 + (qm * (static_cast<int64_t>(q) - 1)) / (qn - 1);
    rep.cases.emplace_back("general line 2", v2);
  }
  if ((d - 3) % nu == 0) {
    int64_t v = a + ((static_cast<int64_t>(q) - 1) * (qm + 1)) / (qn - 1);
    rep.cases.emplace_back("nu divides d-3", v);
  }
  if (d <= nu + 2) {
    int64_t v = (qn - ipow(q, nu - d + 3) + (static_cast<int64_t>(q) - 1) * (qm + 1)) / (qn - 1);
    rep.cases.emplace_back("d <= nu+2", v);
    if (nu == m) {
      int64_t v2 = (ipow(q, nu + 1) - 1) / (qn - 1);
      rep.cases.emplace_back("d <= nu+2, nu = m", v2);
      if (nu <= 2) rep.cases.emplace_back("d <= nu+2, nu = m <= 2", static_cast<int64_t>(q));
    }
  }
  if (d == 3 && m % nu == 0) {
    int64_t v = (static_cast<int64_t>(q) - 1) * (qm - 1) / (qn - 1);
    rep.cases.emplace_back("d = 3, nu divides m", v);
  }
  rep.tightest = rep.cases.front().second;
  for (const auto& [name, v] : rep.cases) rep.tightest = std::min(rep.tightest, v);
  rep.mds_comparison = (qm + 1) / nu;
  return rep;
}

MsrdDualityReport msrd_duality_check(const LinearCode& c) {
  if (c.k() == 0 || c.k() == c.shape().dim())
    throw std::invalid_argument("duality facts need a non-trivial code");
  MsrdDualityReport rep;
  LinearCode dual = dual_code(c);
  rep.c_msrd = is_msrd(c).first;
  rep.dual_msrd = is_msrd(dual).first;
  rep.d = min_distance(c);
  rep.d_dual = min_distance(dual);
  if (c.shape().all_m_equal() && rep.c_msrd) rep.equal_m_implication = rep.dual_msrd;
  bool both = rep.c_msrd && rep.dual_msrd;
  rep.sum_equivalence = both == (rep.d + rep.d_dual == c.shape().n_total() + 2);
  return rep;
}

}  // namespace sumrank
