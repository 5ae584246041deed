#include "sumrank/anticode.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sumrank/parallel.hpp"

namespace sumrank {

uint32_t AnticodeProduct::maxsrk() const {
  uint32_t s = 0;
  for (const auto& p : parts) s += p.maxrank();
  return s;
}

uint32_t AnticodeProduct::dim(const AmbientShape& shape) const {
  uint32_t d = 0;
  for (const auto& p : parts) d += shape.m(p.block) * p.maxrank();
  return d;
}

std::vector<uint32_t> AnticodeProduct::t_profile() const {
  std::vector<uint32_t> t;
  for (const auto& p : parts) t.push_back(p.maxrank());
  return t;
}

std::vector<BlockAnticode> enum_block_anticodes(Fq f, const AmbientShape& shape, uint32_t block,
                                                uint32_t t) {
  uint32_t mi = shape.m(block), ni = shape.n(block);
  if (t > ni) throw std::invalid_argument("maxrank exceeds n_i");
  std::vector<BlockAnticode> out;
  for (auto& s : subspaces_of(f, ni, t)) out.push_back({block, false, std::move(s)});
  if (mi == ni && t > 0 && t < ni)
    for (auto& s : subspaces_of(f, mi, t)) out.push_back({block, true, std::move(s)});
  return out;
}

Matrix block_anticode_flat_basis(const AmbientShape& shape, const BlockAnticode& a) {
  uint32_t mi = shape.m(a.block), ni = shape.n(a.block);
  uint32_t off = shape.flat_offset(a.block);
  uint32_t t = a.maxrank();
  if (!a.col_family) {
    // basis: each subspace row placed in each matrix row
    Matrix out(mi * t, shape.dim());
    uint32_t r = 0;
    for (uint32_t v = 0; v < t; ++v)
      for (uint32_t row = 0; row < mi; ++row) {
        for (uint32_t col = 0; col < ni; ++col)
          out.at(r, off + row * ni + col) = a.space.at(v, col);
        ++r;
      }
    return out;
  }
  // column family: each subspace row placed in each matrix column
  Matrix out(ni * t, shape.dim());
  uint32_t r = 0;
  for (uint32_t v = 0; v < t; ++v)
    for (uint32_t col = 0; col < ni; ++col) {
      for (uint32_t row = 0; row < mi; ++row) out.at(r, off + row * ni + col) = a.space.at(v, row);
      ++r;
    }
  return out;
}

Matrix product_flat_basis(const AmbientShape& shape, const AnticodeProduct& a) {
  Matrix out(0, shape.dim());
  for (const auto& p : a.parts) out = mat_stack(out, block_anticode_flat_basis(shape, p));
  return out;
}

uint64_t anticode_bound_value(const LinearCode& c) {
  Fq f = c.fq();
  const AmbientShape& shape = c.shape();
  uint64_t total = sweep_size(f.size(), c.k(), "anticode bound sweep");
  auto chunk = [&](uint64_t b, uint64_t e) {
    uint64_t best = 0;
    std::vector<uint32_t> scratch, ranks;
    sweep_span(f, c.basis_flat(), b, e, [&](std::span<const uint32_t> flat) {
      block_ranks_flat(f, shape, flat, scratch, ranks);
      uint64_t v = 0;
      for (uint32_t i = 0; i < shape.ell(); ++i) v += static_cast<uint64_t>(shape.m(i)) * ranks[i];
      best = std::max(best, v);
    });
    return best;
  };
  return parallel_reduce(total, config().workers, uint64_t{0}, chunk,
                         [](uint64_t a, uint64_t b) { return std::max(a, b); });
}

bool is_optimal_anticode(const LinearCode& c) { return c.k() == anticode_bound_value(c); }

namespace {

// Shared search for both weight notions. Ascending by total maxrank s; at
// each level every admissible product is intersected with the code, and any
// still-open r <= dim(C ^ A) is settled at s. Solved r form a prefix, so a
// product with dim(A) below the first open r cannot help and is skipped.
std::vector<uint32_t> weights_by_products(const LinearCode& c, bool allow_col) {
  const uint32_t k = c.k();
  std::vector<uint32_t> d(k + 1, 0);
  if (k == 0) return {};
  Fq f = c.fq();
  const AmbientShape& shape = c.shape();
  const uint32_t ell = shape.ell();
  std::vector<std::vector<std::vector<BlockAnticode>>> choices(ell);
  for (uint32_t i = 0; i < ell; ++i) {
    choices[i].resize(shape.n(i) + 1);
    for (uint32_t t = 0; t <= shape.n(i); ++t) {
      if (allow_col) {
        choices[i][t] = enum_block_anticodes(f, shape, i, t);
      } else {
        for (auto& s : subspaces_of(f, shape.n(i), t)) choices[i][t].push_back({i, false, std::move(s)});
      }
    }
  }
  uint32_t r_open = 1;
  const uint32_t n = shape.n_total();
  for (uint32_t s = 0; s <= n && r_open <= k; ++s) {
    // dimension profiles with sum s
    std::vector<uint32_t> t(ell, 0);
    auto profile_dim = [&] {
      uint32_t dd = 0;
      for (uint32_t i = 0; i < ell; ++i) dd += shape.m(i) * t[i];
      return dd;
    };
    // enumerate profiles by recursion over blocks
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t i, uint32_t left) {
      if (r_open > k) return;
      if (i + 1 == ell) {
        if (left > shape.n(i)) return;
        t[i] = left;
        if (profile_dim() < r_open) return;
        // every product with this profile
        std::vector<uint32_t> idx(ell, 0);
        while (true) {
          AnticodeProduct prod;
          for (uint32_t b = 0; b < ell; ++b) prod.parts.push_back(choices[b][t[b]][idx[b]]);
          Matrix basis = product_flat_basis(shape, prod);
          uint32_t inter = c.k() + basis.rows - dim_sum(f, c.basis_flat(), basis);
          while (r_open <= k && r_open <= inter) d[r_open++] = s;
          if (r_open > k) return;
          uint32_t b = 0;
          while (b < ell && ++idx[b] == choices[b][t[b]].size()) idx[b++] = 0;
          if (b == ell) break;
        }
        return;
      }
      for (uint32_t v = 0; v <= std::min(left, shape.n(i)); ++v) {
        t[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, s);
  }
  return std::vector<uint32_t>(d.begin() + 1, d.end());
}

}  // namespace

std::vector<uint32_t> generalized_weights(const LinearCode& c) {
  return weights_by_products(c, true);
}

std::vector<uint32_t> generalized_row_support_weights(const LinearCode& c) {
  return weights_by_products(c, false);
}

std::vector<uint32_t> oac_generalized_weights(const AmbientShape& shape,
                                              std::span<const uint32_t> t_profile) {
  if (t_profile.size() != shape.ell()) throw std::invalid_argument("profile length mismatch");
  uint32_t dim = 0;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    if (t_profile[i] > shape.n(i)) throw std::invalid_argument("profile exceeds n_i");
    dim += shape.m(i) * t_profile[i];
  }
  std::vector<uint32_t> d(dim);
  for (uint32_t r = 1; r <= dim; ++r) {
    uint32_t rem = r - 1;
    uint32_t j = 0, prefix = 0;
    while (rem >= shape.m(j) * t_profile[j]) {
      rem -= shape.m(j) * t_profile[j];
      prefix += t_profile[j];
      ++j;
    }
    uint32_t tau = rem / shape.m(j);
    d[r - 1] = prefix + tau + 1;
  }
  return d;
}

std::vector<uint32_t> ambient_generalized_weights(const AmbientShape& shape) {
  return oac_generalized_weights(shape, shape.n_list());
}

bool wei_duality_check(const LinearCode& c, const std::vector<uint32_t>& weights,
                       const std::vector<uint32_t>& dual_weights) {
  const AmbientShape& shape = c.shape();
  if (!shape.all_m_equal())
    throw std::invalid_argument("weight-set duality requires equal m_i");
  const uint32_t m = shape.m(0);
  const uint32_t n = shape.n_total();
  const uint32_t k = c.k();
  const uint32_t kd = shape.dim() - k;
  // residue classes of indices mod m
  auto residue_set = [&](const std::vector<uint32_t>& w, int64_t r0, bool complement_vals) {
    std::set<uint32_t> out;
    for (int64_t idx = r0 % m; idx <= static_cast<int64_t>(w.size()); idx += m) {
      if (idx < 1) continue;
      uint32_t v = w[static_cast<size_t>(idx) - 1];
      out.insert(complement_vals ? n + 1 - v : v);
    }
    return out;
  };
  for (uint32_t r = 1; r <= m; ++r) {
    std::set<uint32_t> lhs = residue_set(dual_weights, r, false);
    (void)kd;
    std::set<uint32_t> rhs;
    std::set<uint32_t> dbar = residue_set(weights, static_cast<int64_t>(r) + k, true);
    for (uint32_t v = 1; v <= n; ++v)
      if (!dbar.count(v)) rhs.insert(v);
    if (lhs != rhs) return false;
  }
  return true;
}

bool wei_duality_check(const LinearCode& c) {
  return wei_duality_check(c, generalized_weights(c), generalized_weights(dual_code(c)));
}

std::vector<ClassifiedAnticode> classify_optimal_anticodes(FieldTowerPtr field,
                                                           const AmbientShape& shape) {
  Fq f = mid_field(*field);
  const uint32_t ell = shape.ell();
  // head: blocks with m_i > 1 (m is non-increasing); tail: the 1 x 1 blocks
  uint32_t head = 0;
  while (head < ell && shape.m(head) > 1) ++head;
  const uint32_t tail = ell - head;

  // per-head-block optimal anticodes, all maxranks
  std::vector<std::vector<BlockAnticode>> head_choices(head);
  for (uint32_t i = 0; i < head; ++i)
    for (uint32_t t = 0; t <= shape.n(i); ++t) {
      auto v = enum_block_anticodes(f, shape, i, t);
      head_choices[i].insert(head_choices[i].end(), v.begin(), v.end());
    }

  // optimal Hamming anticodes on the tail: subspaces with dim == max weight
  std::vector<Matrix> tail_choices;
  {
    std::vector<Matrix> all;
    for (uint32_t t = 0; t <= tail; ++t) {
      auto v = subspaces_of(f, tail, t);
      all.insert(all.end(), v.begin(), v.end());
    }
    for (const auto& s : all) {
      uint32_t maxwt = 0;
      uint64_t cnt = sweep_size(f.size(), s.rows, "Hamming tail sweep");
      sweep_span(f, s, 0, cnt, [&](std::span<const uint32_t> v) {
        uint32_t w = 0;
        for (uint32_t x : v)
          if (x) ++w;
        maxwt = std::max(maxwt, w);
      });
      if (maxwt == s.rows) tail_choices.push_back(s);
    }
    if (tail == 0) tail_choices.assign(1, Matrix(0, 0));
  }

  std::vector<ClassifiedAnticode> out;
  std::vector<size_t> idx(head, 0);
  while (true) {
    Matrix head_basis(0, shape.dim());
    uint32_t head_maxsrk = 0;
    for (uint32_t i = 0; i < head; ++i) {
      head_basis = mat_stack(head_basis, block_anticode_flat_basis(shape, head_choices[i][idx[i]]));
      head_maxsrk += head_choices[i][idx[i]].maxrank();
    }
    for (const auto& tl : tail_choices) {
      // embed the tail subspace: tail coordinate j is the single entry of
      // block head + j
      Matrix basis = head_basis;
      for (uint32_t r = 0; r < tl.rows; ++r) {
        Matrix row(1, shape.dim());
        for (uint32_t j = 0; j < tail; ++j)
          row.at(0, shape.flat_offset(head + j)) = tl.at(r, j);
        basis = mat_stack(basis, row);
      }
      // an optimal Hamming anticode has maxwt == dim
      out.push_back({make_code_flat(field, shape, std::move(basis)), head_maxsrk + tl.rows});
    }
    if (head == 0) break;
    uint32_t b = 0;
    while (b < head && ++idx[b] == head_choices[b].size()) idx[b++] = 0;
    if (b == head) break;
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedAnticode& a, const ClassifiedAnticode& b) {
    return a.code.basis_flat() < b.code.basis_flat();
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ClassifiedAnticode& a, const ClassifiedAnticode& b) {
                          return a.code == b.code;
                        }),
            out.end());
  return out;
}

}  // namespace sumrank
