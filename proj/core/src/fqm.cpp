#include "sumrank/fqm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sumrank {

namespace {

void check_partition(const std::vector<uint32_t>& partition, uint32_t n) {
  if (partition.empty()) throw std::invalid_argument("empty partition");
  uint32_t total = 0;
  for (uint32_t x : partition) {
    if (x == 0) throw std::invalid_argument("partition parts must be positive");
    total += x;
  }
  if (total != n) throw std::invalid_argument("partition does not sum to the length");
}

std::vector<uint32_t> offsets_of(std::span<const uint32_t> partition) {
  std::vector<uint32_t> off(partition.size() + 1, 0);
  for (size_t i = 0; i < partition.size(); ++i) off[i + 1] = off[i] + partition[i];
  return off;
}

}  // namespace

FqmCode::FqmCode(FieldTowerPtr tower, std::vector<uint32_t> partition, Matrix gen)
    : tower_(std::move(tower)), partition_(std::move(partition)), gen_(std::move(gen)) {
  check_partition(partition_, gen_.cols);
}

bool operator==(const FqmCode& a, const FqmCode& b) {
  return a.partition_ == b.partition_ && a.gen_ == b.gen_;
}

FqmCode make_fqm_code(FieldTowerPtr tower, std::vector<uint32_t> partition, Matrix generators) {
  Fq f = top_field(*tower);
  return FqmCode(std::move(tower), std::move(partition), row_space(f, std::move(generators)));
}

Codeword matrix_repr(const FieldTower& t, std::span<const uint32_t> partition,
                     std::span<const uint32_t> c) {
  uint32_t total = 0;
  for (uint32_t x : partition) total += x;
  if (c.size() != total) throw std::invalid_argument("vector length does not match partition");
  Codeword w;
  size_t pos = 0;
  for (uint32_t ni : partition) {
    Matrix blk(t.m(), ni);
    for (uint32_t j = 0; j < ni; ++j) {
      auto coords = t.coords(c[pos + j]);
      for (uint32_t i = 0; i < t.m(); ++i) blk.at(i, j) = coords[i];
    }
    pos += ni;
    w.blocks.push_back(std::move(blk));
  }
  return w;
}

std::vector<uint32_t> vector_repr(const FieldTower& t, std::span<const uint32_t> partition,
                                  const Codeword& w) {
  if (w.blocks.size() != partition.size()) throw std::invalid_argument("block count mismatch");
  std::vector<uint32_t> c;
  for (size_t b = 0; b < partition.size(); ++b) {
    const Matrix& blk = w.blocks[b];
    if (blk.rows != t.m() || blk.cols != partition[b])
      throw std::invalid_argument("block shape mismatch");
    for (uint32_t j = 0; j < blk.cols; ++j) {
      std::vector<uint32_t> col(t.m());
      for (uint32_t i = 0; i < t.m(); ++i) col[i] = blk.at(i, j);
      c.push_back(t.from_coords(col));
    }
  }
  return c;
}

uint32_t srk_vector(const FieldTower& t, std::span<const uint32_t> partition,
                    std::span<const uint32_t> c) {
  Fq f = mid_field(t);
  uint32_t total = 0;
  size_t pos = 0;
  for (uint32_t ni : partition) {
    Matrix blk(t.m(), ni);
    for (uint32_t j = 0; j < ni; ++j) {
      auto coords = t.coords(c[pos + j]);
      for (uint32_t i = 0; i < t.m(); ++i) blk.at(i, j) = coords[i];
    }
    pos += ni;
    total += mat_rank(f, blk);
  }
  return total;
}

AmbientShape fqm_shape(const FieldTower& t, std::span<const uint32_t> partition) {
  for (uint32_t x : partition)
    if (x > t.m())
      throw std::invalid_argument("matrix-space shape needs n_i <= m (invariants for longer "
                                  "blocks go through srk_vector)");
  return AmbientShape(std::vector<uint32_t>(partition.size(), t.m()),
                      std::vector<uint32_t>(partition.begin(), partition.end()));
}

LinearCode fq_image(const FqmCode& c) {
  const FieldTower& t = *c.tower();
  AmbientShape shape = fqm_shape(t, c.partition());
  std::vector<Codeword> gens;
  Fq ftop = c.top();
  for (uint32_t i = 0; i < c.k(); ++i)
    for (uint32_t a = 0; a < t.m(); ++a) {
      std::vector<uint32_t> row(c.n());
      for (uint32_t j = 0; j < c.n(); ++j)
        row[j] = ftop.mul(t.alpha()[a], c.generator().at(i, j));
      gens.push_back(matrix_repr(t, c.partition(), row));
    }
  return make_code(c.tower(), shape, gens);
}

FqmCode fqm_dual(const FqmCode& c) {
  return FqmCode(c.tower(), c.partition(), null_space(c.top(), c.generator()));
}

FqmCode fqm_isometry_apply(const FqmIsometry& phi, const FqmCode& c) {
  const auto& part = c.partition();
  if (phi.sigma.size() != part.size() || phi.beta.size() != part.size() ||
      phi.A.size() != part.size())
    throw std::invalid_argument("isometry shape mismatch");
  Fq ftop = c.top();
  Fq fmid = mid_field(*c.tower());
  auto off = offsets_of(part);
  for (size_t i = 0; i < part.size(); ++i) {
    if (part[phi.sigma[i]] != part[i])
      throw std::invalid_argument("isometry permutes blocks of different lengths");
    if (phi.beta[i] == 0) throw std::invalid_argument("block scalars must be nonzero");
    if (phi.A[i].rows != part[i] || mat_rank(fmid, phi.A[i]) != part[i])
      throw std::invalid_argument("block matrices must be invertible over F_q");
  }
  Matrix out(c.k(), c.n());
  for (uint32_t r = 0; r < c.k(); ++r)
    for (size_t i = 0; i < part.size(); ++i) {
      uint32_t ni = part[i];
      // block i of the image reads block sigma(i), scaled and mixed by A_i
      for (uint32_t jj = 0; jj < ni; ++jj) {
        uint32_t acc = 0;
        for (uint32_t j = 0; j < ni; ++j)
          acc = ftop.add(acc, ftop.mul(c.generator().at(r, off[phi.sigma[i]] + j),
                                       phi.A[i].at(j, jj)));
        out.at(r, off[i] + jj) = ftop.mul(phi.beta[i], acc);
      }
    }
  return make_fqm_code(c.tower(), part, std::move(out));
}

uint32_t fqm_min_distance(const FqmCode& c) {
  if (c.k() == 0) throw std::domain_error("minimum distance of the zero code is undefined");
  const FieldTower& t = *c.tower();
  bool fits = true;
  for (uint32_t x : c.partition()) fits = fits && x <= t.m();
  if (fits) return min_distance(fq_image(c));
  Fq ftop = c.top();
  uint64_t total = sweep_size(ftop.size(), c.k(), "vector code distance sweep");
  uint32_t best = UINT32_MAX;
  sweep_span(ftop, c.generator(), 0, total, [&](std::span<const uint32_t> cw) {
    bool zero = true;
    for (uint32_t x : cw) zero = zero && x == 0;
    if (zero) return;
    best = std::min(best, srk_vector(t, c.partition(), cw));
  });
  return best;
}

namespace {

// shared profile-ascending search over F_{q^m}-linear row-support spaces
std::vector<uint32_t> dprime_engine(const FqmCode& c, uint32_t r_stop) {
  const FieldTower& t = *c.tower();
  Fq fmid = mid_field(t);
  Fq ftop = c.top();
  const auto& part = c.partition();
  const uint32_t ell = static_cast<uint32_t>(part.size());
  auto off = offsets_of(part);
  const uint32_t n = c.n();
  std::vector<std::vector<std::vector<Matrix>>> subs(ell);
  for (uint32_t i = 0; i < ell; ++i) {
    subs[i].resize(part[i] + 1);
    for (uint32_t tv = 0; tv <= part[i]; ++tv) subs[i][tv] = subspaces_of(fmid, part[i], tv);
  }
  std::vector<uint32_t> d(r_stop + 1, 0);
  uint32_t r_open = 1;
  std::vector<uint32_t> prof(ell, 0);
  for (uint32_t s = 0; s <= n && r_open <= r_stop; ++s) {
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t i, uint32_t left) {
      if (r_open > r_stop) return;
      if (i + 1 == ell) {
        if (left > part[i]) return;
        prof[i] = left;
        std::vector<size_t> idx(ell, 0);
        while (true) {
          // V_L basis over F_{q^m}: one row per subspace basis vector
          uint32_t rows = 0;
          for (uint32_t b = 0; b < ell; ++b) rows += prof[b];
          Matrix v(rows, n);
          uint32_t r = 0;
          for (uint32_t b = 0; b < ell; ++b) {
            const Matrix& sp = subs[b][prof[b]][idx[b]];
            for (uint32_t x = 0; x < sp.rows; ++x) {
              for (uint32_t j = 0; j < part[b]; ++j) v.at(r, off[b] + j) = sp.at(x, j);
              ++r;
            }
          }
          uint32_t inter = c.k() + rows - dim_sum(ftop, c.generator(), v);
          while (r_open <= r_stop && r_open <= inter) d[r_open++] = s;
          if (r_open > r_stop) return;
          uint32_t b = 0;
          while (b < ell && ++idx[b] == subs[b][prof[b]].size()) idx[b++] = 0;
          if (b == ell) break;
        }
        return;
      }
      for (uint32_t tv = 0; tv <= std::min(left, part[i]); ++tv) {
        prof[i] = tv;
        rec(i + 1, left - tv);
      }
    };
    rec(0, s);
  }
  return std::vector<uint32_t>(d.begin() + 1, d.end());
}

}  // namespace

uint32_t fqm_min_distance_lattice(const FqmCode& c) {
  if (c.k() == 0) throw std::domain_error("minimum distance of the zero code is undefined");
  return dprime_engine(c, 1)[0];
}

bool fqm_is_msrd(const FqmCode& c) {
  if (c.k() == 0 || c.k() > c.n()) return false;
  if (c.k() == c.n()) return true;  // d = 1 = n - k + 1
  return fqm_min_distance_lattice(c) == c.n() - c.k() + 1;
}

std::vector<uint32_t> dprime_generalized_weights(const FqmCode& c) {
  if (c.k() == 0) return {};
  return dprime_engine(c, c.k());
}

bool fqm_wei_duality_check(const FqmCode& c) {
  auto mine = dprime_generalized_weights(c);
  auto dual = dprime_generalized_weights(fqm_dual(c));
  std::set<uint32_t> seen;
  for (uint32_t v : mine)
    if (!seen.insert(v).second) return false;
  for (uint32_t v : dual)
    if (!seen.insert(c.n() + 1 - v).second) return false;
  return seen.size() == c.n();
}

std::vector<Matrix> all_invertible(Fq f, uint32_t n) {
  std::vector<Matrix> out;
  if (n == 0) {
    out.push_back(Matrix(0, 0));
    return out;
  }
  uint64_t total = 1;
  for (uint32_t i = 0; i < n * n; ++i) {
    total *= f.size();
    require_ceiling(total, config().max_gl_product, "GL enumeration", "--ceiling-gl");
  }
  Matrix m(n, n);
  while (true) {
    if (mat_rank(f, m) == n) out.push_back(m);
    uint32_t i = 0;
    while (i < n * n && ++m.a[i] == f.size()) m.a[i++] = 0;
    if (i == n * n) break;
  }
  return out;
}

namespace {

uint64_t gl_order(uint64_t q, uint32_t n) {
  uint64_t total = 1, qn = 1;
  for (uint32_t i = 0; i < n; ++i) qn *= q;
  uint64_t qi = 1;
  for (uint32_t i = 0; i < n; ++i) {
    total *= qn - qi;
    qi *= q;
  }
  return total;
}

// all size-k column subsets of [n], lexicographic
void for_each_subset(uint32_t n, uint32_t k, const std::function<void(const std::vector<uint32_t>&)>& fn) {
  if (k > n) return;
  std::vector<uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool msrd_minor_test(const FqmCode& c, bool use_parity) {
  const FieldTower& t = *c.tower();
  Fq fmid = mid_field(t);
  Fq ftop = c.top();
  Matrix M = use_parity ? fqm_dual(c).generator() : c.generator();
  const uint32_t kk = M.rows;
  if (kk == 0) return true;  // no minors to check
  const auto& part = c.partition();
  uint64_t cost = 1;
  for (uint32_t ni : part) {
    cost *= gl_order(fmid.size(), ni);
    require_ceiling(cost, config().max_gl_product, "GL-product minor sweep", "--ceiling-gl");
  }
  std::vector<std::vector<Matrix>> gls;
  for (uint32_t ni : part) gls.push_back(all_invertible(fmid, ni));
  auto off = offsets_of(part);
  std::vector<size_t> idx(part.size(), 0);
  bool ok = true;
  while (ok) {
    // twisted matrix M diag(A_1..A_ell)
    Matrix tw(kk, c.n());
    for (size_t b = 0; b < part.size(); ++b) {
      const Matrix& A = gls[b][idx[b]];
      for (uint32_t r = 0; r < kk; ++r)
        for (uint32_t jj = 0; jj < part[b]; ++jj) {
          uint32_t acc = 0;
          for (uint32_t j = 0; j < part[b]; ++j)
            acc = ftop.add(acc, ftop.mul(M.at(r, off[b] + j), A.at(j, jj)));
          tw.at(r, off[b] + jj) = acc;
        }
    }
    for_each_subset(c.n(), kk, [&](const std::vector<uint32_t>& cols) {
      if (!ok) return;
      Matrix sub(kk, kk);
      for (uint32_t r = 0; r < kk; ++r)
        for (uint32_t j = 0; j < kk; ++j) sub.at(r, j) = tw.at(r, cols[j]);
      if (mat_rank(ftop, sub) != kk) ok = false;
    });
    size_t b = 0;
    while (b < part.size() && ++idx[b] == gls[b].size()) idx[b++] = 0;
    if (b == part.size()) break;
  }
  return ok;
}

bool systematic_msrd_test(const FqmCode& c, std::span<const uint32_t> k_split) {
  const FieldTower& t = *c.tower();
  Fq fmid = mid_field(t);
  Fq ftop = c.top();
  const auto& part = c.partition();
  if (k_split.size() != part.size()) throw std::invalid_argument("split length mismatch");
  uint32_t ksum = 0;
  for (size_t i = 0; i < part.size(); ++i) {
    if (k_split[i] > part[i]) throw std::invalid_argument("split exceeds block length");
    ksum += k_split[i];
  }
  if (ksum != c.k()) throw std::invalid_argument("split does not sum to k");
  auto off = offsets_of(part);

  // systematic form: the first k_i columns of each block carry the identity
  std::vector<uint32_t> pivots, rest;
  for (size_t i = 0; i < part.size(); ++i) {
    for (uint32_t j = 0; j < k_split[i]; ++j) pivots.push_back(off[i] + j);
    for (uint32_t j = k_split[i]; j < part[i]; ++j) rest.push_back(off[i] + j);
  }
  Matrix S(c.k(), c.k());
  for (uint32_t r = 0; r < c.k(); ++r)
    for (uint32_t j = 0; j < c.k(); ++j) S.at(r, j) = c.generator().at(r, pivots[j]);
  Matrix Sinv;
  try {
    Sinv = mat_inverse(ftop, S);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("no systematic form for this split");
  }
  Matrix T = mat_mul(ftop, Sinv, c.generator());
  const uint32_t nk = c.n() - c.k();
  Matrix P(c.k(), nk);
  for (uint32_t r = 0; r < c.k(); ++r)
    for (uint32_t j = 0; j < nk; ++j) P.at(r, j) = T.at(r, rest[j]);
  if (nk == 0) return true;  // full space, vacuous

  // row/col offsets of the block-diagonal grid on P
  std::vector<uint32_t> roff(part.size() + 1, 0), coff(part.size() + 1, 0);
  for (size_t i = 0; i < part.size(); ++i) {
    roff[i + 1] = roff[i] + k_split[i];
    coff[i + 1] = coff[i] + (part[i] - k_split[i]);
  }
  uint64_t cost = 1;
  for (size_t i = 0; i < part.size(); ++i) {
    cost *= gl_order(fmid.size(), k_split[i]) * gl_order(fmid.size(), part[i] - k_split[i]);
    for (uint32_t e = 0; e < k_split[i] * (part[i] - k_split[i]); ++e) cost *= fmid.size();
    require_ceiling(cost, config().max_gl_product, "systematic-form sweep", "--ceiling-gl");
  }
  std::vector<std::vector<Matrix>> Bs, As, Cs;
  for (size_t i = 0; i < part.size(); ++i) {
    Bs.push_back(all_invertible(fmid, k_split[i]));
    As.push_back(all_invertible(fmid, part[i] - k_split[i]));
    std::vector<Matrix> cs;
    Matrix cur(k_split[i], part[i] - k_split[i]);
    while (true) {
      cs.push_back(cur);
      size_t e = 0;
      while (e < cur.a.size() && ++cur.a[e] == fmid.size()) cur.a[e++] = 0;
      if (e == cur.a.size()) break;
    }
    if (cs.empty()) cs.push_back(Matrix(k_split[i], part[i] - k_split[i]));
    Cs.push_back(std::move(cs));
  }
  const size_t ell = part.size();
  std::vector<size_t> ib(ell, 0), ia(ell, 0), ic(ell, 0);
  auto bump = [&]() -> bool {
    for (size_t i = 0; i < ell; ++i) {
      if (++ib[i] < Bs[i].size()) return true;
      ib[i] = 0;
      if (++ia[i] < As[i].size()) return true;
      ia[i] = 0;
      if (++ic[i] < Cs[i].size()) return true;
      ic[i] = 0;
    }
    return false;
  };
  while (true) {
    // Z = B P A + C with block-diagonal B, A, C
    Matrix Z(c.k(), nk);
    for (size_t bi = 0; bi < ell; ++bi) {
      const Matrix& B = Bs[bi][ib[bi]];
      for (uint32_t r = 0; r < B.rows; ++r)
        for (uint32_t j = 0; j < nk; ++j) {
          uint32_t acc = 0;
          for (uint32_t x = 0; x < B.cols; ++x)
            acc = ftop.add(acc, ftop.mul(B.at(r, x), P.at(roff[bi] + x, j)));
          Z.at(roff[bi] + r, j) = acc;
        }
    }
    Matrix Z2(c.k(), nk);
    for (size_t ai = 0; ai < ell; ++ai) {
      const Matrix& A = As[ai][ia[ai]];
      for (uint32_t r = 0; r < c.k(); ++r)
        for (uint32_t jj = 0; jj < A.cols; ++jj) {
          uint32_t acc = 0;
          for (uint32_t x = 0; x < A.rows; ++x)
            acc = ftop.add(acc, ftop.mul(Z.at(r, coff[ai] + x), A.at(x, jj)));
          Z2.at(r, coff[ai] + jj) = acc;
        }
    }
    for (size_t ci = 0; ci < ell; ++ci) {
      const Matrix& C = Cs[ci][ic[ci]];
      for (uint32_t r = 0; r < C.rows; ++r)
        for (uint32_t j = 0; j < C.cols; ++j)
          Z2.at(roff[ci] + r, coff[ci] + j) =
              ftop.add(Z2.at(roff[ci] + r, coff[ci] + j), C.at(r, j));
    }
    for (uint32_t s = 1; s <= std::min(c.k(), nk); ++s) {
      bool ok = true;
      for_each_subset(c.k(), s, [&](const std::vector<uint32_t>& rows) {
        if (!ok) return;
        for_each_subset(nk, s, [&](const std::vector<uint32_t>& cols) {
          if (!ok) return;
          Matrix sub(s, s);
          for (uint32_t r = 0; r < s; ++r)
            for (uint32_t j = 0; j < s; ++j) sub.at(r, j) = Z2.at(rows[r], cols[j]);
          if (mat_rank(ftop, sub) != s) ok = false;
        });
      });
      if (!ok) return false;
    }
    if (!bump()) break;
  }
  return true;
}

}  // namespace sumrank
