#include "sumrank/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumrank/parallel.hpp"

namespace sumrank {

LinearCode::LinearCode(FieldTowerPtr field, AmbientShape shape, Matrix basis)
    : field_(std::move(field)), shape_(std::move(shape)), basis_flat_(std::move(basis)) {
  if (basis_flat_.cols != shape_.dim()) throw std::invalid_argument("basis width != dim(M)");
}

Codeword LinearCode::basis_word(uint32_t i) const {
  std::span<const uint32_t> row(basis_flat_.a.data() + static_cast<size_t>(i) * shape_.dim(),
                                shape_.dim());
  return unflatten(shape_, row);
}

std::vector<uint32_t> LinearCode::encode_flat(std::span<const uint32_t> msg) const {
  if (msg.size() != k()) throw std::invalid_argument("message length != k");
  Fq f = fq();
  std::vector<uint32_t> out(shape_.dim(), 0);
  for (uint32_t i = 0; i < k(); ++i) {
    if (msg[i] == 0) continue;
    for (uint32_t j = 0; j < shape_.dim(); ++j)
      out[j] = f.add(out[j], f.mul(msg[i], basis_flat_.at(i, j)));
  }
  return out;
}

bool LinearCode::contains_flat(std::span<const uint32_t> flat) const {
  Matrix v(1, shape_.dim(), std::vector<uint32_t>(flat.begin(), flat.end()));
  return dim_sum(fq(), basis_flat_, v) == k();
}

bool LinearCode::contains(const Codeword& c) const { return contains_flat(flatten(shape_, c)); }

uint64_t LinearCode::size() const { return sweep_size(fq().size(), k(), "code size"); }

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.shape_ == b.shape_ && a.basis_flat_ == b.basis_flat_;
}

LinearCode make_code_flat(FieldTowerPtr field, const AmbientShape& shape, Matrix generators) {
  Fq f = mid_field(*field);
  return LinearCode(std::move(field), shape, row_space(f, std::move(generators)));
}

LinearCode make_code(FieldTowerPtr field, const AmbientShape& shape,
                     std::span<const Codeword> generators) {
  Matrix g(static_cast<uint32_t>(generators.size()), shape.dim());
  for (uint32_t i = 0; i < generators.size(); ++i) {
    check_shape(shape, generators[i]);
    auto flat = flatten(shape, generators[i]);
    std::copy(flat.begin(), flat.end(), g.a.begin() + static_cast<size_t>(i) * shape.dim());
  }
  return make_code_flat(std::move(field), shape, std::move(g));
}

LinearCode zero_code(FieldTowerPtr field, const AmbientShape& shape) {
  return LinearCode(std::move(field), shape, Matrix(0, shape.dim()));
}

LinearCode full_code(FieldTowerPtr field, const AmbientShape& shape) {
  return LinearCode(std::move(field), shape, Matrix::identity(shape.dim()));
}

LinearCode dual_code(const LinearCode& c) {
  // Tr(D, C) is the standard dot product on flattened coordinates
  return LinearCode(c.field(), c.shape(), null_space(c.fq(), c.basis_flat()));
}

// --- sweep machinery -----------------------------------------------------------

uint64_t sweep_size(uint64_t q, uint32_t k, const char* what) {
  uint64_t s = 1;
  for (uint32_t i = 0; i < k; ++i) {
    s *= q;
    require_ceiling(s, config().max_sweep, what, "--ceiling-sweep / SUMRANK_CEILING");
  }
  return s;
}

namespace {

// row echelon on a scratch buffer, rank only
uint32_t scratch_rank(Fq f, uint32_t rows, uint32_t cols, std::vector<uint32_t>& scratch) {
  uint32_t rank = 0;
  for (uint32_t col = 0; col < cols && rank < rows; ++col) {
    uint32_t piv = rank;
    while (piv < rows && scratch[static_cast<size_t>(piv) * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (uint32_t j = col; j < cols; ++j)
        std::swap(scratch[static_cast<size_t>(piv) * cols + j],
                  scratch[static_cast<size_t>(rank) * cols + j]);
    uint32_t inv = f.inv(scratch[static_cast<size_t>(rank) * cols + col]);
    for (uint32_t r = piv + 1; r < rows; ++r) {
      uint32_t v = scratch[static_cast<size_t>(r) * cols + col];
      if (v == 0) continue;
      uint32_t factor = f.mul(v, inv);
      for (uint32_t j = col; j < cols; ++j)
        scratch[static_cast<size_t>(r) * cols + j] =
            f.sub(scratch[static_cast<size_t>(r) * cols + j],
                  f.mul(factor, scratch[static_cast<size_t>(rank) * cols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

uint32_t srk_flat(Fq f, const AmbientShape& shape, std::span<const uint32_t> flat,
                  std::vector<uint32_t>& scratch) {
  uint32_t total = 0;
  for (uint32_t b = 0; b < shape.ell(); ++b) {
    uint32_t rows = shape.m(b), cols = shape.n(b);
    scratch.assign(flat.begin() + shape.flat_offset(b),
                   flat.begin() + shape.flat_offset(b) + static_cast<size_t>(rows) * cols);
    total += scratch_rank(f, rows, cols, scratch);
  }
  return total;
}

void block_ranks_flat(Fq f, const AmbientShape& shape, std::span<const uint32_t> flat,
                      std::vector<uint32_t>& scratch, std::vector<uint32_t>& ranks) {
  ranks.assign(shape.ell(), 0);
  for (uint32_t b = 0; b < shape.ell(); ++b) {
    uint32_t rows = shape.m(b), cols = shape.n(b);
    scratch.assign(flat.begin() + shape.flat_offset(b),
                   flat.begin() + shape.flat_offset(b) + static_cast<size_t>(rows) * cols);
    ranks[b] = scratch_rank(f, rows, cols, scratch);
  }
}

void sweep_span(Fq f, const Matrix& basis, uint64_t begin, uint64_t end,
                const std::function<void(std::span<const uint32_t>)>& fn) {
  const uint32_t k = basis.rows;
  const uint32_t dim = basis.cols;
  const uint32_t q = f.size();
  if (k == 0) {
    if (begin == 0 && end > 0) {
      std::vector<uint32_t> zero(dim, 0);
      fn(zero);
    }
    return;
  }
  // scaled copies of each basis row, so the partial-sum updates are adds only
  std::vector<std::vector<uint32_t>> scaled(static_cast<size_t>(k) * q);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t s = 0; s < q; ++s) {
      auto& row = scaled[static_cast<size_t>(i) * q + s];
      row.resize(dim);
      for (uint32_t j = 0; j < dim; ++j) row[j] = f.mul(s, basis.at(i, j));
    }
  // digits[i] = coefficient of row i; digit 0 varies fastest.
  // partial[i] = sum_{j >= i} digits[j] * row_j; partial[k] = 0.
  std::vector<uint32_t> digits(k, 0);
  {
    uint64_t x = begin;
    for (uint32_t i = 0; i < k; ++i) {
      digits[i] = static_cast<uint32_t>(x % q);
      x /= q;
    }
  }
  std::vector<std::vector<uint32_t>> partial(k + 1, std::vector<uint32_t>(dim, 0));
  for (uint32_t i = k; i-- > 0;) {
    const auto& row = scaled[static_cast<size_t>(i) * q + digits[i]];
    for (uint32_t j = 0; j < dim; ++j) partial[i][j] = f.add(partial[i + 1][j], row[j]);
  }
  for (uint64_t idx = begin; idx < end; ++idx) {
    fn(partial[0]);
    if (idx + 1 == end) break;
    uint32_t lvl = 0;
    while (++digits[lvl] == q) digits[lvl++] = 0;
    for (uint32_t i = lvl + 1; i-- > 0;) {
      const auto& row = scaled[static_cast<size_t>(i) * q + digits[i]];
      for (uint32_t j = 0; j < dim; ++j) partial[i][j] = f.add(partial[i + 1][j], row[j]);
    }
  }
}

namespace {

struct MinMax {
  uint32_t min_nonzero = UINT32_MAX;
  uint32_t max = 0;
  static MinMax merge(MinMax a, MinMax b) {
    return MinMax{std::min(a.min_nonzero, b.min_nonzero), std::max(a.max, b.max)};
  }
};

}  // namespace

DistanceInvariants distance_invariants(const LinearCode& c) {
  Fq f = c.fq();
  uint64_t total = sweep_size(f.size(), c.k(), "minimum distance sweep");
  auto chunk = [&](uint64_t b, uint64_t e) {
    MinMax mm;
    std::vector<uint32_t> scratch;
    sweep_span(f, c.basis_flat(), b, e, [&](std::span<const uint32_t> flat) {
      uint32_t w = srk_flat(f, c.shape(), flat, scratch);
      if (w > 0 && w < mm.min_nonzero) mm.min_nonzero = w;
      if (w > mm.max) mm.max = w;
    });
    return mm;
  };
  MinMax mm = parallel_reduce(total, config().workers, MinMax{}, chunk,
                              [](MinMax a, MinMax b) { return MinMax::merge(a, b); });
  DistanceInvariants out;
  out.maxsrk = mm.max;
  if (c.k() > 0) out.d = mm.min_nonzero;
  return out;
}

uint32_t min_distance(const LinearCode& c) {
  auto inv = distance_invariants(c);
  if (!inv.d) throw std::domain_error("minimum distance of the zero code is undefined");
  return *inv.d;
}

uint32_t covering_radius(const LinearCode& c) {
  Fq f = c.fq();
  const AmbientShape& shape = c.shape();
  const uint32_t dim = shape.dim();
  // coset representatives: zero out the pivot coordinates of the RREF basis
  std::vector<uint32_t> pivots;
  {
    const Matrix& b = c.basis_flat();
    for (uint32_t i = 0, col = 0; i < b.rows; ++i) {
      while (b.at(i, col) == 0) ++col;
      pivots.push_back(col);
    }
  }
  std::vector<uint32_t> free_cols;
  {
    std::vector<bool> is_piv(dim, false);
    for (uint32_t p : pivots) is_piv[p] = true;
    for (uint32_t j = 0; j < dim; ++j)
      if (!is_piv[j]) free_cols.push_back(j);
  }
  uint64_t reps = sweep_size(f.size(), static_cast<uint32_t>(free_cols.size()),
                             "covering radius coset sweep");
  uint64_t per_coset = sweep_size(f.size(), c.k(), "covering radius codeword sweep");
  // total work is one srk per ambient element
  sweep_size(f.size(), dim, "covering radius total sweep");
  const uint32_t q = f.size();
  auto chunk = [&](uint64_t b, uint64_t e) {
    uint32_t worst = 0;
    std::vector<uint32_t> rep(dim, 0), diff(dim), scratch;
    for (uint64_t idx = b; idx < e; ++idx) {
      uint64_t x = idx;
      std::fill(rep.begin(), rep.end(), 0);
      for (uint32_t fc : free_cols) {
        rep[fc] = static_cast<uint32_t>(x % q);
        x /= q;
      }
      uint32_t best = UINT32_MAX;
      sweep_span(f, c.basis_flat(), 0, per_coset, [&](std::span<const uint32_t> cw) {
        for (uint32_t j = 0; j < dim; ++j) diff[j] = f.sub(rep[j], cw[j]);
        uint32_t w = srk_flat(f, shape, diff, scratch);
        if (w < best) best = w;
      });
      if (best > worst) worst = best;
    }
    return worst;
  };
  return parallel_reduce(reps, config().workers, 0u, chunk,
                         [](uint32_t a, uint32_t b) { return std::max(a, b); });
}

Matrix rowsupport_flat_basis(const AmbientShape& shape, const SupportElem& L) {
  uint32_t rows = 0;
  for (uint32_t i = 0; i < shape.ell(); ++i) rows += shape.m(i) * L.spaces[i].rows;
  Matrix out(rows, shape.dim());
  uint32_t r = 0;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    const Matrix& ls = L.spaces[i];
    for (uint32_t v = 0; v < ls.rows; ++v)
      for (uint32_t row = 0; row < shape.m(i); ++row) {
        for (uint32_t col = 0; col < shape.n(i); ++col)
          out.at(r, shape.flat_offset(i) + row * shape.n(i) + col) = ls.at(v, col);
        ++r;
      }
  }
  return out;
}

LinearCode subcode_supported(const LinearCode& c, const SupportElem& L) {
  if (L.spaces.size() != c.shape().ell()) throw std::invalid_argument("support shape mismatch");
  Matrix vl = rowsupport_flat_basis(c.shape(), L);
  return LinearCode(c.field(), c.shape(), space_intersection(c.fq(), c.basis_flat(), vl));
}

SupportElem code_support(const LinearCode& c) {
  Fq f = c.fq();
  SupportElem s = zero_support(c.shape());
  for (uint32_t i = 0; i < c.k(); ++i)
    s = support_join(f, s, support_of(f, c.shape(), c.basis_word(i)));
  return s;
}

uint32_t code_weight(const LinearCode& c) {
  // smallest enclosing product of per-block optimal anticodes: per block the
  // row-support family needs the joined row space, the column-support family
  // (square blocks only) the joined column space
  Fq f = c.fq();
  const AmbientShape& shape = c.shape();
  uint32_t total = 0;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    Matrix rows_stack(0, shape.n(i)), cols_stack(0, shape.m(i));
    for (uint32_t b = 0; b < c.k(); ++b) {
      Codeword w = c.basis_word(b);
      rows_stack = mat_stack(rows_stack, w.blocks[i]);
      if (shape.m(i) == shape.n(i)) cols_stack = mat_stack(cols_stack, mat_transpose(w.blocks[i]));
    }
    uint32_t t = mat_rank(f, rows_stack);
    if (shape.m(i) == shape.n(i)) t = std::min(t, mat_rank(f, cols_stack));
    total += t;
  }
  return total;
}

// --- isometries ------------------------------------------------------------------

SumRankIsometry identity_isometry(const AmbientShape& shape) {
  SumRankIsometry phi;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    phi.sigma.push_back(i);
    phi.A.push_back(Matrix::identity(shape.m(i)));
    phi.B.push_back(Matrix::identity(shape.n(i)));
    phi.transpose.push_back(false);
  }
  return phi;
}

namespace {

Matrix random_invertible(Fq f, uint32_t n, std::mt19937& rng) {
  while (true) {
    Matrix m(n, n);
    for (auto& v : m.a) v = rng() % f.size();
    if (mat_rank(f, m) == n) return m;
  }
}

}  // namespace

SumRankIsometry random_isometry(const AmbientShape& shape, Fq f, std::mt19937& rng) {
  SumRankIsometry phi;
  // random permutation within classes of equal (m, n)
  std::vector<uint32_t> sigma(shape.ell());
  std::vector<uint32_t> order(shape.ell());
  for (uint32_t i = 0; i < shape.ell(); ++i) order[i] = i;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    std::vector<uint32_t> cls;
    for (uint32_t j = 0; j < shape.ell(); ++j)
      if (shape.m(j) == shape.m(i) && shape.n(j) == shape.n(i)) cls.push_back(j);
    sigma[i] = cls[rng() % cls.size()];
  }
  // resolve collisions: restart until sigma is a permutation
  while (true) {
    std::vector<bool> seen(shape.ell(), false);
    bool ok = true;
    for (uint32_t v : sigma) {
      if (seen[v]) {
        ok = false;
        break;
      }
      seen[v] = true;
    }
    if (ok) break;
    for (uint32_t i = 0; i < shape.ell(); ++i) {
      std::vector<uint32_t> cls;
      for (uint32_t j = 0; j < shape.ell(); ++j)
        if (shape.m(j) == shape.m(i) && shape.n(j) == shape.n(i)) cls.push_back(j);
      sigma[i] = cls[rng() % cls.size()];
    }
  }
  phi.sigma = sigma;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    phi.A.push_back(random_invertible(f, shape.m(i), rng));
    phi.B.push_back(random_invertible(f, shape.n(i), rng));
    phi.transpose.push_back(shape.m(i) == shape.n(i) && (rng() & 1));
  }
  return phi;
}

Codeword apply_isometry_word(const SumRankIsometry& phi, const AmbientShape& shape, Fq f,
                             const Codeword& c) {
  Codeword out;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    Matrix x = c.blocks[phi.sigma[i]];
    if (phi.transpose[i]) x = mat_transpose(x);
    out.blocks.push_back(mat_mul(f, phi.A[i], mat_mul(f, x, phi.B[i])));
  }
  return out;
}

LinearCode apply_isometry(const SumRankIsometry& phi, const LinearCode& c) {
  const AmbientShape& shape = c.shape();
  if (phi.sigma.size() != shape.ell()) throw std::invalid_argument("isometry shape mismatch");
  Fq f = c.fq();
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    uint32_t j = phi.sigma[i];
    if (shape.m(j) != shape.m(i) || shape.n(j) != shape.n(i))
      throw std::invalid_argument("isometry permutes blocks of different sizes");
    if (phi.transpose[i] && shape.m(i) != shape.n(i))
      throw std::invalid_argument("transpose flag on a non-square block");
    if (phi.A[i].rows != shape.m(i) || mat_rank(f, phi.A[i]) != shape.m(i) ||
        phi.B[i].rows != shape.n(i) || mat_rank(f, phi.B[i]) != shape.n(i))
      throw std::invalid_argument("isometry blocks must be invertible of matching size");
  }
  std::vector<Codeword> gens;
  for (uint32_t i = 0; i < c.k(); ++i)
    gens.push_back(apply_isometry_word(phi, shape, f, c.basis_word(i)));
  return make_code(c.field(), shape, gens);
}

DecodeResult exhaustive_decode(const LinearCode& c, const Codeword& received) {
  check_shape(c.shape(), received);
  Fq f = c.fq();
  auto rec = flatten(c.shape(), received);
  uint64_t total = sweep_size(f.size(), c.k(), "exhaustive decode sweep");
  struct Best {
    uint32_t dist = UINT32_MAX;
    std::vector<std::vector<uint32_t>> words;
  };
  auto chunk = [&](uint64_t b, uint64_t e) {
    Best best;
    std::vector<uint32_t> diff(c.shape().dim()), scratch;
    sweep_span(f, c.basis_flat(), b, e, [&](std::span<const uint32_t> cw) {
      for (uint32_t j = 0; j < diff.size(); ++j) diff[j] = f.sub(rec[j], cw[j]);
      uint32_t w = srk_flat(f, c.shape(), diff, scratch);
      if (w < best.dist) {
        best.dist = w;
        best.words.clear();
      }
      if (w == best.dist) best.words.emplace_back(cw.begin(), cw.end());
    });
    return best;
  };
  Best best = parallel_reduce(total, config().workers, Best{}, chunk, [](Best a, Best b) {
    if (a.dist < b.dist) return a;
    if (b.dist < a.dist) return b;
    for (auto& w : b.words) a.words.push_back(std::move(w));
    return a;
  });
  DecodeResult out;
  out.dist = best.dist;
  for (auto& w : best.words) out.nearest.push_back(unflatten(c.shape(), w));
  return out;
}

// --- flat subspace helpers --------------------------------------------------------

uint32_t dim_sum(Fq f, const Matrix& a, const Matrix& b) { return mat_rank(f, mat_stack(a, b)); }

uint32_t dim_intersection(Fq f, const Matrix& a, const Matrix& b) {
  return mat_rank(f, a) + mat_rank(f, b) - dim_sum(f, a, b);
}

Matrix space_intersection(Fq f, const Matrix& a, const Matrix& b) {
  // Zassenhaus: rref of [a | a; b | 0]; rows with zero left half carry an
  // intersection basis in the right half
  uint32_t n = a.cols;
  Matrix z(a.rows + b.rows, 2 * n);
  for (uint32_t i = 0; i < a.rows; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      z.at(i, j) = a.at(i, j);
      z.at(i, n + j) = a.at(i, j);
    }
  for (uint32_t i = 0; i < b.rows; ++i)
    for (uint32_t j = 0; j < n; ++j) z.at(a.rows + i, j) = b.at(i, j);
  rref_inplace(f, z);
  Matrix out(0, n);
  for (uint32_t i = 0; i < z.rows; ++i) {
    bool left_zero = true;
    for (uint32_t j = 0; j < n && left_zero; ++j) left_zero = z.at(i, j) == 0;
    if (!left_zero) continue;
    bool right_zero = true;
    for (uint32_t j = 0; j < n && right_zero; ++j) right_zero = z.at(i, n + j) == 0;
    if (right_zero) continue;
    Matrix row(1, n);
    for (uint32_t j = 0; j < n; ++j) row.at(0, j) = z.at(i, n + j);
    out = mat_stack(out, row);
  }
  return row_space(f, out);
}

}  // namespace sumrank
