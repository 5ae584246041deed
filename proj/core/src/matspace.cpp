#include "sumrank/matspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumrank {

Matrix mat_add(Fq f, const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.add(out.a[i], y.a[i]);
  return out;
}

Matrix mat_sub(Fq f, const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.sub(out.a[i], y.a[i]);
  return out;
}

Matrix mat_mul(Fq f, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(x.rows, y.cols);
  for (uint32_t i = 0; i < x.rows; ++i)
    for (uint32_t k = 0; k < x.cols; ++k) {
      uint32_t v = x.at(i, k);
      if (v == 0) continue;
      for (uint32_t j = 0; j < y.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
    }
  return out;
}

Matrix mat_transpose(const Matrix& x) {
  Matrix out(x.cols, x.rows);
  for (uint32_t i = 0; i < x.rows; ++i)
    for (uint32_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

Matrix mat_stack(const Matrix& top, const Matrix& bottom) {
  if (top.rows == 0) return bottom;
  if (bottom.rows == 0) return top;
  if (top.cols != bottom.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), out.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + top.a.size());
  return out;
}

uint32_t rref_inplace(Fq f, Matrix& m) {
  uint32_t rank = 0;
  for (uint32_t col = 0; col < m.cols && rank < m.rows; ++col) {
    uint32_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint32_t d = f.inv(m.at(rank, col));
    if (d != 1)
      for (uint32_t j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), d);
    for (uint32_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      uint32_t c = m.at(r, col);
      if (c == 0) continue;
      for (uint32_t j = col; j < m.cols; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

uint32_t mat_rank(Fq f, Matrix m) { return rref_inplace(f, m); }

Matrix row_space(Fq f, Matrix m) {
  uint32_t r = rref_inplace(f, m);
  m.rows = r;
  m.a.resize(static_cast<size_t>(r) * m.cols);
  return m;
}

Matrix null_space(Fq f, const Matrix& m) {
  Matrix r = m;
  uint32_t rank = rref_inplace(f, r);
  std::vector<uint32_t> pivots;
  std::vector<bool> is_pivot(m.cols, false);
  for (uint32_t i = 0, col = 0; i < rank; ++i) {
    while (r.at(i, col) == 0) ++col;
    pivots.push_back(col);
    is_pivot[col] = true;
  }
  Matrix out(m.cols - rank, m.cols);
  uint32_t row = 0;
  for (uint32_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(row, free) = 1;
    for (uint32_t i = 0; i < rank; ++i) out.at(row, pivots[i]) = f.neg(r.at(i, free));
    ++row;
  }
  return row_space(f, std::move(out));
}

Matrix mat_inverse(Fq f, Matrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  uint32_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  rref_inplace(f, aug);
  // invertible iff the left block reduced to the identity
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (aug.at(i, j) != (i == j ? 1u : 0u)) throw std::domain_error("singular matrix");
  Matrix out(n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

uint32_t intersection_dim(Fq f, const Matrix& x, const Matrix& y) {
  uint32_t rx = mat_rank(f, x), ry = mat_rank(f, y);
  uint32_t rsum = mat_rank(f, mat_stack(x, y));
  return rx + ry - rsum;
}

// --- AmbientShape -------------------------------------------------------------

AmbientShape::AmbientShape(std::vector<uint32_t> m_list, std::vector<uint32_t> n_list)
    : m_list_(std::move(m_list)), n_list_(std::move(n_list)) {
  if (m_list_.empty() || m_list_.size() != n_list_.size())
    throw std::invalid_argument("shape needs matching nonempty m and n lists");
  for (size_t i = 0; i < m_list_.size(); ++i) {
    if (m_list_[i] == 0 || n_list_[i] == 0)
      throw std::invalid_argument("block dimensions must be positive");
    if (n_list_[i] > m_list_[i])
      throw std::invalid_argument("blocks must satisfy n_i <= m_i (use normalized())");
    if (i > 0 && m_list_[i] > m_list_[i - 1])
      throw std::invalid_argument("blocks must be ordered by m descending (use normalized())");
  }
  flat_off_.resize(m_list_.size());
  for (size_t i = 0; i < m_list_.size(); ++i) {
    flat_off_[i] = dim_;
    dim_ += m_list_[i] * n_list_[i];
    n_total_ += n_list_[i];
    m_bar_ += m_list_[i];
  }
}

std::pair<AmbientShape, std::vector<uint32_t>> AmbientShape::normalized(
    std::vector<uint32_t> m_list, std::vector<uint32_t> n_list) {
  std::vector<uint32_t> perm(m_list.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](uint32_t a, uint32_t b) { return m_list[a] > m_list[b]; });
  std::vector<uint32_t> ms, ns;
  for (uint32_t i : perm) {
    ms.push_back(m_list[i]);
    ns.push_back(n_list[i]);
  }
  return {AmbientShape(std::move(ms), std::move(ns)), std::move(perm)};
}

std::pair<uint32_t, uint32_t> AmbientShape::locate_column(uint32_t col) const {
  for (uint32_t i = 0; i < ell(); ++i) {
    if (col < n_list_[i]) return {i, col};
    col -= n_list_[i];
  }
  throw std::out_of_range("column index out of range");
}

bool AmbientShape::all_m_equal() const { return m_list_.front() == m_list_.back(); }

// --- codewords ----------------------------------------------------------------

Codeword zero_codeword(const AmbientShape& shape) {
  Codeword c;
  for (uint32_t i = 0; i < shape.ell(); ++i) c.blocks.emplace_back(shape.m(i), shape.n(i));
  return c;
}

void check_shape(const AmbientShape& shape, const Codeword& c) {
  if (c.blocks.size() != shape.ell()) throw std::invalid_argument("codeword shape mismatch");
  for (uint32_t i = 0; i < shape.ell(); ++i)
    if (c.blocks[i].rows != shape.m(i) || c.blocks[i].cols != shape.n(i))
      throw std::invalid_argument("codeword shape mismatch");
}

uint32_t srk(Fq f, const Codeword& c) {
  uint32_t s = 0;
  for (const auto& b : c.blocks) s += mat_rank(f, b);
  return s;
}

uint32_t sr_distance(Fq f, const AmbientShape& shape, const Codeword& c, const Codeword& d) {
  check_shape(shape, c);
  check_shape(shape, d);
  return srk(f, cw_sub(f, c, d));
}

Codeword cw_add(Fq f, const Codeword& x, const Codeword& y) {
  Codeword out;
  for (size_t i = 0; i < x.blocks.size(); ++i)
    out.blocks.push_back(mat_add(f, x.blocks[i], y.blocks[i]));
  return out;
}

Codeword cw_sub(Fq f, const Codeword& x, const Codeword& y) {
  Codeword out;
  for (size_t i = 0; i < x.blocks.size(); ++i)
    out.blocks.push_back(mat_sub(f, x.blocks[i], y.blocks[i]));
  return out;
}

Codeword cw_scale(Fq f, uint32_t lambda, const Codeword& x) {
  Codeword out = x;
  for (auto& b : out.blocks)
    for (auto& v : b.a) v = f.mul(lambda, v);
  return out;
}

uint32_t trace_form(Fq f, const AmbientShape& shape, const Codeword& d, const Codeword& c) {
  check_shape(shape, d);
  check_shape(shape, c);
  // tr(D_i C_i^t) expands to the entrywise dot product
  uint32_t s = 0;
  for (size_t i = 0; i < d.blocks.size(); ++i)
    for (size_t j = 0; j < d.blocks[i].a.size(); ++j)
      s = f.add(s, f.mul(d.blocks[i].a[j], c.blocks[i].a[j]));
  return s;
}

std::vector<uint32_t> flatten(const AmbientShape& shape, const Codeword& c) {
  std::vector<uint32_t> v;
  v.reserve(shape.dim());
  for (uint32_t i = 0; i < shape.ell(); ++i)
    v.insert(v.end(), c.blocks[i].a.begin(), c.blocks[i].a.end());
  return v;
}

Codeword unflatten(const AmbientShape& shape, std::span<const uint32_t> v) {
  if (v.size() != shape.dim()) throw std::invalid_argument("flat vector has wrong length");
  Codeword c;
  size_t off = 0;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    size_t len = static_cast<size_t>(shape.m(i)) * shape.n(i);
    c.blocks.emplace_back(shape.m(i), shape.n(i),
                          std::vector<uint32_t>(v.begin() + off, v.begin() + off + len));
    off += len;
  }
  return c;
}

Matrix embed_block_diag(const AmbientShape& shape, const Codeword& c) {
  check_shape(shape, c);
  Matrix out(shape.m_bar(), shape.n_total());
  uint32_t ro = 0, co = 0;
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    for (uint32_t r = 0; r < shape.m(i); ++r)
      for (uint32_t j = 0; j < shape.n(i); ++j) out.at(ro + r, co + j) = c.blocks[i].at(r, j);
    ro += shape.m(i);
    co += shape.n(i);
  }
  return out;
}

// --- supports -----------------------------------------------------------------

std::vector<uint32_t> SupportElem::dim_profile() const {
  std::vector<uint32_t> p;
  p.reserve(spaces.size());
  for (const auto& s : spaces) p.push_back(s.rows);
  return p;
}

uint32_t SupportElem::total_dim() const {
  uint32_t d = 0;
  for (const auto& s : spaces) d += s.rows;
  return d;
}

SupportElem support_of(Fq f, const AmbientShape& shape, const Codeword& c) {
  check_shape(shape, c);
  SupportElem s;
  for (const auto& b : c.blocks) s.spaces.push_back(row_space(f, b));
  return s;
}

SupportElem zero_support(const AmbientShape& shape) {
  SupportElem s;
  for (uint32_t i = 0; i < shape.ell(); ++i) s.spaces.push_back(Matrix(0, shape.n(i)));
  return s;
}

SupportElem ambient_support(const AmbientShape& shape) {
  SupportElem s;
  for (uint32_t i = 0; i < shape.ell(); ++i) s.spaces.push_back(Matrix::identity(shape.n(i)));
  return s;
}

SupportElem support_join(Fq f, const SupportElem& x, const SupportElem& y) {
  SupportElem out;
  for (size_t i = 0; i < x.spaces.size(); ++i)
    out.spaces.push_back(row_space(f, mat_stack(x.spaces[i], y.spaces[i])));
  return out;
}

bool support_contained(Fq f, const SupportElem& inner, const SupportElem& outer) {
  for (size_t i = 0; i < inner.spaces.size(); ++i) {
    if (inner.spaces[i].rows == 0) continue;
    if (mat_rank(f, mat_stack(inner.spaces[i], outer.spaces[i])) != outer.spaces[i].rows)
      return false;
  }
  return true;
}

// --- subspace enumeration -------------------------------------------------------

std::vector<Matrix> subspaces_of(Fq f, uint32_t n, uint32_t t) {
  std::vector<Matrix> out;
  if (t > n) return out;
  if (t == 0) {
    out.push_back(Matrix(0, n));
    return out;
  }
  uint64_t universe = 1;
  for (uint32_t i = 0; i < n; ++i) universe *= f.size();
  require_ceiling(universe, config().max_block_vectors, "subspace enumeration of F_q^" + std::to_string(n),
                  "--ceiling-block");
  // pivot columns in lexicographic order
  std::vector<uint32_t> piv(t);
  for (uint32_t i = 0; i < t; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (uint32_t p : piv) is_piv[p] = true;
    // free cells: (row i, col j) with j > piv[i] and j not a pivot
    std::vector<std::pair<uint32_t, uint32_t>> free_cells;
    for (uint32_t i = 0; i < t; ++i)
      for (uint32_t j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_cells.emplace_back(i, j);
    std::vector<uint32_t> digits(free_cells.size(), 0);
    while (true) {
      Matrix m(t, n);
      for (uint32_t i = 0; i < t; ++i) m.at(i, piv[i]) = 1;
      for (size_t c = 0; c < free_cells.size(); ++c)
        m.at(free_cells[c].first, free_cells[c].second) = digits[c];
      out.push_back(std::move(m));
      size_t c = 0;
      while (c < digits.size() && ++digits[c] == f.size()) digits[c++] = 0;
      if (c == digits.size()) break;
      if (digits.empty()) break;
    }
    // next pivot combination
    int i = static_cast<int>(t) - 1;
    while (i >= 0 && piv[i] == n - t + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (uint32_t j = i + 1; j < t; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

uint64_t count_subspaces(uint64_t q, uint32_t n, uint32_t t) {
  if (t > n) return 0;
  // [n t]_q = prod (q^{n-i} - 1) / (q^{t-i} - 1)
  unsigned __int128 num = 1, den = 1;
  for (uint32_t i = 0; i < t; ++i) {
    uint64_t qa = 1, qb = 1;
    for (uint32_t j = 0; j < n - i; ++j) qa *= q;
    for (uint32_t j = 0; j < t - i; ++j) qb *= q;
    num *= (qa - 1);
    den *= (qb - 1);
    if (num > (static_cast<unsigned __int128>(1) << 100))
      throw CeilingExceeded("Gaussian binomial overflows machine range");
  }
  return static_cast<uint64_t>(num / den);
}

uint64_t count_all_subspaces(uint64_t q, uint32_t n) {
  uint64_t s = 0;
  for (uint32_t t = 0; t <= n; ++t) s += count_subspaces(q, n, t);
  return s;
}

void for_each_support(Fq f, const AmbientShape& shape,
                      const std::optional<std::vector<uint32_t>>& dim_profile,
                      const std::function<void(const SupportElem&)>& fn) {
  uint64_t total = 1;
  std::vector<std::vector<Matrix>> block_choices(shape.ell());
  for (uint32_t i = 0; i < shape.ell(); ++i) {
    if (dim_profile) {
      if (dim_profile->size() != shape.ell()) throw std::invalid_argument("bad dim profile");
      uint32_t t = (*dim_profile)[i];
      if (t > shape.n(i)) return;  // empty
      block_choices[i] = subspaces_of(f, shape.n(i), t);
    } else {
      for (uint32_t t = 0; t <= shape.n(i); ++t) {
        auto v = subspaces_of(f, shape.n(i), t);
        block_choices[i].insert(block_choices[i].end(), v.begin(), v.end());
      }
    }
    total *= block_choices[i].size();
    require_ceiling(total, config().max_supports, "support lattice enumeration",
                    "--ceiling-supports");
  }
  SupportElem cur;
  cur.spaces.resize(shape.ell());
  std::vector<size_t> idx(shape.ell(), 0);
  for (uint32_t i = 0; i < shape.ell(); ++i) cur.spaces[i] = block_choices[i][0];
  while (true) {
    fn(cur);
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == block_choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
    for (size_t j = 0; j <= i; ++j) cur.spaces[j] = block_choices[j][idx[j]];
  }
}

uint64_t support_lattice_size(uint64_t q, const AmbientShape& shape) {
  uint64_t total = 1;
  for (uint32_t i = 0; i < shape.ell(); ++i) total *= count_all_subspaces(q, shape.n(i));
  return total;
}

}  // namespace sumrank
