#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sumrank/gf.hpp"

namespace sumrank {

/// Field view: one level of a tower. Cheap to copy, pass by value.
struct Fq {
  const FieldTower* tw = nullptr;
  Level lvl = Level::Mid;

  uint32_t size() const { return tw->size(lvl); }
  uint32_t add(uint32_t a, uint32_t b) const { return tw->add(lvl, a, b); }
  uint32_t sub(uint32_t a, uint32_t b) const { return tw->sub(lvl, a, b); }
  uint32_t neg(uint32_t a) const { return tw->neg(lvl, a); }
  uint32_t mul(uint32_t a, uint32_t b) const { return tw->mul(lvl, a, b); }
  uint32_t inv(uint32_t a) const { return tw->inv(lvl, a); }
  uint32_t div(uint32_t a, uint32_t b) const { return tw->div(lvl, a, b); }
};

inline Fq mid_field(const FieldTower& t) { return Fq{&t, Level::Mid}; }
inline Fq top_field(const FieldTower& t) { return Fq{&t, Level::Top}; }

/// Dense row-major matrix of field element codes. The field it lives over
/// is supplied to each operation, not stored.
struct Matrix {
  uint32_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  Matrix() = default;
  Matrix(uint32_t r, uint32_t c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  Matrix(uint32_t r, uint32_t c, std::vector<uint32_t> entries)
      : rows(r), cols(c), a(std::move(entries)) {}

  uint32_t& at(uint32_t r, uint32_t c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t at(uint32_t r, uint32_t c) const { return a[static_cast<size_t>(r) * cols + c]; }
  bool is_zero() const {
    for (uint32_t x : a)
      if (x) return false;
    return true;
  }
  static Matrix identity(uint32_t n) {
    Matrix m(n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& x, const Matrix& y) {
    if (auto c = x.rows <=> y.rows; c != 0) return c;
    if (auto c = x.cols <=> y.cols; c != 0) return c;
    return x.a <=> y.a;
  }
};

Matrix mat_add(Fq f, const Matrix& x, const Matrix& y);
Matrix mat_sub(Fq f, const Matrix& x, const Matrix& y);
Matrix mat_mul(Fq f, const Matrix& x, const Matrix& y);
Matrix mat_transpose(const Matrix& x);
Matrix mat_stack(const Matrix& top, const Matrix& bottom);

/// In-place reduced row echelon form; returns the rank.
uint32_t rref_inplace(Fq f, Matrix& m);
uint32_t mat_rank(Fq f, Matrix m);
/// RREF basis of the row space, zero rows dropped (canonical subspace form).
Matrix row_space(Fq f, Matrix m);
/// Canonical RREF basis of {v : m v^T = 0}.
Matrix null_space(Fq f, const Matrix& m);
/// Invert a square matrix; throws if singular.
Matrix mat_inverse(Fq f, Matrix m);
/// dim(rowsp(x) & rowsp(y)) for canonical or raw bases.
uint32_t intersection_dim(Fq f, const Matrix& x, const Matrix& y);

/// The ambient space prod_i F_q^{m_i x n_i}. Requires m_1 >= ... >= m_ell and
/// n_i <= m_i throughout; use `normalized` to sort arbitrary block lists.
class AmbientShape {
 public:
  AmbientShape(std::vector<uint32_t> m_list, std::vector<uint32_t> n_list);

  /// Sorts blocks by m descending (stable), returning the shape and the
  /// permutation used: block i of the result is block perm[i] of the input.
  static std::pair<AmbientShape, std::vector<uint32_t>> normalized(
      std::vector<uint32_t> m_list, std::vector<uint32_t> n_list);

  uint32_t ell() const { return static_cast<uint32_t>(m_list_.size()); }
  const std::vector<uint32_t>& m_list() const { return m_list_; }
  const std::vector<uint32_t>& n_list() const { return n_list_; }
  uint32_t m(uint32_t i) const { return m_list_[i]; }
  uint32_t n(uint32_t i) const { return n_list_[i]; }
  uint32_t n_total() const { return n_total_; }
  uint32_t m_bar() const { return m_bar_; }
  /// Dimension of the ambient space over GF(q).
  uint32_t dim() const { return dim_; }
  /// Offset of block i in the flattened coordinate order.
  uint32_t flat_offset(uint32_t i) const { return flat_off_[i]; }
  /// Global column index (0-based) -> (block, local column).
  std::pair<uint32_t, uint32_t> locate_column(uint32_t col) const;
  bool all_m_equal() const;

  friend bool operator==(const AmbientShape&, const AmbientShape&) = default;

 private:
  std::vector<uint32_t> m_list_, n_list_;
  std::vector<uint32_t> flat_off_;
  uint32_t n_total_ = 0, m_bar_ = 0, dim_ = 0;
};

/// An element of the ambient space: one matrix per block.
struct Codeword {
  std::vector<Matrix> blocks;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

Codeword zero_codeword(const AmbientShape& shape);
void check_shape(const AmbientShape& shape, const Codeword& c);

uint32_t srk(Fq f, const Codeword& c);
uint32_t sr_distance(Fq f, const AmbientShape& shape, const Codeword& c, const Codeword& d);
Codeword cw_add(Fq f, const Codeword& x, const Codeword& y);
Codeword cw_sub(Fq f, const Codeword& x, const Codeword& y);
Codeword cw_scale(Fq f, uint32_t lambda, const Codeword& x);

/// The non-degenerate symmetric bilinear form sum_i tr(D_i C_i^t).
uint32_t trace_form(Fq f, const AmbientShape& shape, const Codeword& d, const Codeword& c);

/// Flattened coordinates: blocks in order, each row-major.
std::vector<uint32_t> flatten(const AmbientShape& shape, const Codeword& c);
Codeword unflatten(const AmbientShape& shape, std::span<const uint32_t> v);

/// Block-diagonal embedding into F_q^{m_bar x n}; rank equals srk.
Matrix embed_block_diag(const AmbientShape& shape, const Codeword& c);

/// An element of the support lattice: one subspace of F_q^{n_i} per block,
/// stored as an RREF basis with no zero rows (canonical, hence comparable).
struct SupportElem {
  std::vector<Matrix> spaces;

  std::vector<uint32_t> dim_profile() const;
  uint32_t total_dim() const;
  friend bool operator==(const SupportElem&, const SupportElem&) = default;
  friend auto operator<=>(const SupportElem& x, const SupportElem& y) {
    return x.spaces <=> y.spaces;
  }
};

SupportElem support_of(Fq f, const AmbientShape& shape, const Codeword& c);
SupportElem zero_support(const AmbientShape& shape);
SupportElem ambient_support(const AmbientShape& shape);
/// Componentwise sum of subspaces (the lattice join).
SupportElem support_join(Fq f, const SupportElem& x, const SupportElem& y);
bool support_contained(Fq f, const SupportElem& inner, const SupportElem& outer);

/// All t-dimensional subspaces of F_q^n as RREF bases, in a fixed order
/// (pivot sets lexicographic, then free entries as an odometer).
std::vector<Matrix> subspaces_of(Fq f, uint32_t n, uint32_t t);
/// Gaussian binomial [n t]_q as a machine integer (throws CeilingExceeded on
/// overflow); the exact big-integer version lives with the distributions.
uint64_t count_subspaces(uint64_t q, uint32_t n, uint32_t t);
uint64_t count_all_subspaces(uint64_t q, uint32_t n);

/// Enumerates the support lattice, optionally restricted to a fixed
/// dimension profile. Deterministic order; each element exactly once.
void for_each_support(Fq f, const AmbientShape& shape,
                      const std::optional<std::vector<uint32_t>>& dim_profile,
                      const std::function<void(const SupportElem&)>& fn);
uint64_t support_lattice_size(uint64_t q, const AmbientShape& shape);

}  // namespace sumrank
