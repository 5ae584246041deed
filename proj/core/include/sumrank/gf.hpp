#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sumrank/config.hpp"

namespace sumrank {

/// Position of an element inside the tower GF(p) < GF(q) < GF(q^m).
enum class Level : uint8_t { Base = 0, Mid = 1, Top = 2 };

/// A field element: its level and its integer code. Codes are the base-p
/// (mid) resp. base-q (top) digit expansions of the polynomial coordinate
/// representation, so files using codes are bit-exact across platforms.
struct Felem {
  Level level = Level::Mid;
  uint32_t code = 0;
  friend bool operator==(const Felem&, const Felem&) = default;
};

enum class FieldOp : uint8_t { Add, Sub, Mul, Div };

namespace detail {

/// One extension step. Elements are integer codes < size; a code is the
/// base-`coeff_size` digit vector of the polynomial representation.
/// Prime layers (deg == 1, no lower layer) use plain modular arithmetic.
class FieldLayer {
 public:
  // prime field Z_p
  explicit FieldLayer(uint32_t p);
  // extension of `down` by a monic irreducible `modulus` (codes over down,
  // low degree first, length deg+1)
  FieldLayer(const FieldLayer* down, std::vector<uint32_t> modulus);

  uint32_t size() const { return size_; }
  uint32_t degree() const { return deg_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  std::vector<uint32_t> to_digits(uint32_t code) const;
  uint32_t from_digits(std::span<const uint32_t> digits) const;

  // polynomial helpers over this layer (coeff codes, low degree first)
  static std::vector<uint32_t> poly_mod(const FieldLayer& f, std::vector<uint32_t> a,
                                        const std::vector<uint32_t>& b);
  static bool poly_irreducible(const FieldLayer& f, const std::vector<uint32_t>& m);
  static std::vector<uint32_t> lowest_irreducible(const FieldLayer& f, uint32_t deg);

 private:
  uint32_t mul_nocache(uint32_t a, uint32_t b) const;
  void build_tables();

  const FieldLayer* down_ = nullptr;
  uint32_t coeff_size_ = 0;
  uint32_t deg_ = 1;
  uint32_t size_ = 0;
  std::vector<uint32_t> modulus_;

  // acceleration; which of these exist depends on size
  std::vector<uint32_t> add_tab_, mul_tab_, inv_tab_;
  std::vector<uint32_t> exp_tab_, log_tab_;
  bool full_tables_ = false;
  bool log_tables_ = false;
};

}  // namespace detail

/// The tower GF(p) < GF(q = p^e) < GF(q^m) with fixed moduli and an ordered
/// basis alpha of GF(q^m) over GF(q). Immutable after construction; all
/// operations are pure, so instances can be shared freely across threads.
class FieldTower {
 public:
  struct Spec {
    uint32_t p = 2, e = 1, m = 1;
    std::vector<uint32_t> modulus_q;   // over GF(p), low degree first; empty = default
    std::vector<uint32_t> modulus_qm;  // over GF(q), low degree first; empty = default
    std::vector<uint32_t> alpha;       // top codes; empty = polynomial basis
  };

  FieldTower(uint32_t p, uint32_t e, uint32_t m) : FieldTower(Spec{p, e, m, {}, {}, {}}) {}
  explicit FieldTower(const Spec& spec);

  // layers hold pointers into their siblings
  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return mid_.size(); }
  uint32_t qm() const { return top_.size(); }
  const std::vector<uint32_t>& modulus_q() const { return mid_.modulus(); }
  const std::vector<uint32_t>& modulus_qm() const { return top_.modulus(); }
  const std::vector<uint32_t>& alpha() const { return alpha_; }

  uint32_t size(Level lv) const;
  uint32_t add(Level lv, uint32_t a, uint32_t b) const { return layer(lv).add(a, b); }
  uint32_t sub(Level lv, uint32_t a, uint32_t b) const { return layer(lv).sub(a, b); }
  uint32_t neg(Level lv, uint32_t a) const { return layer(lv).neg(a); }
  uint32_t mul(Level lv, uint32_t a, uint32_t b) const { return layer(lv).mul(a, b); }
  uint32_t inv(Level lv, uint32_t a) const;
  uint32_t div(Level lv, uint32_t a, uint32_t b) const;
  uint32_t pow(Level lv, uint32_t a, uint64_t e) const { return layer(lv).pow(a, e); }

  /// Checked elementwise operation on Felem values (same level required).
  Felem arith(Felem a, Felem b, FieldOp op) const;

  // --- structure maps of the extension GF(q^m)/GF(q) ----------------------

  /// sigma^k with sigma(a) = a^q; sigma^m is the identity.
  uint32_t frobenius(uint32_t a, uint64_t k = 1) const;
  /// a^{(q^m-1)/(q-1)}, returned as a mid-level code.
  uint32_t norm(uint32_t a) const;
  /// a + a^q + ... + a^{q^{m-1}}, returned as a mid-level code.
  uint32_t trace(uint32_t a) const;

  /// GF(q) -> GF(q^m) as the constants of the quotient ring.
  uint32_t mid_to_top(uint32_t c) const { return c; }
  /// Inverse of mid_to_top; returns false if the element is not in GF(q).
  bool top_to_mid(uint32_t a, uint32_t* out) const;

  /// Coordinates of a top element in the ordered basis alpha (mid codes).
  std::vector<uint32_t> coords(uint32_t a) const;
  uint32_t from_coords(std::span<const uint32_t> x) const;

  // --- codecs --------------------------------------------------------------

  /// Digit expansion of a code: base p for mid level, base q for top level.
  std::vector<uint32_t> elem_decode(Felem a) const;
  /// Inverse of elem_decode; validates ranges.
  Felem elem_encode(Level lv, std::span<const uint32_t> digits) const;
  Felem elem_from_int(Level lv, uint64_t value) const;

  const detail::FieldLayer& base_layer() const { return base_; }
  const detail::FieldLayer& mid_layer() const { return mid_; }
  const detail::FieldLayer& top_layer() const { return top_; }

 private:
  const detail::FieldLayer& layer(Level lv) const;

  uint32_t p_, e_, m_;
  detail::FieldLayer base_, mid_, top_;
  std::vector<uint32_t> alpha_;
  // column j = mid digit vector of alpha_j; alpha_inv_ is its inverse, used
  // to turn polynomial digits into alpha coordinates
  std::vector<uint32_t> alpha_inv_;  // m x m, row major, mid codes
};

using FieldTowerPtr = std::shared_ptr<const FieldTower>;

FieldTowerPtr make_tower(uint32_t p, uint32_t e, uint32_t m);
FieldTowerPtr make_tower(const FieldTower::Spec& spec);

}  // namespace sumrank
