#include "sumrank/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumrank {
namespace detail {

namespace {
constexpr uint32_t kFullTableMax = 1024;    // add/mul/inv tables: size^2 entries
constexpr uint32_t kLogTableMax = 1 << 16;  // exp/log tables

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

FieldLayer::FieldLayer(uint32_t p) : coeff_size_(p), deg_(1), size_(p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  build_tables();
}

FieldLayer::FieldLayer(const FieldLayer* down, std::vector<uint32_t> modulus)
    : down_(down), coeff_size_(down->size()), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  deg_ = static_cast<uint32_t>(modulus_.size()) - 1;
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (uint32_t c : modulus_)
    if (c >= coeff_size_) throw std::invalid_argument("modulus coefficient out of range");
  uint64_t sz = 1;
  for (uint32_t i = 0; i < deg_; ++i) {
    sz *= coeff_size_;
    if (sz > config().max_field_size)
      throw CeilingExceeded("field size exceeds max_field_size ceiling");
  }
  size_ = static_cast<uint32_t>(sz);
  if (!poly_irreducible(*down_, modulus_)) throw std::invalid_argument("modulus is reducible");
  build_tables();
}

std::vector<uint32_t> FieldLayer::to_digits(uint32_t code) const {
  std::vector<uint32_t> d(deg_);
  for (uint32_t i = 0; i < deg_; ++i) {
    d[i] = code % coeff_size_;
    code /= coeff_size_;
  }
  return d;
}

uint32_t FieldLayer::from_digits(std::span<const uint32_t> digits) const {
  uint64_t code = 0;
  for (size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= coeff_size_) throw std::invalid_argument("digit out of range");
    code = code * coeff_size_ + digits[i];
  }
  return static_cast<uint32_t>(code);
}

uint32_t FieldLayer::add(uint32_t a, uint32_t b) const {
  if (full_tables_) return add_tab_[static_cast<size_t>(a) * size_ + b];
  if (!down_) return (a + b) % size_;
  uint32_t out = 0, shift = 1;
  for (uint32_t i = 0; i < deg_; ++i) {
    out += down_->add(a % coeff_size_, b % coeff_size_) * shift;
    a /= coeff_size_;
    b /= coeff_size_;
    shift *= coeff_size_;
  }
  return out;
}

uint32_t FieldLayer::neg(uint32_t a) const {
  if (!down_) return a == 0 ? 0 : size_ - a;
  uint32_t out = 0, shift = 1;
  for (uint32_t i = 0; i < deg_; ++i) {
    out += down_->neg(a % coeff_size_) * shift;
    a /= coeff_size_;
    shift *= coeff_size_;
  }
  return out;
}

uint32_t FieldLayer::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldLayer::mul_nocache(uint32_t a, uint32_t b) const {
  if (!down_) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % size_);
  std::vector<uint32_t> da = to_digits(a), db = to_digits(b);
  std::vector<uint32_t> r(2 * deg_ - 1, 0);
  for (uint32_t i = 0; i < deg_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < deg_; ++j)
      r[i + j] = down_->add(r[i + j], down_->mul(da[i], db[j]));
  }
  // reduce by the monic modulus: x^deg = -sum modulus[j] x^j
  for (size_t i = r.size(); i-- > deg_;) {
    uint32_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (uint32_t j = 0; j < deg_; ++j)
      r[i - deg_ + j] = down_->sub(r[i - deg_ + j], down_->mul(c, modulus_[j]));
  }
  r.resize(deg_);
  return from_digits(r);
}

uint32_t FieldLayer::mul(uint32_t a, uint32_t b) const {
  if (full_tables_) return mul_tab_[static_cast<size_t>(a) * size_ + b];
  if (log_tables_) {
    if (a == 0 || b == 0) return 0;
    uint64_t s = static_cast<uint64_t>(log_tab_[a]) + log_tab_[b];
    return exp_tab_[s % (size_ - 1)];
  }
  return mul_nocache(a, b);
}

uint32_t FieldLayer::pow(uint32_t a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (log_tables_) {
    uint64_t s = (static_cast<unsigned __int128>(log_tab_[a]) * (e % (size_ - 1))) % (size_ - 1);
    return exp_tab_[s];
  }
  uint32_t acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint32_t FieldLayer::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (full_tables_) return inv_tab_[a];
  if (log_tables_) return exp_tab_[(size_ - 1 - log_tab_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

void FieldLayer::build_tables() {
  if (size_ <= kLogTableMax && size_ > 2) {
    // find a multiplicative generator by checking element order against the
    // prime factors of size-1
    uint32_t n = size_ - 1;
    std::vector<uint32_t> factors;
    {
      uint32_t x = n;
      for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= x; ++d) {
        if (x % d == 0) {
          factors.push_back(d);
          while (x % d == 0) x /= d;
        }
      }
      if (x > 1) factors.push_back(x);
    }
    auto pow_slow = [&](uint32_t a, uint64_t e) {
      uint32_t acc = 1;
      uint32_t base = a;
      while (e) {
        if (e & 1) acc = mul_nocache(acc, base);
        base = mul_nocache(base, base);
        e >>= 1;
      }
      return acc;
    };
    uint32_t gen = 0;
    for (uint32_t g = 1; g < size_; ++g) {
      bool ok = true;
      for (uint32_t f : factors)
        if (pow_slow(g, n / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = g;
        break;
      }
    }
    exp_tab_.resize(n);
    log_tab_.assign(size_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < n; ++i) {
      exp_tab_[i] = cur;
      log_tab_[cur] = i;
      cur = mul_nocache(cur, gen);
    }
    log_tables_ = true;
  }
  if (size_ <= kFullTableMax) {
    add_tab_.resize(static_cast<size_t>(size_) * size_);
    mul_tab_.resize(static_cast<size_t>(size_) * size_);
    inv_tab_.assign(size_, 0);
    for (uint32_t a = 0; a < size_; ++a) {
      for (uint32_t b = 0; b < size_; ++b) {
        add_tab_[static_cast<size_t>(a) * size_ + b] = add(a, b);
        mul_tab_[static_cast<size_t>(a) * size_ + b] =
            log_tables_ ? mul(a, b) : mul_nocache(a, b);
      }
    }
    for (uint32_t a = 1; a < size_; ++a)
      inv_tab_[a] = log_tables_ ? exp_tab_[(size_ - 1 - log_tab_[a]) % (size_ - 1)]
                                : pow(a, size_ - 2);
    full_tables_ = true;
  }
}

// --- polynomial helpers ------------------------------------------------------

std::vector<uint32_t> FieldLayer::poly_mod(const FieldLayer& f, std::vector<uint32_t> a,
                                           const std::vector<uint32_t>& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<uint32_t> d = b;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw std::invalid_argument("polynomial division by zero");
  uint32_t lead_inv = f.inv(d.back());
  while (a.size() >= d.size()) {
    uint32_t c = f.mul(a.back(), lead_inv);
    size_t off = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[off + i] = f.sub(a[off + i], f.mul(c, d[i]));
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool FieldLayer::poly_irreducible(const FieldLayer& f, const std::vector<uint32_t>& m) {
  uint32_t deg = static_cast<uint32_t>(m.size()) - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (uint32_t t = 1; 2 * t <= deg; ++t) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < t; ++i) count *= f.size();
    for (uint64_t c = 0; c < count; ++c) {
      std::vector<uint32_t> g(t + 1);
      uint64_t x = c;
      for (uint32_t i = 0; i < t; ++i) {
        g[i] = static_cast<uint32_t>(x % f.size());
        x /= f.size();
      }
      g[t] = 1;
      if (poly_mod(f, m, g).empty()) return false;
    }
  }
  return true;
}

std::vector<uint32_t> FieldLayer::lowest_irreducible(const FieldLayer& f, uint32_t deg) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < deg; ++i) count *= f.size();
  for (uint64_t c = 0; c < count; ++c) {
    std::vector<uint32_t> m(deg + 1);
    uint64_t x = c;
    for (uint32_t i = 0; i < deg; ++i) {
      m[i] = static_cast<uint32_t>(x % f.size());
      x /= f.size();
    }
    m[deg] = 1;
    if (poly_irreducible(f, m)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace detail

// --- FieldTower --------------------------------------------------------------

namespace {

std::vector<uint32_t> resolve_modulus(const detail::FieldLayer& down,
                                      const std::vector<uint32_t>& given, uint32_t deg) {
  if (given.empty()) return detail::FieldLayer::lowest_irreducible(down, deg);
  if (given.size() != static_cast<size_t>(deg) + 1)
    throw std::invalid_argument("modulus has wrong degree");
  return given;
}

}  // namespace

FieldTower::FieldTower(const Spec& spec)
    : p_(spec.p),
      e_(spec.e),
      m_(spec.m),
      base_(spec.p),
      mid_(&base_, resolve_modulus(base_, spec.modulus_q, spec.e)),
      top_(&mid_, resolve_modulus(mid_, spec.modulus_qm, spec.m)) {
  if (e_ < 1 || m_ < 1) throw std::invalid_argument("extension degrees must be positive");
  if (spec.alpha.empty()) {
    // polynomial basis 1, g, g^2, ... of the class g of x
    alpha_.resize(m_);
    uint64_t c = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      alpha_[i] = static_cast<uint32_t>(c);
      c *= q();
    }
  } else {
    if (spec.alpha.size() != m_) throw std::invalid_argument("alpha must have m elements");
    alpha_ = spec.alpha;
    for (uint32_t a : alpha_)
      if (a >= qm()) throw std::invalid_argument("alpha element out of range");
  }
  // invert the m x m change-of-basis matrix (columns = digit vectors of alpha)
  const uint32_t m = m_;
  std::vector<uint32_t> A(static_cast<size_t>(m) * m), I(static_cast<size_t>(m) * m, 0);
  for (uint32_t j = 0; j < m; ++j) {
    auto dj = top_.to_digits(alpha_[j]);
    for (uint32_t i = 0; i < m; ++i) A[static_cast<size_t>(i) * m + j] = dj[i];
  }
  for (uint32_t i = 0; i < m; ++i) I[static_cast<size_t>(i) * m + i] = 1;
  for (uint32_t col = 0, row = 0; col < m; ++col, ++row) {
    uint32_t piv = row;
    while (piv < m && A[static_cast<size_t>(piv) * m + col] == 0) ++piv;
    if (piv == m) throw std::invalid_argument("alpha is not GF(q)-linearly independent");
    if (piv != row)
      for (uint32_t j = 0; j < m; ++j) {
        std::swap(A[static_cast<size_t>(piv) * m + j], A[static_cast<size_t>(row) * m + j]);
        std::swap(I[static_cast<size_t>(piv) * m + j], I[static_cast<size_t>(row) * m + j]);
      }
    uint32_t d = mid_.inv(A[static_cast<size_t>(row) * m + col]);
    for (uint32_t j = 0; j < m; ++j) {
      A[static_cast<size_t>(row) * m + j] = mid_.mul(A[static_cast<size_t>(row) * m + j], d);
      I[static_cast<size_t>(row) * m + j] = mid_.mul(I[static_cast<size_t>(row) * m + j], d);
    }
    for (uint32_t r = 0; r < m; ++r) {
      if (r == row) continue;
      uint32_t c = A[static_cast<size_t>(r) * m + col];
      if (c == 0) continue;
      for (uint32_t j = 0; j < m; ++j) {
        A[static_cast<size_t>(r) * m + j] =
            mid_.sub(A[static_cast<size_t>(r) * m + j], mid_.mul(c, A[static_cast<size_t>(row) * m + j]));
        I[static_cast<size_t>(r) * m + j] =
            mid_.sub(I[static_cast<size_t>(r) * m + j], mid_.mul(c, I[static_cast<size_t>(row) * m + j]));
      }
    }
  }
  alpha_inv_ = std::move(I);
}

const detail::FieldLayer& FieldTower::layer(Level lv) const {
  switch (lv) {
    case Level::Base:
      return base_;
    case Level::Mid:
      return mid_;
    default:
      return top_;
  }
}

uint32_t FieldTower::size(Level lv) const { return layer(lv).size(); }

uint32_t FieldTower::inv(Level lv, uint32_t a) const { return layer(lv).inv(a); }

uint32_t FieldTower::div(Level lv, uint32_t a, uint32_t b) const {
  return layer(lv).mul(a, layer(lv).inv(b));
}

Felem FieldTower::arith(Felem a, Felem b, FieldOp op) const {
  if (a.level != b.level) throw std::invalid_argument("mismatched field levels");
  const auto& f = layer(a.level);
  if (a.code >= f.size() || b.code >= f.size())
    throw std::invalid_argument("element code out of range");
  uint32_t c = 0;
  switch (op) {
    case FieldOp::Add:
      c = f.add(a.code, b.code);
      break;
    case FieldOp::Sub:
      c = f.sub(a.code, b.code);
      break;
    case FieldOp::Mul:
      c = f.mul(a.code, b.code);
      break;
    case FieldOp::Div:
      c = f.mul(a.code, f.inv(b.code));
      break;
  }
  return Felem{a.level, c};
}

uint32_t FieldTower::frobenius(uint32_t a, uint64_t k) const {
  if (a == 0) return 0;
  if (qm() == 2) return a;
  k %= m_;
  uint64_t n = qm() - 1;
  uint64_t e = 1;
  for (uint64_t i = 0; i < k; ++i) e = (e * q()) % n;
  return top_.pow(a, e);
}

uint32_t FieldTower::norm(uint32_t a) const {
  if (a == 0) return 0;
  uint64_t e = (static_cast<uint64_t>(qm()) - 1) / (q() - 1);
  uint32_t n = top_.pow(a, e);
  uint32_t out = 0;
  if (!top_to_mid(n, &out)) throw std::logic_error("norm left the base field");
  return out;
}

uint32_t FieldTower::trace(uint32_t a) const {
  uint32_t s = 0;
  uint32_t cur = a;
  for (uint32_t i = 0; i < m_; ++i) {
    s = top_.add(s, cur);
    cur = frobenius(cur, 1);
  }
  uint32_t out = 0;
  if (!top_to_mid(s, &out)) throw std::logic_error("trace left the base field");
  return out;
}

bool FieldTower::top_to_mid(uint32_t a, uint32_t* out) const {
  if (a < q()) {
    *out = a;
    return true;
  }
  return false;
}

std::vector<uint32_t> FieldTower::coords(uint32_t a) const {
  auto d = top_.to_digits(a);
  std::vector<uint32_t> x(m_, 0);
  for (uint32_t i = 0; i < m_; ++i)
    for (uint32_t j = 0; j < m_; ++j)
      x[i] = mid_.add(x[i], mid_.mul(alpha_inv_[static_cast<size_t>(i) * m_ + j], d[j]));
  return x;
}

uint32_t FieldTower::from_coords(std::span<const uint32_t> x) const {
  if (x.size() != m_) throw std::invalid_argument("coordinate vector has wrong length");
  uint32_t s = 0;
  for (uint32_t j = 0; j < m_; ++j) s = top_.add(s, top_.mul(mid_to_top(x[j]), alpha_[j]));
  return s;
}

std::vector<uint32_t> FieldTower::elem_decode(Felem a) const {
  const auto& f = layer(a.level);
  if (a.code >= f.size()) throw std::invalid_argument("element code out of range");
  return f.to_digits(a.code);
}

Felem FieldTower::elem_encode(Level lv, std::span<const uint32_t> digits) const {
  const auto& f = layer(lv);
  if (digits.size() != f.degree()) throw std::invalid_argument("digit list has wrong length");
  return Felem{lv, f.from_digits(digits)};
}

Felem FieldTower::elem_from_int(Level lv, uint64_t value) const {
  if (value >= layer(lv).size()) throw std::invalid_argument("element code out of range");
  return Felem{lv, static_cast<uint32_t>(value)};
}

FieldTowerPtr make_tower(uint32_t p, uint32_t e, uint32_t m) {
  return std::make_shared<const FieldTower>(p, e, m);
}

FieldTowerPtr make_tower(const FieldTower::Spec& spec) {
  return std::make_shared<const FieldTower>(spec);
}

}  // namespace sumrank
