#include "zinc/constructions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/container/small_vector.hpp>

#include "zinc/error.hpp"

namespace zinc {
namespace {

using Coords = boost::container::small_vector<ElementId, 16>;

// ---------------------------------------------------------------------------
// Integers mod n

class ZnArithmetic final : public Arithmetic {
 public:
  explicit ZnArithmetic(std::uint32_t n) : n_(n) {}
  std::uint32_t order() const override { return n_; }
  ElementId one() const override { return n_ == 1 ? 0 : 1; }
  ElementId add(ElementId a, ElementId b) const override {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<ElementId>(s >= n_ ? s - n_ : s);
  }
  ElementId mul(ElementId a, ElementId b) const override {
    return static_cast<ElementId>(std::uint64_t{a} * b % n_);
  }
  ElementId neg(ElementId a) const override { return a == 0 ? 0 : n_ - a; }
  std::string format(ElementId a) const override { return std::to_string(a); }

 private:
  std::uint32_t n_;
};

// ---------------------------------------------------------------------------
// Polynomials over Z_p (coefficient vectors, constant term first)

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = lead * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// GF(p^k) = Z_p[x]/(f); element index = sum c_i p^i.
class GaloisArithmetic final : public Arithmetic {
 public:
  GaloisArithmetic(std::uint32_t p, std::uint32_t k, Poly modulus)
      : p_(p), k_(k), order_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {}

  std::uint32_t order() const override { return order_; }
  ElementId one() const override { return 1; }
  ElementId add(ElementId a, ElementId b) const override {
    ElementId r = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) r += ((a % p_ + b % p_) % p_) * scale;
    return r;
  }
  ElementId neg(ElementId a) const override {
    ElementId r = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, scale *= p_) r += ((p_ - a % p_) % p_) * scale;
    return r;
  }
  ElementId mul(ElementId a, ElementId b) const override {
    const Poly fa = digits(a), fb = digits(b);
    Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p_);
    const Poly rem = poly_mod(prod, modulus_, p_);
    ElementId r = 0;
    for (std::size_t i = rem.size(); i-- > 0;) r = r * p_ + rem[i];
    return r;
  }
  std::string format(ElementId a) const override {
    if (k_ == 1) return std::to_string(a);
    const Poly c = digits(a);
    std::string out;
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
      if (i >= 1) out += "a";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  const Poly& modulus() const { return modulus_; }

 private:
  Poly digits(ElementId a) const {
    Poly d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }

  std::uint32_t p_, k_, order_;
  Poly modulus_;
};

// ---------------------------------------------------------------------------
// Rings stored as coordinate tuples over component rings

/// Additive structure is the direct sum of the components; subclasses
/// supply the multiplication and the rendering.
class CoordinateArithmetic : public Arithmetic {
 public:
  explicit CoordinateArithmetic(std::vector<FiniteRing> components) : components_(std::move(components)) {
    std::uint64_t n = 1;
    for (const auto& c : components_) n *= c.order();
    order_ = static_cast<std::uint32_t>(n);
  }

  std::uint32_t order() const override { return order_; }
  ElementId one() const override { return one_; }

  ElementId add(ElementId a, ElementId b) const override {
    Coords x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = components_[i].add(x[i], y[i]);
    return encode(x);
  }
  ElementId neg(ElementId a) const override {
    Coords x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = components_[i].neg(x[i]);
    return encode(x);
  }
  ElementId mul(ElementId a, ElementId b) const override {
    const Coords x = decode(a), y = decode(b);
    Coords z(x.size());
    multiply(x, y, z);
    return encode(z);
  }

 protected:
  virtual void multiply(const Coords& x, const Coords& y, Coords& z) const = 0;

  /// Subclasses call this once the components are in place.
  void set_one(const Coords& one) { one_ = encode(one); }

  Coords decode(ElementId a) const {
    Coords c(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const std::uint32_t n = components_[i].order();
      c[i] = a % n;
      a /= n;
    }
    return c;
  }
  ElementId encode(const Coords& c) const {
    ElementId a = 0;
    for (std::size_t i = components_.size(); i-- > 0;) a = a * components_[i].order() + c[i];
    return a;
  }

  std::vector<FiniteRing> components_;

 private:
  std::uint32_t order_ = 1;
  ElementId one_ = 0;
};

std::vector<FiniteRing> repeat(const FiniteRing& base, std::size_t count) { return std::vector<FiniteRing>(count, base); }

class MatrixArithmetic final : public CoordinateArithmetic {
 public:
  MatrixArithmetic(std::uint32_t n, const FiniteRing& base) : CoordinateArithmetic(repeat(base, n * n)), n_(n) {
    Coords one(n * n, base.zero());
    for (std::uint32_t i = 0; i < n; ++i) one[i * n + i] = base.one();
    set_one(one);
  }

  std::string format(ElementId a) const override {
    const Coords c = decode(a);
    std::string out = "[";
    for (std::uint32_t i = 0; i < n_; ++i) {
      out += i ? ",[" : "[";
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (j) out += ",";
        out += components_[0].format(c[i * n_ + j]);
      }
      out += "]";
    }
    return out + "]";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    const FiniteRing& r = components_[0];
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) {
        ElementId s = r.zero();
        for (std::uint32_t k = 0; k < n_; ++k) s = r.add(s, r.mul(x[i * n_ + k], y[k * n_ + j]));
        z[i * n_ + j] = s;
      }
  }

 private:
  std::uint32_t n_;
};

class UpperTriangularArithmetic final : public CoordinateArithmetic {
 public:
  UpperTriangularArithmetic(std::uint32_t n, const FiniteRing& base)
      : CoordinateArithmetic(repeat(base, n * (n + 1) / 2)), n_(n), slot_(n * n, 0) {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i; j < n; ++j) slot_[i * n + j] = s++;
    Coords one(components_.size(), base.zero());
    for (std::uint32_t i = 0; i < n; ++i) one[slot_[i * n + i]] = base.one();
    set_one(one);
  }

  std::string format(ElementId a) const override {
    const Coords c = decode(a);
    const FiniteRing& r = components_[0];
    std::string out = "[";
    for (std::uint32_t i = 0; i < n_; ++i) {
      out += i ? ",[" : "[";
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (j) out += ",";
        out += r.format(j >= i ? c[slot_[i * n_ + j]] : r.zero());
      }
      out += "]";
    }
    return out + "]";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    const FiniteRing& r = components_[0];
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i; j < n_; ++j) {
        ElementId s = r.zero();
        for (std::uint32_t k = i; k <= j; ++k) s = r.add(s, r.mul(x[slot_[i * n_ + k]], y[slot_[k * n_ + j]]));
        z[slot_[i * n_ + j]] = s;
      }
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> slot_;
};

class ProductArithmetic final : public CoordinateArithmetic {
 public:
  explicit ProductArithmetic(std::vector<FiniteRing> factors) : CoordinateArithmetic(std::move(factors)) {
    Coords one(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) one[i] = components_[i].one();
    set_one(one);
  }

  std::string format(ElementId a) const override {
    const Coords c = decode(a);
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ", ";
      out += components_[i].format(c[i]);
    }
    return out + ")";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = components_[i].mul(x[i], y[i]);
  }
};

/// R with the regular bimodule: (r, m)(r', m') = (rr', rm' + mr').
class TrivialExtensionArithmetic final : public CoordinateArithmetic {
 public:
  explicit TrivialExtensionArithmetic(const FiniteRing& base) : CoordinateArithmetic(repeat(base, 2)) {
    set_one(Coords{base.one(), base.zero()});
  }

  std::string format(ElementId a) const override {
    const Coords c = decode(a);
    return "(" + components_[0].format(c[0]) + ", " + components_[0].format(c[1]) + ")";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    const FiniteRing& r = components_[0];
    z[0] = r.mul(x[0], y[0]);
    z[1] = r.add(r.mul(x[0], y[1]), r.mul(x[1], y[0]));
  }
};

/// R[x]/(x^n) with x central.
class PolyQuotArithmetic final : public CoordinateArithmetic {
 public:
  PolyQuotArithmetic(const FiniteRing& base, std::uint32_t n) : CoordinateArithmetic(repeat(base, n)) {
    Coords one(n, base.zero());
    one[0] = base.one();
    set_one(one);
  }

  std::string format(ElementId a) const override {
    const Coords c = decode(a);
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += components_[0].format(c[i]);
    }
    return out + "]";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    const FiniteRing& r = components_[0];
    const std::size_t n = x.size();
    for (std::size_t d = 0; d < n; ++d) {
      ElementId s = r.zero();
      for (std::size_t i = 0; i <= d; ++i) s = r.add(s, r.mul(x[i], y[d - i]));
      z[d] = s;
    }
  }
};

/// Coefficients on 1, i, j, k; i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik.
class QuaternionArithmetic final : public CoordinateArithmetic {
 public:
  explicit QuaternionArithmetic(const FiniteRing& base) : CoordinateArithmetic(repeat(base, 4)) {
    set_one(Coords{base.one(), base.zero(), base.zero(), base.zero()});
  }

  std::string format(ElementId a) const override {
    const Coords c = decode(a);
    const FiniteRing& r = components_[0];
    return r.format(c[0]) + "+" + r.format(c[1]) + "i+" + r.format(c[2]) + "j+" + r.format(c[3]) + "k";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    const FiniteRing& r = components_[0];
    auto m = [&](int i, int j) { return r.mul(x[i], y[j]); };
    auto sum = [&](std::initializer_list<std::pair<bool, ElementId>> terms) {
      ElementId s = r.zero();
      for (auto [positive, t] : terms) s = positive ? r.add(s, t) : r.sub(s, t);
      return s;
    };
    z[0] = sum({{true, m(0, 0)}, {false, m(1, 1)}, {false, m(2, 2)}, {false, m(3, 3)}});
    z[1] = sum({{true, m(0, 1)}, {true, m(1, 0)}, {true, m(2, 3)}, {false, m(3, 2)}});
    z[2] = sum({{true, m(0, 2)}, {false, m(1, 3)}, {true, m(2, 0)}, {true, m(3, 1)}});
    z[3] = sum({{true, m(0, 3)}, {true, m(1, 2)}, {false, m(2, 1)}, {true, m(3, 0)}});
  }
};

/// (a m; p b) with zero context products.
class MoritaArithmetic final : public CoordinateArithmetic {
 public:
  MoritaArithmetic(const FiniteRing& a, const FiniteRing& b, BimoduleSpec spec)
      : CoordinateArithmetic({a, spec.module_ring, spec.module_ring, b}), spec_(std::move(spec)) {
    const FiniteRing& m = spec_.module_ring;
    set_one(Coords{a.one(), m.zero(), m.zero(), b.one()});
  }

  std::string format(ElementId e) const override {
    const Coords c = decode(e);
    return "[[" + components_[0].format(c[0]) + "," + components_[1].format(c[1]) + "],[" +
           components_[2].format(c[2]) + "," + components_[3].format(c[3]) + "]]";
  }

 protected:
  void multiply(const Coords& x, const Coords& y, Coords& z) const override {
    const FiniteRing& m = spec_.module_ring;
    z[0] = components_[0].mul(x[0], y[0]);
    z[1] = m.add(spec_.a_on_m(x[0], y[1]), spec_.m_by_b(x[1], y[3]));
    z[2] = m.add(spec_.p_by_a(x[2], y[0]), spec_.b_on_p(x[3], y[2]));
    z[3] = components_[3].mul(x[3], y[3]);
  }

 private:
  BimoduleSpec spec_;
};

// ---------------------------------------------------------------------------
// Rings carved out of a parent: corners and quotients

class CornerArithmetic final : public Arithmetic {
 public:
  CornerArithmetic(FiniteRing parent, std::vector<ElementId> members, ElementId unity)
      : parent_(std::move(parent)), members_(std::move(members)), position_(parent_.order(), 0) {
    for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = static_cast<ElementId>(i);
    one_ = position_[unity];
    zero_ = position_[parent_.zero()];
  }
  std::uint32_t order() const override { return static_cast<std::uint32_t>(members_.size()); }
  ElementId zero() const override { return zero_; }
  ElementId one() const override { return one_; }
  ElementId add(ElementId a, ElementId b) const override { return position_[parent_.add(members_[a], members_[b])]; }
  ElementId mul(ElementId a, ElementId b) const override { return position_[parent_.mul(members_[a], members_[b])]; }
  ElementId neg(ElementId a) const override { return position_[parent_.neg(members_[a])]; }
  std::string format(ElementId a) const override { return parent_.format(members_[a]); }

 private:
  FiniteRing parent_;
  std::vector<ElementId> members_;
  std::vector<ElementId> position_;
  ElementId zero_ = 0, one_ = 0;
};

class QuotientArithmetic final : public Arithmetic {
 public:
  QuotientArithmetic(FiniteRing parent, std::vector<ElementId> representatives, std::vector<ElementId> projection)
      : parent_(std::move(parent)), reps_(std::move(representatives)), projection_(std::move(projection)) {}
  std::uint32_t order() const override { return static_cast<std::uint32_t>(reps_.size()); }
  ElementId zero() const override { return projection_[parent_.zero()]; }
  ElementId one() const override { return projection_[parent_.one()]; }
  ElementId add(ElementId a, ElementId b) const override { return projection_[parent_.add(reps_[a], reps_[b])]; }
  ElementId mul(ElementId a, ElementId b) const override { return projection_[parent_.mul(reps_[a], reps_[b])]; }
  ElementId neg(ElementId a) const override { return projection_[parent_.neg(reps_[a])]; }
  std::string format(ElementId a) const override { return parent_.format(reps_[a]) + "+I"; }

 private:
  FiniteRing parent_;
  std::vector<ElementId> reps_;
  std::vector<ElementId> projection_;
};

FiniteRing finish(std::shared_ptr<const Arithmetic> arithmetic, std::string name,
                  std::shared_ptr<const RingExpr> expr, const Limits& limits) {
  FiniteRing ring(std::move(arithmetic), std::move(name), std::move(expr));
  if (ring.order() <= std::min<std::uint64_t>(limits.materialize_threshold, 65536))
    return materialize_tables(ring, limits.materialize_threshold);
  return ring;
}

std::uint32_t checked_u32(std::uint64_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max()) throw SemanticError(std::string(what) + " too large");
  return static_cast<std::uint32_t>(v);
}

std::shared_ptr<const Arithmetic> make_arithmetic(const RingExpr& e, const Limits& limits) {
  switch (e.kind) {
    case RingExpr::Kind::zn:
      return std::make_shared<ZnArithmetic>(checked_u32(e.param, "modulus"));
    case RingExpr::Kind::gf: {
      const auto pk = prime_power(e.param);
      if (!pk) throw SemanticError("GF argument " + std::to_string(e.param) + " is not a prime power");
      if (pk->second == 1) return std::make_shared<ZnArithmetic>(pk->first);
      return std::make_shared<GaloisArithmetic>(pk->first, pk->second,
                                                least_monic_irreducible(pk->first, pk->second));
    }
    case RingExpr::Kind::matrix:
      return std::make_shared<MatrixArithmetic>(checked_u32(e.param, "matrix arity"), build(e.base(), limits));
    case RingExpr::Kind::upper_triangular:
      return std::make_shared<UpperTriangularArithmetic>(checked_u32(e.param, "matrix arity"),
                                                         build(e.base(), limits));
    case RingExpr::Kind::product: {
      std::vector<FiniteRing> factors;
      for (const auto& c : e.children) factors.push_back(build(c, limits));
      return std::make_shared<ProductArithmetic>(std::move(factors));
    }
    case RingExpr::Kind::trivial_extension:
      return std::make_shared<TrivialExtensionArithmetic>(build(e.base(), limits));
    case RingExpr::Kind::poly_quot:
      return std::make_shared<PolyQuotArithmetic>(build(e.base(), limits), checked_u32(e.param, "degree"));
    case RingExpr::Kind::quaternion:
      return std::make_shared<QuaternionArithmetic>(build(e.base(), limits));
    case RingExpr::Kind::morita: {
      const FiniteRing w = build(e.base(), limits);
      return std::make_shared<MoritaArithmetic>(w, w, regular_bimodule(w));
    }
  }
  throw SemanticError("unknown ring expression kind");
}

// Deterministic Miller-Rabin for 64-bit integers.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

/// floor(q^(1/k)).
std::uint64_t integer_root(std::uint64_t q, std::uint32_t k) {
  if (k == 1) return q;
  auto pow_le = [&](std::uint64_t r) {  // r^k <= q without overflow
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      acc *= r;
      if (acc > q) return false;
    }
    return true;
  };
  std::uint64_t lo = 1, hi = std::uint64_t{1} << (64 / k + 1);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (pow_le(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

void check_element(const FiniteRing& ring, ElementId x) { ring.check(x); }

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint32_t k = 63; k >= 1; --k) {
    const std::uint64_t r = integer_root(q, k);
    if (r < 2) continue;
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < k; ++i) acc *= r;
    if (acc == q && is_prime(r)) {
      if (r > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
      return std::make_pair(static_cast<std::uint32_t>(r), k);
    }
  }
  return std::nullopt;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  Poly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  // make monic
  if (f.back() != 1) {
    const std::uint64_t inv = powmod(f.back(), p - 2, p);
    for (auto& c : f) c = static_cast<std::uint32_t>(c * inv % p);
  }
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(d + 1);
      std::uint64_t v = t;
      for (std::size_t i = 0; i < d; ++i, v /= p) g[i] = static_cast<std::uint32_t>(v % p);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_monic_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 0) throw PreconditionError("least_monic_irreducible: degree must be >= 1");
  const std::uint64_t count = ipow(p, k);
  // Lexicographic in (c0, c1, ..., c_{k-1}): c0 is the most significant digit of t.
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(k + 1);
    std::uint64_t v = t;
    for (std::uint32_t i = k; i-- > 0; v /= p) f[i] = static_cast<std::uint32_t>(v % p);
    f[k] = 1;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

FiniteRing build(const RingExpr& expr, const Limits& limits) {
  validate(expr);
  const auto order = expected_order(expr);
  const std::uint64_t ceiling = std::min<std::uint64_t>(limits.order_ceiling, std::numeric_limits<std::uint32_t>::max());
  if (!order || *order > ceiling) {
    std::ostringstream os;
    os << "order of " << to_string(expr) << " ";
    if (order)
      os << "(" << *order << ") ";
    else
      os << "(beyond 2^64) ";
    os << "exceeds the order ceiling " << ceiling;
    throw GateError(os.str());
  }
  auto shared = std::make_shared<const RingExpr>(expr);
  return finish(make_arithmetic(expr, limits), to_string(expr), shared, limits);
}

FiniteRing direct_product(std::span<const FiniteRing> factors, const Limits& limits) {
  if (factors.empty()) throw PreconditionError("direct_product: no factors");
  std::uint64_t order = 1;
  std::string name;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > limits.order_ceiling)
      throw GateError("direct_product: order exceeds the ceiling " + std::to_string(limits.order_ceiling));
    if (!name.empty()) name += " x ";
    const bool nested = f.expr() ? f.expr()->kind == RingExpr::Kind::product : f.name().find(" x ") != std::string::npos;
    name += nested ? "(" + f.name() + ")" : f.name();
  }
  return finish(std::make_shared<ProductArithmetic>(std::vector<FiniteRing>(factors.begin(), factors.end())), name,
                nullptr, limits);
}

FiniteRing corner_ring(const FiniteRing& ring, ElementId e, const Limits& limits) {
  check_element(ring, e);
  if (ring.mul(e, e) != e)
    throw PreconditionError("corner_ring: element " + ring.format(e) + " is not idempotent");
  for (ElementId r = 0; r < ring.order(); ++r)
    if (ring.mul(e, r) != ring.mul(r, e))
      throw PreconditionError("corner_ring: element " + ring.format(e) + " is not central (witness r = " +
                              ring.format(r) + ", index " + std::to_string(r) + ")");
  Bitset members(ring.order());
  for (ElementId x = 0; x < ring.order(); ++x) members.set(ring.mul(x, e));
  const std::string name = "Corner(" + ring.name() + ", " + ring.format(e) + ")";
  return finish(std::make_shared<CornerArithmetic>(ring, members.to_vector(), e), name, nullptr, limits);
}

BimoduleSpec regular_bimodule(const FiniteRing& w) {
  auto mul = [w](ElementId x, ElementId y) { return w.mul(x, y); };
  return BimoduleSpec{w, mul, mul, mul, mul};
}

std::vector<BimoduleAuditFailure> audit_bimodule(const FiniteRing& a, const FiniteRing& b, const BimoduleSpec& spec) {
  std::vector<BimoduleAuditFailure> failures;
  const FiniteRing& m = spec.module_ring;
  auto fail = [&](std::string axiom, std::vector<ElementId> w) {
    if (failures.size() < 16) failures.push_back({std::move(axiom), std::move(w)});
  };
  // left action of `r` on the module, generic over (ring, action)
  auto left_module = [&](const FiniteRing& r, const auto& act, const std::string& tag) {
    for (ElementId x = 0; x < m.order(); ++x) {
      if (act(r.one(), x) != x) fail(tag + ": unity", {x});
      for (ElementId s = 0; s < r.order(); ++s) {
        for (ElementId y = 0; y < m.order(); ++y)
          if (act(s, m.add(x, y)) != m.add(act(s, x), act(s, y))) fail(tag + ": module additivity", {s, x, y});
        for (ElementId t = 0; t < r.order(); ++t) {
          if (act(r.mul(s, t), x) != act(s, act(t, x))) fail(tag + ": associativity", {s, t, x});
          if (act(r.add(s, t), x) != m.add(act(s, x), act(t, x))) fail(tag + ": ring additivity", {s, t, x});
        }
      }
    }
  };
  auto right_module = [&](const FiniteRing& r, const auto& act, const std::string& tag) {
    for (ElementId x = 0; x < m.order(); ++x) {
      if (act(x, r.one()) != x) fail(tag + ": unity", {x});
      for (ElementId s = 0; s < r.order(); ++s) {
        for (ElementId y = 0; y < m.order(); ++y)
          if (act(m.add(x, y), s) != m.add(act(x, s), act(y, s))) fail(tag + ": module additivity", {x, y, s});
        for (ElementId t = 0; t < r.order(); ++t) {
          if (act(x, r.mul(s, t)) != act(act(x, s), t)) fail(tag + ": associativity", {x, s, t});
          if (act(x, r.add(s, t)) != m.add(act(x, s), act(x, t))) fail(tag + ": ring additivity", {x, s, t});
        }
      }
    }
  };
  left_module(a, spec.a_on_m, "A on M");
  right_module(b, spec.m_by_b, "M by B");
  left_module(b, spec.b_on_p, "B on P");
  right_module(a, spec.p_by_a, "P by A");
  for (ElementId s = 0; s < a.order(); ++s)
    for (ElementId x = 0; x < m.order(); ++x)
      for (ElementId t = 0; t < b.order(); ++t) {
        if (spec.m_by_b(spec.a_on_m(s, x), t) != spec.a_on_m(s, spec.m_by_b(x, t)))
          fail("M: (am)b = a(mb)", {s, x, t});
        if (spec.p_by_a(spec.b_on_p(t, x), s) != spec.b_on_p(t, spec.p_by_a(x, s)))
          fail("P: (bp)a = b(pa)", {t, x, s});
      }
  return failures;
}

FiniteRing trivial_morita(const FiniteRing& a, const FiniteRing& b, const BimoduleSpec& spec, const Limits& limits) {
  const std::uint64_t order = std::uint64_t{a.order()} * spec.module_ring.order() * spec.module_ring.order() * b.order();
  if (order > limits.order_ceiling)
    throw GateError("trivial_morita: order " + std::to_string(order) + " exceeds the order ceiling");
  const auto failures = audit_bimodule(a, b, spec);
  if (!failures.empty()) {
    std::string msg = "trivial_morita: bimodule audit failed: " + failures.front().axiom + " at (";
    for (std::size_t i = 0; i < failures.front().witness.size(); ++i)
      msg += (i ? ", " : "") + std::to_string(failures.front().witness[i]);
    throw PreconditionError(msg + ")");
  }
  const std::string name = "Morita(" + a.name() + ", " + b.name() + "; " + spec.module_ring.name() + ")";
  return finish(std::make_shared<MoritaArithmetic>(a, b, spec), name, nullptr, limits);
}

IdealClosure ideal_closure(const FiniteRing& ring, std::span<const ElementId> generators) {
  const std::uint32_t n = ring.order();
  IdealClosure out;
  out.generators.assign(generators.begin(), generators.end());
  out.members = Bitset(n);
  std::vector<ElementId> list;
  std::deque<ElementId> frontier;
  auto push = [&](ElementId z) {
    if (out.members.insert(z)) {
      list.push_back(z);
      frontier.push_back(z);
    }
  };
  push(ring.zero());
  for (auto g : generators) {
    check_element(ring, g);
    push(g);
  }
  while (!frontier.empty()) {
    const ElementId y = frontier.front();
    frontier.pop_front();
    push(ring.neg(y));
    for (std::size_t i = 0; i < list.size(); ++i) push(ring.add(y, list[i]));
    for (ElementId r = 0; r < n; ++r) {
      push(ring.mul(r, y));
      push(ring.mul(y, r));
    }
  }

  constexpr ElementId unset = std::numeric_limits<ElementId>::max();
  out.representative.assign(n, unset);
  const auto members = out.members.to_vector();
  for (ElementId x = 0; x < n; ++x) {
    if (out.representative[x] != unset) continue;
    for (auto i : members) out.representative[ring.add(x, i)] = x;
  }
  return out;
}

Quotient quotient_by_nil_ideal(const FiniteRing& ring, std::span<const ElementId> generators, const Limits& limits) {
  IdealClosure ideal = ideal_closure(ring, generators);
  if (ideal.members.count() == ring.order())
    throw PreconditionError("quotient_by_nil_ideal: improper ideal (I = R)");
  for (ElementId x = 0; x < ring.order(); ++x) {
    if (!ideal.members.test(x)) continue;
    // a nilpotent element has index <= order
    if (ring.pow(x, ring.order()) != ring.zero())
      throw PreconditionError("quotient_by_nil_ideal: ideal not nil (witness " + ring.format(x) + ", index " +
                              std::to_string(x) + ")");
  }
  std::vector<ElementId> reps;
  std::vector<ElementId> position(ring.order(), 0);
  for (ElementId x = 0; x < ring.order(); ++x)
    if (ideal.representative[x] == x) {
      position[x] = static_cast<ElementId>(reps.size());
      reps.push_back(x);
    }
  std::vector<ElementId> projection(ring.order());
  for (ElementId x = 0; x < ring.order(); ++x) projection[x] = position[ideal.representative[x]];

  std::string name = ring.name() + "/<";
  for (std::size_t i = 0; i < generators.size(); ++i) name += (i ? ", " : "") + ring.format(generators[i]);
  name += ">";
  FiniteRing q = finish(std::make_shared<QuotientArithmetic>(ring, reps, projection), name, nullptr, limits);
  return Quotient{std::move(q), std::move(ideal), std::move(projection), std::move(reps)};
}

ElementId encode_coordinates(std::span<const ElementId> coords, std::uint32_t radix) {
  ElementId a = 0;
  for (std::size_t i = coords.size(); i-- > 0;) a = a * radix + coords[i];
  return a;
}

std::vector<ElementId> decode_coordinates(ElementId x, std::uint32_t radix, std::size_t count) {
  std::vector<ElementId> c(count);
  for (std::size_t i = 0; i < count; ++i, x /= radix) c[i] = x % radix;
  return c;
}

ElementId matrix_unit(const FiniteRing& base, std::uint32_t n, std::uint32_t i, std::uint32_t j, ElementId w) {
  std::vector<ElementId> c(std::size_t{n} * n, base.zero());
  c[std::size_t{i} * n + j] = w;
  return encode_coordinates(c, base.order());
}

}  // namespace zinc
