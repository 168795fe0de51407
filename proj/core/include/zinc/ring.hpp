#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zinc/expr.hpp"
#include "zinc/limits.hpp"

namespace zinc {

/// Canonical handle of a ring element: its index in 0..order-1.
using ElementId = std::uint32_t;

/// Structural evaluation of a ring's operations on element indices.
class Arithmetic {
 public:
  virtual ~Arithmetic() = default;

  virtual std::uint32_t order() const = 0;
  virtual ElementId zero() const { return 0; }
  virtual ElementId one() const = 0;
  virtual ElementId add(ElementId a, ElementId b) const = 0;
  virtual ElementId mul(ElementId a, ElementId b) const = 0;
  virtual ElementId neg(ElementId a) const = 0;
  virtual std::string format(ElementId a) const = 0;
};

/// Dense operation tables, row-major: add[a * order + b].
struct OperationTables {
  std::uint32_t order = 0;
  ElementId zero = 0;
  ElementId one = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
};

/// An immutable finite unital ring with exact arithmetic on element indices.
///
/// Copies share state. When dense tables are present every operation is a
/// table lookup; otherwise it is forwarded to the structural Arithmetic.
/// The unchecked operations assume valid indices; use arith() at API edges.
class FiniteRing {
 public:
  FiniteRing(std::shared_ptr<const Arithmetic> arithmetic, std::string name,
             std::shared_ptr<const RingExpr> expr = nullptr);

  /// Ring given entirely by tables. No axiom is checked here; run audit_axioms.
  static FiniteRing from_tables(OperationTables tables, std::string name,
                                std::shared_ptr<const RingExpr> expr = nullptr);

  std::uint32_t order() const noexcept { return order_; }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  ElementId add(ElementId a, ElementId b) const {
    return tables_ ? tables_->add[std::size_t{a} * order_ + b] : arithmetic_->add(a, b);
  }
  ElementId mul(ElementId a, ElementId b) const {
    return tables_ ? tables_->mul[std::size_t{a} * order_ + b] : arithmetic_->mul(a, b);
  }
  ElementId neg(ElementId a) const { return tables_ ? tables_->neg[a] : arithmetic_->neg(a); }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  /// Square-and-multiply; pow(x, 0) == one.
  ElementId pow(ElementId x, std::uint64_t exponent) const;

  bool contains(ElementId x) const noexcept { return x < order_; }
  /// Throws DomainError naming the ring and the index when x is out of range.
  void check(ElementId x) const;

  std::string format(ElementId x) const;

  const std::string& name() const noexcept { return name_; }
  /// Construction tree, when the ring was built from one.
  const RingExpr* expr() const noexcept { return expr_.get(); }
  std::shared_ptr<const RingExpr> shared_expr() const noexcept { return expr_; }

  bool materialized() const noexcept { return tables_ != nullptr; }
  const OperationTables* tables() const noexcept { return tables_.get(); }
  const Arithmetic* arithmetic() const noexcept { return arithmetic_.get(); }

  /// Same rings share state (copies of one another).
  bool same_as(const FiniteRing& other) const noexcept {
    return arithmetic_ == other.arithmetic_ && tables_ == other.tables_;
  }

 private:
  FiniteRing() = default;
  friend FiniteRing materialize_tables(const FiniteRing&, std::uint64_t);

  std::shared_ptr<const Arithmetic> arithmetic_;
  std::shared_ptr<const OperationTables> tables_;
  std::shared_ptr<const RingExpr> expr_;
  std::string name_;
  std::uint32_t order_ = 0;
  ElementId zero_ = 0;
  ElementId one_ = 0;
};

enum class Op { add, mul, neg, sub, pow };

/// Checked evaluation of one ring operation. `args` holds one element for
/// neg/pow and two for add/mul/sub.
ElementId arith(const FiniteRing& ring, Op op, std::span<const ElementId> args, std::uint64_t exponent = 0);

inline constexpr std::uint64_t kDefaultMaterializeThreshold = 4096;

/// Behaviourally identical ring backed by dense tables. Throws GateError when
/// the order exceeds `threshold` (or 65536, the 16-bit table limit).
FiniteRing materialize_tables(const FiniteRing& ring, std::uint64_t threshold = kDefaultMaterializeThreshold);

/// Structural rendering of an element (see the constructions for each form).
std::string format_element(const FiniteRing& ring, ElementId x);

}  // namespace zinc
