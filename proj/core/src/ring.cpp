#include "zinc/ring.hpp"

#include <sstream>

#include "zinc/error.hpp"

namespace zinc {
namespace {

/// Arithmetic view of a bare table ring; elements render as their indices.
class TableArithmetic final : public Arithmetic {
 public:
  explicit TableArithmetic(std::shared_ptr<const OperationTables> t) : t_(std::move(t)) {}

  std::uint32_t order() const override { return t_->order; }
  ElementId zero() const override { return t_->zero; }
  ElementId one() const override { return t_->one; }
  ElementId add(ElementId a, ElementId b) const override { return t_->add[std::size_t{a} * t_->order + b]; }
  ElementId mul(ElementId a, ElementId b) const override { return t_->mul[std::size_t{a} * t_->order + b]; }
  ElementId neg(ElementId a) const override { return t_->neg[a]; }
  std::string format(ElementId a) const override { return std::to_string(a); }

 private:
  std::shared_ptr<const OperationTables> t_;
};

}  // namespace

FiniteRing::FiniteRing(std::shared_ptr<const Arithmetic> arithmetic, std::string name,
                       std::shared_ptr<const RingExpr> expr)
    : arithmetic_(std::move(arithmetic)), expr_(std::move(expr)), name_(std::move(name)) {
  if (!arithmetic_) throw PreconditionError("FiniteRing: null arithmetic");
  order_ = arithmetic_->order();
  if (order_ == 0) throw PreconditionError("FiniteRing: order must be >= 1");
  zero_ = arithmetic_->zero();
  one_ = arithmetic_->one();
}

FiniteRing FiniteRing::from_tables(OperationTables tables, std::string name, std::shared_ptr<const RingExpr> expr) {
  const std::size_t n = tables.order;
  if (n == 0 || tables.add.size() != n * n || tables.mul.size() != n * n || tables.neg.size() != n ||
      tables.zero >= n || tables.one >= n)
    throw PreconditionError("from_tables: table sizes do not match order " + std::to_string(n));
  FiniteRing ring;
  auto shared = std::make_shared<const OperationTables>(std::move(tables));
  ring.tables_ = shared;
  ring.arithmetic_ = std::make_shared<TableArithmetic>(shared);
  ring.expr_ = std::move(expr);
  ring.name_ = std::move(name);
  ring.order_ = shared->order;
  ring.zero_ = shared->zero;
  ring.one_ = shared->one;
  return ring;
}

ElementId FiniteRing::pow(ElementId x, std::uint64_t exponent) const {
  ElementId result = one_;
  ElementId base = x;
  while (exponent) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

void FiniteRing::check(ElementId x) const {
  if (x >= order_) {
    std::ostringstream os;
    os << "element index " << x << " out of range for ring " << name_ << " of order " << order_;
    throw DomainError(os.str());
  }
}

std::string FiniteRing::format(ElementId x) const { return arithmetic_->format(x); }

ElementId arith(const FiniteRing& ring, Op op, std::span<const ElementId> args, std::uint64_t exponent) {
  const std::size_t arity = (op == Op::neg || op == Op::pow) ? 1 : 2;
  if (args.size() != arity)
    throw PreconditionError("arith: expected " + std::to_string(arity) + " argument(s), got " +
                            std::to_string(args.size()));
  for (auto x : args) ring.check(x);
  switch (op) {
    case Op::add:
      return ring.add(args[0], args[1]);
    case Op::mul:
      return ring.mul(args[0], args[1]);
    case Op::neg:
      return ring.neg(args[0]);
    case Op::sub:
      return ring.sub(args[0], args[1]);
    case Op::pow:
      return ring.pow(args[0], exponent);
  }
  throw PreconditionError("arith: unknown operation");
}

FiniteRing materialize_tables(const FiniteRing& ring, std::uint64_t threshold) {
  constexpr std::uint64_t kTableLimit = 65536;
  const std::uint64_t limit = std::min(threshold, kTableLimit);
  if (ring.order() > limit)
    throw GateError("materialize_tables: order " + std::to_string(ring.order()) + " exceeds threshold " +
                    std::to_string(limit));
  if (ring.materialized()) return ring;

  const std::uint32_t n = ring.order();
  const Arithmetic& a = *ring.arithmetic();
  auto tables = std::make_shared<OperationTables>();
  tables->order = n;
  tables->zero = ring.zero();
  tables->one = ring.one();
  tables->add.resize(std::size_t{n} * n);
  tables->mul.resize(std::size_t{n} * n);
  tables->neg.resize(n);
  for (ElementId x = 0; x < n; ++x) {
    tables->neg[x] = static_cast<std::uint16_t>(a.neg(x));
    const std::size_t row = std::size_t{x} * n;
    for (ElementId y = 0; y < n; ++y) {
      tables->add[row + y] = static_cast<std::uint16_t>(a.add(x, y));
      tables->mul[row + y] = static_cast<std::uint16_t>(a.mul(x, y));
    }
  }

  FiniteRing out;
  out.arithmetic_ = ring.arithmetic_;
  out.tables_ = std::move(tables);
  out.expr_ = ring.expr_;
  out.name_ = ring.name_;
  out.order_ = n;
  out.zero_ = ring.zero_;
  out.one_ = ring.one_;
  return out;
}

std::string format_element(const FiniteRing& ring, ElementId x) {
  ring.check(x);
  return ring.format(x);
}

}  // namespace zinc
