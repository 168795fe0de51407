#include "zinc/expr.hpp"

#include <limits>

#include "zinc/constructions.hpp"
#include "zinc/error.hpp"

namespace zinc {
namespace {

std::optional<std::uint64_t> checked_mul(std::optional<std::uint64_t> a, std::optional<std::uint64_t> b) {
  if (!a || !b) return std::nullopt;
  if (*a != 0 && *b > std::numeric_limits<std::uint64_t>::max() / *a) return std::nullopt;
  return *a * *b;
}

std::optional<std::uint64_t> checked_pow(std::optional<std::uint64_t> base, std::uint64_t exponent) {
  std::optional<std::uint64_t> result = 1;
  for (std::uint64_t i = 0; i < exponent && result; ++i) {
    result = checked_mul(result, base);
    if (base && *base <= 1) break;
  }
  return result;
}

void append(std::string& out, const RingExpr& e, bool as_factor) {
  switch (e.kind) {
    case RingExpr::Kind::zn:
      out += "Z(" + std::to_string(e.param) + ")";
      return;
    case RingExpr::Kind::gf:
      out += "GF(" + std::to_string(e.param) + ")";
      return;
    case RingExpr::Kind::matrix:
    case RingExpr::Kind::upper_triangular:
      out += e.kind == RingExpr::Kind::matrix ? "M(" : "T(";
      out += std::to_string(e.param) + ",";
      append(out, e.base(), false);
      out += ")";
      return;
    case RingExpr::Kind::product: {
      if (as_factor) out += "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " x ";
        append(out, e.children[i], true);
      }
      if (as_factor) out += ")";
      return;
    }
    case RingExpr::Kind::trivial_extension:
      out += "TrivExt(";
      append(out, e.base(), false);
      out += ")";
      return;
    case RingExpr::Kind::poly_quot:
      out += "PolyQuot(";
      append(out, e.base(), false);
      out += "," + std::to_string(e.param) + ")";
      return;
    case RingExpr::Kind::quaternion:
      out += "H(";
      append(out, e.base(), false);
      out += ")";
      return;
    case RingExpr::Kind::morita:
      out += "Morita(";
      append(out, e.base(), false);
      out += ")";
      return;
  }
}

}  // namespace

std::string to_string(const RingExpr& expr) {
  std::string out;
  append(out, expr, false);
  return out;
}

std::optional<std::uint64_t> expected_order(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zn:
    case RingExpr::Kind::gf:
      return e.param;
    case RingExpr::Kind::matrix:
      if (e.param > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
      return checked_pow(expected_order(e.base()), e.param * e.param);
    case RingExpr::Kind::upper_triangular:
      if (e.param > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
      return checked_pow(expected_order(e.base()), e.param * (e.param + 1) / 2);
    case RingExpr::Kind::product: {
      std::optional<std::uint64_t> n = 1;
      for (const auto& c : e.children) n = checked_mul(n, expected_order(c));
      return n;
    }
    case RingExpr::Kind::trivial_extension:
      return checked_pow(expected_order(e.base()), 2);
    case RingExpr::Kind::poly_quot:
      return checked_pow(expected_order(e.base()), e.param);
    case RingExpr::Kind::quaternion:
    case RingExpr::Kind::morita:
      return checked_pow(expected_order(e.base()), 4);
  }
  return std::nullopt;
}

void validate(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zn:
      if (e.param < 1) throw SemanticError("modulus must be >= 1");
      return;
    case RingExpr::Kind::gf:
      if (!prime_power(e.param))
        throw SemanticError("GF argument " + std::to_string(e.param) + " is not a prime power");
      return;
    case RingExpr::Kind::matrix:
    case RingExpr::Kind::upper_triangular:
      if (e.param < 1) throw SemanticError("matrix arity must be >= 1");
      break;
    case RingExpr::Kind::poly_quot:
      if (e.param < 1) throw SemanticError("polynomial degree must be >= 1");
      break;
    case RingExpr::Kind::product:
      if (e.children.empty()) throw SemanticError("product needs at least one factor");
      break;
    case RingExpr::Kind::trivial_extension:
    case RingExpr::Kind::quaternion:
    case RingExpr::Kind::morita:
      break;
  }
  const std::size_t want = e.kind == RingExpr::Kind::product ? e.children.size() : 1;
  if (e.children.size() != want || e.children.empty()) throw SemanticError("malformed ring expression node");
  for (const auto& c : e.children) validate(c);
}

}  // namespace zinc
