#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zinc {

/// Construction syntax tree for the rings the library can build.
///
/// `param` carries the integer argument of the node: the modulus of Zn, the
/// field size of GF, the matrix size of Matrix/UpperTriangular and the
/// truncation degree of PolyQuot. It is unused for the other kinds.
struct RingExpr {
  enum class Kind {
    zn,
    gf,
    matrix,
    upper_triangular,
    product,
    trivial_extension,
    poly_quot,
    quaternion,
    morita,
  };

  Kind kind = Kind::zn;
  std::uint64_t param = 1;
  std::vector<RingExpr> children;

  static RingExpr Zn(std::uint64_t n) { return {Kind::zn, n, {}}; }
  static RingExpr GF(std::uint64_t q) { return {Kind::gf, q, {}}; }
  static RingExpr Matrix(std::uint64_t n, RingExpr base) { return {Kind::matrix, n, {std::move(base)}}; }
  static RingExpr UpperTriangular(std::uint64_t n, RingExpr base) {
    return {Kind::upper_triangular, n, {std::move(base)}};
  }
  static RingExpr Product(std::vector<RingExpr> factors) { return {Kind::product, 0, std::move(factors)}; }
  static RingExpr TrivialExtension(RingExpr base) { return {Kind::trivial_extension, 0, {std::move(base)}}; }
  static RingExpr PolyQuot(RingExpr base, std::uint64_t n) { return {Kind::poly_quot, n, {std::move(base)}}; }
  static RingExpr Quaternion(RingExpr base) { return {Kind::quaternion, 0, {std::move(base)}}; }
  /// Trivial Morita context with A = B = M = P = base and zero context products.
  static RingExpr Morita(RingExpr base) { return {Kind::morita, 0, {std::move(base)}}; }

  const RingExpr& base() const { return children.front(); }

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Canonical DSL text; parse_expr(to_string(e)) == e.
std::string to_string(const RingExpr& expr);

/// Order of build(expr), or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> expected_order(const RingExpr& expr);

/// Throws SemanticError for out-of-range parameters (Z(0), GF(6), M(0,..), ...).
void validate(const RingExpr& expr);

/// Parses the ring-expression DSL:
///
///   expr := term { "x" term }
///   term := "Z(" nat ")" | "GF(" nat ")" | "M(" nat "," expr ")" | "T(" nat "," expr ")"
///         | "H(" expr ")" | "TrivExt(" expr ")" | "PolyQuot(" expr "," nat ")"
///         | "Morita(" expr ")" | "(" expr ")"
///
/// Whitespace is insignificant. A chain `A x B x C` becomes one three-factor
/// product; parentheses nest products explicitly. Throws ParseError (with a
/// byte offset) or SemanticError.
RingExpr parse_expr(std::string_view text);

}  // namespace zinc
