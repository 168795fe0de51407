#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <span>
#include <vector>

#include "zinc/bitset.hpp"
#include "zinc/expr.hpp"
#include "zinc/limits.hpp"
#include "zinc/ring.hpp"

namespace zinc {

/// Builds the ring described by `expr`.
///
/// Canonical element order. Every composite ring stores an element as a
/// coordinate tuple (c0, c1, ..., c_{k-1}) over its component rings and uses
/// index = c0 + |C0| * (c1 + |C1| * (c2 + ...)), so the first coordinate is
/// the fastest-varying digit:
///   - Matrix(n, R): entries row-major, (1,1) first. E11 = 1 for |R| > 1.
///   - UpperTriangular(n, R): entries (i <= j) row-major.
///   - Product(R1, ..., Rk): components left to right.
///   - TrivialExtension(R): pairs (r, m), multiplied as the matrices (r m; 0 r).
///   - PolyQuot(R, n): coefficients of 1, x, ..., x^(n-1).
///   - Quaternion(R): coefficients on 1, i, j, k with i^2 = j^2 = k^2 = -1, ij = k = -ji.
///   - Morita(W): tuples (a, m, p, b), multiplied as (a m; p b) with mp = pm = 0.
///   - GF(p^k): Z_p[x]/(f) with coefficients of 1, x, ..., x^(k-1), where f is
///     the lexicographically least monic irreducible of degree k (coefficients
///     compared from the constant term upwards).
///
/// Rings of order <= limits.materialize_threshold are returned with dense tables.
/// Throws SemanticError for malformed expressions and GateError above
/// limits.order_ceiling.
FiniteRing build(const RingExpr& expr, const Limits& limits = {});

/// Coefficients (constant term first) of the lexicographically least monic
/// irreducible polynomial of degree k over Z_p; the leading 1 is included.
std::vector<std::uint32_t> least_monic_irreducible(std::uint32_t p, std::uint32_t k);

/// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p);

/// Returns (p, k) when q = p^k with p prime and k >= 1.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Direct product of prebuilt rings, components left to right. Throws
/// GateError above limits.order_ceiling.
FiniteRing direct_product(std::span<const FiniteRing> factors, const Limits& limits = {});

/// Corner ring Re on {x e}, unity e, members ordered by ascending parent index.
/// Throws PreconditionError when e is not idempotent or not central.
FiniteRing corner_ring(const FiniteRing& ring, ElementId e, const Limits& limits = {});

/// Additive groups and actions for a trivial Morita context (A M; P B).
///
/// M is an (A,B)-bimodule and P a (B,A)-bimodule, both carried by the
/// additive group of `module_ring`. The actions map (ring element, module
/// element) to a module element.
struct BimoduleSpec {
  FiniteRing module_ring;
  std::function<ElementId(ElementId a, ElementId m)> a_on_m;  // a m
  std::function<ElementId(ElementId m, ElementId b)> m_by_b;  // m b
  std::function<ElementId(ElementId b, ElementId p)> b_on_p;  // b p
  std::function<ElementId(ElementId p, ElementId a)> p_by_a;  // p a
};

/// A = B = M = P = w, every action being multiplication in w.
BimoduleSpec regular_bimodule(const FiniteRing& w);

struct BimoduleAuditFailure {
  std::string axiom;
  std::vector<ElementId> witness;
};

/// Exhaustive check of the bimodule axioms for M and P; empty when they hold.
std::vector<BimoduleAuditFailure> audit_bimodule(const FiniteRing& a, const FiniteRing& b, const BimoduleSpec& spec);

/// Trivial Morita context ring on (a, m, p, b) with
/// (a,m,p,b)(a',m',p',b') = (aa', am' + mb', pa' + bp', bb').
/// Throws PreconditionError when the bimodule audit fails.
FiniteRing trivial_morita(const FiniteRing& a, const FiniteRing& b, const BimoduleSpec& spec,
                          const Limits& limits = {});

/// Two-sided ideal generated by a list of elements.
struct IdealClosure {
  std::vector<ElementId> generators;
  Bitset members;
  /// representative[x] = least index in the coset x + I.
  std::vector<ElementId> representative;
};

/// Breadth-first closure under +, negation and r*g, g*r for all r in R.
IdealClosure ideal_closure(const FiniteRing& ring, std::span<const ElementId> generators);

struct Quotient {
  FiniteRing ring;
  IdealClosure ideal;
  /// Canonical projection: parent element -> quotient element index.
  std::vector<ElementId> projection;
  /// Quotient element index -> least parent representative.
  std::vector<ElementId> representatives;
};

/// R/I for the ideal I generated by `generators`. Throws PreconditionError
/// ("ideal not nil" with a witness, or "improper ideal" when I = R).
Quotient quotient_by_nil_ideal(const FiniteRing& ring, std::span<const ElementId> generators,
                               const Limits& limits = {});

/// Index of the element with coordinates `coords` in a coordinate ring
/// whose components all have order `radix` (matrices, extensions, ...).
ElementId encode_coordinates(std::span<const ElementId> coords, std::uint32_t radix);
std::vector<ElementId> decode_coordinates(ElementId x, std::uint32_t radix, std::size_t count);

/// Matrix unit scaled by w: the n x n matrix with w at (i, j), zero elsewhere
/// (0-based i, j). `base` is the coefficient ring.
ElementId matrix_unit(const FiniteRing& base, std::uint32_t n, std::uint32_t i, std::uint32_t j, ElementId w);

}  // namespace zinc
