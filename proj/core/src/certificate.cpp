#include "zinc/certificate.hpp"

#include <string_view>
#include <type_traits>

namespace zinc {
namespace {

// These helpers deliberately avoid the classifiers: a certificate must
// re-validate without the code path that produced it.

bool nilpotent(const FiniteRing& r, ElementId x) { return r.pow(x, r.order()) == r.zero(); }

bool idempotent(const FiniteRing& r, ElementId x) { return r.mul(x, x) == x; }

bool unit(const FiniteRing& r, ElementId x) {
  for (ElementId y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return true;
  return false;
}

bool in_radical(const FiniteRing& r, ElementId x) {
  for (ElementId s = 0; s < r.order(); ++s)
    if (!unit(r, r.sub(r.one(), r.mul(s, x)))) return false;
  return true;
}

std::uint64_t count_idempotents(const FiniteRing& r) {
  std::uint64_t c = 0;
  for (ElementId e = 0; e < r.order(); ++e) c += idempotent(r, e);
  return c;
}

bool nil_clean(const FiniteRing& r, ElementId x) {
  for (ElementId e = 0; e < r.order(); ++e)
    if (idempotent(r, e) && nilpotent(r, r.sub(x, e))) return true;
  return false;
}

bool clean(const FiniteRing& r, ElementId x) {
  for (ElementId e = 0; e < r.order(); ++e)
    if (idempotent(r, e) && unit(r, r.sub(x, e))) return true;
  return false;
}

bool weakly_clean(const FiniteRing& r, ElementId x) {
  for (ElementId e = 0; e < r.order(); ++e) {
    if (!idempotent(r, e)) continue;
    const ElementId f = r.sub(r.one(), e);
    for (ElementId u = 0; u < r.order(); ++u) {
      if (!unit(r, u)) continue;
      const ElementId rest = r.sub(r.sub(x, e), u);
      for (ElementId s = 0; s < r.order(); ++s)
        if (r.mul(r.mul(f, s), x) == rest) return true;
    }
  }
  return false;
}

bool valid_indices(const FiniteRing& r, const std::vector<ElementId>& xs, std::size_t arity) {
  if (xs.size() != arity) return false;
  for (auto x : xs)
    if (!r.contains(x)) return false;
  return true;
}

bool zero_insertive_triple(const FiniteRing& r, ElementId x, ElementId a, ElementId rr, ElementId b) {
  return r.mul(a, b) == r.zero() && r.mul(r.mul(a, rr), b) == x;
}

bool validate_failure(const FiniteRing& r, const FailureWitness& w) {
  const auto& el = w.elements;
  const std::string& c = w.context;
  if (c == "semicommutative") {
    return valid_indices(r, el, 3) && r.mul(el[0], el[2]) == r.zero() &&
           r.mul(r.mul(el[0], el[1]), el[2]) != r.zero();
  }
  if (c == "weakly_semicommutative") {
    return valid_indices(r, el, 3) && r.mul(el[0], el[2]) == r.zero() &&
           !nilpotent(r, r.mul(r.mul(el[0], el[1]), el[2]));
  }
  if (c == "zinc") {
    return valid_indices(r, el, 4) && zero_insertive_triple(r, el[0], el[1], el[2], el[3]) && !nil_clean(r, el[0]) &&
           w.exhausted == count_idempotents(r);
  }
  if (c == "nil_clean") return valid_indices(r, el, 1) && !nil_clean(r, el[0]) && w.exhausted == count_idempotents(r);
  if (c == "clean") return valid_indices(r, el, 1) && !clean(r, el[0]) && w.exhausted == count_idempotents(r);
  if (c == "weakly_clean") return valid_indices(r, el, 1) && !weakly_clean(r, el[0]);
  if (c == "j_clean") {
    if (!valid_indices(r, el, 1)) return false;
    for (ElementId e = 0; e < r.order(); ++e)
      if (idempotent(r, e) && in_radical(r, r.sub(el[0], e))) return false;
    return true;
  }
  if (c == "only_trivial_idempotents")
    return valid_indices(r, el, 1) && idempotent(r, el[0]) && el[0] != r.zero() && el[0] != r.one();
  if (c == "commutative") return valid_indices(r, el, 2) && r.mul(el[0], el[1]) != r.mul(el[1], el[0]);
  if (c == "no_zero_divisors")
    return valid_indices(r, el, 2) && el[0] != r.zero() && el[1] != r.zero() && r.mul(el[0], el[1]) == r.zero();
  if (c == "unit_offset") {
    if (!valid_indices(r, el, 1)) return false;
    const ElementId w = el[0], w2 = r.mul(el[0], el[0]);
    for (ElementId v = 0; v < r.order(); ++v) {
      if (!unit(r, v)) continue;
      const ElementId d = r.sub(w, v);
      if (d == r.one()) return false;
      for (ElementId s = 0; s < r.order(); ++s)
        if (r.mul(s, w2) == d) return false;
    }
    return true;
  }
  if (c == "aJb_nil") {
    return valid_indices(r, el, 3) && r.mul(el[0], el[2]) == r.zero() && in_radical(r, el[1]) &&
           !nilpotent(r, r.mul(r.mul(el[0], el[1]), el[2]));
  }
  if (c == "zi_outside_E" || c == "zi_outside_N" || c == "zi_outside_EU") {
    if (!valid_indices(r, el, 4) || !zero_insertive_triple(r, el[0], el[1], el[2], el[3])) return false;
    if (c == "zi_outside_E") return !idempotent(r, el[0]);
    if (c == "zi_outside_N") return !nilpotent(r, el[0]);
    for (ElementId e = 0; e < r.order(); ++e)
      if (idempotent(r, e) && unit(r, r.sub(el[0], e))) return false;
    return true;
  }
  return false;
}

std::vector<std::string_view> failure_slots(const std::string& c) {
  if (c == "semicommutative" || c == "weakly_semicommutative") return {"a", "r", "b"};
  if (c == "aJb_nil") return {"a", "j", "b"};
  if (c == "zinc" || c.rfind("zi_outside_", 0) == 0) return {"x", "a", "r", "b"};
  if (c == "only_trivial_idempotents") return {"e"};
  if (c == "unit_offset") return {"w"};
  if (c == "commutative" || c == "no_zero_divisors") return {"a", "b"};
  return {"x"};
}

}  // namespace

std::string certificate_kind(const Certificate& certificate) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ZeroInsertiveWitness>) return "zero_insertive";
        if constexpr (std::is_same_v<T, NilCleanDecomposition>) return "nil_clean";
        if constexpr (std::is_same_v<T, CleanDecomposition>) return "clean";
        if constexpr (std::is_same_v<T, WeaklyCleanWitness>) return "weakly_clean";
        if constexpr (std::is_same_v<T, FailureWitness>) return "failure";
      },
      certificate);
}

std::vector<std::pair<std::string, ElementId>> certificate_fields(const Certificate& certificate) {
  return std::visit(
      [](const auto& c) -> std::vector<std::pair<std::string, ElementId>> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ZeroInsertiveWitness>) return {{"x", c.x}, {"a", c.a}, {"r", c.r}, {"b", c.b}};
        if constexpr (std::is_same_v<T, NilCleanDecomposition>) return {{"x", c.x}, {"e", c.e}, {"n", c.n}};
        if constexpr (std::is_same_v<T, CleanDecomposition>) return {{"x", c.x}, {"e", c.e}, {"u", c.u}};
        if constexpr (std::is_same_v<T, WeaklyCleanWitness>)
          return {{"x", c.x}, {"e", c.e}, {"u", c.u}, {"r", c.r}};
        if constexpr (std::is_same_v<T, FailureWitness>) {
          const auto names = failure_slots(c.context);
          std::vector<std::pair<std::string, ElementId>> out;
          for (std::size_t i = 0; i < c.elements.size(); ++i)
            out.emplace_back(i < names.size() ? std::string(names[i]) : std::to_string(i), c.elements[i]);
          return out;
        }
      },
      certificate);
}

bool validate(const FiniteRing& r, const Certificate& certificate) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ZeroInsertiveWitness>) {
          return r.contains(c.x) && r.contains(c.a) && r.contains(c.r) && r.contains(c.b) &&
                 zero_insertive_triple(r, c.x, c.a, c.r, c.b);
        }
        if constexpr (std::is_same_v<T, NilCleanDecomposition>) {
          if (!r.contains(c.x) || !r.contains(c.e) || !r.contains(c.n) || c.index == 0) return false;
          const bool index_exact =
              r.pow(c.n, c.index) == r.zero() && (c.index == 1 || r.pow(c.n, c.index - 1) != r.zero());
          return idempotent(r, c.e) && index_exact && r.add(c.e, c.n) == c.x;
        }
        if constexpr (std::is_same_v<T, CleanDecomposition>) {
          return r.contains(c.x) && r.contains(c.e) && r.contains(c.u) && idempotent(r, c.e) && unit(r, c.u) &&
                 r.add(c.e, c.u) == c.x;
        }
        if constexpr (std::is_same_v<T, WeaklyCleanWitness>) {
          if (!r.contains(c.x) || !r.contains(c.e) || !r.contains(c.u) || !r.contains(c.r)) return false;
          const ElementId lhs = r.sub(r.sub(c.x, c.e), c.u);
          const ElementId rhs = r.mul(r.mul(r.sub(r.one(), c.e), c.r), c.x);
          return idempotent(r, c.e) && unit(r, c.u) && lhs == rhs;
        }
        if constexpr (std::is_same_v<T, FailureWitness>) return validate_failure(r, c);
      },
      certificate);
}

}  // namespace zinc
