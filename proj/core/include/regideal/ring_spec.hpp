#ifndef REGIDEAL_RING_SPEC_HPP
#define REGIDEAL_RING_SPEC_HPP

#include <string>
#include <vector>

#include "regideal/product_ring.hpp"

namespace regideal {

/// Ring-spec grammar: component terms joined by `x`, whitespace ignored.
/// Terms: `F<p>` (prime field), `Z<n>` (n a prime power), `F<p>[x]/x^<k>`
/// (truncated polynomials), `@<name-or-path>` (table-presented ring, either
/// a built-in name or a JSON file). Table paths must not contain whitespace.
ProductRingPtr parse_ring(const std::string& text);

/// Canonical form: tokens joined with " x "; parses back to the same ring.
std::string print_ring(const ProductRing& R);

/// Ideal-spec grammar: one entry per component, comma separated. `0` is the
/// zero ideal, `1` the whole component, `(g1,g2,...)` the ideal generated by
/// the listed element literals.
Ideal parse_ideal(const ProductRing& R, const std::string& text);

/// Canonical form: `0` / `1` / a minimal generator list; parses back to I.
std::string print_ideal(const ProductRing& R, const Ideal& I);

std::string print_element(const ProductRing& R, const RingElement& e);

/// Table-ring JSON: {"name": ..., "order": n, "one": i,
/// "add": [[...]], "mul": [[...]]} with element 0 the additive zero.
LocalRingSpec load_table_ring(const std::string& path);

/// Resolve one component token (the pieces between `x` separators).
LocalRingPtr parse_local_token(const std::string& token);

} // namespace regideal

#endif
