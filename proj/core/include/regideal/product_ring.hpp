#ifndef REGIDEAL_PRODUCT_RING_HPP
#define REGIDEAL_PRODUCT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "regideal/local_ring.hpp"

namespace regideal {

/// An ideal of a product ring: one ideal index per component.
struct Ideal {
    std::vector<PartIndex> parts;

    bool operator==(const Ideal&) const = default;
    auto operator<=>(const Ideal&) const = default;
};

/// An element of a product ring, componentwise.
struct RingElement {
    std::vector<Elem> coords;

    bool operator==(const RingElement&) const = default;
};

/// Which component plays which role in the canonical decomposition
/// F1 x R2 x R3 used by the formula engine. For a product of fields the
/// reduced support model applies instead and f1/r2 stay unset.
struct Arrangement {
    bool reduced = false;
    int f1 = -1;               // lowest-indexed field component
    int r2 = -1;               // lowest-indexed non-field component
    std::vector<int> r3;       // the rest; for exactly two fields the second
                               // field is moved to the front
};

/// An ordered product of finite local rings. Immutable after construction;
/// the complete ideal list is enumerated eagerly in lexicographic part order,
/// so ideal 0 is the zero ideal and the last ideal is the whole ring, and
/// the vertices of the regular digraph are exactly ideals 1..count-2.
class ProductRing {
public:
    explicit ProductRing(std::vector<LocalRingPtr> components);

    std::size_t component_count() const { return comps_.size(); }
    const LocalRing& component(std::size_t i) const { return *comps_[i]; }
    const std::vector<LocalRingPtr>& components() const { return comps_; }

    std::size_t order() const { return order_; }
    std::size_t n_fields() const { return n_fields_; }
    std::size_t max_ideal_count() const { return comps_.size(); }
    bool is_reduced() const { return n_fields_ == comps_.size(); }
    const Arrangement& arrangement() const { return arr_; }

    // --- ideal enumeration -------------------------------------------------
    std::size_t ideal_count() const { return ideal_count_; }
    Ideal ideal_at(std::size_t index) const;
    std::size_t index_of(const Ideal& I) const;
    bool is_zero_ideal(const Ideal& I) const;
    bool is_unit_ideal(const Ideal& I) const;
    bool is_vertex(const Ideal& I) const;

    std::size_t vertex_count() const { return ideal_count_ >= 2 ? ideal_count_ - 2 : 0; }
    Ideal vertex(std::size_t vi) const { return ideal_at(vi + 1); }
    std::size_t vertex_index(const Ideal& I) const;

    Ideal zero_ideal() const;
    Ideal unit_ideal() const;

    // --- element arithmetic ------------------------------------------------
    RingElement element_at(std::size_t index) const;
    std::size_t element_index(const RingElement& e) const;
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    bool is_zero(const RingElement& e) const;
    bool is_unit(const RingElement& e) const;

    std::size_t ideal_size(const Ideal& I) const;
    RingElement ideal_element(const Ideal& I, std::size_t k) const;

    // --- structural helpers ------------------------------------------------
    /// Support masks over component positions (bit i set when part i is
    /// nonzero / the whole component).
    std::uint32_t supp_mask(const Ideal& I) const;
    std::uint32_t full_mask(const Ideal& I) const;

    std::string describe() const;  // component tokens joined with " x "

private:
    std::vector<LocalRingPtr> comps_;
    std::vector<std::size_t> ideal_stride_;   // mixed-radix strides over ideal counts
    std::vector<std::size_t> elem_stride_;
    std::size_t ideal_count_ = 1;
    std::size_t order_ = 1;
    std::size_t n_fields_ = 0;
    Arrangement arr_;
};

using ProductRingPtr = std::shared_ptr<const ProductRing>;

ProductRingPtr make_product(std::vector<LocalRingPtr> components);

/// Every ideal of a finite product is a product of component ideals; the
/// full list in lexicographic part order.
std::vector<Ideal> enumerate_ideals(const ProductRing& R);

/// The ideal of all nilpotent elements: maximal ideal in non-field
/// components, zero in field components.
Ideal nilradical(const ProductRing& R);

/// Ann(I) = { r : r*x = 0 for all x in I }, always a product of component
/// annihilators.
Ideal annihilator(const ProductRing& R, const Ideal& I);

/// Componentwise swap of zero and unit parts; non-trivial parts are fixed.
Ideal complement(const ProductRing& R, const Ideal& I);

/// Recompute the canonical decomposition record (also stored on the ring).
Arrangement canonicalize_arrangement(const ProductRing& R);

} // namespace regideal

#endif
