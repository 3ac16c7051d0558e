#ifndef REGIDEAL_LOCAL_RING_HPP
#define REGIDEAL_LOCAL_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "regideal/common.hpp"

namespace regideal {

/// Descriptor for one finite commutative local ring.
struct LocalRingSpec {
    enum class Kind {
        ModPrimePower,  // Z_{p^k}
        PrimeField,     // F_p
        TruncatedPoly,  // F_p[x]/(x^k)
        Table,          // explicit addition/multiplication tables
    };

    Kind kind = Kind::PrimeField;
    std::uint32_t p = 2;
    std::uint32_t k = 1;

    // Table kind only. Element 0 must be the additive zero.
    std::string name;  // token used when printing, without the leading '@'
    std::size_t table_one = 1;
    std::vector<std::vector<Elem>> add;
    std::vector<std::vector<Elem>> mul;
};

/// A finite commutative local ring with identity: element arithmetic over
/// indices 0..order-1 plus the complete, deterministically ordered ideal list.
///
/// Invariants established at construction:
///  - commutative ring axioms hold (checked exhaustively for table input),
///  - there is exactly one maximal ideal,
///  - units are exactly the elements outside the maximal ideal,
///  - the ideal list is duplicate-free, closed, and sorted by (size, elements),
///    so index 0 is the zero ideal and the last index is the whole ring.
class LocalRing {
public:
    static LocalRing make(const LocalRingSpec& spec, std::size_t cap = element_cap());

    std::size_t order() const { return order_; }
    LocalRingSpec::Kind kind() const { return spec_.kind; }
    const LocalRingSpec& spec() const { return spec_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;

    bool is_unit(Elem a) const { return !maximal_ideal().contains(a); }
    bool is_field() const { return maximal_ideal().size() == 1; }

    const std::vector<ElementSet>& ideals() const { return ideals_; }
    const ElementSet& ideal(PartIndex i) const { return ideals_[i]; }
    std::size_t ideal_count() const { return ideals_.size(); }
    PartIndex zero_ideal() const { return 0; }
    PartIndex unit_ideal() const { return static_cast<PartIndex>(ideals_.size() - 1); }
    PartIndex maximal_ideal_index() const { return maximal_; }
    const ElementSet& maximal_ideal() const { return ideals_[maximal_]; }

    bool is_zero_ideal(PartIndex i) const { return i == 0; }
    bool is_unit_ideal(PartIndex i) const { return i == unit_ideal(); }
    bool is_nontrivial_ideal(PartIndex i) const { return i != 0 && i != unit_ideal(); }

    /// Index of the ideal equal to the given closed subset; throws if the
    /// subset is not an ideal of this ring.
    PartIndex ideal_index_of(const ElementSet& s) const;

    /// Smallest ideal containing the given elements.
    PartIndex ideal_generated_by(const std::vector<Elem>& gens) const;

    /// Ring-spec token, e.g. "Z4", "F5", "F2[x]/x^3", "@f2xy".
    const std::string& token() const { return token_; }

    /// Human form of one element: decimal for Z_{p^k}/F_p and table rings,
    /// polynomial form like "1+2x" for truncated-poly rings.
    std::string element_name(Elem e) const;

    /// Inverse of element_name; throws on malformed input.
    Elem element_from_name(const std::string& text) const;

private:
    LocalRing() = default;

    void enumerate_ideals();
    void find_maximal_ideal();
    void validate_table() const;

    LocalRingSpec spec_;
    std::size_t order_ = 0;
    Elem one_ = 1;
    std::string token_;
    std::vector<ElementSet> ideals_;
    PartIndex maximal_ = 0;

    // TruncatedPoly: cached p^i strides for digit decomposition.
    std::vector<std::uint32_t> pow_;
};

using LocalRingPtr = std::shared_ptr<const LocalRing>;

LocalRingPtr make_local_ring(const LocalRingSpec& spec, std::size_t cap = element_cap());

/// The order-8 local ring F_2[x,y]/(x^2,xy,y^2), available as the built-in
/// table ring "@f2xy". The canonical non-chain test subject.
LocalRingSpec builtin_f2xy_spec();

} // namespace regideal

#endif
