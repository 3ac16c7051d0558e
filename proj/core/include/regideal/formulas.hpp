#ifndef REGIDEAL_FORMULAS_HPP
#define REGIDEAL_FORMULAS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "regideal/metrics.hpp"
#include "regideal/product_ring.hpp"

namespace regideal {

/// Vertex classes of a connected ring arranged as F1 x R2 x R3.
/// The five named vertices, the two parametric families (full / zero
/// F1-part), and the support class used for products of fields.
enum class VertexTag { A, B, D, U, V, C, W, ReducedSupport };

std::string to_string(VertexTag t);

struct VertexClass {
    VertexTag tag;
    PartIndex p2 = 0;                // C/W: the R2 part
    std::vector<PartIndex> p3;       // C/W: the R3 parts in arranged order
    std::vector<int> support;        // ReducedSupport: components with nonzero part
};

/// Either an exact hop count or the unresolved {3,4} pair from the one
/// distance case the closed forms leave open.
class DistanceValue {
public:
    static DistanceValue exact(int k) { return DistanceValue(k, false); }
    static DistanceValue three_or_four() { return DistanceValue(0, true); }

    bool is_exact() const { return !open_; }
    int value() const;
    bool contains(int k) const { return open_ ? (k == 3 || k == 4) : k == value_; }
    std::string to_string() const { return open_ ? "{3,4}" : std::to_string(value_); }

    bool operator==(const DistanceValue&) const = default;

private:
    DistanceValue(int v, bool open) : value_(v), open_(open) {}
    int value_;
    bool open_;
};

/// Exact eccentricity, with an escape hatch for inputs the tables do not
/// determine. The current tables pin every classifiable case exactly, so
/// unknown() is never produced in practice.
class EccentricityValue {
public:
    static EccentricityValue exact(int k) { return EccentricityValue(k, {}); }
    static EccentricityValue unknown(std::string reason) { return EccentricityValue(-1, std::move(reason)); }

    bool is_exact() const { return value_ >= 0; }
    int value() const;
    const std::string& reason() const { return reason_; }

    bool operator==(const EccentricityValue&) const = default;

private:
    EccentricityValue(int v, std::string r) : value_(v), reason_(std::move(r)) {}
    int value_;
    std::string reason_;
};

/// Closed-form engine over one arranged connected ring. Classification,
/// per-pair distances, per-vertex eccentricities, diameter, radius, and
/// center, all without graph search. Not thread-safe (internal memo caches);
/// use one engine per thread.
class FormulaEngine {
public:
    /// The ring must outlive the engine.
    explicit FormulaEngine(const ProductRing& R);

    const ProductRing& ring() const { return *ring_; }

    VertexClass classify(const Ideal& I) const;
    DistanceValue distance(const Ideal& I, const Ideal& J) const;
    EccentricityValue eccentricity(const Ideal& I) const;
    int diameter() const;
    int radius() const { return 3; }
    std::vector<Ideal> center() const;
    int reduced_distance(const Ideal& I, const Ideal& J) const;

    /// True when the ring is handled by the reduced support model.
    bool reduced_model() const { return ring_->arrangement().reduced; }

private:
    struct SubIdeal {               // the R2 and R3 parts of one vertex
        PartIndex p2;
        std::vector<PartIndex> p3;  // parts in arranged R3 order
        std::uint32_t supp3, full3; // masks over positions in arr.r3
        bool r3_zero, r3_full, p2_zero, p2_full;
    };
    SubIdeal split(const Ideal& I) const;

    // Witness conditions inside R3, memoized by mask. These are the
    // emptiness tests of the regular-neighbor sets, with trivial witnesses
    // admitted exactly as the underlying path constructions allow:
    //  - in-witness: some proper ideal of R3 whose full components cover S,
    //  - out-witness: some nonzero ideal of R3 supported inside U.
    // For an R3 that is not a single field these coincide with nonemptiness
    // of the plain regular-neighbor sets.
    bool in_witness(std::uint32_t supp_union) const;
    bool out_witness(std::uint32_t full_inter) const;

    bool nil_contained_r3(const SubIdeal& s) const;  // R3 part inside Nil(R3)
    bool r3_is_field() const;

    int distance_c_d(const SubIdeal& c) const;
    int distance_c_u(const SubIdeal& c) const;
    int distance_c_v(const SubIdeal& c) const;
    int distance_a_w(const SubIdeal& w) const;
    int distance_b_w(const SubIdeal& w) const;
    DistanceValue distance_c_w(const Ideal& cI, const Ideal& wI) const;

    const ProductRing* ring_;
    std::vector<std::size_t> r3_ideal_counts_;
    mutable std::unordered_map<std::uint32_t, bool> in_memo_, out_memo_;
};

// Spec-level entry points; each builds a throwaway engine.
VertexClass classify_vertex(const ProductRing& R, const Ideal& I);
DistanceValue formula_distance(const ProductRing& R, const Ideal& I, const Ideal& J);
EccentricityValue formula_eccentricity(const ProductRing& R, const Ideal& I);
int formula_diameter(const ProductRing& R);
int formula_radius(const ProductRing& R);
std::vector<Ideal> formula_center(const ProductRing& R);

/// Distance in a product of at least three fields, from the support model:
/// 1 for strictly comparable supports, 2 when they meet or their union is
/// proper, 3 otherwise.
int reduced_distance(const ProductRing& R, const Ideal& I, const Ideal& J);

} // namespace regideal

#endif
