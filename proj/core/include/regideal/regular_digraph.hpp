#ifndef REGIDEAL_REGULAR_DIGRAPH_HPP
#define REGIDEAL_REGULAR_DIGRAPH_HPP

#include <vector>

#include "regideal/product_ring.hpp"

namespace regideal {

/// True iff r*x != 0 for every nonzero x in M; vacuously true when M is the
/// zero ideal. This is the elementwise definition and the test-side oracle.
bool is_regular_on(const ProductRing& R, const RingElement& r, const Ideal& M);

/// True iff some element of I is J-regular, by elementwise scan over I.
bool contains_regular_element(const ProductRing& R, const Ideal& I, const Ideal& J);

/// Fast arc rule for products of local rings: there is an arc I -> J exactly
/// when every component where J is nonzero is a full component of I. Agrees
/// with contains_regular_element on all ordered vertex pairs (enforced by
/// construction-time validation and by the verification harness).
bool arc_fast(const ProductRing& R, const Ideal& I, const Ideal& J);

/// C^-(I,K): non-trivial ideals J containing both an I-regular and a
/// K-regular element. The one-argument form is C^-(I, (0)).
std::vector<Ideal> c_minus(const ProductRing& R, const Ideal& I, const Ideal& K);
std::vector<Ideal> c_minus(const ProductRing& R, const Ideal& I);

/// C^+(I,K): non-trivial ideals J such that both I and K contain a J-regular
/// element. The one-argument form is C^+(I, R).
std::vector<Ideal> c_plus(const ProductRing& R, const Ideal& I, const Ideal& K);
std::vector<Ideal> c_plus(const ProductRing& R, const Ideal& I);

/// The regular digraph of ideals: vertices are the non-trivial ideals in
/// deterministic order, arcs by the fast rule. Immutable once built except
/// for the fault-injection hook used by the verification harness.
class RegularDigraph {
public:
    enum class Validation {
        Auto,   // run the elementwise oracle when the ring is small enough
        Never,
        Always,
    };

    static RegularDigraph build(ProductRingPtr R, Validation v = Validation::Auto);

    const ProductRing& ring() const { return *ring_; }
    ProductRingPtr ring_ptr() const { return ring_; }
    std::size_t vertex_count() const { return arcs_.size(); }
    bool arc(std::size_t from, std::size_t to) const { return arcs_.get(from, to); }
    const BitMatrix& arcs() const { return arcs_; }
    std::size_t out_degree(std::size_t v) const { return out_deg_[v]; }
    std::size_t in_degree(std::size_t v) const { return in_deg_[v]; }
    bool oracle_validated() const { return oracle_validated_; }

    /// Test hook: flip one arc bit so downstream equivalence checks must
    /// trip. Never used outside fault-injection tests.
    void corrupt_arc_for_testing(std::size_t from, std::size_t to);

private:
    ProductRingPtr ring_;
    BitMatrix arcs_;
    std::vector<std::uint32_t> out_deg_, in_deg_;
    bool oracle_validated_ = false;
};

/// Symmetric closure of the arc relation.
class UnderlyingGraph {
public:
    explicit UnderlyingGraph(const RegularDigraph& g);

    const ProductRing& ring() const { return *ring_; }
    ProductRingPtr ring_ptr() const { return ring_; }
    std::size_t vertex_count() const { return adj_.size(); }
    bool adjacent(std::size_t a, std::size_t b) const { return adj_.get(a, b); }
    const BitMatrix& adjacency() const { return adj_; }

private:
    ProductRingPtr ring_;
    BitMatrix adj_;
};

UnderlyingGraph underlying(const RegularDigraph& g);

/// Work estimate for the all-pairs elementwise oracle; used to gate
/// Validation::Auto together with the element cap.
std::size_t oracle_work_estimate(const ProductRing& R);

} // namespace regideal

#endif
