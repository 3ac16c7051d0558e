#ifndef REGIDEAL_METRICS_HPP
#define REGIDEAL_METRICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "regideal/regular_digraph.hpp"

namespace regideal {

/// Brute-force metric invariants of an undirected graph. Unreachable pairs
/// carry no distance (the accessor returns nullopt); eccentricity is the
/// maximum finite distance from a vertex. A graph counts as connected only
/// with at least two vertices, all mutually reachable.
class MetricReport {
public:
    std::size_t vertex_count() const { return n_; }
    std::optional<int> distance(std::size_t a, std::size_t b) const {
        const std::int16_t d = dist_[a * n_ + b];
        if (d < 0) return std::nullopt;
        return d;
    }
    int eccentricity(std::size_t v) const { return ecc_[v]; }
    const std::vector<int>& eccentricities() const { return ecc_; }
    int radius() const { return radius_; }
    int diameter() const { return diameter_; }
    const std::vector<std::size_t>& center() const { return center_; }
    bool connected() const { return connected_; }

    /// One shortest path between two vertices, endpoints included; empty if
    /// unreachable or equal.
    std::vector<std::size_t> shortest_path(const UnderlyingGraph& g, std::size_t a, std::size_t b) const;

private:
    friend MetricReport all_pairs_distances(const UnderlyingGraph& g);
    std::size_t n_ = 0;
    std::vector<std::int16_t> dist_;
    std::vector<int> ecc_;
    int radius_ = 0;
    int diameter_ = 0;
    std::vector<std::size_t> center_;
    bool connected_ = false;
};

/// BFS from every vertex over the bitset adjacency.
MetricReport all_pairs_distances(const UnderlyingGraph& g);

/// The connectivity criterion for the regular graph of an Artinian ring:
/// at least three maximal ideals and a field direct summand. Cross-checked
/// against BFS connectivity by the verification harness.
bool is_connected_predicate(const ProductRing& R);

} // namespace regideal

#endif
