#include "regideal/metrics.hpp"

#include <algorithm>

namespace regideal {

MetricReport all_pairs_distances(const UnderlyingGraph& g) {
    MetricReport r;
    const std::size_t n = g.vertex_count();
    r.n_ = n;
    r.dist_.assign(n * n, -1);
    r.ecc_.assign(n, 0);
    if (n == 0) {
        r.connected_ = false;
        return r;
    }

    const std::size_t wpr = g.adjacency().words_per_row();
    std::vector<std::uint64_t> frontier(wpr), visited(wpr), next(wpr);

    bool all_reachable = true;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(frontier.begin(), frontier.end(), 0);
        std::fill(visited.begin(), visited.end(), 0);
        frontier[s >> 6] |= std::uint64_t{1} << (s & 63);
        visited = frontier;
        r.dist_[s * n + s] = 0;
        std::size_t seen = 1;
        for (std::int16_t level = 1; seen < n; ++level) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t w = 0; w < wpr; ++w) {
                std::uint64_t bits = frontier[w];
                while (bits) {
                    const std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    const std::uint64_t* row = g.adjacency().row(v);
                    for (std::size_t u = 0; u < wpr; ++u) next[u] |= row[u];
                }
            }
            bool any = false;
            for (std::size_t w = 0; w < wpr; ++w) {
                next[w] &= ~visited[w];
                visited[w] |= next[w];
                if (next[w]) any = true;
                std::uint64_t bits = next[w];
                while (bits) {
                    const std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    r.dist_[s * n + v] = level;
                    ++seen;
                }
            }
            if (!any) break;
            frontier = next;
        }
        if (seen < n) all_reachable = false;
        int e = 0;
        for (std::size_t v = 0; v < n; ++v) e = std::max<int>(e, r.dist_[s * n + v]);
        r.ecc_[s] = e;
    }

    r.connected_ = n >= 2 && all_reachable;
    r.radius_ = *std::min_element(r.ecc_.begin(), r.ecc_.end());
    r.diameter_ = *std::max_element(r.ecc_.begin(), r.ecc_.end());
    for (std::size_t v = 0; v < n; ++v)
        if (r.ecc_[v] == r.radius_) r.center_.push_back(v);
    return r;
}

std::vector<std::size_t> MetricReport::shortest_path(const UnderlyingGraph& g, std::size_t a, std::size_t b) const {
    if (a == b) return {};
    const auto d = distance(a, b);
    if (!d) return {};
    std::vector<std::size_t> path{b};
    std::size_t cur = b;
    for (int level = *d - 1; level >= 0; --level) {
        for (std::size_t v = 0; v < n_; ++v) {
            if (dist_[a * n_ + v] == level && g.adjacent(v, cur)) {
                path.push_back(v);
                cur = v;
                break;
            }
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_connected_predicate(const ProductRing& R) {
    return R.max_ideal_count() >= 3 && R.n_fields() >= 1;
}

} // namespace regideal
