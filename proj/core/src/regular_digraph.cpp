#include "regideal/regular_digraph.hpp"

namespace regideal {

bool is_regular_on(const ProductRing& R, const RingElement& r, const Ideal& M) {
    const std::size_t n = R.ideal_size(M);
    for (std::size_t k = 0; k < n; ++k) {
        const RingElement x = R.ideal_element(M, k);
        if (R.is_zero(x)) continue;
        if (R.is_zero(R.mul(r, x))) return false;
    }
    return true;
}

bool contains_regular_element(const ProductRing& R, const Ideal& I, const Ideal& J) {
    const std::size_t n = R.ideal_size(I);
    for (std::size_t k = 0; k < n; ++k)
        if (is_regular_on(R, R.ideal_element(I, k), J)) return true;
    return false;
}

bool arc_fast(const ProductRing& R, const Ideal& I, const Ideal& J) {
    if (I == J) throw Error("arc is defined for distinct vertices only");
    // supp(J) must lie inside the full components of I
    return (R.supp_mask(J) & ~R.full_mask(I)) == 0;
}

namespace {

std::vector<Ideal> c_set(const ProductRing& R, const Ideal& I, const Ideal& K, bool minus) {
    std::vector<Ideal> out;
    for (std::size_t vi = 0; vi < R.vertex_count(); ++vi) {
        const Ideal J = R.vertex(vi);
        const bool in = minus
            ? contains_regular_element(R, J, I) && contains_regular_element(R, J, K)
            : contains_regular_element(R, I, J) && contains_regular_element(R, K, J);
        if (in) out.push_back(J);
    }
    return out;
}

} // namespace

std::vector<Ideal> c_minus(const ProductRing& R, const Ideal& I, const Ideal& K) {
    return c_set(R, I, K, true);
}
std::vector<Ideal> c_minus(const ProductRing& R, const Ideal& I) {
    return c_set(R, I, R.zero_ideal(), true);
}
std::vector<Ideal> c_plus(const ProductRing& R, const Ideal& I, const Ideal& K) {
    return c_set(R, I, K, false);
}
std::vector<Ideal> c_plus(const ProductRing& R, const Ideal& I) {
    return c_set(R, I, R.unit_ideal(), false);
}

std::size_t oracle_work_estimate(const ProductRing& R) {
    // sum of |I| over all ideals equals the product over components of the
    // per-component ideal-size sums; the all-pairs oracle costs its square
    std::size_t sum = 1;
    for (std::size_t i = 0; i < R.component_count(); ++i) {
        std::size_t s = 0;
        for (const auto& ideal : R.component(i).ideals()) s += ideal.size();
        if (s != 0 && sum > (std::size_t{1} << 40) / s) return std::size_t{1} << 62;
        sum *= s;
    }
    if (sum > (std::size_t{1} << 31)) return std::size_t{1} << 62;
    return sum * sum;
}

RegularDigraph RegularDigraph::build(ProductRingPtr R, Validation v) {
    RegularDigraph g;
    g.ring_ = std::move(R);
    const ProductRing& ring = *g.ring_;
    const std::size_t n = ring.vertex_count();
    if (n > 30000) throw Error("too many vertices for a dense digraph: " + std::to_string(n));
    g.arcs_ = BitMatrix(n);
    g.out_deg_.assign(n, 0);
    g.in_deg_.assign(n, 0);

    std::vector<std::uint32_t> supp(n), full(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Ideal I = ring.vertex(i);
        supp[i] = ring.supp_mask(I);
        full[i] = ring.full_mask(I);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if ((supp[j] & ~full[i]) == 0) {
                g.arcs_.set(i, j);
                ++g.out_deg_[i];
                ++g.in_deg_[j];
            }
        }

    const bool run_oracle = v == Validation::Always ||
        (v == Validation::Auto && ring.order() <= element_cap() &&
         oracle_work_estimate(ring) <= (std::size_t{1} << 30));
    if (run_oracle) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (g.arcs_.get(i, j) != contains_regular_element(ring, ring.vertex(i), ring.vertex(j)))
                    throw Error("internal arc-rule mismatch on " + ring.describe());
            }
        g.oracle_validated_ = true;
    }
    return g;
}

void RegularDigraph::corrupt_arc_for_testing(std::size_t from, std::size_t to) {
    if (from >= vertex_count() || to >= vertex_count() || from == to)
        throw Error("bad arc to corrupt");
    const bool cur = arcs_.get(from, to);
    arcs_.set(from, to, !cur);
    out_deg_[from] += cur ? -1 : 1;
    in_deg_[to] += cur ? -1 : 1;
    oracle_validated_ = false;
}

UnderlyingGraph::UnderlyingGraph(const RegularDigraph& g) : ring_(g.ring_ptr()), adj_(g.vertex_count()) {
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (g.arc(i, j) || g.arc(j, i))) adj_.set(i, j);
}

UnderlyingGraph underlying(const RegularDigraph& g) { return UnderlyingGraph(g); }

} // namespace regideal
