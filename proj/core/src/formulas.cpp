#include "regideal/formulas.hpp"

#include <algorithm>
#include <bit>

namespace regideal {

std::string to_string(VertexTag t) {
    switch (t) {
    case VertexTag::A: return "a";
    case VertexTag::B: return "b";
    case VertexTag::D: return "d";
    case VertexTag::U: return "u";
    case VertexTag::V: return "v";
    case VertexTag::C: return "C";
    case VertexTag::W: return "W";
    case VertexTag::ReducedSupport: return "support";
    }
    return "?";
}

int DistanceValue::value() const {
    if (open_) throw Error("distance is the unresolved {3,4} pair");
    return value_;
}

int EccentricityValue::value() const {
    if (value_ < 0) throw Error("eccentricity not determined: " + reason_);
    return value_;
}

FormulaEngine::FormulaEngine(const ProductRing& R) : ring_(&R) {
    if (!is_connected_predicate(R))
        throw Error("closed forms need a connected ring; " + R.describe() + " fails the criterion");
    for (int ci : R.arrangement().r3) r3_ideal_counts_.push_back(R.component(ci).ideal_count());
}

FormulaEngine::SubIdeal FormulaEngine::split(const Ideal& I) const {
    const Arrangement& arr = ring_->arrangement();
    SubIdeal s;
    s.p2 = I.parts[arr.r2];
    const auto& r2c = ring_->component(arr.r2);
    s.p2_zero = r2c.is_zero_ideal(s.p2);
    s.p2_full = r2c.is_unit_ideal(s.p2);
    s.supp3 = s.full3 = 0;
    for (std::size_t k = 0; k < arr.r3.size(); ++k) {
        const auto& c = ring_->component(arr.r3[k]);
        const PartIndex p = I.parts[arr.r3[k]];
        s.p3.push_back(p);
        if (!c.is_zero_ideal(p)) s.supp3 |= 1u << k;
        if (c.is_unit_ideal(p)) s.full3 |= 1u << k;
    }
    const std::uint32_t all = (1u << arr.r3.size()) - 1;
    s.r3_zero = s.supp3 == 0;
    s.r3_full = s.full3 == all;
    return s;
}

VertexClass FormulaEngine::classify(const Ideal& I) const {
    if (!ring_->is_vertex(I)) throw Error("trivial ideal has no vertex class");
    const Arrangement& arr = ring_->arrangement();
    VertexClass out;
    if (arr.reduced) {
        out.tag = VertexTag::ReducedSupport;
        for (std::size_t i = 0; i < ring_->component_count(); ++i)
            if (!ring_->component(i).is_zero_ideal(I.parts[i])) out.support.push_back(static_cast<int>(i));
        return out;
    }
    const bool f1_full = ring_->component(arr.f1).is_unit_ideal(I.parts[arr.f1]);
    const SubIdeal s = split(I);
    if (f1_full) {
        if (s.p2_full && s.r3_zero) out.tag = VertexTag::A;
        else if (s.p2_zero && s.r3_full) out.tag = VertexTag::B;
        else out.tag = VertexTag::C;
    } else {
        if (s.p2_full && s.r3_full) out.tag = VertexTag::D;
        else if (s.p2_full && s.r3_zero) out.tag = VertexTag::U;
        else if (s.p2_zero && s.r3_full) out.tag = VertexTag::V;
        else out.tag = VertexTag::W;
    }
    if (out.tag == VertexTag::C || out.tag == VertexTag::W) {
        out.p2 = s.p2;
        for (int ci : arr.r3) out.p3.push_back(I.parts[ci]);
    }
    return out;
}

bool FormulaEngine::r3_is_field() const {
    const auto& r3 = ring_->arrangement().r3;
    return r3.size() == 1 && ring_->component(r3[0]).is_field();
}

bool FormulaEngine::in_witness(std::uint32_t supp_union) const {
    auto it = in_memo_.find(supp_union);
    if (it != in_memo_.end()) return it->second;
    // scan all ideal tuples of R3 for a proper one whose full components
    // cover the given support
    const auto& r3 = ring_->arrangement().r3;
    const std::uint32_t all = (1u << r3.size()) - 1;
    std::size_t total = 1;
    for (std::size_t c : r3_ideal_counts_) total *= c;
    bool found = false;
    for (std::size_t t = 0; t < total && !found; ++t) {
        std::size_t rem = t;
        std::uint32_t full = 0;
        for (std::size_t k = r3.size(); k-- > 0;) {
            const PartIndex p = static_cast<PartIndex>(rem % r3_ideal_counts_[k]);
            rem /= r3_ideal_counts_[k];
            if (ring_->component(r3[k]).is_unit_ideal(p)) full |= 1u << k;
        }
        if (full != all && (supp_union & ~full) == 0) found = true;
    }
    in_memo_.emplace(supp_union, found);
    return found;
}

bool FormulaEngine::out_witness(std::uint32_t full_inter) const {
    auto it = out_memo_.find(full_inter);
    if (it != out_memo_.end()) return it->second;
    // scan for a nonzero ideal tuple of R3 supported inside the given mask
    const auto& r3 = ring_->arrangement().r3;
    std::size_t total = 1;
    for (std::size_t c : r3_ideal_counts_) total *= c;
    bool found = false;
    for (std::size_t t = 1; t < total && !found; ++t) {
        std::size_t rem = t;
        std::uint32_t supp = 0;
        for (std::size_t k = r3.size(); k-- > 0;) {
            const PartIndex p = static_cast<PartIndex>(rem % r3_ideal_counts_[k]);
            rem /= r3_ideal_counts_[k];
            if (!ring_->component(r3[k]).is_zero_ideal(p)) supp |= 1u << k;
        }
        if (supp != 0 && (supp & ~full_inter) == 0) found = true;
    }
    out_memo_.emplace(full_inter, found);
    return found;
}

bool FormulaEngine::nil_contained_r3(const SubIdeal& s) const {
    const auto& r3 = ring_->arrangement().r3;
    const Ideal nil = nilradical(*ring_);
    for (std::size_t k = 0; k < r3.size(); ++k) {
        const auto& c = ring_->component(r3[k]);
        const ElementSet& part = c.ideal(s.p3[k]);
        const ElementSet& nilk = c.ideal(nil.parts[r3[k]]);
        for (Elem e : part.elements())
            if (!nilk.contains(e)) return false;
    }
    return true;
}

int FormulaEngine::distance_c_u(const SubIdeal& c) const {
    if (c.p2_full) return 1;
    if (in_witness(c.supp3)) return 2;
    return 3;
}

int FormulaEngine::distance_c_v(const SubIdeal& c) const {
    if (c.r3_full) return 1;
    if (c.p2_zero || out_witness(c.full3)) return 2;
    return 3;
}

int FormulaEngine::distance_c_d(const SubIdeal& c) const {
    if (c.p2_full || c.r3_full || out_witness(c.full3)) return 2;
    if (c.p2_zero || c.r3_zero || in_witness(c.supp3)) return 3;
    return 4;
}

int FormulaEngine::distance_a_w(const SubIdeal& w) const {
    if (w.r3_zero) return 1;
    if (w.p2_full || in_witness(w.supp3)) return 2;
    return 3;
}

int FormulaEngine::distance_b_w(const SubIdeal& w) const {
    if (w.p2_zero) return 1;
    if (out_witness(w.full3)) return 2;
    return 3;
}

DistanceValue FormulaEngine::distance_c_w(const Ideal& cI, const Ideal& wI) const {
    const SubIdeal c = split(cI), w = split(wI);
    // adjacency: the R2 x R3 part of c contains a regular element for the
    // R2 x R3 part of w (the W side never reaches back across F1)
    if ((ring_->supp_mask(wI) & ~ring_->full_mask(cI)) == 0) return DistanceValue::exact(1);
    if ((c.p2_zero && w.p2_zero) || (c.p2_full && w.p2_full) ||
        in_witness(c.supp3 | w.supp3) || out_witness(c.full3 & w.full3))
        return DistanceValue::exact(2);
    const bool p2s_nontrivial = !c.p2_zero && !c.p2_full && !w.p2_zero && !w.p2_full;
    if (p2s_nontrivial && !out_witness(c.full3) && !in_witness(c.supp3) &&
        !out_witness(w.full3) && !in_witness(w.supp3))
        return DistanceValue::exact(5);
    return DistanceValue::three_or_four();
}

DistanceValue FormulaEngine::distance(const Ideal& I, const Ideal& J) const {
    if (reduced_model()) throw Error("use reduced_distance for a product of fields");
    if (I == J) throw Error("distance needs two distinct vertices");
    VertexClass ci = classify(I), cj = classify(J);
    const Ideal* pi = &I;
    const Ideal* pj = &J;
    if (static_cast<int>(ci.tag) > static_cast<int>(cj.tag)) {
        std::swap(ci, cj);
        std::swap(pi, pj);
    }
    const VertexTag a = ci.tag, b = cj.tag;
    auto E = [](int k) { return DistanceValue::exact(k); };

    if (b == VertexTag::C) {
        const SubIdeal s = split(*pj);
        switch (a) {
        case VertexTag::A: return E((s.r3_zero || s.p2_full) ? 1 : 2);
        case VertexTag::B: return E((s.p2_zero || s.r3_full) ? 1 : 2);
        case VertexTag::D: return E(distance_c_d(s));
        case VertexTag::U: return E(distance_c_u(s));
        case VertexTag::V: return E(distance_c_v(s));
        case VertexTag::C: {
            const bool adj = arc_fast(*ring_, *pi, *pj) || arc_fast(*ring_, *pj, *pi);
            return E(adj ? 1 : 2);
        }
        default: break;
        }
    }
    if (b == VertexTag::W) {
        const SubIdeal s = split(*pj);
        switch (a) {
        case VertexTag::A: return E(distance_a_w(s));
        case VertexTag::B: return E(distance_b_w(s));
        case VertexTag::D: return E(1);
        case VertexTag::U: return E((s.p2_full || s.r3_zero) ? 1 : 2);
        case VertexTag::V: return E((s.p2_zero || s.r3_full) ? 1 : 2);
        case VertexTag::C: return distance_c_w(*pi, *pj);
        case VertexTag::W: {
            const bool adj = arc_fast(*ring_, *pi, *pj) || arc_fast(*ring_, *pj, *pi);
            return E(adj ? 1 : 2);
        }
        default: break;
        }
    }
    // both among the five named vertices
    auto named = [&](VertexTag x, VertexTag y) {
        return a == x && b == y;
    };
    if (named(VertexTag::A, VertexTag::B) || named(VertexTag::A, VertexTag::D) ||
        named(VertexTag::B, VertexTag::D) || named(VertexTag::U, VertexTag::V))
        return E(2);
    if (named(VertexTag::A, VertexTag::U) || named(VertexTag::B, VertexTag::V) ||
        named(VertexTag::D, VertexTag::U) || named(VertexTag::D, VertexTag::V))
        return E(1);
    if (named(VertexTag::A, VertexTag::V) || named(VertexTag::B, VertexTag::U)) return E(3);
    throw Error("unclassifiable vertex pair");
}

EccentricityValue FormulaEngine::eccentricity(const Ideal& I) const {
    if (reduced_model()) throw Error("eccentricity tables apply to non-reduced rings");
    const std::size_t nf = ring_->n_fields();
    if (nf >= 3) return EccentricityValue::exact(3);
    const VertexClass cls = classify(I);
    switch (cls.tag) {
    case VertexTag::A:
    case VertexTag::B:
    case VertexTag::U:
    case VertexTag::V:
        return EccentricityValue::exact(3);
    case VertexTag::D:
        return EccentricityValue::exact(nf >= 2 ? 3 : 4);
    default: break;
    }
    const SubIdeal s = split(I);
    const bool r3_field = r3_is_field();
    if (cls.tag == VertexTag::C) {
        if (s.p2_full) return EccentricityValue::exact(3);
        if (s.r3_zero) {
            // proper R2 part, zero R3 part
            const bool three = nf == 2 && (!r3_field || s.p2_zero);
            return EccentricityValue::exact(three ? 3 : 4);
        }
        if (s.p2_zero && !s.r3_full) {
            const bool three = nf == 2 || !nil_contained_r3(s);
            return EccentricityValue::exact(three ? 3 : 4);
        }
        if (s.r3_full) return EccentricityValue::exact(3);  // nontrivial R2 part
        // both parts nontrivial
        if (nf == 1) {
            if (out_witness(s.full3)) return EccentricityValue::exact(3);
            if (in_witness(s.supp3)) return EccentricityValue::exact(4);
            return EccentricityValue::exact(5);
        }
        // two fields: R3 leads with the second field
        const bool t3_zero = (s.supp3 & 1u) == 0;
        bool tail_nontrivial = true;
        for (std::size_t k = 1; k < ring_->arrangement().r3.size(); ++k) {
            const bool z = ((s.supp3 >> k) & 1) == 0;
            const bool f = ((s.full3 >> k) & 1) != 0;
            if (z || f) tail_nontrivial = false;
        }
        const bool e4 = t3_zero && tail_nontrivial && ring_->arrangement().r3.size() >= 2;
        return EccentricityValue::exact(e4 ? 4 : 3);
    }
    // class W
    if (s.p2_zero) return EccentricityValue::exact(3);
    if (s.r3_full) {
        // nontrivial R2 part, full R3 part
        const bool three = nf == 2 && !r3_field;
        return EccentricityValue::exact(three ? 3 : 4);
    }
    if (s.p2_full) {
        const bool three = nf == 2 || in_witness(s.supp3);
        return EccentricityValue::exact(three ? 3 : 4);
    }
    if (s.r3_zero) return EccentricityValue::exact(3);  // nontrivial R2 part
    // both parts nontrivial
    if (nf == 1) {
        if (in_witness(s.supp3)) return EccentricityValue::exact(3);
        if (out_witness(s.full3)) return EccentricityValue::exact(4);
        return EccentricityValue::exact(5);
    }
    const bool t3_full = (s.full3 & 1u) != 0;
    bool tail_nontrivial = true;
    for (std::size_t k = 1; k < ring_->arrangement().r3.size(); ++k) {
        const bool z = ((s.supp3 >> k) & 1) == 0;
        const bool f = ((s.full3 >> k) & 1) != 0;
        if (z || f) tail_nontrivial = false;
    }
    const bool e4 = t3_full && tail_nontrivial && ring_->arrangement().r3.size() >= 2;
    return EccentricityValue::exact(e4 ? 4 : 3);
}

int FormulaEngine::diameter() const {
    const std::size_t nf = ring_->n_fields();
    if (nf >= 3) return 3;
    return nf == 2 ? 4 : 5;
}

std::vector<Ideal> FormulaEngine::center() const {
    const std::size_t nf = ring_->n_fields();
    std::vector<Ideal> out;
    if (reduced_model() || nf >= 3 || (nf == 2 && ring_->max_ideal_count() == 3)) {
        for (std::size_t vi = 0; vi < ring_->vertex_count(); ++vi) out.push_back(ring_->vertex(vi));
        return out;
    }
    const Arrangement& arr = ring_->arrangement();
    if (nf == 1) {
        // the F1-full vertices with full R2 part or R3 part outside the
        // nilradical, together with their complements
        std::vector<std::size_t> take;
        for (std::size_t vi = 0; vi < ring_->vertex_count(); ++vi) {
            const Ideal I = ring_->vertex(vi);
            if (!ring_->component(arr.f1).is_unit_ideal(I.parts[arr.f1])) continue;
            const SubIdeal s = split(I);
            if (s.p2_full || !nil_contained_r3(s)) {
                take.push_back(vi);
                take.push_back(ring_->vertex_index(complement(*ring_, I)));
            }
        }
        std::sort(take.begin(), take.end());
        take.erase(std::unique(take.begin(), take.end()), take.end());
        for (std::size_t vi : take) out.push_back(ring_->vertex(vi));
        return out;
    }
    // two fields, at least four maximal ideals: everything except the two
    // excluded patterns (T3 slot trivial against a fully nontrivial rest)
    for (std::size_t vi = 0; vi < ring_->vertex_count(); ++vi) {
        const Ideal I = ring_->vertex(vi);
        const bool f1_full = ring_->component(arr.f1).is_unit_ideal(I.parts[arr.f1]);
        const SubIdeal s = split(I);
        bool tail_nontrivial = arr.r3.size() >= 2;
        for (std::size_t k = 1; k < arr.r3.size(); ++k) {
            const bool z = ((s.supp3 >> k) & 1) == 0;
            const bool f = ((s.full3 >> k) & 1) != 0;
            if (z || f) tail_nontrivial = false;
        }
        const bool p2_nontrivial = !s.p2_zero && !s.p2_full;
        const bool t3_zero = (s.supp3 & 1u) == 0;
        const bool t3_full = (s.full3 & 1u) != 0;
        const bool excluded1 = f1_full && p2_nontrivial && t3_zero && tail_nontrivial;
        const bool excluded2 = !f1_full && p2_nontrivial && t3_full && tail_nontrivial;
        if (!excluded1 && !excluded2) out.push_back(I);
    }
    return out;
}

int FormulaEngine::reduced_distance(const Ideal& I, const Ideal& J) const {
    return regideal::reduced_distance(*ring_, I, J);
}

VertexClass classify_vertex(const ProductRing& R, const Ideal& I) {
    return FormulaEngine(R).classify(I);
}
DistanceValue formula_distance(const ProductRing& R, const Ideal& I, const Ideal& J) {
    return FormulaEngine(R).distance(I, J);
}
EccentricityValue formula_eccentricity(const ProductRing& R, const Ideal& I) {
    return FormulaEngine(R).eccentricity(I);
}
int formula_diameter(const ProductRing& R) { return FormulaEngine(R).diameter(); }
int formula_radius(const ProductRing& R) { return FormulaEngine(R).radius(); }
std::vector<Ideal> formula_center(const ProductRing& R) { return FormulaEngine(R).center(); }

int reduced_distance(const ProductRing& R, const Ideal& I, const Ideal& J) {
    if (!R.is_reduced()) throw Error("reduced_distance needs a product of fields");
    if (R.component_count() < 3) throw Error("reduced_distance needs at least three components");
    if (!R.is_vertex(I) || !R.is_vertex(J)) throw Error("reduced_distance needs non-trivial ideals");
    if (I == J) return 0;
    const std::uint32_t a = R.supp_mask(I), b = R.supp_mask(J);
    const std::uint32_t all = (1u << R.component_count()) - 1;
    if ((a & ~b) == 0 || (b & ~a) == 0) return 1;
    if ((a & b) != 0 || (a | b) != all) return 2;
    return 3;
}

} // namespace regideal
