#include "regideal/product_ring.hpp"

#include <algorithm>

namespace regideal {

namespace {
constexpr std::size_t kMaxIdealCount = 1u << 20;
}

ProductRing::ProductRing(std::vector<LocalRingPtr> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw Error("a product ring needs at least one component");
    if (comps_.size() > 31) throw Error("more than 31 components is not supported");
    for (const auto& c : comps_)
        if (!c) throw Error("null component");

    ideal_stride_.resize(comps_.size());
    elem_stride_.resize(comps_.size());
    for (std::size_t i = comps_.size(); i-- > 0;) {
        ideal_stride_[i] = ideal_count_;
        elem_stride_[i] = order_;
        ideal_count_ *= comps_[i]->ideal_count();
        order_ *= comps_[i]->order();
        if (ideal_count_ > kMaxIdealCount) throw Error("product has too many ideals");
    }
    for (const auto& c : comps_) n_fields_ += c->is_field();

    // canonical decomposition
    arr_.reduced = is_reduced();
    if (!arr_.reduced) {
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (comps_[i]->is_field() && arr_.f1 < 0) arr_.f1 = static_cast<int>(i);
            if (!comps_[i]->is_field() && arr_.r2 < 0) arr_.r2 = static_cast<int>(i);
        }
        int second_field = -1;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const int ii = static_cast<int>(i);
            if (ii == arr_.f1 || ii == arr_.r2) continue;
            if (n_fields_ == 2 && comps_[i]->is_field() && second_field < 0) {
                second_field = ii;
                continue;
            }
            arr_.r3.push_back(ii);
        }
        if (second_field >= 0) arr_.r3.insert(arr_.r3.begin(), second_field);
    }
}

ProductRingPtr make_product(std::vector<LocalRingPtr> components) {
    return std::make_shared<const ProductRing>(std::move(components));
}

Ideal ProductRing::ideal_at(std::size_t index) const {
    if (index >= ideal_count_) throw Error("ideal index out of range");
    Ideal I;
    I.parts.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i)
        I.parts[i] = static_cast<PartIndex>(index / ideal_stride_[i] % comps_[i]->ideal_count());
    return I;
}

std::size_t ProductRing::index_of(const Ideal& I) const {
    if (I.parts.size() != comps_.size()) throw Error("ideal has wrong component count");
    std::size_t index = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (I.parts[i] >= comps_[i]->ideal_count()) throw Error("ideal part index out of range");
        index += I.parts[i] * ideal_stride_[i];
    }
    return index;
}

bool ProductRing::is_zero_ideal(const Ideal& I) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (I.parts[i] != comps_[i]->zero_ideal()) return false;
    return true;
}

bool ProductRing::is_unit_ideal(const Ideal& I) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (I.parts[i] != comps_[i]->unit_ideal()) return false;
    return true;
}

bool ProductRing::is_vertex(const Ideal& I) const {
    return !is_zero_ideal(I) && !is_unit_ideal(I);
}

std::size_t ProductRing::vertex_index(const Ideal& I) const {
    const std::size_t idx = index_of(I);
    if (idx == 0 || idx + 1 == ideal_count_) throw Error("trivial ideal is not a vertex");
    return idx - 1;
}

Ideal ProductRing::zero_ideal() const { return ideal_at(0); }
Ideal ProductRing::unit_ideal() const { return ideal_at(ideal_count_ - 1); }

RingElement ProductRing::element_at(std::size_t index) const {
    RingElement e;
    e.coords.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i)
        e.coords[i] = static_cast<Elem>(index / elem_stride_[i] % comps_[i]->order());
    return e;
}

std::size_t ProductRing::element_index(const RingElement& e) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i) index += e.coords[i] * elem_stride_[i];
    return index;
}

RingElement ProductRing::add(const RingElement& a, const RingElement& b) const {
    RingElement out;
    out.coords.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.coords[i] = comps_[i]->add(a.coords[i], b.coords[i]);
    return out;
}

RingElement ProductRing::mul(const RingElement& a, const RingElement& b) const {
    RingElement out;
    out.coords.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.coords[i] = comps_[i]->mul(a.coords[i], b.coords[i]);
    return out;
}

bool ProductRing::is_zero(const RingElement& e) const {
    for (Elem c : e.coords)
        if (c != 0) return false;
    return true;
}

bool ProductRing::is_unit(const RingElement& e) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i]->is_unit(e.coords[i])) return false;
    return true;
}

std::size_t ProductRing::ideal_size(const Ideal& I) const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < comps_.size(); ++i) n *= comps_[i]->ideal(I.parts[i]).size();
    return n;
}

RingElement ProductRing::ideal_element(const Ideal& I, std::size_t k) const {
    RingElement e;
    e.coords.resize(comps_.size());
    for (std::size_t i = comps_.size(); i-- > 0;) {
        const auto& members = comps_[i]->ideal(I.parts[i]).elements();
        e.coords[i] = members[k % members.size()];
        k /= members.size();
    }
    return e;
}

std::uint32_t ProductRing::supp_mask(const Ideal& I) const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (I.parts[i] != comps_[i]->zero_ideal()) m |= 1u << i;
    return m;
}

std::uint32_t ProductRing::full_mask(const Ideal& I) const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (I.parts[i] == comps_[i]->unit_ideal()) m |= 1u << i;
    return m;
}

std::string ProductRing::describe() const {
    std::string out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += " x ";
        out += comps_[i]->token();
    }
    return out;
}

std::vector<Ideal> enumerate_ideals(const ProductRing& R) {
    std::vector<Ideal> out;
    out.reserve(R.ideal_count());
    for (std::size_t i = 0; i < R.ideal_count(); ++i) out.push_back(R.ideal_at(i));
    return out;
}

Ideal nilradical(const ProductRing& R) {
    Ideal I;
    I.parts.resize(R.component_count());
    for (std::size_t i = 0; i < R.component_count(); ++i) {
        const auto& c = R.component(i);
        I.parts[i] = c.is_field() ? c.zero_ideal() : c.maximal_ideal_index();
    }
    return I;
}

Ideal annihilator(const ProductRing& R, const Ideal& I) {
    Ideal out;
    out.parts.resize(R.component_count());
    for (std::size_t i = 0; i < R.component_count(); ++i) {
        const auto& c = R.component(i);
        const auto& members = c.ideal(I.parts[i]).elements();
        std::vector<Elem> ann;
        for (std::size_t r = 0; r < c.order(); ++r) {
            bool kills = true;
            for (Elem x : members)
                if (c.mul(static_cast<Elem>(r), x) != 0) { kills = false; break; }
            if (kills) ann.push_back(static_cast<Elem>(r));
        }
        out.parts[i] = c.ideal_index_of(ElementSet(std::move(ann), c.order()));
    }
    return out;
}

Ideal complement(const ProductRing& R, const Ideal& I) {
    Ideal out;
    out.parts.resize(R.component_count());
    for (std::size_t i = 0; i < R.component_count(); ++i) {
        const auto& c = R.component(i);
        if (I.parts[i] == c.zero_ideal()) out.parts[i] = c.unit_ideal();
        else if (I.parts[i] == c.unit_ideal()) out.parts[i] = c.zero_ideal();
        else out.parts[i] = I.parts[i];
    }
    return out;
}

Arrangement canonicalize_arrangement(const ProductRing& R) { return R.arrangement(); }

} // namespace regideal
