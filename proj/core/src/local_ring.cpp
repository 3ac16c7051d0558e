#include "regideal/local_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>

namespace regideal {

std::size_t element_cap() {
    static std::once_flag flag;
    static std::size_t cap = 4096;
    std::call_once(flag, [] {
        if (const char* env = std::getenv("REGIDEAL_MAX_ELEMENTS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v <= 0)
                throw Error("REGIDEAL_MAX_ELEMENTS must be a positive integer, got '" + std::string(env) + "'");
            cap = static_cast<std::size_t>(v);
        }
    });
    return cap;
}

ElementSet::ElementSet(std::vector<Elem> sorted_elems, std::size_t universe)
    : elems_(std::move(sorted_elems)), bits_((universe + 63) / 64, 0) {
    for (Elem e : elems_) bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = p^k with p prime, k >= 1; returns {p, k} or throws.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t n) {
    if (n < 2) throw Error("ring order must be at least 2");
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint32_t k = 0;
        std::uint64_t m = n;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) throw Error("order " + std::to_string(n) + " is not a prime power");
        return {static_cast<std::uint32_t>(p), k};
    }
    return {static_cast<std::uint32_t>(n), 1};  // n itself prime
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

Elem LocalRing::add(Elem a, Elem b) const {
    switch (spec_.kind) {
    case LocalRingSpec::Kind::ModPrimePower:
    case LocalRingSpec::Kind::PrimeField:
        return static_cast<Elem>((static_cast<std::uint32_t>(a) + b) % order_);
    case LocalRingSpec::Kind::TruncatedPoly: {
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < spec_.k; ++i) {
            const std::uint32_t da = (a / pow_[i]) % spec_.p;
            const std::uint32_t db = (b / pow_[i]) % spec_.p;
            out += ((da + db) % spec_.p) * pow_[i];
        }
        return static_cast<Elem>(out);
    }
    case LocalRingSpec::Kind::Table:
        return spec_.add[a][b];
    }
    return 0;
}

Elem LocalRing::mul(Elem a, Elem b) const {
    switch (spec_.kind) {
    case LocalRingSpec::Kind::ModPrimePower:
    case LocalRingSpec::Kind::PrimeField:
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % order_);
    case LocalRingSpec::Kind::TruncatedPoly: {
        // truncated polynomial product, coefficients mod p
        std::uint32_t digits[16] = {};
        for (std::uint32_t i = 0; i < spec_.k; ++i) {
            const std::uint32_t da = (a / pow_[i]) % spec_.p;
            if (!da) continue;
            for (std::uint32_t j = 0; i + j < spec_.k; ++j)
                digits[i + j] = (digits[i + j] + da * ((b / pow_[j]) % spec_.p)) % spec_.p;
        }
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < spec_.k; ++i) out += digits[i] * pow_[i];
        return static_cast<Elem>(out);
    }
    case LocalRingSpec::Kind::Table:
        return spec_.mul[a][b];
    }
    return 0;
}

Elem LocalRing::neg(Elem a) const {
    switch (spec_.kind) {
    case LocalRingSpec::Kind::ModPrimePower:
    case LocalRingSpec::Kind::PrimeField:
        return static_cast<Elem>(a == 0 ? 0 : order_ - a);
    case LocalRingSpec::Kind::TruncatedPoly: {
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < spec_.k; ++i) {
            const std::uint32_t d = (a / pow_[i]) % spec_.p;
            out += ((spec_.p - d) % spec_.p) * pow_[i];
        }
        return static_cast<Elem>(out);
    }
    case LocalRingSpec::Kind::Table:
        for (std::size_t b = 0; b < order_; ++b)
            if (spec_.add[a][b] == 0) return static_cast<Elem>(b);
        throw Error("table ring: element without additive inverse");
    }
    return 0;
}

LocalRing LocalRing::make(const LocalRingSpec& spec, std::size_t cap) {
    LocalRing r;
    r.spec_ = spec;
    switch (spec.kind) {
    case LocalRingSpec::Kind::PrimeField:
        if (!is_prime(spec.p)) throw Error("F" + std::to_string(spec.p) + ": base is not prime");
        r.order_ = spec.p;
        r.one_ = 1;
        r.token_ = "F" + std::to_string(spec.p);
        break;
    case LocalRingSpec::Kind::ModPrimePower: {
        if (!is_prime(spec.p)) throw Error("Z" + std::to_string(ipow(spec.p, spec.k)) + ": base is not prime");
        if (spec.k == 0) throw Error("prime-power exponent must be positive");
        const std::uint64_t n = ipow(spec.p, spec.k);
        if (n > cap) throw Error("ring order " + std::to_string(n) + " exceeds element cap " + std::to_string(cap));
        r.order_ = n;
        r.one_ = 1;
        r.token_ = "Z" + std::to_string(n);
        break;
    }
    case LocalRingSpec::Kind::TruncatedPoly: {
        if (!is_prime(spec.p)) throw Error("truncated-poly base " + std::to_string(spec.p) + " is not prime");
        if (spec.k == 0) throw Error("truncated-poly exponent must be positive");
        if (spec.k > 16) throw Error("truncated-poly exponent above 16 is not supported");
        const std::uint64_t n = ipow(spec.p, spec.k);
        if (n > cap) throw Error("ring order " + std::to_string(n) + " exceeds element cap " + std::to_string(cap));
        r.order_ = n;
        r.one_ = 1;
        r.pow_.resize(spec.k);
        for (std::uint32_t i = 0; i < spec.k; ++i) r.pow_[i] = static_cast<std::uint32_t>(ipow(spec.p, i));
        r.token_ = "F" + std::to_string(spec.p) + "[x]/x^" + std::to_string(spec.k);
        break;
    }
    case LocalRingSpec::Kind::Table: {
        r.order_ = spec.add.size();
        if (r.order_ < 2) throw Error("table ring needs at least two elements");
        if (r.order_ > cap) throw Error("ring order " + std::to_string(r.order_) + " exceeds element cap " + std::to_string(cap));
        // full axiom validation is cubic in the order
        if (r.order_ > 512) throw Error("table ring order " + std::to_string(r.order_) + " exceeds the 512-element validation limit");
        if (spec.table_one >= r.order_) throw Error("table ring: identity index out of range");
        r.one_ = static_cast<Elem>(spec.table_one);
        r.token_ = "@" + (spec.name.empty() ? std::string("table") : spec.name);
        r.validate_table();
        break;
    }
    }
    if (r.order_ > cap) throw Error("ring order exceeds element cap");
    r.enumerate_ideals();
    r.find_maximal_ideal();
    return r;
}

LocalRingPtr make_local_ring(const LocalRingSpec& spec, std::size_t cap) {
    return std::make_shared<const LocalRing>(LocalRing::make(spec, cap));
}

void LocalRing::validate_table() const {
    const auto& A = spec_.add;
    const auto& M = spec_.mul;
    const std::size_t n = order_;
    if (A.size() != n || M.size() != n) throw Error("table ring: table size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (A[i].size() != n || M[i].size() != n) throw Error("table ring: table row size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (A[i][j] >= n || M[i][j] >= n) throw Error("table ring: entry out of range");
            if (A[i][j] != A[j][i]) throw Error("table ring: addition is not commutative");
            if (M[i][j] != M[j][i]) throw Error("table ring: multiplication is not commutative");
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i][0] != i) throw Error("table ring: element 0 is not the additive identity");
        if (M[i][one_] != i) throw Error("table ring: designated identity is not multiplicative identity");
        bool has_neg = false;
        for (std::size_t j = 0; j < n; ++j) has_neg |= A[i][j] == 0;
        if (!has_neg) throw Error("table ring: missing additive inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (A[A[i][j]][k] != A[i][A[j][k]]) throw Error("table ring: addition is not associative");
                if (M[M[i][j]][k] != M[i][M[j][k]]) throw Error("table ring: multiplication is not associative");
                if (M[i][A[j][k]] != A[M[i][j]][M[i][k]]) throw Error("table ring: distributivity fails");
            }
}

void LocalRing::enumerate_ideals() {
    // All principal ideals, then close under pairwise ideal sums.
    const std::size_t n = order_;
    std::set<std::vector<Elem>> found;
    std::vector<std::vector<Elem>> work;

    auto add_set = [&](std::vector<Elem> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (found.insert(v).second) work.push_back(std::move(v));
    };

    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Elem> pr;
        pr.reserve(n);
        for (std::size_t r = 0; r < n; ++r) pr.push_back(mul(static_cast<Elem>(r), static_cast<Elem>(x)));
        add_set(std::move(pr));
    }

    // pairwise sums to fixpoint
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<Elem> sum;
            sum.reserve(work[i].size() * work[j].size());
            for (Elem a : work[i])
                for (Elem b : work[j]) sum.push_back(add(a, b));
            add_set(std::move(sum));
        }
    }

    ideals_.reserve(found.size());
    for (const auto& v : found) ideals_.emplace_back(v, n);
    std::sort(ideals_.begin(), ideals_.end());
}

void LocalRing::find_maximal_ideal() {
    // proper ideals not strictly contained in another proper ideal
    std::vector<PartIndex> maximal;
    for (PartIndex i = 0; i + 1 < ideals_.size(); ++i) {
        bool top = true;
        for (PartIndex j = 0; j + 1 < ideals_.size(); ++j) {
            if (i == j || ideals_[j].size() <= ideals_[i].size()) continue;
            bool subset = true;
            for (Elem e : ideals_[i].elements())
                if (!ideals_[j].contains(e)) { subset = false; break; }
            if (subset) { top = false; break; }
        }
        if (top) maximal.push_back(i);
    }
    if (maximal.size() != 1)
        throw Error("ring is not local: found " + std::to_string(maximal.size()) + " maximal ideals");
    maximal_ = maximal.front();

    // local + finite forces units == complement of the maximal ideal; table
    // input can violate it only by failing ring axioms, but check anyway.
    for (std::size_t e = 0; e < order_; ++e) {
        bool unit = false;
        for (std::size_t s = 0; s < order_; ++s)
            if (mul(static_cast<Elem>(e), static_cast<Elem>(s)) == one_) { unit = true; break; }
        if (unit == maximal_ideal().contains(static_cast<Elem>(e)))
            throw Error("ring is not local: units do not match the maximal-ideal complement");
    }
}

PartIndex LocalRing::ideal_index_of(const ElementSet& s) const {
    for (PartIndex i = 0; i < ideals_.size(); ++i)
        if (ideals_[i] == s) return i;
    throw Error("subset is not an ideal of " + token_);
}

PartIndex LocalRing::ideal_generated_by(const std::vector<Elem>& gens) const {
    std::vector<bool> in(order_, false);
    in[0] = true;
    std::vector<Elem> queue{0};
    auto push = [&](Elem e) {
        if (!in[e]) { in[e] = true; queue.push_back(e); }
    };
    for (Elem g : gens) {
        if (g >= order_) throw Error("generator out of range for " + token_);
        push(g);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Elem x = queue[i];
        for (std::size_t r = 0; r < order_; ++r) push(mul(static_cast<Elem>(r), x));
        for (std::size_t j = 0; j <= i; ++j) push(add(queue[j], x));
    }
    std::vector<Elem> elems;
    for (std::size_t e = 0; e < order_; ++e)
        if (in[e]) elems.push_back(static_cast<Elem>(e));
    return ideal_index_of(ElementSet(std::move(elems), order_));
}

std::string LocalRing::element_name(Elem e) const {
    if (spec_.kind != LocalRingSpec::Kind::TruncatedPoly) return std::to_string(e);
    if (e == 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t i = 0; i < spec_.k; ++i) {
        const std::uint32_t d = (e / pow_[i]) % spec_.p;
        if (!d) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << d;
        } else {
            if (d != 1) out << d;
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Elem LocalRing::element_from_name(const std::string& text) const {
    if (spec_.kind != LocalRingSpec::Kind::TruncatedPoly) {
        char* end = nullptr;
        const long v = std::strtol(text.c_str(), &end, 10);
        if (end == text.c_str() || *end != '\0' || v < 0 || static_cast<std::size_t>(v) >= order_)
            throw Error("bad element literal '" + text + "' for " + token_);
        return static_cast<Elem>(v);
    }
    // terms like "2", "x", "2x", "x^3", "2x^3" joined by '+'
    std::uint32_t value = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        std::string term = text.substr(pos, next - pos);
        pos = next + 1;
        if (term.empty()) throw Error("bad element literal '" + text + "' for " + token_);
        std::uint32_t coeff = 1, deg = 0;
        std::size_t i = 0;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            coeff = 0;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                coeff = coeff * 10 + (term[i++] - '0');
        }
        if (i < term.size()) {
            if (term[i] != 'x') throw Error("bad element literal '" + text + "' for " + token_);
            deg = 1;
            ++i;
            if (i < term.size()) {
                if (term[i] != '^') throw Error("bad element literal '" + text + "' for " + token_);
                ++i;
                deg = 0;
                if (i >= term.size()) throw Error("bad element literal '" + text + "' for " + token_);
                while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                    deg = deg * 10 + (term[i++] - '0');
            }
        }
        if (i != term.size() || deg >= spec_.k)
            throw Error("bad element literal '" + text + "' for " + token_);
        const std::uint32_t old = (value / pow_[deg]) % spec_.p;
        const std::uint32_t nd = (old + coeff) % spec_.p;
        value = value - old * pow_[deg] + nd * pow_[deg];
    }
    return static_cast<Elem>(value);
}

LocalRingSpec builtin_f2xy_spec() {
    // elements a + b*x + c*y encoded as index a | b<<1 | c<<2
    LocalRingSpec s;
    s.kind = LocalRingSpec::Kind::Table;
    s.name = "f2xy";
    s.table_one = 1;
    const std::size_t n = 8;
    s.add.assign(n, std::vector<Elem>(n));
    s.mul.assign(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s.add[i][j] = static_cast<Elem>(i ^ j);
            const std::size_t a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
            const std::size_t d = j & 1, e = (j >> 1) & 1, f = (j >> 2) & 1;
            // (a+bx+cy)(d+ex+fy) with x^2 = xy = y^2 = 0
            const std::size_t ra = a & d;
            const std::size_t rb = (a & e) ^ (b & d);
            const std::size_t rc = (a & f) ^ (c & d);
            s.mul[i][j] = static_cast<Elem>(ra | (rb << 1) | (rc << 2));
        }
    return s;
}

} // namespace regideal
