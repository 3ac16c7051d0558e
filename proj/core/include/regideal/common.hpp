#ifndef REGIDEAL_COMMON_HPP
#define REGIDEAL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regideal {

/// Error type used throughout the library for ring construction and
/// query precondition failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Element index within a single local ring (0 is always the zero element).
using Elem = std::uint16_t;

/// Index of an ideal within a component's ideal list.
using PartIndex = std::uint16_t;

/// Upper bound on ring element counts accepted by constructors and by the
/// elementwise regularity oracle. Defaults to 4096; the environment variable
/// REGIDEAL_MAX_ELEMENTS overrides it.
std::size_t element_cap();

/// A set of elements of one local ring: sorted list plus a bitmask for
/// O(1) membership.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::vector<Elem> sorted_elems, std::size_t universe);

    bool contains(Elem e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Elem>& elements() const { return elems_; }

    bool operator==(const ElementSet& other) const { return elems_ == other.elems_; }

    /// Orders by (size, then elementwise), the key used for ideal lists.
    bool operator<(const ElementSet& other) const {
        if (elems_.size() != other.elems_.size()) return elems_.size() < other.elems_.size();
        return elems_ < other.elems_;
    }

private:
    std::vector<Elem> elems_;
    std::vector<std::uint64_t> bits_;
};

/// Dense square bit matrix; rows are 64-bit word blocks.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_(wpr() * n) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i, std::size_t j) const {
        return (words_[i * wpr() + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v = true) {
        auto& w = words_[i * wpr() + (j >> 6)];
        const std::uint64_t m = std::uint64_t{1} << (j & 63);
        if (v) w |= m; else w &= ~m;
    }

    const std::uint64_t* row(std::size_t i) const { return words_.data() + i * wpr(); }
    std::uint64_t* row(std::size_t i) { return words_.data() + i * wpr(); }
    std::size_t words_per_row() const { return wpr(); }

private:
    std::size_t wpr() const { return (n_ + 63) / 64; }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace regideal

#endif
