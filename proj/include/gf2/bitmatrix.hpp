#pragma once

// Dense GF(2) row vectors and incremental row-echelon elimination, enough
// for rank counts and span-membership tests.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace gf2 {

class BitVec {
public:
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool any() const noexcept;
    /// Index of the lowest set bit, or -1 when zero.
    std::ptrdiff_t first_set() const noexcept;

    BitVec& operator^=(const BitVec& o);

private:
    std::size_t bits_;
    std::vector<std::uint64_t> w_;
};

class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

    std::size_t cols() const noexcept { return ncols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Eliminates v against the stored pivot rows in place.
    void reduce(BitVec& v) const;
    /// Reduces and, if independent, keeps the row. Returns whether the rank grew.
    bool insert(BitVec v);
    /// True when v lies in the span of the inserted rows.
    bool contains(BitVec v) const;

private:
    std::size_t ncols_;
    std::map<std::size_t, BitVec> rows_;  // pivot column -> row
};

}  // namespace gf2
