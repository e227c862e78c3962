#include "gf2/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace gf2 {

bool BitVec::any() const noexcept {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::ptrdiff_t BitVec::first_set() const noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<std::ptrdiff_t>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.bits_ != bits_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

void RowEchelon::reduce(BitVec& v) const {
    // Rows are keyed by their pivot (lowest set bit); xoring a row clears
    // that bit and can only touch higher columns, so one ascending pass
    // fully reduces v.
    for (const auto& [pivot, row] : rows_)
        if (v.test(pivot)) v ^= row;
}

bool RowEchelon::insert(BitVec v) {
    if (v.size() != ncols_) throw std::invalid_argument("RowEchelon column mismatch");
    reduce(v);
    std::ptrdiff_t p = v.first_set();
    if (p < 0) return false;
    rows_.emplace(static_cast<std::size_t>(p), std::move(v));
    return true;
}

bool RowEchelon::contains(BitVec v) const {
    if (v.size() != ncols_) throw std::invalid_argument("RowEchelon column mismatch");
    reduce(v);
    return !v.any();
}

}  // namespace gf2
