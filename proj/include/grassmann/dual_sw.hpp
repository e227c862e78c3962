#pragma once

// Dual Stiefel-Whitney polynomial series for a rank-k bundle: the wbar_r
// series over w1..wk, its mod-w1 reduction g_r over w2..wk, closed-form
// evaluation through mod-2 multinomial coefficients, and the identities the
// series satisfy.

#include <cstdint>
#include <mutex>
#include <vector>

#include "gf2/poly.hpp"

namespace grass {

/// Z2[w1..wk] with |w_i| = i.
gf2::SpecPtr wbar_ring(int k);
/// Z2[w2..wk] with |w_i| = i.
gf2::SpecPtr g_ring(int k);

/// Memoized tables of wbar_r and g_r for one bundle rank. Values up to the
/// memo horizon are cached; larger indices are recomputed with a sliding
/// window so memory stays bounded. The cache is write-once per index and
/// guarded by a mutex, so concurrent readers are safe.
class DualSWTable {
public:
    explicit DualSWTable(int k, std::int64_t memo_horizon = 512);

    int rank() const noexcept { return k_; }
    const gf2::SpecPtr& wbar_spec() const noexcept { return wspec_; }
    const gf2::SpecPtr& g_spec() const noexcept { return gspec_; }

    /// r >= 0; wbar_0 = 1 and wbar_r = sum of w_i * wbar_{r-i}, i = 1..k.
    gf2::PolyF2 wbar(std::int64_t r) const;
    /// r >= -k+1; zero for negative r, g_0 = 1 and for r >= 1
    /// g_r = sum of w_i * g_{r-i}, i = 2..k.
    gf2::PolyF2 g(std::int64_t r) const;

    /// Values at several indices from one pass of the recurrence.
    std::vector<gf2::PolyF2> g_many(const std::vector<std::int64_t>& rs) const;
    std::vector<gf2::PolyF2> wbar_many(const std::vector<std::int64_t>& rs) const;

private:
    int k_;
    std::int64_t horizon_;
    gf2::SpecPtr wspec_;
    gf2::SpecPtr gspec_;
    mutable std::mutex mu_;
    mutable std::vector<gf2::PolyF2> wmemo_;  // wmemo_[r] = wbar_r
    mutable std::vector<gf2::PolyF2> gmemo_;  // gmemo_[r] = g_r
};

/// Closed form: wbar_r is the sum over weighted compositions a1+2a2+...+kak=r
/// of [a1,...,ak] * w1^a1 ... wk^ak with the bracket a product of mod-2
/// binomials over suffix sums.
gf2::PolyF2 wbar_closed(std::int64_t r, int k);
/// Closed form for the mod-w1 reduction (bracket with a leading zero slot).
gf2::PolyF2 g_closed(std::int64_t r, int k);

/// g_r == sum over j=2..k of w_j^(2^i) * g_{r - j*2^i};
/// requires r >= 1 + k*(2^i - 1).
bool check_gen_recurrence(const DualSWTable& table, std::int64_t r, int i);

/// w3^(2^i - 1) * g_r^(2^i) == g_{2^i (r+3) - 3} for rank 4; r >= -3, i >= 0.
bool check_posl(const DualSWTable& table, std::int64_t r, int i);
/// Sweeps the identity over a rectangle of (r, i) with one recurrence pass.
bool check_posl_range(const DualSWTable& table, std::int64_t r_min, std::int64_t r_max,
                      int i_max);

/// No monomial of g_{2^t - 3 + 2^i} (rank 4) involves w4; 0 <= i <= t-1.
bool check_w4free(const DualSWTable& table, int t, int i);

}  // namespace grass
