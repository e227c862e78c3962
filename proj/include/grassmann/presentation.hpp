#pragma once

// Presentations of the degree-graded quotients attached to the rank-4
// Grassmannian family with n = 2^t: the defining ideal over w2, w3, w4 and
// the extra degree-(2^t-4) generator a, the subring presentation over the
// Stiefel-Whitney classes alone, the exponent-pair set driving the additive
// basis, Betti profiles, and a self-verification suite.

#include <cstdint>
#include <string>
#include <vector>

#include "gf2/groebner.hpp"
#include "gf2/poly.hpp"
#include "grassmann/dual_sw.hpp"

namespace grass {

/// Family parameters. The main family has k = 4 and n = 2^t with t >= 3;
/// t is capped so exponents and table sizes stay desk-scale.
struct GrassmannParams {
    int k;
    std::int64_t n;
    int t;

    static constexpr int kMaxT = 62;
    static GrassmannParams main_family(int t);
};

/// Z2[w2, w3, w4, a] with |a| = 2^t - 4.
gf2::SpecPtr ideal_ring(int t);
/// Lexicographic order with w3 < w2 < w4 < a.
gf2::MonomialOrder ideal_order();
/// Lexicographic order with w3 < w2 < w4 on Z2[w2, w3, w4].
gf2::MonomialOrder impstar_order();
/// Lexicographic order with w3 < w2 on Z2[w2, w3].
gf2::MonomialOrder k3_order();

std::uint64_t manifold_dimension(int t);  // 4 * 2^t - 16

/// Exponent pairs (b, c) admissible for every i in 0..t-1: either
/// b < 2^(t-1) - 2^i or c < 2^i - 1.
struct TSet {
    int t;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // ascending (b, c)

    std::size_t n() const noexcept { return pairs.size(); }
    bool contains(std::uint32_t b, std::uint32_t c) const;
};

TSet t_set(int t);

/// The defining ideal: generators g_{2^t-3+2^i} (i = 0..t-1), g_{2^t} and
/// a^2 + P a + Q, over ideal_ring(t) with ideal_order().
struct PresentationI {
    int t;
    gf2::PolyF2 p_poly;
    gf2::PolyF2 q_poly;
    gf2::OrderedGeneratorSet gens;
};

/// P and Q may live in ideal_ring(t) (a-free) or in the w-only subring; they
/// must be homogeneous of degrees 2^t - 4 and 2^(t+1) - 8 (or zero).
PresentationI build_ideal_I(int t, const gf2::PolyF2& P, const gf2::PolyF2& Q);
/// Library defaults: P = w2^2, Q = gamma * w2 * w3^2 for t = 3; zero otherwise.
PresentationI build_ideal_I_default(int t, int gamma = 0);

gf2::PolyF2 default_P(int t);
gf2::PolyF2 default_Q(int t, int gamma);

/// Subring presentation over w2, w3, w4: the raw generators
/// {g_{2^t-2}, g_{2^t-1}, g_{2^t}} and the certified completion
/// {g_{2^t-3+2^i}} + {g_{2^t}}.
struct ImPstarPresentation {
    gf2::OrderedGeneratorSet raw;
    gf2::OrderedGeneratorSet groebner;
};

ImPstarPresentation build_im_pstar_ideal(int t);

/// Monomials a^r w4^d w2^b w3^c with r < 2, d < 2^(t-2), (b, c) in the
/// T-set; descending under ideal_order(). Built directly from the exponent
/// description, independent of any Groebner computation.
std::vector<gf2::Monomial> additive_basis(int t);

/// Degreewise counts of the additive basis over 0..manifold_dimension(t).
gf2::BettiProfile poincare_profile(int t);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyReport {
    int t;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

struct VerifyOptions {
    /// Toggles one monomial of g_{2^t-1} before running the checks; used to
    /// prove the suite actually detects corruption.
    bool corrupt_fixture = false;
};

/// Named consistency checks: leading-monomial formulas, vanishing of
/// g_{2^t-3} for ranks 3 and 4, required w2-power monomials, agreement of
/// the rank-4 series mod w4 with the rank-3 series, the rank-3 Buchberger
/// certification, and the 2:1 dimension ratio between the full quotient and
/// the w-subring quotient.
VerifyReport verify_suite(int t, const VerifyOptions& opts = {});

}  // namespace grass
