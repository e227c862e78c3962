#include "grassmann/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace grass {

using gf2::Monomial;
using gf2::MonomialOrder;
using gf2::OrderedGeneratorSet;
using gf2::PolyF2;

GrassmannParams GrassmannParams::main_family(int t) {
    if (t < 3) throw std::invalid_argument("t must be at least 3");
    if (t > kMaxT) throw std::invalid_argument("t out of range");
    return GrassmannParams{4, std::int64_t{1} << t, t};
}

namespace {

void require_t(int t) { GrassmannParams::main_family(t); }

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::int64_t memo_horizon_for(int t) {
    // Enough to cache every generator index for moderate t; beyond that the
    // table falls back to windowed recomputation.
    return std::min<std::int64_t>(pow2(t) + pow2(t - 1), 768);
}

}  // namespace

gf2::SpecPtr ideal_ring(int t) {
    require_t(t);
    std::uint64_t a_weight = static_cast<std::uint64_t>(pow2(t) - 4);
    return gf2::make_spec({"w2", "w3", "w4", "a"},
                          {2, 3, 4, static_cast<std::uint32_t>(a_weight)});
}

gf2::MonomialOrder ideal_order() { return gf2::MonomialOrder::from_priority({3, 2, 0, 1}); }

gf2::MonomialOrder impstar_order() { return gf2::MonomialOrder::from_priority({2, 0, 1}); }

gf2::MonomialOrder k3_order() { return gf2::MonomialOrder::from_priority({0, 1}); }

std::uint64_t manifold_dimension(int t) {
    require_t(t);
    return 4 * static_cast<std::uint64_t>(pow2(t)) - 16;
}

bool TSet::contains(std::uint32_t b, std::uint32_t c) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(b, c));
}

TSet t_set(int t) {
    require_t(t);
    std::int64_t half = pow2(t - 1);
    TSet out{t, {}};
    // The i = 0 clause forces b <= 2^(t-1) - 2 and the i = t-1 clause forces
    // c <= 2^(t-1) - 2, so the search box is finite.
    for (std::int64_t b = 0; b <= half - 2; ++b) {
        for (std::int64_t c = 0; c <= half - 2; ++c) {
            bool ok = true;
            for (int i = 0; i < t && ok; ++i)
                ok = b < half - pow2(i) || c < pow2(i) - 1;
            if (ok)
                out.pairs.emplace_back(static_cast<std::uint32_t>(b),
                                       static_cast<std::uint32_t>(c));
        }
    }
    return out;
}

namespace {

std::vector<std::int64_t> generator_indices(int t) {
    std::vector<std::int64_t> idx;
    for (int i = 0; i < t; ++i) idx.push_back(pow2(t) - 3 + pow2(i));
    idx.push_back(pow2(t));
    return idx;
}

// g-polynomials embedded into the four-variable ring, in generator order:
// g_{2^t-3+2^i} for i = 0..t-1, then g_{2^t}.
std::vector<PolyF2> embedded_generators(int t, const gf2::SpecPtr& ring) {
    DualSWTable table(4, memo_horizon_for(t));
    auto polys = table.g_many(generator_indices(t));
    std::vector<PolyF2> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(gf2::embed(p, ring));
    return out;
}

void validate_parameter(const PolyF2& p, const gf2::SpecPtr& ring, std::uint64_t degree,
                        const char* label) {
    if (auto a_idx = p.spec()->index_of("a")) {
        for (const auto& m : p.terms())
            if (m.exp(*a_idx) != 0)
                throw std::invalid_argument(std::string(label) + " must not involve a");
    }
    std::uint64_t d = 0;
    if (!gf2::is_homogeneous(gf2::embed(p, ring), &d))
        throw std::invalid_argument(std::string(label) + " must be homogeneous");
    if (!p.is_zero() && d != degree)
        throw std::invalid_argument(std::string(label) + " has the wrong degree");
}

}  // namespace

PresentationI build_ideal_I(int t, const gf2::PolyF2& P, const gf2::PolyF2& Q) {
    require_t(t);
    auto ring = ideal_ring(t);
    std::uint64_t a_weight = static_cast<std::uint64_t>(pow2(t) - 4);
    validate_parameter(P, ring, a_weight, "P");
    validate_parameter(Q, ring, 2 * a_weight, "Q");
    PolyF2 p_poly = gf2::embed(P, ring);
    PolyF2 q_poly = gf2::embed(Q, ring);

    std::vector<PolyF2> gens = embedded_generators(t, ring);
    Monomial a{std::vector<std::uint32_t>{0, 0, 0, 1}};
    Monomial a2{std::vector<std::uint32_t>{0, 0, 0, 2}};
    gens.push_back(PolyF2::from_monomial(ring, a2) + gf2::mul(p_poly, a) + q_poly);
    return PresentationI{t, std::move(p_poly), std::move(q_poly),
                         OrderedGeneratorSet(ring, ideal_order(), std::move(gens))};
}

gf2::PolyF2 default_P(int t) {
    require_t(t);
    auto ring = ideal_ring(t);
    if (t == 3) return gf2::parse_poly(ring, "w2^2");
    return PolyF2::zero(ring);
}

gf2::PolyF2 default_Q(int t, int gamma) {
    require_t(t);
    if (gamma != 0 && gamma != 1) throw std::invalid_argument("gamma must be 0 or 1");
    auto ring = ideal_ring(t);
    if (t == 3 && gamma == 1) return gf2::parse_poly(ring, "w2*w3^2");
    return PolyF2::zero(ring);
}

PresentationI build_ideal_I_default(int t, int gamma) {
    return build_ideal_I(t, default_P(t), default_Q(t, gamma));
}

ImPstarPresentation build_im_pstar_ideal(int t) {
    require_t(t);
    DualSWTable table(4, memo_horizon_for(t));
    auto ring = table.g_spec();

    auto raw_polys = table.g_many({pow2(t) - 2, pow2(t) - 1, pow2(t)});
    OrderedGeneratorSet raw(ring, impstar_order(), std::move(raw_polys));

    auto gb_polys = table.g_many(generator_indices(t));
    OrderedGeneratorSet gb(ring, impstar_order(), std::move(gb_polys));
    return ImPstarPresentation{std::move(raw), std::move(gb)};
}

std::vector<gf2::Monomial> additive_basis(int t) {
    require_t(t);
    TSet ts = t_set(t);
    std::vector<Monomial> out;
    out.reserve(2 * static_cast<std::size_t>(pow2(t - 2)) * ts.n());
    for (std::uint32_t r = 0; r < 2; ++r)
        for (std::int64_t d = 0; d < pow2(t - 2); ++d)
            for (const auto& [b, c] : ts.pairs)
                out.push_back(Monomial{
                    std::vector<std::uint32_t>{b, c, static_cast<std::uint32_t>(d), r}});
    auto ord = ideal_order();
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        return gf2::compare_lex(x, y, ord) > 0;
    });
    return out;
}

gf2::BettiProfile poincare_profile(int t) {
    auto ring = ideal_ring(t);
    gf2::BettiProfile profile;
    for (std::uint64_t d = 0; d <= manifold_dimension(t); ++d) profile.dims[d] = 0;
    for (const auto& m : additive_basis(t)) profile.dims.at(m.degree(*ring)) += 1;
    return profile;
}

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

VerifyReport verify_suite(int t, const VerifyOptions& opts) {
    require_t(t);
    VerifyReport report{t, {}};
    auto add = [&](std::string name, bool passed, std::string detail) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    DualSWTable table4(4, memo_horizon_for(t));
    DualSWTable table3(3, memo_horizon_for(t));
    const auto& gring4 = table4.g_spec();

    // A faulty fixture toggles the top monomial of g_{2^t-1}.
    std::int64_t corrupted_index = pow2(t) - 1;
    Monomial toggle{std::vector<std::uint32_t>{
        static_cast<std::uint32_t>(pow2(t - 1) - 2), 1, 0}};
    auto g4 = [&](std::int64_t r) {
        PolyF2 val = table4.g(r);
        if (opts.corrupt_fixture && r == corrupted_index)
            val = val + PolyF2::from_monomial(gring4, toggle);
        return val;
    };

    // Leading monomials of the certified generator list.
    {
        bool ok = true;
        std::string bad;
        auto ord = impstar_order();
        for (int i = 0; i < t; ++i) {
            PolyF2 g = g4(pow2(t) - 3 + pow2(i));
            Monomial expect{std::vector<std::uint32_t>{
                static_cast<std::uint32_t>(pow2(t - 1) - pow2(i)),
                static_cast<std::uint32_t>(pow2(i) - 1), 0}};
            if (g.is_zero() || !(gf2::leading_monomial(g, ord) == expect)) {
                ok = false;
                bad += " i=" + std::to_string(i);
            }
        }
        PolyF2 top = g4(pow2(t));
        Monomial expect_top{std::vector<std::uint32_t>{
            0, 0, static_cast<std::uint32_t>(pow2(t - 2))}};
        if (top.is_zero() || !(gf2::leading_monomial(top, ord) == expect_top)) {
            ok = false;
            bad += " top";
        }
        add("leading-monomial-formulas", ok, ok ? "all generator leading monomials match" : bad);
    }

    // g_{2^t-3} vanishes for ranks 3 and 4.
    {
        bool ok4 = g4(pow2(t) - 3).is_zero();
        bool ok3 = table3.g(pow2(t) - 3).is_zero();
        add("g-vanishes-below-generators", ok4 && ok3,
            std::string("rank4=") + (ok4 ? "0" : "nonzero") + " rank3=" + (ok3 ? "0" : "nonzero"));
    }

    // Divisibility witnesses: w2^(2^(t-1)-1) in g_{2^t-2} and
    // w2^(2^(t-1)-2) w3 in g_{2^t-1}.
    {
        Monomial m1{std::vector<std::uint32_t>{
            static_cast<std::uint32_t>(pow2(t - 1) - 1), 0, 0}};
        Monomial m2{std::vector<std::uint32_t>{
            static_cast<std::uint32_t>(pow2(t - 1) - 2), 1, 0}};
        bool ok1 = g4(pow2(t) - 2).contains(m1);
        bool ok2 = g4(pow2(t) - 1).contains(m2);
        add("w2-power-monomials-present", ok1 && ok2,
            std::string(ok1 ? "" : "missing in g_{2^t-2}; ") +
                (ok2 ? "" : "missing in g_{2^t-1}; ") + ((ok1 && ok2) ? "both present" : ""));
    }

    // The rank-4 series reduced mod w4 is the rank-3 series.
    {
        bool ok = true;
        std::int64_t first_bad = -1;
        for (std::int64_t r = 0; r <= pow2(t); ++r) {
            PolyF2 reduced = gf2::substitute_zero(g4(r), 2, table3.g_spec());
            if (!(reduced == table3.g(r))) {
                ok = false;
                first_bad = r;
                break;
            }
        }
        add("mod-w4-matches-rank3", ok,
            ok ? "agreement up to r = 2^t" : "first mismatch at r = " + std::to_string(first_bad));
    }

    // The rank-3 generator list satisfies the Buchberger criterion.
    {
        std::vector<std::int64_t> idx;
        for (int i = 0; i < t; ++i) idx.push_back(pow2(t) - 3 + pow2(i));
        OrderedGeneratorSet k3(table3.g_spec(), k3_order(), table3.g_many(idx));
        auto cert = gf2::is_groebner(k3);
        add("rank3-buchberger", cert.verified,
            cert.verified ? "all S-polynomials reduce to zero" : "criterion failed");
    }

    // Full quotient dimension is twice the w-subring quotient dimension.
    {
        auto full = gf2::standard_monomials(build_ideal_I_default(t).gens);
        auto sub = gf2::standard_monomials(build_im_pstar_ideal(t).groebner);
        bool ok = full.size() == 2 * sub.size();
        add("dimension-ratio", ok,
            "full=" + std::to_string(full.size()) + " subring=" + std::to_string(sub.size()));
    }

    return report;
}

}  // namespace grass
