#include "selfcheck/selfcheck.hpp"

#include <algorithm>
#include <functional>

#include "gf2/groebner.hpp"
#include "grassmann/presentation.hpp"
#include "steenrod/steenrod.hpp"

namespace selfcheck {

using gf2::Monomial;
using gf2::PolyF2;

gf2::PolyF2 random_poly(const gf2::SpecPtr& spec, std::size_t max_terms, std::uint32_t max_exp,
                        std::mt19937_64& rng) {
    std::size_t nterms = rng() % (max_terms + 1);
    std::vector<Monomial> terms;
    terms.reserve(nterms);
    for (std::size_t i = 0; i < nterms; ++i) {
        std::vector<std::uint32_t> exps(spec->arity());
        for (auto& e : exps) e = static_cast<std::uint32_t>(rng() % max_exp);
        terms.emplace_back(std::span<const std::uint32_t>(exps));
    }
    return PolyF2::from_terms(spec, std::move(terms));
}

gf2::PolyF2 random_homogeneous(const gf2::SpecPtr& spec, std::uint64_t degree,
                               std::mt19937_64& rng) {
    std::vector<Monomial> terms;
    for (const auto& m : gf2::monomials_of_degree(*spec, degree))
        if (rng() & 1) terms.push_back(m);
    return PolyF2::from_terms(spec, std::move(terms));
}

namespace {

using CaseFn = std::function<bool(std::mt19937_64&)>;

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases,
                      const CaseFn& one_case) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        if (!one_case(rng))
            return {name, false, cases, "failed at case " + std::to_string(i)};
    }
    return {name, true, cases, "ok"};
}

gf2::SpecPtr sample_spec() { return grass::ideal_ring(3); }

PolyF2 naive_power(const PolyF2& p, std::uint64_t e) {
    PolyF2 r = PolyF2::one(p.spec());
    for (std::uint64_t i = 0; i < e; ++i) r = r * p;
    return r;
}

SuiteResult ring_axioms(std::uint64_t seed, std::size_t cases) {
    auto spec = sample_spec();
    return run_suite("ring-axioms", seed, cases, [&](std::mt19937_64& rng) {
        PolyF2 p = random_poly(spec, 6, 4, rng);
        PolyF2 q = random_poly(spec, 6, 4, rng);
        PolyF2 r = random_poly(spec, 4, 4, rng);
        bool ok = (p + q) + r == p + (q + r);
        ok = ok && p + q == q + p;
        ok = ok && p * q == q * p;
        ok = ok && (p * q) * r == p * (q * r);
        ok = ok && p * (q + r) == p * q + p * r;
        ok = ok && (p + p).is_zero();
        ok = ok && (p + q) * (p + q) == p * p + q * q;
        return ok;
    });
}

SuiteResult frobenius(std::uint64_t seed, std::size_t cases) {
    auto spec = sample_spec();
    return run_suite("frobenius-power", seed, cases, [&](std::mt19937_64& rng) {
        PolyF2 p = random_poly(spec, 5, 3, rng);
        unsigned i = static_cast<unsigned>(rng() % 7);
        std::uint64_t e = std::uint64_t{1} << i;
        PolyF2 fast = gf2::power(p, e);
        if (!(fast == naive_power(p, e))) return false;
        // 2^i-th powers act termwise on the monomials.
        std::vector<Monomial> scaled;
        for (const auto& m : p.terms()) scaled.push_back(gf2::scale_exponents(m, e, *spec));
        return fast == PolyF2::from_terms(spec, std::move(scaled));
    });
}

SuiteResult lex_order(std::uint64_t seed, std::size_t cases) {
    auto spec = sample_spec();
    auto ord = grass::ideal_order();
    return run_suite("lex-order", seed, cases, [&](std::mt19937_64& rng) {
        auto mono = [&](std::mt19937_64& r) {
            std::vector<std::uint32_t> exps(spec->arity());
            for (auto& e : exps) e = static_cast<std::uint32_t>(r() % 5);
            return Monomial{std::span<const std::uint32_t>(exps)};
        };
        Monomial m1 = mono(rng), m2 = mono(rng), m3 = mono(rng);
        auto c12 = gf2::compare_lex(m1, m2, ord);
        auto c21 = gf2::compare_lex(m2, m1, ord);
        // Totality and antisymmetry.
        if (c12 == std::strong_ordering::equal && !(m1 == m2)) return false;
        if (c12 == std::strong_ordering::less && c21 != std::strong_ordering::greater)
            return false;
        if (c12 == std::strong_ordering::greater && c21 != std::strong_ordering::less)
            return false;
        // Multiplicativity.
        Monomial p1 = gf2::mul(m1, m3, *spec);
        Monomial p2 = gf2::mul(m2, m3, *spec);
        if (gf2::compare_lex(p1, p2, ord) != c12) return false;
        // Transitivity sample.
        auto c23 = gf2::compare_lex(m2, m3, ord);
        if (c12 == std::strong_ordering::less && c23 == std::strong_ordering::less &&
            gf2::compare_lex(m1, m3, ord) != std::strong_ordering::less)
            return false;
        return true;
    });
}

SuiteResult grading(std::uint64_t seed, std::size_t cases) {
    auto spec = sample_spec();
    return run_suite("grading", seed, cases, [&](std::mt19937_64& rng) {
        PolyF2 p = random_poly(spec, 8, 4, rng);
        auto parts = gf2::grade(p);
        PolyF2 sum = PolyF2::zero(spec);
        for (const auto& [d, comp] : parts) {
            std::uint64_t cd = 0;
            if (!gf2::is_homogeneous(comp, &cd) || comp.is_zero() || cd != d) return false;
            sum = sum + comp;
        }
        return sum == p;
    });
}

SuiteResult nf_linear_idempotent(std::uint64_t seed, std::size_t cases) {
    auto pres = grass::build_ideal_I_default(3, 0);
    auto spec = pres.gens.spec();
    return run_suite("nf-linear-idempotent", seed, cases, [&](std::mt19937_64& rng) {
        PolyF2 p = random_poly(spec, 6, 4, rng);
        PolyF2 q = random_poly(spec, 6, 4, rng);
        PolyF2 np = gf2::normal_form(p, pres.gens);
        PolyF2 nq = gf2::normal_form(q, pres.gens);
        if (!(gf2::normal_form(p + q, pres.gens) == np + nq)) return false;
        return gf2::normal_form(np, pres.gens) == np;
    });
}

SuiteResult trace_replay(std::uint64_t seed, std::size_t cases) {
    auto pres = grass::build_ideal_I_default(3, 1);
    auto spec = pres.gens.spec();
    return run_suite("trace-replay", seed, cases, [&](std::mt19937_64& rng) {
        PolyF2 p = random_poly(spec, 6, 4, rng);
        auto trace = gf2::top_reduce(p, pres.gens);
        PolyF2 r = p;
        for (const auto& step : trace.steps) {
            if (r.is_zero()) return false;
            Monomial lm = gf2::leading_monomial(r, pres.gens.order());
            if (!(gf2::mul(pres.gens.leading(step.generator), step.multiplier, *spec) == lm))
                return false;
            r = r + gf2::mul(pres.gens.gen(step.generator), step.multiplier);
        }
        return r == trace.remainder;
    });
}

SuiteResult cartan_derivation(std::uint64_t seed, std::size_t cases) {
    steenrod::CoefficientAssignment assign;
    assign.kappa = 1;  // the consistent rule set
    steenrod::SqRules rules(assign);
    auto pres = steenrod::presentation_for(assign);
    auto basis = grass::additive_basis(3);
    auto spec = rules.ring();
    return run_suite("cartan-derivation", seed, cases, [&](std::mt19937_64& rng) {
        PolyF2 x = PolyF2::from_monomial(spec, basis[rng() % basis.size()]);
        PolyF2 y = PolyF2::from_monomial(spec, basis[rng() % basis.size()]);
        PolyF2 xy = gf2::normal_form(x * y, pres.gens);
        auto s = [&](int i, const PolyF2& v) { return steenrod::sq(i, v, rules, pres); };
        // Sq^1 is a derivation.
        PolyF2 lhs1 = s(1, xy);
        PolyF2 rhs1 = gf2::normal_form(s(1, x) * y + x * s(1, y), pres.gens);
        if (!(lhs1 == rhs1)) return false;
        // Cartan for Sq^2.
        PolyF2 lhs2 = s(2, xy);
        PolyF2 rhs2 =
            gf2::normal_form(s(2, x) * y + s(1, x) * s(1, y) + x * s(2, y), pres.gens);
        if (!(lhs2 == rhs2)) return false;
        // Top square rule.
        std::uint64_t dx = 0;
        gf2::is_homogeneous(x, &dx);
        return s(static_cast<int>(dx), x) == gf2::normal_form(x * x, pres.gens);
    });
}

SuiteResult binom_pascal(std::uint64_t, std::size_t) {
    // Deterministic: parity of the Pascal recurrence for all n <= 64.
    std::vector<std::vector<int>> pascal(65);
    for (std::size_t n = 0; n <= 64; ++n) {
        pascal[n].resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == 0 || k == n)
                pascal[n][k] = 1;
            else
                pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % 2;
        }
    }
    for (std::uint64_t n = 0; n <= 64; ++n)
        for (std::uint64_t k = 0; k <= n; ++k)
            if (gf2::binom_mod2(n, k) != pascal[n][k])
                return {"binom-pascal", false, 65, "mismatch at n=" + std::to_string(n)};
    return {"binom-pascal", true, 65, "ok"};
}

SuiteResult betti_oracle(std::uint64_t, std::size_t, std::uint64_t matrix_budget) {
    // Enumerated standard-monomial counts against the dense rank oracle.
    auto pres = grass::build_ideal_I_default(3, 0);
    auto profile = gf2::quotient_dims_bruteforce(pres.gens, 16, matrix_budget);
    gf2::BettiProfile expected = grass::poincare_profile(3);
    bool ok = profile == expected;
    return {"betti-oracle-agreement", ok, 17, ok ? "ok" : "profiles differ"};
}

}  // namespace

std::vector<SuiteResult> run_all(std::uint64_t seed, std::size_t cases,
                                 std::uint64_t matrix_budget) {
    std::vector<SuiteResult> out;
    out.push_back(ring_axioms(seed + 1, cases));
    out.push_back(frobenius(seed + 2, cases));
    out.push_back(lex_order(seed + 3, cases));
    out.push_back(grading(seed + 4, cases));
    out.push_back(nf_linear_idempotent(seed + 5, cases));
    out.push_back(trace_replay(seed + 6, cases));
    out.push_back(cartan_derivation(seed + 7, cases));
    out.push_back(binom_pascal(seed, cases));
    out.push_back(betti_oracle(seed, cases, matrix_budget));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace selfcheck
