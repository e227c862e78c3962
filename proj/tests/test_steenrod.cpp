#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gf2/groebner.hpp"
#include "steenrod/steenrod.hpp"

using namespace steenrod;
using gf2::PolyF2;

namespace {

CoefficientAssignment survivor(int gamma) {
    CoefficientAssignment a;
    a.kappa = 1;
    a.gamma = gamma;
    return a;
}

}  // namespace

TEST_CASE("generator images follow Wu's formula") {
    SqRules rules(survivor(0));
    auto ring = rules.ring();
    auto img = [&](int i, const char* name) { return rules.sq_generator(i, name); };

    CHECK(img(1, "w2") == gf2::parse_poly(ring, "w3"));
    CHECK(img(1, "w3").is_zero());
    CHECK(img(1, "w4").is_zero());
    CHECK(img(2, "w2") == gf2::parse_poly(ring, "w2^2"));
    CHECK(img(2, "w3") == gf2::parse_poly(ring, "w2*w3"));
    CHECK(img(2, "w4") == gf2::parse_poly(ring, "w2*w4"));
    CHECK(img(3, "w2").is_zero());
    CHECK(img(3, "w3") == gf2::parse_poly(ring, "w3^2"));
    CHECK(img(3, "w4") == gf2::parse_poly(ring, "w3*w4"));
    CHECK(img(4, "w4") == gf2::parse_poly(ring, "w4^2"));

    CHECK(img(0, "a") == gf2::parse_poly(ring, "a"));
    CHECK(img(1, "a").is_zero());
    CHECK(img(2, "a") == gf2::parse_poly(ring, "w2*a"));
    CHECK_THROWS_AS(img(3, "a"), std::domain_error);
}

TEST_CASE("squares on quotient classes") {
    auto assign = survivor(0);
    SqRules rules(assign);
    auto pres = presentation_for(assign);
    auto ring = rules.ring();
    auto s = [&](int i, const char* text) {
        return sq(i, gf2::parse_poly(ring, text), rules, pres);
    };

    CHECK(s(1, "w2") == gf2::parse_poly(ring, "w3"));
    CHECK(s(1, "w2*w3") == gf2::parse_poly(ring, "w3^2"));
    for (int i = 1; i <= 4; ++i) CHECK(s(i, "w2*w3^2").is_zero());
    CHECK(s(0, "w2^3") == gf2::normal_form(gf2::parse_poly(ring, "w2^3"), pres.gens));

    CHECK_THROWS_AS(s(1, "w2 + w3"), std::invalid_argument);
    CHECK_THROWS_AS(s(3, "a"), std::domain_error);
}

TEST_CASE("constraint report for the consistent assignment") {
    for (int gamma : {0, 1}) {
        ConstraintReport report = check_axioms(survivor(gamma));
        CHECK(report.all_passed());
        CHECK(report.results.size() == constraint_names().size());
    }
}

TEST_CASE("single-bit perturbations fail the expected constraint") {
    SUBCASE("alpha = 1 leaves a residual in degree 16") {
        auto bad = survivor(0);
        bad.alpha = 1;
        ConstraintReport report = check_axioms(bad);
        CHECK_FALSE(report.passed("sq4-vanishes-on-degree-12"));
        bool found = false;
        for (const auto& r : report.results)
            if (r.name == "sq4-vanishes-on-degree-12") {
                CHECK(r.residual == "w2*w3^2*w4*a");
                found = true;
            }
        CHECK(found);
    }

    SUBCASE("epsilon = 1 breaks Sq1 Sq1 = 0") {
        auto bad = survivor(1);
        bad.epsilon = 1;
        ConstraintReport report = check_axioms(bad);
        CHECK_FALSE(report.passed("sq1-sq1-is-zero"));
        for (const auto& r : report.results)
            if (r.name == "sq1-sq1-is-zero") CHECK(r.residual == "w3^2");
    }

    SUBCASE("kappa = 0 breaks the Cartan square identity") {
        auto bad = survivor(0);
        bad.kappa = 0;
        CHECK_FALSE(check_axioms(bad).passed("sq2-of-square-is-square-of-sq1"));
    }

    SUBCASE("lambda or mu = 1 break the Adem relation") {
        auto bad = survivor(0);
        bad.lambda = 1;
        CHECK_FALSE(check_axioms(bad).passed("adem-sq2-sq2-equals-sq3-sq1"));
        bad = survivor(0);
        bad.mu = 1;
        CHECK_FALSE(check_axioms(bad).passed("adem-sq2-sq2-equals-sq3-sq1"));
    }

    SUBCASE("delta = 1 breaks the top-degree square constraint") {
        auto bad = survivor(0);
        bad.delta = 1;
        CHECK_FALSE(check_axioms(bad).passed("sq4-vanishes-on-a-cubed"));
    }
}

TEST_CASE("beta must be 1") {
    CoefficientAssignment a;
    a.beta = 0;
    CHECK_THROWS_AS(check_axioms(a), std::invalid_argument);
    a.beta = 2;
    CHECK_THROWS_AS(check_axioms(a), std::invalid_argument);
}

TEST_CASE("exhaustive solver") {
    auto survivors = solve_coefficients();
    REQUIRE(survivors.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(survivors[i].alpha == 0);
        CHECK(survivors[i].beta == 1);
        CHECK(survivors[i].delta == 0);
        CHECK(survivors[i].epsilon == 0);
        CHECK(survivors[i].kappa == 1);
        CHECK(survivors[i].lambda == 0);
        CHECK(survivors[i].mu == 0);
        CHECK(survivors[i].gamma == static_cast<int>(i));
    }

    SUBCASE("the degree-12 constraint is what pins alpha") {
        auto relaxed = solve_coefficients({"sq4-vanishes-on-degree-12"});
        CHECK(relaxed.size() > survivors.size());
        for (const auto& s : survivors)
            CHECK(std::find(relaxed.begin(), relaxed.end(), s) != relaxed.end());
        bool alpha_one = false;
        for (const auto& s : relaxed) alpha_one = alpha_one || s.alpha == 1;
        CHECK(alpha_one);
    }

    SUBCASE("unknown constraint names are rejected") {
        CHECK_THROWS_AS(solve_coefficients({"no-such-constraint"}), std::invalid_argument);
    }

    SUBCASE("result is independent of evaluation order") {
        // Re-filter all assignments by checking constraints in reverse.
        std::vector<CoefficientAssignment> refiltered;
        for (int bits = 0; bits < 64; ++bits)
            for (int gamma = 0; gamma <= 1; ++gamma) {
                CoefficientAssignment a;
                a.alpha = (bits >> 5) & 1;
                a.delta = (bits >> 4) & 1;
                a.epsilon = (bits >> 3) & 1;
                a.kappa = (bits >> 2) & 1;
                a.lambda = (bits >> 1) & 1;
                a.mu = bits & 1;
                a.gamma = gamma;
                auto report = check_axioms(a);
                bool ok = true;
                for (auto it = report.results.rbegin(); it != report.results.rend(); ++it)
                    ok = ok && it->passed;
                if (ok) refiltered.push_back(a);
            }
        CHECK(refiltered == survivors);
    }
}

TEST_CASE("additivity, Cartan and derivation properties") {
    auto assign = survivor(1);
    SqRules rules(assign);
    auto pres = presentation_for(assign);
    auto ring = rules.ring();
    auto basis = grass::additive_basis(3);
    std::mt19937_64 rng(97);

    for (int it = 0; it < 300; ++it) {
        PolyF2 x = PolyF2::from_monomial(ring, basis[rng() % basis.size()]);
        PolyF2 y = PolyF2::from_monomial(ring, basis[rng() % basis.size()]);
        PolyF2 xy = gf2::normal_form(x * y, pres.gens);
        for (int i : {1, 2}) {
            PolyF2 lhs = sq(i, xy, rules, pres);
            PolyF2 rhs = PolyF2::zero(ring);
            for (int j = 0; j <= i; ++j)
                rhs = rhs + sq(j, x, rules, pres) * sq(i - j, y, rules, pres);
            CHECK(lhs == gf2::normal_form(rhs, pres.gens));
        }
        // Top square.
        std::uint64_t dx = 0;
        gf2::is_homogeneous(x, &dx);
        CHECK(sq(static_cast<int>(dx), x, rules, pres) == gf2::normal_form(x * x, pres.gens));
        // Additivity within one degree.
        std::uint64_t dy = 0;
        gf2::is_homogeneous(y, &dy);
        if (dx == dy)
            CHECK(sq(2, x + y, rules, pres) ==
                  sq(2, x, rules, pres) + sq(2, y, rules, pres));
    }
}
