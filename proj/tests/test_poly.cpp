#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gf2/poly.hpp"
#include "oracles.hpp"

using namespace gf2;

namespace {

SpecPtr wring() { return make_spec({"w2", "w3", "w4"}, {2, 3, 4}); }
SpecPtr aring() { return make_spec({"w2", "w3", "w4", "a"}, {2, 3, 4, 4}); }

// w3 < w2 < w4 < a, most significant first.
MonomialOrder paper_order() { return MonomialOrder::from_priority({3, 2, 0, 1}); }

PolyF2 rand_poly(const SpecPtr& spec, std::mt19937_64& rng, std::size_t max_terms = 6,
                 std::uint32_t max_exp = 5) {
    std::vector<Monomial> terms;
    std::size_t n = rng() % (max_terms + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> exps(spec->arity());
        for (auto& e : exps) e = static_cast<std::uint32_t>(rng() % max_exp);
        terms.emplace_back(std::span<const std::uint32_t>(exps));
    }
    return PolyF2::from_terms(spec, std::move(terms));
}

}  // namespace

TEST_CASE("variable spec validation") {
    CHECK_THROWS_AS(make_spec({"x", "x"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_spec({"x"}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_spec({"x"}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_spec({"a", "b", "c", "d", "e", "f"}, {1, 1, 1, 1, 1, 1}),
                    std::invalid_argument);
    auto s = wring();
    CHECK(s->index_of("w3") == 1);
    CHECK_FALSE(s->index_of("w9").has_value());
}

TEST_CASE("addition is symmetric difference") {
    auto spec = wring();
    PolyF2 p = parse_poly(spec, "w2^3 + w3^2");
    PolyF2 q = parse_poly(spec, "w2^2*w3 + w3^2");
    CHECK(p + PolyF2::zero(spec) == p);
    CHECK((p + p).is_zero());
    CHECK(p + q == parse_poly(spec, "w2^3 + w2^2*w3"));
}

TEST_CASE("addition rejects mismatched specs") {
    PolyF2 p = PolyF2::one(wring());
    PolyF2 q = PolyF2::one(aring());
    CHECK_THROWS_AS(p + q, SpecMismatchError);
    // Equal specs built independently are interchangeable.
    PolyF2 r = parse_poly(wring(), "w2");
    CHECK(p + r == parse_poly(wring(), "1 + w2"));
}

TEST_CASE("multiplication basics") {
    auto spec = wring();
    PolyF2 p = parse_poly(spec, "w2^3 + w3^2");
    CHECK(p * PolyF2::one(spec) == p);
    PolyF2 s = parse_poly(spec, "w2 + w3");
    CHECK(s * s == parse_poly(spec, "w2^2 + w3^2"));
    CHECK(parse_poly(spec, "w3") * p == parse_poly(spec, "w2^3*w3 + w3^3"));
}

TEST_CASE("exponent overflow is detected") {
    auto spec = make_spec({"x"}, {1}, /*exponent_bound=*/16);
    PolyF2 x = parse_poly(spec, "x^15");
    CHECK_THROWS_AS(x * x, ExponentOverflowError);
    CHECK_THROWS_AS(power(parse_poly(spec, "x"), 16), ExponentOverflowError);
}

TEST_CASE("power") {
    auto spec = wring();
    PolyF2 zero = PolyF2::zero(spec);
    CHECK(power(zero, 0) == PolyF2::one(spec));
    CHECK(power(parse_poly(spec, "w2 + w3"), 2) == parse_poly(spec, "w2^2 + w3^2"));
    CHECK(power(parse_poly(spec, "w2"), 4) == parse_poly(spec, "w2^4"));

    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        PolyF2 p = rand_poly(spec, rng, 4, 3);
        std::uint64_t e = rng() % 6;
        CHECK(power(p, e) == testutil::naive_power(p, e));
    }
}

TEST_CASE("frobenius powers scale exponents termwise") {
    auto spec = aring();
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        PolyF2 p = rand_poly(spec, rng, 5, 4);
        unsigned i = static_cast<unsigned>(rng() % 7);
        std::vector<Monomial> scaled;
        for (const auto& m : p.terms())
            scaled.push_back(scale_exponents(m, std::uint64_t{1} << i, *spec));
        CHECK(power(p, std::uint64_t{1} << i) == PolyF2::from_terms(spec, std::move(scaled)));
    }
}

TEST_CASE("grade") {
    auto spec = wring();
    CHECK(grade(PolyF2::zero(spec)).empty());

    auto parts = grade(parse_poly(spec, "w2^3 + w3^2"));
    REQUIRE(parts.size() == 1);
    CHECK(parts.at(6) == parse_poly(spec, "w2^3 + w3^2"));

    auto mixed = grade(parse_poly(spec, "w2 + w3"));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.at(2) == parse_poly(spec, "w2"));
    CHECK(mixed.at(3) == parse_poly(spec, "w3"));

    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        PolyF2 p = rand_poly(spec, rng);
        PolyF2 sum = PolyF2::zero(spec);
        for (const auto& [d, comp] : grade(p)) {
            std::uint64_t cd = 0;
            CHECK(is_homogeneous(comp, &cd));
            CHECK(cd == d);
            sum = sum + comp;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("binomials mod 2") {
    CHECK(binom_mod2(4, 2) == 0);
    CHECK(binom_mod2(7, 3) == 1);
    for (std::uint64_t n = 0; n < 20; ++n) {
        CHECK(binom_mod2(n, 0) == 1);
        CHECK(binom_mod2(n, n) == 1);
        CHECK(binom_mod2(n, n + 1) == 0);
    }
    // Pascal parity table for all n <= 64.
    std::vector<std::vector<int>> row(65);
    for (std::size_t n = 0; n <= 64; ++n) {
        row[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) row[n][k] = (row[n - 1][k - 1] + row[n - 1][k]) % 2;
        for (std::size_t k = 0; k <= n; ++k) CHECK(binom_mod2(n, k) == row[n][k]);
    }
}

TEST_CASE("bracket coefficients") {
    std::vector<std::uint64_t> single{9};
    CHECK(bracket_coeff(single) == 1);
    std::vector<std::uint64_t> pair{1, 1};
    CHECK(bracket_coeff(pair) == 0);  // C(2,1) is even
    std::vector<std::uint64_t> tail{0, 0, 0, 17};
    CHECK(bracket_coeff(tail) == 1);
    std::vector<std::uint64_t> mixed{2, 1};  // C(3,2) = 3
    CHECK(bracket_coeff(mixed) == 1);
}

TEST_CASE("lexicographic comparison under the certification order") {
    auto spec = aring();
    auto ord = paper_order();
    Monomial w2cubed = parse_poly(spec, "w2^3").terms().front();
    Monomial w2sqw3 = parse_poly(spec, "w2^2*w3").terms().front();
    CHECK(compare_lex(w2cubed, w2cubed, ord) == std::strong_ordering::equal);
    CHECK(compare_lex(w2cubed, w2sqw3, ord) == std::strong_ordering::greater);
    // w4 outranks any monomial in w2 and w3 alone.
    Monomial w4sq = parse_poly(spec, "w4^2").terms().front();
    CHECK(compare_lex(w4sq, parse_poly(spec, "w2^9*w3^9").terms().front(), ord) ==
          std::strong_ordering::greater);
    // a outranks w4 powers.
    Monomial a = parse_poly(spec, "a").terms().front();
    CHECK(compare_lex(a, parse_poly(spec, "w4^7").terms().front(), ord) ==
          std::strong_ordering::greater);
}

TEST_CASE("order is total and multiplicative") {
    auto spec = aring();
    auto ord = paper_order();
    std::mt19937_64 rng(23);
    auto mono = [&] {
        std::vector<std::uint32_t> exps(spec->arity());
        for (auto& e : exps) e = static_cast<std::uint32_t>(rng() % 6);
        return Monomial{std::span<const std::uint32_t>(exps)};
    };
    for (int it = 0; it < 500; ++it) {
        Monomial m1 = mono(), m2 = mono(), m3 = mono();
        auto c = compare_lex(m1, m2, ord);
        if (c == std::strong_ordering::equal) CHECK(m1 == m2);
        CHECK(compare_lex(mul(m1, m3, *spec), mul(m2, m3, *spec), ord) == c);
    }
}

TEST_CASE("leading monomial") {
    auto spec = aring();
    auto ord = paper_order();
    CHECK(leading_monomial(parse_poly(spec, "w2^3 + w3^2"), ord) ==
          parse_poly(spec, "w2^3").terms().front());
    CHECK(leading_monomial(parse_poly(spec, "w2*w3^2"), ord) ==
          parse_poly(spec, "w2*w3^2").terms().front());
    // g_8 has leading monomial w4^2.
    CHECK(leading_monomial(parse_poly(spec, "w2^4 + w2*w3^2 + w2^2*w4 + w4^2"), ord) ==
          parse_poly(spec, "w4^2").terms().front());
    CHECK_THROWS_AS(leading_monomial(PolyF2::zero(spec), ord), ZeroPolynomialError);
}

TEST_CASE("divides, lcm, quotient") {
    auto spec = wring();
    auto term = [&](const char* s) { return parse_poly(spec, s).terms().front(); };
    CHECK(divides(Monomial::one(3), term("w2^4*w3")));
    CHECK_FALSE(divides(term("w2^2"), term("w2*w3")));
    CHECK(divides(term("w2^2*w3"), term("w2^3*w3^2")));
    CHECK(lcm(term("w2^3"), term("w2^3")) == term("w2^3"));
    CHECK(lcm(term("w2^3"), term("w2^2*w3")) == term("w2^3*w3"));
    CHECK(lcm(term("w4^2"), term("w2^2")) == term("w2^2*w4^2"));
    CHECK(quotient(term("w2^3*w3"), term("w2^2")) == term("w2*w3"));
    CHECK_THROWS_AS(quotient(term("w2"), term("w3")), std::invalid_argument);
}

TEST_CASE("text form") {
    auto spec = aring();
    auto ord = paper_order();
    CHECK(to_string(PolyF2::zero(spec), ord) == "0");
    CHECK(to_string(PolyF2::one(spec), ord) == "1");
    CHECK(to_string(parse_poly(spec, "w3^2 + w2^3"), ord) == "w2^3 + w3^2");
    CHECK(to_string(parse_poly(spec, "w2^2*a"), ord) == "w2^2*a");
    // Round-trip on random polynomials.
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        PolyF2 p = rand_poly(spec, rng);
        CHECK(parse_poly(spec, to_string(p, ord)) == p);
    }
    CHECK_THROWS_AS(parse_poly(spec, "w9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(spec, "w2^"), std::invalid_argument);
}

TEST_CASE("monomial enumeration by degree") {
    auto spec = wring();
    CHECK(monomials_of_degree(*spec, 0).size() == 1);
    CHECK(monomials_of_degree(*spec, 1).empty());
    // degree 6: w2^3, w2*w4, w3^2
    CHECK(monomials_of_degree(*spec, 6).size() == 3);
    // degree 8: w2^4, w2^2*w4, w2*w3^2, w4^2
    CHECK(monomials_of_degree(*spec, 8).size() == 4);
}

TEST_CASE("substitute variable to zero and drop it") {
    auto src = wring();
    auto dst = make_spec({"w2", "w3"}, {2, 3});
    PolyF2 p = parse_poly(src, "w2^4 + w2*w3^2 + w2^2*w4 + w4^2");
    CHECK(substitute_zero(p, 2, dst) == parse_poly(dst, "w2^4 + w2*w3^2"));
    CHECK_THROWS_AS(substitute_zero(p, 0, dst), SpecMismatchError);
}

TEST_CASE("embed into a wider spec") {
    auto src = make_spec({"w2", "w3"}, {2, 3});
    auto dst = aring();
    CHECK(embed(parse_poly(src, "w2^2*w3 + w3^3"), dst) ==
          parse_poly(dst, "w2^2*w3 + w3^3"));
    auto bad = make_spec({"w2", "w3"}, {2, 5});
    CHECK_THROWS_AS(embed(parse_poly(bad, "w3"), dst), SpecMismatchError);
}
