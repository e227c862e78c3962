#include "steenrod/steenrod.hpp"

#include <stdexcept>

#include "gf2/groebner.hpp"

namespace steenrod {

using gf2::Monomial;
using gf2::PolyF2;

namespace {

void require_bit(int v, const char* name) {
    if (v != 0 && v != 1) throw std::invalid_argument(std::string(name) + " must be 0 or 1");
}

void validate(const CoefficientAssignment& a) {
    require_bit(a.alpha, "alpha");
    require_bit(a.beta, "beta");
    require_bit(a.gamma, "gamma");
    require_bit(a.delta, "delta");
    require_bit(a.epsilon, "epsilon");
    require_bit(a.kappa, "kappa");
    require_bit(a.lambda, "lambda");
    require_bit(a.mu, "mu");
}

PolyF2 maybe(int bit, const gf2::SpecPtr& ring, const char* text) {
    return bit ? gf2::parse_poly(ring, text) : PolyF2::zero(ring);
}

constexpr std::size_t kAIndex = 3;  // slot of a in the presentation ring

}  // namespace

grass::PresentationI presentation_for(const CoefficientAssignment& assign) {
    validate(assign);
    auto ring = grass::ideal_ring(3);
    PolyF2 p = maybe(assign.alpha, ring, "w4") + maybe(assign.beta, ring, "w2^2");
    PolyF2 q = maybe(assign.gamma, ring, "w2*w3^2") + maybe(assign.delta, ring, "w2^2*w4");
    return grass::build_ideal_I(3, p, q);
}

SqRules::SqRules(const CoefficientAssignment& assign)
    : assign_(assign),
      ring_(grass::ideal_ring(3)),
      total_w_{gf2::parse_poly(ring_, "w2 + w3 + w2^2"),
               gf2::parse_poly(ring_, "w3 + w2*w3 + w3^2"),
               gf2::parse_poly(ring_, "w4 + w2*w4 + w3*w4 + w4^2")},
      sq1_a_(maybe(assign.epsilon, ring_, "w2*w3")),
      sq2_a_(maybe(assign.kappa, ring_, "w2*a") + maybe(assign.lambda, ring_, "w2*w4") +
             maybe(assign.mu, ring_, "w3^2")) {
    validate(assign_);
}

const gf2::PolyF2& SqRules::total_sq_w(std::size_t var_index) const {
    return total_w_.at(var_index);
}

gf2::PolyF2 SqRules::sq_generator(int i, std::string_view name) const {
    if (i < 0) throw std::invalid_argument("negative Steenrod index");
    if (name == "a") {
        switch (i) {
            case 0: return gf2::parse_poly(ring_, "a");
            case 1: return sq1_a_;
            case 2: return sq2_a_;
            default:
                throw std::domain_error("Sq^" + std::to_string(i) +
                                        "(a) is not determined by the rules");
        }
    }
    auto idx = ring_->index_of(name);
    if (!idx || *idx == kAIndex) throw std::invalid_argument("unknown generator name");
    std::uint64_t deg = ring_->weight(*idx);
    if (static_cast<std::uint64_t>(i) > deg) return PolyF2::zero(ring_);
    auto pieces = gf2::grade(total_w_.at(*idx));
    auto it = pieces.find(deg + static_cast<std::uint64_t>(i));
    return it == pieces.end() ? PolyF2::zero(ring_) : it->second;
}

namespace {

// Sq^i of a monomial in w2, w3, w4 alone: the total square is multiplicative,
// so expand the product of per-variable total squares and take the graded
// piece at degree + i.
PolyF2 sq_w_monomial(int i, const Monomial& m, const SqRules& rules) {
    const auto& ring = rules.ring();
    PolyF2 total = PolyF2::one(ring);
    for (std::size_t v = 0; v < kAIndex; ++v)
        if (m.exp(v) != 0) total = total * gf2::power(rules.total_sq_w(v), m.exp(v));
    auto pieces = gf2::grade(total);
    auto it = pieces.find(m.degree(*ring) + static_cast<std::uint64_t>(i));
    return it == pieces.end() ? PolyF2::zero(ring) : it->second;
}

}  // namespace

gf2::PolyF2 sq(int i, const gf2::PolyF2& x, const SqRules& rules,
               const grass::PresentationI& pres) {
    if (i < 0) throw std::invalid_argument("negative Steenrod index");
    const auto& ring = rules.ring();
    gf2::require_compatible(x.spec(), ring);
    if (!gf2::is_homogeneous(x)) throw std::invalid_argument("sq requires homogeneous input");

    PolyF2 nf = gf2::normal_form(x, pres.gens);
    if (i == 0) return nf;

    PolyF2 acc = PolyF2::zero(ring);
    Monomial a_mono{std::vector<std::uint32_t>{0, 0, 0, 1}};
    for (const auto& term : nf.terms()) {
        std::uint32_t a_exp = term.exp(kAIndex);
        std::vector<std::uint32_t> w_exps{term.exp(0), term.exp(1), term.exp(2), 0};
        Monomial w_part{w_exps};
        if (a_exp == 0) {
            acc = acc + sq_w_monomial(i, w_part, rules);
            continue;
        }
        // Normal-form terms carry a-exponent at most 1. Cartan over a * m:
        // Sq^j(a) pairs with Sq^(i-j)(m) for j = 0..4.
        for (int j = 0; j <= 4 && j <= i; ++j) {
            PolyF2 cof = sq_w_monomial(i - j, w_part, rules);
            if (cof.is_zero()) continue;
            switch (j) {
                case 0:
                    acc = acc + gf2::mul(cof, a_mono);
                    break;
                case 1:
                    acc = acc + rules.sq1_a() * cof;
                    break;
                case 2:
                    acc = acc + rules.sq2_a() * cof;
                    break;
                case 3: {
                    // Sq^3(a) is undetermined; it only matters against a
                    // cofactor that survives in the quotient.
                    if (!gf2::normal_form(cof, pres.gens).is_zero())
                        throw std::domain_error(
                            "sq: result depends on the undetermined Sq^3(a)");
                    break;
                }
                case 4:
                    // Top square of a; the quotient rewrites a^2.
                    acc = acc + gf2::mul(gf2::mul(cof, a_mono), a_mono);
                    break;
            }
        }
    }
    return gf2::normal_form(acc, pres.gens);
}

bool ConstraintReport::all_passed() const {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

bool ConstraintReport::passed(std::string_view name) const {
    for (const auto& r : results)
        if (r.name == name) return r.passed;
    throw std::invalid_argument("unknown constraint name");
}

const std::vector<std::string>& constraint_names() {
    static const std::vector<std::string> names = {
        "sq4-vanishes-on-degree-12", "sq1-sq1-is-zero", "sq2-of-square-is-square-of-sq1",
        "adem-sq2-sq2-equals-sq3-sq1", "sq4-vanishes-on-a-cubed"};
    return names;
}

ConstraintReport check_axioms(const CoefficientAssignment& assign) {
    validate(assign);
    if (assign.beta != 1)
        throw std::invalid_argument("check_axioms takes beta = 1 as an input fact");

    SqRules rules(assign);
    grass::PresentationI pres = presentation_for(assign);
    const auto& ring = rules.ring();
    auto nf = [&](const PolyF2& p) { return gf2::normal_form(p, pres.gens); };
    auto ord = grass::ideal_order();

    PolyF2 a_poly = gf2::parse_poly(ring, "a");
    PolyF2 a_squared = nf(a_poly * a_poly);
    PolyF2 sq1a = sq(1, a_poly, rules, pres);
    PolyF2 sq2a = sq(2, a_poly, rules, pres);

    ConstraintReport report{assign, {}};
    auto record = [&](const std::string& name, const PolyF2& residual) {
        report.results.push_back(
            {name, residual.is_zero(), gf2::to_string(residual, ord)});
    };

    // Sq^4 kills the degree-12 class a * w2 * w3^2 (the Wu class in degree 4
    // vanishes, so Sq^4 is zero on degree 12).
    record(constraint_names()[0], sq(4, gf2::parse_poly(ring, "w2*w3^2*a"), rules, pres));

    // Sq^1 Sq^1 = 0 applied to a.
    record(constraint_names()[1], sq(1, sq1a, rules, pres));

    // Cartan on a * a: Sq^2(a^2) = (Sq^1 a)^2.
    record(constraint_names()[2], nf(sq(2, a_squared, rules, pres) + sq1a * sq1a));

    // Adem relation Sq^2 Sq^2 = Sq^3 Sq^1 applied to a.
    record(constraint_names()[3], nf(sq(2, sq2a, rules, pres) + sq(3, sq1a, rules, pres)));

    // Sq^4 kills a^3 (degree 12 again); Cartan over a * a^2 leaves
    // a^4 + Sq^2(a)(Sq^1 a)^2 + a (Sq^2 a)^2 since odd squares of a^2 vanish.
    record(constraint_names()[4],
           nf(a_squared * a_squared + sq2a * sq1a * sq1a + a_poly * sq2a * sq2a));

    return report;
}

std::vector<CoefficientAssignment> solve_coefficients(const std::set<std::string>& disabled) {
    for (const auto& name : disabled) {
        bool known = false;
        for (const auto& n : constraint_names()) known = known || n == name;
        if (!known) throw std::invalid_argument("unknown constraint: " + name);
    }
    std::vector<CoefficientAssignment> survivors;
    for (int bits = 0; bits < 64; ++bits) {
        for (int gamma = 0; gamma <= 1; ++gamma) {
            CoefficientAssignment assign;
            assign.alpha = (bits >> 5) & 1;
            assign.delta = (bits >> 4) & 1;
            assign.epsilon = (bits >> 3) & 1;
            assign.kappa = (bits >> 2) & 1;
            assign.lambda = (bits >> 1) & 1;
            assign.mu = bits & 1;
            assign.beta = 1;
            assign.gamma = gamma;
            ConstraintReport report = check_axioms(assign);
            bool ok = true;
            for (const auto& r : report.results)
                if (!disabled.count(r.name) && !r.passed) ok = false;
            if (ok) survivors.push_back(assign);
        }
    }
    return survivors;
}

}  // namespace steenrod
