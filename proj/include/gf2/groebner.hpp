#pragma once

// S-polynomials, leading-monomial reduction, the Buchberger criterion with
// replayable certificates, Buchberger completion, standard-monomial
// enumeration and an independent dense linear-algebra oracle for graded
// quotient dimensions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gf2/poly.hpp"

namespace gf2 {

/// Ordered list of nonzero generators over one spec and one monomial order.
class OrderedGeneratorSet {
public:
    OrderedGeneratorSet(SpecPtr spec, MonomialOrder ord, std::vector<PolyF2> gens);

    const SpecPtr& spec() const noexcept { return spec_; }
    const MonomialOrder& order() const noexcept { return ord_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const PolyF2& gen(std::size_t i) const { return gens_.at(i); }
    const std::vector<PolyF2>& gens() const noexcept { return gens_; }
    const Monomial& leading(std::size_t i) const { return lms_.at(i); }
    const std::vector<Monomial>& leading_monomials() const noexcept { return lms_; }

private:
    SpecPtr spec_;
    MonomialOrder ord_;
    std::vector<PolyF2> gens_;
    std::vector<Monomial> lms_;
};

PolyF2 s_polynomial(const PolyF2& f, const PolyF2& g, const MonomialOrder& ord);

struct ReductionStep {
    Monomial multiplier;
    std::size_t generator;
};

/// Chain of leading-monomial cancellations; replaying the steps from the
/// input reproduces the remainder.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    PolyF2 remainder;
};

/// Cancels the leading monomial while some generator's leading monomial
/// divides it, lowest generator index first. Stops at zero or at a leading
/// monomial no generator divides.
ReductionTrace top_reduce(const PolyF2& p, const OrderedGeneratorSet& G);

/// Full division remainder: no monomial of the result is divisible by any
/// generator's leading monomial. When G is a Groebner basis this is the
/// unique standard-monomial representative and the map is linear.
PolyF2 normal_form(const PolyF2& p, const OrderedGeneratorSet& G);

enum class PairOutcome { kReduced, kCoprimeSkip, kIrreducibleRemainder };

struct PairResult {
    std::size_t i, j;
    PairOutcome outcome;
    ReductionTrace trace;  // empty for coprime skips
};

/// One entry per unordered generator pair; verified means every pair either
/// reduced to zero or was discharged by the coprime criterion.
struct GrobnerCertificate {
    bool verified = false;
    std::vector<PairResult> pairs;
};

struct GrobnerOptions {
    /// Skip pairs whose leading monomials share no variable (sound by
    /// Buchberger's first criterion). Strict mode reduces them anyway.
    bool skip_coprime = true;
};

GrobnerCertificate is_groebner(const OrderedGeneratorSet& G, const GrobnerOptions& opts = {});

struct CompletionOptions {
    std::size_t pair_limit = 10000;
};

/// Buchberger completion with normal pair selection (ascending lcm degree,
/// then indices). Output generates the same ideal, is minimal (no leading
/// monomial divides another) and is sorted ascending by leading monomial.
OrderedGeneratorSet buchberger_complete(const OrderedGeneratorSet& G,
                                        const CompletionOptions& opts = {});

/// Monomials divisible by no generator leading monomial, descending under
/// the set's order. Without a degree cap the quotient must be finite, i.e.
/// the leading monomials must contain a pure power of every variable.
std::vector<Monomial> standard_monomials(const OrderedGeneratorSet& G,
                                         std::optional<std::uint64_t> degree_cap = {});

/// Per-degree dimension vector of a graded quotient.
struct BettiProfile {
    std::map<std::uint64_t, std::uint64_t> dims;

    std::uint64_t total() const;
    std::uint64_t at(std::uint64_t degree) const;
    bool symmetric_up_to(std::uint64_t top) const;

    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

inline constexpr std::uint64_t kDefaultMatrixBudget = std::uint64_t{1} << 26;

/// Independent oracle: for each degree d <= max_degree, the quotient
/// dimension is the number of degree-d monomials minus the GF(2) rank of
/// all products m*g of that degree. Uses no Groebner machinery. Generators
/// must be homogeneous.
BettiProfile quotient_dims_bruteforce(const OrderedGeneratorSet& G, std::uint64_t max_degree,
                                      std::uint64_t matrix_budget = kDefaultMatrixBudget);

}  // namespace gf2
