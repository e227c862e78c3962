#pragma once

// Steenrod squares on the t = 3 quotient presentation with undetermined
// GF(2) coefficients, and the exhaustive constraint solver that pins them.
//
// The unknowns: a^2 = alpha*a*w4 + beta*a*w2^2 + gamma*w2*w3^2 +
// delta*w2^2*w4, Sq^1(a) = epsilon*w2*w3 and Sq^2(a) = kappa*a*w2 +
// lambda*w2*w4 + mu*w3^2. beta is fixed to 1 as an input fact.

#include <set>
#include <string>
#include <vector>

#include "gf2/poly.hpp"
#include "grassmann/presentation.hpp"

namespace steenrod {

struct CoefficientAssignment {
    int alpha = 0;
    int beta = 1;
    int gamma = 0;
    int delta = 0;
    int epsilon = 0;
    int kappa = 0;
    int lambda = 0;
    int mu = 0;

    friend bool operator==(const CoefficientAssignment&, const CoefficientAssignment&) = default;
};

/// Builds the t = 3 ideal with P = alpha*w4 + beta*w2^2 and
/// Q = gamma*w2*w3^2 + delta*w2^2*w4.
grass::PresentationI presentation_for(const CoefficientAssignment& assign);

/// Squaring rules on the generators: total squares of w2, w3, w4 from Wu's
/// formula for a rank-4 bundle with w1 = 0, plus the assignment-dependent
/// images of a.
class SqRules {
public:
    explicit SqRules(const CoefficientAssignment& assign);

    const CoefficientAssignment& assignment() const noexcept { return assign_; }
    const gf2::SpecPtr& ring() const noexcept { return ring_; }

    /// Sq^0 + Sq^1 + ... + Sq^deg on a single w-variable.
    const gf2::PolyF2& total_sq_w(std::size_t var_index) const;
    /// Sq^i of a named generator; for "a" only i <= 2 is determined.
    gf2::PolyF2 sq_generator(int i, std::string_view name) const;
    const gf2::PolyF2& sq1_a() const noexcept { return sq1_a_; }
    const gf2::PolyF2& sq2_a() const noexcept { return sq2_a_; }

private:
    CoefficientAssignment assign_;
    gf2::SpecPtr ring_;
    std::vector<gf2::PolyF2> total_w_;  // indexed by w2, w3, w4 slots
    gf2::PolyF2 sq1_a_;
    gf2::PolyF2 sq2_a_;
};

/// Sq^i of a homogeneous class, returned in normal form modulo the
/// presentation ideal. Products expand by the Cartan formula; Sq on a pure
/// w-polynomial is the graded piece of the multiplicative total square.
/// Throws when the undetermined Sq^3(a) would multiply a class that is
/// nonzero in the quotient.
gf2::PolyF2 sq(int i, const gf2::PolyF2& x, const SqRules& rules,
               const grass::PresentationI& pres);

struct ConstraintResult {
    std::string name;
    bool passed;
    std::string residual;  // normal form that had to vanish, as text
};

struct ConstraintReport {
    CoefficientAssignment assignment;
    std::vector<ConstraintResult> results;

    bool all_passed() const;
    bool passed(std::string_view name) const;
};

/// The fixed constraint list, in evaluation order.
const std::vector<std::string>& constraint_names();

/// Evaluates every constraint as a polynomial identity in the quotient with
/// a^2 rewritten per the assignment. Requires beta = 1.
ConstraintReport check_axioms(const CoefficientAssignment& assign);

/// Enumerates all 2^6 assignments of (alpha, delta, epsilon, kappa, lambda,
/// mu) times gamma in {0, 1} with beta = 1 and returns those passing every
/// constraint not listed in `disabled`, in ascending bit order.
std::vector<CoefficientAssignment> solve_coefficients(
    const std::set<std::string>& disabled = {});

}  // namespace steenrod
