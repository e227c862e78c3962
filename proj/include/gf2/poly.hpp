#pragma once

// Sparse multivariate polynomial arithmetic over GF(2): graded variable
// specs, exponent-vector monomials, term-set polynomials, mod-2 binomial
// coefficients and permuted-lexicographic monomial orders.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gf2 {

struct SpecMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ExponentOverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};
struct ZeroPolynomialError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnboundedQuotientError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered list of graded variables. Immutable after construction; all
/// polynomial values reference one of these.
class VariableSpec {
public:
    static constexpr std::size_t kMaxArity = 5;
    static constexpr std::uint32_t kDefaultExponentBound = 1u << 16;

    VariableSpec(std::vector<std::string> names, std::vector<std::uint32_t> weights,
                 std::uint32_t exponent_bound = kDefaultExponentBound);

    std::size_t arity() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::uint32_t weight(std::size_t i) const { return weights_.at(i); }
    std::uint32_t exponent_bound() const noexcept { return exponent_bound_; }
    std::optional<std::size_t> index_of(std::string_view name) const noexcept;

    friend bool operator==(const VariableSpec& a, const VariableSpec& b) noexcept {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::uint32_t> weights_;
    std::uint32_t exponent_bound_;
};

using SpecPtr = std::shared_ptr<const VariableSpec>;

SpecPtr make_spec(std::vector<std::string> names, std::vector<std::uint32_t> weights,
                  std::uint32_t exponent_bound = VariableSpec::kDefaultExponentBound);

/// Specs are interchangeable when they agree as values, not just as pointers.
bool compatible(const SpecPtr& a, const SpecPtr& b) noexcept;
void require_compatible(const SpecPtr& a, const SpecPtr& b);

/// Exponent vector over a VariableSpec. Unused trailing slots stay zero so
/// that comparison and hashing can look at the whole array.
class Monomial {
public:
    Monomial() noexcept : n_(0) {}
    explicit Monomial(std::span<const std::uint32_t> exps);

    static Monomial one(std::size_t arity);

    std::size_t arity() const noexcept { return n_; }
    std::uint32_t exp(std::size_t i) const { return e_.at(i); }
    bool is_one() const noexcept;
    std::uint64_t degree(const VariableSpec& spec) const;

    /// Storage order: arity, then plain lexicographic on the exponent vector.
    /// Unrelated to any MonomialOrder; used only for canonical term lists.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    std::array<std::uint32_t, VariableSpec::kMaxArity> e_{};
    std::uint8_t n_;

    friend Monomial mul(const Monomial&, const Monomial&, const VariableSpec&);
    friend Monomial scale_exponents(const Monomial&, std::uint64_t, const VariableSpec&);
    friend bool divides(const Monomial&, const Monomial&);
    friend Monomial lcm(const Monomial&, const Monomial&);
    friend Monomial quotient(const Monomial&, const Monomial&);
};

Monomial mul(const Monomial& a, const Monomial& b, const VariableSpec& spec);
Monomial scale_exponents(const Monomial& m, std::uint64_t factor, const VariableSpec& spec);
bool divides(const Monomial& divisor, const Monomial& multiple);
Monomial lcm(const Monomial& a, const Monomial& b);
/// num / den; requires divides(den, num).
Monomial quotient(const Monomial& num, const Monomial& den);

/// Pure lexicographic order given by a priority permutation of the variable
/// indices, most significant first.
struct MonomialOrder {
    std::vector<std::size_t> priority;

    static MonomialOrder identity(std::size_t arity);
    static MonomialOrder from_priority(std::vector<std::size_t> priority);
};

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

/// Set of distinct monomials; every coefficient is 1 and the empty set is
/// zero. Terms are kept sorted in canonical storage order.
class PolyF2 {
public:
    static PolyF2 zero(SpecPtr spec);
    static PolyF2 one(SpecPtr spec);
    static PolyF2 from_monomial(SpecPtr spec, const Monomial& m);
    /// Sorts and cancels duplicate monomials mod 2.
    static PolyF2 from_terms(SpecPtr spec, std::vector<Monomial> terms);

    const SpecPtr& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool contains(const Monomial& m) const;

    friend bool operator==(const PolyF2& a, const PolyF2& b);

private:
    PolyF2(SpecPtr spec, std::vector<Monomial> sorted_terms)
        : spec_(std::move(spec)), terms_(std::move(sorted_terms)) {}

    SpecPtr spec_;
    std::vector<Monomial> terms_;
};

PolyF2 add(const PolyF2& p, const PolyF2& q);
PolyF2 mul(const PolyF2& p, const PolyF2& q);
PolyF2 mul(const PolyF2& p, const Monomial& m);
PolyF2 power(const PolyF2& p, std::uint64_t e);

inline PolyF2 operator+(const PolyF2& p, const PolyF2& q) { return add(p, q); }
inline PolyF2 operator*(const PolyF2& p, const PolyF2& q) { return mul(p, q); }
inline PolyF2 operator*(const PolyF2& p, const Monomial& m) { return mul(p, m); }

/// Splits into homogeneous components keyed by weighted degree.
std::map<std::uint64_t, PolyF2> grade(const PolyF2& p);
/// Zero counts as homogeneous (of degree 0 when degree_out is set).
bool is_homogeneous(const PolyF2& p, std::uint64_t* degree_out = nullptr);

/// C(n, k) mod 2 by Lucas' criterion.
int binom_mod2(std::uint64_t n, std::uint64_t k) noexcept;
/// Product of C(a_i + ... + a_last, a_i) mod 2 over all but the last slot.
int bracket_coeff(std::span<const std::uint64_t> a) noexcept;

Monomial leading_monomial(const PolyF2& p, const MonomialOrder& ord);

/// All monomials of the given weighted degree, ascending in storage order.
std::vector<Monomial> monomials_of_degree(const VariableSpec& spec, std::uint64_t degree);

/// Text form: terms joined by " + " descending under ord, factors in spec
/// order joined by "*", exponent 1 elided, unit monomial "1", zero "0".
std::string to_string(const Monomial& m, const VariableSpec& spec);
std::string to_string(const PolyF2& p, const MonomialOrder& ord);
PolyF2 parse_poly(const SpecPtr& spec, std::string_view text);

/// Kills every term divisible by the given variable and drops that variable;
/// target must list the remaining variables in order with equal weights.
PolyF2 substitute_zero(const PolyF2& p, std::size_t var_index, const SpecPtr& target);
/// Renames p into a wider spec; every source variable must appear in target
/// with the same weight.
PolyF2 embed(const PolyF2& p, const SpecPtr& target);

}  // namespace gf2
