#include "gf2/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gf2 {

VariableSpec::VariableSpec(std::vector<std::string> names, std::vector<std::uint32_t> weights,
                           std::uint32_t exponent_bound)
    : names_(std::move(names)), weights_(std::move(weights)), exponent_bound_(exponent_bound) {
    if (names_.size() != weights_.size())
        throw std::invalid_argument("VariableSpec: names/weights length mismatch");
    if (names_.size() > kMaxArity)
        throw std::invalid_argument("VariableSpec: arity exceeds " + std::to_string(kMaxArity));
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
        throw std::invalid_argument("VariableSpec: duplicate variable name");
    for (auto w : weights_)
        if (w == 0) throw std::invalid_argument("VariableSpec: zero weight");
    if (exponent_bound_ == 0) throw std::invalid_argument("VariableSpec: zero exponent bound");
}

std::optional<std::size_t> VariableSpec::index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

SpecPtr make_spec(std::vector<std::string> names, std::vector<std::uint32_t> weights,
                  std::uint32_t exponent_bound) {
    return std::make_shared<const VariableSpec>(std::move(names), std::move(weights),
                                                exponent_bound);
}

bool compatible(const SpecPtr& a, const SpecPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_compatible(const SpecPtr& a, const SpecPtr& b) {
    if (!compatible(a, b)) throw SpecMismatchError("operands use different variable specs");
}

Monomial::Monomial(std::span<const std::uint32_t> exps) : n_(0) {
    if (exps.size() > VariableSpec::kMaxArity)
        throw std::invalid_argument("Monomial: too many exponents");
    n_ = static_cast<std::uint8_t>(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = exps[i];
}

Monomial Monomial::one(std::size_t arity) {
    if (arity > VariableSpec::kMaxArity) throw std::invalid_argument("Monomial: arity too large");
    Monomial m;
    m.n_ = static_cast<std::uint8_t>(arity);
    return m;
}

bool Monomial::is_one() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != 0) return false;
    return true;
}

std::uint64_t Monomial::degree(const VariableSpec& spec) const {
    if (spec.arity() != n_) throw SpecMismatchError("monomial arity does not match spec");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += std::uint64_t{e_[i]} * spec.weight(i);
    return d;
}

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw SpecMismatchError("monomial arity mismatch");
}

}  // namespace

Monomial mul(const Monomial& a, const Monomial& b, const VariableSpec& spec) {
    require_same_arity(a, b);
    if (spec.arity() != a.arity()) throw SpecMismatchError("monomial arity does not match spec");
    Monomial r;
    r.n_ = a.n_;
    for (std::size_t i = 0; i < a.n_; ++i) {
        std::uint64_t s = std::uint64_t{a.e_[i]} + b.e_[i];
        if (s >= spec.exponent_bound())
            throw ExponentOverflowError("exponent exceeds configured bound");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

Monomial scale_exponents(const Monomial& m, std::uint64_t factor, const VariableSpec& spec) {
    if (spec.arity() != m.arity()) throw SpecMismatchError("monomial arity does not match spec");
    Monomial r;
    r.n_ = m.n_;
    for (std::size_t i = 0; i < m.n_; ++i) {
        std::uint64_t s = std::uint64_t{m.e_[i]} * factor;
        if (s >= spec.exponent_bound())
            throw ExponentOverflowError("exponent exceeds configured bound");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

bool divides(const Monomial& divisor, const Monomial& multiple) {
    require_same_arity(divisor, multiple);
    for (std::size_t i = 0; i < divisor.n_; ++i)
        if (divisor.e_[i] > multiple.e_[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r;
    r.n_ = a.n_;
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Monomial quotient(const Monomial& num, const Monomial& den) {
    require_same_arity(num, den);
    Monomial r;
    r.n_ = num.n_;
    for (std::size_t i = 0; i < num.n_; ++i) {
        if (den.e_[i] > num.e_[i]) throw std::invalid_argument("monomial quotient is not exact");
        r.e_[i] = num.e_[i] - den.e_[i];
    }
    return r;
}

MonomialOrder MonomialOrder::identity(std::size_t arity) {
    std::vector<std::size_t> p(arity);
    for (std::size_t i = 0; i < arity; ++i) p[i] = i;
    return MonomialOrder{std::move(p)};
}

MonomialOrder MonomialOrder::from_priority(std::vector<std::size_t> priority) {
    std::vector<bool> seen(priority.size(), false);
    for (auto i : priority) {
        if (i >= priority.size() || seen[i])
            throw std::invalid_argument("MonomialOrder: priority is not a permutation");
        seen[i] = true;
    }
    return MonomialOrder{std::move(priority)};
}

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    require_same_arity(a, b);
    if (ord.priority.size() != a.arity())
        throw SpecMismatchError("monomial order arity mismatch");
    for (auto idx : ord.priority) {
        std::uint32_t ea = a.exp(idx), eb = b.exp(idx);
        if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
}

PolyF2 PolyF2::zero(SpecPtr spec) { return PolyF2(std::move(spec), {}); }

PolyF2 PolyF2::one(SpecPtr spec) {
    std::size_t n = spec->arity();
    return PolyF2(std::move(spec), {Monomial::one(n)});
}

PolyF2 PolyF2::from_monomial(SpecPtr spec, const Monomial& m) {
    if (spec->arity() != m.arity()) throw SpecMismatchError("monomial arity does not match spec");
    return PolyF2(std::move(spec), {m});
}

PolyF2 PolyF2::from_terms(SpecPtr spec, std::vector<Monomial> terms) {
    for (const auto& m : terms)
        if (m.arity() != spec->arity())
            throw SpecMismatchError("monomial arity does not match spec");
    if (!std::is_sorted(terms.begin(), terms.end())) std::sort(terms.begin(), terms.end());
    // Cancel duplicates mod 2: a run of length L keeps L % 2 copies.
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    return PolyF2(std::move(spec), std::move(out));
}

bool PolyF2::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool operator==(const PolyF2& a, const PolyF2& b) {
    return compatible(a.spec_, b.spec_) && a.terms_ == b.terms_;
}

PolyF2 add(const PolyF2& p, const PolyF2& q) {
    require_compatible(p.spec(), q.spec());
    std::vector<Monomial> out;
    out.reserve(p.size() + q.size());
    std::set_symmetric_difference(p.terms().begin(), p.terms().end(), q.terms().begin(),
                                  q.terms().end(), std::back_inserter(out));
    return PolyF2::from_terms(p.spec(), std::move(out));
}

PolyF2 mul(const PolyF2& p, const Monomial& m) {
    const VariableSpec& spec = *p.spec();
    std::vector<Monomial> out;
    out.reserve(p.size());
    // Shifting every exponent by the same monomial preserves storage order.
    for (const auto& t : p.terms()) out.push_back(mul(t, m, spec));
    return PolyF2::from_terms(p.spec(), std::move(out));
}

PolyF2 mul(const PolyF2& p, const PolyF2& q) {
    require_compatible(p.spec(), q.spec());
    if (p.is_zero() || q.is_zero()) return PolyF2::zero(p.spec());
    const VariableSpec& spec = *p.spec();
    std::vector<Monomial> out;
    out.reserve(p.size() * q.size());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) out.push_back(mul(a, b, spec));
    return PolyF2::from_terms(p.spec(), std::move(out));
}

namespace {

// p^2 in characteristic 2: square every monomial.
PolyF2 square(const PolyF2& p) {
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back(scale_exponents(t, 2, *p.spec()));
    return PolyF2::from_terms(p.spec(), std::move(out));
}

}  // namespace

PolyF2 power(const PolyF2& p, std::uint64_t e) {
    PolyF2 result = PolyF2::one(p.spec());
    if (e == 0) return result;
    PolyF2 base = p;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = square(base);
    }
    return result;
}

std::map<std::uint64_t, PolyF2> grade(const PolyF2& p) {
    std::map<std::uint64_t, std::vector<Monomial>> buckets;
    for (const auto& t : p.terms()) buckets[t.degree(*p.spec())].push_back(t);
    std::map<std::uint64_t, PolyF2> out;
    for (auto& [d, ms] : buckets) out.emplace(d, PolyF2::from_terms(p.spec(), std::move(ms)));
    return out;
}

bool is_homogeneous(const PolyF2& p, std::uint64_t* degree_out) {
    if (p.is_zero()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    std::uint64_t d = p.terms().front().degree(*p.spec());
    for (const auto& t : p.terms())
        if (t.degree(*p.spec()) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

int binom_mod2(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    return ((n - k) & k) == 0 ? 1 : 0;
}

int bracket_coeff(std::span<const std::uint64_t> a) noexcept {
    if (a.empty()) return 1;
    std::uint64_t suffix = 0;
    for (auto v : a) suffix += v;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (binom_mod2(suffix, a[i]) == 0) return 0;
        suffix -= a[i];
    }
    return 1;
}

Monomial leading_monomial(const PolyF2& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw ZeroPolynomialError("zero polynomial has no leading monomial");
    const Monomial* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (compare_lex(t, *best, ord) > 0) best = &t;
    return *best;
}

namespace {

void enumerate_rec(const VariableSpec& spec, std::size_t var, std::uint64_t remaining,
                   std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
    if (var + 1 == spec.arity()) {
        std::uint32_t w = spec.weight(var);
        if (remaining % w == 0) {
            exps[var] = static_cast<std::uint32_t>(remaining / w);
            out.emplace_back(std::span<const std::uint32_t>(exps));
            exps[var] = 0;
        }
        return;
    }
    std::uint32_t w = spec.weight(var);
    for (std::uint64_t e = 0; e * w <= remaining; ++e) {
        exps[var] = static_cast<std::uint32_t>(e);
        enumerate_rec(spec, var + 1, remaining - e * w, exps, out);
    }
    exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const VariableSpec& spec, std::uint64_t degree) {
    std::vector<Monomial> out;
    if (spec.arity() == 0) {
        if (degree == 0) out.push_back(Monomial::one(0));
        return out;
    }
    std::vector<std::uint32_t> exps(spec.arity(), 0);
    enumerate_rec(spec, 0, degree, exps, out);
    return out;
}

std::string to_string(const Monomial& m, const VariableSpec& spec) {
    if (spec.arity() != m.arity()) throw SpecMismatchError("monomial arity does not match spec");
    std::string s;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        std::uint32_t e = m.exp(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += spec.name(i);
        if (e > 1) {
            s += "^";
            s += std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const PolyF2& p, const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<Monomial> terms = p.terms();
    std::sort(terms.begin(), terms.end(),
              [&](const Monomial& a, const Monomial& b) { return compare_lex(a, b, ord) > 0; });
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        s += to_string(t, *p.spec());
    }
    return s;
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

}  // namespace

PolyF2 parse_poly(const SpecPtr& spec, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s == "0") return PolyF2::zero(spec);
    std::vector<Monomial> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (term.empty()) throw std::invalid_argument("malformed polynomial text: empty term");
        std::vector<std::uint32_t> exps(spec->arity(), 0);
        if (term != "1") {
            std::size_t fpos = 0;
            while (fpos <= term.size()) {
                std::size_t star = term.find('*', fpos);
                std::string factor =
                    term.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos);
                if (factor.empty())
                    throw std::invalid_argument("malformed polynomial text: empty factor");
                std::string name = factor;
                std::uint64_t e = 1;
                if (auto caret = factor.find('^'); caret != std::string::npos) {
                    name = factor.substr(0, caret);
                    std::string digits = factor.substr(caret + 1);
                    if (digits.empty() ||
                        digits.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("malformed exponent: " + factor);
                    e = std::stoull(digits);
                }
                auto idx = spec->index_of(name);
                if (!idx) throw std::invalid_argument("unknown variable: " + name);
                std::uint64_t total = exps[*idx] + e;
                if (total >= spec->exponent_bound())
                    throw ExponentOverflowError("exponent exceeds configured bound");
                exps[*idx] = static_cast<std::uint32_t>(total);
                if (star == std::string::npos) break;
                fpos = star + 1;
            }
        }
        terms.emplace_back(std::span<const std::uint32_t>(exps));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return PolyF2::from_terms(spec, std::move(terms));
}

PolyF2 substitute_zero(const PolyF2& p, std::size_t var_index, const SpecPtr& target) {
    const VariableSpec& src = *p.spec();
    if (var_index >= src.arity()) throw std::invalid_argument("variable index out of range");
    if (target->arity() + 1 != src.arity())
        throw SpecMismatchError("target spec must drop exactly the substituted variable");
    for (std::size_t i = 0, j = 0; i < src.arity(); ++i) {
        if (i == var_index) continue;
        if (target->name(j) != src.name(i) || target->weight(j) != src.weight(i))
            throw SpecMismatchError("target spec does not match remaining variables");
        ++j;
    }
    std::vector<Monomial> out;
    for (const auto& t : p.terms()) {
        if (t.exp(var_index) != 0) continue;
        std::vector<std::uint32_t> exps;
        exps.reserve(target->arity());
        for (std::size_t i = 0; i < src.arity(); ++i)
            if (i != var_index) exps.push_back(t.exp(i));
        out.emplace_back(std::span<const std::uint32_t>(exps));
    }
    return PolyF2::from_terms(target, std::move(out));
}

PolyF2 embed(const PolyF2& p, const SpecPtr& target) {
    const VariableSpec& src = *p.spec();
    std::vector<std::size_t> map(src.arity());
    for (std::size_t i = 0; i < src.arity(); ++i) {
        auto idx = target->index_of(src.name(i));
        if (!idx || target->weight(*idx) != src.weight(i))
            throw SpecMismatchError("target spec does not contain variable " + src.name(i));
        map[i] = *idx;
    }
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> exps(target->arity(), 0);
        for (std::size_t i = 0; i < src.arity(); ++i) exps[map[i]] = t.exp(i);
        out.emplace_back(std::span<const std::uint32_t>(exps));
    }
    return PolyF2::from_terms(target, std::move(out));
}

}  // namespace gf2
