#include "gf2/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gf2/bitmatrix.hpp"

namespace gf2 {

OrderedGeneratorSet::OrderedGeneratorSet(SpecPtr spec, MonomialOrder ord, std::vector<PolyF2> gens)
    : spec_(std::move(spec)), ord_(std::move(ord)), gens_(std::move(gens)) {
    if (ord_.priority.size() != spec_->arity())
        throw SpecMismatchError("monomial order arity does not match spec");
    MonomialOrder::from_priority(ord_.priority);  // validates the permutation
    lms_.reserve(gens_.size());
    for (const auto& g : gens_) {
        require_compatible(spec_, g.spec());
        if (g.is_zero()) throw ZeroPolynomialError("generator sets may not contain zero");
        lms_.push_back(leading_monomial(g, ord_));
    }
}

PolyF2 s_polynomial(const PolyF2& f, const PolyF2& g, const MonomialOrder& ord) {
    require_compatible(f.spec(), g.spec());
    if (f.is_zero() || g.is_zero())
        throw ZeroPolynomialError("s_polynomial requires nonzero inputs");
    Monomial lf = leading_monomial(f, ord);
    Monomial lg = leading_monomial(g, ord);
    Monomial l = lcm(lf, lg);
    return mul(f, quotient(l, lf)) + mul(g, quotient(l, lg));
}

namespace {

// Lowest generator index whose leading monomial divides m, if any.
std::optional<std::size_t> find_divisor(const OrderedGeneratorSet& G, const Monomial& m) {
    for (std::size_t k = 0; k < G.size(); ++k)
        if (divides(G.leading(k), m)) return k;
    return std::nullopt;
}

}  // namespace

ReductionTrace top_reduce(const PolyF2& p, const OrderedGeneratorSet& G) {
    require_compatible(p.spec(), G.spec());
    ReductionTrace trace{.steps = {}, .remainder = p};
    while (!trace.remainder.is_zero()) {
        Monomial lm = leading_monomial(trace.remainder, G.order());
        auto k = find_divisor(G, lm);
        if (!k) break;
        Monomial mult = quotient(lm, G.leading(*k));
        trace.remainder = trace.remainder + mul(G.gen(*k), mult);
        trace.steps.push_back({mult, *k});
    }
    return trace;
}

PolyF2 normal_form(const PolyF2& p, const OrderedGeneratorSet& G) {
    require_compatible(p.spec(), G.spec());
    PolyF2 work = p;
    std::vector<Monomial> kept;
    while (!work.is_zero()) {
        Monomial lm = leading_monomial(work, G.order());
        auto k = find_divisor(G, lm);
        if (k) {
            work = work + mul(G.gen(*k), quotient(lm, G.leading(*k)));
        } else {
            kept.push_back(lm);
            work = work + PolyF2::from_monomial(work.spec(), lm);
        }
    }
    return PolyF2::from_terms(p.spec(), std::move(kept));
}

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

}  // namespace

GrobnerCertificate is_groebner(const OrderedGeneratorSet& G, const GrobnerOptions& opts) {
    GrobnerCertificate cert;
    cert.verified = true;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (opts.skip_coprime && coprime(G.leading(i), G.leading(j))) {
                cert.pairs.push_back(
                    {i, j, PairOutcome::kCoprimeSkip, {{}, PolyF2::zero(G.spec())}});
                continue;
            }
            PolyF2 s = s_polynomial(G.gen(i), G.gen(j), G.order());
            ReductionTrace trace = top_reduce(s, G);
            PairOutcome outcome = trace.remainder.is_zero() ? PairOutcome::kReduced
                                                            : PairOutcome::kIrreducibleRemainder;
            if (outcome == PairOutcome::kIrreducibleRemainder) cert.verified = false;
            cert.pairs.push_back({i, j, outcome, std::move(trace)});
        }
    }
    return cert;
}

OrderedGeneratorSet buchberger_complete(const OrderedGeneratorSet& G,
                                        const CompletionOptions& opts) {
    const auto& ord = G.order();
    std::vector<PolyF2> basis = G.gens();
    std::vector<Monomial> lms(G.leading_monomials());

    auto reduce_fully = [&](PolyF2 p) {
        // Same contract as normal_form but against the working basis.
        std::vector<Monomial> kept;
        while (!p.is_zero()) {
            Monomial lm = leading_monomial(p, ord);
            std::optional<std::size_t> hit;
            for (std::size_t k = 0; k < lms.size(); ++k)
                if (divides(lms[k], lm)) {
                    hit = k;
                    break;
                }
            if (hit)
                p = p + mul(basis[*hit], quotient(lm, lms[*hit]));
            else {
                kept.push_back(lm);
                p = p + PolyF2::from_monomial(p.spec(), lm);
            }
        }
        return PolyF2::from_terms(G.spec(), std::move(kept));
    };

    // Normal selection: ascending weighted lcm degree, then pair indices.
    using Pair = std::tuple<std::uint64_t, std::size_t, std::size_t>;
    std::set<Pair> queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = lcm(lms[i], lms[j]);
        queue.insert({l.degree(*G.spec()), i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        if (++processed > opts.pair_limit)
            throw ResourceLimitError("buchberger_complete: pair limit exceeded");
        if (coprime(lms[i], lms[j])) continue;
        PolyF2 r = reduce_fully(s_polynomial(basis[i], basis[j], ord));
        if (r.is_zero()) continue;
        basis.push_back(r);
        lms.push_back(leading_monomial(r, ord));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // Minimalize: keep a generator only if no previously kept leading
    // monomial divides its own. Processing ascending by leading monomial
    // makes the survivors exactly the minimal ones.
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        auto c = compare_lex(lms[a], lms[b], ord);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<PolyF2> kept;
    std::vector<Monomial> kept_lms;
    for (auto i : idx) {
        bool redundant = false;
        for (const auto& lm : kept_lms)
            if (divides(lm, lms[i])) {
                redundant = true;
                break;
            }
        if (!redundant) {
            kept.push_back(basis[i]);
            kept_lms.push_back(lms[i]);
        }
    }
    return OrderedGeneratorSet(G.spec(), ord, std::move(kept));
}

namespace {

void enumerate_box(const std::vector<std::uint32_t>& bound, std::size_t var,
                   std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
    if (var == bound.size()) {
        out.emplace_back(std::span<const std::uint32_t>(exps));
        return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
        exps[var] = e;
        enumerate_box(bound, var + 1, exps, out);
    }
    exps[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const OrderedGeneratorSet& G,
                                         std::optional<std::uint64_t> degree_cap) {
    const VariableSpec& spec = *G.spec();
    auto is_standard = [&](const Monomial& m) {
        for (const auto& lm : G.leading_monomials())
            if (divides(lm, m)) return false;
        return true;
    };

    std::vector<Monomial> candidates;
    if (degree_cap) {
        for (std::uint64_t d = 0; d <= *degree_cap; ++d)
            for (const auto& m : monomials_of_degree(spec, d)) candidates.push_back(m);
    } else {
        // Finiteness requires a pure power of every variable among the
        // leading monomials; those powers bound the exponent box.
        std::vector<std::uint32_t> bound(spec.arity());
        for (std::size_t v = 0; v < spec.arity(); ++v) {
            std::optional<std::uint32_t> best;
            for (const auto& lm : G.leading_monomials()) {
                bool pure = true;
                for (std::size_t u = 0; u < spec.arity(); ++u)
                    if (u != v && lm.exp(u) != 0) pure = false;
                if (pure && (!best || lm.exp(v) < *best)) best = lm.exp(v);
            }
            if (!best)
                throw UnboundedQuotientError(
                    "standard monomial set is infinite; pass a degree cap");
            bound[v] = *best;
        }
        std::vector<std::uint32_t> exps(spec.arity(), 0);
        enumerate_box(bound, 0, exps, candidates);
    }

    std::vector<Monomial> out;
    for (const auto& m : candidates)
        if (is_standard(m)) out.push_back(m);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return compare_lex(a, b, G.order()) > 0;
    });
    return out;
}

std::uint64_t BettiProfile::total() const {
    std::uint64_t t = 0;
    for (const auto& [d, n] : dims) t += n;
    return t;
}

std::uint64_t BettiProfile::at(std::uint64_t degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

bool BettiProfile::symmetric_up_to(std::uint64_t top) const {
    for (std::uint64_t j = 0; j <= top; ++j)
        if (at(j) != at(top - j)) return false;
    for (const auto& [d, n] : dims)
        if (d > top && n != 0) return false;
    return true;
}

BettiProfile quotient_dims_bruteforce(const OrderedGeneratorSet& G, std::uint64_t max_degree,
                                      std::uint64_t matrix_budget) {
    const VariableSpec& spec = *G.spec();
    std::vector<std::uint64_t> gen_degrees;
    gen_degrees.reserve(G.size());
    for (const auto& g : G.gens()) {
        std::uint64_t d = 0;
        if (!is_homogeneous(g, &d))
            throw std::invalid_argument("quotient_dims_bruteforce needs homogeneous generators");
        gen_degrees.push_back(d);
    }

    BettiProfile profile;
    for (std::uint64_t d = 0; d <= max_degree; ++d) {
        std::vector<Monomial> cols = monomials_of_degree(spec, d);
        std::uint64_t row_count = 0;
        for (std::size_t gi = 0; gi < G.size(); ++gi)
            if (gen_degrees[gi] <= d)
                row_count += monomials_of_degree(spec, d - gen_degrees[gi]).size();
        if (row_count * cols.size() > matrix_budget)
            throw ResourceLimitError("quotient_dims_bruteforce: matrix budget exceeded");

        RowEchelon elim(cols.size());
        for (std::size_t gi = 0; gi < G.size(); ++gi) {
            if (gen_degrees[gi] > d) continue;
            for (const auto& m : monomials_of_degree(spec, d - gen_degrees[gi])) {
                PolyF2 row_poly = mul(G.gen(gi), m);
                BitVec row(cols.size());
                for (const auto& t : row_poly.terms()) {
                    auto it = std::lower_bound(cols.begin(), cols.end(), t);
                    row.set(static_cast<std::size_t>(it - cols.begin()));
                }
                elim.insert(std::move(row));
            }
        }
        profile.dims[d] = cols.size() - elim.rank();
    }
    return profile;
}

}  // namespace gf2
