#include "grassmann/dual_sw.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace grass {

using gf2::Monomial;
using gf2::PolyF2;

namespace {

void require_rank(int k, int lo) {
    if (k < lo || k > 5) throw std::invalid_argument("bundle rank must be between " +
                                                     std::to_string(lo) + " and 5");
}

}  // namespace

gf2::SpecPtr wbar_ring(int k) {
    require_rank(k, 1);
    std::vector<std::string> names;
    std::vector<std::uint32_t> weights;
    for (int i = 1; i <= k; ++i) {
        names.push_back("w" + std::to_string(i));
        weights.push_back(static_cast<std::uint32_t>(i));
    }
    return gf2::make_spec(std::move(names), std::move(weights));
}

gf2::SpecPtr g_ring(int k) {
    require_rank(k, 1);
    std::vector<std::string> names;
    std::vector<std::uint32_t> weights;
    for (int i = 2; i <= k; ++i) {
        names.push_back("w" + std::to_string(i));
        weights.push_back(static_cast<std::uint32_t>(i));
    }
    return gf2::make_spec(std::move(names), std::move(weights));
}

DualSWTable::DualSWTable(int k, std::int64_t memo_horizon)
    : k_(k), horizon_(memo_horizon), wspec_(wbar_ring(k)), gspec_(g_ring(k)) {
    if (horizon_ < 0) horizon_ = 0;
}

namespace {

// One recurrence step: next = sum of var_polys[i] * window[len - offsets[i]].
// Window holds the trailing values, most recent last; absent slots are zero.
PolyF2 recurrence_step(const std::vector<PolyF2>& var_polys, const std::vector<int>& offsets,
                       const std::vector<PolyF2>& window, const gf2::SpecPtr& spec) {
    PolyF2 acc = PolyF2::zero(spec);
    for (std::size_t i = 0; i < var_polys.size(); ++i) {
        std::size_t off = static_cast<std::size_t>(offsets[i]);
        if (off > window.size()) continue;  // index below the series start: value is zero
        const PolyF2& prev = window[window.size() - off];
        if (!prev.is_zero()) acc = acc + gf2::mul(prev, var_polys[i].terms().front());
    }
    return acc;
}

}  // namespace

gf2::PolyF2 DualSWTable::wbar(std::int64_t r) const {
    if (r < 0) throw std::invalid_argument("wbar index must be nonnegative");
    return wbar_many({r}).front();
}

gf2::PolyF2 DualSWTable::g(std::int64_t r) const {
    if (r < -(k_ - 1)) throw std::invalid_argument("g index below -k+1");
    if (r < 0) return PolyF2::zero(gspec_);
    return g_many({r}).front();
}

namespace {

// Shared driver for both series. `vars` are the single-monomial polynomials
// multiplying the window, `offsets` the index shifts, value at 0 is 1.
std::vector<PolyF2> series_values(const gf2::SpecPtr& spec, const std::vector<PolyF2>& vars,
                                  const std::vector<int>& offsets, std::int64_t horizon,
                                  std::vector<PolyF2>& memo, std::mutex& mu,
                                  const std::vector<std::int64_t>& rs) {
    std::int64_t max_r = 0;
    for (auto r : rs) {
        if (r < 0) throw std::invalid_argument("series index must be nonnegative");
        max_r = std::max(max_r, r);
    }

    int window_len = offsets.empty() ? 1 : *std::max_element(offsets.begin(), offsets.end());

    if (max_r <= horizon) {
        std::lock_guard<std::mutex> lock(mu);
        if (memo.empty()) memo.push_back(PolyF2::one(spec));
        while (static_cast<std::int64_t>(memo.size()) <= max_r) {
            std::size_t n = memo.size();
            std::vector<PolyF2> window;
            for (std::size_t j = n >= static_cast<std::size_t>(window_len)
                                    ? n - static_cast<std::size_t>(window_len)
                                    : 0;
                 j < n; ++j)
                window.push_back(memo[j]);
            memo.push_back(recurrence_step(vars, offsets, window, spec));
        }
        std::vector<PolyF2> out;
        out.reserve(rs.size());
        for (auto r : rs) out.push_back(memo[static_cast<std::size_t>(r)]);
        return out;
    }

    // One sliding-window pass; nothing is cached for indices past the horizon.
    std::map<std::int64_t, PolyF2> found;
    std::set<std::int64_t> wanted(rs.begin(), rs.end());
    std::vector<PolyF2> window;
    PolyF2 current = PolyF2::one(spec);
    for (std::int64_t r = 0; r <= max_r; ++r) {
        if (r > 0) {
            current = recurrence_step(vars, offsets, window, spec);
        }
        if (wanted.count(r)) found.emplace(r, current);
        window.push_back(current);
        if (static_cast<int>(window.size()) > window_len) window.erase(window.begin());
    }
    std::vector<PolyF2> out;
    out.reserve(rs.size());
    for (auto r : rs) out.push_back(found.at(r));
    return out;
}

std::vector<PolyF2> variable_polys(const gf2::SpecPtr& spec) {
    std::vector<PolyF2> vars;
    for (std::size_t i = 0; i < spec->arity(); ++i) {
        std::vector<std::uint32_t> exps(spec->arity(), 0);
        exps[i] = 1;
        vars.push_back(PolyF2::from_monomial(spec, Monomial(exps)));
    }
    return vars;
}

}  // namespace

std::vector<gf2::PolyF2> DualSWTable::wbar_many(const std::vector<std::int64_t>& rs) const {
    std::vector<int> offsets;
    for (int i = 1; i <= k_; ++i) offsets.push_back(i);
    return series_values(wspec_, variable_polys(wspec_), offsets, horizon_, wmemo_, mu_, rs);
}

std::vector<gf2::PolyF2> DualSWTable::g_many(const std::vector<std::int64_t>& rs) const {
    std::vector<std::int64_t> clamped;
    clamped.reserve(rs.size());
    for (auto r : rs) {
        if (r < -(k_ - 1)) throw std::invalid_argument("g index below -k+1");
        clamped.push_back(std::max<std::int64_t>(r, 0));
    }
    std::vector<int> offsets;
    for (int i = 2; i <= k_; ++i) offsets.push_back(i);
    auto vals = series_values(gspec_, variable_polys(gspec_), offsets, horizon_, gmemo_, mu_,
                              clamped);
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs[i] < 0) vals[i] = PolyF2::zero(gspec_);
    return vals;
}

gf2::PolyF2 wbar_closed(std::int64_t r, int k) {
    if (r < 0) throw std::invalid_argument("wbar index must be nonnegative");
    auto spec = wbar_ring(k);
    std::vector<Monomial> terms;
    for (const auto& m : gf2::monomials_of_degree(*spec, static_cast<std::uint64_t>(r))) {
        std::vector<std::uint64_t> a(spec->arity());
        for (std::size_t i = 0; i < spec->arity(); ++i) a[i] = m.exp(i);
        if (gf2::bracket_coeff(a)) terms.push_back(m);
    }
    return PolyF2::from_terms(spec, std::move(terms));
}

gf2::PolyF2 g_closed(std::int64_t r, int k) {
    if (r < -(k - 1)) throw std::invalid_argument("g index below -k+1");
    auto spec = g_ring(k);
    if (r < 0) return PolyF2::zero(spec);
    std::vector<Monomial> terms;
    for (const auto& m : gf2::monomials_of_degree(*spec, static_cast<std::uint64_t>(r))) {
        // Same bracket with the w1 slot pinned to zero.
        std::vector<std::uint64_t> a(spec->arity() + 1, 0);
        for (std::size_t i = 0; i < spec->arity(); ++i) a[i + 1] = m.exp(i);
        if (gf2::bracket_coeff(a)) terms.push_back(m);
    }
    return PolyF2::from_terms(spec, std::move(terms));
}

bool check_gen_recurrence(const DualSWTable& table, std::int64_t r, int i) {
    int k = table.rank();
    if (i < 0) throw std::invalid_argument("index i must be nonnegative");
    std::int64_t step = std::int64_t{1} << i;
    if (r < 1 + k * (step - 1))
        throw std::invalid_argument("generalized recurrence requires r >= 1 + k(2^i - 1)");
    const auto& spec = table.g_spec();
    PolyF2 rhs = PolyF2::zero(spec);
    for (int j = 2; j <= k; ++j) {
        std::vector<std::uint32_t> exps(spec->arity(), 0);
        exps[static_cast<std::size_t>(j - 2)] = static_cast<std::uint32_t>(step);
        rhs = rhs + gf2::mul(table.g(r - j * step), Monomial(exps));
    }
    return table.g(r) == rhs;
}

namespace {

PolyF2 posl_lhs(const DualSWTable& table, const PolyF2& g_r, int i) {
    std::int64_t e = std::int64_t{1} << i;
    const auto& spec = table.g_spec();
    std::vector<std::uint32_t> exps(spec->arity(), 0);
    exps[1] = static_cast<std::uint32_t>(e - 1);  // w3
    return gf2::mul(gf2::power(g_r, static_cast<std::uint64_t>(e)), Monomial(exps));
}

}  // namespace

bool check_posl(const DualSWTable& table, std::int64_t r, int i) {
    if (table.rank() != 4) throw std::invalid_argument("check_posl is a rank-4 identity");
    if (r < -3 || i < 0) throw std::invalid_argument("check_posl requires r >= -3, i >= 0");
    std::int64_t target = (std::int64_t{1} << i) * (r + 3) - 3;
    return posl_lhs(table, table.g(r), i) == table.g(target);
}

bool check_posl_range(const DualSWTable& table, std::int64_t r_min, std::int64_t r_max,
                      int i_max) {
    if (table.rank() != 4) throw std::invalid_argument("check_posl is a rank-4 identity");
    if (r_min < -3 || i_max < 0 || r_max < r_min)
        throw std::invalid_argument("bad check_posl_range arguments");
    std::vector<std::int64_t> targets;
    for (std::int64_t r = r_min; r <= r_max; ++r)
        for (int i = 0; i <= i_max; ++i) targets.push_back((std::int64_t{1} << i) * (r + 3) - 3);
    auto target_vals = table.g_many(targets);
    std::size_t idx = 0;
    for (std::int64_t r = r_min; r <= r_max; ++r) {
        PolyF2 g_r = table.g(r);
        for (int i = 0; i <= i_max; ++i) {
            if (!(posl_lhs(table, g_r, i) == target_vals[idx++])) return false;
        }
    }
    return true;
}

bool check_w4free(const DualSWTable& table, int t, int i) {
    if (table.rank() != 4) throw std::invalid_argument("check_w4free is a rank-4 check");
    if (t < 3 || i < 0 || i > t - 1) throw std::invalid_argument("check_w4free index out of range");
    std::int64_t r = (std::int64_t{1} << t) - 3 + (std::int64_t{1} << i);
    PolyF2 g = table.g(r);
    for (const auto& m : g.terms())
        if (m.exp(2) != 0) return false;  // w4 slot
    return true;
}

}  // namespace grass
