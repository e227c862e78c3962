#include "cli/run.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gf2/groebner.hpp"
#include "grassmann/dual_sw.hpp"
#include "grassmann/presentation.hpp"
#include "selfcheck/selfcheck.hpp"
#include "steenrod/steenrod.hpp"

namespace cli {

using json = nlohmann::json;  // object keys serialize sorted

namespace {

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0') return fallback;
    return parsed;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json betti_json(const gf2::BettiProfile& profile) {
    json rows = json::array();
    for (const auto& [d, n] : profile.dims) rows.push_back({d, n});
    return rows;
}

struct Options {
    std::string command;
    int t = 3;
    int k = 4;
    int max_r = 16;
    int gamma = 0;
    std::string format = "text";
    bool strict = false;
    bool with_wbar = false;
    bool complete = false;
    bool corrupt_fixture = false;
    std::string ideal = "full";
    std::uint64_t seed = selfcheck::kDefaultSeed;
    std::size_t cases = selfcheck::kDefaultCases;
    std::vector<std::string> disabled;
    std::string out_path;
};

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (opt.format == f) return;
    throw CLI::ValidationError("--format", "format '" + opt.format +
                                               "' is not supported by this command");
}

RunResult finish(const Options& opt, std::string payload, int code) {
    RunResult res;
    res.exit_code = code;
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) {
            res.exit_code = kExitUsage;
            res.err = "error: cannot open output file " + opt.out_path + "\n";
            return res;
        }
        f << payload;
    } else {
        res.out = std::move(payload);
    }
    return res;
}

// ---- gens ----------------------------------------------------------------

RunResult run_gens(const Options& opt) {
    require_format(opt, {"text", "csv", "json"});
    grass::DualSWTable table(opt.k, /*memo_horizon=*/0);
    std::vector<std::int64_t> indices;
    for (int r = 0; r <= opt.max_r; ++r) indices.push_back(r);
    auto gs = table.g_many(indices);
    std::vector<gf2::PolyF2> ws;
    if (opt.with_wbar) ws = table.wbar_many(indices);

    auto g_ord = gf2::MonomialOrder::identity(table.g_spec()->arity());
    auto w_ord = gf2::MonomialOrder::identity(table.wbar_spec()->arity());

    std::string payload;
    if (opt.format == "text") {
        std::ostringstream os;
        for (int r = 0; r <= opt.max_r; ++r)
            os << "g" << r << " = " << gf2::to_string(gs[r], g_ord) << "\n";
        if (opt.with_wbar)
            for (int r = 0; r <= opt.max_r; ++r)
                os << "wbar" << r << " = " << gf2::to_string(ws[r], w_ord) << "\n";
        payload = os.str();
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << (opt.with_wbar ? "r,g,wbar\n" : "r,g\n");
        for (int r = 0; r <= opt.max_r; ++r) {
            os << r << "," << gf2::to_string(gs[r], g_ord);
            if (opt.with_wbar) os << "," << gf2::to_string(ws[r], w_ord);
            os << "\n";
        }
        payload = os.str();
    } else {
        json doc;
        doc["g"] = json::array();
        for (int r = 0; r <= opt.max_r; ++r)
            doc["g"].push_back({r, gf2::to_string(gs[r], g_ord)});
        doc["k"] = opt.k;
        doc["max_r"] = opt.max_r;
        if (opt.with_wbar) {
            doc["wbar"] = json::array();
            for (int r = 0; r <= opt.max_r; ++r)
                doc["wbar"].push_back({r, gf2::to_string(ws[r], w_ord)});
        }
        payload = dump(doc);
    }
    return finish(opt, std::move(payload), kExitOk);
}

// ---- groebner --------------------------------------------------------------

const char* outcome_name(gf2::PairOutcome o) {
    switch (o) {
        case gf2::PairOutcome::kReduced: return "reduced";
        case gf2::PairOutcome::kCoprimeSkip: return "coprime-skip";
        case gf2::PairOutcome::kIrreducibleRemainder: return "remainder";
    }
    return "?";
}

RunResult run_groebner(const Options& opt) {
    require_format(opt, {"text", "json"});
    gf2::OrderedGeneratorSet gens = [&] {
        if (opt.ideal == "full") return grass::build_ideal_I_default(opt.t, opt.gamma).gens;
        if (opt.ideal == "impstar") return grass::build_im_pstar_ideal(opt.t).groebner;
        // k3: the two-variable generator list.
        grass::DualSWTable table(3, 768);
        std::vector<std::int64_t> idx;
        for (int i = 0; i < opt.t; ++i)
            idx.push_back((std::int64_t{1} << opt.t) - 3 + (std::int64_t{1} << i));
        return gf2::OrderedGeneratorSet(table.g_spec(), grass::k3_order(), table.g_many(idx));
    }();

    gf2::GrobnerOptions gopts;
    gopts.skip_coprime = !opt.strict;
    auto cert = gf2::is_groebner(gens, gopts);

    json doc;
    doc["t"] = opt.t;
    doc["ideal"] = opt.ideal;
    if (opt.ideal == "full") doc["gamma"] = opt.gamma;
    doc["certified"] = cert.verified;
    doc["generators"] = json::array();
    for (const auto& g : gens.gens())
        doc["generators"].push_back(gf2::to_string(g, gens.order()));
    doc["leading_monomials"] = json::array();
    for (const auto& lm : gens.leading_monomials())
        doc["leading_monomials"].push_back(gf2::to_string(lm, *gens.spec()));
    doc["pairs"] = json::array();
    for (const auto& p : cert.pairs) {
        json entry;
        entry["i"] = p.i;
        entry["j"] = p.j;
        entry["outcome"] = outcome_name(p.outcome);
        if (p.outcome != gf2::PairOutcome::kCoprimeSkip) {
            entry["steps"] = json::array();
            for (const auto& s : p.trace.steps)
                entry["steps"].push_back(
                    {gf2::to_string(s.multiplier, *gens.spec()), s.generator});
            if (p.outcome == gf2::PairOutcome::kIrreducibleRemainder)
                entry["remainder"] = gf2::to_string(p.trace.remainder, gens.order());
        }
        doc["pairs"].push_back(entry);
    }

    bool complete_matches = true;
    if (opt.complete) {
        gf2::CompletionOptions copts;
        copts.pair_limit = static_cast<std::size_t>(
            env_budget("GRCOH_PAIR_LIMIT", gf2::CompletionOptions{}.pair_limit));
        gf2::OrderedGeneratorSet raw = [&] {
            if (opt.ideal != "full") return gens;
            grass::DualSWTable table(4, 768);
            std::int64_t n = std::int64_t{1} << opt.t;
            auto raw_gs = table.g_many({n - 2, n - 1, n});
            std::vector<gf2::PolyF2> polys;
            for (const auto& g : raw_gs) polys.push_back(gf2::embed(g, gens.spec()));
            auto pres = grass::build_ideal_I_default(opt.t, opt.gamma);
            polys.push_back(pres.gens.gen(pres.gens.size() - 1));
            return gf2::OrderedGeneratorSet(gens.spec(), gens.order(), std::move(polys));
        }();
        auto completed = gf2::buchberger_complete(raw, copts);
        json lms = json::array();
        for (const auto& lm : completed.leading_monomials())
            lms.push_back(gf2::to_string(lm, *gens.spec()));
        std::vector<gf2::Monomial> a = completed.leading_monomials();
        std::vector<gf2::Monomial> b = gens.leading_monomials();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        complete_matches = a == b;
        doc["completion"] = {{"leading_monomials", lms},
                             {"matches_certified", complete_matches}};
    }

    std::string payload;
    if (opt.format == "json") {
        payload = dump(doc);
    } else {
        std::ostringstream os;
        os << "ideal " << opt.ideal << " t=" << opt.t << "\n";
        for (std::size_t i = 0; i < gens.size(); ++i)
            os << "  gen[" << i << "] = " << gf2::to_string(gens.gen(i), gens.order())
               << "\n";
        for (const auto& p : cert.pairs) {
            os << "  S(" << p.i << "," << p.j << "): " << outcome_name(p.outcome);
            if (p.outcome == gf2::PairOutcome::kReduced)
                os << " in " << p.trace.steps.size() << " steps";
            if (p.outcome == gf2::PairOutcome::kIrreducibleRemainder)
                os << " " << gf2::to_string(p.trace.remainder, gens.order());
            os << "\n";
        }
        if (opt.complete)
            os << "completion matches: " << (complete_matches ? "yes" : "no") << "\n";
        os << "certified: " << (cert.verified ? "yes" : "no") << "\n";
        payload = os.str();
    }
    bool ok = cert.verified && complete_matches;
    return finish(opt, std::move(payload), ok ? kExitOk : kExitVerification);
}

// ---- basis / betti ---------------------------------------------------------

void require_basis_budget(int t) {
    auto ts = grass::t_set(t);
    std::uint64_t size = (std::uint64_t{2} << (t - 2)) * ts.n();
    std::uint64_t budget = env_budget("GRCOH_BASIS_BUDGET", 5'000'000);
    if (size > budget)
        throw gf2::ResourceLimitError("additive basis size " + std::to_string(size) +
                                      " exceeds budget " + std::to_string(budget));
}

RunResult run_basis(const Options& opt) {
    require_format(opt, {"text", "csv", "json"});
    require_basis_budget(opt.t);
    auto basis = grass::additive_basis(opt.t);
    auto ring = grass::ideal_ring(opt.t);

    std::string payload;
    if (opt.format == "text") {
        std::ostringstream os;
        for (const auto& m : basis) os << gf2::to_string(m, *ring) << "\n";
        payload = os.str();
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "degree,monomial\n";
        for (const auto& m : basis)
            os << m.degree(*ring) << "," << gf2::to_string(m, *ring) << "\n";
        payload = os.str();
    } else {
        json doc;
        doc["basis"] = json::array();
        for (const auto& m : basis) doc["basis"].push_back(gf2::to_string(m, *ring));
        doc["t"] = opt.t;
        payload = dump(doc);
    }
    return finish(opt, std::move(payload), kExitOk);
}

RunResult run_betti(const Options& opt) {
    require_format(opt, {"text", "csv", "json"});
    require_basis_budget(opt.t);
    auto profile = grass::poincare_profile(opt.t);

    std::string payload;
    if (opt.format == "csv") {
        payload = betti_csv(profile);
    } else if (opt.format == "text") {
        std::ostringstream os;
        for (const auto& [d, n] : profile.dims) os << "b" << d << " = " << n << "\n";
        payload = os.str();
    } else {
        json doc;
        doc["betti"] = betti_json(profile);
        doc["t"] = opt.t;
        payload = dump(doc);
    }
    return finish(opt, std::move(payload), kExitOk);
}

// ---- verify ----------------------------------------------------------------

RunResult run_verify(const Options& opt) {
    require_format(opt, {"text", "json"});
    grass::VerifyOptions vopts;
    vopts.corrupt_fixture = opt.corrupt_fixture;
    auto report = grass::verify_suite(opt.t, vopts);

    std::string payload;
    if (opt.format == "json") {
        require_basis_budget(opt.t);
        auto ring = grass::ideal_ring(opt.t);
        json doc;
        doc["t"] = report.t;
        doc["checks"] = json::array();
        for (const auto& c : report.checks)
            doc["checks"].push_back(
                {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        doc["betti"] = betti_json(grass::poincare_profile(opt.t));
        doc["basis"] = json::array();
        for (const auto& m : grass::additive_basis(opt.t))
            doc["basis"].push_back(gf2::to_string(m, *ring));
        payload = dump(doc);
    } else {
        std::ostringstream os;
        for (const auto& c : report.checks)
            os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        os << (report.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
        payload = os.str();
    }
    return finish(opt, std::move(payload), report.all_passed() ? kExitOk : kExitVerification);
}

// ---- steenrod-solve ----------------------------------------------------------

RunResult run_steenrod(const Options& opt) {
    require_format(opt, {"text", "json"});
    if (opt.t != 3)
        throw CLI::ValidationError("--t", "the coefficient solver is specific to t = 3");
    std::set<std::string> disabled(opt.disabled.begin(), opt.disabled.end());
    auto survivors = steenrod::solve_coefficients(disabled);

    std::string payload;
    if (opt.format == "json") {
        json doc;
        doc["beta"] = 1;
        doc["constraints"] = json::array();
        for (const auto& n : steenrod::constraint_names())
            if (!disabled.count(n)) doc["constraints"].push_back(n);
        doc["survivors"] = json::array();
        for (const auto& s : survivors)
            doc["survivors"].push_back({{"alpha", s.alpha},
                                        {"delta", s.delta},
                                        {"epsilon", s.epsilon},
                                        {"kappa", s.kappa},
                                        {"lambda", s.lambda},
                                        {"mu", s.mu},
                                        {"gamma", s.gamma}});
        payload = dump(doc);
    } else {
        std::ostringstream os;
        os << "beta = 1 (fixed)\n";
        os << "survivors: " << survivors.size() << "\n";
        for (const auto& s : survivors)
            os << "  alpha=" << s.alpha << " delta=" << s.delta << " epsilon=" << s.epsilon
               << " kappa=" << s.kappa << " lambda=" << s.lambda << " mu=" << s.mu
               << " gamma=" << s.gamma << "\n";
        payload = os.str();
    }
    return finish(opt, std::move(payload), kExitOk);
}

// ---- selftest ----------------------------------------------------------------

RunResult run_selftest(const Options& opt) {
    require_format(opt, {"text", "json"});
    std::uint64_t budget = env_budget("GRCOH_MATRIX_BUDGET", gf2::kDefaultMatrixBudget);
    auto results = selfcheck::run_all(opt.seed, opt.cases, budget);

    std::string payload;
    if (opt.format == "json") {
        json doc;
        doc["cases"] = opt.cases;
        doc["seed"] = opt.seed;
        doc["suites"] = json::array();
        for (const auto& r : results)
            doc["suites"].push_back({{"name", r.name},
                                     {"status", r.passed ? "pass" : "fail"},
                                     {"detail", r.detail}});
        payload = dump(doc);
    } else {
        std::ostringstream os;
        for (const auto& r : results)
            os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        payload = os.str();
    }
    return finish(opt, std::move(payload),
                  selfcheck::all_passed(results) ? kExitOk : kExitVerification);
}

}  // namespace

std::string betti_csv(const gf2::BettiProfile& profile) {
    std::ostringstream os;
    os << "degree,dim\n";
    for (const auto& [d, n] : profile.dims) os << d << "," << n << "\n";
    return os.str();
}

RunResult run(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"GF(2) polynomial toolkit for the rank-4 Grassmannian family"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_t) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out_path, "write output to a file");
        if (with_t)
            sub->add_option("--t", opt.t, "family parameter (n = 2^t)")
                ->check(CLI::Range(3, 12))
                ->capture_default_str();
        return sub;
    };

    CLI::App* gens = add_common(app.add_subcommand("gens", "print the g_r generator table"),
                                false);
    gens->add_option("--k", opt.k, "bundle rank")->check(CLI::Range(2, 5))
        ->capture_default_str();
    gens->add_option("--max-r", opt.max_r, "largest index")->check(CLI::Range(0, 1 << 12))
        ->capture_default_str();
    gens->add_flag("--wbar", opt.with_wbar, "also print the wbar_r table");

    CLI::App* grb = add_common(
        app.add_subcommand("groebner", "certify a generator set by the Buchberger criterion"),
        true);
    grb->add_option("--gamma", opt.gamma, "coefficient of w2*w3^2 in Q (t = 3)")
        ->check(CLI::Range(0, 1))->capture_default_str();
    grb->add_option("--ideal", opt.ideal, "which generator set to certify")
        ->check(CLI::IsMember({"full", "impstar", "k3"}))->capture_default_str();
    grb->add_flag("--strict", opt.strict, "also reduce coprime leading-monomial pairs");
    grb->add_flag("--complete", opt.complete,
                  "run Buchberger completion on the raw generators and compare");

    add_common(app.add_subcommand("basis", "print the additive monomial basis"), true);
    add_common(app.add_subcommand("betti", "print the degreewise dimension table"), true);

    CLI::App* verify =
        add_common(app.add_subcommand("verify", "run the structural verification suite"), true);
    verify->add_flag("--corrupt-fixture", opt.corrupt_fixture,
                     "deliberately corrupt one generator to prove the suite detects it");

    CLI::App* solve = add_common(
        app.add_subcommand("steenrod-solve", "enumerate Steenrod coefficient assignments"),
        true);
    solve->add_option("--disable", opt.disabled, "constraint name to skip")
        ->take_all();

    CLI::App* selftest =
        add_common(app.add_subcommand("selftest", "run the randomized property suites"), false);
    selftest->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    selftest->add_option("--cases", opt.cases, "cases per suite")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        RunResult res;
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.exit_code = code == 0 ? kExitOk : kExitUsage;
        return res;
    }

    opt.command = app.get_subcommands().front()->get_name();
    try {
        if (opt.command == "gens") return run_gens(opt);
        if (opt.command == "groebner") return run_groebner(opt);
        if (opt.command == "basis") return run_basis(opt);
        if (opt.command == "betti") return run_betti(opt);
        if (opt.command == "verify") return run_verify(opt);
        if (opt.command == "steenrod-solve") return run_steenrod(opt);
        if (opt.command == "selftest") return run_selftest(opt);
        return RunResult{kExitUsage, "", "error: unknown command\n"};
    } catch (const CLI::ValidationError& e) {
        return RunResult{kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const gf2::ResourceLimitError& e) {
        return RunResult{kExitResource, "", std::string("resource error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return RunResult{kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace cli
