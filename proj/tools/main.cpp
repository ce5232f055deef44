// Command-line front end: parameter inspection, dual construction, and the
// full verification stack over GF(3^n).

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmdual/dual.hpp"
#include "cmdual/fixtures.hpp"
#include "cmdual/gf3.hpp"
#include "cmdual/walsh.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    int n = 0;
    int k = 0;
    std::string a = "g";
    std::string modulus;
    std::string format = "text";
    int threads = 0;
    bool dump_spectrum = false;
};

int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int brute_cap() {
    if (const char* env = std::getenv("CMDUAL_MAX_N")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return cm::kDefaultBruteMaxN;
}

cm::FieldCtx make_ctx(const CommonOpts& opt) {
    if (opt.modulus.empty()) return cm::FieldCtx(opt.n);
    std::vector<std::uint8_t> m(opt.modulus.size());
    for (std::size_t i = 0; i < opt.modulus.size(); ++i) {
        const char ch = opt.modulus[opt.modulus.size() - 1 - i];
        if (ch < '0' || ch > '2') throw cm::BadParameters("modulus digits must be in {0,1,2}");
        m[i] = static_cast<std::uint8_t>(ch - '0');
    }
    return cm::FieldCtx(opt.n, std::move(m));
}

json ctx_json(const cm::FieldCtx& ctx) {
    return json{{"n", ctx.n()},
                {"modulus", ctx.modulus_string()},
                {"generator", ctx.generator().str()}};
}

json dual_rep_json(const cm::DualRep& rep) {
    json terms = json::array();
    for (const auto& t : rep.terms)
        terms.push_back(json{{"j", t.j.str()},
                             {"sign", t.sign},
                             {"coeff", t.coeff.str()},
                             {"exp", t.exponent.str()}});
    return json{{"n", rep.params.n},
                {"k", rep.params.k},
                {"d", rep.params.d},
                {"w", rep.params.w},
                {"parity", rep.params.parity_count},
                {"branch", cm::branch_name(rep.params.branch())},
                {"a", rep.a.str()},
                {"terms", std::move(terms)}};
}

std::string dual_rep_text(const cm::DualRep& rep) {
    std::string out = "g(x) =";
    bool first = true;
    for (const auto& t : rep.terms) {
        out += first ? (t.sign < 0 ? " " : " ") : (" + ");
        out += "Tr(" + t.coeff.str() + " x^" + std::to_string(t.exponent.value) + ")";
        first = false;
    }
    if (first) out += " 0";
    return out;
}

json spectrum_report_json(const cm::SpectrumReport& rep, bool with_lambdas) {
    json j{{"n", rep.n},
           {"k", rep.k},
           {"a", rep.a},
           {"reference", {{"a", rep.reference.a}, {"b", rep.reference.b}}},
           {"bent", rep.bent},
           {"weakly_regular", rep.weakly_regular},
           {"dual_matches", rep.dual_matches}};
    if (with_lambdas) {
        json lam = json::array();
        for (const auto& rec : rep.per_lambda) {
            json r{{"lambda", rec.lambda},
                   {"w", {{"a", rec.w.a}, {"b", rec.w.b}}},
                   {"norm_ok", rec.norm_ok}};
            if (rec.dual_value >= 0)
                r["dual_value"] = rec.dual_value;
            else
                r["dual_value"] = nullptr;
            lam.push_back(std::move(r));
        }
        j["per_lambda"] = std::move(lam);
    }
    return j;
}

int cmd_field(const CommonOpts& opt) {
    const cm::FieldCtx ctx = make_ctx(opt);
    if (opt.format == "json") {
        std::cout << ctx_json(ctx).dump(2) << "\n";
    } else {
        std::cout << "n=" << ctx.n() << " modulus=" << ctx.modulus_string()
                  << " generator=" << ctx.generator().str() << "\n";
    }
    return 0;
}

int cmd_params(const CommonOpts& opt) {
    const cm::CmParams p = cm::derive_params(opt.n, opt.k);
    if (opt.format == "json") {
        std::cout << json{{"n", p.n},
                          {"k", p.k},
                          {"d", p.d},
                          {"w", p.w},
                          {"parity", p.parity_count},
                          {"branch", cm::branch_name(p.branch())}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "w=" << p.w << " parity=" << p.parity_count << " d=" << p.d << "\n";
    }
    return 0;
}

int cmd_sets(const CommonOpts& opt, bool with_brute) {
    const cm::CmParams p = cm::derive_params(opt.n, opt.k);
    const cm::IndexSets sets = cm::gen_sets(p);
    json j{{"n", p.n},
           {"k", p.k},
           {"branch", cm::branch_name(p.branch())},
           {"U", json::array()},
           {"V", json::array()}};
    for (const auto& x : sets.U) j["U"].push_back(x.str());
    for (const auto& x : sets.V) j["V"].push_back(x.str());
    if (with_brute) {
        const auto [s0, s1] = cm::brute_S0_S1(p, brute_cap());
        j["S0"] = s0;
        j["S1"] = s1;
    }
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "branch=" << cm::branch_name(p.branch()) << "\n";
        std::cout << "U (" << sets.U.size() << "):";
        for (const auto& x : sets.U) std::cout << " " << x.str();
        std::cout << "\nV (" << sets.V.size() << "):";
        for (const auto& x : sets.V) std::cout << " " << x.str();
        std::cout << "\n";
        if (with_brute) {
            std::cout << "|S0|=" << j["S0"].size() << " |S1|=" << j["S1"].size() << "\n";
        }
    }
    return 0;
}

int cmd_dual(const CommonOpts& opt) {
    const cm::FieldCtx ctx = make_ctx(opt);
    const cm::FieldElement a = ctx.parse(opt.a);
    const cm::DualRep rep = cm::dual_representation(ctx, a, opt.k);
    if (opt.format == "json") {
        std::cout << dual_rep_json(rep).dump(2) << "\n";
    } else {
        std::cout << "a=" << a.str() << " (" << (ctx.eta(a) > 0 ? "square" : "non-square")
                  << ")\n"
                  << dual_rep_text(rep) << "\n"
                  << "terms=" << rep.terms.size()
                  << " degree=" << cm::algebraic_degree(rep) << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& opt, const std::string& mode) {
    const cm::FieldCtx ctx = make_ctx(opt);
    const cm::FieldElement a = ctx.parse(opt.a);
    const int threads = effective_threads(opt.threads);
    bool ok = true;
    json out = json::object();
    out["n"] = opt.n;
    out["k"] = opt.k;
    out["a"] = a.str();
    out["mode"] = mode;

    const bool do_all = mode == "all";
    std::unique_ptr<cm::DualRep> rep;
    auto need_rep = [&]() -> const cm::DualRep& {
        if (!rep) rep = std::make_unique<cm::DualRep>(cm::dual_representation(ctx, a, opt.k));
        return *rep;
    };

    if (do_all || mode == "bent") {
        const auto report = cm::verify_bent(ctx, a, opt.k, threads);
        out["bent"] = spectrum_report_json(report, opt.dump_spectrum);
        ok &= report.bent;
    }
    if (do_all || mode == "dual") {
        const auto report = cm::verify_weak_regularity(ctx, a, opt.k, need_rep(), threads);
        out["dual"] = spectrum_report_json(report, opt.dump_spectrum);
        ok &= report.bent && report.dual_matches;
    }
    if (do_all || mode == "universal") {
        const auto lhs = cm::universal_dual_table(ctx, a, opt.k, brute_cap());
        const auto rhs = cm::dual_table(ctx, need_rep());
        const bool match = lhs == rhs;
        out["universal"] = json{{"matches_trace_representation", match}};
        ok &= match;
    }
    if (do_all || mode == "threeterm") {
        const int n = opt.n, k = opt.k;
        bool applicable = false;
        cm::ThreeTermVariant variant{};
        int t = 0;
        if (n % 3 == 2 && k == 2 * (n - 2) / 3 + 1 && n >= 5) {
            applicable = true;
            variant = cm::ThreeTermVariant::One;
            t = (n - 2) / 3;
        } else if (n % 3 == 1 && k == 2 * (n - 1) / 3 + 1 && n >= 4) {
            applicable = true;
            variant = cm::ThreeTermVariant::Two;
            t = (n - 1) / 3;
        }
        if (!applicable) {
            if (!do_all) {
                std::cerr << "threeterm requires (n,k) = (3t+2, 2t+1) or (3t+1, 2t+1)\n";
                return 2;
            }
            out["threeterm"] = json{{"applicable", false}};
        } else {
            const auto rhs = cm::dual_table(ctx, need_rep());
            bool match = true;
            for (cm::Int i = 0; i < ctx.size() && match; ++i)
                match = cm::three_term_dual(ctx, a, variant, t, ctx.element_at(i)) ==
                        rhs[static_cast<std::size_t>(i)];
            out["threeterm"] = json{{"applicable", true}, {"matches", match}};
            ok &= match;
        }
    }
    out["verified"] = ok;

    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n=" << opt.n << " k=" << opt.k << " a=" << a.str()
                  << " mode=" << mode << " -> " << (ok ? "VERIFIED" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_predict(const CommonOpts& opt) {
    const auto families = cm::classify_special(opt.n, opt.k);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& f : families) {
            json j{{"family", f.family},
                   {"w", f.w},
                   {"parity", f.parity_count},
                   {"branch", cm::branch_name(f.branch)},
                   {"terms", f.term_count}};
            if (f.m > 0) {
                j["m"] = f.m;
                j["t"] = f.t;
            }
            arr.push_back(std::move(j));
        }
        std::cout << json{{"n", opt.n}, {"k", opt.k}, {"families", std::move(arr)}}.dump(2)
                  << "\n";
    } else {
        if (families.empty()) {
            std::cout << "no special family applies to (n=" << opt.n << ", k=" << opt.k
                      << ")\n";
        }
        for (const auto& f : families) {
            std::cout << f.family << ": w=" << f.w << " parity=" << f.parity_count
                      << " branch=" << cm::branch_name(f.branch) << " terms=" << f.term_count;
            if (f.m > 0) std::cout << " (m=" << f.m << ", t=" << f.t << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_table(int n_max) {
    std::cout << "n,k,w,parityCount,branch,termCount\n";
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            if (!cm::cm_params_valid(n, k)) continue;
            const cm::CmParams p = cm::derive_params(n, k);
            const cm::Int terms =
                cm::fib_count((p.branch() == cm::Branch::Even ? p.w : p.n - p.w) - 2) +
                cm::fib_count((p.branch() == cm::Branch::Even ? p.w : p.n - p.w) - 3);
            std::cout << n << "," << k << "," << p.w << "," << p.parity_count << ","
                      << cm::branch_name(p.branch()) << "," << terms << "\n";
        }
    }
    return 0;
}

int cmd_examples(const std::string& format) {
    const auto results = cm::run_fixtures();
    bool all_ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        all_ok &= r.ok;
        if (format == "json") {
            arr.push_back(json{{"id", r.id}, {"ok", r.ok}, {"diffs", r.diffs}});
        } else {
            std::cout << r.id << ": " << (r.ok ? "ok" : "MISMATCH") << "\n";
            for (const auto& d : r.diffs) std::cout << "  " << d << "\n";
        }
    }
    if (format == "json")
        std::cout << json{{"ok", all_ok}, {"fixtures", std::move(arr)}}.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coulter-Matthews dual construction and verification"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string mode = "all";
    bool with_brute = false;
    int table_n = 12;

    auto add_common = [&](CLI::App* cmd, bool need_k) {
        cmd->add_option("--n", opt.n, "extension degree n")->required();
        if (need_k) cmd->add_option("--k", opt.k, "exponent parameter k")->required();
        cmd->add_option("--modulus", opt.modulus, "modulus coefficient string");
        cmd->add_option("--format", opt.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        return cmd;
    };

    auto* field = add_common(app.add_subcommand("field", "print the field context"), false);
    auto* params =
        add_common(app.add_subcommand("params", "derived parameters w, parity, d"), true);
    auto* sets = add_common(app.add_subcommand("sets", "index set listings"), true);
    sets->add_flag("--brute", with_brute, "include the brute-force S0/S1 scan");
    auto* dual =
        add_common(app.add_subcommand("dual", "trace representation of the dual"), true);
    dual->add_option("--a", opt.a, "coefficient a (digit string or g^e)");
    auto* verify = add_common(app.add_subcommand("verify", "verify spectrum claims"), true);
    verify->add_option("--a", opt.a, "coefficient a (digit string or g^e)");
    verify->add_option("--mode", mode, "bent|dual|universal|threeterm|all")
        ->check(CLI::IsMember({"bent", "dual", "universal", "threeterm", "all"}));
    verify->add_option("--threads", opt.threads, "worker threads (default: all cores)");
    verify->add_flag("--dump-spectrum", opt.dump_spectrum, "include per-lambda records");
    auto* predict =
        add_common(app.add_subcommand("predict", "special-family classification"), true);
    auto* table = app.add_subcommand("table", "CSV parameter sweep");
    table->add_option("--n", table_n, "sweep n from 2 to this bound");
    auto* examples = app.add_subcommand("examples", "replay the embedded worked examples");
    examples->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (field->parsed()) return cmd_field(opt);
        if (params->parsed()) return cmd_params(opt);
        if (sets->parsed()) return cmd_sets(opt, with_brute);
        if (dual->parsed()) return cmd_dual(opt);
        if (verify->parsed()) return cmd_verify(opt, mode);
        if (predict->parsed()) return cmd_predict(opt);
        if (table->parsed()) return cmd_table(table_n);
        if (examples->parsed()) return cmd_examples(opt.format);
    } catch (const cm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
