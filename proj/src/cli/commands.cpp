#include "plinear/cli/commands.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "plinear/cli/poly_text.hpp"
#include "plinear/engine/evaluate.hpp"
#include "plinear/engine/verify.hpp"
#include "plinear/errors.hpp"
#include "plinear/scheme/scheme_io.hpp"

namespace plinear {

namespace {

struct BuildArgs {
    std::string poly, num = "1", vars, out;
    std::uint64_t p = 0;
    unsigned r = 1;
};

struct EvalArgs {
    std::string scheme, index;
    bool trace = false;
};

struct VerifyArgs {
    std::string scheme, suite, seq, poly, vars;
    std::int64_t kmax = -1;
    std::uint64_t p = 0;
    bool json = false;
};

std::string vec_text(const std::vector<std::uint64_t>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

std::string digits_text(const std::vector<std::int64_t>& d)
{
    if (d.size() == 1)
        return std::to_string(d[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

int cmd_build_ct(const BuildArgs& a, unsigned threads, std::ostream& out)
{
    const auto vars = parse_var_list(a.vars);
    const IntLaurent g = parse_poly(a.poly, vars);
    const IntLaurent q = parse_poly(a.num, vars);
    CTScheme s = build_ct_scheme(g, q, a.p, a.r, vars, BuildOptions{threads});
    save_scheme(s, a.out);
    out << "kind: ct\n";
    out << "states: " << s.size() << "\n";
    out << "rho: " << s.rho << "\n";
    out << "interior points of rho*Delta: " << s.interior_point_count() << "\n";
    out << "bound: rho*|(rho*Delta°)_Z| = " << s.rho * static_cast<std::int64_t>(s.interior_point_count())
        << " (rho <= 2r = " << 2 * a.r << ")\n";
    out << "wrote " << a.out << "\n";
    return kExitOk;
}

int cmd_build_rat(const BuildArgs& a, std::ostream& out)
{
    const auto vars = parse_var_list(a.vars);
    const IntLaurent P = parse_poly(a.poly, vars);
    const IntLaurent Q = parse_poly(a.num, vars);
    RatScheme s = build_rat_scheme(P, Q, a.p, a.r, vars);
    save_scheme(s, a.out);
    Integer bound = ipow(Integer(static_cast<long>(s.rho)), static_cast<unsigned long>(s.n)) *
                    Integer(static_cast<long>(s.degree_product()));
    out << "kind: rat\n";
    out << "states: " << s.size() << "\n";
    out << "rho: " << s.rho << "\n";
    out << "bound: rho^n*d_1*...*d_n = " << bound.get_str() << "\n";
    out << "wrote " << a.out << "\n";
    return kExitOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out)
{
    const AnyScheme any = load_scheme(a.scheme);
    EvalTrace trace;
    EvalTrace* tp = a.trace ? &trace : nullptr;
    Residue value;
    if (const auto* ct = std::get_if<CTScheme>(&any)) {
        if (a.index.find(',') != std::string::npos)
            throw Error("constant-term schemes take a single index");
        value = eval_ct(*ct, parse_index(a.index), tp);
    } else {
        const auto& rat = std::get<RatScheme>(any);
        const auto K = parse_multi_index(a.index);
        if (K.size() != rat.n)
            throw Error("index has " + std::to_string(K.size()) + " components, scheme has " +
                        std::to_string(rat.n) + " variables");
        value = eval_rat(rat, K, tp);
    }
    if (tp) {
        for (std::size_t i = 0; i < trace.digits.size(); ++i)
            out << "digit " << digits_text(trace.digits[i]) << ": " << vec_text(trace.vectors[i]) << "\n";
    }
    out << value.value() << "\n";
    return kExitOk;
}

int report(const Report& rep, bool as_json, std::ostream& out)
{
    out << (as_json ? rep.json() + "\n" : rep.text());
    return rep.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (!a.scheme.empty() == !a.suite.empty())
        throw Error("verify needs exactly one of --scheme or --suite");
    if (!a.scheme.empty()) {
        if (a.kmax < 0)
            throw Error("verify --scheme needs --kmax");
        const AnyScheme any = load_scheme(a.scheme);
        return std::visit([&](const auto& s) { return report(verify_scheme(s, a.kmax), a.json, out); }, any);
    }
    if (a.p == 0)
        throw Error("verify --suite needs --p");
    auto kmax = [&](std::int64_t def) { return a.kmax < 0 ? def : a.kmax; };
    if (a.suite == "lucas") {
        if (a.seq.empty())
            throw Error("verify --suite lucas needs --seq");
        return report(lucas_check(parse_sequence_spec(a.seq), a.p, kmax(500)), a.json, out);
    }
    if (a.suite == "gessel")
        return report(gessel_check(a.p, kmax(100)), a.json, out);
    if (a.suite == "power2")
        return report(two_state_power_check(a.p, kmax(500)), a.json, out);
    if (a.suite == "hasse-witt") {
        if (a.poly.empty() || a.vars.empty())
            throw Error("verify --suite hasse-witt needs --poly and --vars");
        const auto vars = parse_var_list(a.vars);
        return report(verify_hasse_witt(parse_poly(a.poly, vars), a.p, kmax(40)), a.json, out);
    }
    throw Error("unknown suite '" + a.suite + "'");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"p-linear schemes for constant-term and rational-function sequences mod p^r", "plinear"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads")->envname("PLINEAR_THREADS")->check(CLI::PositiveNumber);

    BuildArgs bct, brat;
    auto* build_ct = app.add_subcommand("build-ct", "Build a scheme for ct[q g^k] mod p^r");
    build_ct->add_option("--poly", bct.poly, "Laurent polynomial g")->required();
    build_ct->add_option("--num", bct.num, "Numerator q (default 1)");
    build_ct->add_option("--vars", bct.vars, "Comma-separated variable names")->required();
    build_ct->add_option("--p", bct.p, "Prime")->required();
    build_ct->add_option("--r", bct.r, "Exponent r of the modulus p^r")->required()->check(CLI::PositiveNumber);
    build_ct->add_option("--out", bct.out, "Output scheme file")->required();

    auto* build_rat = app.add_subcommand("build-rat", "Build a scheme for the coefficients of Q/P mod p^r");
    build_rat->add_option("--den", brat.poly, "Denominator polynomial P")->required();
    build_rat->add_option("--num", brat.num, "Numerator polynomial Q (default 1)");
    build_rat->add_option("--vars", brat.vars, "Comma-separated variable names")->required();
    build_rat->add_option("--p", brat.p, "Prime")->required();
    build_rat->add_option("--r", brat.r, "Exponent r of the modulus p^r")->required()->check(CLI::PositiveNumber);
    build_rat->add_option("--out", brat.out, "Output scheme file")->required();

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a scheme at an index");
    eval->add_option("--scheme", ev.scheme, "Scheme file")->required();
    eval->add_option("--index", ev.index, "Decimal index, or k1,k2,... for rational schemes")->required();
    eval->add_flag("--trace", ev.trace, "Print digits and intermediate state vectors");

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Check a scheme or a congruence suite against oracles");
    verify->add_option("--scheme", vf.scheme, "Scheme file");
    verify->add_option("--suite", vf.suite, "lucas | gessel | hasse-witt | power2")
        ->check(CLI::IsMember({"lucas", "gessel", "hasse-witt", "power2"}));
    verify->add_option("--kmax", vf.kmax, "Largest index checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--p", vf.p, "Prime");
    verify->add_option("--seq", vf.seq, "Sequence for the lucas suite, e.g. franel(3)");
    verify->add_option("--poly", vf.poly, "Laurent polynomial for the hasse-witt suite");
    verify->add_option("--vars", vf.vars, "Variables for --poly");
    verify->add_flag("--json", vf.json, "Print the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build_ct)
            return cmd_build_ct(bct, threads, out);
        if (*build_rat)
            return cmd_build_rat(brat, out);
        if (*eval)
            return cmd_eval(ev, out);
        if (*verify)
            return cmd_verify(vf, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace plinear
