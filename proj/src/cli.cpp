#include "rayclass/cli.hpp"

#include "rayclass/class_forms.hpp"
#include "rayclass/errors.hpp"
#include "rayclass/invariants.hpp"
#include "rayclass/numerics.hpp"
#include "rayclass/qseries.hpp"
#include "rayclass/reciprocity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace rayclass {

namespace {

using nlohmann::json;

constexpr int kValueDigits = 40;

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Outcome {
    json result = json::object();
    std::vector<std::string> lines;
    std::vector<Check> checks;
};

json complex_json(const Complex& z)
{
    return {{"re", z.re().to_string(kValueDigits)}, {"im", z.im().to_string(kValueDigits)}};
}

std::string complex_text(const Complex& z)
{
    std::string im = z.im().to_string(kValueDigits);
    if (im.front() == '-')
        return z.re().to_string(kValueDigits) + " - " + im.substr(1) + "*I";
    return z.re().to_string(kValueDigits) + " + " + im + "*I";
}

long need(const std::optional<long>& v, const char* flag)
{
    if (!v)
        throw ConfigError(std::string("missing required option ") + flag);
    return *v;
}

Real relative(const Complex& lhs, const Complex& rhs, const PrecisionContext& ctx)
{
    return abs(lhs - rhs) / max(ctx.real(1), abs(rhs));
}

Check residual_check(std::string name, const Real& residual, const Real& tol)
{
    return {std::move(name), residual < tol, "residual " + residual.to_string(6) + ", tolerance " + tol.to_string(3)};
}

Outcome cmd_class_group(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const long d = need(cfg.discriminant, "--disc");
    std::vector<ReducedForm> forms = reduced_forms(d);
    Outcome o;
    o.result["discriminant"] = d;
    o.result["class_number"] = forms.size();
    o.result["forms"] = json::array();
    o.lines.push_back("class number " + std::to_string(forms.size()));
    for (const ReducedForm& Q : forms) {
        Complex theta = theta_Q(Q, ctx);
        o.result["forms"].push_back(
            {{"form", Q.to_string()}, {"a", Q.a}, {"b", Q.b}, {"c", Q.c}, {"theta", complex_json(theta)}});
        o.lines.push_back(Q.to_string() + "  theta = " + complex_text(theta));
    }
    return o;
}

Outcome cmd_minpoly(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const CMField field = make_field(need(cfg.discriminant, "--disc"), ctx);
    const long N = need(cfg.level, "--level");
    const long e = need(cfg.exponent, "--exp");
    MinPolyReport rep = min_poly_report(field, N, e, ctx);
    Outcome o;
    o.result["degree"] = rep.degree;
    o.result["coefficients"] = rep.poly.decimal_coefficients();
    o.result["polynomial"] = rep.poly.to_string();
    o.result["scale"] = {{"prime", rep.scale_prime}, {"power", rep.scale_power}};
    o.lines.push_back(rep.poly.to_string());
    if (rep.scale_power > 0)
        o.lines.push_back("# polynomial of " + std::to_string(rep.scale_prime) + "^" + std::to_string(rep.scale_power) +
                          " * y^" + std::to_string(e));
    const Real tol = default_integrality_tolerance(ctx);
    o.checks.push_back(residual_check("realness", rep.max_imag, tol));
    o.checks.push_back(residual_check("integrality", rep.max_distance, tol));
    o.checks.push_back({"monic", rep.poly.is_monic(), "degree " + std::to_string(rep.poly.degree())});
    return o;
}

Outcome cmd_conjugates(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const CMField field = make_field(need(cfg.discriminant, "--disc"), ctx);
    const long N = need(cfg.level, "--level");
    const long e = need(cfg.exponent, "--exp");
    OrbitReport orbit = conjugate_orbit(field, N, e, ctx);
    Outcome o;
    o.result["degree"] = orbit.values.size();
    o.result["conjugates"] = json::array();
    for (std::size_t i = 0; i < orbit.values.size(); ++i) {
        const GaloisLabel& lab = orbit.labels[i];
        o.result["conjugates"].push_back(
            {{"alpha", lab.alpha.to_string()}, {"form", lab.form.to_string()}, {"value", complex_json(orbit.values[i])}});
        o.lines.push_back(lab.alpha.to_string() + " " + lab.form.to_string() + "  " + complex_text(orbit.values[i]));
    }
    const Complex base = singular_y(field, N, e, ctx);
    const Real tol = ctx.tolerance() * Real::pow10(10, ctx.bits());
    o.checks.push_back(residual_check("identity-label", relative(orbit.values.front(), base, ctx), tol));
    return o;
}

Check lemma_check(const char* name, const InequalityReport& rep)
{
    std::string detail = "max ratio " + rep.max_ratio.to_string(12) + " vs threshold " + rep.threshold.to_string(3);
    if (!rep.witnesses.empty()) {
        const InequalityWitness& w = rep.witnesses.front();
        detail += " at (s,t)=(" + std::to_string(w.s) + "," + std::to_string(w.t) + ") on " + w.form.to_string();
    }
    return {name, rep.passed, detail};
}

Outcome cmd_verify(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const long d = need(cfg.discriminant, "--disc");
    const long N = need(cfg.level, "--level");
    const CMField field = make_field(d, ctx);
    if (N < 2)
        throw UnsupportedError("verification needs N >= 2");
    Outcome o;
    const Real tol = ctx.tolerance();

    // y^2 eta^12 = 4 p^3 - g2 p - g3 at z = 1/N on [theta_K, 1]
    const HalfPlanePoint tau(field.theta);
    const IndexPair r(0, 1, N);
    LatticeInvariants inv = lattice_invariants(tau, ctx);
    const Complex p = wp(r, tau, ctx);
    const Complex lhs = pow(y_fn(r, tau, ctx), 2) * pow(inv.eta, 12);
    const Complex rhs = 4 * pow(p, 3) - inv.g2 * p - inv.g3;
    o.checks.push_back(residual_check("curve-identity", relative(lhs, rhs, ctx), tol));
    o.checks.push_back(residual_check("delta-eta24", relative(pow(inv.eta, 24), inv.delta, ctx), tol));
    o.checks.push_back(
        residual_check("delta-g2-g3", relative(pow(inv.g2, 3) - 27 * pow(inv.g3, 2), inv.delta, ctx), tol));

    if (d == -3) {
        ExceptionalReport ex = exceptional_invariant(N, ctx);
        o.result["exceptional"] = {{"sign", ex.sign},
                                   {"y_squared", complex_json(ex.y_squared)},
                                   {"residual", ex.residual.to_string(6)},
                                   {"other_residual", ex.other_residual.to_string(6)}};
        o.lines.push_back("exceptional sign " + std::to_string(ex.sign) + ", y^2 = " + complex_text(ex.y_squared));
        o.checks.push_back(residual_check("exceptional-identity", ex.residual, tol));
        o.checks.push_back(residual_check("g3^2/delta", ex.g3_squared_over_delta_residual, tol));
        o.checks.push_back(residual_check("j-zero", ex.j_abs, tol));
    }
    if (N >= 3 && d <= -20) {
        InequalityReport rep = verify_inequality1(field, N, ctx);
        o.result["lemma1_max_ratio"] = rep.max_ratio.to_string(20);
        o.checks.push_back(lemma_check("inequality-0.996", rep));
    }
    if (N >= 3 && d <= -11) {
        InequalityReport rep = verify_inequality2(field, N, ctx);
        o.result["lemma2_max_ratio"] = rep.max_ratio.to_string(20);
        o.checks.push_back(lemma_check("inequality-0.614", rep));
    }
    return o;
}

Outcome cmd_normal_basis(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const CMField field = make_field(need(cfg.discriminant, "--disc"), ctx);
    const long N = need(cfg.level, "--level");
    const long s = normal_basis_exponent(field, N);
    const long degree = field_degree(field, N);
    Outcome o;
    o.result["degree"] = degree;
    o.result["exponent"] = s;
    o.lines.push_back("degree " + std::to_string(degree));
    o.lines.push_back("exponent " + std::to_string(s));
    return o;
}

int resolve_precision(std::optional<int> flag, const std::optional<std::string>& env)
{
    if (flag)
        return *flag;
    if (env && !env->empty()) {
        char* end = nullptr;
        long v = std::strtol(env->c_str(), &end, 10);
        if (*end != '\0')
            throw ConfigError(std::string(kPrecisionEnv) + " is not an integer: " + *env);
        return static_cast<int>(v);
    }
    return PrecisionContext::kDefaultDigits;
}

json inputs_json(const std::string& command, const RunConfig& cfg)
{
    json in = {{"command", command},
               {"precision", cfg.precision},
               {"format", cfg.output_format == OutputFormat::Json ? "json" : "text"}};
    if (cfg.discriminant)
        in["disc"] = *cfg.discriminant;
    if (cfg.level)
        in["level"] = *cfg.level;
    if (cfg.exponent)
        in["exp"] = *cfg.exponent;
    return in;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_precision)
{
    using Handler = std::function<Outcome(const RunConfig&, const PrecisionContext&)>;
    struct Command {
        const char* name;
        const char* help;
        bool level;
        bool exponent;
        Handler run;
    };
    const std::vector<Command> commands = {
        {"class-group", "reduced forms of discriminant d and their CM points", false, false, cmd_class_group},
        {"minpoly", "minimal polynomial of the singular value y^e", true, true, cmd_minpoly},
        {"conjugates", "all conjugates of the singular value y^e", true, true, cmd_conjugates},
        {"verify", "analytic identities and inequality checks at level N", true, false, cmd_verify},
        {"normal-basis", "field degree and normal basis exponent", true, false, cmd_normal_basis},
    };

    CLI::App app{"Ray class invariants of imaginary quadratic fields", "rayclass"};
    app.require_subcommand(1);
    long disc = 0, level = 0, exponent = 0;
    int precision = 0;
    std::string format = "text";
    std::vector<CLI::App*> subs;
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--disc", disc, "fundamental discriminant d_K < 0")->required();
        if (c.level)
            sub->add_option("--level", level, "modulus N")->required();
        if (c.exponent)
            sub->add_option("--exp", exponent, "exponent e, a multiple of 12N/gcd(6,N)")->required();
        sub->add_option("--precision", precision, "decimal digits (default 256)");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (CLI::App* sub : subs)
            if (sub->parsed()) {
                out << sub->help();
                return 0;
            }
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "rayclass: " << e.what() << "\n";
        return 2;
    }

    std::size_t which = 0;
    while (!subs[which]->parsed())
        ++which;
    CLI::App* sub = subs[which];

    RunConfig cfg;
    cfg.discriminant = disc;
    if (commands[which].level)
        cfg.level = level;
    if (commands[which].exponent)
        cfg.exponent = exponent;
    cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        cfg.precision = resolve_precision(sub->count("--precision") ? std::optional<int>(precision) : std::nullopt,
                                          env_precision);
        const PrecisionContext ctx = with_precision(cfg.precision);
        outcome = commands[which].run(cfg, ctx);
    } catch (const IntegralityError& e) {
        err << "rayclass: " << e.what() << " (worst coefficient degree " << e.degree() << ", residual " << e.residual()
            << "); rerun with a larger --precision\n";
        return 2;
    } catch (const Error& e) {
        err << "rayclass: " << e.what() << "\n";
        return 2;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    const bool all_passed =
        std::all_of(outcome.checks.begin(), outcome.checks.end(), [](const Check& c) { return c.passed; });
    if (cfg.output_format == OutputFormat::Json) {
        json checks = json::array();
        for (const Check& c : outcome.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        json doc = {{"inputs", inputs_json(commands[which].name, cfg)},
                    {"result", outcome.result},
                    {"checks", checks},
                    {"timing_ms", static_cast<long long>(elapsed)}};
        out << doc.dump(2) << "\n";
    } else {
        for (const std::string& line : outcome.lines)
            out << line << "\n";
        for (const Check& c : outcome.checks)
            out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    }
    return all_passed ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const char* env = std::getenv(kPrecisionEnv);
    return run_cli(args, out, err, env ? std::optional<std::string>(env) : std::nullopt);
}

} // namespace rayclass
