// Command-line front end: `verify` runs the congruence suite with JSON-lines
// or table output; `trace`, `bell`, `class`, `unit` expose the individual
// computations.

#include <belltrace/belltrace.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace belltrace;

// exponent expressions accepted by `trace`: a decimal integer (optionally
// negative), tau(a), or Z(a)
Int parse_exponent(std::uint64_t p, const std::string& expr) {
    auto call_arg = [&](const std::string& name) -> std::optional<std::uint64_t> {
        if (expr.rfind(name + "(", 0) != 0 || expr.back() != ')') return std::nullopt;
        std::string inner = expr.substr(name.size() + 1, expr.size() - name.size() - 2);
        return std::stoull(inner);
    };
    if (auto a = call_arg("tau")) return tau(p, *a);
    if (auto a = call_arg("Z")) return zeta_exponent(p, *a);
    return Int(expr);
}

int cmd_verify(const SuiteConfig& cfg, const std::string& output) {
    if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file: " << output << "\n";
            return 2;
        }
        return run_suite(cfg, f, std::cerr);
    }
    return run_suite(cfg, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for Bell-number / Artin-Schreier / class-number congruences"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string statements, output;
    auto* verify = app.add_subcommand("verify", "run the congruence suite");
    verify->add_option("--pmin", cfg.pmin, "smallest prime to include");
    verify->add_option("--pmax", cfg.pmax, "largest prime to include");
    verify->add_option("--amax", cfg.amax, "clamp the a ranges");
    verify->add_option("--mmax", cfg.mmax, "clamp the m / exponent ranges");
    verify->add_option("--nmax", cfg.nmax, "clamp the n ranges");
    verify->add_option("--precision", cfg.precision, "z-precision for the series congruences");
    verify->add_option("--statements", statements, "comma-separated statement ids (default: all)");
    verify->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    verify->add_option("--format", cfg.format, "output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--output", output, "write the report to a file instead of stdout");
    verify->add_flag("--timings", cfg.timings, "emit measured micros in JSON (non-deterministic)");

    std::uint64_t p = 0;
    std::string expr, xarg, narg;
    auto* trace_cmd = app.add_subcommand("trace", "Tr(theta^e) in F_{p^p}; e is an integer, tau(a) or Z(a)");
    trace_cmd->add_option("p", p, "prime")->required();
    trace_cmd->add_option("exponent", expr, "exponent expression")->required();

    auto* bell_cmd = app.add_subcommand("bell", "b_N(x) mod p for arbitrary-precision N");
    bell_cmd->add_option("p", p, "prime")->required();
    bell_cmd->add_option("x", xarg, "evaluation point (integer, reduced mod p)")->required();
    bell_cmd->add_option("N", narg, "index (decimal, arbitrary size)")->required();

    auto* class_cmd = app.add_subcommand("class", "class number h(p) or h(-p) by residue of p mod 4");
    class_cmd->add_option("p", p, "prime > 3")->required();

    auto* unit_cmd = app.add_subcommand("unit", "fundamental unit (t + u sqrt(p))/2 of Q(sqrt(p))");
    unit_cmd->add_option("p", p, "prime = 1 mod 4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            if (!statements.empty()) {
                std::string cur;
                std::stringstream ss(statements);
                while (std::getline(ss, cur, ',')) {
                    auto st = statement_from_name(cur);
                    if (!st) {
                        std::cerr << "error: unknown statement id: " << cur << "\n";
                        return 2;
                    }
                    cfg.statements.insert(*st);
                }
            }
            return cmd_verify(cfg, output);
        }
        if (*trace_cmd) {
            FpCtx ctx = artin_schreier_context(p);
            Mod v = theta(ctx).pow(parse_exponent(p, expr)).trace();
            std::cout << v.value() << "\n";
            return 0;
        }
        if (*bell_cmd) {
            Mod x = Mod::reduce(Int(xarg), p);
            std::cout << bell_eval_huge(p, x, Int(narg)).value() << "\n";
            return 0;
        }
        if (*class_cmd) {
            ClassData d = class_data(p);
            std::cout << (d.real ? "h(" : "h(-") << p << ") = " << d.h << "\n";
            return 0;
        }
        if (*unit_cmd) {
            UnitData u = fundamental_unit(p);
            std::cout << "t = " << u.t << ", u = " << u.u << ", norm = " << (u.norm > 0 ? "+1" : "-1")
                      << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
