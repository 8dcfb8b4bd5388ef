#include "reccf/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "reccf/approx.hpp"
#include "reccf/errors.hpp"
#include "reccf/euclid.hpp"
#include "reccf/experiments.hpp"
#include "reccf/expr.hpp"
#include "reccf/rational_cf.hpp"
#include "reccf/report_io.hpp"

namespace reccf {

namespace {

struct OutputOptions {
    std::string path;    // empty: stdout
    std::string format;  // "", "csv" or "json"
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "write the result to this file");
    cmd->add_option("--format", out.format, "machine format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const OutputOptions& opts, const std::string& text,
          const OrderedJson& json, const std::string& csv) {
    std::string payload;
    if (opts.format == "json") {
        payload = json.dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = csv;
    } else {
        payload = text;
    }
    if (opts.path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opts.path, std::ios::binary);
    if (!file) {
        throw usage_error("cannot open output file: " + opts.path);
    }
    file << payload;
}

Rat parse_rational_arg(const std::string& text, const std::string& flag) {
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            trimmed += c;
        }
    }
    if (trimmed.empty()) {
        throw usage_error(flag + ": empty rational");
    }
    Rat value;
    if (mpq_set_str(value.get_mpq_t(), trimmed.c_str(), 10) != 0) {
        throw usage_error(flag + ": not a rational: '" + text + "'");
    }
    if (mpz_cmp_ui(mpq_denref(value.get_mpq_t()), 0) == 0) {
        throw usage_error(flag + ": zero denominator");
    }
    value.canonicalize();
    return value;
}

Int parse_integer_arg(const std::string& text, const std::string& flag) {
    Int value;
    if (mpz_set_str(value.get_mpz_t(), text.c_str(), 10) != 0) {
        throw usage_error(flag + ": not an integer: '" + text + "'");
    }
    return value;
}

void check_scan_range(unsigned long n_from, unsigned long n_to) {
    if (n_from < 1 || n_from > n_to) {
        throw usage_error("invalid range: need 1 <= n-from <= n-to");
    }
}

// RECCF_THREADS caps worker parallelism; default is the hardware count.
unsigned resolve_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    const char* env = std::getenv("RECCF_THREADS");
    if (env == nullptr) {
        return hw;
    }
    std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
        throw usage_error("RECCF_THREADS must be a positive integer");
    }
    unsigned long cap = std::strtoul(text.c_str(), nullptr, 10);
    if (cap < 1) {
        throw usage_error("RECCF_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(std::min<unsigned long>(cap, hw));
}

std::string cf_to_text(const std::vector<Int>& quotients) {
    std::string out = "[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(quotients[i]);
    }
    out += "]";
    return out;
}

std::string symbolic_cf_to_text(const SymbolicCF& cf) {
    std::string out = "[";
    for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += render(cf.quotients[i]);
    }
    out += "]";
    return out;
}

void cmd_eval(const std::string& expr, unsigned long n,
              const OutputOptions& out) {
    PowerSum ps = parse_power_sum(expr);
    Rat value = ps.eval(n);
    OrderedJson json{
        {"config",
         OrderedJson{{"command", "eval"}, {"expr", render(ps)}, {"n", n}}},
        {"records",
         OrderedJson::array({OrderedJson{{"n", n}, {"value", to_string(value)}}})}};
    std::string csv = "n,value\n" + std::to_string(n) + "," +
                      csv_field(to_string(value)) + "\n";
    emit(out, to_string(value) + "\n", json, csv);
}

void cmd_ell(const std::string& expr, const OutputOptions& out) {
    PowerSum ps = parse_power_sum(expr);
    Rat value = ps.ell().value();
    OrderedJson json{
        {"config", OrderedJson{{"command", "ell"}, {"expr", render(ps)}}},
        {"records", OrderedJson::array({OrderedJson{{"ell", to_string(value)}}})}};
    std::string csv = "ell\n" + csv_field(to_string(value)) + "\n";
    emit(out, to_string(value) + "\n", json, csv);
}

void cmd_cf(const std::string& x_text, bool show_convergents,
            const OutputOptions& out) {
    Rat x = parse_rational_arg(x_text, "--x");
    RationalCF cf = cf_of_rational(x);
    ConvergentTable table = convergents(cf);

    std::ostringstream text;
    text << cf_to_text(cf.quotients) << "\npsi = " << cf.quotients.size()
         << "\n";
    if (show_convergents) {
        for (std::size_t r = 0; r < table.size(); ++r) {
            text << "p_" << r << "/q_" << r << " = " << to_string(table[r].p)
                 << "/" << to_string(table[r].q) << "\n";
        }
    }

    OrderedJson jq = OrderedJson::array();
    for (const Int& a : cf.quotients) {
        jq.push_back(to_string(a));
    }
    OrderedJson jconv = OrderedJson::array();
    for (const Convergent& conv : table) {
        jconv.push_back(OrderedJson{{"p", to_string(conv.p)},
                                    {"q", to_string(conv.q)}});
    }
    OrderedJson json{
        {"config", OrderedJson{{"command", "cf"}, {"x", to_string(x)}}},
        {"records", OrderedJson::array({OrderedJson{
                        {"quotients", std::move(jq)},
                        {"psi", cf.quotients.size()},
                        {"convergents", std::move(jconv)}}})}};

    std::ostringstream csv;
    csv << "r,quotient,p,q\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
        csv << r << ',' << to_string(cf.quotients[r]) << ','
            << to_string(table[r].p) << ',' << to_string(table[r].q) << '\n';
    }
    emit(out, text.str(), json, csv.str());
}

void cmd_lemma1(const std::string& alpha_text, const std::string& beta_text,
                const std::string& t_text, const OutputOptions& out) {
    PowerSum alpha = parse_power_sum(alpha_text);
    PowerSum beta = parse_power_sum(beta_text);
    Rat t = parse_rational_arg(t_text, "--t");
    if (t <= 0) {
        throw usage_error("--t must be positive");
    }
    ApproxCertificate cert = approximate_quotient(alpha, beta, t);

    std::ostringstream text;
    text << "eta: " << render(cert.eta) << "\n"
         << "R: " << cert.truncation_order << "\n"
         << "residual_valuation: " << to_string(cert.residual_valuation.value())
         << "\n"
         << "threshold: " << to_string(cert.threshold) << "\n";

    OrderedJson json{
        {"config", OrderedJson{{"command", "lemma1"},
                               {"alpha", render(alpha)},
                               {"beta", render(beta)},
                               {"t", to_string(t)}}},
        {"records",
         OrderedJson::array({OrderedJson{
             {"eta", render(cert.eta)},
             {"truncation_order", cert.truncation_order},
             {"residual_valuation", to_string(cert.residual_valuation.value())},
             {"threshold", to_string(cert.threshold)}}})}};

    std::ostringstream csv;
    csv << "eta,truncation_order,residual_valuation,threshold\n"
        << csv_field(render(cert.eta)) << ',' << cert.truncation_order << ','
        << csv_field(to_string(cert.residual_valuation.value())) << ','
        << csv_field(to_string(cert.threshold)) << '\n';
    emit(out, text.str(), json, csv.str());
}

void cmd_divide(const std::string& alpha_text, const std::string& beta_text,
                const OutputOptions& out) {
    PowerSum alpha = parse_power_sum(alpha_text);
    PowerSum beta = parse_power_sum(beta_text);
    DivisionOutcome outcome = try_divide(alpha, beta);

    std::ostringstream text;
    OrderedJson record;
    std::ostringstream csv;
    csv << "outcome,quotient,remainder,offending_root\n";
    if (outcome.has_quotient()) {
        text << "quotient: " << render(outcome.quotient()) << "\n"
             << "remainder: " << render(outcome.remainder()) << "\n";
        record = OrderedJson{{"outcome", "step"},
                             {"quotient", render(outcome.quotient())},
                             {"remainder", render(outcome.remainder())}};
        csv << "step," << csv_field(render(outcome.quotient())) << ','
            << csv_field(render(outcome.remainder())) << ",\n";
    } else {
        text << "no Euclid step: offending root "
             << to_string(outcome.offending_root()) << "\n";
        record = OrderedJson{{"outcome", "refutation"},
                             {"offending_root",
                              to_string(outcome.offending_root())}};
        csv << "refutation,,," << to_string(outcome.offending_root()) << '\n';
    }
    OrderedJson json{{"config", OrderedJson{{"command", "divide"},
                                            {"alpha", render(alpha)},
                                            {"beta", render(beta)}}},
                     {"records", OrderedJson::array({std::move(record)})}};
    emit(out, text.str(), json, csv.str());
}

void cmd_cf_expand(const std::string& alpha_text, const std::string& beta_text,
                   const OutputOptions& out) {
    PowerSum alpha = parse_power_sum(alpha_text);
    PowerSum beta = parse_power_sum(beta_text);
    CfExpansion expansion = cf_expand(alpha, beta);

    std::ostringstream text;
    OrderedJson record;
    std::ostringstream csv;
    if (expansion.ok()) {
        text << symbolic_cf_to_text(expansion.cf()) << "\n";
        OrderedJson jq = OrderedJson::array();
        csv << "index,quotient\n";
        for (std::size_t i = 0; i < expansion.cf().quotients.size(); ++i) {
            const std::string rendered = render(expansion.cf().quotients[i]);
            jq.push_back(rendered);
            csv << i << ',' << csv_field(rendered) << '\n';
        }
        record = OrderedJson{{"outcome", "expansion"},
                             {"quotients", std::move(jq)}};
    } else {
        const CfRefutation& ref = expansion.refutation();
        text << "no finite continued fraction over E: refuted at step "
             << ref.step << ", offending root " << to_string(ref.offending_root)
             << "\n";
        record = OrderedJson{{"outcome", "refutation"},
                             {"step", ref.step},
                             {"offending_root", to_string(ref.offending_root)}};
        csv << "step,offending_root\n"
            << ref.step << ',' << to_string(ref.offending_root) << '\n';
    }
    OrderedJson json{{"config", OrderedJson{{"command", "cf-expand"},
                                            {"alpha", render(alpha)},
                                            {"beta", render(beta)}}},
                     {"records", OrderedJson::array({std::move(record)})}};
    emit(out, text.str(), json, csv.str());
}

void emit_scan(const ScanReport& report, const OutputOptions& out) {
    std::ostringstream text, csv;
    write_text(report, text);
    write_csv(report, csv);
    emit(out, text.str(), to_json(report), csv.str());
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"exact power-sum arithmetic and continued-fraction "
                 "experiments"};
    app.require_subcommand(1);

    std::function<void()> action;

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a power sum at n");
    auto eval_expr = std::make_shared<std::string>();
    auto eval_n = std::make_shared<unsigned long>(0);
    auto eval_out = std::make_shared<OutputOptions>();
    eval_cmd->add_option("--expr", *eval_expr, "power-sum expression")
        ->required();
    eval_cmd->add_option("--n", *eval_n, "argument n >= 0")->required();
    add_output_flags(eval_cmd, *eval_out);
    eval_cmd->callback(
        [=, &action] { action = [=] { cmd_eval(*eval_expr, *eval_n, *eval_out); }; });

    // ell
    auto* ell_cmd = app.add_subcommand("ell", "largest root of a power sum");
    auto ell_expr = std::make_shared<std::string>();
    auto ell_out = std::make_shared<OutputOptions>();
    ell_cmd->add_option("--expr", *ell_expr, "power-sum expression")
        ->required();
    add_output_flags(ell_cmd, *ell_out);
    ell_cmd->callback(
        [=, &action] { action = [=] { cmd_ell(*ell_expr, *ell_out); }; });

    // cf
    auto* cf_cmd =
        app.add_subcommand("cf", "continued fraction of an exact rational");
    auto cf_x = std::make_shared<std::string>();
    auto cf_conv = std::make_shared<bool>(false);
    auto cf_out = std::make_shared<OutputOptions>();
    cf_cmd->add_option("--x", *cf_x, "rational, e.g. 355/113")->required();
    cf_cmd->add_flag("--convergents", *cf_conv, "also print the convergents");
    add_output_flags(cf_cmd, *cf_out);
    cf_cmd->callback(
        [=, &action] { action = [=] { cmd_cf(*cf_x, *cf_conv, *cf_out); }; });

    // lemma1
    auto* lemma1_cmd = app.add_subcommand(
        "lemma1", "approximate quotient with valuation below a threshold");
    auto l1_alpha = std::make_shared<std::string>();
    auto l1_beta = std::make_shared<std::string>();
    auto l1_t = std::make_shared<std::string>();
    auto l1_out = std::make_shared<OutputOptions>();
    lemma1_cmd->add_option("--alpha", *l1_alpha, "numerator power sum")
        ->required();
    lemma1_cmd->add_option("--beta", *l1_beta, "denominator power sum")
        ->required();
    lemma1_cmd->add_option("--t", *l1_t, "positive rational threshold")
        ->required();
    add_output_flags(lemma1_cmd, *l1_out);
    lemma1_cmd->callback([=, &action] {
        action = [=] { cmd_lemma1(*l1_alpha, *l1_beta, *l1_t, *l1_out); };
    });

    // divide
    auto* divide_cmd =
        app.add_subcommand("divide", "Euclid step over integer-rooted sums");
    auto dv_alpha = std::make_shared<std::string>();
    auto dv_beta = std::make_shared<std::string>();
    auto dv_out = std::make_shared<OutputOptions>();
    divide_cmd->add_option("--alpha", *dv_alpha, "numerator power sum")
        ->required();
    divide_cmd->add_option("--beta", *dv_beta, "denominator power sum")
        ->required();
    add_output_flags(divide_cmd, *dv_out);
    divide_cmd->callback([=, &action] {
        action = [=] { cmd_divide(*dv_alpha, *dv_beta, *dv_out); };
    });

    // cf-expand
    auto* expand_cmd = app.add_subcommand(
        "cf-expand", "finite continued fraction over integer-rooted sums");
    auto ex_alpha = std::make_shared<std::string>();
    auto ex_beta = std::make_shared<std::string>();
    auto ex_out = std::make_shared<OutputOptions>();
    expand_cmd->add_option("--alpha", *ex_alpha, "numerator power sum")
        ->required();
    expand_cmd->add_option("--beta", *ex_beta, "denominator power sum")
        ->required();
    add_output_flags(expand_cmd, *ex_out);
    expand_cmd->callback([=, &action] {
        action = [=] { cmd_cf_expand(*ex_alpha, *ex_beta, *ex_out); };
    });

    // scan
    auto* scan_cmd = app.add_subcommand(
        "scan", "continued-fraction length of alpha(n)/beta(n) over a range");
    auto sc_alpha = std::make_shared<std::string>();
    auto sc_beta = std::make_shared<std::string>();
    auto sc_from = std::make_shared<unsigned long>(0);
    auto sc_to = std::make_shared<unsigned long>(0);
    auto sc_out = std::make_shared<OutputOptions>();
    scan_cmd->add_option("--alpha", *sc_alpha, "numerator power sum")
        ->required();
    scan_cmd->add_option("--beta", *sc_beta, "denominator power sum")
        ->required();
    scan_cmd->add_option("--n-from", *sc_from, "first n (>= 1)")->required();
    scan_cmd->add_option("--n-to", *sc_to, "last n")->required();
    add_output_flags(scan_cmd, *sc_out);
    scan_cmd->callback([=, &action] {
        action = [=] {
            check_scan_range(*sc_from, *sc_to);
            emit_scan(length_scan(parse_power_sum(*sc_alpha),
                                  parse_power_sum(*sc_beta), *sc_from, *sc_to,
                                  resolve_threads()),
                      *sc_out);
        };
    });

    // pourchet
    auto* pourchet_cmd =
        app.add_subcommand("pourchet", "length scan for (a/b)^n");
    auto pc_a = std::make_shared<std::string>();
    auto pc_b = std::make_shared<std::string>();
    auto pc_from = std::make_shared<unsigned long>(0);
    auto pc_to = std::make_shared<unsigned long>(0);
    auto pc_out = std::make_shared<OutputOptions>();
    pourchet_cmd->add_option("--a", *pc_a, "integer a > 1")->required();
    pourchet_cmd->add_option("--b", *pc_b, "integer b > 1, coprime to a")
        ->required();
    pourchet_cmd->add_option("--n-from", *pc_from, "first n (>= 1)")
        ->required();
    pourchet_cmd->add_option("--n-to", *pc_to, "last n")->required();
    add_output_flags(pourchet_cmd, *pc_out);
    pourchet_cmd->callback([=, &action] {
        action = [=] {
            check_scan_range(*pc_from, *pc_to);
            emit_scan(pourchet_scan(parse_integer_arg(*pc_a, "--a"),
                                    parse_integer_arg(*pc_b, "--b"), *pc_from,
                                    *pc_to, resolve_threads()),
                      *pc_out);
        };
    });

    // cor3
    auto* cor3_cmd =
        app.add_subcommand("cor3", "length scan for (a^n-1)/(b^n-1)");
    auto c3_a = std::make_shared<std::string>();
    auto c3_b = std::make_shared<std::string>();
    auto c3_from = std::make_shared<unsigned long>(0);
    auto c3_to = std::make_shared<unsigned long>(0);
    auto c3_out = std::make_shared<OutputOptions>();
    cor3_cmd->add_option("--a", *c3_a, "integer a >= 2")->required();
    cor3_cmd
        ->add_option("--b", *c3_b, "integer b >= 2, multiplicatively "
                                   "independent of a")
        ->required();
    cor3_cmd->add_option("--n-from", *c3_from, "first n (>= 1)")->required();
    cor3_cmd->add_option("--n-to", *c3_to, "last n")->required();
    add_output_flags(cor3_cmd, *c3_out);
    cor3_cmd->callback([=, &action] {
        action = [=] {
            check_scan_range(*c3_from, *c3_to);
            emit_scan(cor3_scan(parse_integer_arg(*c3_a, "--a"),
                                parse_integer_arg(*c3_b, "--b"), *c3_from,
                                *c3_to, resolve_threads()),
                      *c3_out);
        };
    });

    // thue
    auto* thue_cmd = app.add_subcommand(
        "thue", "approximation-exponent probe over convergents");
    auto th_alpha = std::make_shared<std::string>();
    auto th_beta = std::make_shared<std::string>();
    auto th_from = std::make_shared<unsigned long>(0);
    auto th_to = std::make_shared<unsigned long>(0);
    auto th_q0 = std::make_shared<std::string>("2");
    auto th_eps = std::make_shared<double>(2.5);
    auto th_out = std::make_shared<OutputOptions>();
    thue_cmd->add_option("--alpha", *th_alpha, "numerator power sum")
        ->required();
    thue_cmd->add_option("--beta", *th_beta, "denominator power sum")
        ->required();
    thue_cmd->add_option("--n-from", *th_from, "first n (>= 1)")->required();
    thue_cmd->add_option("--n-to", *th_to, "last n")->required();
    thue_cmd->add_option("--q0", *th_q0,
                         "probe bound base (> 1); convergents with q < q0^n");
    thue_cmd->add_option("--epsilon0", *th_eps,
                         "summary counts exponents above this threshold");
    add_output_flags(thue_cmd, *th_out);
    thue_cmd->callback([=, &action] {
        action = [=] {
            check_scan_range(*th_from, *th_to);
            Rat q0 = parse_rational_arg(*th_q0, "--q0");
            if (!(q0 > 1)) {
                throw usage_error("--q0 must be > 1");
            }
            ThueReport report = thue_probe(
                parse_power_sum(*th_alpha), parse_power_sum(*th_beta),
                *th_from, *th_to, q0, *th_eps, resolve_threads());
            std::ostringstream text, csv;
            write_text(report, text);
            write_csv(report, csv);
            emit(*th_out, text.str(), to_json(report), csv.str());
        };
    });

    // denom
    auto* denom_cmd = app.add_subcommand(
        "denom", "exact denominators of zeta(n) against the clearing power");
    auto dn_zeta = std::make_shared<std::string>();
    auto dn_from = std::make_shared<unsigned long>(0);
    auto dn_to = std::make_shared<unsigned long>(0);
    auto dn_out = std::make_shared<OutputOptions>();
    denom_cmd->add_option("--zeta", *dn_zeta, "nonzero power sum")->required();
    denom_cmd->add_option("--n-from", *dn_from, "first n (>= 1)")->required();
    denom_cmd->add_option("--n-to", *dn_to, "last n")->required();
    add_output_flags(denom_cmd, *dn_out);
    denom_cmd->callback([=, &action] {
        action = [=] {
            check_scan_range(*dn_from, *dn_to);
            DenomReport report = denom_probe(parse_power_sum(*dn_zeta),
                                             *dn_from, *dn_to,
                                             resolve_threads());
            std::ostringstream text, csv;
            write_text(report, text);
            write_csv(report, csv);
            emit(*dn_out, text.str(), to_json(report), csv.str());
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "reccf: " << e.what() << std::endl;
        return 1;
    }

    try {
        action();
    } catch (const parse_error& e) {
        std::cerr << "reccf: parse error: " << e.what() << std::endl;
        return 1;
    } catch (const usage_error& e) {
        std::cerr << "reccf: " << e.what() << std::endl;
        return 1;
    } catch (const invalid_range_error& e) {
        std::cerr << "reccf: " << e.what() << std::endl;
        return 1;
    } catch (const error& e) {
        std::cerr << "reccf: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "reccf: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    return dispatch(argc, argv);
}

}  // namespace reccf
