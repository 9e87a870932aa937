#include "approxop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "approxop/functions.hpp"
#include "approxop/moments.hpp"
#include "approxop/operators.hpp"

namespace approxop {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& list, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad value '" + item + "' in " + flag);
        }
    }
    if (out.empty()) throw UsageError(flag + " needs at least one value");
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& list, const std::string& flag) {
    std::vector<std::int64_t> out;
    for (double v : parse_double_list(list, flag)) {
        const auto i = static_cast<std::int64_t>(v);
        if (static_cast<double>(i) != v) throw UsageError(flag + " expects integers, got " + format_double(v));
        out.push_back(i);
    }
    return out;
}

template <typename T>
std::string join_list(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        if constexpr (std::is_same_v<T, double>)
            out += format_double(values[i]);
        else
            out += std::to_string(values[i]);
    }
    return out;
}

// Expands every `--config FILE` into the file's key=value pairs; a
// `subcommand=` line becomes the leading bare token.
std::vector<std::string> expand_config_tokens(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--config") {
            out.push_back(args[i]);
            continue;
        }
        if (i + 1 >= args.size()) throw UsageError("--config requires a file path");
        const std::string& path = args[++i];
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read config file '" + path + "'");
        std::vector<std::string> tokens;
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw UsageError("config line is not key=value: '" + line + "'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "subcommand") {
                tokens.insert(tokens.begin(), value);
            } else {
                tokens.push_back("--" + key);
                if (!value.empty()) tokens.push_back(value);
            }
        }
        out.insert(out.end(), tokens.begin(), tokens.end());
    }
    return out;
}

double resolve_beta(const CliConfig& cfg) {
    if (cfg.beta) return *cfg.beta;
    if (cfg.schedule) return cfg.schedule->beta_for(cfg.n);
    throw UsageError("one of --beta or --schedule is required");
}

bool needs_fn(const std::string& sub) {
    return sub == "eval" || sub == "converge" || sub == "voronovskaya" ||
           sub == "weighted" || sub == "bounds";
}

bool takes_point_beta(const std::string& sub) {
    return sub == "eval" || sub == "moments" || sub == "bounds";
}

}  // namespace

bool CliConfig::same_run(const CliConfig& o) const {
    return subcommand == o.subcommand && fn_name == o.fn_name && op_kind == o.op_kind &&
           n == o.n && n_list == o.n_list && beta == o.beta && schedule == o.schedule &&
           x == o.x && x_list == o.x_list && beta_list == o.beta_list && domain == o.domain &&
           x_max == o.x_max && step == o.step && bound_inputs == o.bound_inputs &&
           eps == o.eps && max_terms == o.max_terms && out_format == o.out_format &&
           out_path == o.out_path;
}

CliConfig parse_args(const std::vector<std::string>& raw_args) {
    std::vector<std::string> args = expand_config_tokens(raw_args);

    CliConfig cfg;
    std::string schedule_str, domain_str, n_list_str, x_list_str, beta_list_str;

    CLI::App app{"positive linear operator family P_n^[beta]: evaluation and experiments",
                 "approxop"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--eps", cfg.eps, "residual-mass tolerance for series truncation");
        sub->add_option("--max-terms", cfg.max_terms, "hard cap on series terms")
            ->envname("APPROXOP_MAX_TERMS");
        sub->add_option("--out", cfg.out_path, "output path ('-' = stdout)");
        sub->add_option("--out-format", cfg.out_format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--print-config", cfg.print_config,
                      "print the resolved configuration and exit");
    };
    auto add_fn = [&](CLI::App* sub) {
        sub->add_option("--fn", cfg.fn_name, "registered function (see README)")->required();
    };
    auto add_point_beta = [&](CLI::App* sub) {
        sub->add_option("--beta", cfg.beta, "operator parameter, 0 <= beta < 1");
        sub->add_option("--schedule", schedule_str, "c,p for beta_n = c n^-p");
    };
    auto add_schedule = [&](CLI::App* sub) {
        sub->add_option("--schedule", schedule_str, "c,p for beta_n = c n^-p");
    };
    auto add_n_list = [&](CLI::App* sub) {
        sub->add_option("--n-list", n_list_str, "comma-separated ascending n values");
    };
    auto add_x_list = [&](CLI::App* sub) {
        sub->add_option("--x-list", x_list_str, "comma-separated evaluation points");
    };

    auto* eval = app.add_subcommand("eval", "evaluate one operator value");
    add_fn(eval);
    eval->add_option("--operator", cfg.op_kind, "p, jain or szasz")
        ->check(CLI::IsMember({"p", "jain", "szasz"}));
    eval->add_option("--n", cfg.n, "sample density")->required();
    add_point_beta(eval);
    eval->add_option("--x", cfg.x, "evaluation point")->required();
    add_common(eval);

    auto* moments = app.add_subcommand("moments", "closed-form and series moments at one point");
    moments->add_option("--n", cfg.n)->required();
    add_point_beta(moments);
    moments->add_option("--x", cfg.x)->required();
    add_common(moments);

    auto* validate = app.add_subcommand(
        "validate-moments", "closed form vs series oracle over an (n, beta, x) grid");
    add_n_list(validate);
    validate->add_option("--beta-list", beta_list_str, "comma-separated beta values");
    add_x_list(validate);
    add_common(validate);

    auto* converge = app.add_subcommand("converge", "sup-norm convergence under a beta schedule");
    add_fn(converge);
    add_schedule(converge);
    add_n_list(converge);
    converge->add_option("--domain", domain_str, "a,b,step evaluation window");
    add_common(converge);

    auto* voron = app.add_subcommand("voronovskaya", "n (P_n f - f) against (x/2) f''");
    add_fn(voron);
    add_schedule(voron);
    add_n_list(voron);
    add_x_list(voron);
    add_common(voron);

    auto* fourth = app.add_subcommand("fourth-moment", "n^2 mu_4 against 3 x^2");
    add_schedule(fourth);
    add_n_list(fourth);
    add_x_list(fourth);
    add_common(fourth);

    auto* weighted = app.add_subcommand("weighted", "weighted sup-norm convergence on [0, x-max]");
    add_fn(weighted);
    add_schedule(weighted);
    add_n_list(weighted);
    weighted->add_option("--x-max", cfg.x_max, "right end of the weighted norm window");
    weighted->add_option("--step", cfg.step, "grid step (default 1)");
    add_common(weighted);

    auto* bounds = app.add_subcommand("bounds", "error-bound values against measured errors");
    add_fn(bounds);
    bounds->add_option("--n", cfg.n)->required();
    add_point_beta(bounds);
    add_x_list(bounds);
    bounds->add_option("--C", cfg.bound_inputs.C, "K-functional constant");
    bounds->add_option("--M-f", cfg.bound_inputs.M_f, "growth / Lipschitz constant");
    bounds->add_option("--alpha-exp", cfg.bound_inputs.alpha_exp, "Lipschitz exponent in (0,1]");
    bounds->add_option("--dist-E", cfg.bound_inputs.dist_E, "distance d(x,E)");
    bounds->add_option("--a", cfg.bound_inputs.a, "interval end for the moduli windows");
    bounds->add_option("--step", cfg.step, "modulus grid step (default delta/100)");
    add_common(bounds);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        throw HelpRequested();
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        throw HelpRequested();
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();

    if (!schedule_str.empty()) {
        const auto parts = parse_double_list(schedule_str, "--schedule");
        if (parts.size() != 2) throw UsageError("--schedule expects c,p");
        try {
            cfg.schedule = BetaSchedule(parts[0], parts[1]);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }
    if (!domain_str.empty()) {
        const auto parts = parse_double_list(domain_str, "--domain");
        if (parts.size() != 3) throw UsageError("--domain expects a,b,step");
        try {
            cfg.domain = Domain(parts[0], parts[1], parts[2]);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }
    if (!n_list_str.empty()) cfg.n_list = parse_int_list(n_list_str, "--n-list");
    if (!x_list_str.empty()) cfg.x_list = parse_double_list(x_list_str, "--x-list");
    if (!beta_list_str.empty()) cfg.beta_list = parse_double_list(beta_list_str, "--beta-list");

    // cross-flag validation
    try {
        if (cfg.beta) BetaParam check(*cfg.beta);
        for (double b : cfg.beta_list) BetaParam check(b);
        cfg.policy().validate();
        if (takes_point_beta(cfg.subcommand)) {
            if (cfg.beta && cfg.schedule)
                throw UsageError("give exactly one of --beta and --schedule");
            if (!cfg.beta && !cfg.schedule)
                throw UsageError("one of --beta or --schedule is required");
            if (cfg.n < 1) throw UsageError("--n must be >= 1");
        }
        if (cfg.x && !(*cfg.x >= 0.0)) throw UsageError("--x must be >= 0");
        for (double x : cfg.x_list)
            if (!(x >= 0.0)) throw UsageError("--x-list values must be >= 0");
        for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
            if (cfg.n_list[i] < 1) throw UsageError("--n-list values must be >= 1");
            if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1])
                throw UsageError("--n-list must be strictly ascending");
        }
        if (needs_fn(cfg.subcommand)) make_scalar_function(cfg.fn_name);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::string render_config(const CliConfig& cfg) {
    std::string out;
    const auto kv = [&out](const std::string& k, const std::string& v) {
        out += k + "=" + v + "\n";
    };
    kv("subcommand", cfg.subcommand);
    if (!cfg.fn_name.empty()) kv("fn", cfg.fn_name);
    if (cfg.subcommand == "eval") kv("operator", cfg.op_kind);
    if (takes_point_beta(cfg.subcommand)) kv("n", std::to_string(cfg.n));
    if (cfg.beta) kv("beta", format_double(*cfg.beta));
    if (cfg.schedule)
        kv("schedule", format_double(cfg.schedule->c) + "," + format_double(cfg.schedule->p));
    if (cfg.x) kv("x", format_double(*cfg.x));
    if (!cfg.n_list.empty()) kv("n-list", join_list(cfg.n_list));
    if (!cfg.x_list.empty()) kv("x-list", join_list(cfg.x_list));
    if (!cfg.beta_list.empty()) kv("beta-list", join_list(cfg.beta_list));
    if (cfg.domain)
        kv("domain", format_double(cfg.domain->a) + "," + format_double(cfg.domain->b) + "," +
                         format_double(cfg.domain->step));
    if (cfg.subcommand == "weighted") {
        kv("x-max", format_double(cfg.x_max));
        kv("step", format_double(cfg.step));
    }
    if (cfg.subcommand == "bounds") {
        kv("C", format_double(cfg.bound_inputs.C));
        kv("M-f", format_double(cfg.bound_inputs.M_f));
        kv("alpha-exp", format_double(cfg.bound_inputs.alpha_exp));
        kv("dist-E", format_double(cfg.bound_inputs.dist_E));
        kv("a", format_double(cfg.bound_inputs.a));
        kv("step", format_double(cfg.step));
    }
    kv("eps", format_double(cfg.eps));
    kv("max-terms", std::to_string(cfg.max_terms));
    kv("out-format", cfg.out_format);
    kv("out", cfg.out_path);
    return out;
}

ExperimentReport execute(const CliConfig& cfg) {
    const TruncationPolicy policy = cfg.policy();
    const std::vector<std::int64_t> n_list = cfg.n_list.empty() ? default_n_list() : cfg.n_list;

    if (cfg.subcommand == "eval") {
        const ScalarFunction f = make_scalar_function(cfg.fn_name);
        const double b = cfg.op_kind == "szasz" ? 0.0 : resolve_beta(cfg);
        const OperatorParams params(cfg.n, BetaParam(b));
        SeriesResult r;
        if (cfg.op_kind == "jain")
            r = apply_jain(f, params, *cfg.x, policy);
        else
            r = apply_p(f, params, *cfg.x, policy);
        ExperimentReport report;
        report.rows.push_back({"eval-" + cfg.op_kind, cfg.n, b, *cfg.x, r.value,
                               f.eval(*cfg.x), {}, r.residual_mass});
        return report;
    }
    if (cfg.subcommand == "moments")
        return run_moment_validation({cfg.n}, {resolve_beta(cfg)}, {*cfg.x}, policy);
    if (cfg.subcommand == "validate-moments") {
        const auto ns = cfg.n_list.empty() ? std::vector<std::int64_t>{1, 5, 10, 50} : cfg.n_list;
        const auto bs = cfg.beta_list.empty() ? std::vector<double>{0.0, 0.1, 0.5, 0.9}
                                              : cfg.beta_list;
        const auto xs = cfg.x_list.empty() ? std::vector<double>{0.1, 1.0, 5.0} : cfg.x_list;
        return run_moment_validation(ns, bs, xs, policy);
    }
    if (cfg.subcommand == "converge") {
        const ScalarFunction f = make_scalar_function(cfg.fn_name);
        const Domain domain = cfg.domain ? *cfg.domain : Domain(0.0, 2.0, 0.05);
        return run_convergence(f, cfg.schedule.value_or(BetaSchedule(1.0, 1.0)), n_list, domain,
                               policy);
    }
    if (cfg.subcommand == "voronovskaya") {
        const ScalarFunction f = make_scalar_function(cfg.fn_name);
        const auto xs = cfg.x_list.empty() ? std::vector<double>{0.5, 1.0, 2.0} : cfg.x_list;
        return run_voronovskaya(f, cfg.schedule.value_or(BetaSchedule(1.0, 2.0)), n_list, xs,
                                policy);
    }
    if (cfg.subcommand == "fourth-moment") {
        const auto xs = cfg.x_list.empty() ? std::vector<double>{0.5, 1.0, 2.0} : cfg.x_list;
        return run_fourth_moment_limit(cfg.schedule.value_or(BetaSchedule(1.0, 2.0)), n_list, xs,
                                       policy);
    }
    if (cfg.subcommand == "weighted") {
        const ScalarFunction f = make_scalar_function(cfg.fn_name);
        return run_weighted(f, cfg.schedule.value_or(BetaSchedule(1.0, 1.0)), n_list, cfg.x_max,
                            cfg.step > 0.0 ? cfg.step : 1.0, policy);
    }
    if (cfg.subcommand == "bounds") {
        const ScalarFunction f = make_scalar_function(cfg.fn_name);
        const OperatorParams params(cfg.n, BetaParam(resolve_beta(cfg)));
        const BoundInputs& inputs = cfg.bound_inputs;
        const auto xs = cfg.x_list.empty() ? std::vector<double>{1.0} : cfg.x_list;

        ExperimentReport report;
        for (double x : xs) {
            const SeriesResult r = apply_p(f, params, x, policy);
            const double err = std::abs(r.value - f.eval(x));
            if (f.growth == GrowthClass::Bounded)
                report.rows.push_back({"local-bound", cfg.n, params.beta.value(), x, err, 0.0,
                                       local_approx_bound(f, params, x, inputs, cfg.step),
                                       r.residual_mass});
            report.rows.push_back({"lipschitz-bound", cfg.n, params.beta.value(), x, err, 0.0,
                                   lipschitz_bound(inputs, params, x), r.residual_mass});
        }
        if (f.growth) {
            double sup = 0.0, arg = 0.0, residual = 0.0;
            for (double x : Domain(0.0, inputs.a, inputs.a / 200.0).grid()) {
                const SeriesResult r = apply_p(f, params, x, policy);
                residual = std::max(residual, r.residual_mass);
                const double err = std::abs(r.value - f.eval(x));
                if (err > sup) {
                    sup = err;
                    arg = x;
                }
            }
            report.rows.push_back({"rate-bound", cfg.n, params.beta.value(), arg, sup, 0.0,
                                   rate_bound(f, inputs, params, cfg.step), residual});
        }
        report.sort_rows();
        return report;
    }
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    try {
        const CliConfig cfg = parse_args(args);
        if (cfg.print_config) {
            std::cout << render_config(cfg);
            return 0;
        }
        const ExperimentReport report = execute(cfg);
        write_report(report, parse_report_format(cfg.out_format), cfg.out_path);
        return 0;
    } catch (const HelpRequested&) {
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace approxop
