#include "trcq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "trcq/bounds.hpp"
#include "trcq/errors.hpp"
#include "trcq/exact.hpp"
#include "trcq/experiments.hpp"
#include "trcq/verify.hpp"

namespace trcq::cli {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::set<std::string> kGlobalKeys = {"out", "seed"};

struct Settings {
    std::string out_path;
    std::uint64_t seed = 42;
    std::string config_path;

    std::string symbol;
    std::string closed;
    std::string g = "poly5exp";
    double kappa = 0.1;
    std::size_t n = 64;
    std::size_t fft_size = 0;
    std::string engine = "fft";
    double t_final = 2.0;
    std::string converge_kappas = "0.1,0.05,0.025,0.0125,0.00625";
    std::string bound_kappas = "0.1,0.05";
    std::string times = "1,2,4,8,16";
    std::size_t growth_samples = 10000;
    double long_kappa = 0.05;
    double long_t_final = 100.0;
    double t_start = 1.0;
    std::size_t points = 16;
    std::size_t samples = 100000;
    std::string suite;
    double mu = 0.0;
};

void warn_if_not_causal(const SmoothCausalFunction& g, std::ostream& err) {
    if (std::abs(g(0.0)) > 0.0) {
        err << "warning: g(0) = " << num(g(0.0))
            << " is nonzero; the error bounds assume g vanishes at t = 0 with its derivatives\n";
    }
}

int cmd_weights(const Settings& s, std::ostream& os, std::ostream& err) {
    WeightTable table;
    std::string label;
    if (!s.closed.empty()) {
        table = cq_weights_closed(parse_closed_kind(s.closed), s.kappa, s.n);
        label = "closed:" + s.closed;
    } else {
        if (s.symbol.empty()) {
            throw ParseError("weights needs --symbol or --closed", 1, 1);
        }
        const Symbol f = parse_symbol_spec(s.symbol);
        table = cq_weights_fft(f, s.kappa, s.n, s.fft_size);
        label = f.spec();
    }
    os << "# symbol=" << label << " kappa=" << num(table.kappa) << " radius=" << num(table.radius)
       << " fft_size=" << table.fft_size << " accuracy_estimate=" << num(table.accuracy_estimate)
       << '\n';
    write_weights_csv(os, table);
    err << "accuracy_estimate=" << num(table.accuracy_estimate) << '\n';
    return kOk;
}

int cmd_convolve(const Settings& s, std::ostream& os, std::ostream& err) {
    const Symbol f = parse_symbol_spec(s.symbol);
    const SmoothCausalFunction g = parse_g_spec(s.g);
    if (s.engine != "fft" && s.engine != "naive") {
        throw ParseError("engine must be 'fft' or 'naive', got '" + s.engine + "'", 1, 1);
    }
    warn_if_not_causal(g, err);
    const CausalSignal out = run_convolution(f, g, s.kappa, s.n, s.engine == "fft");
    os << "# symbol=" << f.spec() << " g=" << g.spec << " engine=" << s.engine << '\n';
    write_signal_csv(os, out);
    return kOk;
}

int cmd_converge(const Settings& s, std::ostream& os, std::ostream& err) {
    const Symbol f = parse_symbol_spec(s.symbol);
    const SmoothCausalFunction g = parse_g_spec(s.g);
    warn_if_not_causal(g, err);
    const auto rows = run_converge(f, g, s.t_final, parse_real_list(s.converge_kappas));
    os << "# symbol=" << f.spec() << " g=" << g.spec << " t_final=" << num(s.t_final) << '\n';
    os << "kappa,error_at_t,eoc\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << num(rows[i].kappa) << ',' << num(rows[i].error) << ',';
        if (rows[i].exact) {
            os << "exact";
        } else if (i > 0) {
            os << num(rows[i].eoc);
        }
        os << '\n';
    }
    return kOk;
}

int cmd_bound(const Settings& s, std::ostream& os, std::ostream& err) {
    const Symbol f = parse_symbol_spec(s.symbol);
    const SmoothCausalFunction g = parse_g_spec(s.g);
    if (f.mu() < 0.0) {
        throw DomainError("bound needs a symbol with mu >= 0");
    }
    warn_if_not_causal(g, err);
    const VerificationReport growth = validate_growth(f, s.growth_samples, s.seed);
    const auto rows = run_bound(f, g, parse_real_list(s.times), parse_real_list(s.bound_kappas));
    os << "# symbol=" << f.spec() << " g=" << g.spec << " growth_samples=" << growth.samples
       << " growth_violations=" << growth.violations << '\n';
    os << "t,kappa,observed_error,bound_rhs,ratio\n";
    bool exceeded = false;
    for (const BoundRow& r : rows) {
        os << num(r.t) << ',' << num(r.kappa) << ',' << num(r.observed) << ',' << num(r.bound)
           << ',' << num(r.ratio) << '\n';
        exceeded = exceeded || !(r.ratio <= 1.0);
    }
    if (!growth.passed()) {
        err << "warning: growth certificate failed on " << growth.violations
            << " samples; ratios are not asserted\n";
        return kOk;
    }
    if (exceeded) {
        err << "error: observed error exceeds the bound\n";
        return kAssertionFailed;
    }
    return kOk;
}

int cmd_longtime(const Settings& s, std::ostream& os, std::ostream& err) {
    const Symbol f = parse_symbol_spec(s.symbol);
    const SmoothCausalFunction g = parse_g_spec(s.g);
    warn_if_not_causal(g, err);
    const LongtimeResult r = run_longtime(f, g, s.long_kappa, s.long_t_final, s.points, s.t_start);
    os << "# symbol=" << f.spec() << " g=" << g.spec << " kappa=" << num(s.long_kappa) << '\n';
    os << "t,error\n";
    for (std::size_t i = 0; i < r.times.size(); ++i) {
        os << num(r.times[i]) << ',' << num(r.errors[i]) << '\n';
    }
    os << "# slope_p=" << num(r.slope) << '\n';
    os << "# rate_r=" << num(r.rate) << '\n';
    err << "slope_p=" << num(r.slope) << " rate_r=" << num(r.rate) << '\n';
    return kOk;
}

int cmd_verify(const Settings& s, std::ostream& os, std::ostream& err) {
    const auto names = verify::suite_names();
    if (std::find(names.begin(), names.end(), s.suite) == names.end()) {
        std::string known;
        for (const auto& n : names) {
            known += (known.empty() ? "" : ", ") + n;
        }
        err << "error: unknown suite '" << s.suite << "' (known: " << known << ")\n";
        return kUsageError;
    }
    const VerificationReport report = verify::run_suite(s.suite, s.samples, s.seed);
    os << kReportCsvHeader << '\n';
    write_report_rows(os, report);
    err << report.suite << ": " << report.violations << " violations, worst margin "
        << num(report.worst_margin) << '\n';
    return report.passed() ? kOk : kAssertionFailed;
}

int cmd_constants(const Settings& s, std::ostream& os, std::ostream&) {
    const BoundParams p = derive_params(s.mu);
    const BoundConstants& c = p.constants;
    os << "mu,m,alpha,beta,epsilon,Cm1,Cmu1,Cmu2,Cm,Cmu3,Cmu\n";
    os << num(p.mu) << ',' << p.m << ',' << p.alpha << ',' << p.beta << ',' << num(p.epsilon)
       << ',' << num(c.Cm1) << ',' << num(c.Cmu1) << ',' << num(c.Cmu2) << ',' << num(c.Cm)
       << ',' << num(c.Cmu3) << ',' << num(c.Cmu) << '\n';
    return kOk;
}

/// Splices config entries in front of the user's flags so that flags win.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'", 0, 0);
    }
    const auto entries = parse_config(in);
    std::vector<std::string> globals;
    std::vector<std::string> locals;
    for (const auto& [key, value] : entries) {
        auto& dst = kGlobalKeys.count(key) != 0 ? globals : locals;
        dst.push_back("--" + key);
        dst.push_back(value);
    }
    // The subcommand is the first token that is not an option or an option value.
    std::vector<std::string> merged = globals;
    bool placed = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        merged.push_back(args[i]);
        const bool is_flag = args[i].rfind("--", 0) == 0;
        if (is_flag) {
            if (args[i].find('=') == std::string::npos && i + 1 < args.size()) {
                merged.push_back(args[++i]);
            }
            continue;
        }
        if (!placed) {
            merged.insert(merged.end(), locals.begin(), locals.end());
            placed = true;
        }
    }
    return merged;
}

std::string config_fingerprint(const std::vector<std::string>& args) {
    std::string canon;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out" || args[i] == "--config") {
            ++i;
            continue;
        }
        if (args[i].rfind("--out=", 0) == 0 || args[i].rfind("--config=", 0) == 0) {
            continue;
        }
        canon += args[i];
        canon += '\n';
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
    return buf;
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key=value", lineno, line.find_first_not_of(" \t") + 1);
        }
        const std::string key = trim(body.substr(0, eq));
        if (key.empty()) {
            throw ParseError("empty key", lineno, line.find('=') + 1);
        }
        entries[key] = trim(body.substr(eq + 1));
    }
    return entries;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item =
            trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || !std::isfinite(v)) {
            throw ParseError("malformed number '" + item + "'", 1, start + 1);
        }
        values.push_back(v);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Trapezoidal-rule convolution quadrature experiments", "trcq"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.add_option("--out", s.out_path, "Write CSV here instead of stdout");
    app.add_option("--seed", s.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--config", s.config_path, "File of key=value lines; flags win");

    auto* weights = app.add_subcommand("weights", "Export CQ weights");
    weights->add_option("--symbol", s.symbol, "power:x | delay:d | decay:a | resolvent:<file>");
    weights->add_option("--closed", s.closed, "identity | derivative | integral");
    weights->add_option("--kappa", s.kappa, "Time step")->required();
    weights->add_option("--n", s.n, "Highest weight index")->required();
    weights->add_option("--fft-size", s.fft_size, "Contour sample count (0 = automatic)");

    auto* convolve = app.add_subcommand("convolve", "Run one discrete convolution");
    convolve->add_option("--symbol", s.symbol)->required();
    convolve->add_option("--g", s.g, "poly5exp | polyexp:k | mono:k | zero")->capture_default_str();
    convolve->add_option("--kappa", s.kappa)->required();
    convolve->add_option("--n", s.n)->required();
    convolve->add_option("--engine", s.engine, "fft | naive")->capture_default_str();

    auto* converge = app.add_subcommand("converge", "Error and EOC under step halving");
    converge->add_option("--symbol", s.symbol)->required();
    converge->add_option("--g", s.g)->capture_default_str();
    converge->add_option("--t-final", s.t_final)->capture_default_str();
    converge->add_option("--kappa", s.converge_kappas, "Comma-separated, strictly decreasing")
        ->capture_default_str();

    auto* bound = app.add_subcommand("bound", "Observed error against the a priori bound");
    bound->add_option("--symbol", s.symbol)->required();
    bound->add_option("--g", s.g)->capture_default_str();
    bound->add_option("--t", s.times, "Comma-separated times")->capture_default_str();
    bound->add_option("--kappa", s.bound_kappas, "Comma-separated time steps")->capture_default_str();
    bound->add_option("--samples", s.growth_samples, "Growth certificate samples")
        ->capture_default_str();

    auto* longtime = app.add_subcommand("longtime", "Error growth over long times");
    longtime->add_option("--symbol", s.symbol)->required();
    longtime->add_option("--g", s.g)->capture_default_str();
    longtime->add_option("--kappa", s.long_kappa)->capture_default_str();
    longtime->add_option("--t-final", s.long_t_final)->capture_default_str();
    longtime->add_option("--t-start", s.t_start)->capture_default_str();
    longtime->add_option("--points", s.points)->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run a sampled inequality suite");
    verify_cmd->add_option("--suite", s.suite)->required();
    verify_cmd->add_option("--samples", s.samples)->capture_default_str();

    auto* constants = app.add_subcommand("constants", "Bound parameters and constants");
    constants->add_option("--mu", s.mu)->required();

    std::vector<std::string> merged;
    try {
        merged = merge_config(args);
        std::vector<std::string> reversed(merged.rbegin(), merged.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const trcq::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ostringstream csv;
    csv << "# trcq-kit " << kVersion << " config=" << config_fingerprint(merged) << '\n';
    int code = kOk;
    try {
        if (weights->parsed()) {
            code = cmd_weights(s, csv, err);
        } else if (convolve->parsed()) {
            code = cmd_convolve(s, csv, err);
        } else if (converge->parsed()) {
            code = cmd_converge(s, csv, err);
        } else if (bound->parsed()) {
            code = cmd_bound(s, csv, err);
        } else if (longtime->parsed()) {
            code = cmd_longtime(s, csv, err);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(s, csv, err);
        } else {
            code = cmd_constants(s, csv, err);
        }
    } catch (const DegenerateDataError& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerateData;
    } catch (const trcq::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const MissingExactSolutionError& e) {
        err << "error: " << e.what() << '\n' << "supported pairs: " << supported_exact_pairs() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kAssertionFailed;
    }

    if (code == kUsageError) {
        return code;
    }
    if (s.out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(s.out_path, std::ios::binary);
        file << csv.str();
        if (!file) {
            err << "error: cannot write '" << s.out_path << "'\n";
            return kAssertionFailed;
        }
    }
    return code;
}

}  // namespace trcq::cli
