#include "randfib/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "randfib/entropy.hpp"
#include "randfib/verify.hpp"

namespace randfib {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct RunConfig {
    std::uint32_t m = 1;
    std::optional<std::uint32_t> n;
    std::uint32_t k = 0;
    std::optional<std::uint32_t> t;
    double tol = 1e-9;
    std::optional<std::uint32_t> trials;
    std::uint64_t seed = 20240807;
    std::uint64_t budget = kDefaultBudget;
    std::string format = "text";
    std::string out_path;
    std::string p;  // comma-separated probabilities; empty means uniform
    std::uint32_t fmax = 6;
    std::uint32_t digit_threshold = 60;
    bool dump = false;
    bool timings = false;
};

Params params_from(const RunConfig& cfg) {
    if (cfg.p.empty()) return Params::uniform(cfg.m);
    std::vector<double> p;
    std::stringstream ss(cfg.p);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(std::stod(item));
    return Params(cfg.m, std::move(p));
}

// The config file mirrors the flags; flags given on the command line win.
void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("m")) cfg.m = j["m"].get<std::uint32_t>();
    if (j.contains("n")) cfg.n = j["n"].get<std::uint32_t>();
    if (j.contains("k")) cfg.k = j["k"].get<std::uint32_t>();
    if (j.contains("t")) cfg.t = j["t"].get<std::uint32_t>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<std::uint32_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("budget")) cfg.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
    if (j.contains("fmax")) cfg.fmax = j["fmax"].get<std::uint32_t>();
    if (j.contains("p")) {
        if (j["p"].is_array()) {
            std::string joined;
            for (const auto& v : j["p"]) {
                if (!joined.empty()) joined += ',';
                joined += fmt_double(v.get<double>());
            }
            cfg.p = joined;
        } else {
            cfg.p = j["p"].get<std::string>();
        }
    }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + cfg.out_path);
    file << text;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        GenerationTable table(cfg.m, cfg.budget);
        const WordSet& a = table.generation(*cfg.n);
        nlohmann::json header;
        header["m"] = cfg.m;
        header["n"] = *cfg.n;
        header["l_n"] = a.uniform_length();
        header["count"] = a.size();
        std::ostringstream body;
        if (cfg.format == "json") {
            nlohmann::json j = header;
            j["words"] = a.to_strings();
            body << j.dump(2) << '\n';
        } else if (cfg.format == "csv") {
            body << "word\n" << a.to_lines();
        } else {
            body << header.dump() << '\n' << a.to_lines();
        }
        emit(cfg, out, body.str());
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        err << "budget refusal: " << e.what() << "; predicted " << e.predicted
            << ", budget " << e.budget << '\n';
        return kExitBudget;
    }
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    CountingContext counting(cfg.m);
    struct Row {
        std::uint32_t n;
        std::string l, d, a;
        double log10_a;
    };
    std::vector<Row> rows;
    for (std::uint32_t n = 1; n <= *cfg.n; ++n) {
        Row row;
        row.n = n;
        row.l = counting.length_l(n).to_decimal();
        row.d = counting.d_exponent(n).to_decimal();
        row.log10_a = n >= 3 ? counting.log_count_A(n) / std::log(10.0) : 0.0;
        if (counting.digits10_A_estimate(n) <= cfg.digit_threshold)
            row.a = counting.count_A_closed(n).to_decimal();
        rows.push_back(std::move(row));
    }
    std::ostringstream body;
    if (cfg.format == "json") {
        nlohmann::json j;
        j["m"] = cfg.m;
        j["rows"] = nlohmann::json::array();
        for (const Row& r : rows) {
            nlohmann::json rj;
            rj["n"] = r.n;
            rj["l_n"] = r.l;
            rj["d_n"] = r.d;
            if (!r.a.empty()) rj["A_n"] = r.a;
            rj["log10_A_n"] = r.log10_a;
            j["rows"].push_back(std::move(rj));
        }
        body << j.dump(2) << '\n';
    } else {
        const char sep = cfg.format == "csv" ? ',' : '\t';
        body << "n" << sep << "l_n" << sep << "d_n" << sep << "A_n" << sep
             << "log10_A_n" << '\n';
        for (const Row& r : rows)
            body << r.n << sep << r.l << sep << r.d << sep << r.a << sep
                 << fmt_double(r.log10_a) << '\n';
    }
    emit(cfg, out, body.str());
    return kExitOk;
}

int cmd_factors(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        GenerationTable table(cfg.m, cfg.budget);
        FactorTable factors(table);
        nlohmann::json j;
        j["m"] = cfg.m;
        std::ostringstream text;
        if (cfg.t) {
            const WordSet any = factors.factor_set_any(*cfg.t);
            j["t"] = *cfg.t;
            j["count"] = any.size();
            if (cfg.dump) j["words"] = any.to_strings();
            text << "|F(A," << *cfg.t << ")| = " << any.size() << '\n';
            if (cfg.dump) text << any.to_lines();
        } else {
            const std::uint32_t n = *cfg.n;
            const WordSet& fn = factors.factor_set_F(n);
            const BigCount bound =
                BigCount::pow(4, static_cast<std::uint64_t>(cfg.m) * n) *
                table.counting().length_l(n) * table.counting().count_A_closed(n);
            j["n"] = n;
            j["l_n"] = table.counting().length_l_u32(n);
            j["count_F"] = fn.size();
            j["bound_4mn_ln_An"] = bound.to_decimal();
            j["relation_table"] = nlohmann::json::array();
            text << "F_" << n << ": " << fn.size() << " words of length "
                 << fn.uniform_length() << ", bound " << bound.to_decimal() << '\n';
            for (std::uint32_t k = 1; k <= cfg.k; ++k) {
                const StabilizationResult res = factors.stabilization_check(n, k);
                nlohmann::json rel;
                rel["k"] = k;
                rel["relation"] =
                    res.relation == StabilizationResult::Relation::equal
                        ? "equal"
                        : res.relation == StabilizationResult::Relation::left_proper_subset
                              ? "left_proper_subset"
                              : "incomparable";
                rel["lhs"] = res.lhs_size;
                rel["rhs"] = res.rhs_size;
                for (const Word& w : res.witnesses) rel["witnesses"].push_back(w.str());
                j["relation_table"].push_back(rel);
                text << "  F(A_" << n + k << ", l_" << n << ") vs F(A_" << n
                     << "^2, l_" << n << "): " << rel["relation"].get<std::string>()
                     << " (" << res.lhs_size << " vs " << res.rhs_size << ")\n";
            }
            if (cfg.dump) {
                j["words"] = fn.to_strings();
                text << fn.to_lines();
            }
        }
        emit(cfg, out, cfg.format == "json" ? j.dump(2) + "\n" : text.str());
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        err << "budget refusal: " << e.what() << "; predicted " << e.predicted
            << ", budget " << e.budget << '\n';
        return kExitBudget;
    }
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    // --p is accepted for interface uniformity; topological entropy does not
    // depend on the probability vector, and the report must not either.
    const std::uint32_t cap = cfg.n.value_or(200);
    EntropyReport report = entropy_estimate(cfg.m, cfg.tol, cap);
    GenerationTable table(cfg.m, cfg.budget);
    FactorTable factors(table);
    attach_factor_columns(report, factors, cfg.fmax);

    std::ostringstream body;
    constexpr double kLn2 = 0.6931471805599453094;
    if (cfg.format == "json") {
        nlohmann::json j;
        j["m"] = report.m;
        j["tol"] = report.tol;
        j["n_cap"] = report.n_cap;
        j["estimate"] = report.estimate;
        j["estimate_log2"] = report.estimate / kLn2;
        j["n_reached"] = report.n_reached;
        j["converged"] = report.converged;
        j["monotone"] = report.monotone;
        j["rows"] = nlohmann::json::array();
        for (const EntropyRow& r : report.rows) {
            nlohmann::json rj;
            rj["n"] = r.n;
            rj["l_n"] = r.l_n;
            rj["log_A"] = r.log_count_A;
            rj["h_A"] = r.h_A;
            rj["h_A_log2"] = r.h_A / kLn2;
            if (r.h_F) {
                rj["h_F"] = *r.h_F;
                rj["sandwich_gap"] = *r.h_F - r.h_A;
            }
            rj["gap_bound"] = r.gap_bound;
            j["rows"].push_back(std::move(rj));
        }
        body << j.dump(2) << '\n';
    } else {
        const char sep = cfg.format == "csv" ? ',' : '\t';
        body << "n" << sep << "l_n" << sep << "log_A" << sep << "h_A" << sep
             << "h_A_log2" << sep << "h_F" << sep << "gap_bound" << '\n';
        for (const EntropyRow& r : report.rows) {
            body << r.n << sep << r.l_n << sep << fmt_double(r.log_count_A) << sep
                 << fmt_double(r.h_A) << sep << fmt_double(r.h_A / kLn2) << sep
                 << (r.h_F ? fmt_double(*r.h_F) : std::string()) << sep
                 << fmt_double(r.gap_bound) << '\n';
        }
        if (cfg.format == "text") {
            body << "estimate " << fmt_double(report.estimate) << " (log2 "
                 << fmt_double(report.estimate / kLn2) << "), n_reached "
                 << report.n_reached << ", converged "
                 << (report.converged ? "yes" : "no") << ", monotone "
                 << (report.monotone ? "yes" : "no") << '\n';
        }
    }
    emit(cfg, out, body.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    SuiteConfig config = default_config();
    config.budget = cfg.budget;
    config.seed = cfg.seed;
    config.trials = cfg.trials.value_or(10000);
    const SuiteReport report = run_suite(config);
    emit(cfg, out,
         cfg.format == "json" ? to_json(report, cfg.timings) : to_table(report));
    return report.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const Params params = params_from(cfg);
    const std::uint32_t trials = cfg.trials.value_or(1);
    std::ostringstream body;
    nlohmann::json samples = nlohmann::json::array();
    for (std::uint32_t i = 0; i < trials; ++i) {
        const ChainSample sample = sample_chain(params, *cfg.n, cfg.seed + i);
        if (cfg.format == "json") {
            nlohmann::json sj;
            sj["seed"] = sample.seed;
            sj["word"] = sample.word.str();
            sj["choices"] = sample.choices;
            samples.push_back(std::move(sj));
        } else if (cfg.format == "csv") {
            std::string log;
            for (std::uint32_t c : sample.choices) {
                if (!log.empty()) log += ' ';
                log += std::to_string(c);
            }
            body << sample.word.str() << ',' << log << '\n';
        } else {
            body << sample.word.str() << '\n';
        }
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["m"] = params.m;
        j["p"] = params.p;
        j["n"] = *cfg.n;
        j["samples"] = std::move(samples);
        body << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        body.str("word,choices\n" + body.str());
    }
    emit(cfg, out, body.str());
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    // The config file provides defaults; explicit flags override them.
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            try {
                apply_config_file(cfg, args[i + 1]);
            } catch (const std::exception& e) {
                err << "config error: " << e.what() << '\n';
                return kExitUsage;
            }
        }
    }

    CLI::App app{"generalised random Fibonacci substitution toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (defaults, flags win)");

    auto add_common = [&](CLI::App* sub, bool with_budget = true) {
        sub->add_option("--m", cfg.m, "family parameter m >= 1")
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "output format: text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write the report to this file");
        sub->add_option("--config", config_path, "JSON config file");
        if (with_budget)
            sub->add_option("--budget", cfg.budget, "enumeration budget in words")
                ->capture_default_str();
    };

    std::uint32_t n_flag = 0;
    std::uint32_t t_flag = 0;
    std::uint32_t trials_flag = 0;

    CLI::App* enumerate = app.add_subcommand("enumerate", "dump the inflated set A_n");
    add_common(enumerate);
    auto* enum_n = enumerate->add_option("--n", n_flag, "generation to enumerate");
    if (!cfg.n) enum_n->required();

    CLI::App* count = app.add_subcommand("count", "exact counting table up to n");
    add_common(count, false);
    auto* count_n = count->add_option("--n", n_flag, "largest generation to tabulate");
    if (!cfg.n) count_n->required();
    count->add_option("--digits", cfg.digit_threshold,
                      "print |A_n| exactly up to this many decimal digits")
        ->capture_default_str();

    CLI::App* factors = app.add_subcommand("factors", "factor sets F_n and F(A,t)");
    add_common(factors);
    auto* factors_n = factors->add_option("--n", n_flag, "generation for F_n");
    auto* factors_t =
        factors->add_option("--t", t_flag, "factor length for F(A,t) instead of F_n");
    factors->add_option("--k", cfg.k, "stabilization depths to report (1..k)")
        ->capture_default_str();
    factors->add_flag("--dump", cfg.dump, "list the words, not just the counts");

    CLI::App* entropy = app.add_subcommand("entropy", "entropy report and estimate");
    add_common(entropy);
    entropy->add_option("--tol", cfg.tol, "convergence tolerance")->capture_default_str();
    entropy->add_option("--n", n_flag, "generation cap for the estimate");
    entropy->add_option("--fmax", cfg.fmax, "compute h_F up to this generation")
        ->capture_default_str();
    entropy->add_option("--p", cfg.p,
                        "probability vector (accepted for uniformity; the "
                        "estimate never depends on it)");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
    verify->add_option("--trials", trials_flag, "sampler trials per point");
    verify->add_flag("--timings", cfg.timings, "include wall-clock timings in JSON");

    CLI::App* sample = app.add_subcommand("sample", "draw chain realizations r_n");
    add_common(sample, false);
    auto* sample_n = sample->add_option("--n", n_flag, "target generation");
    if (!cfg.n) sample_n->required();
    sample->add_option("--p", cfg.p, "comma-separated probabilities p_0..p_m");
    sample->add_option("--seed", cfg.seed, "base seed; trial i uses seed+i")
        ->capture_default_str();
    sample->add_option("--trials", trials_flag, "number of samples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (enum_n->count() || count_n->count() || factors_n->count() ||
        entropy->get_option("--n")->count() || sample_n->count())
        cfg.n = n_flag;
    if (factors_t->count()) cfg.t = t_flag;
    if (verify->get_option("--trials")->count() || sample->get_option("--trials")->count())
        cfg.trials = trials_flag;

    try {
        if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
        if (count->parsed()) return cmd_count(cfg, out, err);
        if (factors->parsed()) {
            if (!cfg.t && !cfg.n) {
                err << "factors needs --n or --t\n";
                return kExitUsage;
            }
            return cmd_factors(cfg, out, err);
        }
        if (entropy->parsed()) return cmd_entropy(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (sample->parsed()) return cmd_sample(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace randfib
