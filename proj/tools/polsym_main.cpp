// Command-line front end: `verify` runs one of the experiment suites and
// writes a deterministic JSON report; `dump` prints any named multiplier.
// Exit codes: 0 pass, 1 hard assertion failure, 2 configuration error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polsym/harness.hpp"
#include "polsym/version.hpp"

namespace {

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double p = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return p;
    } catch (const std::exception&) {
        throw polsym::ConfigError("cannot parse norm parameter '" + s + "'");
    }
}

int run_verify(polsym::ExperimentConfig cfg, const std::vector<std::string>& p_strs) {
    for (const std::string& s : p_strs) cfg.p_list.push_back(parse_p(s));

    const auto start = std::chrono::steady_clock::now();
    const polsym::ExperimentReport report = polsym::run_suite(cfg);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);

    if (cfg.output_path.empty()) {
        std::cout << report.to_string();
    } else {
        std::cout << cfg.suite << ": " << report.doc["summary"]["records"] << " records, "
                  << report.hard_failures << " hard failures, " << report.warnings
                  << " warnings -> " << cfg.output_path << "\n";
    }
    std::cerr << "[" << cfg.suite << "] wall clock " << elapsed.count() << " ms\n";
    return report.passed() ? 0 : 1;
}

int run_dump(const std::string& name, int n, int m, int k, int u, int v,
             const std::string& out_path) {
    using polsym::Json;
    polsym::SchurMultiplier A = [&]() -> polsym::SchurMultiplier {
        if (name == "ones") return polsym::ones_multiplier(n, m);
        if (name == "diag") return polsym::diag_multiplier(u, v, n, m);
        if (name == "triangle") return polsym::triangle_multiplier(u, v, n, m);
        if (name == "step") return polsym::sym_step_multiplier(k, n, m);
        if (name == "step-factored") return polsym::sym_step_multiplier_factored(k, n, m);
        if (name == "multiplicity") return polsym::tail_multiplicity_indicator(k, u, n, m);
        if (name == "triangle-projection") return polsym::triangle_projection_matrix(n);
        if (name == "identity") return polsym::identity_matrix(n);
        throw polsym::ConfigError("unknown multiplier '" + name + "'");
    }();

    const std::string text = polsym::to_json(A).dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        polsym::write_text_file(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(polsym::kToolName) +
                 " - numerical checks for symmetrization and Schur multiplier norm bounds"};
    app.set_version_flag("--version",
                         std::string(polsym::kToolName) + " " + polsym::kToolVersion);
    app.require_subcommand(1);

    polsym::ExperimentConfig cfg;
    std::vector<std::string> p_strs;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "identities|theorem2|theorem1|polarization|triangle")
        ->required();
    verify->add_option("--n-min", cfg.n_min, "smallest dimension n");
    verify->add_option("--n-max", cfg.n_max, "largest dimension n");
    verify->add_option("--m-min", cfg.m_min, "smallest degree m");
    verify->add_option("--m-max", cfg.m_max, "largest degree m");
    verify->add_option("--k", cfg.k_list, "restrict the symmetrization steps k");
    verify->add_option("--p", p_strs, "norm parameters (numbers or 'inf')");
    verify->add_option("--seed", cfg.seed, "master seed (mandatory)")->required();
    verify->add_option("--instances", cfg.instances, "random polynomials per shape");
    verify->add_option("--trials", cfg.trials, "sampled forms per mu estimate");
    verify->add_option("--budget-entries", cfg.budget_entries, "dense tensor entry cap");
    verify->add_option("--grid", cfg.grid, "phase grid resolution for brackets");
    verify->add_option("--refine-passes", cfg.refine_passes, "bracket refinement sweeps");
    verify->add_option("--restarts", cfg.restarts, "ascent restarts per norm estimate");
    verify->add_option("--max-iters", cfg.max_iters, "ascent sweep cap per restart");
    verify->add_option("--out", cfg.output_path, "write the JSON report here");
    verify->add_option("--csv", cfg.csv_path, "also write flattened records as CSV");
    verify->add_option("--poly", cfg.poly_path, "verify one polynomial from a JSON file");

    std::string dump_name;
    std::string dump_out;
    int dn = 2, dm = 2, dk = 2, du = 1, dv = 2;
    CLI::App* dump = app.add_subcommand("dump", "print a named multiplier as JSON");
    dump->add_option("name", dump_name,
                     "ones|diag|triangle|step|step-factored|multiplicity|"
                     "triangle-projection|identity")
        ->required();
    dump->add_option("-n", dn, "dimension");
    dump->add_option("-m", dm, "arity");
    dump->add_option("-k", dk, "step / tail slot");
    dump->add_option("-u", du, "first slot or multiplicity");
    dump->add_option("-v", dv, "second slot");
    dump->add_option("--out", dump_out, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            cfg.seed_set = true;
            return run_verify(std::move(cfg), p_strs);
        }
        return run_dump(dump_name, dn, dm, dk, du, dv, dump_out);
    } catch (const polsym::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const polsym::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
