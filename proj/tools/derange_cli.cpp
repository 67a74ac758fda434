// Command-line driver: runs the verification checks for chosen prime powers
// and writes a deterministic JSON or markdown report.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "derange/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

const std::set<std::string> kKnownChecks = {"spectrum", "matrices", "ekr", "psl", "frobenius"};

struct Config {
    std::vector<std::string> checks;
    std::vector<int> qs;  // empty: per-check defaults
    std::string format = "json";
    std::string out_path;
    derange::VerifyOptions verify;
};

nlohmann::ordered_json result_json(const derange::CheckResult& r) {
    return {{"check", r.check}, {"q", r.q},           {"claim", r.claim},
            {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}};
}

std::string render_markdown(const nlohmann::ordered_json& report) {
    std::ostringstream os;
    os << "# derange verification report\n\n";
    os << "version: " << report["version"].get<std::string>() << "\n\n";
    os << "| check | q | pass | expected | observed |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& r : report["results"]) {
        os << "| " << r["check"].get<std::string>() << " | " << r["q"] << " | "
           << (r["pass"].get<bool>() ? "pass" : "FAIL") << " | " << r["expected"].get<std::string>()
           << " | " << r["observed"].get<std::string>() << " |\n";
    }
    const auto& s = report["summary"];
    os << "\n" << s["passed"] << "/" << s["total"] << " checks passed\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derange: exact verification toolkit for derangement graphs of PGL(2,q)"};
    app.get_formatter()->column_width(34);

    Config cfg;
    std::vector<std::string> positional, flag_checks;
    std::vector<int> qs;
    bool no_cache = false;
    double tolerance = 1e-6;
    int threads = 1;
    long long max_group_order = derange::PglGroup::kDefaultMaxOrder;

    app.add_option("CHECKS", positional, "checks to run: spectrum ekr psl frobenius matrices all");
    app.add_option("--checks", flag_checks, "same as the positional list")->delimiter(',');
    app.add_option("--q", qs, "prime powers to verify (default: per-check sweep)")->delimiter(',');
    app.add_option("--format", cfg.format, "report format: json or md")
        ->check(CLI::IsMember({"json", "md"}));
    app.add_option("--out", cfg.out_path, "write the report to this path instead of stdout");
    app.add_option("--threads", threads, "parallelism budget for matrix and graph builds")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-group-order", max_group_order, "refuse groups larger than this");
    app.add_flag("--no-cache", no_cache, "ignore EKR_CACHE_DIR");
    app.add_option("--tolerance", tolerance, "numeric eigen-check tolerance (exact checks unaffected)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (const auto& c : positional) flag_checks.push_back(c);
    if (flag_checks.empty()) flag_checks.push_back("all");
    for (const auto& c : flag_checks) {
        if (c == "all") {
            cfg.checks = {"spectrum", "matrices", "ekr", "psl", "frobenius"};
            break;
        }
        if (!kKnownChecks.count(c)) {
            std::cerr << "error: unknown check '" << c << "'\n";
            return 2;
        }
        cfg.checks.push_back(c);
    }
    if (tolerance <= 0) {
        std::cerr << "error: tolerance must be positive\n";
        return 2;
    }
    for (int q : qs) {
        if (!derange::prime_power(q)) {
            std::cerr << "error: q = " << q << " is not a prime power\n";
            return 2;
        }
    }
    cfg.qs = qs;
    cfg.verify.threads = threads;
    cfg.verify.eigen_tol = tolerance;
    cfg.verify.max_group_order = max_group_order;
    cfg.verify.use_cache = !no_cache;
    if (const char* dir = std::getenv("EKR_CACHE_DIR")) cfg.verify.cache_dir = dir;

    nlohmann::ordered_json report;
    report["version"] = kVersion;
    // threads are an execution detail: reports must be byte-identical across
    // thread counts, so the knob stays out of the config echo
    report["config"] = {{"checks", cfg.checks},
                        {"q", cfg.qs},
                        {"format", cfg.format},
                        {"max_group_order", max_group_order},
                        {"tolerance", tolerance},
                        {"cache", cfg.verify.use_cache && !cfg.verify.cache_dir.empty()}};
    report["results"] = nlohmann::ordered_json::array();

    int total = 0, passed = 0;
    try {
        for (const auto& check : cfg.checks) {
            std::vector<int> run_qs = cfg.qs.empty() ? derange::default_qs(check) : cfg.qs;
            for (int q : run_qs) {
                std::vector<derange::CheckResult> results;
                if (check == "spectrum")
                    results = derange::check_spectrum(q, cfg.verify);
                else if (check == "matrices")
                    results = derange::check_matrices(q, cfg.verify);
                else if (check == "ekr")
                    results = derange::check_ekr(q, cfg.verify);
                else if (check == "psl")
                    results = derange::check_psl(q, cfg.verify);
                else if (check == "frobenius")
                    results = derange::check_frobenius(q, cfg.verify);
                for (const auto& r : results) {
                    report["results"].push_back(result_json(r));
                    ++total;
                    passed += r.pass ? 1 : 0;
                    std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << r.check << " q=" << r.q << " ("
                              << r.seconds << "s)\n";
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    report["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}};

    std::string payload =
        cfg.format == "json" ? report.dump(2) + "\n" : render_markdown(report);
    if (cfg.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(cfg.out_path, std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        out << payload;
    }
    return passed == total ? 0 : 1;
}
