#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "krall_hahn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

unsigned worker_count(std::size_t jobs) {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KH_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

void print_summary(const kh::VerificationReport& rep, const std::string& label) {
    std::cout << label << ": path=" << rep.path << " m=" << rep.m << " n_max=" << rep.n_max;
    if (rep.r) std::cout << " r=" << *rep.r;
    if (rep.genre) std::cout << " genre=(" << rep.genre->s << "," << rep.genre->r << ")";
    std::cout << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "  [" << kh::status_name(c.status) << "] " << c.name;
        if (!c.passed()) std::cout << "  " << c.witness.dump();
        std::cout << "\n";
    }
}

struct RunOutcome {
    std::optional<kh::VerificationReport> report;
    std::string error;  // set when the configuration was rejected
};

std::vector<RunOutcome> run_all(const std::vector<kh::ConstructionConfig>& cfgs) {
    std::vector<RunOutcome> out(cfgs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cfgs.size(); i = next++) {
            try {
                out[i].report = kh::run_config(cfgs[i]);
            } catch (const kh::ContextInvalid& e) {
                out[i].error = std::string("invalid configuration: ") + e.what();
            } catch (const kh::Error& e) {
                out[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = worker_count(cfgs.size());
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

int report_outcomes(const std::vector<kh::ConstructionConfig>& cfgs, const std::vector<RunOutcome>& outcomes,
                    const std::string& report_path, bool array_input, bool timing) {
    int code = kExitOk;
    kh::json reports = kh::json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const std::string label = cfgs[i].name.empty() ? "config " + std::to_string(i) : cfgs[i].name;
        if (!outcomes[i].report) {
            std::cerr << label << ": " << outcomes[i].error << "\n";
            reports.push_back({{"config", kh::config_to_json(cfgs[i])}, {"error", outcomes[i].error}});
            code = kExitConfigError;
            continue;
        }
        const auto& rep = *outcomes[i].report;
        print_summary(rep, label);
        reports.push_back(kh::to_json(rep, timing));
        if (!rep.passed() && code == kExitOk) code = kExitCheckFailed;
    }
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        if (!os) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return kExitConfigError;
        }
        os << (array_input ? reports : reports.at(0)).dump(2) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Krall-Hahn orthogonal polynomial constructions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string report_path;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "Run the construction and checks for a configuration file");
    verify->add_option("--config", config_path, "JSON configuration (object or array of objects)")->required();
    verify->add_option("--report", report_path, "Write the JSON report here");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed-time fields from the report");

    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "Run a built-in configuration");
    demo->add_option("--name", demo_name, "Built-in configuration")
        ->required()
        ->check(CLI::IsMember(kh::builtin_names()));
    demo->add_option("--report", report_path, "Write the JSON report here");
    demo->add_flag("--no-timing", no_timing, "Omit elapsed-time fields from the report");

    int couple_N = 0;
    std::vector<int> roots;
    std::string a_text = "1/2";
    std::string b_text = "1/3";
    auto* couples = app.add_subcommand("enumerate-couples", "List the (F3, F4) couples giving prod(x - root) times the Hahn weight");
    couples->add_option("--N", couple_N, "Hahn parameter N")->required();
    couples->add_option("--roots", roots, "Comma separated roots")->required()->delimiter(',');
    couples->add_option("--a", a_text, "Hahn parameter a");
    couples->add_option("--b", b_text, "Hahn parameter b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfigError;
    }

    if (*couples) {
        try {
            const auto list = kh::enumerate_couples(couple_N, roots, kh::Rational::parse(a_text), kh::Rational::parse(b_text));
            int minimal_r = -1;
            for (const auto& c : list) minimal_r = minimal_r < 0 ? c.r : std::min(minimal_r, c.r);
            for (const auto& c : list) {
                std::cout << "F3=" << kh::set_str(c.F3) << " F4=" << kh::set_str(c.F4) << " sign=" << (c.sign > 0 ? "+" : "-")
                          << " r=" << c.r;
                if (c.below_half) std::cout << " below-half";
                if (c.r == minimal_r) std::cout << " minimal";
                std::cout << "\n";
            }
            std::cout << list.size() << " couples\n";
            return kExitOk;
        } catch (const kh::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfigError;
        }
    }

    std::vector<kh::ConstructionConfig> cfgs;
    bool array_input = false;
    if (*demo) {
        cfgs.push_back(*kh::builtin_config(demo_name));
    } else {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "cannot read " << config_path << "\n";
            return kExitConfigError;
        }
        try {
            const kh::json j = kh::json::parse(is);
            array_input = j.is_array();
            if (array_input) {
                for (const auto& item : j) cfgs.push_back(kh::parse_config(item));
            } else {
                cfgs.push_back(kh::parse_config(j));
            }
        } catch (const kh::json::exception& e) {
            std::cerr << "config parse error: " << e.what() << "\n";
            return kExitConfigError;
        } catch (const kh::Error& e) {
            std::cerr << "config parse error: " << e.what() << "\n";
            return kExitConfigError;
        }
        if (cfgs.empty()) {
            std::cerr << "config array is empty\n";
            return kExitConfigError;
        }
    }
    return report_outcomes(cfgs, run_all(cfgs), report_path, array_input, !no_timing);
}
