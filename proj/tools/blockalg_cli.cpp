#include "blockalg/job.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"blockalg: exact checks for Block type Lie algebras and their modules"};
    std::string config_path;
    std::string format = "machine";
    std::string out_path;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    app.add_option("--config", config_path, "job config (JSON)")->required();
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--seed", seed, "seed for randomized jobs (overrides the config)");
    app.add_option("--threads", threads, "worker threads for grid checks")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const blockalg::JobConfig config = blockalg::load_config(config_path);
        const blockalg::Report report = blockalg::run_job(config, {threads, seed});
        const std::string text = blockalg::emit_report(
            report, format == "text" ? blockalg::ReportFormat::text : blockalg::ReportFormat::machine);

        const std::string target = !out_path.empty() ? out_path : config.output.value_or("");
        if (target.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(target, std::ios::binary);
            if (!out || !(out << text)) {
                std::cerr << "error: cannot write report to '" << target << "'\n";
                return 2;
            }
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << blockalg::to_string(config.kind) << ": " << (report.positive ? "positive" : "negative") << " in "
                  << elapsed.count() << " s\n";
        return report.exit_status();
    } catch (const blockalg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
