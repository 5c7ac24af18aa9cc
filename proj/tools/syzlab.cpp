#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syzlab/error.hpp"
#include "syzlab/workbench/runner.hpp"

namespace fs = std::filesystem;
using namespace syzlab;
using namespace syzlab::workbench;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"syzlab: invariant rings, Koszul syzygies and their degree bounds"};
    app.require_subcommand(1);

    std::string input;
    std::optional<int> p, p_max;
    std::string mode, format = "json", cache_dir, budget = "default";
    int jobs = 1;
    bool no_cache = false;

    for (const auto& task : known_tasks()) {
        auto* sub = app.add_subcommand(task, "run the " + task + " task");
        sub->add_option("--input", input, "problem document (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--p", p, "homological degree p (first p for bounds)")->check(CLI::Range(1, 64));
        sub->add_option("--p-max", p_max, "largest p")->check(CLI::Range(0, 64));
        sub->add_option("--mode", mode, "generating space E")->check(CLI::IsMember({"minimal", "full"}));
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "markdown"}));
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--cache-dir", cache_dir, "cache directory (default: $SYZLAB_CACHE_DIR or ~/.cache/syzlab)");
        sub->add_flag("--no-cache", no_cache, "do not read or write the cache");
        sub->add_option("--budget-level", budget, "size budget")->check(CLI::IsMember({"small", "default", "large"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunSettings settings;
        settings.task = app.get_subcommands().front()->get_name();
        settings.p = p;
        settings.p_max = p_max;
        if (!mode.empty()) settings.mode = parse_generator_mode(mode);
        settings.jobs = jobs;
        settings.budget_level = budget;
        settings.use_cache = !no_cache;
        if (!cache_dir.empty()) settings.cache_dir = fs::path(cache_dir);

        const Problem problem = parse_problem(read_file(input));
        const Report report = run(problem, settings);
        std::cout << emit_report(report, parse_format(format));
        if (!report.findings.empty()) {
            const fs::path out = fs::absolute(input).parent_path() / "findings.json";
            std::ofstream f(out, std::ios::binary | std::ios::trunc);
            f << json{{"problem_hash", report.header.at("problem_hash")}, {"findings", report.findings}}.dump(2) << "\n";
            std::cerr << "FINDING: conjecture verdict VIOLATED, details in " << out.string() << "\n";
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "syzlab: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "syzlab: error: " << e.what() << "\n";
        return 3;
    }
}
