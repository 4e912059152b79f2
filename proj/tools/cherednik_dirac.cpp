#include "CLI11.hpp"
#include "cherednik_app/runner.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace cherednik;
using namespace cherednik::app;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Dirac and Koszul cohomology for rational Cherednik algebras"};
    cli.require_subcommand(0, 1);

    std::string config_path, group, t, c, task, module_kind, sigma, output, cache_dir, r_window;
    std::vector<std::string> c_grid;
    int degree_bound = -1, pbw_degree = -1;
    std::size_t threads = 0, group_order = 0;

    auto add_overrides = [&](CLI::App* app) {
        app->add_option("--group", group, "cyclic:m, dihedral:m or symmetric:n");
        app->add_option("--t", t, "parameter t, e.g. 1 or 0");
        app->add_option("--c", c, "uniform c, or label=value pairs separated by commas (s1=1/5,s2=1/3)");
        app->add_option("--c-grid", c_grid, "values of c for the cells task")->delimiter(',');
        app->add_option("--task", task, "group-info, cohomology, dirac, hodge, vogan, cells, verify-all");
        app->add_option("--module", module_kind, "standard, simple, baby-verma or ltriv");
        app->add_option("--sigma", sigma, "irrep label of the module");
        app->add_option("--degree-bound", degree_bound, "polynomial window or filtration degree");
        app->add_option("--r-window", r_window, "lo,hi or auto");
        app->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
        app->add_option("--threads", threads, "worker threads");
        app->add_option("--pbw-degree-cap", pbw_degree, "cap on the PBW filtration degree");
        app->add_option("--group-order-cap", group_order, "cap on the group order");
        app->add_option("--cache-dir", cache_dir, "directory for cached group catalogs");
    };
    add_overrides(&cli);
    CLI::App* run = cli.add_subcommand("run", "run a job described by a JSON config");
    run->add_option("--config", config_path, "job config (JSON)")->required();
    add_overrides(run);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    JobConfig cfg;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read " + config_path);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            cfg = JobConfig::from_json(j);
        } else if (group.empty()) {
            throw ConfigError("either run --config FILE or --group is required");
        }
        if (!group.empty()) {
            try {
                cfg.group = GroupSpec::parse(group);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        if (!t.empty()) cfg.t = t;
        if (!c.empty()) {
            cfg.c.clear();
            if (c.find('=') == std::string::npos) {
                cfg.c["*"] = c;
            } else {
                std::size_t pos = 0;
                while (pos <= c.size()) {
                    const std::size_t comma = std::min(c.find(',', pos), c.size());
                    const std::string item = c.substr(pos, comma - pos);
                    const std::size_t eq = item.find('=');
                    if (eq == std::string::npos) throw ConfigError("--c: expected label=value, got '" + item + "'");
                    cfg.c[item.substr(0, eq)] = item.substr(eq + 1);
                    pos = comma + 1;
                }
            }
        }
        if (!c_grid.empty()) cfg.c_grid = c_grid;
        if (!task.empty()) cfg.task = task;
        if (!module_kind.empty()) cfg.module.kind = module_kind;
        if (!sigma.empty()) cfg.module.sigma = sigma;
        if (degree_bound >= 0) cfg.degree_bound = degree_bound;
        if (!r_window.empty()) {
            if (r_window == "auto") {
                cfg.r_window.reset();
            } else {
                const auto comma = r_window.find(',');
                if (comma == std::string::npos) throw ConfigError("--r-window: expected lo,hi or auto");
                try {
                    cfg.r_window = std::make_pair(std::stol(r_window.substr(0, comma)),
                                                  std::stol(r_window.substr(comma + 1)));
                } catch (const std::exception&) {
                    throw ConfigError("--r-window: expected integers");
                }
            }
        }
        if (!output.empty()) cfg.output = output;
        if (threads > 0) cfg.threads = threads;
        if (pbw_degree >= 0) cfg.caps.pbw_degree = pbw_degree;
        if (group_order > 0) cfg.caps.group_order = group_order;
        if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
        cfg.validate();

        const RunOutput out = run_task(cfg);
        const nlohmann::json report = final_report(cfg, out);
        if (cfg.output == "json") {
            std::cout << report.dump(2) << '\n';
        } else {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::cout << render_text(report) << "elapsed: " << secs << " s\n";
        }
        const int code = exit_code(out);
        if (code != kExitOk) std::cerr << "a check FAILED; see the verdicts above\n";
        return code;
    } catch (const ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kExitCap;
    }
}
