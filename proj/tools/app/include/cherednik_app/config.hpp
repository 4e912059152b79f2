#pragma once

#include "cherednik/catalog.hpp"
#include "cherednik/graded_module.hpp"
#include "json.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cherednik::app {

inline constexpr int kConfigSchema = 1;
inline constexpr int kReportSchema = 1;

/// Anything wrong with a job description (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModuleSpec {
    std::string kind = "standard";  // standard | simple | baby-verma | ltriv
    std::string sigma = "triv";
};

struct Caps {
    int pbw_degree = 4;
    std::size_t group_order = 48;
};

struct JobConfig {
    GroupSpec group;
    std::string t = "1";
    /// Reflection class label ("s1", "s2", ...) -> scalar; "*" sets every class.
    std::map<std::string, std::string> c{{"*", "1/5"}};
    std::vector<std::string> c_grid;  // cells task: several values of a uniform c
    std::string task = "group-info";
    ModuleSpec module;
    int degree_bound = -1;  // -1: per-rank default
    std::optional<std::pair<long, long>> r_window;
    std::string output = "text";
    std::size_t threads = 1;
    Caps caps;
    std::optional<std::string> cache_dir;

    static JobConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    /// Checks task names, output mode, caps and task-specific fields.
    void validate() const;
};

/// Parses scalars such as "3/2" or "z3^2/2"; ConfigError on failure.
Cyc parse_scalar(const std::string& text, const std::string& field);

/// Label of reflection class k: "s1", "s2", ... in the group's class order.
std::string reflection_class_label(std::size_t k);

/// (t, c) for the group; every class must receive a value.
Params resolve_params(const JobConfig& cfg, const Catalog& cat);
Params resolve_params(const JobConfig& cfg, const Catalog& cat, const Cyc& t);

Catalog load(const JobConfig& cfg);

/// Window in polynomial degree used when degree_bound is not set.
std::size_t default_window(std::size_t rank);

const std::vector<std::string>& task_names();

}  // namespace cherednik::app
