#include "cherednik_app/config.hpp"

#include <algorithm>

namespace cherednik::app {

using nlohmann::json;

const std::vector<std::string>& task_names() {
    static const std::vector<std::string> names{"group-info", "cohomology", "dirac", "hodge",
                                                "vogan",      "cells",      "verify-all"};
    return names;
}

Cyc parse_scalar(const std::string& text, const std::string& field) {
    try {
        return Cyc::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(field + ": " + e.what());
    }
}

std::string reflection_class_label(std::size_t k) { return "s" + std::to_string(k + 1); }

std::size_t default_window(std::size_t rank) { return rank <= 1 ? 6 : rank == 2 ? 4 : 3; }

namespace {

GroupSpec group_from_json(const json& j) {
    if (j.is_string()) {
        try {
            return GroupSpec::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("group: ") + e.what());
        }
    }
    if (!j.is_object() || !j.contains("type")) throw ConfigError("group: expected \"cyclic:2\" or {type, m}");
    GroupSpec g;
    g.type = j.at("type").get<std::string>();
    if (g.type == "matrix") {
        if (!j.contains("generators")) throw ConfigError("group: matrix groups need generators");
        for (const auto& mat : j.at("generators")) {
            std::vector<Vector> rows;
            std::size_t cols = 0;
            for (const auto& row : mat) {
                Vector r;
                for (const auto& e : row) r.push_back(parse_scalar(e.get<std::string>(), "group.generators"));
                cols = r.size();
                rows.push_back(std::move(r));
            }
            if (rows.size() != cols) throw ConfigError("group: generators must be square");
            g.generators.push_back(Matrix::from_rows(rows, cols));
        }
        if (g.generators.empty()) throw ConfigError("group: matrix groups need generators");
        return g;
    }
    if (g.type != "cyclic" && g.type != "dihedral" && g.type != "symmetric")
        throw ConfigError("group: unknown type '" + g.type + "'");
    if (j.contains("m"))
        g.m = j.at("m").get<int>();
    else if (j.contains("n"))
        g.m = j.at("n").get<int>();
    else
        throw ConfigError("group: missing m");
    return g;
}

json group_to_json(const GroupSpec& g) {
    json j{{"type", g.type}};
    if (g.type != "matrix") {
        j["m"] = g.m;
        return j;
    }
    json gens = json::array();
    for (const auto& m : g.generators) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    j["generators"] = gens;
    return j;
}

template <class T>
T field(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string(key) + ": " + e.what());
    }
}

}  // namespace

JobConfig JobConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kConfigSchema)
        throw ConfigError("unsupported config schema " + j.at("schema").dump());
    JobConfig cfg;
    if (!j.contains("group")) throw ConfigError("group is required");
    try {
        cfg.group = group_from_json(j.at("group"));
        cfg.t = field<std::string>(j, "t", cfg.t);
        if (j.contains("c")) {
            const json& c = j.at("c");
            cfg.c.clear();
            if (c.is_string())
                cfg.c["*"] = c.get<std::string>();
            else if (c.is_object())
                for (const auto& [k, v] : c.items()) cfg.c[k] = v.get<std::string>();
            else
                throw ConfigError("c: expected a string or an object");
        }
        cfg.c_grid = field<std::vector<std::string>>(j, "c_grid", {});
        cfg.task = field<std::string>(j, "task", cfg.task);
        if (j.contains("module")) {
            const json& m = j.at("module");
            cfg.module.kind = field<std::string>(m, "kind", cfg.module.kind);
            cfg.module.sigma = field<std::string>(m, "sigma", cfg.module.sigma);
        }
        cfg.degree_bound = field<int>(j, "degree_bound", cfg.degree_bound);
        if (j.contains("r_window")) {
            const json& r = j.at("r_window");
            if (r.is_string()) {
                if (r.get<std::string>() != "auto") throw ConfigError("r_window: expected \"auto\" or [lo, hi]");
            } else if (r.is_array() && r.size() == 2) {
                cfg.r_window = std::make_pair(r[0].get<long>(), r[1].get<long>());
            } else {
                throw ConfigError("r_window: expected \"auto\" or [lo, hi]");
            }
        }
        cfg.output = field<std::string>(j, "output", cfg.output);
        cfg.threads = field<std::size_t>(j, "threads", cfg.threads);
        if (j.contains("caps")) {
            cfg.caps.pbw_degree = field<int>(j.at("caps"), "pbw_degree", cfg.caps.pbw_degree);
            cfg.caps.group_order = field<std::size_t>(j.at("caps"), "group_order", cfg.caps.group_order);
        }
        if (j.contains("cache_dir")) cfg.cache_dir = j.at("cache_dir").get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(e.what());
    }
    cfg.validate();
    return cfg;
}

json JobConfig::to_json() const {
    json j{{"schema", kConfigSchema}, {"group", group_to_json(group)},
           {"t", t},
           {"c", c},
           {"task", task},
           {"module", {{"kind", module.kind}, {"sigma", module.sigma}}},
           {"degree_bound", degree_bound},
           {"output", output},
           {"threads", threads},
           {"caps", {{"pbw_degree", caps.pbw_degree}, {"group_order", caps.group_order}}}};
    if (!c_grid.empty()) j["c_grid"] = c_grid;
    if (r_window)
        j["r_window"] = {r_window->first, r_window->second};
    else
        j["r_window"] = "auto";
    return j;
}

void JobConfig::validate() const {
    const auto& names = task_names();
    if (std::find(names.begin(), names.end(), task) == names.end()) throw ConfigError("unknown task '" + task + "'");
    if (output != "text" && output != "json") throw ConfigError("output must be text or json");
    if (threads == 0) throw ConfigError("threads must be positive");
    if (caps.pbw_degree < 0 || caps.group_order == 0) throw ConfigError("caps must be positive");
    static const std::vector<std::string> kinds{"standard", "simple", "baby-verma", "ltriv"};
    if (std::find(kinds.begin(), kinds.end(), module.kind) == kinds.end())
        throw ConfigError("module.kind must be one of standard, simple, baby-verma, ltriv");
    if (r_window && r_window->first > r_window->second) throw ConfigError("r_window: lo > hi");
    if (c.empty()) throw ConfigError("c: no values");
    parse_scalar(t, "t");
    for (const auto& [k, v] : c) parse_scalar(v, "c." + k);
    for (const auto& v : c_grid) parse_scalar(v, "c_grid");
    if (task == "vogan" && degree_bound < 0 && caps.pbw_degree < 0) throw ConfigError("vogan needs degree_bound");
}

Params resolve_params(const JobConfig& cfg, const Catalog& cat) {
    return resolve_params(cfg, cat, parse_scalar(cfg.t, "t"));
}

Params resolve_params(const JobConfig& cfg, const Catalog& cat, const Cyc& t) {
    const std::size_t classes = cat.g().reflection_classes().size();
    Params p;
    p.t = t;
    p.c.assign(classes, Cyc());
    std::vector<bool> set(classes, false);
    if (auto it = cfg.c.find("*"); it != cfg.c.end()) {
        p.c.assign(classes, parse_scalar(it->second, "c.*"));
        set.assign(classes, true);
    }
    for (const auto& [label, value] : cfg.c) {
        if (label == "*") continue;
        std::optional<std::size_t> k;
        for (std::size_t i = 0; i < classes; ++i)
            if (reflection_class_label(i) == label) k = i;
        if (!k) throw ConfigError("c: unknown reflection class label '" + label + "'");
        p.c[*k] = parse_scalar(value, "c." + label);
        set[*k] = true;
    }
    for (std::size_t i = 0; i < classes; ++i)
        if (!set[i]) throw ConfigError("c: no value for reflection class " + reflection_class_label(i));
    return p;
}

Catalog load(const JobConfig& cfg) {
    std::optional<std::filesystem::path> dir;
    if (cfg.cache_dir) dir = *cfg.cache_dir;
    try {
        return load_catalog(cfg.group, cfg.caps.group_order, dir);
    } catch (const CapExceeded&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace cherednik::app
