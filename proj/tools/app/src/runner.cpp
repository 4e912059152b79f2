#include "cherednik_app/runner.hpp"

#include "cherednik/cells.hpp"
#include "cherednik/vogan.hpp"

#include <algorithm>
#include <sstream>

namespace cherednik::app {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inapplicable: return "inapplicable";
    }
    return "?";
}

Verdict& VerdictSet::slot(const std::string& id) {
    for (auto& v : v_)
        if (v.id == id) return v;
    v_.push_back(Verdict{id, Status::Inapplicable, {}});
    return v_.back();
}

void VerdictSet::pass(const std::string& id) {
    Verdict& v = slot(id);
    if (v.status == Status::Inapplicable) v.status = Status::Pass;
}

void VerdictSet::fail(const std::string& id, const std::string& detail) {
    Verdict& v = slot(id);
    v.status = Status::Fail;
    constexpr std::size_t kMaxDetails = 6;
    if (v.details.size() < kMaxDetails) v.details.push_back(detail);
}

void VerdictSet::inapplicable(const std::string& id, const std::string& detail) {
    Verdict& v = slot(id);
    if (v.status == Status::Inapplicable && !detail.empty() && v.details.empty()) v.details.push_back(detail);
}

void VerdictSet::merge(const VerdictSet& other) {
    for (const auto& v : other.v_) {
        switch (v.status) {
            case Status::Pass: pass(v.id); break;
            case Status::Fail:
                for (const auto& d : v.details) fail(v.id, d);
                break;
            case Status::Inapplicable: inapplicable(v.id, v.details.empty() ? "" : v.details.front()); break;
        }
    }
}

bool VerdictSet::any_failed() const {
    return std::any_of(v_.begin(), v_.end(), [](const Verdict& v) { return v.status == Status::Fail; });
}

const Verdict* VerdictSet::find(const std::string& id) const {
    for (const auto& v : v_)
        if (v.id == id) return &v;
    return nullptr;
}

// ---------------------------------------------------------------------------

json report_json(const CohomologyReport& r, const std::optional<std::pair<long, long>>& window) {
    auto labelled = [&](const std::vector<long>& mult) {
        json m = json::object();
        for (std::size_t i = 0; i < mult.size(); ++i)
            if (mult[i] != 0) m[r.labels[i]] = mult[i];
        return m;
    };
    json entries = json::array();
    std::vector<long> total(r.labels.size(), 0);
    for (const auto& e : r.entries) {
        if (window && (e.weight < window->first || e.weight > window->second)) continue;
        entries.push_back({{"weight", e.weight}, {"degree", e.degree}, {"mult", labelled(e.mult)}});
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += e.mult[i];
    }
    json j{{"kind", to_string(r.kind)},
           {"weights_computed", {r.weight_lo, r.weight_hi}},
           {"complete", r.complete},
           {"entries", entries},
           {"total", labelled(total)}};
    if (window) j["r_window"] = {window->first, window->second};
    return j;
}

GradedModule build_module(const JobConfig& cfg, const Catalog& cat, const Params& p) {
    const auto& table = cat.table();
    const auto sigma = table.index_of(cfg.module.kind == "ltriv" ? std::string("triv") : cfg.module.sigma);
    if (!sigma) throw ConfigError("module.sigma: unknown irrep label '" + cfg.module.sigma + "'");
    const std::size_t window =
        cfg.degree_bound > 0 ? static_cast<std::size_t>(cfg.degree_bound) : default_window(cat.g().rank());
    if (cfg.module.kind == "baby-verma") {
        if (!p.t.is_zero()) throw ConfigError("baby-verma modules need t = 0");
        return GradedModule::baby_verma(cat, p, *sigma);
    }
    if (p.t.is_zero()) throw ConfigError("module.kind " + cfg.module.kind + " needs t != 0 (use baby-verma)");
    GradedModule m = GradedModule::standard(cat, p, *sigma, window);
    if (cfg.module.kind == "standard") return m;
    return GradedModule::simple_quotient(m);
}

namespace {

json group_info(const Catalog& cat) {
    const auto& g = cat.g();
    json classes = json::array();
    for (std::size_t k = 0; k < g.classes().size(); ++k)
        classes.push_back({{"size", g.classes()[k].size()}, {"representative", g.classes()[k].front()}});
    json refl = json::array();
    for (std::size_t k = 0; k < g.reflection_classes().size(); ++k) {
        const std::size_t cls = g.reflection_classes()[k];
        refl.push_back({{"label", reflection_class_label(k)}, {"class", cls}, {"size", g.classes()[cls].size()}});
    }
    json j{{"name", cat.name},
           {"order", g.order()},
           {"rank", g.rank()},
           {"conductor", g.conductor()},
           {"reflections", g.reflections().size()},
           {"generated_by_reflections", g.generated_by_reflections()},
           {"classes", classes},
           {"reflection_classes", refl}};
    if (cat.irreps) {
        json irr = json::array();
        for (const auto& ir : cat.irreps->irreps()) {
            json chi = json::array();
            for (const auto& cls : g.classes()) chi.push_back(ir.character[cls.front()].to_string());
            irr.push_back({{"label", ir.label}, {"dim", ir.dim}, {"character", chi}});
        }
        j["irreps"] = irr;
    }
    return j;
}

json witness_json(const std::vector<std::pair<std::string, std::string>>& terms) {
    json a = json::array();
    for (const auto& [coef, mono] : terms) a.push_back({{"coef", coef}, {"term", mono}});
    return a;
}

json certificate_json(const VoganCertificate& c) {
    json w = json::array();
    for (const auto& wit : c.witnesses)
        w.push_back({{"kernel_vector", witness_json(wit.kernel_vector)},
                     {"preimage", witness_json(wit.preimage)},
                     {"central_part", witness_json(wit.central_part)}});
    return {{"operator", c.partial ? "delta_partial" : "delta_d"},
            {"degree", c.degree},
            {"invariant_dim", c.invariant_dim},
            {"kernel_dim", c.kernel_dim},
            {"image_dim", c.image_dim},
            {"central_dim", c.central_dim},
            {"direct", c.direct},
            {"decomposes", c.decomposes},
            {"delta_square_zero", c.delta_square_zero},
            {"witnesses", w},
            {"failure", c.failure}};
}

json cells_json(const CellPartition& p) {
    return {{"c", p.c},
            {"cells", p.blocks},
            {"provenance", to_string(p.provenance)},
            {"central_element_degrees", p.central_element_degrees},
            {"linkage_blocks", p.linkage_blocks},
            {"theta_blocks", p.theta_blocks},
            {"central_probe_dim", p.central_probe_dim},
            {"probe_reaches_order", p.probe_reaches_order}};
}

int vogan_default_degree(std::size_t rank) { return rank == 1 ? 3 : rank == 2 ? 1 : -1; }

std::string identify_dirac_standard(const CohomologyEngine& e, std::size_t sigma) {
    const auto hd = e.compute(ComplexKind::Dirac);
    if (!hd.complete) return "Dirac cohomology not certified complete";
    std::vector<long> expect(e.table().size(), 0);
    expect[e.spinor().twist_by_inverse_chi(e.table(), sigma)] = 1;
    if (hd.total() != expect) return "H_D differs from sigma (x) chi^{-1}";
    return {};
}

RunOutput task_cohomology(const JobConfig& cfg, const Catalog& cat, bool dirac) {
    RunOutput out;
    const Params p = resolve_params(cfg, cat);
    const GradedModule m = build_module(cfg, cat, p);
    CohomologyOptions opts;
    opts.threads = cfg.threads;
    CohomologyEngine e(m, opts);
    json reports = json::array();
    const std::vector<ComplexKind> kinds =
        dirac ? std::vector<ComplexKind>{ComplexKind::Dirac, ComplexKind::DxCohomology, ComplexKind::DyCohomology}
              : std::vector<ComplexKind>{ComplexKind::HStarCohomology, ComplexKind::HHomology,
                                         ComplexKind::HStarHomology, ComplexKind::HCohomology};
    for (ComplexKind k : kinds) reports.push_back(report_json(e.compute(k), cfg.r_window));
    out.report["module"] = {{"name", m.name}, {"finite", m.finite()}, {"window", m.window()}};
    out.report["reports"] = reports;
    if (auto b = e.support_bound()) out.report["support_bound"] = *b;
    out.verdicts.check("half-dirac-square-zero", m.name, [&] { return ComplexChecks::squares_zero(e.space()); });
    if (dirac) {
        out.verdicts.check("dirac-embedding", m.name, [&] {
            return TheoremChecks::embedding(e).holds ? std::string() : std::string("H_D is not contained in both");
        });
        if (cfg.module.kind == "standard")
            out.verdicts.check("dirac-standard", m.name,
                               [&] { return identify_dirac_standard(e, cat.table().require(cfg.module.sigma)); });
        const auto par = TheoremChecks::parity(e);
        if (par.applicable)
            out.verdicts.check("parity-equality", m.name, [&] { return par.holds ? std::string() : par.detail; });
        else
            out.verdicts.inapplicable("parity-equality", par.detail);
    } else {
        out.verdicts.check("poincare-duality", m.name, [&] { return TheoremChecks::poincare(e); });
    }
    return out;
}

RunOutput task_hodge(const JobConfig& cfg, const Catalog& cat) {
    RunOutput out;
    const Params p = resolve_params(cfg, cat);
    const GradedModule m = build_module(cfg, cat, p);
    CohomologyEngine e(m);
    out.report["module"] = {{"name", m.name}, {"window", m.window()}};
    try {
        const std::string r = TheoremChecks::hodge(e);
        out.report["unitary"] = true;
        if (r.empty())
            out.verdicts.pass("hodge-decomposition");
        else
            out.verdicts.fail("hodge-decomposition", m.name + ": " + r);
    } catch (const std::invalid_argument& ex) {
        out.report["unitary"] = false;
        out.verdicts.inapplicable("hodge-decomposition", ex.what());
    }
    out.report["dirac"] = report_json(e.compute(ComplexKind::Dirac), cfg.r_window);
    return out;
}

RunOutput task_vogan(const JobConfig& cfg, const Catalog& cat) {
    RunOutput out;
    const int n = cfg.degree_bound >= 0 ? cfg.degree_bound : vogan_default_degree(cat.g().rank());
    if (n > cfg.caps.pbw_degree)
        throw CapExceeded("filtration degree " + std::to_string(n) + " exceeds caps.pbw_degree " +
                          std::to_string(cfg.caps.pbw_degree));
    if (n < 0) throw CapExceeded("no filtration degree is within the caps for rank " + std::to_string(cat.g().rank()));
    const Params p = resolve_params(cfg, cat);
    TensorAlgebra ta(cat, p);
    json certs = json::array();
    for (bool partial : {false, true}) {
        const auto c = verify_vogan_decomposition(ta, n, partial, cfg.threads);
        certs.push_back(certificate_json(c));
        if (c.ok())
            out.verdicts.pass("vogan-decomposition");
        else
            out.verdicts.fail("vogan-decomposition", c.failure);
    }
    out.report["certificates"] = certs;
    return out;
}

RunOutput task_cells(const JobConfig& cfg, const Catalog& cat) {
    RunOutput out;
    std::vector<Params> points;
    if (!cfg.c_grid.empty())
        for (const auto& v : cfg.c_grid) points.push_back(Params::uniform(cat.g(), 0, parse_scalar(v, "c_grid")));
    else
        points.push_back(resolve_params(cfg, cat, Cyc(0)));
    json cells = json::array();
    for (const auto& p : points) {
        const CellPartition part = cm_cells(cat, p);
        cells.push_back(cells_json(part));
        out.verdicts.check("cell-linkage-consistency", "c=" + part.c, [&] {
            return part.linkage_refines_theta ? std::string() : std::string("a linkage block meets two fibers");
        });
        const auto cc = cell_constituents_check(cat, p, part);
        out.verdicts.check("cm-cell-constituents", "c=" + part.c, [&] {
            std::string r;
            for (const auto& row : cc.rows) {
                if (!row.same_cell) r += row.sigma + ": twisted constituent outside the cell; ";
                if (!row.top_wedge) r += row.sigma + ": top wedge constituent missing; ";
            }
            return r;
        });
    }
    out.report["cells"] = cells;
    return out;
}

}  // namespace

RunOutput run_task(const JobConfig& cfg) {
    cfg.validate();
    const Catalog cat = load(cfg);
    if (cfg.task == "group-info") {
        RunOutput out;
        out.report["group"] = group_info(cat);
        return out;
    }
    if (!cat.irreps) throw ConfigError("task " + cfg.task + " needs an irrep table; " + cat.name + " has none");
    if (cfg.task == "cohomology") return task_cohomology(cfg, cat, false);
    if (cfg.task == "dirac") return task_cohomology(cfg, cat, true);
    if (cfg.task == "hodge") return task_hodge(cfg, cat);
    if (cfg.task == "vogan") return task_vogan(cfg, cat);
    if (cfg.task == "cells") return task_cells(cfg, cat);
    return verify_all(cfg, cat);
}

int exit_code(const RunOutput& out) { return out.verdicts.any_failed() ? 1 : 0; }

json final_report(const JobConfig& cfg, const RunOutput& out) {
    json config = cfg.to_json();
    config.erase("threads");
    config.erase("output");
    json verdicts = json::array();
    for (const auto& v : out.verdicts.verdicts())
        verdicts.push_back({{"id", v.id}, {"status", to_string(v.status)}, {"details", v.details}});
    json obs = json::array();
    for (const auto& o : out.observations)
        obs.push_back({{"id", o.id}, {"module", o.module}, {"observed", o.observed}, {"complete", o.complete}});
    json r{{"schema", kReportSchema}, {"task", cfg.task}, {"config", config}, {"results", out.report},
           {"verdicts", verdicts}};
    if (!obs.empty()) r["observations"] = obs;
    return r;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "task: " << report.at("task").get<std::string>() << '\n';
    const json& res = report.at("results");
    if (res.contains("group")) os << res.at("group").dump(2) << '\n';
    if (res.contains("module")) os << "module: " << res.at("module").at("name").get<std::string>() << '\n';
    if (res.contains("reports"))
        for (const auto& r : res.at("reports")) {
            os << r.at("kind").get<std::string>() << (r.at("complete").get<bool>() ? "" : " (window only)") << '\n';
            for (const auto& e : r.at("entries"))
                os << "  weight " << e.at("weight") << " degree " << e.at("degree") << ": " << e.at("mult").dump()
                   << '\n';
            os << "  total: " << r.at("total").dump() << '\n';
        }
    if (res.contains("dirac")) os << "dirac total: " << res.at("dirac").at("total").dump() << '\n';
    if (res.contains("certificates"))
        for (const auto& c : res.at("certificates"))
            os << (c.contains("t") ? "t=" + c.at("t").get<std::string>() + " " : std::string())
               << c.at("operator").get<std::string>() << " degree " << c.at("degree") << ": invariants "
               << c.at("invariant_dim") << ", kernel " << c.at("kernel_dim") << ", image " << c.at("image_dim")
               << ", central " << c.at("central_dim") << '\n';
    if (res.contains("cells"))
        for (const auto& c : res.at("cells"))
            os << "c = " << c.at("c").get<std::string>() << ": " << c.at("cells").dump() << " ("
               << c.at("provenance").get<std::string>() << ")\n";
    for (const auto& v : report.at("verdicts")) {
        std::string s = v.at("status").get<std::string>();
        std::transform(s.begin(), s.end(), s.begin(), ::toupper);
        os << s << "  " << v.at("id").get<std::string>();
        for (const auto& d : v.at("details")) os << "  [" << d.get<std::string>() << ']';
        os << '\n';
    }
    if (report.contains("observations"))
        for (const auto& o : report.at("observations"))
            os << "OBSERVED  " << o.at("id").get<std::string>() << "  " << o.at("module").get<std::string>() << ": "
               << (o.at("observed").get<bool>() ? "true" : "false")
               << (o.at("complete").get<bool>() ? "" : " (within window)") << '\n';
    return os.str();
}

}  // namespace cherednik::app
