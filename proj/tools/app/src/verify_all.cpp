#include "cherednik/cells.hpp"
#include "cherednik/vogan.hpp"
#include "cherednik_app/runner.hpp"

#include <future>

namespace cherednik::app {

using nlohmann::json;

namespace {

bool same_entries(const CohomologyReport& a, const CohomologyReport& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].weight != b.entries[i].weight || a.entries[i].degree != b.entries[i].degree ||
            a.entries[i].mult != b.entries[i].mult)
            return false;
    return true;
}

const std::vector<ComplexKind>& all_kinds() {
    static const std::vector<ComplexKind> k{ComplexKind::HStarCohomology, ComplexKind::HHomology,
                                            ComplexKind::HStarHomology,   ComplexKind::HCohomology,
                                            ComplexKind::DxCohomology,    ComplexKind::DyCohomology,
                                            ComplexKind::Dirac};
    return k;
}

Matrix basis_change_matrix(std::size_t n) {
    // 2 on the first diagonal entry, 1 elsewhere, ones on the superdiagonal
    Matrix a = Matrix::identity(n);
    a(0, 0) = Cyc(2);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = Cyc(1);
    return a;
}

struct ModuleResult {
    VerdictSet verdicts;
    std::vector<Observation> observations;
    json summary;
};

// Structural suite shared by every module the matrix touches.
void structural(const GradedModule& m, const CohomologyEngine& e, VerdictSet& v) {
    const std::string& n = m.name;
    v.check("defining-relation", n, [&] {
        for (auto f : {ModuleChecks::defining_relation, ModuleChecks::equivariance, ModuleChecks::commutativity,
                       ModuleChecks::representation})
            if (auto r = f(m); !r.empty()) return r;
        return std::string();
    });
    v.check("half-dirac-square-zero", n, [&] { return ComplexChecks::squares_zero(e.space()); });
    v.check("half-dirac-identification", n, [&] {
        auto r = ComplexChecks::half_dirac_identification(e.space());
        return r.empty() ? TheoremChecks::dx_identification(e) : r;
    });
    v.check("equivariance", n, [&] { return ComplexChecks::equivariance(e.space()); });
    v.check("dirac-square-identity", n, [&] { return dirac_square_identity(e.space()); });
    v.check("ur-decomposition", n, [&] { return ComplexChecks::ur_split(e); });
    v.check("poincare-duality", n, [&] { return TheoremChecks::poincare(e); });
    v.check("basis-change", n,
            [&] { return ComplexChecks::basis_change(e.space(), basis_change_matrix(m.rank())); });
    v.check("dirac-embedding", n, [&] {
        return TheoremChecks::embedding(e).holds ? std::string() : std::string("H_D is not contained in both");
    });
    v.check("omega-semisimple", n,
            [&] { return omega_semisimple(m) ? std::string() : std::string("Omega is not semisimple"); });
    const auto par = TheoremChecks::parity(e);
    if (par.applicable)
        v.check("parity-equality", n, [&] { return par.holds ? std::string() : par.detail; });
    else
        v.inapplicable("parity-equality", "no module without shared even/odd constituents");
}

void invariance(const GradedModule& m, const CohomologyEngine& e, VerdictSet& v) {
    const GradedModule r = GradedModule::rescale(m, Cyc(3));
    CohomologyEngine er(r);
    CohomologyOptions flipped;
    flipped.spinor.opposite_lifts = true;
    CohomologyEngine ef(m, flipped);
    v.check("rescaling-invariance", m.name, [&] {
        for (ComplexKind k : all_kinds())
            if (!same_entries(e.compute(k), er.compute(k))) return "differs for " + to_string(k);
        return std::string();
    });
    v.check("sign-convention-independence", m.name, [&] {
        for (ComplexKind k : all_kinds())
            if (!same_entries(e.compute(k), ef.compute(k))) return "differs for " + to_string(k);
        return std::string();
    });
}

Observation koszul_observation(const std::string& id, const GradedModule& m, const CohomologyEngine& e) {
    const auto hd = e.compute(ComplexKind::Dirac);
    const auto hs = e.compute(ComplexKind::HStarCohomology);
    const auto hh = e.compute(ComplexKind::HHomology);
    return Observation{id, m.name, hd.total() == hs.total() && hs.total() == hh.total(),
                       hd.complete && hs.complete && hh.complete};
}

json module_summary(const GradedModule& m, const CohomologyEngine& e) {
    json j{{"name", m.name}, {"finite", m.finite()}, {"window", m.window()}};
    j["dirac"] = report_json(e.compute(ComplexKind::Dirac));
    j["hstar_cohomology"] = report_json(e.compute(ComplexKind::HStarCohomology))["total"];
    j["hstar_homology"] = report_json(e.compute(ComplexKind::HStarHomology))["total"];
    return j;
}

ModuleResult standard_case(const Catalog& cat, const Params& p, std::size_t sigma, std::size_t window) {
    ModuleResult res;
    const auto& table = cat.table();
    const GradedModule m = GradedModule::standard(cat, p, sigma, window);
    CohomologyEngine e(m);
    structural(m, e, res.verdicts);
    invariance(m, e, res.verdicts);

    res.verdicts.check("standard-homology", m.name, [&] {
        const auto ho = e.compute(ComplexKind::HStarHomology);
        if (!ho.complete) return std::string("h*-homology not certified complete");
        std::vector<long> expect(table.size(), 0);
        expect[sigma] = 1;
        if (ho.in_degree(0) != expect) return std::string("H_0 is not sigma");
        for (std::size_t i = 1; i <= m.rank(); ++i)
            if (ho.in_degree(i) != std::vector<long>(table.size(), 0)) return "H_" + std::to_string(i) + " is nonzero";
        return std::string();
    });
    res.verdicts.check("dirac-standard", m.name, [&] {
        const auto hd = e.compute(ComplexKind::Dirac);
        if (!hd.complete) return std::string("Dirac cohomology not certified complete");
        std::vector<long> expect(table.size(), 0);
        expect[e.spinor().twist_by_inverse_chi(table, sigma)] = 1;
        return hd.total() == expect ? std::string() : std::string("H_D differs from sigma (x) chi^{-1}");
    });
    res.verdicts.check("bgg-bound", m.name, [&] {
        const auto b = TheoremChecks::bgg(e, {{table[sigma].label}});
        if (!b.euler_ok) return "Euler characteristic: " + b.detail;
        if (!b.bounded || !b.equal) return "bound: " + b.detail;
        return std::string();
    });
    try {
        const std::string r = TheoremChecks::hodge(e);
        if (r.empty())
            res.verdicts.pass("hodge-decomposition");
        else
            res.verdicts.fail("hodge-decomposition", m.name + ": " + r);
    } catch (const std::invalid_argument&) {
        res.verdicts.inapplicable("hodge-decomposition", "no certified-unitary module at these parameters");
    } catch (const std::exception& ex) {
        res.verdicts.fail("hodge-decomposition", m.name + ": exception: " + ex.what());
    }
    res.summary = module_summary(m, e);

    const GradedModule l = GradedModule::simple_quotient(m);
    CohomologyEngine el(l);
    structural(l, el, res.verdicts);
    res.observations.push_back(koszul_observation("dirac-equals-koszul", l, el));
    return res;
}

ModuleResult baby_case(const TensorAlgebra& ta, const std::vector<PbwElement>& central, std::size_t sigma,
                       bool zeta_feasible) {
    ModuleResult res;
    const Catalog& cat = ta.pbw().catalog();
    const GradedModule bv = GradedModule::baby_verma(cat, ta.pbw().params(), sigma);
    const GradedModule lb = GradedModule::simple_quotient(bv);
    for (const GradedModule* m : {&bv, &lb}) {
        CohomologyEngine e(*m);
        structural(*m, e, res.verdicts);
        if (!zeta_feasible)
            res.verdicts.inapplicable("casselman-osborne", "zeta preimage search is above the filtration caps");
        else
            res.verdicts.check("casselman-osborne", m->name, [&] {
            const auto co = casselman_osborne_check(ta, *m, central, 2);
            if (!co.failure.empty()) return co.failure;
            for (const auto& row : co.rows)
                if (!row.equal)
                    return row.element + " on " + row.constituent + ": " + row.beta.to_string() +
                           " != " + row.zeta_value.to_string();
            return std::string();
        });
        if (m == &lb) res.observations.push_back(koszul_observation("baby-dirac-equals-koszul", *m, e));
    }
    return res;
}

template <class F>
std::vector<ModuleResult> parallel(std::size_t count, std::size_t threads, F f) {
    std::vector<ModuleResult> out(count);
    const std::size_t workers = std::max<std::size_t>(1, threads);
    for (std::size_t start = 0; start < count; start += workers) {
        std::vector<std::future<ModuleResult>> jobs;
        for (std::size_t k = start; k < std::min(count, start + workers); ++k)
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, f, k));
        for (std::size_t k = 0; k < jobs.size(); ++k) out[start + k] = jobs[k].get();
    }
    return out;
}

}  // namespace

RunOutput verify_all(const JobConfig& cfg, const Catalog& cat) {
    RunOutput out;
    const auto& table = cat.table();
    const auto& g = cat.g();
    Cyc t = parse_scalar(cfg.t, "t");
    if (t.is_zero()) t = Cyc(1);
    const Params p1 = resolve_params(cfg, cat, t), p0 = resolve_params(cfg, cat, Cyc(0));
    const std::size_t window =
        cfg.degree_bound > 0 ? static_cast<std::size_t>(cfg.degree_bound) : default_window(g.rank());
    out.report["parameters"] = {{"t", p1.t.to_string()}, {"c", p1.to_string()}, {"window", window}};

    out.verdicts.check("spinor-decomposition", "", [&] {
        SpinorOptions flipped;
        flipped.opposite_lifts = true;
        if (!Spinor(g).decomposition_check()) return std::string("chosen lifts");
        if (!Spinor(g, flipped).decomposition_check()) return std::string("opposite lifts");
        return std::string();
    });

    // t != 0: standard and simple modules
    json modules = json::array();
    for (auto& r : parallel(table.size(), cfg.threads,
                            [&](std::size_t s) { return standard_case(cat, p1, s, window); })) {
        out.verdicts.merge(r.verdicts);
        out.observations.insert(out.observations.end(), r.observations.begin(), r.observations.end());
        modules.push_back(r.summary);
    }
    out.report["standard_modules"] = modules;

    // Vogan decomposition at t and at 0
    const int vdeg = std::min(cfg.caps.pbw_degree, g.rank() == 1 ? 3 : g.rank() == 2 ? 1 : -1);
    if (vdeg < 0) {
        out.verdicts.inapplicable("vogan-decomposition", "no filtration degree within the caps");
    } else {
        json certs = json::array();
        for (const Params* p : {&p1, &p0}) {
            TensorAlgebra ta(cat, *p);
            for (int n = 0; n <= vdeg; ++n)
                for (bool partial : {false, true}) {
                    const auto c = verify_vogan_decomposition(ta, n, partial, cfg.threads);
                    certs.push_back({{"t", p->t.to_string()},
                                     {"operator", partial ? "delta_partial" : "delta_d"},
                                     {"degree", n},
                                     {"invariant_dim", c.invariant_dim},
                                     {"kernel_dim", c.kernel_dim},
                                     {"image_dim", c.image_dim},
                                     {"central_dim", c.central_dim}});
                    if (c.ok())
                        out.verdicts.pass("vogan-decomposition");
                    else
                        out.verdicts.fail("vogan-decomposition", "t=" + p->t.to_string() + " degree " +
                                                                     std::to_string(n) + ": " + c.failure);
                }
        }
        out.report["certificates"] = certs;
    }

    // t = 0: baby Verma modules, Casselman-Osborne, cells
    TensorAlgebra ta0(cat, p0);
    const auto central = find_central_elements(ta0.pbw(), 2);
    const bool zeta_feasible = g.rank() <= 2 && cfg.caps.pbw_degree >= 2;
    for (auto& r : parallel(table.size(), cfg.threads,
                            [&](std::size_t s) { return baby_case(ta0, central, s, zeta_feasible); })) {
        out.verdicts.merge(r.verdicts);
        out.observations.insert(out.observations.end(), r.observations.begin(), r.observations.end());
    }

    // m_+ Z (x) 1 in the image: y^m x^m for rank one, when within the caps
    const int image_degree = g.rank() == 1 ? 2 * static_cast<int>(g.order()) : -1;
    if (image_degree > 0 && image_degree <= std::min(cfg.caps.pbw_degree, 4)) {
        std::vector<Letter> word;
        for (std::size_t k = 0; k < g.order(); ++k) word.push_back({Letter::Y, 0});
        for (std::size_t k = 0; k < g.order(); ++k) word.push_back({Letter::X, 0});
        const PbwElement z = ta0.pbw().normalize(word);
        for (bool partial : {false, true})
            out.verdicts.check("central-image", partial ? "delta_partial" : "delta_d", [&] {
                const auto w = central_in_image(ta0, z, image_degree, partial);
                return w.found ? std::string() : w.failure;
            });
    } else {
        out.verdicts.inapplicable("central-image", "smallest element of m_+Z is above the filtration caps");
    }

    out.verdicts.check("decomposition-numbers", "", [&] {
        decomposition_numbers(cat, p0);
        return std::string();
    });
    const CellPartition cells = cm_cells(cat, p0);
    out.report["cells"] =
        json::array({{{"c", cells.c}, {"cells", cells.blocks}, {"provenance", to_string(cells.provenance)}}});
    out.verdicts.check("cell-linkage-consistency", "", [&] {
        return cells.linkage_refines_theta ? std::string() : std::string("a linkage block meets two fibers");
    });
    out.verdicts.check("cm-cell-constituents", "", [&] {
        const auto cc = cell_constituents_check(cat, p0, cells);
        std::string r;
        for (const auto& row : cc.rows) {
            if (!row.same_cell) r += row.sigma + ": twisted constituent outside the cell; ";
            if (!row.top_wedge) r += row.sigma + ": top wedge constituent missing; ";
        }
        return r;
    });
    return out;
}

}  // namespace cherednik::app
