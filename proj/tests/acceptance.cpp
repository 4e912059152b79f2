#include "cherednik/cells.hpp"
#include "cherednik/cohomology.hpp"
#include "cherednik/vogan.hpp"
#include "cherednik_app/runner.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cherednik;

namespace {

const std::vector<std::string> kMatrixGroups{"cyclic:2", "cyclic:3", "cyclic:4", "dihedral:3", "dihedral:4"};

std::string cache_dir() { return (std::filesystem::temp_directory_path() / "cherednik-acceptance").string(); }

Catalog cat(const std::string& spec) { return load_catalog(GroupSpec::parse(spec), 48, cache_dir()); }

std::size_t window_for(const Catalog& c) { return app::default_window(c.g().rank()); }

std::vector<long> unit(std::size_t size, std::size_t at) {
    std::vector<long> v(size, 0);
    v[at] = 1;
    return v;
}

std::string vec(const std::vector<long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str() + ']';
}

// Criterion outcome: empty failures means pass.
struct Outcome {
    std::vector<std::string> failures;
    std::string summary;
    void fail(const std::string& s) { failures.push_back(s); }
};

std::vector<long> exterior_power_multiplicities(const Catalog& c, const Spinor& s, std::size_t l) {
    std::vector<Cyc> f;
    for (std::size_t w = 0; w < c.g().order(); ++w) f.push_back(s.exterior_power(w, l).trace());
    return c.table().decompose_character(f);
}

Outcome standard_homology() {
    Outcome o;
    std::size_t cases = 0;
    for (const auto& name : kMatrixGroups) {
        const Catalog c = cat(name);
        const std::size_t n = c.table().size();
        for (std::size_t s = 0; s < n; ++s) {
            const GradedModule m = GradedModule::standard(c, Params::uniform(c.g(), 1, Cyc(1, 5)), s, window_for(c));
            const auto ho = CohomologyEngine(m).compute(ComplexKind::HStarHomology);
            const std::string where = name + " " + m.name;
            ++cases;
            if (!ho.complete) o.fail(where + ": not certified complete");
            if (ho.in_degree(0) != unit(n, s)) o.fail(where + ": H_0 = " + vec(ho.in_degree(0)));
            for (std::size_t i = 1; i <= c.g().rank(); ++i)
                if (ho.in_degree(i) != std::vector<long>(n, 0))
                    o.fail(where + ": H_" + std::to_string(i) + " = " + vec(ho.in_degree(i)));
        }
    }
    o.summary = std::to_string(cases) + " standard modules, H_0 = sigma, H_i = 0 for i > 0";
    return o;
}

Outcome dirac_standard() {
    Outcome o;
    std::size_t cases = 0;
    for (const auto& name : kMatrixGroups) {
        const Catalog c = cat(name);
        const std::size_t n = c.table().size();
        for (std::size_t s = 0; s < n; ++s) {
            const GradedModule m = GradedModule::standard(c, Params::uniform(c.g(), 1, Cyc(1, 5)), s, window_for(c));
            const CohomologyEngine e(m);
            const auto hd = e.compute(ComplexKind::Dirac);
            const auto expect = unit(n, e.spinor().twist_by_inverse_chi(c.table(), s));
            ++cases;
            if (!hd.complete) o.fail(name + " " + m.name + ": not certified complete");
            if (hd.total() != expect) o.fail(name + " " + m.name + ": H_D = " + vec(hd.total()) + ", expected " + vec(expect));
        }
    }
    o.summary = std::to_string(cases) + " standard modules, H_D = sigma (x) chi^{-1}";
    return o;
}

Outcome finite_ltriv() {
    Outcome o;
    const Catalog c = cat("cyclic:2");
    const std::size_t n = c.table().size(), triv = c.table().require("triv");
    // c = 3 realizes the three-dimensional L(triv) for the relation [y, x] = t - c s
    const GradedModule l =
        GradedModule::simple_quotient(GradedModule::standard(c, Params::uniform(c.g(), 1, Cyc(3)), triv, 8));
    if (!l.finite() || l.total_dim() != 3) o.fail("dim L(triv) = " + std::to_string(l.total_dim()));
    const CohomologyEngine e(l);
    const auto ho = e.compute(ComplexKind::HStarHomology);
    std::vector<long> dirac_expect(n, 0);
    for (std::size_t i = 0; i <= 1; ++i) {
        const auto wedge = exterior_power_multiplicities(c, e.spinor(), i);
        if (ho.in_degree(i) != wedge)
            o.fail("H_" + std::to_string(i) + " = " + vec(ho.in_degree(i)) + ", Lambda^" + std::to_string(i) +
                   " h = " + vec(wedge));
        for (std::size_t s = 0; s < n; ++s)
            if (wedge[s]) dirac_expect[e.spinor().twist_by_inverse_chi(c.table(), s)] += wedge[s];
    }
    const auto hd = e.compute(ComplexKind::Dirac).total();
    if (hd != dirac_expect) o.fail("H_D = " + vec(hd) + ", expected " + vec(dirac_expect));
    long classes = 0;
    for (long v : hd) classes += v;
    if (classes != 2) o.fail("H_D has " + std::to_string(classes) + " genuine classes");
    const GradedModule half = GradedModule::simple_quotient(
        GradedModule::standard(c, Params::uniform(c.g(), 1, Cyc(3, 2)), triv, 8));
    o.summary = "cyclic 2, c = 3: dim L(triv) = " + std::to_string(l.total_dim()) + ", H_i = Lambda^i h, H_D = " +
                vec(hd) + " (c = 3/2 gives " + (half.finite() ? "a finite" : "an infinite") + " L(triv))";
    return o;
}

Outcome hodge() {
    Outcome o;
    std::ostringstream sum;
    const std::vector<Cyc> scan{Cyc(1, 2), Cyc(1, 3), Cyc(1, 4), Cyc(1, 5), Cyc(1, 10)};
    for (const std::string name : {"cyclic:2", "dihedral:3"}) {
        const Catalog c = cat(name);
        const std::size_t triv = c.table().require("triv");
        const auto found = unitary_parameters(c, triv, Cyc(1), scan, 8);
        if (found.empty()) {
            o.fail(name + ": unitarity scan found no nonzero c");
            continue;
        }
        for (const Cyc& cc : {Cyc(0), found.front()}) {
            std::size_t checked = 0;
            for (std::size_t s = 0; s < c.table().size(); ++s) {
                const GradedModule l = GradedModule::simple_quotient(
                    GradedModule::standard(c, Params::uniform(c.g(), 1, cc), s, 8));
                try {
                    const std::string r = TheoremChecks::hodge(CohomologyEngine(l));
                    ++checked;
                    if (!r.empty()) o.fail(name + " c = " + cc.to_string() + " " + l.name + ": " + r);
                } catch (const std::invalid_argument&) {
                }
            }
            if (cc.is_zero() && checked != c.table().size()) o.fail(name + ": a standard module at c = 0 is not unitary");
            if (checked == 0) o.fail(name + " c = " + cc.to_string() + ": no unitary module");
            sum << name << " c = " << cc.to_string() << ": " << checked << " unitary modules; ";
        }
    }
    o.summary = sum.str() + "degrees <= 8";
    return o;
}

Outcome vogan() {
    Outcome o;
    std::ostringstream sum;
    for (const std::string name : {"cyclic:2", "cyclic:3"}) {
        const Catalog c = cat(name);
        std::size_t witnesses = 0, certificates = 0;
        for (const Cyc& t : {Cyc(1), Cyc(0)}) {
            TensorAlgebra ta(c, Params::uniform(c.g(), t, Cyc(1, 5)));
            for (int deg = 0; deg <= 3; ++deg)
                for (bool partial : {false, true}) {
                    const auto cert = verify_vogan_decomposition(ta, deg, partial);
                    ++certificates;
                    witnesses += cert.witnesses.size();
                    if (!cert.ok())
                        o.fail(name + " t = " + t.to_string() + (partial ? " delta_partial" : " delta_d") +
                               " degree " + std::to_string(deg) + ": " + cert.failure);
                    if (cert.kernel_dim > 0 && cert.witnesses.empty())
                        o.fail(name + " degree " + std::to_string(deg) + ": no serialized witness");
                }
        }
        sum << name << ": " << certificates << " certificates, " << witnesses << " witnesses; ";
    }
    o.summary = sum.str() + "degrees <= 3, t in {1, 0}";
    return o;
}

Outcome casselman_osborne() {
    Outcome o;
    std::size_t rows = 0, modules = 0;
    for (const std::string name : {"cyclic:2", "dihedral:3"}) {
        const Catalog c = cat(name);
        for (const Cyc& cc : {Cyc(1, 5), Cyc(1, 2)}) {
            TensorAlgebra ta(c, Params::uniform(c.g(), 0, cc));
            const auto central = find_central_elements(ta.pbw(), 2);
            if (central.size() < 2) o.fail(name + ": fewer than two central elements of degree <= 2");
            for (std::size_t s = 0; s < c.table().size(); ++s) {
                const GradedModule bv = GradedModule::baby_verma(c, ta.pbw().params(), s);
                const GradedModule lb = GradedModule::simple_quotient(bv);
                for (const GradedModule* m : {&bv, &lb}) {
                    const auto co = casselman_osborne_check(ta, *m, central, 2);
                    ++modules;
                    rows += co.rows.size();
                    if (!co.failure.empty()) o.fail(name + " " + m->name + ": " + co.failure);
                    for (const auto& r : co.rows)
                        if (!r.equal)
                            o.fail(name + " " + m->name + " " + r.element + " on " + r.constituent + ": " +
                                   r.beta.to_string() + " != " + r.zeta_value.to_string());
                }
            }
        }
    }
    o.summary = std::to_string(modules) + " baby Verma and simple modules, " + std::to_string(rows) +
                " (element, constituent) pairs";
    return o;
}

Outcome cells() {
    Outcome o;
    const Catalog z2 = cat("cyclic:2");
    for (const Cyc& cc : {Cyc(1, 5), Cyc(1, 2), Cyc(1)}) {
        const auto cp = cm_cells(z2, Params::uniform(z2.g(), 0, cc));
        if (cp.blocks.size() != 2) o.fail("cyclic 2 c = " + cc.to_string() + ": cells are not singletons");
    }
    const auto zero = cm_cells(z2, Params::uniform(z2.g(), 0, Cyc(0)));
    if (zero.blocks.size() != 1 || zero.blocks != zero.linkage_blocks)
        o.fail("cyclic 2 c = 0: cells do not match the linkage blocks");

    const Catalog d3 = cat("dihedral:3");
    const std::vector<Cyc> grid{Cyc(0), Cyc(1, 5), Cyc(1, 3), Cyc(1, 2), Cyc(1)};
    std::ostringstream sum;
    for (const auto& cp : cell_sweep(d3, grid)) {
        const Params p = Params::uniform(d3.g(), 0, Cyc::parse(cp.c));
        const auto cc = cell_constituents_check(d3, p, cp);
        for (const auto& r : cc.rows) {
            if (!r.same_cell) o.fail("dihedral 3 c = " + cp.c + " " + r.sigma + ": twisted constituent outside the cell");
            if (!r.top_wedge) o.fail("dihedral 3 c = " + cp.c + " " + r.sigma + ": top wedge constituent missing");
        }
        if (!cp.linkage_refines_theta) o.fail("dihedral 3 c = " + cp.c + ": linkage does not refine the fibers");
        sum << (sum.tellp() ? ", " : "") << "c = " << cp.c << ": " << cp.blocks.size();
    }
    o.summary = "cyclic 2 singletons for c != 0, one cell at c = 0; dihedral 3 cells " + sum.str();
    return o;
}

// verify-all once per group; reused by the structural and observation criteria.
struct MatrixRun {
    std::string group, c;
    app::RunOutput out;
    double seconds = 0;
};

std::vector<MatrixRun>& matrix_runs() {
    static std::vector<MatrixRun> runs;
    if (!runs.empty()) return runs;
    std::vector<std::pair<std::string, std::string>> jobs;
    for (const auto& g : kMatrixGroups) jobs.push_back({g, "1/5"});
    jobs.push_back({"cyclic:2", "3"});
    for (const auto& [g, c] : jobs) {
        app::JobConfig cfg;
        cfg.group = GroupSpec::parse(g);
        cfg.t = "1";
        cfg.c = {{"*", c}};
        cfg.task = "verify-all";
        cfg.cache_dir = cache_dir();
        const auto start = std::chrono::steady_clock::now();
        MatrixRun r{g, c, app::run_task(cfg), 0};
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        runs.push_back(std::move(r));
    }
    return runs;
}

Outcome structural() {
    Outcome o;
    const std::vector<std::string> ids{"defining-relation", "half-dirac-square-zero", "half-dirac-identification",
                                       "equivariance",      "dirac-square-identity",  "poincare-duality",
                                       "basis-change",      "spinor-decomposition",   "rescaling-invariance",
                                       "sign-convention-independence"};
    std::ostringstream sum;
    for (const auto& r : matrix_runs()) {
        const std::string where = r.group + " c = " + r.c;
        for (const auto& id : ids) {
            const auto* v = r.out.verdicts.find(id);
            if (!v || v->status != app::Status::Pass)
                o.fail(where + " " + id + (v && !v->details.empty() ? ": " + v->details.front() : ": not passed"));
        }
        for (const auto& v : r.out.verdicts.verdicts())
            if (v.status == app::Status::Fail) o.fail(where + " " + v.id + ": " + v.details.front());
        if (r.seconds > 300) o.fail(where + ": verify-all took " + std::to_string(r.seconds) + " s");
        sum << (sum.tellp() ? "; " : "") << r.group << " c = " << r.c << " in " << static_cast<long>(r.seconds + 0.5)
            << " s";
    }
    o.summary = sum.str();
    return o;
}

Outcome observations() {
    Outcome o;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    std::size_t partial = 0;
    for (const auto& r : matrix_runs())
        for (const auto& ob : r.out.observations) {
            auto& t = tally[ob.id];
            ++t.second;
            if (ob.observed) ++t.first;
            if (!ob.complete) ++partial;
        }
    if (tally.empty()) o.fail("no observations recorded");
    std::ostringstream sum;
    for (const auto& [id, t] : tally) sum << id << " observed on " << t.first << "/" << t.second << "; ";
    sum << partial << " limited to the window";
    o.summary = sum.str();
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"standard-module homology", standard_homology},
        {"Dirac cohomology of standard modules", dirac_standard},
        {"finite-dimensional L(triv)", finite_ltriv},
        {"Hodge decomposition", hodge},
        {"Vogan decomposition", vogan},
        {"Casselman-Osborne", casselman_osborne},
        {"Calogero-Moser cells", cells},
        {"structural suites", structural},
        {"observations", observations},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.failures.empty();
        if (!pass) ++failed;
        std::cout << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << o.summary << ") " << static_cast<long>(secs * 10 + 0.5) / 10.0 << " s\n";
        for (const auto& f : o.failures) std::cout << "    " << f << '\n';
        std::cout.flush();
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
    return failed ? 1 : 0;
}
