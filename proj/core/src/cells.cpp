#include "cherednik/cells.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

namespace cherednik {

namespace {

// W-multiplicities of every block of a module.
std::vector<std::vector<long>> graded_character(const GradedModule& m) {
    const auto& g = m.catalog.g();
    const auto& table = m.catalog.table();
    std::vector<std::vector<long>> out;
    for (std::size_t k = 0; k <= m.window(); ++k) {
        std::vector<Matrix> action;
        for (std::size_t e = 0; e < g.order(); ++e) action.push_back(m.w(k, e));
        out.push_back(m.dim(k) == 0 ? std::vector<long>(table.size(), 0) : table.decompose(action));
    }
    return out;
}

Cyc lowest_omega(const GradedModule& m) {
    const Matrix om = m.omega(0);
    return om(0, 0);
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<std::string>> blocks_from_keys(const std::vector<std::string>& labels,
                                                       const std::vector<std::size_t>& key) {
    std::map<std::size_t, std::vector<std::string>> groups;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!groups.count(key[i])) order.push_back(key[i]);
        groups[key[i]].push_back(labels[i]);
    }
    std::vector<std::vector<std::string>> out;
    for (std::size_t k : order) out.push_back(groups[k]);
    return out;
}

bool same_partition(std::vector<std::vector<std::string>> a, std::vector<std::vector<std::string>> b) {
    for (auto& x : a) std::sort(x.begin(), x.end());
    for (auto& x : b) std::sort(x.begin(), x.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string c_text(const Params& p) {
    if (p.c.empty()) return "0";
    bool uniform = std::all_of(p.c.begin(), p.c.end(), [&](const Cyc& x) { return x == p.c.front(); });
    if (uniform) return p.c.front().to_string();
    std::string s;
    for (std::size_t i = 0; i < p.c.size(); ++i) s += (i ? "," : "") + p.c[i].to_string();
    return s;
}

}  // namespace

LinkageGraph decomposition_numbers(const Catalog& cat, const Params& p) {
    if (!p.t.is_zero()) throw std::invalid_argument("decomposition numbers need t = 0");
    const auto& table = cat.table();
    const std::size_t r = table.size();
    LinkageGraph lg;
    lg.labels = table.labels();
    lg.mult.assign(r, std::vector<long>(r, 0));

    std::vector<std::vector<std::vector<long>>> simple_char(r);
    std::vector<Cyc> simple_omega(r);
    std::vector<GradedModule> vermas;
    for (std::size_t s = 0; s < r; ++s) {
        vermas.push_back(GradedModule::baby_verma(cat, p, s));
        const GradedModule l = GradedModule::simple_quotient(vermas.back());
        simple_char[s] = graded_character(l);
        simple_omega[s] = lowest_omega(l);
        lg.simple_dims.push_back(l.total_dim());
        lg.verma_dims.push_back(vermas.back().total_dim());
    }

    for (std::size_t s = 0; s < r; ++s) {
        auto rest = graded_character(vermas[s]);
        const Cyc om = lowest_omega(vermas[s]);
        for (std::size_t k = 0; k < rest.size(); ++k) {
            for (std::size_t tau = 0; tau < r; ++tau) {
                const long m = rest[k][tau];
                if (m < 0)
                    throw std::logic_error("unidentifiable composition factor in degree " + std::to_string(k) +
                                           " of " + vermas[s].name);
                if (m == 0) continue;
                if (simple_omega[tau] != om)
                    throw std::logic_error("composition factor " + table[tau].label + " of " + vermas[s].name +
                                           " has a different Euler scalar");
                for (std::size_t j = 0; j < simple_char[tau].size(); ++j) {
                    if (k + j >= rest.size()) {
                        if (std::any_of(simple_char[tau][j].begin(), simple_char[tau][j].end(),
                                        [](long v) { return v != 0; }))
                            throw std::logic_error("composition factor exceeds the top degree of " + vermas[s].name);
                        continue;
                    }
                    for (std::size_t u = 0; u < r; ++u) rest[k + j][u] -= m * simple_char[tau][j][u];
                }
                lg.mult[s][tau] += m;
                lg.factors.push_back({s, tau, k});
            }
        }
        std::size_t total = 0;
        for (std::size_t tau = 0; tau < r; ++tau)
            total += static_cast<std::size_t>(lg.mult[s][tau]) * lg.simple_dims[tau];
        if (total != cat.g().order() * table[s].dim)
            throw std::logic_error("composition factors of " + vermas[s].name + " do not add up");
        if (lg.mult[s][s] < 1) throw std::logic_error("head missing from " + vermas[s].name);
    }
    return lg;
}

std::string to_string(CellPartition::Provenance p) {
    switch (p) {
        case CellPartition::Provenance::Linkage: return "linkage";
        case CellPartition::Provenance::Theta: return "theta";
        case CellPartition::Provenance::Both: return "both";
    }
    return "?";
}

std::size_t CellPartition::block_of(const std::string& label) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::find(blocks[b].begin(), blocks[b].end(), label) != blocks[b].end()) return b;
    throw std::out_of_range("label not in any cell: " + label);
}

CellPartition cm_cells(const Catalog& cat, const Params& p, int central_degree) {
    const auto& table = cat.table();
    const std::size_t r = table.size();
    CellPartition cp;
    cp.c = c_text(p);

    const LinkageGraph lg = decomposition_numbers(cat, p);
    UnionFind uf(r);
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t tau = 0; tau < r; ++tau)
            if (lg.mult[s][tau] > 0) uf.unite(s, tau);
    std::vector<std::size_t> link_key(r);
    for (std::size_t s = 0; s < r; ++s) link_key[s] = uf.find(s);
    cp.linkage_blocks = blocks_from_keys(lg.labels, link_key);

    PbwAlgebra h(cat, p);
    const auto central = find_central_elements(h, central_degree);
    std::vector<std::vector<Cyc>> scalars(r);
    for (std::size_t s = 0; s < r; ++s) {
        const GradedModule bv = GradedModule::baby_verma(cat, p, s);
        for (const auto& z : central) {
            auto v = central_scalar(h, z, bv);
            if (!v) throw std::logic_error("central element not scalar on " + bv.name);
            scalars[s].push_back(*v);
        }
    }
    for (const auto& z : central) {
        int d = 0;
        for (const auto& [m, c] : z) d = std::max(d, m.degree());
        cp.central_element_degrees.push_back(d);
    }
    std::vector<std::size_t> theta_key(r);
    for (std::size_t s = 0; s < r; ++s) {
        theta_key[s] = s;
        for (std::size_t o = 0; o < s; ++o)
            if (scalars[o] == scalars[s]) {
                theta_key[s] = theta_key[o];
                break;
            }
    }
    cp.theta_blocks = blocks_from_keys(lg.labels, theta_key);
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t o = 0; o < r; ++o)
            if (link_key[s] == link_key[o] && theta_key[s] != theta_key[o]) cp.linkage_refines_theta = false;

    Matrix sc(central.size(), r);
    for (std::size_t z = 0; z < central.size(); ++z)
        for (std::size_t s = 0; s < r; ++s) sc(z, s) = scalars[s][z];
    cp.central_probe_dim = sc.rank();
    cp.probe_reaches_order = cp.central_probe_dim == cat.g().order();

    if (same_partition(cp.linkage_blocks, cp.theta_blocks)) {
        cp.blocks = cp.theta_blocks;
        cp.provenance = CellPartition::Provenance::Both;
    } else {
        cp.blocks = cp.linkage_blocks;
        cp.provenance = CellPartition::Provenance::Linkage;
    }
    return cp;
}

std::vector<CellPartition> cell_sweep(const Catalog& cat, const std::vector<Cyc>& grid, int central_degree,
                                      std::size_t threads) {
    std::vector<CellPartition> out(grid.size());
    const std::size_t workers = std::max<std::size_t>(1, threads);
    for (std::size_t start = 0; start < grid.size(); start += workers) {
        std::vector<std::future<CellPartition>> jobs;
        for (std::size_t k = start; k < std::min(grid.size(), start + workers); ++k)
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, k] {
                return cm_cells(cat, Params::uniform(cat.g(), Cyc(0), grid[k]), central_degree);
            }));
        for (std::size_t k = 0; k < jobs.size(); ++k) out[start + k] = jobs[k].get();
    }
    return out;
}

CellConstituents cell_constituents_check(const Catalog& cat, const Params& p, const CellPartition& cells) {
    const auto& table = cat.table();
    const std::size_t det_h = table.det_h_index(), det_hstar = table.dual(det_h);
    CellConstituents out;
    for (std::size_t s = 0; s < table.size(); ++s) {
        const GradedModule l = GradedModule::simple_quotient(GradedModule::baby_verma(cat, p, s));
        CohomologyEngine e(l);
        const auto tot = e.compute(ComplexKind::HStarCohomology).total();
        CellConstituents::Row row;
        row.sigma = table[s].label;
        const std::size_t cell = cells.block_of(table[s].label);
        for (std::size_t nu = 0; nu < tot.size(); ++nu) {
            if (tot[nu] == 0) continue;
            row.constituents.push_back(table[nu].label);
            const std::size_t twisted = table.tensor_linear(nu, det_hstar);
            if (cells.block_of(table[twisted].label) != cell) row.same_cell = false;
        }
        row.top_wedge = tot[table.tensor_linear(s, det_h)] > 0;
        out.same_cell = out.same_cell && row.same_cell;
        out.top_wedge_present = out.top_wedge_present && row.top_wedge;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace cherednik
