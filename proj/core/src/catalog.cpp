#include "cherednik/catalog.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace cherednik {

using nlohmann::json;

namespace {

constexpr const char* kCacheSchema = "cherednik-catalog/1";

struct Blueprint {
    std::vector<Matrix> generators;
    std::vector<std::pair<std::string, std::vector<Matrix>>> irreps;  // generator images
};

Matrix m1(const Cyc& x) { return Matrix{{x}}; }

Blueprint cyclic_blueprint(int m) {
    if (m < 2) throw std::invalid_argument("cyclic group needs m >= 2");
    Blueprint b;
    b.generators = {m1(root_of_unity(m, 1))};
    for (int j = 0; j < m; ++j) {
        std::string label = j == 0 ? "triv" : (m == 2 ? "sign" : "chi" + std::to_string(j));
        b.irreps.push_back({label, {m1(root_of_unity(m, j))}});
    }
    return b;
}

Blueprint dihedral_blueprint(int m) {
    if (m < 2) throw std::invalid_argument("dihedral group needs m >= 2");
    Blueprint b;
    auto rot = [&](int j) { return Matrix{{root_of_unity(m, j), Cyc(0)}, {Cyc(0), root_of_unity(m, -j)}}; };
    const Matrix s{{Cyc(0), Cyc(1)}, {Cyc(1), Cyc(0)}};
    b.generators = {rot(1), s};
    b.irreps.push_back({"triv", {m1(1), m1(1)}});
    b.irreps.push_back({"det", {m1(1), m1(-1)}});
    if (m % 2 == 0) {
        b.irreps.push_back({"eps1", {m1(-1), m1(1)}});
        b.irreps.push_back({"eps2", {m1(-1), m1(-1)}});
    }
    for (int j = 1; 2 * j < m; ++j) b.irreps.push_back({j == 1 ? "refl" : "rho" + std::to_string(j), {rot(j), s}});
    return b;
}

// Simple reflection s_i in the basis of simple roots of type A_{n-1}.
Matrix simple_reflection(int n, int i) {
    const std::size_t r = static_cast<std::size_t>(n - 1);
    Matrix m = Matrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) {
        long a = 0;
        if (j == static_cast<std::size_t>(i)) a = 2;
        else if (j + 1 == static_cast<std::size_t>(i) || j == static_cast<std::size_t>(i) + 1) a = -1;
        if (a != 0) m(static_cast<std::size_t>(i), j) -= Cyc(a);
    }
    return m;
}

Blueprint symmetric_blueprint(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("symmetric group supported for n = 3, 4");
    Blueprint b;
    for (int i = 0; i < n - 1; ++i) b.generators.push_back(simple_reflection(n, i));
    const std::size_t k = b.generators.size();
    b.irreps.push_back({"triv", std::vector<Matrix>(k, m1(1))});
    b.irreps.push_back({"sign", std::vector<Matrix>(k, m1(-1))});
    b.irreps.push_back({"refl", b.generators});
    if (n == 4) {
        std::vector<Matrix> neg;
        for (const auto& g : b.generators) neg.push_back(-g);
        b.irreps.push_back({"refl_sign", neg});
        // Through S_4 -> S_3, s1 and s3 both map to the first transposition.
        const Matrix t1 = simple_reflection(3, 0), t2 = simple_reflection(3, 1);
        b.irreps.push_back({"rho2", {t1, t2, t1}});
    }
    return b;
}

Blueprint blueprint(const GroupSpec& spec) {
    if (spec.type == "cyclic") return cyclic_blueprint(spec.m);
    if (spec.type == "dihedral") return dihedral_blueprint(spec.m);
    if (spec.type == "symmetric") return symmetric_blueprint(spec.m);
    if (spec.type == "matrix") {
        if (spec.generators.empty()) throw std::invalid_argument("matrix group needs generators");
        return Blueprint{spec.generators, {}};
    }
    throw std::invalid_argument("unsupported group type '" + spec.type + "'");
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    std::vector<Vector> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        Vector v;
        for (const auto& e : r) v.push_back(Cyc::parse(e.get<std::string>()));
        cols = v.size();
        rows.push_back(std::move(v));
    }
    return Matrix::from_rows(rows, cols);
}

Catalog build(const GroupSpec& spec, const Blueprint& b, std::size_t cap) {
    Catalog c;
    c.name = spec.name();
    auto g = std::make_shared<ReflectionGroup>(ReflectionGroup::generate(b.generators, cap));
    c.group = g;
    if (!b.irreps.empty()) {
        std::vector<Irrep> irreps;
        for (const auto& [label, images] : b.irreps) irreps.push_back(IrrepTable::from_generators(*g, label, images));
        auto t = std::make_shared<IrrepTable>(*g, std::move(irreps));
        t->verify();
        c.irreps = t;
    }
    return c;
}

json to_cache_json(const GroupSpec& spec, const Blueprint& b, const Catalog& c) {
    json j;
    j["schema"] = kCacheSchema;
    j["key"] = spec.canonical();
    j["name"] = c.name;
    j["rank"] = c.group->rank();
    j["order"] = c.group->order();
    json gens = json::array();
    for (const auto& m : b.generators) gens.push_back(matrix_json(m));
    j["generators"] = gens;
    json elems = json::array();
    for (const auto& m : c.group->elements()) elems.push_back(matrix_json(m));
    j["elements"] = elems;
    json irreps = json::array();
    if (c.irreps) {
        for (std::size_t i = 0; i < b.irreps.size(); ++i) {
            json ir;
            ir["label"] = b.irreps[i].first;
            ir["dim"] = (*c.irreps)[i].dim;
            json imgs = json::array();
            for (const auto& m : b.irreps[i].second) imgs.push_back(matrix_json(m));
            ir["generator_images"] = imgs;
            json chi = json::array();
            for (const auto& x : (*c.irreps)[i].character) chi.push_back(x.to_string());
            ir["character"] = chi;
            irreps.push_back(ir);
        }
    }
    j["irreps"] = irreps;
    return j;
}

// Rebuild from the cached generators and images, then insist the stored
// element list and characters agree with the rebuilt ones.
Catalog from_cache_json(const GroupSpec& spec, const json& j, std::size_t cap) {
    if (j.at("schema") != kCacheSchema || j.at("key") != spec.canonical())
        throw std::runtime_error("catalog cache entry does not match the requested group");
    Blueprint b;
    for (const auto& m : j.at("generators")) b.generators.push_back(matrix_from_json(m));
    for (const auto& ir : j.at("irreps")) {
        std::vector<Matrix> imgs;
        for (const auto& m : ir.at("generator_images")) imgs.push_back(matrix_from_json(m));
        b.irreps.push_back({ir.at("label").get<std::string>(), imgs});
    }
    Catalog c = build(spec, b, cap);
    const auto& elems = j.at("elements");
    if (elems.size() != c.group->order()) throw std::runtime_error("catalog cache: element count mismatch");
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (matrix_from_json(elems[i]) != c.group->element(i)) throw std::runtime_error("catalog cache: element mismatch");
    if (c.irreps) {
        const auto& irs = j.at("irreps");
        for (std::size_t i = 0; i < irs.size(); ++i) {
            const auto& chi = irs[i].at("character");
            for (std::size_t w = 0; w < chi.size(); ++w)
                if (Cyc::parse(chi[w].get<std::string>()) != (*c.irreps)[i].character[w])
                    throw std::runtime_error("catalog cache: character mismatch for " + (*c.irreps)[i].label);
        }
    }
    return c;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("group must look like 'cyclic:2', got '" + text + "'");
    GroupSpec s;
    s.type = text.substr(0, colon);
    try {
        s.m = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group parameter in '" + text + "'");
    }
    if (s.type != "cyclic" && s.type != "dihedral" && s.type != "symmetric")
        throw std::invalid_argument("unsupported group type '" + s.type + "'");
    return s;
}

std::string GroupSpec::name() const {
    if (type == "matrix") return "matrix";
    return type + ":" + std::to_string(m);
}

std::string GroupSpec::canonical() const {
    std::ostringstream os;
    os << type << ':' << m;
    for (const auto& g : generators) os << '|' << g.to_string();
    return os.str();
}

const IrrepTable& Catalog::table() const {
    if (!irreps) throw std::invalid_argument("group " + name + " has no irreducible representation table");
    return *irreps;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

Catalog load_catalog(const GroupSpec& spec, std::size_t cap, const std::optional<std::filesystem::path>& cache_dir) {
    const Blueprint b = blueprint(spec);
    if (!cache_dir) return build(spec, b, cap);

    std::ostringstream fname;
    fname << (spec.type == "matrix" ? std::string("matrix") : spec.type + "-" + std::to_string(spec.m)) << '-' << std::hex
          << fnv1a(spec.canonical()) << ".json";
    const auto path = *cache_dir / fname.str();
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        json j = json::parse(in);
        return from_cache_json(spec, j, cap);
    }
    Catalog c = build(spec, b, cap);
    std::filesystem::create_directories(*cache_dir);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << to_cache_json(spec, b, c).dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
    return c;
}

}  // namespace cherednik
