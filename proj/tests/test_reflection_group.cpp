#include "cherednik/catalog.hpp"
#include "doctest.h"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>

using namespace cherednik;

namespace {

Catalog cat(const std::string& s) { return load_catalog(GroupSpec::parse(s)); }

}  // namespace

TEST_CASE("group orders and reflection counts") {
    struct Row {
        const char* name;
        std::size_t order, reflections, reflection_classes, irreps;
    };
    // Brute-force expectations: |G(m,m,2)| = 2m with m reflections.
    for (Row r : {Row{"cyclic:2", 2, 1, 1, 2}, Row{"cyclic:3", 3, 2, 2, 3}, Row{"cyclic:4", 4, 3, 3, 4},
                  Row{"dihedral:3", 6, 3, 1, 3}, Row{"dihedral:4", 8, 4, 2, 5}, Row{"dihedral:5", 10, 5, 1, 4},
                  Row{"symmetric:3", 6, 3, 1, 3}, Row{"symmetric:4", 24, 6, 1, 5}}) {
        CAPTURE(r.name);
        Catalog c = cat(r.name);
        CHECK(c.g().order() == r.order);
        CHECK(c.g().reflections().size() == r.reflections);
        CHECK(c.g().reflection_classes().size() == r.reflection_classes);
        CHECK(c.table().size() == r.irreps);
        CHECK(c.g().generated_by_reflections());
    }
}

TEST_CASE("cyclic 4 reflection eigenvalues") {
    Catalog c = cat("cyclic:4");
    std::vector<std::string> lambdas;
    for (const auto& r : c.g().reflections()) lambdas.push_back(r.lambda.to_string());
    std::sort(lambdas.begin(), lambdas.end());
    std::vector<std::string> expect = {Cyc(-1).to_string(), root_of_unity(4, 1).to_string(), root_of_unity(4, 3).to_string()};
    std::sort(expect.begin(), expect.end());
    CHECK(lambdas == expect);
}

TEST_CASE("reflection data invariants") {
    for (const char* name : {"cyclic:3", "dihedral:4", "dihedral:5", "symmetric:4"}) {
        CAPTURE(name);
        Catalog c = cat(name);
        const auto& g = c.g();
        const std::size_t n = g.rank();
        for (const auto& r : g.reflections()) {
            const Matrix& s = g.element(r.element);
            // lambda two ways: determinant and eigenvalue on alpha_check
            CHECK(s * r.alpha_check == r.lambda * r.alpha_check);
            CHECK(r.lambda == s.det());
            CHECK(r.lambda != Cyc(1));
            Matrix fixed = (Matrix::identity(n) - s).kernel();
            for (std::size_t j = 0; j < fixed.cols(); ++j) CHECK(dot(fixed.column(j), r.alpha).is_zero());
            // s acts on alpha by lambda^{-1}
            CHECK(g.dual(r.element) * r.alpha == r.lambda.inverse() * r.alpha);
        }
        // invariant pairing, associativity on samples
        testsupport::Gen gen(3);
        for (int t = 0; t < 30; ++t) {
            std::size_t a = static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.order()) - 1));
            std::size_t b = static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.order()) - 1));
            std::size_t d = static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.order()) - 1));
            CHECK(g.mul(g.mul(a, b), d) == g.mul(a, g.mul(b, d)));
            CHECK((g.element(a).transpose() * g.dual(a)).is_identity());
            const auto& w = g.reflection_word(a);
            std::size_t prod = 0;
            for (auto r : w) prod = g.mul(prod, g.reflections()[r].element);
            CHECK(prod == a);
        }
        // c must be constant on classes: every reflection class label is used
        for (const auto& r : g.reflections()) CHECK(g.reflection_classes()[r.cls] == g.class_of(r.element));
    }
}

TEST_CASE("decompositions") {
    Catalog z2 = cat("cyclic:2");
    std::vector<Matrix> regular;
    for (std::size_t w = 0; w < 2; ++w) {
        Matrix m(2, 2);
        for (std::size_t v = 0; v < 2; ++v) m(z2.g().mul(w, v), v) = Cyc(1);
        regular.push_back(m);
    }
    CHECK(z2.table().decompose(regular) == std::vector<long>{1, 1});

    Catalog d3 = cat("dihedral:3");
    std::vector<Matrix> wedge;
    for (std::size_t w = 0; w < d3.g().order(); ++w) {
        Matrix g = d3.g().element(w);
        wedge.push_back(Matrix::direct_sum(Matrix::direct_sum(Matrix::identity(1), g), Matrix{{g.det()}}));
    }
    auto m = d3.table().decompose(wedge);
    CHECK(m[d3.table().require("triv")] == 1);
    CHECK(m[d3.table().require("refl")] == 1);
    CHECK(m[d3.table().require("det")] == 1);
    CHECK(d3.table().det_h_index() == d3.table().require("det"));

    std::vector<Matrix> empty(d3.g().order());
    CHECK(d3.table().decompose(empty) == std::vector<long>{0, 0, 0});

    for (const char* name : {"cyclic:4", "dihedral:4", "symmetric:4"}) {
        Catalog c = cat(name);
        for (std::size_t i = 0; i < c.table().size(); ++i) {
            auto v = c.table().decompose(c.table()[i].matrices);
            for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[j] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("symmetric 3 and dihedral 3 share a character table") {
    Catalog s3 = cat("symmetric:3"), d3 = cat("dihedral:3"), z6 = load_catalog(GroupSpec{"cyclic", 6, {}});
    CHECK(same_character_table(s3.g(), s3.table(), d3.g(), d3.table()));
    CHECK_FALSE(same_character_table(s3.g(), s3.table(), z6.g(), z6.table()));
}

TEST_CASE("generation caps and errors") {
    CHECK_THROWS_AS(load_catalog(GroupSpec::parse("cyclic:5"), 3), CapExceeded);
    GroupSpec infinite{"matrix", 0, {Matrix{{Cyc(2)}}}};
    CHECK_THROWS_AS(load_catalog(infinite, 48), CapExceeded);
    GroupSpec singular{"matrix", 0, {Matrix{{Cyc(0)}}}};
    CHECK_THROWS_AS(load_catalog(singular, 48), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("exceptional:4"), std::invalid_argument);
    CHECK_THROWS_AS(load_catalog(GroupSpec::parse("symmetric:5")), std::invalid_argument);
    GroupSpec mat{"matrix", 0, {Matrix{{Cyc(-1)}}}};
    Catalog c = load_catalog(mat, 48);
    CHECK(c.g().order() == 2);
    CHECK_THROWS_AS(c.table(), std::invalid_argument);
}

TEST_CASE("catalog disk cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "cherednik-cache-test";
    std::filesystem::remove_all(dir);
    Catalog first = load_catalog(GroupSpec::parse("dihedral:4"), 48, dir);
    std::size_t files = 0;
    std::filesystem::path written;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        ++files;
        written = e.path();
    }
    CHECK(files == 1);
    Catalog second = load_catalog(GroupSpec::parse("dihedral:4"), 48, dir);
    CHECK(second.g().order() == first.g().order());
    CHECK(second.table().labels() == first.table().labels());
    // A tampered cache entry is rejected.
    std::string text;
    {
        std::ifstream in(written);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    auto pos = text.find("\"eps1\"");
    REQUIRE(pos != std::string::npos);
    auto chi = text.find("\"character\"", pos);
    auto one = text.find("\"1\"", chi);
    text.replace(one, 3, "\"2\"");
    {
        std::ofstream out(written);
        out << text;
    }
    CHECK_THROWS(load_catalog(GroupSpec::parse("dihedral:4"), 48, dir));
    std::filesystem::remove_all(dir);
}
