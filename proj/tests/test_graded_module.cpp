#include "cherednik/graded_module.hpp"
#include "doctest.h"

using namespace cherednik;

namespace {

Catalog cat(const std::string& s) { return load_catalog(GroupSpec::parse(s)); }

GradedModule standard(const Catalog& c, const std::string& sigma, Cyc t, Cyc cc, std::size_t window) {
    return GradedModule::standard(c, Params::uniform(c.g(), t, cc), c.table().require(sigma), window);
}

void check_structure(const GradedModule& m) {
    CHECK(ModuleChecks::defining_relation(m) == "");
    CHECK(ModuleChecks::equivariance(m) == "");
    CHECK(ModuleChecks::commutativity(m) == "");
    CHECK(ModuleChecks::representation(m) == "");
}

}  // namespace

TEST_CASE("rank one y-action against the closed form") {
    Catalog z2 = cat("cyclic:2");
    for (Cyc c : {Cyc(0), Cyc(1, 5), Cyc(3, 2), Cyc(-2, 3)}) {
        GradedModule m = standard(z2, "triv", Cyc(1), c, 8);
        for (std::size_t k = 1; k <= 8; ++k) {
            // [y, x] = t - c s gives y x^k = (k - c [k odd]) x^{k-1}
            const long parity = k % 2 ? 1 : 0;
            CHECK(m.y(k, 0)(0, 0) == Cyc(static_cast<long>(k)) - c * Cyc(parity));
        }
    }
    GradedModule m0 = standard(z2, "triv", Cyc(1), Cyc(0), 5);
    CHECK(is_zero(m0.y(0, 0).column(0)) == true);
    CHECK(m0.y(1, 0)(0, 0) == Cyc(1));
}

TEST_CASE("lowest Euler eigenvalues") {
    Catalog z2 = cat("cyclic:2");
    const Cyc c(1, 5);
    CHECK(euler_lowest(z2, Params::uniform(z2.g(), 1, c), z2.table().require("triv")) == Cyc(1) - c);
    CHECK(euler_lowest(z2, Params::uniform(z2.g(), 1, c), z2.table().require("sign")) == Cyc(1) + c);
    for (const char* name : {"cyclic:3", "dihedral:4", "symmetric:4"}) {
        Catalog g = cat(name);
        for (std::size_t s = 0; s < g.table().size(); ++s)
            CHECK(euler_lowest(g, Params::uniform(g.g(), 1, 0), s) == Cyc(static_cast<long>(g.g().rank())));
    }
}

TEST_CASE("standard modules satisfy the algebra relations and Omega grading") {
    struct Case {
        const char* group;
        std::size_t window;
    };
    for (Case cs : {Case{"cyclic:2", 5}, Case{"cyclic:3", 5}, Case{"cyclic:4", 5}, Case{"dihedral:3", 3},
                    Case{"dihedral:4", 3}, Case{"symmetric:3", 3}, Case{"symmetric:4", 2}}) {
        Catalog g = cat(cs.group);
        // unequal parameters on different reflection classes where available
        Params p = Params::uniform(g.g(), Cyc(1), Cyc(1, 5));
        for (std::size_t i = 0; i < p.c.size(); ++i) p.c[i] = Cyc(static_cast<long>(i + 1), 5);
        for (std::size_t s = 0; s < g.table().size(); ++s) {
            CAPTURE(cs.group);
            CAPTURE(g.table()[s].label);
            GradedModule m = GradedModule::standard(g, p, s, cs.window);
            check_structure(m);
            auto om = ModuleChecks::omega_scalars(m);
            CHECK(om[0] == euler_lowest(g, p, s));
            for (std::size_t k = 1; k < om.size(); ++k) CHECK(om[k] - om[k - 1] == Cyc(2) * p.t);
        }
    }
}

TEST_CASE("finite-dimensional L(triv) for cyclic 2 at c = 3") {
    Catalog z2 = cat("cyclic:2");
    GradedModule m = standard(z2, "triv", 1, Cyc(3), 6);
    GradedModule l = GradedModule::simple_quotient(m);
    CHECK(l.finite());
    CHECK(l.window() == 2);
    CHECK(l.total_dim() == 3);
    check_structure(l);
    GradedModule again = GradedModule::simple_quotient(l);
    CHECK(again.total_dim() == 3);
    CHECK(again.finite());

    for (Cyc c : {Cyc(1, 5), Cyc(3, 2), Cyc(2)}) {
        GradedModule generic = GradedModule::simple_quotient(standard(z2, "triv", 1, c, 6));
        CHECK_FALSE(generic.finite());
        for (std::size_t k = 0; k <= 6; ++k) CHECK(generic.dim(k) == 1);
    }
    GradedModule five = GradedModule::simple_quotient(standard(z2, "triv", 1, Cyc(5), 8));
    CHECK(five.total_dim() == 5);
}

TEST_CASE("baby Verma modules") {
    for (const char* name : {"cyclic:2", "cyclic:3", "cyclic:4", "dihedral:3", "dihedral:4", "symmetric:3"}) {
        Catalog g = cat(name);
        Params p = Params::uniform(g.g(), Cyc(0), Cyc(1, 3));
        for (std::size_t s = 0; s < g.table().size(); ++s) {
            CAPTURE(name);
            GradedModule b = GradedModule::baby_verma(g, p, s);
            CHECK(b.finite());
            CHECK(b.total_dim() == g.g().order() * g.table()[s].dim);
            check_structure(b);
            GradedModule head = GradedModule::simple_quotient(b);
            CHECK(head.total_dim() <= b.total_dim());
            check_structure(head);
        }
    }
    Catalog d3 = cat("dihedral:3");
    CHECK(GradedModule::baby_verma(d3, Params::uniform(d3.g(), 0, 1), d3.table().require("refl")).total_dim() == 12);
    CHECK_THROWS_AS(GradedModule::baby_verma(d3, Params::uniform(d3.g(), 1, 1), 0), std::invalid_argument);

    Catalog z2 = cat("cyclic:2");
    for (Cyc c : {Cyc(0), Cyc(1, 2), Cyc(2)}) {
        GradedModule b = GradedModule::baby_verma(z2, Params::uniform(z2.g(), 0, c), 0);
        CHECK(b.window() == 1);
        // x^2 kills the lowest vector
        CHECK(b.x(1, 0) * b.x(0, 0) == Matrix(0, 1));
    }
}

TEST_CASE("contravariant forms and unitarity") {
    Catalog z2 = cat("cyclic:2");
    GradedModule m = standard(z2, "triv", 1, 0, 6);
    ContravariantForm f = contravariant_form(m);
    long fact = 1;
    for (std::size_t k = 0; k <= 6; ++k) {
        if (k > 0) fact *= static_cast<long>(k);
        CHECK(f.gram[k](0, 0) == Cyc(fact));
    }
    for (bool b : unitary_blocks(f)) CHECK(b);

    GradedModule bad = standard(z2, "triv", 1, Cyc(3), 5);
    ContravariantForm fb = contravariant_form(bad);
    CHECK(fb.gram[3](0, 0).is_zero());
    auto u = unitary_blocks(fb);
    CHECK(u[0]);
    CHECK_FALSE(u[3]);

    // invariance identities on a rank two example
    Catalog d3 = cat("dihedral:3");
    for (Cyc c : {Cyc(1, 7), Cyc(-1, 3)}) {
        GradedModule md = standard(d3, "refl", 1, c, 3);
        ContravariantForm fd = contravariant_form(md);
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(fd.gram[k + 1] * md.x(k, i) == md.y(k + 1, i).adjoint() * fd.gram[k]);
            for (std::size_t w = 0; w < d3.g().order(); ++w)
                CHECK(md.w(k, w).adjoint() * fd.gram[k] * md.w(k, w) == fd.gram[k]);
        }
        CHECK(positive_definite(fd.gram[0]));
    }
    // quotient forms are nondegenerate
    GradedModule l = GradedModule::simple_quotient(bad);
    ContravariantForm fl = contravariant_form(l);
    for (const auto& g : fl.gram) CHECK(!g.det().is_zero());

    Params complex_c = Params::uniform(z2.g(), 1, root_of_unity(4, 1));
    CHECK_THROWS_AS(contravariant_form(GradedModule::standard(z2, complex_c, 0, 2)), std::invalid_argument);
    CHECK(positive_definite(Matrix(0, 0)));
}

TEST_CASE("contravariant forms in non-unitary coordinates") {
    Catalog s4 = cat("symmetric:4");
    const Matrix& P = s4.g().dual_form();
    CHECK(P != Matrix::identity(3));
    GradedModule m = standard(s4, "refl", 1, Cyc(1, 5), 2);
    ContravariantForm f = contravariant_form(m);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix yj(m.dim(k), m.dim(k + 1));
            for (std::size_t i = 0; i < 3; ++i) yj += P(j, i) * m.y(k + 1, i);
            CHECK(f.gram[k + 1] * m.x(k, j) == yj.adjoint() * f.gram[k]);
        }
    for (bool b : unitary_blocks(f)) CHECK(b);
}

TEST_CASE("unitarity scan") {
    Catalog z2 = cat("cyclic:2");
    const std::vector<Cyc> grid{Cyc(1, 5), Cyc(1, 2), Cyc(3)};
    const auto u = unitary_parameters(z2, z2.table().require("triv"), Cyc(1), grid, 6);
    REQUIRE(u.size() == 2);
    CHECK(u[0] == Cyc(1, 5));
    CHECK(u[1] == Cyc(1, 2));
    // at c = 3 the sign module stays unitary: y x^k = (k + 3[k odd]) x^{k-1}
    CHECK(unitary_parameters(z2, z2.table().require("sign"), Cyc(1), {Cyc(3)}, 6).size() == 1);
}

TEST_CASE("rescaling parameters") {
    Catalog z2 = cat("cyclic:2");
    GradedModule m = standard(z2, "triv", 1, Cyc(1, 5), 5);
    GradedModule r = GradedModule::rescale(m, Cyc(2));
    GradedModule direct = standard(z2, "triv", 4, Cyc(4, 5), 5);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(r.y(k, 0) == direct.y(k, 0));
    CHECK(r.params.t == Cyc(4));
    GradedModule same = GradedModule::rescale(m, Cyc(1));
    CHECK(same.y(3, 0) == m.y(3, 0));
    CHECK(Params::uniform(z2.g(), 0, 1).rescaled(Cyc(3)).t.is_zero());
    CHECK_THROWS_AS(Params::uniform(z2.g(), 1, 1).rescaled(Cyc(0)), std::invalid_argument);
}

TEST_CASE("direct sums") {
    Catalog z2 = cat("cyclic:2");
    GradedModule l = GradedModule::simple_quotient(standard(z2, "triv", 1, Cyc(3), 6));
    GradedModule ms = standard(z2, "sign", 1, Cyc(3), 6);
    GradedModule s = GradedModule::direct_sum(l, ms);
    CHECK_FALSE(s.finite());
    CHECK(s.window() == 6);
    CHECK(s.dim(0) == 2);
    CHECK(s.dim(4) == 1);
    check_structure(s);
}
