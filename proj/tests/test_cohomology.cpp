#include "cherednik/cohomology.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cherednik;

namespace {

Catalog cat(const std::string& s) { return load_catalog(GroupSpec::parse(s)); }

GradedModule standard(const Catalog& c, const std::string& sigma, Cyc t, Cyc cc, std::size_t window) {
    return GradedModule::standard(c, Params::uniform(c.g(), t, cc), c.table().require(sigma), window);
}

std::vector<long> unit(std::size_t size, std::size_t i) {
    std::vector<long> v(size, 0);
    v[i] = 1;
    return v;
}

void check_complexes(const CohomologyEngine& e) {
    CHECK(ComplexChecks::squares_zero(e.space()) == "");
    CHECK(ComplexChecks::equivariance(e.space()) == "");
    CHECK(ComplexChecks::half_dirac_identification(e.space()) == "");
    CHECK(ComplexChecks::ur_split(e) == "");
    CHECK(dirac_square_identity(e.space()) == "");
}

bool same_entries(const CohomologyReport& a, const CohomologyReport& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].weight != b.entries[i].weight || a.entries[i].degree != b.entries[i].degree ||
            a.entries[i].mult != b.entries[i].mult)
            return false;
    return true;
}

}  // namespace

TEST_CASE("Koszul differentials on rank one") {
    Catalog z2 = cat("cyclic:2");
    GradedModule m = standard(z2, "triv", 1, 0, 6);
    CohomologyEngine e(m);
    for (long k = 0; k < 6; ++k) {
        // d(x^k (x) 1) = x^{k+1} (x) y
        Matrix d = e.space().koszul_d(k, 0);
        CHECK(d == Matrix{{Cyc(1)}});
        // partial(x^k (x) y) = -k x^{k-1} at c = 0
        if (k > 0) CHECK(e.space().koszul_partial(k, 1) == Matrix{{Cyc(-k)}});
    }
    CHECK(e.space().koszul_d(2, 1).rows() == 0);
    CHECK(e.space().koszul_partial(2, 0).rows() == 0);
    CHECK_THROWS_AS(e.space().koszul_d(6, 0), std::out_of_range);
}

TEST_CASE("complex identities on standard, simple and baby Verma modules") {
    std::vector<GradedModule> mods;
    Catalog z2 = cat("cyclic:2"), z3 = cat("cyclic:3"), d3 = cat("dihedral:3"), d4 = cat("dihedral:4");
    mods.push_back(standard(z2, "sign", 1, Cyc(1, 5), 5));
    mods.push_back(GradedModule::simple_quotient(standard(z2, "triv", 1, 3, 6)));
    mods.push_back(standard(z3, "chi1", 1, Cyc(1, 5), 4));
    mods.push_back(standard(d3, "refl", 1, Cyc(1, 5), 3));
    mods.push_back(standard(d4, "eps1", 1, Cyc(2, 7), 3));
    mods.push_back(GradedModule::baby_verma(d3, Params::uniform(d3.g(), 0, 1), d3.table().require("refl")));
    for (const auto& m : mods) {
        CAPTURE(m.name);
        CohomologyEngine e(m);
        check_complexes(e);
        CHECK(TheoremChecks::poincare(e) == "");
        CHECK(TheoremChecks::dx_identification(e) == "");
        CHECK(TheoremChecks::embedding(e).holds);
        CHECK(omega_semisimple(m));
    }
}

TEST_CASE("basis change leaves the operators unchanged") {
    testsupport::Gen gen(7);
    Catalog d3 = cat("dihedral:3");
    GradedModule m = standard(d3, "refl", 1, Cyc(1, 3), 3);
    CohomologyEngine e(m);
    for (int trial = 0; trial < 3; ++trial) {
        Matrix A = gen.matrix(2, 2, 3);
        if (A.det().is_zero()) continue;
        CHECK(ComplexChecks::basis_change(e.space(), A) == "");
    }
    CHECK(ComplexChecks::basis_change(e.space(), Matrix{{Cyc(2), Cyc(1)}, {Cyc(-1), Cyc(3)}}) == "");
    CHECK_THROWS_AS(ComplexChecks::basis_change(e.space(), Matrix{{Cyc(1), Cyc(1)}, {Cyc(1), Cyc(1)}}),
                    std::invalid_argument);
}

TEST_CASE("standard modules: h*-homology and Dirac cohomology") {
    for (const char* name : {"cyclic:2", "cyclic:3", "cyclic:4", "dihedral:3", "dihedral:4"}) {
        Catalog g = cat(name);
        const std::size_t n = g.g().rank();
        for (std::size_t s = 0; s < g.table().size(); ++s) {
            CAPTURE(name);
            CAPTURE(g.table()[s].label);
            GradedModule m = GradedModule::standard(g, Params::uniform(g.g(), 1, Cyc(1, 5)), s, n == 1 ? 6 : 4);
            CohomologyEngine e(m);
            REQUIRE(e.support_bound().has_value());
            auto ho = e.compute(ComplexKind::HStarHomology);
            CHECK(ho.complete);
            CHECK(ho.in_degree(0) == unit(g.table().size(), s));
            for (std::size_t i = 1; i <= n; ++i) CHECK(ho.in_degree(i) == std::vector<long>(g.table().size(), 0));

            auto hd = e.compute(ComplexKind::Dirac);
            CHECK(hd.complete);
            CHECK(hd.total() == unit(g.table().size(), e.spinor().twist_by_inverse_chi(g.table(), s)));
            REQUIRE(hd.entries.size() == 1);
            CHECK(hd.entries[0].weight == -static_cast<long>(n));
        }
    }
}

TEST_CASE("finite-dimensional L(triv) for cyclic 2") {
    Catalog z2 = cat("cyclic:2");
    GradedModule l = GradedModule::simple_quotient(standard(z2, "triv", 1, 3, 6));
    REQUIRE(l.total_dim() == 3);
    CohomologyEngine e(l);
    check_complexes(e);
    const std::size_t triv = z2.table().require("triv"), sign = z2.table().require("sign");
    auto ho = e.compute(ComplexKind::HStarHomology);
    CHECK(ho.complete);
    CHECK(ho.in_degree(0) == unit(2, triv));
    CHECK(ho.in_degree(1) == unit(2, sign));  // Lambda^1 h
    auto hd = e.compute(ComplexKind::Dirac);
    CHECK(hd.total() == std::vector<long>{1, 1});
    CHECK(hd.entries.size() == 2);

    auto bgg = TheoremChecks::bgg(e, {{"triv"}, {"sign"}});
    CHECK(bgg.euler_ok);
    CHECK(bgg.bounded);
    CHECK(bgg.disjoint);
    CHECK(bgg.equal);
    auto wrong = TheoremChecks::bgg(e, {{"triv"}, {"triv"}});
    CHECK_FALSE(wrong.euler_ok);

    auto par = TheoremChecks::parity(e);
    CHECK(par.applicable);
    CHECK(par.holds);
    CHECK(TheoremChecks::embedding(e).holds);
    CHECK(TheoremChecks::poincare(e) == "");

    // at c = 3/2 the module does not truncate
    GradedModule inf = GradedModule::simple_quotient(standard(z2, "triv", 1, Cyc(3, 2), 6));
    CHECK_FALSE(inf.finite());
}

TEST_CASE("parity and BGG on standard modules") {
    Catalog d3 = cat("dihedral:3");
    GradedModule m = standard(d3, "refl", 1, Cyc(1, 5), 3);
    CohomologyEngine e(m);
    auto par = TheoremChecks::parity(e);
    CHECK(par.applicable);
    CHECK(par.holds);
    auto bgg = TheoremChecks::bgg(e, {{"refl"}});
    CHECK(bgg.euler_ok);
    CHECK(bgg.equal);

    // L(triv) + M(sign) for Z/2 puts triv in both even and odd degrees
    Catalog z2 = cat("cyclic:2");
    GradedModule sum = GradedModule::direct_sum(GradedModule::simple_quotient(standard(z2, "triv", 1, 3, 6)),
                                                standard(z2, "sign", 1, 3, 6));
    CohomologyEngine es(sum);
    auto p2 = TheoremChecks::parity(es);
    CHECK_FALSE(p2.applicable);
    CHECK(omega_semisimple(sum));
    CHECK(TheoremChecks::embedding(es).holds);
}

TEST_CASE("Hodge decomposition on unitary modules") {
    Catalog z2 = cat("cyclic:2"), d3 = cat("dihedral:3");
    for (Cyc c : {Cyc(0), Cyc(1, 5)}) {
        GradedModule m = standard(z2, "triv", 1, c, 8);
        CohomologyEngine e(m);
        CHECK(TheoremChecks::hodge(e) == "");
    }
    GradedModule md = standard(d3, "triv", 1, 0, 4);
    CHECK(TheoremChecks::hodge(CohomologyEngine(md)) == "");
    GradedModule bad = standard(z2, "triv", 1, 3, 5);
    CHECK_THROWS_AS(TheoremChecks::hodge(CohomologyEngine(bad)), std::invalid_argument);
}

TEST_CASE("reports are invariant under rescaling and the choice of lifts") {
    Catalog d3 = cat("dihedral:3");
    GradedModule m = standard(d3, "refl", 1, Cyc(1, 5), 3);
    GradedModule r = GradedModule::rescale(m, Cyc(3));
    CohomologyEngine e(m), er(r);
    CohomologyOptions flipped;
    flipped.spinor.opposite_lifts = true;
    CohomologyEngine ef(m, flipped);
    for (ComplexKind k : {ComplexKind::HStarCohomology, ComplexKind::HHomology, ComplexKind::HStarHomology,
                          ComplexKind::HCohomology, ComplexKind::Dirac}) {
        CAPTURE(to_string(k));
        auto a = e.compute(k);
        CHECK(same_entries(a, er.compute(k)));
        CHECK(same_entries(a, ef.compute(k)));
    }
    CohomologyOptions threaded;
    threaded.threads = 4;
    CHECK(same_entries(e.compute(ComplexKind::Dirac), CohomologyEngine(m, threaded).compute(ComplexKind::Dirac)));
}

TEST_CASE("support bound and completeness") {
    Catalog z2 = cat("cyclic:2");
    GradedModule m = standard(z2, "triv", 1, Cyc(1, 5), 2);
    CohomologyEngine e(m);
    REQUIRE(e.support_bound().has_value());
    auto rep = e.compute(ComplexKind::HStarCohomology);
    CHECK(rep.weight_lo == -1);
    CHECK(rep.weight_hi == 1);
    CHECK(rep.complete);
    CHECK(rep.at(rep.weight_hi + 5, 0) == std::vector<long>{0, 0});
    GradedModule narrow = GradedModule::simple_quotient(standard(z2, "triv", 1, Cyc(3, 2), 6));
    GradedModule wide_bound = standard(z2, "triv", 1, Cyc(7), 3);
    CohomologyEngine ew(wide_bound);
    REQUIRE(ew.support_bound().has_value());
    CHECK(*ew.support_bound() >= 7);
    auto partial = ew.compute(ComplexKind::HStarCohomology);
    CHECK_FALSE(partial.complete);
    CHECK_THROWS_AS(partial.at(partial.weight_hi + 1, 0), std::out_of_range);
    (void)narrow;

    GradedModule base = GradedModule::baby_verma(z2, Params::uniform(z2.g(), 0, Cyc(1, 2)), 0);
    CohomologyEngine eb(base);
    CHECK_FALSE(eb.support_bound().has_value());
    CHECK(eb.compute(ComplexKind::Dirac).complete);
}

TEST_CASE("checks detect a wrong Clifford sign") {
    Catalog d3 = cat("dihedral:3");
    GradedModule m = standard(d3, "refl", 1, Cyc(1, 5), 2);
    CohomologyOptions bad;
    bad.spinor.flipped_contraction = true;
    CohomologyEngine e(m, bad);
    CHECK(ComplexChecks::half_dirac_identification(e.space()) != "");
    CHECK(dirac_square_identity(e.space()) != "");
}
