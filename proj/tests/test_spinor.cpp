#include "cherednik/catalog.hpp"
#include "cherednik/spinor.hpp"
#include "doctest.h"

using namespace cherednik;

namespace {

Catalog cat(const std::string& s) { return load_catalog(GroupSpec::parse(s)); }

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = Cyc(1);
    return v;
}

const char* kGroups[] = {"cyclic:2", "cyclic:3", "cyclic:4", "dihedral:3", "dihedral:4", "symmetric:4"};

}  // namespace

TEST_CASE("Clifford relations on the spinor module") {
    for (const char* name : kGroups) {
        CAPTURE(name);
        Catalog c = cat(name);
        Spinor s(c.g());
        const std::size_t n = s.rank();
        CHECK(s.dim() == (1u << n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK((s.wedge(i) * s.wedge(j) + s.wedge(j) * s.wedge(i)).is_zero());
                CHECK((s.contract(i) * s.contract(j) + s.contract(j) * s.contract(i)).is_zero());
                Matrix anti = s.contract(i) * s.wedge(j) + s.wedge(j) * s.contract(i);
                CHECK(anti == Matrix::scalar(s.dim(), Cyc(i == j ? -2 : 0)));
            }
    }
}

TEST_CASE("rank one generator action") {
    Catalog c = cat("cyclic:2");
    Spinor s(c.g());
    const Vector one = {Cyc(1), Cyc(0)}, y = {Cyc(0), Cyc(1)};
    CHECK(s.contract(0) * y == Vector{Cyc(-2), Cyc(0)});
    CHECK(s.wedge(0) * one == y);
    CHECK(is_zero(s.contract(0) * one));
}

TEST_CASE("mu_s lifts reflections") {
    for (const char* name : kGroups) {
        CAPTURE(name);
        Catalog c = cat(name);
        const auto& g = c.g();
        Spinor s(g);
        const std::size_t n = g.rank();
        for (std::size_t r = 0; r < g.reflections().size(); ++r) {
            const auto& refl = g.reflections()[r];
            const Matrix& mu = s.mu(r);
            const Matrix muinv = *mu.inverse();
            for (std::size_t i = 0; i < n; ++i) {
                const Vector e = unit(n, i);
                CHECK(mu * s.clifford_h(e) * muinv == s.clifford_h(g.element(refl.element) * e));
                CHECK(mu * s.clifford_hstar(e) * muinv == s.clifford_hstar(g.dual(refl.element) * e));
            }
            CHECK(mu * s.clifford_h(refl.alpha_check) * muinv == refl.lambda * s.clifford_h(refl.alpha_check));
            const Cyc inv_root = sqrt_root_of_unity(refl.lambda).inverse();
            for (std::size_t l = 0; l <= n; ++l) {
                Matrix blk = mu.block(s.degree_offset(l), s.degree_offset(l), s.degree_dim(l), s.degree_dim(l));
                CHECK(blk == inv_root * s.exterior_power(refl.element, l));
            }
        }
    }
}

TEST_CASE("cyclic 2 lift values") {
    Catalog c = cat("cyclic:2");
    Spinor s(c.g());
    const Cyc i = root_of_unity(4, 1);
    CHECK(s.mu(0)(0, 0) == -i);
    CHECK(s.chi(1) == -i);
    CHECK(s.chi(1) * s.chi(1) == Cyc(-1));
    CHECK(Spinor::chi_of(-s.mu(0)) == i);
    Matrix sq = s.mu(0) * s.mu(0);
    CHECK((sq == Matrix::identity(2) || sq == -Matrix::identity(2)));
    CHECK(s.lift(0).is_identity());
    const auto& t = c.table();
    CHECK(s.genuine_character(t, t.require("triv"))[1] == -i);
    CHECK(s.genuine_character(t, t.require("sign"))[1] == i);
    CHECK(s.genuine_character(t, t.require("sign"))[0] == Cyc(1));
}

TEST_CASE("lifts, characters and products") {
    for (const char* name : kGroups) {
        CAPTURE(name);
        Catalog c = cat(name);
        const auto& g = c.g();
        Spinor s(g), opp(g, {.opposite_lifts = true});
        for (std::size_t w = 0; w < g.order(); ++w) {
            CHECK(s.chi(w) * s.chi(w) == g.dual(w).det());
            CHECK((opp.lift(w) == s.lift(w) || opp.lift(w) == -s.lift(w)));
            for (std::size_t v = 0; v < g.order(); ++v) {
                Matrix prod = s.lift(w) * s.lift(v);
                const Matrix& l = s.lift(g.mul(w, v));
                const bool same = prod == l;
                CHECK((same || prod == -l));
                CHECK(Spinor::chi_of(prod) == s.chi(w) * s.chi(v));
            }
        }
        CHECK(s.decomposition_check());
        CHECK(opp.decomposition_check());
        // genuine characters are orthonormal
        const auto& t = c.table();
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < t.size(); ++b) {
                auto ca = s.genuine_character(t, a), cb = s.genuine_character(t, b);
                Cyc ip;
                for (std::size_t w = 0; w < g.order(); ++w) ip += ca[w] * cb[w].conj();
                CHECK(ip == Cyc(a == b ? static_cast<long>(g.order()) : 0L));
            }
    }
}

TEST_CASE("different words for the same rotation give lifts equal up to sign") {
    Catalog c = cat("dihedral:3");
    const auto& g = c.g();
    Spinor s(g);
    const auto& R = g.reflections();
    for (std::size_t a = 0; a < R.size(); ++a)
        for (std::size_t b = 0; b < R.size(); ++b) {
            if (a == b) continue;
            const std::size_t w = g.mul(R[a].element, R[b].element);
            Matrix op = s.mu(a) * s.mu(b);
            CHECK((op == s.lift(w) || op == -s.lift(w)));
        }
}

TEST_CASE("spinor decomposition regression guard") {
    Catalog c = cat("cyclic:2");
    Spinor bad(c.g(), {.flipped_contraction = true});
    CHECK_FALSE(bad.decomposition_check());
    Catalog d = cat("dihedral:3");
    Spinor s(d.g());
    std::vector<Cyc> tr;
    for (std::size_t w = 0; w < d.g().order(); ++w) tr.push_back(s.lift(w).trace());
    auto m = s.decompose_genuine(d.table(), tr);
    CHECK(m[d.table().require("triv")] == 1);
    CHECK(m[d.table().require("refl")] == 1);
    CHECK(m[d.table().require("det")] == 1);
}

TEST_CASE("Hermitian forms on the spinor module") {
    for (const char* name : kGroups) {
        Catalog c = cat(name);
        Spinor s(c.g());
        const Matrix G = s.weighted_form(), D = s.delta_form();
        const Matrix& P = c.g().dual_form();
        for (std::size_t k = 0; k < s.rank(); ++k) {
            // sum_j P_jk x_j is minus the adjoint of y_k for the weighted
            // form; with the delta form the adjoint of x_k is -2 y_k.
            Matrix lhs(s.dim(), s.dim());
            for (std::size_t j = 0; j < s.rank(); ++j) lhs += P(j, k) * (s.wedge(j).adjoint() * G);
            CHECK(G * s.contract(k) == -lhs);
            CHECK(D * s.contract(k) == Cyc(-2) * (s.wedge(k).adjoint() * D));
        }
        for (std::size_t w = 0; w < c.g().order(); ++w) {
            const Matrix& d = c.g().dual(w);
            CHECK(d.adjoint() * P * d == P);
        }
    }
}
