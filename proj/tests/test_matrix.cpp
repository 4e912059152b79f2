#include "doctest.h"
#include "test_support.hpp"

using namespace cherednik;

TEST_CASE("rank nullity and kernel") {
    testsupport::Gen gen(42);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = static_cast<std::size_t>(gen.integer(1, 5));
        const std::size_t c = static_cast<std::size_t>(gen.integer(1, 5));
        // Low-rank product to exercise nontrivial kernels.
        const std::size_t k = static_cast<std::size_t>(gen.integer(1, 3));
        Matrix a = gen.matrix(r, k, 3) * gen.matrix(k, c, 4);
        Matrix ker = a.kernel();
        CHECK(a.rank() + ker.cols() == c);
        CHECK((a * ker).is_zero());
        CHECK(a.rank() <= k);
        CHECK(a.transpose().rank() == a.rank());
    }
}

TEST_CASE("inverse determinant solve") {
    testsupport::Gen gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = gen.matrix(3, 3, 8, 10);
        Matrix b = gen.matrix(3, 3, 3, 10);
        CHECK((a * b).det() == a.det() * b.det());
        auto inv = a.inverse();
        CHECK(inv.has_value() == !a.det().is_zero());
        if (inv) {
            CHECK((a * *inv).is_identity());
            Vector rhs = {gen.element(4), gen.element(1), gen.element(8)};
            auto x = a.solve(rhs);
            REQUIRE(x.has_value());
            CHECK(a * *x == rhs);
        }
    }
    Matrix s = {{1, 2}, {2, 4}};
    CHECK(s.det().is_zero());
    CHECK_FALSE(s.solve({Cyc(1), Cyc(0)}).has_value());
}

TEST_CASE("kronecker product") {
    testsupport::Gen gen(8);
    Matrix a = gen.matrix(2, 2, 4), b = gen.matrix(3, 3, 3), c = gen.matrix(2, 2, 4), d = gen.matrix(3, 3, 3);
    CHECK(Matrix::kron(a, b) * Matrix::kron(c, d) == Matrix::kron(a * c, b * d));
    CHECK(Matrix::kron(a, b).trace() == a.trace() * b.trace());
}

TEST_CASE("subspaces") {
    testsupport::Gen gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = gen.matrix(5, 2, 4), b = gen.matrix(5, 3, 1);
        Subspace A = Subspace::span(a), B = Subspace::span(b);
        Subspace S = A + B, I = Subspace::intersect(A, B);
        CHECK(S.dim() + I.dim() == A.dim() + B.dim());
        CHECK(S.contains(A));
        CHECK(A.contains(I));
        CHECK(B.contains(I));
        Matrix comp = Subspace::complement_in(S, A);
        CHECK(comp.cols() + A.dim() == S.dim());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Vector v = a.column(j);
            CHECK(A.basis() * A.coordinates(v) == v);
        }
    }
    // Restricted trace on an invariant subspace.
    Matrix op = {{2, 1, 0}, {0, 3, 0}, {0, 0, 5}};
    Subspace inv = Subspace::span(std::vector<Vector>{{Cyc(1), Cyc(0), Cyc(0)}, {Cyc(0), Cyc(0), Cyc(1)}}, 3);
    CHECK(inv.restricted_trace(op) == Cyc(7));
    CHECK(inv.restrict(op).trace() == Cyc(7));
}
