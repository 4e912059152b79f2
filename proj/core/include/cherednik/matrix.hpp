#pragma once

#include "cherednik/cyclotomic.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace cherednik {

using Vector = std::vector<Cyc>;

/// Dense row-major matrix over cyclotomic scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Cyc>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix diagonal(const Vector& d);
    static Matrix scalar(std::size_t n, const Cyc& s);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Cyc& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Cyc& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    void set_column(std::size_t j, const Vector& v);

    bool is_zero() const;
    bool is_identity() const;
    bool is_rational() const;
    /// Least common conductor of all entries.
    int conductor() const;

    Matrix transpose() const;
    Matrix conj() const;
    Matrix adjoint() const;  // conjugate transpose

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Cyc& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Cyc& s, Matrix a) { return a *= s; }
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Cyc trace() const;
    Cyc det() const;
    std::size_t rank() const;
    /// Columns form a basis of the null space.
    Matrix kernel() const;
    /// Columns form a basis of the column space (a subset of the columns).
    Matrix column_space() const;
    std::optional<Matrix> inverse() const;
    /// Some x with A x = b, if one exists.
    std::optional<Vector> solve(const Vector& b) const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    static Matrix kron(const Matrix& a, const Matrix& b);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Cyc> a_;
};

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Cyc& s, const Vector& v);
/// Bilinear pairing sum a_i b_i (no conjugation).
Cyc dot(const Vector& a, const Vector& b);

/// Linear subspace of F^n stored in reduced column echelon form: basis column
/// j has a 1 in row pivot(j) and zeros in the other pivot rows.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient), basis_(ambient, 0) {}

    static Subspace span(const Matrix& columns);
    static Subspace span(const std::vector<Vector>& vecs, std::size_t ambient);
    static Subspace full(std::size_t n);
    static Subspace kernel_of(const Matrix& op);
    static Subspace image_of(const Matrix& op);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& w) const;
    /// Coordinates of v in the stored basis (v assumed to lie in the space).
    Vector coordinates(const Vector& v) const;

    /// Matrix of op restricted to this space; op must preserve it.
    Matrix restrict(const Matrix& op) const;
    /// Trace of op restricted to an invariant subspace.
    Cyc restricted_trace(const Matrix& op) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    static Subspace intersect(const Subspace& a, const Subspace& b);
    /// Basis (as columns) of a complement of w inside v, chosen from v's basis.
    static Matrix complement_in(const Subspace& v, const Subspace& w);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    std::size_t n_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace cherednik
