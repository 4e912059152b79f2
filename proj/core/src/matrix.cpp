#include "cherednik/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cherednik {

Matrix::Matrix(std::initializer_list<std::initializer_list<Cyc>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
        if (row.size() != c_) throw std::invalid_argument("Matrix: ragged initializer");
        for (const auto& x : row) a_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Cyc(1)); }

Matrix Matrix::scalar(std::size_t n, const Cyc& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: size mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const { return Vector(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != r_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            const Cyc& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_rational() const {
    for (const auto& x : a_)
        if (!x.is_rational()) return false;
    return true;
}

int Matrix::conductor() const {
    int n = 1;
    for (const auto& x : a_) n = std::lcm(n, x.conductor());
    return n;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conj() const {
    Matrix t = *this;
    for (auto& x : t.a_) x = x.conj();
    return t;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix +: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix -: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Cyc& s) {
    if (s.is_one()) return *this;
    for (auto& x : a_)
        if (!x.is_zero()) x *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Matrix *: shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Cyc& x = a(i, k);
            if (x.is_zero()) continue;
            const bool one = x.is_one();
            for (std::size_t j = 0; j < b.c_; ++j) {
                const Cyc& y = b(k, j);
                if (y.is_zero()) continue;
                if (one)
                    m(i, j) += y;
                else
                    m(i, j) += x * y;
            }
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.c_ != v.size()) throw std::invalid_argument("Matrix * Vector: shape mismatch");
    Vector out(a.r_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            if (a(i, k).is_zero() || v[k].is_zero()) continue;
            out[i] += a(i, k) * v[k];
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        if (a.a_[k] != b.a_[k]) return false;
    return true;
}

Cyc Matrix::trace() const {
    if (r_ != c_) throw std::invalid_argument("trace of non-square matrix");
    Cyc t;
    for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
}

Cyc Matrix::det() const {
    if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
    Matrix m = *this;
    Cyc d(1);
    for (std::size_t col = 0; col < c_; ++col) {
        std::size_t piv = col;
        while (piv < r_ && m(piv, col).is_zero()) ++piv;
        if (piv == r_) return Cyc();
        if (piv != col) {
            for (std::size_t j = 0; j < c_; ++j) std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        const Cyc p = m(col, col);
        d *= p;
        const Cyc inv = p.inverse();
        for (std::size_t r = col + 1; r < r_; ++r) {
            if (m(r, col).is_zero()) continue;
            const Cyc f = m(r, col) * inv;
            for (std::size_t j = col; j < c_; ++j)
                if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
        }
    }
    return d;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        // Prefer a rational pivot: keeps the reduced rows short.
        std::size_t piv = R;
        for (std::size_t r = row; r < R; ++r) {
            if (m(r, col).is_zero()) continue;
            if (piv == R) piv = r;
            if (m(r, col).is_rational()) {
                piv = r;
                break;
            }
        }
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(row, j));
        const Cyc inv = m(row, col).inverse();
        if (!inv.is_one())
            for (std::size_t j = col; j < C; ++j)
                if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Cyc f = m(r, col);
            for (std::size_t j = col; j < C; ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t Matrix::rank() const { return rref(*this).pivots.size(); }

Matrix Matrix::kernel() const {
    RowEchelon e = rref(*this);
    std::vector<bool> is_pivot(c_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < c_; ++f) {
        if (is_pivot[f]) continue;
        Vector v(c_);
        v[f] = Cyc(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, c_);
}

Matrix Matrix::column_space() const {
    RowEchelon e = rref(*this);
    Matrix out(r_, e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j) out.set_column(j, column(e.pivots[j]));
    return out;
}

std::optional<Matrix> Matrix::inverse() const {
    if (r_ != c_) return std::nullopt;
    RowEchelon e = rref(hstack(*this, identity(r_)));
    if (e.pivots.size() < r_ || (r_ > 0 && e.pivots[r_ - 1] != r_ - 1)) return std::nullopt;
    return e.reduced.block(0, c_, r_, r_);
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    Matrix aug(r_, c_ + 1);
    aug.set_block(0, 0, *this);
    aug.set_column(c_, b);
    RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == c_) return std::nullopt;
    Vector x(c_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, c_);
    return x;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.r_ > r_ || c0 + m.c_ > c_) throw std::invalid_argument("set_block: out of range");
    for (std::size_t i = 0; i < m.r_; ++i)
        for (std::size_t j = 0; j < m.c_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_ * b.r_, a.c_ * b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t j = 0; j < a.c_; ++j) {
            const Cyc& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.r_; ++k)
                for (std::size_t l = 0; l < b.c_; ++l) {
                    const Cyc& y = b(k, l);
                    if (y.is_zero()) continue;
                    m(i * b.r_ + k, j * b.c_ + l) = x * y;
                }
        }
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.r_, a.c_ + b.c_);
    m.set_block(0, 0, a);
    m.set_block(0, a.c_, b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.c_) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.r_ + b.r_, a.c_);
    m.set_block(0, 0, a);
    m.set_block(a.r_, 0, b);
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_ + b.r_, a.c_ + b.c_);
    m.set_block(0, 0, a);
    m.set_block(a.r_, a.c_, b);
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Cyc& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r)
        if (!x.is_zero()) x *= s;
    return r;
}

Cyc dot(const Vector& a, const Vector& b) {
    Cyc s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Matrix& columns) {
    Subspace s(columns.rows());
    if (columns.cols() == 0) return s;
    RowEchelon e = rref(columns.transpose());
    const std::size_t d = e.pivots.size();
    s.basis_ = Matrix(columns.rows(), d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < columns.rows(); ++i) s.basis_(i, j) = e.reduced(j, i);
    s.pivots_ = e.pivots;
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vecs, std::size_t ambient) {
    return span(Matrix::from_columns(vecs, ambient));
}

Subspace Subspace::full(std::size_t n) { return span(Matrix::identity(n)); }

Subspace Subspace::kernel_of(const Matrix& op) { return span(op.kernel()); }

Subspace Subspace::image_of(const Matrix& op) { return span(op); }

Vector Subspace::coordinates(const Vector& v) const {
    Vector c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivots_[j]];
    return c;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != n_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    Vector r = v;
    for (std::size_t j = 0; j < dim(); ++j) {
        const Cyc c = v[pivots_[j]];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n_; ++i)
            if (!basis_(i, j).is_zero()) r[i] -= c * basis_(i, j);
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& w) const {
    for (std::size_t j = 0; j < w.dim(); ++j)
        if (!contains(w.basis_.column(j))) return false;
    return true;
}

Matrix Subspace::restrict(const Matrix& op) const {
    Matrix image = op * basis_;
    Matrix out(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vector col = image.column(j);
        if (!contains(col)) throw std::logic_error("Subspace::restrict: space is not invariant");
        for (std::size_t i = 0; i < dim(); ++i) out(i, j) = col[pivots_[i]];
    }
    return out;
}

Cyc Subspace::restricted_trace(const Matrix& op) const {
    Cyc t;
    for (std::size_t j = 0; j < dim(); ++j) {
        const std::size_t p = pivots_[j];
        for (std::size_t k = 0; k < n_; ++k)
            if (!op(p, k).is_zero() && !basis_(k, j).is_zero()) t += op(p, k) * basis_(k, j);
    }
    return t;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Subspace sum: ambient mismatch");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return Subspace::span(Matrix::hstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Subspace intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.n_);
    Matrix k = Matrix::hstack(a.basis_, -b.basis_).kernel();
    Matrix coeff = k.block(0, 0, a.dim(), k.cols());
    return span(a.basis_ * coeff);
}

Matrix Subspace::complement_in(const Subspace& v, const Subspace& w) {
    Subspace cur = w;
    std::vector<Vector> chosen;
    for (std::size_t j = 0; j < v.dim() && cur.dim() < v.dim(); ++j) {
        Vector col = v.basis_.column(j);
        if (cur.contains(col)) continue;
        chosen.push_back(col);
        cur = cur + span(std::vector<Vector>{col}, v.n_);
    }
    return Matrix::from_columns(chosen, v.n_);
}

}  // namespace cherednik
