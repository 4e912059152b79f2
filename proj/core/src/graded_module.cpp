#include "cherednik/graded_module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cherednik {

Params Params::uniform(const ReflectionGroup& g, const Cyc& t, const Cyc& c) {
    return Params{t, std::vector<Cyc>(g.reflection_classes().size(), c)};
}

bool Params::is_real() const {
    if (t != t.conj()) return false;
    for (const auto& x : c)
        if (x != x.conj()) return false;
    return true;
}

Params Params::rescaled(const Cyc& lambda) const {
    if (lambda.is_zero()) throw std::invalid_argument("rescale: lambda must be nonzero");
    const Cyc l2 = lambda * lambda;
    Params p{l2 * t, c};
    for (auto& x : p.c) x *= l2;
    return p;
}

std::string Params::to_string() const {
    std::ostringstream os;
    os << "t=" << t << " c=[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
    os << "]";
    return os.str();
}

Cyc commutator_coefficient(const Reflection& r, std::size_t i, std::size_t j) {
    if (r.alpha[i].is_zero() || r.alpha_check[j].is_zero()) return Cyc();
    return r.alpha[i] * r.alpha_check[j] / r.pairing;
}

Cyc euler_coefficient(const Reflection& r, const Cyc& c) {
    return Cyc(2) * c / (Cyc(1) - r.lambda.inverse());
}

// ---------------------------------------------------------------------------

const std::vector<std::vector<int>>& Monomials::of_degree(std::size_t k) {
    while (lists_.size() <= k) {
        const std::size_t d = lists_.size();
        std::vector<std::vector<int>> out;
        std::vector<int> cur(n_, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
            if (var + 1 == n_) {
                cur[var] = left;
                out.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) {
                cur[var] = e;
                rec(var + 1, left - e);
            }
        };
        if (n_ == 0) {
            if (d == 0) out.push_back({});
        } else {
            rec(0, static_cast<int>(d));
        }
        for (std::size_t i = 0; i < out.size(); ++i) index_[out[i]] = i;
        lists_.push_back(std::move(out));
    }
    return lists_[k];
}

std::size_t Monomials::index(const std::vector<int>& exps) {
    int deg = 0;
    for (int e : exps) deg += e;
    of_degree(static_cast<std::size_t>(deg));
    return index_.at(exps);
}

namespace {

std::size_t first_nonzero(const std::vector<int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) return i;
    throw std::logic_error("constant monomial has no factor");
}

// shift[i][m] = index of x_i * (monomial m of degree k) in degree k + 1.
std::vector<std::vector<std::size_t>> shift_table(Monomials& mons, std::size_t k) {
    const std::size_t n = mons.vars();
    std::vector<std::vector<std::size_t>> out(n);
    const auto list = mons.of_degree(k);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : list) {
            auto f = e;
            ++f[i];
            out[i].push_back(mons.index(f));
        }
    return out;
}

}  // namespace

Matrix symmetric_power(Monomials& mons, const Matrix& g, std::size_t k) {
    Matrix prev = Matrix::identity(1);
    for (std::size_t d = 1; d <= k; ++d) {
        const auto list = mons.of_degree(d);
        const auto shift = shift_table(mons, d - 1);
        Matrix cur(list.size(), list.size());
        for (std::size_t m = 0; m < list.size(); ++m) {
            const std::size_t j = first_nonzero(list[m]);
            auto e = list[m];
            --e[j];
            const std::size_t mp = mons.index(e);
            for (std::size_t i = 0; i < g.rows(); ++i) {
                const Cyc& gij = g(i, j);
                if (gij.is_zero()) continue;
                for (std::size_t u = 0; u < prev.rows(); ++u)
                    if (!prev(u, mp).is_zero()) cur(shift[i][u], m) += gij * prev(u, mp);
            }
        }
        prev = std::move(cur);
    }
    return prev;
}

// ---------------------------------------------------------------------------

std::size_t GradedModule::total_dim() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
}

const Matrix& GradedModule::x(std::size_t k, std::size_t i) const {
    if (!x_defined(k)) throw std::out_of_range("x-operator above the materialized window");
    return x_[k][i];
}

void GradedModule::init_blocks(std::size_t blocks) {
    dims_.assign(blocks, 0);
    w_.assign(blocks, {});
    x_.assign(blocks, {});
    y_.assign(blocks, {});
    section_.clear();
    factor_.clear();
}

void GradedModule::truncate(std::size_t blocks, bool finite) {
    dims_.resize(blocks);
    w_.resize(blocks);
    x_.resize(blocks);
    y_.resize(blocks);
    if (!section_.empty()) section_.resize(blocks);
    if (!factor_.empty()) factor_.resize(blocks);
    finite_ = finite;
    if (finite_) {
        x_[blocks - 1].assign(rank(), Matrix(0, dims_[blocks - 1]));
    } else {
        x_[blocks - 1].clear();
    }
}

std::pair<std::size_t, std::size_t> GradedModule::factor(std::size_t k, std::size_t e) const {
    if (factor_.empty() || k == 0) throw std::logic_error("factor: not a standard module basis vector");
    return factor_[k][e];
}

Matrix GradedModule::omega(std::size_t k) const {
    const auto& g = catalog.g();
    const std::size_t d = dim(k);
    Matrix om = Matrix::scalar(d, Cyc(static_cast<long>(rank())) * params.t);
    if (k >= 1)
        for (std::size_t i = 0; i < rank(); ++i) om += Cyc(2) * (x(k - 1, i) * y(k, i));
    for (std::size_t r = 0; r < g.reflections().size(); ++r) {
        const auto& refl = g.reflections()[r];
        const Cyc kappa = euler_coefficient(refl, params.c_of(g, r));
        if (!kappa.is_zero()) om -= kappa * w(k, refl.element);
    }
    return om;
}

GradedModule GradedModule::standard(const Catalog& cat, const Params& p, std::size_t sigma, std::size_t window) {
    const auto& g = cat.g();
    const auto& table = cat.table();
    if (sigma >= table.size()) throw std::invalid_argument("standard: bad irrep index");
    if (p.c.size() != g.reflection_classes().size()) throw std::invalid_argument("standard: c has wrong length");
    const Irrep& ir = table[sigma];
    const std::size_t n = g.rank(), ds = ir.dim, K = window;

    GradedModule m;
    m.name = "M(" + ir.label + ")";
    m.catalog = cat;
    m.params = p;
    m.sigma_ = sigma;
    m.init_blocks(K + 1);
    m.factor_.assign(K + 1, {});

    Monomials mons(n);
    std::vector<std::vector<std::vector<std::size_t>>> shifts;
    for (std::size_t k = 0; k <= K; ++k) {
        mons.of_degree(k);
        m.dims_[k] = mons.count(k) * ds;
    }
    for (std::size_t k = 0; k < K; ++k) shifts.push_back(shift_table(mons, k));

    // polynomial part of the W-action, degree by degree
    std::vector<Matrix> poly(g.order(), Matrix::identity(1));
    for (std::size_t k = 0; k <= K; ++k) {
        if (k > 0) {
            const auto& list = mons.of_degree(k);
            for (std::size_t w = 0; w < g.order(); ++w) {
                const Matrix& dual = g.dual(w);
                const Matrix& prev = poly[w];
                Matrix cur(list.size(), list.size());
                for (std::size_t mi = 0; mi < list.size(); ++mi) {
                    const std::size_t j = first_nonzero(list[mi]);
                    auto e = list[mi];
                    --e[j];
                    const std::size_t mp = mons.index(e);
                    for (std::size_t i = 0; i < n; ++i) {
                        const Cyc& dij = dual(i, j);
                        if (dij.is_zero()) continue;
                        for (std::size_t u = 0; u < prev.rows(); ++u)
                            if (!prev(u, mp).is_zero()) cur(shifts[k - 1][i][u], mi) += dij * prev(u, mp);
                    }
                }
                poly[w] = std::move(cur);
            }
        }
        for (std::size_t w = 0; w < g.order(); ++w) m.w_[k].push_back(Matrix::kron(poly[w], ir.matrices[w]));
    }

    for (std::size_t k = 0; k < K; ++k) {
        const std::size_t mk = mons.count(k), mk1 = mons.count(k + 1);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix xs(mk1, mk);
            for (std::size_t u = 0; u < mk; ++u) xs(shifts[k][i][u], u) = Cyc(1);
            m.x_[k].push_back(Matrix::kron(xs, Matrix::identity(ds)));
        }
    }

    // Reflection terms of [y_i, x_j], per (i, j).
    std::vector<std::vector<std::pair<Cyc, std::size_t>>> refl_terms(n * n);
    for (std::size_t r = 0; r < g.reflections().size(); ++r) {
        const auto& refl = g.reflections()[r];
        const Cyc c = p.c_of(g, r);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Cyc coef = c * commutator_coefficient(refl, i, j);
                if (!coef.is_zero()) refl_terms[i * n + j].push_back({coef, refl.element});
            }
    }

    m.y_[0].assign(n, Matrix(0, m.dims_[0]));
    for (std::size_t k = 1; k <= K; ++k) {
        const auto& list = mons.of_degree(k);
        const std::size_t dk = m.dims_[k], dk1 = m.dims_[k - 1];
        m.factor_[k].resize(dk);
        for (std::size_t i = 0; i < n; ++i) m.y_[k].emplace_back(dk1, dk);
        for (std::size_t mi = 0; mi < list.size(); ++mi) {
            const std::size_t j = first_nonzero(list[mi]);
            auto e = list[mi];
            --e[j];
            const std::size_t mp = mons.index(e);
            for (std::size_t a = 0; a < ds; ++a) {
                const std::size_t col = mi * ds + a, colp = mp * ds + a;
                m.factor_[k][col] = {j, colp};
                for (std::size_t i = 0; i < n; ++i) {
                    Matrix& Y = m.y_[k][i];
                    // x_j (y_i m')
                    if (k >= 2) {
                        const Matrix& Yp = m.y_[k - 1][i];
                        for (std::size_t r = 0; r < Yp.rows(); ++r) {
                            if (Yp(r, colp).is_zero()) continue;
                            const std::size_t mono = r / ds, aa = r % ds;
                            Y(shifts[k - 2][j][mono] * ds + aa, col) += Yp(r, colp);
                        }
                    }
                    if (i == j && !p.t.is_zero()) Y(colp, col) += p.t;
                    for (const auto& [coef, s] : refl_terms[i * n + j]) {
                        const Matrix& S = m.w_[k - 1][s];
                        for (std::size_t r = 0; r < dk1; ++r)
                            if (!S(r, colp).is_zero()) Y(r, col) -= coef * S(r, colp);
                    }
                }
            }
        }
    }
    return m;
}

GradedModule GradedModule::quotient(const GradedModule& m, const std::vector<Subspace>& sub, const std::string& name) {
    const std::size_t blocks = m.window() + 1;
    if (sub.size() != blocks) throw std::invalid_argument("quotient: one subspace per block required");
    const auto& g = m.catalog.g();
    std::vector<Matrix> P(blocks), S(blocks);
    for (std::size_t k = 0; k < blocks; ++k) {
        const Subspace& J = sub[k];
        const std::size_t d = m.dim(k);
        std::vector<bool> piv(d, false);
        for (auto p : J.pivots()) piv[p] = true;
        std::vector<std::size_t> np;
        for (std::size_t i = 0; i < d; ++i)
            if (!piv[i]) np.push_back(i);
        S[k] = Matrix(d, np.size());
        P[k] = Matrix(np.size(), d);
        for (std::size_t q = 0; q < np.size(); ++q) {
            S[k](np[q], q) = Cyc(1);
            P[k](q, np[q]) = Cyc(1);
            for (std::size_t j = 0; j < J.dim(); ++j) P[k](q, J.pivots()[j]) = -J.basis()(np[q], j);
        }
    }

    GradedModule out;
    out.name = name;
    out.catalog = m.catalog;
    out.params = m.params;
    out.sigma_ = m.sigma_;
    out.finite_ = m.finite_;
    out.init_blocks(blocks);
    for (std::size_t k = 0; k < blocks; ++k) {
        out.dims_[k] = S[k].cols();
        for (std::size_t w = 0; w < g.order(); ++w) out.w_[k].push_back(P[k] * m.w_[k][w] * S[k]);
        if (m.x_defined(k))
            for (std::size_t i = 0; i < m.rank(); ++i)
                out.x_[k].push_back(k + 1 < blocks ? P[k + 1] * m.x_[k][i] * S[k] : Matrix(0, out.dims_[k]));
        for (std::size_t i = 0; i < m.rank(); ++i)
            out.y_[k].push_back(k == 0 ? Matrix(0, out.dims_[0]) : P[k - 1] * m.y_[k][i] * S[k]);
    }
    if (m.base_) {
        out.base_ = m.base_;
        for (std::size_t k = 0; k < blocks; ++k) out.section_.push_back(m.section_[k] * S[k]);
    } else if (!m.factor_.empty()) {
        out.base_ = std::make_shared<GradedModule>(m);
        out.section_ = S;
    }
    return out;
}

std::vector<Subspace> GradedModule::radical(const GradedModule& m) {
    const std::size_t blocks = m.window() + 1;
    std::vector<Subspace> J;
    J.push_back(Subspace(m.dim(0)));
    Matrix proj = Matrix::identity(m.dim(0));  // kernel of proj is J_{k-1}
    for (std::size_t k = 1; k < blocks; ++k) {
        Matrix stacked(0, m.dim(k));
        for (std::size_t i = 0; i < m.rank(); ++i) stacked = Matrix::vstack(stacked, proj * m.y(k, i));
        Subspace Jk = stacked.rows() == 0 ? Subspace::full(m.dim(k)) : Subspace::kernel_of(stacked);
        // projection whose kernel is Jk: rows picking a complement of the pivots
        const std::size_t d = m.dim(k);
        std::vector<bool> piv(d, false);
        for (auto p : Jk.pivots()) piv[p] = true;
        std::vector<std::size_t> np;
        for (std::size_t i = 0; i < d; ++i)
            if (!piv[i]) np.push_back(i);
        proj = Matrix(np.size(), d);
        for (std::size_t q = 0; q < np.size(); ++q) {
            proj(q, np[q]) = Cyc(1);
            for (std::size_t j = 0; j < Jk.dim(); ++j) proj(q, Jk.pivots()[j]) = -Jk.basis()(np[q], j);
        }
        J.push_back(std::move(Jk));
    }
    return J;
}

GradedModule GradedModule::simple_quotient(const GradedModule& m) {
    const auto& table = m.catalog.table();
    auto mult = table.decompose(m.w_[0]);
    long total = 0;
    for (auto x : mult) total += x;
    if (total != 1) throw std::invalid_argument("simple_quotient: lowest block is not irreducible");
    for (std::size_t k = 0; k < m.window(); ++k) {
        Matrix span(m.dim(k + 1), 0);
        for (std::size_t i = 0; i < m.rank(); ++i) span = Matrix::hstack(span, m.x(k, i));
        if (span.rank() != m.dim(k + 1)) throw std::invalid_argument("simple_quotient: lowest block does not generate");
    }
    std::string label = m.name;
    if (label.size() > 2 && label[0] == 'M' && label[1] == '(') label[0] = 'L';
    else label = "L[" + label + "]";
    GradedModule q = quotient(m, radical(m), label);
    for (std::size_t k = 1; k <= q.window(); ++k)
        if (q.dim(k) == 0) {
            q.truncate(k, true);
            break;
        }
    return q;
}

Matrix GradedModule::apply_x_poly(Monomials& mons, const Vector& f, std::size_t d, std::size_t k) const {
    const auto& list = mons.of_degree(d);
    if (k + d > window() && !finite_) throw std::out_of_range("apply_x_poly: target above the window");
    Matrix out(dim(k + d), dim(k));
    if (k + d > window()) return out;
    for (std::size_t u = 0; u < list.size(); ++u) {
        if (f[u].is_zero()) continue;
        Matrix cur = Matrix::identity(dim(k));
        std::size_t deg = k;
        for (std::size_t i = 0; i < rank(); ++i)
            for (int e = 0; e < list[u][i]; ++e) cur = x(deg++, i) * cur;
        out += f[u] * cur;
    }
    return out;
}

Matrix GradedModule::apply_y_poly(Monomials& mons, const Vector& f, std::size_t d, std::size_t k) const {
    const auto& list = mons.of_degree(d);
    Matrix out(k >= d ? dim(k - d) : 0, dim(k));
    if (k < d) return out;
    for (std::size_t u = 0; u < list.size(); ++u) {
        if (f[u].is_zero()) continue;
        Matrix cur = Matrix::identity(dim(k));
        std::size_t deg = k;
        for (std::size_t i = 0; i < rank(); ++i)
            for (int e = 0; e < list[u][i]; ++e) cur = y(deg--, i) * cur;
        out += f[u] * cur;
    }
    return out;
}

namespace {

// Basis of degree-d invariants, as coefficient vectors over monomials, for
// the action given by mats (one per group element).
std::vector<Vector> invariants(Monomials& mons, const std::vector<Matrix>& mats, std::size_t d) {
    const std::size_t sz = mons.count(d);
    Matrix reynolds(sz, sz);
    for (const auto& g : mats) reynolds += symmetric_power(mons, g, d);
    Matrix cs = reynolds.column_space();
    std::vector<Vector> out;
    for (std::size_t j = 0; j < cs.cols(); ++j) out.push_back(cs.column(j));
    return out;
}

}  // namespace

GradedModule GradedModule::baby_verma(const Catalog& cat, const Params& p, std::size_t sigma) {
    if (!p.t.is_zero()) throw std::invalid_argument("baby Verma modules need t = 0");
    const auto& g = cat.g();
    const std::size_t top = g.reflections().size();  // degree of the top coinvariants
    const std::size_t K = top + 1;
    GradedModule m = standard(cat, p, sigma, K);
    Monomials mons(g.rank());

    std::vector<std::vector<Vector>> inv_x(K + 1), inv_y(K + 1);
    std::vector<Matrix> duals, elems;
    for (std::size_t w = 0; w < g.order(); ++w) {
        duals.push_back(g.dual(w));
        elems.push_back(g.element(w));
    }
    for (std::size_t d = 1; d <= K; ++d) {
        inv_x[d] = invariants(mons, duals, d);
        inv_y[d] = invariants(mons, elems, d);
    }

    std::vector<Subspace> N;
    for (std::size_t k = 0; k <= K; ++k) {
        Matrix gens(m.dim(k), 0);
        for (std::size_t d = 1; d <= k; ++d)
            for (const auto& f : inv_x[d]) gens = Matrix::hstack(gens, m.apply_x_poly(mons, f, d, k - d));
        N.push_back(Subspace::span(gens));
    }
    GradedModule q = quotient(m, N, "Mbar(" + cat.table()[sigma].label + ")");
    if (q.dim(K) != 0) throw std::logic_error("baby Verma: top block does not vanish");
    q.truncate(K, true);
    while (q.window() > 0 && q.dim(q.window()) == 0) q.truncate(q.window(), true);

    if (q.total_dim() != g.order() * cat.table()[sigma].dim)
        throw std::logic_error("baby Verma: dimension differs from |W| dim(sigma)");
    for (std::size_t k = 0; k <= q.window(); ++k)
        for (std::size_t d = 1; d <= K; ++d) {
            for (const auto& f : inv_x[d])
                if (!q.apply_x_poly(mons, f, d, k).is_zero())
                    throw std::logic_error("baby Verma: an S(h*) invariant acts nontrivially");
            for (const auto& f : inv_y[d])
                if (!q.apply_y_poly(mons, f, d, k).is_zero())
                    throw std::logic_error("baby Verma: an S(h) invariant acts nontrivially");
        }
    return q;
}

GradedModule GradedModule::direct_sum(const GradedModule& a, const GradedModule& b) {
    if (a.catalog.group != b.catalog.group) throw std::invalid_argument("direct_sum: different groups");
    if (a.params.t != b.params.t || a.params.c != b.params.c) throw std::invalid_argument("direct_sum: different parameters");
    std::size_t K = 0;
    bool any_infinite = false;
    for (const GradedModule* m : {&a, &b}) {
        if (!m->finite_) {
            K = any_infinite ? std::min(K, m->window()) : m->window();
            any_infinite = true;
        }
    }
    if (!any_infinite) K = std::max(a.window(), b.window());
    const auto& g = a.catalog.g();
    const std::size_t n = a.rank();

    auto w_of = [&](const GradedModule& m, std::size_t k, std::size_t e) {
        return k <= m.window() ? m.w_[k][e] : Matrix(0, 0);
    };
    auto x_of = [&](const GradedModule& m, std::size_t k, std::size_t i) {
        if (k < m.window() || (m.finite_ && k == m.window())) return m.x_[k][i];
        if (k > m.window()) return Matrix(0, 0);
        return Matrix(m.dim(k + 1), m.dim(k));
    };
    auto y_of = [&](const GradedModule& m, std::size_t k, std::size_t i) {
        if (k <= m.window()) return m.y_[k][i];
        return Matrix(0, 0);
    };

    GradedModule out;
    out.name = a.name + " + " + b.name;
    out.catalog = a.catalog;
    out.params = a.params;
    out.finite_ = !any_infinite;
    out.init_blocks(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        out.dims_[k] = a.dim(k) + b.dim(k);
        for (std::size_t e = 0; e < g.order(); ++e) out.w_[k].push_back(Matrix::direct_sum(w_of(a, k, e), w_of(b, k, e)));
        if (k < K || out.finite_)
            for (std::size_t i = 0; i < n; ++i) {
                Matrix xa = x_of(a, k, i), xb = x_of(b, k, i);
                if (k == K) {
                    xa = Matrix(0, a.dim(k));
                    xb = Matrix(0, b.dim(k));
                }
                if (xa.rows() == 0 && xa.cols() == 0) xa = Matrix(a.dim(k + 1), a.dim(k));
                if (xb.rows() == 0 && xb.cols() == 0) xb = Matrix(b.dim(k + 1), b.dim(k));
                out.x_[k].push_back(Matrix::direct_sum(xa, xb));
            }
        for (std::size_t i = 0; i < n; ++i) {
            Matrix ya = y_of(a, k, i), yb = y_of(b, k, i);
            if (ya.rows() == 0 && ya.cols() == 0) ya = Matrix(k ? a.dim(k - 1) : 0, a.dim(k));
            if (yb.rows() == 0 && yb.cols() == 0) yb = Matrix(k ? b.dim(k - 1) : 0, b.dim(k));
            out.y_[k].push_back(Matrix::direct_sum(ya, yb));
        }
    }
    return out;
}

GradedModule GradedModule::rescale(const GradedModule& m, const Cyc& lambda) {
    GradedModule out = m;
    out.params = m.params.rescaled(lambda);
    const Cyc l2 = lambda * lambda;
    for (auto& blk : out.y_)
        for (auto& Y : blk) Y *= l2;
    if (m.base_) out.base_ = std::make_shared<GradedModule>(rescale(*m.base_, lambda));
    return out;
}

// ---------------------------------------------------------------------------

std::string ModuleChecks::defining_relation(const GradedModule& m) {
    const auto& g = m.catalog.g();
    const std::size_t n = m.rank();
    for (std::size_t k = 0; k <= m.window(); ++k) {
        if (!m.x_defined(k)) continue;
        const std::size_t d = m.dim(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix lhs(d, d);
                if (k + 1 <= m.window()) lhs += m.y(k + 1, i) * m.x(k, j);
                if (k >= 1) lhs -= m.x(k - 1, j) * m.y(k, i);
                Matrix rhs = Matrix::scalar(d, i == j ? m.params.t : Cyc());
                for (std::size_t r = 0; r < g.reflections().size(); ++r) {
                    const auto& refl = g.reflections()[r];
                    const Cyc coef = m.params.c_of(g, r) * commutator_coefficient(refl, i, j);
                    if (!coef.is_zero()) rhs -= coef * m.w(k, refl.element);
                }
                if (lhs != rhs)
                    return "[y_" + std::to_string(i) + ", x_" + std::to_string(j) + "] fails on block " + std::to_string(k);
            }
    }
    return {};
}

std::string ModuleChecks::equivariance(const GradedModule& m) {
    const auto& g = m.catalog.g();
    const std::size_t n = m.rank();
    for (std::size_t k = 0; k <= m.window(); ++k)
        for (std::size_t w = 0; w < g.order(); ++w) {
            const std::size_t wi = g.inverse(w);
            for (std::size_t j = 0; j < n; ++j) {
                if (m.x_defined(k) && k + 1 <= m.window()) {
                    Matrix lhs = m.w(k + 1, w) * m.x(k, j) * m.w(k, wi);
                    Matrix rhs(m.dim(k + 1), m.dim(k));
                    for (std::size_t i = 0; i < n; ++i)
                        if (!g.dual(w)(i, j).is_zero()) rhs += g.dual(w)(i, j) * m.x(k, i);
                    if (lhs != rhs) return "x-equivariance fails on block " + std::to_string(k);
                }
                if (k >= 1) {
                    Matrix lhs = m.w(k - 1, w) * m.y(k, j) * m.w(k, wi);
                    Matrix rhs(m.dim(k - 1), m.dim(k));
                    for (std::size_t i = 0; i < n; ++i)
                        if (!g.element(w)(i, j).is_zero()) rhs += g.element(w)(i, j) * m.y(k, i);
                    if (lhs != rhs) return "y-equivariance fails on block " + std::to_string(k);
                }
            }
        }
    return {};
}

std::string ModuleChecks::commutativity(const GradedModule& m) {
    const std::size_t n = m.rank();
    for (std::size_t k = 0; k <= m.window(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (m.x_defined(k) && m.x_defined(k + 1) && k + 1 <= m.window()) {
                    if (m.x(k + 1, i) * m.x(k, j) != m.x(k + 1, j) * m.x(k, i))
                        return "x_i x_j != x_j x_i on block " + std::to_string(k);
                }
                if (k >= 2 && m.y(k - 1, i) * m.y(k, j) != m.y(k - 1, j) * m.y(k, i))
                    return "y_i y_j != y_j y_i on block " + std::to_string(k);
            }
    return {};
}

std::string ModuleChecks::representation(const GradedModule& m) {
    const auto& g = m.catalog.g();
    for (std::size_t k = 0; k <= m.window(); ++k) {
        if (!m.w(k, 0).is_identity() && m.dim(k) > 0) return "identity does not act trivially on block " + std::to_string(k);
        for (std::size_t gen : g.generator_indices())
            for (std::size_t b = 0; b < g.order(); ++b)
                if (m.w(k, gen) * m.w(k, b) != m.w(k, g.mul(gen, b)))
                    return "W-action is not multiplicative on block " + std::to_string(k);
    }
    return {};
}

std::vector<Cyc> ModuleChecks::omega_scalars(const GradedModule& m) {
    std::vector<Cyc> out;
    for (std::size_t k = 0; k <= m.window(); ++k) {
        Matrix om = m.omega(k);
        const std::size_t d = m.dim(k);
        Cyc s = d ? om(0, 0) : Cyc();
        if (om != Matrix::scalar(d, s)) throw std::logic_error("Omega is not scalar on block " + std::to_string(k));
        out.push_back(s);
    }
    return out;
}

Cyc euler_lowest(const Catalog& cat, const Params& p, std::size_t sigma) {
    const auto& g = cat.g();
    const Irrep& ir = cat.table()[sigma];
    Matrix om = Matrix::scalar(ir.dim, Cyc(static_cast<long>(g.rank())) * p.t);
    for (std::size_t r = 0; r < g.reflections().size(); ++r) {
        const auto& refl = g.reflections()[r];
        const Cyc kappa = euler_coefficient(refl, p.c_of(g, r));
        if (!kappa.is_zero()) om -= kappa * ir.matrices[refl.element];
    }
    const Cyc s = om(0, 0);
    if (om != Matrix::scalar(ir.dim, s)) throw std::logic_error("Omega is not scalar on the lowest block");
    return s;
}

Matrix invariant_form(const Irrep& sigma) {
    Matrix f(sigma.dim, sigma.dim);
    for (const auto& m : sigma.matrices) f += m.adjoint() * m;
    f *= Cyc(1, static_cast<long>(sigma.matrices.size()));
    return f;
}

ContravariantForm contravariant_form(const GradedModule& m) {
    if (!m.params.is_real()) throw std::invalid_argument("contravariant form needs real parameters");
    if (m.base()) {
        ContravariantForm base = contravariant_form(*m.base());
        ContravariantForm out;
        for (std::size_t k = 0; k <= m.window(); ++k) {
            const Matrix& S = m.section(k);
            out.gram.push_back(S.adjoint() * base.gram[k] * S);
        }
        return out;
    }
    if (!m.sigma()) throw std::invalid_argument("contravariant form needs a standard module or a quotient of one");
    ContravariantForm out;
    out.gram.push_back(invariant_form(m.catalog.table()[*m.sigma()]));
    for (std::size_t k = 1; k <= m.window(); ++k) {
        const std::size_t d = m.dim(k);
        std::vector<Matrix> gy;
        const Matrix& P = m.catalog.g().dual_form();
        for (std::size_t j = 0; j < m.rank(); ++j) {
            Matrix yj(m.dim(k - 1), d);
            for (std::size_t i = 0; i < m.rank(); ++i)
                if (!P(j, i).is_zero()) yj += P(j, i) * m.y(k, i);
            gy.push_back(out.gram[k - 1] * yj);
        }
        Matrix G(d, d);
        for (std::size_t e = 0; e < d; ++e) {
            auto [j, ep] = m.factor(k, e);
            for (std::size_t c = 0; c < d; ++c) G(e, c) = gy[j](ep, c);
        }
        if (G != G.adjoint()) throw std::logic_error("contravariant form is not Hermitian on block " + std::to_string(k));
        out.gram.push_back(std::move(G));
    }
    return out;
}

bool positive_definite(const Matrix& g) {
    Matrix a = g;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Cyc d = a(k, k);
        if (certified_sign(d) != Sign::positive) return false;
        const Cyc inv = d.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Cyc f = a(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

std::vector<bool> unitary_blocks(const ContravariantForm& f) {
    std::vector<bool> out;
    for (const auto& g : f.gram) out.push_back(positive_definite(g));
    return out;
}

std::vector<Cyc> unitary_parameters(const Catalog& cat, std::size_t sigma, const Cyc& t,
                                    const std::vector<Cyc>& candidates, std::size_t window) {
    std::vector<Cyc> out;
    for (const Cyc& c : candidates) {
        const GradedModule l =
            GradedModule::simple_quotient(GradedModule::standard(cat, Params::uniform(cat.g(), t, c), sigma, window));
        const auto blocks = unitary_blocks(contravariant_form(l));
        if (std::all_of(blocks.begin(), blocks.end(), [](bool b) { return b; })) out.push_back(c);
    }
    return out;
}

}  // namespace cherednik
