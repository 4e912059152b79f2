#include "cherednik/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cherednik {

namespace {

// Polynomials over Cyc, coefficient of z^i at index i.
using Poly = std::vector<Cyc>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    const Cyc lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const Cyc f = a.back() * lead_inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Cyc(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

// p(a + b z)
Poly compose_linear(const Poly& p, const Cyc& a, const Cyc& b) {
    Poly r;
    const Poly lin{a, b};
    for (std::size_t i = p.size(); i-- > 0;) {
        r = poly_mul(r, lin);
        if (r.empty()) r.push_back(Cyc());
        r[0] += p[i];
        trim(r);
    }
    return r;
}

// Faddeev-LeVerrier; returns det(z I - A).
Poly characteristic_polynomial(const Matrix& A) {
    const std::size_t n = A.rows();
    Poly c(n + 1);
    c[n] = Cyc(1);
    Matrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        c[n - k] = -(A * M).trace() / Cyc(static_cast<long>(k));
    }
    return c;
}

Poly minimal_polynomial(const Matrix& A) {
    const std::size_t n = A.rows();
    std::vector<Vector> powers;
    Matrix P = Matrix::identity(n);
    for (std::size_t d = 0; d <= n; ++d) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.push_back(P(i, j));
        powers.push_back(std::move(v));
        Matrix cols = Matrix::from_columns(powers, n * n);
        Matrix ker = cols.kernel();
        if (ker.cols() > 0) {
            Poly p(d + 1);
            const Cyc lead = ker(d, 0);
            for (std::size_t i = 0; i <= d; ++i) p[i] = ker(i, 0) / lead;
            return p;
        }
        P = P * A;
    }
    throw std::logic_error("minimal polynomial: no dependency found");
}

// Largest nonnegative integer root of a polynomial whose coefficients lie in
// a cyclotomic field; -1 when there is none.
long largest_integer_root(const Poly& p) {
    int N = 1;
    for (const auto& a : p) N = std::lcm(N, a.conductor());
    const std::size_t phi = static_cast<std::size_t>(CyclotomicField::get(N).degree());
    // An integer root annihilates every rational coordinate polynomial; use
    // one that is nonzero.
    std::vector<Rational> q;
    for (std::size_t b = 0; b < phi && q.empty(); ++b) {
        std::vector<Rational> cand;
        for (const auto& a : p) cand.push_back(a.embed(N).coefficients()[b]);
        while (!cand.empty() && cand.back() == 0) cand.pop_back();
        if (!cand.empty()) q = std::move(cand);
    }
    if (q.empty()) throw std::logic_error("largest_integer_root: zero polynomial");
    if (q.size() == 1) return -1;
    // Fujiwara: |z| <= 2 max_i |q_{d-i}/q_d|^{1/i}, with q_0 halved.
    auto log_abs = [](const mpz_class& z) {
        long e = 0;
        const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
        return std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
    };
    const std::size_t d = q.size() - 1;
    double log_bound = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= d; ++i) {
        const Rational r = q[d - i] / q[d];
        if (r == 0) continue;
        double l = log_abs(r.get_num()) - log_abs(r.get_den());
        if (i == d) l -= std::log(2.0);
        log_bound = std::max(log_bound, l / static_cast<double>(i));
    }
    const double bound = 2.0 * std::exp(log_bound) * 1.001 + 1.0;
    if (!(bound < 1e6)) return static_cast<long>(std::min(bound, 9e18));
    for (long k = static_cast<long>(std::ceil(bound)); k >= 0; --k) {
        Rational v = 0;
        for (std::size_t i = q.size(); i-- > 0;) v = v * k + q[i];
        if (v == 0) return k;
    }
    return -1;
}

Matrix scaled(Matrix m, const Cyc& s) {
    m *= s;
    return m;
}

std::optional<Matrix> try_op(const std::function<Matrix()>& f) {
    try {
        return f();
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

}  // namespace

std::string to_string(ComplexKind k) {
    switch (k) {
    case ComplexKind::HStarCohomology: return "hstar-cohomology";
    case ComplexKind::HHomology: return "h-homology";
    case ComplexKind::HStarHomology: return "hstar-homology";
    case ComplexKind::HCohomology: return "h-cohomology";
    case ComplexKind::DxCohomology: return "dx-cohomology";
    case ComplexKind::DyCohomology: return "dy-cohomology";
    case ComplexKind::Dirac: return "dirac-cohomology";
    }
    return "?";
}

// ---------------------------------------------------------------- TensorSpace

TensorSpace::TensorSpace(const GradedModule& m, const Spinor& s) : m_(&m), s_(&s), n_(m.rank()) {
    if (s.rank() != n_) throw std::invalid_argument("TensorSpace: spinor rank differs from module rank");
    for (std::size_t i = 0; i < n_; ++i) {
        wedge_.push_back(s.wedge(i));
        contract_.push_back(s.contract(i));
    }
}

bool TensorSpace::materialized(long k) const {
    return k < 0 || static_cast<std::size_t>(k) <= m_->window() || m_->finite();
}

std::size_t TensorSpace::dim(long k, std::size_t l) const {
    if (k < 0 || l > n_) return 0;
    if (!materialized(k)) throw std::out_of_range("block above the materialized window");
    return m_->dim(static_cast<std::size_t>(k)) * s_->degree_dim(l);
}

Matrix TensorSpace::piece(const Matrix& op, std::size_t l_to, std::size_t l_from) const {
    return op.block(s_->degree_offset(l_to), s_->degree_offset(l_from), s_->degree_dim(l_to), s_->degree_dim(l_from));
}

Matrix TensorSpace::module_op(char which, long k, std::size_t i) const {
    const long target = which == 'x' ? k + 1 : k - 1;
    const std::size_t from = k < 0 ? 0 : m_->dim(static_cast<std::size_t>(k));
    if (!materialized(k)) throw std::out_of_range("block above the materialized window");
    if (target < 0 || !materialized(target) || from == 0) {
        if (!materialized(target)) throw std::out_of_range("x-operator above the materialized window");
        return Matrix(target < 0 ? 0 : m_->dim(static_cast<std::size_t>(target)), from);
    }
    const auto kk = static_cast<std::size_t>(k);
    if (which == 'x') {
        if (m_->dim(kk + 1) == 0) return Matrix(0, from);
        return m_->x(kk, i);
    }
    return m_->y(kk, i);
}

Matrix TensorSpace::dx(long k, std::size_t l) const {
    Matrix out(dim(k + 1, l + 1), dim(k, l));
    if (l >= n_ || out.empty()) return out;
    for (std::size_t i = 0; i < n_; ++i) out += Matrix::kron(module_op('x', k, i), piece(wedge_[i], l + 1, l));
    return out;
}

Matrix TensorSpace::dy(long k, std::size_t l) const {
    if (l == 0) return Matrix(0, dim(k, l));
    Matrix out(dim(k - 1, l - 1), dim(k, l));
    if (out.empty()) return out;
    for (std::size_t i = 0; i < n_; ++i) out += Matrix::kron(module_op('y', k, i), piece(contract_[i], l - 1, l));
    return out;
}

Matrix TensorSpace::koszul_partial(long k, std::size_t l) const { return scaled(dy(k, l), Cyc(1, 2)); }

Matrix TensorSpace::mirror_d(long k, std::size_t l) const {
    Matrix out(dim(k - 1, l + 1), dim(k, l));
    if (l >= n_ || out.empty()) return out;
    for (std::size_t j = 0; j < n_; ++j) out += Matrix::kron(module_op('y', k, j), piece(wedge_[j], l + 1, l));
    return out;
}

Matrix TensorSpace::mirror_partial(long k, std::size_t l) const {
    if (l == 0) return Matrix(0, dim(k, l));
    Matrix out(dim(k + 1, l - 1), dim(k, l));
    if (out.empty()) return out;
    for (std::size_t j = 0; j < n_; ++j) out += Matrix::kron(module_op('x', k, j), piece(contract_[j], l - 1, l));
    return scaled(out, Cyc(1, 2));
}

Matrix TensorSpace::w_action(long k, std::size_t l, std::size_t w) const {
    if (dim(k, l) == 0) return Matrix(0, 0);
    return Matrix::kron(m_->w(static_cast<std::size_t>(k), w), s_->exterior_power(w, l));
}

Matrix TensorSpace::w_action_dual(long k, std::size_t l, std::size_t w) const {
    if (dim(k, l) == 0) return Matrix(0, 0);
    return Matrix::kron(m_->w(static_cast<std::size_t>(k), w), piece(s_->exterior_algebra_dual(w), l, l));
}

Matrix TensorSpace::pin_action(long k, std::size_t l, std::size_t w) const {
    if (dim(k, l) == 0) return Matrix(0, 0);
    return Matrix::kron(m_->w(static_cast<std::size_t>(k), w), piece(s_->lift(w), l, l));
}

// ---------------------------------------------------------- CohomologyReport

namespace {

void add_into(std::vector<long>& acc, const std::vector<long>& v) {
    if (acc.empty()) acc.assign(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

}  // namespace

std::vector<long> CohomologyReport::total() const {
    std::vector<long> out(labels.size(), 0);
    for (const auto& e : entries) add_into(out, e.mult);
    return out;
}

std::vector<long> CohomologyReport::in_degree(std::size_t l) const {
    std::vector<long> out(labels.size(), 0);
    for (const auto& e : entries)
        if (e.degree == l) add_into(out, e.mult);
    return out;
}

std::vector<long> CohomologyReport::even() const {
    std::vector<long> out(labels.size(), 0);
    for (const auto& e : entries)
        if (e.degree % 2 == 0) add_into(out, e.mult);
    return out;
}

std::vector<long> CohomologyReport::odd() const {
    std::vector<long> out(labels.size(), 0);
    for (const auto& e : entries)
        if (e.degree % 2 == 1) add_into(out, e.mult);
    return out;
}

std::vector<long> CohomologyReport::at(long weight, std::size_t degree) const {
    if (weight < weight_lo || weight > weight_hi) {
        // Outside the computed range the answer is known only when the
        // support bound rules it out.
        if (!complete) throw std::out_of_range("weight " + std::to_string(weight) + " was not computed");
    }
    for (const auto& e : entries)
        if (e.weight == weight && e.degree == degree) return e.mult;
    return std::vector<long>(labels.size(), 0);
}

// ---------------------------------------------------------- support bound

std::optional<long> dirac_singular_bound(const GradedModule& m, const Spinor& s) {
    if (m.params.t.is_zero() || m.dim(0) == 0) return std::nullopt;
    std::vector<Cyc> om;
    try {
        om = ModuleChecks::omega_scalars(m);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    const Cyc step = Cyc(2) * m.params.t;
    for (std::size_t k = 0; k < om.size(); ++k)
        if (m.dim(k) > 0 && om[k] != om[0] + Cyc(static_cast<long>(k)) * step) return std::nullopt;

    const auto& g = m.catalog.g();
    const std::size_t n = g.rank(), N = g.order();
    long bound = -1;
    for (std::size_t l = 0; l <= n; ++l) {
        const std::size_t off = s.degree_offset(l), dl = s.degree_dim(l);
        Matrix E(dl, dl);
        for (std::size_t i = 0; i < n; ++i) E += (s.contract(i) * s.wedge(i)).block(off, off, dl, dl);
        Matrix base = Matrix::scalar(dl, Cyc(static_cast<long>(n)) * m.params.t) + scaled(E, m.params.t);
        Matrix R = Matrix::kron(Matrix::identity(N), base);
        for (std::size_t r = 0; r < g.reflections().size(); ++r) {
            const auto& refl = g.reflections()[r];
            const Cyc c = m.params.c_of(g, r);
            if (c.is_zero()) continue;
            Matrix aa = (s.clifford_hstar(refl.alpha) * s.clifford_h(refl.alpha_check)).block(off, off, dl, dl);
            Matrix B = scaled(aa, -c / refl.pairing) - Matrix::scalar(dl, euler_coefficient(refl, c));
            Matrix reg(N, N);
            for (std::size_t h = 0; h < N; ++h) reg(g.mul(refl.element, h), h) = Cyc(1);
            R += Matrix::kron(reg, B);
        }
        Poly P = characteristic_polynomial(R);
        Poly Q = compose_linear(P, om[0], step);
        bound = std::max(bound, largest_integer_root(Q));
    }
    return bound;
}

std::string dirac_square_identity(const TensorSpace& ts) {
    const GradedModule& m = ts.module();
    const Spinor& s = ts.spinor();
    const auto& g = m.catalog.g();
    const std::size_t n = ts.rank();
    for (std::size_t k = 0; k <= m.window(); ++k) {
        const long kk = static_cast<long>(k);
        Matrix om = m.omega(k);
        for (std::size_t l = 0; l <= n; ++l) {
            if (ts.dim(kk, l) == 0) continue;
            auto lhs = try_op([&] {
                Matrix r(ts.dim(kk, l), ts.dim(kk, l));
                if (l + 1 <= n) r += ts.dy(kk + 1, l + 1) * ts.dx(kk, l);
                if (l >= 1) r += ts.dx(kk - 1, l - 1) * ts.dy(kk, l);
                return r;
            });
            if (!lhs) continue;
            const std::size_t off = s.degree_offset(l), dl = s.degree_dim(l);
            Matrix E(dl, dl);
            for (std::size_t i = 0; i < n; ++i) E += (s.contract(i) * s.wedge(i)).block(off, off, dl, dl);
            const std::size_t dm = m.dim(k);
            Matrix rhs = Matrix::kron(scaled(om, Cyc(-1)) + Matrix::scalar(dm, Cyc(static_cast<long>(n)) * m.params.t),
                                      Matrix::identity(dl));
            rhs += Matrix::kron(Matrix::identity(dm), scaled(E, m.params.t));
            for (std::size_t r = 0; r < g.reflections().size(); ++r) {
                const auto& refl = g.reflections()[r];
                const Cyc c = m.params.c_of(g, r);
                if (c.is_zero()) continue;
                Matrix aa = (s.clifford_hstar(refl.alpha) * s.clifford_h(refl.alpha_check)).block(off, off, dl, dl);
                Matrix B = scaled(aa, -c / refl.pairing) - Matrix::scalar(dl, euler_coefficient(refl, c));
                rhs += Matrix::kron(m.w(k, refl.element), B);
            }
            if (*lhs != rhs) return "D^2 identity fails on block (" + std::to_string(k) + ", " + std::to_string(l) + ")";
        }
    }
    return "";
}

bool omega_semisimple(const GradedModule& m) {
    for (std::size_t k = 0; k <= m.window(); ++k) {
        if (m.dim(k) == 0) continue;
        Matrix om;
        try {
            om = m.omega(k);
        } catch (const std::out_of_range&) {
            continue;
        }
        Poly p = minimal_polynomial(om);
        Poly g = poly_gcd(p, derivative(p));
        if (g.size() > 1) return false;
    }
    return true;
}

// ---------------------------------------------------------- CohomologyEngine

CohomologyEngine::CohomologyEngine(const GradedModule& m, CohomologyOptions opts)
    : m_(&m), opts_(opts), spinor_(m.catalog.g(), opts.spinor), ts_(m, spinor_) {
    if (!m.finite()) bound_ = dirac_singular_bound(m, spinor_);
}

std::pair<long, long> CohomologyEngine::weight_range(bool mirror) const {
    const long n = static_cast<long>(ts_.rank());
    const long w = static_cast<long>(m_->window());
    if (mirror) return {0, m_->finite() ? w + n : w};
    return {-n, m_->finite() ? w : w - n};
}

namespace {

bool is_mirror(ComplexKind k) { return k == ComplexKind::HStarHomology || k == ComplexKind::HCohomology; }
bool is_genuine(ComplexKind k) {
    return k == ComplexKind::DxCohomology || k == ComplexKind::DyCohomology || k == ComplexKind::Dirac;
}

}  // namespace

std::vector<long> CohomologyEngine::genuine_multiplicities(const UrComplex& u, const Subspace& num,
                                                           const Subspace& den) const {
    const auto& g = m_->catalog.g();
    std::vector<Cyc> f(g.order());
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
        const std::size_t rep = g.classes()[c][0];
        Cyc tr = num.restricted_trace(u.pin[c]) - den.restricted_trace(u.pin[c]);
        tr /= spinor_.chi(rep);
        for (std::size_t w : g.classes()[c]) f[w] = tr;
    }
    return table().decompose_character(f);
}

CohomologyEngine::UrComplex CohomologyEngine::ur(long r) const {
    const auto& g = m_->catalog.g();
    const std::size_t n = ts_.rank();
    UrComplex u;
    u.r = r;
    u.offsets.assign(n + 2, 0);
    for (std::size_t l = 0; l <= n; ++l) u.offsets[l + 1] = u.offsets[l] + ts_.dim(r + static_cast<long>(l), l);
    const std::size_t d = u.dim();
    u.Dx = Matrix(d, d);
    u.Dy = Matrix(d, d);
    for (std::size_t l = 0; l <= n; ++l) {
        const long k = r + static_cast<long>(l);
        if (ts_.dim(k, l) == 0) continue;
        if (l < n) u.Dx.set_block(u.offsets[l + 1], u.offsets[l], ts_.dx(k, l));
        if (l > 0) u.Dy.set_block(u.offsets[l - 1], u.offsets[l], ts_.dy(k, l));
    }
    u.D = u.Dx + u.Dy;
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
        const std::size_t rep = g.classes()[c][0];
        Matrix p(d, d);
        for (std::size_t l = 0; l <= n; ++l) {
            const long k = r + static_cast<long>(l);
            if (ts_.dim(k, l) == 0) continue;
            p.set_block(u.offsets[l], u.offsets[l], ts_.pin_action(k, l, rep));
        }
        u.pin.push_back(std::move(p));
    }
    return u;
}

Subspace CohomologyEngine::parity_part(const UrComplex& u, bool even) {
    std::vector<Vector> cols;
    const std::size_t d = u.dim();
    for (std::size_t l = 0; l + 1 < u.offsets.size(); ++l) {
        if ((l % 2 == 0) != even) continue;
        for (std::size_t i = u.offsets[l]; i < u.offsets[l + 1]; ++i) {
            Vector v(d);
            v[i] = Cyc(1);
            cols.push_back(std::move(v));
        }
    }
    return Subspace::span(cols, d);
}

std::vector<CohomologyReport::Entry> CohomologyEngine::weight_entries(ComplexKind kind, long weight) const {
    const auto& g = m_->catalog.g();
    const std::size_t n = ts_.rank();
    std::vector<CohomologyReport::Entry> out;

    if (kind == ComplexKind::Dirac) {
        UrComplex u = ur(weight);
        if (u.dim() == 0) return out;
        const Subspace ker = Subspace::kernel_of(u.D);
        for (bool even : {true, false}) {
            const Subspace part = parity_part(u, even);
            const Subspace kp = Subspace::intersect(ker, part);
            if (kp.dim() == 0) continue;
            // image of D from the other parity lands in this one
            const Subspace other = parity_part(u, !even);
            const Subspace im = Subspace::image_of(u.D * other.basis());
            const Subspace den = Subspace::intersect(kp, im);
            if (kp.dim() == den.dim()) continue;
            out.push_back({weight, even ? 0u : 1u, genuine_multiplicities(u, kp, den)});
        }
        return out;
    }

    const bool mirror = is_mirror(kind);
    const bool genuine = is_genuine(kind);
    for (std::size_t l = 0; l <= n; ++l) {
        const long k = mirror ? weight - static_cast<long>(l) : weight + static_cast<long>(l);
        if (k < 0) continue;
        const std::size_t d = ts_.dim(k, l);
        if (d == 0) continue;
        Matrix out_map, in_map;
        const long kl = static_cast<long>(l);
        switch (kind) {
        case ComplexKind::HStarCohomology:
        case ComplexKind::DxCohomology:
            out_map = ts_.dx(k, l);
            in_map = l >= 1 ? ts_.dx(k - 1, l - 1) : Matrix(d, 0);
            break;
        case ComplexKind::HHomology:
        case ComplexKind::DyCohomology:
            out_map = ts_.dy(k, l);
            in_map = l + 1 <= n ? ts_.dy(k + 1, l + 1) : Matrix(d, 0);
            break;
        case ComplexKind::HStarHomology:
            out_map = ts_.mirror_partial(k, l);
            in_map = l + 1 <= n ? ts_.mirror_partial(k - 1, l + 1) : Matrix(d, 0);
            break;
        case ComplexKind::HCohomology:
            out_map = ts_.mirror_d(k, l);
            in_map = l >= 1 ? ts_.mirror_d(k + 1, l - 1) : Matrix(d, 0);
            break;
        default: break;
        }
        (void)kl;
        const Subspace ker = Subspace::kernel_of(out_map);
        const Subspace im = Subspace::image_of(in_map);
        if (!ker.contains(im)) throw std::logic_error("complex is not a complex: image not inside kernel");
        if (ker.dim() == im.dim()) continue;
        std::vector<Cyc> f(g.order());
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
            const std::size_t rep = g.classes()[c][0];
            Matrix act = genuine ? ts_.pin_action(k, l, rep)
                                 : (mirror ? ts_.w_action_dual(k, l, rep) : ts_.w_action(k, l, rep));
            Cyc tr = ker.restricted_trace(act) - im.restricted_trace(act);
            if (genuine) tr /= spinor_.chi(rep);
            for (std::size_t w : g.classes()[c]) f[w] = tr;
        }
        out.push_back({weight, l, table().decompose_character(f)});
    }
    return out;
}

CohomologyReport CohomologyEngine::compute(ComplexKind kind) const {
    CohomologyReport rep;
    rep.kind = kind;
    const auto labels = table().labels();
    for (const auto& s : labels) rep.labels.push_back(is_genuine(kind) ? Spinor::genuine_label(s) : s);
    rep.degrees = kind == ComplexKind::Dirac ? 2 : ts_.rank() + 1;
    const bool mirror = is_mirror(kind);
    auto [lo, hi] = weight_range(mirror);
    rep.weight_lo = lo;
    rep.weight_hi = hi;
    const long n = static_cast<long>(ts_.rank());
    if (m_->finite()) rep.complete = true;
    else if (bound_) rep.complete = hi >= (mirror ? *bound_ + n : *bound_);

    std::vector<long> weights;
    for (long w = lo; w <= hi; ++w) weights.push_back(w);
    std::vector<std::vector<CohomologyReport::Entry>> results(weights.size());
    const std::size_t threads = std::max<std::size_t>(1, opts_.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < weights.size(); ++i) results[i] = weight_entries(kind, weights[i]);
    } else {
        for (std::size_t start = 0; start < weights.size(); start += threads) {
            std::vector<std::future<std::vector<CohomologyReport::Entry>>> fs;
            for (std::size_t i = start; i < std::min(weights.size(), start + threads); ++i)
                fs.push_back(std::async(std::launch::async, [this, kind, w = weights[i]] { return weight_entries(kind, w); }));
            for (std::size_t i = 0; i < fs.size(); ++i) results[start + i] = fs[i].get();
        }
    }
    for (auto& r : results)
        for (auto& e : r) rep.entries.push_back(std::move(e));
    return rep;
}

// ---------------------------------------------------------- ComplexChecks

namespace {

// Explicit Koszul differentials straight from the defining formulas, used to
// cross-check the Clifford-algebra versions.
int position_sign(std::uint32_t subset, std::size_t i) { return std::popcount(subset & ((1u << i) - 1u)) % 2 ? -1 : 1; }

Matrix explicit_d(const TensorSpace& ts, long k, std::size_t l) {
    const Spinor& s = ts.spinor();
    const std::size_t n = ts.rank();
    Matrix out(ts.dim(k + 1, l + 1), ts.dim(k, l));
    if (out.empty() || l >= n) return out;
    const std::size_t dl = s.degree_dim(l), dl1 = s.degree_dim(l + 1);
    for (std::size_t j = 0; j < n; ++j) {
        // y_j ^ y_I: move y_j past the members of I below j
        Matrix wedge(dl1, dl);
        for (std::size_t a = 0; a < dl; ++a) {
            const std::uint32_t I = s.subsets()[s.degree_offset(l) + a];
            if (I & (1u << j)) continue;
            const std::size_t b = s.index_of(I | (1u << j)) - s.degree_offset(l + 1);
            wedge(b, a) = Cyc(position_sign(I, j));
        }
        out += Matrix::kron(ts.module().x(static_cast<std::size_t>(k), j), wedge);
    }
    return out;
}

Matrix explicit_partial(const TensorSpace& ts, long k, std::size_t l) {
    const Spinor& s = ts.spinor();
    const std::size_t n = ts.rank();
    if (l == 0) return Matrix(0, ts.dim(k, l));
    Matrix out(ts.dim(k - 1, l - 1), ts.dim(k, l));
    if (out.empty()) return out;
    const std::size_t dl = s.degree_dim(l), dl1 = s.degree_dim(l - 1);
    for (std::size_t j = 0; j < n; ++j) {
        // sum_k (-1)^k over the position k (1-based) of y_j in I
        Matrix rm(dl1, dl);
        for (std::size_t a = 0; a < dl; ++a) {
            const std::uint32_t I = s.subsets()[s.degree_offset(l) + a];
            if (!(I & (1u << j))) continue;
            const std::size_t b = s.index_of(I & ~(1u << j)) - s.degree_offset(l - 1);
            rm(b, a) = Cyc(-position_sign(I, j));
        }
        out += Matrix::kron(ts.module().y(static_cast<std::size_t>(k), j), rm);
    }
    return out;
}

std::string block_name(const char* what, long k, std::size_t l) {
    return std::string(what) + " on block (" + std::to_string(k) + ", " + std::to_string(l) + ")";
}

}  // namespace

std::string ComplexChecks::squares_zero(const TensorSpace& ts) {
    const std::size_t n = ts.rank();
    const long top = static_cast<long>(ts.module().window());
    for (long k = 0; k <= top; ++k) {
        for (std::size_t l = 0; l <= n; ++l) {
            if (ts.dim(k, l) == 0) continue;
            auto check = [&](const char* name, const std::function<Matrix()>& f) -> std::string {
                auto m = try_op(f);
                if (m && !m->is_zero()) return block_name(name, k, l);
                return "";
            };
            std::string r;
            if (l + 2 <= n) {
                r = check("d^2", [&] { return ts.dx(k + 1, l + 1) * ts.dx(k, l); });
                if (!r.empty()) return r;
                r = check("mirror d^2", [&] { return ts.mirror_d(k - 1, l + 1) * ts.mirror_d(k, l); });
                if (!r.empty()) return r;
            }
            if (l >= 2) {
                r = check("partial^2", [&] { return ts.dy(k - 1, l - 1) * ts.dy(k, l); });
                if (!r.empty()) return r;
                r = check("mirror partial^2", [&] { return ts.mirror_partial(k + 1, l - 1) * ts.mirror_partial(k, l); });
                if (!r.empty()) return r;
            }
        }
    }
    return "";
}

std::string ComplexChecks::equivariance(const TensorSpace& ts) {
    const auto& g = ts.module().catalog.g();
    const std::size_t n = ts.rank();
    const long top = static_cast<long>(ts.module().window());
    for (std::size_t w : g.generator_indices()) {
        for (long k = 0; k <= top; ++k) {
            for (std::size_t l = 0; l <= n; ++l) {
                if (ts.dim(k, l) == 0) continue;
                if (l < n) {
                    if (auto m = try_op([&] { return ts.dx(k, l); }); m && !m->empty()) {
                        if (ts.w_action(k + 1, l + 1, w) * *m != *m * ts.w_action(k, l, w))
                            return block_name("d is not W-equivariant", k, l);
                        if (ts.pin_action(k + 1, l + 1, w) * *m != *m * ts.pin_action(k, l, w))
                            return block_name("D_x does not commute with the pin action", k, l);
                    }
                    if (auto m = try_op([&] { return ts.mirror_d(k, l); }); m && !m->empty())
                        if (ts.w_action_dual(k - 1, l + 1, w) * *m != *m * ts.w_action_dual(k, l, w))
                            return block_name("mirror d is not W-equivariant", k, l);
                }
                if (l > 0) {
                    if (auto m = try_op([&] { return ts.dy(k, l); }); m && !m->empty()) {
                        if (ts.w_action(k - 1, l - 1, w) * *m != *m * ts.w_action(k, l, w))
                            return block_name("partial is not W-equivariant", k, l);
                        if (ts.pin_action(k - 1, l - 1, w) * *m != *m * ts.pin_action(k, l, w))
                            return block_name("D_y does not commute with the pin action", k, l);
                    }
                    if (auto m = try_op([&] { return ts.mirror_partial(k, l); }); m && !m->empty())
                        if (ts.w_action_dual(k + 1, l - 1, w) * *m != *m * ts.w_action_dual(k, l, w))
                            return block_name("mirror partial is not W-equivariant", k, l);
                }
            }
        }
    }
    return "";
}

std::string ComplexChecks::half_dirac_identification(const TensorSpace& ts) {
    const auto& g = ts.module().catalog.g();
    const std::size_t n = ts.rank();
    const long top = static_cast<long>(ts.module().window());
    for (long k = 0; k <= top; ++k) {
        for (std::size_t l = 0; l <= n; ++l) {
            if (ts.dim(k, l) == 0) continue;
            if (auto m = try_op([&] { return ts.dx(k, l); }))
                if (*m != explicit_d(ts, k, l)) return block_name("D_x differs from d", k, l);
            if (auto m = try_op([&] { return ts.dy(k, l); }))
                if (*m != scaled(explicit_partial(ts, k, l), Cyc(2))) return block_name("D_y differs from 2 partial", k, l);
            for (std::size_t w = 0; w < g.order(); ++w)
                if (ts.pin_action(k, l, w) != scaled(ts.w_action(k, l, w), ts.spinor().chi(w)))
                    return block_name("pin action differs from chi times the W action", k, l);
        }
    }
    return "";
}

std::string ComplexChecks::basis_change(const TensorSpace& ts, const Matrix& A) {
    const std::size_t n = ts.rank();
    auto inv = A.inverse();
    if (!inv) throw std::invalid_argument("basis_change: matrix is not invertible");
    const Matrix B = inv->transpose();
    const GradedModule& m = ts.module();
    const Spinor& s = ts.spinor();
    const long top = static_cast<long>(m.window());
    for (long k = 0; k <= top; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        // x'_i = sum_k B_ki x_k on M, y'_i = sum_j A_ji y_j on M, in C(V) likewise
        std::vector<Matrix> xs, ys, wedges, contracts;
        const bool has_x = m.x_defined(kk) && m.dim(kk + 1) > 0;
        for (std::size_t i = 0; i < n; ++i) {
            Matrix xm, ym(k > 0 ? m.dim(kk - 1) : 0, m.dim(kk));
            if (has_x) xm = Matrix(m.dim(kk + 1), m.dim(kk));
            Matrix wg(s.dim(), s.dim()), ct(s.dim(), s.dim());
            for (std::size_t j = 0; j < n; ++j) {
                if (has_x && !B(j, i).is_zero()) xm += scaled(m.x(kk, j), B(j, i));
                if (k > 0 && !A(j, i).is_zero()) ym += scaled(m.y(kk, j), A(j, i));
                if (!A(j, i).is_zero()) wg += scaled(s.wedge(j), A(j, i));
                if (!B(j, i).is_zero()) ct += scaled(s.contract(j), B(j, i));
            }
            xs.push_back(xm);
            ys.push_back(ym);
            wedges.push_back(wg);
            contracts.push_back(ct);
        }
        for (std::size_t l = 0; l <= n; ++l) {
            if (ts.dim(k, l) == 0) continue;
            const std::size_t off = s.degree_offset(l), dl = s.degree_dim(l);
            if (has_x && l < n) {
                Matrix dx(ts.dim(k + 1, l + 1), ts.dim(k, l));
                for (std::size_t i = 0; i < n; ++i)
                    dx += Matrix::kron(xs[i], wedges[i].block(s.degree_offset(l + 1), off, s.degree_dim(l + 1), dl));
                if (dx != ts.dx(k, l)) return block_name("D_x changes under a change of basis", k, l);
            }
            if (k > 0 && l > 0) {
                Matrix dy(ts.dim(k - 1, l - 1), ts.dim(k, l));
                for (std::size_t i = 0; i < n; ++i)
                    dy += Matrix::kron(ys[i], contracts[i].block(s.degree_offset(l - 1), off, s.degree_dim(l - 1), dl));
                if (dy != ts.dy(k, l)) return block_name("D_y changes under a change of basis", k, l);
            }
        }
    }
    return "";
}

std::string ComplexChecks::ur_split(const CohomologyEngine& e) {
    const TensorSpace& ts = e.space();
    const auto [lo, hi] = e.weight_range(false);
    const std::size_t n = ts.rank();
    const long top = static_cast<long>(ts.module().window());
    // every materialized block (k, l) with k - l in range is counted exactly once
    std::map<std::pair<long, std::size_t>, int> seen;
    for (long r = lo; r <= hi; ++r) {
        auto u = e.ur(r);
        for (std::size_t l = 0; l <= n; ++l)
            if (u.offsets[l + 1] > u.offsets[l]) ++seen[{r + static_cast<long>(l), l}];
        if (!(u.Dx * u.Dx).is_zero() || !(u.Dy * u.Dy).is_zero())
            return "half-Dirac operator does not square to zero on U_" + std::to_string(r);
        for (const auto& p : u.pin)
            if (p * u.D != u.D * p) return "D does not commute with the pin action on U_" + std::to_string(r);
    }
    for (long k = 0; k <= top; ++k)
        for (std::size_t l = 0; l <= n; ++l) {
            const long r = k - static_cast<long>(l);
            if (r < lo || r > hi || ts.dim(k, l) == 0) continue;
            if (seen[{k, l}] != 1) return block_name("block not in exactly one U_r", k, l);
        }
    return "";
}

// ---------------------------------------------------------- TheoremChecks

namespace {

std::string vec_string(const std::vector<long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::vector<long> twist(const IrrepTable& t, const std::vector<long>& v, std::size_t linear) {
    std::vector<long> out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) out[t.tensor_linear(i, linear)] += v[i];
    return out;
}

}  // namespace

std::string TheoremChecks::poincare(const CohomologyEngine& e) {
    const IrrepTable& t = e.table();
    const long n = static_cast<long>(e.space().rank());
    const std::size_t det_h = t.det_h_index(), det_hs = t.dual(det_h);
    const auto hs_co = e.compute(ComplexKind::HStarCohomology);
    const auto hs_ho = e.compute(ComplexKind::HStarHomology);
    const auto h_ho = e.compute(ComplexKind::HHomology);
    const auto h_co = e.compute(ComplexKind::HCohomology);
    // block (k, p) on M (x) Lambda(h) pairs with (k, n - p) on M (x) Lambda(h*):
    // weight w there corresponds to weight w + n here.
    for (long w = hs_co.weight_lo; w <= hs_co.weight_hi; ++w) {
        const long wm = w + n;
        if (wm < hs_ho.weight_lo || wm > hs_ho.weight_hi) continue;
        for (long p = 0; p <= n; ++p) {
            const auto i = static_cast<std::size_t>(n - p);
            auto lhs = hs_ho.at(wm, i);
            auto rhs = twist(t, hs_co.at(w, static_cast<std::size_t>(p)), det_hs);
            if (lhs != rhs)
                return "H_" + std::to_string(i) + "(h*) = " + vec_string(lhs) + " but H^" + std::to_string(p) +
                       "(h*) (x) det = " + vec_string(rhs) + " at weight " + std::to_string(wm);
            auto lhs2 = h_ho.at(w, static_cast<std::size_t>(p));
            auto rhs2 = twist(t, h_co.at(wm, i), det_h);
            if (lhs2 != rhs2)
                return "H_" + std::to_string(p) + "(h) = " + vec_string(lhs2) + " but H^" + std::to_string(i) +
                       "(h) (x) det = " + vec_string(rhs2) + " at weight " + std::to_string(w);
        }
    }
    return "";
}

std::string TheoremChecks::dx_identification(const CohomologyEngine& e) {
    const auto a = e.compute(ComplexKind::HStarCohomology), b = e.compute(ComplexKind::DxCohomology);
    const auto c = e.compute(ComplexKind::HHomology), d = e.compute(ComplexKind::DyCohomology);
    auto same = [](const CohomologyReport& x, const CohomologyReport& y) {
        if (x.entries.size() != y.entries.size()) return false;
        for (std::size_t i = 0; i < x.entries.size(); ++i)
            if (x.entries[i].weight != y.entries[i].weight || x.entries[i].degree != y.entries[i].degree ||
                x.entries[i].mult != y.entries[i].mult)
                return false;
        return true;
    };
    if (!same(a, b)) return "ker D_x / im D_x differs from H^*(h*, M) (x) chi";
    if (!same(c, d)) return "ker D_y / im D_y differs from H_*(h, M) (x) chi";
    return "";
}

TheoremChecks::Embedding TheoremChecks::embedding(const CohomologyEngine& e) {
    Embedding out;
    const auto dirac = e.compute(ComplexKind::Dirac);
    const auto hs = e.compute(ComplexKind::HStarCohomology).total();
    const auto hh = e.compute(ComplexKind::HHomology).total();
    const auto hd = dirac.total();
    out.labels = dirac.labels;
    for (std::size_t i = 0; i < hd.size(); ++i) {
        out.gap_hstar.push_back(hs[i] - hd[i]);
        out.gap_h.push_back(hh[i] - hd[i]);
        if (hs[i] < hd[i] || hh[i] < hd[i]) out.holds = false;
    }
    return out;
}

std::string TheoremChecks::hodge(const CohomologyEngine& e) {
    const GradedModule& m = e.space().module();
    const ContravariantForm form = contravariant_form(m);
    for (bool b : unitary_blocks(form))
        if (!b) throw std::invalid_argument("module is not certified unitary on the window");
    const Spinor& s = e.spinor();
    const Matrix weights = s.weighted_form();
    const std::size_t n = e.space().rank();
    const auto [lo, hi] = e.weight_range(false);
    const auto dx_rep = e.compute(ComplexKind::DxCohomology);
    const auto dy_rep = e.compute(ComplexKind::DyCohomology);
    const auto dirac = e.compute(ComplexKind::Dirac);
    for (long r = lo; r <= hi; ++r) {
        auto u = e.ur(r);
        const std::size_t d = u.dim();
        if (d == 0) continue;
        const std::string at = " on U_" + std::to_string(r);
        Matrix G(d, d);
        for (std::size_t l = 0; l <= n; ++l) {
            const long k = r + static_cast<long>(l);
            if (u.offsets[l + 1] == u.offsets[l]) continue;
            const std::size_t off = s.degree_offset(l), dl = s.degree_dim(l);
            G.set_block(u.offsets[l], u.offsets[l],
                        Matrix::kron(form.gram[static_cast<std::size_t>(k)], weights.block(off, off, dl, dl)));
        }
        if (G * u.Dx != -(u.Dy.adjoint() * G)) return "D_x is not minus the adjoint of D_y" + at;
        const Subspace kerD = Subspace::kernel_of(u.D), kerD2 = Subspace::kernel_of(u.D * u.D);
        const Subspace kerDx = Subspace::kernel_of(u.Dx), kerDy = Subspace::kernel_of(u.Dy);
        const Subspace imDx = Subspace::image_of(u.Dx), imDy = Subspace::image_of(u.Dy);
        if (!(kerD == kerD2)) return "ker D != ker D^2" + at;
        if (!(kerD == Subspace::intersect(kerDx, kerDy))) return "ker D != ker D_x cap ker D_y" + at;
        if (Subspace::intersect(imDx, imDy).dim() != 0) return "im D_x meets im D_y" + at;
        if (kerD.dim() + imDx.dim() + imDy.dim() != d || (kerD + imDx + imDy).dim() != d)
            return "M (x) S is not ker D + im D_x + im D_y" + at;
        if (kerD.dim() + imDx.dim() != kerDx.dim() || !(kerD + imDx == kerDx))
            return "ker D_x is not ker D + im D_x" + at;
    }
    // H_D = H^*(h*) (x) chi = H_*(h) (x) chi, per U_r
    for (long r = lo; r <= hi; ++r) {
        std::vector<long> a(dirac.labels.size(), 0), b = a, c = a;
        for (std::size_t p = 0; p < 2; ++p) add_into(a, dirac.at(r, p));
        for (std::size_t l = 0; l <= n; ++l) {
            add_into(b, dx_rep.at(r, l));
            add_into(c, dy_rep.at(r, l));
        }
        if (a != b || a != c)
            return "H_D(U_" + std::to_string(r) + ") = " + vec_string(a) + " but D_x, D_y cohomology give " +
                   vec_string(b) + ", " + vec_string(c);
    }
    return "";
}

TheoremChecks::Parity TheoremChecks::parity(const CohomologyEngine& e) {
    Parity out;
    const auto hs = e.compute(ComplexKind::HStarCohomology);
    const auto ev = hs.even(), od = hs.odd();
    for (std::size_t i = 0; i < ev.size(); ++i)
        if (ev[i] > 0 && od[i] > 0) {
            out.detail = "H^even and H^odd share " + hs.labels[i];
            return out;
        }
    out.applicable = true;
    const IrrepTable& t = e.table();
    const auto& g = e.space().module().catalog.g();
    const auto [lo, hi] = e.weight_range(false);
    std::vector<long> total(ev.size(), 0);
    for (long r = lo; r <= hi; ++r) {
        auto u = e.ur(r);
        if (u.dim() == 0) continue;
        const std::string at = " on U_" + std::to_string(r);
        const Subspace kerD = Subspace::kernel_of(u.D), kerDx = Subspace::kernel_of(u.Dx);
        std::vector<long> hd[2], hx[2];
        for (int par = 0; par < 2; ++par) {
            const bool even = par == 0;
            const Subspace part = CohomologyEngine::parity_part(u, even);
            const Subspace other = CohomologyEngine::parity_part(u, !even);
            const Subspace kd = Subspace::intersect(kerD, part);
            const Subspace imd = Subspace::intersect(kd, Subspace::image_of(u.D * other.basis()));
            hd[par] = e.genuine_multiplicities(u, kd, imd);
            const Subspace kx = Subspace::intersect(kerDx, part);
            const Subspace imx = Subspace::image_of(u.Dx * other.basis());
            hx[par] = e.genuine_multiplicities(u, kx, imx);
            add_into(total, hd[par]);
        }
        if (hd[0] != hx[0] || hd[1] != hx[1]) {
            out.detail = "H_D^+- differs from H^even/odd(D_x)" + at;
            return out;
        }
        // Euler characteristic: U^+ - U^- as a virtual genuine module
        std::vector<Cyc> f(g.order());
        const Subspace plus = CohomologyEngine::parity_part(u, true), minus = CohomologyEngine::parity_part(u, false);
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
            Cyc tr = plus.restricted_trace(u.pin[c]) - minus.restricted_trace(u.pin[c]);
            tr /= e.spinor().chi(g.classes()[c][0]);
            for (std::size_t w : g.classes()[c]) f[w] = tr;
        }
        const auto euler = t.decompose_character(f, true);
        for (std::size_t i = 0; i < euler.size(); ++i)
            if (hd[0][i] - hd[1][i] != euler[i] || hx[0][i] - hx[1][i] != euler[i]) {
                out.detail = "Euler characteristic mismatch" + at;
                return out;
            }
    }
    if (total != hs.total()) {
        out.detail = "H_D = " + vec_string(total) + " but H^*(h*) = " + vec_string(hs.total());
        return out;
    }
    out.holds = true;
    return out;
}

TheoremChecks::Bgg TheoremChecks::bgg(const CohomologyEngine& e, const std::vector<std::vector<std::string>>& resolution) {
    Bgg out;
    const GradedModule& m = e.space().module();
    const IrrepTable& t = e.table();
    const auto& g = m.catalog.g();
    const std::size_t n = g.rank();
    if (m.params.t.is_zero()) throw std::invalid_argument("BGG check needs t != 0");
    if (m.dim(0) == 0) throw std::invalid_argument("BGG check needs a nonzero lowest block");
    const Matrix om = m.omega(0);
    const Cyc om0 = om(0, 0);
    if (om != Matrix::scalar(m.dim(0), om0)) throw std::invalid_argument("Omega is not scalar on the lowest block");

    // Each M(sigma_ij) sits in M's grading shifted so that the lowest Omega
    // eigenvalues match.
    std::vector<std::vector<std::pair<std::size_t, long>>> terms;
    long max_shift = 0;
    for (std::size_t i = 0; i < resolution.size(); ++i) {
        terms.emplace_back();
        for (const auto& label : resolution[i]) {
            const std::size_t s = t.require(label);
            const Cyc shift = (euler_lowest(m.catalog, m.params, s) - om0) / (Cyc(2) * m.params.t);
            if (!shift.is_rational() || shift.rational().get_den() != 1 || shift.rational() < 0) {
                out.detail = "M(" + label + ") has no integral degree shift (" + shift.to_string() + ")";
                return out;
            }
            const long sh = shift.rational().get_num().get_si();
            max_shift = std::max(max_shift, sh);
            terms.back().push_back({s, sh});
        }
    }
    Monomials mons(n);
    const std::size_t top = m.finite() ? m.window() + static_cast<std::size_t>(max_shift) + 1 : m.window();
    for (std::size_t k = 0; k <= top; ++k) {
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
            const std::size_t rep = g.classes()[c][0];
            const Cyc lhs = k <= m.window() && m.dim(k) ? m.w(k, rep).trace() : Cyc();
            Cyc rhs;
            for (std::size_t i = 0; i < terms.size(); ++i)
                for (auto [s, sh] : terms[i]) {
                    if (static_cast<long>(k) < sh) continue;
                    const Cyc v = symmetric_power(mons, g.dual(rep), k - static_cast<std::size_t>(sh)).trace() *
                                  t[s].character[rep];
                    rhs += i % 2 ? -v : v;
                }
            if (lhs != rhs) {
                out.detail = "Euler characteristic of the resolution differs from M in degree " + std::to_string(k);
                return out;
            }
        }
    }
    out.euler_ok = true;

    const auto H = e.compute(ComplexKind::HStarHomology);
    out.bounded = true;
    out.equal = true;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<long> predicted(t.size(), 0);
        if (i < terms.size())
            for (auto [s, sh] : terms[i]) ++predicted[s];
        const auto got = H.in_degree(i);
        for (std::size_t a = 0; a < got.size(); ++a)
            if (got[a] > predicted[a]) out.bounded = false;
        if (got != predicted) out.equal = false;
    }
    out.disjoint = true;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        for (auto [s, a] : terms[i])
            for (auto [s2, b] : terms[i + 1])
                if (s == s2) out.disjoint = false;
    if (!out.bounded) out.detail = "H_*(h*, M) exceeds the resolution";
    else if (out.disjoint && !out.equal) out.detail = "resolution terms are disjoint but H_*(h*, M) differs";
    return out;
}

}  // namespace cherednik
