#include "cherednik/vogan.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

namespace cherednik {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
}

void exponent_vectors(std::size_t n, int degree, std::vector<int>& cur, std::size_t pos,
                      std::vector<std::vector<int>>& out) {
    if (pos + 1 == n) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[pos] = e;
        exponent_vectors(n, degree - e, cur, pos + 1, out);
    }
}

std::vector<std::vector<int>> exponents(std::size_t n, int degree) {
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    std::vector<int> cur(n, 0);
    exponent_vectors(n, degree, cur, 0, out);
    return out;
}

PbwElement single(const PbwMonomial& m, const Cyc& c = Cyc(1)) {
    PbwElement e;
    if (!c.is_zero()) e[m] = c;
    return e;
}

void add_matrix(std::map<PbwMonomial, Matrix>& terms, const PbwMonomial& m, const Matrix& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

Matrix unit_matrix(std::size_t d, std::size_t I, std::size_t J) {
    Matrix e(d, d);
    e(I, J) = Cyc(1);
    return e;
}

}  // namespace

// ---------------------------------------------------------------------------

int PbwMonomial::degree() const { return total(a) + total(b); }
int PbwMonomial::weight() const { return total(a) - total(b); }

std::string PbwMonomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << '*';
        first = false;
    };
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) {
            sep();
            os << 'y' << (i + 1) << '^' << a[i];
        }
    sep();
    os << 'w' << w;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] > 0) {
            sep();
            os << 'x' << (j + 1) << '^' << b[j];
        }
    return os.str();
}

std::string to_string(const PbwElement& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ")*" << m.to_string();
    }
    return os.str();
}

void add_to(PbwElement& acc, const PbwElement& e, const Cyc& scale) {
    if (scale.is_zero()) return;
    for (const auto& [m, c] : e) {
        auto it = acc.find(m);
        const Cyc v = scale * c;
        if (it == acc.end()) {
            if (!v.is_zero()) acc.emplace(m, v);
            continue;
        }
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// ---------------------------------------------------------------------------

PbwAlgebra::PbwAlgebra(const Catalog& cat, const Params& p) : cat_(cat), p_(p), n_(cat.g().rank()) {
    const auto& g = cat_.g();
    if (p_.c.size() != g.reflection_classes().size())
        throw std::invalid_argument("parameter count does not match the reflection classes");
    for (std::size_t r = 0; r < g.reflections().size(); ++r) {
        const auto& refl = g.reflections()[r];
        std::vector<std::vector<Cyc>> m(n_, std::vector<Cyc>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m[i][j] = p_.c_of(g, r) * commutator_coefficient(refl, i, j);
        comm_.push_back(std::move(m));
    }
}

PbwElement PbwAlgebra::scalar(const Cyc& c) const {
    return single(PbwMonomial{std::vector<int>(n_, 0), 0, std::vector<int>(n_, 0)}, c);
}

PbwElement PbwAlgebra::x(std::size_t i) const {
    PbwMonomial m{std::vector<int>(n_, 0), 0, std::vector<int>(n_, 0)};
    m.b.at(i) = 1;
    return single(m);
}

PbwElement PbwAlgebra::y(std::size_t i) const {
    PbwMonomial m{std::vector<int>(n_, 0), 0, std::vector<int>(n_, 0)};
    m.a.at(i) = 1;
    return single(m);
}

PbwElement PbwAlgebra::w(std::size_t e) const {
    if (e >= cat_.g().order()) throw std::out_of_range("group element index");
    return single(PbwMonomial{std::vector<int>(n_, 0), e, std::vector<int>(n_, 0)});
}

std::map<std::vector<int>, Cyc> PbwAlgebra::transformed_y_power(std::size_t v, const std::vector<int>& a) const {
    {
        std::lock_guard lock(mu_);
        auto it = ypow_cache_.find({v, a});
        if (it != ypow_cache_.end()) return it->second;
    }
    const Matrix& V = cat_.g().element(v);
    std::map<std::vector<int>, Cyc> poly{{std::vector<int>(n_, 0), Cyc(1)}};
    for (std::size_t i = 0; i < n_; ++i)
        for (int rep = 0; rep < a[i]; ++rep) {
            std::map<std::vector<int>, Cyc> next;
            for (const auto& [e, c] : poly)
                for (std::size_t j = 0; j < n_; ++j) {
                    if (V(j, i).is_zero()) continue;
                    std::vector<int> f = e;
                    ++f[j];
                    next[f] += c * V(j, i);
                }
            poly.clear();
            for (auto& [e, c] : next)
                if (!c.is_zero()) poly.emplace(e, c);
        }
    std::lock_guard lock(mu_);
    ypow_cache_.emplace(std::make_pair(v, a), poly);
    return poly;
}

PbwElement PbwAlgebra::left_w(std::size_t v, const PbwMonomial& m) const {
    PbwElement out;
    const std::size_t vw = cat_.g().mul(v, m.w);
    for (const auto& [a, c] : transformed_y_power(v, m.a)) out[PbwMonomial{a, vw, m.b}] = c;
    return out;
}

PbwElement PbwAlgebra::left_w(std::size_t v, const PbwElement& e) const {
    PbwElement out;
    for (const auto& [m, c] : e) add_to(out, left_w(v, m), c);
    return out;
}

PbwElement PbwAlgebra::left_y(std::size_t i, const PbwElement& e) {
    PbwElement out;
    for (const auto& [m, c] : e) {
        PbwMonomial k = m;
        ++k.a[i];
        out.emplace(std::move(k), c);
    }
    return out;
}

PbwElement PbwAlgebra::left_x(std::size_t j, const PbwMonomial& m) const {
    const auto key = std::make_pair(j, m);
    {
        std::lock_guard lock(mu_);
        auto it = left_x_cache_.find(key);
        if (it != left_x_cache_.end()) return it->second;
    }
    PbwElement out;
    const auto& g = cat_.g();
    if (all_zero(m.a)) {
        // x_j w = w (w^{-1} . x_j)
        const Matrix& D = g.dual(g.inverse(m.w));
        for (std::size_t k = 0; k < n_; ++k) {
            if (D(k, j).is_zero()) continue;
            PbwMonomial r = m;
            ++r.b[k];
            out[r] = D(k, j);
        }
    } else {
        // x_j y_i = y_i x_j - t delta_ij + sum_s c_s C_s(i, j) s
        const std::size_t i = static_cast<std::size_t>(
            std::find_if(m.a.begin(), m.a.end(), [](int e) { return e > 0; }) - m.a.begin());
        PbwMonomial rest = m;
        --rest.a[i];
        out = left_y(i, left_x(j, rest));
        if (i == j) add_to(out, single(rest), -p_.t);
        for (std::size_t r = 0; r < comm_.size(); ++r)
            if (!comm_[r][i][j].is_zero()) add_to(out, left_w(g.reflections()[r].element, rest), comm_[r][i][j]);
    }
    std::lock_guard lock(mu_);
    left_x_cache_.emplace(key, out);
    return out;
}

PbwElement PbwAlgebra::left_x(std::size_t j, const PbwElement& e) const {
    PbwElement out;
    for (const auto& [m, c] : e) add_to(out, left_x(j, m), c);
    return out;
}

PbwElement PbwAlgebra::mul(const PbwElement& a, const PbwElement& b) const {
    PbwElement out;
    for (const auto& [m, c] : a) {
        PbwElement r = b;
        for (std::size_t j = n_; j-- > 0;)
            for (int k = 0; k < m.b[j]; ++k) r = left_x(j, r);
        r = left_w(m.w, r);
        for (std::size_t i = n_; i-- > 0;)
            for (int k = 0; k < m.a[i]; ++k) r = left_y(i, r);
        add_to(out, r, c);
    }
    return out;
}

PbwElement PbwAlgebra::normalize(const std::vector<Letter>& word) const {
    PbwElement r = one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case Letter::X:
                if (it->index >= n_) throw std::out_of_range("x index");
                r = left_x(it->index, r);
                break;
            case Letter::Y:
                if (it->index >= n_) throw std::out_of_range("y index");
                r = left_y(it->index, r);
                break;
            case Letter::W:
                if (it->index >= cat_.g().order()) throw std::out_of_range("group element index");
                r = left_w(it->index, r);
                break;
        }
    }
    return r;
}

PbwElement PbwAlgebra::conjugate(std::size_t v, const PbwElement& p) const {
    PbwElement out;
    const std::size_t vi = cat_.g().inverse(v);
    for (const auto& [m, c] : p) {
        const auto key = std::make_pair(v, m);
        PbwElement img;
        bool hit = false;
        {
            std::lock_guard lock(mu_);
            auto it = conj_cache_.find(key);
            if (it != conj_cache_.end()) {
                img = it->second;
                hit = true;
            }
        }
        if (!hit) {
            img = mul(left_w(v, m), w(vi));
            std::lock_guard lock(mu_);
            conj_cache_.emplace(key, img);
        }
        add_to(out, img, c);
    }
    return out;
}

PbwElement PbwAlgebra::commutator(const PbwElement& a, const PbwElement& b) const {
    PbwElement out = mul(a, b);
    add_to(out, mul(b, a), Cyc(-1));
    return out;
}

std::vector<PbwMonomial> PbwAlgebra::monomials(int max_degree, int weight) const {
    std::vector<PbwMonomial> out;
    for (int deg = 0; deg <= max_degree; ++deg) {
        if ((deg + weight) % 2 != 0) continue;
        const int da = (deg + weight) / 2, db = (deg - weight) / 2;
        if (da < 0 || db < 0) continue;
        for (const auto& a : exponents(n_, da))
            for (std::size_t e = 0; e < cat_.g().order(); ++e)
                for (const auto& b : exponents(n_, db)) out.push_back(PbwMonomial{a, e, b});
    }
    return out;
}

namespace {

// Applies x^b (x), then w, then y^a to block k. Returns nullopt when the
// result is zero because it leaves a finite module.
std::optional<Matrix> apply_monomial(const PbwMonomial& m, const GradedModule& mod, std::size_t k) {
    Matrix cur = Matrix::identity(mod.dim(k));
    std::size_t block = k;
    for (std::size_t j = 0; j < m.b.size(); ++j)
        for (int r = 0; r < m.b[j]; ++r) {
            if (mod.finite() && block >= mod.window()) return std::nullopt;
            cur = mod.x(block, j) * cur;
            ++block;
        }
    cur = mod.w(block, m.w) * cur;
    for (std::size_t i = 0; i < m.a.size(); ++i)
        for (int r = 0; r < m.a[i]; ++r) {
            if (block == 0) return std::nullopt;
            cur = mod.y(block, i) * cur;
            --block;
        }
    return cur;
}

std::size_t target_dim(const GradedModule& mod, std::size_t k, int weight) {
    const long t = static_cast<long>(k) - weight;
    return t < 0 ? 0 : mod.dim(static_cast<std::size_t>(t));
}

}  // namespace

Matrix PbwAlgebra::evaluate(const PbwElement& p, const GradedModule& m, std::size_t k) const {
    std::optional<int> weight;
    for (const auto& [mono, c] : p) {
        if (weight && *weight != mono.weight()) throw std::invalid_argument("evaluate needs a weight-homogeneous element");
        weight = mono.weight();
    }
    Matrix out(target_dim(m, k, weight.value_or(0)), m.dim(k));
    for (const auto& [mono, c] : p)
        if (auto r = apply_monomial(mono, m, k)) out += c * *r;
    return out;
}

Matrix PbwAlgebra::evaluate_word(const std::vector<Letter>& word, const GradedModule& m, std::size_t k) {
    Matrix cur = Matrix::identity(m.dim(k));
    long block = static_cast<long>(k);
    int weight = 0;
    for (const auto& l : word) weight += l.kind == Letter::Y ? 1 : l.kind == Letter::X ? -1 : 0;
    const std::size_t rows = target_dim(m, k, weight);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case Letter::X:
                if (m.finite() && block >= static_cast<long>(m.window())) return Matrix(rows, m.dim(k));
                cur = m.x(static_cast<std::size_t>(block), it->index) * cur;
                ++block;
                break;
            case Letter::Y:
                if (block == 0) return Matrix(rows, m.dim(k));
                cur = m.y(static_cast<std::size_t>(block), it->index) * cur;
                --block;
                break;
            case Letter::W:
                cur = m.w(static_cast<std::size_t>(block), it->index) * cur;
                break;
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------

bool TensorElement::is_zero() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    for (const auto& [m, c] : a.terms) {
        auto it = b.terms.find(m);
        if (it == b.terms.end() ? !c.is_zero() : it->second != c) return false;
    }
    for (const auto& [m, c] : b.terms)
        if (!a.terms.count(m) && !c.is_zero()) return false;
    return true;
}

TensorAlgebra::TensorAlgebra(const Catalog& cat, const Params& p, SpinorOptions opts)
    : pbw_(cat, p), spinor_(pbw_.catalog().g(), opts), sdim_(spinor_.dim()) {
    const std::size_t n = pbw_.rank();
    dx_ = zero();
    dy_ = zero();
    for (std::size_t i = 0; i < n; ++i) {
        dx_ = add(dx_, make(pbw_.x(i), spinor_.wedge(i)));
        dy_ = add(dy_, make(pbw_.y(i), spinor_.contract(i)));
    }
    const auto& g = pbw_.catalog().g();
    for (std::size_t w = 0; w < g.order(); ++w) lift_inv_.push_back(spinor_.lift(w).inverse().value());

    // column (I, J) of the change of basis: the matrix of y_I x_J
    const std::size_t d2 = sdim_ * sdim_;
    Matrix mono(d2, d2);
    for (std::size_t I = 0; I < sdim_; ++I)
        for (std::size_t J = 0; J < sdim_; ++J) {
            Matrix op = Matrix::identity(sdim_);
            const auto sI = spinor_.subsets()[I], sJ = spinor_.subsets()[J];
            for (std::size_t i = 0; i < n; ++i)
                if (sI >> i & 1u) op = op * spinor_.wedge(i);
            for (std::size_t j = 0; j < n; ++j)
                if (sJ >> j & 1u) op = op * spinor_.contract(j);
            for (std::size_t r = 0; r < sdim_; ++r)
                for (std::size_t c = 0; c < sdim_; ++c) mono(r * sdim_ + c, I * sdim_ + J) = op(r, c);
        }
    auto inv = mono.inverse();
    if (!inv) throw std::logic_error("Clifford monomials do not span End(S)");
    to_monomial_basis_ = *inv;
}

TensorElement TensorAlgebra::zero() const {
    TensorElement e;
    e.spinor_dim = sdim_;
    return e;
}

TensorElement TensorAlgebra::make(const PbwElement& h, const Matrix& c) const {
    TensorElement e = zero();
    for (const auto& [m, coef] : h) add_matrix(e.terms, m, coef * c);
    return e;
}

TensorElement TensorAlgebra::embed(const PbwElement& h) const { return make(h, Matrix::identity(sdim_)); }

TensorElement TensorAlgebra::add(const TensorElement& a, const TensorElement& b, const Cyc& scale) const {
    TensorElement out = a;
    if (scale.is_zero()) return out;
    for (const auto& [m, c] : b.terms) add_matrix(out.terms, m, scale * c);
    return out;
}

TensorElement TensorAlgebra::mul(const TensorElement& a, const TensorElement& b) const {
    TensorElement out = zero();
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            const Matrix c = ca * cb;
            if (c.is_zero()) continue;
            for (const auto& [m, coef] : pbw_.mul(single(ma), single(mb))) add_matrix(out.terms, m, coef * c);
        }
    return out;
}

bool TensorAlgebra::clifford_odd(std::size_t I, std::size_t J) const {
    return (spinor_.degree_of(I) + spinor_.degree_of(J)) % 2 == 1;
}

int TensorAlgebra::clifford_weight(std::size_t I, std::size_t J) const {
    return static_cast<int>(spinor_.degree_of(I)) - static_cast<int>(spinor_.degree_of(J));
}

TensorElement TensorAlgebra::epsilon(const TensorElement& a) const {
    TensorElement out = a;
    for (auto& [m, c] : out.terms)
        for (std::size_t I = 0; I < sdim_; ++I)
            for (std::size_t J = 0; J < sdim_; ++J)
                if (clifford_odd(I, J)) c(I, J) = -c(I, J);
    return out;
}

TensorElement TensorAlgebra::delta_w(std::size_t w) const { return make(pbw_.w(w), spinor_.lift(w)); }

TensorElement TensorAlgebra::delta(const TensorElement& a, bool partial) const {
    const TensorElement& D = partial ? dy_ : dx_;
    return add(mul(D, a), mul(epsilon(a), D), Cyc(-1));
}

TensorElement TensorAlgebra::conjugate_by_lift(std::size_t w, const TensorElement& a) const {
    TensorElement out = zero();
    const Matrix& L = spinor_.lift(w);
    for (const auto& [m, c] : a.terms) {
        const Matrix cc = L * c * lift_inv_[w];
        for (const auto& [mm, coef] : pbw_.conjugate(w, single(m))) add_matrix(out.terms, mm, coef * cc);
    }
    return out;
}

TensorBasis TensorAlgebra::basis(int max_degree) const {
    TensorBasis b;
    b.max_degree = max_degree;
    const int n = static_cast<int>(pbw_.rank());
    for (int weight = -max_degree; weight <= max_degree; ++weight) {
        if (weight < -n || weight > n) continue;  // no Clifford part can balance it
        for (const auto& m : pbw_.monomials(max_degree, weight))
            for (std::size_t I = 0; I < sdim_; ++I)
                for (std::size_t J = 0; J < sdim_; ++J)
                    if (clifford_weight(I, J) == -weight) {
                        b.index.emplace(std::make_tuple(m, I, J), b.items.size());
                        b.items.push_back({m, I, J});
                    }
    }
    return b;
}

Vector TensorAlgebra::coordinates(const TensorBasis& b, const TensorElement& e) const {
    Vector v(b.size());
    for (const auto& [m, c] : e.terms)
        for (std::size_t I = 0; I < sdim_; ++I)
            for (std::size_t J = 0; J < sdim_; ++J) {
                if (c(I, J).is_zero()) continue;
                auto it = b.index.find(std::make_tuple(m, I, J));
                if (it == b.index.end())
                    throw std::out_of_range("element has a term outside the filtered weight-zero basis: " +
                                            m.to_string());
                v[it->second] = c(I, J);
            }
    return v;
}

TensorElement TensorAlgebra::from_coordinates(const TensorBasis& b, const Vector& v) const {
    TensorElement e = zero();
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (v[k].is_zero()) continue;
        Matrix c(sdim_, sdim_);
        c(b.items[k].I, b.items[k].J) = v[k];
        add_matrix(e.terms, b.items[k].mono, c);
    }
    return e;
}

Matrix TensorAlgebra::invariants(const TensorBasis& b) const {
    const auto& g = pbw_.catalog().g();
    const Cyc inv_order = Cyc(1) / Cyc(static_cast<long>(g.order()));
    Matrix P(b.size(), b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
        const TensorElement e = make(single(b.items[k].mono), unit_matrix(sdim_, b.items[k].I, b.items[k].J));
        TensorElement avg = zero();
        for (std::size_t w = 0; w < g.order(); ++w) avg = add(avg, conjugate_by_lift(w, e));
        const Vector v = coordinates(b, avg);
        for (std::size_t r = 0; r < b.size(); ++r) P(r, k) = inv_order * v[r];
    }
    return P.column_space();
}

std::vector<TensorAlgebra::CentralGroupElement> TensorAlgebra::central_group_elements() const {
    const auto& g = pbw_.catalog().g();
    std::vector<CentralGroupElement> out;
    for (const auto& cls : g.classes()) {
        const std::size_t w = cls.front();
        std::set<std::pair<std::size_t, int>> members;
        for (std::size_t v = 0; v < g.order(); ++v) {
            const std::size_t c = g.mul(g.mul(v, w), g.inverse(v));
            const Matrix conj = spinor_.lift(v) * spinor_.lift(w) * lift_inv_[v];
            if (conj == spinor_.lift(c))
                members.insert({c, 1});
            else if (conj == -spinor_.lift(c))
                members.insert({c, -1});
            else
                throw std::logic_error("conjugate of a lift is not a lift");
        }
        std::vector<Cyc> coef(g.order());
        for (const auto& [c, s] : members) coef[c] += Cyc(s);
        TensorElement e = zero();
        for (std::size_t c = 0; c < g.order(); ++c)
            if (!coef[c].is_zero()) e = add(e, delta_w(c), coef[c]);
        if (!e.is_zero()) out.push_back({std::move(e), std::move(coef)});
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> TensorAlgebra::serialize(const TensorElement& e) const {
    std::vector<std::pair<std::string, std::string>> out;
    const std::size_t n = pbw_.rank();
    auto cliff = [&](std::size_t I, std::size_t J) {
        std::string s;
        const auto sI = spinor_.subsets()[I], sJ = spinor_.subsets()[J];
        for (std::size_t i = 0; i < n; ++i)
            if (sI >> i & 1u) s += (s.empty() ? "" : ".") + std::string("y") + std::to_string(i + 1);
        for (std::size_t j = 0; j < n; ++j)
            if (sJ >> j & 1u) s += (s.empty() ? "" : ".") + std::string("x") + std::to_string(j + 1);
        return s.empty() ? std::string("1") : s;
    };
    for (const auto& [m, c] : e.terms) {
        Vector flat(sdim_ * sdim_);
        for (std::size_t r = 0; r < sdim_; ++r)
            for (std::size_t col = 0; col < sdim_; ++col) flat[r * sdim_ + col] = c(r, col);
        const Vector coords = to_monomial_basis_ * flat;
        for (std::size_t I = 0; I < sdim_; ++I)
            for (std::size_t J = 0; J < sdim_; ++J) {
                const Cyc& v = coords[I * sdim_ + J];
                if (!v.is_zero()) out.emplace_back(v.to_string(), m.to_string() + " # " + cliff(I, J));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_cap(const TensorAlgebra& ta, int degree) {
    const std::size_t n = ta.pbw().rank();
    const int cap = n == 1 ? 4 : n == 2 ? 2 : 0;
    if (degree < 0) throw std::invalid_argument("negative filtration degree");
    if (degree > cap)
        throw CapExceeded("filtration degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap) +
                          " for rank " + std::to_string(n));
}

// delta of every column of inv (coordinates in src) in the coordinates of dst.
Matrix delta_matrix(const TensorAlgebra& ta, const TensorBasis& src, const Matrix& inv, const TensorBasis& dst,
                    bool partial) {
    Matrix out(dst.size(), inv.cols());
    for (std::size_t k = 0; k < inv.cols(); ++k) {
        const Vector v = ta.coordinates(dst, ta.delta(ta.from_coordinates(src, inv.column(k)), partial));
        out.set_column(k, v);
    }
    return out;
}

Matrix central_matrix(const TensorAlgebra& ta, const TensorBasis& dst,
                      const std::vector<TensorAlgebra::CentralGroupElement>& z) {
    Matrix out(dst.size(), z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out.set_column(k, ta.coordinates(dst, z[k].element));
    return out;
}

Vector slice(const Vector& v, std::size_t from, std::size_t count) {
    return Vector(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + count));
}

}  // namespace

VoganCertificate verify_vogan_decomposition(const TensorAlgebra& ta, int degree, bool partial, std::size_t threads) {
    check_cap(ta, degree);
    VoganCertificate cert;
    cert.group = ta.pbw().catalog().name;
    cert.partial = partial;
    cert.degree = degree;

    const TensorBasis src = ta.basis(degree), dst = ta.basis(degree + 1);
    const Matrix inv = ta.invariants(src);
    cert.invariant_dim = inv.cols();
    const Matrix dmat = delta_matrix(ta, src, inv, dst, partial);
    const auto z = ta.central_group_elements();
    const Matrix zmat = central_matrix(ta, dst, z);
    cert.central_dim = zmat.rank();

    // delta^2 = 0 on the invariants, and Delta(C[W~]^W~) lies in the kernel
    cert.delta_square_zero = true;
    for (std::size_t k = 0; k < inv.cols() && cert.delta_square_zero; ++k) {
        const TensorElement a = ta.from_coordinates(src, inv.column(k));
        if (!ta.delta(ta.delta(a, partial), partial).is_zero()) cert.delta_square_zero = false;
    }
    if (!cert.delta_square_zero) cert.failure = "delta^2 is not zero";
    for (const auto& e : z)
        if (!ta.delta(e.element, partial).is_zero()) cert.failure = "a central group element is not delta-closed";

    const Matrix ker = dmat.kernel();
    cert.kernel_dim = ker.cols();
    cert.image_dim = dmat.rank();
    const Matrix both = Matrix::hstack(dmat, zmat);
    cert.direct = both.rank() == cert.image_dim + cert.central_dim;

    // every kernel vector is delta(b) + s with b invariant of degree <= N
    std::vector<Vector> targets;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Vector src_coords = inv * ker.column(k);
        targets.push_back(ta.coordinates(dst, ta.from_coordinates(src, src_coords)));
    }
    std::vector<std::optional<Vector>> sols(targets.size());
    const std::size_t workers = std::max<std::size_t>(1, threads);
    for (std::size_t start = 0; start < targets.size(); start += workers) {
        std::vector<std::future<std::optional<Vector>>> jobs;
        for (std::size_t k = start; k < std::min(targets.size(), start + workers); ++k)
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                      [&both, &targets, k] { return both.solve(targets[k]); }));
        for (std::size_t k = 0; k < jobs.size(); ++k) sols[start + k] = jobs[k].get();
    }
    cert.decomposes = std::all_of(sols.begin(), sols.end(), [](const auto& s) { return s.has_value(); });
    if (!cert.decomposes && cert.failure.empty()) cert.failure = "a delta-closed invariant is not decomposed";

    constexpr std::size_t kMaxWitnesses = 8;
    for (std::size_t k = 0; k < sols.size() && cert.witnesses.size() < kMaxWitnesses; ++k) {
        if (!sols[k]) continue;
        VoganCertificate::Witness wit;
        wit.kernel_vector = ta.serialize(ta.from_coordinates(dst, targets[k]));
        const Vector bc = inv * slice(*sols[k], 0, dmat.cols());
        wit.preimage = ta.serialize(ta.from_coordinates(src, bc));
        wit.central_part = ta.serialize(ta.from_coordinates(dst, zmat * slice(*sols[k], dmat.cols(), zmat.cols())));
        cert.witnesses.push_back(std::move(wit));
    }
    return cert;
}

std::vector<PbwElement> find_central_elements(const PbwAlgebra& h, int max_degree, bool weight_zero) {
    const std::size_t n = h.rank();
    const auto& g = h.catalog().g();
    std::vector<PbwElement> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(h.x(i));
        gens.push_back(h.y(i));
    }
    for (std::size_t e : g.generator_indices()) gens.push_back(h.w(e));

    std::vector<PbwElement> out;
    const int lo = weight_zero ? 0 : -max_degree, hi = weight_zero ? 0 : max_degree;
    for (int weight = lo; weight <= hi; ++weight) {
        const auto basis = h.monomials(max_degree, weight);
        if (basis.empty()) continue;
        std::map<std::pair<std::size_t, PbwMonomial>, std::size_t> rows;
        std::vector<std::vector<std::pair<std::size_t, Cyc>>> cols(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                for (const auto& [m, c] : h.commutator(single(basis[k]), gens[gi])) {
                    auto it = rows.emplace(std::make_pair(gi, m), rows.size()).first;
                    cols[k].push_back({it->second, c});
                }
        Matrix M(rows.size(), basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (const auto& [r, c] : cols[k]) M(r, k) += c;
        const Matrix ker = M.rows() == 0 ? Matrix::identity(basis.size()) : M.kernel();
        for (std::size_t k = 0; k < ker.cols(); ++k) {
            PbwElement e;
            for (std::size_t r = 0; r < basis.size(); ++r)
                if (!ker(r, k).is_zero()) e[basis[r]] = ker(r, k);
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace {

int element_degree(const PbwElement& b) {
    int d = 0;
    for (const auto& [m, c] : b) d = std::max(d, m.degree());
    return d;
}

struct ImageSolve {
    TensorBasis src, dst;
    Matrix inv, dmat;
};

ImageSolve image_solve(const TensorAlgebra& ta, int degree, bool partial) {
    check_cap(ta, degree);
    ImageSolve s{ta.basis(degree), ta.basis(degree + 1), {}, {}};
    s.inv = ta.invariants(s.src);
    s.dmat = delta_matrix(ta, s.src, s.inv, s.dst, partial);
    return s;
}

}  // namespace

ZetaResult zeta_d(const TensorAlgebra& ta, const PbwElement& b, int search_degree) {
    ZetaResult res;
    res.zeta = ta.zero();
    res.preimage = ta.zero();
    for (const auto& [m, c] : b)
        if (m.weight() != 0) {
            res.failure = "element is not of weight zero";
            return res;
        }
    if (element_degree(b) > search_degree + 1) {
        res.failure = "search degree below the degree of the element";
        return res;
    }
    const ImageSolve s = image_solve(ta, search_degree, false);
    const auto z = ta.central_group_elements();
    const Matrix zmat = central_matrix(ta, s.dst, z);
    const TensorElement target = ta.embed(b);
    if (!ta.delta(target).is_zero()) {
        res.failure = "b (x) 1 is not delta_d-closed";
        return res;
    }
    auto sol = Matrix::hstack(s.dmat, zmat).solve(ta.coordinates(s.dst, target));
    if (!sol) {
        res.failure = "no decomposition within the search degree";
        return res;
    }
    res.found = true;
    const auto& g = ta.pbw().catalog().g();
    res.coefficients.assign(g.order(), Cyc());
    for (std::size_t k = 0; k < z.size(); ++k) {
        const Cyc& a = (*sol)[s.dmat.cols() + k];
        if (a.is_zero()) continue;
        res.zeta = ta.add(res.zeta, z[k].element, a);
        for (std::size_t w = 0; w < g.order(); ++w) res.coefficients[w] += a * z[k].coefficients[w];
    }
    res.preimage = ta.from_coordinates(s.src, s.inv * slice(*sol, 0, s.dmat.cols()));
    return res;
}

Cyc evaluate_on_genuine(const TensorAlgebra& ta, const std::vector<Cyc>& coefficients, std::size_t sigma) {
    const auto& table = ta.pbw().catalog().table();
    const auto chi = ta.spinor().genuine_character(table, sigma);
    Cyc v;
    for (std::size_t w = 0; w < coefficients.size(); ++w) v += coefficients[w] * chi[w];
    return v / Cyc(static_cast<long>(table[sigma].dim));
}

std::optional<Cyc> central_scalar(const PbwAlgebra& h, const PbwElement& z, const GradedModule& m) {
    std::optional<Cyc> scalar;
    const int d = element_degree(z);
    for (std::size_t k = 0; k <= m.window(); ++k) {
        if (m.dim(k) == 0) continue;
        if (!m.finite() && k + static_cast<std::size_t>(d) > m.window()) break;
        const Matrix a = h.evaluate(z, m, k);
        const Cyc s = a(0, 0);
        if (a != Matrix::scalar(m.dim(k), s)) return std::nullopt;
        if (scalar && *scalar != s) return std::nullopt;
        scalar = s;
    }
    return scalar;
}

CasselmanOsborne casselman_osborne_check(const TensorAlgebra& ta, const GradedModule& m,
                                         const std::vector<PbwElement>& central, int search_degree) {
    CasselmanOsborne out;
    const auto& table = m.catalog.table();
    CohomologyOptions opts;
    opts.spinor = SpinorOptions{};
    CohomologyEngine e(m, opts);
    const auto rep = e.compute(ComplexKind::HStarCohomology);
    const auto tot = rep.total();
    for (const auto& z : central) {
        const auto beta = central_scalar(ta.pbw(), z, m);
        if (!beta) {
            out.holds = false;
            out.failure = "central element " + to_string(z) + " is not scalar on " + m.name;
            return out;
        }
        const ZetaResult zr = zeta_d(ta, z, search_degree);
        if (!zr.found) {
            out.holds = false;
            out.failure = "zeta_d(" + to_string(z) + "): " + zr.failure;
            return out;
        }
        for (std::size_t tau = 0; tau < tot.size(); ++tau) {
            if (tot[tau] == 0) continue;
            CasselmanOsborne::Row row;
            row.element = to_string(z);
            row.constituent = table[tau].label;
            row.beta = *beta;
            row.zeta_value = evaluate_on_genuine(ta, zr.coefficients, tau);
            row.equal = row.beta == row.zeta_value;
            out.holds = out.holds && row.equal;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

ImageWitness central_in_image(const TensorAlgebra& ta, const PbwElement& z, int search_degree, bool partial) {
    ImageWitness out;
    for (std::size_t i = 0; i < ta.pbw().rank(); ++i)
        if (!ta.pbw().commutator(z, ta.pbw().x(i)).empty() || !ta.pbw().commutator(z, ta.pbw().y(i)).empty()) {
            out.failure = "element is not central";
            return out;
        }
    for (std::size_t e : ta.pbw().catalog().g().generator_indices())
        if (!ta.pbw().commutator(z, ta.pbw().w(e)).empty()) {
            out.failure = "element is not central";
            return out;
        }
    const ImageSolve s = image_solve(ta, search_degree, partial);
    const TensorElement target = ta.embed(z);
    Vector coords;
    try {
        coords = ta.coordinates(s.dst, target);
    } catch (const std::out_of_range&) {
        out.failure = "element lies above the search degree";
        return out;
    }
    auto sol = s.dmat.solve(coords);
    if (!sol) {
        out.failure = "no preimage within the search degree";
        return out;
    }
    out.found = true;
    out.preimage = ta.serialize(ta.from_coordinates(s.src, s.inv * *sol));
    return out;
}

}  // namespace cherednik
