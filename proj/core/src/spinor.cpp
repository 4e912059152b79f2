#include "cherednik/spinor.hpp"

#include <algorithm>
#include <bit>

namespace cherednik {

namespace {

std::vector<std::size_t> members(std::uint32_t s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

long sign_before(std::uint32_t subset, std::size_t i) {
    const int below = std::popcount(subset & ((1u << i) - 1u));
    return below % 2 ? -1 : 1;
}

Matrix minors(const Matrix& m, const std::vector<std::uint32_t>& subsets, std::size_t lo, std::size_t hi) {
    Matrix out(hi - lo, hi - lo);
    for (std::size_t a = lo; a < hi; ++a) {
        auto rows = members(subsets[a]);
        for (std::size_t b = lo; b < hi; ++b) {
            auto cols = members(subsets[b]);
            if (rows.empty()) {
                out(a - lo, b - lo) = Cyc(1);
                continue;
            }
            Matrix sub(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
            out(a - lo, b - lo) = sub.det();
        }
    }
    return out;
}

}  // namespace

Spinor::Spinor(const ReflectionGroup& g, SpinorOptions opts) : g_(&g), n_(g.rank()) {
    if (n_ > 8) throw std::invalid_argument("Spinor: rank too large");
    for (std::uint32_t s = 0; s < (1u << n_); ++s) subsets_.push_back(s);
    std::sort(subsets_.begin(), subsets_.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return members(a) < members(b);
    });
    offsets_.assign(n_ + 2, 0);
    for (auto s : subsets_) ++offsets_[static_cast<std::size_t>(std::popcount(s)) + 1];
    for (std::size_t l = 1; l < offsets_.size(); ++l) offsets_[l] += offsets_[l - 1];

    const std::size_t d = dim();
    const Cyc contraction_scale(opts.flipped_contraction ? 2 : -2);
    for (std::size_t i = 0; i < n_; ++i) {
        Matrix w(d, d), c(d, d);
        const std::uint32_t bit = 1u << i;
        for (std::size_t b = 0; b < d; ++b) {
            const std::uint32_t s = subsets_[b];
            const Cyc sign(sign_before(s, i));
            if (s & bit)
                c(index_of(s & ~bit), b) = contraction_scale * sign;
            else
                w(index_of(s | bit), b) = sign;
        }
        wedge_.push_back(std::move(w));
        contract_.push_back(std::move(c));
    }

    for (const auto& r : g.reflections()) {
        const Cyc root = sqrt_root_of_unity(r.lambda);
        const Cyc coef = (root - root.inverse()) / (Cyc(2) * r.pairing);
        Matrix m = clifford_hstar(r.alpha) * clifford_h(r.alpha_check);
        m *= coef;
        m += Matrix::scalar(d, root);
        if (opts.opposite_lifts) m = -m;
        mu_.push_back(std::move(m));
    }

    for (std::size_t w = 0; w < g.order(); ++w) {
        Matrix m = Matrix::identity(d);
        for (std::size_t r : g.reflection_word(w)) m = m * mu_[r];
        chi_.push_back(chi_of(m));
        lift_.push_back(std::move(m));
    }
}

std::size_t Spinor::degree_of(std::size_t basis_index) const {
    return static_cast<std::size_t>(std::popcount(subsets_[basis_index]));
}

std::size_t Spinor::index_of(std::uint32_t subset) const {
    auto it = std::find(subsets_.begin(), subsets_.end(), subset);
    return static_cast<std::size_t>(it - subsets_.begin());
}

Matrix Spinor::clifford_h(const Vector& y) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < n_; ++i)
        if (!y[i].is_zero()) m += y[i] * wedge_[i];
    return m;
}

Matrix Spinor::clifford_hstar(const Vector& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero()) m += x[i] * contract_[i];
    return m;
}

Matrix Spinor::exterior_power(std::size_t w, std::size_t l) const {
    return minors(g_->element(w), subsets_, offsets_[l], offsets_[l + 1]);
}

Matrix Spinor::exterior_algebra(std::size_t w) const {
    Matrix m(dim(), dim());
    for (std::size_t l = 0; l <= n_; ++l) m.set_block(offsets_[l], offsets_[l], exterior_power(w, l));
    return m;
}

Matrix Spinor::exterior_algebra_dual(std::size_t w) const {
    Matrix m(dim(), dim());
    for (std::size_t l = 0; l <= n_; ++l)
        m.set_block(offsets_[l], offsets_[l], minors(g_->dual(w), subsets_, offsets_[l], offsets_[l + 1]));
    return m;
}

Matrix Spinor::delta_form() const { return Matrix::identity(dim()); }

Matrix Spinor::weighted_form() const {
    const Matrix k = *g_->dual_form().inverse();
    Matrix m(dim(), dim());
    for (std::size_t l = 0; l <= n_; ++l)
        m.set_block(offsets_[l], offsets_[l], Cyc(1L << l) * minors(k, subsets_, offsets_[l], offsets_[l + 1]));
    return m;
}

bool Spinor::decomposition_check() const {
    for (std::size_t w = 0; w < g_->order(); ++w) {
        const Cyc ext = exterior_algebra(w).trace();
        for (const Matrix& op : {lift_[w], Matrix(-lift_[w])}) {
            // A lift must preserve degree 0 for chi to be defined.
            for (std::size_t i = 1; i < dim(); ++i)
                if (!op(i, 0).is_zero() || !op(0, i).is_zero()) return false;
            if (op.trace() != chi_of(op) * ext) return false;
        }
    }
    return true;
}

std::vector<long> Spinor::decompose_genuine(const IrrepTable& table, const std::vector<Cyc>& lift_traces,
                                            bool allow_virtual) const {
    std::vector<Cyc> f;
    f.reserve(lift_traces.size());
    for (std::size_t w = 0; w < lift_traces.size(); ++w) f.push_back(lift_traces[w] / chi_[w]);
    return table.decompose_character(f, allow_virtual);
}

std::vector<Cyc> Spinor::genuine_character(const IrrepTable& table, std::size_t sigma) const {
    std::vector<Cyc> out;
    for (std::size_t w = 0; w < g_->order(); ++w) out.push_back(table[sigma].character[w] * chi_[w]);
    return out;
}

std::size_t Spinor::twist_by_inverse_chi(const IrrepTable& table, std::size_t sigma) const {
    // chi^{-1} = chi (x) det_{h*}^{-1} = chi (x) det_h
    return table.tensor_linear(sigma, table.det_h_index());
}

}  // namespace cherednik
