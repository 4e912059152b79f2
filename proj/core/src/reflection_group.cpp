#include "cherednik/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cherednik {

std::string matrix_key(const Matrix& m, int n) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Cyc e = m(i, j).embed(n);
            for (const auto& q : e.coefficients()) os << q.get_str() << ',';
            os << ';';
        }
    return os.str();
}

namespace {

Vector normalized_span_vector(const Matrix& m) {
    Matrix cs = m.column_space();
    if (cs.cols() != 1) throw std::logic_error("expected a rank one map");
    Vector v = cs.column(0);
    for (const auto& x : v)
        if (!x.is_zero()) {
            Cyc inv = x.inverse();
            return inv * v;
        }
    throw std::logic_error("zero spanning vector");
}

}  // namespace

ReflectionGroup ReflectionGroup::generate(const std::vector<Matrix>& generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("generate: no generators");
    ReflectionGroup g;
    g.n_ = generators[0].rows();
    for (const auto& m : generators) {
        if (m.rows() != g.n_ || m.cols() != g.n_) throw std::invalid_argument("generate: generator shape mismatch");
        if (m.det().is_zero()) throw std::invalid_argument("generate: non-invertible generator");
        g.conductor_ = std::lcm(g.conductor_, m.conductor());
    }

    auto add = [&](Matrix m, std::size_t parent, std::size_t gen) -> std::optional<std::size_t> {
        std::string key = matrix_key(m, g.conductor_);
        auto it = g.index_.find(key);
        if (it != g.index_.end()) return std::nullopt;
        if (g.elems_.size() >= cap)
            throw CapExceeded("group order exceeds cap " + std::to_string(cap) + " (group too large or infinite)");
        const std::size_t idx = g.elems_.size();
        g.index_.emplace(std::move(key), idx);
        g.elems_.push_back(std::move(m));
        g.parent_.push_back(parent);
        g.parent_gen_.push_back(gen);
        return idx;
    };

    add(Matrix::identity(g.n_), 0, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < generators.size(); ++k) {
            if (auto idx = add(generators[k] * g.elems_[cur], cur, k)) queue.push_back(*idx);
        }
    }
    for (const auto& m : generators) g.gens_.push_back(*g.find(m));

    const std::size_t N = g.order();
    g.table_.assign(N * N, 0);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            auto idx = g.find(g.elems_[a] * g.elems_[b]);
            if (!idx) throw std::logic_error("generate: product escaped the closure");
            g.table_[a * N + b] = *idx;
        }
    g.inv_.assign(N, 0);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (g.table_[a * N + b] == 0) g.inv_[a] = b;
    for (std::size_t a = 0; a < N; ++a) {
        g.duals_.push_back(g.elems_[g.inv_[a]].transpose());
        g.dets_.push_back(g.elems_[a].det());
    }
    g.dual_form_ = Matrix(g.n_, g.n_);
    for (const Matrix& d : g.duals_) g.dual_form_ += d.adjoint() * d;
    g.dual_form_ *= Cyc(1, static_cast<long>(N));

    g.class_of_.assign(N, N);
    for (std::size_t a = 0; a < N; ++a) {
        if (g.class_of_[a] != N) continue;
        std::vector<std::size_t> cls;
        for (std::size_t h = 0; h < N; ++h) {
            std::size_t c = g.mul(g.mul(h, a), g.inv_[h]);
            if (g.class_of_[c] == N) {
                g.class_of_[c] = g.classes_.size();
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        g.classes_.push_back(std::move(cls));
    }

    const Matrix one = Matrix::identity(g.n_);
    std::map<std::size_t, std::size_t> class_to_rclass;
    for (std::size_t a = 1; a < N; ++a) {
        Matrix d = one - g.elems_[a];
        if (d.rank() != 1) continue;
        Reflection r;
        r.element = a;
        r.alpha_check = normalized_span_vector(d);
        r.alpha = normalized_span_vector(one - g.duals_[a]);
        r.lambda = g.dets_[a];
        r.pairing = dot(r.alpha_check, r.alpha);
        if (r.pairing.is_zero()) throw std::logic_error("reflection with <alpha_check, alpha> = 0");
        const std::size_t cls = g.class_of_[a];
        auto [it, fresh] = class_to_rclass.emplace(cls, 0);
        if (fresh) {
            it->second = g.refl_classes_.size();
            g.refl_classes_.push_back(cls);
        }
        r.cls = it->second;
        g.refl_.push_back(std::move(r));
    }

    // Shortest reflection words by breadth-first search.
    g.rwords_.assign(N, {});
    std::vector<bool> seen(N, false);
    seen[0] = true;
    std::deque<std::size_t> q{0};
    while (!q.empty()) {
        const std::size_t cur = q.front();
        q.pop_front();
        for (std::size_t r = 0; r < g.refl_.size(); ++r) {
            const std::size_t nxt = g.mul(cur, g.refl_[r].element);
            if (seen[nxt]) continue;
            seen[nxt] = true;
            g.rwords_[nxt] = g.rwords_[cur];
            g.rwords_[nxt].push_back(r);
            q.push_back(nxt);
        }
    }
    return g;
}

std::optional<std::size_t> ReflectionGroup::find(const Matrix& m) const {
    if (m.rows() != n_ || m.cols() != n_) return std::nullopt;
    const int cond = m.conductor();
    if (conductor_ % cond != 0) return std::nullopt;
    auto it = index_.find(matrix_key(m, conductor_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> ReflectionGroup::generator_word(std::size_t i) const {
    std::vector<std::size_t> word;
    while (i != 0) {
        word.push_back(parent_gen_[i]);
        i = parent_[i];
    }
    return word;
}

std::optional<std::size_t> ReflectionGroup::reflection_index(std::size_t element) const {
    for (std::size_t r = 0; r < refl_.size(); ++r)
        if (refl_[r].element == element) return r;
    return std::nullopt;
}

bool ReflectionGroup::generated_by_reflections() const {
    for (std::size_t i = 1; i < order(); ++i)
        if (rwords_[i].empty()) return false;
    return true;
}

// ---------------------------------------------------------------------------

IrrepTable::IrrepTable(const ReflectionGroup& g, std::vector<Irrep> irreps) : irreps_(std::move(irreps)) {
    for (std::size_t i = 0; i < g.order(); ++i) {
        inv_.push_back(g.inverse(i));
        det_.push_back(g.det_h(i));
    }
    for (auto& ir : irreps_) {
        if (ir.matrices.size() != g.order()) throw std::invalid_argument("irrep " + ir.label + ": wrong matrix count");
        ir.dim = ir.matrices[0].rows();
        if (ir.character.empty())
            for (const auto& m : ir.matrices) ir.character.push_back(m.trace());
    }
}

Irrep IrrepTable::from_generators(const ReflectionGroup& g, std::string label, const std::vector<Matrix>& images) {
    if (images.size() != g.generator_indices().size())
        throw std::invalid_argument("irrep " + label + ": generator image count mismatch");
    Irrep ir;
    ir.label = std::move(label);
    ir.dim = images[0].rows();
    for (std::size_t i = 0; i < g.order(); ++i) {
        Matrix m = Matrix::identity(ir.dim);
        // element = gen(word[0]) * parent, so walk the word left to right
        for (std::size_t k : g.generator_word(i)) m = m * images[k];
        ir.matrices.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (ir.matrices[a] * ir.matrices[b] != ir.matrices[g.mul(a, b)])
                throw std::logic_error("irrep " + ir.label + " is not a homomorphism");
    for (const auto& m : ir.matrices) ir.character.push_back(m.trace());
    return ir;
}

std::optional<std::size_t> IrrepTable::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        if (irreps_[i].label == label) return i;
    return std::nullopt;
}

std::size_t IrrepTable::require(const std::string& label) const {
    if (auto i = index_of(label)) return *i;
    throw std::invalid_argument("unknown irreducible representation '" + label + "'");
}

std::vector<std::string> IrrepTable::labels() const {
    std::vector<std::string> out;
    for (const auto& ir : irreps_) out.push_back(ir.label);
    return out;
}

std::vector<long> IrrepTable::decompose_character(const std::vector<Cyc>& values, bool allow_virtual) const {
    if (values.size() != inv_.size()) throw std::invalid_argument("decompose_character: wrong length");
    std::vector<long> out;
    const Cyc order(static_cast<long>(inv_.size()));
    for (const auto& ir : irreps_) {
        Cyc s;
        for (std::size_t w = 0; w < values.size(); ++w)
            if (!values[w].is_zero()) s += values[w] * ir.character[inv_[w]];
        s /= order;
        if (!s.is_rational() || s.rational().get_den() != 1)
            throw std::logic_error("non-integer multiplicity " + s.to_string() + " of " + ir.label);
        const long m = s.rational().get_num().get_si();
        if (m < 0 && !allow_virtual) throw std::logic_error("negative multiplicity of " + ir.label);
        out.push_back(m);
    }
    // The class function must be fully accounted for by the table.
    for (std::size_t w = 0; w < values.size(); ++w) {
        Cyc s;
        for (std::size_t i = 0; i < irreps_.size(); ++i)
            if (out[i] != 0) s += Cyc(out[i]) * irreps_[i].character[w];
        if (s != values[w]) throw std::logic_error("class function is not a combination of the irreducible characters");
    }
    return out;
}

std::vector<long> IrrepTable::decompose(const std::vector<Matrix>& action) const {
    std::vector<Cyc> chi;
    chi.reserve(action.size());
    for (const auto& m : action) chi.push_back(m.empty() ? Cyc() : m.trace());
    return decompose_character(chi);
}

std::size_t IrrepTable::find_character(const std::vector<Cyc>& chi) const {
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        if (irreps_[i].character == chi) return i;
    throw std::logic_error("character not found in irrep table");
}

std::size_t IrrepTable::tensor_linear(std::size_t sigma, std::size_t linear) const {
    if (irreps_[linear].dim != 1) throw std::invalid_argument("tensor_linear: second factor not one-dimensional");
    std::vector<Cyc> chi;
    for (std::size_t w = 0; w < inv_.size(); ++w) chi.push_back(irreps_[sigma].character[w] * irreps_[linear].character[w]);
    return find_character(chi);
}

std::size_t IrrepTable::dual(std::size_t sigma) const {
    std::vector<Cyc> chi;
    for (std::size_t w = 0; w < inv_.size(); ++w) chi.push_back(irreps_[sigma].character[inv_[w]]);
    return find_character(chi);
}

std::size_t IrrepTable::det_h_index() const { return find_character(det_); }

void IrrepTable::verify() const {
    const std::size_t N = inv_.size();
    std::size_t sq = 0;
    for (std::size_t a = 0; a < irreps_.size(); ++a) {
        sq += irreps_[a].dim * irreps_[a].dim;
        for (std::size_t b = 0; b < irreps_.size(); ++b) {
            Cyc s;
            for (std::size_t w = 0; w < N; ++w) s += irreps_[a].character[w] * irreps_[b].character[inv_[w]];
            const Cyc expect(a == b ? static_cast<long>(N) : 0L);
            if (s != expect)
                throw std::logic_error("character orthogonality fails for " + irreps_[a].label + ", " + irreps_[b].label);
        }
    }
    if (sq != N) throw std::logic_error("sum of squared irrep dimensions differs from the group order");
}

bool same_character_table(const ReflectionGroup& g1, const IrrepTable& t1, const ReflectionGroup& g2,
                          const IrrepTable& t2) {
    const auto& c1 = g1.classes();
    const auto& c2 = g2.classes();
    if (g1.order() != g2.order() || c1.size() != c2.size() || t1.size() != t2.size()) return false;
    const std::size_t k = c1.size();
    auto column = [](const ReflectionGroup& g, const IrrepTable& t, std::size_t cls) {
        std::vector<std::string> col;
        for (const auto& ir : t.irreps()) col.push_back(ir.character[g.classes()[cls][0]].to_string());
        std::sort(col.begin(), col.end());
        return col;
    };
    std::vector<std::size_t> assign(k);
    std::vector<bool> used(k, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == k) {
            std::vector<std::vector<std::string>> rows1, rows2;
            for (const auto& ir : t1.irreps()) {
                std::vector<std::string> r;
                for (std::size_t c = 0; c < k; ++c) r.push_back(ir.character[c1[c][0]].to_string());
                rows1.push_back(r);
            }
            for (const auto& ir : t2.irreps()) {
                std::vector<std::string> r;
                for (std::size_t c = 0; c < k; ++c) r.push_back(ir.character[c2[assign[c]][0]].to_string());
                rows2.push_back(r);
            }
            std::sort(rows1.begin(), rows1.end());
            std::sort(rows2.begin(), rows2.end());
            return rows1 == rows2;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j] || c1[i].size() != c2[j].size() || column(g1, t1, i) != column(g2, t2, j)) continue;
            used[j] = true;
            assign[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return rec(0);
}

}  // namespace cherednik
