#pragma once

#include "cherednik/graded_module.hpp"
#include "cherednik/spinor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cherednik {

/// The blocks M_k (x) Lambda^l of M (x) Lambda(h) (= M (x) S) and of the mirror
/// M (x) Lambda(h*), with basis index e * dim(Lambda^l) + I (I in the spinor
/// subset order restricted to degree l).
class TensorSpace {
public:
    TensorSpace(const GradedModule& m, const Spinor& s);

    const GradedModule& module() const { return *m_; }
    const Spinor& spinor() const { return *s_; }
    std::size_t rank() const { return n_; }

    /// Block (k, l) is materialized when k <= window or the module is finite.
    bool materialized(long k) const;
    std::size_t dim(long k, std::size_t l) const;

    /// D_x = sum x_i (x) y_i : (k, l) -> (k + 1, l + 1).
    Matrix dx(long k, std::size_t l) const;
    /// D_y = sum y_i (x) x_i : (k, l) -> (k - 1, l - 1).
    Matrix dy(long k, std::size_t l) const;
    /// Koszul differentials: d = D_x as a matrix, partial = D_y / 2.
    Matrix koszul_d(long k, std::size_t l) const { return dx(k, l); }
    Matrix koszul_partial(long k, std::size_t l) const;
    /// On M (x) Lambda(h*): m (x) x_I -> sum y_j m (x) x_j ^ x_I, (k, l) -> (k - 1, l + 1).
    Matrix mirror_d(long k, std::size_t l) const;
    /// On M (x) Lambda(h*): m (x) x_I -> sum_j x_j m (x) (contraction of x_I by y_j), (k, l) -> (k + 1, l - 1).
    Matrix mirror_partial(long k, std::size_t l) const;

    /// Actions of W on M (x) Lambda^l h and M (x) Lambda^l h*, and of the
    /// chosen lift of w on M (x) S (diagonal action p(w~) (x) w~).
    Matrix w_action(long k, std::size_t l, std::size_t w) const;
    Matrix w_action_dual(long k, std::size_t l, std::size_t w) const;
    Matrix pin_action(long k, std::size_t l, std::size_t w) const;

private:
    const GradedModule* m_;
    const Spinor* s_;
    std::size_t n_;
    std::vector<Matrix> wedge_, contract_;  // per i, full spinor size
    Matrix piece(const Matrix& op, std::size_t l_to, std::size_t l_from) const;
    Matrix module_op(char which, long k, std::size_t i) const;
};

/// Which homological object a report describes.
enum class ComplexKind {
    HStarCohomology,  // d on M (x) Lambda(h)
    HHomology,        // partial on M (x) Lambda(h)
    HStarHomology,    // x-contraction on M (x) Lambda(h*)
    HCohomology,      // y-wedge on M (x) Lambda(h*)
    DxCohomology,     // ker D_x / im D_x on M (x) S, genuine
    DyCohomology,     // ker D_y / im D_y on M (x) S, genuine
    Dirac,            // ker D / (ker D cap im D) per U_r, genuine
};
std::string to_string(ComplexKind k);

/// Multiplicities per (weight, degree). Weight is k - l on M (x) Lambda(h)
/// (the U_r index r) and k + l on M (x) Lambda(h*). For genuine kinds the
/// labels are sigma (x) chi; degree is the exterior degree l.
struct CohomologyReport {
    ComplexKind kind{};
    std::vector<std::string> labels;
    std::size_t degrees = 0;  // n + 1
    struct Entry {
        long weight = 0;
        std::size_t degree = 0;
        std::vector<long> mult;
    };
    std::vector<Entry> entries;  // nonzero only, sorted by (weight, degree)
    long weight_lo = 0, weight_hi = 0;  // weights computed exactly
    /// Every weight where cohomology can be nonzero lies in [weight_lo, weight_hi].
    bool complete = false;

    std::vector<long> total() const;
    std::vector<long> in_degree(std::size_t l) const;
    std::vector<long> even() const;
    std::vector<long> odd() const;
    /// Throws std::out_of_range when the weight was not computed.
    std::vector<long> at(long weight, std::size_t degree) const;
    bool empty() const { return entries.empty(); }
};

/// Computation settings shared by the cohomology routines.
struct CohomologyOptions {
    std::size_t threads = 1;
    SpinorOptions spinor;
};

/// Largest polynomial degree k at which D^2 can be singular on some
/// M_k (x) Lambda^l. Only available when Omega is scalar on every block and
/// t != 0; from the identity D^2 = -Omega (x) 1 + (2l - n) t + sum_s s (x) B_s
/// and the eigenvalues of sum_s s (x) B_s on the regular representation.
std::optional<long> dirac_singular_bound(const GradedModule& m, const Spinor& s);

/// Checks D^2 against the identity above on every materialized block.
std::string dirac_square_identity(const TensorSpace& ts);

class CohomologyEngine {
public:
    CohomologyEngine(const GradedModule& m, CohomologyOptions opts = {});

    const TensorSpace& space() const { return ts_; }
    const Spinor& spinor() const { return spinor_; }
    const IrrepTable& table() const { return m_->catalog.table(); }

    CohomologyReport compute(ComplexKind kind) const;
    /// Lowest and highest weights (inclusive) that are fully materialized
    /// for complexes on M (x) Lambda(h) (mirror = false) or M (x) Lambda(h*).
    std::pair<long, long> weight_range(bool mirror) const;
    /// Known support bound in polynomial degree (see dirac_singular_bound).
    std::optional<long> support_bound() const { return bound_; }

    /// U_r with D, D_x, D_y assembled as matrices (blocks l = 0..n).
    struct UrComplex {
        long r = 0;
        std::vector<std::size_t> offsets;  // offset of block l, size n + 2
        Matrix D, Dx, Dy;
        std::vector<Matrix> pin;  // Delta of the chosen lift, per group element
        std::size_t dim() const { return offsets.back(); }
    };
    UrComplex ur(long r) const;
    /// Even (l even) or odd part of U_r as a coordinate subspace.
    static Subspace parity_part(const UrComplex& u, bool even);

    std::vector<long> genuine_multiplicities(const UrComplex& u, const Subspace& num, const Subspace& den) const;

private:
    const GradedModule* m_;
    CohomologyOptions opts_;
    Spinor spinor_;
    TensorSpace ts_;
    std::optional<long> bound_;

    std::vector<CohomologyReport::Entry> weight_entries(ComplexKind kind, long weight) const;
};

/// Structural checks; each returns "" on success or the first failure.
struct ComplexChecks {
    /// d^2 = partial^2 = D_x^2 = D_y^2 = 0 and the mirror squares.
    static std::string squares_zero(const TensorSpace& ts);
    /// d, partial, D_x, D_y commute with W (resp. the diagonal W~ action).
    static std::string equivariance(const TensorSpace& ts);
    /// D_x = d and D_y = 2 partial under S = Lambda(h) (x) chi, as block maps.
    static std::string half_dirac_identification(const TensorSpace& ts);
    /// Recomputing d, partial, D_x, D_y in the basis y'_i = sum_j A_ji y_j
    /// (dual basis on h*) gives the same operators.
    static std::string basis_change(const TensorSpace& ts, const Matrix& A);
    /// D restricts to U_r and every block of M (x) S lies in exactly one U_r.
    static std::string ur_split(const CohomologyEngine& e);
};

struct TheoremChecks {
    /// H_i(c, M) = H^{n-i}(c, M) (x) Lambda^n c for c = h and c = h*.
    static std::string poincare(const CohomologyEngine& e);
    /// ker D_x / im D_x = H^*(h*, M) (x) chi and ker D_y / im D_y = H_*(h, M) (x) chi.
    static std::string dx_identification(const CohomologyEngine& e);

    /// Per genuine class: H_D <= H^*(h*, M) (x) chi and <= H_*(h, M) (x) chi.
    struct Embedding {
        bool holds = true;
        std::vector<long> gap_hstar, gap_h;  // right side minus left side
        std::vector<std::string> labels;
    };
    static Embedding embedding(const CohomologyEngine& e);

    /// Hodge identities per U_r for a unitary module; throws
    /// std::invalid_argument when the form is not certified positive.
    static std::string hodge(const CohomologyEngine& e);

    struct Parity {
        bool applicable = false;
        bool holds = false;
        std::string detail;
    };
    static Parity parity(const CohomologyEngine& e);

    /// resolution[i] lists the irreps sigma_{i, j} of the i-th term.
    struct Bgg {
        bool euler_ok = false;
        bool bounded = false;
        bool disjoint = false;
        bool equal = false;
        std::string detail;
    };
    static Bgg bgg(const CohomologyEngine& e, const std::vector<std::vector<std::string>>& resolution);
};

/// Whether Omega acts semisimply on every materialized block.
bool omega_semisimple(const GradedModule& m);

}  // namespace cherednik
