#pragma once

#include "cherednik/cohomology.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace cherednik {

/// PBW monomial y^a w x^b.
struct PbwMonomial {
    std::vector<int> a;
    std::size_t w = 0;
    std::vector<int> b;

    int degree() const;
    /// C*-weight: y has weight 1, x weight -1.
    int weight() const;
    friend bool operator<(const PbwMonomial& l, const PbwMonomial& r) {
        return std::tie(l.a, l.w, l.b) < std::tie(r.a, r.w, r.b);
    }
    friend bool operator==(const PbwMonomial& l, const PbwMonomial& r) = default;
    /// "y1^2*w3*x2^1"; "1" for the identity.
    std::string to_string() const;
};

using PbwElement = std::map<PbwMonomial, Cyc>;

/// Letters of a word in the generators of H.
struct Letter {
    enum Kind { X, Y, W } kind;
    std::size_t index;
};

/// Normal-ordered arithmetic in H_{t,c}: every element is a unique
/// combination of y^a w x^b.
class PbwAlgebra {
public:
    PbwAlgebra(const Catalog& cat, const Params& p);

    const Catalog& catalog() const { return cat_; }
    const Params& params() const { return p_; }
    std::size_t rank() const { return n_; }

    PbwElement one() const { return scalar(Cyc(1)); }
    PbwElement scalar(const Cyc& c) const;
    PbwElement x(std::size_t i) const;
    PbwElement y(std::size_t i) const;
    PbwElement w(std::size_t e) const;

    PbwElement mul(const PbwElement& a, const PbwElement& b) const;
    PbwElement normalize(const std::vector<Letter>& word) const;
    /// v p v^{-1}.
    PbwElement conjugate(std::size_t v, const PbwElement& p) const;
    PbwElement commutator(const PbwElement& a, const PbwElement& b) const;

    /// Action on a graded module from block k (to block k - weight).
    Matrix evaluate(const PbwElement& p, const GradedModule& m, std::size_t k) const;
    /// The same, applying the letters of the word one at a time.
    static Matrix evaluate_word(const std::vector<Letter>& word, const GradedModule& m, std::size_t k);

    /// All monomials of degree <= d and the given weight.
    std::vector<PbwMonomial> monomials(int max_degree, int weight) const;

private:
    Catalog cat_;
    Params p_;
    std::size_t n_;
    std::vector<std::vector<std::vector<Cyc>>> comm_;  // [reflection][i][j] = c_s C_s(i, j)
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::size_t, PbwMonomial>, PbwElement> left_x_cache_;
    mutable std::map<std::pair<std::size_t, std::vector<int>>, std::map<std::vector<int>, Cyc>> ypow_cache_;
    mutable std::map<std::pair<std::size_t, PbwMonomial>, PbwElement> conj_cache_;

    PbwElement left_x(std::size_t j, const PbwMonomial& m) const;
    PbwElement left_x(std::size_t j, const PbwElement& e) const;
    PbwElement left_w(std::size_t v, const PbwMonomial& m) const;
    PbwElement left_w(std::size_t v, const PbwElement& e) const;
    static PbwElement left_y(std::size_t i, const PbwElement& e);
    std::map<std::vector<int>, Cyc> transformed_y_power(std::size_t v, const std::vector<int>& a) const;
};

void add_to(PbwElement& acc, const PbwElement& e, const Cyc& scale = Cyc(1));

/// Element of H (x) C(V), with C(V) realized as End(S) (matrix units E_IJ
/// on the spinor basis). Terms are keyed by PBW monomial.
struct TensorElement {
    std::map<PbwMonomial, Matrix> terms;
    std::size_t spinor_dim = 0;

    bool is_zero() const;
    friend bool operator==(const TensorElement& a, const TensorElement& b);
};

/// Basis (monomial, I, J) of the C*-weight-zero part of H (x) C(V) in
/// filtration degree <= N.
struct TensorBasis {
    struct Item {
        PbwMonomial mono;
        std::size_t I, J;
    };
    std::vector<Item> items;
    std::map<std::tuple<PbwMonomial, std::size_t, std::size_t>, std::size_t> index;
    int max_degree = 0;
    std::size_t size() const { return items.size(); }
};

/// Arithmetic in H (x) C(V) and the derivations delta_d, delta_partial.
class TensorAlgebra {
public:
    TensorAlgebra(const Catalog& cat, const Params& p, SpinorOptions opts = {});

    const PbwAlgebra& pbw() const { return pbw_; }
    const Spinor& spinor() const { return spinor_; }

    TensorElement zero() const;
    TensorElement embed(const PbwElement& h) const;  // h (x) 1
    TensorElement make(const PbwElement& h, const Matrix& c) const;
    TensorElement add(const TensorElement& a, const TensorElement& b, const Cyc& scale = Cyc(1)) const;
    TensorElement mul(const TensorElement& a, const TensorElement& b) const;
    /// Negate the Clifford-odd part.
    TensorElement epsilon(const TensorElement& a) const;

    TensorElement dx() const { return dx_; }
    TensorElement dy() const { return dy_; }
    /// Delta(lift of w) = w (x) lift(w).
    TensorElement delta_w(std::size_t w) const;
    /// delta_d a = D_x a - eps(a) D_x; delta_partial with D_y.
    TensorElement delta(const TensorElement& a, bool partial = false) const;
    /// Conjugation by Delta(lift(w)).
    TensorElement conjugate_by_lift(std::size_t w, const TensorElement& a) const;

    /// Clifford-parity and C*-weight of E_IJ.
    int clifford_weight(std::size_t I, std::size_t J) const;
    bool clifford_odd(std::size_t I, std::size_t J) const;

    TensorBasis basis(int max_degree) const;
    Vector coordinates(const TensorBasis& b, const TensorElement& e) const;
    TensorElement from_coordinates(const TensorBasis& b, const Vector& v) const;

    /// Columns: W~-invariant elements of the weight-zero part in degree <= N.
    Matrix invariants(const TensorBasis& b) const;
    /// Delta of the class sums of W~, as elements, with their expression
    /// sum_w coef_w Delta(lift(w)).
    struct CentralGroupElement {
        TensorElement element;
        std::vector<Cyc> coefficients;  // per group element w, on the chosen lift
    };
    std::vector<CentralGroupElement> central_group_elements() const;

    /// "coef y1^2*w3*x2^1 # y1.x2 + ...", Clifford part in the monomial basis y_I x_J.
    std::vector<std::pair<std::string, std::string>> serialize(const TensorElement& e) const;

private:
    PbwAlgebra pbw_;
    Spinor spinor_;
    std::size_t sdim_;
    TensorElement dx_, dy_;
    std::vector<Matrix> lift_inv_;
    Matrix to_monomial_basis_;  // E-coordinates -> y_I x_J coordinates
};

/// Verification that ker delta = im delta (+) Delta(C[W~]^W~) in degree <= N.
struct VoganCertificate {
    std::string group;
    bool partial = false;  // delta_partial instead of delta_d
    int degree = 0;
    std::size_t invariant_dim = 0, kernel_dim = 0, image_dim = 0, central_dim = 0;
    bool direct = false;
    bool decomposes = false;
    bool delta_square_zero = false;
    struct Witness {
        std::vector<std::pair<std::string, std::string>> kernel_vector, preimage, central_part;
    };
    std::vector<Witness> witnesses;
    std::string failure;
    bool ok() const { return direct && decomposes && delta_square_zero && failure.empty(); }
};

VoganCertificate verify_vogan_decomposition(const TensorAlgebra& ta, int degree, bool partial = false,
                                            std::size_t threads = 1);

/// Central elements of H of degree <= d (weight zero only, or every weight).
std::vector<PbwElement> find_central_elements(const PbwAlgebra& h, int max_degree, bool weight_zero = true);

/// zeta_d(b) for b central of weight zero: b (x) 1 = delta_d(c) + zeta, zeta in
/// Delta(C[W~]^W~). Coefficients per group element on the chosen lift.
struct ZetaResult {
    bool found = false;
    std::vector<Cyc> coefficients;
    TensorElement zeta;
    TensorElement preimage;
    std::string failure;
};
ZetaResult zeta_d(const TensorAlgebra& ta, const PbwElement& b, int search_degree);

/// Scalar by which sum_w coef_w lift(w) acts on sigma (x) chi.
Cyc evaluate_on_genuine(const TensorAlgebra& ta, const std::vector<Cyc>& coefficients, std::size_t sigma);

/// Scalar of a central element on a module; nullopt when it is not scalar.
std::optional<Cyc> central_scalar(const PbwAlgebra& h, const PbwElement& z, const GradedModule& m);

struct CasselmanOsborne {
    bool holds = true;
    struct Row {
        std::string element;
        std::string constituent;
        Cyc beta, zeta_value;
        bool equal = false;
    };
    std::vector<Row> rows;
    std::string failure;
};
/// beta(z) = zeta_d(z) evaluated on tau (x) chi for every constituent tau of H^*(h*, M).
CasselmanOsborne casselman_osborne_check(const TensorAlgebra& ta, const GradedModule& m,
                                         const std::vector<PbwElement>& central, int search_degree);

/// z (x) 1 in the image of delta (d or partial) for z in m_+ Z(H), t = 0.
struct ImageWitness {
    bool found = false;
    std::vector<std::pair<std::string, std::string>> preimage;
    std::string failure;
};
ImageWitness central_in_image(const TensorAlgebra& ta, const PbwElement& z, int search_degree, bool partial = false);

std::string to_string(const PbwElement& e);

}  // namespace cherednik
