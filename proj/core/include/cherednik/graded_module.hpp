#pragma once

#include "cherednik/catalog.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cherednik {

/// Parameters (t, c) of H_{t,c}; c is given per reflection conjugacy class.
struct Params {
    Cyc t;
    std::vector<Cyc> c;

    static Params uniform(const ReflectionGroup& g, const Cyc& t, const Cyc& c);
    const Cyc& c_of(const ReflectionGroup& g, std::size_t reflection) const { return c[g.reflections()[reflection].cls]; }
    bool is_real() const;
    /// (lambda^2 t, lambda^2 c).
    Params rescaled(const Cyc& lambda) const;
    std::string to_string() const;
};

/// C_s(i, j) = <y_i, alpha_s> <alpha_s^vee, x_j> / <alpha_s^vee, alpha_s>.
Cyc commutator_coefficient(const Reflection& r, std::size_t i, std::size_t j);
/// Coefficient kappa_s of s in the Euler element: 2 c_s / (1 - det_{h*}(s)).
Cyc euler_coefficient(const Reflection& r, const Cyc& c);

/// Exponent vectors of monomials in n variables, per degree, in
/// lexicographically decreasing order (x_1^k first).
class Monomials {
public:
    explicit Monomials(std::size_t n) : n_(n) {}
    const std::vector<std::vector<int>>& of_degree(std::size_t k);
    std::size_t count(std::size_t k) { return of_degree(k).size(); }
    std::size_t index(const std::vector<int>& exps);
    std::size_t vars() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::vector<int>>> lists_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Matrix of g acting on the degree k part of the polynomial ring whose
/// variables are the basis vectors transformed by g (column j = image of
/// variable j).
Matrix symmetric_power(Monomials& mons, const Matrix& g, std::size_t k);

/// A graded H_{t,c}-module materialized on degrees 0..window(). When
/// finite() is true every degree above window() is zero.
class GradedModule {
public:
    std::string name;
    Catalog catalog;
    Params params;

    std::size_t window() const { return dims_.size() - 1; }
    bool finite() const { return finite_; }
    std::size_t dim(std::size_t k) const { return k < dims_.size() ? dims_[k] : 0; }
    std::size_t total_dim() const;
    std::size_t rank() const { return catalog.g().rank(); }

    /// x-operators leave block k for k + 1; known for k < window(), and also
    /// at the top when the module is finite.
    bool x_defined(std::size_t k) const { return k < window() || (finite_ && k == window()); }
    const Matrix& w(std::size_t k, std::size_t elem) const { return w_[k][elem]; }
    const Matrix& x(std::size_t k, std::size_t i) const;
    const Matrix& y(std::size_t k, std::size_t i) const { return y_[k][i]; }

    /// Omega restricted to block k (needs y on k and x on k - 1).
    Matrix omega(std::size_t k) const;

    /// Factories.
    static GradedModule standard(const Catalog& cat, const Params& p, std::size_t sigma, std::size_t window);
    /// Quotient by a graded submodule given per block.
    static GradedModule quotient(const GradedModule& m, const std::vector<Subspace>& sub, const std::string& name);
    /// Quotient by the maximal graded submodule meeting block 0 trivially.
    /// Block 0 must be irreducible and generate the module. If some block
    /// becomes zero the result is finite and truncated there.
    static GradedModule simple_quotient(const GradedModule& m);
    /// Baby Verma module at t = 0: standard module modulo the ideal of
    /// positive-degree W-invariants in S(h*).
    static GradedModule baby_verma(const Catalog& cat, const Params& p, std::size_t sigma);
    static GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
    /// Same module viewed over H_{lambda^2 t, lambda^2 c}: x unchanged, y scaled by lambda^2.
    static GradedModule rescale(const GradedModule& m, const Cyc& lambda);

    /// The maximal graded submodule used by simple_quotient.
    static std::vector<Subspace> radical(const GradedModule& m);

    /// Matrix of the polynomial f (coefficients over degree-d monomials) in the
    /// x (h*) or y (h) variables, from block k.
    Matrix apply_x_poly(Monomials& mons, const Vector& f, std::size_t d, std::size_t k) const;
    Matrix apply_y_poly(Monomials& mons, const Vector& f, std::size_t d, std::size_t k) const;

    /// For standard modules and their quotients: the standard module and
    /// the per-block section (columns: images of this module's basis).
    const GradedModule* base() const { return base_.get(); }
    const Matrix& section(std::size_t k) const { return section_[k]; }
    /// Irrep generating the standard module this was built from.
    std::optional<std::size_t> sigma() const { return sigma_; }
    /// For standard modules: basis vector e of block k >= 1 equals x_j e'.
    std::pair<std::size_t, std::size_t> factor(std::size_t k, std::size_t e) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> w_, x_, y_;
    bool finite_ = false;
    std::optional<std::size_t> sigma_;
    std::shared_ptr<const GradedModule> base_;
    std::vector<Matrix> section_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> factor_;

    void init_blocks(std::size_t blocks);
    void truncate(std::size_t blocks, bool finite);
};

/// Verification of the structural identities; each returns an empty string
/// on success or a description of the first failure.
struct ModuleChecks {
    static std::string defining_relation(const GradedModule& m);
    static std::string equivariance(const GradedModule& m);
    static std::string commutativity(const GradedModule& m);
    static std::string representation(const GradedModule& m);
    /// Omega is scalar on each block and steps by 2t; returns scalars.
    static std::vector<Cyc> omega_scalars(const GradedModule& m);
};

/// Scalar by which Omega acts on the lowest block of M(sigma).
Cyc euler_lowest(const Catalog& cat, const Params& p, std::size_t sigma);

/// W-invariant Hermitian form on sigma normalized as the average of
/// sigma(w)^H sigma(w).
Matrix invariant_form(const Irrep& sigma);

/// Contravariant form: (x_j u, v) = (u, sum_k P_jk y_k v) with (u, v) = v^H G u
/// and P the invariant form on h* (P = I for unitary coordinates).
struct ContravariantForm {
    std::vector<Matrix> gram;  // per block
};

/// Built on standard modules and their quotients; parameters must be real.
ContravariantForm contravariant_form(const GradedModule& m);

/// Certified positive definiteness of a Hermitian matrix (pivots of an
/// LDL^H elimination checked with certified_sign).
bool positive_definite(const Matrix& g);

/// Per block: is the form positive definite there.
std::vector<bool> unitary_blocks(const ContravariantForm& f);

/// Candidates c (uniform on all classes, in the given order) at which the
/// simple quotient of M(sigma) over H_{t,c} is certified unitary on blocks
/// 0..window.
std::vector<Cyc> unitary_parameters(const Catalog& cat, std::size_t sigma, const Cyc& t,
                                    const std::vector<Cyc>& candidates, std::size_t window);

}  // namespace cherednik
