#pragma once

#include "cherednik/reflection_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cherednik {

struct SpinorOptions {
    /// Use -mu_s instead of mu_s for every reflection.
    bool opposite_lifts = false;
    /// Contraction with the wrong sign; breaks the Clifford relations.
    /// Only for regression tests of the checks below.
    bool flipped_contraction = false;
};

/// Spinor module S = exterior algebra of h, basis y_I for subsets I ordered
/// by size, then lexicographically. y in h acts by wedge, x in h* by
/// contraction, so that x_i y_j + y_j x_i = -2 delta_ij.
class Spinor {
public:
    explicit Spinor(const ReflectionGroup& g, SpinorOptions opts = {});

    std::size_t rank() const { return n_; }
    std::size_t dim() const { return subsets_.size(); }
    const std::vector<std::uint32_t>& subsets() const { return subsets_; }
    std::size_t degree_of(std::size_t basis_index) const;
    /// Basis indices of the exterior degree l part.
    std::size_t degree_offset(std::size_t l) const { return offsets_[l]; }
    std::size_t degree_dim(std::size_t l) const { return offsets_[l + 1] - offsets_[l]; }
    std::size_t index_of(std::uint32_t subset) const;

    const Matrix& wedge(std::size_t i) const { return wedge_[i]; }
    const Matrix& contract(std::size_t i) const { return contract_[i]; }
    Matrix clifford_h(const Vector& y) const;
    Matrix clifford_hstar(const Vector& x) const;

    /// Lift of reflection r (index into reflections()).
    const Matrix& mu(std::size_t r) const { return mu_[r]; }
    /// Chosen lift of group element w: product of mu along its shortest
    /// reflection word.
    const Matrix& lift(std::size_t w) const { return lift_[w]; }
    /// Genuine character on the chosen lift: its scalar on the exterior degree 0 part.
    const Cyc& chi(std::size_t w) const { return chi_[w]; }
    /// chi of an arbitrary spinor operator that preserves degree 0.
    static Cyc chi_of(const Matrix& op) { return op(0, 0); }

    /// Matrix of w on the exterior power of degree l (minors of w).
    Matrix exterior_power(std::size_t w, std::size_t l) const;
    /// Matrix of w on the whole exterior algebra, in the spinor basis order.
    Matrix exterior_algebra(std::size_t w) const;
    /// Exterior algebra of h* (inverse-transpose action), same basis order.
    Matrix exterior_algebra_dual(std::size_t w) const;

    /// Hermitian forms on S as diagonal weights: delta form (y_I, y_J) = delta_IJ
    /// and the weighted form 2^|I| delta_IJ for which x_i is adjoint to -y_i.
    Matrix delta_form() const;
    Matrix weighted_form() const;

    /// Character of the W~ action on S equals chi times the character of
    /// the exterior algebra pulled back through the projection, on both lifts
    /// of every element.
    bool decomposition_check() const;

    /// Multiplicities of sigma (x) chi in a genuine module, from its traces on
    /// the chosen lifts.
    std::vector<long> decompose_genuine(const IrrepTable& table, const std::vector<Cyc>& lift_traces,
                                        bool allow_virtual = false) const;
    /// Character of sigma (x) chi on the chosen lifts.
    std::vector<Cyc> genuine_character(const IrrepTable& table, std::size_t sigma) const;
    /// Index tau with sigma (x) chi^{-1} = tau (x) chi.
    std::size_t twist_by_inverse_chi(const IrrepTable& table, std::size_t sigma) const;
    static std::string genuine_label(const std::string& sigma) { return sigma + "⊗χ"; }

    const ReflectionGroup& group() const { return *g_; }

private:
    const ReflectionGroup* g_;
    std::size_t n_;
    std::vector<std::uint32_t> subsets_;
    std::vector<std::size_t> offsets_;
    std::vector<Matrix> wedge_, contract_, mu_, lift_;
    std::vector<Cyc> chi_;
};

}  // namespace cherednik
