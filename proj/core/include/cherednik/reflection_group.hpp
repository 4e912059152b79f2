#pragma once

#include "cherednik/matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cherednik {

/// Thrown when a computation would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Reflection {
    std::size_t element = 0;  // index in the group
    Vector alpha;             // in h*, spans im(1 - s) on h*
    Vector alpha_check;       // in h, spans im(1 - s) on h
    Cyc lambda;               // det_h(s), the nontrivial eigenvalue on h
    Cyc pairing;              // <alpha_check, alpha>
    std::size_t cls = 0;      // index into ReflectionGroup::reflection_classes()
};

/// Finite matrix group acting on h = C^n by column vectors; h* carries the
/// inverse-transpose action so that the coordinate pairing is invariant.
class ReflectionGroup {
public:
    /// Closure of the generators. Element 0 is the identity; the order of
    /// the remaining elements is the breadth-first order from the generators.
    static ReflectionGroup generate(const std::vector<Matrix>& generators, std::size_t cap);

    std::size_t rank() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const Matrix& element(std::size_t i) const { return elems_[i]; }
    const Matrix& dual(std::size_t i) const { return duals_[i]; }
    const std::vector<Matrix>& elements() const { return elems_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inv_[a]; }
    std::optional<std::size_t> find(const Matrix& m) const;
    /// Least common conductor of all matrix entries.
    int conductor() const { return conductor_; }

    const std::vector<std::size_t>& generator_indices() const { return gens_; }
    /// Element = generator(word[0]) * ... * generator(word.back()).
    std::vector<std::size_t> generator_word(std::size_t i) const;

    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }

    const std::vector<Reflection>& reflections() const { return refl_; }
    /// Conjugacy classes (indices into classes()) that consist of reflections.
    const std::vector<std::size_t>& reflection_classes() const { return refl_classes_; }
    /// Index into reflections() for a group element, if it is a reflection.
    std::optional<std::size_t> reflection_index(std::size_t element) const;
    /// Shortest word in reflections (indices into reflections()) whose
    /// product, left to right, is element i.
    const std::vector<std::size_t>& reflection_word(std::size_t i) const { return rwords_[i]; }

    Cyc det_h(std::size_t i) const { return dets_[i]; }
    /// W-invariant positive Hermitian form on h* in the x coordinates, the
    /// average of dual(w)^* dual(w). The identity when the duals are unitary.
    const Matrix& dual_form() const { return dual_form_; }
    /// True when the reflections alone generate the group.
    bool generated_by_reflections() const;

private:
    std::size_t n_ = 0;
    int conductor_ = 1;
    std::vector<Matrix> elems_, duals_;
    Matrix dual_form_;
    std::vector<Cyc> dets_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> table_, inv_, gens_;
    std::vector<std::size_t> parent_, parent_gen_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
    std::vector<Reflection> refl_;
    std::vector<std::size_t> refl_classes_;
    std::vector<std::vector<std::size_t>> rwords_;
};

/// Key identifying a matrix by its exact entries, all written in Q(zeta_n).
std::string matrix_key(const Matrix& m, int n);

struct Irrep {
    std::string label;
    std::size_t dim = 0;
    std::vector<Matrix> matrices;  // per group element
    std::vector<Cyc> character;    // per group element
};

/// Explicit irreducible representations with exact characters.
class IrrepTable {
public:
    IrrepTable() = default;
    IrrepTable(const ReflectionGroup& g, std::vector<Irrep> irreps);

    /// Extend generator images multiplicatively to the whole group and check
    /// the homomorphism property on every product.
    static Irrep from_generators(const ReflectionGroup& g, std::string label, const std::vector<Matrix>& images);

    std::size_t size() const { return irreps_.size(); }
    const Irrep& operator[](std::size_t i) const { return irreps_[i]; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t require(const std::string& label) const;
    std::vector<std::string> labels() const;

    /// Multiplicities of a class function given per group element; throws
    /// std::logic_error if some multiplicity is not an integer or, unless
    /// allow_virtual, negative.
    std::vector<long> decompose_character(const std::vector<Cyc>& values, bool allow_virtual = false) const;
    /// Multiplicities of a representation given by its matrices.
    std::vector<long> decompose(const std::vector<Matrix>& action) const;

    /// Index of sigma tensor the one-dimensional irrep `linear`.
    std::size_t tensor_linear(std::size_t sigma, std::size_t linear) const;
    /// Index of the irrep whose character is the complex conjugate (dual).
    std::size_t dual(std::size_t sigma) const;
    /// Index of the one-dimensional irrep w -> det_h(w).
    std::size_t det_h_index() const;

    /// Orthogonality and sum-of-squares checks. Throws std::logic_error.
    void verify() const;

private:
    std::vector<Irrep> irreps_;
    std::vector<std::size_t> inv_;
    std::vector<Cyc> det_;
    std::size_t find_character(const std::vector<Cyc>& chi) const;
};

/// Character table equivalence: some bijection of classes and irreps
/// matches both tables (class sizes preserved).
bool same_character_table(const ReflectionGroup& g1, const IrrepTable& t1, const ReflectionGroup& g2,
                          const IrrepTable& t2);

}  // namespace cherednik
