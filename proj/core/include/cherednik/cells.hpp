#pragma once

#include "cherednik/vogan.hpp"

#include <string>
#include <vector>

namespace cherednik {

/// Composition multiplicities [Mbar(sigma) : Lbar(tau)] of baby Verma modules
/// at t = 0, with the graded shifts at which each head occurs.
struct LinkageGraph {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> mult;  // [sigma][tau]
    struct Factor {
        std::size_t sigma, tau, shift;
    };
    std::vector<Factor> factors;
    std::vector<std::size_t> simple_dims;  // dim Lbar(tau)
    std::vector<std::size_t> verma_dims;   // dim Mbar(sigma) = |W| dim sigma
};

/// Peels graded W-characters: the lowest nonzero degree of what is left of
/// Mbar(sigma) consists of heads of factors Lbar(tau)[k]. Throws
/// std::logic_error when a layer cannot be matched or when a factor has a
/// different Euler scalar than Mbar(sigma).
LinkageGraph decomposition_numbers(const Catalog& cat, const Params& p);

struct CellPartition {
    enum class Provenance { Linkage, Theta, Both };
    std::string c;
    std::vector<std::vector<std::string>> blocks;
    Provenance provenance = Provenance::Both;
    std::vector<std::vector<std::string>> linkage_blocks, theta_blocks;
    /// Every linkage block lies inside one fiber of the central character.
    bool linkage_refines_theta = true;
    std::vector<int> central_element_degrees;
    /// Dimension of the span of the central characters on the baby Vermas,
    /// bounded by |W|.
    std::size_t central_probe_dim = 0;
    bool probe_reaches_order = false;

    /// Index of the block containing a label.
    std::size_t block_of(const std::string& label) const;
};
std::string to_string(CellPartition::Provenance p);

/// Cells at t = 0 from linkage and from the fibers of the central characters
/// of weight-zero central elements of degree <= central_degree.
CellPartition cm_cells(const Catalog& cat, const Params& p, int central_degree = 2);

/// One partition per value of c (uniform on all classes), t = 0.
std::vector<CellPartition> cell_sweep(const Catalog& cat, const std::vector<Cyc>& grid, int central_degree = 2,
                                      std::size_t threads = 1);

/// For every sigma: each constituent nu of H^*(h*, Lbar(sigma)) has
/// nu (x) det_{h*} in the cell of sigma, and sigma (x) det_h is a constituent.
struct CellConstituents {
    bool same_cell = true;
    bool top_wedge_present = true;
    struct Row {
        std::string sigma;
        std::vector<std::string> constituents;
        bool same_cell = true;
        bool top_wedge = true;
    };
    std::vector<Row> rows;
    bool holds() const { return same_cell && top_wedge_present; }
};
CellConstituents cell_constituents_check(const Catalog& cat, const Params& p, const CellPartition& cells);

}  // namespace cherednik
