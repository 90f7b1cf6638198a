#pragma once
#include "sgbbm/errors.hpp"

namespace sgbbm {

// Uniform partition of (0,1) with homogeneous Dirichlet conditions: the
// boundary nodes x=0 and x=1 carry no degrees of freedom.
struct Mesh1D {
    int n_cells;
    double h;
    int interior_nodes;

    explicit Mesh1D(int cells)
        : n_cells(cells), h(1.0 / cells), interior_nodes(cells - 1) {
        if (cells < 2)
            throw InvalidInput("Mesh1D: n_cells must be >= 2, got " +
                               std::to_string(cells));
    }

    // Coordinate of interior node i, i in [0, interior_nodes).
    double node(int i) const { return (i + 1) * h; }

    bool operator==(const Mesh1D& o) const { return n_cells == o.n_cells; }
};

}  // namespace sgbbm
