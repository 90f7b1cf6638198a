#pragma once
#include <cstddef>
#include <span>
#include <vector>

#include "sgbbm/errors.hpp"

namespace sgbbm {

// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }

    // y = T x
    void matvec(std::span<const double> x, std::span<double> y) const;

    // wa*a + wb*b, same size
    static SymTridiag weighted_sum(const SymTridiag& a, double wa,
                                   const SymTridiag& b, double wb);
};

// LDL^T factorization of an SPD tridiagonal matrix (Thomas elimination).
// Construction fails with NumericalError if a pivot is not strictly positive,
// i.e. the matrix is not SPD.
class LdlTridiag {
  public:
    explicit LdlTridiag(const SymTridiag& t);

    std::size_t size() const { return d_.size(); }

    // Solves T x = b in place.
    void solve_inplace(std::span<double> x) const;

    std::vector<double> solve(std::span<const double> rhs) const;

  private:
    std::vector<double> d_;  // pivots
    std::vector<double> l_;  // subdiagonal multipliers
};

}  // namespace sgbbm
