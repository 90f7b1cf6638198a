#pragma once
#include <functional>
#include <span>
#include <vector>

#include "sgbbm/mesh.hpp"
#include "sgbbm/tridiag.hpp"

namespace sgbbm {

// Coefficients of a continuous piecewise-linear function on the interior
// nodes of a mesh; the reconstruction vanishes at x=0 and x=1.
struct FemFunction {
    Mesh1D mesh;
    std::vector<double> coeffs;

    FemFunction(const Mesh1D& m, std::vector<double> c);
    static FemFunction zero(const Mesh1D& m);

    // Piecewise-linear evaluation at x in [0,1].
    double eval(double x) const;
};

// amplitude * sin(j*pi*x)
struct SineMode {
    int j;
    double amplitude;
};

// Closed-form integral of a hat function against a sine:
//   int_0^1 phi_i(x) sin(j pi x) dx
//     = 4/(h (j pi)^2) * sin(j pi x_i) * sin^2(j pi h / 2),
// with x_i the node of phi_i. i is the 0-based interior index.
double sine_hat_integral(const Mesh1D& mesh, int j, int i);

// Mass and stiffness matrices of the P1 element space on a mesh, with
// cached factorizations of M and M+K. Immutable after assembly; safe to
// share across threads.
class FemOperators {
  public:
    static FemOperators assemble(const Mesh1D& mesh);

    const Mesh1D& mesh() const { return mesh_; }
    const SymTridiag& mass() const { return mass_; }
    const SymTridiag& stiffness() const { return stiffness_; }
    const LdlTridiag& mass_factor() const { return mass_factor_; }
    const LdlTridiag& recovery_factor() const { return recovery_factor_; }

    // Factorization of M + k*K for a time step k > 0.
    LdlTridiag step_factor(double k) const;

    // L2 projection onto the element space. Loads are computed by composite
    // 3-point Gauss quadrature per cell; non-finite values of g are rejected.
    FemFunction l2_project(const std::function<double(double)>& g) const;

    // L2 projection of a sine combination, with closed-form load integrals.
    FemFunction l2_project_modes(std::span<const SineMode> modes) const;

    // Discrete elliptic transform: solves (M + K) u = M v.
    FemFunction elliptic_recover(const FemFunction& v) const;

    // sqrt(c^T M c), the exact L2(0,1) norm of the reconstruction.
    double l2_norm(const FemFunction& f) const;

  private:
    FemOperators(const Mesh1D& mesh, SymTridiag m, SymTridiag k);

    void require_same_mesh(const FemFunction& f, const char* op) const;

    Mesh1D mesh_;
    SymTridiag mass_;
    SymTridiag stiffness_;
    LdlTridiag mass_factor_;
    LdlTridiag recovery_factor_;
};

// Nodal values of a coarse function on a nested finer mesh. Exact, because
// the coarse element space is contained in the fine one. The fine cell count
// must be an integer multiple of the coarse one.
FemFunction prolong(const Mesh1D& fine, const FemFunction& coarse);

}  // namespace sgbbm
