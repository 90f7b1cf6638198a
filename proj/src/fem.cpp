#include "sgbbm/fem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sgbbm {

namespace {
constexpr double kPi = std::numbers::pi;

// 3-point Gauss-Legendre on [-1,1].
constexpr double kGaussNode[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGaussWeight[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
}  // namespace

FemFunction::FemFunction(const Mesh1D& m, std::vector<double> c)
    : mesh(m), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != mesh.interior_nodes)
        throw InvalidInput("FemFunction: coefficient count " +
                           std::to_string(coeffs.size()) + " != interior nodes " +
                           std::to_string(mesh.interior_nodes));
}

FemFunction FemFunction::zero(const Mesh1D& m) {
    return FemFunction(m, std::vector<double>(m.interior_nodes, 0.0));
}

double FemFunction::eval(double x) const {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const int cell = std::min(static_cast<int>(x * mesh.n_cells), mesh.n_cells - 1);
    const double left = (cell == 0) ? 0.0 : coeffs[cell - 1];
    const double right = (cell == mesh.n_cells - 1) ? 0.0 : coeffs[cell];
    const double theta = x * mesh.n_cells - cell;
    return left + theta * (right - left);
}

double sine_hat_integral(const Mesh1D& mesh, int j, int i) {
    if (j < 1) throw InvalidInput("sine_hat_integral: mode index must be >= 1");
    if (i < 0 || i >= mesh.interior_nodes)
        throw InvalidInput("sine_hat_integral: node index out of range");
    const double w = j * kPi;
    const double s_half = std::sin(0.5 * w * mesh.h);
    return 4.0 / (mesh.h * w * w) * std::sin(w * mesh.node(i)) * s_half * s_half;
}

FemOperators::FemOperators(const Mesh1D& mesh, SymTridiag m, SymTridiag k)
    : mesh_(mesh),
      mass_(std::move(m)),
      stiffness_(std::move(k)),
      mass_factor_(mass_),
      recovery_factor_(SymTridiag::weighted_sum(mass_, 1.0, stiffness_, 1.0)) {}

FemOperators FemOperators::assemble(const Mesh1D& mesh) {
    const int n = mesh.interior_nodes;
    const double h = mesh.h;
    SymTridiag m, k;
    m.diag.assign(n, 0.0);
    m.off.assign(n - 1, 0.0);
    k.diag.assign(n, 0.0);
    k.off.assign(n - 1, 0.0);

    // Element loop over cells; local matrices of the hat basis:
    //   mass [h/3, h/6; h/6, h/3], stiffness [1/h, -1/h; -1/h, 1/h].
    // Interior node i (0-based) is the right vertex of cell i and the left
    // vertex of cell i+1; boundary vertices are dropped.
    for (int cell = 0; cell < mesh.n_cells; ++cell) {
        const int left = cell - 1;   // interior index of left vertex, -1 at x=0
        const int right = cell;      // interior index of right vertex, n at x=1
        if (left >= 0) {
            m.diag[left] += h / 3.0;
            k.diag[left] += 1.0 / h;
        }
        if (right < n) {
            m.diag[right] += h / 3.0;
            k.diag[right] += 1.0 / h;
        }
        if (left >= 0 && right < n) {
            m.off[left] += h / 6.0;
            k.off[left] += -1.0 / h;
        }
    }
    return FemOperators(mesh, std::move(m), std::move(k));
}

LdlTridiag FemOperators::step_factor(double k) const {
    if (!(k > 0.0)) throw InvalidInput("step_factor: time step must be positive");
    return LdlTridiag(SymTridiag::weighted_sum(mass_, 1.0, stiffness_, k));
}

void FemOperators::require_same_mesh(const FemFunction& f, const char* op) const {
    if (!(f.mesh == mesh_))
        throw InvalidInput(std::string(op) + ": function lives on a different mesh");
}

FemFunction FemOperators::l2_project(const std::function<double(double)>& g) const {
    const int n = mesh_.interior_nodes;
    const double h = mesh_.h;
    std::vector<double> load(n, 0.0);
    for (int cell = 0; cell < mesh_.n_cells; ++cell) {
        const double a = cell * h;
        for (int q = 0; q < 3; ++q) {
            const double x = a + 0.5 * h * (1.0 + kGaussNode[q]);
            const double gx = g(x);
            if (!std::isfinite(gx))
                throw InvalidInput("l2_project: non-finite integrand value at x=" +
                                   std::to_string(x));
            const double wq = 0.5 * h * kGaussWeight[q];
            const double theta = (x - a) / h;
            if (cell >= 1) load[cell - 1] += wq * gx * (1.0 - theta);
            if (cell < mesh_.n_cells - 1) load[cell] += wq * gx * theta;
        }
    }
    mass_factor_.solve_inplace(load);
    return FemFunction(mesh_, std::move(load));
}

FemFunction FemOperators::l2_project_modes(std::span<const SineMode> modes) const {
    const int n = mesh_.interior_nodes;
    std::vector<double> load(n, 0.0);
    for (const SineMode& mode : modes) {
        if (mode.j < 1)
            throw InvalidInput("l2_project_modes: mode index must be >= 1");
        for (int i = 0; i < n; ++i)
            load[i] += mode.amplitude * sine_hat_integral(mesh_, mode.j, i);
    }
    mass_factor_.solve_inplace(load);
    return FemFunction(mesh_, std::move(load));
}

FemFunction FemOperators::elliptic_recover(const FemFunction& v) const {
    require_same_mesh(v, "elliptic_recover");
    std::vector<double> rhs(v.coeffs.size());
    mass_.matvec(v.coeffs, rhs);
    recovery_factor_.solve_inplace(rhs);
    return FemFunction(mesh_, std::move(rhs));
}

double FemOperators::l2_norm(const FemFunction& f) const {
    require_same_mesh(f, "l2_norm");
    std::vector<double> mc(f.coeffs.size());
    mass_.matvec(f.coeffs, mc);
    double sq = 0.0;
    for (std::size_t i = 0; i < mc.size(); ++i) sq += f.coeffs[i] * mc[i];
    return std::sqrt(std::max(sq, 0.0));
}

FemFunction prolong(const Mesh1D& fine, const FemFunction& coarse) {
    const int rc = coarse.mesh.n_cells;
    const int rf = fine.n_cells;
    if (rf % rc != 0)
        throw InvalidInput("prolong: fine n_cells " + std::to_string(rf) +
                           " is not a multiple of coarse n_cells " +
                           std::to_string(rc));
    const int ratio = rf / rc;
    std::vector<double> out(fine.interior_nodes);
    auto coarse_node = [&](int m) {  // global coarse node, 0..rc
        return (m <= 0 || m >= rc) ? 0.0 : coarse.coeffs[m - 1];
    };
    for (int i = 0; i < fine.interior_nodes; ++i) {
        const int g = i + 1;  // global fine node
        const int cell = g / ratio;
        const int offset = g % ratio;
        if (offset == 0) {
            out[i] = coarse_node(cell);
        } else {
            const double theta = static_cast<double>(offset) / ratio;
            out[i] = coarse_node(cell) +
                     theta * (coarse_node(cell + 1) - coarse_node(cell));
        }
    }
    return FemFunction(fine, std::move(out));
}

}  // namespace sgbbm
