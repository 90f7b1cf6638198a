#include "sgbbm/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sgbbm/errors.hpp"

namespace sgbbm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

SpectralBasis SpectralBasis::make(int J) {
    if (J < 1) throw InvalidInput("SpectralBasis: need at least one mode");
    std::vector<double> lambda(J);
    for (int j = 1; j <= J; ++j) lambda[j - 1] = (j * kPi) * (j * kPi);
    return SpectralBasis(std::move(lambda));
}

double SpectralBasis::eigenfunction(int j, double x) const {
    if (j < 1 || j > modes())
        throw InvalidInput("eigenfunction: mode index out of range");
    return kSqrt2 * std::sin(j * kPi * x);
}

AdmissibilityReport check_admissibility(double beta, double s, int J) {
    if (beta < 0.0 || s < 0.0)
        throw InvalidInput("check_admissibility: beta and s must be nonnegative");
    if (J < 1) throw InvalidInput("check_admissibility: J must be positive");
    AdmissibilityReport r;
    r.beta = beta;
    r.s = s;
    r.d = 1;
    r.J = J;
    r.admissible = beta < s + 1.0 - 0.5 * r.d;
    // lambda_j ~ j^2, so the sum of lambda_j^{beta-s-1} converges exactly
    // when 2(beta-s-1) < -1, the same inequality.
    r.divergent = !r.admissible;
    const double expo = beta - s - 1.0;
    double sum = 0.0;
    for (int j = J; j >= 1; --j) sum += std::pow((j * kPi) * (j * kPi), expo);
    r.hs_norm_sq = sum;
    return r;
}

std::vector<double> modal_from_sines(const SpectralBasis& basis,
                                     std::span<const SineMode> modes) {
    std::vector<double> c(basis.modes(), 0.0);
    for (const SineMode& m : modes) {
        if (m.j < 1 || m.j > basis.modes())
            throw InvalidInput("modal_from_sines: mode index " + std::to_string(m.j) +
                               " outside basis of size " + std::to_string(basis.modes()));
        c[m.j - 1] += m.amplitude / kSqrt2;
    }
    return c;
}

double modal_l2_norm(std::span<const double> coeffs) {
    double sq = 0.0;
    for (double c : coeffs) sq += c * c;
    return std::sqrt(sq);
}

std::vector<double> elliptic_transform_modal(const SpectralBasis& basis,
                                             std::span<const double> v) {
    if (static_cast<int>(v.size()) != basis.modes())
        throw InvalidInput("elliptic_transform_modal: coefficient length mismatch");
    std::vector<double> u(v.size());
    for (int j = 1; j <= basis.modes(); ++j)
        u[j - 1] = v[j - 1] / (1.0 + basis.lambda(j));
    return u;
}

double linear_decay_rate(double lambda) { return -lambda + 1.0 / (1.0 + lambda); }

ModalState exact_linear_deterministic(const SpectralBasis& basis,
                                      std::span<const double> v0, double t) {
    if (static_cast<int>(v0.size()) != basis.modes())
        throw InvalidInput("exact_linear_deterministic: coefficient length mismatch");
    if (!(t >= 0.0)) throw InvalidInput("exact_linear_deterministic: t must be >= 0");
    ModalState out;
    out.t = t;
    out.coeffs.resize(v0.size());
    for (int j = 1; j <= basis.modes(); ++j)
        out.coeffs[j - 1] = std::exp(linear_decay_rate(basis.lambda(j)) * t) * v0[j - 1];
    return out;
}

OuMoments ou_moments(const SpectralBasis& basis, std::span<const double> gamma,
                     std::span<const double> v0, double t) {
    if (gamma.size() != v0.size() ||
        static_cast<int>(gamma.size()) != basis.modes())
        throw InvalidInput("ou_moments: coefficient length mismatch");
    if (!(t >= 0.0)) throw InvalidInput("ou_moments: t must be >= 0");
    OuMoments m;
    m.mean.resize(gamma.size());
    m.var.resize(gamma.size());
    for (int j = 1; j <= basis.modes(); ++j) {
        const double lam = basis.lambda(j);
        m.mean[j - 1] = std::exp(-lam * t) * v0[j - 1];
        m.var[j - 1] = gamma[j - 1] * (1.0 - std::exp(-2.0 * lam * t)) / (2.0 * lam);
    }
    return m;
}

}  // namespace sgbbm
