#pragma once
#include <span>
#include <vector>

#include "sgbbm/fem.hpp"

namespace sgbbm {

// Eigenpairs of the Dirichlet Laplacian on (0,1): lambda_j = (j pi)^2 with
// normalized eigenfunctions e_j(x) = sqrt(2) sin(j pi x). Modal coefficient
// vectors throughout are with respect to the e_j, so the L2 norm of a modal
// state is the Euclidean norm of its coefficients.
class SpectralBasis {
  public:
    static SpectralBasis make(int J);

    int modes() const { return static_cast<int>(lambda_.size()); }
    double lambda(int j) const { return lambda_[j - 1]; }  // 1-based
    std::span<const double> lambdas() const { return lambda_; }
    double eigenfunction(int j, double x) const;

  private:
    explicit SpectralBasis(std::vector<double> lambda) : lambda_(std::move(lambda)) {}
    std::vector<double> lambda_;
};

struct ModalState {
    double t = 0.0;
    std::vector<double> coeffs;
};

// Finiteness of ||A^{(beta-1)/2} Q^{1/2}||_HS for Q = A^{-s}: the exact
// condition is beta < s + 1 - d/2 with d fixed to 1 here. The boolean is
// evaluated from the exponent inequality; hs_norm_sq is the truncated sum
// sum_{j<=J} lambda_j^{beta-s-1}, reported for diagnostics either way.
struct AdmissibilityReport {
    double beta = 0.0;
    double s = 0.0;
    int d = 1;
    int J = 0;
    double hs_norm_sq = 0.0;
    bool divergent = false;  // the untruncated sum diverges
    bool admissible = false;
};

AdmissibilityReport check_admissibility(double beta, double s, int J = 10000);

// Modal coefficients (w.r.t. e_j) of a plain-sine combination: amplitude a
// of sin(j pi x) contributes a / sqrt(2) to mode j.
std::vector<double> modal_from_sines(const SpectralBasis& basis,
                                     std::span<const SineMode> modes);

double modal_l2_norm(std::span<const double> coeffs);

// u_j = v_j / (1 + lambda_j), the eigenbasis form of (I + A)^{-1}.
std::vector<double> elliptic_transform_modal(const SpectralBasis& basis,
                                             std::span<const double> v);

// Exact mild solution of the deterministic system with identity drift
// f(u) = u: each mode evolves as v_j(t) = exp(a_j t) v_j(0) with
// a_j = -lambda_j + 1/(1 + lambda_j).
ModalState exact_linear_deterministic(const SpectralBasis& basis,
                                      std::span<const double> v0, double t);
double linear_decay_rate(double lambda);

// Per-mode Ornstein-Uhlenbeck moments for f = 0 and noise weights gamma_j:
//   mean_j(t) = exp(-lambda_j t) v0_j
//   var_j(t)  = gamma_j (1 - exp(-2 lambda_j t)) / (2 lambda_j)
struct OuMoments {
    std::vector<double> mean;
    std::vector<double> var;
};

OuMoments ou_moments(const SpectralBasis& basis, std::span<const double> gamma,
                     std::span<const double> v0, double t);

}  // namespace sgbbm
