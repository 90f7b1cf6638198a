#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "sgbbm/fem.hpp"
#include "sgbbm/spectral.hpp"

namespace sgbbm {

// Truncated Karhunen-Loeve representation of the Q-Wiener process with
// Q = A^{-s}: W(t) = sum_j gamma_j^{1/2} beta_j(t) e_j, gamma_j =
// lambda_j^{-s}. The disabled state is a first-class flag so deterministic
// runs share the stochastic code path.
class NoiseModel {
  public:
    static NoiseModel make(double s, int J);
    static NoiseModel disabled(int J);

    bool enabled() const { return enabled_; }
    double s() const { return s_; }
    int modes() const { return basis_.modes(); }
    std::span<const double> gamma() const { return gamma_; }
    std::span<const double> sqrt_gamma() const { return sqrt_gamma_; }
    double trace() const { return trace_; }
    const SpectralBasis& basis() const { return basis_; }

  private:
    NoiseModel(SpectralBasis basis, std::vector<double> gamma, double s, bool on);

    SpectralBasis basis_;
    std::vector<double> gamma_;
    std::vector<double> sqrt_gamma_;
    double s_;
    bool enabled_;
    double trace_;
};

// Per-sample table of raw scalar Brownian increments on the finest time grid
// of a study: entry (j, m) is beta_j(t_{m+1}) - beta_j(t_m) ~ N(0, k_fine),
// drawn at counter coordinate (seed, sample, mode=j, step=m). The table is
// fully determined by (seed, sample, J, n_fine, T); regeneration is
// bit-identical.
class BrownianTable {
  public:
    static BrownianTable make(std::uint64_t seed, std::uint64_t sample, int J,
                              int n_fine, double T);

    double fine_increment(int j, int m) const {  // j 1-based, m 0-based
        return inc_[(j - 1) * static_cast<std::size_t>(n_fine_) + m];
    }
    int modes() const { return J_; }
    int n_fine() const { return n_fine_; }
    double T() const { return T_; }
    double k_fine() const { return k_fine_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t sample() const { return sample_; }

  private:
    BrownianTable() = default;

    std::uint64_t seed_ = 0;
    std::uint64_t sample_ = 0;
    int J_ = 0;
    int n_fine_ = 0;
    double T_ = 0.0;
    double k_fine_ = 0.0;
    std::vector<double> inc_;
};

// Modal noise increment over the n-th coarse step of size k (an integer
// multiple of the table's fine step): gamma_j^{1/2} times the ascending sum
// of the underlying fine increments. Independent of any spatial mesh. The
// disabled model yields the zero vector.
std::vector<double> sample_increment(const BrownianTable& table,
                                     const NoiseModel& model, int n, double k);
void sample_increment_into(const BrownianTable& table, const NoiseModel& model,
                           int n, double k, std::span<double> out);

// Load vector b_i = sum_j inc_j * integral(e_j phi_i) via the closed-form
// sine-hat integrals; the M-solve completing the projection happens in the
// stepper. Reference implementation; hot paths use NoiseProjection.
std::vector<double> noise_load_vector(const FemOperators& ops,
                                      const NoiseModel& model,
                                      std::span<const double> modal_increment);

// Cached J x interior_nodes table of sine-hat integrals for one mesh.
class NoiseProjection {
  public:
    NoiseProjection(const FemOperators& ops, int J);

    int modes() const { return J_; }
    void load(std::span<const double> modal_increment,
              std::span<double> out) const;

  private:
    int J_;
    int n_;
    std::vector<double> table_;  // row j-1 holds the integrals for mode j
};

// Ito isometry diagnostic: empirical E||W(T)||^2 against T * Tr_J(Q).
struct WienerCheck {
    double empirical = 0.0;
    double exact = 0.0;
    double ratio = 1.0;
};

WienerCheck wiener_norm_check(const NoiseModel& model, double T, int n_samples,
                              std::uint64_t seed);

}  // namespace sgbbm
