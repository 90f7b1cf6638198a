#pragma once
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sgbbm/fem.hpp"
#include "sgbbm/noise.hpp"

namespace sgbbm {

// Pointwise drift map applied nodally. The identity map is the reference
// experiments' choice; custom maps must be globally Lipschitz with f(0)=0
// for the stability guarantees to apply (not checked, documented contract).
class Drift {
  public:
    static Drift zero();
    static Drift identity();
    static Drift custom(std::function<double(double)> f);

    bool is_zero() const { return kind_ == Kind::kZero; }
    double operator()(double u) const;

  private:
    enum class Kind { kZero, kIdentity, kCustom };
    explicit Drift(Kind kind) : kind_(kind) {}
    Kind kind_;
    std::function<double(double)> f_;
};

// Initial datum for the parabolic variable v: either an explicit sine
// combination (projected through the closed-form loads) or a general
// function (Gauss quadrature loads).
class InitialData {
  public:
    static InitialData zero();
    static InitialData sines(std::vector<SineMode> modes);
    static InitialData function(std::function<double(double)> v0);

    FemFunction project(const FemOperators& ops) const;

  private:
    InitialData() = default;
    std::vector<SineMode> modes_;
    std::function<double(double)> fn_;
};

struct SchemeConfig {
    double T = 1.0;
    int N = 1;
    Drift f = Drift::zero();
    InitialData v0 = InitialData::zero();

    double k() const { return T / N; }
};

struct TrajectoryState {
    int n;
    FemFunction V;
    FemFunction U;
};

struct NormHistory {
    std::vector<double> norm_V;  // entry n is ||V^n||, n = 0..N
    std::vector<double> norm_U;
};

// One fully discrete trajectory: per step, solve
//   (M + kK) V^n = M (V^{n-1} + k f(U^{n-1})) + noise_load
// then recover (M + K) U^n = M V^n. The (M + kK) factorization is cached at
// construction and shared by all steps; instances are immutable and safe to
// use from concurrent samples.
class Stepper {
  public:
    Stepper(const FemOperators& ops, SchemeConfig cfg);

    const SchemeConfig& config() const { return cfg_; }
    const FemOperators& ops() const { return ops_; }

    TrajectoryState init() const;

    // Advance by one step. noise_load is the assembled right-hand-side noise
    // contribution for this step; an empty span means no noise.
    void step(TrajectoryState& state, std::span<const double> noise_load) const;

    // Run all N steps, drawing per-step increments from the table when noise
    // is enabled. table/projection may be null for deterministic runs.
    TrajectoryState run(const NoiseModel* model, const BrownianTable* table,
                        const NoiseProjection* projection,
                        NormHistory* history = nullptr) const;

  private:
    const FemOperators& ops_;
    SchemeConfig cfg_;
    std::optional<LdlTridiag> lhs_;
};

}  // namespace sgbbm
