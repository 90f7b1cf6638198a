#include "sgbbm/stepper.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sgbbm/errors.hpp"

namespace sgbbm {

Drift Drift::zero() { return Drift(Kind::kZero); }

Drift Drift::identity() { return Drift(Kind::kIdentity); }

Drift Drift::custom(std::function<double(double)> f) {
    if (!f) throw InvalidInput("Drift::custom: empty function");
    Drift d(Kind::kCustom);
    d.f_ = std::move(f);
    return d;
}

double Drift::operator()(double u) const {
    switch (kind_) {
        case Kind::kZero: return 0.0;
        case Kind::kIdentity: return u;
        default: return f_(u);
    }
}

InitialData InitialData::zero() { return InitialData(); }

InitialData InitialData::sines(std::vector<SineMode> modes) {
    InitialData d;
    d.modes_ = std::move(modes);
    return d;
}

InitialData InitialData::function(std::function<double(double)> v0) {
    if (!v0) throw InvalidInput("InitialData::function: empty function");
    InitialData d;
    d.fn_ = std::move(v0);
    return d;
}

FemFunction InitialData::project(const FemOperators& ops) const {
    if (fn_) return ops.l2_project(fn_);
    if (modes_.empty()) return FemFunction::zero(ops.mesh());
    return ops.l2_project_modes(modes_);
}

Stepper::Stepper(const FemOperators& ops, SchemeConfig cfg)
    : ops_(ops), cfg_(std::move(cfg)) {
    if (!(cfg_.T > 0.0)) throw InvalidInput("Stepper: T must be positive");
    if (cfg_.N < 0) throw InvalidInput("Stepper: N must be nonnegative");
    if (cfg_.N >= 1) lhs_.emplace(ops_.step_factor(cfg_.k()));
}

TrajectoryState Stepper::init() const {
    FemFunction v0 = cfg_.v0.project(ops_);
    FemFunction u0 = ops_.elliptic_recover(v0);
    return TrajectoryState{0, std::move(v0), std::move(u0)};
}

void Stepper::step(TrajectoryState& state,
                   std::span<const double> noise_load) const {
    if (state.n >= cfg_.N)
        throw InvalidInput("step: trajectory already at final time");
    const int n = ops_.mesh().interior_nodes;
    if (!noise_load.empty() && static_cast<int>(noise_load.size()) != n)
        throw InvalidInput("step: noise load length mismatch");

    const double k = cfg_.k();
    std::vector<double> w(n);
    if (cfg_.f.is_zero()) {
        for (int i = 0; i < n; ++i) w[i] = state.V.coeffs[i];
    } else {
        for (int i = 0; i < n; ++i) {
            const double fu = cfg_.f(state.U.coeffs[i]);
            if (!std::isfinite(fu))
                throw NumericalError("step: drift produced a non-finite value at t_n=" +
                                     std::to_string(state.n * k));
            w[i] = state.V.coeffs[i] + k * fu;
        }
    }

    std::vector<double> rhs(n);
    ops_.mass().matvec(w, rhs);
    for (std::size_t i = 0; i < noise_load.size(); ++i) rhs[i] += noise_load[i];
    lhs_->solve_inplace(rhs);

    state.V.coeffs = std::move(rhs);
    state.U = ops_.elliptic_recover(state.V);
    ++state.n;
}

TrajectoryState Stepper::run(const NoiseModel* model, const BrownianTable* table,
                             const NoiseProjection* projection,
                             NormHistory* history) const {
    const bool noisy = model != nullptr && model->enabled();
    if (noisy && (table == nullptr || projection == nullptr))
        throw InvalidInput("run: enabled noise needs a table and a projection");
    if (noisy && projection->modes() != model->modes())
        throw InvalidInput("run: projection truncation differs from the model");

    TrajectoryState state = init();
    if (history) {
        history->norm_V.assign(1, ops_.l2_norm(state.V));
        history->norm_U.assign(1, ops_.l2_norm(state.U));
    }
    std::vector<double> load;
    if (noisy) load.resize(ops_.mesh().interior_nodes);
    const double k = cfg_.k();
    for (int n = 1; n <= cfg_.N; ++n) {
        if (noisy) {
            projection->load(sample_increment(*table, *model, n, k), load);
            step(state, load);
        } else {
            step(state, {});
        }
        if (history) {
            history->norm_V.push_back(ops_.l2_norm(state.V));
            history->norm_U.push_back(ops_.l2_norm(state.U));
        }
    }
    return state;
}

}  // namespace sgbbm
