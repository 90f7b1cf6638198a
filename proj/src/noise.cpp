#include "sgbbm/noise.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sgbbm/errors.hpp"
#include "sgbbm/rng.hpp"

namespace sgbbm {

NoiseModel::NoiseModel(SpectralBasis basis, std::vector<double> gamma, double s,
                       bool on)
    : basis_(std::move(basis)), gamma_(std::move(gamma)), s_(s), enabled_(on) {
    trace_ = 0.0;
    for (int j = modes(); j >= 1; --j) trace_ += gamma_[j - 1];
}

NoiseModel NoiseModel::make(double s, int J) {
    if (s < 0.0) throw InvalidInput("NoiseModel: s must be nonnegative");
    auto basis = SpectralBasis::make(J);
    std::vector<double> gamma(J);
    for (int j = 1; j <= J; ++j) gamma[j - 1] = std::pow(basis.lambda(j), -s);
    return NoiseModel(std::move(basis), std::move(gamma), s, true);
}

NoiseModel NoiseModel::disabled(int J) {
    return NoiseModel(SpectralBasis::make(J), std::vector<double>(J, 0.0), 0.0,
                      false);
}

BrownianTable BrownianTable::make(std::uint64_t seed, std::uint64_t sample,
                                  int J, int n_fine, double T) {
    if (J < 1) throw InvalidInput("BrownianTable: need at least one mode");
    if (n_fine < 1) throw InvalidInput("BrownianTable: need at least one step");
    if (!(T >= 0.0)) throw InvalidInput("BrownianTable: T must be nonnegative");
    BrownianTable t;
    t.seed_ = seed;
    t.sample_ = sample;
    t.J_ = J;
    t.n_fine_ = n_fine;
    t.T_ = T;
    t.k_fine_ = T / n_fine;
    const double scale = std::sqrt(t.k_fine_);
    t.inc_.resize(static_cast<std::size_t>(J) * n_fine);
    std::size_t idx = 0;
    for (int j = 1; j <= J; ++j)
        for (int m = 0; m < n_fine; ++m)
            t.inc_[idx++] = scale * rng::normal_draw(seed, sample,
                                                     static_cast<std::uint64_t>(j),
                                                     static_cast<std::uint64_t>(m));
    return t;
}

std::vector<double> sample_increment(const BrownianTable& table,
                                     const NoiseModel& model, int n, double k) {
    if (model.modes() != table.modes())
        throw InvalidInput("sample_increment: model has " +
                           std::to_string(model.modes()) + " modes, table has " +
                           std::to_string(table.modes()));
    if (!(k > 0.0)) throw InvalidInput("sample_increment: step must be positive");
    const double ratio = k / table.k_fine();
    const int c = static_cast<int>(std::llround(ratio));
    if (c < 1 || std::abs(ratio - c) > 1e-9 * ratio)
        throw InvalidInput("sample_increment: step is not an integer multiple "
                           "of the fine step");
    if (table.n_fine() % c != 0)
        throw InvalidInput("sample_increment: fine grid does not tile the step");
    const int n_coarse = table.n_fine() / c;
    if (n < 1 || n > n_coarse)
        throw InvalidInput("sample_increment: step index " + std::to_string(n) +
                           " outside [1, " + std::to_string(n_coarse) + "]");

    std::vector<double> out(model.modes(), 0.0);
    if (!model.enabled()) return out;
    const auto gamma = model.gamma();
    for (int j = 1; j <= model.modes(); ++j) {
        double sum = 0.0;
        const int first = (n - 1) * c;
        for (int m = first; m < first + c; ++m) sum += table.fine_increment(j, m);
        out[j - 1] = std::sqrt(gamma[j - 1]) * sum;
    }
    return out;
}

std::vector<double> noise_load_vector(const FemOperators& ops,
                                      const NoiseModel& model,
                                      std::span<const double> modal_increment) {
    if (static_cast<int>(modal_increment.size()) != model.modes())
        throw InvalidInput("noise_load_vector: increment length mismatch");
    const int n = ops.mesh().interior_nodes;
    std::vector<double> b(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 1; j <= model.modes(); ++j)
            s += modal_increment[j - 1] * std::numbers::sqrt2 *
                 sine_hat_integral(ops.mesh(), j, i);
        b[i] = s;
    }
    return b;
}

NoiseProjection::NoiseProjection(const FemOperators& ops, int J)
    : J_(J), n_(ops.mesh().interior_nodes) {
    if (J < 1) throw InvalidInput("NoiseProjection: need at least one mode");
    table_.resize(static_cast<std::size_t>(J) * n_);
    for (int j = 1; j <= J; ++j)
        for (int i = 0; i < n_; ++i)
            table_[(j - 1) * static_cast<std::size_t>(n_) + i] =
                std::numbers::sqrt2 * sine_hat_integral(ops.mesh(), j, i);
}

void NoiseProjection::load(std::span<const double> modal_increment,
                           std::span<double> out) const {
    if (static_cast<int>(modal_increment.size()) != J_)
        throw InvalidInput("NoiseProjection: increment length mismatch");
    if (static_cast<int>(out.size()) != n_)
        throw InvalidInput("NoiseProjection: output length mismatch");
    for (int i = 0; i < n_; ++i) out[i] = 0.0;
    for (int j = 0; j < J_; ++j) {
        const double a = modal_increment[j];
        if (a == 0.0) continue;
        const double* row = table_.data() + static_cast<std::size_t>(j) * n_;
        for (int i = 0; i < n_; ++i) out[i] += a * row[i];
    }
}

WienerCheck wiener_norm_check(const NoiseModel& model, double T, int n_samples,
                              std::uint64_t seed) {
    if (n_samples < 1)
        throw InvalidInput("wiener_norm_check: need at least one sample");
    WienerCheck w;
    w.exact = T * model.trace();
    double acc = 0.0;
    const auto gamma = model.gamma();
    for (int s = 0; s < n_samples; ++s) {
        const auto table = BrownianTable::make(seed, static_cast<std::uint64_t>(s),
                                               model.modes(), 1, T);
        double nsq = 0.0;
        for (int j = 1; j <= model.modes(); ++j) {
            const double b = table.fine_increment(j, 0);
            nsq += gamma[j - 1] * b * b;
        }
        acc += nsq;
    }
    w.empirical = model.enabled() ? acc / n_samples : 0.0;
    if (w.exact > 0.0)
        w.ratio = w.empirical / w.exact;
    else
        w.ratio = (w.empirical == 0.0)
                      ? 1.0
                      : std::numeric_limits<double>::infinity();
    return w;
}

}  // namespace sgbbm
