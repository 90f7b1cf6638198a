#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "sgbbm/errors.hpp"
#include "sgbbm/spectral.hpp"
#include "sgbbm/stepper.hpp"
#include "support/oracle.hpp"

using namespace sgbbm;
namespace {
constexpr double kPi = std::numbers::pi;

SchemeConfig sine_config(double T, int N, Drift f) {
    SchemeConfig cfg;
    cfg.T = T;
    cfg.N = N;
    cfg.f = std::move(f);
    cfg.v0 = InitialData::sines({{2, 1.0}});
    return cfg;
}

double final_v_norm(int n_cells, double T, int N) {
    auto ops = FemOperators::assemble(Mesh1D(n_cells));
    Stepper st(ops, sine_config(T, N, Drift::identity()));
    auto s = st.run(nullptr, nullptr, nullptr);
    return ops.l2_norm(s.V);
}
}  // namespace

TEST_CASE("drift descriptors") {
    CHECK(Drift::zero()(3.5) == 0.0);
    CHECK(Drift::zero().is_zero());
    CHECK(Drift::identity()(3.5) == 3.5);
    CHECK(!Drift::identity().is_zero());
    CHECK(Drift::custom([](double u) { return u * u; })(3.0) == 9.0);
    CHECK_THROWS_AS(Drift::custom(nullptr), InvalidInput);
}

TEST_CASE("initialization projects and recovers") {
    auto ops = FemOperators::assemble(Mesh1D(64));

    Stepper zero_st(ops, SchemeConfig{});
    auto z = zero_st.init();
    CHECK(z.n == 0);
    for (double c : z.V.coeffs) CHECK(c == 0.0);
    for (double c : z.U.coeffs) CHECK(c == 0.0);

    Stepper st(ops, sine_config(1.0, 10, Drift::zero()));
    auto s = st.init();
    double dev = 0.0;
    for (int i = 0; i < 63; ++i)
        dev = std::max(dev, std::abs(s.V.coeffs[i] - std::sin(2 * kPi * ops.mesh().node(i))));
    CHECK(dev < 5.0 / (64.0 * 64.0));

    // U0 is the elliptic transform of V0: mode-2 scale 1/(1+4 pi^2), O(h^2).
    auto target = ops.l2_project(
        [](double x) { return std::sin(2 * kPi * x) / (1.0 + 4 * kPi * kPi); });
    std::vector<double> diff(63);
    for (int i = 0; i < 63; ++i) diff[i] = s.U.coeffs[i] - target.coeffs[i];
    CHECK(ops.l2_norm(FemFunction(ops.mesh(), diff)) / ops.l2_norm(target) <
          5.0 / (64.0 * 64.0));
}

TEST_CASE("single heat step decays by the resolvent factor") {
    auto ops = FemOperators::assemble(Mesh1D(64));
    const double k = 0.01;
    Stepper st(ops, sine_config(k, 1, Drift::zero()));
    auto s = st.init();
    const std::vector<double> v0 = s.V.coeffs;
    const double n0 = ops.l2_norm(s.V);
    st.step(s, {});
    CHECK(s.n == 1);
    const double ratio = ops.l2_norm(s.V) / n0;

    // Continuous-eigenvalue prediction, O(h^2) off.
    CHECK(ratio == doctest::Approx(1.0 / (1.0 + k * 4 * kPi * kPi)).epsilon(1e-3));

    // Discrete prediction is exact: the projected sine is a pencil
    // eigenvector, so the step multiplies it by 1/(1 + k mu_2).
    auto mu = oracle::pencil_eigenvalues(ops.stiffness(), ops.mass());
    CHECK(ratio == doctest::Approx(1.0 / (1.0 + k * mu[1])).epsilon(1e-12));

    // Residual of the implicit solve: (M + kK) V^1 = M V^0.
    auto lhs = SymTridiag::weighted_sum(ops.mass(), 1.0, ops.stiffness(), k);
    std::vector<double> lv(63), mv(63);
    lhs.matvec(s.V.coeffs, lv);
    ops.mass().matvec(v0, mv);
    double rnum = 0.0, rden = 0.0;
    for (int i = 0; i < 63; ++i) {
        rnum += (lv[i] - mv[i]) * (lv[i] - mv[i]);
        rden += mv[i] * mv[i];
    }
    CHECK(std::sqrt(rnum / rden) < 1e-12);
}

TEST_CASE("zero is a fixed point of drift maps with f(0)=0") {
    auto ops = FemOperators::assemble(Mesh1D(16));
    for (auto f : {Drift::zero(), Drift::identity(),
                   Drift::custom([](double u) { return std::sin(u); })}) {
        SchemeConfig cfg;
        cfg.T = 0.5;
        cfg.N = 10;
        cfg.f = f;
        Stepper st(ops, cfg);
        auto s = st.run(nullptr, nullptr, nullptr);
        CHECK(s.n == 10);
        for (double c : s.V.coeffs) CHECK(c == 0.0);
        for (double c : s.U.coeffs) CHECK(c == 0.0);
    }
}

TEST_CASE("deterministic identity-drift run tracks the exact solution") {
    const double exact = 0.098346409287459621;

    // Measured 2.3e-3 relative at this resolution; the spatial and temporal
    // error components partially cancel here.
    const double e500 = std::abs(final_v_norm(64, 0.05, 500) - exact) / exact;
    CHECK(e500 < 5e-3);

    // Temporal convergence order 1: halving k halves the error once the
    // mesh is fine enough that the spatial part is negligible.
    const double t200 = std::abs(final_v_norm(512, 0.05, 200) - exact) / exact;
    const double t400 = std::abs(final_v_norm(512, 0.05, 400) - exact) / exact;
    CHECK(t200 / t400 == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("N=0 run returns the initial state") {
    auto ops = FemOperators::assemble(Mesh1D(16));
    SchemeConfig cfg;
    cfg.T = 1.0;
    cfg.N = 0;
    cfg.v0 = InitialData::sines({{1, 2.0}});
    Stepper st(ops, cfg);
    auto s = st.run(nullptr, nullptr, nullptr);
    CHECK(s.n == 0);
    auto ref = st.init();
    for (int i = 0; i < 15; ++i) CHECK(s.V.coeffs[i] == ref.V.coeffs[i]);
    CHECK_THROWS_AS(st.step(s, {}), InvalidInput);
}

TEST_CASE("noisy runs are bit-identical and contractive") {
    auto ops = FemOperators::assemble(Mesh1D(32));
    auto model = NoiseModel::make(1.0, 16);
    NoiseProjection proj(ops, 16);
    auto table = BrownianTable::make(2024, 5, 16, 40, 1.0);

    SchemeConfig cfg;
    cfg.T = 1.0;
    cfg.N = 40;
    cfg.f = Drift::identity();
    cfg.v0 = InitialData::sines({{2, 1.0}});
    Stepper st(ops, cfg);

    NormHistory h1, h2;
    auto a = st.run(&model, &table, &proj, &h1);
    auto b = st.run(&model, &table, &proj, &h2);
    for (int i = 0; i < 31; ++i) CHECK(a.V.coeffs[i] == b.V.coeffs[i]);
    REQUIRE(h1.norm_V.size() == 41);
    for (int n = 0; n <= 40; ++n) {
        CHECK(h1.norm_V[n] == h2.norm_V[n]);
        CHECK(h1.norm_U[n] <= h1.norm_V[n]);
    }

    CHECK_THROWS_AS(st.run(&model, nullptr, &proj), InvalidInput);
    CHECK_THROWS_AS(st.run(&model, &table, nullptr), InvalidInput);
    NoiseProjection narrow(ops, 8);
    CHECK_THROWS_AS(st.run(&model, &table, &narrow), InvalidInput);
}

TEST_CASE("response to noise loads is linear") {
    auto ops = FemOperators::assemble(Mesh1D(24));
    auto model = NoiseModel::make(0.5, 12);
    NoiseProjection proj(ops, 12);
    auto table = BrownianTable::make(11, 0, 12, 16, 1.0);

    SchemeConfig cfg;
    cfg.T = 1.0;
    cfg.N = 16;
    cfg.v0 = InitialData::sines({{1, 1.0}});
    Stepper st(ops, cfg);

    auto det = st.run(nullptr, nullptr, nullptr);
    auto one = st.init();
    auto two = st.init();
    std::vector<double> load(23);
    for (int n = 1; n <= 16; ++n) {
        proj.load(sample_increment(table, model, n, cfg.k()), load);
        st.step(one, load);
        for (double& v : load) v *= 2.0;
        st.step(two, load);
    }
    for (int i = 0; i < 23; ++i) {
        const double da = one.V.coeffs[i] - det.V.coeffs[i];
        const double db = two.V.coeffs[i] - det.V.coeffs[i];
        CHECK(db == doctest::Approx(2.0 * da).epsilon(1e-11));
    }
}

TEST_CASE("drift blowup is reported") {
    auto ops = FemOperators::assemble(Mesh1D(8));
    SchemeConfig cfg;
    cfg.T = 1.0;
    cfg.N = 4;
    cfg.f = Drift::custom([](double u) { return 1.0 / u; });
    cfg.v0 = InitialData::zero();
    Stepper st(ops, cfg);
    CHECK_THROWS_AS(st.run(nullptr, nullptr, nullptr), NumericalError);
}

TEST_CASE("stochastic heat equation matches per-mode OU law") {
    const int n_cells = 16;
    const int J = 8;
    const int N = 64;
    const int S = 1000;
    const double T = 1.0;
    const double s_exp = 4.0;
    const double h = 1.0 / n_cells;
    const double k = T / N;

    auto ops = FemOperators::assemble(Mesh1D(n_cells));
    auto model = NoiseModel::make(s_exp, J);
    NoiseProjection proj(ops, J);
    auto basis = SpectralBasis::make(J);

    SchemeConfig cfg;
    cfg.T = T;
    cfg.N = N;
    Stepper st(ops, cfg);

    std::vector<double> sum(J, 0.0), sumsq(J, 0.0);
    for (int samp = 0; samp < S; ++samp) {
        auto table =
            BrownianTable::make(909, static_cast<std::uint64_t>(samp), J, N, T);
        auto state = st.run(&model, &table, &proj, nullptr);
        for (int j = 1; j <= J; ++j) {
            double c = 0.0;
            for (int i = 0; i < n_cells - 1; ++i)
                c += state.V.coeffs[i] * sine_hat_integral(ops.mesh(), j, i);
            c *= std::numbers::sqrt2;
            sum[j - 1] += c;
            sumsq[j - 1] += c * c;
        }
    }

    std::vector<double> gamma(model.gamma().begin(), model.gamma().end());
    std::vector<double> v0(J, 0.0);
    auto ou = ou_moments(basis, gamma, v0, T);

    for (int j : {1, 3, 8}) {
        const double mean = sum[j - 1] / S;
        const double var = sumsq[j - 1] / S - mean * mean;

        // Exact variance of the discrete recursion: the projected sine is a
        // pencil eigenvector, so mode j evolves as a scalar AR(1) with
        // rho = 1/(1+k mu_j) and per-step load gain n w_j^2 / (m_j + k kappa_j).
        const double w = 4.0 / (h * (j * kPi) * (j * kPi)) *
                         std::sin(j * kPi * h / 2) * std::sin(j * kPi * h / 2);
        const double mj = h * (2.0 + std::cos(j * kPi * h)) / 3.0;
        const double kap = (2.0 - 2.0 * std::cos(j * kPi * h)) / h;
        const double rho = mj / (mj + k * kap);
        const double var_disc = (n_cells * n_cells) * w * w * w * w *
                                gamma[j - 1] * k / ((mj + k * kap) * (mj + k * kap)) *
                                (1.0 - std::pow(rho, 2.0 * N)) / (1.0 - rho * rho);

        const double se = var_disc * std::sqrt(2.0 / (S - 1.0));
        const double widen = std::abs(var_disc - ou.var[j - 1]);
        CHECK(std::abs(var - ou.var[j - 1]) <= 3.0 * se + widen);
        CHECK(std::abs(mean - ou.mean[j - 1]) <= 3.0 * std::sqrt(var_disc / S));
    }
}
