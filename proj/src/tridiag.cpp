#include "sgbbm/tridiag.hpp"

#include <cmath>

namespace sgbbm {

void SymTridiag::matvec(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = size();
    if (x.size() != n || y.size() != n)
        throw InvalidInput("SymTridiag::matvec: size mismatch");
    if (n == 0) return;
    if (n == 1) {
        y[0] = diag[0] * x[0];
        return;
    }
    y[0] = diag[0] * x[0] + off[0] * x[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        y[i] = off[i - 1] * x[i - 1] + diag[i] * x[i] + off[i] * x[i + 1];
    y[n - 1] = off[n - 2] * x[n - 2] + diag[n - 1] * x[n - 1];
}

SymTridiag SymTridiag::weighted_sum(const SymTridiag& a, double wa,
                                    const SymTridiag& b, double wb) {
    if (a.size() != b.size())
        throw InvalidInput("SymTridiag::weighted_sum: size mismatch");
    SymTridiag r;
    r.diag.resize(a.diag.size());
    r.off.resize(a.off.size());
    for (std::size_t i = 0; i < a.diag.size(); ++i)
        r.diag[i] = wa * a.diag[i] + wb * b.diag[i];
    for (std::size_t i = 0; i < a.off.size(); ++i)
        r.off[i] = wa * a.off[i] + wb * b.off[i];
    return r;
}

LdlTridiag::LdlTridiag(const SymTridiag& t) {
    const std::size_t n = t.size();
    if (n == 0) throw InvalidInput("LdlTridiag: empty matrix");
    d_.resize(n);
    l_.resize(n > 0 ? n - 1 : 0);
    d_[0] = t.diag[0];
    if (!(d_[0] > 0.0))
        throw NumericalError("LdlTridiag: nonpositive pivot at row 0");
    for (std::size_t i = 1; i < n; ++i) {
        l_[i - 1] = t.off[i - 1] / d_[i - 1];
        d_[i] = t.diag[i] - l_[i - 1] * t.off[i - 1];
        if (!(d_[i] > 0.0) || !std::isfinite(d_[i]))
            throw NumericalError("LdlTridiag: nonpositive pivot at row " +
                                 std::to_string(i));
    }
}

void LdlTridiag::solve_inplace(std::span<double> x) const {
    const std::size_t n = d_.size();
    if (x.size() != n) throw InvalidInput("LdlTridiag::solve: size mismatch");
    for (std::size_t i = 1; i < n; ++i) x[i] -= l_[i - 1] * x[i - 1];
    for (std::size_t i = 0; i < n; ++i) x[i] /= d_[i];
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= l_[i] * x[i + 1];
}

std::vector<double> LdlTridiag::solve(std::span<const double> rhs) const {
    std::vector<double> x(rhs.begin(), rhs.end());
    solve_inplace(x);
    return x;
}

}  // namespace sgbbm
