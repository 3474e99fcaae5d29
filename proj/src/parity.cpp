#include "parity.hpp"

#include <cmath>

namespace gkw::detail {

ParityBasis::ParityBasis(std::size_t n, Parity parity) : n_(n), parity_(parity) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::size_t half = n / 2;
    if (parity == Parity::even) {
        members_.push_back({0, 0, 1.0, 0.0});
        members_.push_back({half, half, 1.0, 0.0});
        for (std::size_t j = 1; j < half; ++j) members_.push_back({j, n - j, r, r});
    } else {
        for (std::size_t j = 1; j < half; ++j) members_.push_back({j, n - j, r, -r});
    }
}

Eigen::VectorXd ParityBasis::restrict(std::span<const double> v) const {
    Eigen::VectorXd y(static_cast<Eigen::Index>(dim()));
    for (std::size_t a = 0; a < dim(); ++a) {
        const Member& m = members_[a];
        double s = m.w_first * v[m.first];
        if (m.second != m.first) s += m.w_second * v[m.second];
        y[static_cast<Eigen::Index>(a)] = s;
    }
    return y;
}

std::vector<double> ParityBasis::extend(const Eigen::VectorXd& y) const {
    std::vector<double> v(n_, 0.0);
    for (std::size_t a = 0; a < dim(); ++a) {
        const Member& m = members_[a];
        const double ya = y[static_cast<Eigen::Index>(a)];
        v[m.first] += m.w_first * ya;
        if (m.second != m.first) v[m.second] += m.w_second * ya;
    }
    return v;
}

Eigen::MatrixXd ParityBasis::restrict_operator(std::span<const double> column,
                                               std::span<const double> diagonal) const {
    const auto entry = [&](std::size_t i, std::size_t j) {
        return column[(i + n_ - j) % n_];
    };
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd b(d, d);
    for (std::size_t a = 0; a < dim(); ++a) {
        const Member& ma = members_[a];
        for (std::size_t c = a; c < dim(); ++c) {
            const Member& mc = members_[c];
            double s = ma.w_first * mc.w_first * entry(ma.first, mc.first);
            if (mc.second != mc.first) s += ma.w_first * mc.w_second * entry(ma.first, mc.second);
            if (ma.second != ma.first) {
                s += ma.w_second * mc.w_first * entry(ma.second, mc.first);
                if (mc.second != mc.first)
                    s += ma.w_second * mc.w_second * entry(ma.second, mc.second);
            }
            b(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) = s;
            b(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(a)) = s;
        }
        double diag = ma.w_first * ma.w_first * diagonal[ma.first];
        if (ma.second != ma.first) diag += ma.w_second * ma.w_second * diagonal[ma.second];
        b(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) += diag;
    }
    return b;
}

}  // namespace gkw::detail
