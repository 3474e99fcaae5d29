#include "gkw/linop.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "linop_blocks.hpp"

namespace gkw {

using detail::Parity;
using detail::ParityBasis;

namespace {

constexpr double kAssemblyResidual = 1e-6;

constexpr double kKernelFraction = 1e-5;

Field grid_vector_to_field(const GridSpec& grid, std::vector<double> v) {
    // Unit Euclidean vectors have L2 norm sqrt(h).
    const double scale = 1.0 / std::sqrt(grid.spacing());
    for (double& x : v) x *= scale;
    return Field(grid, std::move(v));
}

void fix_sign(Field& f) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < f.size(); ++j)
        if (std::abs(f[j]) > std::abs(f[arg])) arg = j;
    if (f[arg] < 0.0) f *= -1.0;
}

}  // namespace

LinearizedOperator LinearizedOperator::around(const Field& phi, const WaveParams& params) {
    params.validate();
    require(phi.is_finite(), "linearization point has non-finite samples");
    Field potential = phi.pow(params.p);
    return LinearizedOperator(params, phi, std::move(potential));
}

LinearizedOperator LinearizedOperator::assemble(const SolitonProfile& profile) {
    const double res = residual_norm(profile.field, profile.params);
    const double tol = std::max(kAssemblyResidual, residual_floor(profile.field, profile.params));
    if (!(res < tol)) {
        std::ostringstream msg;
        msg << "assemble: profile residual " << res << " exceeds " << tol;
        throw InvalidArgument(msg.str());
    }
    LinearizedOperator op = around(profile.field, profile.params);
    const double edge = std::abs(op.potential_[0]);
    if (edge > 1e-10 * std::max(1.0, op.potential_.max_abs()))
        throw InvalidArgument("assemble: potential has not decayed at the grid boundary");
    return op;
}

LinearizedOperator LinearizedOperator::potential_free(const WaveParams& params, const GridSpec& grid) {
    params.validate();
    return LinearizedOperator(params, Field(grid), Field(grid));
}

Field LinearizedOperator::apply(const Field& v) const {
    require_same_grid(v, profile_);
    Field out = apply_multiplier(v, [this](double k) { return symbol(k); });
    out -= potential_.times(v);
    return out;
}

namespace detail {

Eigen::MatrixXd restricted_matrix(const LinearizedOperator& op, const ParityBasis& basis) {
    const GridSpec& g = op.grid();
    const std::vector<double> column = circulant_column(
        g.num_points(), g.half_length(), [&op](double k) { return op.symbol(k); });
    std::vector<double> diagonal(op.potential().data());
    for (double& d : diagonal) d = -d;
    return basis.restrict_operator(column, diagonal);
}

Eigen::MatrixXd restricted_h2_gram(const GridSpec& grid, const ParityBasis& basis) {
    const std::vector<double> column = circulant_column(
        grid.num_points(), grid.half_length(), [](double k) { return 1.0 + k * k + k * k * k * k; });
    const std::vector<double> diagonal(grid.num_points(), 0.0);
    return basis.restrict_operator(column, diagonal);
}

}  // namespace detail

SpectrumReport bottom_spectrum(const LinearizedOperator& op, int k) {
    require(k >= 3, "bottom_spectrum needs k >= 3");
    const GridSpec& g = op.grid();

    struct Pair {
        double value;
        Field vector;
        bool even;
    };
    std::vector<Pair> pairs;
    SpectrumReport report;

    double floor = op.symbol(0.0);
    for (double kk : g.wavenumbers()) floor = std::min(floor, op.symbol(kk));
    report.essential_floor = floor;
    const double kernel_threshold = kKernelFraction * std::abs(floor);

    for (Parity parity : {Parity::even, Parity::odd}) {
        const ParityBasis basis(g.num_points(), parity);
        const Eigen::MatrixXd m = detail::restricted_matrix(op, basis);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        if (es.info() != Eigen::Success)
            throw ComputationError("bottom_spectrum: symmetric eigensolver did not converge",
                                   parity == Parity::even ? "even block" : "odd block");
        const Eigen::VectorXd& values = es.eigenvalues();
        for (Eigen::Index i = 0; i < values.size(); ++i)
            if (values[i] < -kernel_threshold) ++report.negative_count;
        const Eigen::Index keep = std::min<Eigen::Index>(k, values.size());
        for (Eigen::Index i = 0; i < keep; ++i) {
            Field f = grid_vector_to_field(g, basis.extend(es.eigenvectors().col(i)));
            fix_sign(f);
            pairs.push_back({values[i], std::move(f), parity == Parity::even});
        }
    }

    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.value < b.value; });
    if (pairs.size() > static_cast<std::size_t>(k)) pairs.erase(pairs.begin() + k, pairs.end());

    const Field slope = spectral_derivative(op.profile(), 1);
    const double slope_norm = sobolev_norm(slope, 0);
    double best = std::numeric_limits<double>::infinity();
    for (const Pair& pr : pairs) {
        report.eigenvalues.push_back(pr.value);
        report.even.push_back(pr.even);
        const Field r = op.apply(pr.vector) - pr.value * pr.vector;
        report.residual_norms.push_back(sobolev_norm(r, 0));
        if (std::abs(pr.value) < best) {
            best = std::abs(pr.value);
            report.kernel_eigenvalue = pr.value;
            report.kernel_alignment =
                slope_norm > 0.0 ? std::abs(inner_product_l2(pr.vector, slope)) / slope_norm : 0.0;
        }
        report.eigenfunctions.push_back(pr.vector);
    }
    report.kernel_found = best < kernel_threshold;
    return report;
}

Field solve_constrained(const LinearizedOperator& op, const Field& rhs) {
    require_same_grid(rhs, op.profile());
    require(rhs.is_finite(), "solve_constrained: rhs has non-finite samples");
    const double rhs_norm = sobolev_norm(rhs, 0);
    if (rhs_norm == 0.0) return Field(rhs.grid());
    const double odd_part = sobolev_norm(rhs - even_projection(rhs), 0);
    require(odd_part <= 1e-10 * rhs_norm, "solve_constrained: rhs must be even");

    const GridSpec& g = op.grid();
    const ParityBasis basis(g.num_points(), Parity::even);
    const Eigen::MatrixXd m = detail::restricted_matrix(op, basis);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-14)) {
        std::ostringstream diag;
        diag << "reciprocal condition estimate " << rcond;
        throw ComputationError("solve_constrained: even-subspace operator is singular", diag.str());
    }
    const Eigen::VectorXd y = lu.solve(basis.restrict(rhs.values()));
    Field w(g, basis.extend(y));

    const double res = sobolev_norm(op.apply(w) - rhs, 0);
    if (!(res < 1e-8 * std::max(1.0, rhs_norm))) {
        std::ostringstream diag;
        diag << "residual " << res << ", reciprocal condition estimate " << rcond;
        throw ComputationError("solve_constrained: residual check failed", diag.str());
    }
    return w;
}

// ---- Fourier-side sufficient condition ----------------------------------

double log_abs_gamma(double x, double y) {
    require(x > 0.0, "log_abs_gamma needs a positive real part");
    // Shift up with Gamma(z) = Gamma(z + 1) / z, then use Stirling's series.
    std::complex<double> z(x, y);
    double shift = 0.0;
    while (z.real() < 15.0) {
        shift += std::log(std::abs(z));
        z += 1.0;
    }
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    const std::complex<double> series =
        inv * (1.0 / 12.0 + inv2 * (-1.0 / 360.0 + inv2 * (1.0 / 1260.0 + inv2 * (-1.0 / 1680.0))));
    const std::complex<double> lg =
        (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
    return lg.real() - shift;
}

double sech_power_transform(double nu, double omega) {
    require(nu > 0.0, "sech power must be positive");
    const double log_value = (nu - 1.0) * std::log(2.0) - std::lgamma(nu) +
                             2.0 * log_abs_gamma(0.5 * nu, 0.5 * omega);
    return std::exp(log_value);
}

double sech4_half_transform(double omega) {
    constexpr double pi = std::numbers::pi;
    const double prefactor = 16.0 * pi / 6.0;
    if (omega == 0.0) return prefactor / pi;  // omega / sinh(pi omega) -> 1/pi
    return prefactor * omega * (omega * omega + 1.0) / std::sinh(pi * omega);
}

double sech4_log_curvature(double omega) {
    constexpr double pi = std::numbers::pi;
    const double w2 = omega * omega;
    if (std::abs(omega) < 1e-4) return 2.0 - pi * pi / 3.0 + w2 * (std::pow(pi, 4) / 15.0 - 6.0);
    const double s = std::sinh(pi * omega);
    return -1.0 / w2 + 2.0 * (1.0 - w2) / ((1.0 + w2) * (1.0 + w2)) + pi * pi / (s * s);
}

AlbertReport albert_criterion(double p, double omega_max, int samples) {
    require(std::isfinite(p) && p >= 1.0, "albert_criterion needs p >= 1");
    require(omega_max > 1e-3, "omega_max must exceed 1e-3");
    require(samples >= 2, "albert_criterion needs at least two samples");

    const double nu = 4.0 / p;
    const double f0 = sech_power_transform(nu, 0.0);
    const double lo = std::log(1e-3);
    const double hi = std::log(omega_max);

    AlbertReport r;
    r.samples = samples;
    r.min_transform_ratio = std::numeric_limits<double>::infinity();
    r.max_curvature = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double omega = std::exp(lo + (hi - lo) * i / (samples - 1));
        const double ratio = sech_power_transform(nu, omega) / f0;
        const double curvature = sech4_log_curvature(omega);
        r.min_transform_ratio = std::min(r.min_transform_ratio, std::isfinite(ratio) ? ratio : -1.0);
        r.max_curvature = std::max(r.max_curvature, std::isfinite(curvature) ? curvature : 1.0);
    }
    r.positivity_ok = r.min_transform_ratio > 0.0;
    r.logconcavity_ok = r.max_curvature < 0.0;
    r.worst_margin = std::min(r.min_transform_ratio, -r.max_curvature);
    return r;
}

}  // namespace gkw
