#include "gkw/index.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "gkw/linop.hpp"

namespace gkw {

namespace {

/// Chebyshev points t_j = cos(pi j / n) and the differentiation matrix.
struct Chebyshev {
    Eigen::VectorXd t;
    Eigen::MatrixXd d;
    Eigen::VectorXd cc_weights;  // Clenshaw-Curtis on [-1, 1]

    explicit Chebyshev(int n) : t(n + 1), d(n + 1, n + 1), cc_weights(n + 1) {
        constexpr double pi = std::numbers::pi;
        for (int j = 0; j <= n; ++j) t[j] = std::cos(pi * j / n);
        Eigen::VectorXd c(n + 1);
        for (int j = 0; j <= n; ++j) c[j] = ((j == 0 || j == n) ? 2.0 : 1.0) * ((j % 2) ? -1.0 : 1.0);
        for (int i = 0; i <= n; ++i) {
            double row = 0.0;
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                d(i, j) = (c[i] / c[j]) / (t[i] - t[j]);
                row += d(i, j);
            }
            d(i, i) = -row;  // negative-sum trick
        }
        // Clenshaw-Curtis weights (Waldvogel's direct formula).
        for (int j = 0; j <= n; ++j) {
            const double theta = pi * j / n;
            double s = 0.0;
            for (int k = 1; k <= n / 2; ++k) {
                const double b = (2 * k == n) ? 1.0 : 2.0;
                s += b * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
            }
            const double cj = (j == 0 || j == n) ? 1.0 : 2.0;
            cc_weights[j] = cj / n * (1.0 - s);
        }
    }

    /// Barycentric interpolation of nodal values at t in [-1, 1].
    double interpolate(const Eigen::VectorXd& values, double x) const {
        const Eigen::Index n = t.size() - 1;
        double num = 0.0, den = 0.0;
        for (Eigen::Index j = 0; j <= n; ++j) {
            const double diff = x - t[j];
            if (diff == 0.0) return values[j];
            double w = (j % 2) ? -1.0 : 1.0;
            if (j == 0 || j == n) w *= 0.5;
            num += w * values[j] / diff;
            den += w / diff;
        }
        return num / den;
    }
};

struct HalfLineSolution {
    double j_half;
    double phi_norm_sq_full;
    double rho_phi_power_full;
    double residual;
    Eigen::VectorXd rho;
    Chebyshev cheb;
};

HalfLineSolution solve_half_line(double p, double r_max, int nodes) {
    const double mu = explicit_speed(p);
    const double kappa = 1.0 / mu;
    const double a = std::pow((p + 1.0) * (p + 4.0) * (3.0 * p + 4.0) / (8.0 * (p + 2.0)), 1.0 / p);
    const double b = p * std::sqrt(p * p + 4.0 * p + 8.0) / (4.0 * (p + 2.0));

    Chebyshev cheb(nodes);
    const Eigen::Index m = nodes + 1;
    const double scale = 2.0 / r_max;  // d/dx = (2 / r_max) d/dt
    Eigen::VectorXd x(m), phi(m), pot(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        x[j] = 0.5 * (cheb.t[j] + 1.0) * r_max;  // x_0 = r_max, x_n = 0
        phi[j] = a * std::pow(1.0 / std::cosh(b * x[j]), 4.0 / p);
        pot[j] = std::pow(phi[j], p);
    }

    // Unknowns [y1; y2; y3; y4], y1 = rho, y_{i+1} = y_i'.
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(4 * m, 4 * m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(4 * m);
    const Eigen::MatrixXd d = scale * cheb.d;
    for (int blk = 0; blk < 3; ++blk) {
        sys.block(blk * m, blk * m, m, m) = d;
        sys.block(blk * m, (blk + 1) * m, m, m) = -Eigen::MatrixXd::Identity(m, m);
    }
    sys.block(3 * m, 3 * m, m, m) = d;
    for (Eigen::Index j = 0; j < m; ++j) {
        sys(3 * m + j, j) = kappa * (1.0 - pot[j]);  // -kappa (-y1 + phi^p y1)
        sys(3 * m + j, 2 * m + j) = -kappa;         // -kappa y3
        rhs[3 * m + j] = kappa * phi[j];
    }

    // Boundary rows replace one collocation equation each.
    const Eigen::Index origin = m - 1;
    const Eigen::Index far = 0;
    const auto set_row = [&](Eigen::Index row, std::initializer_list<Eigen::Index> cols) {
        sys.row(row).setZero();
        for (Eigen::Index c : cols) sys(row, c) = 1.0;
        rhs[row] = 0.0;
    };
    set_row(0 * m + origin, {1 * m + origin});                   // y2(0) = 0
    set_row(2 * m + origin, {3 * m + origin});                   // y4(0) = 0
    set_row(1 * m + far, {0 * m + far, 1 * m + far});            // y1 + y2 = 0 at r_max
    set_row(3 * m + far, {2 * m + far, 3 * m + far});            // y3 + y4 = 0 at r_max

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys);
    const Eigen::VectorXd y = lu.solve(rhs);
    const double residual = (sys * y - rhs).norm() / std::max(1.0, rhs.norm());
    if (!y.allFinite() || !(residual < 1e-8)) {
        std::ostringstream diag;
        diag << "relative collocation residual " << residual << ", reciprocal condition "
             << lu.rcond();
        throw ComputationError("index_bvp: collocation solve failed", diag.str());
    }

    Eigen::VectorXd rho = y.head(m);
    const Eigen::VectorXd w = cheb.cc_weights * (0.5 * r_max);
    const double j_half = (w.array() * rho.array() * phi.array()).sum();
    const double phi_sq = 2.0 * (w.array() * phi.array().square()).sum();
    const double rho_pp = 2.0 * (w.array() * rho.array() * phi.array() * pot.array()).sum();
    return {j_half, phi_sq, rho_pp, residual, std::move(rho), std::move(cheb)};
}

int default_nodes(double r_max) { return std::max(64, static_cast<int>(std::ceil(200.0 * r_max / 30.0))); }

double relative_change(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

double default_r_max(double p) {
    require(std::isfinite(p) && p >= 1.0, "exponent p must be >= 1");
    const double rate1 = linear_decay_rate(1.0, explicit_speed(1.0));
    return 30.0 * rate1 / linear_decay_rate(1.0, explicit_speed(p));
}

IndexReport index_bvp(double p, const BvpOptions& options) {
    require(std::isfinite(p) && p >= 1.0, "exponent p must be >= 1");
    const double r_max = options.r_max > 0.0 ? options.r_max : default_r_max(p);
    const int nodes = options.nodes > 0 ? options.nodes : default_nodes(r_max);
    require(nodes >= 16, "index_bvp needs at least 16 Chebyshev nodes");

    // phi(r_max) < 1e-8 amplitude
    const double b = p * std::sqrt(p * p + 4.0 * p + 8.0) / (4.0 * (p + 2.0));
    const double edge = std::pow(1.0 / std::cosh(b * r_max), 4.0 / p);
    if (!(edge < 1e-8)) {
        std::ostringstream msg;
        msg << "index_bvp: r_max " << r_max << " too small, phi(r_max)/amplitude = " << edge;
        throw InvalidArgument(msg.str());
    }

    const HalfLineSolution sol = solve_half_line(p, r_max, nodes);

    const GridSpec out_grid(r_max, options.output_points);
    Field rho = Field::sample(out_grid, [&](double x) {
        return sol.cheb.interpolate(sol.rho, 2.0 * std::abs(x) / r_max - 1.0);
    });

    IndexReport r{.p = p, .j_half = sol.j_half, .j_full = 2.0 * sol.j_half, .rho = std::move(rho),
                  .r_max = r_max, .method = "bvp"};
    const double expected = -((p + 1.0) / p) * sol.phi_norm_sq_full;
    r.pairing_identity_error = relative_change(sol.rho_phi_power_full, expected);

    if (options.check_refinement) {
        const HalfLineSolution wide = solve_half_line(p, 2.0 * r_max, default_nodes(2.0 * r_max));
        r.refinement_change = relative_change(wide.j_half, sol.j_half);
    }
    return r;
}

GridSpec default_index_grid(double p, std::size_t num_points) {
    return default_grid({p, 1.0, explicit_speed(p)}, num_points);
}

namespace {

IndexReport spectral_once(double p, const GridSpec& grid) {
    const SolitonProfile phi = explicit_gkw_soliton(p, grid, explicit_speed(p));
    const LinearizedOperator op = LinearizedOperator::assemble(phi);
    Field rho = even_projection(solve_constrained(op, phi.field));
    const Field prod = rho.times(phi.field);

    IndexReport r{.p = p, .j_half = half_line_integral(prod), .j_full = inner_product_l2(rho, phi.field),
                  .rho = rho, .r_max = grid.half_length(), .method = "spectral"};
    const double expected = -((p + 1.0) / p) * inner_product_l2(phi.field, phi.field);
    r.pairing_identity_error =
        relative_change(inner_product_l2(rho, phi.field.pow(p + 1.0)), expected);
    return r;
}

}  // namespace

IndexReport index_spectral(double p, const std::optional<GridSpec>& grid, bool check_refinement) {
    require(std::isfinite(p) && p >= 1.0, "exponent p must be >= 1");
    const GridSpec g = grid ? *grid : default_index_grid(p);
    IndexReport r = spectral_once(p, g);
    if (check_refinement) {
        const IndexReport fine = spectral_once(p, GridSpec(g.half_length(), 2 * g.num_points()));
        r.refinement_change = relative_change(fine.j_half, r.j_half);
    }
    return r;
}

IndexReport with_agreement(IndexReport primary, const IndexReport& other) {
    primary.method_agreement = relative_change(other.j_full, primary.j_full);
    return primary;
}

std::vector<ScanRow> index_scan(double p_lo, double p_hi, int count) {
    require(count >= 2, "index scan needs at least two points");
    require(p_lo >= 1.0 && p_hi > p_lo, "index scan needs 1 <= p_lo < p_hi");
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double p = p_lo + (p_hi - p_lo) * i / (count - 1);
        const IndexReport r = index_spectral(p);
        rows.push_back({p, r.j_half, r.j_full});
    }
    return rows;
}

double critical_exponent(double p_lo, double p_hi, double tol) {
    require(p_lo >= 1.0 && p_hi > p_lo, "critical_exponent needs 1 <= p_lo < p_hi");
    require(tol > 0.0, "critical_exponent needs a positive tolerance");
    const auto j = [](double p) { return index_spectral(p).j_full; };
    double f_lo = j(p_lo);
    const double f_hi = j(p_hi);
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        std::ostringstream msg;
        msg << "critical_exponent: no sign change in [" << p_lo << ", " << p_hi << "] (J = " << f_lo
            << ", " << f_hi << ")";
        throw InvalidArgument(msg.str());
    }
    while (p_hi - p_lo > tol) {
        const double mid = 0.5 * (p_lo + p_hi);
        const double f_mid = j(mid);
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            p_lo = mid;
            f_lo = f_mid;
        } else {
            p_hi = mid;
        }
    }
    return 0.5 * (p_lo + p_hi);
}

}  // namespace gkw
