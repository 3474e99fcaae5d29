#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gkw/errors.hpp"

namespace gkw {

/// Uniform periodic grid on [-half_length, half_length).
///
/// Sample j sits at x_j = -half_length + j * spacing. The reflection
/// x -> -x maps sample j to sample (N - j) mod N, so j = 0 and j = N/2
/// (the origin) are the two self-mirrored points.
class GridSpec {
public:
    static constexpr std::size_t kMinPoints = 16;

    GridSpec(double half_length, std::size_t num_points);

    double half_length() const noexcept { return half_length_; }
    std::size_t num_points() const noexcept { return num_points_; }
    double spacing() const noexcept { return 2.0 * half_length_ / static_cast<double>(num_points_); }
    double length() const noexcept { return 2.0 * half_length_; }

    double x(std::size_t j) const noexcept {
        return -half_length_ + static_cast<double>(j) * spacing();
    }
    std::vector<double> coordinates() const;

    /// Non-negative wavenumbers k_j = pi j / half_length, j = 0..N/2
    /// (the layout of a real-to-complex transform).
    std::vector<double> wavenumbers() const;

    std::size_t mirror(std::size_t j) const noexcept {
        return (num_points_ - j) % num_points_;
    }

    /// Same grid scaled by `factor` in x (used by parameter rescaling).
    GridSpec scaled(double factor) const { return GridSpec(half_length_ * factor, num_points_); }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    double half_length_;
    std::size_t num_points_;
};

/// Smallest half-length for which exp(-decay_rate * L) < tolerance.
double decay_half_length(double decay_rate, double tolerance = 1e-12);

/// Real grid function.
class Field {
public:
    explicit Field(GridSpec grid);
    Field(GridSpec grid, std::vector<double> values);

    template <typename Fn>
    static Field sample(const GridSpec& grid, Fn&& fn) {
        std::vector<double> v(grid.num_points());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(grid.x(j));
        return Field(grid, std::move(v));
    }

    const GridSpec& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    const std::vector<double>& data() const noexcept { return values_; }

    double operator[](std::size_t j) const noexcept { return values_[j]; }
    double& operator[](std::size_t j) noexcept { return values_[j]; }

    bool is_finite() const noexcept;
    double max_abs() const noexcept;
    /// Value at the origin (sample N/2).
    double at_origin() const noexcept { return values_[values_.size() / 2]; }

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double s) noexcept;

    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(Field a, double s) { return a *= s; }
    friend Field operator*(double s, Field a) { return a *= s; }

    /// Pointwise product.
    Field times(const Field& other) const;
    /// Pointwise power. For non-integer exponents negative samples are
    /// clamped to zero first (profiles are positive up to round-off).
    Field pow(double exponent) const;

private:
    GridSpec grid_;
    std::vector<double> values_;
};

void require_same_grid(const Field& a, const Field& b);

// ---- Fourier machinery -----------------------------------------------------

using Spectrum = std::vector<std::complex<double>>;

/// Real-to-complex transform (unnormalized, N/2+1 coefficients).
Spectrum forward_transform(const Field& f);
/// Inverse of forward_transform, including the 1/N factor.
Field inverse_transform(const GridSpec& grid, const Spectrum& coefficients);

/// Multiply the Fourier coefficients of f by m(k). The Nyquist mode gets
/// the symmetrized multiplier Re[(m(k) + m(-k)) / 2], which keeps the
/// result real and consistent with the trigonometric interpolant.
template <typename Multiplier>
Field apply_multiplier(const Field& f, Multiplier&& m) {
    Spectrum c = forward_transform(f);
    const std::vector<double> k = f.grid().wavenumbers();
    const std::size_t nyq = c.size() - 1;
    for (std::size_t j = 0; j < nyq; ++j) c[j] *= std::complex<double>(m(k[j]));
    const std::complex<double> sym =
        0.5 * (std::complex<double>(m(k[nyq])) + std::complex<double>(m(-k[nyq])));
    c[nyq] *= sym.real();
    return inverse_transform(f.grid(), c);
}

// ---- Operations --------------------------------------------------------------

/// Fourier-collocation derivative of order 1..5.
Field spectral_derivative(const Field& f, int order);

/// Rectangle-rule L2 pairing sum f g h.
double inner_product_l2(const Field& f, const Field& g);

/// (sum_{j<=s} ||d^j f||^2)^{1/2}, s in {0,1,2}.
double sobolev_norm(const Field& f, int s);

/// f(x - z), periodic, via the phase shift exp(-i k z).
Field translate(const Field& f, double z);

/// f(-x) on the grid.
Field reflect(const Field& f);

/// (f(x) + f(-x)) / 2.
Field even_projection(const Field& f);

/// Evaluate the trigonometric interpolant of f on another grid. Target
/// points outside [-L, L) of the source grid are set to zero (the field
/// is assumed to have decayed there).
Field resample(const Field& f, const GridSpec& target);

/// Half-line rectangle rule on [0, L]: weight 1/2 at x = 0 and x = L.
double half_line_integral(const Field& f);

}  // namespace gkw
