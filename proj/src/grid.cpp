#include "gkw/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"

namespace gkw {

GridSpec::GridSpec(double half_length, std::size_t num_points)
    : half_length_(half_length), num_points_(num_points) {
    require(std::isfinite(half_length) && half_length > 0.0, "grid half_length must be positive");
    require(num_points >= kMinPoints, "grid needs at least 16 points");
    require(num_points % 2 == 0, "grid point count must be even");
}

std::vector<double> GridSpec::coordinates() const {
    std::vector<double> xs(num_points_);
    for (std::size_t j = 0; j < num_points_; ++j) xs[j] = x(j);
    return xs;
}

std::vector<double> GridSpec::wavenumbers() const {
    std::vector<double> k(num_points_ / 2 + 1);
    const double dk = std::numbers::pi / half_length_;
    for (std::size_t j = 0; j < k.size(); ++j) k[j] = dk * static_cast<double>(j);
    return k;
}

double decay_half_length(double decay_rate, double tolerance) {
    require(decay_rate > 0.0, "decay rate must be positive");
    require(tolerance > 0.0 && tolerance < 1.0, "decay tolerance must lie in (0, 1)");
    return -std::log(tolerance) / decay_rate;
}

Field::Field(GridSpec grid) : grid_(grid), values_(grid.num_points(), 0.0) {}

Field::Field(GridSpec grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    require(values_.size() == grid_.num_points(), "field length does not match grid");
}

bool Field::is_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double Field::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

Field& Field::operator+=(const Field& other) {
    require_same_grid(*this, other);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
    return *this;
}

Field& Field::operator-=(const Field& other) {
    require_same_grid(*this, other);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
    return *this;
}

Field& Field::operator*=(double s) noexcept {
    for (double& v : values_) v *= s;
    return *this;
}

Field Field::times(const Field& other) const {
    require_same_grid(*this, other);
    Field out(grid_);
    for (std::size_t j = 0; j < values_.size(); ++j) out.values_[j] = values_[j] * other.values_[j];
    return out;
}

Field Field::pow(double exponent) const {
    Field out(grid_);
    const bool integral = exponent == std::round(exponent);
    for (std::size_t j = 0; j < values_.size(); ++j) {
        const double v = integral ? values_[j] : std::max(values_[j], 0.0);
        out.values_[j] = std::pow(v, exponent);
    }
    return out;
}

void require_same_grid(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid())) {
        std::ostringstream msg;
        msg << "grid mismatch: (L=" << a.grid().half_length() << ", N=" << a.grid().num_points()
            << ") vs (L=" << b.grid().half_length() << ", N=" << b.grid().num_points() << ")";
        throw InvalidArgument(msg.str());
    }
}

Spectrum forward_transform(const Field& f) {
    const detail::RealFft fft(f.size());
    Spectrum c(fft.spectrum_size());
    fft.forward(f.values(), c);
    return c;
}

Field inverse_transform(const GridSpec& grid, const Spectrum& coefficients) {
    const detail::RealFft fft(grid.num_points());
    require(coefficients.size() == fft.spectrum_size(), "spectrum length does not match grid");
    Field out(grid);
    fft.inverse(coefficients, out.values());
    out *= 1.0 / static_cast<double>(grid.num_points());
    return out;
}

Field spectral_derivative(const Field& f, int order) {
    require(order >= 1 && order <= 5, "derivative order must be in 1..5");
    require(f.is_finite(), "spectral_derivative: input field has non-finite samples");
    return apply_multiplier(f, [order](double k) {
        return std::pow(std::complex<double>(0.0, k), order);
    });
}

double inner_product_l2(const Field& f, const Field& g) {
    require_same_grid(f, g);
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) s += f[j] * g[j];
    return s * f.grid().spacing();
}

double sobolev_norm(const Field& f, int s) {
    require(s >= 0 && s <= 2, "Sobolev index must be 0, 1 or 2");
    double total = inner_product_l2(f, f);
    for (int order = 1; order <= s; ++order) {
        const Field d = spectral_derivative(f, order);
        total += inner_product_l2(d, d);
    }
    return std::sqrt(total);
}

Field translate(const Field& f, double z) {
    if (z == 0.0) return f;
    return apply_multiplier(f, [z](double k) { return std::polar(1.0, -k * z); });
}

Field reflect(const Field& f) {
    Field out(f.grid());
    for (std::size_t j = 0; j < f.size(); ++j) out[f.grid().mirror(j)] = f[j];
    return out;
}

Field even_projection(const Field& f) {
    Field out(f.grid());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = 0.5 * (f[j] + f[f.grid().mirror(j)]);
    return out;
}

Field resample(const Field& f, const GridSpec& target) {
    const GridSpec& src = f.grid();
    if (src == target) return f;
    const Spectrum c = forward_transform(f);
    const std::size_t n = src.num_points();
    const std::size_t nyq = n / 2;
    const double dk = std::numbers::pi / src.half_length();
    const double inv_n = 1.0 / static_cast<double>(n);

    Field out(target);
    for (std::size_t i = 0; i < target.num_points(); ++i) {
        const double x = target.x(i);
        if (x < -src.half_length() || x >= src.half_length()) continue;
        const double t = x + src.half_length();
        const std::complex<double> step = std::polar(1.0, dk * t);
        std::complex<double> phase = step;
        double sum = c[0].real();
        for (std::size_t j = 1; j < nyq; ++j) {
            sum += 2.0 * (c[j] * phase).real();
            phase *= step;
        }
        sum += c[nyq].real() * std::cos(dk * static_cast<double>(nyq) * t);
        out[i] = sum * inv_n;
    }
    return out;
}

double half_line_integral(const Field& f) {
    const std::size_t n = f.size();
    const std::size_t origin = n / 2;
    double s = 0.5 * f[origin] + 0.5 * f[0];
    for (std::size_t j = origin + 1; j < n; ++j) s += f[j];
    return s * f.grid().spacing();
}

}  // namespace gkw
