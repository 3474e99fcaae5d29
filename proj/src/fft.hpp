#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gkw::detail {

/// Real transform of fixed size backed by FFTW. Plans are created once per
/// size under a global lock; execution uses the new-array interface, so a
/// RealFft may be used concurrently from several threads.
class RealFft {
public:
    explicit RealFft(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t spectrum_size() const noexcept { return n_ / 2 + 1; }

    /// Unnormalized forward transform; out has n/2+1 entries.
    void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
    /// Unnormalized inverse transform (caller applies 1/n); in has n/2+1 entries.
    void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;

private:
    std::size_t n_;
    void* forward_plan_;
    void* inverse_plan_;
};

}  // namespace gkw::detail
