#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gkw::detail {

namespace {

struct PlanPair {
    fftw_plan forward;
    fftw_plan inverse;
};

// Plans live for the whole process; FFTW's planner is not thread-safe.
PlanPair plans_for(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, PlanPair> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    std::vector<double> real(n);
    std::vector<fftw_complex> cplx(n / 2 + 1);
    const int size = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p{fftw_plan_dft_r2c_1d(size, real.data(), cplx.data(), flags),
               fftw_plan_dft_c2r_1d(size, cplx.data(), real.data(), flags)};
    if (p.forward == nullptr || p.inverse == nullptr)
        throw std::runtime_error("FFTW plan creation failed");
    cache.emplace(n, p);
    return p;
}

}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
    const PlanPair p = plans_for(n);
    forward_plan_ = p.forward;
    inverse_plan_ = p.inverse;
}

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
    // r2c leaves its input intact but the API takes a non-const pointer.
    std::vector<double> scratch(in.begin(), in.end());
    fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), scratch.data(),
                         reinterpret_cast<fftw_complex*>(out.data()));
}

void RealFft::inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
    // c2r destroys its input.
    std::vector<std::complex<double>> scratch(in.begin(), in.end());
    fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_),
                         reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
}

}  // namespace gkw::detail
