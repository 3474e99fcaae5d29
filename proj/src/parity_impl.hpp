#pragma once

#include <numbers>

#include "gkw/grid.hpp"

namespace gkw::detail {

template <typename Symbol>
std::vector<double> circulant_column(std::size_t n, double half_length, Symbol&& symbol) {
    // C e_0: the transform of e_0 is all ones.
    const GridSpec grid(half_length, n);
    const std::vector<double> k = grid.wavenumbers();
    Spectrum s(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) s[j] = symbol(k[j]);
    const Field col = inverse_transform(grid, s);
    return col.data();
}

}  // namespace gkw::detail
