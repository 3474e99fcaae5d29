#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gkw::detail {

enum class Parity { even, odd };

/// Orthonormal basis Q of the even (or odd) grid vectors under the
/// reflection j -> (N - j) mod N. Even: N/2 + 1 vectors, odd: N/2 - 1.
/// Operators that commute with the reflection are block-diagonal in the
/// union of the two bases, and Q^T A Q is their symmetric restriction.
class ParityBasis {
public:
    ParityBasis(std::size_t n, Parity parity);

    std::size_t grid_size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return members_.size(); }
    Parity parity() const noexcept { return parity_; }

    Eigen::VectorXd restrict(std::span<const double> v) const;
    std::vector<double> extend(const Eigen::VectorXd& y) const;

    /// Q^T (C + diag(d)) Q for the circulant C with first column `column`
    /// (column[m] = C_{m,0}, symmetric: column[m] == column[N-m]).
    Eigen::MatrixXd restrict_operator(std::span<const double> column,
                                      std::span<const double> diagonal) const;

private:
    struct Member {
        std::size_t first;
        std::size_t second;  // == first for self-mirrored points
        double w_first;
        double w_second;
    };

    std::size_t n_;
    Parity parity_;
    std::vector<Member> members_;
};

/// First column of the circulant whose eigenvalue on wavenumber k is symbol(k).
template <typename Symbol>
std::vector<double> circulant_column(std::size_t n, double half_length, Symbol&& symbol);

}  // namespace gkw::detail

#include "parity_impl.hpp"
