#pragma once

#include <Eigen/Dense>

#include "gkw/linop.hpp"
#include "parity.hpp"

namespace gkw::detail {

/// Q^T L Q on one parity block.
Eigen::MatrixXd restricted_matrix(const LinearizedOperator& op, const ParityBasis& basis);

/// Q^T G Q for the H^2 Gram operator 1 + k^2 + k^4.
Eigen::MatrixXd restricted_h2_gram(const GridSpec& grid, const ParityBasis& basis);

}  // namespace gkw::detail
