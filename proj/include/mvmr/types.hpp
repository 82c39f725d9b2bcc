#pragma once

#include <Eigen/Dense>

namespace mvmr {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

}  // namespace mvmr
