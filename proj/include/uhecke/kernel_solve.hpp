#pragma once

#include <vector>

#include "uhecke/rfunc.hpp"

namespace uhecke {

// Right kernel of the matrix whose rows are given, by exact Gaussian
// elimination over the fraction field. Every returned vector is re-checked
// against the original rows before being returned.
std::vector<std::vector<RFunc>> solve_kernel(
    const std::vector<std::vector<RFunc>>& rows);

}  // namespace uhecke
