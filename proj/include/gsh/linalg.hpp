#pragma once

#include <optional>
#include <vector>

#include "gsh/rational.hpp"

namespace gsh {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Exact dense linear algebra over Q. Matrices here are tiny (vertex
/// Laplacians and ansatz systems), so plain Gauss-Jordan is enough.

struct LinearSolution {
    bool consistent = false;
    RatVec particular;              // one solution, free variables set to 0
    std::vector<RatVec> nullspace;  // basis of the homogeneous solutions
};

LinearSolution solveLinear(RatMat a, RatVec b);

/// Minimum Euclidean-norm element of the affine solution set.
RatVec leastNormSolution(const LinearSolution& solution);

std::optional<RatMat> invertMatrix(RatMat a);

int matrixRank(RatMat a);

}  // namespace gsh
