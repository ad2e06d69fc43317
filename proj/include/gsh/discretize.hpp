#pragma once

#include <vector>

#include "gsh/metric_graph.hpp"

namespace gsh {

/// Floating-point approximations of the admissible measure, Green's
/// function diagonal and phi, computed from the discrete Laplacian of the
/// graph subdivided into `segmentsPerEdge` resistors per edge. Serves as an
/// independent numeric cross-check of the exact pipeline.
struct OracleResult {
    double phi = 0;
    double totalMass = 0;
    std::vector<double> vertexMass;                  // per vertex
    std::vector<double> edgeDensity;                 // per edge, mass per unit length
    std::vector<std::vector<double>> greenDiagonal;  // per edge, g(x,x) at k*len/N, k = 0..N
    /// Sup-norm residual of the discrete admissibility identity; should be
    /// at floating-point noise level.
    double admissibilityResidual = 0;
};

OracleResult discretizationOracle(const MetrizedGraph& g, int segmentsPerEdge);

}  // namespace gsh
