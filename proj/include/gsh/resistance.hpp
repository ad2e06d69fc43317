#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gsh/linalg.hpp"
#include "gsh/metric_graph.hpp"

namespace gsh {

/// Exact all-pairs effective resistance between the vertices of a metrized
/// graph, via the grounded inverse of the vertex Laplacian (conductance of
/// an edge is 1/length; loops carry no current between vertices).
class ResistanceMatrix {
public:
    explicit ResistanceMatrix(const MetrizedGraph& g);  // throws DomainError("not connected")

    Rat between(int u, int v) const;
    /// Grounded inverse entry (ground = vertex 0, padded with zeros).
    const Rat& grounded(int i, int j) const { return m_[i][j]; }

private:
    RatMat m_;
};

/// Per-graph cache for resistance profiles. For a vertex x and an edge e,
/// r(x, .) restricted to e is a single quadratic in the arclength parameter;
/// the engine samples it exactly (subdividing at the midpoint) and checks a
/// fourth sample against the fitted quadratic.
class ProfileEngine {
public:
    explicit ProfileEngine(const MetrizedGraph& g);

    const MetrizedGraph& graph() const { return g_; }
    const ResistanceMatrix& base() const { return base_; }

    /// Quadratic s -> r(x, point at arclength s on edge e), for a vertex x.
    Poly vertexProfile(int x, int e);

private:
    struct EdgeSamples {
        std::vector<Rat> mid;      // r(v, midpoint of e) for every vertex v
        std::vector<Rat> quarter;  // r(v, quarter point), used for the degree check
    };
    const EdgeSamples& samples(int e);

    const MetrizedGraph& g_;
    ResistanceMatrix base_;
    std::map<int, EdgeSamples> samples_;
};

/// r(x, y) for arbitrary points, by exact subdivision.
Rat effectiveResistance(const MetrizedGraph& g, const Point& x, const Point& y);

}  // namespace gsh
