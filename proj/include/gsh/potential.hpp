#pragma once

#include <memory>
#include <vector>

#include "gsh/metric_graph.hpp"
#include "gsh/resistance.hpp"

namespace gsh {

/// Exact potentials x -> integral of r(x, .) against the ansatz basis
/// measures of one graph: a unit atom at each vertex and a unit density on
/// each edge. Restricted to an edge these are polynomials of degree <= 2
/// (atoms, foreign densities) or <= 3 (an edge's own density); they are
/// recovered by exact interpolation with an extra verification sample.
class PotentialTable {
public:
    explicit PotentialTable(const MetrizedGraph& g);

    const MetrizedGraph& graph() const { return g_; }
    /// x -> r(x, v)
    const GraphFunction& atomPotential(int v) const { return atom_[v]; }
    /// x -> integral over edge f of r(x, zeta) d zeta
    const GraphFunction& densityPotential(int f) const { return density_[f]; }
    /// Potential of a measure whose atoms all sit at vertices.
    GraphFunction potentialOf(const GraphMeasure& mu) const;

private:
    const MetrizedGraph& g_;
    std::vector<GraphFunction> atom_;
    std::vector<GraphFunction> density_;
};

/// Green's function of a probability measure mu: the solution g_mu of
/// Delta_y g = delta_x - mu with integral of g(x, .) against mu equal to 0,
/// realized through the symmetric kernel
///     g(x, y) = (R(x) + R(y) - r(x, y)) / 2 - tau,
/// R(x) = integral of r(x, .) d mu, tau = (1/2) double integral of r.
class GreenKernel {
public:
    GreenKernel(const MetrizedGraph& g, GraphMeasure mu);  // requires total mass 1

    const Rat& tau() const { return tau_; }
    /// R as a function on the original graph.
    const GraphFunction& potential() const { return r_; }
    Rat value(const Point& x, const Point& y) const;
    /// x -> g(x, x); piecewise of degree <= 3 on each edge.
    GraphFunction diagonal() const;
    /// y -> g(x, y) for fixed x.
    GraphFunction profileAt(const Point& x) const;
    /// x -> g(x, x) + g(K, x) for the canonical divisor K; constant exactly
    /// when mu is the admissible measure.
    GraphFunction admissibilityFunction() const;

private:
    GraphFunction mapBack(const GraphFunction& onSub) const;

    const MetrizedGraph& g_;
    GraphMeasure mu_;
    Subdivision sub_;
    GraphMeasure subMu_;
    std::unique_ptr<PotentialTable> table_;
    GraphFunction rSub_;
    GraphFunction r_;
    Rat tau_;
};

/// The admissible measure: the probability measure whose Green's function
/// makes g(x,x) + g(K,x) constant. Solved exactly in the span of vertex
/// atoms and uniform edge densities, with an a-posteriori admissibility
/// check. Throws DomainError("no admissible measure in genus 0") or
/// DomainError("ansatz insufficient").
GraphMeasure admissibleMeasure(const MetrizedGraph& g);

Rat greenFunction(const MetrizedGraph& g, const GraphMeasure& mu, const Point& x, const Point& y);
GraphFunction greenDiagonal(const MetrizedGraph& g, const GraphMeasure& mu);

/// Exact integral of a graph function against a (possibly signed) measure.
/// Throws if an atom sits where the function jumps.
Rat integrateAgainst(const MetrizedGraph& g, const GraphFunction& f, const GraphMeasure& m);

struct PhiResult {
    Rat value;
    bool genusOneWarning = false;
};

/// phi(Gamma) = -delta/4 + (1/4) * integral of g(x,x) d((10g+2)mu - delta_K),
/// delta = total edge length. Exact rational.
PhiResult phiGraph(const MetrizedGraph& g);

/// lambda = (g-1)/(6(2g+1)) * phi + delta/12, for g >= 2.
Rat lambdaInvariant(int genus, const Rat& phi, const Rat& delta);

}  // namespace gsh
