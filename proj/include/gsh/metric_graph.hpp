#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsh/polynomial.hpp"
#include "gsh/rational.hpp"

namespace gsh {

/// A metrized graph: finite multigraph with positive rational edge lengths
/// and a non-negative genus mark on each vertex. Loops and multi-edges are
/// allowed. The total genus is firstBetti + sum of the vertex marks.
struct MetrizedGraph {
    struct Vertex {
        std::string id;
        int genus = 0;
    };
    struct Edge {
        int u = -1;
        int v = -1;
        Rat length;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int vertexCount() const { return static_cast<int>(vertices.size()); }
    int edgeCount() const { return static_cast<int>(edges.size()); }
    int vertexIndex(const std::string& id) const;  // -1 if absent
    int vertexDegree(int v) const;                 // loops count twice

    bool isConnected() const;
    int firstBetti() const { return edgeCount() - vertexCount() + 1; }
    int totalGenus() const;
    Rat totalLength() const;

    /// Full invariant check: unique non-empty ids, valid endpoints, positive
    /// lengths, non-negative genus marks, connectivity. Throws DomainError.
    void validate() const;
};

/// A point of the geometric realization: either a vertex or an interior
/// point of an edge at arclength `offset` from the edge's u-endpoint.
struct Point {
    int vertex = -1;
    int edge = -1;
    Rat offset;

    static Point atVertex(int v) { return Point{v, -1, Rat(0)}; }
    static Point onEdge(int e, Rat off) { return Point{-1, e, std::move(off)}; }
    bool isVertex() const { return vertex >= 0; }
    bool operator==(const Point& other) const;
};

/// Moves edge endpoints (offset 0 or full length) to the vertex they are;
/// validates interior offsets. Throws DomainError on out-of-range data.
Point normalizePoint(const MetrizedGraph& g, Point p);

struct GraphDivisor {
    std::vector<std::pair<Point, Rat>> coefficients;
    Rat degree() const;
};

/// Signed measure: point atoms plus a uniform mass-per-unit-length density
/// on each edge (edgeDensity is indexed like MetrizedGraph::edges).
struct GraphMeasure {
    std::vector<std::pair<Point, Rat>> atoms;
    std::vector<Rat> edgeDensity;

    static GraphMeasure zero(const MetrizedGraph& g);
    Rat totalMass(const MetrizedGraph& g) const;
    GraphMeasure& scale(const Rat& factor);
    void addAtom(const Point& p, const Rat& mass);  // merges equal points
};

/// Canonical divisor: coefficient 2*genus(v) - 2 + deg(v) at each vertex.
/// Zero coefficients are dropped; the degree is 2*totalGenus - 2.
GraphDivisor canonicalDivisor(const MetrizedGraph& g);

/// A function on the graph: one piecewise polynomial per edge (in that
/// edge's arclength coordinate) plus the values at vertices.
struct GraphFunction {
    std::vector<PiecewisePoly> onEdge;
    std::vector<Rat> atVertex;

    /// Value at p. Throws DomainError if the function jumps there (piece
    /// mismatch inside an edge, or an edge limit disagreeing with the vertex
    /// value).
    Rat evalChecked(const MetrizedGraph& g, const Point& p) const;
    bool isGloballyConstant(const MetrizedGraph& g) const;
};

/// Exact graph subdivision: inserts vertices at the given interior points.
/// Original vertices keep their indices; each original edge maps to an
/// ordered run of pieces.
struct Subdivision {
    MetrizedGraph graph;

    struct Piece {
        int newEdge;  // oriented from lo to hi
        Rat lo, hi;   // interval in the original edge's coordinate
    };
    std::vector<std::vector<Piece>> pieces;  // per original edge

    struct Cut {
        int edge;
        Rat offset;
        int vertex;
    };
    std::vector<Cut> cuts;

    /// Vertex index (in `graph`) of a normalized point that is a vertex or
    /// one of the cut positions.
    int vertexFor(const Point& p) const;
};

Subdivision subdivide(const MetrizedGraph& g, const std::vector<Point>& points);

}  // namespace gsh
