#include "gsh/metric_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gsh/errors.hpp"

namespace gsh {

int MetrizedGraph::vertexIndex(const std::string& id) const {
    for (int i = 0; i < vertexCount(); ++i)
        if (vertices[i].id == id) return i;
    return -1;
}

int MetrizedGraph::vertexDegree(int v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

bool MetrizedGraph::isConnected() const {
    if (vertices.empty()) return false;
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
            for (int w : {e.u == v ? e.v : -1, e.v == v ? e.u : -1}) {
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int MetrizedGraph::totalGenus() const {
    int total = firstBetti();
    for (const auto& v : vertices) total += v.genus;
    return total;
}

Rat MetrizedGraph::totalLength() const {
    Rat total(0);
    for (const auto& e : edges) total += e.length;
    return total;
}

void MetrizedGraph::validate() const {
    if (vertices.empty()) throw DomainError("graph has no vertices");
    std::set<std::string> ids;
    for (const auto& v : vertices) {
        if (v.id.empty()) throw DomainError("empty vertex id");
        if (!ids.insert(v.id).second) throw DomainError("duplicate vertex id '" + v.id + "'");
        if (v.genus < 0) throw DomainError("negative genus at vertex '" + v.id + "'");
    }
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= vertexCount() || e.v < 0 || e.v >= vertexCount())
            throw DomainError("edge endpoint out of range");
        if (e.length <= 0) throw DomainError("edge length must be positive");
    }
    if (!isConnected()) throw DomainError("not connected");
}

bool Point::operator==(const Point& other) const {
    if (isVertex() != other.isVertex()) return false;
    if (isVertex()) return vertex == other.vertex;
    return edge == other.edge && offset == other.offset;
}

Point normalizePoint(const MetrizedGraph& g, Point p) {
    if (p.isVertex()) {
        if (p.vertex >= g.vertexCount()) throw DomainError("point vertex out of range");
        return p;
    }
    if (p.edge < 0 || p.edge >= g.edgeCount()) throw DomainError("point edge out of range");
    const auto& e = g.edges[p.edge];
    if (p.offset < 0 || p.offset > e.length) throw DomainError("point offset outside edge");
    if (p.offset == 0) return Point::atVertex(e.u);
    if (p.offset == e.length) return Point::atVertex(e.v);
    return p;
}

Rat GraphDivisor::degree() const {
    Rat total(0);
    for (const auto& [p, c] : coefficients) total += c;
    return total;
}

GraphMeasure GraphMeasure::zero(const MetrizedGraph& g) {
    GraphMeasure m;
    m.edgeDensity.assign(g.edgeCount(), Rat(0));
    return m;
}

Rat GraphMeasure::totalMass(const MetrizedGraph& g) const {
    Rat total(0);
    for (const auto& [p, mass] : atoms) total += mass;
    for (int e = 0; e < g.edgeCount() && e < static_cast<int>(edgeDensity.size()); ++e)
        total += edgeDensity[e] * g.edges[e].length;
    return total;
}

GraphMeasure& GraphMeasure::scale(const Rat& factor) {
    for (auto& [p, mass] : atoms) mass *= factor;
    for (auto& d : edgeDensity) d *= factor;
    return *this;
}

void GraphMeasure::addAtom(const Point& p, const Rat& mass) {
    for (auto& [q, m] : atoms) {
        if (q == p) {
            m += mass;
            return;
        }
    }
    atoms.emplace_back(p, mass);
}

GraphDivisor canonicalDivisor(const MetrizedGraph& g) {
    GraphDivisor k;
    for (int v = 0; v < g.vertexCount(); ++v) {
        const Rat c(2 * g.vertices[v].genus - 2 + g.vertexDegree(v));
        if (c != 0) k.coefficients.emplace_back(Point::atVertex(v), c);
    }
    return k;
}

Rat GraphFunction::evalChecked(const MetrizedGraph& g, const Point& rawPoint) const {
    const Point p = normalizePoint(g, rawPoint);
    if (p.isVertex()) {
        const Rat v = atVertex.at(p.vertex);
        for (int e = 0; e < g.edgeCount(); ++e) {
            if (static_cast<std::size_t>(e) >= onEdge.size() || onEdge[e].empty()) continue;
            if (g.edges[e].u == p.vertex) {
                const auto [l, r] = onEdge[e].evalOneSided(onEdge[e].domainLo());
                if (l != v || r != v) throw DomainError("function has a jump at a vertex");
            }
            if (g.edges[e].v == p.vertex) {
                const auto [l, r] = onEdge[e].evalOneSided(onEdge[e].domainHi());
                if (l != v || r != v) throw DomainError("function has a jump at a vertex");
            }
        }
        return v;
    }
    const auto [l, r] = onEdge.at(p.edge).evalOneSided(p.offset);
    if (l != r) throw DomainError("function has a jump inside an edge");
    return l;
}

bool GraphFunction::isGloballyConstant(const MetrizedGraph& g) const {
    if (atVertex.empty()) return true;
    const Rat v = atVertex.front();
    for (const auto& x : atVertex)
        if (x != v) return false;
    for (int e = 0; e < g.edgeCount(); ++e) {
        if (static_cast<std::size_t>(e) >= onEdge.size()) return false;
        if (!onEdge[e].isConstant()) return false;
        if (!onEdge[e].empty() && onEdge[e].pieces().front().poly.coeff(0) != v) return false;
    }
    return true;
}

int Subdivision::vertexFor(const Point& p) const {
    // p is given in the coordinates of the original graph and must be
    // normalized (edge endpoints expressed as vertices).
    if (p.isVertex()) return p.vertex;
    for (const auto& cut : cuts)
        if (cut.edge == p.edge && cut.offset == p.offset) return cut.vertex;
    throw std::logic_error("point was not a subdivision site");
}

Subdivision subdivide(const MetrizedGraph& g, const std::vector<Point>& points) {
    std::map<int, std::set<Rat>> cutsPerEdge;
    for (const Point& raw : points) {
        const Point p = normalizePoint(g, raw);
        if (!p.isVertex()) cutsPerEdge[p.edge].insert(p.offset);
    }

    Subdivision out;
    out.graph.vertices = g.vertices;
    out.pieces.resize(g.edgeCount());

    auto freshVertex = [&out](const std::string& hint) {
        std::string id = hint;
        while (out.graph.vertexIndex(id) >= 0) id += "'";
        out.graph.vertices.push_back({id, 0});
        return out.graph.vertexCount() - 1;
    };

    for (int e = 0; e < g.edgeCount(); ++e) {
        const auto& edge = g.edges[e];
        auto it = cutsPerEdge.find(e);
        if (it == cutsPerEdge.end() || it->second.empty()) {
            out.graph.edges.push_back(edge);
            out.pieces[e].push_back({static_cast<int>(out.graph.edges.size()) - 1, Rat(0), edge.length});
            continue;
        }
        int prevVertex = edge.u;
        Rat prevOffset(0);
        for (const Rat& off : it->second) {
            const int w = freshVertex("~e" + std::to_string(e) + "@" + ratToString(off));
            out.cuts.push_back({e, off, w});
            out.graph.edges.push_back({prevVertex, w, off - prevOffset});
            out.pieces[e].push_back({static_cast<int>(out.graph.edges.size()) - 1, prevOffset, off});
            prevVertex = w;
            prevOffset = off;
        }
        out.graph.edges.push_back({prevVertex, edge.v, edge.length - prevOffset});
        out.pieces[e].push_back({static_cast<int>(out.graph.edges.size()) - 1, prevOffset, edge.length});
    }
    return out;
}

}  // namespace gsh
