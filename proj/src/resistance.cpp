#include "gsh/resistance.hpp"

#include <stdexcept>

#include "gsh/errors.hpp"

namespace gsh {

ResistanceMatrix::ResistanceMatrix(const MetrizedGraph& g) {
    const int n = g.vertexCount();
    if (n == 0 || !g.isConnected()) throw DomainError("not connected");

    m_.assign(n, RatVec(n, Rat(0)));
    if (n == 1) return;

    // Grounded Laplacian (vertex 0 removed). Loops drop out.
    RatMat a(n - 1, RatVec(n - 1, Rat(0)));
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        const Rat c = 1 / e.length;
        if (e.u > 0) a[e.u - 1][e.u - 1] += c;
        if (e.v > 0) a[e.v - 1][e.v - 1] += c;
        if (e.u > 0 && e.v > 0) {
            a[e.u - 1][e.v - 1] -= c;
            a[e.v - 1][e.u - 1] -= c;
        }
    }
    const auto inv = invertMatrix(std::move(a));
    if (!inv) throw std::logic_error("grounded Laplacian singular on a connected graph");
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) m_[i][j] = (*inv)[i - 1][j - 1];
}

Rat ResistanceMatrix::between(int u, int v) const {
    return m_[u][u] + m_[v][v] - 2 * m_[u][v];
}

ProfileEngine::ProfileEngine(const MetrizedGraph& g) : g_(g), base_(g) {}

const ProfileEngine::EdgeSamples& ProfileEngine::samples(int e) {
    auto it = samples_.find(e);
    if (it != samples_.end()) return it->second;

    const Rat len = g_.edges[e].length;
    EdgeSamples s;
    for (const Rat& frac : {Rat(1, 2), Rat(1, 4)}) {
        const Point cut = Point::onEdge(e, frac * len);
        const Subdivision sub = subdivide(g_, {cut});
        const ResistanceMatrix m(sub.graph);
        const int cutVertex = sub.vertexFor(cut);
        std::vector<Rat>& dst = (frac == Rat(1, 2)) ? s.mid : s.quarter;
        dst.resize(g_.vertexCount());
        for (int v = 0; v < g_.vertexCount(); ++v) dst[v] = m.between(v, cutVertex);
    }
    return samples_.emplace(e, std::move(s)).first->second;
}

Poly ProfileEngine::vertexProfile(int x, int e) {
    const auto& edge = g_.edges[e];
    const Rat len = edge.length;
    const EdgeSamples& s = samples(e);

    const Poly fit = Poly::interpolate({{Rat(0), base_.between(x, edge.u)},
                                        {len / 2, s.mid[x]},
                                        {len, base_.between(x, edge.v)}});
    if (fit.eval(len / 4) != s.quarter[x])
        throw std::logic_error("resistance profile is not quadratic");
    return fit;
}

Rat effectiveResistance(const MetrizedGraph& g, const Point& x, const Point& y) {
    g.validate();
    const Point px = normalizePoint(g, x);
    const Point py = normalizePoint(g, y);
    const Subdivision sub = subdivide(g, {px, py});
    const ResistanceMatrix m(sub.graph);
    return m.between(sub.vertexFor(px), sub.vertexFor(py));
}

}  // namespace gsh
