#include "gsh/potential.hpp"

#include <stdexcept>

#include "gsh/errors.hpp"

namespace gsh {

namespace {

GraphFunction zeroFunction(const MetrizedGraph& g) {
    GraphFunction f;
    f.atVertex.assign(g.vertexCount(), Rat(0));
    f.onEdge.resize(g.edgeCount());
    for (int e = 0; e < g.edgeCount(); ++e)
        f.onEdge[e] = PiecewisePoly::single(Rat(0), g.edges[e].length, Poly());
    return f;
}

void accumulate(GraphFunction& acc, const GraphFunction& f, const Rat& weight) {
    if (weight == 0) return;
    for (std::size_t v = 0; v < acc.atVertex.size(); ++v) acc.atVertex[v] += weight * f.atVertex[v];
    for (std::size_t e = 0; e < acc.onEdge.size(); ++e) {
        PiecewisePoly scaled = f.onEdge[e];
        scaled *= weight;
        acc.onEdge[e] += scaled;
    }
}

}  // namespace

PotentialTable::PotentialTable(const MetrizedGraph& g) : g_(g) {
    const int nv = g.vertexCount();
    const int ne = g.edgeCount();
    ProfileEngine engine(g);

    atom_.assign(nv, GraphFunction{});
    for (int v = 0; v < nv; ++v) {
        atom_[v].atVertex.resize(nv);
        for (int w = 0; w < nv; ++w) atom_[v].atVertex[w] = engine.base().between(v, w);
        atom_[v].onEdge.resize(ne);
        for (int e = 0; e < ne; ++e)
            atom_[v].onEdge[e] =
                PiecewisePoly::single(Rat(0), g.edges[e].length, engine.vertexProfile(v, e));
    }

    density_.assign(ne, GraphFunction{});
    for (int f = 0; f < ne; ++f) {
        density_[f].atVertex.resize(nv);
        for (int w = 0; w < nv; ++w)
            density_[f].atVertex[w] = engine.vertexProfile(w, f).integrate(Rat(0), g.edges[f].length);
        density_[f].onEdge.resize(ne);
    }

    // Interior samples of the density potentials, three per edge. One
    // subdivision per sample position serves every density at once.
    // sampleValues[e][k][f] = F_f at the k-th sample of edge e.
    std::vector<std::vector<RatVec>> sampleValues(ne);
    const std::vector<Rat> fractions{Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    for (int e = 0; e < ne; ++e) {
        const Rat len = g.edges[e].length;
        for (const Rat& frac : fractions) {
            const Point x = Point::onEdge(e, frac * len);
            const Subdivision sub = subdivide(g_, {x});
            ProfileEngine subEngine(sub.graph);
            const int xv = sub.vertexFor(x);
            RatVec row(ne, Rat(0));
            for (int f = 0; f < ne; ++f) {
                Rat total(0);
                for (const auto& piece : sub.pieces[f]) {
                    const Rat pieceLen = piece.hi - piece.lo;
                    total += subEngine.vertexProfile(xv, piece.newEdge).integrate(Rat(0), pieceLen);
                }
                row[f] = total;
            }
            sampleValues[e].push_back(std::move(row));
        }
    }

    for (int f = 0; f < ne; ++f) {
        for (int e = 0; e < ne; ++e) {
            const auto& edge = g.edges[e];
            const Rat len = edge.length;
            const Poly fit = Poly::interpolate({{Rat(0), density_[f].atVertex[edge.u]},
                                                {len / 4, sampleValues[e][0][f]},
                                                {len / 2, sampleValues[e][1][f]},
                                                {len, density_[f].atVertex[edge.v]}});
            if (fit.eval(3 * len / 4) != sampleValues[e][2][f])
                throw std::logic_error("density potential is not cubic");
            density_[f].onEdge[e] = PiecewisePoly::single(Rat(0), len, fit);
        }
    }
}

GraphFunction PotentialTable::potentialOf(const GraphMeasure& mu) const {
    GraphFunction out = zeroFunction(g_);
    for (const auto& [p, mass] : mu.atoms) {
        const Point q = normalizePoint(g_, p);
        if (!q.isVertex()) throw std::logic_error("potentialOf needs atoms at vertices");
        accumulate(out, atom_[q.vertex], mass);
    }
    for (int f = 0; f < g_.edgeCount() && f < static_cast<int>(mu.edgeDensity.size()); ++f)
        accumulate(out, density_[f], mu.edgeDensity[f]);
    return out;
}

GreenKernel::GreenKernel(const MetrizedGraph& g, GraphMeasure mu) : g_(g), mu_(std::move(mu)) {
    if (mu_.totalMass(g_) != 1) throw DomainError("measure must have total mass 1");

    std::vector<Point> interior;
    for (auto& [p, mass] : mu_.atoms) {
        p = normalizePoint(g_, p);
        if (!p.isVertex()) interior.push_back(p);
    }
    sub_ = subdivide(g_, interior);

    subMu_ = GraphMeasure::zero(sub_.graph);
    for (const auto& [p, mass] : mu_.atoms)
        subMu_.addAtom(Point::atVertex(sub_.vertexFor(p)), mass);
    for (int e = 0; e < g_.edgeCount(); ++e) {
        const Rat density = e < static_cast<int>(mu_.edgeDensity.size()) ? mu_.edgeDensity[e] : Rat(0);
        for (const auto& piece : sub_.pieces[e]) subMu_.edgeDensity[piece.newEdge] = density;
    }

    table_ = std::make_unique<PotentialTable>(sub_.graph);
    rSub_ = table_->potentialOf(subMu_);
    r_ = mapBack(rSub_);

    Rat pairing(0);  // integral of R d mu
    for (const auto& [p, mass] : subMu_.atoms) pairing += mass * rSub_.atVertex[p.vertex];
    for (int f = 0; f < sub_.graph.edgeCount(); ++f)
        pairing += subMu_.edgeDensity[f] * rSub_.onEdge[f].integrate();
    tau_ = pairing / 2;
}

GraphFunction GreenKernel::mapBack(const GraphFunction& onSub) const {
    GraphFunction out;
    out.atVertex.assign(onSub.atVertex.begin(), onSub.atVertex.begin() + g_.vertexCount());
    out.onEdge.resize(g_.edgeCount());
    for (int e = 0; e < g_.edgeCount(); ++e) {
        for (const auto& piece : sub_.pieces[e]) {
            for (const auto& subPiece : onSub.onEdge[piece.newEdge].pieces()) {
                out.onEdge[e].append(piece.lo + subPiece.lo, piece.lo + subPiece.hi,
                                     subPiece.poly.shifted(piece.lo));
            }
        }
    }
    return out;
}

Rat GreenKernel::value(const Point& x, const Point& y) const {
    const Rat rx = r_.evalChecked(g_, x);
    const Rat ry = r_.evalChecked(g_, y);
    const Rat rxy = effectiveResistance(g_, x, y);
    return (rx + ry - rxy) / 2 - tau_;
}

GraphFunction GreenKernel::diagonal() const {
    GraphFunction out = r_;
    for (auto& v : out.atVertex) v -= tau_;
    for (auto& f : out.onEdge) f.addConstant(-tau_);
    return out;
}

GraphFunction GreenKernel::profileAt(const Point& rawX) const {
    const Point x = normalizePoint(g_, rawX);
    const Rat rx = r_.evalChecked(g_, x);
    const Rat shift = rx / 2 - tau_;

    const Subdivision subx = subdivide(g_, {x});
    ProfileEngine engine(subx.graph);
    const int xv = subx.vertexFor(x);

    GraphFunction out;
    out.atVertex.resize(g_.vertexCount());
    for (int w = 0; w < g_.vertexCount(); ++w)
        out.atVertex[w] =
            (rx + r_.atVertex[w] - engine.base().between(xv, w)) / 2 - tau_;
    out.onEdge.resize(g_.edgeCount());
    for (int e = 0; e < g_.edgeCount(); ++e) {
        PiecewisePoly prof;  // y -> r(x, y) on edge e
        for (const auto& piece : subx.pieces[e])
            prof.append(piece.lo, piece.hi, engine.vertexProfile(xv, piece.newEdge).shifted(piece.lo));
        prof *= Rat(-1, 2);
        PiecewisePoly half = r_.onEdge[e];
        half *= Rat(1, 2);
        prof += half;
        prof.addConstant(shift);
        out.onEdge[e] = std::move(prof);
    }
    return out;
}

GraphFunction GreenKernel::admissibilityFunction() const {
    const GraphDivisor k = canonicalDivisor(g_);
    const Rat degK = k.degree();

    // g(x,x) + g(K,x) = (1 + degK/2) R(x) - f_K(x)/2 + C,
    // f_K = sum K_p r(p, .), C = sum K_p R(p)/2 - (degK + 1) tau.
    GraphFunction h = zeroFunction(sub_.graph);
    accumulate(h, rSub_, 1 + degK / 2);
    Rat constant = -(degK + 1) * tau_;
    for (const auto& [p, coeff] : k.coefficients) {
        accumulate(h, table_->atomPotential(p.vertex), -coeff / 2);
        constant += coeff * rSub_.atVertex[p.vertex] / 2;
    }
    for (auto& v : h.atVertex) v += constant;
    for (auto& f : h.onEdge) f.addConstant(constant);
    return mapBack(h);
}

GraphMeasure admissibleMeasure(const MetrizedGraph& g) {
    g.validate();
    const int gbar = g.totalGenus();
    if (gbar == 0) throw DomainError("no admissible measure in genus 0");

    GraphMeasure mu = GraphMeasure::zero(g);
    if (g.edgeCount() == 0) {
        mu.addAtom(Point::atVertex(0), Rat(1));
        return mu;
    }

    const int nv = g.vertexCount();
    const int ne = g.edgeCount();
    const int unknowns = nv + ne;
    PotentialTable table(g);

    const GraphDivisor k = canonicalDivisor(g);
    std::vector<Poly> fK(ne);  // f_K restricted to each edge
    for (const auto& [p, coeff] : k.coefficients)
        for (int e = 0; e < ne; ++e) {
            Poly term = table.atomPotential(p.vertex).onEdge[e].pieces().front().poly;
            term *= coeff;
            fK[e] += term;
        }

    RatMat a;
    RatVec b;
    for (int e = 0; e < ne; ++e) {
        for (int power = 1; power <= 3; ++power) {
            RatVec row(unknowns, Rat(0));
            for (int v = 0; v < nv; ++v)
                row[v] = Rat(gbar) * table.atomPotential(v).onEdge[e].pieces().front().poly.coeff(power);
            for (int f = 0; f < ne; ++f)
                row[nv + f] =
                    Rat(gbar) * table.densityPotential(f).onEdge[e].pieces().front().poly.coeff(power);
            a.push_back(std::move(row));
            b.push_back(fK[e].coeff(power) / 2);
        }
    }
    RatVec massRow(unknowns, Rat(1));
    for (int f = 0; f < ne; ++f) massRow[nv + f] = g.edges[f].length;
    a.push_back(std::move(massRow));
    b.push_back(Rat(1));

    const LinearSolution solution = solveLinear(std::move(a), std::move(b));
    if (!solution.consistent) throw DomainError("ansatz insufficient");
    const RatVec u = leastNormSolution(solution);

    for (int v = 0; v < nv; ++v)
        if (u[v] != 0) mu.addAtom(Point::atVertex(v), u[v]);
    for (int f = 0; f < ne; ++f) mu.edgeDensity[f] = u[nv + f];

    if (mu.totalMass(g) != 1) throw DomainError("ansatz insufficient");
    GreenKernel kernel(g, mu);
    if (!kernel.admissibilityFunction().isGloballyConstant(g))
        throw DomainError("ansatz insufficient");
    return mu;
}

Rat greenFunction(const MetrizedGraph& g, const GraphMeasure& mu, const Point& x, const Point& y) {
    g.validate();
    GreenKernel kernel(g, mu);
    return kernel.value(x, y);
}

GraphFunction greenDiagonal(const MetrizedGraph& g, const GraphMeasure& mu) {
    g.validate();
    GreenKernel kernel(g, mu);
    return kernel.diagonal();
}

Rat integrateAgainst(const MetrizedGraph& g, const GraphFunction& f, const GraphMeasure& m) {
    Rat total(0);
    for (const auto& [p, mass] : m.atoms) total += mass * f.evalChecked(g, p);
    for (int e = 0; e < g.edgeCount() && e < static_cast<int>(m.edgeDensity.size()); ++e)
        if (m.edgeDensity[e] != 0) total += m.edgeDensity[e] * f.onEdge.at(e).integrate();
    return total;
}

PhiResult phiGraph(const MetrizedGraph& g) {
    g.validate();
    const int gbar = g.totalGenus();
    if (gbar == 0) throw DomainError("phi-invariant undefined in genus 0");

    PhiResult out;
    out.genusOneWarning = (gbar == 1);
    out.value = Rat(0);
    if (g.edgeCount() == 0) return out;

    const GraphMeasure mu = admissibleMeasure(g);
    GreenKernel kernel(g, mu);
    const GraphFunction diag = kernel.diagonal();

    GraphMeasure weight = mu;
    weight.scale(Rat(10 * gbar + 2));
    for (const auto& [p, coeff] : canonicalDivisor(g).coefficients) weight.addAtom(p, -coeff);

    const Rat integral = integrateAgainst(g, diag, weight);
    out.value = -g.totalLength() / 4 + integral / 4;
    return out;
}

Rat lambdaInvariant(int genus, const Rat& phi, const Rat& delta) {
    if (genus < 2) throw DomainError("lambda-invariant needs genus >= 2");
    return Rat(genus - 1) / Rat(6 * (2 * genus + 1)) * phi + delta / 12;
}

}  // namespace gsh
