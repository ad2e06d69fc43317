#include "gsh/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsh/errors.hpp"

namespace gsh {

Poly Poly::constant(Rat value) {
    if (value == 0) return Poly();
    return Poly(std::vector<Rat>{std::move(value)});
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

Rat Poly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rat> a(c_.size() + 1, Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / Rat(static_cast<long>(k + 1));
    return Poly(std::move(a));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
    const Poly f = antiderivative();
    return f.eval(b) - f.eval(a);
}

Poly Poly::shifted(const Rat& shift) const {
    // Horner in the variable (s - shift).
    Poly result;
    const Poly x(std::vector<Rat>{-shift, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result = result * x;
        result += Poly::constant(*it);
    }
    return result;
}

Poly Poly::stretched(const Rat& scale) const {
    std::vector<Rat> out(c_);
    Rat pow(1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] *= pow;
        pow *= scale;
    }
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rat(0));
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rat(0));
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= scalar;
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    if (c_.empty() || other.c_.empty()) return Poly();
    std::vector<Rat> out(c_.size() + other.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    return Poly(std::move(out));
}

Poly Poly::interpolate(const std::vector<std::pair<Rat, Rat>>& nodes) {
    Poly result;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly(std::vector<Rat>{-nodes[j].first, Rat(1)});
            denom *= nodes[i].first - nodes[j].first;
        }
        if (denom == 0) throw std::logic_error("interpolation nodes not distinct");
        basis *= nodes[i].second / denom;
        result += basis;
    }
    return result;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PiecewisePoly PiecewisePoly::single(Rat lo, Rat hi, Poly p) {
    PiecewisePoly out;
    out.append(std::move(lo), std::move(hi), std::move(p));
    return out;
}

void PiecewisePoly::append(Rat lo, Rat hi, Poly p) {
    if (lo >= hi) throw std::logic_error("empty piece interval");
    if (!pieces_.empty() && pieces_.back().hi != lo)
        throw std::logic_error("pieces must be contiguous");
    pieces_.push_back(Piece{std::move(lo), std::move(hi), std::move(p)});
}

Rat PiecewisePoly::domainLo() const {
    if (pieces_.empty()) throw std::logic_error("empty piecewise polynomial");
    return pieces_.front().lo;
}

Rat PiecewisePoly::domainHi() const {
    if (pieces_.empty()) throw std::logic_error("empty piecewise polynomial");
    return pieces_.back().hi;
}

std::pair<Rat, Rat> PiecewisePoly::evalOneSided(const Rat& t) const {
    if (pieces_.empty() || t < domainLo() || t > domainHi())
        throw DomainError("evaluation outside edge domain");
    Rat left, right;
    bool haveLeft = false, haveRight = false;
    for (const auto& piece : pieces_) {
        if (t > piece.lo && t < piece.hi) {
            const Rat v = piece.poly.eval(t);
            return {v, v};
        }
        if (t == piece.hi) {
            left = piece.poly.eval(t);
            haveLeft = true;
        }
        if (t == piece.lo) {
            right = piece.poly.eval(t);
            haveRight = true;
        }
    }
    if (haveLeft && !haveRight) return {left, left};
    if (haveRight && !haveLeft) return {right, right};
    return {left, right};
}

Rat PiecewisePoly::eval(const Rat& t) const {
    const auto [left, right] = evalOneSided(t);
    if (left != right) throw DomainError("piecewise function has a jump");
    return left;
}

bool PiecewisePoly::continuousEverywhere() const {
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i - 1].poly.eval(pieces_[i].lo) != pieces_[i].poly.eval(pieces_[i].lo))
            return false;
    return true;
}

Rat PiecewisePoly::integrate() const {
    Rat total(0);
    for (const auto& piece : pieces_) total += piece.poly.integrate(piece.lo, piece.hi);
    return total;
}

int PiecewisePoly::maxDegree() const {
    int d = -1;
    for (const auto& piece : pieces_) d = std::max(d, piece.poly.degree());
    return d;
}

bool PiecewisePoly::isConstant() const {
    if (pieces_.empty()) return true;
    if (maxDegree() > 0) return false;
    const Rat v = pieces_.front().poly.coeff(0);
    for (const auto& piece : pieces_)
        if (piece.poly.coeff(0) != v) return false;
    return true;
}

PiecewisePoly& PiecewisePoly::operator+=(const PiecewisePoly& other) {
    if (pieces_.empty()) {
        *this = other;
        return *this;
    }
    if (other.pieces_.empty()) return *this;
    if (domainLo() != other.domainLo() || domainHi() != other.domainHi())
        throw std::logic_error("adding piecewise polynomials on different domains");

    // Merge breakpoints; each side's piece polynomial is valid on any
    // sub-interval of its piece.
    std::vector<Rat> cuts;
    for (const auto& p : pieces_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const auto& p : other.pieces_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto polyAt = [](const PiecewisePoly& f, const Rat& lo, const Rat& hi) -> const Poly& {
        for (const auto& piece : f.pieces_)
            if (piece.lo <= lo && hi <= piece.hi) return piece.poly;
        throw std::logic_error("interval not covered by piecewise polynomial");
    };

    PiecewisePoly merged;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Poly sum = polyAt(*this, cuts[i], cuts[i + 1]);
        sum += polyAt(other, cuts[i], cuts[i + 1]);
        merged.append(cuts[i], cuts[i + 1], std::move(sum));
    }
    *this = std::move(merged);
    return *this;
}

PiecewisePoly& PiecewisePoly::operator*=(const Rat& scalar) {
    for (auto& piece : pieces_) piece.poly *= scalar;
    return *this;
}

void PiecewisePoly::addConstant(const Rat& value) {
    for (auto& piece : pieces_) piece.poly += Poly::constant(value);
}

}  // namespace gsh
