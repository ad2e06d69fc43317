#pragma once

#include <utility>
#include <vector>

#include "gsh/rational.hpp"

namespace gsh {

/// Dense univariate polynomial with exact rational coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat value);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& t) const;
    Poly derivative() const;
    Poly antiderivative() const;
    Rat integrate(const Rat& a, const Rat& b) const;

    /// q(s) = p(s - shift); moves the graph of p to the right by `shift`.
    Poly shifted(const Rat& shift) const;
    /// q(s) = p(scale * s).
    Poly stretched(const Rat& scale) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rat& scalar);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    Poly operator*(const Poly& other) const;
    bool operator==(const Poly& other) const { return c_ == other.c_; }

    /// Exact Lagrange interpolation through distinct nodes.
    static Poly interpolate(const std::vector<std::pair<Rat, Rat>>& nodes);

private:
    void trim();
    std::vector<Rat> c_;  // c_[k] * t^k
};

/// Polynomial pieces covering [lo, hi] of one edge, stored in the edge's own
/// arclength coordinate. Pieces are kept sorted and contiguous.
class PiecewisePoly {
public:
    struct Piece {
        Rat lo, hi;
        Poly poly;
    };

    PiecewisePoly() = default;
    static PiecewisePoly single(Rat lo, Rat hi, Poly p);

    void append(Rat lo, Rat hi, Poly p);
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    Rat domainLo() const;
    Rat domainHi() const;

    /// Value at t; throws DomainError if the two one-sided values at an
    /// interior breakpoint disagree.
    Rat eval(const Rat& t) const;
    /// One-sided values at t (equal unless the function jumps there).
    std::pair<Rat, Rat> evalOneSided(const Rat& t) const;
    bool continuousEverywhere() const;

    Rat integrate() const;
    int maxDegree() const;
    bool isConstant() const;

    PiecewisePoly& operator+=(const PiecewisePoly& other);
    PiecewisePoly& operator*=(const Rat& scalar);
    void addConstant(const Rat& value);

private:
    std::vector<Piece> pieces_;
};

}  // namespace gsh
