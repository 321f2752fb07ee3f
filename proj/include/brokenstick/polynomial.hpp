#pragma once

#include "brokenstick/rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace brokenstick {

/// Dense univariate polynomial with exact rational coefficients;
/// coefficients()[i] multiplies t^i.
///
/// Canonical form: the coefficient list carries no trailing zeros, and the
/// zero polynomial is the empty list. Equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational value);
    /// coefficient * t^degree
    static Polynomial monomial(std::size_t degree, Rational coefficient = Rational(1));

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the highest nonzero term; empty for the zero polynomial.
    std::optional<std::size_t> degree() const;

    /// Coefficient of t^i, zero beyond the stored terms.
    Rational coefficient(std::size_t i) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Exact evaluation by Horner's scheme.
    Rational evaluate(const Rational& x) const;

    /// Formal derivative.
    Polynomial derivative() const;

    /// Antiderivative F with F(0) = 0: coefficient i of *this becomes
    /// coefficient i+1 of F, divided by i+1.
    Polynomial antiderivative() const;

    /// Exact expansion of p(a + b*u) as a polynomial in u.
    Polynomial compose_affine(const Rational& a, const Rational& b) const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Integration limit of the form constant + slope * x, where x is the
/// variable of the next-outer integral. slope == 0 encodes a constant bound.
struct AffineBound {
    Rational constant;
    Rational slope;

    static AffineBound fixed(Rational value) { return {std::move(value), Rational(0)}; }
    /// constant + 1 * x
    static AffineBound outer_plus(Rational constant) { return {std::move(constant), Rational(1)}; }

    bool operator==(const AffineBound&) const = default;
};

/// Integrates p over one nested layer: returns F(upper) - F(lower) expanded
/// as a polynomial in the next-outer variable, where F is the antiderivative
/// of p and the bounds are substituted with compose_affine. With two constant
/// bounds the result is a constant polynomial.
Polynomial definite_integral(const Polynomial& p, const AffineBound& lower,
                             const AffineBound& upper);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace brokenstick
