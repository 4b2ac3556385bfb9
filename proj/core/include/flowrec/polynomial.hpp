#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flowrec/exact.hpp"

namespace flowrec {

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree with no trailing zeros (the zero polynomial has an
// empty coefficient vector).
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rat> ascending_coefficients);

    static ExactPolynomial constant(const Rat& c);
    static ExactPolynomial variable();

    bool is_zero() const { return coefficients_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coefficients_; }
    Rat coefficient(int d) const;
    Rat leading_coefficient() const;

    bool integer_coefficients() const;

    Rat evaluate(const Int& x) const;

    ExactPolynomial& operator+=(const ExactPolynomial& other);
    ExactPolynomial& operator-=(const ExactPolynomial& other);
    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator*(const Rat& s, const ExactPolynomial& p);

    // Multiply by x^n.
    ExactPolynomial shifted(int n) const;

    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

    // Canonical rendering: ascending monomials, e.g. "2 - 3*k + k^2".
    std::string to_string(std::string_view variable = "k") const;

private:
    void trim();
    std::vector<Rat> coefficients_;
};

// Unique polynomial of degree < #points through the given points.
// Abscissae must be pairwise distinct; at least one point is required.
ExactPolynomial interpolate(const std::vector<std::pair<Int, Rat>>& points);

// Bivariate polynomial with exact integer coefficients, keyed by
// (x-degree, y-degree); no explicit zero entries are stored.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Int& c);
    static BivariatePolynomial variable_x();
    static BivariatePolynomial variable_y();
    static BivariatePolynomial monomial(int xdeg, int ydeg, const Int& c);

    bool is_zero() const { return coefficients_.empty(); }
    const std::map<std::pair<int, int>, Int>& coefficients() const { return coefficients_; }
    Int coefficient(int xdeg, int ydeg) const;

    Rat evaluate(const Rat& x, const Rat& y) const;
    Int evaluate(const Int& x, const Int& y) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    // Canonical rendering: monomials by ascending total degree, x-part
    // first within a degree, e.g. "x + y + y^2".
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, Int> coefficients_;
};

} // namespace flowrec
