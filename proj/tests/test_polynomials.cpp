#include "doctest.h"

#include "flowrec/polynomial.hpp"

using namespace flowrec;

namespace {

ExactPolynomial poly(std::vector<long> coefficients) {
    std::vector<Rat> rats;
    for (long c : coefficients) rats.emplace_back(c);
    return ExactPolynomial(std::move(rats));
}

} // namespace

TEST_CASE("interpolation reproduces the flow polynomial of three parallel edges") {
    // Counts of nowhere-zero Z_k flows at k = 1, 2, 3.
    const ExactPolynomial p = interpolate({{Int(1), Rat(0)}, {Int(2), Rat(0)}, {Int(3), Rat(2)}});
    CHECK(p == poly({2, -3, 1}));
    CHECK(p.to_string() == "2 - 3*k + k^2");
}

TEST_CASE("interpolation basics") {
    CHECK(interpolate({{Int(5), Rat(7)}}) == poly({7}));
    CHECK(interpolate({{Int(0), Rat(0)}, {Int(1), Rat(1)}, {Int(2), Rat(4)}, {Int(3), Rat(9)}}) ==
          poly({0, 0, 1}));
    CHECK_THROWS_AS(interpolate({{Int(1), Rat(0)}, {Int(1), Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(interpolate({}), std::invalid_argument);
}

TEST_CASE("interpolation through samples is exact and degree-bounded") {
    const ExactPolynomial original = poly({3, -7, 0, 2, 5});
    std::vector<std::pair<Int, Rat>> samples;
    for (int x = -2; x <= 2; ++x) samples.emplace_back(Int(x), original.evaluate(Int(x)));
    const ExactPolynomial reconstructed = interpolate(samples);
    CHECK(reconstructed == original);
    for (int probe = 3; probe < 13; ++probe) {
        CHECK(reconstructed.evaluate(Int(probe)) == original.evaluate(Int(probe)));
    }
    for (const auto& [x, y] : samples) {
        CHECK(reconstructed.evaluate(x) == y);
    }
}

TEST_CASE("evaluation at negative arguments") {
    const ExactPolynomial p = poly({2, -3, 1}); // (k-1)(k-2)
    CHECK(p.evaluate(Int(-1)) == Rat(6));
    CHECK(p.evaluate(Int(0)) == Rat(2));

    // (k-1)(k-2)^2 at -k, times (-1)^3, equals (k+1)(k+2)^2.
    const ExactPolynomial q = poly({-4, 8, -5, 1});
    for (long long k = 0; k <= 6; ++k) {
        const Rat reflected = Rat(-1) * q.evaluate(to_int(-k));
        CHECK(reflected == Rat(to_int((k + 1) * (k + 2) * (k + 2))));
    }
}

TEST_CASE("polynomial arithmetic and rendering") {
    const ExactPolynomial zero;
    CHECK(zero.to_string() == "0");
    CHECK(zero.degree() == -1);
    CHECK(poly({0}).is_zero());
    CHECK((poly({1, 1}) * poly({-2, 1})).to_string() == "-2 - k + k^2");
    CHECK(poly({1, 1}).shifted(2).to_string() == "k^2 + k^3");
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());

    ExactPolynomial half(std::vector<Rat>{Rat(1), make_rat(Int(3), Int(2)), make_rat(Int(1), Int(2))});
    CHECK(half.to_string() == "1 + 3/2*k + 1/2*k^2");
    CHECK_FALSE(half.integer_coefficients());
    CHECK(poly({-1, 0, 4}).to_string("l") == "-1 + 4*l^2");
}

TEST_CASE("bivariate polynomials") {
    const BivariatePolynomial x = BivariatePolynomial::variable_x();
    const BivariatePolynomial y = BivariatePolynomial::variable_y();
    BivariatePolynomial t = x + y + y * y; // Tutte polynomial of G1
    CHECK(t.to_string() == "x + y + y^2");
    CHECK(t.evaluate(Rat(0), Rat(1)) == Rat(2));
    CHECK(t.evaluate(Rat(2), Rat(2)) == Rat(8));
    CHECK(t.evaluate(Int(0), Int(1)) == Int(2));
    CHECK(BivariatePolynomial::constant(Int(1)).evaluate(Rat(5), Rat(-7)) == Rat(1));
    CHECK((x * x + x * y + y * y).to_string() == "x^2 + x*y + y^2");
    CHECK(BivariatePolynomial().to_string() == "0");
    CHECK((t + BivariatePolynomial::monomial(0, 1, Int(-1))).to_string() == "x + y^2");
}
