#include "ybsl21/superpoly.hpp"

#include <doctest.h>

#include <random>

using namespace ybsl21;

namespace {

const SuperPolynomial th1 = SuperPolynomial::odd(theta(1));
const SuperPolynomial thb1 = SuperPolynomial::odd(thetabar(1));
const SuperPolynomial th2 = SuperPolynomial::odd(theta(2));
const SuperPolynomial thb2 = SuperPolynomial::odd(thetabar(2));
const SuperPolynomial z1 = SuperPolynomial::z(1);
const SuperPolynomial z2 = SuperPolynomial::z(2);

SuperPolynomial random_poly(std::mt19937_64& rng, int parity = -1) {
    auto basis = enumerate_basis(2);
    SuperPolynomial p;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int i = 0; i < 4; ++i) {
        const auto& m = basis[static_cast<std::size_t>(pick(rng))];
        if (parity >= 0 && m.parity() != parity) continue;
        p.add_term(m, Rational(coef(rng), 1 + (i % 3)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parse and render") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(render_rational(Rational(-2, 4)) == "-1/2");
    CHECK(render_rational(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("linear_combine") {
    CHECK(linear_combine({{1, th1}, {1, -th1}}).is_zero());
    CHECK(linear_combine({{2, z1}, {3, z2}}) == 2 * z1 + 3 * z2);
    auto t = th1 * thb1;
    CHECK(linear_combine({{Rational(1, 2), t}, {Rational(1, 2), t}}) == t);
}

TEST_CASE("mul signs") {
    CHECK((th1 * thb1).render() == "1 th1 thb1");
    CHECK(thb1 * th1 == -(th1 * thb1));
    CHECK((th1 * th1).is_zero());
    CHECK((z1 + th1 * thb1) * z1 == pow(z1, 2) + z1 * th1 * thb1);
}

TEST_CASE("derivatives") {
    CHECK(deriv_even(1, pow(z1, 2) * th2) == 2 * (z1 * th2));
    CHECK(deriv_even(2, z1).is_zero());
    CHECK(deriv_even(1, z1 * z2) == z2);
    CHECK(deriv_odd(thetabar(1), th1 * thb1) == -th1);
    CHECK(deriv_odd(theta(1), th1 * thb1) == thb1);
    CHECK(deriv_odd(theta(2), z1 * th1).is_zero());
}

TEST_CASE("enumerate_basis") {
    CHECK(enumerate_basis(0).size() == 16);
    CHECK(enumerate_basis(1).size() == 48);
    CHECK(enumerate_basis(4).size() == 240);
    auto b = enumerate_basis(3);
    for (std::size_t i = 1; i < b.size(); ++i) {
        const auto& a = b[i - 1];
        const auto& c = b[i];
        auto ka = std::make_tuple(a.z_degree(1), a.z_degree(2), a.odd().bits());
        auto kc = std::make_tuple(c.z_degree(1), c.z_degree(2), c.odd().bits());
        CHECK(ka < kc);
    }
    CHECK(enumerate_basis(1, 3).size() == 64 * 4);
}

TEST_CASE("render") {
    SuperPolynomial p = Rational(1, 2) * (pow(z1, 2) * th1 * thb2) - z2;
    CHECK(p.render() == "-1 z2 + 1/2 z1^2 th1 thb2");
    CHECK(SuperPolynomial().render() == "0");
}

TEST_CASE("algebra properties on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(rng);
        auto q = random_poly(rng);
        auto r = random_poly(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * SuperPolynomial(1) == p);
        CHECK(SuperPolynomial(1) * p == p);

        int pp = trial % 2;
        int qp = (trial / 2) % 2;
        auto a = random_poly(rng, pp);
        auto b = random_poly(rng, qp);
        Rational sign = (pp * qp) ? -1 : 1;
        CHECK(a * b == sign * (b * a));

        for (int bit = 0; bit < 4; ++bit) {
            OddVar v = OddVar::from_bit(bit);
            Rational s = pp ? -1 : 1;
            CHECK(deriv_odd(v, a * q) == deriv_odd(v, a) * q + s * (a * deriv_odd(v, q)));
            CHECK(deriv_odd(v, deriv_odd(v, p)).is_zero());
            CHECK(deriv_even(1, deriv_odd(v, p)) == deriv_odd(v, deriv_even(1, p)));
        }
        CHECK(deriv_even(1, deriv_even(2, p)) == deriv_even(2, deriv_even(1, p)));
    }
}
