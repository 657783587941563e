#include "ybsl21/opalg.hpp"

#include <doctest.h>

#include <random>

using namespace ybsl21;
using ops::c;
using ops::d;
using ops::d_theta;
using ops::d_thetabar;
using ops::euler;
using ops::mul;
using ops::theta_number;
using ops::z;

namespace {

const SuperPolynomial th1 = SuperPolynomial::odd(ybsl21::theta(1));
const SuperPolynomial thb1 = SuperPolynomial::odd(ybsl21::thetabar(1));
const SuperPolynomial th2 = SuperPolynomial::odd(ybsl21::theta(2));
const SuperPolynomial thb2 = SuperPolynomial::odd(ybsl21::thetabar(2));
const SuperPolynomial z1 = SuperPolynomial::z(1);
const SuperPolynomial z2 = SuperPolynomial::z(2);

// Hand loop over the Pochhammer product, independent of PochhammerSpec.
Rational rising(Rational x, int n) {
    Rational r = 1;
    while (n-- > 0) {
        r *= x;
        x += 1;
    }
    return r;
}

}  // namespace

TEST_CASE("apply examples") {
    CHECK((d(1) * z(1)).apply(SuperPolynomial(1)) == SuperPolynomial(1));
    auto diag = Operator::degree_diagonal(1, {{3}, {5}});
    Rational expected = rising(3, 2) / rising(5, 2);
    CHECK(expected == Rational(2, 5));
    CHECK(diag.apply(pow(z1, 2)) == expected * pow(z1, 2));
    CHECK(d_theta(1).apply(z2 * th1 * thb2) == z2 * thb2);
}

TEST_CASE("pochhammer and gamma ratios") {
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(7, 0) == 1);
    CHECK(gamma_shift_ratio(3, 2) == 12);
    CHECK(gamma_shift_ratio(3, -2) == Rational(1, 2));
    CHECK_THROWS_AS(gamma_shift_ratio(1, -1), SingularParameters);
    PochhammerSpec bad{{1}, {-2}};
    CHECK(bad.regular_up_to(2));
    CHECK_FALSE(bad.regular_up_to(3));
    CHECK_THROWS_AS((void)bad.evaluate(3), SingularParameters);
}

TEST_CASE("graded commutator") {
    CHECK(equal_on_degree(graded_commutator(d(1), z(1)), Operator::identity(), 3).passed());
    CHECK(equal_on_degree(graded_commutator(d_theta(1), ops::mul_theta(1)), Operator::identity(), 3).passed());
    CHECK(equal_on_degree(graded_commutator(d_theta(1), ops::mul_thetabar(2)), c(0), 3).passed());
    CHECK_THROWS_AS(graded_commutator(d(1) + d_theta(1), z(1)), IndefiniteParity);
}

TEST_CASE("exp_terminating") {
    CHECK(exp_terminating(ops::mul_theta(1) * d_theta(2)).apply(th2) == th2 + th1);
    CHECK(exp_terminating(-(z(1) * d(2))).apply(z2) == z2 - z1);
    auto g = mul(Rational(1, 2) * (th1 * thb1)) * d(1);
    CHECK(exp_terminating(g).apply(pow(z1, 2)) == pow(z1, 2) + z1 * th1 * thb1);
    CHECK_THROWS_AS((void)exp_terminating(z(1)).apply(SuperPolynomial(1)), NonTerminatingExp);
}

TEST_CASE("equal_on_degree") {
    CHECK(equal_on_degree(Operator::identity(), Operator::compose({}), 3).passed());
    CHECK(equal_on_degree(d(1) * z(1), z(1) * d(1) + c(1), 4).passed());
    auto r = equal_on_degree(d_theta(1), d_thetabar(1), 2);
    CHECK(r.status == Status::Fail);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().input == "th1");
}

TEST_CASE("site permutation") {
    auto swap12 = Operator::site_permutation({2, 1, 3});
    CHECK(swap12.apply(z1 * th1 * th2) == -(z2 * th1 * th2));
    CHECK(swap12.apply(th1 * thb1) == th2 * thb2);
    CHECK(equal_on_degree(swap12 * swap12, Operator::identity(), 2).passed());
    auto cyc = Operator::site_permutation({2, 3, 1});
    // relabelling is an algebra automorphism
    auto p = th1 * thb2 + z1;
    auto q = SuperPolynomial::odd(ybsl21::theta(3)) * thb1;
    CHECK(cyc.apply(p * q) == cyc.apply(p) * cyc.apply(q));
}

TEST_CASE("properties") {
    std::mt19937_64 rng(11);
    auto basis = enumerate_basis(2);
    std::vector<Operator> gens = {d(1),          d(2),   z(1),        ops::mul_theta(2), d_thetabar(1),
                                  ops::mul_thetabar(1) * d(2), theta_number(2), euler(1)};
    auto rnd = [&]() {
        SuperPolynomial p;
        for (int i = 0; i < 5; ++i) {
            p.add_term(basis[rng() % basis.size()], Rational(static_cast<long>(rng() % 7) - 3, 2));
        }
        return p;
    };
    for (int t = 0; t < 30; ++t) {
        const auto& A = gens[rng() % gens.size()];
        const auto& B = gens[rng() % gens.size()];
        const auto& C = gens[rng() % gens.size()];
        auto p = rnd();
        auto q = rnd();
        Rational k(3, 7);
        CHECK(A.apply(k * p + q) == k * A.apply(p) + A.apply(q));
        CHECK(((A * B) * C).apply(p) == (A * (B * C)).apply(p));
    }
    CHECK(equal_on_degree(Operator::degree_diagonal(2, {}), Operator::identity(), 3).passed());

    // parity shift
    for (const auto& A : gens) {
        auto par = A.parity();
        REQUIRE(par.has_value());
        for (const auto& m : basis) {
            auto img = A.apply(m);
            if (!img.is_zero()) CHECK(img.parity() == (m.parity() + *par) % 2);
        }
    }

    // conjugator factors are invertible by negation
    std::vector<Operator> factors = {
        mul(Rational(1, 2) * (th2 * thb2)) * d(2), ops::mul_theta(1) * d_theta(2), ops::mul_thetabar(1) * d_thetabar(2),
        mul(-(z1 + Rational(1, 2) * (th1 * thb1))) * d(2), ops::mul_theta(1) * d_theta(2) + ops::mul_thetabar(2) * d_thetabar(1)};
    for (const auto& f : factors) {
        CHECK(equal_on_degree(exp_terminating(f) * exp_terminating(-f), Operator::identity(), 4).passed());
    }
}

TEST_CASE("memoized agrees") {
    auto op = exp_terminating(-(z(1) * d(2))) * d_theta(2);
    auto m = Operator::memoized(op);
    CHECK(equal_on_degree(op, m, 3).passed());
    CHECK(equal_on_degree(op, m, 3).passed());
}
