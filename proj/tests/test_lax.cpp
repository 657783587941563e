#include "ybsl21/lax.hpp"

#include <doctest.h>

using namespace ybsl21;

namespace {

const std::vector<SpectralTriple> kTriples = {{Rational(3, 2), Rational(-1, 3), Rational(5, 7)},
                                              {Rational(-2), Rational(7, 4), Rational(1, 5)},
                                              {Rational(4, 3), Rational(2), Rational(-5, 2)}};

SuperPolynomial th(int s) { return SuperPolynomial::odd(theta(s)); }
SuperPolynomial thb(int s) { return SuperPolynomial::odd(thetabar(s)); }

}  // namespace

TEST_CASE("spectral triple round trip") {
    for (const auto& t : kTriples) {
        CHECK(SpectralTriple::from_weight(t.u(), t.weight()) == t);
    }
    Weight w{Rational(1, 3), Rational(-2, 5)};
    auto t = SpectralTriple::from_weight(Rational(7, 2), w);
    CHECK(t.weight().ell == w.ell);
    CHECK(t.weight().b == w.b);
    CHECK(t.u() == Rational(7, 2));
}

TEST_CASE("printed entries") {
    const auto& t = kTriples[0];
    auto l = build_lax(1, t);
    CHECK(equal_on_degree(l(1, 2), -(ops::d_thetabar(1) + Rational(1, 2) * (ops::mul_theta(1) * ops::d(1))), 3)
              .passed());
    CHECK(equal_on_degree(l(3, 3), -ops::euler(1) - ops::theta_number(1) + ops::c(t.u3), 3).passed());
    // the even sector of entry (1,1)
    auto z1 = SuperPolynomial::z(1);
    CHECK(l(1, 1).apply(z1 * z1 * z1) == (3 + t.u1) * (z1 * z1 * z1));
}

TEST_CASE("three constructions of the chiral Lax operator agree") {
    for (const auto& t : kTriples) {
        auto printed = build_lax(1, t);
        CHECK(equal_entries(printed, build_lax(1, t, Chirality::Chiral, LaxForm::Generators), 3, 2, "gen").passed());
        CHECK(equal_entries(printed, build_lax(1, t, Chirality::Chiral, LaxForm::Tensor), 3, 2, "tensor").passed());
        auto site2 = build_lax(2, t);
        CHECK(equal_entries(site2, build_lax(2, t, Chirality::Chiral, LaxForm::Tensor), 2, 2, "tensor2").passed());
    }
}

TEST_CASE("antichiral tensor form matches the antichiral matrix") {
    for (const auto& t : kTriples) {
        CHECK(equal_entries(build_lax(1, t, Chirality::Antichiral),
                            build_lax(1, t, Chirality::Antichiral, LaxForm::Tensor), 3, 2, "anti")
                  .passed());
    }
}

TEST_CASE("worked sign example: v+ (x) W- on e2") {
    auto rep = fundamental_rep(Chirality::Chiral);
    auto g = build_generators(1, {1, 0});
    auto m = SuperMatrixOperator::from_tensor({{rep[Gen::Vplus], g[Gen::Wminus]}});
    CHECK(equal_on_degree(m(1, 2), -g[Gen::Wminus], 2).passed());
    AuxState x;
    x.add({2}, th(1));
    AuxState y = apply_in_slot(m, 0, x);
    AuxState expected;
    expected.add({1}, -g[Gen::Wminus].apply(th(1)));
    CHECK(y == expected);
}

TEST_CASE("factorized form") {
    for (const auto& t : kTriples) {
        CHECK(equal_entries(build_lax_factorized(1, t), build_lax(1, t), 4, 2, "factor").passed());
    }
    const auto& t = kTriples[1];
    CHECK(equal_entries(build_lax_middle_factor(1, t), build_lax(1, t), 2, 2, "middle").status == Status::Fail);
}

TEST_CASE("covariant derivatives") {
    for (int s : {1, 2}) {
        auto cd = covariant_derivatives(s);
        CHECK(equal_on_degree(graded_commutator(cd.Dplus, cd.Dplus), ops::c(0), 3).passed());
        CHECK(equal_on_degree(graded_commutator(cd.Dminus, cd.Dminus), ops::c(0), 3).passed());
        CHECK(equal_on_degree(graded_commutator(cd.Dminus, cd.Dplus), -ops::d(s), 3).passed());
    }
}

TEST_CASE("graded permutation") {
    auto p = graded_permutation();
    CHECK(p[4][4] == -1);  // e2 (x) e2
    CHECK(p[6][2] == 1);   // e1 (x) e3 -> e3 (x) e1
    auto p2 = p * p;
    for (int i = 0; i < 9; ++i) {
        for (int k = 0; k < 9; ++k) CHECK(p2[i][k] == (i == k ? 1 : 0));
    }
    CHECK(graded_permutation_from_units() == p);
}

TEST_CASE("RLL") {
    CHECK(check_rll({1, Rational(1, 3)}, 2, Rational(1, 2), 3).passed());
    CHECK(check_rll({1, Rational(1, 3)}, Rational(3, 5), Rational(3, 5), 2).passed());
    CHECK(check_rll({Rational(-3, 4), Rational(2, 7)}, Rational(5, 3), -1, 2, Chirality::Antichiral).passed());
    // mutation: flip the sign of entry (1,2)
    Weight w{1, Rational(1, 3)};
    auto lu = build_lax(1, SpectralTriple::from_weight(2, w));
    auto lv = build_lax(1, SpectralTriple::from_weight(Rational(1, 2), w));
    lu(1, 2) = -lu(1, 2);
    lv(1, 2) = -lv(1, 2);
    CHECK(check_rll(lu, lv, Rational(3, 2), 2).status == Status::Fail);
}

TEST_CASE("invariance under S- conjugation") {
    auto t = SpectralTriple::from_weight(0, {1, 0});
    CHECK(check_invariance(1, t, 1, 3).passed());
    CHECK(check_invariance(1, t, 0, 3).passed());
    CHECK(check_invariance(2, kTriples[2], Rational(2, 3), 3).passed());
    CHECK(check_invariance(1, t, 0, 3, InvarianceSign::AsPrinted).passed());
    CHECK(check_invariance(1, t, 1, 3, InvarianceSign::AsPrinted).status == Status::Fail);
}
