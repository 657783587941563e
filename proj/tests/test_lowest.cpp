#include "ybsl21/lowest.hpp"

#include <doctest.h>

using namespace ybsl21;

namespace {

SuperPolynomial th(int s) { return SuperPolynomial::odd(theta(s)); }
SuperPolynomial thb(int s) { return SuperPolynomial::odd(thetabar(s)); }
SuperPolynomial zs(int s) { return SuperPolynomial::z(s); }

const ParamPair kP{{Rational(7, 3), Rational(-1, 2), Rational(5, 4)}, {Rational(2, 5), Rational(3, 7), Rational(-9, 8)}};
const ParamPair kQ{{Rational(-3, 2), Rational(4, 5), Rational(1, 3)}, {Rational(5, 6), Rational(-7, 4), Rational(2, 7)}};

const Weight kW1{1, 0};
const Weight kW2{Rational(1, 2), Rational(1, 4)};

}  // namespace

TEST_CASE("lowest vectors") {
    CHECK(lowest_vector(Sector::Even, 1, 0).poly == SuperPolynomial(1));
    CHECK(lowest_vector(Sector::Even, -1, 0).poly == SuperPolynomial(1));
    const Rational half(1, 2);
    CHECK(lowest_vector(Sector::Even, 1, 1, Z12Form::Plain).poly ==
          zs(1) - zs(2) + half * ((th(1) - th(2)) * (thb(1) - thb(2))));
    CHECK(lowest_vector(Sector::Odd, -1, 1, Z12Form::Plain).poly == (th(1) - th(2)) * (zs(1) - zs(2)));
    // with the supersymmetric interval Phi+_1 is the printed image of z1 under S3^{-1}
    CHECK(lowest_vector(Sector::Even, 1, 1).poly ==
          zs(1) - zs(2) + half * (th(1) * thb(1)) + half * (th(2) * thb(2)) - th(2) * thb(1));
    CHECK_THROWS_AS((void)lowest_vector(Sector::Even, 0, 1), std::invalid_argument);
}

TEST_CASE("lowest-weight conditions") {
    for (int n = 0; n <= 3; ++n) {
        for (auto sector : {Sector::Even, Sector::Odd}) {
            for (int sign : {1, -1}) {
                auto r = verify_lowest(lowest_vector(sector, sign, n), kW1, kW2);
                CAPTURE(r.check_name);
                CHECK(r.passed());
            }
        }
    }
    const auto g = total_generators({build_generators(1, kW1), build_generators(2, kW2)});
    const auto phi = lowest_vector(Sector::Even, 1, 2).poly;
    CHECK(g[Gen::S].apply(phi) == Rational(7, 2) * phi);
    const auto psi = lowest_vector(Sector::Odd, 1, 1).poly;
    CHECK(g[Gen::B].apply(psi) == (kW1.b + kW2.b + Rational(1, 2)) * psi);
    for (int n = 0; n <= 3; ++n) CHECK(g[Gen::Sminus].apply(lowest_vector(Sector::Even, 1, n).poly).is_zero());
}

TEST_CASE("site-summed covariant derivatives are only reported") {
    auto r = verify_lowest(lowest_vector(Sector::Even, 1, 1), kW1, kW2);
    CHECK(r.passed());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("does not annihilate") != std::string::npos);
}

TEST_CASE("plain z1 - z2 is not a lowest vector") {
    auto r = verify_lowest(lowest_vector(Sector::Even, 1, 1, Z12Form::Plain), kW1, kW2);
    CHECK_FALSE(r.passed());
    // S- alone does not see the difference
    const auto g = total_generators({build_generators(1, kW1), build_generators(2, kW2)});
    CHECK(g[Gen::Sminus].apply(lowest_vector(Sector::Even, 1, 2, Z12Form::Plain).poly).is_zero());
}

TEST_CASE("decompose") {
    const auto pp = lowest_vector(Sector::Even, 1, 1).poly;
    const auto pm = lowest_vector(Sector::Even, -1, 1).poly;
    auto [a, b] = decompose(pp + 2 * pm, 1, Sector::Even);
    CHECK(a == 1);
    CHECK(b == 2);
    auto [c, d] = decompose(zs(1) - zs(2), 1, Sector::Even, Z12Form::Plain);
    CHECK(c == Rational(1, 2));
    CHECK(d == Rational(1, 2));
    auto [e, f] = decompose(z12(), 1, Sector::Even);
    CHECK(e == Rational(1, 2));
    CHECK(f == Rational(1, 2));
    CHECK_THROWS_AS((void)decompose(th(1), 1, Sector::Odd), NotInSpan);
    CHECK_THROWS_AS((void)decompose(zs(1), 1, Sector::Even), NotInSpan);
    auto [g, h] = decompose(Rational(3), 0, Sector::Even);
    CHECK(g == 3);
    CHECK(h == 0);
}

TEST_CASE("conjugators match their printed substitutions and images") {
    auto r = check_conjugator_oracles(3);
    CHECK(r.passed());
    for (const auto& f : r.failures) MESSAGE(f.input);
}

TEST_CASE("S1 image of Phi-: the printed -z1 is -z2") {
    const auto img = conjugator(1).apply(lowest_vector(Sector::Even, -1, 1).poly);
    CHECK(img == -zs(2) - th(2) * thb(2));
    CHECK(img != -zs(1) - th(2) * thb(2));
}

TEST_CASE("R3 eigenvalue on Phi+") {
    const ParamPair p{{3, 2, 1}, {Rational(1, 2), Rational(-1, 3), 0}};
    REQUIRE(guard_violation(p, 2).empty());
    CHECK(sector_action(RWhich::R3, p, Sector::Even, 0).entries[0][0] == 1);
    CHECK(sector_action(RWhich::R3, p, Sector::Even, 1).entries[0][0] == Rational(4, 3));
    CHECK(sector_action(RWhich::R3, p, Sector::Even, 2).entries[0][0] == Rational(5, 3));
}

TEST_CASE("R2 on the odd sector") {
    const ParamPair p{{0, 1, Rational(1, 2)}, {Rational(7, 2), 3, 2}};
    for (int n = 0; n <= 1; ++n) {
        auto m = sector_action(RWhich::R2, p, Sector::Odd, n);
        CHECK(m.entries[0][0] == 3);
        CHECK(m.entries[1][1] == -1);
        CHECK(m.entries[0][1] == 0);
        CHECK(m.entries[1][0] == 0);
    }
}

TEST_CASE("spectra of R1, R2, R3 against the printed forms") {
    for (const auto& p : {kP, kQ}) {
        for (auto which : {RWhich::R1, RWhich::R2, RWhich::R3}) {
            for (int n = 0; n <= 3; ++n) {
                for (auto sector : {Sector::Even, Sector::Odd}) {
                    auto r = check_sector(which, p, sector, n);
                    CAPTURE(r.check_name);
                    CHECK(r.passed());
                }
            }
        }
    }
}

TEST_CASE("triangularity") {
    for (int n = 1; n <= 3; ++n) {
        auto r3 = sector_action(RWhich::R3, kP, Sector::Even, n);
        auto r1 = sector_action(RWhich::R1, kP, Sector::Even, n);
        auto r2 = sector_action(RWhich::R2, kP, Sector::Even, n);
        CHECK(r3.entries[1][0] == 0);
        CHECK(r3.entries[0][1] != 0);
        CHECK(r1.entries[1][0] == 0);
        CHECK(r1.entries[0][1] != 0);
        CHECK(r2.entries[0][1] == 0);
        CHECK(r2.entries[1][0] != 0);
        for (auto which : {RWhich::R1, RWhich::R2, RWhich::R3, RWhich::RHat}) {
            auto odd = sector_action(which, kP, Sector::Odd, n);
            CHECK(odd.entries[0][1] == 0);
            CHECK(odd.entries[1][0] == 0);
        }
    }
}

TEST_CASE("composite spectrum") {
    for (const auto& p : {kP, kQ}) {
        for (int n = 0; n <= 3; ++n) {
            auto c = composite_spectrum(p, n);
            CAPTURE(c.report.check_name);
            CHECK(c.report.passed());
            CHECK(c.report.notes.size() == 2);
        }
    }
    // the composite mixes in both directions
    auto c = composite_spectrum(kP, 2);
    CHECK(c.even.entries[0][1] != 0);
    CHECK(c.even.entries[1][0] != 0);
}

TEST_CASE("composite formulas with the labels as printed") {
    for (int n = 1; n <= 2; ++n) {
        CHECK_FALSE(check_sector(RWhich::RHat, kP, Sector::Even, n, PrintedLabels::AsPrinted).passed());
        CHECK_FALSE(check_sector(RWhich::RHat, kP, Sector::Odd, n, PrintedLabels::AsPrinted).passed());
    }
}

TEST_CASE("composite from the factors") {
    for (int n = 1; n <= 2; ++n) {
        for (auto sector : {Sector::Even, Sector::Odd}) {
            const auto r3 = sector_action(RWhich::R3, kP, sector, n);
            const ParamPair p2 = exchanged(3, kP);
            const auto r2 = sector_action(RWhich::R2, p2, sector, n);
            const auto r1 = sector_action(RWhich::R1, exchanged(2, p2), sector, n);
            const auto rh = sector_action(RWhich::RHat, kP, sector, n);
            // each factor sends 1 to 1, so no rescaling is needed
            std::array<std::array<Rational, 2>, 2> prod{};
            for (int i = 0; i < 2; ++i) {
                for (int k = 0; k < 2; ++k) {
                    for (int j = 0; j < 2; ++j) {
                        for (int l = 0; l < 2; ++l) {
                            prod[i][k] += r1.entries[i][j] * r2.entries[j][l] * r3.entries[l][k];
                        }
                    }
                }
            }
            for (int i = 0; i < 2; ++i) {
                for (int k = 0; k < 2; ++k) CHECK(prod[i][k] == rh.entries[i][k]);
            }
        }
    }
}
