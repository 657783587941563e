#include "ybsl21/lowest.hpp"

#include <sstream>

namespace ybsl21 {

std::string to_string(Sector s) {
    return s == Sector::Even ? "even" : "odd";
}

namespace {

SuperPolynomial th(int s) { return SuperPolynomial::odd(theta(s)); }
SuperPolynomial thb(int s) { return SuperPolynomial::odd(thetabar(s)); }
SuperPolynomial zs(int s) { return SuperPolynomial::z(s); }

SuperPolynomial theta12() { return th(1) - th(2); }
SuperPolynomial thetabar12() { return thb(1) - thb(2); }

// Gamma(x + m) / Gamma(x) for integer m, read as a Pochhammer ratio.
Rational shift(const Rational& x, int m) {
    if (m >= 0) return pochhammer(x, m);
    const Rational den = pochhammer(x + m, -m);
    if (den == 0) throw SingularParameters("Gamma ratio has a pole at " + render_rational(x + m));
    return 1 / den;
}

Rational quotient(const Rational& a, const Rational& b, const std::string& what) {
    if (b == 0) throw SingularParameters(what + " vanishes");
    return a / b;
}

}  // namespace

SuperPolynomial z12(Z12Form form) {
    const auto plain = zs(1) - zs(2);
    if (form == Z12Form::Plain) return plain;
    const Rational half(1, 2);
    return plain + half * (th(1) * thb(2)) - half * (th(2) * thb(1));
}

LowestVector lowest_vector(Sector sector, int sign, int n, Z12Form form) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("lowest_vector: sign must be +1 or -1");
    if (n < 0) throw std::invalid_argument("lowest_vector: negative level");
    LowestVector v{sector, sign, n, {}};
    const auto zz = z12(form);
    if (sector == Sector::Even) {
        v.poly = pow(zz + Rational(sign, 2) * (theta12() * thetabar12()), n);
    } else {
        v.poly = (sign > 0 ? thetabar12() : theta12()) * pow(zz, n);
    }
    return v;
}

CheckReport verify_lowest(const LowestVector& v, const Weight& w1, const Weight& w2) {
    CheckReport report;
    report.check_name = "lowest/" + to_string(v.sector) + (v.sign > 0 ? "+" : "-") + "/n=" + std::to_string(v.n);
    report.max_degree = v.n;
    report.add_param("ell1", w1.ell);
    report.add_param("b1", w1.b);
    report.add_param("ell2", w2.ell);
    report.add_param("b2", w2.b);

    const auto g = total_generators({build_generators(1, w1), build_generators(2, w2)});
    const bool odd = v.sector == Sector::Odd;
    const Rational s_eig = v.n + w1.ell + w2.ell + (odd ? Rational(1, 2) : Rational(0));
    const Rational b_eig = w1.b + w2.b + (odd ? Rational(v.sign, 2) : Rational(0));
    const auto& p = v.poly;
    CheckReport s;
    s.check_name = "S eigenvalue";
    s.expect_equal("S", g[Gen::S].apply(p), s_eig * p);
    report.absorb(s);
    CheckReport b;
    b.check_name = "B eigenvalue";
    b.expect_equal("B", g[Gen::B].apply(p), b_eig * p);
    report.absorb(b);
    for (Gen lowering : {Gen::Sminus, Gen::Vminus, Gen::Wminus}) {
        CheckReport l;
        l.check_name = to_string(lowering) + " annihilates";
        l.expect_equal(to_string(lowering), g[lowering].apply(p), SuperPolynomial());
        report.absorb(l);
    }
    if (!odd) {
        auto pick = [&](int site) {
            const auto d = covariant_derivatives(site);
            return v.sign > 0 ? d.Dplus : d.Dminus;
        };
        CheckReport d;
        d.check_name = std::string("D") + (v.sign > 0 ? "+" : "-") + " at site 1 annihilates";
        d.expect_equal("D1", pick(1).apply(p), SuperPolynomial());
        report.absorb(d);
        const auto total = pick(1).apply(p) + pick(2).apply(p);
        report.notes.push_back(std::string("site-summed D") + (v.sign > 0 ? "+" : "-") +
                               (total.is_zero() ? " annihilates" : " does not annihilate: " + total.render()));
    }
    return report;
}

std::pair<Rational, Rational> decompose(const SuperPolynomial& p, int n, Sector sector, Z12Form form) {
    std::vector<SuperPolynomial> basis = {lowest_vector(sector, 1, n, form).poly};
    if (!(sector == Sector::Even && n == 0)) basis.push_back(lowest_vector(sector, -1, n, form).poly);
    const auto sol = solve_in_span(basis, p);
    if (!sol.in_span) {
        throw NotInSpan("decompose: polynomial is not in the " + to_string(sector) + " sector at n=" +
                            std::to_string(n),
                        sol.residual.render());
    }
    return {sol.coefficients[0], basis.size() > 1 ? sol.coefficients[1] : Rational(0)};
}

std::string SectorMatrix::render() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < dim; ++j) {
            if (j) os << ", ";
            os << render_rational(entries[i][j]);
        }
    }
    os << "]";
    return os.str();
}

namespace {

Operator operator_for(RWhich which, const ParamPair& p) {
    switch (which) {
        case RWhich::R1: return build_r(1, p).op;
        case RWhich::R2: return build_r(2, p).op;
        case RWhich::R3: return build_r(3, p).op;
        case RWhich::RHat: return build_rhat(p).op;
        case RWhich::Full: break;
    }
    throw std::invalid_argument("sector_action: R1, R2, R3 or Rhat only");
}

int sector_dim(Sector sector, int n) {
    return sector == Sector::Even && n == 0 ? 1 : 2;
}

}  // namespace

SectorMatrix sector_action(RWhich which, const ParamPair& p, Sector sector, int n) {
    require_regular(p, n);
    const Operator op = operator_for(which, p);
    SectorMatrix m;
    m.n = n;
    m.sector = sector;
    m.dim = sector_dim(sector, n);
    for (int j = 0; j < m.dim; ++j) {
        const auto image = op.apply(lowest_vector(sector, j == 0 ? 1 : -1, n).poly);
        const auto [cp, cm] = decompose(image, n, sector);
        m.entries[0][j] = cp;
        m.entries[1][j] = cm;
    }
    return m;
}

Rational composite_c(const ParamPair& p) {
    const auto& [u1, u2, u3] = p.u;
    const auto& [v1, v2, v3] = p.v;
    return (u2 - v3) * (v2 - u3) * (u1 - v1) + (v2 - u1) * (v1 - u2) * (v3 - u3) + (u1 - v1) * (u2 - v2) * (u3 - v3);
}

SectorMatrix printed_sector_action(RWhich which, const ParamPair& p, Sector sector, int n, PrintedLabels labels) {
    const auto& [u1, u2, u3] = p.u;
    const auto& [v1, v2, v3] = p.v;
    SectorMatrix m;
    m.n = n;
    m.sector = sector;
    m.dim = sector_dim(sector, n);
    auto& e = m.entries;
    const bool even = sector == Sector::Even;
    switch (which) {
        case RWhich::R3: {
            const Rational al = u1 - v3;
            const Rational be = u1 - u3;
            const Rational f3 = quotient(u2 - u3, u3 - v3, "u3 - v3");
            const Rational pp = shift(al + 1, n) / shift(be + 1, n);
            const Rational r = quotient(u2 - v3, u2 - u3, "u2 - u3");
            if (even) {
                e[0][0] = pp;
                if (n > 0) {
                    e[1][1] = r * shift(al + 1, n - 1) / shift(be + 1, n - 1);
                    e[0][1] = (u2 - u1) / f3 * shift(al + 1, n - 1) / shift(be + 1, n);
                }
            } else {
                e[0][0] = pp;
                e[1][1] = r * pp;
            }
            break;
        }
        case RWhich::R2: {
            const Rational norm = quotient((u2 - u1) * (v2 - v3), v2 - u2, "v2 - u2");
            const Rational den = quotient(Rational(1), norm * (v2 - u2), "f2");
            if (even) {
                e[0][0] = (u2 - v3) * (v2 - u1) * den;
                e[1][0] = -(u1 - v3 + n) / norm;
                e[1][1] = 1;
            } else {
                e[0][0] = (v2 - u1) * (v2 - v3) * den;
                e[1][1] = (u2 - u1) * (u2 - v3) * den;
            }
            break;
        }
        case RWhich::R1: {
            const Rational al = u1 - v3;
            const Rational ga = v1 - v3;
            const Rational f1 = quotient(v1 - v2, u1 - v1, "u1 - v1");
            const Rational pp = shift(al + 1, n) / shift(ga + 1, n);
            const Rational r = quotient(u1 - v2, v1 - v2, "v1 - v2");
            if (even) {
                e[0][0] = pp;
                if (n > 0) {
                    e[1][1] = r * shift(al + 1, n - 1) / shift(ga + 1, n - 1);
                    e[0][1] = quotient(v3 - v2, f1, "f1") * shift(al + 1, n - 1) / shift(ga + 1, n);
                }
            } else {
                e[0][0] = r * pp;
                e[1][1] = pp;
            }
            break;
        }
        case RWhich::RHat: {
            // The common factor R cancels against the value on Phi+_0.
            const Rational al = u1 - v3;
            const Rational de = v1 - u3;
            const Rational first = (u2 - u3) * (v2 - v1);
            const Rational norm = first + (u2 - v2) * de;
            if (norm == 0) throw SingularParameters("printed composite value on 1 vanishes");
            const Rational g = shift(al + 1, n) / shift(de + 1, n);
            if (even) {
                const Rational second = (u2 - v2) * (n + de) / norm * g;
                e[0][0] = first / norm * g;
                if (labels == PrintedLabels::AsPrinted) {
                    e[0][0] += second;
                } else {
                    e[1][0] = second;
                }
                if (n > 0) {
                    e[1][1] = (u2 - u1) * (v2 - v3) / norm * shift(al + 1, n - 1) / shift(de + 1, n - 1);
                    e[0][1] = composite_c(p) / norm * shift(al + 1, n - 1) / shift(de + 1, n);
                }
            } else {
                e[0][0] = (v2 - u1) * (v2 - u3) / norm * g;
                const Rational minus = (u2 - v1) * (u2 - v3) / norm * g;
                if (labels == PrintedLabels::AsPrinted) {
                    e[0][1] = minus;
                } else {
                    e[1][1] = minus;
                }
            }
            break;
        }
        case RWhich::Full: throw std::invalid_argument("printed_sector_action: R1, R2, R3 or Rhat only");
    }
    if (m.dim == 1) {
        // Phi+_0 = Phi-_0 = 1
        e[0][0] += e[1][0];
        e[1][0] = 0;
        e[0][1] = 0;
        e[1][1] = 0;
    }
    return m;
}

CheckReport check_sector(RWhich which, const ParamPair& p, Sector sector, int n, PrintedLabels labels) {
    CheckReport report;
    report.check_name = "spectrum/" + to_string(which) + "/" + to_string(sector) + "/n=" + std::to_string(n);
    report.max_degree = n;
    const char* names[] = {"u1", "u2", "u3", "v1", "v2", "v3"};
    const auto vals = p.values();
    for (int i = 0; i < 6; ++i) report.add_param(names[i], vals[static_cast<std::size_t>(i)]);
    const auto got = sector_action(which, p, sector, n);
    const auto want = printed_sector_action(which, p, sector, n, labels);
    for (int i = 0; i < got.dim; ++i) {
        for (int j = 0; j < got.dim; ++j) {
            const auto& a = got.entries[i][j];
            const auto& b = want.entries[i][j];
            if (a != b) {
                report.add_failure({"entry(" + std::to_string(i) + "," + std::to_string(j) + ")", render_rational(a),
                                    render_rational(b), render_rational(a - b)});
            }
        }
    }
    return report;
}

CompositeSpectrum composite_spectrum(const ParamPair& p, int n) {
    CompositeSpectrum out;
    auto& report = out.report;
    report.check_name = "composite/n=" + std::to_string(n);
    report.max_degree = n;
    out.even = sector_action(RWhich::RHat, p, Sector::Even, n);
    out.odd = sector_action(RWhich::RHat, p, Sector::Odd, n);
    report.absorb(check_sector(RWhich::RHat, p, Sector::Even, n));
    report.absorb(check_sector(RWhich::RHat, p, Sector::Odd, n));

    const auto& [u1, u2, u3] = p.u;
    const auto& [v1, v2, v3] = p.v;
    auto rel = [&](const std::string& label, const Rational& lhs, const Rational& rhs) {
        report.expect(label, lhs == rhs, render_rational(lhs) + " != " + render_rational(rhs));
    };
    // ratios within one level do not depend on any normalization
    const auto& od = out.odd.entries;
    rel("odd: Psi- / Psi+", od[1][1] * (v2 - u1) * (v2 - u3), od[0][0] * (u2 - v1) * (u2 - v3));
    rel("odd: no Psi- -> Psi+ mixing", od[0][1], 0);
    rel("odd: no Psi+ -> Psi- mixing", od[1][0], 0);
    if (n > 0) {
        const auto& ev = out.even.entries;
        rel("even: mixing / Phi- diagonal", ev[0][1] * (u2 - u1) * (v2 - v3) * (n + v1 - u3),
            ev[1][1] * composite_c(p));
    }
    if (n > 1) {
        // at n = 1 the level below is the collapsed Phi_0 = 1
        const auto previous = sector_action(RWhich::RHat, p, Sector::Even, n - 1);
        rel("even: Phi+ diagonal, level n over level n-1", out.even.entries[0][0] * (n + v1 - u3),
            previous.entries[0][0] * (n + u1 - v3));
    }
    report.notes.push_back("printed image of Psi-_n is labelled Psi+_n; read as Psi-_n (B-eigenvalue conservation)");
    report.notes.push_back("printed image of Phi+_n repeats the label Phi+_n; the second term is read as Phi-_n");
    return out;
}

// ------------------------------------------------------------ substitutions

SuperPolynomial Substitution::apply(const SuperPolynomial& p) const {
    SuperPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (m.max_site() > 2) throw std::invalid_argument("Substitution: two sites only");
        SuperPolynomial image(c);
        image = image * pow(images[0], m.z_degree(1)) * pow(images[3], m.z_degree(2));
        const OddMask mask = m.odd();
        for (int bit = 0; bit < 4; ++bit) {
            const OddVar v = OddVar::from_bit(bit);
            if (!mask.contains(v)) continue;
            image = image * images[static_cast<std::size_t>(3 * (v.site - 1) + (v.bar ? 2 : 1))];
        }
        out += image;
    }
    return out;
}

Substitution printed_substitution(const std::string& name) {
    const Rational half(1, 2);
    Substitution s{{zs(1), th(1), thb(1), zs(2), th(2), thb(2)}};
    auto& im = s.images;
    if (name == "S3") {
        im[0] = zs(1) + zs(2) + half * (th(2) * thb(1)) - half * (th(1) * thb(2)) - half * (th(1) * thb(1));
        im[1] = th(1) + th(2);
        im[2] = thb(1) + thb(2);
    } else if (name == "S3^-1") {
        im[0] = zs(1) - zs(2) + half * (th(1) * thb(1)) + half * (th(2) * thb(2)) - th(2) * thb(1);
        im[1] = th(1) - th(2);
        im[2] = thb(1) - thb(2);
    } else if (name == "S1") {
        im[3] = zs(2) + zs(1) + half * (th(2) * thb(2)) + half * (th(1) * thb(2)) - half * (th(2) * thb(1));
        im[4] = th(2) + th(1);
        im[5] = thb(2) + thb(1);
    } else if (name == "S1^-1") {
        im[3] = zs(2) - zs(1) - half * (th(1) * thb(1)) - half * (th(2) * thb(2)) + th(2) * thb(1);
        im[4] = th(2) - th(1);
        im[5] = thb(2) - thb(1);
    } else if (name == "S2") {
        im[0] = zs(1) + half * (th(1) * thb(1));
        im[3] = zs(2) - half * (th(2) * thb(2));
    } else if (name == "S2^-1") {
        im[0] = zs(1) - half * (th(1) * thb(1));
        im[3] = zs(2) + half * (th(2) * thb(2));
    } else {
        throw std::invalid_argument("printed_substitution: unknown name " + name);
    }
    return s;
}

Operator r2_even_conjugator(bool inverse) {
    using namespace ops;
    const Rational half(1, 2);
    const Rational sign = inverse ? -1 : 1;
    const Operator x1 = mul(Rational(sign * half) * (th(1) * thb(1))) * d(1);
    const Operator x2 = mul(Rational(-sign * half) * (th(2) * thb(2))) * d(2);
    return inverse ? exp_terminating(x2) * exp_terminating(x1) : exp_terminating(x1) * exp_terminating(x2);
}

CheckReport check_conjugator_oracles(int max_n) {
    CheckReport report;
    report.check_name = "conjugator_oracles";
    report.max_degree = max_n;

    const std::vector<std::pair<std::string, Operator>> named = {
        {"S3", conjugator(3)},           {"S3^-1", conjugator(3, {}, true)}, {"S1", conjugator(1)},
        {"S1^-1", conjugator(1, {}, true)}, {"S2", r2_even_conjugator()},   {"S2^-1", r2_even_conjugator(true)},
    };
    for (const auto& [name, op] : named) {
        const auto sub = printed_substitution(name);
        CheckReport r;
        r.check_name = name + " substitution";
        for (const auto& m : enumerate_basis(max_n, 2)) r.expect_equal(m.render(), op.apply(m), sub.apply(m));
        report.absorb(r);
    }

    const Operator s3 = conjugator(3);
    const Operator s1 = conjugator(1);
    const Operator s2 = r2_even_conjugator();
    const auto z12p = zs(1) - zs(2) + th(1) * thb(2);
    const auto t12 = theta12() * thetabar12();
    CheckReport img;
    img.check_name = "images of lowest vectors";
    for (int n = 0; n <= max_n; ++n) {
        const auto tag = "[n=" + std::to_string(n) + "]";
        const auto pp = lowest_vector(Sector::Even, 1, n).poly;
        const auto pm = lowest_vector(Sector::Even, -1, n).poly;
        const auto qp = lowest_vector(Sector::Odd, 1, n).poly;
        const auto qm = lowest_vector(Sector::Odd, -1, n).poly;
        img.expect_equal("S3 Phi+ " + tag, s3.apply(pp), pow(zs(1), n));
        img.expect_equal("S3 Phi- " + tag, s3.apply(pm), pow(zs(1) - th(1) * thb(1), n));
        img.expect_equal("S3 Psi+ " + tag, s3.apply(qp), thb(1) * pow(zs(1), n));
        img.expect_equal("S3 Psi- " + tag, s3.apply(qm), th(1) * pow(zs(1), n));
        img.expect_equal("S2 Phi+ " + tag, s2.apply(pp), pow(z12p + t12, n));
        img.expect_equal("S2 Phi- " + tag, s2.apply(pm), pow(z12p, n));
        img.expect_equal("S2 Psi+ " + tag, s2.apply(qp), thetabar12() * pow(z12p, n));
        img.expect_equal("S2 Psi- " + tag, s2.apply(qm), theta12() * pow(z12p, n));
        img.expect_equal("S1 Phi+ " + tag, s1.apply(pp), pow(-zs(2), n));
        img.expect_equal("S1 Phi- " + tag, s1.apply(pm), pow(-zs(2) - th(2) * thb(2), n));
    }
    report.absorb(img);
    return report;
}

}  // namespace ybsl21
