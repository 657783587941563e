#include "ybsl21/sl21.hpp"

namespace ybsl21 {

std::string to_string(Gen g) {
    switch (g) {
        case Gen::S: return "S";
        case Gen::B: return "B";
        case Gen::Splus: return "S+";
        case Gen::Sminus: return "S-";
        case Gen::Vplus: return "V+";
        case Gen::Vminus: return "V-";
        case Gen::Wplus: return "W+";
        case Gen::Wminus: return "W-";
    }
    return "?";
}

int parity(Gen g) {
    switch (g) {
        case Gen::Vplus:
        case Gen::Vminus:
        case Gen::Wplus:
        case Gen::Wminus: return 1;
        default: return 0;
    }
}

std::string to_string(Chirality c) {
    return c == Chirality::Chiral ? "chiral" : "antichiral";
}

std::string to_string(VermaKind k) {
    switch (k) {
        case VermaKind::A: return "a";
        case VermaKind::B: return "b";
        case VermaKind::V: return "v";
        case VermaKind::W: return "w";
    }
    return "?";
}

SiteGenerators build_generators(int site, const Weight& w) {
    using namespace ops;
    const Rational half(1, 2);
    const auto th = SuperPolynomial::odd(ybsl21::theta(site));
    const auto thb = SuperPolynomial::odd(ybsl21::thetabar(site));
    const auto zz = SuperPolynomial::z(site);

    SiteGenerators g;
    g.site = site;
    g.weight = w;
    g.gens[Gen::Sminus] = -d(site);
    g.gens[Gen::Vminus] = d_theta(site) + half * (mul_thetabar(site) * d(site));
    g.gens[Gen::Wminus] = d_thetabar(site) + half * (mul_theta(site) * d(site));
    g.gens[Gen::Vplus] = -(z(site) * d_theta(site) + half * (mul(thb * zz) * d(site)) +
                           half * (mul(thb * th) * d_theta(site))) -
                         Rational(w.ell - w.b) * mul_thetabar(site);
    g.gens[Gen::Wplus] = -(z(site) * d_thetabar(site) + half * (mul(th * zz) * d(site)) +
                           half * (mul(th * thb) * d_thetabar(site))) -
                         Rational(w.ell + w.b) * mul_theta(site);
    g.gens[Gen::Splus] = mul(zz * zz) * d(site) + z(site) * mul_theta(site) * d_theta(site) +
                         z(site) * mul_thetabar(site) * d_thetabar(site) + Rational(2 * w.ell) * z(site) -
                         w.b * mul(th * thb);
    g.gens[Gen::S] = euler(site) + half * theta_number(site) + half * thetabar_number(site) + c(w.ell);
    g.gens[Gen::B] = half * thetabar_number(site) - half * theta_number(site) + c(w.b);
    return g;
}

SiteGenerators total_generators(const std::vector<SiteGenerators>& sites) {
    if (sites.empty()) throw std::invalid_argument("total_generators: no sites");
    SiteGenerators out;
    out.site = 0;
    out.weight = {0, 0};
    for (const auto& s : sites) {
        out.weight.ell += s.weight.ell;
        out.weight.b += s.weight.b;
    }
    for (Gen g : kAllGens) {
        std::vector<Operator> terms;
        for (const auto& s : sites) terms.push_back(s[g]);
        out.gens[g] = Operator::sum(terms);
    }
    return out;
}

// ---------------------------------------------------------------- matrices

Mat3 mat_zero() {
    Mat3 m;
    for (auto& row : m) row.fill(Rational(0));
    return m;
}

Mat3 mat_identity() {
    Mat3 m = mat_zero();
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
    return m;
}

Mat3 mat_unit(int i, int k) {
    Mat3 m = mat_zero();
    m[i - 1][k - 1] = 1;
    return m;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 m = a;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) m[i][k] += b[i][k];
    }
    return m;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    return a + Rational(-1) * b;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 m = mat_zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) m[i][k] += a[i][j] * b[j][k];
        }
    }
    return m;
}

Mat3 operator*(const Rational& c, const Mat3& a) {
    Mat3 m = a;
    for (auto& row : m) {
        for (auto& x : row) x *= c;
    }
    return m;
}

namespace {

Mat3 diag(const Rational& a, const Rational& b, const Rational& c) {
    Mat3 m = mat_zero();
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return m;
}

std::string render_mat(const Mat3& m) {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        if (i) s += "; ";
        for (int k = 0; k < 3; ++k) {
            if (k) s += ", ";
            s += render_rational(m[i][k]);
        }
    }
    return s + "]";
}

std::string e_name(int a, int b) {
    return "E" + std::to_string(a) + std::to_string(b);
}

}  // namespace

FundamentalRep fundamental_rep(Chirality kind) {
    const Rational half(1, 2);
    FundamentalRep rep;
    rep.kind = kind;
    Mat3 v_minus = mat_unit(3, 2);
    Mat3 w_minus = Rational(-1) * mat_unit(2, 1);
    Mat3 v_plus = mat_unit(1, 2);
    Mat3 w_plus = mat_unit(2, 3);
    Mat3 b = diag(-half, -1, -half);
    if (kind == Chirality::Antichiral) {
        std::swap(v_minus, w_minus);
        std::swap(v_plus, w_plus);
        b = Rational(-1) * b;
    }
    rep.matrices[Gen::Sminus] = mat_unit(3, 1);
    rep.matrices[Gen::Splus] = mat_unit(1, 3);
    rep.matrices[Gen::S] = diag(half, 0, -half);
    rep.matrices[Gen::B] = b;
    rep.matrices[Gen::Vminus] = v_minus;
    rep.matrices[Gen::Wminus] = w_minus;
    rep.matrices[Gen::Vplus] = v_plus;
    rep.matrices[Gen::Wplus] = w_plus;
    return rep;
}

std::vector<std::pair<Rational, Gen>> dictionary_entry(int a, int b, CartanDictionary dict) {
    const Rational sgn = dict == CartanDictionary::Consistent ? 1 : -1;
    switch (a * 10 + b) {
        case 31: return {{1, Gen::Sminus}};
        case 21: return {{-1, Gen::Wminus}};
        case 32: return {{1, Gen::Vminus}};
        case 13: return {{1, Gen::Splus}};
        case 23: return {{1, Gen::Wplus}};
        case 12: return {{1, Gen::Vplus}};
        case 11: return {{1, Gen::B}, {sgn, Gen::S}};
        case 22: return {{-2, Gen::B}};
        case 33: return {{1, Gen::B}, {-sgn, Gen::S}};
        default: break;
    }
    throw std::out_of_range("dictionary_entry: indices must be 1..3");
}

namespace {

Operator e_op(const SiteGenerators& g, int a, int b, CartanDictionary dict) {
    std::vector<Operator> terms;
    for (const auto& [c, gen] : dictionary_entry(a, b, dict)) terms.push_back(c * g[gen]);
    return Operator::sum(terms);
}

Mat3 e_mat(const FundamentalRep& rep, int a, int b, CartanDictionary dict) {
    Mat3 m = mat_zero();
    for (const auto& [c, gen] : dictionary_entry(a, b, dict)) m = m + c * rep[gen];
    return m;
}

int e_parity(int a, int b) {
    return (index_grade(a) + index_grade(b)) % 2;
}

// Visits the 81 index quadruples with the expected right-hand side of the
// delta formula as a list of (coefficient, A, D) pairs.
template <typename F>
void for_each_relation(F&& f) {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                for (int d = 1; d <= 3; ++d) {
                    std::vector<std::tuple<Rational, int, int>> rhs;
                    if (c == b) rhs.emplace_back(1, a, d);
                    if (a == d) {
                        int s = (e_parity(a, b) * e_parity(c, d)) % 2;
                        rhs.emplace_back(s ? 1 : -1, c, b);
                    }
                    f(a, b, c, d, rhs);
                }
            }
        }
    }
}

std::string relation_label(int a, int b, int c, int d) {
    return "[" + e_name(a, b) + "," + e_name(c, d) + "]";
}

}  // namespace

CheckReport check_relations(const SiteGenerators& g, int max_degree, CartanDictionary dict) {
    CheckReport report;
    report.check_name = "relations/site" + std::to_string(g.site);
    report.max_degree = max_degree;
    report.add_param("ell", g.weight.ell);
    report.add_param("b", g.weight.b);
    const auto basis = enumerate_basis(max_degree, std::max(2, g.site));
    for_each_relation([&](int a, int b, int c, int d, const auto& rhs) {
        Operator lhs = graded_commutator(e_op(g, a, b, dict), e_op(g, c, d, dict));
        std::vector<Operator> terms;
        for (const auto& [coef, x, y] : rhs) terms.push_back(coef * e_op(g, x, y, dict));
        Operator expected = Operator::sum(terms);
        const std::string label = relation_label(a, b, c, d);
        for (const auto& m : basis) {
            if (!report.expect_equal(label + " on " + m.render(), lhs.apply(m), expected.apply(m))) break;
        }
    });
    return report;
}

CheckReport check_relations(const FundamentalRep& rep, CartanDictionary dict) {
    CheckReport report;
    report.check_name = "relations/" + to_string(rep.kind);
    for_each_relation([&](int a, int b, int c, int d, const auto& rhs) {
        Mat3 x = e_mat(rep, a, b, dict);
        Mat3 y = e_mat(rep, c, d, dict);
        Rational s = (e_parity(a, b) * e_parity(c, d)) % 2 ? -1 : 1;
        Mat3 lhs = x * y - s * (y * x);
        Mat3 expected = mat_zero();
        for (const auto& [coef, p, q] : rhs) expected = expected + coef * e_mat(rep, p, q, dict);
        if (lhs != expected) {
            report.add_failure({relation_label(a, b, c, d), render_mat(lhs), render_mat(expected),
                                render_mat(lhs - expected)});
        }
    });
    return report;
}

Operator casimir(const SiteGenerators& g, int order, CartanDictionary dict) {
    if (order == 2) {
        return g[Gen::S] * g[Gen::S] - g[Gen::B] * g[Gen::B] + g[Gen::Splus] * g[Gen::Sminus] +
               g[Gen::Vplus] * g[Gen::Wminus] + g[Gen::Wplus] * g[Gen::Vminus];
    }
    if (order != 3) throw std::invalid_argument("casimir: order must be 2 or 3");
    std::vector<Operator> terms;
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                Rational s = (index_grade(b) + index_grade(c)) % 2 ? -1 : 1;
                terms.push_back(s * (e_op(g, a, b, dict) * e_op(g, b, c, dict) * e_op(g, c, a, dict)));
            }
        }
    }
    return Rational(1, 6) * Operator::sum(terms);
}

Operator casimir2_from_dictionary(const SiteGenerators& g, CartanDictionary dict) {
    std::vector<Operator> terms;
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            Rational s = index_grade(b) ? -1 : 1;
            terms.push_back(s * (e_op(g, a, b, dict) * e_op(g, b, a, dict)));
        }
    }
    return Rational(1, 2) * Operator::sum(terms);
}

SuperPolynomial verma_vector(const Weight& w, VermaKind kind, int k, int site) {
    if (k < 0) throw std::invalid_argument("verma_vector: negative index");
    if (kind == VermaKind::B && k == 0) throw std::invalid_argument("verma_vector: b_k needs k >= 1");
    const auto zz = SuperPolynomial::z(site);
    const auto th = SuperPolynomial::odd(ybsl21::theta(site));
    const auto thb = SuperPolynomial::odd(ybsl21::thetabar(site));
    const Rational two_ell = 2 * w.ell;
    switch (kind) {
        case VermaKind::A: {
            if (k == 0) return SuperPolynomial(1);
            if (two_ell == 0) throw SingularWeight("a_k closed form divides by 2*ell = 0");
            Rational coef = Rational(k) * w.b / two_ell;
            return pochhammer(two_ell, k) * ((zz - coef * (th * thb)) * pow(zz, k - 1));
        }
        case VermaKind::B: {
            if (two_ell == 0) throw SingularWeight("b_k closed form divides by 2*ell = 0");
            Rational pref = (w.ell - w.b) / two_ell * pochhammer(two_ell, k);
            Rational coef = w.b + w.ell + Rational(k, 2);
            return pref * ((zz + coef * (th * thb)) * pow(zz, k - 1));
        }
        case VermaKind::V:
            return (-(w.ell - w.b) * pochhammer(two_ell + 1, k)) * (pow(zz, k) * thb);
        case VermaKind::W:
            return (-(w.ell + w.b) * pochhammer(two_ell + 1, k)) * (pow(zz, k) * th);
    }
    throw std::invalid_argument("verma_vector: unknown kind");
}

SuperPolynomial verma_by_raising(const SiteGenerators& g, VermaKind kind, int k) {
    SuperPolynomial v(1);
    int raises = k;
    switch (kind) {
        case VermaKind::A: break;
        case VermaKind::B:
            if (k < 1) throw std::invalid_argument("verma_by_raising: b_k needs k >= 1");
            v = g[Gen::Wplus].apply(g[Gen::Vplus].apply(v));
            raises = k - 1;
            break;
        case VermaKind::V: v = g[Gen::Vplus].apply(v); break;
        case VermaKind::W: v = g[Gen::Wplus].apply(v); break;
    }
    for (int i = 0; i < raises; ++i) v = g[Gen::Splus].apply(v);
    return v;
}

CheckReport check_finite_subspace(int n, Chirality kind, const std::optional<Rational>& b_override) {
    if (n < 1) throw std::invalid_argument("check_finite_subspace: n must be positive");
    const bool chiral = kind == Chirality::Chiral;
    Weight w{Rational(-n, 2), chiral ? Rational(-n, 2) : Rational(n, 2)};
    if (b_override) w.b = *b_override;

    CheckReport report;
    report.check_name = "finite_subspace/" + to_string(kind) + "/n=" + std::to_string(n);
    report.add_param("ell", w.ell);
    report.add_param("b", w.b);
    report.max_degree = n;

    const auto zz = SuperPolynomial::z(1);
    const auto th = SuperPolynomial::odd(ybsl21::theta(1));
    const auto thb = SuperPolynomial::odd(ybsl21::thetabar(1));
    const Rational half_sign = chiral ? Rational(-1, 2) : Rational(1, 2);
    std::vector<SuperPolynomial> span;
    for (int k = 0; k <= n; ++k) span.push_back(pow(zz + half_sign * (th * thb), k));
    for (int k = 0; k < n; ++k) span.push_back(pow(zz, k) * (chiral ? th : thb));

    const auto g = build_generators(1, w);
    for (Gen gen : kAllGens) {
        for (std::size_t i = 0; i < span.size(); ++i) {
            auto image = g[gen].apply(span[i]);
            auto sol = solve_in_span(span, image);
            if (!sol.in_span) {
                report.add_failure({to_string(gen) + " on span vector " + std::to_string(i), image.render(), "",
                                    sol.residual.render()});
            }
        }
    }
    return report;
}

}  // namespace ybsl21
