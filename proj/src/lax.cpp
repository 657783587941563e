#include "ybsl21/lax.hpp"

#include <sstream>

namespace ybsl21 {

SpectralTriple SpectralTriple::from_weight(const Rational& u, const Weight& w) {
    return {u + w.b + w.ell, u + 2 * w.b, u + w.b - w.ell};
}

Rational SpectralTriple::u() const {
    return u2 - 2 * weight().b;
}

Weight SpectralTriple::weight() const {
    return {(u1 - u3) / 2, u2 - (u1 + u3) / 2};
}

// ------------------------------------------------------ SuperMatrixOperator

SuperMatrixOperator::SuperMatrixOperator() {
    for (auto& row : entries_) row.fill(Operator::scalar(0));
}

SuperMatrixOperator SuperMatrixOperator::identity() {
    return quantum(Operator::identity());
}

SuperMatrixOperator SuperMatrixOperator::from_numeric(const Mat3& m) {
    SuperMatrixOperator out;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) out(i, k) = Operator::scalar(m[i - 1][k - 1]);
    }
    return out;
}

SuperMatrixOperator SuperMatrixOperator::quantum(const Operator& op) {
    SuperMatrixOperator out;
    for (int i = 1; i <= 3; ++i) out(i, i) = op;
    return out;
}

SuperMatrixOperator SuperMatrixOperator::from_tensor(const std::vector<std::pair<Mat3, Operator>>& terms) {
    std::array<std::array<std::vector<Operator>, 3>, 3> acc;
    for (const auto& [x, op] : terms) {
        auto par = op.parity();
        if (!par) throw IndefiniteParity("from_tensor: operator leg needs a definite parity");
        for (int i = 1; i <= 3; ++i) {
            for (int k = 1; k <= 3; ++k) {
                const Rational& c = x[i - 1][k - 1];
                if (c == 0) continue;
                Rational sign = (*par * index_grade(k)) % 2 ? -1 : 1;
                acc[i - 1][k - 1].push_back((sign * c) * op);
            }
        }
    }
    SuperMatrixOperator out;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) out(i, k) = Operator::sum(acc[i - 1][k - 1]);
    }
    return out;
}

SuperMatrixOperator operator*(const SuperMatrixOperator& a, const SuperMatrixOperator& b) {
    SuperMatrixOperator out;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) {
            std::vector<Operator> terms;
            for (int j = 1; j <= 3; ++j) terms.push_back(a(i, j) * b(j, k));
            out(i, k) = Operator::sum(terms);
        }
    }
    return out;
}

SuperMatrixOperator operator+(const SuperMatrixOperator& a, const SuperMatrixOperator& b) {
    SuperMatrixOperator out;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) out(i, k) = a(i, k) + b(i, k);
    }
    return out;
}

SuperMatrixOperator operator*(const Rational& c, const SuperMatrixOperator& a) {
    SuperMatrixOperator out;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) out(i, k) = c * a(i, k);
    }
    return out;
}

CheckReport equal_entries(const SuperMatrixOperator& a, const SuperMatrixOperator& b, int max_degree, int sites,
                          std::string name) {
    CheckReport report;
    report.check_name = std::move(name);
    report.max_degree = max_degree;
    const auto basis = enumerate_basis(max_degree, sites);
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) {
            const std::string label = "entry(" + std::to_string(i) + "," + std::to_string(k) + ") on ";
            for (const auto& m : basis) report.expect_equal(label + m.render(), a(i, k).apply(m), b(i, k).apply(m));
        }
    }
    return report;
}

// ----------------------------------------------------------------- AuxState

void AuxState::add(const std::vector<int>& index, const SuperPolynomial& p) {
    if (p.is_zero()) return;
    auto& slot = components[index];
    slot += p;
    if (slot.is_zero()) components.erase(index);
}

std::string AuxState::render() const {
    if (components.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, p] : components) {
        if (!first) os << " + ";
        first = false;
        os << "e";
        for (int a : idx) os << a;
        os << "(" << p.render() << ")";
    }
    return os.str();
}

AuxState apply_in_slot(const SuperMatrixOperator& l, int slot, const AuxState& x) {
    AuxState out;
    for (const auto& [idx, psi] : x.components) {
        if (slot < 0 || static_cast<std::size_t>(slot) >= idx.size()) {
            throw std::out_of_range("apply_in_slot: slot out of range");
        }
        int later = 0;
        for (std::size_t t = static_cast<std::size_t>(slot) + 1; t < idx.size(); ++t) later += index_grade(idx[t]);
        const int k = idx[static_cast<std::size_t>(slot)];
        for (int i = 1; i <= 3; ++i) {
            auto image = l(i, k).apply(psi);
            if (image.is_zero()) continue;
            if (((index_grade(i) + index_grade(k)) * later) % 2) image *= Rational(-1);
            auto target = idx;
            target[static_cast<std::size_t>(slot)] = i;
            out.add(target, image);
        }
    }
    return out;
}

// ------------------------------------------------------- fundamental R-matrix

namespace {

Mat9 mat9_zero() {
    Mat9 m;
    for (auto& row : m) row.fill(Rational(0));
    return m;
}

int pair_index(int a, int b) {
    return 3 * (a - 1) + (b - 1);
}

}  // namespace

Mat9 graded_permutation() {
    Mat9 p = mat9_zero();
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            p[pair_index(b, a)][pair_index(a, b)] = (index_grade(a) == 1 && index_grade(b) == 1) ? -1 : 1;
        }
    }
    return p;
}

Mat9 graded_kron(const Mat3& x, const Mat3& y, int y_parity) {
    Mat9 out = mat9_zero();
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            Rational sign = (y_parity * index_grade(a)) % 2 ? -1 : 1;
            for (int i = 1; i <= 3; ++i) {
                for (int j = 1; j <= 3; ++j) {
                    out[pair_index(i, j)][pair_index(a, b)] += sign * x[i - 1][a - 1] * y[j - 1][b - 1];
                }
            }
        }
    }
    return out;
}

Mat9 graded_permutation_from_units() {
    Mat9 out = mat9_zero();
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) {
            Rational sign = index_grade(k) ? -1 : 1;
            int py = (index_grade(i) + index_grade(k)) % 2;
            Mat9 term = graded_kron(mat_unit(i, k), mat_unit(k, i), py);
            for (int r = 0; r < 9; ++r) {
                for (int c = 0; c < 9; ++c) out[r][c] += sign * term[r][c];
            }
        }
    }
    return out;
}

Mat9 fundamental_rmatrix(const Rational& u) {
    Mat9 r = graded_permutation();
    for (int i = 0; i < 9; ++i) r[i][i] += u;
    return r;
}

Mat9 operator*(const Mat9& a, const Mat9& b) {
    Mat9 out = mat9_zero();
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            if (a[i][j] == 0) continue;
            for (int k = 0; k < 9; ++k) out[i][k] += a[i][j] * b[j][k];
        }
    }
    return out;
}

AuxState apply_on_first_two(const Mat9& r, const AuxState& x) {
    AuxState out;
    for (const auto& [idx, psi] : x.components) {
        if (idx.size() < 2) throw std::out_of_range("apply_on_first_two: need two aux slots");
        const int col = pair_index(idx[0], idx[1]);
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const Rational& c = r[pair_index(i, j)][col];
                if (c == 0) continue;
                auto target = idx;
                target[0] = i;
                target[1] = j;
                out.add(target, c * psi);
            }
        }
    }
    return out;
}

// --------------------------------------------------------------- Lax operators

namespace {

SuperMatrixOperator lax_printed_chiral(int site, const SpectralTriple& t) {
    using namespace ops;
    const Rational half(1, 2);
    const auto zz = SuperPolynomial::z(site);
    const auto thth = SuperPolynomial::odd(theta(site)) * SuperPolynomial::odd(thetabar(site));
    SuperMatrixOperator l;
    l(1, 1) = euler(site) + thetabar_number(site) + c(t.u1);
    l(1, 2) = -(d_thetabar(site) + half * (mul_theta(site) * d(site)));
    l(1, 3) = -d(site);
    l(2, 1) = -(mul(zz - half * thth) * d_theta(site)) - half * (mul_thetabar(site) * z(site) * d(site)) +
              Rational(t.u2 - t.u1) * mul_thetabar(site);
    l(2, 2) = thetabar_number(site) - theta_number(site) + c(t.u2);
    l(2, 3) = d_theta(site) + half * (mul_thetabar(site) * d(site));
    l(3, 1) = mul(zz * zz) * d(site) + z(site) * (theta_number(site) + thetabar_number(site)) +
              Rational(t.u1 - t.u3) * z(site) + mul(Rational((t.u1 + t.u3 - 2 * t.u2) / 2) * thth);
    l(3, 2) = -(mul(zz + half * thth) * d_thetabar(site)) - half * (mul_theta(site) * z(site) * d(site)) +
              Rational(t.u3 - t.u2) * mul_theta(site);
    l(3, 3) = -euler(site) - theta_number(site) + c(t.u3);
    return l;
}

SuperMatrixOperator lax_generators(int site, const SpectralTriple& t, Chirality kind) {
    const auto g = build_generators(site, t.weight());
    const Operator u = Operator::scalar(t.u());
    SuperMatrixOperator l;
    if (kind == Chirality::Chiral) {
        l(1, 1) = g[Gen::S] + g[Gen::B] + u;
        l(1, 2) = -g[Gen::Wminus];
        l(1, 3) = g[Gen::Sminus];
        l(2, 1) = g[Gen::Vplus];
        l(2, 2) = Rational(2) * g[Gen::B] + u;
        l(2, 3) = g[Gen::Vminus];
        l(3, 1) = g[Gen::Splus];
        l(3, 2) = g[Gen::Wplus];
        l(3, 3) = g[Gen::B] - g[Gen::S] + u;
    } else {
        l(1, 1) = g[Gen::S] - g[Gen::B] + u;
        l(1, 2) = -g[Gen::Vminus];
        l(1, 3) = g[Gen::Sminus];
        l(2, 1) = g[Gen::Wplus];
        l(2, 2) = Rational(-2) * g[Gen::B] + u;
        l(2, 3) = g[Gen::Wminus];
        l(3, 1) = g[Gen::Splus];
        l(3, 2) = g[Gen::Vplus];
        l(3, 3) = -g[Gen::B] - g[Gen::S] + u;
    }
    return l;
}

SuperMatrixOperator lax_tensor(int site, const SpectralTriple& t, Chirality kind) {
    const auto g = build_generators(site, t.weight());
    const auto r = fundamental_rep(kind);
    std::vector<std::pair<Mat3, Operator>> terms = {
        {t.u() * mat_identity(), Operator::identity()},
        {Rational(2) * r[Gen::S], g[Gen::S]},
        {Rational(-2) * r[Gen::B], g[Gen::B]},
        {r[Gen::Vplus], g[Gen::Wminus]},
        {r[Gen::Splus], g[Gen::Sminus]},
        {Rational(-1) * r[Gen::Wminus], g[Gen::Vplus]},
        {r[Gen::Wplus], g[Gen::Vminus]},
        {r[Gen::Sminus], g[Gen::Splus]},
        {Rational(-1) * r[Gen::Vminus], g[Gen::Wplus]},
    };
    return SuperMatrixOperator::from_tensor(terms);
}

}  // namespace

SuperMatrixOperator build_lax(int site, const SpectralTriple& t, Chirality kind, LaxForm form) {
    switch (form) {
        case LaxForm::Printed:
            return kind == Chirality::Chiral ? lax_printed_chiral(site, t) : lax_generators(site, t, kind);
        case LaxForm::Generators: return lax_generators(site, t, kind);
        case LaxForm::Tensor: return lax_tensor(site, t, kind);
    }
    throw std::invalid_argument("build_lax: unknown form");
}

CovariantDerivatives covariant_derivatives(int site) {
    using namespace ops;
    const Rational half(1, 2);
    return {site, -d_thetabar(site) + half * (mul_theta(site) * d(site)),
            -d_theta(site) + half * (mul_thetabar(site) * d(site))};
}

SuperMatrixOperator build_lax_middle_factor(int site, const SpectralTriple& t) {
    using namespace ops;
    const auto dd = covariant_derivatives(site);
    SuperMatrixOperator mid;
    mid(1, 1) = c(t.u1);
    mid(1, 2) = dd.Dminus;
    mid(1, 3) = -d(site);
    mid(2, 2) = c(t.u2 - 1);
    mid(2, 3) = -dd.Dplus;
    mid(3, 3) = c(t.u3);
    return mid;
}

SuperMatrixOperator build_lax_factorized(int site, const SpectralTriple& t) {
    using namespace ops;
    const Rational half(1, 2);
    const auto zz = SuperPolynomial::z(site);
    const auto thth = SuperPolynomial::odd(theta(site)) * SuperPolynomial::odd(thetabar(site));
    SuperMatrixOperator left = SuperMatrixOperator::identity();
    left(2, 1) = -mul_thetabar(site);
    left(3, 1) = mul(zz + half * thth);
    left(3, 2) = -mul_theta(site);
    SuperMatrixOperator right = SuperMatrixOperator::identity();
    right(2, 1) = mul_thetabar(site);
    right(3, 1) = mul(-zz + half * thth);
    right(3, 2) = mul_theta(site);
    return left * build_lax_middle_factor(site, t) * right;
}

CheckReport check_rll(const SuperMatrixOperator& l_u, const SuperMatrixOperator& l_v, const Rational& u_minus_v,
                      int max_degree, int site) {
    CheckReport report;
    report.check_name = "rll";
    report.max_degree = max_degree;
    report.add_param("u-v", u_minus_v);
    const Mat9 r = fundamental_rmatrix(u_minus_v);
    for (const auto& m : enumerate_basis(max_degree, site)) {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                AuxState x;
                x.add({i, j}, SuperPolynomial(m));
                AuxState lhs = apply_on_first_two(r, apply_in_slot(l_u, 0, apply_in_slot(l_v, 1, x)));
                AuxState rhs = apply_in_slot(l_v, 1, apply_in_slot(l_u, 0, apply_on_first_two(r, x)));
                if (!(lhs == rhs)) {
                    report.add_failure({"e" + std::to_string(i) + std::to_string(j) + " " + m.render(), lhs.render(),
                                        rhs.render(), ""});
                }
            }
        }
    }
    return report;
}

CheckReport check_rll(const Weight& w, const Rational& u, const Rational& v, int max_degree, Chirality kind) {
    auto l_u = build_lax(1, SpectralTriple::from_weight(u, w), kind);
    auto l_v = build_lax(1, SpectralTriple::from_weight(v, w), kind);
    auto report = check_rll(l_u, l_v, u - v, max_degree, 1);
    report.check_name = "rll/" + to_string(kind);
    report.params.clear();
    report.add_param("ell", w.ell);
    report.add_param("b", w.b);
    report.add_param("u", u);
    report.add_param("v", v);
    return report;
}

CheckReport check_invariance(int site, const SpectralTriple& t, const Rational& lambda, int max_degree,
                             InvarianceSign sign) {
    const auto l = build_lax(site, t);
    Mat3 m = mat_identity();
    m[2][0] = lambda;
    Mat3 m_inv = mat_identity();
    m_inv[2][0] = -lambda;
    const auto lhs =
        SuperMatrixOperator::from_numeric(m_inv) * l * SuperMatrixOperator::from_numeric(m);

    const Rational s = static_cast<int>(sign);
    const Operator s_minus = -ops::d(site);
    const Operator conj = exp_terminating((s * lambda) * s_minus);
    const Operator conj_inv = exp_terminating((-s * lambda) * s_minus);
    SuperMatrixOperator rhs;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) rhs(i, k) = conj_inv * l(i, k) * conj;
    }
    auto report = equal_entries(lhs, rhs, max_degree, std::max(2, site), "invariance");
    report.add_param("u1", t.u1);
    report.add_param("u2", t.u2);
    report.add_param("u3", t.u3);
    report.add_param("lambda", lambda);
    return report;
}

}  // namespace ybsl21
