#include "ybsl21/rops.hpp"

#include <algorithm>

namespace ybsl21 {

ParamPair ParamPair::from_weights(const Rational& u, const Weight& w1, const Rational& v, const Weight& w2) {
    return {SpectralTriple::from_weight(u, w1), SpectralTriple::from_weight(v, w2)};
}

std::array<Rational, 6> ParamPair::values() const {
    return {u.u1, u.u2, u.u3, v.u1, v.u2, v.u3};
}

namespace {

// Conjugators can trade the two odd pairs for z powers, so kernel diagonals
// see site degrees up to D + 2.
constexpr int kDegreeSlack = 2;

bool negative_integer_within(const Rational& x, int bound) {
    return x.get_den() == 1 && x < 0 && x >= -bound;
}

bool nonpositive_integer_within(const Rational& x, int bound) {
    return x.get_den() == 1 && x <= 0 && x >= -bound;
}

std::string render_pair(const char* a, const char* b) {
    return std::string(a) + " = " + b;
}

}  // namespace

std::string guard_violation(const ParamPair& p, int max_degree) {
    const auto& [u1, u2, u3] = p.u;
    const auto& [v1, v2, v3] = p.v;
    const std::array<std::tuple<const char*, const char*, Rational, Rational>, 9> distinct = {{
        {"u1", "v1", u1, v1},
        {"u2", "v2", u2, v2},
        {"u3", "v3", u3, v3},
        {"v1", "v2", v1, v2},
        {"u1", "u2", u1, u2},
        {"u2", "u3", u2, u3},
        {"v2", "v3", v2, v3},
        // denominators of the R2 and R1 factors inside R-check
        {"v2", "u3", v2, u3},
        {"v1", "u2", v1, u2},
    }};
    for (const auto& [a, b, x, y] : distinct) {
        if (x == y) return render_pair(a, b);
    }
    const int bound = max_degree + kDegreeSlack;
    if (negative_integer_within(u1 - u3, bound)) return "u1 - u3 is a negative integer";
    if (negative_integer_within(v1 - v3, bound)) return "v1 - v3 is a negative integer";
    if (negative_integer_within(v1 - u3, bound)) return "v1 - u3 is a negative integer";
    if (nonpositive_integer_within(u1 - v3, max_degree)) return "u1 - v3 is a nonpositive integer";
    return {};
}

void require_regular(const ParamPair& p, int max_degree) {
    auto why = guard_violation(p, max_degree);
    if (!why.empty()) throw SingularParameters("parameters violate the regularity guard: " + why);
}

std::string to_string(RWhich w) {
    switch (w) {
        case RWhich::R1: return "R1";
        case RWhich::R2: return "R2";
        case RWhich::R3: return "R3";
        case RWhich::RHat: return "Rhat";
        case RWhich::Full: return "R";
    }
    return "?";
}

// ------------------------------------------------------------- conjugators

namespace {

using namespace ops;

SuperPolynomial odd_pair(int site) {
    return SuperPolynomial::odd(theta(site)) * SuperPolynomial::odd(thetabar(site));
}

Operator v_minus(int site) {
    return d_theta(site) + Rational(1, 2) * (mul_thetabar(site) * d(site));
}

Operator w_minus(int site) {
    return d_thetabar(site) + Rational(1, 2) * (mul_theta(site) * d(site));
}

// Exponents X_1, X_2, ... of S_k = e^{X_1} e^{X_2} ...
std::vector<Operator> conjugator_exponents(int k, SitePair s) {
    const int a = s.first;
    const int b = s.second;
    const Rational half(1, 2);
    switch (k) {
        case 1:
            return {
                mul(half * odd_pair(b)) * d(b),
                mul_theta(a) * v_minus(b),
                mul_thetabar(a) * w_minus(b),
                mul(SuperPolynomial::z(a) + half * odd_pair(a)) * d(b),
            };
        case 2:
            return {
                mul_theta(a) * d_theta(b),
                mul_thetabar(b) * d_thetabar(a),
                mul(half * odd_pair(a)) * d(a),
                mul(Rational(-1, 2) * odd_pair(b)) * d(b),
            };
        case 3:
            return {
                mul(Rational(-1, 2) * odd_pair(a)) * d(a),
                mul_theta(b) * v_minus(a),
                mul_thetabar(b) * w_minus(a),
                mul(SuperPolynomial::z(b) + half * odd_pair(b)) * d(a),
            };
        default: break;
    }
    throw std::invalid_argument("conjugator: k must be 1, 2 or 3");
}

void require_nonzero(const Rational& x, const std::string& what) {
    if (x == 0) throw SingularParameters(what + " vanishes");
}

// 1/f with an optional shift of f (mutation tests); f = num/den.
Rational inverse_f(const Rational& num, const Rational& den, const Rational& offset, const std::string& what) {
    if (offset == 0) {
        require_nonzero(num, what);
        return den / num;
    }
    require_nonzero(den, what + " (denominator)");
    Rational f = num / den + offset;
    require_nonzero(f, what);
    return 1 / f;
}

}  // namespace

Operator conjugator(int k, SitePair sites, bool inverse) {
    auto xs = conjugator_exponents(k, sites);
    std::vector<Operator> factors;
    if (!inverse) {
        for (const auto& x : xs) factors.push_back(exp_terminating(x));
    } else {
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) factors.push_back(exp_terminating(-*it));
    }
    return Operator::compose(std::move(factors));
}

Operator kernel(int k, const ParamPair& p, SitePair s, const KernelOptions& opts) {
    const int a = s.first;
    const int b = s.second;
    const auto& [u1, u2, u3] = p.u;
    const auto& [v1, v2, v3] = p.v;
    switch (k) {
        case 3: {
            // f3 = (u2-u3)/(u3-v3)
            const Rational g = inverse_f(u2 - u3, u3 - v3, opts.f_offset, "f3");
            require_nonzero(u1 - u3 + 1, "u1 - u3 + 1");
            const Operator diag = Operator::degree_diagonal(a, {{u1 - v3 + 1}, {u1 - u3 + 1}});
            const Operator shifted = Operator::degree_diagonal(a, {{u1 - v3 + 1}, {u1 - u3 + 2}});
            return diag * (Operator::identity() + g * theta_number(a)) +
                   Rational(g / (u1 - u3 + 1)) * (z(a) * shifted * d_theta(a) * d_thetabar(a));
        }
        case 1: {
            // f1 = (v1-v2)/(u1-v1)
            const Rational g = inverse_f(v1 - v2, u1 - v1, opts.f_offset, "f1");
            require_nonzero(v1 - v3 + 1, "v1 - v3 + 1");
            const Operator diag = Operator::degree_diagonal(b, {{u1 - v3 + 1}, {v1 - v3 + 1}});
            const Operator shifted = Operator::degree_diagonal(b, {{u1 - v3 + 1}, {v1 - v3 + 2}});
            return diag * (Operator::identity() + g * thetabar_number(b)) -
                   Rational(g / (v1 - v3 + 1)) * (z(b) * shifted * d_theta(b) * d_thetabar(b));
        }
        case 2: {
            // f2 = (u2-u1)(v2-v3)/(v2-u2)
            require_nonzero(u2 - u1, "u2 - u1");
            require_nonzero(v2 - v3, "v2 - v3");
            const Rational dd = inverse_f((u2 - u1) * (v2 - v3), v2 - u2, opts.f_offset, "f2");
            const auto zz = SuperPolynomial::z(a) - SuperPolynomial::z(b) +
                            SuperPolynomial::odd(theta(a)) * SuperPolynomial::odd(thetabar(b));
            const auto last = opts.r2_last == R2LastTerm::ThetaThetabar
                                  ? SuperPolynomial::odd(theta(b)) * SuperPolynomial::odd(thetabar(a))
                                  : SuperPolynomial::odd(thetabar(a)) * SuperPolynomial::odd(theta(b));
            const Operator dd_op = d_thetabar(a) * d_theta(b);
            return Operator::identity() + Rational((u1 - u2) * dd) * theta_number(b) +
                   Rational((v2 - v3) * dd) * thetabar_number(a) + dd * (mul(zz) * dd_op) +
                   Rational((u2 - v2) * dd) * (mul(last) * dd_op);
        }
        default: break;
    }
    throw std::invalid_argument("kernel: k must be 1, 2 or 3");
}

namespace {

Operator normalized(const Operator& op, const std::string& what) {
    const auto image = op.apply(SuperPolynomial(1));
    const Rational c = image.coefficient(Monomial::one());
    if (c == 0 || !(image == SuperPolynomial(c))) {
        throw NormalizationFailure(what + " does not map 1 to a nonzero multiple of 1: " + image.render());
    }
    if (c == 1) return Operator::memoized(op);
    return Operator::memoized(Rational(1 / c) * op);
}

RWhich which_of(int k) {
    switch (k) {
        case 1: return RWhich::R1;
        case 2: return RWhich::R2;
        case 3: return RWhich::R3;
        default: break;
    }
    throw std::invalid_argument("build_r: k must be 1, 2 or 3");
}

}  // namespace

NormalizedROp build_r(int k, const ParamPair& p, SitePair sites, const KernelOptions& opts) {
    NormalizedROp r;
    r.which = which_of(k);
    r.params = p;
    r.sites = sites;
    const Operator raw = conjugator(k, sites, true) * kernel(k, p, sites, opts) * conjugator(k, sites, false);
    r.op = normalized(raw, to_string(r.which));
    return r;
}

ParamPair exchanged(int k, const ParamPair& p) {
    ParamPair q = p;
    switch (k) {
        case 1: std::swap(q.u.u1, q.v.u1); break;
        case 2: std::swap(q.u.u2, q.v.u2); break;
        case 3: std::swap(q.u.u3, q.v.u3); break;
        default: throw std::invalid_argument("exchanged: k must be 1, 2 or 3");
    }
    return q;
}

namespace {

void add_params(CheckReport& r, const ParamPair& p) {
    const char* names[] = {"u1", "u2", "u3", "v1", "v2", "v3"};
    const auto vals = p.values();
    for (int i = 0; i < 6; ++i) r.add_param(names[i], vals[static_cast<std::size_t>(i)]);
}

SuperMatrixOperator lax_product(const ParamPair& p, SitePair s) {
    return build_lax(s.first, p.u) * build_lax(s.second, p.v);
}

SuperMatrixOperator lax_sum(const ParamPair& p, SitePair s) {
    return build_lax(s.first, p.u) + build_lax(s.second, p.v);
}

CheckReport intertwines(const Operator& r, const SuperMatrixOperator& before, const SuperMatrixOperator& after,
                        int max_degree, int sites, std::string name) {
    SuperMatrixOperator lhs;
    SuperMatrixOperator rhs;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) {
            lhs(i, k) = r * before(i, k);
            rhs(i, k) = after(i, k) * r;
        }
    }
    return equal_entries(lhs, rhs, max_degree, sites, std::move(name));
}

CheckReport commutes(const Operator& r, const Operator& x, int max_degree, std::string name) {
    return equal_on_degree(r * x, x * r, max_degree, 2, std::move(name));
}

}  // namespace

CheckReport check_exchange(const Operator& r, const ParamPair& before, const ParamPair& after, int max_degree,
                           std::string name) {
    auto report = intertwines(r, lax_product(before, {}), lax_product(after, {}), max_degree, 2, std::move(name));
    add_params(report, before);
    return report;
}

CheckReport check_defining(int k, const ParamPair& p, int max_degree, const KernelOptions& opts) {
    if (opts.enforce_guard) require_regular(p, max_degree);
    const auto r = build_r(k, p, {}, opts);
    return check_exchange(r.op, p, exchanged(k, p), max_degree, "defining/" + to_string(r.which));
}

CheckReport check_lemma_system(int k, const ParamPair& p, int max_degree, const KernelOptions& opts) {
    if (opts.enforce_guard) require_regular(p, max_degree);
    const auto r = build_r(k, p, {}, opts);
    CheckReport report;
    report.check_name = "lemmas/" + to_string(r.which);
    report.max_degree = max_degree;
    add_params(report, p);
    report.absorb(intertwines(r.op, lax_sum(p, {}), lax_sum(exchanged(k, p), {}), max_degree, 2, "sum"));
    const Rational half(1, 2);
    switch (k) {
        case 1:
            report.absorb(commutes(r.op, z(1), max_degree, "z1"));
            report.absorb(commutes(r.op, mul_theta(1), max_degree, "theta1"));
            report.absorb(commutes(r.op, mul_thetabar(1), max_degree, "thetabar1"));
            report.absorb(commutes(r.op, v_minus(2) - mul_thetabar(1) * d(2), max_degree, "V2- + thetabar1 S2-"));
            break;
        case 2:
            report.absorb(commutes(r.op, mul(SuperPolynomial::z(1) - half * odd_pair(1)), max_degree,
                                   "z1 - theta1 thetabar1/2"));
            report.absorb(commutes(r.op, mul_theta(1), max_degree, "theta1"));
            report.absorb(commutes(r.op, mul(SuperPolynomial::z(2) + half * odd_pair(2)), max_degree,
                                   "z2 + theta2 thetabar2/2"));
            report.absorb(commutes(r.op, mul_thetabar(2), max_degree, "thetabar2"));
            break;
        case 3:
            report.absorb(commutes(r.op, z(2), max_degree, "z2"));
            report.absorb(commutes(r.op, mul_theta(2), max_degree, "theta2"));
            report.absorb(commutes(r.op, mul_thetabar(2), max_degree, "thetabar2"));
            report.absorb(commutes(r.op, w_minus(1) - mul_theta(2) * d(1), max_degree, "W1- + theta2 S1-"));
            break;
        default: throw std::invalid_argument("check_lemma_system: k must be 1, 2 or 3");
    }
    return report;
}

CheckReport check_recurrences(const ParamPair& p, int max_n, const KernelOptions& opts) {
    if (opts.enforce_guard) require_regular(p, max_n);
    CheckReport report;
    report.check_name = "recurrences";
    report.max_degree = max_n;
    add_params(report, p);
    const auto& [u1, u2, u3] = p.u;
    const auto& [v1, v2, v3] = p.v;

    // Undo the conjugation of the built operator and read off the diagonals.
    const auto r3 = build_r(3, p, {}, opts);
    const Operator k3 = conjugator(3) * r3.op * conjugator(3, {}, true);
    const auto th = SuperPolynomial::odd(theta(1));
    const auto thb = SuperPolynomial::odd(thetabar(1));
    std::vector<Rational> a(static_cast<std::size_t>(max_n) + 2);
    std::vector<Rational> b(a.size());
    std::vector<Rational> c(a.size() + 1);
    for (int n = 0; n <= max_n + 1; ++n) {
        const auto zn = pow(SuperPolynomial::z(1), n);
        const auto n_str = std::to_string(n);
        const auto img_a = k3.apply(zn);
        a[n] = img_a.coefficient(Monomial::z(1, n));
        report.expect_equal("kernel on z1^" + n_str, img_a, a[n] * zn);
        const auto img_b = k3.apply(th * zn);
        b[n] = img_b.coefficient((th * zn).terms().begin()->first) - a[n];
        report.expect_equal("kernel on theta1 z1^" + n_str, img_b, (a[n] + b[n]) * (th * zn));
        const auto pair = th * thb * zn;
        const auto img_c = k3.apply(pair);
        c[n + 1] = -img_c.coefficient(Monomial::z(1, n + 1));
        report.expect_equal("kernel on theta1 thetabar1 z1^" + n_str, img_c,
                            (a[n] + b[n]) * pair - c[n + 1] * pow(SuperPolynomial::z(1), n + 1));
    }
    // one item per relation, failing if any n fails
    std::vector<CheckItem> families;
    auto rel = [&](const std::string& label, const Rational& lhs, const Rational& rhs) {
        const bool ok = lhs == rhs;
        report.expect(label, ok, render_rational(lhs) + " != " + render_rational(rhs));
        const std::string family = label.substr(0, label.find(" [n="));
        auto it = std::find_if(families.begin(), families.end(), [&](const CheckItem& f) { return f.name == family; });
        if (it == families.end()) it = families.insert(families.end(), {family, Status::Pass});
        if (!ok) it->status = Status::Fail;
    };
    const Rational ratio = (u3 - v3) / (u2 - u3);
    for (int n = 0; n <= max_n; ++n) {
        const auto s = "[n=" + std::to_string(n) + "]";
        rel("b = (u3-v3)/(u2-u3) a " + s, b[n], ratio * a[n]);
        rel("a[n+1](n+u1-u3) + (u2-u3)c[n+1] = (n+u1-v3)a[n] " + s,
            a[n + 1] * (n + u1 - u3) + (u2 - u3) * c[n + 1], (n + u1 - v3) * a[n]);
        if (n >= 1) {
            rel("a[n] - a[n-1] = (u2-u3)c[n] " + s, a[n] - a[n - 1], (u2 - u3) * c[n]);
            rel("c[n+1](n+u1-u3+1) = (n+u1-v3)c[n] " + s, c[n + 1] * (n + u1 - u3 + 1), (n + u1 - v3) * c[n]);
            rel("a[n] + b[n](n+u1-u3) - (u2-u3)c[n] = a[n-1] + (n+u1-v3)b[n-1] " + s,
                a[n] + b[n] * (n + u1 - u3) - (u2 - u3) * c[n], a[n - 1] + (n + u1 - v3) * b[n - 1]);
        }
    }

    // R2: r = a + b thetabar1 d/dthetabar1 + c theta2 d/dtheta2
    //       + d (z12 + theta1 thetabar2) d/dthetabar1 d/dtheta2 + e theta2 thetabar1 d/dthetabar1 d/dtheta2
    const auto r2 = build_r(2, p, {}, opts);
    const Operator k2 = conjugator(2) * r2.op * conjugator(2, {}, true);
    const auto thb1 = SuperPolynomial::odd(thetabar(1));
    const auto th2 = SuperPolynomial::odd(theta(2));
    const auto mixed = thb1 * th2;
    const Rational ca = k2.apply(SuperPolynomial(1)).coefficient(Monomial::one());
    const Rational cb = k2.apply(thb1).coefficient(Monomial::odd(thetabar(1))) - ca;
    const Rational cc = k2.apply(th2).coefficient(Monomial::odd(theta(2))) - ca;
    const auto img = k2.apply(mixed);
    const Rational cd = -img.coefficient(Monomial::z(1));
    const Rational ce = img.coefficient(mixed.terms().begin()->first) - ca - cb - cc;
    const auto z12 = SuperPolynomial::z(1) - SuperPolynomial::z(2) +
                     SuperPolynomial::odd(theta(1)) * SuperPolynomial::odd(thetabar(2));
    report.expect_equal("R2 kernel on thetabar1 theta2", img, (ca + cb + cc + ce) * mixed - cd * z12);
    rel("R2: a = (u2-u1)(v2-v3)/(v2-u2) d", ca, (u2 - u1) * (v2 - v3) / (v2 - u2) * cd);
    rel("R2: b = (v2-v3) d", cb, (v2 - v3) * cd);
    rel("R2: c = (u1-u2) d", cc, (u1 - u2) * cd);
    rel("R2: e = (u2-v2) d", ce, (u2 - v2) * cd);
    report.items.insert(report.items.end(), families.begin(), families.end());
    return report;
}

// ------------------------------------------------------------- R-check, R

Operator site_swap(SitePair sites) {
    std::array<int, kMaxSites> target{};
    for (int s = 1; s <= kMaxSites; ++s) target[static_cast<std::size_t>(s - 1)] = s;
    target[static_cast<std::size_t>(sites.first - 1)] = sites.second;
    target[static_cast<std::size_t>(sites.second - 1)] = sites.first;
    return Operator::site_permutation(target);
}

NormalizedROp build_rhat(const ParamPair& p, SitePair sites) {
    // R3 first, then R2 on (u1,u2,v3 | v1,v2,u3), then R1 on (u1,v2,v3 | v1,u2,u3).
    const ParamPair p2 = exchanged(3, p);
    const ParamPair p1 = exchanged(2, p2);
    const auto r3 = build_r(3, p, sites);
    const auto r2 = build_r(2, p2, sites);
    const auto r1 = build_r(1, p1, sites);
    NormalizedROp r;
    r.which = RWhich::RHat;
    r.params = p;
    r.sites = sites;
    r.op = normalized(r1.op * r2.op * r3.op, "Rhat");
    return r;
}

NormalizedROp build_full_R(const ParamPair& p, SitePair sites) {
    auto r = build_rhat(p, sites);
    r.which = RWhich::Full;
    r.op = site_swap(sites) * r.op;
    return r;
}

CheckReport check_factorization(const ParamPair& p, int max_degree, bool enforce_guard) {
    if (enforce_guard) require_regular(p, max_degree);
    const auto r = build_rhat(p);
    const ParamPair swapped{p.v, p.u};
    return check_exchange(r.op, p, swapped, max_degree, "factorization");
}

CheckReport check_rhat_identity(const SpectralTriple& t, int max_degree) {
    const auto r = build_rhat({t, t});
    auto report = equal_on_degree(r.op, Operator::identity(), max_degree, 2, "rhat_identity");
    report.add_param("u1", t.u1);
    report.add_param("u2", t.u2);
    report.add_param("u3", t.u3);
    return report;
}

// ------------------------------------------------------------ weights

std::pair<Weight, Weight> weight_shift(int k, const Weight& w1, const Weight& w2, const ParamPair& p) {
    switch (k) {
        case 1: {
            const Rational xi = (p.u.u1 - p.v.u1) / 2;
            return {{w1.ell - xi, w1.b + xi}, {w2.ell + xi, w2.b - xi}};
        }
        case 2: {
            const Rational xi = p.u.u2 - p.v.u2;
            return {{w1.ell, w1.b - xi}, {w2.ell, w2.b + xi}};
        }
        case 3: {
            const Rational xi = (p.u.u3 - p.v.u3) / 2;
            return {{w1.ell + xi, w1.b + xi}, {w2.ell - xi, w2.b - xi}};
        }
        default: break;
    }
    throw std::invalid_argument("weight_shift: k must be 1, 2 or 3");
}

namespace {

CheckReport intertwines_generators(const Operator& r, const std::pair<Weight, Weight>& before,
                                   const std::pair<Weight, Weight>& after, int max_degree, std::string name) {
    CheckReport report;
    report.check_name = std::move(name);
    report.max_degree = max_degree;
    const auto g_before = total_generators({build_generators(1, before.first), build_generators(2, before.second)});
    const auto g_after = total_generators({build_generators(1, after.first), build_generators(2, after.second)});
    for (Gen g : kAllGens) {
        report.absorb(equal_on_degree(r * g_before[g], g_after[g] * r, max_degree, 2, to_string(g)));
    }
    return report;
}

}  // namespace

CheckReport check_intertwining(int k, const ParamPair& p, int max_degree) {
    require_regular(p, max_degree);
    const auto r = build_r(k, p);
    const std::pair<Weight, Weight> before{p.u.weight(), p.v.weight()};
    auto report = intertwines_generators(r.op, before, weight_shift(k, before.first, before.second, p), max_degree,
                                         "intertwining/" + to_string(r.which));
    add_params(report, p);
    return report;
}

CheckReport check_rhat_intertwining(const ParamPair& p, int max_degree) {
    require_regular(p, max_degree);
    const auto r = build_rhat(p);
    const std::pair<Weight, Weight> before{p.u.weight(), p.v.weight()};
    auto report = intertwines_generators(r.op, before, {before.second, before.first}, max_degree,
                                         "intertwining/Rhat");
    add_params(report, p);
    return report;
}

// ---------------------------------------------------------------- YBE

CheckReport check_ybe(const Weight& w1, const Weight& w2, const Weight& w3, const Rational& u, const Rational& v,
                      int max_degree) {
    CheckReport report;
    report.check_name = "ybe";
    report.max_degree = max_degree;
    report.add_param("ell1", w1.ell);
    report.add_param("b1", w1.b);
    report.add_param("ell2", w2.ell);
    report.add_param("b2", w2.b);
    report.add_param("ell3", w3.ell);
    report.add_param("b3", w3.b);
    report.add_param("u", u);
    report.add_param("v", v);

    auto pair_op = [&](const Weight& wi, const Weight& wj, const Rational& w, SitePair s) {
        const auto p = ParamPair::from_weights(w, wi, 0, wj);
        if (w != 0) require_regular(p, max_degree);
        return build_full_R(p, s).op;
    };
    const Operator r12 = pair_op(w1, w2, u - v, {1, 2});
    const Operator r13 = pair_op(w1, w3, u, {1, 3});
    const Operator r23 = pair_op(w2, w3, v, {2, 3});
    const Operator lhs = Operator::compose({r12, r13, r23});
    const Operator rhs = Operator::compose({r23, r13, r12});

    const auto one_l = lhs.apply(SuperPolynomial(1));
    const auto one_r = rhs.apply(SuperPolynomial(1));
    const Rational cl = one_l.coefficient(Monomial::one());
    const Rational cr = one_r.coefficient(Monomial::one());
    if (cr == 0 || cl == 0) {
        report.add_failure({"1", one_l.render(), one_r.render(), "no common scalar"});
        return report;
    }
    const Rational scalar = cl / cr;
    report.add_param("scalar", scalar);
    for (const auto& m : enumerate_basis(max_degree, 3)) {
        if (!report.expect_equal(m.render(), lhs.apply(m), scalar * rhs.apply(m))) {
            if (report.failure_count >= CheckReport::kMaxStoredFailures) break;
        }
    }
    return report;
}

}  // namespace ybsl21
