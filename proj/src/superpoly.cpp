#include "ybsl21/superpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ybsl21 {

namespace {

constexpr int kZBits = 16;
constexpr std::uint64_t kZMask = (1ULL << kZBits) - 1;

constexpr int z_shift(int site) {
    // z1 is most significant so the packed key sorts by (z1, z2, z3, mask)
    return 8 + kZBits * (kMaxSites - site);
}

void check_site(int site) {
    if (site < 1 || site > kMaxSites) {
        throw std::out_of_range("site index must be 1..3, got " + std::to_string(site));
    }
}

bool parse_int(std::string_view s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    mpz_class num, den = 1;
    auto slash = text.find('/');
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_int(text, num);
    } else {
        auto d = text.substr(slash + 1);
        ok = parse_int(text.substr(0, slash), num) && parse_int(d, den) && d[0] != '-' && d[0] != '+';
    }
    if (!ok || den == 0) {
        throw std::invalid_argument("not a rational of the form p or p/q: '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string render_rational(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r.get_str(10);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::array<int, kMaxSites> z_degrees, OddMask odd) {
    key_ = odd.bits();
    for (int s = 1; s <= kMaxSites; ++s) {
        int d = z_degrees[s - 1];
        if (d < 0 || static_cast<std::uint64_t>(d) > kZMask) {
            throw std::out_of_range("z-degree out of range");
        }
        key_ |= static_cast<std::uint64_t>(d) << z_shift(s);
    }
}

Monomial Monomial::z(int site, int power) {
    check_site(site);
    std::array<int, kMaxSites> deg{};
    deg[site - 1] = power;
    return Monomial(deg, OddMask{});
}

Monomial Monomial::odd(OddVar v) {
    check_site(v.site);
    return Monomial({0, 0, 0}, OddMask(static_cast<std::uint8_t>(1U << v.bit())));
}

int Monomial::z_degree(int site) const {
    return static_cast<int>((key_ >> z_shift(site)) & kZMask);
}

int Monomial::total_z_degree() const {
    return z_degree(1) + z_degree(2) + z_degree(3);
}

int Monomial::max_site() const {
    int top = 0;
    for (int s = 1; s <= kMaxSites; ++s) {
        if (z_degree(s) > 0 || ((odd().bits() >> (2 * (s - 1))) & 3U)) top = s;
    }
    return top;
}

Monomial Monomial::with_z_degree(int site, int power) const {
    if (power < 0 || static_cast<std::uint64_t>(power) > kZMask) {
        throw std::out_of_range("z-degree out of range");
    }
    Monomial m = *this;
    m.key_ &= ~(kZMask << z_shift(site));
    m.key_ |= static_cast<std::uint64_t>(power) << z_shift(site);
    return m;
}

Monomial Monomial::with_odd(OddMask mask) const {
    Monomial m = *this;
    m.key_ = (m.key_ & ~0xFFULL) | mask.bits();
    return m;
}

std::string Monomial::render() const {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += ' ';
        out += s;
    };
    for (int s = 1; s <= kMaxSites; ++s) {
        int d = z_degree(s);
        if (d == 1) append("z" + std::to_string(s));
        if (d > 1) append("z" + std::to_string(s) + "^" + std::to_string(d));
    }
    for (int b = 0; b < 2 * kMaxSites; ++b) {
        if ((odd().bits() >> b) & 1U) {
            OddVar v = OddVar::from_bit(b);
            append(std::string(v.bar ? "thb" : "th") + std::to_string(v.site));
        }
    }
    return out.empty() ? "1" : out;
}

// ------------------------------------------------------------- sign kernels

int merge_sign(OddMask a, OddMask b) {
    if (a.bits() & b.bits()) return 0;
    // each variable of b passes over the variables of a with a larger index
    int swaps = 0;
    for (int j = 0; j < 2 * kMaxSites; ++j) {
        if ((b.bits() >> j) & 1U) {
            swaps += __builtin_popcount(a.bits() >> (j + 1));
        }
    }
    return (swaps & 1) ? -1 : 1;
}

int left_deriv_sign(OddMask mask, OddVar v) {
    if (!mask.contains(v)) return 0;
    unsigned below = mask.bits() & ((1U << v.bit()) - 1U);
    return (__builtin_popcount(below) & 1) ? -1 : 1;
}

// ---------------------------------------------------------- SuperPolynomial

SuperPolynomial::SuperPolynomial(const Rational& c) {
    add_term(Monomial::one(), c);
}

SuperPolynomial::SuperPolynomial(const Monomial& m, const Rational& c) {
    add_term(m, c);
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SuperPolynomial::parity() const {
    int p = -2;
    for (const auto& [m, c] : terms_) {
        if (p == -2) {
            p = m.parity();
        } else if (p != m.parity()) {
            return -1;
        }
    }
    return p == -2 ? 0 : p;
}

int SuperPolynomial::max_total_z_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_z_degree());
    return d;
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& p, const SuperPolynomial& q) {
    SuperPolynomial out;
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) {
            int sign = merge_sign(mp.odd(), mq.odd());
            if (sign == 0) continue;
            std::array<int, kMaxSites> deg{};
            for (int s = 1; s <= kMaxSites; ++s) deg[s - 1] = mp.z_degree(s) + mq.z_degree(s);
            Rational c = cp * cq;
            if (sign < 0) c = -c;
            out.add_term(Monomial(deg, OddMask(mp.odd().bits() | mq.odd().bits())), c);
        }
    }
    return out;
}

std::string SuperPolynomial::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << render_rational(mag);
        if (m != Monomial::one()) os << ' ' << m.render();
        first = false;
    }
    return os.str();
}

SuperPolynomial linear_combine(const std::vector<std::pair<Rational, SuperPolynomial>>& pairs) {
    SuperPolynomial out;
    for (const auto& [c, p] : pairs) {
        for (const auto& [m, coef] : p.terms()) out.add_term(m, c * coef);
    }
    return out;
}

SuperPolynomial mul(const SuperPolynomial& p, const SuperPolynomial& q) {
    return p * q;
}

SuperPolynomial pow(const SuperPolynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    SuperPolynomial out(1);
    for (int i = 0; i < n; ++i) out = out * p;
    return out;
}

SuperPolynomial deriv_even(int site, const SuperPolynomial& p) {
    check_site(site);
    SuperPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        int d = m.z_degree(site);
        if (d == 0) continue;
        out.add_term(m.with_z_degree(site, d - 1), c * d);
    }
    return out;
}

SuperPolynomial deriv_odd(OddVar v, const SuperPolynomial& p) {
    check_site(v.site);
    SuperPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        int sign = left_deriv_sign(m.odd(), v);
        if (sign == 0) continue;
        OddMask rest(static_cast<std::uint8_t>(m.odd().bits() & ~(1U << v.bit())));
        out.add_term(m.with_odd(rest), sign > 0 ? Rational(c) : Rational(-c));
    }
    return out;
}

std::vector<Monomial> enumerate_basis(int max_z_degree, int sites) {
    if (max_z_degree < 0) throw std::invalid_argument("negative degree bound");
    if (sites < 1 || sites > kMaxSites) throw std::invalid_argument("sites must be 1..3");
    std::vector<Monomial> out;
    const int masks = 1 << (2 * sites);
    const int d2max = sites >= 2 ? max_z_degree : 0;
    const int d3max = sites >= 3 ? max_z_degree : 0;
    for (int a = 0; a <= max_z_degree; ++a) {
        for (int b = 0; b <= std::min(d2max, max_z_degree - a); ++b) {
            for (int c = 0; c <= std::min(d3max, max_z_degree - a - b); ++c) {
                for (int mask = 0; mask < masks; ++mask) {
                    out.emplace_back(std::array<int, kMaxSites>{a, b, c},
                                     OddMask(static_cast<std::uint8_t>(mask)));
                }
            }
        }
    }
    return out;
}

}  // namespace ybsl21

namespace ybsl21 {

SpanSolution solve_in_span(const std::vector<SuperPolynomial>& vectors, const SuperPolynomial& target) {
    // Rows are monomials, columns the spanning vectors plus the target.
    std::vector<Monomial> rows;
    for (const auto& v : vectors) {
        for (const auto& [m, c] : v.terms()) rows.push_back(m);
    }
    for (const auto& [m, c] : target.terms()) rows.push_back(m);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const std::size_t ncols = vectors.size();
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(ncols + 1));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < ncols; ++j) a[r][j] = vectors[j].coefficient(rows[r]);
        a[r][ncols] = target.coefficient(rows[r]);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < ncols && prow < a.size(); ++col) {
        std::size_t sel = prow;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[prow]);
        Rational inv = 1 / a[prow][col];
        for (auto& x : a[prow]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == prow || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j <= ncols; ++j) a[r][j] -= f * a[prow][j];
        }
        pivot_col.push_back(col);
        ++prow;
    }

    SpanSolution out;
    out.coefficients.assign(ncols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out.coefficients[pivot_col[i]] = a[i][ncols];
    SuperPolynomial combo;
    for (std::size_t j = 0; j < ncols; ++j) combo += out.coefficients[j] * vectors[j];
    out.residual = target - combo;
    out.in_span = out.residual.is_zero();
    return out;
}

}  // namespace ybsl21
