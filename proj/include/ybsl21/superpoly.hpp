#pragma once

/**
 * @file superpoly.hpp
 * @brief Exact graded polynomials in even variables z_s and odd variables
 *        theta_s, thetabar_s (s = 1, 2, 3) over the rationals.
 *
 * Odd variables are kept in the canonical order
 *   th1 < thb1 < th2 < thb2 < th3 < thb3
 * and every sign produced by multiplication or differentiation comes from
 * sorting into that order. Two-site computations simply never touch site 3.
 */

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybsl21 {

using Rational = mpq_class;

/// Parse "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
/// "p" or "p/q" (sign on the numerator).
std::string render_rational(const Rational& q);

inline constexpr int kMaxSites = 3;

/// One of the six odd generators. Bit index in an OddMask is 2*(site-1)+bar.
struct OddVar {
    int site = 1;      ///< 1, 2 or 3
    bool bar = false;  ///< false: theta, true: thetabar

    [[nodiscard]] constexpr int bit() const { return 2 * (site - 1) + (bar ? 1 : 0); }
    static constexpr OddVar from_bit(int b) { return OddVar{b / 2 + 1, (b % 2) == 1}; }
    friend constexpr bool operator==(OddVar, OddVar) = default;
};

inline constexpr OddVar theta(int site) { return OddVar{site, false}; }
inline constexpr OddVar thetabar(int site) { return OddVar{site, true}; }

/// Subset of the odd generators, stored as a 6-bit set in canonical order.
class OddMask {
public:
    constexpr OddMask() = default;
    constexpr explicit OddMask(std::uint8_t bits) : bits_(bits) {}

    [[nodiscard]] constexpr std::uint8_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool contains(OddVar v) const { return (bits_ >> v.bit()) & 1U; }
    [[nodiscard]] int size() const { return __builtin_popcount(bits_); }
    [[nodiscard]] int parity() const { return size() & 1; }

    friend constexpr bool operator==(OddMask, OddMask) = default;
    friend constexpr auto operator<=>(OddMask a, OddMask b) { return a.bits_ <=> b.bits_; }

private:
    std::uint8_t bits_ = 0;
};

/// z1^a z2^b z3^c times an ordered product of odd generators.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::array<int, kMaxSites> z_degrees, OddMask odd);

    static Monomial one() { return Monomial{}; }
    static Monomial z(int site, int power = 1);
    static Monomial odd(OddVar v);

    [[nodiscard]] int z_degree(int site) const;
    [[nodiscard]] int total_z_degree() const;
    [[nodiscard]] OddMask odd() const { return OddMask(static_cast<std::uint8_t>(key_ & 0xFFU)); }
    [[nodiscard]] int parity() const { return odd().parity(); }
    /// Highest site index any variable of this monomial lives on (0 for the constant).
    [[nodiscard]] int max_site() const;

    [[nodiscard]] Monomial with_z_degree(int site, int power) const;
    [[nodiscard]] Monomial with_odd(OddMask mask) const;

    /// Packed key; ordering is (z1, z2, z3, odd mask) lexicographic.
    [[nodiscard]] std::uint64_t key() const { return key_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.key_ <=> b.key_; }

    /// e.g. "z1^2 th1 thb2"; the constant monomial renders as "1".
    [[nodiscard]] std::string render() const;

private:
    std::uint64_t key_ = 0;
};

/// Finite linear combination of monomials with nonzero rational coefficients.
class SuperPolynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    SuperPolynomial() = default;
    SuperPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor): scalars embed
    SuperPolynomial(int c) : SuperPolynomial(Rational(c)) {}  // NOLINT
    SuperPolynomial(const Monomial& m, const Rational& c = 1);

    static SuperPolynomial z(int site) { return SuperPolynomial(Monomial::z(site)); }
    static SuperPolynomial odd(OddVar v) { return SuperPolynomial(Monomial::odd(v)); }

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Rational coefficient(const Monomial& m) const;

    /// Parity if every term has the same parity; -1 for mixed, 0 for the zero polynomial.
    [[nodiscard]] int parity() const;
    [[nodiscard]] bool is_homogeneous() const { return parity() >= 0; }
    [[nodiscard]] int max_total_z_degree() const;

    /// Adds c*m, dropping the entry when it cancels.
    void add_term(const Monomial& m, const Rational& c);

    SuperPolynomial& operator+=(const SuperPolynomial& rhs);
    SuperPolynomial& operator-=(const SuperPolynomial& rhs);
    SuperPolynomial& operator*=(const Rational& c);

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator-(SuperPolynomial a) { return a *= Rational(-1); }
    friend SuperPolynomial operator*(const Rational& c, SuperPolynomial p) { return p *= c; }
    friend SuperPolynomial operator*(int c, SuperPolynomial p) { return p *= Rational(c); }
    friend SuperPolynomial operator*(const SuperPolynomial& p, const SuperPolynomial& q);

    friend bool operator==(const SuperPolynomial&, const SuperPolynomial&) = default;

    /// Canonical text form used in reports, e.g. "1/2 z1^2 th1 thb2 - 1 z2".
    [[nodiscard]] std::string render() const;

private:
    TermMap terms_;
};

SuperPolynomial linear_combine(const std::vector<std::pair<Rational, SuperPolynomial>>& pairs);
SuperPolynomial mul(const SuperPolynomial& p, const SuperPolynomial& q);
SuperPolynomial pow(const SuperPolynomial& p, int n);

/// d/dz_site, term-wise.
SuperPolynomial deriv_even(int site, const SuperPolynomial& p);
/// Left Grassmann derivative: anticommute v to the front, then drop it.
SuperPolynomial deriv_odd(OddVar v, const SuperPolynomial& p);

/// Monomials with z-degree total at most max_z_degree on `sites` sites, all
/// odd masks on those sites, ordered by (z1, z2, z3, mask).
/// For sites = 2 the count is 16 (D+1)(D+2)/2.
std::vector<Monomial> enumerate_basis(int max_z_degree, int sites = 2);

// Monomial-level kernels shared with the operator engine. Each returns the
// sign (+1/-1) or 0 when the result vanishes.

/// Sign of mask_a * mask_b (a on the left); 0 if they share a variable.
int merge_sign(OddMask a, OddMask b);
/// Sign of the left derivative d/dv acting on mask; 0 if v is absent.
int left_deriv_sign(OddMask mask, OddVar v);

}  // namespace ybsl21

namespace ybsl21 {

/// Result of expressing a polynomial in the span of given vectors.
struct SpanSolution {
    bool in_span = false;
    std::vector<Rational> coefficients;  ///< one per spanning vector (free ones set to 0)
    SuperPolynomial residual;            ///< target minus the best combination found
};

/// Exact Gaussian elimination over monomial coordinates.
SpanSolution solve_in_span(const std::vector<SuperPolynomial>& vectors, const SuperPolynomial& target);

}  // namespace ybsl21
