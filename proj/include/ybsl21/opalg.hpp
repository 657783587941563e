#pragma once

/**
 * @file opalg.hpp
 * @brief Linear operators on superpolynomials as immutable expression trees.
 *
 * Operators are built from graded primitives (multiplication, even and odd
 * derivatives, degree-diagonal Pochhammer ratios, site relabelling) with
 * sums, compositions and terminating exponentials. Equality is extensional:
 * two operators are compared by applying them to every basis monomial up to
 * a z-degree bound.
 */

#include "ybsl21/errors.hpp"
#include "ybsl21/report.hpp"
#include "ybsl21/superpoly.hpp"

#include <array>
#include <memory>
#include <optional>
#include <vector>

namespace ybsl21 {

/// h(n) = prod_j (a_j)_n / prod_k (b_k)_n with (x)_n the rising factorial.
struct PochhammerSpec {
    std::vector<Rational> numerator_offsets;
    std::vector<Rational> denominator_offsets;

    /// Throws SingularParameters if a denominator factor vanishes.
    [[nodiscard]] Rational evaluate(int n) const;
    /// True if no denominator factor vanishes for any degree <= max_n.
    [[nodiscard]] bool regular_up_to(int max_n) const;
};

/// (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1.
Rational pochhammer(const Rational& x, int n);

/// Gamma(x + m) / Gamma(x) for any integer m; throws SingularParameters on a pole.
Rational gamma_shift_ratio(const Rational& x, int m);

class Operator {
public:
    struct Node;

    /// The identity.
    Operator();

    static Operator identity() { return Operator(); }
    static Operator scalar(const Rational& c);
    /// Left multiplication by a parity-homogeneous polynomial.
    static Operator mul_by(const SuperPolynomial& p);
    static Operator mul_by_z(int site) { return mul_by(SuperPolynomial::z(site)); }
    static Operator mul_by_odd(OddVar v) { return mul_by(SuperPolynomial::odd(v)); }
    static Operator even_deriv(int site);
    static Operator odd_deriv(OddVar v);
    static Operator degree_diagonal(int site, PochhammerSpec spec);
    /// Relabels site s as target[s-1]; odd reordering signs follow from canonical order.
    static Operator site_permutation(std::array<int, kMaxSites> target);
    static Operator sum(std::vector<Operator> terms);
    /// factors[0] o factors[1] o ... (the last factor acts first).
    static Operator compose(std::vector<Operator> factors);
    /// sum_k A^k / k!, truncated when a term vanishes.
    static Operator exp_terminating(const Operator& generator);
    /// Same action, with a per-monomial result cache.
    static Operator memoized(const Operator& inner);

    /// Parity if definite, std::nullopt otherwise.
    [[nodiscard]] std::optional<int> parity() const;

    [[nodiscard]] SuperPolynomial apply(const SuperPolynomial& p) const;
    [[nodiscard]] SuperPolynomial apply(const Monomial& m) const { return apply(SuperPolynomial(m)); }
    SuperPolynomial operator()(const SuperPolynomial& p) const { return apply(p); }

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a);
    /// Composition a o b.
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(const Rational& c, const Operator& a);

private:
    explicit Operator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

SuperPolynomial apply(const Operator& a, const SuperPolynomial& p);

/// A o B - (-1)^{|A||B|} B o A. Throws IndefiniteParity.
Operator graded_commutator(const Operator& a, const Operator& b);

Operator exp_terminating(const Operator& a);

/// Applies both operators to every monomial of enumerate_basis(D, sites).
CheckReport equal_on_degree(const Operator& a, const Operator& b, int max_degree, int sites = 2,
                            std::string name = "equal_on_degree");

// Shorthands for the site-local first-order operators used everywhere.
namespace ops {

Operator d(int site);                ///< d/dz_site
Operator d_theta(int site);          ///< left d/dtheta_site
Operator d_thetabar(int site);       ///< left d/dthetabar_site
Operator z(int site);                ///< multiplication by z_site
Operator mul_theta(int site);        ///< multiplication by theta_site
Operator mul_thetabar(int site);     ///< multiplication by thetabar_site
Operator mul(const SuperPolynomial& p);
Operator c(const Rational& value);   ///< scalar
/// z d/dz at a site (degree counting).
Operator euler(int site);
/// theta d/dtheta and thetabar d/dthetabar.
Operator theta_number(int site);
Operator thetabar_number(int site);

}  // namespace ops

}  // namespace ybsl21
