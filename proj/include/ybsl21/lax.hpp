#pragma once

/**
 * @file lax.hpp
 * @brief Lax operators on V (x) C[Z] and the fundamental R-matrix.
 *
 * A SuperMatrixOperator stores the matrix form of an even operator on
 * V (x) C[Z]:  L(e_k (x) psi) = sum_i e_i (x) L_ik psi.  In this form
 * composition is the ordinary matrix product of entries. Tensor-product
 * expressions x (x) X are converted with the Koszul rule
 * (x (x) X)(e_k (x) psi) = (-1)^{|X| k} x e_k (x) X psi.
 */

#include "ybsl21/sl21.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ybsl21 {

/// u1 = u+b+ell, u2 = u+2b, u3 = u+b-ell.
struct SpectralTriple {
    Rational u1;
    Rational u2;
    Rational u3;

    static SpectralTriple from_weight(const Rational& u, const Weight& w);
    [[nodiscard]] Rational u() const;
    [[nodiscard]] Weight weight() const;

    friend bool operator==(const SpectralTriple&, const SpectralTriple&) = default;
};

class SuperMatrixOperator {
public:
    using Entries = std::array<std::array<Operator, 3>, 3>;

    SuperMatrixOperator();  ///< zero matrix
    explicit SuperMatrixOperator(Entries e) : entries_(std::move(e)) {}

    static SuperMatrixOperator identity();
    static SuperMatrixOperator from_numeric(const Mat3& m);
    /// diag(op, op, op): an operator acting on the quantum space only.
    static SuperMatrixOperator quantum(const Operator& op);
    /// sum over terms of x (x) X with the Koszul sign; parity of X must be definite.
    static SuperMatrixOperator from_tensor(const std::vector<std::pair<Mat3, Operator>>& terms);

    /// 1-based entry access.
    [[nodiscard]] const Operator& operator()(int i, int k) const { return entries_[i - 1][k - 1]; }
    Operator& operator()(int i, int k) { return entries_[i - 1][k - 1]; }

    friend SuperMatrixOperator operator*(const SuperMatrixOperator& a, const SuperMatrixOperator& b);
    friend SuperMatrixOperator operator+(const SuperMatrixOperator& a, const SuperMatrixOperator& b);
    friend SuperMatrixOperator operator*(const Rational& c, const SuperMatrixOperator& a);

private:
    Entries entries_;
};

/// Entry-by-entry extensional comparison on enumerate_basis(D, sites).
CheckReport equal_entries(const SuperMatrixOperator& a, const SuperMatrixOperator& b, int max_degree, int sites,
                          std::string name);

/// Vector in V^{(x) m} (x) C[Z]: one polynomial per aux multi-index (entries 1..3).
struct AuxState {
    std::map<std::vector<int>, SuperPolynomial> components;

    void add(const std::vector<int>& index, const SuperPolynomial& p);
    friend bool operator==(const AuxState&, const AuxState&) = default;
    [[nodiscard]] std::string render() const;
};

/// Acts with `l` on aux slot `slot` (0-based) and the quantum space. The
/// entry L_ik picks up (-1)^{(i+k) * (grades of the later slots)}.
AuxState apply_in_slot(const SuperMatrixOperator& l, int slot, const AuxState& x);

/// 9x9 matrix on V (x) V, index 3(a-1)+(b-1) for e_a (x) e_b.
using Mat9 = std::array<std::array<Rational, 9>, 9>;

/// P e_a (x) e_b = (-1)^{a b} e_b (x) e_a.
Mat9 graded_permutation();
/// The same operator assembled as sum_{ik} (-1)^{k} E_ik (x) E_ki.
Mat9 graded_permutation_from_units();
/// (x (x) y)(e_a (x) e_b) = (-1)^{py * grade(a)} x e_a (x) y e_b.
Mat9 graded_kron(const Mat3& x, const Mat3& y, int y_parity);
/// u + P.
Mat9 fundamental_rmatrix(const Rational& u);
Mat9 operator*(const Mat9& a, const Mat9& b);

/// Acts with an even numeric matrix on the first two aux slots.
AuxState apply_on_first_two(const Mat9& r, const AuxState& x);

enum class LaxForm {
    Printed,     ///< explicit entries in u1, u2, u3
    Generators,  ///< matrix of site generators
    Tensor,      ///< u + 2 s (x) S - 2 b (x) B + ... with Koszul signs
};

/// Chiral: the explicit matrix (Printed) or its generator/tensor forms.
/// Antichiral: the generator matrix (Printed and Generators coincide) or the tensor form.
SuperMatrixOperator build_lax(int site, const SpectralTriple& t, Chirality kind = Chirality::Chiral,
                              LaxForm form = LaxForm::Printed);

struct CovariantDerivatives {
    int site = 1;
    Operator Dminus;  ///< -d/dthetabar + theta d/2
    Operator Dplus;   ///< -d/dtheta + thetabar d/2
};

CovariantDerivatives covariant_derivatives(int site);

/// Lower odd triangle x (u1, D-, -d / 0, u2-1, -D+ / 0, 0, u3) x lower odd triangle.
SuperMatrixOperator build_lax_factorized(int site, const SpectralTriple& t);
/// The middle factor alone (outer factors replaced by the unit matrix).
SuperMatrixOperator build_lax_middle_factor(int site, const SpectralTriple& t);

/// R12(u-v) L1(u) L2(v) = L2(v) L1(u) R12(u-v) on V (x) V (x) C[Z_site].
CheckReport check_rll(const SuperMatrixOperator& l_u, const SuperMatrixOperator& l_v, const Rational& u_minus_v,
                      int max_degree, int site = 1);
CheckReport check_rll(const Weight& w, const Rational& u, const Rational& v, int max_degree,
                      Chirality kind = Chirality::Chiral);

/// Sign of lambda in the conjugator exp(sign * lambda * S-).
enum class InvarianceSign { Consistent = -1, AsPrinted = 1 };

/// M^{-1} L M = S^{-1} L S with M = [[1,0,0],[0,1,0],[lambda,0,1]] and S = exp(sign lambda S-).
CheckReport check_invariance(int site, const SpectralTriple& t, const Rational& lambda, int max_degree,
                             InvarianceSign sign = InvarianceSign::Consistent);

}  // namespace ybsl21
