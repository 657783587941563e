#pragma once

/**
 * @file sl21.hpp
 * @brief sl(2|1) in the functional representation on C[z, theta, thetabar]
 *        and in the two 3-dimensional representations.
 */

#include "ybsl21/opalg.hpp"

#include <array>
#include <map>
#include <string>

namespace ybsl21 {

struct Weight {
    Rational ell;
    Rational b;
};

enum class Gen { S, B, Splus, Sminus, Vplus, Vminus, Wplus, Wminus };

inline constexpr std::array<Gen, 8> kAllGens = {Gen::S,      Gen::B,     Gen::Splus, Gen::Sminus,
                                                Gen::Vplus,  Gen::Vminus, Gen::Wplus, Gen::Wminus};

std::string to_string(Gen g);
/// 0 for S, B, S+, S-; 1 for V+-, W+-.
int parity(Gen g);

/// Grading of the index set {1, 2, 3}: 1 and 3 even, 2 odd.
inline constexpr int index_grade(int a) { return a == 2 ? 1 : 0; }

struct SiteGenerators {
    int site = 1;
    Weight weight;
    std::map<Gen, Operator> gens;

    [[nodiscard]] const Operator& operator[](Gen g) const { return gens.at(g); }
};

SiteGenerators build_generators(int site, const Weight& w);

/// Sum of the generators of several sites (acting on the tensor product).
SiteGenerators total_generators(const std::vector<SiteGenerators>& sites);

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 mat_zero();
Mat3 mat_identity();
Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(const Rational& c, const Mat3& a);
/// Matrix unit E_ik (1-based).
Mat3 mat_unit(int i, int k);

enum class Chirality { Chiral, Antichiral };

std::string to_string(Chirality c);

struct FundamentalRep {
    Chirality kind = Chirality::Chiral;
    std::map<Gen, Mat3> matrices;

    [[nodiscard]] const Mat3& operator[](Gen g) const { return matrices.at(g); }
};

/// Matrices in the convention A e_k = sum_i e_i A_ik.
FundamentalRep fundamental_rep(Chirality kind);

/**
 * Which Cartan part of the E_AB dictionary to use. The off-diagonal part is
 * E31 = S-, E21 = -W-, E32 = V-, E13 = S+, E23 = W+, E12 = V+.
 *  - Consistent: E11 = B + S, E22 = -2B, E33 = B - S.
 *  - AsPrinted:  E11 = B - S, E22 = -2B, E33 = B + S. Violates the relations;
 *    kept so tests can show it.
 */
enum class CartanDictionary { Consistent, AsPrinted };

/// E_AB as a combination of generators.
std::vector<std::pair<Rational, Gen>> dictionary_entry(int a, int b,
                                                       CartanDictionary dict = CartanDictionary::Consistent);

/// Checks all 81 graded commutators [E_AB, E_CD] against the delta formula.
CheckReport check_relations(const SiteGenerators& g, int max_degree,
                            CartanDictionary dict = CartanDictionary::Consistent);
CheckReport check_relations(const FundamentalRep& rep, CartanDictionary dict = CartanDictionary::Consistent);

/// order 2: S^2 - B^2 + S+S- + V+W- + W+V-; order 3: (1/6) sum (-)^{B+C} E_AB E_BC E_CA.
Operator casimir(const SiteGenerators& g, int order, CartanDictionary dict = CartanDictionary::Consistent);
/// order 2 through (1/2) sum (-)^{B} E_AB E_BA, for comparison with the explicit form.
Operator casimir2_from_dictionary(const SiteGenerators& g, CartanDictionary dict = CartanDictionary::Consistent);

enum class VermaKind { A, B, V, W };

std::string to_string(VermaKind k);

/// Closed forms of a_k = S+^k 1, b_k = S+^{k-1} W+ V+ 1, v_k = S+^k V+ 1, w_k = S+^k W+ 1.
/// Throws SingularWeight where the formula has a pole, std::invalid_argument for b_0.
SuperPolynomial verma_vector(const Weight& w, VermaKind kind, int k, int site = 1);
/// The same vectors by repeated application of the raising operators.
SuperPolynomial verma_by_raising(const SiteGenerators& g, VermaKind kind, int k);

/// Checks that span{Phi_k, W_k} (chiral, b = -n/2) or span{Phi_k, V_k}
/// (antichiral, b = n/2) at ell = -n/2 is closed under all generators.
/// `b_override` replaces b for mutation tests.
CheckReport check_finite_subspace(int n, Chirality kind, const std::optional<Rational>& b_override = {});

}  // namespace ybsl21
