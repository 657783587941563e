#pragma once

/**
 * @file lowest.hpp
 * @brief Lowest-weight vectors of V1 (x) V2 and the action of R1, R2, R3
 *        and R-check on them.
 *
 * Even vectors Phi+-_n = (Z12 +- theta12 thetabar12 / 2)^n, odd vectors
 * Psi-_n = theta12 Z12^n and Psi+_n = thetabar12 Z12^n, where
 * theta12 = theta1 - theta2 and thetabar12 = thetabar1 - thetabar2.
 */

#include "ybsl21/rops.hpp"

#include <array>
#include <map>

namespace ybsl21 {

enum class Sector { Even, Odd };

std::string to_string(Sector s);

/// Interval used for Z12.
enum class Z12Form {
    Supersymmetric,  ///< z1 - z2 + theta1 thetabar2 / 2 - theta2 thetabar1 / 2
    Plain,           ///< z1 - z2 (not annihilated by the odd lowering operators)
};

SuperPolynomial z12(Z12Form form = Z12Form::Supersymmetric);

struct LowestVector {
    Sector sector = Sector::Even;
    int sign = 1;  ///< +1 or -1
    int n = 0;
    SuperPolynomial poly;
};

LowestVector lowest_vector(Sector sector, int sign, int n, Z12Form form = Z12Form::Supersymmetric);

/// Total S and B eigenvalues, annihilation by S-, V-, W- (site sums) and the
/// covariant-derivative condition read at site 1. The reading with site-summed
/// covariant derivatives is only reported in the notes.
CheckReport verify_lowest(const LowestVector& v, const Weight& w1, const Weight& w2);

/// Coefficients (c+, c-) of p in the sector basis at level n. Throws NotInSpan.
/// At n = 0 the even sector is one-dimensional and c- is 0.
std::pair<Rational, Rational> decompose(const SuperPolynomial& p, int n, Sector sector,
                                        Z12Form form = Z12Form::Supersymmetric);

/// Matrix of an operator on (Phi+_n, Phi-_n) or (Psi+_n, Psi-_n):
/// entries[i][j] is the coefficient of basis vector i in the image of basis vector j.
struct SectorMatrix {
    int n = 0;
    Sector sector = Sector::Even;
    int dim = 2;
    std::array<std::array<Rational, 2>, 2> entries{};

    friend bool operator==(const SectorMatrix&, const SectorMatrix&) = default;
    [[nodiscard]] std::string render() const;
};

/// Applies the normalized operator (R1, R2, R3 or RHat) to the sector basis.
SectorMatrix sector_action(RWhich which, const ParamPair& p, Sector sector, int n);

/// How to read two basis labels of the printed composite formulas.
enum class PrintedLabels {
    Corrected,  ///< second term of the Phi+_n image on Phi-_n; Psi-_n mapped to Psi-_n
    AsPrinted,  ///< both terms on Phi+_n; Psi-_n mapped to Psi+_n
};

/// The printed closed forms, divided by the same formula's value on Phi+_0 = 1.
/// At n = 0 the two even terms are added (Phi+_0 = Phi-_0).
SectorMatrix printed_sector_action(RWhich which, const ParamPair& p, Sector sector, int n,
                                   PrintedLabels labels = PrintedLabels::Corrected);

/// Entry-by-entry comparison of sector_action with printed_sector_action.
CheckReport check_sector(RWhich which, const ParamPair& p, Sector sector, int n,
                         PrintedLabels labels = PrintedLabels::Corrected);

/// (u2-v3)(v2-u3)(u1-v1) + (v2-u1)(v1-u2)(v3-u3) + (u1-v1)(u2-v2)(u3-v3)
Rational composite_c(const ParamPair& p);

struct CompositeSpectrum {
    SectorMatrix even;
    SectorMatrix odd;
    CheckReport report;
};

/// R-check on both sectors at level n, compared with the printed composite
/// formulas through normalization-free ratios.
CompositeSpectrum composite_spectrum(const ParamPair& p, int n);

/// Variable substitution: images of z1, theta1, thetabar1, z2, theta2, thetabar2.
struct Substitution {
    std::array<SuperPolynomial, 6> images;

    [[nodiscard]] SuperPolynomial apply(const SuperPolynomial& p) const;
};

/// The explicit substitutions printed for S3, S3^{-1}, S1, S1^{-1} and the
/// even part of the R2 conjugator.
Substitution printed_substitution(const std::string& name);

/// e^{theta1 thetabar1 d1 / 2} e^{-theta2 thetabar2 d2 / 2}, the conjugator
/// used for the R2 spectrum.
Operator r2_even_conjugator(bool inverse = false);

/// The conjugators against their printed substitutions and their printed
/// images of the lowest vectors, for n <= max_n.
CheckReport check_conjugator_oracles(int max_n);

}  // namespace ybsl21
