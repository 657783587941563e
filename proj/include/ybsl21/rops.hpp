#pragma once

/**
 * @file rops.hpp
 * @brief The building blocks R1, R2, R3, their product R-check and the full
 *        R-operator on C[Z_a, Z_b], with the exchange-equation checks.
 *
 * Gamma-ratio diagonals are divided by their value at degree zero, which
 * turns them into Pochhammer ratios; every operator is then scaled so that
 * it maps the constant 1 to 1.
 */

#include "ybsl21/lax.hpp"

#include <string>
#include <utility>

namespace ybsl21 {

struct ParamPair {
    SpectralTriple u;
    SpectralTriple v;

    static ParamPair from_weights(const Rational& u, const Weight& w1, const Rational& v, const Weight& w2);
    /// {u1, u2, u3, v1, v2, v3}
    [[nodiscard]] std::array<Rational, 6> values() const;
};

/// Empty if the guard holds, otherwise a description of the first violation.
std::string guard_violation(const ParamPair& p, int max_degree);
/// Throws SingularParameters on a guard violation.
void require_regular(const ParamPair& p, int max_degree);

/// The two quantum sites an operator acts on; "site 1" of the formulas is `first`.
struct SitePair {
    int first = 1;
    int second = 2;
};

/// Orientation of the last kernel term of R2.
enum class R2LastTerm {
    ThetaThetabar,  ///< (u2-v2) theta2 thetabar1 d/dthetabar1 d/dtheta2
    ThetabarTheta,  ///< (u2-v2) thetabar1 theta2 d/dthetabar1 d/dtheta2
};

/// Knobs for the kernels; the defaults are the verified ones.
struct KernelOptions {
    Rational f_offset = 0;  ///< added to f_k (mutation tests only)
    R2LastTerm r2_last = R2LastTerm::ThetaThetabar;
    bool enforce_guard = true;  ///< checks run require_regular first
};

enum class RWhich { R1, R2, R3, RHat, Full };

std::string to_string(RWhich w);

struct NormalizedROp {
    RWhich which = RWhich::R3;
    ParamPair params;
    SitePair sites;
    Operator op;
};

/// The conjugator S_k (inverse = false) or S_k^{-1}.
Operator conjugator(int k, SitePair sites = {}, bool inverse = false);
/// Normalized kernel so that R_k = S_k^{-1} kernel S_k.
Operator kernel(int k, const ParamPair& p, SitePair sites = {}, const KernelOptions& opts = {});

/// Checks only the denominators R_k itself needs (the full guard is left to
/// callers, since R-check builds its factors on intermediate parameters).
/// Throws SingularParameters.
NormalizedROp build_r(int k, const ParamPair& p, SitePair sites = {}, const KernelOptions& opts = {});

/// Parameters after R_k exchanges u_k with v_k.
ParamPair exchanged(int k, const ParamPair& p);
CheckReport check_defining(int k, const ParamPair& p, int max_degree, const KernelOptions& opts = {});
/// R L1(u) L2(v) = L1(u') L2(v') R for an already built operator.
CheckReport check_exchange(const Operator& r, const ParamPair& before, const ParamPair& after, int max_degree,
                           std::string name);
CheckReport check_lemma_system(int k, const ParamPair& p, int max_degree, const KernelOptions& opts = {});
/// a, b, c recurrences of R3 and the four R2 coefficient relations for n <= max_n.
CheckReport check_recurrences(const ParamPair& p, int max_n, const KernelOptions& opts = {});

NormalizedROp build_rhat(const ParamPair& p, SitePair sites = {});
NormalizedROp build_full_R(const ParamPair& p, SitePair sites = {});
/// Swap of the two sites' variables.
Operator site_swap(SitePair sites = {});

/// Master equation R-check L1(u) L2(v) = L1(v) L2(u) R-check.
CheckReport check_factorization(const ParamPair& p, int max_degree, bool enforce_guard = true);
/// R-check(u; u) acts as the identity.
CheckReport check_rhat_identity(const SpectralTriple& t, int max_degree);

/// Weights on the two sites after R_k.
std::pair<Weight, Weight> weight_shift(int k, const Weight& w1, const Weight& w2, const ParamPair& p);
/// R_k (X_1 + X_2) = (X'_1 + X'_2) R_k for all generators, with shifted weights.
CheckReport check_intertwining(int k, const ParamPair& p, int max_degree);
/// The same for R-check: the weights of the two sites are exchanged.
CheckReport check_rhat_intertwining(const ParamPair& p, int max_degree);

/// Three-site relation R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) up to
/// one scalar, where Rij(w) = P_ij R-check_ij(w, 0).
CheckReport check_ybe(const Weight& w1, const Weight& w2, const Weight& w3, const Rational& u, const Rational& v,
                      int max_degree);

}  // namespace ybsl21
