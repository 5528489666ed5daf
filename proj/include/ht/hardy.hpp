#pragma once

#include <span>

#include "ht/htmatrix.hpp"
#include "ht/rational.hpp"
#include "ht/series.hpp"

namespace ht {

/// HElem-valued Hardy form sum_n g_n^k f_n together with its trace.
struct InnerValue {
    HElem value;
    double traced;
};

InnerValue hardy_inner(const PowerSeries& f, const PowerSeries& g, AdjointKind kind);

/// Circled Blaschke factor b_alpha = (q - alpha) star (1 - q alpha^cir)^{-star},
/// as the expansion -alpha + sum_{n>=1} q^n (1 - det alpha) alpha^{cir(n-1)}.
PowerSeries blaschke_circled(const HElem& alpha, int trunc);

/// Division remainder pair of f by the left factor (q - alpha):
/// f = (q - alpha) star h + r with r constant.  r equals the pointwise
/// evaluation f(alpha) up to the truncation tail.
struct DivisionByRoot {
    PowerSeries quotient;
    HElem remainder;
};

DivisionByRoot divide_by_root(const PowerSeries& f, const HElem& alpha);

/// Solve f = b star g for g, with b the kind-matched Blaschke factor at
/// alpha.  Throws NotAZero when f does not vanish at alpha.
PowerSeries solve_one_point(const PowerSeries& f, const HElem& alpha, AdjointKind kind,
                            double tol = 1e-8);

/// k-self-adjoint square root of s = 1 + eps, ||eps||_op < 1, by the
/// binomial series of sqrt(1 + eps).
HElem sqrt_selfadjoint(const HElem& s, AdjointKind kind);
HMatrix sqrt_selfadjoint(const HMatrix& s, AdjointKind kind);

/// Exact solution of Gamma - alpha Gamma alpha^[*] = 1, via the 8x8 real
/// linear system on the complex embedding of Gamma.
HElem gamma_stein_exact(const HElem& alpha);

/// Independent series oracle sum_n alpha^n alpha^{[*] n}.
HElem gamma_stein_series(const HElem& alpha, double tail = 1e-16);

struct BracketBlaschkeData {
    HElem alpha;
    HElem gamma;     // Gamma_alpha
    HElem gamma_inv;
    HElem l;         // L_alpha
    HElem k;         // K_alpha = L^{1/2}
};

struct BracketBlaschke {
    PowerSeries series;
    BracketBlaschkeData data;
    Realization realization; // (A, B, C, D) = (alpha^[*], Gamma^{-1} K, 1, -alpha K)
};

/// Bracket Blaschke factor B_alpha with its Stein data and realization.
/// Requires ||alpha||^2 / (1 - ||alpha||^2) < 1.
BracketBlaschke bracket_blaschke(const HElem& alpha, int trunc);

/// The rejected candidate factor C_alpha of the bracket theory, kept only
/// so that tests can show the division theorem fails for it.
PowerSeries bracket_rejected_factor(const HElem& alpha, int trunc);

struct ThetaInterpolation {
    Realization realization;
    PowerSeries series;
    HMatrix gram;
};

/// N-point circled interpolation multiplier Theta with
/// A = diag(alpha_j^cir), C = row of ones,
/// B = (I-A) G^{-1} (I-A^cir)^{-1} C^cir, D = 1 - C G^{-1} (I-A^cir)^{-1} C^cir.
ThetaInterpolation theta_interpolate(std::span<const HElem> points, int trunc);

struct ThetaCertificates {
    double max_point_residual; // division remainder at every alpha_j
    double stein_residual;     // A^cir G A + C^cir C - G
    double mix_residual;       // B^cir G A + D^cir C
    double unit_residual;      // B^cir G B + D^cir D - 1
    double orthonormality;     // sum_n theta_n^cir theta_{n+k} - delta_{k0}
};

ThetaCertificates certify_theta(const ThetaInterpolation& th, std::span<const HElem> points,
                                int kmax = 8);

/// Max norm of [Theta star q^u, Theta star q^v]_k - delta_{uv} over
/// u, v < n_monomials; small values certify the multiplication operator
/// is a form isometry on the tested span.
double isometry_gram(const PowerSeries& multiplier, AdjointKind kind, int n_monomials,
                     int trunc);

} // namespace ht
