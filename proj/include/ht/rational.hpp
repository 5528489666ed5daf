#pragma once

#include <array>
#include <map>

#include "ht/htmatrix.hpp"
#include "ht/series.hpp"

namespace ht {

/// State-space realization D + q star C star (I - q star A)^{-star} star B
/// with A n x n, B n x m, C p x n, D p x m over one scale.
struct Realization {
    HMatrix A, B, C, D;

    Realization(HMatrix a, HMatrix b, HMatrix c, HMatrix d);

    int state_dim() const { return A.rows(); }
    int out_dim() const { return C.rows(); }
    int in_dim() const { return B.cols(); }
    Scale scale() const { return A.scale(); }
};

/// Taylor coefficient f_0 = D, f_k = C A^{k-1} B.
HMatrix taylor_coeff(const Realization& r, int k);

/// Coefficient list f_0 .. f_trunc.
std::vector<HMatrix> to_coeffs(const Realization& r, int trunc);

/// Scalar (p = m = 1) transfer function as a power series.
PowerSeries to_series(const Realization& r, int trunc);

/// Pointwise resolvent value D + x C (I - x A)^{-1} B at real x.
HMatrix eval_real(const Realization& r, double x);

/// Parallel sum: block-diagonal A, stacked B, concatenated C, D1 + D2.
Realization rsum(const Realization& r1, const Realization& r2);

/// Cascade product with A = [[A1, B1 C2], [0, A2]].
Realization rmul(const Realization& r1, const Realization& r2);

/// (A - B D^{-1} C, B D^{-1}, -D^{-1} C, D^{-1}); throws NonInvertibleD.
Realization rinverse(const Realization& r, double tol = 0.0);

struct CircledQuotient {
    PowerSeries numerator;   // P^cir
    PowerSeries denominator; // P star P^cir, real coefficients
};

/// P^{-star} = P^cir (P star P^cir)^{-star} for a polynomial P with
/// invertible constant term.
CircledQuotient circled_quotient(const PowerSeries& p);

using MIdx3 = std::array<int, 3>;

/// Three-letter transfer function
/// D + C star (I_N - sum_k mu_k A_k)^{-star} star (sum_k mu_k B_k)
/// in the commuting mu (or zeta) variables.
struct MuRealization {
    std::array<HMatrix, 3> A;
    std::array<HMatrix, 3> B;
    HMatrix C, D;
};

/// Star-geometric expansion of the transfer function: multi-index
/// coefficients of degree <= degree, so that f = D + sum mu^alpha M_alpha.
std::map<MIdx3, HMatrix> mu_transfer_coefficients(const MuRealization& r, int degree);

/// Pointwise evaluation given the values mu_k(x); checks the contraction
/// ||sum mu_k(x) A_k||_op < 1.
HMatrix mu_realization_eval(const MuRealization& r, const std::array<HElem, 3>& mu_vals,
                            int trunc_degree);

HMatrix scale_left(const HElem& s, const HMatrix& m);

} // namespace ht
