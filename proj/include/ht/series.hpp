#pragma once

#include <vector>

#include "ht/hypercomplex.hpp"

namespace ht {

inline constexpr int kDefaultTrunc = 64;

/// Truncated left power series sum_n q_t^n alpha_n.  The truncation order
/// is the highest retained power; binary operations truncate to the
/// minimum of the two orders.
class PowerSeries {
public:
    PowerSeries(Scale s, std::vector<HElem> coeffs);

    static PowerSeries zero(Scale s, int trunc = kDefaultTrunc);
    static PowerSeries constant(const HElem& c, int trunc = kDefaultTrunc);
    /// The monomial q^n (coefficient 1 at n).
    static PowerSeries monomial(Scale s, int n, int trunc = kDefaultTrunc);

    Scale scale() const { return scale_; }
    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of q^n; zero beyond the truncation order.
    HElem coeff(int n) const;
    const std::vector<HElem>& coeffs() const { return coeffs_; }

    PowerSeries truncated(int order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
    /// Right multiplication by a constant: coefficients alpha_n c.
    friend PowerSeries operator*(const PowerSeries& f, const HElem& c);
    /// Left multiplication by a constant: coefficients c alpha_n.
    friend PowerSeries operator*(const HElem& c, const PowerSeries& f);
    friend PowerSeries operator*(double x, const PowerSeries& f);

private:
    Scale scale_;
    std::vector<HElem> coeffs_;
};

/// Cauchy star product: coefficient n is sum_{k<=n} alpha_{n-k} beta_k.
PowerSeries star_mul(const PowerSeries& f, const PowerSeries& g);

/// Star inverse by the lower-triangular coefficient recursion.  Requires
/// an invertible constant term.
PowerSeries star_inverse(const PowerSeries& f);

/// Neumann-series form sum_n g^{star n} of the inverse of 1 - g; kept as
/// an independent cross-check of star_inverse.
PowerSeries star_inverse_neumann(const PowerSeries& f);

/// Left-Horner evaluation sum q^n alpha_n.
HElem eval(const PowerSeries& f, const HElem& q);

/// Coefficientwise adjoint, f^cir or the bracket analogue.
PowerSeries conj_series(const PowerSeries& f, AdjointKind kind);

/// Backward shift R_0: coefficient n of the output is alpha_{n+1}.
PowerSeries backward_shift(const PowerSeries& f);

/// Closed form of sum_n q^n p^n:
/// (1 - q^cir p)(q q^cir p^2 - 2 re(q) p + 1)^{-1}.
HElem geo_closed_form(const HElem& q, const HElem& p);

/// Truncated Hardy kernel K(q,p) = sum_n q^n (p^cir)^n.
HElem hardy_kernel(const HElem& q, const HElem& p, int trunc);

} // namespace ht
