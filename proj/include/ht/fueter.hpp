#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ht/hypercomplex.hpp"
#include "ht/jet.hpp"
#include "ht/point4.hpp"
#include "ht/rational.hpp"

namespace ht {

using Jet2 = Jet2T<HElem>;

/// The four coordinate jets at a point, plus the scale.  Every
/// jet-evaluable function in this module is a callable on this carrier.
struct JetVars {
    std::array<Jet2, 4> x;
    Scale s;
};

JetVars jet_vars_at(const Point4& x, Scale s);

using JetFunction = std::function<Jet2(const JetVars&)>;

/// Vector part i x1 + j_t x2 + k_t x3 and its ring inverse vec^cir/det.
HElem vec_part(const Point4& x, Scale s);
/// Throws OnNullCone when |det vec| = |x1^2 - t(x2^2+x3^2)| <= tol.
HElem vec_inverse(const Point4& x, Scale s, double tol = 1e-12);

bool admissible(const Point4& x, Scale s, double margin = 0.1);

/// V_t-Fueter variable mu_l = x_l (1 + x0 vec^{-1}), l = 1..3.
HElem mu(int l, const Point4& x, Scale s);
/// mu^alpha = x^alpha (1 + x0 vec^{-1})^{|alpha|}.
HElem mu_pow(const MIdx3& alpha, const Point4& x, Scale s);

/// Scaled Fueter variables zeta_1 = x1 - x0 i,
/// zeta_l = x_l + sign(t) x0/sqrt|t| (j_t or k_t) for l = 2,3.
HElem zeta(int l, const Point4& x, Scale s);
/// Fully symmetrized power (1/|n|!) sum over all arrangements.
HElem zeta_pow(const MIdx3& n, const Point4& x, Scale s);

Jet2 jet_mu(int l, const JetVars& v);
Jet2 jet_mu_pow(const MIdx3& alpha, const JetVars& v);
Jet2 jet_zeta(int l, const JetVars& v);
Jet2 jet_zeta_pow(const MIdx3& n, const JetVars& v);
Jet2 jet_q_pow(int n, const JetVars& v);

enum class FueterOp { VT, GT, Nabla, NablaC, Laplace, RightNabla };

/// Assemble the chosen differential operator from the jet components of
/// f at x.  VT and GT additionally need the vector part invertible.
HElem apply_operator(const JetFunction& f, FueterOp op, const Point4& x, Scale s);

/// max over samples of ||V_t mu^alpha||_op / max(1, ||mu^alpha||_op).
double kernel_check_mu(const MIdx3& alpha, std::span<const Point4> samples, Scale s);

/// Coefficients c_{alpha,n} = (n!/alpha!) (i^{x a1} x j^{x a2} x k^{x a3})
/// of q^n = sum_{|alpha|=n} mu^alpha c_{alpha,n}.  Degree cap 12.
std::map<MIdx3, HElem> qn_expand(int n, Scale s);

/// ||q^n - sum mu^alpha c_{alpha,n}||_op maximized over the samples.
double qn_expand_residual(int n, std::span<const Point4> samples, Scale s);

struct TaylorRoundtrip {
    double regularity_residual; // nabla_t f at the samples
    double recovery_residual;   // f_n vs (1/n!) d^n f(0) by nested jets
};

/// Build f = f(0) + sum zeta^n f_n from the coefficients (degree <= 4)
/// and certify regularity and coefficient recovery.
TaylorRoundtrip fueter_taylor_roundtrip(const std::map<MIdx3, HElem>& coeffs, Scale s,
                                        std::span<const Point4> samples);

/// Truncated kernel sum_{|alpha|<=deg} mu^alpha(x) (mu^alpha(y))^k / alpha!
/// on the domain O_{r,rho}.
HElem arveson_kernel(const Point4& x, const Point4& y, Scale s, AdjointKind kind, int deg,
                     double r = 0.05, double rho = 1.0);

/// Bound M_{r,rho} = rho (1 + 3 rho^2 / r) with ||mu^alpha|| <= M^{|alpha|}.
double arveson_bound(double r, double rho);

struct MuBlaschke {
    std::map<MIdx3, HMatrix> coeffs; // 1x3 rows per multi-index
    MuRealization realization;
};

/// mu-variable Blaschke factor at a in R^4 with sum_l ||mu_l(a)|| < 1.
MuBlaschke mu_blaschke(const Point4& a, Scale s, AdjointKind kind, int degree);

/// || (1 - mu mu^k)^{1/2} mu (I3 - mu^k mu)^{-1/2} - mu ||.
double mu_blaschke_identity_residual(const Point4& a, Scale s, AdjointKind kind);

/// Unitarity defect of the 4x4 block matrix [[mu^k, S], [c, -mu]].
double mu_blaschke_unitarity_residual(const Point4& a, Scale s, AdjointKind kind);

/// Pointwise evaluation of a three-letter transfer function at x.
HMatrix mu_realization_eval(const MuRealization& r, const Point4& x, Scale s, int trunc_degree);

/// ||mu_u(x)||_E <= ||zeta_u(x)||_E for u = 1,2,3.
bool norm_inequality_check(const Point4& x, Scale s);

/// Sufficient (and necessary, for x0 != 0) condition for the inequality:
/// max_u x_u^2 (x1^2+|t|(x2^2+x3^2)) <= det(vec)^2.  Holds at every point
/// when t <= -1; fails near the null cone for t > 0.
bool norm_inequality_sufficient(const Point4& x, Scale s);

} // namespace ht
