#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ht/errors.hpp"

namespace ht {

using cplx = std::complex<double>;

/// The fixed non-zero scale t of the ring H_t.  t = -1 gives the
/// quaternions, t = 1 the split quaternions.
class Scale {
public:
    explicit Scale(double t);

    double t() const { return t_; }
    double sign() const { return t_ > 0 ? 1.0 : -1.0; }

    friend bool operator==(Scale a, Scale b) { return a.t_ == b.t_; }
    friend bool operator!=(Scale a, Scale b) { return a.t_ != b.t_; }

private:
    double t_;
};

/// 2x2 complex matrix, row major.  Only used for the embedding of H_t
/// into C^{2x2} (regular adjoint, norm checks, eigensolves).
struct Mat2c {
    cplx m00{}, m01{}, m10{}, m11{};

    friend Mat2c operator+(const Mat2c& x, const Mat2c& y) {
        return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
    }
    friend Mat2c operator-(const Mat2c& x, const Mat2c& y) {
        return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
    }
    friend Mat2c operator*(const Mat2c& x, const Mat2c& y) {
        return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
                x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
    }

    Mat2c conj_transpose() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    cplx trace() const { return m00 + m11; }

    double max_abs() const;

    /// Largest eigenvalue of a Hermitian positive semidefinite matrix,
    /// by the closed 2x2 formula.
    double eigmax_hermitian() const;
};

enum class AdjointKind { Circled, Bracket, Regular };
enum class NormKind { HS, Op, Euclid };
enum class FormKind { Circled, Bracket, Euclid };

/// One scaled hypercomplex number q_t = a + b j_t, stored as the complex
/// pair (a, b) plus its scale.  Immutable by convention: every operation
/// returns a fresh value.
class HElem {
public:
    HElem(Scale s, cplx a, cplx b);

    /// From real coordinates q = x0 + x1 i + x2 j_t + x3 k_t.
    static HElem from_coords(Scale s, double x0, double x1, double x2, double x3);

    static HElem zero(Scale s) { return {s, 0.0, 0.0}; }
    static HElem one(Scale s) { return {s, 1.0, 0.0}; }
    static HElem unit_i(Scale s) { return {s, {0.0, 1.0}, 0.0}; }
    static HElem unit_j(Scale s) { return {s, 0.0, 1.0}; }
    static HElem unit_k(Scale s) { return {s, 0.0, {0.0, 1.0}}; }

    Scale scale() const { return scale_; }
    double t() const { return scale_.t(); }
    cplx a() const { return a_; }
    cplx b() const { return b_; }

    double x0() const { return a_.real(); }
    double x1() const { return a_.imag(); }
    double x2() const { return b_.real(); }
    double x3() const { return b_.imag(); }

    /// The embedding [[a, t b], [conj b, conj a]].
    Mat2c to_matrix() const;

    bool bitwise_equal(const HElem& o) const {
        return scale_ == o.scale_ && a_ == o.a_ && b_ == o.b_;
    }

    HElem operator-() const { return {scale_, -a_, -b_}; }

    friend HElem operator+(const HElem& p, const HElem& q);
    friend HElem operator-(const HElem& p, const HElem& q);
    /// The scaled product (a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2)).
    friend HElem operator*(const HElem& p, const HElem& q);
    friend HElem operator*(double x, const HElem& q) { return {q.scale_, x * q.a_, x * q.b_}; }
    friend HElem operator*(const HElem& q, double x) { return x * q; }
    friend HElem operator/(const HElem& q, double x) { return {q.scale_, q.a_ / x, q.b_ / x}; }

private:
    Scale scale_;
    cplx a_, b_;
};

HElem mul(const HElem& p, const HElem& q);

/// Circled / bracket adjoint.  Regular is rejected here because it leaves
/// H_t; use regular_adjoint for the raw matrix.
HElem adjoint(const HElem& q, AdjointKind kind);

/// The matrix adjoint [[conj a, b], [t conj b, a]], which is not an HElem
/// unless t = +-1.  Only needed inside norm computations and tests.
Mat2c regular_adjoint(const HElem& q);

double det(const HElem& q);
double re(const HElem& q);

/// q^{-1} = q^cir / det q.  Throws NonInvertible when |det q| <= tol;
/// the default tolerance scales like the squared operator norm.
HElem inverse(const HElem& q);
HElem inverse(const HElem& q, double tol);
double default_inverse_tol(const HElem& q);

double norm(const HElem& q, NormKind kind);

/// Real symmetric forms.  Circled and Bracket are the traces
/// Tr(q^cir p) and Tr(q^[*] p); Euclid is the scaled Euclidean product.
double form(const HElem& p, const HElem& q, FormKind kind);

/// Action of the signature operator J_cir (resp. J_[*]) on coordinates,
/// J_cir = diag(1,1,-t/|t|,-t/|t|), J_[*] = diag(1,-1,t/|t|,-t/|t|).
/// Satisfies form(q,q,k) = 2 formE(q, J_k q).
HElem signature_apply(const HElem& q, FormKind kind);

struct SignatureResult {
    std::array<std::array<double, 4>, 4> gram;
    int n_plus = 0;
    int n_minus = 0;
};

/// Gram matrix of the basis {1, i, j_t, k_t} under the chosen form,
/// with eigenvalue sign counts (cutoff for the zero decision).
SignatureResult signature_basis_gram(Scale s, FormKind kind, double cutoff = 1e-10);

/// (1/N!) sum over all permutations of the ordered products.  Equal
/// elements are grouped so only distinct orderings are enumerated.
HElem symmetrized_product(std::span<const HElem> hs);

/// Both points on the sphere [alpha]: same real part and same det.
bool sphere_contains(const HElem& center, const HElem& candidate, double tol);

/// Eigenvalues of a real symmetric n x n matrix by cyclic Jacobi.
std::vector<double> symmetric_eigenvalues(std::vector<double> m, int n);

} // namespace ht
