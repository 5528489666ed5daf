#pragma once

#include <vector>

#include "ht/hypercomplex.hpp"

namespace ht {

/// Rectangular matrix over H_t.  All entries share one scale; storage is
/// row major.  Values are immutable after construction apart from the
/// explicit set() used while assembling.
class HMatrix {
public:
    HMatrix(Scale s, int rows, int cols);
    HMatrix(Scale s, int rows, int cols, std::vector<HElem> entries);

    static HMatrix identity(Scale s, int n);
    static HMatrix zero(Scale s, int rows, int cols) { return {s, rows, cols}; }

    Scale scale() const { return scale_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const HElem& at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, const HElem& v);

    const std::vector<HElem>& entries() const { return entries_; }

    HMatrix operator-() const;
    friend HMatrix operator+(const HMatrix& x, const HMatrix& y);
    friend HMatrix operator-(const HMatrix& x, const HMatrix& y);
    friend HMatrix operator*(const HMatrix& x, const HMatrix& y);
    friend HMatrix operator*(double x, const HMatrix& m);

    HMatrix block(int r0, int c0, int nr, int nc) const;

    /// Complex embedding, a 2*rows x 2*cols row-major matrix.
    std::vector<cplx> embed() const;

private:
    int index(int r, int c) const { return r * cols_ + c; }

    Scale scale_;
    int rows_, cols_;
    std::vector<HElem> entries_;
};

/// Conjugate transpose with entrywise circled/bracket adjoint.
HMatrix madjoint(const HMatrix& m, AdjointKind kind);

/// Recursive 2x2-block Schur-complement inversion.  The leading principal
/// block is tried first; on failure the trailing block.  Throws
/// NoInvertiblePivot when neither factorization succeeds.
HMatrix minvert(const HMatrix& m, double tol = 0.0);

/// Spectral norm of the complex embedding, by power iteration on M* M
/// (1e-12 relative residual stop, 1e4 iteration cap).
double mnorm_op(const HMatrix& m);

/// Frobenius-style norm: sqrt of the summed squared HS entry norms.
double mnorm_hs(const HMatrix& m);

double max_entry_op_norm(const HMatrix& m);

/// Unique solution G = sum_n (A^k)^n C^k C A^n of the Stein equation
/// G - A^k G A = C^k C, summed until the term norm falls below
/// 1e-15 * ||G||.  Requires mnorm_op(A) < 1.
HMatrix stein_solve(const HMatrix& a, const HMatrix& c, AdjointKind kind);

/// Interpolation Gram matrix (G)_{uv} = sum_n alpha_u^n (alpha_v^k)^n,
/// formed through stein_solve with A = diag(alpha_j^k) and a row of ones.
HMatrix gram_points(std::span<const HElem> points, AdjointKind kind);

HMatrix diag(std::span<const HElem> entries);

} // namespace ht
