#include "ht/rational.hpp"

#include <cmath>
#include <sstream>

namespace ht {

Realization::Realization(HMatrix a, HMatrix b, HMatrix c, HMatrix d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    if (A.rows() != A.cols()) throw DimensionMismatch("Realization: A not square");
    if (B.rows() != A.rows()) throw DimensionMismatch("Realization: B row count != state dim");
    if (C.cols() != A.rows()) throw DimensionMismatch("Realization: C column count != state dim");
    if (D.rows() != C.rows() || D.cols() != B.cols())
        throw DimensionMismatch("Realization: D shape != p x m");
    if (A.scale() != B.scale() || A.scale() != C.scale() || A.scale() != D.scale())
        throw ScaleMismatch("Realization: blocks carry different scales");
}

HMatrix taylor_coeff(const Realization& r, int k) {
    if (k < 0) throw std::invalid_argument("taylor_coeff: negative index");
    if (k == 0) return r.D;
    HMatrix v = r.B;
    for (int i = 1; i < k; ++i) v = r.A * v;
    return r.C * v;
}

std::vector<HMatrix> to_coeffs(const Realization& r, int trunc) {
    std::vector<HMatrix> out;
    out.reserve(static_cast<std::size_t>(trunc) + 1);
    out.push_back(r.D);
    HMatrix v = r.B;
    for (int k = 1; k <= trunc; ++k) {
        out.push_back(r.C * v);
        v = r.A * v;
    }
    return out;
}

PowerSeries to_series(const Realization& r, int trunc) {
    if (r.out_dim() != 1 || r.in_dim() != 1)
        throw DimensionMismatch("to_series: transfer function is not scalar");
    std::vector<HElem> c;
    c.reserve(static_cast<std::size_t>(trunc) + 1);
    for (const HMatrix& m : to_coeffs(r, trunc)) c.push_back(m.at(0, 0));
    return {r.scale(), std::move(c)};
}

HMatrix eval_real(const Realization& r, double x) {
    const HMatrix ix = HMatrix::identity(r.scale(), r.state_dim()) - x * r.A;
    return r.D + x * (r.C * minvert(ix) * r.B);
}

Realization rsum(const Realization& r1, const Realization& r2) {
    if (r1.out_dim() != r2.out_dim() || r1.in_dim() != r2.in_dim())
        throw DimensionMismatch("rsum: output/input dimensions differ");
    const Scale s = r1.scale();
    const int n1 = r1.state_dim(), n2 = r2.state_dim();
    HMatrix a(s, n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) a.set(i, j, r1.A.at(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) a.set(n1 + i, n1 + j, r2.A.at(i, j));
    HMatrix b(s, n1 + n2, r1.in_dim());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < r1.in_dim(); ++j) b.set(i, j, r1.B.at(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < r2.in_dim(); ++j) b.set(n1 + i, j, r2.B.at(i, j));
    HMatrix c(s, r1.out_dim(), n1 + n2);
    for (int i = 0; i < r1.out_dim(); ++i) {
        for (int j = 0; j < n1; ++j) c.set(i, j, r1.C.at(i, j));
        for (int j = 0; j < n2; ++j) c.set(i, n1 + j, r2.C.at(i, j));
    }
    return {a, b, c, r1.D + r2.D};
}

Realization rmul(const Realization& r1, const Realization& r2) {
    if (r1.in_dim() != r2.out_dim())
        throw DimensionMismatch("rmul: inner dimensions differ");
    const Scale s = r1.scale();
    const int n1 = r1.state_dim(), n2 = r2.state_dim();
    const HMatrix b1c2 = r1.B * r2.C;
    HMatrix a(s, n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) a.set(i, j, r1.A.at(i, j));
        for (int j = 0; j < n2; ++j) a.set(i, n1 + j, b1c2.at(i, j));
    }
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) a.set(n1 + i, n1 + j, r2.A.at(i, j));
    const HMatrix b1d2 = r1.B * r2.D;
    HMatrix b(s, n1 + n2, r2.in_dim());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < r2.in_dim(); ++j) b.set(i, j, b1d2.at(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < r2.in_dim(); ++j) b.set(n1 + i, j, r2.B.at(i, j));
    const HMatrix d1c2 = r1.D * r2.C;
    HMatrix c(s, r1.out_dim(), n1 + n2);
    for (int i = 0; i < r1.out_dim(); ++i) {
        for (int j = 0; j < n1; ++j) c.set(i, j, r1.C.at(i, j));
        for (int j = 0; j < n2; ++j) c.set(i, n1 + j, d1c2.at(i, j));
    }
    return {a, b, c, r1.D * r2.D};
}

Realization rinverse(const Realization& r, double tol) {
    if (r.out_dim() != r.in_dim())
        throw DimensionMismatch("rinverse: transfer function not square");
    HMatrix dinv = r.D;
    try {
        dinv = minvert(r.D, tol);
    } catch (const Error& e) {
        throw NonInvertibleD(std::string("rinverse: ") + e.what());
    }
    return {r.A - r.B * dinv * r.C, r.B * dinv, -(dinv * r.C), dinv};
}

CircledQuotient circled_quotient(const PowerSeries& p) {
    try {
        inverse(p.coeff(0));
    } catch (const NonInvertible& e) {
        throw NonInvertibleConstantTerm(std::string("circled_quotient: ") + e.what());
    }
    PowerSeries num = conj_series(p, AdjointKind::Circled);
    PowerSeries den = star_mul(p, num);
    return {std::move(num), std::move(den)};
}

HMatrix scale_left(const HElem& s, const HMatrix& m) {
    HMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, s * m.at(i, j));
    return r;
}

namespace {

using CoeffMap = std::map<MIdx3, HMatrix>;

CoeffMap star_convolve_letters(const CoeffMap& f, const std::array<HMatrix, 3>& letters) {
    CoeffMap out;
    for (const auto& [alpha, coeff] : f)
        for (int k = 0; k < 3; ++k) {
            MIdx3 beta = alpha;
            ++beta[static_cast<std::size_t>(k)];
            const HMatrix term = coeff * letters[static_cast<std::size_t>(k)];
            auto it = out.find(beta);
            if (it == out.end())
                out.emplace(beta, term);
            else
                it->second = it->second + term;
        }
    return out;
}

} // namespace

std::map<MIdx3, HMatrix> mu_transfer_coefficients(const MuRealization& r, int degree) {
    const Scale s = r.C.scale();
    const int n = r.A[0].rows();
    for (const HMatrix& ak : r.A)
        if (ak.rows() != n || ak.cols() != n)
            throw DimensionMismatch("mu_transfer_coefficients: A_k shape");
    // geometric: G = sum_n (sum_k mu_k A_k)^{star n}, as multi-index coefficients
    CoeffMap geo;
    geo.emplace(MIdx3{0, 0, 0}, HMatrix::identity(s, n));
    CoeffMap pow = geo;
    for (int d = 1; d <= degree; ++d) {
        pow = star_convolve_letters(pow, r.A);
        for (const auto& [alpha, coeff] : pow) {
            auto it = geo.find(alpha);
            if (it == geo.end())
                geo.emplace(alpha, coeff);
            else
                it->second = it->second + coeff;
        }
    }
    // right factor sum_k mu_k B_k, then the outer C
    CoeffMap out;
    for (const auto& [alpha, coeff] : geo) {
        if (alpha[0] + alpha[1] + alpha[2] >= degree) continue;
        for (int k = 0; k < 3; ++k) {
            MIdx3 beta = alpha;
            ++beta[static_cast<std::size_t>(k)];
            const HMatrix term = r.C * coeff * r.B[static_cast<std::size_t>(k)];
            auto it = out.find(beta);
            if (it == out.end())
                out.emplace(beta, term);
            else
                it->second = it->second + term;
        }
    }
    out.emplace(MIdx3{0, 0, 0}, r.D);
    return out;
}

HMatrix mu_realization_eval(const MuRealization& r, const std::array<HElem, 3>& mu_vals,
                            int trunc_degree) {
    const Scale s = r.C.scale();
    const int n = r.A[0].rows();
    HMatrix m = HMatrix::zero(s, n, n);
    for (int k = 0; k < 3; ++k)
        m = m + scale_left(mu_vals[static_cast<std::size_t>(k)], r.A[static_cast<std::size_t>(k)]);
    const double nm = mnorm_op(m);
    if (!(nm < 1.0)) {
        std::ostringstream os;
        os << "mu_realization_eval: ||sum mu_k A_k||_op = " << nm << " >= 1";
        throw NotContractive(os.str());
    }
    HMatrix value = r.D;
    for (const auto& [alpha, coeff] : mu_transfer_coefficients(r, trunc_degree)) {
        if (alpha == MIdx3{0, 0, 0}) continue;
        HElem mono = HElem::one(s);
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < alpha[static_cast<std::size_t>(k)]; ++j)
                mono = mono * mu_vals[static_cast<std::size_t>(k)];
        value = value + scale_left(mono, coeff);
    }
    return value;
}

} // namespace ht
