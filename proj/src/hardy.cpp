#include "ht/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace ht {

InnerValue hardy_inner(const PowerSeries& f, const PowerSeries& g, AdjointKind kind) {
    if (f.scale() != g.scale()) throw ScaleMismatch("hardy_inner: scale mismatch");
    if (f.trunc() != g.trunc())
        throw std::invalid_argument("hardy_inner: truncation orders differ");
    HElem acc = HElem::zero(f.scale());
    for (int n = 0; n <= f.trunc(); ++n)
        acc = acc + adjoint(g.coeff(n), kind) * f.coeff(n);
    return {acc, 2.0 * re(acc)};
}

PowerSeries blaschke_circled(const HElem& alpha, int trunc) {
    if (!(norm(alpha, NormKind::Op) < 1.0))
        throw NotInUnitBall("blaschke_circled: ||alpha||_op >= 1");
    const Scale s = alpha.scale();
    const double factor = 1.0 - det(alpha); // I - alpha alpha^cir is scalar
    std::vector<HElem> c;
    c.reserve(static_cast<std::size_t>(trunc) + 1);
    c.push_back(-alpha);
    HElem pw = HElem::one(s);
    const HElem ac = adjoint(alpha, AdjointKind::Circled);
    for (int n = 1; n <= trunc; ++n) {
        c.push_back(factor * pw);
        pw = pw * ac;
    }
    return {s, std::move(c)};
}

DivisionByRoot divide_by_root(const PowerSeries& f, const HElem& alpha) {
    if (f.scale() != alpha.scale()) throw ScaleMismatch("divide_by_root: scale mismatch");
    const int n = f.trunc();
    // f = (q - alpha) star h + r: h_{m-1} = f_m + alpha h_m, downwards from h_n = 0.
    std::vector<HElem> h(static_cast<std::size_t>(std::max(n, 1)), HElem::zero(f.scale()));
    HElem carry = HElem::zero(f.scale());
    for (int m = n; m >= 1; --m) {
        carry = f.coeff(m) + alpha * carry;
        h[static_cast<std::size_t>(m - 1)] = carry;
    }
    const HElem r = f.coeff(0) + alpha * carry;
    return {PowerSeries(f.scale(), std::move(h)), r};
}

PowerSeries solve_one_point(const PowerSeries& f, const HElem& alpha, AdjointKind kind,
                            double tol) {
    if (!(norm(alpha, NormKind::Op) < 1.0))
        throw NotInUnitBall("solve_one_point: ||alpha||_op >= 1");
    const HElem at = eval(f, alpha);
    if (norm(at, NormKind::Op) > tol) {
        std::ostringstream os;
        os << "solve_one_point: ||f(alpha)||_op = " << norm(at, NormKind::Op) << " > " << tol;
        throw NotAZero(os.str());
    }
    const Scale s = f.scale();
    const DivisionByRoot div = divide_by_root(f, alpha);
    if (kind == AdjointKind::Circled) {
        // f = (q-alpha) star (1-q alpha^cir)^{-star} star g, so
        // g = (1 - q alpha^cir) star h.
        PowerSeries lin = PowerSeries::zero(s, div.quotient.trunc());
        lin = lin + PowerSeries::constant(HElem::one(s), div.quotient.trunc());
        lin = lin - PowerSeries::monomial(s, 1, div.quotient.trunc()) *
                        adjoint(alpha, AdjointKind::Circled);
        return star_mul(lin, div.quotient);
    }
    // Bracket: f = (q-alpha) star (1 - q Gamma alpha^[*] Gamma^{-1})^{-star} K_alpha star g.
    const BracketBlaschke bb = bracket_blaschke(alpha, std::max(1, f.trunc()));
    const HElem m = bb.data.gamma * adjoint(alpha, AdjointKind::Bracket) * bb.data.gamma_inv;
    HElem kinv = HElem::zero(s);
    try {
        kinv = inverse(bb.data.k);
    } catch (const NonInvertible& e) {
        throw NonInvertible(std::string("solve_one_point: K_alpha not invertible: ") + e.what());
    }
    PowerSeries lin = PowerSeries::constant(HElem::one(s), div.quotient.trunc()) -
                      PowerSeries::monomial(s, 1, div.quotient.trunc()) * m;
    return kinv * star_mul(lin, div.quotient);
}

namespace {

template <class V>
V sqrt_binomial(const V& eps, const V& one, double eps_norm, const char* what,
                double (*vnorm)(const V&)) {
    if (!(eps_norm < 1.0)) {
        std::ostringstream os;
        os << what << ": ||s - 1||_op = " << eps_norm << " >= 1";
        throw NotContractivePerturbation(os.str());
    }
    V acc = one;
    V pw = eps;
    double gamma = 0.5;
    for (int n = 1; n <= 20000; ++n) {
        const V term = gamma * pw;
        acc = acc + term;
        if (vnorm(term) < 1e-16) break;
        pw = pw * eps;
        gamma *= (1.5 - (n + 1)) / (n + 1);
    }
    return acc;
}

double helem_op(const HElem& q) { return norm(q, NormKind::Op); }
double hmat_op(const HMatrix& m) { return mnorm_op(m); }

} // namespace

HElem sqrt_selfadjoint(const HElem& s, AdjointKind kind) {
    (void)kind; // the series preserves k-self-adjointness of the input
    const HElem eps = s - HElem::one(s.scale());
    return sqrt_binomial<HElem>(eps, HElem::one(s.scale()), helem_op(eps), "sqrt_selfadjoint",
                                &helem_op);
}

HMatrix sqrt_selfadjoint(const HMatrix& s, AdjointKind kind) {
    (void)kind;
    if (s.rows() != s.cols()) throw DimensionMismatch("sqrt_selfadjoint: matrix not square");
    const HMatrix eps = s - HMatrix::identity(s.scale(), s.rows());
    return sqrt_binomial<HMatrix>(eps, HMatrix::identity(s.scale(), s.rows()), hmat_op(eps),
                                  "sqrt_selfadjoint", &hmat_op);
}

namespace {

// Solve the 8x8 real system by Gaussian elimination with partial pivots.
std::vector<double> solve_linear(std::vector<double> m, std::vector<double> rhs, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
        if (std::abs(m[piv * n + col]) < 1e-14)
            throw NonInvertible("gamma_stein_exact: singular Stein operator");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
            std::swap(rhs[piv], rhs[col]);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m[r * n + col] / m[col * n + col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i * n + i];
    return x;
}

std::array<double, 8> vec8(const Mat2c& m) {
    return {m.m00.real(), m.m00.imag(), m.m01.real(), m.m01.imag(),
            m.m10.real(), m.m10.imag(), m.m11.real(), m.m11.imag()};
}

Mat2c mat_from_vec8(const std::array<double, 8>& v) {
    return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

} // namespace

HElem gamma_stein_exact(const HElem& alpha) {
    const Mat2c am = alpha.to_matrix();
    const Mat2c bm = adjoint(alpha, AdjointKind::Bracket).to_matrix();
    // L(G) = G - am G bm, vectorized over the 8 real parameters of G.
    std::vector<double> op(64);
    for (int j = 0; j < 8; ++j) {
        std::array<double, 8> e{};
        e[static_cast<std::size_t>(j)] = 1.0;
        const Mat2c basis = mat_from_vec8(e);
        const Mat2c image = basis - am * basis * bm;
        const std::array<double, 8> col = vec8(image);
        for (int i = 0; i < 8; ++i) op[i * 8 + j] = col[static_cast<std::size_t>(i)];
    }
    const std::array<double, 8> rhs8 = vec8(Mat2c{1.0, 0.0, 0.0, 1.0});
    const std::vector<double> x =
        solve_linear(std::move(op), std::vector<double>(rhs8.begin(), rhs8.end()), 8);
    const Mat2c g = mat_from_vec8({x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]});
    // The solution lies in H_t: g = [[a, t b], [conj b, conj a]].
    const double t = alpha.t();
    return {alpha.scale(), g.m00, g.m01 / t};
}

HElem gamma_stein_series(const HElem& alpha, double tail) {
    const double na = norm(alpha, NormKind::Op);
    if (!(na < 1.0)) throw NotContractive("gamma_stein_series: ||alpha||_op >= 1");
    HElem acc = HElem::one(alpha.scale());
    HElem an = HElem::one(alpha.scale());
    HElem bn = HElem::one(alpha.scale());
    const HElem ab = adjoint(alpha, AdjointKind::Bracket);
    for (int n = 1; n < 100000; ++n) {
        an = an * alpha;
        bn = bn * ab;
        const HElem term = an * bn;
        acc = acc + term;
        if (norm(term, NormKind::Op) < tail * norm(acc, NormKind::Op)) break;
    }
    return acc;
}

BracketBlaschke bracket_blaschke(const HElem& alpha, int trunc) {
    const Scale s = alpha.scale();
    const double na = norm(alpha, NormKind::Op);
    if (!(na < 1.0) || !(na * na / (1.0 - na * na) < 1.0)) {
        std::ostringstream os;
        os << "bracket_blaschke: ||alpha||^2/(1-||alpha||^2) >= 1 (||alpha|| = " << na << ")";
        throw SmallnessViolated(os.str());
    }
    const HElem gamma = gamma_stein_exact(alpha);
    HElem gamma_inv = HElem::zero(s);
    HElem l = HElem::zero(s);
    HElem k = HElem::zero(s);
    try {
        gamma_inv = inverse(gamma);
        const HElem ab = adjoint(alpha, AdjointKind::Bracket);
        l = gamma - gamma * ab * gamma_inv * alpha * gamma;
        k = sqrt_selfadjoint(l, AdjointKind::Bracket);
    } catch (const NonInvertible& e) {
        throw NonInvertible(std::string("bracket_blaschke: ") + e.what());
    }

    // B_alpha = -alpha K + sum_{n>=1} q^n alpha^{[*](n-1)} Gamma^{-1} K
    std::vector<HElem> c;
    c.reserve(static_cast<std::size_t>(trunc) + 1);
    c.push_back(-(alpha * k));
    const HElem ab = adjoint(alpha, AdjointKind::Bracket);
    const HElem gk = gamma_inv * k;
    HElem pw = HElem::one(s);
    for (int n = 1; n <= trunc; ++n) {
        c.push_back(pw * gk);
        pw = pw * ab;
    }
    PowerSeries series(s, std::move(c));

    auto one_by_one = [&](const HElem& v) {
        HMatrix m(s, 1, 1);
        m.set(0, 0, v);
        return m;
    };
    Realization real(one_by_one(ab), one_by_one(gk), one_by_one(HElem::one(s)),
                     one_by_one(-(alpha * k)));
    return {std::move(series), {alpha, gamma, gamma_inv, l, k}, std::move(real)};
}

PowerSeries bracket_rejected_factor(const HElem& alpha, int trunc) {
    const Scale s = alpha.scale();
    if (!(norm(alpha, NormKind::Op) < 1.0))
        throw NotInUnitBall("bracket_rejected_factor: ||alpha||_op >= 1");
    const HElem ab = adjoint(alpha, AdjointKind::Bracket);
    const HElem left = inverse(sqrt_selfadjoint(HElem::one(s) - alpha * ab, AdjointKind::Bracket));
    const HElem right = sqrt_selfadjoint(HElem::one(s) - ab * alpha, AdjointKind::Bracket);
    // (1 - alpha alpha^[*])^{-1/2} star (q - alpha) star (1 - q alpha^[*])^{-star} (1 - alpha^[*] alpha)^{1/2}
    PowerSeries lin = PowerSeries::monomial(s, 1, trunc) - PowerSeries::constant(alpha, trunc);
    PowerSeries res = PowerSeries::constant(HElem::one(s), trunc) -
                      PowerSeries::monomial(s, 1, trunc) * ab;
    return left * star_mul(lin, star_inverse(res)) * right;
}

ThetaInterpolation theta_interpolate(std::span<const HElem> points, int trunc) {
    if (points.empty()) throw std::invalid_argument("theta_interpolate: no points");
    const Scale s = points.front().scale();
    const int n = static_cast<int>(points.size());

    const HMatrix gram = gram_points(points, AdjointKind::Circled);
    HMatrix gram_inv = gram;
    try {
        gram_inv = minvert(gram);
    } catch (const Error& e) {
        throw GramNotInvertible(std::string("theta_interpolate: ") + e.what());
    }

    std::vector<HElem> diag_entries;
    diag_entries.reserve(points.size());
    for (const HElem& p : points) diag_entries.push_back(adjoint(p, AdjointKind::Circled));
    const HMatrix a = diag(diag_entries);
    HMatrix c(s, 1, n);
    for (int j = 0; j < n; ++j) c.set(0, j, HElem::one(s));

    const HMatrix eye = HMatrix::identity(s, n);
    const HMatrix resolvent = minvert(eye - madjoint(a, AdjointKind::Circled));
    const HMatrix ccirc = madjoint(c, AdjointKind::Circled);
    const HMatrix b = (eye - a) * gram_inv * resolvent * ccirc;
    const HMatrix d = HMatrix::identity(s, 1) - c * gram_inv * resolvent * ccirc;

    Realization real(a, b, c, d);
    PowerSeries series = to_series(real, trunc);
    return {std::move(real), std::move(series), gram};
}

ThetaCertificates certify_theta(const ThetaInterpolation& th, std::span<const HElem> points,
                                int kmax) {
    ThetaCertificates cert{0.0, 0.0, 0.0, 0.0, 0.0};
    for (const HElem& p : points) {
        const DivisionByRoot div = divide_by_root(th.series, p);
        cert.max_point_residual =
            std::max(cert.max_point_residual, norm(div.remainder, NormKind::Op));
    }
    const HMatrix& g = th.gram;
    const auto adj = [](const HMatrix& m) { return madjoint(m, AdjointKind::Circled); };
    cert.stein_residual =
        max_entry_op_norm(adj(th.realization.A) * g * th.realization.A +
                          adj(th.realization.C) * th.realization.C - g);
    cert.mix_residual = max_entry_op_norm(adj(th.realization.B) * g * th.realization.A +
                                          adj(th.realization.D) * th.realization.C);
    cert.unit_residual =
        max_entry_op_norm(adj(th.realization.B) * g * th.realization.B +
                          adj(th.realization.D) * th.realization.D -
                          HMatrix::identity(g.scale(), 1));
    for (int k = 0; k <= kmax; ++k) {
        HElem acc = HElem::zero(g.scale());
        for (int m = 0; m + k <= th.series.trunc(); ++m)
            acc = acc + adjoint(th.series.coeff(m), AdjointKind::Circled) * th.series.coeff(m + k);
        if (k == 0) acc = acc - HElem::one(g.scale());
        cert.orthonormality = std::max(cert.orthonormality, norm(acc, NormKind::Op));
    }
    return cert;
}

double isometry_gram(const PowerSeries& multiplier, AdjointKind kind, int n_monomials,
                     int trunc) {
    if (trunc < n_monomials + 8)
        throw std::invalid_argument("isometry_gram: truncation too small for monomial count");
    const PowerSeries f = multiplier.truncated(trunc);
    double dev = 0.0;
    for (int u = 0; u < n_monomials; ++u)
        for (int v = 0; v < n_monomials; ++v) {
            // [f star q^u, f star q^v]_k = sum_n adj(f_{n-v}) f_{n-u}
            HElem acc = HElem::zero(f.scale());
            for (int m = 0; m <= trunc; ++m) {
                const int iu = m - u, iv = m - v;
                if (iu < 0 || iv < 0) continue;
                acc = acc + adjoint(f.coeff(iv), kind) * f.coeff(iu);
            }
            if (u == v) acc = acc - HElem::one(f.scale());
            dev = std::max(dev, norm(acc, NormKind::Op));
        }
    return dev;
}

} // namespace ht
