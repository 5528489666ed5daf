#include "ht/hypercomplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ht/symmetrized.hpp"

namespace ht {

namespace {

void require_same_scale(const HElem& p, const HElem& q, const char* op) {
    if (p.scale() != q.scale()) {
        std::ostringstream os;
        os << op << ": scale mismatch (t = " << p.t() << " vs " << q.t() << ")";
        throw ScaleMismatch(os.str());
    }
}

} // namespace

Scale::Scale(double t) : t_(t) {
    if (!(std::abs(t) > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("Scale: t must be finite and non-zero");
}

double Mat2c::max_abs() const {
    return std::max(std::max(std::abs(m00), std::abs(m01)),
                    std::max(std::abs(m10), std::abs(m11)));
}

double Mat2c::eigmax_hermitian() const {
    const double tr = m00.real() + m11.real();
    const double dt = (m00 * m11 - m01 * m10).real();
    const double disc = std::max(tr * tr - 4.0 * dt, 0.0);
    return 0.5 * (tr + std::sqrt(disc));
}

HElem::HElem(Scale s, cplx a, cplx b) : scale_(s), a_(a), b_(b) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !std::isfinite(b.real()) || !std::isfinite(b.imag()))
        throw std::invalid_argument("HElem: components must be finite");
}

HElem HElem::from_coords(Scale s, double x0, double x1, double x2, double x3) {
    return {s, {x0, x1}, {x2, x3}};
}

Mat2c HElem::to_matrix() const {
    return {a_, t() * b_, std::conj(b_), std::conj(a_)};
}

HElem operator+(const HElem& p, const HElem& q) {
    require_same_scale(p, q, "add");
    return {p.scale_, p.a_ + q.a_, p.b_ + q.b_};
}

HElem operator-(const HElem& p, const HElem& q) {
    require_same_scale(p, q, "sub");
    return {p.scale_, p.a_ - q.a_, p.b_ - q.b_};
}

HElem operator*(const HElem& p, const HElem& q) {
    require_same_scale(p, q, "mul");
    const double t = p.t();
    return {p.scale_,
            p.a_ * q.a_ + t * p.b_ * std::conj(q.b_),
            p.a_ * q.b_ + p.b_ * std::conj(q.a_)};
}

HElem mul(const HElem& p, const HElem& q) { return p * q; }

HElem adjoint(const HElem& q, AdjointKind kind) {
    switch (kind) {
    case AdjointKind::Circled:
        return {q.scale(), std::conj(q.a()), -q.b()};
    case AdjointKind::Bracket:
        return {q.scale(), q.a(), std::conj(q.b())};
    case AdjointKind::Regular:
        break;
    }
    throw std::invalid_argument("adjoint: Regular leaves H_t, use regular_adjoint");
}

Mat2c regular_adjoint(const HElem& q) {
    return {std::conj(q.a()), q.b(), q.t() * std::conj(q.b()), q.a()};
}

double det(const HElem& q) {
    return std::norm(q.a()) - q.t() * std::norm(q.b());
}

double re(const HElem& q) { return q.a().real(); }

double default_inverse_tol(const HElem& q) {
    const double n = norm(q, NormKind::Op);
    return 1e-12 * std::max(1.0, n * n);
}

HElem inverse(const HElem& q) { return inverse(q, default_inverse_tol(q)); }

HElem inverse(const HElem& q, double tol) {
    const double d = det(q);
    if (std::abs(d) <= tol) {
        std::ostringstream os;
        os << "inverse: |det| = " << std::abs(d) << " <= tol = " << tol;
        throw NonInvertible(os.str());
    }
    return adjoint(q, AdjointKind::Circled) / d;
}

double norm(const HElem& q, NormKind kind) {
    const double t = q.t();
    const double A = std::norm(q.a());
    const double B = std::norm(q.b());
    switch (kind) {
    case NormKind::HS:
        return std::sqrt(2.0 * A + (1.0 + t * t) * B);
    case NormKind::Op: {
        const double disc = B * B * (1.0 - t * t) * (1.0 - t * t) +
                            4.0 * A * B * (1.0 + t) * (1.0 + t);
        return std::sqrt(0.5 * (B * (1.0 + t * t) + 2.0 * A + std::sqrt(disc)));
    }
    case NormKind::Euclid:
        return std::sqrt(A + std::abs(t) * B);
    }
    return 0.0;
}

double form(const HElem& p, const HElem& q, FormKind kind) {
    require_same_scale(p, q, "form");
    const double t = p.t();
    switch (kind) {
    case FormKind::Circled:
        // Tr(q^cir p) = 2 Re(a conj c) - 2t Re(b conj d), p = (a,b), q = (c,d)
        return 2.0 * (p.a() * std::conj(q.a())).real() -
               2.0 * t * (p.b() * std::conj(q.b())).real();
    case FormKind::Bracket:
        // Tr(q^[*] p) = 2 Re(a c) + 2t Re(b d)
        return 2.0 * (p.a() * q.a()).real() + 2.0 * t * (p.b() * q.b()).real();
    case FormKind::Euclid:
        return (p.a() * std::conj(q.a())).real() +
               std::abs(t) * (p.b() * std::conj(q.b())).real();
    }
    return 0.0;
}

HElem signature_apply(const HElem& q, FormKind kind) {
    const double s = q.scale().sign();
    switch (kind) {
    case FormKind::Circled:
        return {q.scale(), q.a(), -s * q.b()};
    case FormKind::Bracket:
        return {q.scale(), std::conj(q.a()), s * std::conj(q.b())};
    case FormKind::Euclid:
        return q;
    }
    return q;
}

SignatureResult signature_basis_gram(Scale s, FormKind kind, double cutoff) {
    const std::array<HElem, 4> basis = {HElem::one(s), HElem::unit_i(s),
                                        HElem::unit_j(s), HElem::unit_k(s)};
    SignatureResult r;
    std::vector<double> flat(16);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            r.gram[u][v] = form(basis[u], basis[v], kind);
            flat[4 * u + v] = r.gram[u][v];
        }
    for (double ev : symmetric_eigenvalues(flat, 4)) {
        if (ev > cutoff)
            ++r.n_plus;
        else if (ev < -cutoff)
            ++r.n_minus;
    }
    return r;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> m, int n) {
    auto at = [&](int i, int j) -> double& { return m[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double sgn = theta >= 0 ? 1.0 : -1.0;
                const double tt = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double sn = tt * c;
                for (int k = 0; k < n; ++k) {
                    const double mkp = at(k, p), mkq = at(k, q);
                    at(k, p) = c * mkp - sn * mkq;
                    at(k, q) = sn * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = at(p, k), mqk = at(q, k);
                    at(p, k) = c * mpk - sn * mqk;
                    at(q, k) = sn * mpk + c * mqk;
                }
            }
    }
    std::vector<double> evs(n);
    for (int i = 0; i < n; ++i) evs[i] = at(i, i);
    std::sort(evs.begin(), evs.end());
    return evs;
}

HElem symmetrized_product(std::span<const HElem> hs) {
    if (hs.empty()) throw std::invalid_argument("symmetrized_product: empty input");
    const Scale s = hs.front().scale();
    for (const HElem& h : hs) require_same_scale(hs.front(), h, "symmetrized_product");
    if (hs.size() > 12)
        throw DegreeCap("symmetrized_product: more than 12 factors");

    std::map<std::array<double, 4>, int> groups;
    for (const HElem& h : hs) ++groups[{h.x0(), h.x1(), h.x2(), h.x3()}];
    std::vector<std::pair<HElem, int>> grouped;
    for (const auto& [coords, c] : groups)
        grouped.emplace_back(HElem::from_coords(s, coords[0], coords[1], coords[2], coords[3]),
                             c);
    return detail::grouped_symmetrized_product<HElem>(grouped, HElem::zero(s), HElem::one(s));
}

bool sphere_contains(const HElem& center, const HElem& candidate, double tol) {
    require_same_scale(center, candidate, "sphere_contains");
    return std::abs(re(center) - re(candidate)) <= tol &&
           std::abs(det(center) - det(candidate)) <= tol;
}

} // namespace ht
