#include "ht/fueter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ht/hardy.hpp"
#include "ht/symmetrized.hpp"

namespace ht {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double multi_factorial(const MIdx3& n) {
    return factorial(n[0]) * factorial(n[1]) * factorial(n[2]);
}

int multi_abs(const MIdx3& n) { return n[0] + n[1] + n[2]; }

} // namespace

JetVars jet_vars_at(const Point4& x, Scale s) {
    const HElem one = HElem::one(s);
    const std::array<double, 4> c{x.x0, x.x1, x.x2, x.x3};
    return {{jet_variable(c[0] * one, 0, one), jet_variable(c[1] * one, 1, one),
             jet_variable(c[2] * one, 2, one), jet_variable(c[3] * one, 3, one)},
            s};
}

HElem vec_part(const Point4& x, Scale s) {
    return HElem::from_coords(s, 0.0, x.x1, x.x2, x.x3);
}

HElem vec_inverse(const Point4& x, Scale s, double tol) {
    const HElem v = vec_part(x, s);
    if (std::abs(det(v)) <= tol) {
        std::ostringstream os;
        os << "vec_inverse: |x1^2 - t(x2^2+x3^2)| = " << std::abs(det(v)) << " <= " << tol;
        throw OnNullCone(os.str());
    }
    return adjoint(v, AdjointKind::Circled) / det(v);
}

bool admissible(const Point4& x, Scale s, double margin) {
    const double t = s.t();
    const double d = std::abs(x.x1 * x.x1 - t * (x.x2 * x.x2 + x.x3 * x.x3));
    const double size = x.x1 * x.x1 + std::abs(t) * (x.x2 * x.x2 + x.x3 * x.x3);
    return d >= margin * size && size > 0.0;
}

HElem mu(int l, const Point4& x, Scale s) {
    if (l < 1 || l > 3) throw std::invalid_argument("mu: l must be 1..3");
    const double xl = l == 1 ? x.x1 : (l == 2 ? x.x2 : x.x3);
    const HElem w = HElem::one(s) + x.x0 * vec_inverse(x, s);
    return xl * w;
}

HElem mu_pow(const MIdx3& alpha, const Point4& x, Scale s) {
    const int n = multi_abs(alpha);
    if (n == 0) return HElem::one(s);
    const double xa = std::pow(x.x1, alpha[0]) * std::pow(x.x2, alpha[1]) *
                      std::pow(x.x3, alpha[2]);
    const HElem w = HElem::one(s) + x.x0 * vec_inverse(x, s);
    HElem wp = HElem::one(s);
    for (int i = 0; i < n; ++i) wp = wp * w;
    return xa * wp;
}

HElem zeta(int l, const Point4& x, Scale s) {
    const double t = s.t();
    const double sgn = t > 0 ? 1.0 : -1.0;
    const double c = sgn * x.x0 / std::sqrt(std::abs(t));
    switch (l) {
    case 1:
        return HElem::from_coords(s, x.x1, -x.x0, 0.0, 0.0);
    case 2:
        return HElem::from_coords(s, x.x2, 0.0, c, 0.0);
    case 3:
        return HElem::from_coords(s, x.x3, 0.0, 0.0, c);
    default:
        throw std::invalid_argument("zeta: l must be 1..3");
    }
}

HElem zeta_pow(const MIdx3& n, const Point4& x, Scale s) {
    if (multi_abs(n) == 0) return HElem::one(s);
    if (multi_abs(n) > 12) throw DegreeCap("zeta_pow: |n| > 12");
    std::vector<std::pair<HElem, int>> groups;
    for (int l = 1; l <= 3; ++l)
        if (n[static_cast<std::size_t>(l - 1)] > 0)
            groups.emplace_back(zeta(l, x, s), n[static_cast<std::size_t>(l - 1)]);
    return detail::grouped_symmetrized_product<HElem>(groups, HElem::zero(s), HElem::one(s));
}

namespace {

Jet2 jet_vec(const JetVars& v) {
    const Jet2 i = jet_constant(HElem::unit_i(v.s));
    const Jet2 j = jet_constant(HElem::unit_j(v.s));
    const Jet2 k = jet_constant(HElem::unit_k(v.s));
    return i * v.x[1] + j * v.x[2] + k * v.x[3];
}

Jet2 jet_vec_inverse(const JetVars& v) {
    return jet_inverse(jet_vec(v), [](const HElem& e) {
        try {
            return inverse(e);
        } catch (const NonInvertible& err) {
            throw OnNullCone(std::string("jet: vector part on the null cone: ") + err.what());
        }
    });
}

} // namespace

Jet2 jet_mu(int l, const JetVars& v) {
    if (l < 1 || l > 3) throw std::invalid_argument("jet_mu: l must be 1..3");
    const Jet2 one = jet_constant(HElem::one(v.s));
    const Jet2 w = one + v.x[0] * jet_vec_inverse(v);
    return v.x[static_cast<std::size_t>(l)] * w;
}

Jet2 jet_mu_pow(const MIdx3& alpha, const JetVars& v) {
    Jet2 acc = jet_constant(HElem::one(v.s));
    for (int l = 1; l <= 3; ++l) {
        if (alpha[static_cast<std::size_t>(l - 1)] == 0) continue;
        const Jet2 m = jet_mu(l, v);
        for (int i = 0; i < alpha[static_cast<std::size_t>(l - 1)]; ++i) acc = acc * m;
    }
    return acc;
}

Jet2 jet_zeta(int l, const JetVars& v) {
    const double t = v.s.t();
    const double sgn = t > 0 ? 1.0 : -1.0;
    const double c = sgn / std::sqrt(std::abs(t));
    const Jet2 i = jet_constant(HElem::unit_i(v.s));
    const Jet2 j = jet_constant(HElem::unit_j(v.s));
    const Jet2 k = jet_constant(HElem::unit_k(v.s));
    switch (l) {
    case 1:
        return v.x[1] - v.x[0] * i;
    case 2:
        return v.x[2] + c * (v.x[0] * j);
    case 3:
        return v.x[3] + c * (v.x[0] * k);
    default:
        throw std::invalid_argument("jet_zeta: l must be 1..3");
    }
}

Jet2 jet_zeta_pow(const MIdx3& n, const JetVars& v) {
    if (multi_abs(n) == 0) return jet_constant(HElem::one(v.s));
    if (multi_abs(n) > 12) throw DegreeCap("jet_zeta_pow: |n| > 12");
    std::vector<std::pair<Jet2, int>> groups;
    for (int l = 1; l <= 3; ++l)
        if (n[static_cast<std::size_t>(l - 1)] > 0)
            groups.emplace_back(jet_zeta(l, v), n[static_cast<std::size_t>(l - 1)]);
    return detail::grouped_symmetrized_product<Jet2>(groups, jet_constant(HElem::zero(v.s)),
                                                     jet_constant(HElem::one(v.s)));
}

Jet2 jet_q_pow(int n, const JetVars& v) {
    const Jet2 q = v.x[0] + jet_vec(v);
    Jet2 acc = jet_constant(HElem::one(v.s));
    for (int i = 0; i < n; ++i) acc = acc * q;
    return acc;
}

HElem apply_operator(const JetFunction& f, FueterOp op, const Point4& x, Scale s) {
    const JetVars v = jet_vars_at(x, s);
    const Jet2 jf = f(v);
    const double t = s.t();
    const double sgn = t > 0 ? 1.0 : -1.0;
    const double c = sgn / std::sqrt(std::abs(t));
    const HElem i = HElem::unit_i(s);
    const HElem j = HElem::unit_j(s);
    const HElem k = HElem::unit_k(s);
    switch (op) {
    case FueterOp::VT: {
        const HElem vi = vec_inverse(x, s);
        return jf.grad[0] -
               vi * (x.x1 * jf.grad[1] + x.x2 * jf.grad[2] + x.x3 * jf.grad[3]);
    }
    case FueterOp::GT: {
        const HElem vp = vec_part(x, s);
        if (std::abs(det(vp)) <= 1e-12) throw OnNullCone("apply_operator: GT on the null cone");
        return vp * jf.grad[0] -
               (x.x1 * jf.grad[1] + x.x2 * jf.grad[2] + x.x3 * jf.grad[3]);
    }
    case FueterOp::Nabla:
        return jf.grad[0] + i * jf.grad[1] - c * (j * jf.grad[2]) - c * (k * jf.grad[3]);
    case FueterOp::NablaC:
        return jf.grad[0] - i * jf.grad[1] + c * (j * jf.grad[2]) + c * (k * jf.grad[3]);
    case FueterOp::RightNabla:
        return jf.grad[0] + jf.grad[1] * i - c * (jf.grad[2] * j) - c * (jf.grad[3] * k);
    case FueterOp::Laplace:
        return jf.d2(0, 0) + jf.d2(1, 1) - sgn * jf.d2(2, 2) - sgn * jf.d2(3, 3);
    }
    throw std::invalid_argument("apply_operator: unknown operator");
}

double kernel_check_mu(const MIdx3& alpha, std::span<const Point4> samples, Scale s) {
    double worst = 0.0;
    for (const Point4& x : samples) {
        const JetVars v = jet_vars_at(x, s);
        const Jet2 f = jet_mu_pow(alpha, v);
        const HElem vi = vec_inverse(x, s);
        const HElem vf =
            f.grad[0] - vi * (x.x1 * f.grad[1] + x.x2 * f.grad[2] + x.x3 * f.grad[3]);
        const double rel = norm(vf, NormKind::Op) / std::max(1.0, norm(f.value, NormKind::Op));
        worst = std::max(worst, rel);
    }
    return worst;
}

std::map<MIdx3, HElem> qn_expand(int n, Scale s) {
    if (n < 1) throw std::invalid_argument("qn_expand: n must be positive");
    if (n > 12) throw DegreeCap("qn_expand: n > 12");
    std::map<MIdx3, HElem> out;
    const std::array<HElem, 3> units{HElem::unit_i(s), HElem::unit_j(s), HElem::unit_k(s)};
    for (int a1 = 0; a1 <= n; ++a1)
        for (int a2 = 0; a2 + a1 <= n; ++a2) {
            const int a3 = n - a1 - a2;
            const MIdx3 alpha{a1, a2, a3};
            std::vector<std::pair<HElem, int>> groups;
            for (int l = 0; l < 3; ++l)
                if (alpha[static_cast<std::size_t>(l)] > 0)
                    groups.emplace_back(units[static_cast<std::size_t>(l)],
                                        alpha[static_cast<std::size_t>(l)]);
            const HElem sym = detail::grouped_symmetrized_product<HElem>(
                groups, HElem::zero(s), HElem::one(s));
            out.emplace(alpha, (factorial(n) / multi_factorial(alpha)) * sym);
        }
    return out;
}

double qn_expand_residual(int n, std::span<const Point4> samples, Scale s) {
    const std::map<MIdx3, HElem> coeffs = qn_expand(n, s);
    double worst = 0.0;
    for (const Point4& x : samples) {
        const HElem q = HElem::from_coords(s, x.x0, x.x1, x.x2, x.x3);
        HElem qn = HElem::one(s);
        for (int i = 0; i < n; ++i) qn = qn * q;
        HElem acc = HElem::zero(s);
        for (const auto& [alpha, c] : coeffs) acc = acc + mu_pow(alpha, x, s) * c;
        const double rel =
            norm(qn - acc, NormKind::Op) / std::max(1.0, norm(qn, NormKind::Op));
        worst = std::max(worst, rel);
    }
    return worst;
}

namespace {

using NestedJet = Jet2T<Jet2>;

// Mixed partial d^n f(0) for n over x1..x3 with |n| <= 4, read off a
// nested jet: the outer jet supplies up to two derivative slots, the
// inner jet entries the rest.
HElem nested_partial(const NestedJet& f, const MIdx3& n) {
    std::vector<int> slots;
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < n[static_cast<std::size_t>(l)]; ++i) slots.push_back(l + 1);
    if (slots.size() > 4) throw DegreeCap("nested_partial: order > 4");
    const auto outer = [&](int count) -> const Jet2& {
        if (count == 0) return f.value;
        if (count == 1) return f.grad[static_cast<std::size_t>(slots[0])];
        return f.hess[static_cast<std::size_t>(NestedJet::hess_index(slots[0], slots[1]))];
    };
    const int outer_count = std::min<int>(2, static_cast<int>(slots.size()));
    const Jet2& inner = outer(outer_count);
    const int rest = static_cast<int>(slots.size()) - outer_count;
    if (rest == 0) return inner.value;
    if (rest == 1) return inner.grad[static_cast<std::size_t>(slots[2])];
    return inner.hess[static_cast<std::size_t>(Jet2::hess_index(slots[2], slots[3]))];
}

} // namespace

TaylorRoundtrip fueter_taylor_roundtrip(const std::map<MIdx3, HElem>& coeffs, Scale s,
                                        std::span<const Point4> samples) {
    for (const auto& [n, c] : coeffs) {
        (void)c;
        if (multi_abs(n) > 4)
            throw std::invalid_argument("fueter_taylor_roundtrip: degree above 4");
    }

    const JetFunction f = [&coeffs](const JetVars& v) {
        Jet2 acc = jet_constant(HElem::zero(v.s));
        for (const auto& [n, c] : coeffs) acc = acc + jet_zeta_pow(n, v) * jet_constant(c);
        return acc;
    };

    TaylorRoundtrip out{0.0, 0.0};
    for (const Point4& x : samples) {
        const HElem r = apply_operator(f, FueterOp::Nabla, x, s);
        out.regularity_residual = std::max(out.regularity_residual, norm(r, NormKind::Op));
    }

    // Nested jets at the origin: outer variables seeded with inner jets.
    const HElem one = HElem::one(s);
    const HElem zero = HElem::zero(s);
    std::array<NestedJet, 4> vars = {
        jet_variable(jet_variable(zero, 0, one), 0, jet_constant(one)),
        jet_variable(jet_variable(zero, 1, one), 1, jet_constant(one)),
        jet_variable(jet_variable(zero, 2, one), 2, jet_constant(one)),
        jet_variable(jet_variable(zero, 3, one), 3, jet_constant(one))};

    const double t = s.t();
    const double sgn = t > 0 ? 1.0 : -1.0;
    const double c = sgn / std::sqrt(std::abs(t));
    const NestedJet ji = jet_constant(jet_constant(HElem::unit_i(s)));
    const NestedJet jj = jet_constant(jet_constant(HElem::unit_j(s)));
    const NestedJet jk = jet_constant(jet_constant(HElem::unit_k(s)));
    const auto nested_zeta = [&](int l) -> NestedJet {
        switch (l) {
        case 1: return vars[1] - vars[0] * ji;
        case 2: return vars[2] + c * (vars[0] * jj);
        default: return vars[3] + c * (vars[0] * jk);
        }
    };
    NestedJet facc = jet_constant(jet_constant(zero));
    for (const auto& [n, coeff] : coeffs) {
        NestedJet zp = jet_constant(jet_constant(one));
        if (multi_abs(n) > 0) {
            std::vector<std::pair<NestedJet, int>> groups;
            for (int l = 1; l <= 3; ++l)
                if (n[static_cast<std::size_t>(l - 1)] > 0)
                    groups.emplace_back(nested_zeta(l), n[static_cast<std::size_t>(l - 1)]);
            zp = detail::grouped_symmetrized_product<NestedJet>(
                groups, jet_constant(jet_constant(zero)), jet_constant(jet_constant(one)));
        }
        facc = facc + zp * jet_constant(jet_constant(coeff));
    }
    for (const auto& [n, coeff] : coeffs) {
        const HElem recovered = nested_partial(facc, n) / multi_factorial(n);
        out.recovery_residual =
            std::max(out.recovery_residual, norm(recovered - coeff, NormKind::Op));
    }
    return out;
}

double arveson_bound(double r, double rho) { return rho * (1.0 + 3.0 * rho * rho / r); }

namespace {

void require_in_domain(const Point4& x, Scale s, double r, double rho, const char* who) {
    const double d = std::abs(x.x1 * x.x1 - s.t() * (x.x2 * x.x2 + x.x3 * x.x3));
    if (d <= r) {
        std::ostringstream os;
        os << who << ": |det vec| = " << d << " <= r = " << r;
        throw OnNullCone(os.str());
    }
    for (double c : {x.x0, x.x1, x.x2, x.x3})
        if (!(std::abs(c) < rho)) {
            std::ostringstream os;
            os << who << ": coordinate " << c << " outside |x| < " << rho;
            throw DomainViolation(os.str());
        }
}

} // namespace

HElem arveson_kernel(const Point4& x, const Point4& y, Scale s, AdjointKind kind, int deg,
                     double r, double rho) {
    require_in_domain(x, s, r, rho, "arveson_kernel");
    require_in_domain(y, s, r, rho, "arveson_kernel");
    HElem acc = HElem::zero(s);
    for (int n = 0; n <= deg; ++n)
        for (int a1 = 0; a1 <= n; ++a1)
            for (int a2 = 0; a2 + a1 <= n; ++a2) {
                const MIdx3 alpha{a1, a2, n - a1 - a2};
                acc = acc + mu_pow(alpha, x, s) * adjoint(mu_pow(alpha, y, s), kind) /
                                multi_factorial(alpha);
            }
    return acc;
}

namespace {

HMatrix mu_row(const Point4& a, Scale s) {
    HMatrix m(s, 1, 3);
    for (int l = 1; l <= 3; ++l) m.set(0, l - 1, mu(l, a, s));
    return m;
}

} // namespace

MuBlaschke mu_blaschke(const Point4& a, Scale s, AdjointKind kind, int degree) {
    const HMatrix m = mu_row(a, s);
    double cond = 0.0;
    for (int l = 0; l < 3; ++l) cond += norm(m.at(0, l), NormKind::Op);
    if (!(cond < 1.0)) {
        std::ostringstream os;
        os << "mu_blaschke: sum ||mu_l(a)||_op = " << cond << " >= 1";
        throw ConditionViolated(os.str());
    }
    const HMatrix mk = madjoint(m, kind);
    const HElem c = sqrt_selfadjoint(HElem::one(s) - (m * mk).at(0, 0), kind);
    const HMatrix big = sqrt_selfadjoint(HMatrix::identity(s, 3) - mk * m, kind);
    const HMatrix big_inv = minvert(big);

    // b_a = c star (1 - mu(q) mu(a)^k)^{-star} star (mu(q) - m) big^{-1}
    std::map<MIdx3, HElem> geo;
    geo.emplace(MIdx3{0, 0, 0}, HElem::one(s));
    {
        std::map<MIdx3, HElem> pw = geo;
        for (int d = 1; d <= degree; ++d) {
            std::map<MIdx3, HElem> next;
            for (const auto& [alpha, coeff] : pw)
                for (int k = 0; k < 3; ++k) {
                    MIdx3 beta = alpha;
                    ++beta[static_cast<std::size_t>(k)];
                    const HElem term = coeff * mk.at(k, 0);
                    auto it = next.find(beta);
                    if (it == next.end())
                        next.emplace(beta, term);
                    else
                        it->second = it->second + term;
                }
            pw = std::move(next);
            for (const auto& [alpha, coeff] : pw) {
                auto it = geo.find(alpha);
                if (it == geo.end())
                    geo.emplace(alpha, coeff);
                else
                    it->second = it->second + coeff;
            }
        }
    }
    std::map<MIdx3, HMatrix> coeffs;
    for (const auto& [alpha, g] : geo) {
        if (multi_abs(alpha) > degree) continue;
        // times (mu(q) - m): constant part -m, letters e_k
        {
            const HMatrix term = scale_left(c * g, -m) * big_inv;
            auto it = coeffs.find(alpha);
            if (it == coeffs.end())
                coeffs.emplace(alpha, term);
            else
                it->second = it->second + term;
        }
        if (multi_abs(alpha) < degree)
            for (int k = 0; k < 3; ++k) {
                MIdx3 beta = alpha;
                ++beta[static_cast<std::size_t>(k)];
                HMatrix row(s, 1, 3);
                row.set(0, k, HElem::one(s));
                const HMatrix term = scale_left(c * g, row) * big_inv;
                auto it = coeffs.find(beta);
                if (it == coeffs.end())
                    coeffs.emplace(beta, term);
                else
                    it->second = it->second + term;
            }
    }

    MuRealization real{
        {HMatrix(s, 1, 1), HMatrix(s, 1, 1), HMatrix(s, 1, 1)},
        {big.block(0, 0, 1, 3), big.block(1, 0, 1, 3), big.block(2, 0, 1, 3)},
        HMatrix(s, 1, 1),
        -m};
    for (int k = 0; k < 3; ++k)
        real.A[static_cast<std::size_t>(k)].set(0, 0, adjoint(m.at(0, k), kind));
    real.C.set(0, 0, c);
    return {std::move(coeffs), std::move(real)};
}

double mu_blaschke_identity_residual(const Point4& a, Scale s, AdjointKind kind) {
    const HMatrix m = mu_row(a, s);
    const HMatrix mk = madjoint(m, kind);
    const HElem c = sqrt_selfadjoint(HElem::one(s) - (m * mk).at(0, 0), kind);
    const HMatrix big = sqrt_selfadjoint(HMatrix::identity(s, 3) - mk * m, kind);
    return max_entry_op_norm(scale_left(c, m) * minvert(big) - m);
}

double mu_blaschke_unitarity_residual(const Point4& a, Scale s, AdjointKind kind) {
    const HMatrix m = mu_row(a, s);
    const HMatrix mk = madjoint(m, kind);
    const HElem c = sqrt_selfadjoint(HElem::one(s) - (m * mk).at(0, 0), kind);
    const HMatrix big = sqrt_selfadjoint(HMatrix::identity(s, 3) - mk * m, kind);
    HMatrix m4(s, 4, 4);
    for (int i = 0; i < 3; ++i) {
        m4.set(i, 0, mk.at(i, 0));
        for (int j = 0; j < 3; ++j) m4.set(i, 1 + j, big.at(i, j));
    }
    m4.set(3, 0, c);
    for (int j = 0; j < 3; ++j) m4.set(3, 1 + j, -m.at(0, j));
    const HMatrix m4k = madjoint(m4, kind);
    const HMatrix eye = HMatrix::identity(s, 4);
    return std::max(max_entry_op_norm(m4 * m4k - eye), max_entry_op_norm(m4k * m4 - eye));
}

HMatrix mu_realization_eval(const MuRealization& r, const Point4& x, Scale s, int trunc_degree) {
    return mu_realization_eval(r, {mu(1, x, s), mu(2, x, s), mu(3, x, s)}, trunc_degree);
}

bool norm_inequality_check(const Point4& x, Scale s) {
    for (int l = 1; l <= 3; ++l) {
        const double lhs = norm(mu(l, x, s), NormKind::Euclid);
        const double rhs = norm(zeta(l, x, s), NormKind::Euclid);
        if (lhs > rhs + 1e-12) return false;
    }
    return true;
}

bool norm_inequality_sufficient(const Point4& x, Scale s) {
    const double t = s.t();
    const double size = x.x1 * x.x1 + std::abs(t) * (x.x2 * x.x2 + x.x3 * x.x3);
    const double d = x.x1 * x.x1 - t * (x.x2 * x.x2 + x.x3 * x.x3);
    const double xmax =
        std::max(x.x1 * x.x1, std::max(x.x2 * x.x2, x.x3 * x.x3));
    return xmax * size <= d * d;
}

} // namespace ht
