#include "ht/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

#include "ht/fueter.hpp"
#include "ht/hardy.hpp"
#include "ht/htmatrix.hpp"
#include "ht/json_io.hpp"
#include "ht/rational.hpp"
#include "ht/sampling.hpp"
#include "ht/series.hpp"

namespace ht::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Builder {
    Report report;
    double tol_scale;

    Builder(std::string suite, Scale s, double scale) : tol_scale(scale) {
        report.suite = std::move(suite);
        report.t = s.t();
    }

    // Passing means observed <= tolerance.
    void upper(const std::string& test, double tolerance, double observed) {
        report.entries.push_back(
            {test, tolerance * tol_scale, observed, observed <= tolerance * tol_scale});
    }
    // Passing means observed > threshold (used for genericity assertions).
    void lower(const std::string& test, double threshold, double observed) {
        report.entries.push_back({test, threshold, observed, observed > threshold});
    }
    void flag(const std::string& test, bool ok) {
        report.entries.push_back({test, 0.0, ok ? 0.0 : 1.0, ok});
    }
};

double rel(double err, double size) { return err / std::max(1.0, size); }

double opn(const HElem& q) { return norm(q, NormKind::Op); }

HElem unit(Scale s, int k) {
    switch (k) {
    case 0: return HElem::one(s);
    case 1: return HElem::unit_i(s);
    case 2: return HElem::unit_j(s);
    default: return HElem::unit_k(s);
    }
}

HElem cayley_expected(Scale s, int u, int v) {
    const double t = s.t();
    if (u == 0) return unit(s, v);
    if (v == 0) return unit(s, u);
    if (u == 1 && v == 1) return -HElem::one(s);
    if (u == 1 && v == 2) return unit(s, 3);
    if (u == 1 && v == 3) return -unit(s, 2);
    if (u == 2 && v == 1) return -unit(s, 3);
    if (u == 2 && v == 2) return t * HElem::one(s);
    if (u == 2 && v == 3) return -t * unit(s, 1);
    if (u == 3 && v == 1) return unit(s, 2);
    if (u == 3 && v == 2) return t * unit(s, 1);
    return t * HElem::one(s);
}

PowerSeries random_poly(Rng& rng, Scale s, int degree, int trunc, double box) {
    PowerSeries f = PowerSeries::zero(s, trunc);
    std::vector<HElem> c(static_cast<std::size_t>(trunc) + 1, HElem::zero(s));
    for (int n = 0; n <= degree && n <= trunc; ++n) c[static_cast<std::size_t>(n)] = rng.helem_box(s, box);
    return {s, std::move(c)};
}

PowerSeries one_minus_q_times(const HElem& c, int trunc) {
    const Scale s = c.scale();
    return PowerSeries::constant(HElem::one(s), trunc) -
           PowerSeries::monomial(s, 1, trunc) * c;
}

double coeff_distance(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.trunc(), g.trunc());
    double d = 0.0;
    for (int k = 0; k <= n; ++k) d = std::max(d, opn(f.coeff(k) - g.coeff(k)));
    return d;
}

} // namespace

Report ring_axioms(Scale s, const Params& p) {
    Builder b("ring_axioms", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1001);

    double cayley = 0.0;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            cayley = std::max(cayley, opn(unit(s, u) * unit(s, v) - cayley_expected(s, u, v)));
    b.upper("cayley_table_16_products", 1e-14 * std::max(1.0, std::abs(s.t())), cayley);

    double assoc = 0.0, unit_law = 0.0;
    for (int i = 0; i < p.samples; ++i) {
        const HElem x = rng.helem_box(s, 2.0), y = rng.helem_box(s, 2.0),
                    z = rng.helem_box(s, 2.0);
        const double size = opn(x) * opn(y) * opn(z);
        assoc = std::max(assoc, rel(opn((x * y) * z - x * (y * z)), size));
        unit_law = std::max(unit_law,
                            opn(HElem::one(s) * x - x) + opn(x * HElem::one(s) - x));
    }
    b.upper("associativity", 1e-12, assoc);
    b.upper("unit_law", 1e-15, unit_law);
    return b.report;
}

Report adjoint_laws(Scale s, const Params& p) {
    Builder b("adjoint_laws", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1002);
    const auto C = AdjointKind::Circled;
    const auto Br = AdjointKind::Bracket;

    double contra = 0.0, invol = 0.0, commute = 0.0, qqast = 0.0, prod34 = 0.0;
    double jstarj = 0.0, signature_identity = 0.0, nonnormal = 0.0;
    for (int i = 0; i < p.samples; ++i) {
        const HElem x = rng.helem_box(s, 2.0), y = rng.helem_box(s, 2.0);
        const double size = opn(x) * opn(y);
        for (auto k : {C, Br}) {
            contra = std::max(
                contra, rel(opn(adjoint(x * y, k) - adjoint(y, k) * adjoint(x, k)), size));
            invol = std::max(invol, opn(adjoint(adjoint(x, k), k) - x));
            const double ff = form(x, x, k == C ? FormKind::Circled : FormKind::Bracket);
            const double fe =
                form(x, signature_apply(x, k == C ? FormKind::Circled : FormKind::Bracket),
                     FormKind::Euclid);
            signature_identity =
                std::max(signature_identity, rel(std::abs(ff - 2.0 * fe), opn(x) * opn(x)));
        }
        commute = std::max(commute, opn(adjoint(adjoint(x, C), Br) - adjoint(adjoint(x, Br), C)));
        qqast = std::max(qqast, rel(opn(x * adjoint(x, C) - det(x) * HElem::one(s)),
                                    opn(x) * opn(x)));
        qqast = std::max(qqast, rel(opn(adjoint(x, C) * x - det(x) * HElem::one(s)),
                                    opn(x) * opn(x)));

        // Eq. (3.4): q q^[*] = (a^2 + t b^2, 2 Re(a conj b)),
        //            q^[*] q = (a^2 + t conj(b)^2, 2 Re(a b)).
        const cplx a = x.a(), bb = x.b();
        const double t = s.t();
        const HElem lhs1 = x * adjoint(x, Br);
        const HElem rhs1(s, a * a + t * bb * bb, 2.0 * (a * std::conj(bb)).real());
        const HElem lhs2 = adjoint(x, Br) * x;
        const HElem rhs2(s, a * a + t * std::conj(bb) * std::conj(bb),
                         2.0 * (a * bb).real());
        prod34 = std::max(prod34, rel(opn(lhs1 - rhs1) + opn(lhs2 - rhs2), opn(x) * opn(x)));
        nonnormal = std::max(nonnormal, opn(lhs1 - lhs2));

        // Eq. (J*J): embedding of q^[*] equals J (embedding q)* J.
        const Mat2c j{0.0, 1.0, 1.0, 0.0};
        const Mat2c diff =
            adjoint(x, Br).to_matrix() - j * x.to_matrix().conj_transpose() * j;
        jstarj = std::max(jstarj, rel(diff.max_abs(), opn(x)));
    }
    b.upper("contravariance", 1e-12, contra);
    b.upper("involution", 1e-15, invol);
    b.upper("adjoints_commute", 1e-15, commute);
    b.upper("qqast_scalar", 1e-12, qqast);
    b.upper("bracket_products_3_4", 1e-12, prod34);
    b.upper("jstarj_embedding", 1e-12, jstarj);
    b.upper("signature_operator_identity", 1e-12, signature_identity);
    b.lower("bracket_nonnormality_generic", 1e-8, nonnormal);
    return b.report;
}

Report norm_closed_form(Scale s, const Params& p) {
    Builder b("norm_closed_form", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1003);

    double vs_eig = 0.0, invariance = 0.0, hs_check = 0.0, special = 0.0;
    for (int i = 0; i < p.samples; ++i) {
        const HElem x = rng.helem_box(s, 2.0);
        const Mat2c m = x.to_matrix();
        const double eig = std::sqrt((m * m.conj_transpose()).eigmax_hermitian());
        vs_eig = std::max(vs_eig, rel(std::abs(norm(x, NormKind::Op) - eig), eig));
        for (auto k : {AdjointKind::Circled, AdjointKind::Bracket})
            for (auto nk : {NormKind::HS, NormKind::Op, NormKind::Euclid})
                invariance = std::max(
                    invariance,
                    rel(std::abs(norm(x, nk) - norm(adjoint(x, k), nk)), norm(x, nk)));
        const double hs = std::sqrt((m * m.conj_transpose()).trace().real());
        hs_check = std::max(hs_check, rel(std::abs(norm(x, NormKind::HS) - hs), hs));
        if (s.t() == -1.0)
            special = std::max(
                special, std::abs(norm(x, NormKind::Op) -
                                  std::sqrt(std::norm(x.a()) + std::norm(x.b()))));
        if (s.t() == 1.0)
            special = std::max(special, std::abs(norm(x, NormKind::Op) -
                                                 (std::abs(x.a()) + std::abs(x.b()))));
    }
    b.upper("op_norm_vs_eigensolve", 1e-10, vs_eig);
    b.upper("adjoint_invariance", 1e-12, invariance);
    b.upper("hs_norm_vs_trace", 1e-12, hs_check);
    if (s.t() == 1.0 || s.t() == -1.0) b.upper("op_norm_specialization", 1e-12, special);
    return b.report;
}

Report signatures(Scale s, const Params& p) {
    Builder b("signatures", s, p.tol_scale);
    const SignatureResult circ = signature_basis_gram(s, FormKind::Circled);
    const SignatureResult brk = signature_basis_gram(s, FormKind::Bracket);
    const int exp_plus = s.t() < 0 ? 4 : 2;
    const int exp_minus = s.t() < 0 ? 0 : 2;
    b.flag("circled_signature", circ.n_plus == exp_plus && circ.n_minus == exp_minus);
    b.flag("bracket_signature", brk.n_plus == 2 && brk.n_minus == 2);

    std::vector<double> flat(16);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) flat[4 * u + v] = circ.gram[u][v];
    double det_gram = 1.0;
    for (double ev : symmetric_eigenvalues(flat, 4)) det_gram *= ev;
    b.lower("circled_gram_nondegenerate", 1e-10, std::abs(det_gram));
    return b.report;
}

Report star_algebra(Scale s, const Params& p) {
    Builder b("star_algebra", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1005);
    const int trunc = p.trunc;
    const int reps = std::max(5, p.samples / 50);

    double closed = 0.0;
    for (int i = 0; i < reps; ++i) {
        // ||q|| ||p|| <= 0.85 keeps the 200-term tail below the tolerance
        const HElem q = rng.helem_with_norm(s, 0.1, 0.85);
        const HElem pq = rng.helem_with_norm(s, 0.1, 0.85 / std::max(0.2, opn(q)));
        HElem sum = HElem::zero(s), qa = HElem::one(s), pa = HElem::one(s);
        for (int n = 0; n <= 200; ++n) {
            sum = sum + qa * pa;
            qa = qa * q;
            pa = pa * pq;
        }
        closed = std::max(closed, opn(sum - geo_closed_form(q, pq)));
        closed = std::max(closed, opn(hardy_kernel(q, adjoint(pq, AdjointKind::Circled), 200) -
                                      geo_closed_form(q, pq)));
    }
    b.upper("geometric_closed_form", 1e-10, closed);

    double reality = 0.0, star_comm = 0.0, assoc = 0.0, extens = 0.0, multi = 0.0;
    double inv_round = 0.0, neumann = 0.0, bcomm = 0.0, worked = 0.0;
    for (int i = 0; i < reps; ++i) {
        const PowerSeries f = random_poly(rng, s, 8, trunc, 1.0);
        const PowerSeries g = random_poly(rng, s, 8, trunc, 1.0);
        const PowerSeries h = random_poly(rng, s, 8, trunc, 1.0);

        const PowerSeries ffc = star_mul(f, conj_series(f, AdjointKind::Circled));
        for (const HElem& c : ffc.coeffs())
            reality = std::max(reality,
                               std::max(std::abs(c.a().imag()),
                                        std::max(std::abs(c.b().real()), std::abs(c.b().imag()))));
        star_comm = std::max(star_comm, coeff_distance(star_mul(ffc, g), star_mul(g, ffc)));
        assoc = std::max(assoc,
                         coeff_distance(star_mul(star_mul(f, g), h), star_mul(f, star_mul(g, h))));

        const double x = rng.uniform(-0.5, 0.5);
        const HElem xe = x * HElem::one(s);
        extens = std::max(extens, opn(eval(star_mul(f, g), xe) - eval(f, xe) * eval(g, xe)));

        const HElem q = rng.helem_with_norm(s, 0.05, 0.3);
        const HElem fq = eval(f, q);
        if (std::abs(det(fq)) > 0.1) {
            const HElem conjpt = inverse(fq) * q * fq;
            multi = std::max(multi, rel(opn(eval(star_mul(f, g), q) - fq * eval(g, conjpt)),
                                        opn(fq)));
        }

        // invertible constant term, with the tail small enough that the
        // inverse recursion contracts at this truncation
        std::vector<HElem> ic(static_cast<std::size_t>(trunc) + 1, HElem::zero(s));
        for (;;) {
            ic[0] = rng.helem_box(s, 1.0);
            if (std::abs(det(ic[0])) > 0.3) break;
        }
        for (int n = 1; n <= 8; ++n) ic[static_cast<std::size_t>(n)] = rng.helem_box(s, 0.4);
        double tail = 0.0;
        for (int n = 1; n <= 8; ++n) tail += opn(ic[static_cast<std::size_t>(n)]);
        const double contraction = opn(inverse(ic[0])) * tail;
        if (contraction > 0.7)
            for (int n = 1; n <= 8; ++n)
                ic[static_cast<std::size_t>(n)] = (0.7 / contraction) * ic[static_cast<std::size_t>(n)];
        const PowerSeries fi(s, ic);
        const PowerSeries finv = star_inverse(fi);
        const PowerSeries round = star_mul(fi, finv);
        const PowerSeries round2 = star_mul(finv, fi);
        PowerSeries idm = PowerSeries::constant(HElem::one(s), trunc);
        inv_round = std::max(inv_round, coeff_distance(round, idm));
        inv_round = std::max(inv_round, coeff_distance(round2, idm));
        neumann = std::max(neumann, coeff_distance(finv, star_inverse_neumann(fi)));

        // Proposition: (1 - q a) and (q - a) star-commute with the stated value
        const HElem al = rng.helem_box(s, 0.8);
        const PowerSeries lhs1 =
            star_mul(one_minus_q_times(al, trunc),
                     PowerSeries::monomial(s, 1, trunc) - PowerSeries::constant(al, trunc));
        const PowerSeries lhs2 =
            star_mul(PowerSeries::monomial(s, 1, trunc) - PowerSeries::constant(al, trunc),
                     one_minus_q_times(al, trunc));
        PowerSeries expect = PowerSeries::zero(s, trunc);
        expect = expect - PowerSeries::monomial(s, 2, trunc) * al +
                 PowerSeries::monomial(s, 1, trunc) * (al * al + HElem::one(s)) -
                 PowerSeries::constant(al, trunc);
        bcomm = std::max(bcomm, coeff_distance(lhs1, lhs2));
        bcomm = std::max(bcomm, coeff_distance(lhs1, expect));

        // worked resolvent: (1-q a)^{-star} = (1-q a^cir) / (q^2 det a - 2 q Re a + 1)
        const HElem am = rng.helem_with_norm(s, 0.1, 0.8);
        PowerSeries denom = PowerSeries::constant(HElem::one(s), trunc) -
                            (2.0 * re(am)) * PowerSeries::monomial(s, 1, trunc) +
                            det(am) * PowerSeries::monomial(s, 2, trunc);
        const PowerSeries direct = star_inverse(one_minus_q_times(am, trunc));
        const PowerSeries viaq =
            star_mul(one_minus_q_times(adjoint(am, AdjointKind::Circled), trunc),
                     star_inverse(denom));
        worked = std::max(worked, coeff_distance(direct, viaq));
    }
    b.upper("self_conj_reality", 1e-12, reality);
    b.upper("self_conj_central", 1e-12, star_comm);
    b.upper("star_associativity", 1e-12, assoc);
    b.upper("real_restriction_homomorphism", 1e-12, extens);
    b.upper("point_evaluation_formula", 1e-10, multi);
    b.upper("star_inverse_round_trip", 1e-11, inv_round);
    b.upper("star_inverse_vs_neumann", 1e-11, neumann);
    b.upper("blaschke_factor_commutation", 1e-13, bcomm);
    b.upper("resolvent_worked_example", 1e-12, worked);
    return b.report;
}

Report blaschke_suite(Scale s, const Params& p) {
    Builder b("blaschke_circled", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1006);
    const int trunc = std::max(p.trunc, 256);
    const int n_alpha = std::max(4, p.samples / 50);

    double expansion = 0.0, commu = 0.0, gram_dev = 0.0, division = 0.0, isometry = 0.0;
    double ope_zero = 0.0, sphere = 0.0;
    for (int i = 0; i < n_alpha; ++i) {
        const HElem al = rng.helem_with_norm(s, 0.05, 0.75);
        const PowerSeries bl = blaschke_circled(al, trunc);

        const PowerSeries lin =
            PowerSeries::monomial(s, 1, trunc) - PowerSeries::constant(al, trunc);
        const PowerSeries by_division =
            star_mul(lin, star_inverse(one_minus_q_times(adjoint(al, AdjointKind::Circled), trunc)));
        expansion = std::max(expansion, coeff_distance(bl, by_division));

        // Lemma: b_alpha star b_{alpha^cir} closed form
        const PowerSeries blc = blaschke_circled(adjoint(al, AdjointKind::Circled), trunc);
        PowerSeries num = PowerSeries::monomial(s, 2, trunc) -
                          (2.0 * re(al)) * PowerSeries::monomial(s, 1, trunc) +
                          det(al) * PowerSeries::constant(HElem::one(s), trunc);
        PowerSeries den = det(al) * PowerSeries::monomial(s, 2, trunc) -
                          (2.0 * re(al)) * PowerSeries::monomial(s, 1, trunc) +
                          PowerSeries::constant(HElem::one(s), trunc);
        commu = std::max(commu,
                         coeff_distance(star_mul(bl, blc), star_mul(num, star_inverse(den))));

        gram_dev = std::max(gram_dev, isometry_gram(bl, AdjointKind::Circled, 6, trunc));

        // division round trip and form isometry
        const PowerSeries g = random_poly(rng, s, 16, trunc, 0.7);
        const PowerSeries f = star_mul(bl, g);
        const PowerSeries grec = solve_one_point(f, al, AdjointKind::Circled, 1e-7);
        division = std::max(division, coeff_distance(grec, g));
        const PowerSeries ftr = f.truncated(grec.trunc());
        const PowerSeries gtr = g.truncated(grec.trunc());
        isometry = std::max(isometry,
                            std::abs(hardy_inner(ftr, ftr, AdjointKind::Circled).traced -
                                     hardy_inner(gtr, gtr, AdjointKind::Circled).traced));

        ope_zero = std::max(ope_zero, opn(eval(f, al)));

        // interpolation along [alpha]: b_alpha star b_{alpha^cir} kills the sphere
        const PowerSeries prod = star_mul(bl, blc);
        const double target = det(al) - re(al) * re(al);
        for (int tries = 0; tries < 50; ++tries) {
            const Point4 w = rng.point_box();
            const HElem v = HElem::from_coords(s, 0.0, w.x1, w.x2, w.x3);
            const double d0 = det(v);
            if (std::abs(d0) < 1e-3 || d0 * target < 0.0) continue;
            const double lam = std::sqrt(target / d0);
            const HElem beta = re(al) * HElem::one(s) + lam * v;
            if (!sphere_contains(al, beta, 1e-10) || !(opn(beta) < 0.95)) continue;
            sphere = std::max(sphere, opn(eval(prod, beta)));
            break;
        }
    }
    b.upper("expansion_vs_star_division", 1e-11, expansion);
    b.upper("sphere_product_closed_form", 1e-11, commu);
    b.upper("isometry_gram_deviation", 1e-9, gram_dev);
    b.upper("one_point_division_round_trip", 1e-9, division);
    b.upper("division_form_isometry", 1e-9, isometry);
    b.upper("zero_propagation", 1e-10, ope_zero);
    b.upper("sphere_interpolation", 1e-9, sphere);
    return b.report;
}

Report interpolation_suite(Scale s, const Params& p) {
    Builder b("interpolation_theta", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1007);
    const int trunc = std::max(p.trunc, 256);

    double point_res = 0.0, stein = 0.0, mix = 0.0, unitres = 0.0, ortho = 0.0;
    double membership = 0.0, inv_stein = 0.0, single_zero = 0.0;
    for (int n = 1; n <= 4; ++n) {
        // Moderate norms and separation keep the Gram conditioning small
        // (the circled form is indefinite for t > 0 and the theorem only
        // assumes the Gram invertible); take the best of a bounded number
        // of draws.
        std::vector<HElem> pts, best;
        double best_cond = 1e300;
        for (int attempt = 0; attempt < 50 && best_cond > 300.0; ++attempt) {
            pts.clear();
            while (static_cast<int>(pts.size()) < n) {
                const HElem cand = rng.helem_with_norm(s, 0.1, 0.4);
                bool apart = true;
                for (const HElem& q : pts)
                    if (opn(cand - q) < 0.2) apart = false;
                if (apart) pts.push_back(cand);
            }
            try {
                const HMatrix g = gram_points(pts, AdjointKind::Circled);
                const double cond = mnorm_op(g) * mnorm_op(minvert(g));
                if (cond < best_cond) {
                    best_cond = cond;
                    best = pts;
                }
            } catch (const Error&) {
            }
        }
        pts = best;
        ThetaInterpolation th = theta_interpolate(pts, trunc);
        const ThetaCertificates cert = certify_theta(th, pts);
        point_res = std::max(point_res, cert.max_point_residual);
        stein = std::max(stein, cert.stein_residual);
        mix = std::max(mix, cert.mix_residual);
        unitres = std::max(unitres, cert.unit_residual);
        ortho = std::max(ortho, cert.orthonormality);

        const PowerSeries g = random_poly(rng, s, 12, trunc, 0.8);
        const PowerSeries fg = star_mul(th.series, g);
        for (const HElem& pt : pts)
            membership = std::max(membership, opn(divide_by_root(fg, pt).remainder));

        // stein-2: G^{-1} - A G^{-1} A^cir = B B^cir
        const HMatrix ginv = minvert(th.gram);
        const HMatrix lhs =
            ginv - th.realization.A * ginv * madjoint(th.realization.A, AdjointKind::Circled);
        const HMatrix rhs =
            th.realization.B * madjoint(th.realization.B, AdjointKind::Circled);
        inv_stein = std::max(inv_stein, max_entry_op_norm(lhs - rhs));
    }
    {
        // one point at the origin: Theta = q
        const std::vector<HElem> origin{HElem::zero(s)};
        ThetaInterpolation th = theta_interpolate(origin, p.trunc);
        single_zero = coeff_distance(th.series, PowerSeries::monomial(s, 1, p.trunc));
    }
    b.upper("point_residuals", 1e-9, point_res);
    b.upper("stein_certificate_t9", 1e-10, stein);
    b.upper("stein_certificate_t890", 1e-10, mix);
    b.upper("stein_certificate_t900", 1e-10, unitres);
    b.upper("coefficient_orthonormality", 1e-10, ortho);
    b.upper("membership_zero_propagation", 1e-8, membership);
    b.upper("inverse_stein_equation", 1e-10, inv_stein);
    b.upper("origin_point_gives_monomial", 1e-12, single_zero);
    return b.report;
}

Report bracket_suite(Scale s, const Params& p) {
    Builder b("bracket_blaschke", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1008);
    const int trunc = std::max(p.trunc, 256);
    const int n_alpha = std::max(4, p.samples / 50);

    double stein_exact = 0.0, vs_series = 0.0, selfadj = 0.0, l_ident = 0.0, k_sq = 0.0;
    double gram_dev = 0.0, uni1 = 0.0, uni2 = 0.0, division = 0.0, isometry = 0.0;
    double expansion = 0.0;
    for (int i = 0; i < n_alpha; ++i) {
        const HElem al = rng.helem_with_norm(s, 0.02, 0.5);
        const BracketBlaschke bb = bracket_blaschke(al, trunc);
        const auto Br = AdjointKind::Bracket;
        const HElem one = HElem::one(s);

        stein_exact = std::max(
            stein_exact, opn(bb.data.gamma - al * bb.data.gamma * adjoint(al, Br) - one));
        vs_series = std::max(vs_series, opn(bb.data.gamma - gamma_stein_series(al)));
        selfadj = std::max(selfadj, opn(adjoint(bb.data.gamma, Br) - bb.data.gamma));
        selfadj = std::max(selfadj, opn(adjoint(bb.data.l, Br) - bb.data.l));
        selfadj = std::max(selfadj, opn(adjoint(bb.data.k, Br) - bb.data.k));
        l_ident = std::max(l_ident, opn(inverse(bb.data.l) -
                                        (adjoint(al, Br) * al + bb.data.gamma_inv)));
        k_sq = std::max(k_sq, opn(bb.data.k * bb.data.k - bb.data.l));

        gram_dev = std::max(gram_dev, isometry_gram(bb.series, Br, 6, trunc));

        // J-unitarity with weight diag(Gamma, 1)
        HMatrix m(s, 2, 2);
        m.set(0, 0, bb.realization.A.at(0, 0));
        m.set(0, 1, bb.realization.B.at(0, 0));
        m.set(1, 0, bb.realization.C.at(0, 0));
        m.set(1, 1, bb.realization.D.at(0, 0));
        HMatrix w(s, 2, 2), winv(s, 2, 2);
        w.set(0, 0, bb.data.gamma);
        w.set(1, 1, one);
        winv.set(0, 0, bb.data.gamma_inv);
        winv.set(1, 1, one);
        uni1 = std::max(uni1, max_entry_op_norm(madjoint(m, Br) * w * m - w));
        uni2 = std::max(uni2, max_entry_op_norm(m * winv * madjoint(m, Br) - winv));

        // expansion vs direct star construction
        const HElem mm = bb.data.gamma * adjoint(al, Br) * bb.data.gamma_inv;
        const PowerSeries lin =
            PowerSeries::monomial(s, 1, trunc) - PowerSeries::constant(al, trunc);
        const PowerSeries direct =
            star_mul(lin, star_inverse(one_minus_q_times(mm, trunc))) * bb.data.k;
        expansion = std::max(expansion, coeff_distance(bb.series, direct));

        const PowerSeries g = random_poly(rng, s, 16, trunc, 0.7);
        const PowerSeries f = star_mul(bb.series, g);
        const PowerSeries grec = solve_one_point(f, al, Br, 1e-7);
        division = std::max(division, coeff_distance(grec, g));
        const PowerSeries ftr = f.truncated(grec.trunc());
        const PowerSeries gtr = g.truncated(grec.trunc());
        isometry = std::max(isometry, std::abs(hardy_inner(ftr, ftr, Br).traced -
                                               hardy_inner(gtr, gtr, Br).traced));
    }
    b.upper("gamma_stein_residual", 1e-12, stein_exact);
    b.upper("gamma_exact_vs_series", 1e-12, vs_series);
    b.upper("gamma_l_k_selfadjoint", 1e-12, selfadj);
    b.upper("l_inverse_identity", 1e-10, l_ident);
    b.upper("k_squared_is_l", 1e-11, k_sq);
    b.upper("isometry_gram_deviation", 1e-9, gram_dev);
    b.upper("realization_j_unitarity_1", 1e-10, uni1);
    b.upper("realization_j_unitarity_2", 1e-10, uni2);
    b.upper("expansion_vs_star_division", 1e-11, expansion);
    b.upper("one_point_division_round_trip", 1e-9, division);
    b.upper("division_form_isometry", 1e-9, isometry);
    return b.report;
}

Report fueter_suite(Scale s, const Params& p) {
    Builder b("fueter_kernels", s, p.tol_scale);
    Rng rng(p.seed ^ 0x1009);
    const int n_points = std::max(20, p.samples / 10);

    // jet engine vs central finite differences on a random cubic
    {
        std::vector<std::pair<std::array<int, 4>, HElem>> poly;
        for (int k = 0; k < 12; ++k) {
            std::array<int, 4> m{};
            int total = 0;
            for (int u = 0; u < 4; ++u) {
                m[static_cast<std::size_t>(u)] =
                    static_cast<int>(rng.uniform(0.0, 4.0 - total)) % 4;
                total += m[static_cast<std::size_t>(u)];
                if (total > 3) {
                    m[static_cast<std::size_t>(u)] -= total - 3;
                    total = 3;
                }
            }
            poly.emplace_back(m, rng.helem_box(s, 1.0));
        }
        const auto eval_poly = [&](const Point4& x) {
            HElem acc = HElem::zero(s);
            for (const auto& [m, c] : poly) {
                double mono = 1.0;
                const std::array<double, 4> cp{x.x0, x.x1, x.x2, x.x3};
                for (int u = 0; u < 4; ++u)
                    for (int j = 0; j < m[static_cast<std::size_t>(u)]; ++j)
                        mono *= cp[static_cast<std::size_t>(u)];
                acc = acc + mono * c;
            }
            return acc;
        };
        const JetFunction jet_poly = [&](const JetVars& v) {
            Jet2 acc = jet_constant(HElem::zero(v.s));
            for (const auto& [m, c] : poly) {
                Jet2 mono = jet_constant(HElem::one(v.s));
                for (int u = 0; u < 4; ++u)
                    for (int j = 0; j < m[static_cast<std::size_t>(u)]; ++j)
                        mono = mono * v.x[static_cast<std::size_t>(u)];
                acc = acc + mono * jet_constant(c);
            }
            return acc;
        };
        const Point4 x0 = rng.point_box(0.8);
        const JetVars v = jet_vars_at(x0, s);
        const Jet2 jf = jet_poly(v);
        // spec step for first partials; h = 1e-4 for the second-order
        // stencils, whose eps/h^2 roundoff floor at 1e-5 would sit at the
        // tolerance itself
        const double h = 1e-5;
        const double h2 = 1e-4;
        double jet_err = 0.0;
        auto shifted = [&](int u, double d) {
            Point4 y = x0;
            (u == 0 ? y.x0 : u == 1 ? y.x1 : u == 2 ? y.x2 : y.x3) += d;
            return y;
        };
        for (int u = 0; u < 4; ++u) {
            const HElem fd =
                (eval_poly(shifted(u, h)) - eval_poly(shifted(u, -h))) / (2.0 * h);
            jet_err = std::max(jet_err, rel(opn(jf.grad[u] - fd), opn(fd)));
            for (int w = u; w < 4; ++w) {
                HElem fd2 = HElem::zero(s);
                if (u == w) {
                    fd2 = (eval_poly(shifted(u, h2)) - 2.0 * eval_poly(x0) +
                           eval_poly(shifted(u, -h2))) /
                          (h2 * h2);
                } else {
                    Point4 pp = shifted(u, h2), pm = shifted(u, h2), mp = shifted(u, -h2),
                           mm = shifted(u, -h2);
                    (w == 1 ? pp.x1 : w == 2 ? pp.x2 : pp.x3) += h2;
                    (w == 1 ? pm.x1 : w == 2 ? pm.x2 : pm.x3) -= h2;
                    (w == 1 ? mp.x1 : w == 2 ? mp.x2 : mp.x3) += h2;
                    (w == 1 ? mm.x1 : w == 2 ? mm.x2 : mm.x3) -= h2;
                    fd2 = (eval_poly(pp) - eval_poly(pm) - eval_poly(mp) + eval_poly(mm)) /
                          (4.0 * h2 * h2);
                }
                jet_err = std::max(jet_err, rel(opn(jf.d2(u, w) - fd2), opn(fd2)));
            }
        }
        b.upper("jet_vs_finite_differences", 1e-6, jet_err);
    }

    const std::vector<Point4> pts = admissible_points(rng, s, n_points);

    double mu_kernel = 0.0;
    for (int a1 = 0; a1 <= 4; ++a1)
        for (int a2 = 0; a2 + a1 <= 4; ++a2)
            for (int a3 = 0; a3 + a2 + a1 <= 4; ++a3) {
                if (a1 + a2 + a3 == 0) continue;
                mu_kernel = std::max(mu_kernel, kernel_check_mu({a1, a2, a3}, pts, s));
            }
    b.upper("vt_mu_alpha_kernel", 1e-8, mu_kernel);

    double qn_kernel = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (const Point4& x : pts) {
            const JetVars v = jet_vars_at(x, s);
            const Jet2 f = jet_q_pow(n, v);
            const HElem vi = vec_inverse(x, s);
            const HElem vf =
                f.grad[0] - vi * (x.x1 * f.grad[1] + x.x2 * f.grad[2] + x.x3 * f.grad[3]);
            qn_kernel = std::max(qn_kernel, rel(opn(vf), opn(f.value)));
        }
    }
    b.upper("vt_qn_kernel", 1e-8, qn_kernel);

    double qn_exp = 0.0;
    for (int n = 1; n <= 6; ++n) qn_exp = std::max(qn_exp, qn_expand_residual(n, pts, s));
    b.upper("qn_expansion_certificate", 1e-8, qn_exp);

    double zeta_reg = 0.0, zeta_harm = 0.0;
    const std::vector<MIdx3> nn = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {1, 1, 0},
                                   {0, 1, 1}, {2, 1, 0}, {1, 1, 1}, {2, 1, 1}, {0, 2, 2}};
    const std::vector<Point4> zpts = [&] {
        std::vector<Point4> v;
        for (int i = 0; i < std::max(10, n_points / 2); ++i) v.push_back(rng.point_box());
        return v;
    }();
    for (const MIdx3& n : nn) {
        const JetFunction zf = [&n](const JetVars& v) { return jet_zeta_pow(n, v); };
        for (const Point4& x : zpts) {
            zeta_reg = std::max(zeta_reg, opn(apply_operator(zf, FueterOp::Nabla, x, s)));
            zeta_reg = std::max(zeta_reg, opn(apply_operator(zf, FueterOp::RightNabla, x, s)));
            zeta_harm = std::max(zeta_harm, opn(apply_operator(zf, FueterOp::Laplace, x, s)));
        }
    }
    b.upper("zeta_n_regular_two_sided", 1e-8, zeta_reg);
    b.upper("zeta_n_harmonic", 1e-8, zeta_harm);

    double taylor_reg = 0.0, taylor_rec = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        std::map<MIdx3, HElem> coeffs;
        coeffs.emplace(MIdx3{0, 0, 0}, rng.helem_box(s, 1.0));
        for (int k = 0; k < 6; ++k) {
            MIdx3 n{static_cast<int>(rng.uniform(0.0, 2.99)),
                    static_cast<int>(rng.uniform(0.0, 2.99)),
                    static_cast<int>(rng.uniform(0.0, 2.99))};
            if (n[0] + n[1] + n[2] > 3 || n[0] + n[1] + n[2] == 0) continue;
            coeffs.emplace(n, rng.helem_box(s, 1.0));
        }
        const TaylorRoundtrip tr = fueter_taylor_roundtrip(coeffs, s, zpts);
        taylor_reg = std::max(taylor_reg, tr.regularity_residual);
        taylor_rec = std::max(taylor_rec, tr.recovery_residual);
    }
    b.upper("taylor_regularity", 1e-8, taylor_reg);
    b.upper("taylor_coefficient_recovery", 1e-8, taylor_rec);

    double mu_comm = 0.0, mu_restrict = 0.0;
    bool norm_ineq_ok = true;
    const bool unconditional = s.t() <= -1.0;
    for (const Point4& x : pts) {
        for (int u = 1; u <= 3; ++u)
            for (int v = u + 1; v <= 3; ++v)
                mu_comm = std::max(mu_comm, opn(mu(u, x, s) * mu(v, x, s) -
                                                mu(v, x, s) * mu(u, x, s)));
        // the printed inequality is unconditional only for t <= -1; see
        // norm_inequality_sufficient for the general condition
        if ((unconditional || norm_inequality_sufficient(x, s)) &&
            !norm_inequality_check(x, s))
            norm_ineq_ok = false;
        Point4 x0 = x;
        x0.x0 = 0.0;
        const MIdx3 al{2, 1, 0};
        const double expect = x0.x1 * x0.x1 * x0.x2;
        mu_restrict = std::max(mu_restrict,
                               opn(mu_pow(al, x0, s) - expect * HElem::one(s)));
    }
    b.upper("mu_commutativity", 1e-13, mu_comm);
    b.upper("mu_restriction_x0_zero", 1e-13, mu_restrict);
    b.flag(unconditional ? "mu_zeta_norm_inequality" : "mu_zeta_norm_inequality_conditional",
           norm_ineq_ok);
    return b.report;
}

Report mu_blaschke_suite(Scale s, const Params& p) {
    Builder b("mu_blaschke", s, p.tol_scale);
    Rng rng(p.seed ^ 0x100A);
    const int n_pts = std::max(4, p.samples / 50);

    const auto small_admissible = [&](double target) {
        for (;;) {
            const Point4 x = rng.admissible_point(s);
            double total = 0.0;
            for (int l = 1; l <= 3; ++l) total += norm(mu(l, x, s), NormKind::Op);
            if (total < 1e-4) continue;
            const double lam = target / total;
            return Point4{lam * x.x0, lam * x.x1, lam * x.x2, lam * x.x3};
        }
    };

    double ident = 0.0, unitary = 0.0, series_match = 0.0;
    for (int i = 0; i < n_pts; ++i) {
        const Point4 a = small_admissible(rng.uniform(0.2, 0.6));
        for (auto k : {AdjointKind::Circled, AdjointKind::Bracket})
            ident = std::max(ident, mu_blaschke_identity_residual(a, s, k));
        unitary = std::max(unitary, mu_blaschke_unitarity_residual(a, s, AdjointKind::Circled));

        // series vs pointwise transfer-function evaluation at a second point
        const MuBlaschke mb = mu_blaschke(a, s, AdjointKind::Circled, 18);
        const Point4 x = small_admissible(0.35);
        const HMatrix via_real = mu_realization_eval(mb.realization, x, s, 18);
        HMatrix via_series = HMatrix::zero(s, 1, 3);
        for (const auto& [alpha, coeff] : mb.coeffs)
            via_series = via_series + scale_left(mu_pow(alpha, x, s), coeff);
        series_match = std::max(series_match, max_entry_op_norm(via_real - via_series));
    }
    b.upper("intertwining_identity", 1e-10, ident);
    b.upper("realization_unitarity", 1e-10, unitary);
    b.upper("series_vs_realization", 1e-9, series_match);

    // Arveson kernel tail under the Lemma bound
    double tail_bound = 0.0;
    bool monotone = true;
    {
        const Point4 x = small_admissible(0.4);
        const Point4 y = small_admissible(0.4);
        const auto m_of = [&](const Point4& z) {
            const double rz =
                std::abs(z.x1 * z.x1 - s.t() * (z.x2 * z.x2 + z.x3 * z.x3)) * 0.999;
            const double rhoz =
                std::max(std::max(std::abs(z.x0), std::abs(z.x1)),
                         std::max(std::abs(z.x2), std::abs(z.x3))) + 1e-12;
            return arveson_bound(rz, rhoz);
        };
        const double mxy = m_of(x) * m_of(y);
        std::vector<double> deltas;
        HElem prev = arveson_kernel(x, y, s, AdjointKind::Circled, 0, 1e-6, 1.01);
        double fact = 1.0;
        for (int d = 1; d <= 8; ++d) {
            const HElem cur = arveson_kernel(x, y, s, AdjointKind::Circled, d, 1e-6, 1.01);
            deltas.push_back(opn(cur - prev));
            prev = cur;
            fact *= d;
            const double bound = std::pow(3.0 * mxy, d) / fact;
            tail_bound = std::max(tail_bound, deltas.back() - bound);
        }
        for (std::size_t d = 2; d + 1 < deltas.size(); ++d)
            if (deltas[d + 1] > deltas[d] + 1e-15) monotone = false;
    }
    b.upper("arveson_tail_under_bound", 1e-12, tail_bound);
    b.flag("arveson_tail_monotone", monotone);
    return b.report;
}

Report rational_suite(Scale s, const Params& p) {
    Builder b("rational", s, p.tol_scale);
    Rng rng(p.seed ^ 0x100B);
    const int reps = std::max(4, p.samples / 100);

    const auto random_realization = [&](int n, int mdim, int pdim, double anorm) {
        HMatrix a(s, n, n), bm(s, n, mdim), c(s, pdim, n), d(s, pdim, mdim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.set(i, j, rng.helem_box(s, 1.0));
        const double na = mnorm_op(a);
        a = (anorm / std::max(na, 1e-9)) * a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < mdim; ++j) bm.set(i, j, rng.helem_box(s, 0.8));
        for (int i = 0; i < pdim; ++i)
            for (int j = 0; j < n; ++j) c.set(i, j, rng.helem_box(s, 0.8));
        for (int i = 0; i < pdim; ++i)
            for (int j = 0; j < mdim; ++j) d.set(i, j, rng.helem_box(s, 0.8));
        return Realization{a, bm, c, d};
    };

    double real_eval_err = 0.0, conv_cert = 0.0, sum_cert = 0.0, inv_round = 0.0;
    double inv_inv = 0.0, quot_real = 0.0, quot_match = 0.0, quot_comm = 0.0;
    double nilpotent = 0.0;
    for (int r = 0; r < reps; ++r) {
        const Realization r1 = random_realization(3, 1, 1, 0.55);
        const Realization r2 = random_realization(2, 1, 1, 0.55);

        const PowerSeries s1 = to_series(r1, p.trunc);
        for (double x : {-0.12, -0.05, 0.03, 0.08, 0.11}) {
            const HElem via_series = eval(s1, x * HElem::one(s));
            const HElem via_resolvent = eval_real(r1, x).at(0, 0);
            real_eval_err = std::max(real_eval_err, opn(via_series - via_resolvent));
        }

        // product/cascade coefficient certificate up to order 16
        const Realization prod = rmul(r1, r2);
        const std::vector<HMatrix> c1 = to_coeffs(r1, 16), c2 = to_coeffs(r2, 16),
                                   cp = to_coeffs(prod, 16);
        for (int k = 0; k <= 16; ++k) {
            HElem acc = HElem::zero(s);
            for (int i = 0; i <= k; ++i)
                acc = acc + c1[static_cast<std::size_t>(i)].at(0, 0) *
                                c2[static_cast<std::size_t>(k - i)].at(0, 0);
            conv_cert = std::max(conv_cert, opn(cp[static_cast<std::size_t>(k)].at(0, 0) - acc));
        }
        const Realization sum = rsum(r1, r2);
        const std::vector<HMatrix> cs = to_coeffs(sum, 16);
        for (int k = 0; k <= 16; ++k)
            sum_cert = std::max(
                sum_cert, opn(cs[static_cast<std::size_t>(k)].at(0, 0) -
                              (c1[static_cast<std::size_t>(k)].at(0, 0) +
                               c2[static_cast<std::size_t>(k)].at(0, 0))));

        // inverse round trips; D kept comfortably invertible and the
        // inverse state matrix A - B D^{-1} C contractive so the inverse
        // series converges at the test truncation
        Realization rinv_src = r1;
        for (;;) {
            HMatrix d(s, 1, 1);
            d.set(0, 0, 2.0 * HElem::one(s) + rng.helem_box(s, 0.5));
            rinv_src = Realization{r1.A, 0.3 * r1.B, 0.3 * r1.C, d};
            if (std::abs(det(rinv_src.D.at(0, 0))) > 0.5 &&
                mnorm_op(rinv_src.A - rinv_src.B * minvert(rinv_src.D) * rinv_src.C) < 0.8)
                break;
        }
        const Realization rinv = rinverse(rinv_src);
        const PowerSeries one_series = star_mul(to_series(rinv_src, p.trunc),
                                                to_series(rinv, p.trunc));
        inv_round = std::max(inv_round,
                             coeff_distance(one_series,
                                            PowerSeries::constant(HElem::one(s), p.trunc)));
        const Realization rback = rinverse(rinv);
        const std::vector<HMatrix> orig = to_coeffs(rinv_src, 16), back = to_coeffs(rback, 16);
        for (int k = 0; k <= 16; ++k)
            inv_inv = std::max(inv_inv, opn(orig[static_cast<std::size_t>(k)].at(0, 0) -
                                            back[static_cast<std::size_t>(k)].at(0, 0)));

        // circled quotient on a random polynomial with invertible constant
        // term and a convergent star inverse at this truncation
        PowerSeries poly = random_poly(rng, s, 2, p.trunc, 0.8);
        {
            std::vector<HElem> pc = poly.coeffs();
            for (;;) {
                if (std::abs(det(pc[0])) > 0.4) break;
                pc[0] = rng.helem_box(s, 1.0);
            }
            const double contraction =
                opn(inverse(pc[0])) * (opn(pc[1]) + opn(pc[2]));
            if (contraction > 0.7) {
                pc[1] = (0.7 / contraction) * pc[1];
                pc[2] = (0.7 / contraction) * pc[2];
            }
            poly = PowerSeries(s, pc);
        }
        const CircledQuotient q = circled_quotient(poly);
        for (const HElem& c : q.denominator.coeffs())
            quot_real = std::max(quot_real,
                                 std::max(std::abs(c.a().imag()),
                                          std::max(std::abs(c.b().real()),
                                                   std::abs(c.b().imag()))));
        quot_match = std::max(
            quot_match, coeff_distance(star_mul(q.numerator, star_inverse(q.denominator)),
                                       star_inverse(poly)));
        const PowerSeries gr = random_poly(rng, s, 8, p.trunc, 1.0);
        quot_comm = std::max(quot_comm, coeff_distance(star_mul(q.denominator, gr),
                                                       star_mul(gr, q.denominator)));
    }
    {
        // strictly upper-triangular A: coefficients vanish beyond the state dim
        HMatrix a(s, 3, 3), bm(s, 3, 1), c(s, 1, 3), d(s, 1, 1);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) a.set(i, j, rng.helem_box(s, 1.0));
        for (int i = 0; i < 3; ++i) bm.set(i, 0, rng.helem_box(s, 1.0));
        for (int j = 0; j < 3; ++j) c.set(0, j, rng.helem_box(s, 1.0));
        const Realization nil{a, bm, c, d};
        for (int k = 4; k <= 8; ++k)
            nilpotent = std::max(nilpotent, max_entry_op_norm(taylor_coeff(nil, k)));
    }
    b.upper("real_evaluation_cross_check", 1e-10, real_eval_err);
    b.upper("cascade_convolution_certificate", 1e-11, conv_cert);
    b.upper("sum_coefficient_certificate", 1e-12, sum_cert);
    b.upper("inverse_round_trip", 1e-10, inv_round);
    b.upper("double_inverse_coefficients", 1e-9, inv_inv);
    b.upper("quotient_denominator_reality", 1e-12, quot_real);
    b.upper("quotient_matches_star_inverse", 1e-10, quot_match);
    b.upper("quotient_denominator_central", 1e-11, quot_comm);
    b.upper("nilpotent_taylor_cutoff", 1e-13, nilpotent);
    return b.report;
}

const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"ring_axioms", &ring_axioms},
        {"adjoint_laws", &adjoint_laws},
        {"norm_closed_form", &norm_closed_form},
        {"signatures", &signatures},
        {"star_algebra", &star_algebra},
        {"blaschke_circled", &blaschke_suite},
        {"interpolation_theta", &interpolation_suite},
        {"bracket_blaschke", &bracket_suite},
        {"fueter_kernels", &fueter_suite},
        {"mu_blaschke", &mu_blaschke_suite},
        {"rational", &rational_suite},
    };
    return suites;
}

const std::vector<double>& default_sweep() {
    static const std::vector<double> sweep = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    return sweep;
}

std::vector<Report> run_all(const std::vector<double>& scales, const Params& p) {
    const auto& suites = all_suites();
    std::vector<std::future<Report>> jobs;
    jobs.reserve(suites.size() * scales.size());
    for (std::size_t si = 0; si < suites.size(); ++si)
        for (std::size_t ti = 0; ti < scales.size(); ++ti) {
            const SuiteFn fn = suites[si].second;
            const double t = scales[ti];
            Params local = p;
            local.seed = p.seed ^ (0x9E3779B97F4A7C15ull * (si + 1) + ti);
            jobs.push_back(std::async(std::launch::async, [fn, t, local] {
                const auto start = Clock::now();
                Report r = fn(Scale(t), local);
                r.wall_time_sec =
                    std::chrono::duration<double>(Clock::now() - start).count();
                return r;
            }));
        }
    std::vector<Report> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::string report_json(const std::vector<Report>& reports, const Params& p) {
    std::ostringstream os;
    bool all = true;
    for (const Report& r : reports) all = all && r.pass();
    os << "{\"seed\":" << p.seed << ",\"samples\":" << p.samples << ",\"trunc\":" << p.trunc
       << ",\"tol_scale\":" << format_double(p.tol_scale) << ",\"pass\":"
       << (all ? "true" : "false") << ",\"suites\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const Report& r = reports[i];
        if (i) os << ",";
        os << "{\"suite\":\"" << r.suite << "\",\"t\":" << format_double(r.t)
           << ",\"pass\":" << (r.pass() ? "true" : "false")
           << ",\"wall_time_sec\":" << format_double(r.wall_time_sec) << ",\"entries\":[";
        for (std::size_t e = 0; e < r.entries.size(); ++e) {
            const Entry& en = r.entries[e];
            if (e) os << ",";
            os << "{\"test\":\"" << en.test << "\",\"tolerance\":" << format_double(en.tolerance)
               << ",\"observed\":" << format_double(en.observed)
               << ",\"pass\":" << (en.pass ? "true" : "false") << "}";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

} // namespace ht::verify
