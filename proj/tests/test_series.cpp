#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ht/json_io.hpp"
#include "ht/sampling.hpp"
#include "ht/series.hpp"

using namespace ht;

namespace {

double opn(const HElem& q) { return norm(q, NormKind::Op); }

double coeff_dist(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.trunc(), g.trunc());
    double d = 0.0;
    for (int k = 0; k <= n; ++k) d = std::max(d, opn(f.coeff(k) - g.coeff(k)));
    return d;
}

PowerSeries one_minus_q_times(const HElem& c, int trunc) {
    return PowerSeries::constant(HElem::one(c.scale()), trunc) -
           PowerSeries::monomial(c.scale(), 1, trunc) * c;
}

PowerSeries random_poly(Rng& rng, Scale s, int deg, int trunc, double box) {
    std::vector<HElem> c(static_cast<std::size_t>(trunc) + 1, HElem::zero(s));
    for (int n = 0; n <= deg; ++n) c[static_cast<std::size_t>(n)] = rng.helem_box(s, box);
    return {s, std::move(c)};
}

} // namespace

TEST_CASE("star product worked identity") {
    // both orders of (1 - q a) and (q - a) equal -q^2 a + q (a^2 + 1) - a
    Rng rng(3);
    for (double t : {-1.0, 0.5, 2.0}) {
        const Scale s(t);
        const HElem a = rng.helem_box(s, 1.5);
        const int trunc = 8;
        const PowerSeries lin = PowerSeries::monomial(s, 1, trunc) -
                                PowerSeries::constant(a, trunc);
        const PowerSeries lhs1 = star_mul(one_minus_q_times(a, trunc), lin);
        const PowerSeries lhs2 = star_mul(lin, one_minus_q_times(a, trunc));
        PowerSeries expect = PowerSeries::zero(s, trunc);
        expect = expect - PowerSeries::monomial(s, 2, trunc) * a +
                 PowerSeries::monomial(s, 1, trunc) * (a * a + HElem::one(s)) -
                 PowerSeries::constant(a, trunc);
        CHECK(coeff_dist(lhs1, expect) < 1e-13);
        CHECK(coeff_dist(lhs2, expect) < 1e-13);
    }
}

TEST_CASE("star product unit and telescoping") {
    const Scale s(1.0);
    Rng rng(5);
    const PowerSeries f = random_poly(rng, s, 10, 32, 1.0);
    const PowerSeries one = PowerSeries::constant(HElem::one(s), 32);
    CHECK(coeff_dist(star_mul(f, one), f) == 0.0);
    CHECK(coeff_dist(star_mul(one, f), f) == 0.0);

    // (sum q^n) star (1 - q) = 1 up to the truncation tail
    std::vector<HElem> ones(33, HElem::one(s));
    const PowerSeries geo(s, ones);
    const PowerSeries tele = star_mul(geo, one_minus_q_times(HElem::one(s), 32));
    CHECK(opn(tele.coeff(0) - HElem::one(s)) == 0.0);
    for (int n = 1; n <= 32; ++n) CHECK(opn(tele.coeff(n)) == 0.0);
}

TEST_CASE("star inverse") {
    const Scale s(2.0);
    const PowerSeries one = PowerSeries::constant(HElem::one(s), 16);
    CHECK(coeff_dist(star_inverse(one), one) == 0.0);

    Rng rng(7);
    const HElem a = rng.helem_box(s, 0.8);
    const PowerSeries inv = star_inverse(one_minus_q_times(a, 24));
    HElem pw = HElem::one(s);
    for (int n = 0; n <= 24; ++n) {
        CHECK(opn(inv.coeff(n) - pw) < 1e-12 * std::max(1.0, opn(pw)));
        pw = pw * a;
    }

    const Scale s1(1.0);
    PowerSeries bad = PowerSeries::constant(HElem::one(s1) + HElem::unit_j(s1), 8);
    CHECK_THROWS_AS(star_inverse(bad), NonInvertibleConstantTerm);

    // general constant term: triangular recursion vs Neumann form
    for (double t : {-1.0, 0.5, 2.0}) {
        const Scale st(t);
        std::vector<HElem> c(33, HElem::zero(st));
        for (;;) {
            c[0] = rng.helem_box(st, 1.5);
            if (std::abs(det(c[0])) > 0.4) break;
        }
        for (int n = 1; n <= 6; ++n) c[static_cast<std::size_t>(n)] = rng.helem_box(st, 0.5);
        const PowerSeries f(st, c);
        const PowerSeries fi = star_inverse(f);
        const PowerSeries id = PowerSeries::constant(HElem::one(st), 32);
        CHECK(coeff_dist(star_mul(f, fi), id) < 1e-11);
        CHECK(coeff_dist(star_mul(fi, f), id) < 1e-11);
        CHECK(coeff_dist(fi, star_inverse_neumann(f)) < 1e-11);
    }
}

TEST_CASE("evaluation") {
    const Scale s(-1.0);
    Rng rng(9);
    const PowerSeries f = random_poly(rng, s, 8, 16, 1.0);
    CHECK(opn(eval(f, HElem::zero(s)) - f.coeff(0)) == 0.0);

    // the product (1-qa) star (q-a) vanishes at a even though the
    // vanishing factor sits on the right
    const HElem a = rng.helem_box(s, 0.9);
    const PowerSeries prod =
        star_mul(one_minus_q_times(a, 8),
                 PowerSeries::monomial(s, 1, 8) - PowerSeries::constant(a, 8));
    CHECK(opn(eval(prod, a)) < 1e-13);

    // real restriction is multiplicative
    const PowerSeries g = random_poly(rng, s, 8, 16, 1.0);
    for (double x : {-0.4, 0.1, 0.35}) {
        const HElem xe = x * HElem::one(s);
        CHECK(opn(eval(star_mul(f, g), xe) - eval(f, xe) * eval(g, xe)) < 1e-12);
    }
}

TEST_CASE("point evaluation formula with conjugated argument") {
    Rng rng(11);
    for (double t : {-1.0, 1.0, 0.5}) {
        const Scale s(t);
        for (int rep = 0; rep < 50; ++rep) {
            const PowerSeries f = random_poly(rng, s, 10, 24, 1.0);
            const PowerSeries g = random_poly(rng, s, 10, 24, 1.0);
            const HElem q = rng.helem_with_norm(s, 0.05, 0.3);
            const HElem fq = eval(f, q);
            if (std::abs(det(fq)) < 0.05) continue;
            const HElem conj_pt = inverse(fq) * q * fq;
            CHECK(opn(eval(star_mul(f, g), q) - fq * eval(g, conj_pt)) <
                  1e-10 * std::max(1.0, opn(fq)));
        }
    }
}

TEST_CASE("coefficientwise conjugate and self-convolution reality") {
    const Scale s(0.5);
    Rng rng(13);
    const PowerSeries one = PowerSeries::constant(HElem::one(s), 8);
    CHECK(coeff_dist(conj_series(one, AdjointKind::Circled), one) == 0.0);

    const HElem a = rng.helem_box(s);
    PowerSeries qa = PowerSeries::monomial(s, 1, 8) * a;
    CHECK(opn(conj_series(qa, AdjointKind::Circled).coeff(1) -
              adjoint(a, AdjointKind::Circled)) == 0.0);

    for (int rep = 0; rep < 20; ++rep) {
        const PowerSeries f = random_poly(rng, s, 8, 20, 1.0);
        const PowerSeries ffc = star_mul(f, conj_series(f, AdjointKind::Circled));
        for (const HElem& c : ffc.coeffs()) {
            CHECK(std::abs(c.a().imag()) < 1e-12);
            CHECK(std::abs(c.b().real()) < 1e-12);
            CHECK(std::abs(c.b().imag()) < 1e-12);
        }
        // real series are central for the star product
        const PowerSeries g = random_poly(rng, s, 8, 20, 1.0);
        CHECK(coeff_dist(star_mul(ffc, g), star_mul(g, ffc)) < 1e-11);
    }
}

TEST_CASE("star associativity") {
    Rng rng(17);
    for (double t : {-2.0, 1.0}) {
        const Scale s(t);
        for (int rep = 0; rep < 20; ++rep) {
            const PowerSeries f = random_poly(rng, s, 10, 24, 1.0);
            const PowerSeries g = random_poly(rng, s, 10, 24, 1.0);
            const PowerSeries h = random_poly(rng, s, 10, 24, 1.0);
            CHECK(coeff_dist(star_mul(star_mul(f, g), h), star_mul(f, star_mul(g, h))) <
                  1e-12 * 50.0);
        }
    }
}

TEST_CASE("backward shift") {
    const Scale s(1.0);
    Rng rng(19);
    CHECK(coeff_dist(backward_shift(PowerSeries::constant(HElem::one(s), 8)),
                     PowerSeries::zero(s, 7)) == 0.0);
    const HElem c = rng.helem_box(s);
    CHECK(opn(backward_shift(PowerSeries::monomial(s, 1, 8) * c).coeff(0) - c) == 0.0);

    // R0 of the resolvent (1 - q a^cir)^{-star} right-multiplies by a^cir
    const HElem a = rng.helem_box(s, 0.7);
    const HElem ac = adjoint(a, AdjointKind::Circled);
    const PowerSeries res = star_inverse(one_minus_q_times(ac, 24));
    CHECK(coeff_dist(backward_shift(res), res * ac) < 1e-12);

    // R0 (q star f) = f
    const PowerSeries f = random_poly(rng, s, 8, 16, 1.0);
    CHECK(coeff_dist(backward_shift(star_mul(PowerSeries::monomial(s, 1, 16), f)), f) == 0.0);
}

TEST_CASE("geometric closed form") {
    const Scale s(0.5);
    Rng rng(23);
    const HElem q = rng.helem_with_norm(s, 0.2, 0.8);
    CHECK(opn(geo_closed_form(q, HElem::zero(s)) - HElem::one(s)) < 1e-14);

    CHECK(opn(geo_closed_form(0.5 * HElem::one(s), 0.5 * HElem::one(s)) -
              (1.0 / 0.75) * HElem::one(s)) < 1e-13);

    for (double t : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
        const Scale st(t);
        for (int rep = 0; rep < 30; ++rep) {
            const HElem a = rng.helem_with_norm(st, 0.1, 0.85);
            const HElem b = rng.helem_with_norm(st, 0.1, 0.85 / std::max(opn(a), 0.2));
            HElem sum = HElem::zero(st), an = HElem::one(st), bn = HElem::one(st);
            for (int n = 0; n <= 200; ++n) {
                sum = sum + an * bn;
                an = an * a;
                bn = bn * b;
            }
            CHECK(opn(sum - geo_closed_form(a, b)) < 1e-10);
        }
    }

    // a non-invertible quadratic factor is reported
    const Scale s1(1.0);
    // q = 1 (norm 1) fails the contraction guard first; use the guard check
    CHECK_THROWS_AS(geo_closed_form(HElem::one(s1), HElem::one(s1)), NotContractive);
}

TEST_CASE("hardy kernel") {
    const Scale s(-1.0);
    Rng rng(29);
    const HElem q = rng.helem_with_norm(s, 0.1, 0.8);
    const HElem p = rng.helem_with_norm(s, 0.1, 0.8);
    CHECK(opn(hardy_kernel(q, HElem::zero(s), 50) - HElem::one(s)) == 0.0);
    CHECK(opn(hardy_kernel(HElem::zero(s), p, 50) - HElem::one(s)) == 0.0);
    CHECK(opn(hardy_kernel(0.3 * HElem::one(s), 0.5 * HElem::one(s), 300) -
              (1.0 / 0.85) * HElem::one(s)) < 1e-12);
    CHECK(opn(hardy_kernel(q, p, 300) -
              geo_closed_form(q, adjoint(p, AdjointKind::Circled))) < 1e-10);
}

TEST_CASE("series json round trip") {
    Rng rng(31);
    const Scale s(2.0);
    const PowerSeries f = random_poly(rng, s, 6, 10, 2.0);
    const PowerSeries back = series_from_json(to_json(f));
    CHECK(back.trunc() == f.trunc());
    CHECK(coeff_dist(back, f) == 0.0);
}

TEST_CASE("truncation policy takes the minimum order") {
    const Scale s(1.0);
    const PowerSeries a = PowerSeries::zero(s, 10);
    const PowerSeries b = PowerSeries::zero(s, 6);
    CHECK((a + b).trunc() == 6);
    CHECK(star_mul(a, b).trunc() == 6);
}
